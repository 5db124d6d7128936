#ifndef DIGHOM_SMITH_HPP
#define DIGHOM_SMITH_HPP

#include <vector>

#include "dighom/numeric.hpp"

namespace dighom {

// Invariant factors d1 | d2 | ... of an integer matrix, all positive and
// listed with multiplicity including any factors equal to one. When
// transforms are requested, U * M * V is the diagonal matrix of the
// factors with U and V unimodular, and Uinv, Vinv are their inverses.
struct SmithDecomposition {
    std::vector<Int> invariant_factors;
    bool with_transforms = false;
    IntMatrix U, Uinv, V, Vinv;

    Eigen::Index rank() const { return static_cast<Eigen::Index>(invariant_factors.size()); }
};

SmithDecomposition smith_normal_form(const IntMatrix& m, bool with_transforms = false);
SmithDecomposition smith_normal_form(const SparseIntMatrix& m, bool with_transforms = false);

inline Eigen::Index integer_rank(const IntMatrix& m) { return smith_normal_form(m).rank(); }
inline Eigen::Index integer_rank(const SparseIntMatrix& m) { return smith_normal_form(m).rank(); }

}  // namespace dighom

#endif
