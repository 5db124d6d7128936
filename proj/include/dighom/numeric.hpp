#ifndef DIGHOM_NUMERIC_HPP
#define DIGHOM_NUMERIC_HPP

#include <gmpxx.h>

#include <Eigen/Dense>
#include <Eigen/SparseCore>

// Exact arithmetic everywhere: torsion computations are meaningless under
// rounding, so every matrix in this library carries arbitrary-precision
// integer (or rational) scalars. GMP supplies the scalars, Eigen the
// matrix algebra; the NumTraits specializations below are all the glue
// Eigen needs for a custom scalar type.

namespace Eigen {

template <>
struct NumTraits<mpz_class> : GenericNumTraits<mpz_class> {
    using Real = mpz_class;
    using NonInteger = mpq_class;
    using Nested = mpz_class;
    using Literal = long;
    enum {
        IsComplex = 0,
        IsInteger = 1,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 4,
        AddCost = 8,
        MulCost = 16,
    };
    static inline int digits10() { return 0; }
};

template <>
struct NumTraits<mpq_class> : GenericNumTraits<mpq_class> {
    using Real = mpq_class;
    using NonInteger = mpq_class;
    using Nested = mpq_class;
    using Literal = long;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 4,
        AddCost = 16,
        MulCost = 32,
    };
    static inline int digits10() { return 0; }
};

}  // namespace Eigen

namespace dighom {

using Int = mpz_class;
using Rat = mpq_class;

using IntMatrix = Eigen::Matrix<Int, Eigen::Dynamic, Eigen::Dynamic>;
using IntVector = Eigen::Matrix<Int, Eigen::Dynamic, 1>;
using RatMatrix = Eigen::Matrix<Rat, Eigen::Dynamic, Eigen::Dynamic>;

// Boundary operators and induced chain maps have at most n+2 entries per
// column, so they are kept in compressed column form.
using SparseIntMatrix = Eigen::SparseMatrix<Int>;

inline bool is_zero_matrix(const SparseIntMatrix& m) {
    for (int outer = 0; outer < m.outerSize(); ++outer)
        for (SparseIntMatrix::InnerIterator it(m, outer); it; ++it)
            if (it.value() != 0) return false;
    return true;
}

template <typename A, typename B>
bool matrices_equal(const Eigen::MatrixBase<A>& a, const Eigen::MatrixBase<B>& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
    for (Eigen::Index j = 0; j < a.cols(); ++j)
        for (Eigen::Index i = 0; i < a.rows(); ++i)
            if (!(a.derived()(i, j) == b.derived()(i, j))) return false;
    return true;
}

inline IntMatrix to_dense(const SparseIntMatrix& m) {
    IntMatrix d = IntMatrix::Zero(m.rows(), m.cols());
    for (int outer = 0; outer < m.outerSize(); ++outer)
        for (SparseIntMatrix::InnerIterator it(m, outer); it; ++it)
            d(it.row(), it.col()) = it.value();
    return d;
}

}  // namespace dighom

#endif
