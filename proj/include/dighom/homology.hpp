#ifndef DIGHOM_HOMOLOGY_HPP
#define DIGHOM_HOMOLOGY_HPP

#include <string>
#include <vector>

#include "dighom/chains.hpp"
#include "dighom/maps.hpp"
#include "dighom/numeric.hpp"
#include "dighom/smith.hpp"

namespace dighom {

// Isomorphism type of one homology group: a free part of the given rank
// plus cyclic factors in ascending divisibility order, each at least 2.
struct HomologyGroup {
    Eigen::Index betti = 0;
    std::vector<Int> torsion;

    friend bool operator==(const HomologyGroup&, const HomologyGroup&) = default;
};

// A cycle representing one generator of the group; order 0 means the
// class generates a free summand, otherwise the class has that finite order.
struct HomologyClassRep {
    Chain cycle;
    Int order = 0;
};

// Free generators first, then torsion generators in factor order. The same
// ordering fixes the coordinate layout used by induced matrices.
struct HomologyGenerators {
    HomologyGroup group;
    std::vector<HomologyClassRep> classes;
};

// Groups are computed for 0 <= n <= kMaxChainDimension - 1; the boundary
// one dimension above the cap is still available to close the quotient.
HomologyGroup homology(const DigitalImage& image, int n);

HomologyGenerators homology_generators(const DigitalImage& image, int n);

// Coordinates of a cycle's class in the generator basis: betti free
// coordinates followed by one coordinate per torsion factor, reduced into
// [0, d). Rejects chains that are not cycles.
IntVector homology_class_coordinates(const DigitalImage& image, int n, const Chain& cycle);

// Matrix of the induced map on homology in the generator bases of both
// sides. Torsion rows are reduced into [0, d).
IntMatrix induced_homology_map(const DigitalMap& f, int n);

// Reduces torsion rows of a matrix expressed in the generator basis of the
// given group, making composite matrices comparable entrywise.
IntMatrix reduce_induced_matrix(IntMatrix m, const HomologyGroup& codomain_group);

bool groups_isomorphic(const HomologyGroup& a, const HomologyGroup& b);

std::string format_homology_group(const HomologyGroup& g);
std::string format_homology_line(int n, const HomologyGroup& g);

// Checks that composing maps composes the induced matrices and that the
// identity map induces the identity matrix, at dimension n. g runs after f.
bool verify_functoriality(const DigitalMap& f, const DigitalMap& g, int n);

// Given a valid homotopy from f to g, compares the maps induced by the two
// end slices x -> (x, 0) and x -> (x, m) of the product parameterization,
// and then compares the maps induced by f and g themselves.
struct PsiHomotopyReport {
    bool slices_agree = false;
    bool maps_agree = false;
};
PsiHomotopyReport verify_psi_homotopy(const DigitalMap& f, const DigitalMap& g, const Homotopy& F,
                                      int n);

// True when the chain map induced by inclusion sends distinct basis
// simplexes to distinct basis simplexes, i.e. is injective on chains.
bool verify_inclusion_injective(const DigitalImage& part, const DigitalImage& whole, int n);

// The 1-chain spanned by the first step of a loop. Needs m >= 2 so that
// positions 0 and 1 exist independently.
Chain hurewicz_chain(const DigitalPath& loop);

// The four-point unit square with two loops around it that land in the
// same based class while their first-step chains differ, showing that the
// first-step chain is not a function of the class.
struct HurewiczReport {
    DigitalImage square;
    DigitalPath f;
    DigitalPath g;
    DigitalPath unit;
    HomologyGroup square_h1;
    bool product_matches = false;
    bool loops_same_class = false;
    bool chains_differ = false;
};
HurewiczReport hurewicz_counterexample();

}  // namespace dighom

#endif
