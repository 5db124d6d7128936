#ifndef DIGHOM_CHAINS_HPP
#define DIGHOM_CHAINS_HPP

#include <map>
#include <string>
#include <vector>

#include "dighom/maps.hpp"
#include "dighom/numeric.hpp"
#include "dighom/simplicial.hpp"

namespace dighom {

// Chain groups are supported up to this dimension; homology in dimension n
// touches simplexes one dimension higher, so groups are available for
// n <= kMaxChainDimension - 1.
inline constexpr int kMaxChainDimension = 4;

// An integer combination of singular simplexes of one image and one
// dimension. Zero coefficients are never stored; the zero chain has an
// empty term map. Dimension -1 is the trivial group below degree zero,
// where only the zero chain exists.
struct Chain {
    int n = 0;
    std::map<SingularSimplex, Int> terms;

    bool is_zero() const { return terms.empty(); }
    friend bool operator==(const Chain&, const Chain&) = default;
};

Chain operator+(const Chain& a, const Chain& b);
Chain operator-(const Chain& a, const Chain& b);
Chain operator*(const Int& c, const Chain& a);

// Alternating sum of the faces for n >= 1; the zero chain one dimension
// down for n = 0.
Chain boundary_of_simplex(const SingularSimplex& sigma);
Chain boundary_of_chain(const Chain& c);

// Matrix of the boundary operator from the upper basis to the lower one;
// every face of an upper simplex must appear in the lower list.
SparseIntMatrix boundary_matrix_between(const std::vector<SingularSimplex>& lower,
                                        const std::vector<SingularSimplex>& upper);

// Boundary matrix on the canonical bases of the image. For n = 0 this is
// the zero map into the empty basis below degree zero.
SparseIntMatrix boundary_matrix(const DigitalImage& image, int n);

// Matrix of the chain map sending each basis simplex of the domain to its
// pointwise image, which continuity keeps singular. Columns are unit
// columns by construction.
SparseIntMatrix induced_chain_map_between(const DigitalMap& f,
                                          const std::vector<SingularSimplex>& domain_basis,
                                          const std::vector<SingularSimplex>& codomain_basis);
SparseIntMatrix induced_chain_map(const DigitalMap& f, int n);

Chain map_chain(const DigitalMap& f, const Chain& c);

// Composing two consecutive boundary operators annihilates every chain.
bool verify_dd_zero(const DigitalImage& image, int n);

// Chain maps commute with the boundary: f (dim n-1) after the boundary
// equals the boundary after f (dim n).
bool verify_chain_commutes(const DigitalMap& f, int n);

// Checks the chain-homotopy identity at dimension n: the difference of the
// two induced chain maps equals boundary after phi_n plus phi_{n-1} after
// the boundary. phi[k] supplies the map from dimension k of the domain
// into dimension k+1 of the codomain; entries below index n-1 are unused.
bool verify_chain_homotopy(const std::vector<SparseIntMatrix>& phi, const DigitalMap& f,
                           const DigitalMap& g, int n);

// Plain text form used by the command line: a header line with the
// dimensions followed by one "row col value" line per nonzero entry in
// column-major order.
std::string matrix_triplet_text(const std::string& name, const SparseIntMatrix& m);

std::string format_chain(const DigitalImage& image, const Chain& c);

}  // namespace dighom

#endif
