#ifndef DIGHOM_SIMPLICIAL_HPP
#define DIGHOM_SIMPLICIAL_HPP

#include <vector>

#include "dighom/core.hpp"

namespace dighom {

// The standard n-simplex lives in Z^{n+1}: its vertices e_0..e_n are the
// unit coordinate points, any two of which differ in exactly two
// coordinates, so under k(2,n+1) the simplex is a complete graph with the
// fixed vertex order e_0 < e_1 < ... < e_n.
LatticePoint standard_vertex(int n, int i);
DigitalImage standard_simplex_image(int n);

// The i-th face map from the (n-1)-simplex into the n-simplex: the
// order-preserving injection on vertex indices that misses i. Returned as
// the image of each vertex 0..n-1.
std::vector<int> face_vertex_map(int i, int n);

// A singular n-simplex of an image is a continuous map from the standard
// n-simplex, i.e. an ordered (n+1)-tuple of points that are pairwise equal
// or adjacent (the domain being a complete graph). Degenerate tuples with
// repeated values are genuine simplexes here; the constant simplex drives
// the homology of a one-point image.
//
// Values are stored as indices into the canonical point order of the
// image, which is carried alongside rather than inside each tuple.
struct SingularSimplex {
    std::vector<int> values;

    int n() const { return static_cast<int>(values.size()) - 1; }
    friend bool operator==(const SingularSimplex&, const SingularSimplex&) = default;
    friend auto operator<=>(const SingularSimplex&, const SingularSimplex&) = default;
};

bool is_singular(const DigitalImage& image, const SingularSimplex& sigma);

// The tuple with position i removed; faces of singular simplexes are again
// singular.
SingularSimplex apply_face(const SingularSimplex& sigma, int i);

// Every singular n-simplex of the image in lexicographic order by point
// indices; this list is the canonical basis of the n-th chain group.
std::vector<SingularSimplex> enumerate_singular(const DigitalImage& image, int n);

std::string format_simplex(const DigitalImage& image, const SingularSimplex& sigma);

// Exhaustively checks the composition law of face maps for 1 <= n <= max_n:
// inserting the gaps j then k (k < j) equals inserting k then j-1.
bool verify_face_identity(int max_n);

}  // namespace dighom

#endif
