#ifndef DIGHOM_CORPUS_HPP
#define DIGHOM_CORPUS_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "dighom/core.hpp"
#include "dighom/maps.hpp"

namespace dighom {

// Named fixtures used across tests and demos.

// The four corners of the unit square with direct adjacency: the smallest
// image with a nontrivial loop.
DigitalImage square4();
// The same corners with diagonal adjacency, which fills the square in.
DigitalImage square4_u2();
// The eight boundary points of [0,2]^2 with direct adjacency: a loop too
// long to slide across its own diagonal moves.
DigitalImage ring8();
// A six-point chord-free cycle embedded in the unit cube.
DigitalImage hexagon6();
DigitalImage one_point(int ambient);

// A random image with at most max_points points drawn from a small box in
// ambient dimension 1..max_ambient, with a uniformly chosen valid u.
DigitalImage random_image(std::mt19937_64& rng, int max_points, int max_ambient);

// Deterministic list: one image per (n, u) pair with n <= min(3, max_ambient)
// first, then random images until count is reached.
std::vector<DigitalImage> image_corpus(std::uint64_t seed, int count, int max_points = 12,
                                       int max_ambient = 3);

// A random continuous map, built by folding each component of the domain
// along its distance levels from a random root onto a random walk in the
// codomain. Adjacent points land at most one walk step apart, so the
// result is continuous by construction. Codomain must be nonempty.
DigitalMap random_continuous_map(std::mt19937_64& rng, const DigitalImage& domain,
                                 const DigitalImage& codomain);

// A lattice translation of every point of the image; the translated copy
// is an isomorphic image and the map is a homeomorphism onto it.
DigitalMap translation_map(const DigitalImage& image, const LatticePoint& offset);

}  // namespace dighom

#endif
