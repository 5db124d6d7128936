#ifndef DIGHOM_CORE_HPP
#define DIGHOM_CORE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace dighom {

using Coord = long long;
using LatticePoint = std::vector<Coord>;

// Coordinates are capped so that any difference of two admissible values
// still fits in a signed 64-bit integer. Inputs beyond the cap are rejected
// rather than wrapped.
inline constexpr Coord kCoordLimit = (1LL << 62) - 1;

// The k(u,n) adjacency family on Z^n: points are adjacent when they differ
// by at most 1 in every coordinate, differ somewhere, and differ in at most
// u coordinates.
struct AdjacencySpec {
    int n = 1;  // ambient dimension
    int u = 1;  // adjacency order, 1 <= u <= n

    bool valid() const { return n >= 1 && u >= 1 && u <= n; }
    friend bool operator==(const AdjacencySpec&, const AdjacencySpec&) = default;
};

bool adjacent(const LatticePoint& p, const LatticePoint& q, const AdjacencySpec& spec);

// Number of lattice points adjacent to any fixed point, i.e. the k in the
// usual k(u,n) notation: sum over i = 1..u of 2^i * C(n,i).
std::uint64_t neighbor_count(const AdjacencySpec& spec);

// A finite set of lattice points together with its adjacency relation.
// Points are stored in lexicographic order, which fixes every basis
// ordering downstream and makes matrix output reproducible.
//
// Two modes: the default derives adjacency from the k(u,n) rule; an image
// built with an explicit edge list (as cartesian products are) uses exactly
// those edges instead.
class DigitalImage {
  public:
    DigitalImage() = default;
    DigitalImage(AdjacencySpec spec, std::vector<LatticePoint> points);
    DigitalImage(AdjacencySpec spec, std::vector<LatticePoint> points,
                 std::vector<std::pair<LatticePoint, LatticePoint>> edges);

    const AdjacencySpec& spec() const { return spec_; }
    int size() const { return static_cast<int>(points_.size()); }
    bool empty() const { return points_.empty(); }
    const std::vector<LatticePoint>& points() const { return points_; }
    const LatticePoint& point(int i) const { return points_[static_cast<std::size_t>(i)]; }
    std::optional<int> index_of(const LatticePoint& p) const;
    bool contains(const LatticePoint& p) const { return index_of(p).has_value(); }

    bool explicit_adjacency() const { return explicit_adjacency_; }
    bool adjacent_in(int i, int j) const;
    const std::vector<int>& neighbors_of(int i) const {
        return neighbors_[static_cast<std::size_t>(i)];
    }
    // Indices equal-or-adjacent to i, sorted: the candidate values a
    // continuous map may take next to a point currently mapped to i.
    std::vector<int> closed_neighborhood(int i) const;

    long long edge_count() const;

    // Stable textual identity, used as a cache key by the homology engine.
    std::string structural_key() const;

    friend bool operator==(const DigitalImage& a, const DigitalImage& b) {
        return a.spec_ == b.spec_ && a.explicit_adjacency_ == b.explicit_adjacency_ &&
               a.points_ == b.points_ && a.edges_ == b.edges_;
    }

  private:
    void build_neighbors();

    AdjacencySpec spec_;
    std::vector<LatticePoint> points_;
    bool explicit_adjacency_ = false;
    std::vector<std::pair<int, int>> edges_;  // i < j, sorted; explicit mode only
    std::vector<std::vector<int>> neighbors_;
};

std::vector<LatticePoint> neighbors(const LatticePoint& p, const DigitalImage& image);

// Maximal connected blocks, as sorted index lists ordered by smallest
// member. An image with at most one point is connected by convention
// ("every pair of points" is vacuous there).
std::vector<std::vector<int>> connected_components(const DigitalImage& image);

// The digital interval [a,b] in Z with 2-adjacency; requires a < b.
DigitalImage digital_interval(Coord a, Coord b);

std::string format_point(const LatticePoint& p);

}  // namespace dighom

#endif
