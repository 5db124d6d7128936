#include "dighom/core.hpp"

#include <algorithm>
#include <cstdlib>
#include <queue>
#include <set>
#include <sstream>
#include <stdexcept>

namespace dighom {

namespace {

void check_spec(const AdjacencySpec& spec) {
    if (!spec.valid())
        throw std::invalid_argument("adjacency spec requires 1 <= u <= n, got n=" +
                                    std::to_string(spec.n) + ", u=" + std::to_string(spec.u));
}

void check_point(const LatticePoint& p, int n) {
    if (static_cast<int>(p.size()) != n)
        throw std::invalid_argument("point has dimension " + std::to_string(p.size()) +
                                    ", expected " + std::to_string(n));
    for (Coord c : p)
        if (c > kCoordLimit || c < -kCoordLimit)
            throw std::invalid_argument("coordinate magnitude exceeds supported range");
}

}  // namespace

bool adjacent(const LatticePoint& p, const LatticePoint& q, const AdjacencySpec& spec) {
    check_spec(spec);
    check_point(p, spec.n);
    check_point(q, spec.n);
    int changed = 0;
    for (int i = 0; i < spec.n; ++i) {
        Coord d = p[static_cast<std::size_t>(i)] - q[static_cast<std::size_t>(i)];
        if (d == 0) continue;
        if (d != 1 && d != -1) return false;
        ++changed;
    }
    return changed >= 1 && changed <= spec.u;
}

std::uint64_t neighbor_count(const AdjacencySpec& spec) {
    check_spec(spec);
    // The total over all orders is 3^n - 1, which clears 64 bits only for
    // n <= 40; larger ambient dimensions are rejected.
    if (spec.n > 40) throw std::invalid_argument("neighbor_count supports n <= 40");
    std::uint64_t total = 0;
    std::uint64_t binom = 1;  // C(n, i), updated incrementally
    std::uint64_t pow2 = 1;
    for (int i = 1; i <= spec.u; ++i) {
        binom = binom * static_cast<std::uint64_t>(spec.n - i + 1) / static_cast<std::uint64_t>(i);
        pow2 *= 2;
        total += pow2 * binom;
    }
    return total;
}

DigitalImage::DigitalImage(AdjacencySpec spec, std::vector<LatticePoint> points)
    : spec_(spec), points_(std::move(points)) {
    check_spec(spec_);
    for (const auto& p : points_) check_point(p, spec_.n);
    std::sort(points_.begin(), points_.end());
    if (std::adjacent_find(points_.begin(), points_.end()) != points_.end())
        throw std::invalid_argument("digital image points must be pairwise distinct");
    build_neighbors();
}

DigitalImage::DigitalImage(AdjacencySpec spec, std::vector<LatticePoint> points,
                           std::vector<std::pair<LatticePoint, LatticePoint>> edges)
    : spec_(spec), points_(std::move(points)), explicit_adjacency_(true) {
    check_spec(spec_);
    for (const auto& p : points_) check_point(p, spec_.n);
    std::sort(points_.begin(), points_.end());
    if (std::adjacent_find(points_.begin(), points_.end()) != points_.end())
        throw std::invalid_argument("digital image points must be pairwise distinct");
    std::set<std::pair<int, int>> seen;
    for (const auto& [a, b] : edges) {
        auto ia = index_of(a);
        auto ib = index_of(b);
        if (!ia || !ib) throw std::invalid_argument("edge endpoint is not a point of the image");
        if (*ia == *ib) throw std::invalid_argument("adjacency is irreflexive; self-edge rejected");
        seen.emplace(std::min(*ia, *ib), std::max(*ia, *ib));
    }
    edges_.assign(seen.begin(), seen.end());
    build_neighbors();
}

void DigitalImage::build_neighbors() {
    neighbors_.assign(points_.size(), {});
    if (explicit_adjacency_) {
        for (const auto& [i, j] : edges_) {
            neighbors_[static_cast<std::size_t>(i)].push_back(j);
            neighbors_[static_cast<std::size_t>(j)].push_back(i);
        }
        for (auto& nb : neighbors_) std::sort(nb.begin(), nb.end());
        return;
    }
    const int m = size();
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            if (adjacent(points_[static_cast<std::size_t>(i)], points_[static_cast<std::size_t>(j)],
                         spec_)) {
                neighbors_[static_cast<std::size_t>(i)].push_back(j);
                neighbors_[static_cast<std::size_t>(j)].push_back(i);
            }
    // Pairs come out ordered already, but keep the invariant explicit.
    for (auto& nb : neighbors_) std::sort(nb.begin(), nb.end());
}

std::optional<int> DigitalImage::index_of(const LatticePoint& p) const {
    auto it = std::lower_bound(points_.begin(), points_.end(), p);
    if (it == points_.end() || *it != p) return std::nullopt;
    return static_cast<int>(it - points_.begin());
}

bool DigitalImage::adjacent_in(int i, int j) const {
    if (i == j) return false;
    const auto& nb = neighbors_[static_cast<std::size_t>(i)];
    return std::binary_search(nb.begin(), nb.end(), j);
}

std::vector<int> DigitalImage::closed_neighborhood(int i) const {
    const auto& nb = neighbors_[static_cast<std::size_t>(i)];
    std::vector<int> out;
    out.reserve(nb.size() + 1);
    auto it = nb.begin();
    while (it != nb.end() && *it < i) out.push_back(*it++);
    out.push_back(i);
    while (it != nb.end()) out.push_back(*it++);
    return out;
}

long long DigitalImage::edge_count() const {
    long long twice = 0;
    for (const auto& nb : neighbors_) twice += static_cast<long long>(nb.size());
    return twice / 2;
}

std::string DigitalImage::structural_key() const {
    std::ostringstream os;
    os << spec_.n << '/' << spec_.u << (explicit_adjacency_ ? "/x" : "/k");
    for (const auto& p : points_) {
        os << '|';
        for (Coord c : p) os << c << ',';
    }
    if (explicit_adjacency_) {
        os << '#';
        for (const auto& [i, j] : edges_) os << i << '-' << j << ';';
    }
    return os.str();
}

std::vector<LatticePoint> neighbors(const LatticePoint& p, const DigitalImage& image) {
    auto idx = image.index_of(p);
    if (!idx) throw std::invalid_argument("neighbors: point does not belong to the image");
    std::vector<LatticePoint> out;
    for (int j : image.neighbors_of(*idx)) out.push_back(image.point(j));
    return out;
}

std::vector<std::vector<int>> connected_components(const DigitalImage& image) {
    const int m = image.size();
    std::vector<int> label(static_cast<std::size_t>(m), -1);
    std::vector<std::vector<int>> blocks;
    for (int start = 0; start < m; ++start) {
        if (label[static_cast<std::size_t>(start)] != -1) continue;
        const int id = static_cast<int>(blocks.size());
        blocks.emplace_back();
        std::queue<int> frontier;
        frontier.push(start);
        label[static_cast<std::size_t>(start)] = id;
        while (!frontier.empty()) {
            int v = frontier.front();
            frontier.pop();
            blocks[static_cast<std::size_t>(id)].push_back(v);
            for (int w : image.neighbors_of(v))
                if (label[static_cast<std::size_t>(w)] == -1) {
                    label[static_cast<std::size_t>(w)] = id;
                    frontier.push(w);
                }
        }
    }
    for (auto& b : blocks) std::sort(b.begin(), b.end());
    std::sort(blocks.begin(), blocks.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return blocks;
}

DigitalImage digital_interval(Coord a, Coord b) {
    if (a >= b) throw std::invalid_argument("digital interval requires a < b");
    if (a < -kCoordLimit || b > kCoordLimit)
        throw std::invalid_argument("interval endpoint exceeds supported range");
    if (b - a > 10'000'000) throw std::invalid_argument("digital interval too large to materialize");
    std::vector<LatticePoint> pts;
    pts.reserve(static_cast<std::size_t>(b - a + 1));
    for (Coord t = a; t <= b; ++t) pts.push_back({t});
    return DigitalImage{AdjacencySpec{1, 1}, std::move(pts)};
}

std::string format_point(const LatticePoint& p) {
    std::string s = "(";
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(p[i]);
    }
    s += ')';
    return s;
}

}  // namespace dighom
