#include "dighom/corpus.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <stdexcept>

namespace dighom {

namespace {

std::vector<LatticePoint> box_points(int n, Coord side) {
    std::vector<LatticePoint> out;
    LatticePoint p(static_cast<std::size_t>(n), 0);
    while (true) {
        out.push_back(p);
        int i = 0;
        while (i < n && p[static_cast<std::size_t>(i)] == side - 1) {
            p[static_cast<std::size_t>(i)] = 0;
            ++i;
        }
        if (i == n) break;
        ++p[static_cast<std::size_t>(i)];
    }
    return out;
}

// Distance from the root within one component, by levels.
std::vector<int> bfs_levels(const DigitalImage& image, int root) {
    std::vector<int> level(static_cast<std::size_t>(image.size()), -1);
    std::queue<int> queue;
    level[static_cast<std::size_t>(root)] = 0;
    queue.push(root);
    while (!queue.empty()) {
        int i = queue.front();
        queue.pop();
        for (int j : image.neighbors_of(i)) {
            if (level[static_cast<std::size_t>(j)] >= 0) continue;
            level[static_cast<std::size_t>(j)] = level[static_cast<std::size_t>(i)] + 1;
            queue.push(j);
        }
    }
    return level;
}

}  // namespace

DigitalImage square4() {
    return DigitalImage(AdjacencySpec{2, 1}, {{0, 0}, {1, 0}, {1, 1}, {0, 1}});
}

DigitalImage square4_u2() {
    return DigitalImage(AdjacencySpec{2, 2}, {{0, 0}, {1, 0}, {1, 1}, {0, 1}});
}

DigitalImage ring8() {
    return DigitalImage(AdjacencySpec{2, 1},
                        {{0, 0}, {1, 0}, {2, 0}, {2, 1}, {2, 2}, {1, 2}, {0, 2}, {0, 1}});
}

DigitalImage hexagon6() {
    return DigitalImage(AdjacencySpec{3, 1},
                        {{0, 0, 0}, {1, 0, 0}, {1, 1, 0}, {1, 1, 1}, {0, 1, 1}, {0, 0, 1}});
}

DigitalImage one_point(int ambient) {
    return DigitalImage(AdjacencySpec{ambient, 1},
                        {LatticePoint(static_cast<std::size_t>(ambient), 0)});
}

DigitalImage random_image(std::mt19937_64& rng, int max_points, int max_ambient) {
    if (max_points < 1 || max_ambient < 1) throw std::invalid_argument("empty sampling range");
    int n = std::uniform_int_distribution<int>(1, max_ambient)(rng);
    int u = std::uniform_int_distribution<int>(1, n)(rng);
    Coord side = std::uniform_int_distribution<Coord>(2, n >= 3 ? 3 : 4)(rng);
    std::vector<LatticePoint> box = box_points(n, side);
    std::shuffle(box.begin(), box.end(), rng);
    int take = std::uniform_int_distribution<int>(
        1, std::min<int>(max_points, static_cast<int>(box.size())))(rng);
    box.resize(static_cast<std::size_t>(take));
    return DigitalImage(AdjacencySpec{n, u}, std::move(box));
}

std::vector<DigitalImage> image_corpus(std::uint64_t seed, int count, int max_points,
                                       int max_ambient) {
    std::mt19937_64 rng(seed);
    std::vector<DigitalImage> out;
    for (int n = 1; n <= std::min(3, max_ambient); ++n) {
        for (int u = 1; u <= n; ++u) {
            std::vector<LatticePoint> box = box_points(n, 2);
            out.emplace_back(AdjacencySpec{n, u}, std::move(box));
            if (static_cast<int>(out.size()) == count) return out;
        }
    }
    while (static_cast<int>(out.size()) < count)
        out.push_back(random_image(rng, max_points, max_ambient));
    return out;
}

DigitalMap random_continuous_map(std::mt19937_64& rng, const DigitalImage& domain,
                                 const DigitalImage& codomain) {
    if (codomain.empty()) throw std::invalid_argument("codomain must be nonempty");
    std::vector<int> table(static_cast<std::size_t>(domain.size()), -1);
    for (const auto& component : connected_components(domain)) {
        int root = component[std::uniform_int_distribution<std::size_t>(
            0, component.size() - 1)(rng)];
        std::vector<int> level = bfs_levels(domain, root);
        int depth = 0;
        for (int i : component) depth = std::max(depth, level[static_cast<std::size_t>(i)]);
        std::vector<int> walk;
        walk.push_back(std::uniform_int_distribution<int>(0, codomain.size() - 1)(rng));
        for (int t = 0; t < depth; ++t) {
            std::vector<int> options = codomain.closed_neighborhood(walk.back());
            walk.push_back(
                options[std::uniform_int_distribution<std::size_t>(0, options.size() - 1)(rng)]);
        }
        for (int i : component) table[static_cast<std::size_t>(i)] =
            walk[static_cast<std::size_t>(level[static_cast<std::size_t>(i)])];
    }
    return DigitalMap(domain, codomain, std::move(table));
}

DigitalMap translation_map(const DigitalImage& image, const LatticePoint& offset) {
    if (static_cast<int>(offset.size()) != image.spec().n)
        throw std::invalid_argument("offset dimension does not match");
    if (image.explicit_adjacency())
        throw std::invalid_argument("translation expects rule-derived adjacency");
    std::vector<LatticePoint> moved;
    moved.reserve(image.points().size());
    for (LatticePoint p : image.points()) {
        for (std::size_t c = 0; c < p.size(); ++c) p[c] += offset[c];
        moved.push_back(std::move(p));
    }
    DigitalImage target(image.spec(), std::move(moved));
    std::vector<int> table(static_cast<std::size_t>(image.size()));
    for (int i = 0; i < image.size(); ++i) {
        LatticePoint p = image.point(i);
        for (std::size_t c = 0; c < p.size(); ++c) p[c] += offset[c];
        table[static_cast<std::size_t>(i)] = *target.index_of(p);
    }
    return DigitalMap(image, std::move(target), std::move(table));
}

}  // namespace dighom
