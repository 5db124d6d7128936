#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>

#include "dighom/core.hpp"
#include "dighom/corpus.hpp"
#include "doctest.h"
#include "support/oracles.hpp"

using namespace dighom;

namespace {

LatticePoint random_point(std::mt19937_64& rng, int n, Coord lo, Coord hi) {
    std::uniform_int_distribution<Coord> coord(lo, hi);
    LatticePoint p(static_cast<std::size_t>(n));
    for (auto& c : p) c = coord(rng);
    return p;
}

}  // namespace

TEST_CASE("adjacency on hand-picked pairs") {
    AdjacencySpec u1n2{2, 1}, u2n2{2, 2};
    CHECK_FALSE(adjacent({0, 0}, {0, 0}, u1n2));
    CHECK_FALSE(adjacent({0, 0}, {1, 1}, u1n2));
    CHECK(adjacent({0, 0}, {1, 1}, u2n2));
    CHECK(adjacent({0, 0, 0}, {1, 1, 0}, AdjacencySpec{3, 2}));
    CHECK(adjacent({0}, {1}, AdjacencySpec{1, 1}));
    CHECK(adjacent({0, 0}, {0, 1}, u1n2));
    CHECK_FALSE(adjacent({0, 0}, {2, 0}, u2n2));
    CHECK_FALSE(adjacent({3, -1}, {3, 1}, u2n2));
}

TEST_CASE("adjacency input validation") {
    CHECK_THROWS_AS(adjacent({0, 0}, {0}, AdjacencySpec{2, 1}), std::invalid_argument);
    CHECK_THROWS_AS(adjacent({0}, {1}, AdjacencySpec{1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(adjacent({0}, {1}, AdjacencySpec{1, 0}), std::invalid_argument);
    CHECK_THROWS_AS(adjacent({kCoordLimit + 1}, {0}, AdjacencySpec{1, 1}), std::invalid_argument);
}

TEST_CASE("adjacency is symmetric, irreflexive, and monotone in u") {
    std::mt19937_64 rng(11);
    for (int n = 1; n <= 4; ++n) {
        for (int trial = 0; trial < 200; ++trial) {
            LatticePoint p = random_point(rng, n, -2, 2);
            LatticePoint q = random_point(rng, n, -2, 2);
            bool prev = false;
            for (int u = 1; u <= n; ++u) {
                AdjacencySpec spec{n, u};
                bool pq = adjacent(p, q, spec);
                CHECK(pq == adjacent(q, p, spec));
                CHECK_FALSE(adjacent(p, p, spec));
                // Once adjacent, adjacent for every larger u.
                if (prev) CHECK(pq);
                prev = pq;
            }
        }
    }
}

TEST_CASE("neighbor counts match the closed form and the full scan") {
    CHECK(neighbor_count({2, 1}) == 4);
    CHECK(neighbor_count({2, 2}) == 8);
    CHECK(neighbor_count({3, 1}) == 6);
    CHECK(neighbor_count({3, 2}) == 18);
    CHECK(neighbor_count({3, 3}) == 26);
    CHECK(neighbor_count({4, 2}) == 32);
    CHECK(neighbor_count({4, 3}) == 64);
    CHECK(neighbor_count({4, 4}) == 80);
    for (int n = 1; n <= 5; ++n)
        for (int u = 1; u <= n; ++u)
            CHECK(neighbor_count({n, u}) == oracle::neighbor_count_by_scan(n, u));
}

TEST_CASE("neighbors within an image") {
    CHECK(neighbors({0}, one_point(1)).empty());

    DigitalImage three(AdjacencySpec{2, 1}, {{0, 0}, {1, 0}, {5, 5}});
    CHECK(neighbors({0, 0}, three) == std::vector<LatticePoint>{{1, 0}});
    CHECK(neighbors({5, 5}, three).empty());

    DigitalImage diag = square4_u2();
    auto around_origin = neighbors({0, 0}, diag);
    CHECK(around_origin.size() == 3);
    CHECK(std::find(around_origin.begin(), around_origin.end(), LatticePoint{1, 1}) !=
          around_origin.end());

    CHECK_THROWS_AS(neighbors({9, 9}, three), std::invalid_argument);
}

TEST_CASE("connected components on fixed images") {
    CHECK(connected_components(one_point(2)).size() == 1);

    DigitalImage three(AdjacencySpec{2, 1}, {{0, 0}, {1, 0}, {5, 5}});
    auto blocks = connected_components(three);
    REQUIRE(blocks.size() == 2);
    CHECK(blocks[0] == std::vector<int>{0, 1});  // (0,0) and (1,0)
    CHECK(blocks[1] == std::vector<int>{2});

    CHECK(connected_components(square4()).size() == 1);
    CHECK(connected_components(DigitalImage{}).empty());
}

TEST_CASE("components partition the image and match union-find") {
    for (const auto& image : image_corpus(501, 25, 10, 3)) {
        auto blocks = connected_components(image);
        CHECK(static_cast<int>(blocks.size()) == oracle::component_count(image));
        std::set<int> seen;
        for (const auto& block : blocks) {
            CHECK_FALSE(block.empty());
            CHECK(std::is_sorted(block.begin(), block.end()));
            for (int i : block) CHECK(seen.insert(i).second);
        }
        CHECK(static_cast<int>(seen.size()) == image.size());
        // Blocks ordered by smallest member.
        for (std::size_t b = 1; b < blocks.size(); ++b)
            CHECK(blocks[b - 1].front() < blocks[b].front());
    }
}

TEST_CASE("raising u never splits a component") {
    std::mt19937_64 rng(502);
    for (int trial = 0; trial < 25; ++trial) {
        DigitalImage image = random_image(rng, 10, 3);
        const int n = image.spec().n;
        for (int u = image.spec().u; u <= n; ++u) {
            DigitalImage coarse(AdjacencySpec{n, u}, image.points());
            auto fine_blocks = connected_components(
                DigitalImage(AdjacencySpec{n, image.spec().u}, image.points()));
            auto coarse_blocks = connected_components(coarse);
            std::vector<int> label(static_cast<std::size_t>(coarse.size()), -1);
            for (std::size_t b = 0; b < coarse_blocks.size(); ++b)
                for (int i : coarse_blocks[b]) label[static_cast<std::size_t>(i)] = static_cast<int>(b);
            for (const auto& block : fine_blocks)
                for (int i : block) CHECK(label[static_cast<std::size_t>(i)] == label[static_cast<std::size_t>(block.front())]);
        }
    }
}

TEST_CASE("digital intervals") {
    DigitalImage pair = digital_interval(0, 1);
    CHECK(pair.size() == 2);
    CHECK(pair.adjacent_in(0, 1));

    DigitalImage five = digital_interval(0, 4);
    CHECK(five.size() == 5);
    CHECK(connected_components(five).size() == 1);
    CHECK(five.adjacent_in(1, 2));
    CHECK_FALSE(five.adjacent_in(1, 3));

    DigitalImage shifted = digital_interval(-3, 2);
    CHECK(shifted.point(0) == LatticePoint{-3});

    CHECK_THROWS_AS(digital_interval(2, 2), std::invalid_argument);
    CHECK_THROWS_AS(digital_interval(5, 1), std::invalid_argument);
}

TEST_CASE("image construction canonicalizes and validates") {
    DigitalImage square(AdjacencySpec{2, 1}, {{1, 1}, {0, 0}, {0, 1}, {1, 0}});
    CHECK(square.points() == std::vector<LatticePoint>{{0, 0}, {0, 1}, {1, 0}, {1, 1}});
    CHECK(square == square4());
    CHECK(square.index_of({1, 0}) == 2);
    CHECK_FALSE(square.index_of({2, 2}).has_value());
    CHECK(square.contains({0, 1}));
    CHECK(square.edge_count() == 4);
    CHECK(square4_u2().edge_count() == 6);

    CHECK_THROWS_AS(DigitalImage(AdjacencySpec{2, 1}, {{0, 0}, {0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(DigitalImage(AdjacencySpec{2, 1}, {{0, 0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(DigitalImage(AdjacencySpec{2, 3}, {{0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(DigitalImage(AdjacencySpec{1, 1}, {{kCoordLimit + 1}}), std::invalid_argument);
}

TEST_CASE("closed neighborhoods are sorted and include the point") {
    DigitalImage ring = ring8();
    for (int i = 0; i < ring.size(); ++i) {
        auto closed = ring.closed_neighborhood(i);
        CHECK(std::is_sorted(closed.begin(), closed.end()));
        CHECK(std::binary_search(closed.begin(), closed.end(), i));
        CHECK(closed.size() == ring.neighbors_of(i).size() + 1);
    }
}

TEST_CASE("explicit edge mode overrides the lattice rule") {
    // Two lattice-adjacent points, connected only through a third by edges.
    DigitalImage chain(AdjacencySpec{2, 1}, {{0, 0}, {1, 0}, {2, 0}},
                       {{{0, 0}, {2, 0}}, {{1, 0}, {2, 0}}});
    CHECK(chain.explicit_adjacency());
    CHECK(chain.adjacent_in(0, 2));
    CHECK(chain.adjacent_in(1, 2));
    CHECK_FALSE(chain.adjacent_in(0, 1));
    CHECK(chain.edge_count() == 2);
    CHECK(connected_components(chain).size() == 1);

    CHECK_THROWS_AS(DigitalImage(AdjacencySpec{2, 1}, {{0, 0}}, {{{0, 0}, {0, 0}}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(DigitalImage(AdjacencySpec{2, 1}, {{0, 0}}, {{{0, 0}, {3, 3}}}),
                    std::invalid_argument);
}

TEST_CASE("structural keys separate differently shaped images") {
    std::set<std::string> keys;
    keys.insert(square4().structural_key());
    keys.insert(square4_u2().structural_key());
    keys.insert(ring8().structural_key());
    keys.insert(hexagon6().structural_key());
    keys.insert(one_point(2).structural_key());
    CHECK(keys.size() == 5);
    CHECK(square4().structural_key() == DigitalImage(AdjacencySpec{2, 1}, {{1, 1}, {0, 0}, {0, 1}, {1, 0}}).structural_key());
}
