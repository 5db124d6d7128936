#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <stdexcept>
#include <vector>

#include "dighom/corpus.hpp"
#include "dighom/maps.hpp"
#include "dighom/simplicial.hpp"
#include "doctest.h"
#include "support/oracles.hpp"

using namespace dighom;

TEST_CASE("standard simplex vertices and adjacency") {
    CHECK(standard_vertex(2, 0) == LatticePoint{1, 0, 0});
    CHECK(standard_vertex(2, 2) == LatticePoint{0, 0, 1});
    CHECK_THROWS_AS(standard_vertex(2, 3), std::invalid_argument);

    for (int n = 0; n <= 4; ++n) {
        DigitalImage delta = standard_simplex_image(n);
        CHECK(delta.size() == n + 1);
        // Unit points: exactly one coordinate set.
        for (const auto& p : delta.points())
            CHECK(std::count(p.begin(), p.end(), 1) + std::count(p.begin(), p.end(), 0) ==
                  static_cast<long>(p.size()));
        // A complete graph: any two vertices differ in exactly two
        // coordinates, which k(2, n+1) allows.
        for (int i = 0; i < delta.size(); ++i)
            for (int j = i + 1; j < delta.size(); ++j) CHECK(delta.adjacent_in(i, j));
        CHECK(connected_components(delta).size() == 1);
    }
}

TEST_CASE("face vertex maps on the triangle") {
    CHECK(face_vertex_map(0, 2) == std::vector<int>{1, 2});
    CHECK(face_vertex_map(1, 2) == std::vector<int>{0, 2});
    CHECK(face_vertex_map(2, 2) == std::vector<int>{0, 1});
    CHECK(face_vertex_map(0, 1) == std::vector<int>{1});
    CHECK(face_vertex_map(1, 1) == std::vector<int>{0});
    CHECK_THROWS_AS(face_vertex_map(3, 2), std::invalid_argument);
    CHECK_THROWS_AS(face_vertex_map(-1, 2), std::invalid_argument);
}

TEST_CASE("face maps are order-preserving injections missing one index") {
    for (int n = 1; n <= 5; ++n)
        for (int i = 0; i <= n; ++i) {
            auto f = face_vertex_map(i, n);
            REQUIRE(static_cast<int>(f.size()) == n);
            CHECK(std::is_sorted(f.begin(), f.end()));
            CHECK(std::find(f.begin(), f.end(), i) == f.end());
            for (int v : f) {
                CHECK(v >= 0);
                CHECK(v <= n);
            }
        }
}

TEST_CASE("face composition identity") {
    CHECK(verify_face_identity(5));
    // Spelled out for one instance: inserting gap j then gap k (k < j)
    // equals inserting gap k then gap j-1.
    for (int n = 1; n <= 4; ++n)
        for (int j = 1; j <= n + 1; ++j)
            for (int k = 0; k < j; ++k) {
                auto upper_j = face_vertex_map(j, n + 1);
                auto lower_k = face_vertex_map(k, n);
                auto upper_k = face_vertex_map(k, n + 1);
                auto lower_j1 = face_vertex_map(j - 1, n);
                for (int v = 0; v < n; ++v)
                    CHECK(upper_j[static_cast<std::size_t>(lower_k[static_cast<std::size_t>(v)])] ==
                          upper_k[static_cast<std::size_t>(lower_j1[static_cast<std::size_t>(v)])]);
            }
}

TEST_CASE("singular test accepts exactly the pairwise-compatible tuples") {
    DigitalImage square = square4();
    CHECK(is_singular(square, {{0, 0, 0}}));
    CHECK(is_singular(square, {{0, 1}}));
    CHECK_FALSE(is_singular(square, {{0, 3}}));  // opposite corners, u = 1
    CHECK_FALSE(is_singular(square, {{0, 4}}));  // out of range
    CHECK_FALSE(is_singular(square, {{}}));
    CHECK(is_singular(square4_u2(), {{0, 3}}));
}

TEST_CASE("apply_face deletes one position") {
    SingularSimplex sigma{{0, 1}};
    CHECK(apply_face(sigma, 0) == SingularSimplex{{1}});
    CHECK(apply_face(sigma, 1) == SingularSimplex{{0}});

    SingularSimplex aba{{0, 1, 0}};
    CHECK(apply_face(aba, 0) == SingularSimplex{{1, 0}});
    CHECK(apply_face(aba, 1) == SingularSimplex{{0, 0}});
    CHECK(apply_face(aba, 2) == SingularSimplex{{0, 1}});

    SingularSimplex constant{{2, 2, 2, 2}};
    for (int i = 0; i <= 3; ++i) CHECK(apply_face(constant, i) == SingularSimplex{{2, 2, 2}});

    CHECK_THROWS_AS(apply_face(SingularSimplex{{0}}, 0), std::invalid_argument);
    CHECK_THROWS_AS(apply_face(sigma, 2), std::invalid_argument);
}

TEST_CASE("apply_face satisfies the composition identity on simplexes") {
    DigitalImage ring = ring8();
    for (int n = 2; n <= 4; ++n) {
        auto all = enumerate_singular(ring, n);
        // A sample is plenty; the vertex-level identity is exhaustive above.
        for (std::size_t s = 0; s < all.size(); s += 7)
            for (int j = 1; j <= n; ++j)
                for (int k = 0; k < j; ++k)
                    CHECK(apply_face(apply_face(all[s], j), k) ==
                          apply_face(apply_face(all[s], k), j - 1));
    }
}

TEST_CASE("enumeration counts on fixed images") {
    CHECK(enumerate_singular(one_point(2), 0).size() == 1);
    CHECK(enumerate_singular(one_point(2), 3).size() == 1);

    DigitalImage pair = digital_interval(0, 1);
    CHECK(enumerate_singular(pair, 1).size() == 4);

    DigitalImage square = square4();
    CHECK(enumerate_singular(square, 0).size() == 4);
    CHECK(enumerate_singular(square, 1).size() == 12);
    CHECK(enumerate_singular(square, 2).size() == 28);

    CHECK(enumerate_singular(DigitalImage{}, 1).empty());
}

TEST_CASE("enumeration is lexicographic and matches the brute-force filter") {
    for (const auto& image : image_corpus(601, 12, 6, 3)) {
        for (int n = 0; n <= 3; ++n) {
            auto fast = enumerate_singular(image, n);
            auto slow = oracle::singular_tuples_by_filter(image, n);
            REQUIRE(fast.size() == slow.size());
            for (std::size_t i = 0; i < fast.size(); ++i) CHECK(fast[i].values == slow[i]);
            CHECK(std::is_sorted(fast.begin(), fast.end()));
        }
    }
}

TEST_CASE("complete-graph images have the full tuple count") {
    DigitalImage diag = square4_u2();
    for (int n = 0; n <= 3; ++n) {
        std::size_t expect = 1;
        for (int i = 0; i <= n; ++i) expect *= 4;
        CHECK(enumerate_singular(diag, n).size() == expect);
    }
}

TEST_CASE("enumerated tuples are continuous maps off the standard simplex") {
    DigitalImage hex = hexagon6();
    for (int n = 1; n <= 2; ++n) {
        DigitalImage delta = standard_simplex_image(n);
        for (const auto& sigma : enumerate_singular(hex, n)) {
            // Vertex e_i of the simplex sits at delta index n - i (unit
            // points sort in reverse), so build the table accordingly.
            std::vector<int> table(static_cast<std::size_t>(n + 1));
            for (int i = 0; i <= n; ++i) {
                auto at = delta.index_of(standard_vertex(n, i));
                REQUIRE(at.has_value());
                table[static_cast<std::size_t>(*at)] = sigma.values[static_cast<std::size_t>(i)];
            }
            CHECK(is_continuous(DigitalMap(delta, hex, table)));
        }
    }
}

TEST_CASE("faces of enumerated simplexes are enumerated simplexes") {
    DigitalImage square = square4();
    for (int n = 1; n <= 3; ++n) {
        auto lower = enumerate_singular(square, n - 1);
        for (const auto& sigma : enumerate_singular(square, n))
            for (int i = 0; i <= n; ++i)
                CHECK(std::binary_search(lower.begin(), lower.end(), apply_face(sigma, i)));
    }
}

TEST_CASE("simplex formatting names the points") {
    DigitalImage square = square4();
    CHECK(format_simplex(square, {{0, 1}}) == "[(0,0) (0,1)]");
    CHECK(format_point(LatticePoint{-1, 2}) == "(-1,2)");
}
