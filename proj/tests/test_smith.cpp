#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>
#include <vector>

#include "dighom/chains.hpp"
#include "dighom/corpus.hpp"
#include "dighom/smith.hpp"
#include "doctest.h"
#include "support/oracles.hpp"

using namespace dighom;

namespace {

IntMatrix random_matrix(std::mt19937_64& rng, Eigen::Index rows, Eigen::Index cols) {
    std::uniform_int_distribution<int> entry(-5, 5);
    std::bernoulli_distribution keep(0.6);
    IntMatrix m = IntMatrix::Zero(rows, cols);
    for (Eigen::Index i = 0; i < rows; ++i)
        for (Eigen::Index j = 0; j < cols; ++j)
            if (keep(rng)) m(i, j) = entry(rng);
    return m;
}

oracle::ZMat to_rows(const IntMatrix& m) {
    oracle::ZMat out(static_cast<std::size_t>(m.rows()),
                     std::vector<mpz_class>(static_cast<std::size_t>(m.cols()), 0));
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            out[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = m(i, j);
    return out;
}

IntMatrix factor_diagonal(const SmithDecomposition& d, Eigen::Index rows, Eigen::Index cols) {
    IntMatrix out = IntMatrix::Zero(rows, cols);
    for (std::size_t i = 0; i < d.invariant_factors.size(); ++i)
        out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)) = d.invariant_factors[i];
    return out;
}

}  // namespace

TEST_CASE("normal form of degenerate and tiny matrices") {
    CHECK(smith_normal_form(IntMatrix::Zero(3, 4)).invariant_factors.empty());
    CHECK(smith_normal_form(IntMatrix(0, 0)).invariant_factors.empty());
    CHECK(smith_normal_form(IntMatrix(0, 5)).invariant_factors.empty());
    CHECK(smith_normal_form(IntMatrix(5, 0)).invariant_factors.empty());

    IntMatrix d23 = IntMatrix::Zero(2, 2);
    d23(0, 0) = 2;
    d23(1, 1) = 3;
    CHECK(smith_normal_form(d23).invariant_factors == std::vector<Int>{1, 6});

    IntMatrix twos = IntMatrix::Zero(2, 2);
    twos(0, 0) = 2;
    twos(1, 1) = 2;
    CHECK(smith_normal_form(twos).invariant_factors == std::vector<Int>{2, 2});

    IntMatrix upper(2, 2);
    upper << Int(2), Int(1), Int(0), Int(2);
    CHECK(smith_normal_form(upper).invariant_factors == std::vector<Int>{1, 4});

    IntMatrix negative(1, 1);
    negative << Int(-7);
    CHECK(smith_normal_form(negative).invariant_factors == std::vector<Int>{7});

    CHECK(smith_normal_form(IntMatrix::Identity(4, 4)).invariant_factors ==
          std::vector<Int>(4, Int(1)));
}

TEST_CASE("factors divide in order and match the textbook elimination") {
    std::mt19937_64 rng(41);
    std::uniform_int_distribution<Eigen::Index> dim(0, 7);
    for (int trial = 0; trial < 80; ++trial) {
        IntMatrix m = random_matrix(rng, dim(rng), dim(rng));
        SmithDecomposition d = smith_normal_form(m);
        for (std::size_t i = 0; i + 1 < d.invariant_factors.size(); ++i) {
            CHECK(d.invariant_factors[i] > 0);
            CHECK(d.invariant_factors[i + 1] % d.invariant_factors[i] == 0);
        }
        CHECK(d.invariant_factors == oracle::naive_invariant_factors(to_rows(m)));
    }
}

TEST_CASE("rank agrees with rational and fraction-free elimination") {
    std::mt19937_64 rng(42);
    std::uniform_int_distribution<Eigen::Index> dim(1, 8);
    for (int trial = 0; trial < 60; ++trial) {
        IntMatrix m = random_matrix(rng, dim(rng), dim(rng));
        auto rows = to_rows(m);
        int rank = static_cast<int>(integer_rank(m));
        CHECK(rank == oracle::rational_rank(rows));
        CHECK(rank == oracle::bareiss_rank(rows));
    }
}

TEST_CASE("transforms reconstruct the diagonal and are unimodular") {
    std::mt19937_64 rng(43);
    std::uniform_int_distribution<Eigen::Index> dim(1, 6);
    for (int trial = 0; trial < 40; ++trial) {
        IntMatrix m = random_matrix(rng, dim(rng), dim(rng));
        SmithDecomposition d = smith_normal_form(m, true);
        REQUIRE(d.with_transforms);
        CHECK(matrices_equal(IntMatrix(d.U * m * d.V), factor_diagonal(d, m.rows(), m.cols())));
        // Two-sided integer inverses certify unimodularity.
        CHECK(matrices_equal(IntMatrix(d.U * d.Uinv), IntMatrix(IntMatrix::Identity(m.rows(), m.rows()))));
        CHECK(matrices_equal(IntMatrix(d.Uinv * d.U), IntMatrix(IntMatrix::Identity(m.rows(), m.rows()))));
        CHECK(matrices_equal(IntMatrix(d.V * d.Vinv), IntMatrix(IntMatrix::Identity(m.cols(), m.cols()))));
        CHECK(matrices_equal(IntMatrix(d.Vinv * d.V), IntMatrix(IntMatrix::Identity(m.cols(), m.cols()))));
    }
}

TEST_CASE("sparse and dense inputs produce identical decompositions") {
    std::mt19937_64 rng(44);
    for (int trial = 0; trial < 20; ++trial) {
        IntMatrix m = random_matrix(rng, 5, 6);
        std::vector<Eigen::Triplet<Int>> entries;
        for (Eigen::Index i = 0; i < m.rows(); ++i)
            for (Eigen::Index j = 0; j < m.cols(); ++j)
                if (m(i, j) != 0) entries.emplace_back(i, j, m(i, j));
        SparseIntMatrix s(m.rows(), m.cols());
        s.setFromTriplets(entries.begin(), entries.end());
        CHECK(smith_normal_form(m).invariant_factors ==
              smith_normal_form(s).invariant_factors);
    }
}

TEST_CASE("boundary operators decompose without torsion surprises") {
    SparseIntMatrix d1 = boundary_matrix(square4(), 1);
    SmithDecomposition d = smith_normal_form(d1);
    CHECK(d.rank() == 3);
    CHECK(d.invariant_factors == std::vector<Int>(3, Int(1)));

    SparseIntMatrix hex1 = boundary_matrix(hexagon6(), 1);
    CHECK(integer_rank(hex1) == 5);
    CHECK(oracle::rational_rank(to_rows(to_dense(hex1))) == 5);
}
