#include <doctest.h>

#include <random>

#include "wittrep/gmodule.hpp"
#include "wittrep/subspace.hpp"

using namespace wittrep;

TEST_CASE("rref of the identity is the identity") {
    FpMatrix id = FpMatrix::identity(3, 5);
    RrefResult r = rref(id);
    CHECK(r.reduced == id);
    CHECK(r.rank == 3);
    CHECK(r.pivots == std::vector<std::size_t>{0, 1, 2});
}

TEST_CASE("rref of a zero matrix") {
    FpMatrix z(2, 4, 5);
    RrefResult r = rref(z);
    CHECK(r.reduced == z);
    CHECK(r.rank == 0);
    CHECK(r.pivots.empty());
}

TEST_CASE("rref of a rank-1 matrix over F_5") {
    FpMatrix m = FpMatrix::from_rows({{2, 4}, {1, 2}}, 2, 5);
    RrefResult r = rref(m);
    CHECK(r.rank == 1);
    CHECK(r.reduced == FpMatrix::from_rows({{1, 2}, {0, 0}}, 2, 5));
}

TEST_CASE("kernel basics") {
    CHECK(kernel(FpMatrix::identity(4, 5)).dim() == 0);
    CHECK(kernel(FpMatrix(3, 3, 5)).dim() == 3);
}

TEST_CASE("kernel of rho(e_-1) on A(1) is the constants") {
    GradedGModule a1 = natural_module(5);
    Subspace k = kernel(a1.act(-1));
    REQUIRE(k.dim() == 1);
    CHECK(k.basis().row(0) == std::vector<FpScalar>{1, 0, 0, 0, 0});
}

TEST_CASE("subspace sum and intersection basics") {
    Subspace a = Subspace::from_vectors({{1, 0}}, 2, 5);
    Subspace b = Subspace::from_vectors({{0, 1}}, 2, 5);
    CHECK(subspace_sum(a, a) == a);
    CHECK(subspace_intersect(a, b).dim() == 0);
    CHECK(subspace_sum(a, b) == Subspace::full(2, 5));
}

TEST_CASE("quotient map contract") {
    Subspace s = Subspace::from_vectors({{1, 0}}, 2, 5);
    auto [q, section] = quotient_map(2, s);
    CHECK(q.rows() == 1);
    CHECK(q.cols() == 2);
    CHECK(q * section == FpMatrix::identity(1, 5));
    // kernel of q is exactly s
    CHECK(kernel(q) == s);
}

TEST_CASE("quotient map kernel for a non-coordinate subspace") {
    Subspace s = Subspace::from_vectors({{1, 2, 3}, {0, 1, 4}}, 3, 7);
    auto [q, section] = quotient_map(3, s);
    CHECK(q * section == FpMatrix::identity(1, 7));
    CHECK(kernel(q) == s);
}

namespace {

FpMatrix random_matrix(std::mt19937& rng, std::size_t r, std::size_t c,
                       std::uint64_t p) {
    FpMatrix m(r, c, p);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m.at(i, j) = rng() % p;
    return m;
}

} // namespace

TEST_CASE("randomized linear algebra properties") {
    std::mt19937 rng(12345);
    for (std::uint64_t p : {5ull, 7ull}) {
        for (int trial = 0; trial < 40; ++trial) {
            std::size_t rows = 1 + rng() % 10, cols = 1 + rng() % 12;
            FpMatrix m = random_matrix(rng, rows, cols, p);
            RrefResult r = rref(m);

            CAPTURE(p);
            CHECK(rref(r.reduced).reduced == r.reduced); // idempotent
            CHECK(r.rank + kernel(m).dim() == cols);     // rank-nullity

            // canonicity: invertible row operations leave the Subspace bit-identical
            FpMatrix t = random_matrix(rng, rows, rows, p);
            while (rref(t).rank < rows) t = random_matrix(rng, rows, rows, p);
            CHECK(Subspace::from_matrix(t * m) == Subspace::from_matrix(m));
        }
        for (int trial = 0; trial < 40; ++trial) {
            std::size_t n = 2 + rng() % 11;
            Subspace a = Subspace::from_matrix(random_matrix(rng, 1 + rng() % n, n, p));
            Subspace b = Subspace::from_matrix(random_matrix(rng, 1 + rng() % n, n, p));
            CHECK(subspace_sum(a, b).dim() + subspace_intersect(a, b).dim() ==
                  a.dim() + b.dim());
            CHECK(subspace_sum(a, b).contains(a));
            CHECK(a.contains(subspace_intersect(a, b)));
        }
    }
}

TEST_CASE("context rejects bad moduli") {
    CHECK_THROWS_AS(require_valid_prime(4), std::invalid_argument);
    CHECK_THROWS_AS(require_valid_prime(3), std::invalid_argument);
    CHECK_THROWS_AS(require_valid_prime(1), std::invalid_argument);
    CHECK_NOTHROW(require_valid_prime(5));
}
