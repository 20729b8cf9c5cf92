#include <doctest.h>

#include "wittrep/gmodule.hpp"
#include "wittrep/witt_algebra.hpp"

using namespace wittrep;

TEST_CASE("bracket structure constants") {
    WittAlgebra g(7);
    SUBCASE("[e_-1, e_2] = 3 e_1") {
        BracketTerm t = g.bracket(-1, 2);
        REQUIRE(t.index.has_value());
        CHECK(*t.index == 1);
        CHECK(t.coeff == 3);
    }
    SUBCASE("[e_i, e_i] = 0") {
        for (int i = -1; i <= g.max_index(); ++i) CHECK(g.bracket(i, i).is_zero());
    }
    SUBCASE("degree truncation") {
        WittAlgebra g5(5);
        CHECK(g5.bracket(2, 3).is_zero()); // degree 5 > p-2
    }
    SUBCASE("out of range indices throw") {
        CHECK_THROWS_AS(g.bracket(-2, 0), std::out_of_range);
        CHECK_THROWS_AS(g.bracket(0, 6), std::out_of_range);
    }
}

TEST_CASE("grading compatibility of the bracket") {
    for (std::uint64_t p : {5, 7}) {
        WittAlgebra g(p);
        for (int i = -1; i <= g.max_index(); ++i)
            for (int j = -1; j <= g.max_index(); ++j) {
                BracketTerm t = g.bracket(i, j);
                if (!t.is_zero()) CHECK(*t.index == i + j);
            }
    }
}

TEST_CASE("p-map") {
    WittAlgebra g(7);
    BracketTerm t0 = g.pmap(0);
    REQUIRE(t0.index.has_value());
    CHECK(*t0.index == 0);
    CHECK(t0.coeff == 1);
    CHECK(g.pmap(-1).is_zero());
    CHECK(g.pmap(3).is_zero());
}

TEST_CASE("p-map oracle: p-th power of the natural action") {
    // (x^(i+1) d/dx)^p on A(1) must equal the action of e_i^[p].
    for (std::uint64_t p : {5, 7}) {
        WittAlgebra g(p);
        GradedGModule a1 = natural_module(p);
        for (int i = -1; i <= g.max_index(); ++i) {
            FpMatrix lhs = a1.act(i).pow(p);
            BracketTerm t = g.pmap(i);
            FpMatrix rhs = t.is_zero() ? FpMatrix(p, p, p)
                                       : a1.act(*t.index).scaled(t.coeff);
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("structure axioms hold for small primes") {
    for (std::uint64_t p : {5, 7, 11}) {
        for (const AxiomCheck& c : verify_structure(p)) {
            CAPTURE(p);
            CAPTURE(c.name);
            CHECK(c.passed);
        }
    }
}

TEST_CASE("non-prime and small p rejected at construction") {
    CHECK_THROWS_AS(WittAlgebra(4), std::invalid_argument);
    CHECK_THROWS_AS(WittAlgebra(3), std::invalid_argument);
    CHECK_NOTHROW(WittAlgebra(5));
}
