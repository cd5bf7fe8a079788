#include <catch2/catch_amalgamated.hpp>

#include <stdexcept>
#include <vector>

#include "opchain/adjacency.hpp"
#include "opchain/bigint.hpp"
#include "opchain/charpoly.hpp"
#include "opchain/matrix.hpp"

using opchain::BigMatrix;
using opchain::bigint;
using opchain::IntPolynomial;
using opchain::charpoly_determinant;
using opchain::charpoly_explicit;
using opchain::charpoly_recurrence;

namespace {

// coefficients of P_2..P_10, highest degree first
const std::vector<std::vector<bigint>> known = {
    {1, 0, -1},
    {1, -1, -1, 0},
    {1, 0, -2, 0, 0},
    {1, -1, -2, 1, 0, 0},
    {1, 0, -3, 0, 1, 0, 0},
    {1, -1, -3, 2, 1, 0, 0, 0},
    {1, 0, -4, 0, 3, 0, 0, 0, 0},
    {1, -1, -4, 3, 3, -1, 0, 0, 0, 0},
    {1, 0, -5, 0, 6, 0, -1, 0, 0, 0, 0},
};

}  // namespace

TEST_CASE("explicit form reproduces the known polynomials") {
    for (int n = 2; n <= 10; ++n) {
        CAPTURE(n);
        REQUIRE(charpoly_explicit(n).coeffs_high_to_low() ==
                known[static_cast<std::size_t>(n - 2)]);
    }
}

TEST_CASE("rendered forms of the first few polynomials") {
    REQUIRE(charpoly_explicit(2).str() == "x^2 - 1");
    REQUIRE(charpoly_explicit(3).str() == "x^3 - x^2 - x");
    REQUIRE(charpoly_explicit(4).str() == "x^4 - 2*x^2");
    REQUIRE(charpoly_explicit(5).str() == "x^5 - x^4 - 2*x^3 + x^2");
}

TEST_CASE("three routes agree") {
    for (int n = 2; n <= 24; ++n) {
        CAPTURE(n);
        const IntPolynomial p = charpoly_explicit(n);
        REQUIRE(charpoly_recurrence(n) == p);
        if (n <= 16) {
            REQUIRE(charpoly_determinant(opchain::adjacency_matrix(n)) == p);
        }
    }
}

TEST_CASE("structure of the coefficients") {
    for (int n = 2; n <= 40; ++n) {
        CAPTURE(n);
        const IntPolynomial p = charpoly_explicit(n);
        REQUIRE(p.degree() == n);
        REQUIRE(p.is_monic());
        const bigint sub = p.coeff(static_cast<std::size_t>(n) - 1);
        REQUIRE(sub == (n % 2 == 0 ? 0 : -1));
        REQUIRE(p.coeff(static_cast<std::size_t>(n) - 2) == -(n / 2));
    }
}

TEST_CASE("determinant route on plain matrices") {
    SECTION("identity") {
        const BigMatrix identity = BigMatrix::identity(2);
        REQUIRE(charpoly_determinant(identity) == IntPolynomial{1, -2, 1});
    }
    SECTION("swap") {
        BigMatrix swap(2);
        swap.entry(0, 1) = 1;
        swap.entry(1, 0) = 1;
        REQUIRE(charpoly_determinant(swap) == IntPolynomial{-1, 0, 1});
    }
    SECTION("zero matrix") {
        const BigMatrix zero(3);
        REQUIRE(charpoly_determinant(zero) == IntPolynomial{0, 0, 0, 1});
    }
    SECTION("integer matrix with mixed signs") {
        BigMatrix a(2);
        a.entry(0, 0) = 2;
        a.entry(0, 1) = -3;
        a.entry(1, 0) = 1;
        a.entry(1, 1) = -2;
        // x^2 - tr x + det = x^2 - 1
        REQUIRE(charpoly_determinant(a) == IntPolynomial{-1, 0, 1});
    }
}

TEST_CASE("characteristic polynomial argument checking") {
    REQUIRE_THROWS_AS(charpoly_explicit(1), std::domain_error);
    REQUIRE_THROWS_AS(charpoly_recurrence(0), std::domain_error);
}
