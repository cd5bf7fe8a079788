#include <catch2/catch_amalgamated.hpp>

#include <stdexcept>
#include <vector>

#include "opchain/adjacency.hpp"
#include "opchain/operator_set.hpp"

using opchain::ZeroOneMatrix;
using opchain::adjacency_matrix;
using opchain::semantic_adjacency;

namespace {

std::vector<std::vector<int>> entries(const ZeroOneMatrix& a) {
    std::vector<std::vector<int>> rows;
    for (std::size_t i = 0; i < a.size(); ++i) {
        std::vector<int> row;
        for (std::size_t j = 0; j < a.size(); ++j) {
            row.push_back(a.entry(i, j));
        }
        rows.push_back(row);
    }
    return rows;
}

}  // namespace

TEST_CASE("adjacency matrices for small n") {
    REQUIRE(entries(adjacency_matrix(2)) ==
            std::vector<std::vector<int>>{{0, 1}, {1, 0}});
    REQUIRE(entries(adjacency_matrix(3)) ==
            std::vector<std::vector<int>>{{0, 1, 1}, {0, 1, 1}, {1, 0, 0}});
    REQUIRE(entries(adjacency_matrix(4)) ==
            std::vector<std::vector<int>>{
                {0, 1, 0, 1}, {0, 0, 1, 0}, {0, 1, 0, 1}, {1, 0, 0, 0}});
}

TEST_CASE("coinciding rule branches still give a single edge") {
    // at i = n/2 (even n) the superdiagonal and the antidiagonal meet
    const ZeroOneMatrix a = adjacency_matrix(4);
    REQUIRE(a.entry(1, 2) == 1);
    const ZeroOneMatrix b = adjacency_matrix(10);
    REQUIRE(b.entry(4, 5) == 1);
}

TEST_CASE("formula matches the composability relation") {
    for (int n = 2; n <= 32; ++n) {
        const ZeroOneMatrix formula = adjacency_matrix(n);
        const ZeroOneMatrix semantic =
            semantic_adjacency(opchain::build_operator_set(n));
        REQUIRE(formula == semantic);
    }
}

TEST_CASE("edge counts follow the parity formula") {
    for (int n = 2; n <= 32; ++n) {
        const std::size_t expected = n % 2 == 0
                                         ? static_cast<std::size_t>(2 * n - 2)
                                         : static_cast<std::size_t>(2 * n - 1);
        REQUIRE(opchain::edge_count(adjacency_matrix(n)) == expected);
    }
}

TEST_CASE("widening to big integer entries") {
    const opchain::BigMatrix big = opchain::to_big(adjacency_matrix(3));
    REQUIRE(big.size() == 3);
    REQUIRE(big.entry(0, 1) == 1);
    REQUIRE(big.entry(2, 1) == 0);
    REQUIRE(big.sum() == 5);
}

TEST_CASE("adjacency argument checking") {
    REQUIRE_THROWS_AS(adjacency_matrix(1), std::domain_error);
    REQUIRE_THROWS_AS(adjacency_matrix(-2), std::domain_error);
    REQUIRE_THROWS_AS(ZeroOneMatrix(0), std::domain_error);
    ZeroOneMatrix a(2);
    REQUIRE_THROWS_AS(a.set(0, 0, 2), std::domain_error);
    REQUIRE_THROWS_AS(a.set(0, 0, -1), std::domain_error);
}
