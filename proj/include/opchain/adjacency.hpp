#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "opchain/matrix.hpp"
#include "opchain/operator_set.hpp"

namespace opchain {

// 0/1 adjacency matrix of the composability digraph: entry (i, j) is 1 when
// operator j may follow operator i. Rows/columns are 0-based in code; the
// closed-form rule below is stated for the 1-based operator indices.
class ZeroOneMatrix {
public:
    explicit ZeroOneMatrix(std::size_t n) : n_(n), entries_(n * n, 0) {
        if (n == 0) {
            throw std::domain_error("matrix dimension must be positive");
        }
    }

    std::size_t size() const { return n_; }

    int entry(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }

    void set(std::size_t i, std::size_t j, int value) {
        if (value != 0 && value != 1) {
            throw std::domain_error("entries must be 0 or 1");
        }
        entries_[i * n_ + j] = static_cast<std::uint8_t>(value);
    }

    bool operator==(const ZeroOneMatrix&) const = default;

private:
    std::size_t n_;
    std::vector<std::uint8_t> entries_;
};

// Closed-form rule: with 1-based indices, a_ij = 1 iff j = i+1 or i+j = n+1.
// When both hold (even n, i = n/2) the entry is still 1; this is the
// adjacency matrix of a relation, not a multigraph. j = i+1 is vacuous in the
// last row, leaving only the i+j = n+1 edge back to column 1.
inline ZeroOneMatrix adjacency_matrix(int n) {
    if (n < 2) {
        throw std::domain_error("adjacency matrix requires n >= 2");
    }
    ZeroOneMatrix a(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
            if ((j == i + 1) || (i + j == n + 1)) {
                a.set(static_cast<std::size_t>(i - 1),
                      static_cast<std::size_t>(j - 1), 1);
            }
        }
    }
    return a;
}

// Same matrix derived from the signature table instead of the index formula;
// the two routes agreeing is one of the library's cross-checks.
inline ZeroOneMatrix semantic_adjacency(const OperatorSet& set) {
    const int n = set.size();
    ZeroOneMatrix a(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
            if (set.composable(i, j)) {
                a.set(static_cast<std::size_t>(i - 1),
                      static_cast<std::size_t>(j - 1), 1);
            }
        }
    }
    return a;
}

// Number of edges; equals the count of meaningful second-order compositions.
inline std::size_t edge_count(const ZeroOneMatrix& a) {
    std::size_t count = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < a.size(); ++j) {
            count += static_cast<std::size_t>(a.entry(i, j));
        }
    }
    return count;
}

inline BigMatrix to_big(const ZeroOneMatrix& a) {
    BigMatrix m(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < a.size(); ++j) {
            m.entry(i, j) = a.entry(i, j);
        }
    }
    return m;
}

}  // namespace opchain
