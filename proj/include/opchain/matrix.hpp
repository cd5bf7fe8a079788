#pragma once

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "opchain/bigint.hpp"

namespace opchain {

// Dense square matrix of exact integers. Small dimensions (tens), entries of
// unbounded size; powers of adjacency matrices live here.
class BigMatrix {
public:
    explicit BigMatrix(std::size_t n) : n_(n), entries_(n * n) {
        if (n == 0) {
            throw std::domain_error("matrix dimension must be positive");
        }
    }

    static BigMatrix identity(std::size_t n) {
        BigMatrix m(n);
        for (std::size_t i = 0; i < n; ++i) {
            m.entry(i, i) = 1;
        }
        return m;
    }

    std::size_t size() const { return n_; }

    bigint& entry(std::size_t i, std::size_t j) { return entries_[i * n_ + j]; }
    const bigint& entry(std::size_t i, std::size_t j) const {
        return entries_[i * n_ + j];
    }

    BigMatrix operator*(const BigMatrix& other) const {
        if (n_ != other.n_) {
            throw std::domain_error("matrix size mismatch in product");
        }
        BigMatrix result(n_);
        for (std::size_t i = 0; i < n_; ++i) {
            for (std::size_t k = 0; k < n_; ++k) {
                const bigint& a = entry(i, k);
                if (a == 0) {
                    continue;
                }
                for (std::size_t j = 0; j < n_; ++j) {
                    result.entry(i, j) += a * other.entry(k, j);
                }
            }
        }
        return result;
    }

    BigMatrix& operator+=(const BigMatrix& other) {
        if (n_ != other.n_) {
            throw std::domain_error("matrix size mismatch in sum");
        }
        for (std::size_t t = 0; t < entries_.size(); ++t) {
            entries_[t] += other.entries_[t];
        }
        return *this;
    }

    // *this += c * other
    BigMatrix& add_scaled(const BigMatrix& other, const bigint& c) {
        if (n_ != other.n_) {
            throw std::domain_error("matrix size mismatch in sum");
        }
        if (c != 0) {
            for (std::size_t t = 0; t < entries_.size(); ++t) {
                entries_[t] += c * other.entries_[t];
            }
        }
        return *this;
    }

    bigint trace() const {
        bigint t = 0;
        for (std::size_t i = 0; i < n_; ++i) {
            t += entry(i, i);
        }
        return t;
    }

    bigint sum() const {
        bigint s = 0;
        for (const bigint& e : entries_) {
            s += e;
        }
        return s;
    }

    std::vector<bigint> row_sums() const {
        std::vector<bigint> sums(n_);
        for (std::size_t i = 0; i < n_; ++i) {
            for (std::size_t j = 0; j < n_; ++j) {
                sums[i] += entry(i, j);
            }
        }
        return sums;
    }

    bool operator==(const BigMatrix&) const = default;

private:
    std::size_t n_;
    std::vector<bigint> entries_;
};

}  // namespace opchain
