#pragma once

#include <stdexcept>
#include <vector>

namespace opchain {

// Domain/codomain level of one operator. Levels are 0-based indices into the
// chain of spaces A_0..A_m, m = n/2; composition is meaningful exactly when
// one operator's codomain level equals the next operator's domain level.
struct Signature {
    int dom = 0;
    int cod = 0;

    bool operator==(const Signature&) const = default;
};

// The family of n first-order operators on R^n: an ascending run
// A_0 -> A_1 -> ... -> A_m, a self-map of A_m in the middle when n is odd,
// and a descending run back to A_0 (for n = 3 this is grad, curl, div).
// Operators carry the 1-based index used in all the formulas; the spaces A_i
// are represented by their level index alone.
class OperatorSet {
public:
    explicit OperatorSet(int n) : n_(n), m_(n / 2) {
        if (n < 2) {
            throw std::domain_error("operator set requires n >= 2");
        }
        signatures_.reserve(static_cast<std::size_t>(n));
        for (int i = 1; i <= n_; ++i) {
            if (i <= m_) {
                signatures_.push_back({i - 1, i});
            } else if (n_ % 2 == 1 && i == m_ + 1) {
                signatures_.push_back({m_, m_});
            } else {
                signatures_.push_back({n_ - i + 1, n_ - i});
            }
        }
    }

    int size() const { return n_; }

    // m = n/2, the highest level an operator touches.
    int top_level() const { return m_; }

    // Signature of the i-th operator, 1-based.
    const Signature& signature(int i) const {
        check_index(i);
        return signatures_[static_cast<std::size_t>(i - 1)];
    }

    const std::vector<Signature>& signatures() const { return signatures_; }

    // True iff applying operator j after operator i is meaningful.
    bool composable(int i, int j) const {
        check_index(i);
        check_index(j);
        return signatures_[static_cast<std::size_t>(i - 1)].cod ==
               signatures_[static_cast<std::size_t>(j - 1)].dom;
    }

    bool operator==(const OperatorSet&) const = default;

private:
    void check_index(int i) const {
        if (i < 1 || i > n_) {
            throw std::out_of_range("operator index out of range");
        }
    }

    int n_;
    int m_;
    std::vector<Signature> signatures_;
};

inline OperatorSet build_operator_set(int n) { return OperatorSet(n); }

inline bool composable(const OperatorSet& set, int i, int j) {
    return set.composable(i, j);
}

}  // namespace opchain
