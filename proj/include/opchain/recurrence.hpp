#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "opchain/charpoly.hpp"
#include "opchain/matrix.hpp"
#include "opchain/polynomial.hpp"

namespace opchain {

// Coefficients c_1..c_d of g(m) = c_1 g(m-1) + ... + c_d g(m-d), read off a
// monic polynomial x^d - c_1 x^{d-1} - ... - c_d.
inline std::vector<bigint> recurrence_coefficients(const IntPolynomial& p) {
    if (!p.is_monic() || p.degree() < 1) {
        throw std::domain_error("recurrence needs a monic polynomial of degree >= 1");
    }
    const std::size_t d = static_cast<std::size_t>(p.degree());
    std::vector<bigint> c(d);
    for (std::size_t r = 1; r <= d; ++r) {
        c[r - 1] = -p.coeff(d - r);
    }
    return c;
}

// Homogeneous linear recurrence over exact integers: order-d coefficient
// vector plus the initial values g(1)..g(d). Immutable; extension walks a
// window of the last d terms.
class LinearRecurrence {
public:
    LinearRecurrence(std::vector<bigint> coefficients,
                     std::vector<bigint> initial_values)
        : coefficients_(std::move(coefficients)),
          initial_values_(std::move(initial_values)) {
        if (coefficients_.empty()) {
            throw std::domain_error("recurrence order must be >= 1");
        }
        if (initial_values_.size() != coefficients_.size()) {
            throw std::domain_error("need exactly one initial value per coefficient");
        }
    }

    std::size_t order() const { return coefficients_.size(); }
    const std::vector<bigint>& coefficients() const { return coefficients_; }
    const std::vector<bigint>& initial_values() const { return initial_values_; }

    // x^d - c_1 x^{d-1} - ... - c_d, the monic polynomial this came from.
    IntPolynomial generating_polynomial() const {
        const std::size_t d = order();
        std::vector<bigint> c(d + 1);
        c[d] = 1;
        for (std::size_t r = 1; r <= d; ++r) {
            c[d - r] = -coefficients_[r - 1];
        }
        return IntPolynomial(std::move(c));
    }

    // g(k) for 1-based k; stored value for k <= order, exact extension beyond.
    bigint at(std::uint64_t k) const {
        if (k == 0) {
            throw std::domain_error("recurrence index starts at 1");
        }
        const std::size_t d = order();
        if (k <= d) {
            return initial_values_[static_cast<std::size_t>(k - 1)];
        }
        std::vector<bigint> window = initial_values_;
        for (std::uint64_t t = d + 1; t <= k; ++t) {
            bigint next = 0;
            for (std::size_t r = 0; r < d; ++r) {
                next += coefficients_[r] * window[d - 1 - r];
            }
            for (std::size_t r = 0; r + 1 < d; ++r) {
                window[r] = std::move(window[r + 1]);
            }
            window[d - 1] = std::move(next);
        }
        return window[d - 1];
    }

    // g(1)..g(k).
    std::vector<bigint> prefix(std::uint64_t k) const {
        if (k == 0) {
            throw std::domain_error("recurrence index starts at 1");
        }
        const std::size_t d = order();
        std::vector<bigint> values;
        values.reserve(static_cast<std::size_t>(k));
        for (std::uint64_t t = 1; t <= k && t <= d; ++t) {
            values.push_back(initial_values_[static_cast<std::size_t>(t - 1)]);
        }
        for (std::uint64_t t = d + 1; t <= k; ++t) {
            bigint next = 0;
            for (std::size_t r = 0; r < d; ++r) {
                next += coefficients_[r] * values[values.size() - 1 - r];
            }
            values.push_back(std::move(next));
        }
        return values;
    }

    bool operator==(const LinearRecurrence&) const = default;

private:
    std::vector<bigint> coefficients_;
    std::vector<bigint> initial_values_;
};

inline LinearRecurrence make_recurrence(const IntPolynomial& p,
                                        std::vector<bigint> initial) {
    std::vector<bigint> coefficients = recurrence_coefficients(p);
    if (initial.size() != coefficients.size()) {
        throw std::domain_error("initial values must match the polynomial degree");
    }
    return LinearRecurrence(std::move(coefficients), std::move(initial));
}

inline bigint extend(const LinearRecurrence& rec, std::uint64_t k) {
    return rec.at(k);
}

// A^m by plain repeated multiplication; the oracle the recurrent route is
// checked against.
inline BigMatrix matrix_power_direct(const BigMatrix& a, std::uint64_t m) {
    if (m == 0) {
        throw std::domain_error("matrix power requires m >= 1");
    }
    BigMatrix result = a;
    for (std::uint64_t t = 2; t <= m; ++t) {
        result = result * a;
    }
    return result;
}

// A^m through the characteristic polynomial: every entry sequence a_ij^(t)
// obeys the same order-n recurrence, so one coefficient vector (shared by all
// n^2 entries) extends the directly computed initial powers A^1..A^n to m.
// By Cayley-Hamilton this reproduces A^m exactly.
inline BigMatrix matrix_power_recurrent(const BigMatrix& a, std::uint64_t m) {
    if (m == 0) {
        throw std::domain_error("matrix power requires m >= 1");
    }
    const std::size_t n = a.size();
    if (m <= n) {
        return matrix_power_direct(a, m);
    }
    std::vector<BigMatrix> window;
    window.reserve(n);
    window.push_back(a);
    for (std::size_t t = 2; t <= n; ++t) {
        window.push_back(window.back() * a);
    }
    const std::vector<bigint> coefficients =
        recurrence_coefficients(charpoly_determinant(a));
    for (std::uint64_t t = n + 1; t <= m; ++t) {
        BigMatrix next(n);
        for (std::size_t r = 0; r < n; ++r) {
            next.add_scaled(window[n - 1 - r], coefficients[r]);
        }
        for (std::size_t r = 0; r + 1 < n; ++r) {
            window[r] = std::move(window[r + 1]);
        }
        window[n - 1] = std::move(next);
    }
    return window[n - 1];
}

}  // namespace opchain
