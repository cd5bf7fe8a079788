#pragma once

#include <cstddef>
#include <initializer_list>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "opchain/bigint.hpp"

namespace opchain {

// Polynomial with exact integer coefficients. Stored degree-0 first with
// trailing zeros trimmed; the zero polynomial is the empty list. Display is
// degree-high first throughout.
class IntPolynomial {
public:
    IntPolynomial() = default;

    explicit IntPolynomial(std::vector<bigint> low_to_high)
        : coeffs_(std::move(low_to_high)) {
        trim();
    }

    IntPolynomial(std::initializer_list<bigint> low_to_high)
        : coeffs_(low_to_high) {
        trim();
    }

    static IntPolynomial monomial(bigint coefficient, std::size_t degree) {
        std::vector<bigint> c(degree + 1);
        c[degree] = std::move(coefficient);
        return IntPolynomial(std::move(c));
    }

    bool is_zero() const { return coeffs_.empty(); }

    // Degree, or -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

    bigint coeff(std::size_t i) const {
        return i < coeffs_.size() ? coeffs_[i] : bigint(0);
    }

    bigint leading() const { return coeffs_.empty() ? bigint(0) : coeffs_.back(); }

    bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }

    const std::vector<bigint>& coeffs_low_to_high() const { return coeffs_; }

    std::vector<bigint> coeffs_high_to_low() const {
        return {coeffs_.rbegin(), coeffs_.rend()};
    }

    IntPolynomial& operator+=(const IntPolynomial& other) {
        if (coeffs_.size() < other.coeffs_.size()) {
            coeffs_.resize(other.coeffs_.size());
        }
        for (std::size_t i = 0; i < other.coeffs_.size(); ++i) {
            coeffs_[i] += other.coeffs_[i];
        }
        trim();
        return *this;
    }

    IntPolynomial& operator-=(const IntPolynomial& other) {
        if (coeffs_.size() < other.coeffs_.size()) {
            coeffs_.resize(other.coeffs_.size());
        }
        for (std::size_t i = 0; i < other.coeffs_.size(); ++i) {
            coeffs_[i] -= other.coeffs_[i];
        }
        trim();
        return *this;
    }

    friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) {
        a += b;
        return a;
    }

    friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) {
        a -= b;
        return a;
    }

    friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
        if (a.is_zero() || b.is_zero()) {
            return {};
        }
        std::vector<bigint> c(a.coeffs_.size() + b.coeffs_.size() - 1);
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (a.coeffs_[i] == 0) {
                continue;
            }
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
                c[i + j] += a.coeffs_[i] * b.coeffs_[j];
            }
        }
        return IntPolynomial(std::move(c));
    }

    friend IntPolynomial operator*(const bigint& s, const IntPolynomial& p) {
        if (s == 0) {
            return {};
        }
        std::vector<bigint> c = p.coeffs_;
        for (bigint& v : c) {
            v *= s;
        }
        return IntPolynomial(std::move(c));
    }

    // Multiply by x^s.
    IntPolynomial times_power(std::size_t s) const {
        if (is_zero() || s == 0) {
            IntPolynomial copy = *this;
            return copy;
        }
        std::vector<bigint> c(coeffs_.size() + s);
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            c[i + s] = coeffs_[i];
        }
        return IntPolynomial(std::move(c));
    }

    bigint evaluate(const bigint& x) const {
        bigint v = 0;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
            v = v * x + *it;
        }
        return v;
    }

    // Human-readable form, high degree first: "x^4 - 2*x^2".
    std::string str(std::string_view var = "x") const {
        if (is_zero()) {
            return "0";
        }
        std::ostringstream out;
        bool first = true;
        for (int d = degree(); d >= 0; --d) {
            const bigint c = coeff(static_cast<std::size_t>(d));
            if (c == 0) {
                continue;
            }
            const bool negative = c < 0;
            bigint mag = negative ? bigint(-c) : c;
            if (first) {
                if (negative) {
                    out << "-";
                }
                first = false;
            } else {
                out << (negative ? " - " : " + ");
            }
            if (mag != 1 || d == 0) {
                out << mag;
                if (d > 0) {
                    out << "*";
                }
            }
            if (d > 0) {
                out << var;
                if (d > 1) {
                    out << "^" << d;
                }
            }
        }
        return out.str();
    }

    bool operator==(const IntPolynomial&) const = default;

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0) {
            coeffs_.pop_back();
        }
    }

    std::vector<bigint> coeffs_;
};

// Binomial coefficient with the out-of-range convention C(a, b) = 0 for
// b < 0, b > a or a < 0. Exact at every step: the running product after i
// factors is C(a-b+i, i), always divisible.
inline bigint binomial(long long a, long long b) {
    if (a < 0 || b < 0 || b > a) {
        return 0;
    }
    if (b > a - b) {
        b = a - b;
    }
    bigint result = 1;
    for (long long i = 1; i <= b; ++i) {
        result *= a - b + i;
        result /= i;
    }
    return result;
}

// p split as x^shift * factor with factor(0) != 0. For monic factor of
// degree d, read high-to-low, this is the reduced recurrence
// f(i+d) = -(q_{d-1} f(i+d-1) + ... + q_0 f(i)).
struct ReducedPoly {
    IntPolynomial factor;
    std::size_t shift = 0;
};

inline ReducedPoly reduced_recurrence_poly(const IntPolynomial& p) {
    if (p.is_zero()) {
        throw std::domain_error("cannot reduce the zero polynomial");
    }
    const std::vector<bigint>& c = p.coeffs_low_to_high();
    std::size_t shift = 0;
    while (c[shift] == 0) {
        ++shift;
    }
    std::vector<bigint> rest(c.begin() + static_cast<std::ptrdiff_t>(shift),
                             c.end());
    return {IntPolynomial(std::move(rest)), shift};
}

}  // namespace opchain
