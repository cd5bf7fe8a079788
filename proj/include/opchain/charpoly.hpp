#pragma once

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "opchain/adjacency.hpp"
#include "opchain/matrix.hpp"
#include "opchain/polynomial.hpp"

namespace opchain {

// Characteristic polynomial P_n of the n-operator composability matrix, in
// the monic normalization det(xI - A). Three independent routes are provided
// and must agree coefficient-exact: a closed binomial sum, the two-step
// recurrence P_n = x^2 (P_{n-2} - P_{n-4}), and exact integer
// Faddeev-LeVerrier on the matrix itself.

// Closed binomial form. Even n sums terms C(n/2-k+2, k-1) x^{n-2k+2}; odd n
// adds a second binomial shifted one degree up. Out-of-range binomials are 0,
// which silently retires the overrunning tail terms of the stated limits
// (including the one spot where the exponent itself would go negative).
inline IntPolynomial charpoly_explicit(int n) {
    if (n < 2) {
        throw std::domain_error("characteristic polynomial requires n >= 2");
    }
    std::vector<bigint> c(static_cast<std::size_t>(n) + 1);
    if (n % 2 == 0) {
        const int k_max = (n + 2) / 4 + 1;
        for (int k = 1; k <= k_max; ++k) {
            const int sign = (k % 2 == 1) ? 1 : -1;
            const bigint b = binomial(n / 2 - k + 2, k - 1);
            if (b != 0) {
                c[static_cast<std::size_t>(n - 2 * k + 2)] += sign * b;
            }
        }
    } else {
        const int k_max = (n + 2) / 4 + 2;
        for (int k = 1; k <= k_max; ++k) {
            const int sign = (k % 2 == 1) ? 1 : -1;
            const long long top = (n + 3) / 2 - k;
            const bigint b0 = binomial(top, k - 1);
            const bigint b1 = binomial(top, k - 2);
            const int e = n - 2 * k + 2;
            if (b0 != 0) {
                c[static_cast<std::size_t>(e)] += sign * b0;
            }
            if (b1 != 0) {
                c[static_cast<std::size_t>(e + 1)] += sign * b1;
            }
        }
    }
    return IntPolynomial(std::move(c));
}

// Two-step recurrence P_n = x^2 (P_{n-2} - P_{n-4}) climbed iteratively from
// the four base polynomials; one parity chain per call, no shared cache.
inline IntPolynomial charpoly_recurrence(int n) {
    if (n < 2) {
        throw std::domain_error("characteristic polynomial requires n >= 2");
    }
    const auto base = [](int m) -> IntPolynomial {
        switch (m) {
            case 2:  // x^2 - 1
                return IntPolynomial{-1, 0, 1};
            case 3:  // x^3 - x^2 - x
                return IntPolynomial{0, -1, -1, 1};
            case 4:  // x^4 - 2x^2
                return IntPolynomial{0, 0, -2, 0, 1};
            default:  // x^5 - x^4 - 2x^3 + x^2
                return IntPolynomial{0, 0, 1, -2, -1, 1};
        }
    };
    if (n <= 5) {
        return base(n);
    }
    const int start = (n % 2 == 0) ? 2 : 3;
    IntPolynomial back4 = base(start);
    IntPolynomial back2 = base(start + 2);
    for (int t = start + 4; t <= n; t += 2) {
        IntPolynomial next = (back2 - back4).times_power(2);
        back4 = std::move(back2);
        back2 = std::move(next);
    }
    return back2;
}

// Faddeev-LeVerrier: M_k = A(M_{k-1} + c_{k-1} I), c_k = -tr(M_k)/k.
// Division-exact over the integers; the divisibility check guards the
// invariant rather than rounding anything.
inline IntPolynomial charpoly_determinant(const BigMatrix& a) {
    const std::size_t n = a.size();
    std::vector<bigint> high_to_low(n + 1);
    high_to_low[0] = 1;
    BigMatrix m(n);
    for (std::size_t k = 1; k <= n; ++k) {
        BigMatrix shifted = m;
        for (std::size_t i = 0; i < n; ++i) {
            shifted.entry(i, i) += high_to_low[k - 1];
        }
        m = a * shifted;
        const bigint tr = m.trace();
        if (tr % static_cast<long long>(k) != 0) {
            throw std::logic_error("characteristic polynomial trace not divisible");
        }
        high_to_low[k] = -tr / static_cast<long long>(k);
    }
    std::vector<bigint> low_to_high(n + 1);
    for (std::size_t d = 0; d <= n; ++d) {
        low_to_high[d] = std::move(high_to_low[n - d]);
    }
    return IntPolynomial(std::move(low_to_high));
}

inline IntPolynomial charpoly_determinant(const ZeroOneMatrix& a) {
    return charpoly_determinant(to_big(a));
}

}  // namespace opchain
