#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "opchain/adjacency.hpp"
#include "opchain/charpoly.hpp"
#include "opchain/operator_set.hpp"
#include "opchain/polynomial.hpp"
#include "opchain/recurrence.hpp"

namespace opchain {

// f(k), the number of meaningful k-th order compositions of the n operators,
// computed by independent routes that are required to agree exactly:
//   matrix:     all-ones bilinear form over A^{k-1}
//   recurrence: order-n linear recurrence from the characteristic polynomial
//   enumerate:  definitional depth-first walk enumeration
//   closed:     Fibonacci closed forms, available for n = 3 and n = 6 only

// Thrown when enumeration would visit more walks than the caller allowed.
class enumeration_limit_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr std::uint64_t default_walk_limit = 10'000'000;

namespace detail {

inline void check_count_args(int n, long long k) {
    if (n < 2) {
        throw std::domain_error("counting requires n >= 2");
    }
    if (k < 1) {
        throw std::domain_error("composition order k must be >= 1");
    }
}

}  // namespace detail

// F_1 = F_2 = 1 indexing, extended to all integers by F_{i-2} = F_i - F_{i-1}
// (so F_0 = 0, F_{-1} = 1, F_{-2} = -1, ...).
inline bigint fibonacci(long long i) {
    const bool negative = i < 0;
    const long long t = negative ? -i : i;
    bigint a = 0;  // F_0
    bigint b = 1;  // F_1
    for (long long s = 0; s < t; ++s) {
        bigint next = a + b;
        a = std::move(b);
        b = std::move(next);
    }
    if (negative && t % 2 == 0) {
        return -a;
    }
    return a;
}

// v A^{k-1} v^T for the all-ones vector v, i.e. the sum of the entries of
// A^{k-1} (A^0 = identity, so f(1) = n). Evaluated as an iterated
// vector-matrix product; no full matrix power is formed.
inline bigint count_matrix(int n, long long k) {
    detail::check_count_args(n, k);
    const ZeroOneMatrix a = adjacency_matrix(n);
    const std::size_t size = a.size();
    std::vector<bigint> w(size, 1);
    for (long long t = 1; t < k; ++t) {
        std::vector<bigint> next(size);
        for (std::size_t i = 0; i < size; ++i) {
            if (w[i] == 0) {
                continue;
            }
            for (std::size_t j = 0; j < size; ++j) {
                if (a.entry(i, j) != 0) {
                    next[j] += w[i];
                }
            }
        }
        w = std::move(next);
    }
    bigint total = 0;
    for (const bigint& v : w) {
        total += v;
    }
    return total;
}

namespace detail {

// f(1)..f(k_max) in one sweep of the vector iteration.
inline std::vector<bigint> count_matrix_series(int n, long long k_max) {
    check_count_args(n, k_max);
    const ZeroOneMatrix a = adjacency_matrix(n);
    const std::size_t size = a.size();
    std::vector<bigint> w(size, 1);
    std::vector<bigint> values;
    values.reserve(static_cast<std::size_t>(k_max));
    for (long long k = 1; k <= k_max; ++k) {
        bigint total = 0;
        for (const bigint& v : w) {
            total += v;
        }
        values.push_back(std::move(total));
        if (k == k_max) {
            break;
        }
        std::vector<bigint> next(size);
        for (std::size_t i = 0; i < size; ++i) {
            if (w[i] == 0) {
                continue;
            }
            for (std::size_t j = 0; j < size; ++j) {
                if (a.entry(i, j) != 0) {
                    next[j] += w[i];
                }
            }
        }
        w = std::move(next);
    }
    return values;
}

inline LinearRecurrence counting_recurrence(int n, const IntPolynomial& p) {
    const std::size_t d = static_cast<std::size_t>(p.degree());
    std::vector<bigint> initial =
        count_matrix_series(n, static_cast<long long>(d));
    return make_recurrence(p, std::move(initial));
}

}  // namespace detail

// Order-n recurrence built from the explicit characteristic polynomial, with
// initial values f(1)..f(n) bootstrapped through the matrix route.
inline bigint count_recurrence(int n, long long k) {
    detail::check_count_args(n, k);
    return detail::counting_recurrence(n, charpoly_explicit(n))
        .at(static_cast<std::uint64_t>(k));
}

// Same values through the reduced polynomial (x-power factor stripped):
// lower order, so fewer initial values and a shorter window.
inline bigint count_recurrence_reduced(int n, long long k) {
    detail::check_count_args(n, k);
    const ReducedPoly reduced = reduced_recurrence_poly(charpoly_explicit(n));
    return detail::counting_recurrence(n, reduced.factor)
        .at(static_cast<std::uint64_t>(k));
}

// Definitional count: depth-first enumeration of index sequences i_1..i_k
// with every consecutive pair composable. The walk_limit caps completed
// walks, and a separate hard cap bounds total search work; both throw, since
// the count grows geometrically in k and silent explosion helps nobody.
inline bigint count_enumerate(int n, long long k,
                              std::uint64_t walk_limit = default_walk_limit) {
    detail::check_count_args(n, k);
    const OperatorSet set = build_operator_set(n);
    std::vector<std::vector<int>> successors(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
            if (set.composable(i, j)) {
                successors[static_cast<std::size_t>(i - 1)].push_back(j - 1);
            }
        }
    }
    constexpr std::uint64_t visit_cap = 200'000'000;
    std::uint64_t walks = 0;
    std::uint64_t visited = 0;
    std::vector<std::pair<int, long long>> stack;
    for (int i = 0; i < n; ++i) {
        stack.emplace_back(i, 1);
    }
    while (!stack.empty()) {
        const auto [vertex, depth] = stack.back();
        stack.pop_back();
        if (++visited > visit_cap) {
            throw enumeration_limit_error(
                "enumeration work cap exceeded; use the matrix method instead");
        }
        if (depth == k) {
            if (++walks > walk_limit) {
                throw enumeration_limit_error(
                    "more than " + std::to_string(walk_limit) +
                    " meaningful compositions; use the matrix method instead");
            }
            continue;
        }
        for (int next : successors[static_cast<std::size_t>(vertex)]) {
            stack.emplace_back(next, depth + 1);
        }
    }
    return bigint(walks);
}

// F_{k+3} for n = 3 and 2 F_{k+3} for n = 6; no other dimension has a
// Fibonacci closed form here.
inline std::optional<bigint> count_closed_form(int n, long long k) {
    detail::check_count_args(n, k);
    if (n == 3) {
        return fibonacci(k + 3);
    }
    if (n == 6) {
        return 2 * fibonacci(k + 3);
    }
    return std::nullopt;
}

// The Fibonacci-patterned form of A^k for n = 3 (any k >= 1) and n = 6
// (k >= 2, both parities; k = 1 falls back to A itself). Must reproduce
// matrix_power_direct exactly; negative Fibonacci indices use the backward
// extension.
inline BigMatrix expected_power_pattern(int n, long long k) {
    if (n != 3 && n != 6) {
        throw std::domain_error("power pattern is defined for n = 3 and n = 6 only");
    }
    if (k < 1) {
        throw std::domain_error("composition order k must be >= 1");
    }
    if (n == 3) {
        BigMatrix m(3);
        const bigint f0 = fibonacci(k - 2);
        const bigint f1 = fibonacci(k - 1);
        const bigint f2 = fibonacci(k);
        const bigint row_pattern[3][3] = {
            {f1, f2, f2},
            {f1, f2, f2},
            {f0, f1, f1},
        };
        for (std::size_t i = 0; i < 3; ++i) {
            for (std::size_t j = 0; j < 3; ++j) {
                m.entry(i, j) = row_pattern[i][j];
            }
        }
        return m;
    }
    if (k == 1) {
        return to_big(adjacency_matrix(6));
    }
    BigMatrix m(6);
    if (k % 2 == 0) {
        const long long p = k / 2;
        const bigint a = fibonacci(2 * p - 2);
        const bigint b = fibonacci(2 * p - 1);
        const bigint c = fibonacci(2 * p);
        const bigint rows[6][6] = {
            {b, 0, c, 0, c, 0},
            {0, c, 0, b, 0, c},
            {a, 0, b, 0, b, 0},
            {0, c, 0, b, 0, c},
            {b, 0, c, 0, c, 0},
            {0, b, 0, a, 0, b},
        };
        for (std::size_t i = 0; i < 6; ++i) {
            for (std::size_t j = 0; j < 6; ++j) {
                m.entry(i, j) = rows[i][j];
            }
        }
    } else {
        const long long p = (k - 1) / 2;
        const bigint a = fibonacci(2 * p - 1);
        const bigint b = fibonacci(2 * p);
        const bigint c = fibonacci(2 * p + 1);
        const bigint rows[6][6] = {
            {0, c, 0, b, 0, c},
            {b, 0, c, 0, c, 0},
            {0, b, 0, a, 0, b},
            {b, 0, c, 0, c, 0},
            {0, c, 0, b, 0, c},
            {a, 0, b, 0, b, 0},
        };
        for (std::size_t i = 0; i < 6; ++i) {
            for (std::size_t j = 0; j < 6; ++j) {
                m.entry(i, j) = rows[i][j];
            }
        }
    }
    return m;
}

enum class CountMethod {
    matrix,
    recurrence,
    enumerate,
    closed_form,
};

struct CountSeries {
    int n = 0;
    std::vector<bigint> values;  // f(1)..f(k_max)

    bool operator==(const CountSeries&) const = default;
};

// f(1)..f(k_max) by the chosen method. The matrix and recurrence routes run
// one incremental sweep instead of k_max independent calls.
inline CountSeries series(int n, long long k_max, CountMethod method) {
    detail::check_count_args(n, k_max);
    CountSeries out;
    out.n = n;
    switch (method) {
        case CountMethod::matrix:
            out.values = detail::count_matrix_series(n, k_max);
            break;
        case CountMethod::recurrence:
            out.values = detail::counting_recurrence(n, charpoly_explicit(n))
                             .prefix(static_cast<std::uint64_t>(k_max));
            break;
        case CountMethod::enumerate:
            out.values.reserve(static_cast<std::size_t>(k_max));
            for (long long k = 1; k <= k_max; ++k) {
                out.values.push_back(count_enumerate(n, k));
            }
            break;
        case CountMethod::closed_form:
            out.values.reserve(static_cast<std::size_t>(k_max));
            for (long long k = 1; k <= k_max; ++k) {
                std::optional<bigint> value = count_closed_form(n, k);
                if (!value) {
                    throw std::domain_error(
                        "no closed form for n = " + std::to_string(n) +
                        "; closed forms exist for n = 3 and n = 6");
                }
                out.values.push_back(std::move(*value));
            }
            break;
    }
    return out;
}

}  // namespace opchain
