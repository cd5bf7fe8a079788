// Acceptance gate: one timed check per criterion, a PASS/FAIL line each,
// nonzero exit if anything fails or overruns its budget.

#include <chrono>
#include <cstdio>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "opchain/opchain.hpp"

namespace {

using opchain::BigMatrix;
using opchain::bigint;
using opchain::IntPolynomial;

struct Criterion {
    std::string name;
    double budget_seconds;
    std::function<bool(std::string&)> check;
};

bool charpoly_anchors(std::string& why) {
    const std::vector<std::vector<bigint>> expected = {
        {1, 0, -1},
        {1, -1, -1, 0},
        {1, 0, -2, 0, 0},
        {1, -1, -2, 1, 0, 0},
    };
    for (int n = 2; n <= 5; ++n) {
        const std::vector<bigint>& want =
            expected[static_cast<std::size_t>(n - 2)];
        const std::vector<IntPolynomial> routes = {
            opchain::charpoly_explicit(n),
            opchain::charpoly_recurrence(n),
            opchain::charpoly_determinant(opchain::adjacency_matrix(n)),
        };
        for (const IntPolynomial& p : routes) {
            if (p.coeffs_high_to_low() != want) {
                why = "n = " + std::to_string(n) + ": got " + p.str();
                return false;
            }
        }
    }
    return true;
}

bool counting_anchors(std::string& why) {
    const std::vector<bigint> expected = {3, 5, 8};
    for (long long k = 1; k <= 3; ++k) {
        const bigint& want = expected[static_cast<std::size_t>(k - 1)];
        const std::vector<bigint> routes = {
            opchain::count_matrix(3, k),
            opchain::count_recurrence(3, k),
            opchain::count_recurrence_reduced(3, k),
            opchain::count_enumerate(3, k),
            *opchain::count_closed_form(3, k),
        };
        for (const bigint& v : routes) {
            if (v != want) {
                why = "k = " + std::to_string(k) + ": got " + v.str() +
                      ", want " + want.str();
                return false;
            }
        }
    }
    return true;
}

bool closed_forms(std::string& why) {
    for (long long k = 1; k <= 40; ++k) {
        const bigint f = opchain::fibonacci(k + 3);
        if (opchain::count_matrix(3, k) != f) {
            why = "n = 3, k = " + std::to_string(k);
            return false;
        }
        if (opchain::count_matrix(6, k) != 2 * f) {
            why = "n = 6, k = " + std::to_string(k);
            return false;
        }
    }
    for (long long k = 1; k <= 50; ++k) {
        const bigint lhs = opchain::fibonacci(k - 3) +
                           4 * opchain::fibonacci(k - 2) +
                           4 * opchain::fibonacci(k - 1);
        if (lhs != opchain::fibonacci(k + 3)) {
            why = "expansion fails at k = " + std::to_string(k);
            return false;
        }
    }
    return true;
}

bool power_patterns(std::string& why) {
    const BigMatrix a3 = opchain::to_big(opchain::adjacency_matrix(3));
    for (long long k = 1; k <= 20; ++k) {
        if (opchain::expected_power_pattern(3, k) !=
            opchain::matrix_power_direct(a3, static_cast<std::uint64_t>(k))) {
            why = "n = 3, k = " + std::to_string(k);
            return false;
        }
    }
    const BigMatrix a6 = opchain::to_big(opchain::adjacency_matrix(6));
    for (long long k = 2; k <= 20; ++k) {
        if (opchain::expected_power_pattern(6, k) !=
            opchain::matrix_power_direct(a6, static_cast<std::uint64_t>(k))) {
            why = "n = 6, k = " + std::to_string(k);
            return false;
        }
    }
    return true;
}

bool table_reproduction(std::string& why) {
    for (int n : {3, 4, 5, 6, 8, 9, 10}) {
        const opchain::TableRow row = opchain::table_row(n);
        if (!row.matches_published || !*row.matches_published) {
            why = "n = " + std::to_string(n) + " does not match";
            return false;
        }
    }
    const opchain::TableRow seven = opchain::table_row(7);
    if (!seven.matches_published || *seven.matches_published) {
        why = "n = 7 unexpectedly matches the published row";
        return false;
    }
    if (seven.note.empty()) {
        why = "n = 7 divergence carries no warning";
        return false;
    }
    const std::vector<bigint> oracle = {7, 13, 24, 45, 84, 158};
    const std::vector<bigint> enumerated =
        opchain::series(7, 6, opchain::CountMethod::enumerate).values;
    if (enumerated != oracle) {
        why = "enumerated series deviates from the oracle values";
        return false;
    }
    // derived order-4 relation on the oracle series
    const std::vector<bigint> c =
        opchain::recurrence_coefficients(seven.reduced);
    for (std::size_t i = 0; i + c.size() < oracle.size(); ++i) {
        bigint predicted = 0;
        for (std::size_t r = 1; r <= c.size(); ++r) {
            predicted += c[r - 1] * oracle[i + c.size() - r];
        }
        if (predicted != oracle[i + c.size()]) {
            why = "derived relation fails at i = " + std::to_string(i + 1);
            return false;
        }
    }
    // published order-5 variant must fail on the same series
    bigint printed = oracle[3] + 3 * oracle[2] - 2 * oracle[1] - oracle[0];
    if (printed == oracle[5]) {
        why = "published variant unexpectedly holds";
        return false;
    }
    return true;
}

bool triple_oracle(std::string& why) {
    for (int n = 2; n <= 8; ++n) {
        for (long long k = 1; k <= 10; ++k) {
            const bigint by_enumeration = opchain::count_enumerate(n, k);
            const bigint by_matrix = opchain::count_matrix(n, k);
            const bigint by_recurrence = opchain::count_recurrence(n, k);
            if (by_enumeration != by_matrix || by_matrix != by_recurrence) {
                why = "counts differ at n = " + std::to_string(n) +
                      ", k = " + std::to_string(k);
                return false;
            }
        }
    }
    for (int n = 2; n <= 40; ++n) {
        const IntPolynomial p = opchain::charpoly_explicit(n);
        if (opchain::charpoly_recurrence(n) != p ||
            opchain::charpoly_determinant(opchain::adjacency_matrix(n)) != p) {
            why = "characteristic polynomials differ at n = " +
                  std::to_string(n);
            return false;
        }
    }
    for (int n = 2; n <= 8; ++n) {
        const BigMatrix a = opchain::to_big(opchain::adjacency_matrix(n));
        for (std::uint64_t m = 1; m <= 20; ++m) {
            if (opchain::matrix_power_recurrent(a, m) !=
                opchain::matrix_power_direct(a, m)) {
                why = "adjacency powers differ at n = " + std::to_string(n) +
                      ", m = " + std::to_string(m);
                return false;
            }
        }
    }
    std::mt19937_64 rng(424242);
    for (int trial = 0; trial < 10; ++trial) {
        const std::size_t size = 2 + static_cast<std::size_t>(rng() % 4);
        BigMatrix a(size);
        for (std::size_t i = 0; i < size; ++i) {
            for (std::size_t j = 0; j < size; ++j) {
                a.entry(i, j) = static_cast<long long>(rng() % 7) - 3;
            }
        }
        for (std::uint64_t m = 1; m <= 12; ++m) {
            if (opchain::matrix_power_recurrent(a, m) !=
                opchain::matrix_power_direct(a, m)) {
                why = "random matrix powers differ in trial " +
                      std::to_string(trial);
                return false;
            }
        }
    }
    return true;
}

bool structural_invariants(std::string& why) {
    for (int n = 2; n <= 64; ++n) {
        if (opchain::adjacency_matrix(n) !=
            opchain::semantic_adjacency(opchain::build_operator_set(n))) {
            why = "adjacency mismatch at n = " + std::to_string(n);
            return false;
        }
        if (opchain::count_matrix(n, 1) != n) {
            why = "f(1) differs from n at n = " + std::to_string(n);
            return false;
        }
        const bigint expected2 = n % 2 == 0 ? 2 * n - 2 : 2 * n - 1;
        if (opchain::count_matrix(n, 2) != expected2) {
            why = "f(2) off at n = " + std::to_string(n);
            return false;
        }
    }
    for (int n = 2; n <= 40; ++n) {
        const IntPolynomial p = opchain::charpoly_explicit(n);
        const bigint sub = p.coeff(static_cast<std::size_t>(n) - 1);
        if (!p.is_monic() || p.degree() != n ||
            sub != (n % 2 == 0 ? 0 : -1)) {
            why = "polynomial structure off at n = " + std::to_string(n);
            return false;
        }
    }
    return true;
}

bool scale_check(std::string& why) {
    const std::vector<bigint> f =
        opchain::series(10, 200, opchain::CountMethod::matrix).values;
    if (f.back().str() !=
        "7710655014645609386120789250039240538374924120604810") {
        why = "f(200) = " + f.back().str();
        return false;
    }
    const std::vector<bigint> full =
        opchain::recurrence_coefficients(opchain::charpoly_explicit(10));
    const std::vector<bigint> reduced = opchain::recurrence_coefficients(
        opchain::reduced_recurrence_poly(opchain::charpoly_explicit(10))
            .factor);
    // every index in the last full window must satisfy both recurrences
    for (std::size_t t = f.size() - 10; t < f.size(); ++t) {
        bigint by_full = 0;
        for (std::size_t r = 1; r <= full.size(); ++r) {
            by_full += full[r - 1] * f[t - r];
        }
        bigint by_reduced = 0;
        for (std::size_t r = 1; r <= reduced.size(); ++r) {
            by_reduced += reduced[r - 1] * f[t - r];
        }
        if (by_full != f[t] || by_reduced != f[t]) {
            why = "recurrences fail at k = " + std::to_string(t + 1);
            return false;
        }
    }
    return true;
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {"characteristic polynomial anchors (n = 2..5, three routes)", 1.0,
         charpoly_anchors},
        {"counting anchors (n = 3: 3, 5, 8 by every route)", 1.0,
         counting_anchors},
        {"Fibonacci closed forms and the expansion identity", 1.0,
         closed_forms},
        {"displayed power patterns (n = 3 and n = 6, both parities)", 1.0,
         power_patterns},
        {"reduced recurrence table, n = 7 divergence flagged", 1.0,
         table_reproduction},
        {"triple-oracle agreement (counts, polynomials, powers)", 30.0,
         triple_oracle},
        {"structural invariants (adjacency, initial counts, coefficients)",
         5.0, structural_invariants},
        {"scale check f(10, 200) with both recurrences", 5.0, scale_check},
    };

    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const Criterion& c = criteria[i];
        std::string why;
        const auto start = std::chrono::steady_clock::now();
        bool ok = false;
        try {
            ok = c.check(why);
        } catch (const std::exception& e) {
            why = std::string("exception: ") + e.what();
        }
        const double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                          start)
                .count();
        if (ok && elapsed > c.budget_seconds) {
            ok = false;
            why = "overran the " + std::to_string(c.budget_seconds) +
                  " s budget";
        }
        std::printf("%s criterion %zu: %s (%.3f s)%s%s\n",
                    ok ? "PASS" : "FAIL", i + 1, c.name.c_str(), elapsed,
                    why.empty() || ok ? "" : " -- ",
                    why.empty() || ok ? "" : why.c_str());
        if (!ok) {
            ++failures;
        }
    }
    if (failures > 0) {
        std::printf("%d of %zu criteria failed\n", failures, criteria.size());
        return 1;
    }
    std::printf("all %zu criteria passed\n", criteria.size());
    return 0;
}
