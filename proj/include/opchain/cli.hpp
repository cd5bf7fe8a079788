#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "opchain/adjacency.hpp"
#include "opchain/charpoly.hpp"
#include "opchain/counting.hpp"
#include "opchain/matrix.hpp"
#include "opchain/polynomial.hpp"
#include "opchain/recurrence.hpp"
#include "opchain/table.hpp"
#include "opchain/verify.hpp"

namespace opchain::cli {

using ordered_json = nlohmann::ordered_json;

// Every command fills one OutputRecord; the plain/csv/bfile formats render a
// view of the same data, so the JSON form is always the complete one.
struct OutputRecord {
    std::string command;
    ordered_json params = ordered_json::object();
    ordered_json result;
    std::vector<std::string> warnings;

    ordered_json to_json() const {
        ordered_json j;
        j["command"] = command;
        j["params"] = params;
        j["result"] = result;
        j["warnings"] = warnings;
        return j;
    }
};

namespace detail {

inline void emit_json(const OutputRecord& record, std::ostream& out) {
    out << record.to_json().dump(2) << "\n";
}

inline CountMethod parse_method(const std::string& name) {
    if (name == "matrix") {
        return CountMethod::matrix;
    }
    if (name == "recurrence") {
        return CountMethod::recurrence;
    }
    if (name == "enumerate") {
        return CountMethod::enumerate;
    }
    return CountMethod::closed_form;
}

inline ordered_json matrix_to_json(const BigMatrix& m) {
    ordered_json rows = ordered_json::array();
    for (std::size_t i = 0; i < m.size(); ++i) {
        ordered_json row = ordered_json::array();
        for (std::size_t j = 0; j < m.size(); ++j) {
            row.push_back(m.entry(i, j).str());
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

inline ordered_json values_to_json(const std::vector<bigint>& values) {
    ordered_json list = ordered_json::array();
    for (const bigint& v : values) {
        list.push_back(v.str());
    }
    return list;
}

inline std::string join_values(const std::vector<bigint>& values) {
    std::string s;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i > 0) {
            s += " ";
        }
        s += values[i].str();
    }
    return s;
}

inline int run_count(int n, long long k, const std::string& method,
                     const std::string& format, std::ostream& out) {
    bigint value;
    if (method == "closed") {
        std::optional<bigint> closed = count_closed_form(n, k);
        if (!closed) {
            throw std::domain_error("no closed form for n = " +
                                    std::to_string(n) +
                                    "; closed forms exist for n = 3 and n = 6");
        }
        value = std::move(*closed);
    } else if (method == "matrix") {
        value = count_matrix(n, k);
    } else if (method == "recurrence") {
        value = count_recurrence(n, k);
    } else {
        value = count_enumerate(n, k);
    }
    if (format == "json") {
        OutputRecord record;
        record.command = "count";
        record.params["n"] = n;
        record.params["k"] = k;
        record.params["method"] = method;
        record.result = value.str();
        emit_json(record, out);
    } else {
        out << value.str() << "\n";
    }
    return 0;
}

inline int run_series(int n, long long k_max, const std::string& method,
                      const std::string& format, std::ostream& out) {
    const CountSeries s = series(n, k_max, parse_method(method));
    if (format == "json") {
        OutputRecord record;
        record.command = "series";
        record.params["n"] = n;
        record.params["k_max"] = k_max;
        record.params["method"] = method;
        record.result = values_to_json(s.values);
        emit_json(record, out);
    } else if (format == "csv") {
        out << "k,f\n";
        for (std::size_t i = 0; i < s.values.size(); ++i) {
            out << i + 1 << "," << s.values[i].str() << "\n";
        }
    } else if (format == "bfile") {
        for (std::size_t i = 0; i < s.values.size(); ++i) {
            out << i + 1 << " " << s.values[i].str() << "\n";
        }
    } else {
        for (const bigint& v : s.values) {
            out << v.str() << "\n";
        }
    }
    return 0;
}

inline int run_charpoly(int n, const std::string& method,
                        const std::string& format, std::ostream& out) {
    IntPolynomial p;
    if (method == "explicit") {
        p = charpoly_explicit(n);
    } else if (method == "recurrence") {
        p = charpoly_recurrence(n);
    } else {
        p = charpoly_determinant(adjacency_matrix(n));
    }
    if (format == "json") {
        OutputRecord record;
        record.command = "charpoly";
        record.params["n"] = n;
        record.params["method"] = method;
        ordered_json result;
        result["degree"] = p.degree();
        result["coefficients"] = values_to_json(p.coeffs_high_to_low());
        result["text"] = p.str("x");
        record.result = std::move(result);
        emit_json(record, out);
    } else {
        out << p.str("x") << "\n";
    }
    return 0;
}

inline int run_recurrence(int n, bool reduced, const std::string& format,
                          std::ostream& out) {
    const IntPolynomial full = charpoly_explicit(n);
    IntPolynomial p = full;
    std::optional<std::size_t> shift;
    if (reduced) {
        ReducedPoly r = reduced_recurrence_poly(full);
        p = std::move(r.factor);
        shift = r.shift;
    }
    const std::vector<bigint> coefficients = recurrence_coefficients(p);
    const std::vector<bigint> initial = opchain::detail::count_matrix_series(
        n, static_cast<long long>(coefficients.size()));
    if (format == "json") {
        OutputRecord record;
        record.command = "recurrence";
        record.params["n"] = n;
        record.params["reduced"] = reduced;
        ordered_json result;
        result["order"] = coefficients.size();
        if (shift) {
            result["shift"] = *shift;
        }
        result["coefficients"] = values_to_json(coefficients);
        result["initial"] = values_to_json(initial);
        result["relation"] = format_relation(p);
        record.result = std::move(result);
        emit_json(record, out);
    } else {
        out << format_relation(p) << "\n";
        if (shift) {
            out << "shift: " << *shift << "\n";
        }
        out << "coefficients: " << join_values(coefficients) << "\n";
        out << "initial: " << join_values(initial) << "\n";
    }
    return 0;
}

inline int run_matrix(int n, const std::string& format, std::ostream& out) {
    const ZeroOneMatrix a = adjacency_matrix(n);
    if (format == "json") {
        OutputRecord record;
        record.command = "matrix";
        record.params["n"] = n;
        record.result = matrix_to_json(to_big(a));
        emit_json(record, out);
    } else {
        for (std::size_t i = 0; i < a.size(); ++i) {
            for (std::size_t j = 0; j < a.size(); ++j) {
                out << a.entry(i, j);
            }
            out << "\n";
        }
    }
    return 0;
}

inline int run_power(int n, long long k, const std::string& method,
                     const std::string& format, std::ostream& out) {
    if (k < 1) {
        throw std::domain_error("matrix power exponent k must be >= 1");
    }
    const BigMatrix a = to_big(adjacency_matrix(n));
    const std::uint64_t m = static_cast<std::uint64_t>(k);
    const BigMatrix p = method == "recurrent" ? matrix_power_recurrent(a, m)
                                              : matrix_power_direct(a, m);
    if (format == "json") {
        OutputRecord record;
        record.command = "power";
        record.params["n"] = n;
        record.params["k"] = k;
        record.params["method"] = method;
        record.result = matrix_to_json(p);
        emit_json(record, out);
    } else {
        for (std::size_t i = 0; i < p.size(); ++i) {
            for (std::size_t j = 0; j < p.size(); ++j) {
                if (j > 0) {
                    out << " ";
                }
                out << p.entry(i, j).str();
            }
            out << "\n";
        }
    }
    return 0;
}

inline int run_table(int n_min, int n_max, const std::string& format,
                     std::ostream& out) {
    const std::vector<TableRow> rows = recurrence_table(n_min, n_max);
    OutputRecord record;
    record.command = "table";
    record.params["n_min"] = n_min;
    record.params["n_max"] = n_max;
    ordered_json list = ordered_json::array();
    for (const TableRow& row : rows) {
        ordered_json j;
        j["n"] = row.n;
        j["shift"] = row.shift;
        j["coefficients"] = values_to_json(row.reduced.coeffs_high_to_low());
        j["relation"] = row.relation;
        if (row.matches_published) {
            j["matches_published"] = *row.matches_published;
        } else {
            j["matches_published"] = nullptr;
        }
        j["note"] = row.note;
        list.push_back(std::move(j));
        if (!row.note.empty()) {
            record.warnings.push_back("n = " + std::to_string(row.n) + ": " +
                                      row.note);
        }
    }
    record.result = std::move(list);
    if (format == "json") {
        emit_json(record, out);
    } else {
        for (const TableRow& row : rows) {
            out << "n = " << row.n << ": " << row.relation;
            if (row.matches_published && !*row.matches_published) {
                out << "  [differs from published row]";
            }
            out << "\n";
        }
        for (const std::string& w : record.warnings) {
            out << "warning: " << w << "\n";
        }
    }
    return 0;
}

inline int run_verify(int n_max, long long k_max, const std::string& format,
                      std::ostream& out) {
    VerifyOptions options;
    options.enumeration_n_max = n_max;
    options.enumeration_k_max = k_max;
    const std::vector<PropertyResult> results = run_verification(options);
    const bool ok = all_passed(results);
    if (format == "json") {
        OutputRecord record;
        record.command = "verify";
        record.params["n_max"] = n_max;
        record.params["k_max"] = k_max;
        ordered_json list = ordered_json::array();
        for (const PropertyResult& r : results) {
            ordered_json j;
            j["name"] = r.name;
            j["passed"] = r.passed;
            j["detail"] = r.detail;
            list.push_back(std::move(j));
        }
        ordered_json result;
        result["properties"] = std::move(list);
        result["all_passed"] = ok;
        record.result = std::move(result);
        emit_json(record, out);
    } else {
        std::size_t passed = 0;
        for (const PropertyResult& r : results) {
            if (r.passed) {
                ++passed;
                out << "PASS " << r.name << " (" << r.detail << ")\n";
            } else {
                out << "FAIL " << r.name << ": " << r.detail << "\n";
            }
        }
        out << "passed " << passed << " of " << results.size()
            << " properties\n";
    }
    return ok ? 0 : 1;
}

}  // namespace detail

// Parses and executes one command line. Exit status: 0 on success, the
// CLI11 status on usage problems, 2 on domain errors, 3 when the enumeration
// guard trips, 1 when verification finds a failing property.
inline int run(std::vector<std::string> args, std::ostream& out,
               std::ostream& err) {
    CLI::App app{"exact counts of meaningful operator compositions",
                 "opchain"};
    app.require_subcommand(1);

    int count_n = 0;
    long long count_k = 0;
    std::string count_method = "matrix";
    std::string count_format = "plain";
    CLI::App* count_cmd =
        app.add_subcommand("count", "number of meaningful order-k compositions");
    count_cmd->add_option("--n", count_n, "space dimension")->required();
    count_cmd->add_option("--k", count_k, "composition order")->required();
    count_cmd
        ->add_option("--method", count_method,
                     "matrix, recurrence, enumerate, or closed")
        ->check(CLI::IsMember({"matrix", "recurrence", "enumerate", "closed"}));
    count_cmd->add_option("--format", count_format, "plain or json")
        ->check(CLI::IsMember({"plain", "json"}));

    int series_n = 0;
    long long series_k_max = 0;
    std::string series_method = "matrix";
    std::string series_format = "plain";
    CLI::App* series_cmd =
        app.add_subcommand("series", "counts for every order 1..k-max");
    series_cmd->add_option("--n", series_n, "space dimension")->required();
    series_cmd->add_option("--k-max", series_k_max, "largest order")
        ->required();
    series_cmd
        ->add_option("--method", series_method,
                     "matrix, recurrence, enumerate, or closed")
        ->check(CLI::IsMember({"matrix", "recurrence", "enumerate", "closed"}));
    series_cmd
        ->add_option("--format", series_format, "plain, json, csv, or bfile")
        ->check(CLI::IsMember({"plain", "json", "csv", "bfile"}));

    int charpoly_n = 0;
    std::string charpoly_method = "explicit";
    std::string charpoly_format = "plain";
    CLI::App* charpoly_cmd = app.add_subcommand(
        "charpoly", "characteristic polynomial of the composability matrix");
    charpoly_cmd->add_option("--n", charpoly_n, "space dimension")->required();
    charpoly_cmd
        ->add_option("--method", charpoly_method,
                     "explicit, recurrence, or determinant")
        ->check(CLI::IsMember({"explicit", "recurrence", "determinant"}));
    charpoly_cmd->add_option("--format", charpoly_format, "plain or json")
        ->check(CLI::IsMember({"plain", "json"}));

    int recurrence_n = 0;
    bool recurrence_reduced = false;
    std::string recurrence_format = "plain";
    CLI::App* recurrence_cmd = app.add_subcommand(
        "recurrence", "recurrence coefficients and initial values");
    recurrence_cmd->add_option("--n", recurrence_n, "space dimension")
        ->required();
    recurrence_cmd->add_flag("--reduced", recurrence_reduced,
                             "use the reduced polynomial");
    recurrence_cmd->add_option("--format", recurrence_format, "plain or json")
        ->check(CLI::IsMember({"plain", "json"}));

    int matrix_n = 0;
    std::string matrix_format = "plain";
    CLI::App* matrix_cmd =
        app.add_subcommand("matrix", "composability adjacency matrix");
    matrix_cmd->add_option("--n", matrix_n, "space dimension")->required();
    matrix_cmd->add_option("--format", matrix_format, "plain or json")
        ->check(CLI::IsMember({"plain", "json"}));

    int power_n = 0;
    long long power_k = 0;
    std::string power_method = "direct";
    std::string power_format = "plain";
    CLI::App* power_cmd =
        app.add_subcommand("power", "k-th power of the adjacency matrix");
    power_cmd->add_option("--n", power_n, "space dimension")->required();
    power_cmd->add_option("--k", power_k, "exponent")->required();
    power_cmd->add_option("--method", power_method, "direct or recurrent")
        ->check(CLI::IsMember({"direct", "recurrent"}));
    power_cmd->add_option("--format", power_format, "plain or json")
        ->check(CLI::IsMember({"plain", "json"}));

    int table_n_min = 0;
    int table_n_max = 0;
    std::string table_format = "plain";
    CLI::App* table_cmd = app.add_subcommand(
        "table", "reduced recurrences per dimension, checked against the "
                 "published rows");
    table_cmd->add_option("--n-min", table_n_min, "first dimension")
        ->required();
    table_cmd->add_option("--n-max", table_n_max, "last dimension")
        ->required();
    table_cmd->add_option("--format", table_format, "plain or json")
        ->check(CLI::IsMember({"plain", "json"}));

    int verify_n_max = 8;
    long long verify_k_max = 10;
    std::string verify_format = "plain";
    CLI::App* verify_cmd =
        app.add_subcommand("verify", "run the full cross-validation suite");
    verify_cmd->add_option("--n-max", verify_n_max,
                           "largest dimension for enumeration checks");
    verify_cmd->add_option("--k-max", verify_k_max,
                           "largest order for enumeration checks");
    verify_cmd->add_option("--format", verify_format, "plain or json")
        ->check(CLI::IsMember({"plain", "json"}));

    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err);
    }

    try {
        if (*count_cmd) {
            return detail::run_count(count_n, count_k, count_method,
                                     count_format, out);
        }
        if (*series_cmd) {
            return detail::run_series(series_n, series_k_max, series_method,
                                      series_format, out);
        }
        if (*charpoly_cmd) {
            return detail::run_charpoly(charpoly_n, charpoly_method,
                                        charpoly_format, out);
        }
        if (*recurrence_cmd) {
            return detail::run_recurrence(recurrence_n, recurrence_reduced,
                                          recurrence_format, out);
        }
        if (*matrix_cmd) {
            return detail::run_matrix(matrix_n, matrix_format, out);
        }
        if (*power_cmd) {
            return detail::run_power(power_n, power_k, power_method,
                                     power_format, out);
        }
        if (*table_cmd) {
            return detail::run_table(table_n_min, table_n_max, table_format,
                                     out);
        }
        return detail::run_verify(verify_n_max, verify_k_max, verify_format,
                                  out);
    } catch (const enumeration_limit_error& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace opchain::cli
