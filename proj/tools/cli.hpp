#pragma once

/**
 * @file cli.hpp
 * @brief The adjinv command line.
 *
 *   adjinv <subcommand> <matrix-file> [--rhs "t1 ... tk" | --rhs-file PATH]
 *          [--method eq1|eq2|auto] [--decimal N] [--json] [--threads N]
 *
 * Exit codes: 0 success, 1 usage, 2 input parse error, 3 mathematical
 * precondition violated, 4 verification failure.
 */

#include <CLI11.hpp>
#include <json.hpp>

#include <ostream>
#include <optional>
#include <string>
#include <vector>

#include "adjinv/adjinv.hpp"
#include "worked_examples.hpp"

namespace adjinv::cli {

enum ExitCode : int { ok = 0, usage = 1, parse_failure = 2, precondition = 3, verification = 4 };

struct Invocation {
    std::string subcommand;
    std::string matrix_path;
    std::optional<std::string> rhs;
    std::optional<std::string> rhs_file;
    std::string method = "auto";
    std::optional<unsigned> decimal;
    bool json = false;
    unsigned threads = default_thread_count();
};

/// Raised for well-formed syntax that is still meaningless (e.g. both RHS sources).
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

namespace detail {

using json = nlohmann::ordered_json;

inline OutputFormat output_format(const Invocation& inv) {
    OutputFormat fmt;
    if (inv.decimal) {
        fmt.mode = OutputFormat::Mode::decimal;
        fmt.digits = *inv.decimal;
    }
    fmt.layout = inv.json ? OutputFormat::Layout::json : OutputFormat::Layout::plain;
    return fmt;
}

inline bool needs_rhs(const std::string& sub) {
    return sub == "solve-lsq" || sub == "solve-row" || sub == "solve-drazin";
}

inline std::optional<Matrix> load_rhs(const Invocation& inv) {
    if (inv.rhs && inv.rhs_file) throw UsageError("--rhs and --rhs-file are mutually exclusive");
    if (inv.rhs) return parse_vector(*inv.rhs);
    if (inv.rhs_file) {
        Matrix v = read_matrix_file(*inv.rhs_file);
        if (!v.is_vector()) throw UsageError("--rhs-file must hold an n x 1 or 1 x n matrix");
        return v;
    }
    return std::nullopt;
}

/// Matrix result plus its representation ledger.
inline void emit_matrix(std::ostream& out, const Matrix& m, const OutputFormat& fmt, const std::string& method = {},
                        const std::optional<Scalar>& denominator = std::nullopt, const json& extra = {}) {
    if (fmt.layout == OutputFormat::Layout::json) {
        json j = matrix_json(m, fmt);
        if (denominator) j["denominator"] = to_string(*denominator);
        if (!method.empty()) j["method"] = method;
        for (const auto& [k, v] : extra.items()) j[k] = v;
        out << j.dump() << '\n';
        return;
    }
    if (!method.empty() || denominator || !extra.empty()) {
        out << '#';
        if (!method.empty()) out << " method: " << method;
        if (denominator) out << " denominator: " << to_string(*denominator);
        for (const auto& [k, v] : extra.items()) out << ' ' << k << ": " << v.dump();
        out << '\n';
    }
    out << format_output(m, fmt);
}

inline void emit_solution(std::ostream& out, const SolveReport& s, const OutputFormat& fmt) {
    if (fmt.layout == OutputFormat::Layout::json) {
        json j = matrix_json(s.solution, fmt);
        j["denominator"] = to_string(s.denominator);
        j["method"] = std::string(to_string(s.method));
        json num = json::array();
        for (const auto& v : s.numerators) num.push_back(to_string(v));
        j["numerators"] = std::move(num);
        j["transformed_rhs"] = matrix_json(s.transformed_rhs)["entries"];
        out << j.dump() << '\n';
        return;
    }
    out << "# method: " << to_string(s.method) << " denominator: " << to_string(s.denominator)
        << " transformed_rhs: " << format_tuple(s.transformed_rhs) << '\n';
    out << format_tuple(s.solution, fmt) << '\n';
}

inline void emit_count(std::ostream& out, const char* key, std::size_t value, const OutputFormat& fmt) {
    if (fmt.layout == OutputFormat::Layout::json) {
        json j;
        j[key] = value;
        out << j.dump() << '\n';
    } else {
        out << value << '\n';
    }
}

inline void emit_report(std::ostream& out, const std::vector<VerifyReport::Check>& checks, const OutputFormat& fmt) {
    if (fmt.layout == OutputFormat::Layout::json) {
        json arr = json::array();
        for (const auto& c : checks) arr.push_back({{"name", c.name}, {"passed", c.passed}});
        json j;
        j["checks"] = std::move(arr);
        out << j.dump() << '\n';
        return;
    }
    for (const auto& c : checks) out << (c.passed ? "PASS " : "FAIL ") << c.name << '\n';
}

inline void append(std::vector<VerifyReport::Check>& all, const std::string& prefix, const VerifyReport& r) {
    for (const auto& c : r.checks) all.push_back({prefix + c.name, c.passed});
}

/// Recompute every result for `a` and check it against the defining equations and the oracles.
inline int run_verify(std::ostream& out, const Matrix& a, const std::optional<Matrix>& rhs, const Invocation& inv,
                      const OutputFormat& fmt) {
    const ComputeOptions opts{inv.threads};
    std::vector<VerifyReport::Check> checks;
    const PinvResult p = mp_inverse(a, {PinvChoice::automatic, inv.threads});
    append(checks, "pinv: ", check_penrose(a, p.pseudo_inverse));
    checks.push_back({"pinv: equals rank-factorization oracle", p.pseudo_inverse == oracle_pinv(a)});
    checks.push_back({"pinv: A+A equals P", projector_p(a, opts) == p.pseudo_inverse * a});
    checks.push_back({"pinv: AA+ equals Q", projector_q(a, opts) == a * p.pseudo_inverse});
    if (a.is_square()) {
        const DrazinResult d = drazin_inverse(a, opts);
        append(checks, "drazin: ", check_drazin(a, d.drazin_inverse, d.index));
        checks.push_back({"drazin: equals A^k (A^{2k+1})+ A^k oracle", d.drazin_inverse == oracle_drazin(a)});
        checks.push_back({"drazin: A^D A equals product", drazin_times_a(a, opts) == d.drazin_inverse * a});
    }
    if (rhs) {
        const Matrix y = rhs->cols() == 1 ? *rhs : transpose(*rhs);
        if (y.rows() == a.rows()) {
            const SolveReport s = lsq_solve(a, y, opts);
            checks.push_back({"solve-lsq: x equals A+ y", s.solution == p.pseudo_inverse * y});
        }
        if (a.is_square() && y.rows() == a.rows()) {
            const SolveReport s = drazin_solve(a, y, opts);
            const Matrix ak = power(a, index_of(a));
            checks.push_back({"solve-drazin: A^{k+1} x = A^k y", ak * a * s.solution == ak * y});
            checks.push_back({"solve-drazin: x in R(A^k)", range_membership(ak, s.solution)});
        }
    }
    emit_report(out, checks, fmt);
    for (const auto& c : checks)
        if (!c.passed) return verification;
    return ok;
}

inline int run_paper_examples(std::ostream& out, const Invocation& inv, const OutputFormat& fmt) {
    const auto checks = examples::run_worked_examples(inv.threads);
    bool all = true;
    if (fmt.layout == OutputFormat::Layout::json) {
        json arr = json::array();
        for (const auto& c : checks)
            arr.push_back({{"name", c.name}, {"expected", c.expected}, {"actual", c.actual}, {"passed", c.passed}});
        json j;
        j["checks"] = std::move(arr);
        out << j.dump() << '\n';
    }
    for (const auto& c : checks) {
        all = all && c.passed;
        if (fmt.layout == OutputFormat::Layout::plain) {
            out << (c.passed ? "ok   " : "FAIL ") << c.name << " = " << c.actual;
            if (!c.passed) out << " (expected " << c.expected << ")";
            out << '\n';
        }
    }
    return all ? ok : verification;
}

inline int dispatch(const Invocation& inv, std::ostream& out) {
    const OutputFormat fmt = output_format(inv);
    const ComputeOptions opts{inv.threads};
    const std::string& sub = inv.subcommand;

    if (inv.method != "auto" && sub != "pinv") throw UsageError("--method applies to 'pinv' only");
    if ((inv.rhs || inv.rhs_file) && !needs_rhs(sub) && sub != "verify")
        throw UsageError("'" + sub + "' takes no right-hand side");

    if (sub == "paper-examples") return run_paper_examples(out, inv, fmt);

    const Matrix a = read_matrix_file(inv.matrix_path);
    const std::optional<Matrix> rhs = load_rhs(inv);
    if (needs_rhs(sub) && !rhs) throw UsageError("'" + sub + "' needs --rhs or --rhs-file");

    if (sub == "pinv") {
        PinvChoice choice = inv.method == "eq1"   ? PinvChoice::eq1
                            : inv.method == "eq2" ? PinvChoice::eq2
                                                  : PinvChoice::automatic;
        const PinvResult p = mp_inverse(a, {choice, inv.threads});
        emit_matrix(out, p.pseudo_inverse, fmt, std::string(to_string(p.representation_used)), p.denominator);
    } else if (sub == "drazin" || sub == "group-inverse") {
        const DrazinResult d = sub == "drazin" ? drazin_inverse(a, opts) : group_inverse(a, opts);
        const std::string method = d.index == 0 ? "classical_inverse" : d.rank_core == 0 ? "zero" : "eq11";
        emit_matrix(out, d.drazin_inverse, fmt, method, d.denominator, {{"index", d.index}});
    } else if (sub == "proj-p") {
        emit_matrix(out, projector_p(a, opts), fmt);
    } else if (sub == "proj-q") {
        emit_matrix(out, projector_q(a, opts), fmt);
    } else if (sub == "drazin-a") {
        emit_matrix(out, drazin_times_a(a, opts), fmt);
    } else if (sub == "rank") {
        emit_count(out, "rank", rank(a), fmt);
    } else if (sub == "index") {
        emit_count(out, "index", index_of(a), fmt);
    } else if (sub == "charpoly") {
        const auto d = char_poly_coeffs(a, opts);
        const Matrix v = Matrix::column(d);
        if (fmt.layout == OutputFormat::Layout::json) {
            json arr = json::array();
            for (const auto& c : d) arr.push_back(format_scalar(c, fmt));
            json j;
            j["coefficients"] = std::move(arr);
            out << j.dump() << '\n';
        } else {
            out << format_tuple(v, fmt) << '\n';
        }
    } else if (sub == "solve-lsq") {
        emit_solution(out, lsq_solve(a, *rhs, opts), fmt);
    } else if (sub == "solve-row") {
        emit_solution(out, lsq_solve_row_system(*rhs, a, opts), fmt);
    } else if (sub == "solve-drazin") {
        emit_solution(out, drazin_solve(a, *rhs, opts), fmt);
    } else if (sub == "verify") {
        return run_verify(out, a, rhs, inv, fmt);
    } else {
        throw UsageError("unknown subcommand '" + sub + "'");
    }
    return ok;
}

}  // namespace detail

inline const std::vector<std::string>& subcommands() {
    static const std::vector<std::string> names{"pinv",     "drazin",    "group-inverse", "proj-p",    "proj-q",
                                                "drazin-a", "rank",      "index",         "charpoly",  "solve-lsq",
                                                "solve-row", "solve-drazin", "verify",    "paper-examples"};
    return names;
}

/// Parse `args` (without the program name), run, and return the exit status.
inline int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact generalized inverses by determinantal representations", "adjinv"};
    app.require_subcommand(1);
    Invocation inv;

    for (const auto& name : subcommands()) {
        CLI::App* sub = app.add_subcommand(name);
        if (name != "paper-examples") sub->add_option("matrix-file", inv.matrix_path, "Matrix file")->required();
        sub->add_option("--rhs", inv.rhs, "Right-hand side entries, whitespace separated");
        sub->add_option("--rhs-file", inv.rhs_file, "Right-hand side as an n x 1 or 1 x n matrix file");
        sub->add_option("--method", inv.method, "Moore-Penrose representation")
            ->check(CLI::IsMember({"eq1", "eq2", "auto"}));
        sub->add_option("--decimal", inv.decimal, "Print decimals rounded to N digits");
        sub->add_flag("--json", inv.json, "JSON output");
        sub->add_option("--threads", inv.threads, "Worker threads for minor sums")->check(CLI::PositiveNumber);
        sub->callback([&inv, name] { inv.subcommand = name; });
    }

    std::vector<const char*> argv{"adjinv"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? ok : usage;
    }

    try {
        return detail::dispatch(inv, out);
    } catch (const UsageError& e) {
        err << "adjinv: " << e.what() << '\n' << app.help();
        return usage;
    } catch (const ParseError& e) {
        err << "adjinv: parse error";
        if (e.line() != 0) err << " at line " << e.line() << ", column " << e.column();
        err << ": " << e.what() << '\n';
        return parse_failure;
    } catch (const DimensionError& e) {
        err << "adjinv: " << e.what() << '\n';
        return precondition;
    } catch (const PreconditionError& e) {
        err << "adjinv: " << e.what() << '\n';
        return precondition;
    } catch (const InternalError& e) {
        err << "adjinv: internal check failed: " << e.what() << '\n';
        return verification;
    }
}

}  // namespace adjinv::cli
