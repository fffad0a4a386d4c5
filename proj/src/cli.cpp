#include "apoly/cli.hpp"

#include <CLI11.hpp>

#include <atomic>
#include <charconv>
#include <functional>
#include <optional>
#include <ostream>
#include <thread>
#include <vector>

#include "apoly/render.hpp"

namespace apoly {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitComputation = 1;
constexpr int kExitUsage = 2;

std::optional<std::pair<long, long>> parse_range(const std::string& text) {
    auto sep = text.find("..");
    if (sep == std::string::npos) return std::nullopt;
    auto parse_int = [](std::string_view s, long& value) {
        if (s.empty()) return false;
        auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
        return ec == std::errc{} && ptr == s.data() + s.size();
    };
    long lo = 0, hi = 0;
    if (!parse_int(std::string_view(text).substr(0, sep), lo)) return std::nullopt;
    if (!parse_int(std::string_view(text).substr(sep + 2), hi)) return std::nullopt;
    return std::make_pair(lo, hi);
}

std::vector<int> range_values(long lo, long hi) {
    std::vector<int> ns;
    for (long n = lo; n <= hi; ++n) ns.push_back(static_cast<int>(n));
    return ns;
}

// Evaluates fn over ns concurrently; results come back in ascending-n
// order no matter which worker finishes first.  A thrown exception is
// captured as the error string of its slot.
template <typename R>
std::vector<std::pair<std::optional<R>, std::string>> map_over_range(
    const std::vector<int>& ns, const std::function<R(int)>& fn) {
    std::vector<std::pair<std::optional<R>, std::string>> results(ns.size());
    if (ns.empty()) return results;
    std::atomic<std::size_t> next{0};
    unsigned workers = std::max(1u, std::thread::hardware_concurrency());
    workers = static_cast<unsigned>(std::min<std::size_t>(workers, ns.size()));
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned t = 0; t < workers; ++t) {
        pool.emplace_back([&] {
            for (std::size_t i; (i = next.fetch_add(1)) < ns.size();) {
                try {
                    results[i].first = fn(ns[i]);
                } catch (const std::exception& ex) {
                    results[i].second = ex.what();
                }
            }
        });
    }
    for (auto& worker : pool) worker.join();
    return results;
}

std::string csv_cell(const std::string& raw) {
    std::string quoted = "\"";
    for (char c : raw) {
        if (c == '"') quoted += "\"\"";
        else quoted += c;
    }
    quoted += "\"";
    return quoted;
}

int cmd_compute(int n, const std::string& method, const std::string& format,
                std::ostream& out, std::ostream& err) {
    LaurentPoly poly;
    std::string method_label = method;
    try {
        if (method == "all") {
            VerifyReport report = verify(n);
            if (!report.agree) {
                err << "error: methods disagree at n=" << n << "\n";
                return kExitComputation;
            }
            poly = report.canonical;
        } else {
            auto m = method_from_name(method);
            APoly a = (*m == Method::Explicit)       ? a_poly_explicit(n)
                      : (*m == Method::Substitution) ? a_poly_substitution(n)
                                                     : a_poly_resultant(n);
            poly = std::move(a.poly);
        }
    } catch (const std::exception& ex) {
        err << "error: " << ex.what() << "\n";
        return kExitComputation;
    }

    if (format == "text") {
        out << "A_" << n << "(L,M) = " << to_text(poly) << "\n";
    } else if (format == "latex") {
        out << "A_{" << n << "}(L,M) = " << to_latex(poly) << "\n";
    } else {
        ordered_json record;
        record["n"] = n;
        record["method"] = method_label;
        record["polynomial"] = terms_json(poly);
        out << record.dump() << "\n";
    }
    return kExitOk;
}

int cmd_verify(long lo, long hi, const std::string& format,
               const std::optional<Method>& corrupt, std::ostream& out, std::ostream& err) {
    std::vector<int> ns = range_values(lo, hi);
    auto results = map_over_range<VerifyReport>(
        ns, [&](int n) { return verify(n, false, corrupt); });

    bool all_agree = true;
    for (std::size_t i = 0; i < ns.size(); ++i) {
        const auto& [report, error] = results[i];
        if (!report) {
            err << "error: n=" << ns[i] << ": " << error << "\n";
            return kExitComputation;
        }
        if (!report->agree) all_agree = false;
        if (format == "json") {
            out << verify_record(*report).dump() << "\n";
        } else {
            char timings[160];
            std::snprintf(timings, sizeof(timings),
                          "explicit=%.3fms substitution=%.3fms resultant=%.3fms",
                          report->per_method.at(Method::Explicit).elapsed_ms,
                          report->per_method.at(Method::Substitution).elapsed_ms,
                          report->per_method.at(Method::Resultant).elapsed_ms);
            out << "n=" << ns[i] << " " << (report->agree ? "agree" : "DISAGREE") << " "
                << timings << "\n";
        }
    }
    if (!all_agree) {
        err << "verification failed: methods disagree\n";
        return kExitComputation;
    }
    return kExitOk;
}

int cmd_table(long lo, long hi, const std::string& format, std::ostream& out,
              std::ostream& err) {
    std::vector<int> ns = range_values(lo, hi);
    auto results = map_over_range<APoly>(ns, [](int n) { return a_poly_explicit(n); });
    for (std::size_t i = 0; i < ns.size(); ++i) {
        if (!results[i].first) {
            err << "error: n=" << ns[i] << ": " << results[i].second << "\n";
            return kExitComputation;
        }
    }

    if (format == "csv") {
        out << "n,polynomial\n";
        for (std::size_t i = 0; i < ns.size(); ++i) {
            out << ns[i] << "," << csv_cell(terms_json(results[i].first->poly).dump()) << "\n";
        }
    } else {
        out << "\\begin{tabular}{rl}\n$n$ & $A_n(L,M)$ \\\\\n\\hline\n";
        for (std::size_t i = 0; i < ns.size(); ++i) {
            out << "$" << ns[i] << "$ & $" << to_latex(results[i].first->poly) << "$ \\\\\n";
        }
        out << "\\end{tabular}\n";
    }
    return kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact A-polynomials of twist knots K_n = J(2,2n)"};
    app.require_subcommand(1);

    int n = 0;
    std::string compute_method = "all";
    std::string compute_format = "text";
    auto* compute = app.add_subcommand("compute", "Compute the A-polynomial of K_n");
    compute->add_option("-n,--index", n, "Twist parameter n (any sign)")->required();
    compute->add_option("--method", compute_method, "Pipeline to run")
        ->check(CLI::IsMember({"all", "explicit", "substitution", "resultant"}));
    compute->add_option("--format", compute_format, "Output format")
        ->check(CLI::IsMember({"text", "latex", "json"}));

    std::string verify_range;
    std::string verify_format = "text";
    std::string corrupt_name;
    auto* verify_cmd = app.add_subcommand("verify", "Cross-check all methods over a range of n");
    verify_cmd->add_option("--range", verify_range, "Inclusive range a..b")->required();
    verify_cmd->add_option("--format", verify_format, "Output format")
        ->check(CLI::IsMember({"text", "json"}));
    verify_cmd
        ->add_option("--corrupt", corrupt_name,
                     "Deliberately corrupt one method (self-test hook)")
        ->check(CLI::IsMember({"explicit", "substitution", "resultant"}));

    std::string table_range;
    std::string table_format;
    auto* table = app.add_subcommand("table", "Tabulate A-polynomials over a range of n");
    table->add_option("--range", table_range, "Inclusive range a..b")->required();
    table->add_option("--format", table_format, "Output format")
        ->required()
        ->check(CLI::IsMember({"latex", "csv"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    if (compute->parsed()) return cmd_compute(n, compute_method, compute_format, out, err);

    if (verify_cmd->parsed()) {
        auto range = parse_range(verify_range);
        if (!range) {
            err << "error: malformed range '" << verify_range << "' (expected a..b)\n";
            return kExitUsage;
        }
        std::optional<Method> corrupt;
        if (!corrupt_name.empty()) corrupt = method_from_name(corrupt_name);
        return cmd_verify(range->first, range->second, verify_format, corrupt, out, err);
    }

    auto range = parse_range(table_range);
    if (!range) {
        err << "error: malformed range '" << table_range << "' (expected a..b)\n";
        return kExitUsage;
    }
    return cmd_table(range->first, range->second, table_format, out, err);
}

}  // namespace apoly
