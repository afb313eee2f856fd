// dyson-ct: exact coefficient queries against the Dyson product, verification
// sweeps with JSON reports, and expansion benchmarks.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or parse error,
// 3 resource cap exceeded.

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "dysonct/closed_forms.hpp"
#include "dysonct/errors.hpp"
#include "dysonct/good_recursion.hpp"
#include "dysonct/oracle.hpp"
#include "dysonct/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResourceCap = 3;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

dysonct::OracleOptions oracle_options_from_env() {
    dysonct::OracleOptions opts;
    const char* raw = std::getenv("DYSON_CT_TERM_CAP");
    if (raw == nullptr || *raw == '\0') return opts;
    long long cap = 0;
    const char* end = raw + std::string_view(raw).size();
    auto [ptr, ec] = std::from_chars(raw, end, cap);
    if (ec != std::errc{} || ptr != end || cap < 1) {
        throw UsageError(std::string("DYSON_CT_TERM_CAP must be a positive decimal integer, got '") +
                         raw + "'");
    }
    opts.term_cap = cap;
    return opts;
}

int run_coeff(const std::string& a_text, const std::string& mono_text,
              const std::string& method) {
    const dysonct::OracleOptions opts = oracle_options_from_env();
    const dysonct::Composition a = dysonct::Composition::parse(a_text);
    const dysonct::ExponentVector m = dysonct::parse_monomial(mono_text, a.size());

    dysonct::Integer value;
    if (method == "oracle") {
        value = dysonct::coefficient(a, m, opts);
    } else if (method == "recursion") {
        value = dysonct::evaluate(a, m);
    } else {
        const auto query = dysonct::classify_monomial(m);
        if (!query) {
            throw UsageError("--method closed answers only x_r^2/x_s^2 (+2/-2) or "
                             "x_r^2/(x_s x_t) (+2/-1/-1) shaped monomials; "
                             "use --method oracle or recursion for m=" +
                             m.str());
        }
        value = dysonct::closed_form(*query, a);
    }
    std::cout << value.get_str() << " (method: " << method << ")\n";
    return kExitOk;
}

int run_verify(int max_n, int max_a, const std::vector<std::string>& suite_names,
               const std::string& out_path) {
    dysonct::SweepConfig config;
    config.max_n = max_n;
    config.max_a = max_a;
    config.oracle = oracle_options_from_env();

    std::vector<dysonct::Suite> suites;
    if (suite_names.empty()) {
        suites = dysonct::all_suites();
    } else {
        for (const std::string& name : suite_names) {
            const auto suite = dysonct::parse_suite(name);
            if (!suite) throw UsageError("unknown suite '" + name + "'");
            suites.push_back(*suite);
        }
    }

    const dysonct::VerificationReport report = dysonct::run_suites(suites, config);
    const std::string rendered = report.to_json().dump(2) + "\n";

    if (out_path.empty()) {
        std::cout << rendered;
    } else {
        std::ofstream out(out_path);
        if (!out) throw std::runtime_error("cannot open '" + out_path + "' for writing");
        out << rendered;
        if (!out) throw std::runtime_error("failed writing '" + out_path + "'");
    }

    std::ostream& log = out_path.empty() ? std::cerr : std::cout;
    log << "suite " << report.suite << ": total=" << report.total()
        << " passed=" << report.passed() << " failed=" << report.failed()
        << " elapsed_ms=" << report.elapsed_ms << "\n";
    int shown = 0;
    for (const auto& c : report.cases) {
        if (c.pass) continue;
        if (shown == 20) {
            log << "  ... more failures omitted\n";
            break;
        }
        log << "  FAIL " << c.params << ": expected " << c.expected << ", actual " << c.actual
            << "\n";
        ++shown;
    }

    if (report.failed() == 0) return kExitOk;
    bool all_non_pass_capped = true;
    for (const auto& c : report.cases) {
        if (!c.pass && !c.capped) all_non_pass_capped = false;
    }
    return all_non_pass_capped ? kExitResourceCap : kExitVerifyFailure;
}

int run_bench(const std::string& a_text, const std::string& mono_text, int repeat) {
    const dysonct::OracleOptions opts = oracle_options_from_env();
    const dysonct::Composition a = dysonct::Composition::parse(a_text);
    const dysonct::ExponentVector m = dysonct::parse_monomial(mono_text, a.size());

    std::vector<double> times_ms;
    std::size_t peak_terms = 0;
    long long cumulative_terms = 0;
    dysonct::Integer value;
    for (int run = 1; run <= repeat; ++run) {
        dysonct::OracleStats stats;
        const auto start = std::chrono::steady_clock::now();
        value = dysonct::coefficient(a, m, opts, &stats);
        const auto end = std::chrono::steady_clock::now();
        const double ms = std::chrono::duration<double, std::milli>(end - start).count();
        times_ms.push_back(ms);
        peak_terms = std::max(peak_terms, stats.peak_terms);
        cumulative_terms = std::max(cumulative_terms, stats.cumulative_terms);
        std::cout << "run " << run << ": " << ms << " ms  value=" << value.get_str()
                  << " peak_terms=" << stats.peak_terms
                  << " cumulative_terms=" << stats.cumulative_terms << "\n";
    }
    std::sort(times_ms.begin(), times_ms.end());
    const double median = times_ms[times_ms.size() / 2];
    std::cout << "min " << times_ms.front() << " ms  median " << median
              << " ms  peak_terms " << peak_terms << "\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact coefficients of the Dyson product"};
    app.require_subcommand(1);

    std::string a_text;
    std::string mono_text;
    std::string method;
    auto* coeff = app.add_subcommand("coeff", "print one exact coefficient");
    coeff->add_option("--a", a_text, "composition, e.g. 2,1,1")->required();
    coeff->add_option("--mono", mono_text, "monomial, e.g. \"2,-2,0\" or \"x1^2/x2^2\"")
        ->required();
    coeff->add_option("--method", method, "oracle | closed | recursion")
        ->required()
        ->check(CLI::IsMember({"oracle", "closed", "recursion"}));

    int max_n = 0;
    int max_a = 0;
    std::vector<std::string> suite_names;
    std::string out_path;
    auto* verify = app.add_subcommand("verify", "run verification sweeps, write a JSON report");
    verify->add_option("--max-n", max_n, "largest number of variables")->required()
        ->check(CLI::Range(1, 16));
    verify->add_option("--max-a", max_a, "largest composition entry")->required()
        ->check(CLI::Range(0, 64));
    verify->add_option("--suite", suite_names, "suites to run (default: all)")->delimiter(',');
    verify->add_option("--out", out_path, "report path (default: stdout)");

    std::string bench_a;
    std::string bench_mono;
    int repeat = 1;
    auto* bench = app.add_subcommand("bench", "time oracle coefficient extraction");
    bench->add_option("--a", bench_a, "composition")->required();
    bench->add_option("--mono", bench_mono, "monomial")->required();
    bench->add_option("--repeat", repeat, "number of runs (default 1)")->check(CLI::Range(1, 1000));

    try {
        app.parse(argc, argv);
        if (coeff->parsed()) return run_coeff(a_text, mono_text, method);
        if (verify->parsed()) return run_verify(max_n, max_a, suite_names, out_path);
        if (bench->parsed()) return run_bench(bench_a, bench_mono, repeat);
        return kExitUsage;
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const dysonct::SizeLimitError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitResourceCap;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitVerifyFailure;
    }
}
