#ifndef DYSONCT_VERIFY_HPP
#define DYSONCT_VERIFY_HPP

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "dysonct/composition.hpp"
#include "dysonct/monomial.hpp"
#include "dysonct/oracle.hpp"

namespace dysonct {

/// The verification sweeps. Each enumerates its domain in lexicographic
/// order (compositions first, index tuples inside), so reports are
/// reproducible byte for byte.
enum class Suite {
    Dyson,              // oracle constant term == multinomial
    ThmF,               // closed form F == oracle coefficient
    ThmG,               // closed form G == oracle coefficient
    HDecomp,            // F/G == signed sums of H terms, as rationals
    HRecurrence,        // H_i(a) == sum_k H_i(a - e_k)
    BoundaryF,          // boundary identity for F at every zero entry
    BoundaryG,          // boundary identity for G at every zero entry
    RecursionVsOracle,  // memoized evaluator == oracle on degree-0 monomials
    Prop,               // the three linear-combination identities
    Corollary,          // the squared alternating sum identity
    Remark,             // the underlying polynomial identity
};

std::optional<Suite> parse_suite(const std::string& name);
std::string suite_name(Suite s);
const std::vector<Suite>& all_suites();

struct SweepConfig {
    int max_n = 3;
    int max_a = 2;
    OracleOptions oracle;
};

struct CaseResult {
    std::string params;
    std::string expected;
    std::string actual;
    bool pass = false;
    std::string method;  // oracle | closed | recursion
    bool capped = false; // recorded as a size-limit skip, never a pass
};

struct VerificationReport {
    std::string suite;  // requested suite names, comma-joined
    std::vector<CaseResult> cases;
    long long elapsed_ms = 0;

    int total() const { return static_cast<int>(cases.size()); }
    int passed() const;
    int failed() const { return total() - passed(); }
    bool any_capped() const;

    /// {"suite": str,
    ///  "cases": [{"params","expected","actual","pass","method"}...],
    ///  "summary": {"total","passed","failed","elapsed_ms"}}
    /// with all values serialized as decimal strings.
    nlohmann::ordered_json to_json() const;
};

/// Runs the requested suites (duplicates dropped, order kept) over all
/// compositions with n <= max_n and entries <= max_a.
VerificationReport run_suites(const std::vector<Suite>& suites, const SweepConfig& config);

/// All compositions of length n with entries in [0, max_entry], lexicographic.
std::vector<Composition> enumerate_compositions(int n, int max_entry);

/// All ordered k-tuples of distinct values from 1..n, lexicographic.
std::vector<std::vector<int>> enumerate_distinct_tuples(int n, int k);

/// All degree-0 exponent vectors of length n with entries in
/// [-max_abs, max_abs], lexicographic.
std::vector<ExponentVector> enumerate_degree0_monomials(int n, int max_abs);

}  // namespace dysonct

#endif
