#ifndef DYSONCT_ORACLE_HPP
#define DYSONCT_ORACLE_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "dysonct/composition.hpp"
#include "dysonct/laurent.hpp"

namespace dysonct {

struct OracleOptions {
    /// Cumulative intermediate term budget across one expansion or coefficient
    /// search. Exceeding it raises SizeLimitError.
    long long term_cap = 50'000'000;
};

/// Informational counters from one coefficient search.
struct OracleStats {
    std::size_t peak_terms = 0;
    long long cumulative_terms = 0;
};

/// One factor (1 - x_i/x_j)^exponent of the Dyson product.
struct FactorDescriptor {
    int i;
    int j;
    int exponent;
};

/// The full factor list of D_n(x,a), ordered by unordered pair {i,j} ascending
/// so the two factors of each pair sit next to each other, plus per-suffix
/// residual exponent bounds used to prune coefficient searches.
class FactorPlan {
public:
    explicit FactorPlan(const Composition& a);

    int vars() const { return n_; }
    const std::vector<FactorDescriptor>& factors() const { return factors_; }

    /// Inclusive range of total exponent variable v (1-based) can still
    /// receive from factors()[pos..]. pos == factors().size() gives {0,0}.
    std::pair<long long, long long> residual_range(std::size_t pos, int v) const;

private:
    int n_;
    std::vector<FactorDescriptor> factors_;
    std::vector<std::vector<std::pair<long long, long long>>> bounds_;
};

/// (1 - x_i/x_j)^e expanded over n variables (n defaults to max(i,j)).
/// Exactly e+1 terms when e >= 1. Errors when i == j.
SparseLaurentPoly expand_factor(int i, int j, int e, int n = 0);

/// Full exact expansion of D_n(x,a). Every term has degree 0.
SparseLaurentPoly expand_dyson(const Composition& a, const OracleOptions& opts = {});

/// Coefficient of prod x_i^{m_i} in D_n(x,a), computed by a pruned partial
/// product search; 0 whenever degree(m) != 0. This is the brute-force ground
/// truth the closed forms and the recursive evaluator are checked against.
Integer coefficient(const Composition& a, const ExponentVector& m, const OracleOptions& opts = {},
                    OracleStats* stats = nullptr);

/// coefficient(a, 0). Equals the multinomial coefficient for every a.
Integer constant_term(const Composition& a, const OracleOptions& opts = {});

}  // namespace dysonct

#endif
