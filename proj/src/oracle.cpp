#include "dysonct/oracle.hpp"

#include <algorithm>
#include <stdexcept>

#include "dysonct/errors.hpp"

namespace dysonct {

namespace {

void charge_terms(long long added, long long& cumulative, long long cap) {
    cumulative += added;
    if (cumulative > cap) {
        throw SizeLimitError("term cap of " + std::to_string(cap) +
                             " intermediate entries exceeded");
    }
}

SparseLaurentPoly multiply_capped(const SparseLaurentPoly& a, const SparseLaurentPoly& b,
                                  long long& cumulative, long long cap) {
    SparseLaurentPoly out = a * b;
    charge_terms(static_cast<long long>(out.term_count()), cumulative, cap);
    return out;
}

}  // namespace

FactorPlan::FactorPlan(const Composition& a) : n_(a.size()) {
    factors_.reserve(static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_ - 1));
    for (int i = 1; i <= n_; ++i) {
        for (int j = i + 1; j <= n_; ++j) {
            factors_.push_back({i, j, a.entry(i)});
            factors_.push_back({j, i, a.entry(j)});
        }
    }
    // Suffix bounds, built back to front. Factor (i,j,e) can contribute any
    // exponent in [0,e] to variable i and the negated amount to variable j.
    bounds_.assign(factors_.size() + 1,
                   std::vector<std::pair<long long, long long>>(
                       static_cast<std::size_t>(n_), {0, 0}));
    for (std::size_t pos = factors_.size(); pos-- > 0;) {
        bounds_[pos] = bounds_[pos + 1];
        const FactorDescriptor& f = factors_[pos];
        bounds_[pos][static_cast<std::size_t>(f.i - 1)].second += f.exponent;
        bounds_[pos][static_cast<std::size_t>(f.j - 1)].first -= f.exponent;
    }
}

std::pair<long long, long long> FactorPlan::residual_range(std::size_t pos, int v) const {
    return bounds_.at(pos).at(static_cast<std::size_t>(v - 1));
}

SparseLaurentPoly expand_factor(int i, int j, int e, int n) {
    if (i == j) throw std::invalid_argument("expand_factor: i and j must differ");
    if (e < 0) throw std::invalid_argument("expand_factor: negative exponent");
    if (n == 0) n = std::max(i, j);
    if (i < 1 || j < 1 || i > n || j > n) {
        throw std::invalid_argument("expand_factor: index out of range");
    }
    SparseLaurentPoly out(n);
    std::vector<int> exps(static_cast<std::size_t>(n), 0);
    for (int m = 0; m <= e; ++m) {
        exps[static_cast<std::size_t>(i - 1)] = m;
        exps[static_cast<std::size_t>(j - 1)] = -m;
        Integer c = binomial(e, m);
        if (m % 2 == 1) c = -c;
        out.add_term(ExponentVector(exps), c);
    }
    return out;
}

SparseLaurentPoly expand_dyson(const Composition& a, const OracleOptions& opts) {
    const int n = a.size();
    SparseLaurentPoly result = SparseLaurentPoly::one(n);
    long long cumulative = 0;
    // Pair products (1-x_i/x_j)^{a_i} (1-x_j/x_i)^{a_j} are univariate in the
    // ratio x_i/x_j; accumulate them in ascending (i,j).
    for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
            SparseLaurentPoly pair_poly =
                multiply_capped(expand_factor(i, j, a.entry(i), n),
                                expand_factor(j, i, a.entry(j), n), cumulative, opts.term_cap);
            result = multiply_capped(result, pair_poly, cumulative, opts.term_cap);
        }
    }
    return result;
}

Integer coefficient(const Composition& a, const ExponentVector& m, const OracleOptions& opts,
                    OracleStats* stats) {
    const int n = a.size();
    if (m.size() != n) throw std::invalid_argument("coefficient: arity mismatch");
    if (m.degree() != 0) return 0;  // every term of D_n has degree 0
    if (n == 1) return 1;           // D_1 = 1 and m = (0)

    const FactorPlan plan(a);
    const auto& target = m.data();

    using TermMap = SparseLaurentPoly::TermMap;
    TermMap current;
    current.emplace(ExponentVector::zero(n), Integer(1));

    long long cumulative = 0;
    std::size_t peak = 1;

    std::vector<int> scratch(static_cast<std::size_t>(n), 0);
    for (std::size_t pos = 0; pos < plan.factors().size(); ++pos) {
        const FactorDescriptor& f = plan.factors()[pos];
        if (f.exponent == 0) continue;

        // A partial exponent vector q survives iff for every variable v the
        // remaining factors can still close the gap to the target.
        auto feasible = [&](const std::vector<int>& q) {
            for (int v = 1; v <= n; ++v) {
                auto [lo, hi] = plan.residual_range(pos + 1, v);
                const long long qv = q[static_cast<std::size_t>(v - 1)];
                const long long tv = target[static_cast<std::size_t>(v - 1)];
                if (qv + lo > tv || qv + hi < tv) return false;
            }
            return true;
        };

        TermMap next;
        for (const auto& [p, coeff] : current) {
            scratch = p.data();
            for (int pick = 0; pick <= f.exponent; ++pick) {
                if (pick > 0) {
                    ++scratch[static_cast<std::size_t>(f.i - 1)];
                    --scratch[static_cast<std::size_t>(f.j - 1)];
                }
                if (!feasible(scratch)) continue;
                Integer c = binomial(f.exponent, pick) * coeff;
                if (pick % 2 == 1) c = -c;
                ExponentVector key(scratch);
                auto it = next.find(key);
                if (it == next.end()) {
                    next.emplace(std::move(key), std::move(c));
                } else {
                    it->second += c;
                    if (it->second == 0) next.erase(it);
                }
            }
        }
        current = std::move(next);
        charge_terms(static_cast<long long>(current.size()), cumulative, opts.term_cap);
        peak = std::max(peak, current.size());
        if (current.empty()) break;
    }

    if (stats != nullptr) {
        stats->peak_terms = peak;
        stats->cumulative_terms = cumulative;
    }
    auto it = current.find(m);
    return it == current.end() ? Integer(0) : it->second;
}

Integer constant_term(const Composition& a, const OracleOptions& opts) {
    return coefficient(a, ExponentVector::zero(a.size()), opts);
}

}  // namespace dysonct
