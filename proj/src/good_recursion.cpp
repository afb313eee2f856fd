#include "dysonct/good_recursion.hpp"

#include <cassert>
#include <functional>
#include <stdexcept>

#include "dysonct/closed_forms.hpp"
#include "dysonct/errors.hpp"

namespace dysonct {

namespace {

constexpr int kMaxDepth = 100'000;

Integer int_of(long long v) { return Integer(static_cast<long>(v)); }

// Enumerates {c_i} over the positions != k in ascending index order,
// lexicographically, with early cutoff when the remaining entries cannot
// absorb what is left of the required total.
void enumerate_draws(const std::vector<int>& caps, const std::vector<long long>& suffix_cap,
                     std::size_t pos, int remaining, std::vector<int>& draw,
                     const std::function<void(const std::vector<int>&)>& emit) {
    if (pos == caps.size()) {
        if (remaining == 0) emit(draw);
        return;
    }
    if (suffix_cap[pos] < remaining) return;  // cannot reach the total any more
    const int top = std::min(caps[pos], remaining);
    for (int c = 0; c <= top; ++c) {
        draw[pos] = c;
        enumerate_draws(caps, suffix_cap, pos + 1, remaining - c, draw, emit);
    }
    draw[pos] = 0;
}

}  // namespace

std::size_t CtProblemHash::operator()(const CtProblem& p) const {
    std::size_t h = CompositionHash{}(p.a);
    h ^= ExponentVectorHash{}(p.m) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    return h;
}

BoundaryExpansion reduce_at_zero(const CtProblem& p, int k) {
    const int n = p.a.size();
    if (p.a.entry(k) != 0) {
        throw std::invalid_argument("reduce_at_zero: a_" + std::to_string(k) + " = " +
                                    std::to_string(p.a.entry(k)) + " is not zero");
    }
    if (p.m.size() != n) throw std::invalid_argument("reduce_at_zero: arity mismatch");

    BoundaryExpansion out{k, {}};
    const int mk = p.m.exp(k);
    // The residual factor holds only nonpositive powers of x_k.
    if (mk > 0) return out;
    const int need = -mk;

    std::vector<int> other_index;  // original 1-based indices != k
    std::vector<int> caps;
    for (int i = 1; i <= n; ++i) {
        if (i == k) continue;
        other_index.push_back(i);
        caps.push_back(p.a.entry(i));
    }
    std::vector<long long> suffix_cap(caps.size() + 1, 0);
    for (std::size_t i = caps.size(); i-- > 0;) suffix_cap[i] = suffix_cap[i + 1] + caps[i];

    const Composition reduced = p.a.deleted(k);
    std::vector<int> draw(caps.size(), 0);
    enumerate_draws(caps, suffix_cap, 0, need, draw, [&](const std::vector<int>& c) {
        Integer weight = 1;
        std::vector<int> m_next(caps.size());
        for (std::size_t idx = 0; idx < caps.size(); ++idx) {
            weight *= binomial(caps[idx], c[idx]);
            if (c[idx] % 2 == 1) weight = -weight;
            m_next[idx] = p.m.exp(other_index[idx]) - c[idx];
        }
        out.terms.push_back({std::move(weight),
                             CtProblem{reduced, ExponentVector(std::move(m_next))}});
    });
    return out;
}

Integer Evaluator::evaluate(const CtProblem& p) { return evaluate_impl(p, 0); }

Integer Evaluator::evaluate(const Composition& a, const ExponentVector& m) {
    return evaluate_impl(CtProblem{a, m}, 0);
}

Integer Evaluator::evaluate_impl(const CtProblem& p, int depth) {
    if (p.m.size() != p.a.size()) throw std::invalid_argument("evaluate: arity mismatch");
    if (depth > kMaxDepth) throw SizeLimitError("recursion depth exceeded");
    if (p.m.degree() != 0) return 0;
    if (p.a.size() == 1) return 1;  // D_1 = 1 and degree-0 forces m = (0)

    if (auto it = memo_.find(p); it != memo_.end()) return it->second;

    Integer value = 0;
    const int k0 = p.a.first_zero();
    if (k0 != 0) {
        for (const auto& [weight, sub] : reduce_at_zero(p, k0).terms) {
            value += weight * evaluate_impl(sub, depth + 1);
        }
    } else {
        assert(p.a.all_positive());
        for (int k = 1; k <= p.a.size(); ++k) {
            value += evaluate_impl(CtProblem{p.a.decremented(k), p.m}, depth + 1);
        }
    }

    if (memo_.size() >= opts_.node_cap) {
        throw SizeLimitError("recursion budget of " + std::to_string(opts_.node_cap) +
                             " memo entries exceeded");
    }
    memo_.emplace(p, value);
    return value;
}

Integer evaluate(const Composition& a, const ExponentVector& m) {
    Evaluator ev;
    return ev.evaluate(a, m);
}

Rational boundary_F_rhs(const Composition& a, int k) {
    const int n = a.size();
    if (n < 3) throw std::invalid_argument("boundary_F_rhs needs n >= 3");
    if (a.entry(k) != 0) throw std::invalid_argument("boundary_F_rhs: a_k must be 0");

    Rational rhs(0);
    if (k == 1) {
        // zero branch
    } else if (k == 2) {
        const Composition rest = a.deleted(2);
        const long long a1 = a.entry(1);
        const long long without_1 = a.without(1);
        rhs = (Rational(int_of(a1) * int_of(a1 - 1), Integer(2)) -
               Rational(int_of(a1) * int_of(a1) * int_of(without_1), int_of(1 + without_1))) *
              Rational(multinomial(rest));
        for (int i = 3; i <= n; ++i) {
            const Integer w = binomial(a.entry(i), 2);
            if (w != 0) rhs += Rational(w) * theorem_F_rational(1, i - 1, rest);
        }
        for (int i = 3; i <= n; ++i) {
            for (int j = i + 1; j <= n; ++j) {
                const long long w = static_cast<long long>(a.entry(i)) * a.entry(j);
                if (w != 0) rhs += Rational(w) * theorem_G_rational(1, i - 1, j - 1, rest);
            }
        }
    } else {
        rhs = theorem_F_rational(1, 2, a.deleted(k));
    }
    return rhs;
}

Rational boundary_G_rhs(const Composition& a, int k) {
    const int n = a.size();
    if (n < 3) throw std::invalid_argument("boundary_G_rhs needs n >= 3");
    if (a.entry(k) != 0) throw std::invalid_argument("boundary_G_rhs: a_k must be 0");

    Rational rhs(0);
    if (k == 1) {
        // zero branch
    } else if (k == 2 || k == 3) {
        const Composition rest = a.deleted(k);
        const long long a1 = a.entry(1);
        const long long without_1 = a.without(1);
        // Deleting position 2 sends the role triple (1,2,3) to (1,-,2);
        // deleting position 3 sends it to (1,2,-). Either way the surviving
        // second-order role pairs with original index (k == 2 ? 3 : 2).
        const int partner = (k == 2) ? 3 : 2;
        rhs = Rational(int_of(a1) * int_of(a1), int_of(1 + without_1)) *
              Rational(multinomial(rest));
        if (a.entry(partner) != 0) {
            rhs -= Rational(int_of(a.entry(partner))) * theorem_F_rational(1, 2, rest);
        }
        for (int i = 4; i <= n; ++i) {
            if (a.entry(i) != 0) {
                rhs -= Rational(int_of(a.entry(i))) * theorem_G_rational(1, 2, i - 1, rest);
            }
        }
    } else {
        rhs = theorem_G_rational(1, 2, 3, a.deleted(k));
    }
    return rhs;
}

bool verify_boundary_F(const Composition& a, int k) {
    return theorem_F_rational(1, 2, a) == boundary_F_rhs(a, k);
}

bool verify_boundary_G(const Composition& a, int k) {
    return theorem_G_rational(1, 2, 3, a) == boundary_G_rhs(a, k);
}

}  // namespace dysonct
