#include "dysonct/identities.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "dysonct/closed_forms.hpp"
#include "dysonct/errors.hpp"
#include "dysonct/laurent.hpp"

namespace dysonct {

namespace {

void check_distinct_indices(std::vector<int> indices, int n, const char* what) {
    for (int i : indices) {
        if (i < 1 || i > n) {
            throw std::invalid_argument(std::string(what) + ": index " + std::to_string(i) +
                                        " out of range 1.." + std::to_string(n));
        }
    }
    std::sort(indices.begin(), indices.end());
    if (std::adjacent_find(indices.begin(), indices.end()) != indices.end()) {
        throw std::invalid_argument(std::string(what) + ": indices must be pairwise distinct");
    }
}

// Query monomial for the numerator term x_alpha * x_beta over x_r^2.
ExponentVector pair_query(int r, int alpha, int beta, int n) {
    std::vector<int> exps(static_cast<std::size_t>(n), 0);
    exps[static_cast<std::size_t>(r - 1)] = 2;
    exps[static_cast<std::size_t>(alpha - 1)] -= 1;
    exps[static_cast<std::size_t>(beta - 1)] -= 1;
    return ExponentVector(std::move(exps));
}

Integer int_of(long long v) { return Integer(static_cast<long>(v)); }

Integer to_integer_checked(const Rational& v, const std::string& context) {
    if (!v.is_integer()) {
        throw IntegralityError(context + " evaluated to non-integer " + v.str());
    }
    return v.to_integer();
}

// x_alpha - x_beta as a polynomial over n variables.
SparseLaurentPoly difference(int alpha, int beta, int n) {
    SparseLaurentPoly p(n);
    std::vector<int> e(static_cast<std::size_t>(n), 0);
    e[static_cast<std::size_t>(alpha - 1)] = 1;
    p.add_term(ExponentVector(e), 1);
    e[static_cast<std::size_t>(alpha - 1)] = 0;
    e[static_cast<std::size_t>(beta - 1)] = 1;
    p.add_term(ExponentVector(e), -1);
    return p;
}

}  // namespace

LinearCombination prop1_combination(int r, int s, int t, int u, int v, int n) {
    check_distinct_indices({r, s, t, u, v}, n, "prop1");
    return {{{+1, pair_query(r, s, u, n)},
             {-1, pair_query(r, s, v, n)},
             {-1, pair_query(r, t, u, n)},
             {+1, pair_query(r, t, v, n)}}};
}

LinearCombination prop2_combination(int r, int s, int u, int v, int n) {
    check_distinct_indices({r, s, u, v}, n, "prop2");
    return {{{+1, pair_query(r, s, s, n)},
             {-1, pair_query(r, s, v, n)},
             {-1, pair_query(r, s, u, n)},
             {+1, pair_query(r, u, v, n)}}};
}

LinearCombination prop3_combination(int r, int s, int t, int n) {
    check_distinct_indices({r, s, t}, n, "prop3");
    return {{{+1, pair_query(r, s, s, n)},
             {+1, pair_query(r, t, t, n)},
             {-2, pair_query(r, s, t, n)}}};
}

LinearCombination corollary_combination(int r, const std::vector<int>& I, int n) {
    if (I.size() < 2 || I.size() % 2 != 0) {
        throw std::invalid_argument("corollary: |I| must be even and >= 2");
    }
    std::vector<int> all(I);
    all.push_back(r);
    check_distinct_indices(all, n, "corollary");

    LinearCombination lc;
    const int size = static_cast<int>(I.size());
    for (int j = 0; j < size; ++j) {
        lc.terms.push_back({+1, pair_query(r, I[static_cast<std::size_t>(j)],
                                           I[static_cast<std::size_t>(j)], n)});
    }
    for (int j = 0; j < size; ++j) {
        for (int l = j + 1; l < size; ++l) {
            // signs (-1)^(j+1) (-1)^(l+1) from the alternating sum, 1-based
            const long long c = ((j + l) % 2 == 0) ? 2 : -2;
            lc.terms.push_back({c, pair_query(r, I[static_cast<std::size_t>(j)],
                                              I[static_cast<std::size_t>(l)], n)});
        }
    }
    return lc;
}

Integer closed_value(const LinearCombination& lc, const Composition& a) {
    Integer sum = 0;
    for (const auto& term : lc.terms) {
        auto q = classify_monomial(term.m);
        if (!q) throw std::logic_error("LinearCombination holds a non-F/G-shaped monomial");
        sum += int_of(term.coefficient) * closed_form(*q, a);
    }
    return sum;
}

Integer oracle_value(const LinearCombination& lc, const Composition& a,
                     const OracleOptions& opts) {
    Integer sum = 0;
    for (const auto& term : lc.terms) {
        sum += int_of(term.coefficient) * coefficient(a, term.m, opts);
    }
    return sum;
}

Integer prop1_check(int r, int s, int t, int u, int v, const Composition& a) {
    return closed_value(prop1_combination(r, s, t, u, v, a.size()), a);
}

Integer prop2_value(int r, int s, int u, int v, const Composition& a) {
    const Integer lhs = closed_value(prop2_combination(r, s, u, v, a.size()), a);
    const long long ar = a.entry(r);
    const long long without_r = a.without(r);
    const Rational rhs_rational =
        -Rational(int_of(ar) * int_of(a.total() + 1),
                  int_of(2 + without_r) * int_of(1 + without_r - a.entry(s))) *
        Rational(multinomial(a));
    const Integer rhs = to_integer_checked(
        rhs_rational, "prop2 rhs(r=" + std::to_string(r) + ",s=" + std::to_string(s) +
                          ",a=" + a.str() + ")");
    if (lhs != rhs) {
        throw IdentityMismatchError("prop2(r=" + std::to_string(r) + ",s=" + std::to_string(s) +
                                    ",u=" + std::to_string(u) + ",v=" + std::to_string(v) +
                                    ",a=" + a.str() + "): theorem combination " + lhs.get_str() +
                                    " != closed form " + rhs.get_str());
    }
    return lhs;
}

Integer prop3_value(int r, int s, int t, const Composition& a) {
    const Integer lhs = closed_value(prop3_combination(r, s, t, a.size()), a);
    const long long ar = a.entry(r);
    const long long without_r = a.without(r);
    const Rational spread = Rational(Integer(1), int_of(1 + without_r - a.entry(s))) +
                            Rational(Integer(1), int_of(1 + without_r - a.entry(t)));
    const Rational rhs_rational =
        -Rational(int_of(ar) * int_of(a.total() + 1), int_of(2 + without_r)) * spread *
        Rational(multinomial(a));
    const Integer rhs = to_integer_checked(
        rhs_rational, "prop3 rhs(r=" + std::to_string(r) + ",s=" + std::to_string(s) +
                          ",t=" + std::to_string(t) + ",a=" + a.str() + ")");
    if (lhs != rhs) {
        throw IdentityMismatchError("prop3(r=" + std::to_string(r) + ",s=" + std::to_string(s) +
                                    ",t=" + std::to_string(t) + ",a=" + a.str() +
                                    "): theorem combination " + lhs.get_str() +
                                    " != closed form " + rhs.get_str());
    }
    return lhs;
}

Integer corollary_value(int r, const std::vector<int>& I, const Composition& a) {
    const Integer lhs = closed_value(corollary_combination(r, I, a.size()), a);
    const long long ar = a.entry(r);
    const long long without_r = a.without(r);
    Rational spread(0);
    for (int j : I) spread += Rational(Integer(1), int_of(1 + without_r - a.entry(j)));
    const Rational rhs_rational =
        -Rational(int_of(ar) * int_of(a.total() + 1), int_of(2 + without_r)) * spread *
        Rational(multinomial(a));
    const Integer rhs =
        to_integer_checked(rhs_rational, "corollary rhs(r=" + std::to_string(r) + ",a=" + a.str() + ")");
    if (lhs != rhs) {
        throw IdentityMismatchError("corollary(r=" + std::to_string(r) + ",a=" + a.str() +
                                    "): theorem combination " + lhs.get_str() +
                                    " != closed form " + rhs.get_str());
    }
    return lhs;
}

bool remark_identity_check(int s, int t, int u, int v, int n) {
    check_distinct_indices({s, t, u, v}, n, "remark");
    const SparseLaurentPoly lhs = difference(s, u, n) * difference(s, v, n) +
                                  difference(t, u, n) * difference(t, v, n);
    const SparseLaurentPoly rhs = difference(s, t, n) * difference(s, t, n) +
                                  difference(s, u, n) * difference(t, v, n) +
                                  difference(s, v, n) * difference(t, u, n);
    return lhs == rhs;
}

}  // namespace dysonct
