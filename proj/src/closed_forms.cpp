#include "dysonct/closed_forms.hpp"

#include <stdexcept>
#include <string>

#include "dysonct/errors.hpp"

namespace dysonct {

namespace {

void check_index(int i, int n, const char* name) {
    if (i < 1 || i > n) {
        throw std::invalid_argument(std::string(name) + "=" + std::to_string(i) +
                                    " out of range 1.." + std::to_string(n));
    }
}

void check_distinct(int a, int b, const char* na, const char* nb) {
    if (a == b) {
        throw std::invalid_argument(std::string(na) + " and " + nb +
                                    " must be distinct (both " + std::to_string(a) + ")");
    }
}

Integer as_integer(const Rational& v, const std::string& context) {
    if (!v.is_integer()) {
        throw IntegralityError(context + " evaluated to non-integer " + v.str());
    }
    return v.to_integer();
}

// 1 + a^(r) - a_i for i != r; provably >= 1 because a_i <= a^(r).
Integer positive_denominator(const Composition& a, int r, int i) {
    const long long den = 1 + a.without(r) - a.entry(i);
    if (den < 1) {
        throw std::logic_error("impossible denominator " + std::to_string(den) +
                               " in closed form at a=" + a.str());
    }
    return Integer(static_cast<long>(den));
}

}  // namespace

Integer multinomial(const Composition& a) {
    Integer result = 1;
    long long prefix = 0;
    for (int i = 1; i <= a.size(); ++i) {
        prefix += a.entry(i);
        result *= binomial(prefix, a.entry(i));
    }
    return result;
}

Rational theorem_F_rational(int r, int s, const Composition& a) {
    const int n = a.size();
    check_index(r, n, "r");
    check_index(s, n, "s");
    check_distinct(r, s, "r", "s");
    if (n < 2) throw std::invalid_argument("theorem_F needs n >= 2");

    const long long ar = a.entry(r);
    const long long total = a.total();
    const long long without_r = a.without(r);

    Rational bracket(ar - 1);
    for (int i = 1; i <= n; ++i) {
        if (i == r || i == s) continue;
        bracket -= Rational(Integer(static_cast<long>(a.entry(i))) * Integer(static_cast<long>(1 + total)),
                            positive_denominator(a, r, i));
    }
    const Rational prefactor(Integer(static_cast<long>(ar)),
                             Integer(static_cast<long>(1 + without_r)) *
                                 Integer(static_cast<long>(2 + without_r)));
    return prefactor * bracket * Rational(multinomial(a));
}

Integer theorem_F(int r, int s, const Composition& a) {
    return as_integer(theorem_F_rational(r, s, a),
                      "theorem_F(r=" + std::to_string(r) + ",s=" + std::to_string(s) +
                          ",a=" + a.str() + ")");
}

Rational theorem_G_rational(int r, int s, int t, const Composition& a) {
    const int n = a.size();
    check_index(r, n, "r");
    check_index(s, n, "s");
    check_index(t, n, "t");
    check_distinct(r, s, "r", "s");
    check_distinct(r, t, "r", "t");
    check_distinct(s, t, "s", "t");
    if (n < 3) throw std::invalid_argument("theorem_G needs n >= 3");

    const long long ar = a.entry(r);
    const long long total = a.total();
    const long long without_r = a.without(r);

    Rational bracket(total + ar);
    for (int i = 1; i <= n; ++i) {
        if (i == r || i == s || i == t) continue;
        bracket -= Rational(Integer(static_cast<long>(a.entry(i))) * Integer(static_cast<long>(1 + total)),
                            positive_denominator(a, r, i));
    }
    const Rational prefactor(Integer(static_cast<long>(ar)),
                             Integer(static_cast<long>(1 + without_r)) *
                                 Integer(static_cast<long>(2 + without_r)));
    return prefactor * bracket * Rational(multinomial(a));
}

Integer theorem_G(int r, int s, int t, const Composition& a) {
    return as_integer(theorem_G_rational(r, s, t, a),
                      "theorem_G(r=" + std::to_string(r) + ",s=" + std::to_string(s) +
                          ",t=" + std::to_string(t) + ",a=" + a.str() + ")");
}

Rational sills_first_order_rational(int r, int s, const Composition& a) {
    const int n = a.size();
    check_index(r, n, "r");
    check_index(s, n, "s");
    check_distinct(r, s, "r", "s");
    return Rational(Integer(static_cast<long>(-a.entry(r))),
                    Integer(static_cast<long>(1 + a.without(r)))) *
           Rational(multinomial(a));
}

Integer sills_first_order(int r, int s, const Composition& a) {
    return as_integer(sills_first_order_rational(r, s, a),
                      "sills_first_order(r=" + std::to_string(r) + ",s=" + std::to_string(s) +
                          ",a=" + a.str() + ")");
}

Rational h_term(int i, const Composition& a) {
    const int n = a.size();
    check_index(i, n, "i");
    const long long a1 = a.entry(1);
    const long long total = a.total();
    const long long without_1 = a.without(1);
    const Integer base_den = Integer(static_cast<long>(1 + without_1)) *
                             Integer(static_cast<long>(2 + without_1));
    const Rational c(multinomial(a));

    if (i == 1) {
        return Rational(Integer(static_cast<long>(a1)) * Integer(static_cast<long>(a1 - 1)),
                        base_den) *
               c;
    }
    if (i == 2) {
        return Rational(Integer(static_cast<long>(a1)) * Integer(static_cast<long>(total + a1)),
                        base_den) *
               c;
    }
    return Rational(Integer(static_cast<long>(a1)) * Integer(static_cast<long>(a.entry(i))) *
                        Integer(static_cast<long>(1 + total)),
                    base_den * positive_denominator(a, 1, i)) *
           c;
}

ExponentVector query_monomial(const CoefficientQuery& q, int n) {
    std::vector<int> exps(static_cast<std::size_t>(n), 0);
    check_index(q.r, n, "r");
    check_index(q.s, n, "s");
    exps[static_cast<std::size_t>(q.r - 1)] = 2;
    if (q.kind == CoefficientQuery::Kind::F) {
        exps[static_cast<std::size_t>(q.s - 1)] = -2;
    } else {
        check_index(q.t, n, "t");
        exps[static_cast<std::size_t>(q.s - 1)] = -1;
        exps[static_cast<std::size_t>(q.t - 1)] = -1;
    }
    return ExponentVector(std::move(exps));
}

std::optional<CoefficientQuery> classify_monomial(const ExponentVector& m) {
    int r = 0;
    int s = 0;
    int t = 0;
    for (int i = 1; i <= m.size(); ++i) {
        const int e = m.exp(i);
        if (e == 0) continue;
        if (e == 2 && r == 0) {
            r = i;
        } else if (e == -2 && s == 0 && t == 0) {
            s = i;
            t = -1;  // marks the F pattern
        } else if (e == -1 && t != -1 && (s == 0 || t == 0)) {
            (s == 0 ? s : t) = i;
        } else {
            return std::nullopt;
        }
    }
    if (r != 0 && s != 0 && t == -1) return CoefficientQuery{CoefficientQuery::Kind::F, r, s, 0};
    if (r != 0 && s != 0 && t > 0) return CoefficientQuery{CoefficientQuery::Kind::G, r, s, t};
    return std::nullopt;
}

Integer closed_form(const CoefficientQuery& q, const Composition& a) {
    if (q.kind == CoefficientQuery::Kind::F) return theorem_F(q.r, q.s, a);
    return theorem_G(q.r, q.s, q.t, a);
}

}  // namespace dysonct
