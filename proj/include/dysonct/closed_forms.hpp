#ifndef DYSONCT_CLOSED_FORMS_HPP
#define DYSONCT_CLOSED_FORMS_HPP

#include <optional>

#include "dysonct/arith.hpp"
#include "dysonct/composition.hpp"
#include "dysonct/monomial.hpp"

namespace dysonct {

/// C_n(a) = (a_1+...+a_n)! / (a_1! ... a_n!), the constant term of the Dyson
/// product. Computed as a product of exact binomials, so no intermediate
/// value is ever non-integral.
Integer multinomial(const Composition& a);

/// Coefficient of x_r^2/x_s^2 in D_n(x,a):
///
///   a_r/((1+a^(r))(2+a^(r))) * [(a_r-1) - sum_{i!=r,s} a_i(1+a)/(1+a^(r)-a_i)] * C_n(a)
///
/// Requires r != s, both in 1..n, n >= 2. The rational variant exposes the
/// value before integer conversion; theorem_F converts and throws
/// IntegralityError if the result is not an integer (which would be a bug,
/// not an input problem).
Rational theorem_F_rational(int r, int s, const Composition& a);
Integer theorem_F(int r, int s, const Composition& a);

/// Coefficient of x_r^2/(x_s x_t) in D_n(x,a):
///
///   a_r/((1+a^(r))(2+a^(r))) * [(a+a_r) - sum_{i!=r,s,t} a_i(1+a)/(1+a^(r)-a_i)] * C_n(a)
///
/// Requires r,s,t pairwise distinct, in 1..n, n >= 3. Symmetric in s and t.
Rational theorem_G_rational(int r, int s, int t, const Composition& a);
Integer theorem_G(int r, int s, int t, const Composition& a);

/// Coefficient of x_r/x_s in D_n(x,a): -a_r/(1+a^(r)) * C_n(a).
/// The first-order helper the boundary computation consumes.
Rational sills_first_order_rational(int r, int s, const Composition& a);
Integer sills_first_order(int r, int s, const Composition& a);

/// The additive pieces H_i of the closed forms, with the roles fixed to
/// r=1, s=2, t=3:
///
///   H_1 = a_1(a_1-1) / ((1+a^(1))(2+a^(1))) * C_n(a)
///   H_2 = a_1(a+a_1) / ((1+a^(1))(2+a^(1))) * C_n(a)
///   H_i = a_1 a_i (1+a) / ((1+a^(1))(2+a^(1))(1+a^(1)-a_i)) * C_n(a),  i >= 3
///
/// Each H_i individually satisfies the Good recurrence
/// H_i(a) = sum_k H_i(a - e_k) for all-positive a. The decomposition of the
/// closed forms is
///
///   theorem_F(1,2,a) = H_1(a) - sum_{i>=3} H_i(a)
///   theorem_G(1,2,3,a) = H_2(a) - sum_{i>=4} H_i(a)
///
/// with the minus signs carried by the brackets above. Individual H values
/// need not be integers, hence the rational return type.
Rational h_term(int i, const Composition& a);

/// A coefficient query the closed forms can answer: the monomial with
/// exponent +2 at r and either -2 at s (kind F) or -1 at s and t (kind G).
struct CoefficientQuery {
    enum class Kind { F, G };
    Kind kind;
    int r;
    int s;
    int t;  // meaningful only for kind G

    bool operator==(const CoefficientQuery&) const = default;
};

/// The target monomial of a query over n variables.
ExponentVector query_monomial(const CoefficientQuery& q, int n);

/// Shape detection: +2/-2 patterns map to F, +2/-1/-1 to G (s < t);
/// anything else is not closed-form answerable.
std::optional<CoefficientQuery> classify_monomial(const ExponentVector& m);

/// Dispatches a query to theorem_F or theorem_G.
Integer closed_form(const CoefficientQuery& q, const Composition& a);

}  // namespace dysonct

#endif
