#ifndef DYSONCT_IDENTITIES_HPP
#define DYSONCT_IDENTITIES_HPP

#include <vector>

#include "dysonct/arith.hpp"
#include "dysonct/composition.hpp"
#include "dysonct/monomial.hpp"
#include "dysonct/oracle.hpp"

namespace dysonct {

/// A quadratic numerator over x_r^2 expanded into coefficient queries:
/// CT of (numerator / x_r^2) * D_n = sum coefficient * (coefficient of m in D_n).
/// Every stored m is an F-shaped or G-shaped degree-0 query by construction.
struct LinearCombination {
    struct Term {
        long long coefficient;
        ExponentVector m;
    };
    std::vector<Term> terms;
};

/// (x_s - x_t)(x_u - x_v) / x_r^2, five distinct indices.
LinearCombination prop1_combination(int r, int s, int t, int u, int v, int n);
/// (x_s - x_u)(x_s - x_v) / x_r^2, four distinct indices.
LinearCombination prop2_combination(int r, int s, int u, int v, int n);
/// (x_s - x_t)^2 / x_r^2, three distinct indices.
LinearCombination prop3_combination(int r, int s, int t, int n);
/// (sum_j (-1)^j x_{i_j})^2 / x_r^2 over the ordered index list I, r not in I.
LinearCombination corollary_combination(int r, const std::vector<int>& I, int n);

/// Evaluates a combination through the closed forms (theorem_F / theorem_G).
Integer closed_value(const LinearCombination& lc, const Composition& a);
/// Evaluates the same combination through the brute-force oracle.
Integer oracle_value(const LinearCombination& lc, const Composition& a,
                     const OracleOptions& opts = {});

/// CT of ((x_s-x_t)(x_u-x_v)/x_r^2) D_n via the closed forms. Vanishes for
/// every a; callers assert the returned value is 0.
Integer prop1_check(int r, int s, int t, int u, int v, const Composition& a);

/// CT of ((x_s-x_u)(x_s-x_v)/x_r^2) D_n. Computes both the theorem
/// combination and the closed right-hand side
///   -a_r(a+1) / ((2+a^(r))(1+a^(r)-a_s)) * C_n(a)
/// and raises IdentityMismatchError when they disagree instead of returning
/// either side.
Integer prop2_value(int r, int s, int u, int v, const Composition& a);

/// CT of ((x_s-x_t)^2/x_r^2) D_n; right-hand side
///   -a_r(a+1)/(2+a^(r)) * (1/(1+a^(r)-a_s) + 1/(1+a^(r)-a_t)) * C_n(a).
Integer prop3_value(int r, int s, int t, const Composition& a);

/// CT of ((sum_j (-1)^j x_{i_j})^2 / x_r^2) D_n; right-hand side
///   -a_r(a+1)/(2+a^(r)) * sum_{j in I} 1/(1+a^(r)-a_j) * C_n(a).
/// |I| must be even and >= 2, indices distinct, r not in I.
Integer corollary_value(int r, const std::vector<int>& I, const Composition& a);

/// The polynomial identity behind the derivation of the squared-difference
/// value from the other two:
///   (x_s-x_u)(x_s-x_v) + (x_t-x_u)(x_t-x_v)
///     = (x_s-x_t)^2 + (x_s-x_u)(x_t-x_v) + (x_s-x_v)(x_t-x_u)
/// verified as exact sparse-polynomial equality over n variables.
bool remark_identity_check(int s, int t, int u, int v, int n);

}  // namespace dysonct

#endif
