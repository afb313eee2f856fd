#ifndef DYSONCT_GOOD_RECURSION_HPP
#define DYSONCT_GOOD_RECURSION_HPP

#include <cstddef>
#include <unordered_map>
#include <vector>

#include "dysonct/arith.hpp"
#include "dysonct/composition.hpp"
#include "dysonct/monomial.hpp"

namespace dysonct {

/// A coefficient query posed to the recursive evaluator: the coefficient of
/// prod x_i^{m_i} in D_n(x,a).
struct CtProblem {
    Composition a;
    ExponentVector m;

    friend bool operator==(const CtProblem& p, const CtProblem& q) {
        return p.a == q.a && p.m == q.m;
    }
};

struct CtProblemHash {
    std::size_t operator()(const CtProblem& p) const;
};

struct WeightedSubproblem {
    Integer weight;
    CtProblem subproblem;
};

/// The result of eliminating a variable with a_k = 0: a finite signed-binomial
/// expansion into (n-1)-variable subproblems, all over the deleted composition.
struct BoundaryExpansion {
    int k;
    std::vector<WeightedSubproblem> terms;
};

/// When a_k = 0 the Dyson product factors as
///   D_n(x,a) = D_{n-1}(x^<k>, a^<k>) * prod_{i!=k} (1 - x_i/x_k)^{a_i}
/// and the residual factor contributes only nonpositive powers of x_k. So a
/// query with m_k > 0 is empty (value 0); otherwise every way of drawing
/// c_i >= 0 from the residual binomials with sum c_i = -m_k and c_i <= a_i
/// contributes weight prod (-1)^{c_i} binomial(a_i, c_i) and the subproblem
/// (a^<k>, m') with m'_i = m_i - c_i, positions reindexed after deleting k.
///
/// Subproblems are emitted in ascending lexicographic order of (c_i).
BoundaryExpansion reduce_at_zero(const CtProblem& p, int k);

struct EvaluatorOptions {
    /// Memo entry budget; exceeded -> SizeLimitError.
    std::size_t node_cap = 10'000'000;
};

/// Memoized Good-style evaluator.
///
/// evaluate(a, m) returns the coefficient of prod x_i^{m_i} in D_n(x,a):
///   (i)   0 when degree(m) != 0;
///   (ii)  n = 1: D_1 = 1, so 1 iff m = (0);
///   (iii) some a_k = 0 (smallest such k): boundary reduction, which strictly
///         reduces n;
///   (iv)  all a_k >= 1: the recurrence D_n(x,a) = sum_k D_n(x, a - e_k),
///         which strictly reduces the total of a.
///
/// The cache is confined to one Evaluator instance; use one instance per task
/// or share results by value.
class Evaluator {
public:
    explicit Evaluator(EvaluatorOptions opts = {}) : opts_(opts) {}

    Integer evaluate(const CtProblem& p);
    Integer evaluate(const Composition& a, const ExponentVector& m);

    std::size_t cache_size() const { return memo_.size(); }

private:
    Integer evaluate_impl(const CtProblem& p, int depth);

    EvaluatorOptions opts_;
    std::unordered_map<CtProblem, Integer, CtProblemHash> memo_;
};

/// One-shot convenience with a fresh cache.
Integer evaluate(const Composition& a, const ExponentVector& m);

/// Right-hand side of the boundary identity for the x_r^2/x_s^2 closed form
/// at roles (r,s) = (1,2), for a composition with a_k = 0:
///   k = 1:  0
///   k = 2:  (a_1(a_1-1)/2 - a_1^2 a^(1)/(1+a^(1))) C_{n-1}(a^<2>)
///             + sum_{i>=3} binomial(a_i,2) theorem_F(1,i,a^<2>)
///             + sum_{3<=i<j} a_i a_j theorem_G(1,i,j,a^<2>)     (indices relabeled)
///   k >= 3: theorem_F(1,2,a^<k>)
Rational boundary_F_rhs(const Composition& a, int k);

/// Same for the x_r^2/(x_s x_t) closed form at roles (1,2,3):
///   k = 1:  0
///   k = 2:  a_1^2/(1+a^(1)) C_{n-1}(a^<2>) - a_3 theorem_F(1,3,a^<2>)
///             - sum_{i>=4} a_i theorem_G(1,3,i,a^<2>)           (relabeled)
///   k = 3:  the symmetric display over a^<3>
///   k >= 4: theorem_G(1,2,3,a^<k>)
Rational boundary_G_rhs(const Composition& a, int k);

/// theorem_F(1,2,a) == boundary_F_rhs(a,k), exactly.
bool verify_boundary_F(const Composition& a, int k);

/// theorem_G(1,2,3,a) == boundary_G_rhs(a,k), exactly.
bool verify_boundary_G(const Composition& a, int k);

}  // namespace dysonct

#endif
