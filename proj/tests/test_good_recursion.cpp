#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dysonct/closed_forms.hpp"
#include "dysonct/errors.hpp"
#include "dysonct/good_recursion.hpp"
#include "dysonct/oracle.hpp"
#include "dysonct/verify.hpp"

using namespace dysonct;

TEST_CASE("evaluate anchors") {
    Evaluator ev;
    CHECK(ev.evaluate(Composition({1, 1}), ExponentVector({0, 0})) == 2);
    CHECK(ev.evaluate(Composition({2, 2}), ExponentVector({2, -2})) == 1);
    CHECK(ev.evaluate(Composition({1, 1, 1}), ExponentVector({2, -1, -1})) == 2);
    CHECK(ev.evaluate(Composition({1, 1}), ExponentVector({1, 0})) == 0);  // degree 1
    CHECK(ev.evaluate(Composition({4}), ExponentVector({0})) == 1);       // n = 1
}

TEST_CASE("reduce_at_zero: positive target power at the zero slot is empty") {
    const CtProblem p{Composition({0, 1, 1}), ExponentVector({2, -2, 0})};
    const BoundaryExpansion e = reduce_at_zero(p, 1);
    CHECK(e.k == 1);
    CHECK(e.terms.empty());
}

TEST_CASE("reduce_at_zero: zero target power passes the query through") {
    const CtProblem p{Composition({1, 0, 2}), ExponentVector({2, 0, -2})};
    const BoundaryExpansion e = reduce_at_zero(p, 2);
    REQUIRE(e.terms.size() == 1);
    CHECK(e.terms[0].weight == 1);
    CHECK(e.terms[0].subproblem.a == Composition({1, 2}));
    CHECK(e.terms[0].subproblem.m == ExponentVector({2, -2}));
}

TEST_CASE("reduce_at_zero reproduces the quadratic boundary table") {
    // a = (2,0,3), m = (2,-2,0): draws (c_1,c_3) with c_1+c_3 = 2, in
    // lexicographic order:
    //   (0,2): weight binom(3,2) = +3, subproblem m' = (2,-2)
    //   (1,1): weight (-2)(-3)   = +6, subproblem m' = (1,-1)
    //   (2,0): weight binom(2,2) = +1, subproblem m' = (0, 0)
    const CtProblem p{Composition({2, 0, 3}), ExponentVector({2, -2, 0})};
    const BoundaryExpansion e = reduce_at_zero(p, 2);
    REQUIRE(e.terms.size() == 3);
    CHECK(e.terms[0].weight == 3);
    CHECK(e.terms[0].subproblem.m == ExponentVector({2, -2}));
    CHECK(e.terms[1].weight == 6);
    CHECK(e.terms[1].subproblem.m == ExponentVector({1, -1}));
    CHECK(e.terms[2].weight == 1);
    CHECK(e.terms[2].subproblem.m == ExponentVector({0, 0}));
    for (const auto& term : e.terms) CHECK(term.subproblem.a == Composition({2, 3}));

    // the expansion evaluates to the oracle coefficient
    Integer total = 0;
    for (const auto& term : e.terms) {
        total += term.weight * coefficient(term.subproblem.a, term.subproblem.m);
    }
    CHECK(total == coefficient(p.a, p.m));
}

TEST_CASE("reduce_at_zero agrees with the oracle across a sweep") {
    for (int n = 2; n <= 3; ++n) {
        for (const Composition& a : enumerate_compositions(n, 2)) {
            const int k = a.first_zero();
            if (k == 0) continue;
            for (const ExponentVector& m : enumerate_degree0_monomials(n, 2)) {
                Integer via_boundary = 0;
                for (const auto& term : reduce_at_zero(CtProblem{a, m}, k).terms) {
                    via_boundary +=
                        term.weight * coefficient(term.subproblem.a, term.subproblem.m);
                }
                CHECK(via_boundary == coefficient(a, m));
            }
        }
    }
}

TEST_CASE("reduce_at_zero rejects a nonzero pivot") {
    const CtProblem p{Composition({1, 1}), ExponentVector({0, 0})};
    CHECK_THROWS_AS(reduce_at_zero(p, 1), std::invalid_argument);
}

TEST_CASE("evaluator equals the oracle on a small sweep") {
    Evaluator ev;
    for (int n = 1; n <= 3; ++n) {
        const auto monomials = enumerate_degree0_monomials(n, 2);
        for (const Composition& a : enumerate_compositions(n, 2)) {
            for (const ExponentVector& m : monomials) {
                CHECK(ev.evaluate(a, m) == coefficient(a, m));
            }
        }
    }
}

TEST_CASE("evaluator reproduces the constant-term formula") {
    Evaluator ev;
    for (int n = 1; n <= 3; ++n) {
        for (const Composition& a : enumerate_compositions(n, 3)) {
            CHECK(ev.evaluate(a, ExponentVector::zero(n)) == multinomial(a));
        }
    }
}

TEST_CASE("memoization is sound: cold and warm caches agree") {
    const Composition a({2, 1, 2});
    const ExponentVector m({2, -2, 0});
    Evaluator ev;
    const Integer cold = ev.evaluate(a, m);
    const std::size_t cache_after_first = ev.cache_size();
    CHECK(cache_after_first > 0);
    const Integer warm = ev.evaluate(a, m);
    CHECK(cold == warm);
    CHECK(ev.cache_size() == cache_after_first);

    Evaluator fresh;
    CHECK(fresh.evaluate(a, m) == cold);
}

TEST_CASE("node cap aborts loudly") {
    Evaluator ev(EvaluatorOptions{1});
    CHECK_THROWS_AS(ev.evaluate(Composition({2, 2, 2}), ExponentVector::zero(3)), SizeLimitError);
}

TEST_CASE("boundary identity for F") {
    CHECK(verify_boundary_F(Composition({2, 0, 1, 1}), 2));
    CHECK(verify_boundary_F(Composition({0, 1, 1}), 1));
    CHECK(verify_boundary_F(Composition({2, 1, 0}), 3));
    CHECK_THROWS_AS(verify_boundary_F(Composition({1, 1, 1}), 1), std::invalid_argument);
    CHECK_THROWS_AS(verify_boundary_F(Composition({0, 1}), 1), std::invalid_argument);
}

TEST_CASE("boundary identity for G") {
    CHECK(verify_boundary_G(Composition({1, 0, 1, 1}), 2));
    CHECK(verify_boundary_G(Composition({0, 1, 1}), 1));
    CHECK(verify_boundary_G(Composition({1, 1, 1, 0}), 4));
    CHECK(verify_boundary_G(Composition({2, 1, 0}), 3));
    CHECK_THROWS_AS(verify_boundary_G(Composition({1, 1, 1}), 2), std::invalid_argument);
}

TEST_CASE("evaluator equals the oracle for wider exponent targets") {
    Evaluator ev;
    const auto monomials = enumerate_degree0_monomials(3, 3);
    for (const Composition& a : enumerate_compositions(3, 3)) {
        for (const ExponentVector& m : monomials) {
            CHECK(ev.evaluate(a, m) == coefficient(a, m));
        }
    }
    // an asymmetric spot check away from the sweep grid
    const Composition a({4, 1, 0, 2});
    const ExponentVector m({3, -3, 0, 0});
    CHECK(ev.evaluate(a, m) == coefficient(a, m));
}

TEST_CASE("boundary identities hold wherever a zero sits") {
    for (int n = 3; n <= 4; ++n) {
        for (const Composition& a : enumerate_compositions(n, 2)) {
            for (int k = 1; k <= n; ++k) {
                if (a.entry(k) != 0) continue;
                CHECK(verify_boundary_F(a, k));
                CHECK(verify_boundary_G(a, k));
            }
        }
    }
}
