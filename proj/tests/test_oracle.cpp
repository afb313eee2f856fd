#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <future>
#include <random>

#include "dysonct/closed_forms.hpp"
#include "dysonct/errors.hpp"
#include "dysonct/oracle.hpp"
#include "dysonct/verify.hpp"
#include "test_util.hpp"

using namespace dysonct;

TEST_CASE("expand_factor") {
    SUBCASE("zeroth power is the constant 1") {
        const SparseLaurentPoly p = expand_factor(1, 2, 0);
        CHECK(p.term_count() == 1);
        CHECK(p.coefficient(ExponentVector::zero(2)) == 1);
    }
    SUBCASE("first power") {
        const SparseLaurentPoly p = expand_factor(1, 2, 1);
        CHECK(p.term_count() == 2);
        CHECK(p.coefficient(ExponentVector::zero(2)) == 1);
        CHECK(p.coefficient(ExponentVector({1, -1})) == -1);
    }
    SUBCASE("second power") {
        const SparseLaurentPoly p = expand_factor(1, 2, 2);
        CHECK(p.term_count() == 3);
        CHECK(p.coefficient(ExponentVector::zero(2)) == 1);
        CHECK(p.coefficient(ExponentVector({1, -1})) == -2);
        CHECK(p.coefficient(ExponentVector({2, -2})) == 1);
    }
    SUBCASE("e+1 terms for e >= 1") {
        for (int e = 1; e <= 6; ++e) {
            CHECK(expand_factor(2, 1, e).term_count() == static_cast<std::size_t>(e + 1));
        }
    }
    SUBCASE("i == j is rejected") { CHECK_THROWS_AS(expand_factor(1, 1, 2), std::invalid_argument); }
}

TEST_CASE("expand_dyson small cases") {
    SUBCASE("a=(1,1)") {
        const SparseLaurentPoly d = expand_dyson(Composition({1, 1}));
        CHECK(d.term_count() == 3);
        CHECK(d.coefficient(ExponentVector({0, 0})) == 2);
        CHECK(d.coefficient(ExponentVector({1, -1})) == -1);
        CHECK(d.coefficient(ExponentVector({-1, 1})) == -1);
    }
    SUBCASE("zero composition gives the empty product") {
        const SparseLaurentPoly d = expand_dyson(Composition({0, 0, 0}));
        CHECK(d.term_count() == 1);
        CHECK(d.coefficient(ExponentVector::zero(3)) == 1);
    }
    SUBCASE("constant term of D_3(1,1,1)") {
        const SparseLaurentPoly d = expand_dyson(Composition({1, 1, 1}));
        CHECK(d.coefficient(ExponentVector::zero(3)) == 6);
    }
}

TEST_CASE("every term of the expansion has degree zero") {
    for (int n = 1; n <= 3; ++n) {
        for (const Composition& a : enumerate_compositions(n, 2)) {
            const SparseLaurentPoly d = expand_dyson(a);
            for (const auto& [m, c] : d.terms()) {
                CHECK(m.degree() == 0);
                CHECK(c != 0);
            }
        }
    }
}

TEST_CASE("coefficient extraction examples") {
    CHECK(coefficient(Composition({2, 2}), ExponentVector({2, -2})) == 1);
    CHECK(coefficient(Composition({1, 1, 1}), ExponentVector({2, -1, -1})) == 2);
    CHECK(coefficient(Composition({1, 1}), ExponentVector({1, 0})) == 0);  // degree 1
    CHECK_THROWS_AS(coefficient(Composition({1, 1}), ExponentVector({1, -1, 0})),
                    std::invalid_argument);
}

TEST_CASE("constant term examples") {
    CHECK(constant_term(Composition({1, 1})) == 2);
    CHECK(constant_term(Composition({2, 2})) == 6);
    CHECK(constant_term(Composition({0, 0, 0, 0})) == 1);
    CHECK(constant_term(Composition({3})) == 1);  // D_1 = 1
}

TEST_CASE("oracle constant term equals the multinomial on a small sweep") {
    for (int n = 1; n <= 3; ++n) {
        for (const Composition& a : enumerate_compositions(n, 2)) {
            CHECK(constant_term(a) == multinomial(a));
        }
    }
}

TEST_CASE("pruned coefficient equals the unpruned expansion everywhere") {
    for (int n = 2; n <= 3; ++n) {
        for (const Composition& a : enumerate_compositions(n, 2)) {
            const SparseLaurentPoly d = expand_dyson(a);
            for (const auto& [m, c] : d.terms()) {
                CHECK(coefficient(a, m) == c);
            }
            // a few keys outside the support must read 0 both ways
            for (const ExponentVector& m : enumerate_degree0_monomials(n, 1)) {
                CHECK(coefficient(a, m) == d.coefficient(m));
            }
        }
    }
}

TEST_CASE("coefficients are invariant under relabeling") {
    std::mt19937 rng(424242);
    for (const Composition& a : enumerate_compositions(3, 2)) {
        for (const ExponentVector& m : enumerate_degree0_monomials(3, 2)) {
            const auto perm = test::random_permutation(3, rng);
            CHECK(coefficient(a, m) ==
                  coefficient(test::permuted(a, perm), test::permuted(m, perm)));
        }
    }
}

TEST_CASE("factor plan structure") {
    const Composition a({2, 1, 3});
    const FactorPlan plan(a);
    CHECK(plan.factors().size() == 6);  // n(n-1)

    // one descriptor per ordered pair, carrying a_i
    int seen = 0;
    for (const auto& f : plan.factors()) {
        CHECK(f.i != f.j);
        CHECK(f.exponent == a.entry(f.i));
        ++seen;
    }
    CHECK(seen == 6);

    // residual bounds for a longer suffix contain those for a shorter one
    for (std::size_t pos = 0; pos < plan.factors().size(); ++pos) {
        for (int v = 1; v <= 3; ++v) {
            const auto longer = plan.residual_range(pos, v);
            const auto shorter = plan.residual_range(pos + 1, v);
            CHECK(longer.first <= shorter.first);
            CHECK(longer.second >= shorter.second);
        }
    }
    // the empty suffix contributes nothing
    for (int v = 1; v <= 3; ++v) {
        CHECK(plan.residual_range(plan.factors().size(), v) == std::pair<long long, long long>{0, 0});
    }
}

TEST_CASE("term cap aborts loudly") {
    OracleOptions tiny;
    tiny.term_cap = 3;
    CHECK_THROWS_AS(expand_dyson(Composition({2, 2, 2}), tiny), SizeLimitError);
    CHECK_THROWS_AS(coefficient(Composition({2, 2, 2}), ExponentVector::zero(3), tiny),
                    SizeLimitError);
}

TEST_CASE("stats report peak and cumulative term counts") {
    OracleStats stats;
    (void)coefficient(Composition({2, 2, 2}), ExponentVector({2, -2, 0}), {}, &stats);
    CHECK(stats.peak_terms > 0);
    CHECK(stats.cumulative_terms >= static_cast<long long>(stats.peak_terms));
}

TEST_CASE("queries are pure: parallel evaluation matches serial") {
    std::vector<std::pair<Composition, ExponentVector>> queries;
    for (const Composition& a : enumerate_compositions(3, 2)) {
        queries.emplace_back(a, ExponentVector({2, -1, -1}));
        queries.emplace_back(a, ExponentVector::zero(3));
    }
    std::vector<Integer> serial;
    for (const auto& [a, m] : queries) serial.push_back(coefficient(a, m));

    std::vector<std::future<Integer>> tasks;
    for (const auto& [a, m] : queries) {
        tasks.push_back(std::async(std::launch::async,
                                   [&a, &m] { return coefficient(a, m); }));
    }
    for (std::size_t i = 0; i < tasks.size(); ++i) {
        CHECK(tasks[i].get() == serial[i]);
    }
}
