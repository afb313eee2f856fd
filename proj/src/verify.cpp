#include "dysonct/verify.hpp"

#include <chrono>
#include <unordered_map>

#include "dysonct/closed_forms.hpp"
#include "dysonct/errors.hpp"
#include "dysonct/good_recursion.hpp"
#include "dysonct/identities.hpp"

namespace dysonct {

namespace {

struct SweepState {
    SweepConfig config;
    Evaluator evaluator;
    std::unordered_map<CtProblem, Integer, CtProblemHash> oracle_cache;

    explicit SweepState(const SweepConfig& c) : config(c) {}

    Integer cached_coefficient(const Composition& a, const ExponentVector& m) {
        CtProblem key{a, m};
        if (auto it = oracle_cache.find(key); it != oracle_cache.end()) return it->second;
        Integer value = coefficient(a, m, config.oracle);
        oracle_cache.emplace(std::move(key), value);
        return value;
    }

    Integer cached_oracle_value(const LinearCombination& lc, const Composition& a) {
        Integer sum = 0;
        for (const auto& term : lc.terms) {
            sum += Integer(static_cast<long>(term.coefficient)) * cached_coefficient(a, term.m);
        }
        return sum;
    }
};

// Runs one case body; resource caps become skip records, integrality and
// identity defects become failures, anything else propagates.
template <typename Fn>
void run_case(std::vector<CaseResult>& out, std::string params, std::string method, Fn&& body) {
    CaseResult c;
    c.params = std::move(params);
    c.method = std::move(method);
    try {
        body(c);
    } catch (const SizeLimitError&) {
        c.actual = "skipped: size-limit";
        c.pass = false;
        c.capped = true;
    } catch (const IntegralityError& e) {
        c.actual = std::string("error: ") + e.what();
        c.pass = false;
    } catch (const IdentityMismatchError& e) {
        c.actual = std::string("error: ") + e.what();
        c.pass = false;
    }
    out.push_back(std::move(c));
}

void sweep_dyson(SweepState& st, std::vector<CaseResult>& out) {
    for (int n = 1; n <= st.config.max_n; ++n) {
        for (const Composition& a : enumerate_compositions(n, st.config.max_a)) {
            run_case(out, "dyson a=" + a.str(), "oracle", [&](CaseResult& c) {
                c.expected = multinomial(a).get_str();
                c.actual = constant_term(a, st.config.oracle).get_str();
                c.pass = c.expected == c.actual;
            });
        }
    }
}

void sweep_thm_f(SweepState& st, std::vector<CaseResult>& out) {
    for (int n = 2; n <= st.config.max_n; ++n) {
        for (const Composition& a : enumerate_compositions(n, st.config.max_a)) {
            for (const auto& rs : enumerate_distinct_tuples(n, 2)) {
                const int r = rs[0];
                const int s = rs[1];
                run_case(out,
                         "thmF a=" + a.str() + " r=" + std::to_string(r) +
                             " s=" + std::to_string(s),
                         "closed", [&](CaseResult& c) {
                             const auto m =
                                 query_monomial({CoefficientQuery::Kind::F, r, s, 0}, n);
                             c.expected = st.cached_coefficient(a, m).get_str();
                             c.actual = theorem_F(r, s, a).get_str();
                             c.pass = c.expected == c.actual;
                         });
            }
        }
    }
}

void sweep_thm_g(SweepState& st, std::vector<CaseResult>& out) {
    for (int n = 3; n <= st.config.max_n; ++n) {
        for (const Composition& a : enumerate_compositions(n, st.config.max_a)) {
            for (const auto& rst : enumerate_distinct_tuples(n, 3)) {
                const int r = rst[0];
                const int s = rst[1];
                const int t = rst[2];
                run_case(out,
                         "thmG a=" + a.str() + " r=" + std::to_string(r) +
                             " s=" + std::to_string(s) + " t=" + std::to_string(t),
                         "closed", [&](CaseResult& c) {
                             const auto m =
                                 query_monomial({CoefficientQuery::Kind::G, r, s, t}, n);
                             c.expected = st.cached_coefficient(a, m).get_str();
                             c.actual = theorem_G(r, s, t, a).get_str();
                             c.pass = c.expected == c.actual;
                         });
            }
        }
    }
}

void sweep_h_decomp(SweepState& st, std::vector<CaseResult>& out) {
    for (int n = 2; n <= st.config.max_n; ++n) {
        for (const Composition& a : enumerate_compositions(n, st.config.max_a)) {
            run_case(out, "h-decomp a=" + a.str() + " kind=F", "closed", [&](CaseResult& c) {
                const Rational expected = theorem_F_rational(1, 2, a);
                Rational actual = h_term(1, a);
                for (int i = 3; i <= n; ++i) actual -= h_term(i, a);
                c.expected = expected.str();
                c.actual = actual.str();
                c.pass = expected == actual;
            });
            if (n >= 3) {
                run_case(out, "h-decomp a=" + a.str() + " kind=G", "closed", [&](CaseResult& c) {
                    const Rational expected = theorem_G_rational(1, 2, 3, a);
                    Rational actual = h_term(2, a);
                    for (int i = 4; i <= n; ++i) actual -= h_term(i, a);
                    c.expected = expected.str();
                    c.actual = actual.str();
                    c.pass = expected == actual;
                });
            }
        }
    }
}

void sweep_h_recurrence(SweepState& st, std::vector<CaseResult>& out) {
    for (int n = 2; n <= st.config.max_n; ++n) {
        for (const Composition& a : enumerate_compositions(n, st.config.max_a)) {
            if (!a.all_positive()) continue;
            for (int i = 1; i <= n; ++i) {
                run_case(out, "h-recurrence a=" + a.str() + " i=" + std::to_string(i), "closed",
                         [&](CaseResult& c) {
                             const Rational expected = h_term(i, a);
                             Rational actual(0);
                             for (int k = 1; k <= n; ++k) actual += h_term(i, a.decremented(k));
                             c.expected = expected.str();
                             c.actual = actual.str();
                             c.pass = expected == actual;
                         });
            }
        }
    }
}

void sweep_boundary_f(SweepState& st, std::vector<CaseResult>& out) {
    for (int n = 3; n <= st.config.max_n; ++n) {
        for (const Composition& a : enumerate_compositions(n, st.config.max_a)) {
            for (int k = 1; k <= n; ++k) {
                if (a.entry(k) != 0) continue;
                run_case(out, "boundaryF a=" + a.str() + " k=" + std::to_string(k), "closed",
                         [&](CaseResult& c) {
                             const Rational rhs = boundary_F_rhs(a, k);
                             const Rational lhs = theorem_F_rational(1, 2, a);
                             c.expected = rhs.str();
                             c.actual = lhs.str();
                             c.pass = lhs == rhs;
                         });
            }
        }
    }
}

void sweep_boundary_g(SweepState& st, std::vector<CaseResult>& out) {
    for (int n = 3; n <= st.config.max_n; ++n) {
        for (const Composition& a : enumerate_compositions(n, st.config.max_a)) {
            for (int k = 1; k <= n; ++k) {
                if (a.entry(k) != 0) continue;
                run_case(out, "boundaryG a=" + a.str() + " k=" + std::to_string(k), "closed",
                         [&](CaseResult& c) {
                             const Rational rhs = boundary_G_rhs(a, k);
                             const Rational lhs = theorem_G_rational(1, 2, 3, a);
                             c.expected = rhs.str();
                             c.actual = lhs.str();
                             c.pass = lhs == rhs;
                         });
            }
        }
    }
}

void sweep_recursion_vs_oracle(SweepState& st, std::vector<CaseResult>& out) {
    for (int n = 1; n <= st.config.max_n; ++n) {
        const auto monomials = enumerate_degree0_monomials(n, 2);
        for (const Composition& a : enumerate_compositions(n, st.config.max_a)) {
            for (const ExponentVector& m : monomials) {
                run_case(out, "recursion-vs-oracle a=" + a.str() + " m=" + m.str(), "recursion",
                         [&](CaseResult& c) {
                             c.expected = st.cached_coefficient(a, m).get_str();
                             c.actual = st.evaluator.evaluate(a, m).get_str();
                             c.pass = c.expected == c.actual;
                         });
            }
        }
    }
}

void sweep_prop(SweepState& st, std::vector<CaseResult>& out) {
    for (int n = 3; n <= st.config.max_n; ++n) {
        for (const Composition& a : enumerate_compositions(n, st.config.max_a)) {
            if (n >= 5) {
                for (const auto& ix : enumerate_distinct_tuples(n, 5)) {
                    run_case(out,
                             "prop1 a=" + a.str() + " r=" + std::to_string(ix[0]) +
                                 " s=" + std::to_string(ix[1]) + " t=" + std::to_string(ix[2]) +
                                 " u=" + std::to_string(ix[3]) + " v=" + std::to_string(ix[4]),
                             "closed", [&](CaseResult& c) {
                                 c.expected = "0";
                                 c.actual =
                                     prop1_check(ix[0], ix[1], ix[2], ix[3], ix[4], a).get_str();
                                 c.pass = c.expected == c.actual;
                             });
                }
            }
            if (n >= 4) {
                for (const auto& ix : enumerate_distinct_tuples(n, 4)) {
                    run_case(out,
                             "prop2 a=" + a.str() + " r=" + std::to_string(ix[0]) +
                                 " s=" + std::to_string(ix[1]) + " u=" + std::to_string(ix[2]) +
                                 " v=" + std::to_string(ix[3]),
                             "closed", [&](CaseResult& c) {
                                 c.expected =
                                     st.cached_oracle_value(
                                           prop2_combination(ix[0], ix[1], ix[2], ix[3], n), a)
                                         .get_str();
                                 c.actual = prop2_value(ix[0], ix[1], ix[2], ix[3], a).get_str();
                                 c.pass = c.expected == c.actual;
                             });
                }
            }
            for (const auto& ix : enumerate_distinct_tuples(n, 3)) {
                run_case(out,
                         "prop3 a=" + a.str() + " r=" + std::to_string(ix[0]) +
                             " s=" + std::to_string(ix[1]) + " t=" + std::to_string(ix[2]),
                         "closed", [&](CaseResult& c) {
                             c.expected = st.cached_oracle_value(
                                                prop3_combination(ix[0], ix[1], ix[2], n), a)
                                              .get_str();
                             c.actual = prop3_value(ix[0], ix[1], ix[2], a).get_str();
                             c.pass = c.expected == c.actual;
                         });
            }
        }
    }
}

void sweep_corollary(SweepState& st, std::vector<CaseResult>& out) {
    for (int n = 3; n <= st.config.max_n; ++n) {
        for (const Composition& a : enumerate_compositions(n, st.config.max_a)) {
            for (int size = 2; size <= n - 1; size += 2) {
                for (int r = 1; r <= n; ++r) {
                    std::vector<int> pool;
                    for (int i = 1; i <= n; ++i) {
                        if (i != r) pool.push_back(i);
                    }
                    for (const auto& pick :
                         enumerate_distinct_tuples(static_cast<int>(pool.size()), size)) {
                        std::vector<int> index_list;
                        index_list.reserve(pick.size());
                        for (int p : pick) index_list.push_back(pool[static_cast<std::size_t>(p - 1)]);
                        std::string label;
                        for (std::size_t i = 0; i < index_list.size(); ++i) {
                            if (i) label += ',';
                            label += std::to_string(index_list[i]);
                        }
                        run_case(out,
                                 "corollary a=" + a.str() + " r=" + std::to_string(r) +
                                     " I=" + label,
                                 "closed", [&](CaseResult& c) {
                                     c.expected = st.cached_oracle_value(
                                                        corollary_combination(r, index_list, n), a)
                                                      .get_str();
                                     c.actual = corollary_value(r, index_list, a).get_str();
                                     c.pass = c.expected == c.actual;
                                 });
                    }
                }
            }
        }
    }
}

void sweep_remark(SweepState& st, std::vector<CaseResult>& out) {
    const int n = st.config.max_n;
    if (n < 4) return;
    for (const auto& ix : enumerate_distinct_tuples(n, 4)) {
        run_case(out,
                 "remark s=" + std::to_string(ix[0]) + " t=" + std::to_string(ix[1]) +
                     " u=" + std::to_string(ix[2]) + " v=" + std::to_string(ix[3]) +
                     " n=" + std::to_string(n),
                 "oracle", [&](CaseResult& c) {
                     c.expected = "0";
                     c.actual = remark_identity_check(ix[0], ix[1], ix[2], ix[3], n) ? "0" : "1";
                     c.pass = c.expected == c.actual;
                 });
    }
}

}  // namespace

std::optional<Suite> parse_suite(const std::string& name) {
    for (Suite s : all_suites()) {
        if (suite_name(s) == name) return s;
    }
    return std::nullopt;
}

std::string suite_name(Suite s) {
    switch (s) {
        case Suite::Dyson: return "dyson";
        case Suite::ThmF: return "thmF";
        case Suite::ThmG: return "thmG";
        case Suite::HDecomp: return "h-decomp";
        case Suite::HRecurrence: return "h-recurrence";
        case Suite::BoundaryF: return "boundaryF";
        case Suite::BoundaryG: return "boundaryG";
        case Suite::RecursionVsOracle: return "recursion-vs-oracle";
        case Suite::Prop: return "prop";
        case Suite::Corollary: return "corollary";
        case Suite::Remark: return "remark";
    }
    return "?";
}

const std::vector<Suite>& all_suites() {
    static const std::vector<Suite> suites = {
        Suite::Dyson,     Suite::ThmF,      Suite::ThmG,
        Suite::HDecomp,   Suite::HRecurrence, Suite::BoundaryF,
        Suite::BoundaryG, Suite::RecursionVsOracle, Suite::Prop,
        Suite::Corollary, Suite::Remark,
    };
    return suites;
}

int VerificationReport::passed() const {
    int count = 0;
    for (const auto& c : cases) count += c.pass ? 1 : 0;
    return count;
}

bool VerificationReport::any_capped() const {
    for (const auto& c : cases) {
        if (c.capped) return true;
    }
    return false;
}

nlohmann::ordered_json VerificationReport::to_json() const {
    nlohmann::ordered_json doc;
    doc["suite"] = suite;
    nlohmann::ordered_json case_list = nlohmann::ordered_json::array();
    for (const auto& c : cases) {
        nlohmann::ordered_json item;
        item["params"] = c.params;
        item["expected"] = c.expected;
        item["actual"] = c.actual;
        item["pass"] = c.pass;
        item["method"] = c.method;
        case_list.push_back(std::move(item));
    }
    doc["cases"] = std::move(case_list);
    doc["summary"] = {{"total", total()},
                      {"passed", passed()},
                      {"failed", failed()},
                      {"elapsed_ms", elapsed_ms}};
    return doc;
}

VerificationReport run_suites(const std::vector<Suite>& suites, const SweepConfig& config) {
    const auto start = std::chrono::steady_clock::now();

    std::vector<Suite> requested;
    for (Suite s : suites) {
        bool seen = false;
        for (Suite r : requested) seen = seen || r == s;
        if (!seen) requested.push_back(s);
    }

    VerificationReport report;
    for (std::size_t i = 0; i < requested.size(); ++i) {
        if (i) report.suite += ',';
        report.suite += suite_name(requested[i]);
    }

    SweepState st(config);
    for (Suite s : requested) {
        switch (s) {
            case Suite::Dyson: sweep_dyson(st, report.cases); break;
            case Suite::ThmF: sweep_thm_f(st, report.cases); break;
            case Suite::ThmG: sweep_thm_g(st, report.cases); break;
            case Suite::HDecomp: sweep_h_decomp(st, report.cases); break;
            case Suite::HRecurrence: sweep_h_recurrence(st, report.cases); break;
            case Suite::BoundaryF: sweep_boundary_f(st, report.cases); break;
            case Suite::BoundaryG: sweep_boundary_g(st, report.cases); break;
            case Suite::RecursionVsOracle: sweep_recursion_vs_oracle(st, report.cases); break;
            case Suite::Prop: sweep_prop(st, report.cases); break;
            case Suite::Corollary: sweep_corollary(st, report.cases); break;
            case Suite::Remark: sweep_remark(st, report.cases); break;
        }
    }

    const auto end = std::chrono::steady_clock::now();
    report.elapsed_ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(end - start).count();
    return report;
}

std::vector<Composition> enumerate_compositions(int n, int max_entry) {
    if (n < 1) throw std::invalid_argument("enumerate_compositions: n must be >= 1");
    if (max_entry < 0) throw std::invalid_argument("enumerate_compositions: negative max_entry");
    std::vector<Composition> out;
    std::vector<int> entries(static_cast<std::size_t>(n), 0);
    while (true) {
        out.emplace_back(entries);
        int pos = n - 1;
        while (pos >= 0 && entries[static_cast<std::size_t>(pos)] == max_entry) {
            entries[static_cast<std::size_t>(pos)] = 0;
            --pos;
        }
        if (pos < 0) break;
        ++entries[static_cast<std::size_t>(pos)];
    }
    return out;
}

std::vector<std::vector<int>> enumerate_distinct_tuples(int n, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> tuple;
    std::vector<bool> used(static_cast<std::size_t>(n + 1), false);
    auto rec = [&](auto&& self) -> void {
        if (static_cast<int>(tuple.size()) == k) {
            out.push_back(tuple);
            return;
        }
        for (int i = 1; i <= n; ++i) {
            if (used[static_cast<std::size_t>(i)]) continue;
            used[static_cast<std::size_t>(i)] = true;
            tuple.push_back(i);
            self(self);
            tuple.pop_back();
            used[static_cast<std::size_t>(i)] = false;
        }
    };
    if (k >= 0 && k <= n) rec(rec);
    return out;
}

std::vector<ExponentVector> enumerate_degree0_monomials(int n, int max_abs) {
    std::vector<ExponentVector> out;
    std::vector<int> exps(static_cast<std::size_t>(n), -max_abs);
    while (true) {
        long long degree = 0;
        for (int e : exps) degree += e;
        if (degree == 0) out.emplace_back(exps);
        int pos = n - 1;
        while (pos >= 0 && exps[static_cast<std::size_t>(pos)] == max_abs) {
            exps[static_cast<std::size_t>(pos)] = -max_abs;
            --pos;
        }
        if (pos < 0) break;
        ++exps[static_cast<std::size_t>(pos)];
    }
    return out;
}

}  // namespace dysonct
