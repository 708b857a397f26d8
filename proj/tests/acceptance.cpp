// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include "dfrieze/boundary.hpp"
#include "dfrieze/checks.hpp"
#include "dfrieze/errors.hpp"
#include "dfrieze/frieze.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <string>
#include <vector>

using namespace dfrieze;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

/// Collects failures for one criterion; prints them indented under the verdict.
struct Criterion {
    int number;
    std::vector<std::string> failures;
    std::vector<std::string> notes;

    void expect(bool ok, const std::string& what) {
        if (!ok) failures.push_back(what);
    }
    // an exception ends the body and counts as one failure
    void guard(const std::string& what, const std::function<void()>& body) {
        try {
            body();
        } catch (const std::exception& e) {
            failures.push_back(what + ": " + e.what());
        }
    }
    bool report(double secs, double limit) {
        if (secs >= limit) {
            failures.push_back("took " + std::to_string(secs) + " s, limit " + std::to_string(limit) + " s");
        }
        bool ok = failures.empty();
        std::printf("criterion %d: %s (%.2f s)\n", number, ok ? "PASS" : "FAIL", secs);
        for (const auto& n : notes) std::printf("    %s\n", n.c_str());
        for (const auto& f : failures) std::printf("    FAIL %s\n", f.c_str());
        return ok;
    }
};

Quiver Q(const std::string& text) { return parse_spec(text).quiver; }
LaurentPolynomial P(int rank, const std::string& text) { return parse_polynomial(rank, text); }

Seed ones_seed(const Quiver& q) {
    Seed s{q, {}};
    for (int i = 1; i <= q.size(); ++i) s.variables.push_back(LaurentPolynomial::constant(q.size(), 1));
    return s;
}

bool positive_integer(const LaurentPolynomial& v) {
    if (!v.is_constant()) return false;
    const Rational& c = v.leading().second;
    return c.get_den() == 1 && sgn(c) > 0;
}

bool positive_laurent(const LaurentPolynomial& v) {
    return !v.is_zero() && normal_form(v).numerator.has_positive_coefficients();
}

const EvaluatedPoint* point_with_word(const std::vector<EvaluatedPoint>& points, const std::string& word) {
    for (const auto& e : points) {
        if (e.address.word.to_string() == word) return &e;
    }
    return nullptr;
}

/// Formula values at every point, with merged bottom-row points split.
std::set<LaurentPolynomial> formula_set(const std::vector<EvaluatedPoint>& points) {
    std::set<LaurentPolynomial> out;
    for (const auto& e : points) {
        if (e.split) {
            out.insert(e.split->first);
            out.insert(e.split->second);
        } else {
            out.insert(e.value);
        }
    }
    return out;
}

// ---- 1: worked examples ------------------------------------------------

bool criterion1() {
    Criterion c{1, {}, {}};
    double worst = 0;
    auto timed = [&](const std::string& name, const std::function<void()>& body) {
        auto t0 = Clock::now();
        c.guard(name, body);
        double s = seconds_since(t0);
        worst = std::max(worst, s);
        c.expect(s < 1.0, name + " took " + std::to_string(s) + " s");
    };

    timed("D4 values V1 V2 V3", [&] {
        int n = 4;
        auto model = boundary_model(Seed::initial(Q("D4: 1>3 2>3 3>4")));
        auto points = evaluate_points(model);
        auto* v1 = point_with_word(points, "u3 y u1*u2 x 1 x u1*u2 x u3");
        auto* v2 = point_with_word(points, "u4 y u3 y u1*u2");
        auto* v3 = point_with_word(points, "u1*u2 y u3 y u4 x 1");
        c.expect(v1 && v2 && v3, "the three words are not all present");
        if (!(v1 && v2 && v3)) return;
        c.expect(v1->value == P(n, "(1+u3)^2/(u1*u2)"), "V1 = " + v1->value.to_fraction_string());
        c.expect(v1->split.has_value(), "V1 is not split");
        if (v1->split) {
            std::set<LaurentPolynomial> halves{v1->split->first, v1->split->second};
            c.expect(halves == std::set<LaurentPolynomial>{P(n, "(1+u3)/u1"), P(n, "(1+u3)/u2")}, "V1 split");
        }
        c.expect(v2->value == P(n, "(u4+u1*u2)/u3"), "V2 = " + v2->value.to_fraction_string());
        c.expect(v3->value == P(n, "(u4+u1*u2*(1+u3))/(u3*u4)"), "V3 = " + v3->value.to_fraction_string());
    });

    timed("boundary words", [&] {
        auto d4 = boundary_model(Seed::initial(Q("D4: 1>3 2>3 3>4")));
        c.expect(d4.word.to_string() == "u4 y u3 y u1*u2 x 1 x u1*u2 x u3 x u4", "D4 lambda' " + d4.word.to_string());
        c.expect(d4.F.word.to_string() == "1 y u4 y u3 y u1*u2 x 1 x u1*u2 x u3 x u4 x 1", "D4 F");

        auto d6 = boundary_model(Seed::initial(Q("D6: 3>1 3>2 4>3 4>5 5>6")));
        c.expect(d6.F.word.to_string() == "1 y u6 y u5 y u4 x u3 x u1*u2 x 1 x u1*u2 y u3 y u4 x u5 x u6 x 1",
                 "D6 F " + d6.F.word.to_string());
        c.expect(d6.tF.word.to_string() == "1 x u6 y u5 y u4 x u3 x u1*u2 y 1 y u1*u2 y u3 y u4 x u5 x u6 y 1",
                 "D6 tF " + d6.tF.word.to_string());
        auto points = evaluate_points(d6);
        struct Expected {
            const char* word;
            PointCase kind;
        };
        for (auto [word, kind] : {Expected{"u5 y u4 x u3 x u1*u2 x 1 x u1*u2 y u3 y u4 x u5", PointCase::FF},
                                  Expected{"u3 y u1*u2 x 1 x u1*u2 x u3 x u4", PointCase::TT},
                                  Expected{"u6 y u5 y u4 x u3 x u1*u2 x 1 x u1*u2 y u3 y u4", PointCase::Mixed}}) {
            auto* e = point_with_word(points, word);
            c.expect(e != nullptr && e->address.kind == kind, std::string("D6 ") + to_string(kind) + " word " + word);
        }
    });

    timed("D5 frieze entries and merged row", [&] {
        int n = 5;
        auto f = compute_frieze(Seed::initial(Q("D5: 1>3 2>3 3>4 4>5")), n);
        c.expect(f.at(1, 1) == P(n, "(1+u3)/u1"), "a(1,1)");
        c.expect(f.at(1, 2) == P(n, "(1+u3)/u2"), "a(1,2)");
        auto m = modelled_quiver(part_F(f));
        c.expect(m.merged.front() == P(n, "u1*u2") && m.merged.back() == P(n, "u1*u2"), "merged row ends");
        c.expect(m.merged[1] == P(n, "(1+u3)^2/(u1*u2)"), "merged row second entry");
    });

    timed("downward completion", [&] {
        int n = 4;
        auto m = modelled_quiver(part_F(compute_frieze(Seed::initial(Q("D4: 1>3 2>3 3>4")), n)));
        auto comp = complete_downward(m);
        auto F = lambda_prime_walk(m.quiver);
        c.expect(comp.window.at(F[static_cast<std::size_t>(n) + 1] - kSouth) == P(n, "2+u3"), "2+u3 entry");
        c.expect(comp.h0.is_one(), "h0 = " + comp.h0.to_fraction_string());
    });

    return c.report(worst, 1.0);
}

// ---- 2: formula against recursion and mutation -------------------------

bool criterion2() {
    Criterion c{2, {}, {}};
    auto t0 = Clock::now();
    std::size_t orientations = 0, points_checked = 0;
    for (int n = 4; n <= 6; ++n) {
        for (const auto& q : all_orientations({DynkinType::D, n})) {
            ++orientations;
            c.guard("D" + std::to_string(n) + " " + q.to_string(), [&] {
                auto seed = Seed::initial(q);
                bool mixed = fork_info(q).configuration == ForkConfiguration::Mixed;
                auto part = part_F(compute_frieze(mixed ? mutate_seed(seed, 2) : seed, n));
                auto model = boundary_model(seed);
                auto lambda = plane_window(compute_frieze(model.lambda, 2 * n + 2));
                auto points = evaluate_points(model);
                for (const auto& e : points) {
                    ++points_checked;
                    const auto& p = e.address.position;
                    bool ok = lambda.count(p) && lambda.at(p) == e.value;
                    int row = e.address.row, k = e.address.column;
                    if (row == n + 1) {
                        ok = ok && e.value == part.at(k, 1) * part.at(k, 2);
                    } else {
                        ok = ok && e.value == part.at(k, row - n + 1);
                    }
                    c.expect(ok, q.to_string() + " at " + p.to_string());
                }
                auto closure = mutation_closure(seed);
                c.expect(formula_set(points) == closure.variables, q.to_string() + ": set differs from mutation");
            });
        }
    }
    double s = seconds_since(t0);
    c.notes.push_back(std::to_string(orientations) + " orientations, " + std::to_string(points_checked) + " points");
    return c.report(s, 120.0);
}

// ---- 3: property suites ------------------------------------------------

bool criterion3() {
    Criterion c{3, {}, {}};
    auto t0 = Clock::now();

    // unimodular rule and Laurent positivity on friezes and on T-values
    for (int m = 1; m <= 7; ++m) {
        for (const auto& q : all_orientations({DynkinType::A, m})) {
            auto f = compute_frieze(Seed::initial(q), 2 * (m + 3));
            c.expect(mesh_violations(f).empty() && unimodular_violations(plane_window(f)).empty(),
                     "A" + std::to_string(m) + " " + q.to_string() + " unimodular");
            for (const auto& col : f.values) {
                for (const auto& v : col) c.expect(positive_laurent(v), "A positivity " + v.to_fraction_string());
            }
        }
    }
    for (int n = 4; n <= 6; ++n) {
        for (const auto& q : all_orientations({DynkinType::D, n})) {
            c.guard(q.to_string(), [&] {
                auto seed = Seed::initial(q);
                auto f = compute_frieze(seed, 2 * n);
                c.expect(mesh_violations(f).empty(), q.to_string() + " frieze relation");
                for (const auto& col : f.values) {
                    for (const auto& v : col) c.expect(positive_laurent(v), "D positivity " + v.to_fraction_string());
                }
                auto model = boundary_model(seed);
                c.expect(unimodular_violations(plane_window(compute_frieze(model.lambda, 2 * n + 2))).empty(),
                         q.to_string() + " lambda' unimodular");
                auto points = evaluate_points(model);
                PlaneWindow T;
                for (const auto& e : points) T.emplace(e.address.position, e.value);
                c.expect(unimodular_violations(T).empty(), q.to_string() + " T-value squares");
                for (const auto& v : formula_set(points)) c.expect(positive_laurent(v), "T positivity");

                // split against rows 1 and 2, both-entering/leaving forks
                if (fork_info(q).configuration != ForkConfiguration::Mixed) {
                    auto part = part_F(compute_frieze(seed, n));
                    for (const auto& e : points) {
                        if (e.address.row != n + 1) continue;
                        c.expect(e.split.has_value(), q.to_string() + " bottom point not split");
                        if (!e.split) continue;
                        int k = e.address.column;
                        std::set<LaurentPolynomial> halves{e.split->first, e.split->second};
                        c.expect(e.split->first * e.split->second == e.value &&
                                     halves == std::set<LaurentPolynomial>{part.at(k, 1), part.at(k, 2)},
                                 q.to_string() + " split at column " + std::to_string(k));
                    }
                }

                // u1 <-> u2: the set is invariant when the fork is symmetric; a
                // mixed fork maps onto the seed with labels 1 and 2 exchanged
                std::set<LaurentPolynomial> swapped;
                for (const auto& v : formula_set(points)) swapped.insert(swap_variables(v, 1, 2));
                std::vector<int> perm{0, 2, 1};
                for (int i = 3; i <= n; ++i) perm.push_back(i);
                auto mirror = fork_info(q).configuration == ForkConfiguration::Mixed ? q.relabel(perm) : q;
                c.expect(swapped == all_cluster_variables(Seed::initial(mirror)), q.to_string() + " u1/u2 swap");
            });
        }
    }

    // mutation is an involution, along random walks
    std::mt19937 rng(3);
    for (int n = 4; n <= 6; ++n) {
        for (const auto& q : all_orientations({DynkinType::D, n})) {
            auto s = Seed::initial(q);
            for (int step = 0; step < 6; ++step) {
                int k = 1 + static_cast<int>(rng() % static_cast<unsigned>(n));
                c.expect(mutate_seed(mutate_seed(s, k), k) == s, q.to_string() + " involution at " + std::to_string(k));
                s = mutate_seed(s, k);
            }
        }
    }

    auto det = determinant_check(500, 1);
    c.expect(det.passed, "determinant identities: " + det.detail);
    c.notes.push_back("determinant identities: " + det.detail);
    return c.report(seconds_since(t0), 1e9);
}

// ---- 4: counts ---------------------------------------------------------

bool criterion4() {
    Criterion c{4, {}, {}};
    auto t0 = Clock::now();
    struct Case {
        const char* spec;
        std::size_t count;
    };
    for (auto [spec, count] : {Case{"A3: 1>2 2>3", 9}, Case{"D4: 1>3 2>3 3>4", 16}, Case{"D5: 1>3 2>3 3>4 4>5", 25}}) {
        c.guard(spec, [&] {
            auto cls = resolve(parse_spec(spec));
            auto seed = Seed::initial(cls.canonical);
            auto closure = mutation_closure(seed);
            c.expect(closure.variables.size() == count,
                     std::string(spec) + ": mutation gives " + std::to_string(closure.variables.size()));
            std::set<LaurentPolynomial> formula;
            if (cls.dynkin.type == DynkinType::D) {
                formula = all_cluster_variables(seed);
            } else {
                auto fq = fundamental_quiver(compute_frieze(seed, cls.dynkin.rank + 3), 0);
                for (const auto& [p, v] : fq.window) formula.insert(v);
            }
            c.expect(formula == closure.variables, std::string(spec) + ": formula path differs");
            c.notes.push_back(cls.dynkin.label() + ": " + std::to_string(closure.variables.size()) + " cluster variables");
        });
    }
    return c.report(seconds_since(t0), 1e9);
}

// ---- 5: integer friezes ------------------------------------------------

bool criterion5() {
    Criterion c{5, {}, {}};
    auto t0 = Clock::now();
    for (const auto& q : all_orientations({DynkinType::D, 4})) {
        auto f = compute_frieze(ones_seed(q), 16);
        for (const auto& col : f.values) {
            for (const auto& v : col) c.expect(positive_integer(v), "D4 " + q.to_string() + " value " + v.to_string());
        }
    }
    for (int m = 1; m <= 8; ++m) {
        for (const auto& q : all_orientations({DynkinType::A, m})) {
            int period = m + 3;
            auto f = compute_frieze(ones_seed(q), 3 * period);
            for (const auto& col : f.values) {
                for (const auto& v : col) c.expect(positive_integer(v), "A" + std::to_string(m) + " value " + v.to_string());
            }
            for (int k = 0; k + period <= f.columns; ++k) {
                c.expect(f.values[static_cast<std::size_t>(k)] == f.values[static_cast<std::size_t>(k + period)],
                         "A" + std::to_string(m) + " " + q.to_string() + " column " + std::to_string(k));
            }
        }
    }
    return c.report(seconds_since(t0), 10.0);
}

}  // namespace

int main() {
    bool ok = true;
    ok = criterion1() && ok;
    ok = criterion2() && ok;
    ok = criterion3() && ok;
    ok = criterion4() && ok;
    ok = criterion5() && ok;
    std::cout << (ok ? "all criteria pass" : "some criteria fail") << '\n';
    return ok ? 0 : 1;
}
