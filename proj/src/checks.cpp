#include "dfrieze/checks.hpp"

#include "dfrieze/boundary.hpp"
#include "dfrieze/errors.hpp"

#include <functional>
#include <map>
#include <random>
#include <set>

namespace dfrieze {

namespace {

CheckResult guarded(const std::string& name, const std::function<std::pair<bool, std::string>()>& body) {
    try {
        auto [ok, detail] = body();
        return {name, ok, detail};
    } catch (const BudgetExceeded&) {
        throw;
    } catch (const Error& e) {
        return {name, false, e.what()};
    }
}

std::string count_detail(std::size_t bad, std::size_t total, const std::string& what) {
    if (bad == 0) return std::to_string(total) + " " + what;
    return std::to_string(bad) + " of " + std::to_string(total) + " " + what + " fail";
}

bool positive_laurent(const LaurentPolynomial& v) {
    return !v.is_zero() && normal_form(v).numerator.has_positive_coefficients();
}

std::vector<CheckResult> run_d_checks(const Seed& seed, const CheckOptions& options) {
    int n = seed.quiver.size();
    bool mixed = fork_info(seed.quiver).configuration == ForkConfiguration::Mixed;
    // the seed whose frieze carries Lambda' (mutated at 2 for a mixed fork)
    Seed both = mixed ? mutate_seed(seed, 2) : seed;

    auto frieze = compute_frieze(seed, 2 * n);
    auto part = part_F(compute_frieze(both, n));
    auto model = boundary_model(seed);
    auto points = evaluate_points(model);
    std::set<LaurentPolynomial> formula;
    for (const auto& e : points) {
        if (e.split) {
            formula.insert(e.split->first);
            formula.insert(e.split->second);
        } else {
            formula.insert(e.value);
        }
    }

    std::vector<CheckResult> out;
    out.push_back(guarded("unimodular", [&]() {
        std::size_t total = 0, bad = mesh_violations(frieze).size();
        total += static_cast<std::size_t>(frieze.columns) * static_cast<std::size_t>(n);
        auto lambda = plane_window(compute_frieze(model.lambda, 2 * n + 2));
        bad += unimodular_violations(lambda).size();
        total += unimodular_squares(lambda);
        PlaneWindow T;
        for (const auto& e : points) T.emplace(e.address.position, e.value);
        bad += unimodular_violations(T).size();
        total += unimodular_squares(T);
        return std::pair{bad == 0, count_detail(bad, total, "relations")};
    }));
    out.push_back(guarded("laurent-positivity", [&]() {
        std::size_t bad = 0, total = 0;
        for (const auto& col : frieze.values) {
            for (const auto& v : col) {
                ++total;
                if (!positive_laurent(v)) ++bad;
            }
        }
        for (const auto& v : formula) {
            ++total;
            if (!positive_laurent(v)) ++bad;
        }
        return std::pair{bad == 0, count_detail(bad, total, "values")};
    }));
    out.push_back(guarded("formula-vs-recursion", [&]() {
        auto completion = complete_downward(modelled_quiver(part));
        auto lambda = plane_window(compute_frieze(model.lambda, 2 * n + 2));
        std::size_t bad = 0;
        for (const auto& e : points) {
            const auto& p = e.address.position;
            bool ok = completion.window.at(p) == e.value && lambda.at(p) == e.value;
            if (e.address.row > n + 1) ok = ok && part.at(e.address.column, e.address.row - n + 1) == e.value;
            if (!ok) ++bad;
        }
        return std::pair{bad == 0, count_detail(bad, points.size(), "points")};
    }));
    out.push_back(guarded("split", [&]() {
        std::size_t bad = 0, total = 0;
        for (const auto& e : points) {
            if (!e.split) continue;
            ++total;
            int k = e.address.column;
            std::set<LaurentPolynomial> halves{e.split->first, e.split->second};
            bool ok = e.split->first * e.split->second == e.value &&
                      halves == std::set<LaurentPolynomial>{part.at(k, 1), part.at(k, 2)};
            if (!ok) ++bad;
        }
        return std::pair{bad == 0, count_detail(bad, total, "merged points")};
    }));
    out.push_back(guarded("h0", [&]() {
        auto c = complete_downward(modelled_quiver(part));
        return std::pair{c.h0.is_one(), "h0 = " + c.h0.to_fraction_string()};
    }));
    out.push_back(guarded("mutation-closure", [&]() {
        auto closure = mutation_closure(seed, options.max_seeds);
        bool ok = closure.variables == formula;
        return std::pair{ok, std::to_string(formula.size()) + " formula values, " +
                                 std::to_string(closure.variables.size()) + " by mutation (" +
                                 std::to_string(closure.seeds) + " seeds)"};
    }));
    out.push_back(guarded("swap-equivariance", [&]() {
        std::vector<int> perm{0, 2, 1};
        for (int i = 3; i <= n; ++i) perm.push_back(i);
        std::set<LaurentPolynomial> swapped;
        for (const auto& v : formula) swapped.insert(swap_variables(v, 1, 2));
        auto mirrored = all_cluster_variables(Seed::initial(seed.quiver.relabel(perm), seed.rank()));
        return std::pair{swapped == mirrored, mixed ? "relabelled seed" : "invariant set"};
    }));
    out.push_back(determinant_check(options.determinant_trials, options.random_seed));
    return out;
}

std::vector<CheckResult> run_a_checks(const Seed& seed, const CheckOptions& options) {
    int m = seed.quiver.size();
    auto frieze = compute_frieze(seed, 2 * (m + 3));

    std::vector<CheckResult> out;
    out.push_back(guarded("unimodular", [&]() {
        auto w = plane_window(frieze);
        std::size_t bad = mesh_violations(frieze).size() + unimodular_violations(w).size();
        std::size_t total = static_cast<std::size_t>(frieze.columns) * static_cast<std::size_t>(m) + unimodular_squares(w);
        return std::pair{bad == 0, count_detail(bad, total, "relations")};
    }));
    out.push_back(guarded("laurent-positivity", [&]() {
        std::size_t bad = 0, total = 0;
        for (const auto& col : frieze.values) {
            for (const auto& v : col) {
                ++total;
                if (!positive_laurent(v)) ++bad;
            }
        }
        return std::pair{bad == 0, count_detail(bad, total, "values")};
    }));
    out.push_back(guarded("mutation-closure", [&]() {
        auto fq = fundamental_quiver(frieze, 0);
        std::set<LaurentPolynomial> values;
        for (const auto& [p, v] : fq.window) values.insert(v);
        auto closure = mutation_closure(seed, options.max_seeds);
        bool ok = values == closure.variables && fq.window.size() == values.size();
        return std::pair{ok, std::to_string(values.size()) + " fundamental quiver values, " +
                                 std::to_string(closure.variables.size()) + " by mutation"};
    }));
    out.push_back(guarded("periodicity", [&]() {
        Seed ones{seed.quiver, {}};
        for (int i = 1; i <= m; ++i) ones.variables.push_back(LaurentPolynomial::constant(seed.rank(), 1));
        auto f = compute_frieze(ones, 2 * (m + 3));
        bool ok = true;
        for (const auto& col : f.values) {
            for (const auto& v : col) {
                const Rational& c = v.leading().second;
                ok = ok && v.is_constant() && c.get_den() == 1 && sgn(c) > 0;
            }
        }
        for (int k = 0; k + m + 3 <= f.columns; ++k) ok = ok && f.values[static_cast<std::size_t>(k)] == f.values[static_cast<std::size_t>(k + m + 3)];
        return std::pair{ok, "all-ones integers, period " + std::to_string(m + 3)};
    }));
    out.push_back(determinant_check(options.determinant_trials, options.random_seed));
    return out;
}

}  // namespace

std::vector<CheckResult> run_checks(const Seed& seed, const DynkinClass& type, const CheckOptions& options) {
    if (type.type == DynkinType::D) return run_d_checks(seed, options);
    return run_a_checks(seed, options);
}

CheckResult determinant_check(int trials, unsigned random_seed) {
    return guarded("determinant-identities", [&]() {
        std::mt19937 rng(random_seed);
        const int rank = 6;
        auto value = [&]() {
            LaurentPolynomial p(rank);
            while (p.is_zero()) {
                int terms = rng() % 4 == 0 ? 2 : 1;
                for (int t = 0; t < terms; ++t) {
                    std::vector<int> e(static_cast<std::size_t>(rank) + 1, 0);
                    for (int i = 1; i <= rank; ++i) e[static_cast<std::size_t>(i)] = static_cast<int>(rng() % 4) - 1;
                    int c = static_cast<int>(rng() % 7) - 3;
                    if (c != 0) p += LaurentPolynomial::term(Monomial(e), Rational(c));
                }
            }
            return p;
        };
        int bad = 0;
        for (int t = 0; t < trials; ++t) {
            std::size_t k = 1 + rng() % 5, l = 1 + rng() % 5;
            std::vector<LaurentPolynomial> bs, cs;
            for (std::size_t i = 0; i < k; ++i) bs.push_back(value());
            for (std::size_t i = 0; i < l; ++i) cs.push_back(value());
            auto a = value(), b = value(), c = value(), d = value();
            Mat2 A{value(), value(), value(), value()};
            if (!row_identity_defect(a, bs, b).is_zero()) ++bad;
            if (!product_identity_defect(a, bs, b, A, c, cs, d).is_zero()) ++bad;
        }
        return std::pair{bad == 0, count_detail(static_cast<std::size_t>(bad), static_cast<std::size_t>(2 * trials),
                                                "randomized identities")};
    });
}

CheckResult frieze_relation_check(const FriezeArray& f) {
    return guarded("unimodular", [&]() {
        auto bad = mesh_violations(f);
        std::string detail = count_detail(bad.size(), static_cast<std::size_t>(f.columns) * static_cast<std::size_t>(f.size()),
                                          "relations");
        if (!bad.empty()) {
            detail += "; first at (" + std::to_string(bad.front().first) + "," + std::to_string(bad.front().second) + ")";
        }
        return std::pair{bad.empty(), detail};
    });
}

std::vector<CheckResult> merge_results(const std::vector<std::vector<CheckResult>>& runs) {
    std::vector<std::string> order;
    std::map<std::string, std::pair<int, int>> tally;  // passed, total
    std::map<std::string, std::string> first_failure;
    for (const auto& run : runs) {
        for (const auto& r : run) {
            if (!tally.count(r.name)) order.push_back(r.name);
            auto& t = tally[r.name];
            ++t.second;
            if (r.passed) {
                ++t.first;
            } else if (!first_failure.count(r.name)) {
                first_failure[r.name] = r.detail;
            }
        }
    }
    std::vector<CheckResult> out;
    for (const auto& name : order) {
        auto [ok, total] = tally[name];
        std::string detail = std::to_string(ok) + "/" + std::to_string(total) + " runs";
        if (first_failure.count(name)) detail += "; " + first_failure[name];
        out.push_back({name, ok == total, detail});
    }
    return out;
}

}  // namespace dfrieze
