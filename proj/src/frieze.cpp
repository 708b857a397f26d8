#include "dfrieze/frieze.hpp"

#include "dfrieze/errors.hpp"

#include <algorithm>

namespace dfrieze {

namespace {

LaurentPolynomial out_product(const FriezeArray& f, int k, int i, const std::vector<std::vector<LaurentPolynomial>>& cols) {
    const Quiver& q = f.quiver;
    auto value = [&](int col, int j) -> const LaurentPolynomial& {
        return cols[static_cast<std::size_t>(col)][static_cast<std::size_t>(j - 1)];
    };
    LaurentPolynomial p = LaurentPolynomial::constant(value(k, i).rank(), 1);
    for (int j = 1; j <= q.size(); ++j) {
        int bij = q.b(i, j);
        // arrow i -> j gives (k,i) -> (k,j); arrow j -> i gives (k,i) -> (k+1,j)
        if (bij > 0) p *= pow(value(k, j), static_cast<unsigned>(bij));
        if (bij < 0) p *= pow(value(k + 1, j), static_cast<unsigned>(-bij));
    }
    return p;
}

}  // namespace

FriezeArray compute_frieze(const Seed& s, int columns) {
    if (columns < 1) throw WindowOutOfRange("a frieze window needs at least one column");
    auto order = s.quiver.topological_order();
    if (order.empty()) throw InvalidQuiver("the frieze recursion needs an acyclic quiver");
    int n = s.quiver.size();

    FriezeArray f{s.quiver, columns, {}};
    f.values.reserve(static_cast<std::size_t>(columns + 1));
    f.values.push_back(s.variables);
    for (int k = 0; k < columns; ++k) {
        f.values.emplace_back(static_cast<std::size_t>(n), LaurentPolynomial(s.rank()));
        // sources first: every (k+1, j) with j -> i is ready before (k+1, i)
        for (int i : order) {
            LaurentPolynomial rhs = LaurentPolynomial::constant(s.rank(), 1) + out_product(f, k, i, f.values);
            f.values[static_cast<std::size_t>(k + 1)][static_cast<std::size_t>(i - 1)] = div_exact(rhs, f.at(k, i));
        }
    }
    return f;
}

int default_columns(const DynkinClass& d) {
    return d.type == DynkinType::D ? 2 * d.rank : d.rank + 3;
}

std::vector<std::pair<int, int>> mesh_violations(const FriezeArray& f) {
    std::vector<std::pair<int, int>> bad;
    for (int k = 0; k < f.columns; ++k) {
        for (int i = 1; i <= f.size(); ++i) {
            auto lhs = f.at(k, i) * f.at(k + 1, i);
            if (!(lhs - out_product(f, k, i, f.values)).is_one()) bad.emplace_back(k, i);
        }
    }
    return bad;
}

bool unimodular_check(const LaurentPolynomial& a, const LaurentPolynomial& b, const LaurentPolynomial& c,
                      const LaurentPolynomial& d) {
    return (a * d - b * c).is_one();
}

std::optional<int> column_period(const FriezeArray& f) {
    for (int p = 1; 2 * p <= f.columns + 1; ++p) {
        bool same = true;
        for (int k = 0; same && k + p <= f.columns; ++k) {
            same = f.values[static_cast<std::size_t>(k)] == f.values[static_cast<std::size_t>(k + p)];
        }
        if (same) return p;
    }
    return std::nullopt;
}

LatticePoint plane_point(const std::vector<LatticePoint>& F, int k, int i) {
    return F.at(static_cast<std::size_t>(i)) + kColumn * k;
}

PlaneWindow plane_window(const FriezeArray& f) {
    auto F = walk_F(path_letters(f.quiver));
    int m = f.size();
    int rank = f.values.front().front().rank();
    PlaneWindow w;
    for (int k = 0; k <= f.columns; ++k) {
        for (int i = 1; i <= m; ++i) w.emplace(plane_point(F, k, i), f.at(k, i));
    }
    auto one = LaurentPolynomial::constant(rank, 1);
    for (int k = -1; k <= f.columns + 1; ++k) {
        w.emplace(plane_point(F, k, 0), one);
        w.emplace(plane_point(F, k, m + 1), one);
    }
    return w;
}

FriezeArray part_F(const FriezeArray& f) {
    int n = f.size();
    if (f.columns < n) throw WindowOutOfRange("part F needs " + std::to_string(n) + " columns");
    FriezeArray out{f.quiver, n, {}};
    out.values.assign(f.values.begin(), f.values.begin() + n + 1);
    return out;
}

const LaurentPolynomial& ModelledQuiver::row_value(int k, int r) const {
    int n = rank();
    if (r == n + 1) return merged.at(static_cast<std::size_t>(k));
    if (r < n + 1 || r > 2 * n - 1) throw WindowOutOfRange("row " + std::to_string(r) + " is not in the modelled quiver");
    return tail.at(static_cast<std::size_t>(k)).at(static_cast<std::size_t>(r - n - 2));
}

ModelledQuiver modelled_quiver(const FriezeArray& part) {
    ForkInfo info = fork_info(part.quiver);
    if (info.configuration == ForkConfiguration::Mixed) {
        throw UnsupportedFork("the modelled quiver is defined for both-entering or both-leaving forks only");
    }
    int n = part.size();
    if (part.columns < n) throw WindowOutOfRange("modelled quiver needs columns 0.." + std::to_string(n));
    ModelledQuiver m{part.quiver, {}, {}};
    for (int k = 0; k <= n; ++k) {
        m.merged.push_back(part.at(k, 1) * part.at(k, 2));
        std::vector<LaurentPolynomial> rest;
        for (int i = 3; i <= n; ++i) rest.push_back(part.at(k, i));
        m.tail.push_back(std::move(rest));
    }
    return m;
}

std::vector<LatticePoint> lambda_prime_walk(const Quiver& d_quiver) {
    return walk_F(path_letters(build_q_prime(d_quiver).path));
}

PlaneWindow modelled_window(const ModelledQuiver& m) {
    int n = m.rank();
    auto F = lambda_prime_walk(m.quiver);
    PlaneWindow w;
    for (int r = n + 1; r <= 2 * n - 1; ++r) {
        for (int k = 0; k <= n; ++k) w.emplace(plane_point(F, k, r), m.row_value(k, r));
    }
    return w;
}

Completion complete_downward(const ModelledQuiver& m) {
    int n = m.rank();
    int rank = m.merged.front().rank();
    auto F = lambda_prime_walk(m.quiver);
    Completion out{modelled_window(m), LaurentPolynomial(rank), {}};
    auto& w = out.window;
    auto one = LaurentPolynomial::constant(rank, 1);

    for (int r = n; r >= 1; --r) {
        std::vector<LatticePoint> upper;
        for (const auto& [p, v] : w) {
            if (p.row() == r + 1) upper.push_back(p);
        }
        std::sort(upper.begin(), upper.end());
        for (std::size_t j = 0; j + 1 < upper.size(); ++j) {
            LatticePoint a = upper[j];
            LatticePoint d = upper[j + 1];
            if (d != a + kColumn) throw WindowOutOfRange("row " + std::to_string(r + 1) + " has a gap at " + a.to_string());
            auto b = w.find(a + kEast);
            if (b == w.end()) throw WindowOutOfRange("missing value north of " + a.to_string());
            // ad - bc = 1
            w.emplace(a - kSouth, div_exact(w.at(a) * w.at(d) - one, b->second));
        }
    }
    for (const auto& [p, v] : w) {
        if (p.row() == 1) out.apex = p;
    }

    // h0 sits on the middle vertex f_n of Lambda'. Two squares around it share
    // one unknown interior value, which eliminates to h0 = (A+B)/(AW - BC).
    auto at = [&](int i) { return F.at(static_cast<std::size_t>(i)); };
    const LaurentPolynomial& fork_product = m.merged.front();
    const LaurentPolynomial& x3 = m.tail.front().front();
    LatticePoint inner;
    if (fork_info(m.quiver).configuration == ForkConfiguration::BothEntering) {
        if (at(n - 1) != at(n) - kEast || at(n - 2) != at(n - 1) - kSouth) throw WindowOutOfRange("unexpected F shape");
        inner = at(n) + kColumn;
    } else {
        auto G = walk_tF(F);
        auto g = [&](int i) { return G.at(static_cast<std::size_t>(i)); };
        if (g(n - 1) != g(n) - kSouth || g(n - 2) != g(n - 1) - kEast || g(n + 1) != g(n) + kSouth) {
            throw WindowOutOfRange("unexpected tF shape");
        }
        inner = g(n) - kColumn;
    }
    const LaurentPolynomial& W = w.at(inner);
    out.h0 = div_exact(fork_product + fork_product, fork_product * W - fork_product * x3);
    return out;
}

std::set<LatticePoint> fundamental_region(LatticePoint top, int m) {
    std::set<LatticePoint> pts;
    for (int r = 1; r <= m; ++r) {
        for (int u = top.u; u <= top.u + r; ++u) pts.insert({u, r - u});
    }
    return pts;
}

FundamentalQuiver fundamental_quiver(const FriezeArray& f, int k0) {
    int m = f.size();
    auto F = walk_F(path_letters(f.quiver));
    if (k0 < 0 || k0 > f.columns) throw WindowOutOfRange("k0 = " + std::to_string(k0) + " outside the window");
    FundamentalQuiver out{k0, {}, {}};
    for (LatticePoint p : fundamental_region(plane_point(F, k0, m), m)) {
        int i = p.row();
        int k = p.u - F[static_cast<std::size_t>(i)].u;
        if (k < 0 || k > f.columns) {
            throw WindowOutOfRange("fundamental quiver at k0 = " + std::to_string(k0) + " needs column " + std::to_string(k));
        }
        out.positions.emplace_back(k, i);
        out.window.emplace(p, f.at(k, i));
    }
    std::sort(out.positions.begin(), out.positions.end());
    return out;
}

}  // namespace dfrieze
