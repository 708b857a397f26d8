#include "dfrieze/boundary.hpp"

#include "dfrieze/errors.hpp"

#include <algorithm>

namespace dfrieze {

namespace {

using Row = std::pair<LaurentPolynomial, LaurentPolynomial>;

std::string render_value(const LaurentPolynomial& v) {
    if (v.size() <= 1) return v.to_string();
    return "(" + v.to_fraction_string() + ")";
}

LaurentPolynomial product(const std::vector<LaurentPolynomial>& xs, std::size_t from, std::size_t to, int rank) {
    auto p = LaurentPolynomial::constant(rank, 1);
    for (std::size_t i = from; i <= to && i < xs.size(); ++i) p *= xs[i];
    return p;
}

}  // namespace

std::string BoundaryWord::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i > 0) {
            out += ' ';
            out += to_char(letters[i - 1]);
            out += ' ';
        }
        out += render_value(values[i]);
    }
    return out;
}

BoundaryWord BoundaryWord::slice(std::size_t from, std::size_t to) const {
    if (from > to || to >= values.size()) throw std::out_of_range("BoundaryWord::slice");
    BoundaryWord w;
    w.values.assign(values.begin() + static_cast<std::ptrdiff_t>(from), values.begin() + static_cast<std::ptrdiff_t>(to) + 1);
    w.letters.assign(letters.begin() + static_cast<std::ptrdiff_t>(from), letters.begin() + static_cast<std::ptrdiff_t>(to));
    return w;
}

BoundaryWord BoundaryWord::swapped() const {
    BoundaryWord w = *this;
    for (auto& l : w.letters) l = dfrieze::swapped(l);
    return w;
}

BoundaryWord to_boundary(const Seed& path_seed) {
    const Quiver& q = path_seed.quiver;
    if (static_cast<int>(q.arrows().size()) != std::max(q.size() - 1, 0)) {
        throw InvalidQuiver("not a path quiver: " + q.to_string());
    }
    return {path_seed.variables, path_letters(q)};
}

BoundaryWord transpose(const BoundaryWord& w) {
    BoundaryWord t;
    t.values.assign(w.values.rbegin(), w.values.rend());
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) t.letters.push_back(swapped(*it));
    return t;
}

std::optional<std::size_t> PositionBoundary::index_of(LatticePoint p) const {
    auto it = std::find(coords.begin(), coords.end(), p);
    if (it == coords.end()) return std::nullopt;
    return static_cast<std::size_t>(it - coords.begin());
}

PositionBoundary position_boundary(const BoundaryWord& w) {
    if (w.values.empty()) throw std::invalid_argument("position_boundary: empty word");
    auto one = LaurentPolynomial::constant(w.values.front().rank(), 1);
    PositionBoundary F;
    F.word.values.push_back(one);
    F.word.values.insert(F.word.values.end(), w.values.begin(), w.values.end());
    F.word.values.push_back(one);
    F.word.letters.push_back(Letter::Y);
    F.word.letters.insert(F.word.letters.end(), w.letters.begin(), w.letters.end());
    F.word.letters.push_back(Letter::X);
    F.coords = walk_F(w.letters);
    return F;
}

PositionBoundary transpose_boundary(const PositionBoundary& F) {
    std::size_t last = F.size() - 1;
    BoundaryWord inner = transpose(F.word.slice(1, last - 1));
    auto one = F.word.values.front();
    PositionBoundary G;
    G.word.values.push_back(one);
    G.word.values.insert(G.word.values.end(), inner.values.begin(), inner.values.end());
    G.word.values.push_back(F.word.values.back());
    G.word.letters.push_back(Letter::X);
    G.word.letters.insert(G.word.letters.end(), inner.letters.begin(), inner.letters.end());
    G.word.letters.push_back(Letter::Y);
    G.coords = walk_tF(F.coords);
    return G;
}

std::string to_string(PointCase c) {
    switch (c) {
        case PointCase::Boundary: return "boundary";
        case PointCase::FF: return "FF";
        case PointCase::TT: return "TT";
        case PointCase::Mixed: return "mixed";
    }
    return "?";
}

PointAddress address_of(const PositionBoundary& F, const PositionBoundary& tF, LatticePoint p) {
    int m = static_cast<int>(F.size()) - 2;
    if (m < 1 || m % 2 == 0 || tF.size() != F.size()) {
        throw std::invalid_argument("address_of: boundaries of an A_{2n-1} word expected");
    }
    int n = (m + 1) / 2;
    int r = p.row();
    if (r < n + 1 || r > 2 * n - 1) throw OutsideRegion("point " + p.to_string() + " is outside the modelled region");
    LatticePoint fr = F.coords[static_cast<std::size_t>(r)];
    int k = p.u - fr.u;
    if (k < 0 || k > n) throw OutsideRegion("point " + p.to_string() + " is outside the modelled region");

    PointAddress out{p, r, k, PointCase::Boundary, {}};
    if (k == 0) {
        out.word.values.push_back(F.word.values[static_cast<std::size_t>(r)]);
        return out;
    }
    if (k == n) {
        if (tF.coords[static_cast<std::size_t>(r)] != p) throw std::logic_error("tF does not close the region");
        out.word.values.push_back(tF.word.values[static_cast<std::size_t>(r)]);
        return out;
    }

    // projections; on a monotone staircase each is unique
    std::optional<std::size_t> west, north, east, south;
    for (std::size_t i = 0; i < F.size(); ++i) {
        LatticePoint q = F.coords[i];
        if (q.v == p.v && q.u < p.u) west = i;
        if (q.u == p.u && q.v > p.v && !north) north = i;
    }
    for (std::size_t i = 0; i < tF.size(); ++i) {
        LatticePoint q = tF.coords[i];
        if (q.v == p.v && q.u > p.u && !east) east = i;
        if (q.u == p.u && q.v < p.v) south = i;
    }

    if (west && north) {
        out.kind = PointCase::FF;
        out.word = F.word.slice(*west, *north);
    } else if (east && south) {
        out.kind = PointCase::TT;
        out.word = tF.word.slice(*south, *east).swapped();
    } else if (west && south) {
        // the vertex of F matching the tF vertex below the point
        auto j = static_cast<std::size_t>(m + 1) - *south;
        if (j < *west + 2) throw std::logic_error("mixed projections out of order at " + p.to_string());
        out.kind = PointCase::Mixed;
        out.word = F.word.slice(*west, j);
    } else {
        throw std::logic_error("no projection case applies at " + p.to_string());
    }
    return out;
}

std::vector<PointAddress> enumerate_points(const PositionBoundary& F, const PositionBoundary& tF) {
    int n = (static_cast<int>(F.size()) - 1) / 2;
    std::vector<PointAddress> out;
    for (int r = n + 1; r <= 2 * n - 1; ++r) {
        for (int k = 0; k <= n; ++k) {
            out.push_back(address_of(F, tF, F.coords[static_cast<std::size_t>(r)] + kColumn * k));
        }
    }
    return out;
}

Mat2 Mat2::operator*(const Mat2& o) const {
    return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
}

Mat2 matrix_M(const LaurentPolynomial& a, Letter l, const LaurentPolynomial& b) {
    int rank = a.rank();
    auto zero = LaurentPolynomial(rank);
    auto one = LaurentPolynomial::constant(rank, 1);
    if (l == Letter::X) return {a, one, zero, b};
    return {b, zero, one, a};
}

Row row_times(const Row& row, const Mat2& m) {
    return {row.first * m.a + row.second * m.c, row.first * m.b + row.second * m.d};
}

LaurentPolynomial T_formula(const BoundaryWord& w, bool swapped_column) {
    if (w.values.size() < 3) {
        throw WordTooShort("the formula needs at least three values, got " + std::to_string(w.values.size()));
    }
    const auto& b = w.values;
    std::size_t n = b.size() - 2;
    int rank = b.front().rank();
    Row row{LaurentPolynomial::constant(rank, 1), b[0]};
    for (std::size_t i = 2; i <= n; ++i) row = row_times(row, matrix_M(b[i - 1], w.letters[i - 1], b[i]));
    LaurentPolynomial num = swapped_column ? row.first * b[n + 1] + row.second : row.first + row.second * b[n + 1];
    return div_exact(num, product(b, 1, n, rank));
}

LaurentPolynomial T_value(const PointAddress& p) {
    switch (p.kind) {
        case PointCase::Boundary: return p.word.values.at(0);
        case PointCase::FF:
        case PointCase::TT: return T_formula(p.word, false);
        case PointCase::Mixed: return T_formula(p.word, true);
    }
    throw std::logic_error("T_value: bad case");
}

std::pair<LaurentPolynomial, LaurentPolynomial> split_diagonal(const LaurentPolynomial& T, const LaurentPolynomial& x1,
                                                               const LaurentPolynomial& x2) {
    auto s = sqrt_perfect(x1 * x2 * T);
    return {div_exact(s, x1), div_exact(s, x2)};
}

BoundaryModel boundary_model(const Seed& d_seed) {
    BoundaryModel m{d_seed, build_lambda_prime(d_seed), {}, {}, {}};
    m.word = to_boundary(m.lambda);
    m.F = position_boundary(m.word);
    m.tF = transpose_boundary(m.F);
    return m;
}

std::vector<EvaluatedPoint> evaluate_points(const BoundaryModel& model) {
    int n = model.rank();
    auto [x1, x2] = fork_pair(model.seed);
    std::vector<EvaluatedPoint> out;
    for (auto& address : enumerate_points(model.F, model.tF)) {
        EvaluatedPoint e{std::move(address), LaurentPolynomial(model.seed.rank()), std::nullopt};
        e.value = T_value(e.address);
        if (e.address.row == n + 1) e.split = split_diagonal(e.value, x1, x2);
        out.push_back(std::move(e));
    }
    return out;
}

std::set<LaurentPolynomial> all_cluster_variables(const Seed& d_seed) {
    std::set<LaurentPolynomial> out;
    for (const auto& e : evaluate_points(boundary_model(d_seed))) {
        if (e.split) {
            out.insert(e.split->first);
            out.insert(e.split->second);
        } else {
            out.insert(e.value);
        }
    }
    return out;
}

namespace {

// (1,a) M(b_1,x,b_2) ... M(b_{k-1},x,b_k) M(b_k,y,b)
Row lambda_prime(const LaurentPolynomial& a, const std::vector<LaurentPolynomial>& bs, const LaurentPolynomial& b) {
    Row row{LaurentPolynomial::constant(a.rank(), 1), a};
    for (std::size_t i = 0; i + 1 < bs.size(); ++i) row = row_times(row, matrix_M(bs[i], Letter::X, bs[i + 1]));
    return row_times(row, matrix_M(bs.back(), Letter::Y, b));
}

LaurentPolynomial dot(const Row& row, const Row& col) { return row.first * col.first + row.second * col.second; }

Row times_column(const Mat2& m, const Row& col) {
    return {m.a * col.first + m.b * col.second, m.c * col.first + m.d * col.second};
}

}  // namespace

LaurentPolynomial row_identity_defect(const LaurentPolynomial& a, const std::vector<LaurentPolynomial>& bs,
                                      const LaurentPolynomial& b) {
    if (bs.empty()) throw std::invalid_argument("row_identity_defect: k >= 1");
    Row lp = lambda_prime(a, bs, b);
    Row l{LaurentPolynomial::constant(a.rank(), 1), bs.back()};
    return (lp.first * l.second - lp.second * l.first) - product(bs, 0, bs.size() - 1, a.rank()) * b;
}

LaurentPolynomial product_identity_defect(const LaurentPolynomial& a, const std::vector<LaurentPolynomial>& bs,
                                          const LaurentPolynomial& b, const Mat2& A, const LaurentPolynomial& c,
                                          const std::vector<LaurentPolynomial>& cs, const LaurentPolynomial& d) {
    if (bs.empty() || cs.empty()) throw std::invalid_argument("product_identity_defect: k, l >= 1");
    int rank = a.rank();
    auto one = LaurentPolynomial::constant(rank, 1);
    Row lam{one, bs.back()};
    Row lam_p = lambda_prime(a, bs, b);
    Row gamma{one, cs.front()};
    // M(c,x,c_1) M(c_1,y,c_2) ... M(c_{l-1},y,c_l) (1,d)^T
    Mat2 G = matrix_M(c, Letter::X, cs.front());
    for (std::size_t i = 0; i + 1 < cs.size(); ++i) G = G * matrix_M(cs[i], Letter::Y, cs[i + 1]);
    Row gamma_p = times_column(G, {one, d});

    auto p = dot(lam, times_column(A, gamma));
    auto q = dot(lam, times_column(A, gamma_p));
    auto r = dot(lam_p, times_column(A, gamma));
    auto s = dot(lam_p, times_column(A, gamma_p));
    auto rhs = product(bs, 0, bs.size() - 1, rank) * b * c * product(cs, 0, cs.size() - 1, rank) * A.det();
    return (p * s - q * r) - rhs;
}

}  // namespace dfrieze
