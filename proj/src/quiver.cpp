#include "dfrieze/quiver.hpp"

#include "dfrieze/errors.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <map>

namespace dfrieze {

// ---------------------------------------------------------------------------
// Quiver

Quiver::Quiver(int vertex_count, const std::vector<Arrow>& arrows)
    : n_(vertex_count), b_(static_cast<std::size_t>((vertex_count + 1) * (vertex_count + 1)), 0) {
    if (vertex_count < 0) throw InvalidQuiver("negative vertex count");
    for (const auto& a : arrows) {
        if (a.source < 1 || a.source > n_ || a.target < 1 || a.target > n_) {
            throw InvalidQuiver("arrow " + std::to_string(a.source) + ">" + std::to_string(a.target) +
                                " outside vertices 1.." + std::to_string(n_));
        }
        if (a.source == a.target) throw InvalidQuiver("loop at vertex " + std::to_string(a.source));
        b_[index(a.source, a.target)] += 1;
        b_[index(a.target, a.source)] -= 1;
    }
}

std::size_t Quiver::index(int i, int j) const {
    return static_cast<std::size_t>(i * (n_ + 1) + j);
}

std::vector<Arrow> Quiver::arrows() const {
    std::vector<Arrow> out;
    for (int i = 1; i <= n_; ++i) {
        for (int j = 1; j <= n_; ++j) {
            for (int k = 0; k < b(i, j); ++k) out.push_back({i, j});
        }
    }
    return out;
}

std::vector<int> Quiver::neighbours(int v) const {
    std::vector<int> out;
    for (int j = 1; j <= n_; ++j) {
        if (b(v, j) != 0) out.push_back(j);
    }
    return out;
}

bool Quiver::is_connected() const {
    if (n_ == 0) return false;
    std::vector<bool> seen(static_cast<std::size_t>(n_ + 1), false);
    std::vector<int> stack{1};
    seen[1] = true;
    int count = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : neighbours(v)) {
            if (!seen[static_cast<std::size_t>(w)]) {
                seen[static_cast<std::size_t>(w)] = true;
                ++count;
                stack.push_back(w);
            }
        }
    }
    return count == n_;
}

std::vector<int> Quiver::topological_order() const {
    // Kahn's algorithm, smallest ready vertex first so the order is canonical.
    std::vector<int> indeg(static_cast<std::size_t>(n_ + 1), 0);
    for (int i = 1; i <= n_; ++i) {
        for (int j = 1; j <= n_; ++j) {
            if (b(i, j) > 0) indeg[static_cast<std::size_t>(j)] += 1;
        }
    }
    std::set<int> ready;
    for (int i = 1; i <= n_; ++i) {
        if (indeg[static_cast<std::size_t>(i)] == 0) ready.insert(i);
    }
    std::vector<int> order;
    while (!ready.empty()) {
        int v = *ready.begin();
        ready.erase(ready.begin());
        order.push_back(v);
        for (int j = 1; j <= n_; ++j) {
            if (b(v, j) > 0 && --indeg[static_cast<std::size_t>(j)] == 0) ready.insert(j);
        }
    }
    if (static_cast<int>(order.size()) != n_) return {};
    return order;
}

Quiver Quiver::mutate(int k) const {
    if (k < 1 || k > n_) throw InvalidQuiver("mutation at missing vertex " + std::to_string(k));
    Quiver out(*this);
    for (int i = 1; i <= n_; ++i) {
        for (int j = 1; j <= n_; ++j) {
            if (i == k || j == k) {
                out.b_[index(i, j)] = -b(i, j);
            } else {
                int bik = b(i, k);
                int bkj = b(k, j);
                out.b_[index(i, j)] = b(i, j) + (std::abs(bik) * bkj + bik * std::abs(bkj)) / 2;
            }
        }
    }
    return out;
}

Quiver Quiver::relabel(const std::vector<int>& perm) const {
    Quiver out(n_, {});
    for (int i = 1; i <= n_; ++i) {
        for (int j = 1; j <= n_; ++j) {
            out.b_[out.index(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(j)])] = b(i, j);
        }
    }
    return out;
}

std::string Quiver::to_string() const {
    std::string out;
    for (const auto& a : arrows()) {
        if (!out.empty()) out += ' ';
        out += std::to_string(a.source) + '>' + std::to_string(a.target);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Classification

std::string DynkinClass::label() const {
    return (type == DynkinType::A ? "A" : "D") + std::to_string(rank);
}

namespace {

bool is_canonical_path(const Quiver& q) {
    for (int i = 1; i < q.size(); ++i) {
        if (q.b(i, i + 1) == 0) return false;
    }
    return true;
}

bool is_canonical_d(const Quiver& q) {
    int n = q.size();
    if (q.degree(1) != 1 || q.degree(2) != 1 || q.b(1, 3) == 0 || q.b(2, 3) == 0) return false;
    for (int i = 3; i < n; ++i) {
        if (q.b(i, i + 1) == 0) return false;
    }
    return true;
}

std::vector<int> walk_from(const Quiver& q, int start, int avoid, int first_label, std::vector<int> perm) {
    int prev = avoid;
    int cur = start;
    int label = first_label;
    while (cur != 0) {
        perm[static_cast<std::size_t>(cur)] = label++;
        int next = 0;
        for (int w : q.neighbours(cur)) {
            if (w != prev && perm[static_cast<std::size_t>(w)] == 0) next = w;
        }
        prev = cur;
        cur = next;
    }
    return perm;
}

}  // namespace

Classification classify(const Quiver& q) {
    int n = q.size();
    if (n == 0) throw NotDynkinAD("empty quiver");
    int edges = 0;
    for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
            if (std::abs(q.b(i, j)) > 1) throw NotDynkinAD("multiple arrows between " + std::to_string(i) + " and " + std::to_string(j));
            edges += q.b(i, j) != 0;
        }
    }
    if (!q.is_connected()) throw NotDynkinAD("quiver is not connected");
    if (edges != n - 1) throw NotDynkinAD("underlying graph has a cycle");

    std::vector<int> high;
    for (int v = 1; v <= n; ++v) {
        int d = q.degree(v);
        if (d > 3) throw NotDynkinAD("vertex " + std::to_string(v) + " has degree " + std::to_string(d));
        if (d == 3) high.push_back(v);
    }

    Classification out;
    std::vector<int> perm(static_cast<std::size_t>(n + 1), 0);
    if (high.empty()) {
        out.dynkin = {DynkinType::A, n};
        if (is_canonical_path(q)) {
            for (int i = 1; i <= n; ++i) perm[static_cast<std::size_t>(i)] = i;
        } else {
            int start = 0;
            for (int v = 1; v <= n && start == 0; ++v) {
                if (q.degree(v) <= 1) start = v;
            }
            perm = walk_from(q, start, 0, 1, perm);
        }
    } else {
        if (high.size() != 1) throw NotDynkinAD("more than one branch point");
        int joint = high.front();
        std::vector<int> leaves;
        for (int w : q.neighbours(joint)) {
            if (q.degree(w) == 1) leaves.push_back(w);
        }
        if (leaves.size() < 2) throw NotDynkinAD("branch point without a fork (type E or larger)");
        out.dynkin = {DynkinType::D, n};
        if (is_canonical_d(q)) {
            for (int i = 1; i <= n; ++i) perm[static_cast<std::size_t>(i)] = i;
        } else {
            // neighbours() is ascending, so leaves[0] < leaves[1]
            perm[static_cast<std::size_t>(leaves[0])] = 1;
            perm[static_cast<std::size_t>(leaves[1])] = 2;
            perm[static_cast<std::size_t>(joint)] = 3;
            int tail = 0;
            for (int w : q.neighbours(joint)) {
                if (w != leaves[0] && w != leaves[1]) tail = w;
            }
            perm = walk_from(q, tail, joint, 4, perm);
        }
    }
    out.relabel = perm;
    out.canonical = q.relabel(perm);
    return out;
}

std::vector<std::pair<int, int>> dynkin_edges(const DynkinClass& d) {
    std::vector<std::pair<int, int>> edges;
    if (d.type == DynkinType::A) {
        for (int i = 1; i < d.rank; ++i) edges.emplace_back(i, i + 1);
    } else {
        if (d.rank < 4) throw NotDynkinAD("D needs rank at least 4");
        edges.emplace_back(1, 3);
        edges.emplace_back(2, 3);
        for (int i = 3; i < d.rank; ++i) edges.emplace_back(i, i + 1);
    }
    return edges;
}

std::vector<Quiver> all_orientations(const DynkinClass& d) {
    auto edges = dynkin_edges(d);
    if (edges.size() > 20) throw BudgetExceeded("too many orientations");
    std::vector<Quiver> out;
    for (unsigned mask = 0; mask < (1U << edges.size()); ++mask) {
        std::vector<Arrow> arrows;
        for (std::size_t e = 0; e < edges.size(); ++e) {
            auto [a, b] = edges[e];
            if (mask & (1U << e)) {
                arrows.push_back({b, a});
            } else {
                arrows.push_back({a, b});
            }
        }
        out.emplace_back(d.rank, arrows);
    }
    return out;
}

std::string to_string(ForkConfiguration c) {
    switch (c) {
        case ForkConfiguration::BothEntering: return "both-entering";
        case ForkConfiguration::BothLeaving: return "both-leaving";
        case ForkConfiguration::Mixed: return "mixed";
    }
    return "?";
}

ForkInfo fork_info(const Quiver& q) {
    if (q.size() < 4 || !is_canonical_d(q)) throw InvalidQuiver("fork_info needs a canonically labelled D quiver");
    ForkInfo info;
    bool in1 = q.has_arrow(1, 3);
    bool in2 = q.has_arrow(2, 3);
    if (in1 && in2) {
        info.configuration = ForkConfiguration::BothEntering;
    } else if (!in1 && !in2) {
        info.configuration = ForkConfiguration::BothLeaving;
    } else {
        info.configuration = ForkConfiguration::Mixed;
    }
    return info;
}

Quiver transpose(const Quiver& path) {
    if (!is_canonical_path(path)) throw InvalidQuiver("transpose needs a canonically labelled path");
    int n = path.size();
    std::vector<int> perm(static_cast<std::size_t>(n + 1), 0);
    for (int i = 1; i <= n; ++i) perm[static_cast<std::size_t>(i)] = n + 1 - i;
    return path.relabel(perm);
}

QPrime build_q_prime(const Quiver& d) {
    fork_info(d);  // validates shape
    int n = d.size();
    int m = 2 * n - 1;
    std::vector<int> omega{1};
    for (int i = 3; i <= n; ++i) omega.push_back(i);

    QPrime out;
    out.labels.assign(static_cast<std::size_t>(m + 1), 0);
    for (int j = 1; j <= n - 1; ++j) {
        out.labels[static_cast<std::size_t>(n + j)] = omega[static_cast<std::size_t>(j - 1)];
        out.labels[static_cast<std::size_t>(n - j)] = omega[static_cast<std::size_t>(j - 1)];
    }
    std::vector<Arrow> arrows{{n - 1, n}, {n, n + 1}};
    for (int j = 1; j <= n - 2; ++j) {
        int a = omega[static_cast<std::size_t>(j - 1)];
        int b = omega[static_cast<std::size_t>(j)];
        bool forward = d.has_arrow(a, b);
        // right half keeps the direction, the left half is its mirror image
        arrows.push_back(forward ? Arrow{n + j, n + j + 1} : Arrow{n + j + 1, n + j});
        arrows.push_back(forward ? Arrow{n - j, n - j - 1} : Arrow{n - j - 1, n - j});
    }
    out.path = Quiver(m, arrows);
    return out;
}

// ---------------------------------------------------------------------------
// Seeds

Seed Seed::initial(const Quiver& q, int rank) {
    if (rank < 0) rank = q.size();
    if (rank < q.size()) throw RankMismatch("seed rank below vertex count");
    Seed s{q, {}};
    for (int i = 1; i <= q.size(); ++i) s.variables.push_back(LaurentPolynomial::variable(rank, i));
    return s;
}

Seed mutate_seed(const Seed& s, int k) {
    int n = s.quiver.size();
    if (k < 1 || k > n) throw InvalidQuiver("mutation at missing vertex " + std::to_string(k));
    LaurentPolynomial into = LaurentPolynomial::constant(s.rank(), 1);
    LaurentPolynomial out = into;
    for (int i = 1; i <= n; ++i) {
        int bik = s.quiver.b(i, k);
        if (bik > 0) into *= pow(s.variable(i), static_cast<unsigned>(bik));
        if (bik < 0) out *= pow(s.variable(i), static_cast<unsigned>(-bik));
    }
    Seed next{s.quiver.mutate(k), s.variables};
    next.variables[static_cast<std::size_t>(k - 1)] = div_exact(into + out, s.variable(k));
    return next;
}

std::pair<LaurentPolynomial, LaurentPolynomial> fork_pair(const Seed& d_seed) {
    ForkInfo info = fork_info(d_seed.quiver);
    if (info.configuration == ForkConfiguration::Mixed) {
        auto one = LaurentPolynomial::constant(d_seed.rank(), 1);
        return {d_seed.variable(1), div_exact(one + d_seed.variable(3), d_seed.variable(2))};
    }
    return {d_seed.variable(1), d_seed.variable(2)};
}

Seed build_lambda_prime(const Seed& d_seed) {
    QPrime qp = build_q_prime(d_seed.quiver);
    auto [x1, x2] = fork_pair(d_seed);
    LaurentPolynomial product = x1 * x2;
    Seed out{qp.path, {}};
    for (std::size_t p = 1; p < qp.labels.size(); ++p) {
        int label = qp.labels[p];
        if (label == 0) {
            out.variables.push_back(LaurentPolynomial::constant(d_seed.rank(), 1));
        } else if (label == 1) {
            out.variables.push_back(product);
        } else {
            out.variables.push_back(d_seed.variable(label));
        }
    }
    return out;
}

ClosureResult mutation_closure(const Seed& s, std::size_t max_seeds) {
    auto key = [](const Seed& seed) {
        auto vars = seed.variables;
        std::sort(vars.begin(), vars.end());
        return vars;
    };
    ClosureResult result;
    std::set<std::vector<LaurentPolynomial>> seen{key(s)};
    std::deque<Seed> queue{s};
    for (const auto& v : s.variables) result.variables.insert(v);
    while (!queue.empty()) {
        Seed cur = std::move(queue.front());
        queue.pop_front();
        for (int k = 1; k <= cur.quiver.size(); ++k) {
            Seed next = mutate_seed(cur, k);
            if (!seen.insert(key(next)).second) continue;
            if (seen.size() > max_seeds) {
                throw BudgetExceeded("mutation closure exceeded " + std::to_string(max_seeds) + " seeds");
            }
            result.variables.insert(next.variables[static_cast<std::size_t>(k - 1)]);
            queue.push_back(std::move(next));
        }
    }
    result.seeds = seen.size();
    return result;
}

// ---------------------------------------------------------------------------
// Triangulations

namespace {

std::pair<int, int> ordered(std::pair<int, int> a) {
    return a.first < a.second ? a : std::pair<int, int>{a.second, a.first};
}

bool is_side(int n, int a, int b) {
    int d = std::abs(a - b);
    return d == 1 || d == n - 1;
}

bool crosses(std::pair<int, int> x, std::pair<int, int> y) {
    auto [a, b] = ordered(x);
    auto [c, d] = ordered(y);
    return (a < c && c < b && b < d) || (c < a && a < d && d < b);
}

}  // namespace

void validate(const Triangulation& t) {
    int n = t.polygon_size;
    if (n < 4) throw InvalidTriangulation("polygon needs at least 4 vertices");
    if (static_cast<int>(t.arcs.size()) != n - 3) {
        throw InvalidTriangulation("a " + std::to_string(n) + "-gon needs " + std::to_string(n - 3) + " arcs, got " +
                                   std::to_string(t.arcs.size()));
    }
    std::set<std::pair<int, int>> edges;
    for (auto arc : t.arcs) {
        auto [a, b] = ordered(arc);
        if (a < 1 || b > n) throw InvalidTriangulation("arc endpoint outside 1.." + std::to_string(n));
        if (a == b || is_side(n, a, b)) {
            throw InvalidTriangulation("arc " + std::to_string(a) + "-" + std::to_string(b) + " is not a diagonal");
        }
        if (!edges.insert({a, b}).second) throw InvalidTriangulation("repeated arc " + std::to_string(a) + "-" + std::to_string(b));
    }
    for (std::size_t i = 0; i < t.arcs.size(); ++i) {
        for (std::size_t j = i + 1; j < t.arcs.size(); ++j) {
            if (crosses(t.arcs[i], t.arcs[j])) throw InvalidTriangulation("crossing arcs");
        }
    }
    for (int i = 1; i <= n; ++i) edges.insert(ordered({i, i % n + 1}));
    for (int a = 1; a <= n; ++a) {
        for (int b = a + 1; b <= n; ++b) {
            for (int c = b + 1; c <= n; ++c) {
                if (edges.count({a, b}) && edges.count({b, c}) && edges.count({a, c}) && !is_side(n, a, b) &&
                    !is_side(n, b, c) && !is_side(n, a, c)) {
                    throw InvalidTriangulation("internal triangle " + std::to_string(a) + "-" + std::to_string(b) +
                                               "-" + std::to_string(c));
                }
            }
        }
    }
}

Quiver quiver_from_triangulation(const Triangulation& t) {
    validate(t);
    int n = t.polygon_size;
    std::set<std::pair<int, int>> edges;
    for (auto arc : t.arcs) edges.insert(ordered(arc));
    for (int i = 1; i <= n; ++i) edges.insert(ordered({i, i % n + 1}));

    std::vector<Arrow> arrows;
    int count = static_cast<int>(t.arcs.size());
    for (int x = 0; x < count; ++x) {
        for (int y = 0; y < count; ++y) {
            if (x == y) continue;
            auto [a1, a2] = t.arcs[static_cast<std::size_t>(x)];
            auto [b1, b2] = t.arcs[static_cast<std::size_t>(y)];
            // shared endpoint p, other endpoints q (of alpha) and r (of beta)
            for (auto [p, q] : {std::pair{a1, a2}, std::pair{a2, a1}}) {
                int r = 0;
                if (b1 == p) r = b2;
                if (b2 == p) r = b1;
                if (r == 0 || !edges.count(ordered({q, r}))) continue;
                // beta follows alpha when turning around p in the polygon's order
                if ((r - p + n) % n > (q - p + n) % n) arrows.push_back({x + 1, y + 1});
            }
        }
    }
    return Quiver(count, arrows);
}

// ---------------------------------------------------------------------------
// Spec parsing

namespace {

int parse_int(std::string_view s, std::string_view whole) {
    if (s.empty() || s.size() > 6 || !std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
        throw ParseError("bad number '" + std::string(s) + "' in '" + std::string(whole) + "'");
    }
    return std::stoi(std::string(s));
}

}  // namespace

QuiverSpec parse_spec(std::string_view text) {
    auto colon = text.find(':');
    if (colon == std::string_view::npos) throw ParseError("expected '<type><rank>: arrows', got '" + std::string(text) + "'");
    std::string head;
    for (char c : text.substr(0, colon)) {
        if (!std::isspace(static_cast<unsigned char>(c))) head += c;
    }
    QuiverSpec spec;
    int count = 0;
    if (!head.empty() && (head[0] == 'A' || head[0] == 'a' || head[0] == 'D' || head[0] == 'd')) {
        DynkinType type = (head[0] == 'A' || head[0] == 'a') ? DynkinType::A : DynkinType::D;
        count = parse_int(std::string_view(head).substr(1), text);
        spec.claimed = DynkinClass{type, count};
    } else {
        count = parse_int(head, text);
    }

    std::vector<std::string> tokens;
    std::string cur;
    for (char c : text.substr(colon + 1)) {
        if (std::isspace(static_cast<unsigned char>(c)) || c == ',') {
            if (!cur.empty()) tokens.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty()) tokens.push_back(cur);

    bool arcs = false;
    bool arrows = false;
    std::vector<Arrow> list;
    Triangulation tri{count, {}};
    std::set<std::pair<int, int>> edges;
    for (const auto& tok : tokens) {
        auto pos = tok.find_first_of("<>-");
        if (pos == std::string::npos) throw ParseError("bad token '" + tok + "' (expected a>b, a<b or a-b)");
        int a = parse_int(std::string_view(tok).substr(0, pos), text);
        int b = parse_int(std::string_view(tok).substr(pos + 1), text);
        char op = tok[pos];
        if (op == '-') {
            arcs = true;
            tri.arcs.emplace_back(a, b);
        } else {
            arrows = true;
            if (op == '<') std::swap(a, b);
            if (!edges.insert(ordered({a, b})).second) {
                throw InvalidQuiver("repeated edge between " + std::to_string(a) + " and " + std::to_string(b));
            }
            list.push_back({a, b});
        }
    }
    if (arcs && arrows) throw ParseError("mixed arrows and arcs in '" + std::string(text) + "'");
    if (arcs) {
        if (spec.claimed) throw ParseError("a triangulation starts with the polygon size, not a type");
        spec.triangulation = tri;
        spec.quiver = quiver_from_triangulation(tri);
    } else {
        if (count < 1) throw InvalidQuiver("quiver needs at least one vertex");
        spec.quiver = Quiver(count, list);
    }
    return spec;
}

Classification resolve(const QuiverSpec& spec) {
    Classification c = classify(spec.quiver);
    if (spec.claimed && !(*spec.claimed == c.dynkin)) {
        throw NotDynkinAD("quiver is " + c.dynkin.label() + ", not " + spec.claimed->label());
    }
    return c;
}

}  // namespace dfrieze
