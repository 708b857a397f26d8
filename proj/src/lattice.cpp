#include "dfrieze/lattice.hpp"

#include "dfrieze/errors.hpp"

namespace dfrieze {

std::vector<Letter> path_letters(const Quiver& path) {
    std::vector<Letter> out;
    for (int i = 1; i < path.size(); ++i) {
        if (path.has_arrow(i, i + 1)) {
            out.push_back(Letter::X);
        } else if (path.has_arrow(i + 1, i)) {
            out.push_back(Letter::Y);
        } else {
            throw InvalidQuiver("not a canonical path: no arrow between " + std::to_string(i) + " and " +
                                std::to_string(i + 1));
        }
    }
    return out;
}

std::vector<LatticePoint> walk_F(const std::vector<Letter>& letters) {
    std::vector<LatticePoint> F{{0, 0}};
    F.push_back(step(F.back(), Letter::Y));
    for (Letter l : letters) F.push_back(step(F.back(), l));
    F.push_back(step(F.back(), Letter::X));
    return F;
}

std::vector<LatticePoint> walk_tF(const std::vector<LatticePoint>& F) {
    int m = static_cast<int>(F.size()) - 2;
    std::vector<LatticePoint> G(F.size());
    for (int r = 1; r <= m; ++r) G[static_cast<std::size_t>(r)] = sigma(F[static_cast<std::size_t>(m + 1 - r)], m);
    G[0] = G[1] - kEast;
    G[static_cast<std::size_t>(m + 1)] = G[static_cast<std::size_t>(m)] + kSouth;
    return G;
}

namespace {

template <typename Fn>
void for_each_square(const PlaneWindow& w, Fn&& fn) {
    for (const auto& [a, va] : w) {
        auto b = w.find(a + kEast);
        auto c = w.find(a - kSouth);
        auto d = w.find(a + kColumn);
        if (b == w.end() || c == w.end() || d == w.end()) continue;
        fn(a, va, b->second, c->second, d->second);
    }
}

}  // namespace

std::vector<LatticePoint> unimodular_violations(const PlaneWindow& w) {
    std::vector<LatticePoint> bad;
    for_each_square(w, [&](LatticePoint a, const auto& va, const auto& vb, const auto& vc, const auto& vd) {
        if (!(va * vd - vb * vc).is_one()) bad.push_back(a);
    });
    return bad;
}

std::size_t unimodular_squares(const PlaneWindow& w) {
    std::size_t count = 0;
    for_each_square(w, [&](LatticePoint, const auto&, const auto&, const auto&, const auto&) { ++count; });
    return count;
}

}  // namespace dfrieze
