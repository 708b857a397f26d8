#pragma once

/**
 * @file lattice.hpp
 * @brief The discrete plane that A-friezes and boundary words live in.
 *
 * A word F = y b_0 x_1 b_1 ... x walks from (0,0); letter x steps to
 * (u+1, v) and y to (u, v+1). Frieze point (k, i) of a path frieze sits at
 * f_i + k(1,-1), so row i of the frieze is the anti-diagonal u + v = i.
 */

#include "dfrieze/laurent.hpp"
#include "dfrieze/quiver.hpp"

#include <compare>
#include <map>
#include <string>
#include <vector>

namespace dfrieze {

enum class Letter { X, Y };

inline char to_char(Letter l) { return l == Letter::X ? 'x' : 'y'; }
inline Letter swapped(Letter l) { return l == Letter::X ? Letter::Y : Letter::X; }

struct LatticePoint {
    int u = 0;
    int v = 0;

    int row() const { return u + v; }
    LatticePoint operator+(LatticePoint o) const { return {u + o.u, v + o.v}; }
    LatticePoint operator-(LatticePoint o) const { return {u - o.u, v - o.v}; }
    LatticePoint operator*(int k) const { return {u * k, v * k}; }
    std::string to_string() const { return "(" + std::to_string(u) + "," + std::to_string(v) + ")"; }

    auto operator<=>(const LatticePoint&) const = default;
};

inline constexpr LatticePoint kEast{1, 0};
inline constexpr LatticePoint kSouth{0, 1};
/// One column to the right in frieze coordinates.
inline constexpr LatticePoint kColumn{1, -1};

inline LatticePoint step(LatticePoint p, Letter l) { return p + (l == Letter::X ? kEast : kSouth); }

/// Arrow i -> i+1 reads x, i+1 -> i reads y. Needs a canonical path.
std::vector<Letter> path_letters(const Quiver& path);

/// Vertices f_0..f_{m+1} of F = y w x, where w has the given m-1 letters.
std::vector<LatticePoint> walk_F(const std::vector<Letter>& letters);

/// The glide reflection exchanging F and its transpose: (u,v) -> (m+2-v, -1-u).
inline LatticePoint sigma(LatticePoint p, int m) { return {m + 2 - p.v, -1 - p.u}; }

/// Vertices g_0..g_{m+1} of tF: g_r = sigma(f_{m+1-r}) for 1 <= r <= m, with
/// g_0 one step west of g_1 and g_{m+1} one step south of g_m.
std::vector<LatticePoint> walk_tF(const std::vector<LatticePoint>& F);

using PlaneWindow = std::map<LatticePoint, LaurentPolynomial>;

/// Points a whose square a, b = a+(1,0), c = a+(0,-1), d = a+(1,-1) lies in
/// the window and breaks ad - bc = 1.
std::vector<LatticePoint> unimodular_violations(const PlaneWindow& w);
/// Number of complete unit squares in the window.
std::size_t unimodular_squares(const PlaneWindow& w);

}  // namespace dfrieze
