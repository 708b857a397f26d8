#pragma once

/**
 * @file frieze.hpp
 * @brief The frieze recursion on ZQ, part F, the modelled quiver and its
 * downward completion into an A_{2n-1} frieze.
 *
 * This is the recursion side: everything here is computed column by column
 * from a seed and serves as the oracle for the boundary formula.
 */

#include "dfrieze/lattice.hpp"
#include "dfrieze/laurent.hpp"
#include "dfrieze/quiver.hpp"

#include <optional>
#include <set>
#include <utility>
#include <vector>

namespace dfrieze {

struct FriezeArray {
    Quiver quiver;
    int columns = 0;  ///< K; columns 0..K are stored
    /// values[k][i-1] = a(k, i)
    std::vector<std::vector<LaurentPolynomial>> values;

    int size() const { return quiver.size(); }
    const LaurentPolynomial& at(int k, int i) const {
        return values.at(static_cast<std::size_t>(k)).at(static_cast<std::size_t>(i - 1));
    }
};

/// a(0,i) = x_i and a(k,i) a(k+1,i) = 1 + prod over arrows out of (k,i).
FriezeArray compute_frieze(const Seed& s, int columns);

/// Default window widths: 2n for D_n, m+3 for A_m.
int default_columns(const DynkinClass& d);

/// Points (k,i), k < K, where the frieze relation fails.
std::vector<std::pair<int, int>> mesh_violations(const FriezeArray& f);

/// a west, b north, c south, d east: ad - bc == 1.
bool unimodular_check(const LaurentPolynomial& a, const LaurentPolynomial& b, const LaurentPolynomial& c,
                      const LaurentPolynomial& d);

/// Smallest p > 0 with column k+p equal to column k for every stored k, if
/// the window shows one.
std::optional<int> column_period(const FriezeArray& f);

/// Plane picture of a frieze on a canonical path quiver, frame rows of 1
/// included (row 0 and row m+1).
PlaneWindow plane_window(const FriezeArray& f);
LatticePoint plane_point(const std::vector<LatticePoint>& F, int k, int i);

/// Columns 0..n of a D_n frieze.
FriezeArray part_F(const FriezeArray& f);

struct ModelledQuiver {
    Quiver quiver;  ///< the D_n quiver
    /// merged[k] = a(k,1) a(k,2), k = 0..n
    std::vector<LaurentPolynomial> merged;
    /// tail[k][j] = a(k, j+3), k = 0..n
    std::vector<std::vector<LaurentPolynomial>> tail;

    int rank() const { return quiver.size(); }
    /// Value at plane row r (n+1 merged, n+2.. the tail vertices 3..n).
    const LaurentPolynomial& row_value(int k, int r) const;
};

/// Glues the fork rows; throws UnsupportedFork for a mixed fork.
ModelledQuiver modelled_quiver(const FriezeArray& part);

/// F coordinates of Lambda' for a D quiver (walk_F of its Q').
std::vector<LatticePoint> lambda_prime_walk(const Quiver& d_quiver);

/// The modelled quiver placed in the plane: rows n+1..2n-1, points
/// f_r + k(1,-1), k = 0..n.
PlaneWindow modelled_window(const ModelledQuiver& m);

struct Completion {
    PlaneWindow window;  ///< modelled window plus rows n..1
    LaurentPolynomial h0;
    LatticePoint apex;   ///< the single point on row 1
};

/// Solves ad - bc = 1 row by row below the modelled quiver.
Completion complete_downward(const ModelledQuiver& m);

/// Plane points of the fundamental quiver whose descending diagonal d1 is
/// the column through `top` (a point on row m).
std::set<LatticePoint> fundamental_region(LatticePoint top, int m);

struct FundamentalQuiver {
    int k0 = 0;
    std::vector<std::pair<int, int>> positions;  ///< (k, i), sorted
    PlaneWindow window;
};

/// Window of an A_m frieze between d1 from (k0, m) and d2 ending at (k0+m, m).
FundamentalQuiver fundamental_quiver(const FriezeArray& f, int k0);

}  // namespace dfrieze
