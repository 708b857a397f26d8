#pragma once

/**
 * @file boundary.hpp
 * @brief Boundary words, their embedding in the plane and the closed-form
 * matrix product that evaluates the modelled quiver point by point.
 *
 * A D_n seed gives the A_{2n-1} seed Lambda', read as a word
 * b_0 x_1 b_1 ... b_m over {x, y}. Extended to F = y Lambda' x it walks a
 * staircase; its transpose tF bounds the region from the other side. Every
 * point between the two is evaluated from the portion of F or tF cut out by
 * its projections, without reference to any other point.
 */

#include "dfrieze/lattice.hpp"
#include "dfrieze/laurent.hpp"
#include "dfrieze/quiver.hpp"

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace dfrieze {

struct BoundaryWord {
    std::vector<LaurentPolynomial> values;
    std::vector<Letter> letters;  ///< letters[i] sits between values[i] and values[i+1]

    std::size_t size() const { return values.size(); }
    /// "u4 y u3 y u1*u2 x 1 x u1*u2"; values with several terms are bracketed.
    std::string to_string() const;
    /// values[from..to] with the letters in between.
    BoundaryWord slice(std::size_t from, std::size_t to) const;
    /// Same values, x and y interchanged.
    BoundaryWord swapped() const;

    bool operator==(const BoundaryWord&) const = default;
};

/// Reads a path seed left to right: arrow i -> i+1 gives x, i+1 -> i gives y.
/// Throws InvalidQuiver unless the quiver is a canonically labelled path.
BoundaryWord to_boundary(const Seed& path_seed);

/// Right-to-left reading: values reversed, letters reversed and interchanged.
BoundaryWord transpose(const BoundaryWord& w);

struct PositionBoundary {
    BoundaryWord word;                 ///< includes the two end values 1
    std::vector<LatticePoint> coords;  ///< coords[i] carries word.values[i]

    std::size_t size() const { return coords.size(); }
    /// Index of the vertex at p, if any.
    std::optional<std::size_t> index_of(LatticePoint p) const;
};

/// F = y w x with 1 at both ends, walked from (0,0).
PositionBoundary position_boundary(const BoundaryWord& w);

/// tF = x tw y, placed so its vertex at row r mirrors the vertex of F at row
/// m+1-r (see sigma in lattice.hpp).
PositionBoundary transpose_boundary(const PositionBoundary& F);

enum class PointCase { Boundary, FF, TT, Mixed };

std::string to_string(PointCase c);

struct PointAddress {
    LatticePoint position;
    int row = 0;     ///< plane row r, n+1 <= r <= 2n-1
    int column = 0;  ///< k with position = f_r + k(1,-1), 0 <= k <= n
    PointCase kind = PointCase::Boundary;
    BoundaryWord word;  ///< a single value for boundary points
};

/// Every point of the modelled region: rows n+1..2n-1 (m = 2n-1 values in
/// F's word), columns 0..n, row by row.
std::vector<PointAddress> enumerate_points(const PositionBoundary& F, const PositionBoundary& tF);

/// Throws OutsideRegion for points not in the modelled region.
PointAddress address_of(const PositionBoundary& F, const PositionBoundary& tF, LatticePoint p);

struct Mat2 {
    LaurentPolynomial a, b;  ///< first row
    LaurentPolynomial c, d;  ///< second row

    LaurentPolynomial det() const { return a * d - b * c; }
    Mat2 operator*(const Mat2& o) const;
    bool operator==(const Mat2&) const = default;
};

/// M(a,x,b) = [[a,1],[0,b]], M(a,y,b) = [[b,0],[1,a]].
Mat2 matrix_M(const LaurentPolynomial& a, Letter l, const LaurentPolynomial& b);

/// (r1, r2) * M
std::pair<LaurentPolynomial, LaurentPolynomial> row_times(const std::pair<LaurentPolynomial, LaurentPolynomial>& row,
                                                          const Mat2& m);

/// 1/(b_1..b_n) (1,b_0) prod_{i=2..n} M(b_{i-1},x_i,b_i) col, where col is
/// (1, b_{n+1}) or, with swapped_column, (b_{n+1}, 1). Needs three values.
LaurentPolynomial T_formula(const BoundaryWord& w, bool swapped_column);

/// Boundary points give their own value; the others go through T_formula.
LaurentPolynomial T_value(const PointAddress& p);

/// Splits a merged value T = U V given the fork pair (x1, x2):
/// U = sqrt(x1 x2 T)/x1, V = sqrt(x1 x2 T)/x2. NotAPerfectSquare if the
/// square root does not exist.
std::pair<LaurentPolynomial, LaurentPolynomial> split_diagonal(const LaurentPolynomial& T, const LaurentPolynomial& x1,
                                                               const LaurentPolynomial& x2);

/// Everything the formula side derives from one D seed.
struct BoundaryModel {
    Seed seed;    ///< canonical D_n seed
    Seed lambda;  ///< Lambda' (Lambda'_2 for a mixed fork)
    BoundaryWord word;
    PositionBoundary F, tF;

    int rank() const { return seed.quiver.size(); }
};

BoundaryModel boundary_model(const Seed& d_seed);

struct EvaluatedPoint {
    PointAddress address;
    LaurentPolynomial value;
    /// Set on the merged row n+1.
    std::optional<std::pair<LaurentPolynomial, LaurentPolynomial>> split;
};

std::vector<EvaluatedPoint> evaluate_points(const BoundaryModel& model);

/// Cluster variables read off the evaluated points: all values off the merged
/// row and both halves of every split.
std::set<LaurentPolynomial> all_cluster_variables(const Seed& d_seed);

/// det(lambda'; lambda) - b_1...b_k b for lambda' = (1,a) M(b_1,x,b_2)...
/// M(b_{k-1},x,b_k) M(b_k,y,b) and lambda = (1, b_k). Zero when the row
/// identity holds. bs holds b_1..b_k, k >= 1.
LaurentPolynomial row_identity_defect(const LaurentPolynomial& a, const std::vector<LaurentPolynomial>& bs,
                                      const LaurentPolynomial& b);

/// det[[p,q],[r,s]] - b_1..b_k b c c_1..c_l det A for the four products
/// built from (1,b_k), lambda', (1,c_1)^T and M(c,x,c_1)M(c_1,y,c_2)...
/// M(c_{l-1},y,c_l)(1,d)^T around A.
LaurentPolynomial product_identity_defect(const LaurentPolynomial& a, const std::vector<LaurentPolynomial>& bs,
                                          const LaurentPolynomial& b, const Mat2& A, const LaurentPolynomial& c,
                                          const std::vector<LaurentPolynomial>& cs, const LaurentPolynomial& d);

}  // namespace dfrieze
