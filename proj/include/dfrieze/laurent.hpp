#pragma once

/**
 * @file laurent.hpp
 * @brief Exact multivariate Laurent polynomials over Q in u0..un.
 *
 * Every frieze entry and cluster variable is a value of this type. Terms are
 * kept in a map ordered by descending lexicographic order of exponent
 * vectors, so two polynomials are equal iff their term maps are equal.
 */

#include <gmpxx.h>

#include <compare>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace dfrieze {

using Rational = mpq_class;

/// Exponent vector over u0..un; entry i is the exponent of u_i.
class Monomial {
public:
    Monomial() : exps_(1, 0) {}
    explicit Monomial(int rank);
    explicit Monomial(std::vector<int> exponents);

    static Monomial variable(int rank, int index, int power = 1);

    int rank() const { return static_cast<int>(exps_.size()) - 1; }
    int operator[](int index) const { return exps_[static_cast<std::size_t>(index)]; }
    std::span<const int> exponents() const { return exps_; }

    bool is_unit() const;
    /// True when every exponent is even.
    bool is_square() const;
    /// Componentwise "self <= other".
    bool divides(const Monomial& other) const;

    Monomial operator*(const Monomial& rhs) const;
    Monomial operator/(const Monomial& rhs) const;
    Monomial pow(int power) const;

    std::string to_string() const;

    auto operator<=>(const Monomial&) const = default;
    bool operator==(const Monomial&) const = default;

private:
    std::vector<int> exps_;
};

/// Componentwise minimum / maximum of two exponent vectors.
Monomial gcd(const Monomial& a, const Monomial& b);
Monomial lcm(const Monomial& a, const Monomial& b);

class LaurentPolynomial {
public:
    using Terms = std::map<Monomial, Rational, std::greater<>>;

    /// The zero polynomial over u0..u_rank.
    explicit LaurentPolynomial(int rank = 0) : rank_(rank) {}

    static LaurentPolynomial constant(int rank, const Rational& value);
    static LaurentPolynomial variable(int rank, int index);
    static LaurentPolynomial term(const Monomial& monomial, const Rational& coefficient);

    int rank() const { return rank_; }
    const Terms& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    bool is_one() const;
    bool is_monomial() const { return terms_.size() == 1; }
    /// No negative exponent anywhere.
    bool is_polynomial() const;
    bool has_positive_coefficients() const;

    /// Leading term in the descending lexicographic order; requires non-zero.
    const Terms::value_type& leading() const { return *terms_.begin(); }
    /// Componentwise minimum of the exponents of all terms; requires non-zero.
    Monomial min_exponents() const;

    LaurentPolynomial& operator+=(const LaurentPolynomial& rhs);
    LaurentPolynomial& operator-=(const LaurentPolynomial& rhs);
    LaurentPolynomial& operator*=(const LaurentPolynomial& rhs);

    friend LaurentPolynomial operator+(LaurentPolynomial lhs, const LaurentPolynomial& rhs) { return lhs += rhs; }
    friend LaurentPolynomial operator-(LaurentPolynomial lhs, const LaurentPolynomial& rhs) { return lhs -= rhs; }
    friend LaurentPolynomial operator*(const LaurentPolynomial& lhs, const LaurentPolynomial& rhs);
    LaurentPolynomial operator-() const;

    /// Multiply by a single term; exact and cheap.
    LaurentPolynomial times(const Monomial& monomial, const Rational& coefficient = 1) const;

    /// Canonical rendering: `u4 - 1/2 + 2*u1^-1*u3`. Golden-file format.
    std::string to_string() const;
    /// Human rendering through normal_form: `(u3^2 + 2*u3 + 1)/(u1*u2)`.
    std::string to_fraction_string() const;

    friend bool operator==(const LaurentPolynomial& a, const LaurentPolynomial& b);
    /// Total order used for sets of cluster variables (deterministic output).
    friend bool operator<(const LaurentPolynomial& a, const LaurentPolynomial& b);

private:
    void add_term(const Monomial& monomial, const Rational& coefficient);

    int rank_ = 0;
    Terms terms_;
};

LaurentPolynomial pow(const LaurentPolynomial& base, unsigned exponent);

/// Returns r with r * divisor == dividend; throws InexactDivision otherwise.
LaurentPolynomial div_exact(const LaurentPolynomial& dividend, const LaurentPolynomial& divisor);

/// Assignment of rational values to variable indices.
using Point = std::map<int, Rational>;

Rational eval(const LaurentPolynomial& p, const Point& point);

struct NormalForm {
    LaurentPolynomial numerator;  ///< all exponents >= 0
    Monomial denominator;
};

NormalForm normal_form(const LaurentPolynomial& p);

/// Square root with positive leading coefficient; throws NotAPerfectSquare.
LaurentPolynomial sqrt_perfect(const LaurentPolynomial& p);

/// Simultaneous substitution u_var -> numerator/denominator, divided out
/// exactly (throws InexactDivision if the result is not a Laurent polynomial).
LaurentPolynomial substitute(const LaurentPolynomial& p, int var, const LaurentPolynomial& numerator,
                             const LaurentPolynomial& denominator);

/// Reads both renderings back (`u4 - 1/2 + 2*u1^-1*u3`, `(u3 + 1)/(u1*u2)`),
/// or any expression in + - * / ^ and brackets whose divisions are exact.
/// Throws ParseError, or InexactDivision for a division that leaves a rest.
LaurentPolynomial parse_polynomial(int rank, std::string_view text);

/// Exchange u_a and u_b.
LaurentPolynomial swap_variables(const LaurentPolynomial& p, int a, int b);

/// Renames u_i to u_{perm[i]}; perm has rank+1 entries and fixes nothing in
/// particular (perm[0] is usually 0).
LaurentPolynomial permute_variables(const LaurentPolynomial& p, const std::vector<int>& perm);

}  // namespace dfrieze
