#include "doctest.h"

#include "dfrieze/errors.hpp"
#include "dfrieze/laurent.hpp"

#include <algorithm>
#include <random>

using namespace dfrieze;

namespace {

constexpr int kRank = 4;

LaurentPolynomial u(int i) { return LaurentPolynomial::variable(kRank, i); }
LaurentPolynomial c(long v) { return LaurentPolynomial::constant(kRank, v); }
LaurentPolynomial P(const char* s) { return parse_polynomial(kRank, s); }

LaurentPolynomial random_poly(std::mt19937& rng, int terms, int lo = -2, int hi = 2) {
    std::uniform_int_distribution<int> e(lo, hi);
    std::uniform_int_distribution<int> k(-4, 4);
    LaurentPolynomial p(kRank);
    for (int t = 0; t < terms; ++t) {
        std::vector<int> exps(kRank + 1, 0);
        for (int i = 1; i <= kRank; ++i) exps[i] = e(rng);
        p += LaurentPolynomial::term(Monomial(exps), Rational(k(rng), 1 + (t % 3)));
    }
    return p;
}

Point random_point(std::mt19937& rng) {
    std::uniform_int_distribution<int> num(1, 9);
    std::uniform_int_distribution<int> sign(0, 1);
    Point pt;
    for (int i = 0; i <= kRank; ++i) {
        Rational q(num(rng) * (sign(rng) ? 1 : -1), num(rng));
        q.canonicalize();
        pt[i] = q;
    }
    return pt;
}

}  // namespace

TEST_CASE("add examples") {
    auto p = c(1) + u(3);
    CHECK(p + LaurentPolynomial(kRank) == p);
    CHECK(u(3) + c(1) == p);
    CHECK(p + p == c(2) + c(2) * u(3));
    CHECK((p - p).is_zero());
}

TEST_CASE("mul examples") {
    auto a = div_exact(c(1) + u(3), u(1));
    auto b = div_exact(c(1) + u(3), u(2));
    auto expected = div_exact(pow(c(1) + u(3), 2), u(1) * u(2));
    CHECK(a * b == expected);
    CHECK(a * c(1) == a);
    CHECK(div_exact(c(1), u(1)) * u(1) == c(1));
}

TEST_CASE("div_exact") {
    auto num = div_exact(pow(c(1) + u(3), 2), u(1) * u(2));
    auto den = div_exact(c(1) + u(3), u(1));
    auto q = div_exact(num, den);
    CHECK(q * den == num);
    CHECK(q == div_exact(c(1) + u(3), u(2)));
    CHECK(div_exact(num, num) == c(1));
    CHECK(div_exact(c(1) + u(3), u(4)).to_string() == "u3*u4^-1 + u4^-1");
    CHECK_THROWS_AS(div_exact(c(1) + u(3), c(1) + u(4)), InexactDivision);
    CHECK_THROWS_AS(div_exact(u(1), LaurentPolynomial(kRank)), InexactDivision);
    // multivariate non-monomial divisor
    auto f = u(1) * u(2) + u(3) * u(3) - c(7);
    auto g = div_exact(u(4) + u(1) * u(1), u(2));
    CHECK(div_exact(f * g, g) == f);
    CHECK(div_exact(f * g, f) == g);
}

TEST_CASE("rank mismatch") {
    auto a = LaurentPolynomial::variable(2, 1);
    auto b = LaurentPolynomial::variable(3, 1);
    CHECK_THROWS_AS(a + b, RankMismatch);
    CHECK_THROWS_AS(a * b, RankMismatch);
    CHECK_THROWS_AS(div_exact(a, b), RankMismatch);
}

TEST_CASE("eval") {
    Point ones;
    for (int i = 0; i <= kRank; ++i) ones[i] = 1;
    auto v1 = div_exact(pow(c(1) + u(3), 2), u(1) * u(2));
    CHECK(eval(v1, ones) == 4);
    CHECK(eval(c(1), ones) == 1);
    CHECK(eval(div_exact(u(4) + u(1) * u(2), u(3)), ones) == 2);

    Point partial{{1, 2}};
    CHECK(eval(u(1) * u(1), partial) == 4);
    CHECK_THROWS_AS(eval(u(2), partial), EvaluationError);
    Point zero{{1, 0}};
    CHECK(eval(u(1), zero) == 0);
    CHECK_THROWS_AS(eval(div_exact(c(1), u(1)), zero), EvaluationError);
}

TEST_CASE("normal_form") {
    auto nf = normal_form(div_exact(c(1) + u(3), u(1)));
    CHECK(nf.numerator == c(1) + u(3));
    CHECK(nf.denominator == Monomial::variable(kRank, 1));

    nf = normal_form(u(3));
    CHECK(nf.numerator == u(3));
    CHECK(nf.denominator.is_unit());

    auto v3 = div_exact(u(4) + u(1) * u(2) * (c(1) + u(3)), u(3) * u(4));
    nf = normal_form(v3);
    CHECK(nf.numerator == u(4) + u(1) * u(2) + u(1) * u(2) * u(3));
    CHECK(nf.denominator == Monomial::variable(kRank, 3) * Monomial::variable(kRank, 4));
    CHECK(v3.to_fraction_string() == "(u1*u2*u3 + u1*u2 + u4)/(u3*u4)");

    CHECK_THROWS_AS(normal_form(LaurentPolynomial(kRank)), EvaluationError);
}

TEST_CASE("sqrt_perfect") {
    CHECK(sqrt_perfect(pow(c(1) + u(3), 2)) == c(1) + u(3));
    CHECK(sqrt_perfect(c(1)) == c(1));
    CHECK(sqrt_perfect(c(4) * u(1) * u(1)) == c(2) * u(1));
    CHECK(sqrt_perfect(P("1/4")) == P("1/2"));
    CHECK_THROWS_AS(sqrt_perfect(c(1) + u(3)), NotAPerfectSquare);
    CHECK_THROWS_AS(sqrt_perfect(c(2)), NotAPerfectSquare);
    CHECK_THROWS_AS(sqrt_perfect(u(1)), NotAPerfectSquare);
    CHECK_THROWS_AS(sqrt_perfect(-c(1)), NotAPerfectSquare);
    // leading term is a square but the rest is not
    CHECK_THROWS_AS(sqrt_perfect(u(1) * u(1) + c(1)), NotAPerfectSquare);
}

TEST_CASE("rendering") {
    CHECK(LaurentPolynomial(kRank).to_string() == "0");
    CHECK(c(1).to_string() == "1");
    CHECK((-c(1)).to_string() == "-1");
    CHECK(P("3/2*u1 - u2").to_string() == "3/2*u1 - u2");
    auto p = c(2) * div_exact(u(3), u(1)) + u(4) - P("1/2");
    CHECK(p.to_string() == "u4 - 1/2 + 2*u1^-1*u3");
    CHECK(div_exact(pow(c(1) + u(3), 2), u(1) * u(2)).to_fraction_string() == "(u3^2 + 2*u3 + 1)/(u1*u2)");
    CHECK(div_exact(c(1), u(1) * u(1)).to_fraction_string() == "1/(u1^2)");
    CHECK(u(0).to_string() == "u0");
}

TEST_CASE("parse round trip") {
    std::mt19937 rng(7);
    for (int t = 0; t < 200; ++t) {
        auto p = random_poly(rng, 1 + t % 6);
        CHECK(parse_polynomial(kRank, p.to_string()) == p);
    }
    CHECK(P(" u1 *u2 +  2 ") == u(1) * u(2) + c(2));
    CHECK_THROWS_AS(P(""), ParseError);
    CHECK_THROWS_AS(P("u5"), ParseError);
    CHECK_THROWS_AS(P("u1 u2"), ParseError);
    CHECK_THROWS_AS(P("x1"), ParseError);
    CHECK_THROWS_AS(P("1/0"), ParseError);
}

TEST_CASE("parse fractions and expressions") {
    std::mt19937 rng(11);
    for (int t = 0; t < 200; ++t) {
        auto p = random_poly(rng, 1 + t % 6);
        CHECK(P(p.to_fraction_string().c_str()) == p);
    }
    CHECK(P("(u3^2 + 2*u3 + 1)/(u1*u2)") == div_exact(pow(c(1) + u(3), 2), u(1) * u(2)));
    CHECK(P("1/(u1^2)") == div_exact(c(1), u(1) * u(1)));
    CHECK(P("(1 + u3)^2 / (1 + u3)") == c(1) + u(3));
    CHECK(P("-(u1 - u2)") == u(2) - u(1));
    CHECK(P("2^3*u1^-2") == div_exact(c(8), u(1) * u(1)));
    CHECK_THROWS_AS(P("(1 + u3)/(1 + u2)"), InexactDivision);
    CHECK_THROWS_AS(P("(1 + u3)^-1"), ParseError);
    CHECK_THROWS_AS(P("(u1 + u2"), ParseError);
    CHECK_THROWS_AS(P("u1 + "), ParseError);
}

TEST_CASE("substitute and swap") {
    // u1 -> (1+u3)/u1 applied to u1*u2 gives (1+u3)*u2/u1
    auto s = substitute(u(1) * u(2), 1, c(1) + u(3), u(1));
    CHECK(s == div_exact((c(1) + u(3)) * u(2), u(1)));
    // applying the involution twice returns the input
    auto back = substitute(s, 1, c(1) + u(3), u(1));
    CHECK(back == u(1) * u(2));
    CHECK_THROWS_AS(substitute(c(1) + u(1), 1, c(1), c(1) + u(2)), InexactDivision);
    CHECK(swap_variables(u(1) + c(2) * u(2), 1, 2) == u(2) + c(2) * u(1));
}

TEST_CASE("ring axioms on random triples") {
    std::mt19937 rng(12345);
    for (int t = 0; t < 60; ++t) {
        auto a = random_poly(rng, 1 + t % 4);
        auto b = random_poly(rng, 1 + (t + 1) % 5);
        auto d = random_poly(rng, 1 + (t + 2) % 3);
        CHECK((a * b) * d == a * (b * d));
        CHECK(a * b == b * a);
        CHECK(a + b == b + a);
        CHECK(a * (b + d) == a * b + a * d);
        if (!b.is_zero()) CHECK(div_exact(a * b, b) == a);
        auto pt = random_point(rng);
        CHECK(eval(a * b, pt) == eval(a, pt) * eval(b, pt));
        CHECK(eval(a + d, pt) == eval(a, pt) + eval(d, pt));
        if (!a.is_zero()) {
            auto nf = normal_form(a);
            CHECK(nf.numerator.is_polynomial());
            CHECK(div_exact(nf.numerator, LaurentPolynomial::term(nf.denominator, 1)) == a);
            auto root = sqrt_perfect(a * a);
            CHECK(root * root == a * a);
            CHECK(sgn(root.leading().second) > 0);
            CHECK((root == a || root == -a));
        }
    }
}

TEST_CASE("permute_variables") {
    std::mt19937 rng(5);
    std::vector<int> perm{0, 1, 2, 3, 4};
    for (int t = 0; t < 50; ++t) {
        auto p = random_poly(rng, 1 + t % 5);
        std::shuffle(perm.begin() + 1, perm.end(), rng);
        std::vector<int> inverse(perm.size());
        for (std::size_t i = 0; i < perm.size(); ++i) inverse[static_cast<std::size_t>(perm[i])] = static_cast<int>(i);
        CHECK(permute_variables(permute_variables(p, perm), inverse) == p);
        CHECK(permute_variables(p, {0, 2, 1, 3, 4}) == swap_variables(p, 1, 2));
    }
    CHECK(permute_variables(u(1) * u(1) + u(3), {0, 3, 2, 1, 4}) == u(3) * u(3) + u(1));
    CHECK_THROWS_AS(permute_variables(u(1), {0, 1, 1, 3, 4}), RankMismatch);
    CHECK_THROWS_AS(permute_variables(u(1), {0, 1, 2}), RankMismatch);
}
