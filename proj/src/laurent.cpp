#include "dfrieze/laurent.hpp"

#include "dfrieze/errors.hpp"

#include <algorithm>
#include <utility>

namespace dfrieze {

namespace {

void require_same_rank(int a, int b, const char* op) {
    if (a != b) {
        throw RankMismatch(std::string(op) + ": rank " + std::to_string(a) + " vs " + std::to_string(b));
    }
}

std::string rational_string(const Rational& q) {
    return q.get_str();
}

bool rational_sqrt(const Rational& q, Rational& root) {
    if (sgn(q) < 0) return false;
    mpz_class num = q.get_num();
    mpz_class den = q.get_den();
    if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t())) return false;
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
    root = Rational(rn, rd);
    root.canonicalize();
    return true;
}

}  // namespace

// ---------------------------------------------------------------------------
// Monomial

Monomial::Monomial(int rank) : exps_(static_cast<std::size_t>(rank + 1), 0) {
    if (rank < 0) throw RankMismatch("negative rank");
}

Monomial::Monomial(std::vector<int> exponents) : exps_(std::move(exponents)) {
    if (exps_.empty()) throw RankMismatch("monomial needs at least u0");
}

Monomial Monomial::variable(int rank, int index, int power) {
    if (index < 0 || index > rank) {
        throw RankMismatch("variable u" + std::to_string(index) + " outside rank " + std::to_string(rank));
    }
    Monomial m(rank);
    m.exps_[static_cast<std::size_t>(index)] = power;
    return m;
}

bool Monomial::is_unit() const {
    return std::all_of(exps_.begin(), exps_.end(), [](int e) { return e == 0; });
}

bool Monomial::is_square() const {
    return std::all_of(exps_.begin(), exps_.end(), [](int e) { return e % 2 == 0; });
}

bool Monomial::divides(const Monomial& other) const {
    require_same_rank(rank(), other.rank(), "divides");
    for (std::size_t i = 0; i < exps_.size(); ++i) {
        if (exps_[i] > other.exps_[i]) return false;
    }
    return true;
}

Monomial Monomial::operator*(const Monomial& rhs) const {
    require_same_rank(rank(), rhs.rank(), "monomial product");
    Monomial out(*this);
    for (std::size_t i = 0; i < exps_.size(); ++i) out.exps_[i] += rhs.exps_[i];
    return out;
}

Monomial Monomial::operator/(const Monomial& rhs) const {
    require_same_rank(rank(), rhs.rank(), "monomial quotient");
    Monomial out(*this);
    for (std::size_t i = 0; i < exps_.size(); ++i) out.exps_[i] -= rhs.exps_[i];
    return out;
}

Monomial Monomial::pow(int power) const {
    Monomial out(*this);
    for (auto& e : out.exps_) e *= power;
    return out;
}

std::string Monomial::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < exps_.size(); ++i) {
        if (exps_[i] == 0) continue;
        if (!out.empty()) out += '*';
        out += 'u' + std::to_string(i);
        if (exps_[i] != 1) out += '^' + std::to_string(exps_[i]);
    }
    return out.empty() ? "1" : out;
}

Monomial gcd(const Monomial& a, const Monomial& b) {
    require_same_rank(a.rank(), b.rank(), "gcd");
    std::vector<int> e(static_cast<std::size_t>(a.rank() + 1));
    for (int i = 0; i <= a.rank(); ++i) e[static_cast<std::size_t>(i)] = std::min(a[i], b[i]);
    return Monomial(std::move(e));
}

Monomial lcm(const Monomial& a, const Monomial& b) {
    require_same_rank(a.rank(), b.rank(), "lcm");
    std::vector<int> e(static_cast<std::size_t>(a.rank() + 1));
    for (int i = 0; i <= a.rank(); ++i) e[static_cast<std::size_t>(i)] = std::max(a[i], b[i]);
    return Monomial(std::move(e));
}

// ---------------------------------------------------------------------------
// LaurentPolynomial

LaurentPolynomial LaurentPolynomial::constant(int rank, const Rational& value) {
    return term(Monomial(rank), value);
}

LaurentPolynomial LaurentPolynomial::variable(int rank, int index) {
    return term(Monomial::variable(rank, index), 1);
}

LaurentPolynomial LaurentPolynomial::term(const Monomial& monomial, const Rational& coefficient) {
    LaurentPolynomial p(monomial.rank());
    Rational q = coefficient;
    q.canonicalize();
    p.add_term(monomial, q);
    return p;
}

void LaurentPolynomial::add_term(const Monomial& monomial, const Rational& coefficient) {
    if (sgn(coefficient) == 0) return;
    auto [it, inserted] = terms_.try_emplace(monomial, coefficient);
    if (!inserted) {
        it->second += coefficient;
        if (sgn(it->second) == 0) terms_.erase(it);
    }
}

bool LaurentPolynomial::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_unit());
}

bool LaurentPolynomial::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first.is_unit() && terms_.begin()->second == 1;
}

bool LaurentPolynomial::is_polynomial() const {
    for (const auto& [m, c] : terms_) {
        for (int e : m.exponents()) {
            if (e < 0) return false;
        }
    }
    return true;
}

bool LaurentPolynomial::has_positive_coefficients() const {
    return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return sgn(t.second) > 0; });
}

Monomial LaurentPolynomial::min_exponents() const {
    if (terms_.empty()) throw EvaluationError("min_exponents of the zero polynomial");
    Monomial out = terms_.begin()->first;
    for (const auto& [m, c] : terms_) out = gcd(out, m);
    return out;
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& rhs) {
    require_same_rank(rank_, rhs.rank_, "add");
    for (const auto& [m, c] : rhs.terms_) add_term(m, c);
    return *this;
}

LaurentPolynomial& LaurentPolynomial::operator-=(const LaurentPolynomial& rhs) {
    require_same_rank(rank_, rhs.rank_, "sub");
    for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
    return *this;
}

LaurentPolynomial& LaurentPolynomial::operator*=(const LaurentPolynomial& rhs) {
    *this = *this * rhs;
    return *this;
}

LaurentPolynomial operator*(const LaurentPolynomial& lhs, const LaurentPolynomial& rhs) {
    require_same_rank(lhs.rank_, rhs.rank_, "mul");
    LaurentPolynomial out(lhs.rank_);
    for (const auto& [ma, ca] : lhs.terms_) {
        for (const auto& [mb, cb] : rhs.terms_) out.add_term(ma * mb, ca * cb);
    }
    return out;
}

LaurentPolynomial LaurentPolynomial::operator-() const {
    LaurentPolynomial out(*this);
    for (auto& [m, c] : out.terms_) c = -c;
    return out;
}

LaurentPolynomial LaurentPolynomial::times(const Monomial& monomial, const Rational& coefficient) const {
    require_same_rank(rank_, monomial.rank(), "times");
    LaurentPolynomial out(rank_);
    if (sgn(coefficient) == 0) return out;
    // multiplying every key by the same monomial preserves the order
    for (const auto& [m, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), m * monomial, c * coefficient);
    return out;
}

std::string LaurentPolynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Rational mag = abs(c);
        if (first) {
            if (sgn(c) < 0) out += '-';
        } else {
            out += sgn(c) < 0 ? " - " : " + ";
        }
        first = false;
        if (m.is_unit()) {
            out += rational_string(mag);
        } else if (mag == 1) {
            out += m.to_string();
        } else {
            out += rational_string(mag) + '*' + m.to_string();
        }
    }
    return out;
}

std::string LaurentPolynomial::to_fraction_string() const {
    if (terms_.empty()) return "0";
    NormalForm nf = normal_form(*this);
    std::string num = nf.numerator.to_string();
    if (nf.denominator.is_unit()) return num;
    if (nf.numerator.size() > 1) num = '(' + num + ')';
    std::string den = nf.denominator.to_string();
    int factors = 0;
    for (int e : nf.denominator.exponents()) factors += (e != 0);
    if (factors > 1 || den.find('^') != std::string::npos) den = '(' + den + ')';
    return num + '/' + den;
}

bool operator==(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    return a.rank_ == b.rank_ && a.terms_ == b.terms_;
}

bool operator<(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    if (a.rank_ != b.rank_) return a.rank_ < b.rank_;
    auto ia = a.terms_.begin();
    auto ib = b.terms_.begin();
    for (; ia != a.terms_.end() && ib != b.terms_.end(); ++ia, ++ib) {
        if (ia->first != ib->first) return ia->first > ib->first;
        if (ia->second != ib->second) return ia->second < ib->second;
    }
    return ia == a.terms_.end() && ib != b.terms_.end();
}

LaurentPolynomial pow(const LaurentPolynomial& base, unsigned exponent) {
    LaurentPolynomial result = LaurentPolynomial::constant(base.rank(), 1);
    LaurentPolynomial square = base;
    while (exponent != 0) {
        if (exponent & 1U) result *= square;
        exponent >>= 1U;
        if (exponent != 0) square = square * square;
    }
    return result;
}

LaurentPolynomial div_exact(const LaurentPolynomial& dividend, const LaurentPolynomial& divisor) {
    require_same_rank(dividend.rank(), divisor.rank(), "div_exact");
    if (divisor.is_zero()) throw InexactDivision("division by the zero polynomial");
    if (dividend.is_zero()) return LaurentPolynomial(dividend.rank());
    if (divisor.is_monomial()) {
        const auto& [m, c] = divisor.leading();
        return dividend.times(Monomial(m.pow(-1)), 1 / c);
    }

    // Shift both sides to polynomials without monomial factors. An exact
    // Laurent quotient of such a pair is itself a polynomial, so ordinary
    // division by the leading term must leave no remainder.
    Monomial shift_p = dividend.min_exponents();
    Monomial shift_q = divisor.min_exponents();
    LaurentPolynomial rem = dividend.times(shift_p.pow(-1));
    LaurentPolynomial q = divisor.times(shift_q.pow(-1));
    const auto& [lead_m, lead_c] = q.leading();

    LaurentPolynomial quotient(dividend.rank());
    while (!rem.is_zero()) {
        const auto& [rm, rc] = rem.leading();
        if (!lead_m.divides(rm)) {
            throw InexactDivision("(" + dividend.to_string() + ") / (" + divisor.to_string() + ") is not exact");
        }
        Monomial step_m = rm / lead_m;
        Rational step_c = rc / lead_c;
        quotient += LaurentPolynomial::term(step_m, step_c);
        rem -= q.times(step_m, step_c);
    }
    return quotient.times(shift_p / shift_q);
}

Rational eval(const LaurentPolynomial& p, const Point& point) {
    Rational total = 0;
    for (const auto& [m, c] : p.terms()) {
        Rational value = c;
        for (int i = 0; i <= m.rank(); ++i) {
            int e = m[i];
            if (e == 0) continue;
            auto it = point.find(i);
            if (it == point.end()) throw EvaluationError("no value assigned to u" + std::to_string(i));
            if (sgn(it->second) == 0 && e < 0) {
                throw EvaluationError("u" + std::to_string(i) + " = 0 under a negative exponent");
            }
            Rational base = e > 0 ? it->second : Rational(1 / it->second);
            for (int k = 0; k < std::abs(e); ++k) value *= base;
        }
        total += value;
    }
    return total;
}

NormalForm normal_form(const LaurentPolynomial& p) {
    if (p.is_zero()) throw EvaluationError("normal_form of the zero polynomial");
    Monomial low = p.min_exponents();
    std::vector<int> den(static_cast<std::size_t>(p.rank() + 1));
    for (int i = 0; i <= p.rank(); ++i) den[static_cast<std::size_t>(i)] = std::max(0, -low[i]);
    Monomial denominator(std::move(den));
    return {p.times(denominator), denominator};
}

LaurentPolynomial sqrt_perfect(const LaurentPolynomial& p) {
    if (p.is_zero()) return p;
    const auto& [lead_m, lead_c] = p.leading();
    Rational root_c;
    if (!lead_m.is_square() || !rational_sqrt(lead_c, root_c)) {
        throw NotAPerfectSquare(p.to_string() + ": leading term is not a square");
    }
    std::vector<int> half(static_cast<std::size_t>(p.rank() + 1));
    for (int i = 0; i <= p.rank(); ++i) half[static_cast<std::size_t>(i)] = lead_m[i] / 2;
    Monomial root_m(std::move(half));

    // Every root term lies in half the exponent box of p; new terms must
    // strictly decrease, which bounds the loop.
    Monomial lo = p.min_exponents();
    Monomial hi = p.leading().first;
    for (const auto& [m, c] : p.terms()) hi = lcm(hi, m);

    LaurentPolynomial root = LaurentPolynomial::term(root_m, root_c);
    Monomial last = root_m;
    LaurentPolynomial rem = p - root * root;
    while (!rem.is_zero()) {
        const auto& [rm, rc] = rem.leading();
        Monomial step_m = rm / root_m;
        Rational step_c = rc / (2 * root_c);
        bool inside = step_m < last;
        for (int i = 0; inside && i <= p.rank(); ++i) {
            inside = 2 * step_m[i] >= lo[i] && 2 * step_m[i] <= hi[i];
        }
        if (!inside) throw NotAPerfectSquare(p.to_string() + " is not a perfect square");
        root += LaurentPolynomial::term(step_m, step_c);
        rem = p - root * root;
        last = step_m;
    }
    return root;
}

LaurentPolynomial substitute(const LaurentPolynomial& p, int var, const LaurentPolynomial& numerator,
                             const LaurentPolynomial& denominator) {
    require_same_rank(p.rank(), numerator.rank(), "substitute");
    require_same_rank(p.rank(), denominator.rank(), "substitute");
    if (var < 0 || var > p.rank()) throw RankMismatch("substitute: no variable u" + std::to_string(var));
    if (p.is_zero()) return p;

    int emin = 0;
    int emax = 0;
    bool seen = false;
    for (const auto& [m, c] : p.terms()) {
        emin = seen ? std::min(emin, m[var]) : m[var];
        emax = seen ? std::max(emax, m[var]) : m[var];
        seen = true;
    }

    // p = sum c * m' * var^e  ->  S = sum c * m' * num^(e-emin) * den^(emax-e),
    // then p(var := num/den) = S * num^emin / den^emax.
    LaurentPolynomial acc(p.rank());
    for (const auto& [m, c] : p.terms()) {
        std::vector<int> rest(m.exponents().begin(), m.exponents().end());
        int e = rest[static_cast<std::size_t>(var)];
        rest[static_cast<std::size_t>(var)] = 0;
        LaurentPolynomial t = LaurentPolynomial::term(Monomial(std::move(rest)), c);
        t *= pow(numerator, static_cast<unsigned>(e - emin));
        t *= pow(denominator, static_cast<unsigned>(emax - e));
        acc += t;
    }
    if (emin >= 0) {
        acc *= pow(numerator, static_cast<unsigned>(emin));
    } else {
        acc = div_exact(acc, pow(numerator, static_cast<unsigned>(-emin)));
    }
    if (emax >= 0) {
        acc = div_exact(acc, pow(denominator, static_cast<unsigned>(emax)));
    } else {
        acc *= pow(denominator, static_cast<unsigned>(-emax));
    }
    return acc;
}

LaurentPolynomial swap_variables(const LaurentPolynomial& p, int a, int b) {
    if (a < 0 || b < 0 || a > p.rank() || b > p.rank()) throw RankMismatch("swap_variables: index out of range");
    LaurentPolynomial out(p.rank());
    for (const auto& [m, c] : p.terms()) {
        std::vector<int> e(m.exponents().begin(), m.exponents().end());
        std::swap(e[static_cast<std::size_t>(a)], e[static_cast<std::size_t>(b)]);
        out += LaurentPolynomial::term(Monomial(std::move(e)), c);
    }
    return out;
}

LaurentPolynomial permute_variables(const LaurentPolynomial& p, const std::vector<int>& perm) {
    if (static_cast<int>(perm.size()) != p.rank() + 1) throw RankMismatch("permute_variables: wrong length");
    std::vector<bool> hit(perm.size(), false);
    for (int t : perm) {
        if (t < 0 || t > p.rank() || hit[static_cast<std::size_t>(t)]) throw RankMismatch("permute_variables: not a permutation");
        hit[static_cast<std::size_t>(t)] = true;
    }
    LaurentPolynomial out(p.rank());
    for (const auto& [m, c] : p.terms()) {
        std::vector<int> e(perm.size(), 0);
        for (std::size_t i = 0; i < perm.size(); ++i) e[static_cast<std::size_t>(perm[i])] = m[static_cast<int>(i)];
        out += LaurentPolynomial::term(Monomial(std::move(e)), c);
    }
    return out;
}

namespace {

// expr   := ['+'|'-'] term (('+'|'-') term)*
// term   := power (('*'|'/') power)*
// power  := atom ['^' integer]
// atom   := digits | 'u' digits | '(' expr ')'
// Division by anything but a monomial must be exact.
struct PolyReader {
    int rank;
    std::string_view text;
    std::size_t pos = 0;

    [[noreturn]] void fail(const std::string& why) const {
        throw ParseError("polynomial '" + std::string(text) + "' at offset " + std::to_string(pos) + ": " + why);
    }
    void skip() {
        while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
    }
    bool at(char c) {
        skip();
        return pos < text.size() && text[pos] == c;
    }
    bool digit() const { return pos < text.size() && text[pos] >= '0' && text[pos] <= '9'; }
    long integer() {
        skip();
        bool neg = false;
        if (pos < text.size() && text[pos] == '-') {
            neg = true;
            ++pos;
        }
        if (!digit()) fail("expected a digit");
        long v = 0;
        while (digit()) {
            v = v * 10 + (text[pos++] - '0');
            if (v > 1000000) fail("number too large");
        }
        return neg ? -v : v;
    }
    LaurentPolynomial atom() {
        skip();
        if (at('(')) {
            ++pos;
            auto inner = expr();
            if (!at(')')) fail("expected ')'");
            ++pos;
            return inner;
        }
        if (digit()) {
            std::size_t start = pos;
            while (digit()) ++pos;
            Rational q;
            if (q.set_str(std::string(text.substr(start, pos - start)), 10) != 0) fail("bad number");
            return LaurentPolynomial::constant(rank, q);
        }
        if (pos >= text.size() || text[pos] != 'u') fail("expected a number, variable or '('");
        ++pos;
        if (!digit()) fail("expected a variable index");
        long idx = integer();
        if (idx > rank) fail("variable index above rank " + std::to_string(rank));
        return LaurentPolynomial::variable(rank, static_cast<int>(idx));
    }
    LaurentPolynomial power() {
        auto base = atom();
        if (!at('^')) return base;
        ++pos;
        long e = integer();
        if (e >= 0) return pow(base, static_cast<unsigned>(e));
        if (!base.is_monomial()) fail("negative power of a sum");
        return div_exact(LaurentPolynomial::constant(rank, 1), pow(base, static_cast<unsigned>(-e)));
    }
    LaurentPolynomial term() {
        auto value = power();
        while (at('*') || at('/')) {
            bool divide = text[pos] == '/';
            ++pos;
            auto rhs = power();
            if (!divide) {
                value *= rhs;
            } else if (rhs.is_zero()) {
                fail("division by zero");
            } else {
                value = div_exact(value, rhs);
            }
        }
        return value;
    }
    LaurentPolynomial expr() {
        LaurentPolynomial out(rank);
        bool first = true;
        while (true) {
            int sign = 1;
            if (at('+') || at('-')) {
                sign = text[pos] == '-' ? -1 : 1;
                ++pos;
            } else if (!first) {
                break;
            }
            first = false;
            auto t = term();
            if (sign < 0) {
                out -= t;
            } else {
                out += t;
            }
        }
        return out;
    }
    LaurentPolynomial parse() {
        skip();
        if (pos == text.size()) fail("empty input");
        auto out = expr();
        skip();
        if (pos != text.size()) fail("unexpected '" + std::string(1, text[pos]) + "'");
        return out;
    }
};

}  // namespace

LaurentPolynomial parse_polynomial(int rank, std::string_view text) {
    if (rank < 0) throw RankMismatch("negative rank");
    return PolyReader{rank, text}.parse();
}

}  // namespace dfrieze
