#ifndef IWAHORI_COEFF_HPP
#define IWAHORI_COEFF_HPP

// Exact arithmetic in Q(s), the field of rational functions in one
// indeterminate s with the convention q = s^2.

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <functional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "error.hpp"

namespace iwahori {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Dense polynomial in s with arbitrary-precision integer coefficients,
/// stored in ascending degree with no trailing zeros.
class IntPoly {
public:
    IntPoly() = default;
    IntPoly(long v) { if (v != 0) c_.emplace_back(v); }
    IntPoly(const BigInt& v) { if (v != 0) c_.push_back(v); }
    explicit IntPoly(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { trim(); }

    static IntPoly monomial(const BigInt& coef, std::size_t degree) {
        IntPoly p;
        if (coef == 0) return p;
        p.c_.assign(degree + 1, BigInt(0));
        p.c_[degree] = coef;
        return p;
    }

    bool is_zero() const noexcept { return c_.empty(); }
    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    const BigInt& lead() const { return c_.back(); }
    const std::vector<BigInt>& coeffs() const noexcept { return c_; }

    BigInt coeff(std::size_t k) const { return k < c_.size() ? c_[k] : BigInt(0); }

    /// Index of the lowest nonzero coefficient; 0 for the zero polynomial.
    std::size_t low_order() const noexcept {
        for (std::size_t k = 0; k < c_.size(); ++k)
            if (c_[k] != 0) return k;
        return 0;
    }

    bool is_monomial() const noexcept {
        if (c_.empty()) return false;
        return low_order() == c_.size() - 1;
    }

    bool is_one() const noexcept { return c_.size() == 1 && c_[0] == 1; }

    bool only_even_powers() const noexcept {
        for (std::size_t k = 1; k < c_.size(); k += 2)
            if (c_[k] != 0) return false;
        return true;
    }

    BigInt content() const {
        BigInt g = 0;
        for (const auto& v : c_) {
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
            if (g == 1) break;
        }
        return g;
    }

    IntPoly shifted_down(std::size_t k) const {
        if (k == 0) return *this;
        IntPoly r;
        if (k < c_.size()) r.c_.assign(c_.begin() + static_cast<std::ptrdiff_t>(k), c_.end());
        return r;
    }

    IntPoly shifted_up(std::size_t k) const {
        if (k == 0 || c_.empty()) return *this;
        IntPoly r;
        r.c_.assign(k, BigInt(0));
        r.c_.insert(r.c_.end(), c_.begin(), c_.end());
        return r;
    }

    IntPoly divexact(const BigInt& d) const {
        IntPoly r = *this;
        for (auto& v : r.c_) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), d.get_mpz_t());
        return r;
    }

    IntPoly operator-() const {
        IntPoly r = *this;
        for (auto& v : r.c_) v = -v;
        return r;
    }

    friend IntPoly operator+(const IntPoly& a, const IntPoly& b) {
        IntPoly r;
        const auto n = std::max(a.c_.size(), b.c_.size());
        r.c_.resize(n);
        for (std::size_t k = 0; k < n; ++k) r.c_[k] = a.coeff(k) + b.coeff(k);
        r.trim();
        return r;
    }

    friend IntPoly operator-(const IntPoly& a, const IntPoly& b) { return a + (-b); }

    friend IntPoly operator*(const IntPoly& a, const IntPoly& b) {
        IntPoly r;
        if (a.is_zero() || b.is_zero()) return r;
        r.c_.assign(a.c_.size() + b.c_.size() - 1, BigInt(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == 0) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                mpz_addmul(r.c_[i + j].get_mpz_t(), a.c_[i].get_mpz_t(), b.c_[j].get_mpz_t());
        }
        r.trim();
        return r;
    }

    friend IntPoly operator*(const BigInt& k, const IntPoly& a) {
        if (k == 0) return {};
        IntPoly r = a;
        for (auto& v : r.c_) v *= k;
        return r;
    }

    friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.c_ == b.c_; }

    Rational eval(const Rational& x) const {
        Rational acc = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + Rational(*it);
        return acc;
    }

    /// Exact quotient by a divisor known to divide this polynomial in Z[s].
    IntPoly exact_quotient(const IntPoly& d) const {
        if (d.is_zero()) throw DivisionByZero();
        if (is_zero()) return {};
        std::vector<BigInt> rem = c_;
        const int dd = d.degree();
        const int qd = degree() - dd;
        if (qd < 0) throw Error("IntPoly::exact_quotient: divisor does not divide");
        std::vector<BigInt> quo(static_cast<std::size_t>(qd) + 1);
        for (int k = qd; k >= 0; --k) {
            BigInt& top = rem[static_cast<std::size_t>(k + dd)];
            if (top == 0) continue;
            if (!mpz_divisible_p(top.get_mpz_t(), d.lead().get_mpz_t()))
                throw Error("IntPoly::exact_quotient: divisor does not divide");
            BigInt t;
            mpz_divexact(t.get_mpz_t(), top.get_mpz_t(), d.lead().get_mpz_t());
            quo[static_cast<std::size_t>(k)] = t;
            for (int i = 0; i <= dd; ++i)
                mpz_submul(rem[static_cast<std::size_t>(k + i)].get_mpz_t(), t.get_mpz_t(),
                           d.c_[static_cast<std::size_t>(i)].get_mpz_t());
        }
        return IntPoly(std::move(quo));
    }

    std::string str(char var = 's') const;

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    std::vector<BigInt> c_;
};

namespace detail {

inline IntPoly primitive_part(const IntPoly& p) {
    if (p.is_zero()) return p;
    BigInt g = p.content();
    if (p.lead() < 0) g = -g;
    return g == 1 ? p : p.divexact(g);
}

inline IntPoly pseudo_remainder(IntPoly a, const IntPoly& b) {
    const int db = b.degree();
    while (!a.is_zero() && a.degree() >= db) {
        const auto shift = static_cast<std::size_t>(a.degree() - db);
        IntPoly t = IntPoly::monomial(a.lead(), shift) * b;
        a = b.lead() * a - t;
    }
    return a;
}

} // namespace detail

/// Greatest common divisor in Z[s], normalized to a positive leading coefficient.
inline IntPoly gcd(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero()) return b.is_zero() ? IntPoly{} : (b.lead() < 0 ? -b : b);
    if (b.is_zero()) return a.lead() < 0 ? -a : a;
    BigInt cg;
    const BigInt ca = a.content(), cb = b.content();
    mpz_gcd(cg.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
    const std::size_t ka = a.low_order(), kb = b.low_order();
    const std::size_t ks = std::min(ka, kb);
    IntPoly x = detail::primitive_part(a.shifted_down(ka));
    IntPoly y = detail::primitive_part(b.shifted_down(kb));
    IntPoly g = 1;
    if (x.degree() > 0 && y.degree() > 0) {
        if (x.degree() < y.degree()) std::swap(x, y);
        while (!y.is_zero()) {
            IntPoly r = detail::pseudo_remainder(x, y);
            x = std::move(y);
            y = detail::primitive_part(r);
        }
        g = detail::primitive_part(x);
    }
    return (cg * g).shifted_up(ks);
}

/// An element of Q(s) in canonical form: numerator and denominator coprime in
/// Z[s], denominator with positive leading coefficient, zero stored as 0/1.
class Coeff {
public:
    Coeff() : num_(), den_(1) {}
    Coeff(long v) : num_(v), den_(1) {}
    Coeff(const BigInt& v) : num_(v), den_(1) {}
    Coeff(const Rational& v) : num_(v.get_num()), den_(v.get_den()) {}

    static Coeff fraction(IntPoly num, IntPoly den) {
        Coeff r;
        r.num_ = std::move(num);
        r.den_ = std::move(den);
        r.normalize();
        return r;
    }

    static Coeff poly(IntPoly num) { return fraction(std::move(num), IntPoly(1)); }

    /// s^k for any integer k.
    static Coeff s_pow(long k) {
        Coeff r;
        if (k >= 0) {
            r.num_ = IntPoly::monomial(1, static_cast<std::size_t>(k));
        } else {
            r.num_ = IntPoly(1);
            r.den_ = IntPoly::monomial(1, static_cast<std::size_t>(-k));
        }
        return r;
    }

    static Coeff s() { return s_pow(1); }
    static Coeff q() { return s_pow(2); }
    /// q^k = s^(2k).
    static Coeff q_pow(long k) { return s_pow(2 * k); }

    const IntPoly& numerator() const noexcept { return num_; }
    const IntPoly& denominator() const noexcept { return den_; }

    bool is_zero() const noexcept { return num_.is_zero(); }
    bool is_one() const noexcept { return num_.is_one() && den_.is_one(); }

    Coeff operator-() const {
        Coeff r = *this;
        r.num_ = -r.num_;
        return r;
    }

    friend Coeff operator+(const Coeff& a, const Coeff& b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        if (a.den_ == b.den_) return fraction(a.num_ + b.num_, a.den_);
        return fraction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }

    friend Coeff operator-(const Coeff& a, const Coeff& b) { return a + (-b); }

    friend Coeff operator*(const Coeff& a, const Coeff& b) {
        if (a.is_zero() || b.is_zero()) return {};
        if (a.den_.is_one() && b.den_.is_one()) {
            Coeff r;
            r.num_ = a.num_ * b.num_;
            return r;
        }
        return fraction(a.num_ * b.num_, a.den_ * b.den_);
    }

    friend Coeff operator/(const Coeff& a, const Coeff& b) {
        if (b.is_zero()) throw DivisionByZero();
        return fraction(a.num_ * b.den_, a.den_ * b.num_);
    }

    Coeff& operator+=(const Coeff& o) { return *this = *this + o; }
    Coeff& operator-=(const Coeff& o) { return *this = *this - o; }
    Coeff& operator*=(const Coeff& o) { return *this = *this * o; }
    Coeff& operator/=(const Coeff& o) { return *this = *this / o; }

    Coeff pow(long k) const {
        if (k < 0) return Coeff(1) / pow(-k);
        Coeff r = 1, base = *this;
        while (k > 0) {
            if (k & 1) r *= base;
            base *= base;
            k >>= 1;
        }
        return r;
    }

    friend bool operator==(const Coeff& a, const Coeff& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    /// Exact value at s = s0.
    Rational eval_at_s(const Rational& s0) const {
        const Rational d = den_.eval(s0);
        if (d == 0) throw PoleError("pole at s = " + s0.get_str());
        Rational r = num_.eval(s0) / d;
        r.canonicalize();
        return r;
    }

    /// Exact value at q = q0. Substitutes q directly when only even powers of
    /// s occur; otherwise q0 must be the square of a rational.
    Rational eval_at_q(const Rational& q0) const {
        if (num_.only_even_powers() && den_.only_even_powers()) {
            auto halve = [](const IntPoly& p) {
                std::vector<BigInt> h;
                for (std::size_t k = 0; k < p.coeffs().size(); k += 2) h.push_back(p.coeffs()[k]);
                return IntPoly(std::move(h));
            };
            const Rational d = halve(den_).eval(q0);
            if (d == 0) throw PoleError("pole at q = " + q0.get_str());
            Rational r = halve(num_).eval(q0) / d;
            r.canonicalize();
            return r;
        }
        if (q0 <= 0 || !mpz_perfect_square_p(q0.get_num_mpz_t()) ||
            !mpz_perfect_square_p(q0.get_den_mpz_t()))
            throw UnsupportedParameters("odd powers of s need a square q, got q = " + q0.get_str());
        BigInt rn, rd;
        mpz_sqrt(rn.get_mpz_t(), q0.get_num_mpz_t());
        mpz_sqrt(rd.get_mpz_t(), q0.get_den_mpz_t());
        return eval_at_s(Rational(rn, rd));
    }

    std::string str() const;

    std::size_t hash() const noexcept {
        std::size_t h = 0x9e3779b97f4a7c15ULL;
        auto mix = [&h](const IntPoly& p) {
            for (const auto& v : p.coeffs())
                h ^= std::hash<unsigned long>{}(mpz_get_ui(v.get_mpz_t())) + 0x9e3779b9 + (h << 6) + (h >> 2);
            h ^= p.coeffs().size();
        };
        mix(num_);
        mix(den_);
        return h;
    }

private:
    void normalize() {
        if (den_.is_zero()) throw DivisionByZero();
        if (num_.is_zero()) {
            den_ = IntPoly(1);
            return;
        }
        if (den_.is_one()) return;
        IntPoly g;
        if (den_.is_monomial() || num_.is_monomial()) {
            BigInt cg;
            const BigInt cn = num_.content(), cd = den_.content();
            mpz_gcd(cg.get_mpz_t(), cn.get_mpz_t(), cd.get_mpz_t());
            g = IntPoly::monomial(cg, std::min(num_.low_order(), den_.low_order()));
        } else {
            g = gcd(num_, den_);
        }
        if (!g.is_one()) {
            if (g.is_monomial()) {
                const std::size_t k = g.low_order();
                num_ = num_.shifted_down(k).divexact(g.lead());
                den_ = den_.shifted_down(k).divexact(g.lead());
            } else {
                num_ = num_.exact_quotient(g);
                den_ = den_.exact_quotient(g);
            }
        }
        if (den_.lead() < 0) {
            num_ = -num_;
            den_ = -den_;
        }
    }

    IntPoly num_;
    IntPoly den_;
};

inline std::string IntPoly::str(char var) const {
    if (c_.empty()) return "0";
    std::string out;
    bool first = true;
    for (std::size_t k = c_.size(); k-- > 0;) {
        const BigInt& v = c_[k];
        if (v == 0) continue;
        BigInt mag = abs(v);
        if (first) {
            if (v < 0) out += "-";
        } else {
            out += v < 0 ? " - " : " + ";
        }
        first = false;
        if (k == 0) {
            out += mag.get_str();
            continue;
        }
        if (mag != 1) out += mag.get_str() + "*";
        out += var;
        if (k > 1) out += "^" + std::to_string(k);
    }
    return out;
}

inline std::string Coeff::str() const {
    const std::string n = num_.str();
    if (den_.is_one()) return n;
    const bool paren_num = std::count_if(num_.coeffs().begin(), num_.coeffs().end(),
                                         [](const BigInt& v) { return v != 0; }) > 1;
    const bool den_plain = den_.is_monomial() && (den_.lead() == 1 || den_.degree() == 0);
    std::string out = paren_num ? "(" + n + ")" : n;
    out += "/";
    out += den_plain ? den_.str() : "(" + den_.str() + ")";
    return out;
}

inline std::ostream& operator<<(std::ostream& os, const Coeff& c) { return os << c.str(); }

namespace detail {

// Recursive-descent parser for scalar expressions in q and s:
//   expr   := term (('+'|'-') term)*
//   term   := unary (('*'|'/') unary)*
//   unary  := '-' unary | power
//   power  := atom ('^' signed-integer)?
//   atom   := integer | 'q' | 's' | '(' expr ')'
class CoeffParser {
public:
    explicit CoeffParser(std::string_view text) : t_(text) {}

    Coeff parse() {
        Coeff v = expr();
        skip();
        if (p_ != t_.size()) throw ParseError("unexpected '" + std::string(1, t_[p_]) + "'", p_);
        return v;
    }

private:
    void skip() {
        while (p_ < t_.size() && std::isspace(static_cast<unsigned char>(t_[p_]))) ++p_;
    }
    bool eat(char c) {
        skip();
        if (p_ < t_.size() && t_[p_] == c) {
            ++p_;
            return true;
        }
        return false;
    }

    Coeff expr() {
        Coeff v = term();
        for (;;) {
            if (eat('+')) v += term();
            else if (eat('-')) v -= term();
            else return v;
        }
    }
    Coeff term() {
        Coeff v = unary();
        for (;;) {
            if (eat('*')) v *= unary();
            else if (eat('/')) {
                const std::size_t at = p_;
                Coeff d = unary();
                if (d.is_zero()) throw ParseError("division by zero", at);
                v /= d;
            } else return v;
        }
    }
    Coeff unary() {
        if (eat('-')) return -unary();
        if (eat('+')) return unary();
        return power();
    }
    Coeff power() {
        Coeff base = atom();
        if (!eat('^')) return base;
        skip();
        bool neg = false;
        bool paren = eat('(');
        if (eat('-')) neg = true;
        skip();
        const std::size_t start = p_;
        while (p_ < t_.size() && std::isdigit(static_cast<unsigned char>(t_[p_]))) ++p_;
        if (start == p_) throw ParseError("expected integer exponent", p_);
        long k = std::stol(std::string(t_.substr(start, p_ - start)));
        if (paren && !eat(')')) throw ParseError("expected ')'", p_);
        if (neg && base.is_zero()) throw ParseError("division by zero", start);
        return base.pow(neg ? -k : k);
    }
    Coeff atom() {
        skip();
        if (p_ >= t_.size()) throw ParseError("unexpected end of input", p_);
        const char c = t_[p_];
        if (c == '(') {
            ++p_;
            Coeff v = expr();
            if (!eat(')')) throw ParseError("expected ')'", p_);
            return v;
        }
        if (c == 'q') {
            ++p_;
            return Coeff::q();
        }
        if (c == 's') {
            ++p_;
            return Coeff::s();
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            const std::size_t start = p_;
            while (p_ < t_.size() && std::isdigit(static_cast<unsigned char>(t_[p_]))) ++p_;
            return Coeff(BigInt(std::string(t_.substr(start, p_ - start))));
        }
        throw ParseError("unexpected '" + std::string(1, c) + "'", p_);
    }

    std::string_view t_;
    std::size_t p_ = 0;
};

} // namespace detail

/// Parses the canonical text form (or any scalar expression in q and s).
inline Coeff parse_coeff(std::string_view text) { return detail::CoeffParser(text).parse(); }

} // namespace iwahori

template <>
struct std::hash<iwahori::Coeff> {
    std::size_t operator()(const iwahori::Coeff& c) const noexcept { return c.hash(); }
};

#endif // IWAHORI_COEFF_HPP
