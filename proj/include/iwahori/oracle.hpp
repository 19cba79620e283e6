#ifndef IWAHORI_ORACLE_HPP
#define IWAHORI_ORACLE_HPP

// Brute-force model of SL2 over F_q((t1))((t2)): Laurent polynomials in t1, t2,
// the four-case Bruhat classifier, right-coset representatives of the level-0
// double cosets, and convolution coefficients obtained by counting.

#include <cctype>
#include <compare>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "coeff.hpp"
#include "error.hpp"
#include "product.hpp"

namespace iwahori {

inline void check_prime(long p) {
    if (p < 2 || p > 17) throw UnsupportedParameters("q must be a prime <= 17, got " + std::to_string(p));
    for (long d = 2; d * d <= p; ++d)
        if (p % d == 0) throw UnsupportedParameters("q must be prime, got " + std::to_string(p));
}

/// A value of the rank-two valuation; `infinite` for v(0).
struct Rank2Valuation {
    bool infinite = false;
    Index v1 = 0;
    Index v2 = 0;

    static Rank2Valuation inf() { return {true, 0, 0}; }

    friend bool operator==(const Rank2Valuation&, const Rank2Valuation&) = default;
    // lexicographic from the right; infinity above everything
    friend std::strong_ordering operator<=>(const Rank2Valuation& a, const Rank2Valuation& b) {
        if (a.infinite || b.infinite) return a.infinite <=> b.infinite;
        if (auto c = a.v2 <=> b.v2; c != 0) return c;
        return a.v1 <=> b.v1;
    }
    Rank2Valuation operator-() const { return infinite ? *this : Rank2Valuation{false, -v1, -v2}; }
    std::string str() const {
        return infinite ? "inf" : "(" + std::to_string(v1) + "," + std::to_string(v2) + ")";
    }
};

/// Finite sum of c * t1^e1 * t2^e2 with c in F_p.
class FieldElem2 {
public:
    explicit FieldElem2(long p = 2) : p_(p) {}

    static FieldElem2 constant(long p, long c) { return monomial(p, c, 0, 0); }
    static FieldElem2 monomial(long p, long c, Index e1, Index e2) {
        FieldElem2 x(p);
        x.add_term(e1, e2, c);
        return x;
    }

    long modulus() const noexcept { return p_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    /// Coefficient of t1^e1 t2^e2.
    long coeff(Index e1, Index e2) const {
        auto it = terms_.find({e2, e1});
        return it == terms_.end() ? 0 : it->second;
    }
    /// Terms keyed (e2, e1) so that iteration follows the valuation order.
    const std::map<std::pair<Index, Index>, long>& terms() const noexcept { return terms_; }

    Rank2Valuation valuation() const {
        if (terms_.empty()) return Rank2Valuation::inf();
        const auto& [e2, e1] = terms_.begin()->first;
        return {false, e1, e2};
    }

    void add_term(Index e1, Index e2, long c) {
        c %= p_;
        if (c < 0) c += p_;
        if (c == 0) return;
        auto& slot = terms_[{e2, e1}];
        slot = (slot + c) % p_;
        if (slot == 0) terms_.erase({e2, e1});
    }

    FieldElem2 operator-() const {
        FieldElem2 r(p_);
        for (const auto& [k, c] : terms_) r.terms_[k] = (p_ - c) % p_;
        return r;
    }
    friend FieldElem2 operator+(const FieldElem2& a, const FieldElem2& b) {
        a.same_field(b);
        FieldElem2 r = a;
        for (const auto& [k, c] : b.terms_) r.add_term(k.second, k.first, c);
        return r;
    }
    friend FieldElem2 operator-(const FieldElem2& a, const FieldElem2& b) { return a + (-b); }
    friend FieldElem2 operator*(const FieldElem2& a, const FieldElem2& b) {
        a.same_field(b);
        FieldElem2 r(a.p_);
        for (const auto& [ka, ca] : a.terms_)
            for (const auto& [kb, cb] : b.terms_) r.add_term(ka.second + kb.second, ka.first + kb.first, ca * cb);
        return r;
    }
    friend bool operator==(const FieldElem2&, const FieldElem2&) = default;

    /// Inverse of a monomial.
    FieldElem2 monomial_inverse() const {
        if (terms_.size() != 1) throw UnsupportedParameters("only monomials are invertible here");
        const auto& [k, c] = *terms_.begin();
        long inv = 1;
        for (long e = p_ - 2, b = c; e > 0; e >>= 1, b = b * b % p_)
            if (e & 1) inv = inv * b % p_;
        return monomial(p_, inv, -k.second, -k.first);
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::string out;
        bool first = true;
        for (const auto& [k, c] : terms_) {
            const auto [e2, e1] = k;
            if (!first) out += " + ";
            first = false;
            std::string mono;
            auto var = [&](const char* name, Index e) {
                if (e == 0) return;
                if (!mono.empty()) mono += "*";
                mono += name;
                if (e != 1) mono += "^" + std::to_string(e);
            };
            var("t1", e1);
            var("t2", e2);
            if (mono.empty()) out += std::to_string(c);
            else if (c == 1) out += mono;
            else out += std::to_string(c) + "*" + mono;
        }
        return out;
    }

private:
    void same_field(const FieldElem2& o) const {
        if (p_ != o.p_) throw UnsupportedParameters("mixing residue fields of different size");
    }

    long p_;
    std::map<std::pair<Index, Index>, long> terms_;
};

inline bool in_O(const FieldElem2& x) { return x.valuation() >= Rank2Valuation{false, 0, 0}; }

struct LocalFieldMatrix {
    FieldElem2 a, b, c, d;

    FieldElem2 det() const { return a * d - b * c; }
    LocalFieldMatrix adjugate() const { return {d, -b, -c, a}; }

    friend LocalFieldMatrix operator*(const LocalFieldMatrix& x, const LocalFieldMatrix& y) {
        return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
    }
    friend bool operator==(const LocalFieldMatrix&, const LocalFieldMatrix&) = default;

    std::string str() const {
        return "[[" + a.str() + ", " + b.str() + "], [" + c.str() + ", " + d.str() + "]]";
    }
};

inline bool has_unit_determinant(const LocalFieldMatrix& x) {
    return x.det() == FieldElem2::constant(x.a.modulus(), 1);
}

/// Entries integral, lower-left in t1*O, determinant 1.
inline bool in_iwahori(const LocalFieldMatrix& x) {
    return in_O(x.a) && in_O(x.b) && in_O(x.d) && x.c.valuation() >= Rank2Valuation{false, 1, 0} &&
           has_unit_determinant(x);
}

/// eta^{(1)}_{i,j} or eta^{(2)}_{i,j}.
inline LocalFieldMatrix representative(const BasisIndex& label, long p) {
    check_sheet(label.sheet);
    const auto t = FieldElem2::monomial(p, 1, label.i, label.j);
    const auto tinv = FieldElem2::monomial(p, 1, -label.i, -label.j);
    const FieldElem2 zero(p);
    if (label.sheet == 1) return {t, zero, zero, tinv};
    return {zero, t, -tinv, zero};
}

/// Double-coset label of x via the four-case Bruhat decomposition.
inline BasisIndex classify(const LocalFieldMatrix& x) {
    if (!has_unit_determinant(x)) throw DeterminantError("matrix does not have determinant 1: " + x.str());
    const auto va = x.a.valuation(), vb = x.b.valuation(), vc = x.c.valuation(), vd = x.d.valuation();
    if (va <= vb && va < vc) return {1, va.v1, va.v2};
    if (vb < va && vb < vd) return {2, vb.v1, vb.v2};
    if (vc <= va && vc <= vd) return {2, -vc.v1, -vc.v2};
    if (vd <= vb && vd < vc) return {1, -vd.v1, -vd.v2};
    throw UnreachableCase("no Bruhat case applies to " + x.str());
}

namespace detail {

// Polynomials sum_{n < len} c_n t1^n with c_0 != 0, in a fixed order.
inline std::vector<FieldElem2> unit_lifts(long p, Index len) {
    std::vector<FieldElem2> out;
    std::vector<long> digits(static_cast<std::size_t>(len), 0);
    digits[0] = 1;
    for (;;) {
        FieldElem2 u(p);
        for (Index n = 0; n < len; ++n) u.add_term(n, 0, digits[static_cast<std::size_t>(n)]);
        out.push_back(std::move(u));
        std::size_t pos = 0;
        for (; pos < digits.size(); ++pos) {
            const long lowest = pos == 0 ? 1 : 0;
            if (++digits[pos] < p) break;
            digits[pos] = lowest;
        }
        if (pos == digits.size()) break;
    }
    return out;
}

} // namespace detail

constexpr Index kDefaultEnumerationLimit = 4;

/// Right-coset representatives z with C^{(sheet)}_{i,0} = disjoint union of I z.
inline std::vector<LocalFieldMatrix> enumerate_reps(int sheet, Index i, long p,
                                                    Index limit = kDefaultEnumerationLimit) {
    check_sheet(sheet);
    check_prime(p);
    if (i > limit || i < -limit)
        throw UnsupportedParameters("|i| = " + std::to_string(i < 0 ? -i : i) + " exceeds the enumeration limit " +
                                    std::to_string(limit));
    const FieldElem2 zero(p);
    auto t1 = [&](Index e) { return FieldElem2::monomial(p, 1, e, 0); };
    std::vector<LocalFieldMatrix> out;
    out.push_back(representative({sheet, i, 0}, p));
    if (sheet == 1 && i >= 0) {
        for (Index k = 1; k <= 2 * i; ++k)
            for (const auto& u : detail::unit_lifts(p, 2 * i - k + 1)) out.push_back({t1(i), zero, t1(-i + k) * u, t1(-i)});
    } else if (sheet == 1) {
        for (Index k = 0; k <= -2 * i - 1; ++k)
            for (const auto& u : detail::unit_lifts(p, -2 * i - k)) out.push_back({t1(i), t1(i + k) * u, zero, t1(-i)});
    } else if (i >= 0) {
        for (Index k = 0; k <= 2 * i; ++k)
            for (const auto& u : detail::unit_lifts(p, 2 * i - k + 1))
                out.push_back({zero, t1(i), -t1(-i), -(t1(-i + k) * u)});
    } else {
        for (Index k = 1; k <= -2 * i - 1; ++k)
            for (const auto& u : detail::unit_lifts(p, -2 * i - k)) out.push_back({t1(i + k) * u, t1(i), -t1(-i), zero});
    }
    return out;
}

/// Coefficients of chi_x * chi_y (both level 0) by counting:
/// at chi^{(c)}_{m,0} the value is #{z : eta^{(c)}_{m,0} z^-1 in C_x} / q.
inline std::map<BasisIndex, Rational> product_counts(const BasisIndex& x, const BasisIndex& y, long p,
                                                     Index limit = kDefaultEnumerationLimit) {
    check_sheet(x.sheet);
    check_sheet(y.sheet);
    if (x.j != 0 || y.j != 0)
        throw UnsupportedParameters("counting is only possible at level 0; other double cosets are uncountable");
    const auto reps = enumerate_reps(y.sheet, y.i, p, limit);
    std::vector<LocalFieldMatrix> inverses;
    inverses.reserve(reps.size());
    for (const auto& z : reps) inverses.push_back(z.adjugate());
    const Index reach = (x.i < 0 ? -x.i : x.i) + (y.i < 0 ? -y.i : y.i) + 1;
    std::map<BasisIndex, Rational> out;
    for (int c = 1; c <= 2; ++c) {
        for (Index m = -reach; m <= reach; ++m) {
            const auto eta = representative({c, m, 0}, p);
            long count = 0;
            for (const auto& zi : inverses)
                if (classify(eta * zi) == x) ++count;
            if (!count) continue;
            Rational v(count, p);
            v.canonicalize();
            out[{c, m, 0}] = v;
        }
    }
    return out;
}

/// Exact values of a symbolic element at q = p, keyed like product_counts.
inline std::map<BasisIndex, Rational> evaluate_at(const HeckeElement& x, long p) {
    std::map<BasisIndex, Rational> out;
    for (const auto& [key, row] : x.rows()) {
        if (!row.finite()) throw InfiniteContribution("cannot tabulate an infinite row");
        for (const auto& s : row.strips())
            for (Index m = *s.lo; m <= *s.hi; ++m) {
                const Rational v = eval_terms(s.terms, m).eval_at_q(Rational(p));
                if (v != 0) out[{key.sheet, m, key.level}] = v;
            }
    }
    return out;
}

/// Random elements of the Iwahori subgroup as products of elementary matrices.
class IwahoriSampler {
public:
    IwahoriSampler(long p, std::uint64_t seed) : p_(p), rng_(seed) { check_prime(p); }

    LocalFieldMatrix next(int factors = 4) {
        const FieldElem2 zero(p_), one = FieldElem2::constant(p_, 1);
        LocalFieldMatrix g{one, zero, zero, one};
        for (int f = 0; f < factors; ++f) {
            switch (pick(0, 2)) {
            case 0: g = g * LocalFieldMatrix{one, integral(0), zero, one}; break;
            case 1: g = g * LocalFieldMatrix{one, zero, integral(1), one}; break;
            default: {
                const auto c = FieldElem2::constant(p_, pick(1, p_ - 1));
                g = g * LocalFieldMatrix{c, zero, zero, c.monomial_inverse()};
            }
            }
        }
        return g;
    }

private:
    long pick(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

    // Random element of valuation >= (min1, 0); includes t1^-n t2 terms, which lie in O.
    FieldElem2 integral(Index min1) {
        FieldElem2 x(p_);
        const int n = static_cast<int>(pick(1, 3));
        for (int k = 0; k < n; ++k) {
            if (pick(0, 2) == 0) x.add_term(pick(-3, 3), pick(1, 2), pick(1, p_ - 1));
            else x.add_term(min1 + pick(0, 3), 0, pick(1, p_ - 1));
        }
        return x;
    }

    long p_;
    std::mt19937_64 rng_;
};

namespace detail {

// Laurent-polynomial entries in t1, t2 with integer coefficients.
class MatrixParser {
public:
    MatrixParser(std::string_view text, long p) : s_(text), p_(p) {}

    LocalFieldMatrix parse() {
        expect('[');
        expect('[');
        auto a = expr();
        expect(',');
        auto b = expr();
        expect(']');
        expect(',');
        expect('[');
        auto c = expr();
        expect(',');
        auto d = expr();
        expect(']');
        expect(']');
        skip();
        if (pos_ != s_.size()) throw ParseError("trailing input", pos_);
        return {a, b, c, d};
    }

private:
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool eat(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!eat(c)) throw ParseError(std::string("expected '") + c + "'", pos_);
    }
    long long integer() {
        skip();
        const std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) throw ParseError("expected an integer", pos_);
        try {
            return std::stoll(std::string(s_.substr(start, pos_ - start)));
        } catch (const std::out_of_range&) {
            throw ParseError("integer out of range", start);
        }
    }
    FieldElem2 expr() {
        FieldElem2 acc = eat('-') ? -term() : term();
        for (;;) {
            if (eat('+')) acc = acc + term();
            else if (eat('-')) acc = acc - term();
            else return acc;
        }
    }
    FieldElem2 term() {
        FieldElem2 acc = factor();
        while (eat('*')) acc = acc * factor();
        return acc;
    }
    FieldElem2 factor() {
        const std::size_t at = (skip(), pos_);
        FieldElem2 base = atom();
        if (!eat('^')) return base;
        const bool neg = eat('-');
        const long long e = integer();
        FieldElem2 r = FieldElem2::constant(p_, 1);
        FieldElem2 b = base;
        if (neg) {
            if (base.terms().size() != 1) throw ParseError("negative power of a non-monomial", at);
            b = base.monomial_inverse();
        }
        for (long long k = 0; k < e; ++k) r = r * b;
        return r;
    }
    FieldElem2 atom() {
        skip();
        if (eat('(')) {
            auto v = expr();
            expect(')');
            return v;
        }
        if (s_.substr(pos_, 2) == "t1" || s_.substr(pos_, 2) == "t2") {
            const bool second = s_[pos_ + 1] == '2';
            pos_ += 2;
            return FieldElem2::monomial(p_, 1, second ? 0 : 1, second ? 1 : 0);
        }
        if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
            return FieldElem2::constant(p_, static_cast<long>(integer() % p_));
        throw ParseError("unexpected input", pos_);
    }

    std::string_view s_;
    long p_;
    std::size_t pos_ = 0;
};

} // namespace detail

/// Parses "[[a,b],[c,d]]" with entries such as t1*t2^-1 + 3.
inline LocalFieldMatrix parse_matrix(std::string_view text, long p) {
    check_prime(p);
    return detail::MatrixParser(text, p).parse();
}

} // namespace iwahori

#endif // IWAHORI_ORACLE_HPP
