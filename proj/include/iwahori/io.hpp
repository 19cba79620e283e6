#ifndef IWAHORI_IO_HPP
#define IWAHORI_IO_HPP

// Text, JSON and LaTeX forms of elements, and the expression parser.
//
// Grammar ('*' binds tighter than '+' and '-'; products associate to the left):
//   expr    := ['-'] term (('+' | '-') term)*
//   term    := power (('*' | '/') power)*
//   power   := unary ['^' exponent]
//   unary   := '-' unary | atom
//   exponent:= ['-'] int | 'm' | '(' ['-'] [int '*'] 'm' ')' | '(' ['-'] int ')'
//   atom    := int | 'q' | 's' | 'm' | 'iota' | 'phi0' | 'phi1' | 'phi2'
//            | 'theta(' int ',' int ')' | 'chi(' int ',' index ',' int ')'
//            | 'sum(m=' bound '..' bound ',' expr ')' | '(' expr ')'
// Inside sum(...) the variable m may appear in scalars and as the first
// index of chi, e.g. sum(m=-inf..0, q^(-m)*chi(2,m,1)).

#include <cctype>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

#include <json.hpp>

#include "element.hpp"
#include "error.hpp"
#include "presets.hpp"
#include "product.hpp"

namespace iwahori {

// ---------------------------------------------------------------- printing

namespace detail {

inline std::string bound_text(const std::optional<Index>& b, bool upper) {
    if (b) return std::to_string(*b);
    return upper ? "+inf" : "-inf";
}

inline std::string terms_text(const TermList& terms) {
    std::string out;
    for (std::size_t n = 0; n < terms.size(); ++n) {
        if (n) out += " + ";
        out += terms[n].poly.is_constant() ? "(" + terms[n].poly.coeff(0).str() + ")" : "(" + terms[n].poly.str("m") + ")";
        if (terms[n].step != 0) out += "*s^(" + std::to_string(terms[n].step) + "*m)";
    }
    return out;
}

inline bool constant_strip(const Strip& s) {
    return s.terms.size() == 1 && s.terms[0].step == 0 && s.terms[0].poly.is_constant();
}

} // namespace detail

/// Re-parseable text form; "0" for the zero element.
inline std::string format_text(const HeckeElement& x) {
    if (x.is_zero()) return "0";
    std::string out;
    for (const auto& [key, row] : x.rows()) {
        const std::string a = std::to_string(key.sheet), j = std::to_string(key.level);
        for (const auto& s : row.strips()) {
            if (!out.empty()) out += " + ";
            if (detail::constant_strip(s) && s.lo == s.hi) {
                out += "(" + s.terms[0].poly.coeff(0).str() + ")*chi(" + a + "," + std::to_string(*s.lo) + "," + j + ")";
                continue;
            }
            out += "sum(m=" + detail::bound_text(s.lo, false) + ".." + detail::bound_text(s.hi, true) + ", (" +
                   detail::terms_text(s.terms) + ")*chi(" + a + ",m," + j + "))";
        }
    }
    return out;
}

namespace detail {

inline std::string latex_int_poly(const IntPoly& p) {
    std::string out;
    for (std::size_t k = p.coeffs().size(); k-- > 0;) {
        const BigInt& c = p.coeffs()[k];
        if (c == 0) continue;
        const bool neg = c < 0;
        const BigInt mag = neg ? BigInt(-c) : c;
        if (out.empty()) out += neg ? "-" : "";
        else out += neg ? " - " : " + ";
        if (mag != 1 || k == 0) out += mag.get_str();
        if (k >= 1) out += "s";
        if (k >= 2) out += "^{" + std::to_string(k) + "}";
    }
    return out.empty() ? "0" : out;
}

inline std::string latex_coeff(const Coeff& c) {
    if (c.denominator().is_one()) return latex_int_poly(c.numerator());
    return "\\frac{" + latex_int_poly(c.numerator()) + "}{" + latex_int_poly(c.denominator()) + "}";
}

} // namespace detail

/// LaTeX rendering with s = q^{1/2}; rays get \sum_{m<=h} or \sum_{m>=l} headers.
inline std::string format_latex(const HeckeElement& x) {
    if (x.is_zero()) return "0";
    std::string out;
    for (const auto& [key, row] : x.rows()) {
        for (const auto& s : row.strips()) {
            if (!out.empty()) out += " + ";
            const std::string chi_m = "\\chi^{(" + std::to_string(key.sheet) + ")}_{m," + std::to_string(key.level) + "}";
            if (detail::constant_strip(s) && s.lo == s.hi) {
                out += "\\left(" + detail::latex_coeff(s.terms[0].poly.coeff(0)) + "\\right) \\chi^{(" +
                       std::to_string(key.sheet) + ")}_{" + std::to_string(*s.lo) + "," + std::to_string(key.level) + "}";
                continue;
            }
            std::string head;
            if (!s.lo) head = "\\sum_{m<=" + std::to_string(*s.hi) + "}";
            else if (!s.hi) head = "\\sum_{m>=" + std::to_string(*s.lo) + "}";
            else head = "\\sum_{m=" + std::to_string(*s.lo) + "}^{" + std::to_string(*s.hi) + "}";
            std::string body;
            for (const auto& t : s.terms) {
                if (!body.empty()) body += " + ";
                std::string poly;
                for (std::size_t k = t.poly.coeffs().size(); k-- > 0;) {
                    const Coeff& c = t.poly.coeffs()[k];
                    if (c.is_zero()) continue;
                    if (!poly.empty()) poly += " + ";
                    poly += "\\left(" + detail::latex_coeff(c) + "\\right)";
                    if (k >= 1) poly += " m";
                    if (k >= 2) poly += "^{" + std::to_string(k) + "}";
                }
                body += t.step == 0 ? poly : "\\left(" + poly + "\\right) s^{" + std::to_string(t.step) + "m}";
            }
            out += head + " \\left(" + body + "\\right) " + chi_m;
        }
    }
    return out;
}

/// The element schema: {"rows": [{a, j, strips: [{lo, hi, terms: [{e, poly}]}]}]}.
inline nlohmann::json to_json(const HeckeElement& x) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& [key, row] : x.rows()) {
        nlohmann::json strips = nlohmann::json::array();
        for (const auto& s : row.strips()) {
            nlohmann::json terms = nlohmann::json::array();
            for (const auto& t : s.terms) {
                nlohmann::json poly = nlohmann::json::array();
                for (std::size_t k = t.poly.coeffs().size(); k-- > 0;) poly.push_back(t.poly.coeffs()[k].str());
                terms.push_back({{"e", t.step}, {"poly", poly}});
            }
            nlohmann::json lo = s.lo ? nlohmann::json(*s.lo) : nlohmann::json("-inf");
            nlohmann::json hi = s.hi ? nlohmann::json(*s.hi) : nlohmann::json("+inf");
            strips.push_back({{"lo", lo}, {"hi", hi}, {"terms", terms}});
        }
        rows.push_back({{"a", key.sheet}, {"j", key.level}, {"strips", strips}});
    }
    return {{"rows", rows}};
}

inline HeckeElement from_json(const nlohmann::json& doc) {
    auto fail = [](const std::string& what) -> Error { return Error("element JSON: " + what); };
    if (!doc.is_object() || !doc.contains("rows") || !doc["rows"].is_array()) throw fail("missing \"rows\" array");
    auto bound = [&](const nlohmann::json& b, const char* inf) -> std::optional<Index> {
        if (b.is_number_integer()) return b.get<Index>();
        if (b.is_string() && b.get<std::string>() == inf) return std::nullopt;
        throw fail(std::string("bad bound ") + b.dump());
    };
    RawRows raw;
    try {
        for (const auto& row : doc["rows"]) {
            const int a = row.at("a").get<int>();
            check_sheet(a);
            const Index j = row.at("j").get<Index>();
            for (const auto& s : row.at("strips")) {
                Strip strip{bound(s.at("lo"), "-inf"), bound(s.at("hi"), "+inf"), {}};
                if (strip.lo && strip.hi && *strip.lo > *strip.hi) throw fail("strip with lo > hi");
                for (const auto& t : s.at("terms")) {
                    const auto& coeffs = t.at("poly");
                    std::vector<Coeff> asc(coeffs.size());
                    for (std::size_t k = 0; k < coeffs.size(); ++k)
                        asc[coeffs.size() - 1 - k] = parse_coeff(coeffs[k].get<std::string>());
                    strip.terms.push_back({t.at("e").get<long>(), Poly(std::move(asc))});
                }
                raw[{a, j}].push_back(std::move(strip));
            }
        }
    } catch (const nlohmann::json::exception& e) {
        throw fail(e.what());
    }
    return HeckeElement::from_raw(raw);
}

// ---------------------------------------------------------------- parsing

namespace detail {

using MScalar = std::map<long, Poly>; // step -> polynomial in m

inline MScalar mscalar(const Coeff& c) {
    MScalar r;
    if (!c.is_zero()) r[0] = Poly(c);
    return r;
}

inline void mclean(MScalar& x) {
    for (auto it = x.begin(); it != x.end();) {
        if (it->second.is_zero()) it = x.erase(it);
        else ++it;
    }
}

inline MScalar madd(MScalar a, const MScalar& b, const Coeff& sign = Coeff(1)) {
    for (const auto& [e, p] : b) a[e] += sign * p;
    mclean(a);
    return a;
}

inline MScalar mmul(const MScalar& a, const MScalar& b) {
    MScalar r;
    for (const auto& [ea, pa] : a)
        for (const auto& [eb, pb] : b) r[ea + eb] += pa * pb;
    mclean(r);
    return r;
}

inline bool mconstant(const MScalar& x) {
    return x.empty() || (x.size() == 1 && x.begin()->first == 0 && x.begin()->second.is_constant());
}

inline Coeff mvalue(const MScalar& x) { return x.empty() ? Coeff() : x.begin()->second.coeff(0); }

// k with c == s^k, if any.
inline std::optional<long> s_exponent(const Coeff& c) {
    const auto& n = c.numerator();
    const auto& d = c.denominator();
    if (!n.is_monomial() || !d.is_monomial() || n.lead() != 1 || d.lead() != 1) return std::nullopt;
    return static_cast<long>(n.degree()) - static_cast<long>(d.degree());
}

struct Value {
    enum class Kind { scalar, element, indexed } kind = Kind::scalar;
    MScalar scalar;
    HeckeElement element;
    std::map<std::tuple<int, Index, Index>, MScalar> indexed; // (sheet, shift, level) -> coefficient

    static Value of(MScalar s) { return {Kind::scalar, std::move(s), {}, {}}; }
    static Value of(HeckeElement e) { return {Kind::element, {}, std::move(e), {}}; }
    bool zero_scalar() const { return kind == Kind::scalar && scalar.empty(); }
};

class ElementParser {
public:
    ElementParser(std::string_view text, const ProductEngine& engine) : t_(text), engine_(engine) {}

    HeckeElement parse() {
        Value v = expr();
        skip();
        if (p_ != t_.size()) throw ParseError("unexpected '" + std::string(1, t_[p_]) + "'", p_);
        if (v.zero_scalar()) return {};
        if (v.kind != Value::Kind::element) throw ParseError("expression is not an element", 0);
        return v.element;
    }

private:
    void skip() {
        while (p_ < t_.size() && std::isspace(static_cast<unsigned char>(t_[p_]))) ++p_;
    }
    bool peek(char c) {
        skip();
        return p_ < t_.size() && t_[p_] == c;
    }
    bool eat(char c) {
        if (!peek(c)) return false;
        ++p_;
        return true;
    }
    bool eat(std::string_view word) {
        skip();
        if (t_.substr(p_, word.size()) != word) return false;
        p_ += word.size();
        return true;
    }
    void expect(char c) {
        if (!eat(c)) throw ParseError(std::string("expected '") + c + "'", p_);
    }
    std::string word() {
        skip();
        const std::size_t start = p_;
        while (p_ < t_.size() && (std::isalnum(static_cast<unsigned char>(t_[p_])) || t_[p_] == '_')) ++p_;
        return std::string(t_.substr(start, p_ - start));
    }
    long long integer() {
        skip();
        const std::size_t start = p_;
        while (p_ < t_.size() && std::isdigit(static_cast<unsigned char>(t_[p_]))) ++p_;
        if (start == p_) throw ParseError("expected an integer", p_);
        try {
            return std::stoll(std::string(t_.substr(start, p_ - start)));
        } catch (const std::out_of_range&) {
            throw ParseError("integer out of range", start);
        }
    }
    long long signed_integer() {
        const bool neg = eat('-');
        if (!neg) eat('+');
        const long long v = integer();
        return neg ? -v : v;
    }

    Value add(Value a, const Value& b, bool subtract, std::size_t at) {
        const Coeff sign(subtract ? -1 : 1);
        if (b.zero_scalar()) return a;
        if (a.zero_scalar()) {
            Value r = b;
            return subtract ? negate(r) : r;
        }
        if (a.kind != b.kind) throw ParseError("cannot add a scalar and an element", at);
        switch (a.kind) {
        case Value::Kind::scalar: a.scalar = madd(a.scalar, b.scalar, sign); break;
        case Value::Kind::element: a.element = subtract ? a.element - b.element : a.element + b.element; break;
        case Value::Kind::indexed:
            for (const auto& [k, c] : b.indexed) {
                a.indexed[k] = madd(a.indexed[k], c, sign);
                if (a.indexed[k].empty()) a.indexed.erase(k);
            }
            break;
        }
        return a;
    }

    Value scale(const MScalar& c, Value x, std::size_t at) {
        if (x.kind == Value::Kind::element) {
            if (!mconstant(c)) throw ParseError("a coefficient depending on m needs a summand chi(a,m,j)", at);
            x.element = mvalue(c) * x.element;
        } else {
            for (auto it = x.indexed.begin(); it != x.indexed.end();) {
                it->second = mmul(c, it->second);
                if (it->second.empty()) it = x.indexed.erase(it);
                else ++it;
            }
        }
        return x;
    }

    Value negate(Value v) {
        if (v.kind == Value::Kind::scalar) {
            v.scalar = madd({}, v.scalar, Coeff(-1));
            return v;
        }
        return scale(mscalar(Coeff(-1)), std::move(v), 0);
    }

    Value multiply(const Value& a, const Value& b, std::size_t at) {
        using K = Value::Kind;
        if (a.kind == K::scalar && b.kind == K::scalar) return Value::of(mmul(a.scalar, b.scalar));
        if (a.kind == K::scalar) return scale(a.scalar, b, at);
        if (b.kind == K::scalar) return scale(b.scalar, a, at);
        if (a.kind == K::element && b.kind == K::element) return Value::of(engine_.mul(a.element, b.element));
        throw ParseError("convolution with an m-indexed summand is not supported", at);
    }

    static std::optional<MScalar> invert(const MScalar& x) {
        if (x.size() != 1 || !x.begin()->second.is_constant() || x.begin()->second.is_zero()) return std::nullopt;
        MScalar r;
        r[-x.begin()->first] = Poly(Coeff(1) / x.begin()->second.coeff(0));
        return r;
    }

    Value expr() {
        Value v = eat('-') ? negate(term()) : term();
        for (;;) {
            const std::size_t op = (skip(), p_);
            if (eat('+')) v = add(std::move(v), term(), false, op);
            else if (eat('-')) v = add(std::move(v), term(), true, op);
            else return v;
        }
    }

    Value term() {
        Value v = power();
        for (;;) {
            const std::size_t op = (skip(), p_);
            if (eat('*')) {
                v = multiply(v, power(), op);
            } else if (eat('/')) {
                Value d = power();
                std::optional<MScalar> inv;
                if (d.kind == Value::Kind::scalar) inv = invert(d.scalar);
                if (!inv) throw ParseError("can only divide by a nonzero monomial scalar", op);
                v = multiply(v, Value::of(*inv), op);
            } else {
                return v;
            }
        }
    }

    Value power() {
        Value base = unary();
        const std::size_t op = (skip(), p_);
        if (!eat('^')) return base;
        // exponent: integer n, or k*m
        long long k = 0;
        bool symbolic = false;
        const bool paren = eat('(');
        const bool neg = eat('-');
        if (eat('m')) {
            symbolic = true;
            k = 1;
        } else {
            k = integer();
            if (paren && eat('*')) {
                if (!eat('m')) throw ParseError("expected 'm'", p_);
                symbolic = true;
            }
        }
        if (paren) expect(')');
        if (neg) k = -k;
        if (symbolic) {
            if (!in_sum_) throw ParseError("'m' outside sum(...)", op);
            std::optional<long> e;
            if (base.kind == Value::Kind::scalar && mconstant(base.scalar)) e = s_exponent(mvalue(base.scalar));
            if (!e) throw ParseError("only powers of s or q may have exponent in m", op);
            MScalar r;
            r[*e * static_cast<long>(k)] = Poly(Coeff(1));
            return Value::of(r);
        }
        if (base.kind == Value::Kind::scalar) {
            MScalar b = base.scalar;
            if (k < 0) {
                auto inv = invert(b);
                if (!inv) throw ParseError("negative power of a non-invertible scalar", op);
                b = *inv;
                k = -k;
            }
            MScalar r = mscalar(Coeff(1));
            for (long long n = 0; n < k; ++n) r = mmul(r, b);
            return Value::of(r);
        }
        if (base.kind == Value::Kind::element) {
            if (k < 0) throw ParseError("negative power of an element", op);
            return Value::of(iwahori::power(base.element, static_cast<long>(k), engine_));
        }
        throw ParseError("power of an m-indexed summand", op);
    }

    Value unary() {
        if (eat('-')) return negate(unary());
        if (eat('+')) return unary();
        return atom();
    }

    // index argument of chi: integer, or m + c inside a sum
    std::pair<bool, Index> index_arg() {
        skip();
        const std::size_t at = p_;
        bool has_m = false;
        Index c = 0;
        bool first = true;
        for (;;) {
            bool neg = false;
            if (eat('-')) neg = true;
            else if (!first && !eat('+')) break;
            first = false;
            if (eat('m')) {
                if (neg || has_m) throw ParseError("index must be m + constant", at);
                if (!in_sum_) throw ParseError("'m' outside sum(...)", at);
                has_m = true;
            } else {
                const Index v = static_cast<Index>(integer());
                c += neg ? -v : v;
            }
        }
        return {has_m, c};
    }

    Value atom() {
        skip();
        const std::size_t at = p_;
        if (p_ >= t_.size()) throw ParseError("unexpected end of input", p_);
        const char ch = t_[p_];
        if (ch == '(') {
            ++p_;
            Value v = expr();
            expect(')');
            return v;
        }
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            const std::size_t start = p_;
            while (p_ < t_.size() && std::isdigit(static_cast<unsigned char>(t_[p_]))) ++p_;
            return Value::of(mscalar(Coeff(BigInt(std::string(t_.substr(start, p_ - start))))));
        }
        const std::string name = word();
        if (name.empty()) throw ParseError("unexpected '" + std::string(1, ch) + "'", at);
        if (name == "q") return Value::of(mscalar(Coeff::q()));
        if (name == "s") return Value::of(mscalar(Coeff::s()));
        if (name == "m") {
            if (!in_sum_) throw ParseError("'m' outside sum(...)", at);
            MScalar r;
            r[0] = Poly::var();
            return Value::of(r);
        }
        if (name == "iota") return Value::of(iota());
        if (name == "phi0") return Value::of(phi(0));
        if (name == "phi1") return Value::of(phi(1));
        if (name == "phi2") return Value::of(phi(2));
        if (name == "theta") {
            expect('(');
            const Index i = signed_integer();
            expect(',');
            const Index j = signed_integer();
            expect(')');
            try {
                return Value::of(theta(i, j));
            } catch (const UnknownName& e) {
                throw ParseError(e.what(), at);
            }
        }
        if (name == "chi") {
            expect('(');
            const std::size_t sheet_at = (skip(), p_);
            const long long a = signed_integer();
            if (a != 1 && a != 2) throw ParseError("sheet must be 1 or 2", sheet_at);
            expect(',');
            const auto [has_m, c] = index_arg();
            expect(',');
            const Index j = signed_integer();
            expect(')');
            if (!has_m) return Value::of(chi(static_cast<int>(a), c, j));
            Value v;
            v.kind = Value::Kind::indexed;
            v.indexed[{static_cast<int>(a), c, j}] = mscalar(Coeff(1));
            return v;
        }
        if (name == "sum") return sum(at);
        throw ParseError("unknown name '" + name + "'", at);
    }

    std::optional<Index> sum_bound(bool upper) {
        skip();
        if (eat("+inf") || eat("inf")) {
            if (!upper) throw ParseError("lower bound cannot be +inf", p_);
            return std::nullopt;
        }
        if (eat("-inf")) {
            if (upper) throw ParseError("upper bound cannot be -inf", p_);
            return std::nullopt;
        }
        return static_cast<Index>(signed_integer());
    }

    Value sum(std::size_t at) {
        if (in_sum_) throw ParseError("nested sum(...)", at);
        expect('(');
        if (!eat('m')) throw ParseError("expected summation variable 'm'", p_);
        expect('=');
        const auto lo = sum_bound(false);
        if (!eat("..")) throw ParseError("expected '..'", p_);
        const auto hi = sum_bound(true);
        expect(',');
        in_sum_ = true;
        Value body = expr();
        in_sum_ = false;
        expect(')');
        if (body.zero_scalar()) return Value::of(HeckeElement{});
        if (body.kind != Value::Kind::indexed) throw ParseError("summand must contain chi(a,m,j)", at);
        if (lo && hi && *lo > *hi) return Value::of(HeckeElement{});
        RawRows raw;
        for (const auto& [key, coef] : body.indexed) {
            const auto [a, c, j] = key;
            // coefficient at n = m + c is coef(n - c)
            Strip s{lo ? std::optional<Index>(*lo + c) : std::nullopt, hi ? std::optional<Index>(*hi + c) : std::nullopt, {}};
            for (const auto& [e, p] : coef) s.terms.push_back({e, Coeff::s_pow(-e * c) * p.shifted(-c)});
            raw[{a, j}].push_back(std::move(s));
        }
        try {
            return Value::of(HeckeElement::from_raw(raw));
        } catch (const ShapeError& e) {
            throw ParseError(e.what(), at);
        }
    }

    std::string_view t_;
    const ProductEngine& engine_;
    std::size_t p_ = 0;
    bool in_sum_ = false;
};

} // namespace detail

inline HeckeElement parse_element(std::string_view text, const ProductEngine& engine = default_engine()) {
    return detail::ElementParser(text, engine).parse();
}

} // namespace iwahori

#endif // IWAHORI_IO_HPP
