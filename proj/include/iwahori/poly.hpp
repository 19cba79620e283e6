#ifndef IWAHORI_POLY_HPP
#define IWAHORI_POLY_HPP

// Polynomials in an integer index variable with coefficients in Q(s).

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "coeff.hpp"

namespace iwahori {

using Index = long long;

class Poly {
public:
    Poly() = default;
    Poly(const Coeff& c) { if (!c.is_zero()) c_.push_back(c); }
    Poly(long v) : Poly(Coeff(v)) {}
    explicit Poly(std::vector<Coeff> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Poly monomial(const Coeff& c, std::size_t degree) {
        Poly p;
        if (c.is_zero()) return p;
        p.c_.assign(degree + 1, Coeff());
        p.c_[degree] = c;
        return p;
    }

    /// The index variable itself.
    static Poly var() { return monomial(Coeff(1), 1); }

    bool is_zero() const noexcept { return c_.empty(); }
    bool is_constant() const noexcept { return c_.size() <= 1; }
    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    const std::vector<Coeff>& coeffs() const noexcept { return c_; }
    Coeff coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Coeff(); }

    Poly operator-() const {
        Poly r = *this;
        for (auto& v : r.c_) v = -v;
        return r;
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        Poly r;
        const auto n = std::max(a.c_.size(), b.c_.size());
        r.c_.resize(n);
        for (std::size_t k = 0; k < n; ++k) {
            if (k >= a.c_.size()) r.c_[k] = b.c_[k];
            else if (k >= b.c_.size()) r.c_[k] = a.c_[k];
            else r.c_[k] = a.c_[k] + b.c_[k];
        }
        r.trim();
        return r;
    }

    friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

    friend Poly operator*(const Poly& a, const Poly& b) {
        Poly r;
        if (a.is_zero() || b.is_zero()) return r;
        r.c_.assign(a.c_.size() + b.c_.size() - 1, Coeff());
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i].is_zero()) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
        }
        r.trim();
        return r;
    }

    friend Poly operator*(const Coeff& k, const Poly& a) {
        if (k.is_zero()) return {};
        if (k.is_one()) return a;
        Poly r = a;
        for (auto& v : r.c_) v *= k;
        return r;
    }

    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator-=(const Poly& o) { return *this = *this - o; }

    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

    Coeff eval(Index m) const {
        if (c_.empty()) return {};
        if (c_.size() == 1) return c_[0];
        const Coeff x(static_cast<long>(m));
        Coeff acc;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    /// p(m + shift).
    Poly shifted(Index shift) const {
        if (shift == 0 || c_.size() <= 1) return *this;
        // Horner in the polynomial ring: acc = acc * (m + shift) + c_k.
        const Poly lin(std::vector<Coeff>{Coeff(static_cast<long>(shift)), Coeff(1)});
        Poly acc;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * lin + Poly(*it);
        return acc;
    }

    std::string str(const std::string& var = "m") const {
        if (c_.empty()) return "0";
        std::string out;
        bool first = true;
        for (std::size_t k = c_.size(); k-- > 0;) {
            if (c_[k].is_zero()) continue;
            if (!first) out += " + ";
            first = false;
            const std::string cs = c_[k].str();
            if (k == 0) {
                out += "(" + cs + ")";
                continue;
            }
            if (!c_[k].is_one()) out += "(" + cs + ")*";
            out += var;
            if (k > 1) out += "^" + std::to_string(k);
        }
        return out;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    std::vector<Coeff> c_;
};

inline Coeff binomial(unsigned long n, unsigned long k) {
    BigInt b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return Coeff(b);
}

/// Returns R with z*R(u+1) - R(u) = p(u), so that
///   sum_{u=L}^{U} p(u) z^u = R(U+1) z^(U+1) - R(L) z^L.
/// For z = 1 the solution has degree deg p + 1 and R(0) = 0.
inline Poly antidifference(const Poly& p, const Coeff& z) {
    if (p.is_zero()) return {};
    const int d = p.degree();
    if (z.is_one()) {
        std::vector<Coeff> rho(static_cast<std::size_t>(d) + 2);
        for (int i = d; i >= 0; --i) {
            Coeff rhs = p.coeff(static_cast<std::size_t>(i));
            for (int k = i + 2; k <= d + 1; ++k)
                rhs -= rho[static_cast<std::size_t>(k)] * binomial(static_cast<unsigned long>(k), static_cast<unsigned long>(i));
            rho[static_cast<std::size_t>(i) + 1] = rhs / Coeff(static_cast<long>(i) + 1);
        }
        return Poly(std::move(rho));
    }
    const Coeff zm1 = z - Coeff(1);
    std::vector<Coeff> rho(static_cast<std::size_t>(d) + 1);
    for (int i = d; i >= 0; --i) {
        Coeff acc;
        for (int k = i + 1; k <= d; ++k)
            acc += rho[static_cast<std::size_t>(k)] * binomial(static_cast<unsigned long>(k), static_cast<unsigned long>(i));
        rho[static_cast<std::size_t>(i)] = (p.coeff(static_cast<std::size_t>(i)) - z * acc) / zm1;
    }
    return Poly(std::move(rho));
}

} // namespace iwahori

#endif // IWAHORI_POLY_HPP
