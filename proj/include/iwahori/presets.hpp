#ifndef IWAHORI_PRESETS_HPP
#define IWAHORI_PRESETS_HPP

// Named elements (iota, Theta, phi) and the double affine Weyl group.

#include <cstdlib>
#include <optional>
#include <string>
#include <vector>

#include "element.hpp"
#include "error.hpp"
#include "product.hpp"

namespace iwahori {

/// q * chi^{(1)}_{0,0}, the unit.
inline HeckeElement iota() { return Coeff::q() * chi(1, 0, 0); }

/// Theta_{i,j} for (i, j) in {(1,0), (-1,0), (0,1), (0,-1)}.
inline HeckeElement theta(Index i, Index j) {
    const Coeff q = Coeff::q(), one(1);
    if (i == 1 && j == 0) return chi(1, 1, 0);
    if (i == 0 && j == 1) return chi(1, 0, 1);
    if (i == -1 && j == 0)
        return chi(1, -1, 0) - (q - one) * chi(2, -1, 0) - (q - one) * chi(2, 0, 0) +
               (q * (q + Coeff::q_pow(-1) - Coeff(2))) * chi(1, 0, 0);
    if (i == 0 && j == -1) return chi(1, 0, -1) + geometric_row(2, -1, 0, std::nullopt, -(q - one), 2);
    throw UnknownName("theta(" + std::to_string(i) + "," + std::to_string(j) + ") is not defined");
}

/// phi_0, phi_1, phi_2: s * chi^{(2)} on the cosets of s0, s1, s2.
inline HeckeElement phi(int n) {
    switch (n) {
    case 0: return Coeff::s() * chi(2, 0, 0);
    case 1: return Coeff::s() * chi(2, -1, 0);
    case 2: return Coeff::s() * chi(2, 0, -1);
    default: throw UnknownName("phi" + std::to_string(n) + " is not defined");
    }
}

/// Preset by name: "iota", "phi0".."phi2", "theta(i,j)" or "chi(a,i,j)".
inline HeckeElement preset(const std::string& name) {
    if (name == "iota") return iota();
    if (name == "phi0") return phi(0);
    if (name == "phi1") return phi(1);
    if (name == "phi2") return phi(2);
    auto args = [&](const std::string& head) -> std::optional<std::vector<long long>> {
        if (name.rfind(head + "(", 0) != 0 || name.back() != ')') return std::nullopt;
        std::vector<long long> out;
        std::string body = name.substr(head.size() + 1, name.size() - head.size() - 2);
        std::size_t pos = 0;
        while (pos <= body.size()) {
            const auto comma = body.find(',', pos);
            const std::string part = body.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
            std::size_t used = 0;
            long long v = 0;
            try {
                v = std::stoll(part, &used);
            } catch (const std::exception&) {
                throw UnknownName("bad preset argument in " + name);
            }
            if (used != part.size()) throw UnknownName("bad preset argument in " + name);
            out.push_back(v);
            if (comma == std::string::npos) break;
            pos = comma + 1;
        }
        return out;
    };
    if (auto a = args("theta"); a && a->size() == 2) return theta((*a)[0], (*a)[1]);
    if (auto a = args("chi"); a && a->size() == 3) return chi(static_cast<int>((*a)[0]), (*a)[1], (*a)[2]);
    throw UnknownName("unknown preset " + name);
}

/// x^n by repeated left multiplication; x^0 = iota.
inline HeckeElement power(const HeckeElement& x, long n, const ProductEngine& engine = default_engine()) {
    if (n < 0) throw UnsupportedParameters("negative power");
    HeckeElement acc = iota();
    for (long k = 0; k < n; ++k) acc = engine.mul(acc, x);
    return acc;
}

/// Theta_{1,0}^i * Theta_{0,sgn j}^{|j|}; negative i uses Theta_{-1,0}^{|i|}.
inline HeckeElement theta_monomial(Index i, Index j, const ProductEngine& engine = default_engine()) {
    const HeckeElement X = i >= 0 ? theta(1, 0) : theta(-1, 0);
    const HeckeElement Y = j >= 0 ? theta(0, 1) : theta(0, -1);
    return engine.mul(power(X, static_cast<long>(std::llabs(i)), engine),
                      power(Y, static_cast<long>(std::llabs(j)), engine));
}

/// Element of N_G(T)/T(O): diag(t^(i,j), t^-(i,j)) or its product with the
/// antidiagonal Weyl element.
struct WeylElement {
    bool flip = false;
    Index i = 0;
    Index j = 0;

    friend bool operator==(const WeylElement&, const WeylElement&) = default;

    /// The double-coset label (sheet, i, j).
    BasisIndex label() const { return {flip ? 2 : 1, i, j}; }
    static WeylElement from_label(const BasisIndex& b) {
        check_sheet(b.sheet);
        return {b.sheet == 2, b.i, b.j};
    }
    std::string str() const {
        return std::string("(") + (flip ? "true" : "false") + "," + std::to_string(i) + "," + std::to_string(j) + ")";
    }
};

inline WeylElement weyl_mul(const WeylElement& u, const WeylElement& v) {
    // anti(x) = [[0, t^x], [-t^-x, 0]]
    if (!u.flip && !v.flip) return {false, u.i + v.i, u.j + v.j};
    if (!u.flip) return {true, u.i + v.i, u.j + v.j};
    if (!v.flip) return {true, u.i - v.i, u.j - v.j};
    return {false, u.i - v.i, u.j - v.j};
}

inline WeylElement weyl_generator(const std::string& name) {
    if (name == "s0") return {true, 0, 0};
    if (name == "s1") return {true, -1, 0};
    if (name == "s2") return {true, 0, -1};
    if (name == "e") return {};
    throw UnknownName("unknown Weyl generator " + name);
}

inline WeylElement weyl_word(const std::vector<std::string>& letters) {
    WeylElement acc;
    for (const auto& s : letters) acc = weyl_mul(acc, weyl_generator(s));
    return acc;
}

} // namespace iwahori

#endif // IWAHORI_PRESETS_HPP
