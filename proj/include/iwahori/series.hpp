#ifndef IWAHORI_SERIES_HPP
#define IWAHORI_SERIES_HPP

// Closed-form convolution of coefficient functions made of
// exponential-polynomial strips:
//   (f * g)(n) = sum_{r + k = n} f(r) g(k).
// Each strip pair is resummed with the antidifference of r^d z^r, so the
// result stays inside the strip class.

#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "element.hpp"
#include "error.hpp"
#include "poly.hpp"

namespace iwahori {

namespace detail {

/// An affine bound in n: either a constant or n + offset.
struct AffineBound {
    bool moves = false;
    Index value = 0; // the constant, or the offset when `moves`
};

class Resummer {
public:
    const Poly& antidiff(int degree, long step) {
        auto key = std::make_pair(degree, step);
        auto it = cache_.find(key);
        if (it != cache_.end()) return it->second;
        return cache_.emplace(key, antidifference(Poly::monomial(Coeff(1), static_cast<std::size_t>(degree)),
                                                  Coeff::s_pow(step)))
            .first->second;
    }

    // sum_{r=L(n)}^{U(n)} P(r) s^(e r) Q(n - r) s^(f (n - r)), valid where L <= U.
    void add_pair(const ExpPolyTerm& tf, const ExpPolyTerm& tg, AffineBound lower, AffineBound upper,
                  std::map<long, Poly>& out) {
        const long e = tf.step, f = tg.step, delta = e - f;
        const Poly& P = tf.poly;
        const Poly& Q = tg.poly;
        // Q(n - r) = sum_t r^t * qt[t](n)
        std::vector<Poly> qt(static_cast<std::size_t>(Q.degree()) + 1);
        for (int k = 0; k <= Q.degree(); ++k) {
            const Coeff& qk = Q.coeffs()[static_cast<std::size_t>(k)];
            if (qk.is_zero()) continue;
            for (int t = 0; t <= k; ++t) {
                Coeff c = qk * binomial(static_cast<unsigned long>(k), static_cast<unsigned long>(t));
                if (t % 2 == 1) c = -c;
                qt[static_cast<std::size_t>(t)] += Poly::monomial(c, static_cast<std::size_t>(k - t));
            }
        }
        // W(r, n) = P(r) Q(n - r) = sum_d r^d w[d](n)
        std::vector<Poly> w(static_cast<std::size_t>(P.degree() + Q.degree()) + 1);
        for (int p = 0; p <= P.degree(); ++p) {
            const Coeff& pp = P.coeffs()[static_cast<std::size_t>(p)];
            if (pp.is_zero()) continue;
            for (std::size_t t = 0; t < qt.size(); ++t)
                if (!qt[t].is_zero()) w[static_cast<std::size_t>(p) + t] += pp * qt[t];
        }
        for (std::size_t d = 0; d < w.size(); ++d) {
            if (w[d].is_zero()) continue;
            const Poly& R = antidiff(static_cast<int>(d), delta);
            add_bound(R, delta, f, e, w[d], upper, 1, Coeff(1), out);
            add_bound(R, delta, f, e, w[d], lower, 0, Coeff(-1), out);
        }
    }

private:
    // sign * R(B + bump) z^(B + bump) * w(n) * s^(f n), with z = s^delta.
    static void add_bound(const Poly& R, long delta, long f, long e, const Poly& w, AffineBound b, Index bump,
                          const Coeff& sign, std::map<long, Poly>& out) {
        const Index at = b.value + bump;
        if (!b.moves) {
            const Coeff k = sign * R.eval(at) * Coeff::s_pow(delta * at);
            if (!k.is_zero()) out[f] += k * w;
            return;
        }
        const Poly shifted = R.shifted(at);
        out[e] += (sign * Coeff::s_pow(delta * at)) * (shifted * w);
    }

    std::map<std::pair<int, long>, Poly> cache_;
};

inline std::optional<Index> add_opt(std::optional<Index> a, std::optional<Index> b, Index extra = 0) {
    if (!a || !b) return std::nullopt;
    return *a + *b + extra;
}

} // namespace detail

/// Convolution of two strip lists; both must be bounded on a common side
/// (or one of them finite), otherwise some coefficient would be an infinite sum.
inline std::vector<Strip> convolve(const std::vector<Strip>& f, const std::vector<Strip>& g) {
    std::vector<Strip> out;
    detail::Resummer resum;
    for (const auto& F : f) {
        if (F.terms.empty()) continue;
        for (const auto& G : g) {
            if (G.terms.empty()) continue;
            const auto A = F.lo, B = F.hi, C = G.lo, D = G.hi;
            if ((!A && !D) || (!B && !C))
                throw InfiniteContribution("convolution of rows unbounded on opposite sides");
            std::set<Index> starts;
            for (auto v : {detail::add_opt(A, D, 1), detail::add_opt(B, C), detail::add_opt(A, C),
                           detail::add_opt(B, D, 1)})
                if (v) starts.insert(*v);
            std::vector<std::pair<std::optional<Index>, std::optional<Index>>> regions;
            std::optional<Index> prev;
            for (Index s : starts) {
                regions.emplace_back(prev, s - 1);
                prev = s;
            }
            regions.emplace_back(prev, std::nullopt);

            for (const auto& [rlo, rhi] : regions) {
                if (!rlo && !rhi) continue;
                const Index n0 = rlo ? *rlo : *rhi;
                detail::AffineBound L, U;
                if (A && (!D || *A >= n0 - *D)) L = {false, *A};
                else L = {true, -*D};
                if (B && (!C || *B <= n0 - *C)) U = {false, *B};
                else U = {true, -*C};
                const Index lv = L.moves ? n0 + L.value : L.value;
                const Index uv = U.moves ? n0 + U.value : U.value;
                if (lv > uv) continue;
                std::map<long, Poly> acc;
                for (const auto& tf : F.terms)
                    for (const auto& tg : G.terms) resum.add_pair(tf, tg, L, U, acc);
                TermList terms;
                for (auto& [step, p] : acc)
                    if (!p.is_zero()) terms.push_back({step, std::move(p)});
                if (!terms.empty()) out.push_back({rlo, rhi, std::move(terms)});
            }
        }
    }
    return out;
}

inline std::vector<Strip> scale_strips(const Coeff& c, const std::vector<Strip>& strips) {
    std::vector<Strip> out;
    if (c.is_zero()) return out;
    out.reserve(strips.size());
    for (const auto& s : strips) out.push_back({s.lo, s.hi, scale_terms(c, s.terms)});
    return out;
}

} // namespace iwahori

#endif // IWAHORI_SERIES_HPP
