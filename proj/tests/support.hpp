#ifndef IWAHORI_TESTS_SUPPORT_HPP
#define IWAHORI_TESTS_SUPPORT_HPP

#include <random>

#include "iwahori.hpp"

namespace iwahori::gen {

inline Coeff random_coeff(std::mt19937_64& rng, int max_degree = 3) {
    std::uniform_int_distribution<long> c(-4, 4), d(0, max_degree), shift(-3, 3);
    auto poly = [&] {
        std::vector<BigInt> v(static_cast<std::size_t>(d(rng)) + 1);
        for (auto& x : v) x = c(rng);
        return IntPoly(std::move(v));
    };
    IntPoly den = poly();
    while (den.is_zero()) den = poly();
    return Coeff::fraction(poly(), den) * Coeff::s_pow(shift(rng));
}

inline Coeff random_nonzero(std::mt19937_64& rng) {
    Coeff c = random_coeff(rng);
    while (c.is_zero()) c = random_coeff(rng);
    return c;
}

/// Small random element mixing basis points and one ray per row.
inline HeckeElement random_element(std::mt19937_64& rng, Index level_range = 1) {
    std::uniform_int_distribution<Index> idx(-3, 3), lev(-level_range, level_range);
    std::uniform_int_distribution<int> sheet(1, 2), terms(1, 3), coin(0, 3);
    HeckeElement x;
    for (int t = terms(rng); t-- > 0;) x += Coeff(idx(rng)) * chi(sheet(rng), idx(rng), lev(rng));
    if (coin(rng) == 0) {
        const Index j = lev(rng);
        if (j > 0) x += geometric_row(sheet(rng), j, std::nullopt, idx(rng), Coeff(1), -2);
        if (j < 0) x += geometric_row(sheet(rng), j, idx(rng), std::nullopt, Coeff(-1), 2);
    }
    return x;
}

} // namespace iwahori::gen

#endif
