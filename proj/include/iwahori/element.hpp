#ifndef IWAHORI_ELEMENT_HPP
#define IWAHORI_ELEMENT_HPP

// Elements of the Iwahori-Hecke algebra: finitely many (sheet, level) rows,
// each a coefficient function on Z made of exponential-polynomial strips.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "coeff.hpp"
#include "error.hpp"
#include "poly.hpp"

namespace iwahori {

/// Indexes the rows chi^{(sheet)}_{*, level}. Ordered by level, then sheet.
struct RowKey {
    int sheet = 1;
    Index level = 0;

    friend bool operator==(const RowKey&, const RowKey&) = default;
    friend std::strong_ordering operator<=>(const RowKey& a, const RowKey& b) {
        if (auto c = a.level <=> b.level; c != 0) return c;
        return a.sheet <=> b.sheet;
    }
};

inline void check_sheet(int sheet) {
    if (sheet != 1 && sheet != 2)
        throw UnsupportedParameters("sheet must be 1 or 2, got " + std::to_string(sheet));
}

/// poly(m) * s^(step*m).
struct ExpPolyTerm {
    long step = 0;
    Poly poly;

    Coeff eval(Index m) const {
        if (poly.is_zero()) return {};
        if (step == 0) return poly.eval(m);
        return poly.eval(m) * Coeff::s_pow(step * m);
    }

    friend bool operator==(const ExpPolyTerm&, const ExpPolyTerm&) = default;
};

using TermList = std::vector<ExpPolyTerm>;

inline Coeff eval_terms(const TermList& terms, Index m) {
    Coeff v;
    for (const auto& t : terms) v += t.eval(m);
    return v;
}

/// Merges equal steps, drops zero polynomials, sorts by step.
inline TermList combine_terms(const TermList& terms) {
    std::map<long, Poly> acc;
    for (const auto& t : terms) acc[t.step] += t.poly;
    TermList out;
    for (auto& [step, p] : acc)
        if (!p.is_zero()) out.push_back({step, std::move(p)});
    return out;
}

inline TermList scale_terms(const Coeff& c, const TermList& terms) {
    TermList out;
    for (const auto& t : terms) out.push_back({t.step, c * t.poly});
    return out;
}

/// Coefficients on [lo, hi]; an absent bound is infinite.
struct Strip {
    std::optional<Index> lo;
    std::optional<Index> hi;
    TermList terms;

    bool finite() const noexcept { return lo.has_value() && hi.has_value(); }
    bool contains(Index m) const noexcept { return (!lo || *lo <= m) && (!hi || m <= *hi); }
    Coeff value_at(Index m) const { return contains(m) ? eval_terms(terms, m) : Coeff(); }

    friend bool operator==(const Strip&, const Strip&) = default;
};

/// Canonical coefficient function of one row: at most one ray strip, which is
/// maximal (it starts as far out as the function agrees with its closed form),
/// plus finitely many constant runs, all sorted ascending and disjoint.
class RowSeries {
public:
    RowSeries() = default;

    const std::vector<Strip>& strips() const noexcept { return strips_; }
    bool empty() const noexcept { return strips_.empty(); }

    Coeff at(Index m) const {
        for (const auto& s : strips_)
            if (s.contains(m)) return eval_terms(s.terms, m);
        return {};
    }

    /// Smallest / largest index in the support; nullopt when unbounded.
    std::optional<Index> min_index() const { return strips_.front().lo; }
    std::optional<Index> max_index() const { return strips_.back().hi; }
    bool finite() const {
        return std::all_of(strips_.begin(), strips_.end(), [](const Strip& s) { return s.finite(); });
    }

    friend bool operator==(const RowSeries&, const RowSeries&) = default;

    /// Builds the canonical form of the sum of possibly overlapping strips.
    static RowSeries canonical(Index level, const std::vector<Strip>& raw);

    /// Multiplies every coefficient by a nonzero scalar (canonical form is preserved).
    RowSeries scaled(const Coeff& c) const {
        RowSeries r = *this;
        for (auto& s : r.strips_) s.terms = scale_terms(c, s.terms);
        return r;
    }

private:
    std::vector<Strip> strips_;
};

inline RowSeries RowSeries::canonical(Index level, const std::vector<Strip>& raw) {
    constexpr Index kExtensionCap = 1'000'000;
    int side = 0; // -1: ray (-inf, end], +1: ray [end, +inf)
    std::optional<Index> end;
    for (const auto& s : raw) {
        if (s.finite() || s.terms.empty()) continue;
        if (!s.lo && !s.hi) throw ShapeError("strip unbounded on both sides");
        const int this_side = s.lo ? 1 : -1;
        if (side != 0 && side != this_side) throw ShapeError("rays unbounded on opposite sides in one row");
        side = this_side;
        const Index e = side < 0 ? *s.hi : *s.lo;
        end = !end ? e : (side < 0 ? std::min(*end, e) : std::max(*end, e));
    }

    TermList ray;
    std::map<Index, Coeff> points;
    for (const auto& s : raw) {
        if (s.terms.empty()) continue;
        if (s.finite()) {
            for (Index m = *s.lo; m <= *s.hi; ++m) points[m] += eval_terms(s.terms, m);
            continue;
        }
        ray.insert(ray.end(), s.terms.begin(), s.terms.end());
        if (side < 0)
            for (Index m = *end + 1; m <= *s.hi; ++m) points[m] += eval_terms(s.terms, m);
        else
            for (Index m = *s.lo; m < *end; ++m) points[m] += eval_terms(s.terms, m);
    }
    ray = combine_terms(ray);
    if (ray.empty()) side = 0;

    if (side != 0) {
        if (level == 0) throw ShapeError("level-0 row with infinite support");
        if ((level > 0) != (side < 0))
            throw ShapeError("row at level " + std::to_string(level) + " unbounded on the wrong side");
        // Finite data inside the ray region pulls the ray back.
        if (side < 0 && !points.empty() && points.begin()->first <= *end) {
            const Index first = points.begin()->first;
            for (Index m = first; m <= *end; ++m) points[m] += eval_terms(ray, m);
            end = first - 1;
        } else if (side > 0 && !points.empty() && points.rbegin()->first >= *end) {
            const Index last = points.rbegin()->first;
            for (Index m = *end; m <= last; ++m) points[m] += eval_terms(ray, m);
            end = last + 1;
        }
    }
    for (auto it = points.begin(); it != points.end();) {
        if (it->second.is_zero()) it = points.erase(it);
        else ++it;
    }

    if (side != 0) {
        for (Index steps = 0;; ++steps) {
            if (steps > kExtensionCap) throw Error("ray canonicalization did not terminate");
            const Index m = side < 0 ? *end + 1 : *end - 1;
            auto it = points.find(m);
            const Coeff have = it == points.end() ? Coeff() : it->second;
            if (!(have == eval_terms(ray, m))) break;
            if (it != points.end()) points.erase(it);
            end = m;
        }
    }

    RowSeries out;
    if (side < 0) out.strips_.push_back({std::nullopt, end, ray});
    for (auto it = points.begin(); it != points.end();) {
        const Index lo = it->first;
        Index hi = lo;
        const Coeff v = it->second;
        auto next = std::next(it);
        while (next != points.end() && next->first == hi + 1 && next->second == v) {
            hi = next->first;
            ++next;
        }
        out.strips_.push_back({lo, hi, TermList{{0, Poly(v)}}});
        it = next;
    }
    if (side > 0) out.strips_.push_back({end, std::nullopt, ray});
    return out;
}

/// Raw (non-canonical) rows, used to accumulate sums before canonicalization.
using RawRows = std::map<RowKey, std::vector<Strip>>;

class HeckeElement {
public:
    HeckeElement() = default;

    static HeckeElement from_raw(const RawRows& raw) {
        HeckeElement x;
        for (const auto& [key, strips] : raw) {
            check_sheet(key.sheet);
            RowSeries row = RowSeries::canonical(key.level, strips);
            if (!row.empty()) x.rows_.emplace(key, std::move(row));
        }
        return x;
    }

    /// chi^{(sheet)}_{i,j}.
    static HeckeElement basis(int sheet, Index i, Index j) {
        check_sheet(sheet);
        RawRows raw;
        raw[{sheet, j}].push_back({i, i, TermList{{0, Poly(1)}}});
        return from_raw(raw);
    }

    const std::map<RowKey, RowSeries>& rows() const noexcept { return rows_; }
    bool is_zero() const noexcept { return rows_.empty(); }

    Coeff coefficient_at(const RowKey& key, Index m) const {
        auto it = rows_.find(key);
        return it == rows_.end() ? Coeff() : it->second.at(m);
    }
    Coeff coefficient_at(int sheet, Index i, Index j) const { return coefficient_at({sheet, j}, i); }

    std::set<Index> levels() const {
        std::set<Index> out;
        for (const auto& [k, _] : rows_) out.insert(k.level);
        return out;
    }

    HeckeElement level_projection(Index j) const {
        HeckeElement r;
        for (const auto& [k, row] : rows_)
            if (k.level == j) r.rows_.emplace(k, row);
        return r;
    }

    RawRows raw() const {
        RawRows out;
        for (const auto& [k, row] : rows_) out[k] = row.strips();
        return out;
    }

    friend HeckeElement operator+(const HeckeElement& x, const HeckeElement& y) {
        if (x.is_zero()) return y;
        if (y.is_zero()) return x;
        RawRows raw = x.raw();
        for (const auto& [k, row] : y.rows_) {
            auto& dst = raw[k];
            dst.insert(dst.end(), row.strips().begin(), row.strips().end());
        }
        return from_raw(raw);
    }

    friend HeckeElement operator*(const Coeff& c, const HeckeElement& x) {
        HeckeElement r;
        if (c.is_zero()) return r;
        for (const auto& [k, row] : x.rows_) r.rows_.emplace(k, row.scaled(c));
        return r;
    }

    HeckeElement operator-() const { return Coeff(-1) * *this; }
    friend HeckeElement operator-(const HeckeElement& x, const HeckeElement& y) { return x + (-y); }

    HeckeElement& operator+=(const HeckeElement& o) { return *this = *this + o; }

    friend bool operator==(const HeckeElement&, const HeckeElement&) = default;

    /// Re-canonicalizes; a no-op on values produced by this library.
    HeckeElement canonicalize() const { return from_raw(raw()); }

private:
    std::map<RowKey, RowSeries> rows_;
};

inline HeckeElement chi(int sheet, Index i, Index j) { return HeckeElement::basis(sheet, i, j); }

/// Sum_{m in [lo, hi]} c * s^(step*m) * chi^{(sheet)}_{m,level}; nullopt bounds are infinite.
inline HeckeElement geometric_row(int sheet, Index level, std::optional<Index> lo, std::optional<Index> hi,
                                  const Coeff& c, long step) {
    RawRows raw;
    raw[{sheet, level}].push_back({lo, hi, TermList{{step, Poly(c)}}});
    return HeckeElement::from_raw(raw);
}

} // namespace iwahori

#endif // IWAHORI_ELEMENT_HPP
