#pragma once

#include <algorithm>
#include <cstddef>
#include <mutex>
#include <utility>
#include <vector>

#include "grasscount/config.hpp"
#include "grasscount/errors.hpp"
#include "grasscount/integer.hpp"
#include "grasscount/lattice.hpp"
#include "grasscount/matrix.hpp"
#include "grasscount/normal_form.hpp"
#include "grasscount/reduction.hpp"

namespace grasscount {

struct BallOptions {
    Rational bound_squared;          // Q(x) <= bound
    const RatVec* shift = nullptr;   // enumerate Z^r + shift instead of Z^r
    bool fold_sign = true;           // emit one representative per +-x pair
    bool include_zero = false;
    std::size_t max_vectors = EnumerationLimits{}.max_vectors;
};

namespace detail {

// largest integer m with m <= c + sqrt(s2); requires s2 >= 0
inline Int floor_center_plus_root(const Rational& c, const Rational& s2) {
    Int m = rational_floor(c);
    auto ok = [&](const Int& x) {
        Rational t = Rational(x) - c;
        return t <= 0 || t * t <= s2;
    };
    while (ok(m + 1)) ++m;
    while (!ok(m)) --m;
    return m;
}

// smallest integer m with m >= c - sqrt(s2); requires s2 >= 0
inline Int ceil_center_minus_root(const Rational& c, const Rational& s2) {
    Int m = rational_ceil(c);
    auto ok = [&](const Int& x) {
        Rational t = c - Rational(x);
        return t <= 0 || t * t <= s2;
    };
    while (ok(m - 1)) --m;
    while (!ok(m)) ++m;
    return m;
}

}  // namespace detail

/// Exact Fincke-Pohst enumeration on a positive definite rational Gram
/// matrix: walks every x in Z^r (optionally shifted by a rational vector)
/// whose quadratic value is at most bound_squared and hands (x, Q(x)) to
/// the callback. With fold_sign, one representative per antipodal pair is
/// emitted: the one whose highest-index nonzero coordinate is positive.
template <class F>
void enumerate_ball(const RatMatrix& g, const BallOptions& opts, F&& emit) {
    const std::size_t r = g.rows();
    if (opts.bound_squared < 0) return;
    if (opts.shift != nullptr && opts.shift->size() != r)
        throw argument_error("ball shift has wrong length");
    if (opts.fold_sign && opts.shift != nullptr)
        throw argument_error("sign folding is only meaningful for unshifted balls");

    const GramSchmidt gs = gram_schmidt_from_gram(g);
    const bool shifted = opts.shift != nullptr;
    IntVec x(r, Int(0));
    RatVec y(r, Rational(0));  // y_j = x_j + shift_j, for fixed upper levels
    std::size_t emitted = 0;

    // Q = sum_i d_i (y_i + o_i)^2 with o_i = sum_{j>i} mu_ji y_j.
    auto rec = [&](auto&& self, std::size_t level, const Rational& used, bool zero_above) -> void {
        const std::size_t i = level - 1;
        Rational center(0);  // admissible x_i cluster around this value
        for (std::size_t j = i + 1; j < r; ++j)
            if (y[j] != 0) center -= gs.mu(j, i) * y[j];
        if (shifted) center -= (*opts.shift)[i];

        const Rational s2 = (opts.bound_squared - used) / gs.star_normsq[i];
        Int lo = detail::ceil_center_minus_root(center, s2);
        const Int hi = detail::floor_center_plus_root(center, s2);
        if (opts.fold_sign && zero_above && lo < 0) lo = 0;

        for (Int v = lo; v <= hi; ++v) {
            const Rational dist = Rational(v) - center;
            const Rational total = used + gs.star_normsq[i] * dist * dist;
            if (total > opts.bound_squared) continue;
            x[i] = v;
            const bool still_zero = zero_above && v == 0;
            if (i == 0) {
                if (still_zero && !shifted && !opts.include_zero) continue;
                if (++emitted > opts.max_vectors)
                    throw capacity_error("ball enumeration exceeded the vector budget");
                emit(x, total);
            } else {
                y[i] = shifted ? Rational(v) + (*opts.shift)[i] : Rational(v);
                self(self, level - 1, total, still_zero);
            }
        }
        x[i] = 0;
        y[i] = shifted ? (*opts.shift)[i] : Rational(0);
    };
    rec(rec, r, Rational(0), true);
}

/// Leading-sign canonical form: flips x so its first nonzero entry is
/// positive. Identity on the zero vector.
inline IntVec canonical_sign(IntVec x) {
    for (const Int& e : x) {
        if (e == 0) continue;
        if (e < 0)
            for (Int& t : x) t = -t;
        break;
    }
    return x;
}

inline bool lex_less(const IntVec& a, const IntVec& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return a[i] < b[i];
    return false;
}

/// One enumerated lattice vector: coordinates relative to the lattice's
/// own basis, with the exact squared norm.
struct BallVector {
    IntVec coords;
    Rational norm_squared;
};

/// All nonzero vectors of L with squared norm <= bound, one per antipodal
/// pair, sign-canonical in L's coordinates, sorted by (norm, lex). The
/// basis is LLL-reduced internally so the search tree stays shallow.
inline std::vector<BallVector> vectors_in_ball(const Lattice& l, const Rational& bound,
                                               std::size_t max_vectors) {
    LllResult red = lll_with_transform(l.basis());
    const RatMatrix g = gram(red.basis);
    std::vector<BallVector> out;
    BallOptions opts;
    opts.bound_squared = bound;
    opts.max_vectors = max_vectors;
    enumerate_ball(g, opts, [&](const IntVec& x, const Rational& q) {
        out.push_back(BallVector{canonical_sign(mul_vec(x, red.transform)), q});
    });
    std::sort(out.begin(), out.end(), [](const BallVector& a, const BallVector& b) {
        if (a.norm_squared != b.norm_squared) return a.norm_squared < b.norm_squared;
        return lex_less(a.coords, b.coords);
    });
    return out;
}

/// Shortest nonzero vector of L in L's coordinates (always primitive),
/// deterministic under the (norm, lex, positive-leading-sign) tie-break.
inline IntVec shortest_vector(const Lattice& l) {
    if (l.rank() > dimension_cap())
        throw capacity_error("rank exceeds the exact enumeration cap");
    LllResult red = lll_with_transform(l.basis());
    const RatMatrix g = gram(red.basis);
    Rational bound = g(0, 0);
    for (std::size_t i = 1; i < g.rows(); ++i) bound = std::min(bound, g(i, i));

    bool found = false;
    Rational best_norm;
    IntVec best;
    BallOptions opts;
    opts.bound_squared = bound;
    enumerate_ball(g, opts, [&](const IntVec& x, const Rational& q) {
        IntVec orig = canonical_sign(mul_vec(x, red.transform));
        if (!found || q < best_norm || (q == best_norm && lex_less(orig, best))) {
            found = true;
            best_norm = q;
            best = std::move(orig);
        }
    });
    return best;
}

namespace detail {

// incremental rational row reduction used for independence tests
struct RowSpace {
    std::vector<RatVec> rows;  // reduced, each with a leading pivot
    std::vector<std::size_t> pivot_cols;

    bool try_add(RatVec v) {
        for (std::size_t k = 0; k < rows.size(); ++k) {
            const Rational& lead = v[pivot_cols[k]];
            if (lead == 0) continue;
            const Rational f = lead;  // pivot rows are normalized
            for (std::size_t j = 0; j < v.size(); ++j) v[j] -= f * rows[k][j];
        }
        std::size_t piv = v.size();
        for (std::size_t j = 0; j < v.size(); ++j)
            if (v[j] != 0) { piv = j; break; }
        if (piv == v.size()) return false;
        const Rational inv = v[piv];
        for (std::size_t j = 0; j < v.size(); ++j) v[j] /= inv;
        rows.push_back(std::move(v));
        pivot_cols.push_back(piv);
        return true;
    }
};

inline MinimaProfile compute_minima(const Lattice& l) {
    const std::size_t r = l.rank();
    LllResult red = lll_with_transform(l.basis());
    const RatMatrix g = gram(red.basis);
    Rational lo_bound = g(0, 0), hi_bound = g(0, 0);
    for (std::size_t i = 1; i < r; ++i) {
        lo_bound = std::min(lo_bound, g(i, i));
        hi_bound = std::max(hi_bound, g(i, i));
    }

    // The reduced basis gives r independent vectors of squared norm at most
    // hi_bound, so that radius always suffices; start smaller and grow,
    // which keeps skewed lattices cheap. The greedy (norm, lex) selection
    // is radius-independent once the ball is large enough.
    for (Rational bound = lo_bound;; bound = std::min(bound * 4, hi_bound)) {
        std::vector<BallVector> ball;
        BallOptions opts;
        opts.bound_squared = bound;
        enumerate_ball(g, opts, [&](const IntVec& x, const Rational& q) {
            ball.push_back(BallVector{canonical_sign(mul_vec(x, red.transform)), q});
        });
        std::sort(ball.begin(), ball.end(), [](const BallVector& a, const BallVector& b) {
            if (a.norm_squared != b.norm_squared) return a.norm_squared < b.norm_squared;
            return lex_less(a.coords, b.coords);
        });

        MinimaProfile profile;
        profile.witnesses = IntMatrix(r, r);
        RowSpace space;
        std::size_t found = 0;
        for (const BallVector& v : ball) {
            if (found == r) break;
            if (!space.try_add(to_rational(v.coords))) continue;
            profile.lambda_squared.push_back(SquaredMagnitude(v.norm_squared));
            profile.witnesses.set_row(found, v.coords);
            ++found;
        }
        if (found == r) return profile;
        if (bound >= hi_bound) throw error("minima witnesses incomplete");  // cannot happen
    }
}

}  // namespace detail

/// Exact successive minima with deterministic witnesses, cached per lattice.
inline const MinimaProfile& successive_minima(const Lattice& l) {
    if (l.rank() > dimension_cap())
        throw capacity_error("rank exceeds the exact enumeration cap");
    auto& cache = l.minima_cache();
    std::call_once(cache.flag, [&] { cache.profile = detail::compute_minima(l); });
    return *cache.profile;
}

/// The primitive rank-(r-i) sublattice spanned by the first r-i minima
/// witnesses, 1 <= i <= r-1.
inline Sublattice minima_filtration(const Lattice& l, std::size_t i) {
    const std::size_t r = l.rank();
    if (i < 1 || i >= r) throw argument_error("filtration index out of range");
    const MinimaProfile& profile = successive_minima(l);
    IntMatrix span(r - i, r);
    for (std::size_t t = 0; t < r - i; ++t) span.set_row(t, profile.witnesses.row(t));
    return Sublattice(l, saturate(span));
}

}  // namespace grasscount
