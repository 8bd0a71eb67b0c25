#pragma once

#include <algorithm>
#include <cstddef>
#include <utility>
#include <vector>

#include "grasscount/errors.hpp"
#include "grasscount/integer.hpp"
#include "grasscount/matrix.hpp"

namespace grasscount {

struct EchelonResult {
    IntMatrix h;                     // row echelon, canonical HNF on the pivot rows
    IntMatrix u;                     // unimodular, u * input = h
    std::vector<std::size_t> pivots; // pivot column per pivot row
};

namespace detail {

// Eliminate column `col` below row `r` by gcd row operations, acting on h
// and mirroring every operation on u.
inline void gcd_eliminate_below(IntMatrix& h, IntMatrix& u, std::size_t r, std::size_t col) {
    for (std::size_t k = r + 1; k < h.rows(); ++k) {
        if (h(k, col) == 0) continue;
        const Int a = h(r, col), b = h(k, col);
        Int x, y;
        const Int g = xgcd(a, b, x, y);
        const Int adg = a / g, bdg = b / g;
        for (std::size_t j = 0; j < h.cols(); ++j) {
            const Int hr = h(r, j), hk = h(k, j);
            h(r, j) = x * hr + y * hk;
            h(k, j) = adg * hk - bdg * hr;
        }
        for (std::size_t j = 0; j < u.cols(); ++j) {
            const Int ur = u(r, j), uk = u(k, j);
            u(r, j) = x * ur + y * uk;
            u(k, j) = adg * uk - bdg * ur;
        }
    }
}

}  // namespace detail

/// Row echelon form over Z with unimodular transform. Pivots are positive,
/// pivot columns strictly increase, entries above each pivot are reduced
/// into [0, pivot). Zero rows, if any, end up at the bottom.
inline EchelonResult echelon_transform(const IntMatrix& m) {
    EchelonResult res;
    res.h = m;
    res.u = IntMatrix::identity(m.rows());
    IntMatrix& h = res.h;
    IntMatrix& u = res.u;

    std::size_t r = 0;
    for (std::size_t col = 0; col < h.cols() && r < h.rows(); ++col) {
        std::size_t piv = r;
        while (piv < h.rows() && h(piv, col) == 0) ++piv;
        if (piv == h.rows()) continue;
        h.swap_rows(r, piv);
        u.swap_rows(r, piv);
        detail::gcd_eliminate_below(h, u, r, col);
        if (h(r, col) < 0) {
            for (std::size_t j = 0; j < h.cols(); ++j) h(r, j) = -h(r, j);
            for (std::size_t j = 0; j < u.cols(); ++j) u(r, j) = -u(r, j);
        }
        res.pivots.push_back(col);
        ++r;
    }

    // reduce entries above each pivot into [0, pivot)
    for (std::size_t pr = 0; pr < res.pivots.size(); ++pr) {
        const std::size_t pc = res.pivots[pr];
        for (std::size_t i = 0; i < pr; ++i) {
            const Int q = floor_div(h(i, pc), h(pr, pc));
            if (q == 0) continue;
            for (std::size_t j = 0; j < h.cols(); ++j) h(i, j) -= q * h(pr, j);
            for (std::size_t j = 0; j < u.cols(); ++j) u(i, j) -= q * u(pr, j);
        }
    }
    return res;
}

struct HnfResult {
    IntMatrix h;  // canonical Hermite normal form
    IntMatrix u;  // unimodular, u * input = h
};

/// Canonical row-style Hermite normal form of a full-row-rank matrix.
inline HnfResult hnf(const IntMatrix& m) {
    if (m.rows() == 0 || m.cols() == 0) throw argument_error("hnf of empty matrix");
    EchelonResult e = echelon_transform(m);
    if (e.pivots.size() != m.rows())
        throw rank_error("hnf requires full row rank");
    return HnfResult{std::move(e.h), std::move(e.u)};
}

/// Basis of the left kernel {x : x m = 0} as rows, in canonical HNF.
/// The basis is automatically saturated.
inline IntMatrix left_kernel(const IntMatrix& m) {
    EchelonResult e = echelon_transform(m);
    const std::size_t r = e.pivots.size();
    const std::size_t k = m.rows() - r;
    IntMatrix ker(k, m.rows());
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < m.rows(); ++j) ker(i, j) = e.u(r + i, j);
    if (k == 0) return ker;
    return echelon_transform(ker).h;  // full rank by construction
}

/// Basis of {x : m x^tr = 0} as rows.
inline IntMatrix right_kernel(const IntMatrix& m) {
    return left_kernel(transpose(m));
}

/// Smith invariant factors a_1 | a_2 | ... | a_r (positive, r = rank).
/// The zero matrix yields the empty list.
inline std::vector<Int> snf(const IntMatrix& input) {
    IntMatrix a = input;
    const std::size_t rows = a.rows(), cols = a.cols();
    const std::size_t steps = std::min(rows, cols);
    std::vector<Int> inv;

    auto col_swap = [&](std::size_t x, std::size_t y) {
        if (x == y) return;
        for (std::size_t i = 0; i < rows; ++i) std::swap(a(i, x), a(i, y));
    };

    for (std::size_t t = 0; t < steps; ++t) {
        // find a nonzero entry in the trailing block
        std::size_t pi = rows, pj = cols;
        for (std::size_t i = t; i < rows && pi == rows; ++i)
            for (std::size_t j = t; j < cols; ++j)
                if (a(i, j) != 0) { pi = i; pj = j; break; }
        if (pi == rows) break;
        a.swap_rows(t, pi);
        col_swap(t, pj);

        for (;;) {
            bool dirty = false;
            // clear column t with row operations
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (a(i, t) == 0) continue;
                Int x, y;
                const Int g = xgcd(a(t, t), a(i, t), x, y);
                const Int adg = a(t, t) / g, bdg = a(i, t) / g;
                for (std::size_t j = t; j < cols; ++j) {
                    const Int rt = a(t, j), ri = a(i, j);
                    a(t, j) = x * rt + y * ri;
                    a(i, j) = adg * ri - bdg * rt;
                }
                dirty = true;
            }
            // clear row t with column operations
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (a(t, j) == 0) continue;
                Int x, y;
                const Int g = xgcd(a(t, t), a(t, j), x, y);
                const Int adg = a(t, t) / g, bdg = a(t, j) / g;
                for (std::size_t i = t; i < rows; ++i) {
                    const Int ct = a(i, t), cj = a(i, j);
                    a(i, t) = x * ct + y * cj;
                    a(i, j) = adg * cj - bdg * ct;
                }
                dirty = true;
            }
            if (dirty) continue;
            // enforce divisibility: a(t,t) must divide the trailing block
            bool fixed = true;
            for (std::size_t i = t + 1; i < rows && fixed; ++i)
                for (std::size_t j = t + 1; j < cols && fixed; ++j)
                    if (a(i, j) % a(t, t) != 0) {
                        for (std::size_t jj = t; jj < cols; ++jj) a(t, jj) += a(i, jj);
                        fixed = false;
                    }
            if (fixed) break;
        }
        if (a(t, t) < 0) for (std::size_t j = t; j < cols; ++j) a(t, j) = -a(t, j);
        inv.push_back(a(t, t));
    }

    while (!inv.empty() && inv.back() == 0) inv.pop_back();
    return inv;
}

/// True iff m extends to a basis of Z^n, i.e. all Smith invariants are 1.
inline bool is_primitive(const IntMatrix& m) {
    if (m.rows() > m.cols())
        throw argument_error("primitive test requires rows <= cols");
    const std::vector<Int> inv = snf(m);
    if (inv.size() != m.rows()) throw rank_error("primitive test requires full row rank");
    return std::all_of(inv.begin(), inv.end(), [](const Int& a) { return a == 1; });
}

/// Canonical HNF basis of the primitive closure: (Q-row-space of m) n Z^n.
inline IntMatrix saturate(const IntMatrix& m) {
    EchelonResult e = echelon_transform(m);
    if (e.pivots.size() != m.rows())
        throw rank_error("saturate requires full row rank");
    const IntMatrix ker = right_kernel(m);
    if (ker.rows() == 0) return IntMatrix::identity(m.cols());
    return right_kernel(ker);
}

/// Complete a primitive row vector to a unimodular matrix having it as the
/// first row.
inline IntMatrix complete_primitive(const IntVec& v) {
    const std::size_t n = v.size();
    if (n == 0 || content(v) != 1)
        throw argument_error("completion requires a primitive vector");
    IntMatrix col(n, 1);
    for (std::size_t i = 0; i < n; ++i) col(i, 0) = v[i];
    EchelonResult e = echelon_transform(col);  // e.u * v^tr = e_1^tr
    RatMatrix uinv = inverse(to_rational(e.u));
    IntMatrix w(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const Rational& x = uinv(j, i);  // transpose of u^-1
            if (denominator(x) != 1) throw error("unimodular inverse not integral");
            w(i, j) = numerator(x);
        }
    return w;
}

}  // namespace grasscount
