#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "grasscount/errors.hpp"
#include "grasscount/integer.hpp"
#include "grasscount/lattice.hpp"
#include "grasscount/matrix.hpp"

namespace grasscount {

/// Rational Gram-Schmidt data of a basis: mu coefficients (strict lower
/// triangle) and the squared norms of the orthogonalized vectors.
struct GramSchmidt {
    RatMatrix mu;
    RatVec star_normsq;
};

/// Gram-Schmidt from a Gram matrix alone (no square roots are needed).
inline GramSchmidt gram_schmidt_from_gram(const RatMatrix& g) {
    const std::size_t r = g.rows();
    GramSchmidt gs{RatMatrix(r, r), RatVec(r)};
    for (std::size_t i = 0; i < r; ++i) {
        Rational di = g(i, i);
        for (std::size_t k = 0; k < i; ++k) di -= gs.mu(i, k) * gs.mu(i, k) * gs.star_normsq[k];
        if (di <= 0) throw rank_error("gram matrix is not positive definite");
        gs.star_normsq[i] = di;
        for (std::size_t j = i + 1; j < r; ++j) {
            Rational m = g(j, i);
            for (std::size_t k = 0; k < i; ++k) m -= gs.mu(j, k) * gs.mu(i, k) * gs.star_normsq[k];
            gs.mu(j, i) = m / di;
        }
    }
    return gs;
}

struct LllResult {
    RatMatrix basis;      // reduced basis, same lattice
    IntMatrix transform;  // unimodular, basis = transform * input
};

/// Exact LLL reduction with delta = 3/4, entirely in rational arithmetic.
/// Size reduction only fires on |mu| > 1/2, so an already reduced basis
/// passes through unchanged.
inline LllResult lll_with_transform(RatMatrix basis, const Rational& delta = Rational(3, 4)) {
    const std::size_t r = basis.rows();
    IntMatrix t = IntMatrix::identity(r);
    if (r <= 1) return {std::move(basis), std::move(t)};

    GramSchmidt gs = gram_schmidt_from_gram(gram(basis));
    std::size_t k = 1;
    while (k < r) {
        for (std::size_t jj = k; jj-- > 0;) {
            const Rational& m = gs.mu(k, jj);
            if (2 * abs(m) <= 1) continue;
            const Int q = rational_round(m);
            for (std::size_t c = 0; c < basis.cols(); ++c)
                basis(k, c) -= Rational(q) * basis(jj, c);
            for (std::size_t c = 0; c < r; ++c) t(k, c) -= q * t(jj, c);
            for (std::size_t c = 0; c < jj; ++c) gs.mu(k, c) -= Rational(q) * gs.mu(jj, c);
            gs.mu(k, jj) -= Rational(q);
        }
        const Rational lhs = gs.star_normsq[k];
        const Rational rhs = (delta - gs.mu(k, k - 1) * gs.mu(k, k - 1)) * gs.star_normsq[k - 1];
        if (lhs >= rhs) {
            ++k;
        } else {
            basis.swap_rows(k, k - 1);
            t.swap_rows(k, k - 1);
            gs = gram_schmidt_from_gram(gram(basis));
            k = (k > 1) ? k - 1 : 1;
        }
    }
    return {std::move(basis), std::move(t)};
}

/// Same lattice, LLL-reduced basis.
inline Lattice lll_reduce(const Lattice& l) {
    return Lattice(lll_with_transform(l.basis()).basis);
}

/// Exact check of the size-reduction condition |mu_ij| <= 1/2.
inline bool is_size_reduced(const RatMatrix& basis) {
    GramSchmidt gs = gram_schmidt_from_gram(gram(basis));
    for (std::size_t i = 1; i < basis.rows(); ++i)
        for (std::size_t j = 0; j < i; ++j)
            if (2 * abs(gs.mu(i, j)) > 1) return false;
    return true;
}

/// Exact check of the Lovasz condition at the given delta.
inline bool satisfies_lovasz(const RatMatrix& basis, const Rational& delta = Rational(3, 4)) {
    GramSchmidt gs = gram_schmidt_from_gram(gram(basis));
    for (std::size_t k = 1; k < basis.rows(); ++k) {
        const Rational rhs =
            (delta - gs.mu(k, k - 1) * gs.mu(k, k - 1)) * gs.star_normsq[k - 1];
        if (gs.star_normsq[k] < rhs) return false;
    }
    return true;
}

}  // namespace grasscount
