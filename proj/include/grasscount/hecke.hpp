#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "grasscount/arithmetic.hpp"
#include "grasscount/errors.hpp"
#include "grasscount/integer.hpp"
#include "grasscount/matrix.hpp"
#include "grasscount/normal_form.hpp"
#include "grasscount/real.hpp"

namespace grasscount {

/// Standard-form representative of a right coset of GL(d,Z) inside the
/// double coset of diag(1,...,1,k): lower triangular, positive diagonal
/// with product k, below-diagonal entries reduced modulo the column pivot.
struct HeckeRep {
    IntMatrix matrix;
    std::int64_t k = 1;
};

inline std::vector<Int> smith_invariants_of_rep(const HeckeRep& h) {
    return snf(h.matrix);
}

/// Number of right cosets of GL(d,Z) in the double coset of diag(1,..,1,k):
/// prod over p^a || k of p^((a-1)(d-1)) (1 + p + ... + p^(d-1)).
inline Int hecke_count(unsigned d, std::int64_t k) {
    if (d < 1 || k < 1) throw argument_error("hecke_count requires d >= 1, k >= 1");
    Int total = 1;
    for (const auto& [p, a] : factorize(k)) {
        Int geom = 0, pw = 1;
        for (unsigned i = 0; i < d; ++i) { geom += pw; pw *= p; }
        total *= boost::multiprecision::pow(Int(p), (a - 1) * (d - 1)) * geom;
    }
    return total;
}

namespace detail {

// Representatives for prime power p^alpha in dimension d: lower triangular,
// diagonal (p^{a_1},...,p^{a_d}) with sum a_i = alpha, entries h(j,i) for
// j > i in [0, p^{a_i}), and h(j,i) coprime to p whenever i < j are
// consecutive positions with a_i, a_j >= 1 and zeros between them.
inline void hecke_reps_prime_power(unsigned d, std::int64_t p, unsigned alpha,
                                   std::vector<IntMatrix>& out) {
    std::vector<unsigned> a(d, 0);
    std::vector<std::int64_t> diag(d, 1);

    auto fill_entries = [&](auto&& self, IntMatrix& m, unsigned col, unsigned row) -> void {
        if (col == d) {
            out.push_back(m);
            return;
        }
        if (row == d) {
            self(self, m, col + 1, col + 2);
            return;
        }
        // coprimality applies between consecutive nontrivial diagonal spots
        bool need_coprime = false;
        if (a[col] >= 1 && a[row] >= 1) {
            need_coprime = true;
            for (unsigned t = col + 1; t < row; ++t)
                if (a[t] != 0) { need_coprime = false; break; }
        }
        for (std::int64_t v = 0; v < diag[col]; ++v) {
            if (need_coprime && v % p == 0) continue;
            m(row, col) = v;
            self(self, m, col, row + 1);
        }
    };

    auto choose = [&](auto&& self, unsigned i, unsigned rest) -> void {
        if (i == d) {
            if (rest != 0) return;
            IntMatrix m(d, d);
            for (unsigned t = 0; t < d; ++t) m(t, t) = diag[t];
            fill_entries(fill_entries, m, 0, 1);
            return;
        }
        std::int64_t pw = 1;
        for (unsigned e = 0; e <= rest; ++e) {
            a[i] = e;
            diag[i] = pw;
            self(self, i + 1, rest - e);
            pw *= p;
        }
        a[i] = 0;
        diag[i] = 1;
    };
    choose(choose, 0, alpha);
}

inline Int crt_pair(const Int& r1, const Int& m1, const Int& r2, const Int& m2) {
    // m1, m2 coprime; unique solution mod m1*m2
    Int x, y;
    xgcd(m1, m2, x, y);
    Int m = m1 * m2;
    Int res = (r1 * y % m) * m2 + (r2 * x % m) * m1;
    res %= m;
    if (res < 0) res += m;
    return res;
}

}  // namespace detail

/// All standard-form right coset representatives for determinant k,
/// assembled prime power by prime power and glued with the Chinese
/// remainder theorem on the below-diagonal entries. Output is sorted
/// lexicographically by row-major entries.
inline std::vector<HeckeRep> hecke_reps(unsigned d, std::int64_t k) {
    if (d < 1 || k < 1) throw argument_error("hecke_reps requires d >= 1, k >= 1");
    std::vector<IntMatrix> acc{IntMatrix::identity(d)};
    for (const auto& [p, alpha] : factorize(k)) {
        std::vector<IntMatrix> local;
        detail::hecke_reps_prime_power(d, p, alpha, local);
        std::vector<IntMatrix> merged;
        merged.reserve(acc.size() * local.size());
        for (const IntMatrix& ma : acc)
            for (const IntMatrix& mb : local) {
                IntMatrix m(d, d);
                for (unsigned i = 0; i < d; ++i) m(i, i) = ma(i, i) * mb(i, i);
                for (unsigned col = 0; col < d; ++col)
                    for (unsigned row = col + 1; row < d; ++row)
                        m(row, col) = detail::crt_pair(ma(row, col), ma(col, col),
                                                       mb(row, col), mb(col, col));
                merged.push_back(std::move(m));
            }
        acc = std::move(merged);
    }

    auto lex_less = [d](const IntMatrix& x, const IntMatrix& y) {
        for (unsigned i = 0; i < d; ++i)
            for (unsigned j = 0; j < d; ++j) {
                if (x(i, j) != y(i, j)) return x(i, j) < y(i, j);
            }
        return false;
    };
    std::sort(acc.begin(), acc.end(), lex_less);

    std::vector<HeckeRep> out;
    out.reserve(acc.size());
    for (IntMatrix& m : acc) out.push_back(HeckeRep{std::move(m), k});
    return out;
}

struct DirichletSum {
    Real value;
    Real tail_bound;
    unsigned long long terms = 0;
};

/// Partial sum of sum_k hecke_count(d,k) phi(k) k^(-m), which converges to
/// zeta(m-d)/zeta(m) for m > d+1. The reported tail bound uses
/// hecke_count(d,k) <= tau(k) k^(d-1) <= 2 sqrt(k) k^(d-1) and integral
/// comparison, so it is valid (if crude) for every K >= 1.
inline DirichletSum hecke_dirichlet(unsigned d, unsigned m, unsigned long long terms) {
    if (m <= d + 1) throw divergence_error("hecke_dirichlet requires m > d + 1");
    if (terms < 1) throw argument_error("hecke_dirichlet requires at least one term");
    ensure_precision();

    // smallest-prime-factor sieve for fast factorization of 1..terms
    std::vector<std::uint32_t> spf(terms + 1, 0);
    for (std::uint64_t i = 2; i <= terms; ++i) {
        if (spf[i] != 0) continue;
        for (std::uint64_t j = i; j <= terms; j += i)
            if (spf[j] == 0) spf[j] = static_cast<std::uint32_t>(i);
    }

    Real value = 0;
    for (std::uint64_t k = 1; k <= terms; ++k) {
        Int count = 1;
        std::int64_t phi = 1;
        std::uint64_t rest = k;
        while (rest > 1) {
            const std::int64_t p = spf[rest];
            unsigned a = 0;
            std::int64_t pa = 1;
            while (rest % p == 0) { rest /= p; ++a; pa *= p; }
            Int geom = 0, pw = 1;
            for (unsigned i = 0; i < d; ++i) { geom += pw; pw *= p; }
            count *= boost::multiprecision::pow(Int(p), (a - 1) * (d - 1)) * geom;
            phi *= pa - pa / p;
        }
        value += to_real(count * phi) / to_real(boost::multiprecision::pow(Int(k), m));
    }

    // tail  <=  sum_{k>K} 2 k^(d+1/2) k^(-m)  <=  2 K^(d+3/2-m) / (m-d-3/2)
    const Real K = Real(terms);
    const Real expo = Real(d) + Real(3) / 2 - Real(m);
    Real tail = 2 * pow(K, expo) / (-expo);

    return DirichletSum{value, tail, terms};
}

}  // namespace grasscount
