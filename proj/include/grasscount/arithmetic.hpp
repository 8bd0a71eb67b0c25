#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "grasscount/errors.hpp"
#include "grasscount/integer.hpp"
#include "grasscount/matrix.hpp"

namespace grasscount {

struct PrimePower {
    std::int64_t p;
    unsigned e;
};

inline std::vector<PrimePower> factorize(std::int64_t n) {
    if (n < 1) throw argument_error("factorize requires a positive integer");
    std::vector<PrimePower> f;
    for (std::int64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p) continue;
        unsigned e = 0;
        while (n % p == 0) { n /= p; ++e; }
        f.push_back({p, e});
    }
    if (n > 1) f.push_back({n, 1});
    return f;
}

inline std::vector<std::int64_t> divisors(std::int64_t n) {
    const auto f = factorize(n);
    std::vector<std::int64_t> ds{1};
    for (const auto& [p, e] : f) {
        const std::size_t base = ds.size();
        std::int64_t pk = 1;
        for (unsigned k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < base; ++i) ds.push_back(ds[i] * pk);
        }
    }
    std::sort(ds.begin(), ds.end());
    return ds;
}

inline int moebius(std::int64_t n) {
    int sign = 1;
    for (const auto& [p, e] : factorize(n)) {
        if (e > 1) return 0;
        sign = -sign;
    }
    return sign;
}

inline std::int64_t euler_phi(std::int64_t n) {
    std::int64_t r = n;
    for (const auto& [p, e] : factorize(n)) r -= r / p;
    return r;
}

/// sigma_d(m): the number of index-m sublattices of a rank-d lattice.
/// sigma_1(m) = 1, sigma_d(m) = sum over r | m of r^(d-1) sigma_{d-1}(m/r).
inline Int sigma_d(unsigned d, std::int64_t m) {
    if (d < 1 || m < 1) throw argument_error("sigma_d requires d >= 1, m >= 1");
    static thread_local std::map<std::pair<unsigned, std::int64_t>, Int> memo;
    if (d == 1) return 1;
    auto it = memo.find({d, m});
    if (it != memo.end()) return it->second;
    Int s = 0;
    for (std::int64_t r : divisors(m))
        s += boost::multiprecision::pow(Int(r), d - 1) * sigma_d(d - 1, m / r);
    memo.emplace(std::make_pair(d, m), s);
    return s;
}

/// Number of d x d row-style HNF matrices of determinant m, counted by
/// walking the diagonal divisor tuples: a diagonal (a_1,...,a_d) admits
/// prod_j a_j^(j-1) choices for the reduced entries above the pivots.
inline Int hnf_count_square(unsigned d, std::int64_t m) {
    if (d < 1 || m < 1) throw argument_error("hnf_count_square requires d >= 1, m >= 1");
    if (d == 1) return 1;
    Int total = 0;
    for (std::int64_t a : divisors(m))
        total += hnf_count_square(d - 1, m / a) * boost::multiprecision::pow(Int(a), d - 1);
    return total;
}

/// All d x d row-style HNF matrices with determinant m: upper triangular,
/// positive diagonal, entries above a pivot reduced into [0, pivot).
inline std::vector<IntMatrix> hnf_matrices_square(unsigned d, std::int64_t m) {
    if (d < 1 || m < 1) throw argument_error("hnf_matrices_square requires d >= 1, m >= 1");
    std::vector<IntMatrix> out;
    std::vector<std::int64_t> diag(d);
    IntMatrix work(d, d);

    auto fill_above = [&](auto&& self, unsigned col) -> void {
        if (col == d) {
            out.push_back(work);
            return;
        }
        // entries work(i, col) for i < col run over [0, diag[col])
        auto rec = [&](auto&& inner, unsigned i) -> void {
            if (i == col) {
                self(self, col + 1);
                return;
            }
            for (std::int64_t v = 0; v < diag[col]; ++v) {
                work(i, col) = v;
                inner(inner, i + 1);
            }
        };
        rec(rec, 0);
    };

    auto choose_diag = [&](auto&& self, unsigned i, std::int64_t rest) -> void {
        if (i == d) {
            if (rest != 1) return;
            for (unsigned r = 0; r < d; ++r)
                for (unsigned c = 0; c < d; ++c) work(r, c) = (r == c) ? Int(diag[r]) : Int(0);
            fill_above(fill_above, 0);
            return;
        }
        for (std::int64_t a : divisors(rest)) {
            diag[i] = a;
            self(self, i + 1, rest / a);
        }
    };
    choose_diag(choose_diag, 0, m);
    return out;
}

inline Int binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    Int r = 1;
    for (unsigned i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

/// Bernoulli numbers B_0..B_n (B_1 = -1/2), exact.
inline std::vector<Rational> bernoulli_numbers(unsigned n) {
    std::vector<Rational> b(n + 1);
    for (unsigned m = 0; m <= n; ++m) {
        if (m == 0) { b[0] = 1; continue; }
        // sum_{j=0}^{m} C(m+1, j) B_j = 0
        Rational s = 0;
        for (unsigned j = 0; j < m; ++j) s += Rational(binomial(m + 1, j)) * b[j];
        b[m] = -s / Rational(binomial(m + 1, m));
    }
    return b;
}

}  // namespace grasscount
