#pragma once

#include <cstddef>
#include <memory>
#include <mutex>
#include <optional>
#include <utility>
#include <vector>

#include "grasscount/errors.hpp"
#include "grasscount/integer.hpp"
#include "grasscount/matrix.hpp"
#include "grasscount/normal_form.hpp"

namespace grasscount {

/// Exact successive minima with witnesses. lambda_squared is nondecreasing;
/// witness row i is an integer coordinate vector (relative to the owning
/// lattice's basis) of squared norm lambda_squared[i], and the rows are
/// linearly independent.
struct MinimaProfile {
    std::vector<SquaredMagnitude> lambda_squared;
    IntMatrix witnesses;
};

namespace detail {
struct MinimaCache {
    std::once_flag flag;
    std::optional<MinimaProfile> profile;
};
}  // namespace detail

/// A lattice given by a rational basis: `rank` rows spanning a discrete
/// subgroup of R^ambient. The Gram matrix and squared determinant are
/// computed once at construction; instances are immutable afterwards.
class Lattice {
public:
    explicit Lattice(RatMatrix basis)
        : basis_(std::move(basis)),
          gram_(gram(basis_)),
          det_sq_(SquaredMagnitude(det(gram_))),
          cache_(std::make_shared<detail::MinimaCache>()) {
        if (basis_.rows() == 0 || basis_.cols() == 0)
            throw argument_error("lattice basis must be nonempty");
        if (basis_.rows() > basis_.cols())
            throw argument_error("lattice basis has more rows than ambient dimension");
        if (det_sq_.value() == 0) throw rank_error("lattice basis must have full row rank");
    }

    static Lattice standard(std::size_t n) {
        return Lattice(to_rational(IntMatrix::identity(n)));
    }

    static Lattice diagonal(const RatVec& entries) {
        RatMatrix b(entries.size(), entries.size());
        for (std::size_t i = 0; i < entries.size(); ++i) b(i, i) = entries[i];
        return Lattice(std::move(b));
    }

    static Lattice from_integer_basis(const IntMatrix& basis) {
        return Lattice(to_rational(basis));
    }

    std::size_t ambient_dim() const { return basis_.cols(); }
    std::size_t rank() const { return basis_.rows(); }
    const RatMatrix& basis() const { return basis_; }
    const RatMatrix& gram_matrix() const { return gram_; }
    const SquaredMagnitude& det_squared() const { return det_sq_; }

    /// Inner product of two coordinate vectors, under this lattice's metric.
    Rational inner(const IntVec& x, const IntVec& y) const {
        Rational s(0);
        for (std::size_t i = 0; i < rank(); ++i) {
            if (x[i] == 0) continue;
            for (std::size_t j = 0; j < rank(); ++j) s += Rational(x[i] * y[j]) * gram_(i, j);
        }
        return s;
    }

    SquaredMagnitude norm_squared(const IntVec& x) const {
        return SquaredMagnitude(inner(x, x));
    }

    /// Ambient vector of a coordinate vector.
    RatVec embed(const IntVec& x) const { return mul_vec(to_rational(x), basis_); }

    detail::MinimaCache& minima_cache() const { return *cache_; }

private:
    RatMatrix basis_;
    RatMatrix gram_;
    SquaredMagnitude det_sq_;
    std::shared_ptr<detail::MinimaCache> cache_;
};

/// Rank-d sublattice of a host lattice, held as the canonical HNF of its
/// integer coordinate matrix. Canonical coords make Grassmannian points
/// directly comparable.
class Sublattice {
public:
    Sublattice(const Lattice& host, const IntMatrix& coords_any_basis)
        : host_(std::make_shared<Lattice>(host)) {
        if (coords_any_basis.cols() != host.rank())
            throw argument_error("sublattice coords must have host-rank columns");
        HnfResult h = hnf(coords_any_basis);
        coords_ = std::move(h.h);
        primitive_ = is_primitive(coords_);
    }

    const Lattice& host() const { return *host_; }
    const IntMatrix& coords() const { return coords_; }
    std::size_t rank() const { return coords_.rows(); }
    bool primitive() const { return primitive_; }

    /// Basis of the sublattice as ambient row vectors.
    RatMatrix basis() const { return mul(to_rational(coords_), host_->basis()); }

    /// The sublattice viewed as a lattice in its own right.
    Lattice as_lattice() const { return Lattice(basis()); }

    SquaredMagnitude det_squared() const {
        RatMatrix g(coords_.rows(), coords_.rows());
        for (std::size_t i = 0; i < coords_.rows(); ++i)
            for (std::size_t k = i; k < coords_.rows(); ++k) {
                Rational s = host_->inner(coords_.row(i), coords_.row(k));
                g(i, k) = s;
                if (k != i) g(k, i) = s;
            }
        Rational d = det(g);
        if (d < 0) d = 0;
        return SquaredMagnitude(d);
    }

    friend bool operator==(const Sublattice& a, const Sublattice& b) {
        return a.coords_ == b.coords_;
    }

private:
    std::shared_ptr<Lattice> host_;
    IntMatrix coords_;
    bool primitive_ = false;
};

/// Polar (dual) lattice: the basis dual to L's basis inside span(L).
/// Satisfies det(L) det(L^P) = 1, tested squared.
inline Lattice polar(const Lattice& l) {
    RatMatrix z = mul(inverse(l.gram_matrix()), l.basis());
    return Lattice(std::move(z));
}

/// Orthogonal lattice of a primitive sublattice S of L: the sublattice of
/// polar(L) pairing to zero with S. In dual coordinates the pairing is the
/// standard dot product, so this is an integer kernel computation.
inline Sublattice orthogonal(const Sublattice& s) {
    if (!s.primitive()) throw argument_error("orthogonal lattice requires a primitive sublattice");
    IntMatrix ker = right_kernel(s.coords());
    return Sublattice(polar(s.host()), ker);
}

/// Projection L / <v> of L onto the orthogonal complement of a primitive
/// vector v (given in coordinates). The result lives in the same ambient
/// space and det^2(L/<v>) = det^2(L) / |v|^2.
inline Lattice project_quotient(const Lattice& l, const IntVec& v) {
    if (l.rank() < 2) throw argument_error("projection requires rank >= 2");
    if (v.size() != l.rank()) throw argument_error("projection vector has wrong length");
    if (content(v) != 1) throw argument_error("projection requires a primitive vector");

    IntMatrix completed = complete_primitive(v);  // first row is v
    RatMatrix full = mul(to_rational(completed), l.basis());
    const RatVec axis = full.row(0);
    Rational axis_norm(0);
    for (const Rational& e : axis) axis_norm += e * e;

    RatMatrix projected(l.rank() - 1, l.ambient_dim());
    for (std::size_t i = 1; i < l.rank(); ++i) {
        RatVec row = full.row(i);
        Rational coef = dot(row, axis) / axis_norm;
        for (std::size_t j = 0; j < row.size(); ++j) row[j] -= coef * axis[j];
        projected.set_row(i - 1, row);
    }
    return Lattice(std::move(projected));
}

}  // namespace grasscount
