#ifndef KOSZUL_SUBSPACE_HPP
#define KOSZUL_SUBSPACE_HPP

#include <string>

#include "koszul/matrix.hpp"

namespace koszul {

// Column-span subspace of a based vector space. The basis matrix is kept in
// a canonical reduced column echelon form so equal subspaces compare equal.
template <class F>
struct Subspace {
    std::size_t ambient = 0;
    Mat<F> basis; // ambient x dim, full column rank

    static Subspace zero(F field, std::size_t ambient) {
        Subspace s;
        s.ambient = ambient;
        s.basis = Mat<F>(field, ambient, 0);
        return s;
    }

    static Subspace full(F field, std::size_t ambient) {
        Subspace s;
        s.ambient = ambient;
        s.basis = Mat<F>::identity(field, ambient);
        return s;
    }

    // Canonicalize an arbitrary spanning set.
    static Subspace from_span(const Mat<F>& span) {
        Mat<F> t = span.transpose();
        std::vector<std::size_t> pivots = rref_in_place(t);
        Subspace s;
        s.ambient = span.rows();
        s.basis = Mat<F>(span.field(), span.rows(), pivots.size());
        for (std::size_t i = 0; i < pivots.size(); ++i)
            for (std::size_t j = 0; j < span.rows(); ++j) s.basis.at(j, i) = t.at(i, j);
        return s;
    }

    std::size_t dim() const { return basis.cols(); }

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.ambient == b.ambient && a.basis == b.basis;
    }
};

template <class F>
Subspace<F> subspace_sum(const Subspace<F>& a, const Subspace<F>& b) {
    if (a.ambient != b.ambient)
        throw InputError("subspace sum: ambient dimensions differ (" +
                         std::to_string(a.ambient) + " vs " + std::to_string(b.ambient) + ")");
    Mat<F> joined = Mat<F>::hstack({a.basis, b.basis}, a.basis.field(), a.ambient);
    return Subspace<F>::from_span(joined);
}

// Intersection via the kernel of [A | -B]: pairs (x, y) with A x = B y give
// the members A x.
template <class F>
Subspace<F> subspace_intersect(const Subspace<F>& a, const Subspace<F>& b) {
    if (a.ambient != b.ambient)
        throw InputError("subspace intersection: ambient dimensions differ (" +
                         std::to_string(a.ambient) + " vs " + std::to_string(b.ambient) + ")");
    const F& f = a.basis.field();
    Mat<F> joined = Mat<F>::hstack({a.basis, b.basis.negated()}, f, a.ambient);
    Mat<F> ker = kernel_basis_mat(joined);
    Mat<F> xs = ker.block(0, 0, a.basis.cols(), ker.cols());
    return Subspace<F>::from_span(a.basis * xs);
}

// Canonical basis of the kernel of m as a subspace of the column space.
template <class F>
Subspace<F> kernel_basis(const Mat<F>& m) {
    Subspace<F> s;
    s.ambient = m.cols();
    s.basis = kernel_basis_mat(m);
    return s;
}

// Surjection q with kernel exactly `sub`: rows form the canonical basis of
// the annihilator of sub under the standard pairing. The row space fixes the
// quotient basis.
template <class F>
Mat<F> quotient_map(std::size_t ambient_dim, const Subspace<F>& sub) {
    if (sub.ambient != ambient_dim)
        throw InputError("quotient_map: ambient dimension mismatch (" +
                         std::to_string(sub.ambient) + " vs " + std::to_string(ambient_dim) + ")");
    return kernel_basis_mat(sub.basis.transpose()).transpose();
}

// Right inverse of a surjection (free variables zero); used to pick
// representatives of quotient basis vectors.
template <class F>
Mat<F> section_of(const Mat<F>& surj) {
    auto s = solve(surj, Mat<F>::identity(surj.field(), surj.rows()));
    if (!s) throw InternalError("section_of: map is not surjective");
    return *s;
}

template <class F>
bool subspace_contains(const Subspace<F>& s, const Mat<F>& vectors) {
    return solve(s.basis, vectors).has_value();
}

} // namespace koszul

#endif
