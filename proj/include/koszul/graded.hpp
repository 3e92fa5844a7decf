#ifndef KOSZUL_GRADED_HPP
#define KOSZUL_GRADED_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "koszul/matrix.hpp"
#include "koszul/subspace.hpp"
#include "koszul/tensor.hpp"

namespace koszul {

// Generators V with a named basis plus the relation subspace W inside V (x) V.
template <class F>
struct QuadraticPresentation {
    F field;
    std::vector<std::string> generator_names;
    Subspace<F> relations; // ambient n_gen^2

    std::size_t n_gen() const { return generator_names.size(); }
};

// Connected graded algebra truncated at max_degree. Components carry chosen
// bases; mult(p,q) is m^{p,q}: A^p (x) A^q -> A^{p+q} in those bases, and
// proj[n] expresses (A^1)^{(x)n} -> A^n.
template <class F>
struct GradedAlgebra {
    F field;
    int max_degree = 0;
    std::vector<std::size_t> dims;
    std::map<std::pair<int, int>, Mat<F>> mult_;
    std::vector<Mat<F>> proj;

    const Mat<F>& mult(int p, int q) const {
        auto it = mult_.find({p, q});
        if (it == mult_.end())
            throw InternalError("multiplication component (" + std::to_string(p) + "," +
                                std::to_string(q) + ") not available");
        return it->second;
    }
    std::size_t dim(int n) const { return (n >= 0 && n <= max_degree) ? dims[n] : 0; }
};

// Connected graded coring truncated at max_degree; comult(p,q) is
// Delta^{p,q}: C^{p+q} -> C^p (x) C^q. incl[n] (when the coring was built as
// a subcoring of the tensor coring) expresses C^n inside V^{(x)n}.
template <class F>
struct GradedCoring {
    F field;
    int max_degree = 0;
    std::vector<std::size_t> dims;
    std::map<std::pair<int, int>, Mat<F>> comult_;
    std::vector<Mat<F>> incl;

    const Mat<F>& comult(int p, int q) const {
        auto it = comult_.find({p, q});
        if (it == comult_.end())
            throw InternalError("comultiplication component (" + std::to_string(p) + "," +
                                std::to_string(q) + ") not available");
        return it->second;
    }
    std::size_t dim(int n) const { return (n >= 0 && n <= max_degree) ? dims[n] : 0; }
    bool has_inclusions() const { return !incl.empty(); }
};

template <class F>
struct PreKoszulPair {
    GradedAlgebra<F> algebra;
    GradedCoring<F> coring;
    Mat<F> theta; // C^1 -> A^1, invertible
};

// --- quadratic builders -----------------------------------------------------

// Span of sum_i V^{(x)i} (x) W (x) V^{(x)(n-i-2)} inside V^{(x)n}.
template <class F>
Subspace<F> degree_relation_span(const QuadraticPresentation<F>& p, int n) {
    const F f = p.field;
    std::size_t ng = p.n_gen();
    std::size_t ambient = ipow_checked(ng, n);
    if (n < 2) return Subspace<F>::zero(f, ambient);
    std::vector<Mat<F>> parts;
    for (int i = 0; i + 2 <= n; ++i) {
        Mat<F> left = Mat<F>::identity(f, ipow_checked(ng, i));
        Mat<F> right = Mat<F>::identity(f, ipow_checked(ng, n - i - 2));
        parts.push_back(Mat<F>::kronecker(left, Mat<F>::kronecker(p.relations.basis, right)));
    }
    return Subspace<F>::from_span(Mat<F>::hstack(parts, f, ambient));
}

template <class F>
GradedAlgebra<F> build_algebra(const QuadraticPresentation<F>& p, int N) {
    if (N < 2) throw InputError("build_algebra: degree bound must be at least 2");
    if (p.relations.ambient != p.n_gen() * p.n_gen())
        throw InputError("build_algebra: relation subspace does not live in V(x)V");
    const F f = p.field;
    GradedAlgebra<F> a;
    a.field = f;
    a.max_degree = N;
    std::vector<Mat<F>> sections;
    for (int n = 0; n <= N; ++n) {
        Mat<F> pr = quotient_map(ipow_checked(p.n_gen(), n), degree_relation_span(p, n));
        a.dims.push_back(pr.rows());
        a.proj.push_back(pr);
        sections.push_back(section_of(pr));
    }
    for (int pdeg = 0; pdeg <= N; ++pdeg)
        for (int qdeg = 0; pdeg + qdeg <= N; ++qdeg)
            a.mult_.emplace(std::make_pair(pdeg, qdeg),
                            a.proj[pdeg + qdeg] *
                                Mat<F>::kronecker(sections[pdeg], sections[qdeg]));
    return a;
}

template <class F>
GradedCoring<F> build_coring(const QuadraticPresentation<F>& p, int N) {
    if (N < 2) throw InputError("build_coring: degree bound must be at least 2");
    if (p.relations.ambient != p.n_gen() * p.n_gen())
        throw InputError("build_coring: relation subspace does not live in V(x)V");
    const F f = p.field;
    std::size_t ng = p.n_gen();
    GradedCoring<F> c;
    c.field = f;
    c.max_degree = N;

    std::vector<Subspace<F>> comps;
    comps.push_back(Subspace<F>::full(f, 1));  // C^0 = R
    comps.push_back(Subspace<F>::full(f, ng)); // C^1 = V
    for (int n = 2; n <= N; ++n) {
        Subspace<F> inter = Subspace<F>::from_span(
            Mat<F>::kronecker(p.relations.basis,
                              Mat<F>::identity(f, ipow_checked(ng, n - 2))));
        for (int i = 1; i + 2 <= n; ++i) {
            Mat<F> left = Mat<F>::identity(f, ipow_checked(ng, i));
            Mat<F> right = Mat<F>::identity(f, ipow_checked(ng, n - i - 2));
            Subspace<F> layer = Subspace<F>::from_span(
                Mat<F>::kronecker(left, Mat<F>::kronecker(p.relations.basis, right)));
            inter = subspace_intersect(inter, layer);
        }
        comps.push_back(inter);
    }
    for (int n = 0; n <= N; ++n) {
        c.dims.push_back(comps[n].dim());
        c.incl.push_back(comps[n].basis);
    }
    for (int pdeg = 0; pdeg <= N; ++pdeg)
        for (int qdeg = 0; pdeg + qdeg <= N; ++qdeg) {
            int n = pdeg + qdeg;
            if (pdeg == 0 || qdeg == 0) {
                c.comult_.emplace(std::make_pair(pdeg, qdeg), Mat<F>::identity(f, c.dims[n]));
                continue;
            }
            auto x = solve(Mat<F>::kronecker(c.incl[pdeg], c.incl[qdeg]), c.incl[n]);
            if (!x)
                throw InternalError(
                    "build_coring: Delta^{" + std::to_string(pdeg) + "," + std::to_string(qdeg) +
                    "} does not factor through C^p (x) C^q");
            c.comult_.emplace(std::make_pair(pdeg, qdeg), *x);
        }
    return c;
}

template <class F>
Mat<F> prekoszul_defect(const PreKoszulPair<F>& pair) {
    if (pair.algebra.max_degree < 2 || pair.coring.max_degree < 2)
        throw InputError("check_prekoszul: both components need max_degree >= 2");
    return pair.algebra.mult(1, 1) * Mat<F>::kronecker(pair.theta, pair.theta) *
           pair.coring.comult(1, 1);
}

template <class F>
bool check_prekoszul(const PreKoszulPair<F>& pair) {
    return prekoszul_defect(pair).is_zero();
}

template <class F>
PreKoszulPair<F> build_pair(const QuadraticPresentation<F>& p, int N) {
    PreKoszulPair<F> pair{build_algebra(p, N), build_coring(p, N),
                          Mat<F>::identity(p.field, p.n_gen())};
    if (!check_prekoszul(pair))
        throw InternalError("build_pair: (A_W, C_W) failed the pre-Koszul identity");
    return pair;
}

// Iterated multiplication (A^1)^{(x)n} -> A^n (left-bracketed).
template <class F>
Mat<F> iterated_mult(const GradedAlgebra<F>& a, int n) {
    if (n == 0) return Mat<F>::identity(a.field, 1);
    Mat<F> u = Mat<F>::identity(a.field, a.dims[1]);
    for (int k = 2; k <= n; ++k)
        u = a.mult(k - 1, 1) * Mat<F>::kronecker(u, Mat<F>::identity(a.field, a.dims[1]));
    return u;
}

template <class F>
bool check_generated_degree_one(const GradedAlgebra<F>& a) {
    for (int n = 2; n <= a.max_degree; ++n)
        if (rank(iterated_mult(a, n)) != a.dims[n]) return false;
    return true;
}

// Delta(n): C^n -> (C^1)^{(x)n} by the recursion
// Delta(n) = (Id (x) Delta(n-1)) . Delta^{1,n-1}.
template <class F>
Mat<F> delta_n(const GradedCoring<F>& c, int n) {
    if (n == 0) return Mat<F>::identity(c.field, 1);
    Mat<F> d = Mat<F>::identity(c.field, c.dims[1]);
    for (int k = 2; k <= n; ++k)
        d = Mat<F>::kronecker(Mat<F>::identity(c.field, c.dims[1]), d) * c.comult(1, k - 1);
    return d;
}

template <class F>
bool check_cogenerated_degree_one(const GradedCoring<F>& c) {
    for (int n = 2; n <= c.max_degree; ++n)
        if (rank(delta_n(c, n)) != c.dims[n]) return false;
    return true;
}

template <class F>
PreKoszulPair<F> opposite_pair(const PreKoszulPair<F>& pair) {
    const F f = pair.algebra.field;
    const GradedAlgebra<F>& a = pair.algebra;
    const GradedCoring<F>& c = pair.coring;

    GradedAlgebra<F> aop;
    aop.field = f;
    aop.max_degree = a.max_degree;
    aop.dims = a.dims;
    for (const auto& [key, m] : a.mult_) {
        auto [p, q] = key;
        aop.mult_.emplace(std::make_pair(q, p),
                          m * flip_matrix(f, a.dims[q], a.dims[p]));
    }
    if (!a.proj.empty()) {
        for (int n = 0; n <= a.max_degree; ++n)
            aop.proj.push_back(a.proj[n] * reversal_matrix(f, a.dims[1], n));
    }

    GradedCoring<F> cop;
    cop.field = f;
    cop.max_degree = c.max_degree;
    cop.dims = c.dims;
    for (const auto& [key, m] : c.comult_) {
        auto [p, q] = key;
        cop.comult_.emplace(std::make_pair(q, p),
                            flip_matrix(f, c.dims[p], c.dims[q]) * m);
    }
    if (c.has_inclusions()) {
        for (int n = 0; n <= c.max_degree; ++n)
            cop.incl.push_back(reversal_matrix(f, c.dims[1], n) * c.incl[n]);
    }

    return PreKoszulPair<F>{std::move(aop), std::move(cop), pair.theta};
}

// Debugging aid: drop every coring component above degree D.
template <class F>
GradedCoring<F> truncate_coring(const GradedCoring<F>& c, int D) {
    if (D < 0) throw InputError("coring truncation degree must be >= 0");
    GradedCoring<F> t;
    t.field = c.field;
    t.max_degree = c.max_degree;
    for (int n = 0; n <= c.max_degree; ++n) t.dims.push_back(n <= D ? c.dims[n] : 0);
    for (const auto& [key, m] : c.comult_) {
        auto [p, q] = key;
        if (p <= D && q <= D && p + q <= D)
            t.comult_.emplace(key, m);
        else
            t.comult_.emplace(key, Mat<F>(c.field, t.dims[p] * t.dims[q], t.dims[p + q]));
    }
    if (c.has_inclusions())
        for (int n = 0; n <= c.max_degree; ++n)
            t.incl.push_back(n <= D ? c.incl[n]
                                    : Mat<F>(c.field, c.incl[n].rows(), 0));
    return t;
}

// --- structural validators (throw InternalError on violation) ---------------

template <class F>
void validate_algebra(const GradedAlgebra<F>& a) {
    const F f = a.field;
    if (a.dims.size() != std::size_t(a.max_degree) + 1 || a.dims[0] != 1)
        throw InternalError("algebra: bad dimension table (connectedness requires dim A^0 = 1)");
    for (int p = 0; p <= a.max_degree; ++p)
        for (int q = 0; p + q <= a.max_degree; ++q) {
            const Mat<F>& m = a.mult(p, q);
            if (m.rows() != a.dims[p + q] || m.cols() != a.dims[p] * a.dims[q])
                throw InternalError("algebra: m^{p,q} has wrong shape");
            if ((p == 0 || q == 0) && !(m == Mat<F>::identity(f, a.dims[p + q])))
                throw InternalError("algebra: unit components of m must be canonical");
        }
    for (int p = 1; p <= a.max_degree; ++p)
        for (int q = 1; p + q < a.max_degree; ++q)
            for (int r = 1; p + q + r <= a.max_degree; ++r) {
                Mat<F> lhs = a.mult(p + q, r) *
                             Mat<F>::kronecker(a.mult(p, q), Mat<F>::identity(f, a.dims[r]));
                Mat<F> rhs = a.mult(p, q + r) *
                             Mat<F>::kronecker(Mat<F>::identity(f, a.dims[p]), a.mult(q, r));
                if (!(lhs == rhs))
                    throw InternalError("algebra: associativity fails at (" + std::to_string(p) +
                                        "," + std::to_string(q) + "," + std::to_string(r) + ")");
            }
    if (!a.proj.empty())
        for (int p = 1; p <= a.max_degree; ++p)
            for (int q = 1; p + q <= a.max_degree; ++q)
                if (!(a.mult(p, q) * Mat<F>::kronecker(a.proj[p], a.proj[q]) == a.proj[p + q]))
                    throw InternalError("algebra: m^{p,q} incompatible with the projections");
}

template <class F>
void validate_coring(const GradedCoring<F>& c) {
    const F f = c.field;
    if (c.dims.size() != std::size_t(c.max_degree) + 1 || c.dims[0] != 1)
        throw InternalError("coring: bad dimension table (connectedness requires dim C^0 = 1)");
    for (int p = 0; p <= c.max_degree; ++p)
        for (int q = 0; p + q <= c.max_degree; ++q) {
            const Mat<F>& m = c.comult(p, q);
            if (m.rows() != c.dims[p] * c.dims[q] || m.cols() != c.dims[p + q])
                throw InternalError("coring: Delta^{p,q} has wrong shape");
            if ((p == 0 || q == 0) && !(m == Mat<F>::identity(f, c.dims[p + q])))
                throw InternalError("coring: counit components of Delta must be canonical");
        }
    for (int p = 1; p <= c.max_degree; ++p)
        for (int q = 1; p + q < c.max_degree; ++q)
            for (int r = 1; p + q + r <= c.max_degree; ++r) {
                Mat<F> lhs = Mat<F>::kronecker(c.comult(p, q), Mat<F>::identity(f, c.dims[r])) *
                             c.comult(p + q, r);
                Mat<F> rhs = Mat<F>::kronecker(Mat<F>::identity(f, c.dims[p]), c.comult(q, r)) *
                             c.comult(p, q + r);
                if (!(lhs == rhs))
                    throw InternalError("coring: coassociativity fails at (" + std::to_string(p) +
                                        "," + std::to_string(q) + "," + std::to_string(r) + ")");
            }
    if (c.has_inclusions())
        for (int p = 1; p <= c.max_degree; ++p)
            for (int q = 1; p + q <= c.max_degree; ++q)
                if (!(Mat<F>::kronecker(c.incl[p], c.incl[q]) * c.comult(p, q) == c.incl[p + q]))
                    throw InternalError("coring: Delta^{p,q} incompatible with the inclusions");
}

} // namespace koszul

#endif
