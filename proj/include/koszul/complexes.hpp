#ifndef KOSZUL_COMPLEXES_HPP
#define KOSZUL_COMPLEXES_HPP

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "koszul/graded.hpp"

namespace koszul {

enum class Direction { cochain, chain };

// One internal-degree slice of a complex: a finite run of composable exact
// matrices. Arrow i maps component i to component i+1 in storage order; for
// chain complexes the components are stored with the homological degree
// decreasing, so the arrows still run left to right.
template <class F>
struct FiniteComplex {
    F field;
    Direction direction = Direction::cochain;
    std::vector<std::size_t> comp_dims;
    std::vector<Mat<F>> arrows; // comp_dims.size() - 1 of them (when nonempty)
    std::vector<std::string> labels;

    void validate() const {
        if (comp_dims.empty()) return;
        if (arrows.size() + 1 != comp_dims.size())
            throw InternalError("complex: arrow count does not match components");
        for (std::size_t i = 0; i < arrows.size(); ++i) {
            if (arrows[i].cols() != comp_dims[i] || arrows[i].rows() != comp_dims[i + 1])
                throw InternalError("complex: arrow " + std::to_string(i) + " has shape " +
                                    arrows[i].shape_str() + ", expected " +
                                    std::to_string(comp_dims[i + 1]) + "x" +
                                    std::to_string(comp_dims[i]));
        }
        for (std::size_t i = 0; i + 1 < arrows.size(); ++i) {
            if (!(arrows[i + 1] * arrows[i]).is_zero())
                throw MathError("complex: d o d != 0 between positions " + std::to_string(i) +
                                " and " + std::to_string(i + 2) +
                                (labels.empty() ? std::string()
                                                : " (" + labels[i] + " -> " + labels[i + 2] + ")"));
        }
    }
};

// Homology dimensions by rank-nullity at every stored position.
template <class F>
std::vector<std::size_t> homology_dims(const FiniteComplex<F>& c) {
    c.validate();
    std::vector<std::size_t> ranks(c.arrows.size());
    for (std::size_t i = 0; i < c.arrows.size(); ++i) ranks[i] = rank(c.arrows[i]);
    std::vector<std::size_t> h(c.comp_dims.size());
    for (std::size_t i = 0; i < c.comp_dims.size(); ++i) {
        std::size_t out = i < c.arrows.size() ? ranks[i] : 0;
        std::size_t in = i > 0 ? ranks[i - 1] : 0;
        h[i] = c.comp_dims[i] - out - in;
    }
    return h;
}

template <class F>
bool is_exact(const FiniteComplex<F>& c) {
    for (std::size_t d : homology_dims(c))
        if (d != 0) return false;
    return true;
}

// --- the six Koszul complexes ------------------------------------------------

enum class Flavor {
    left_comodule,  // K_l: cochain, components C^{m-n} (x) A^n
    right_comodule, // K_r: cochain, components A^n (x) C^{m-n}
    bicomodule,     // K:   cochain, components C (x) A^n (x) C
    left_module,    // K^l: chain,   components A (x) C^n
    right_module,   // K^r: chain,   components C^n (x) A
    bimodule        // K_.: chain,   components A (x) C^n (x) A
};

inline constexpr std::array<Flavor, 6> kAllFlavors = {
    Flavor::left_comodule, Flavor::right_comodule, Flavor::bicomodule,
    Flavor::left_module,   Flavor::right_module,   Flavor::bimodule};

inline std::string flavor_name(Flavor f) {
    switch (f) {
        case Flavor::left_comodule: return "left_comodule";
        case Flavor::right_comodule: return "right_comodule";
        case Flavor::bicomodule: return "bicomodule";
        case Flavor::left_module: return "left_module";
        case Flavor::right_module: return "right_module";
        case Flavor::bimodule: return "bimodule";
    }
    return "?";
}

namespace detail {

// d_left(p, n): C^p (x) A^n -> C^{p-1} (x) A^{n+1},
// c (x) a |-> sum c_(1) (x) theta(c_(2)^1) a.
template <class F>
Mat<F> d_left(const PreKoszulPair<F>& pair, int p, int n) {
    const F f = pair.algebra.field;
    const GradedAlgebra<F>& A = pair.algebra;
    const GradedCoring<F>& C = pair.coring;
    if (p == 0) return Mat<F>(f, C.dim(p - 1) * A.dim(n + 1), C.dim(0) * A.dim(n));
    Mat<F> split = Mat<F>::kronecker(C.comult(p - 1, 1), Mat<F>::identity(f, A.dim(n)));
    Mat<F> apply_theta =
        Mat<F>::kronecker(Mat<F>::identity(f, C.dim(p - 1)),
                          Mat<F>::kronecker(pair.theta, Mat<F>::identity(f, A.dim(n))));
    Mat<F> mul = Mat<F>::kronecker(Mat<F>::identity(f, C.dim(p - 1)), A.mult(1, n));
    return mul * apply_theta * split;
}

// d_right(n, p): A^n (x) C^p -> A^{n+1} (x) C^{p-1},
// a (x) c |-> sum a theta(c_(1)^1) (x) c_(2).
template <class F>
Mat<F> d_right(const PreKoszulPair<F>& pair, int n, int p) {
    const F f = pair.algebra.field;
    const GradedAlgebra<F>& A = pair.algebra;
    const GradedCoring<F>& C = pair.coring;
    if (p == 0) return Mat<F>(f, A.dim(n + 1) * C.dim(p - 1), A.dim(n) * C.dim(0));
    Mat<F> split = Mat<F>::kronecker(Mat<F>::identity(f, A.dim(n)), C.comult(1, p - 1));
    Mat<F> apply_theta =
        Mat<F>::kronecker(Mat<F>::identity(f, A.dim(n)),
                          Mat<F>::kronecker(pair.theta, Mat<F>::identity(f, C.dim(p - 1))));
    Mat<F> mul = Mat<F>::kronecker(A.mult(n, 1), Mat<F>::identity(f, C.dim(p - 1)));
    return mul * apply_theta * split;
}

template <class F>
typename F::Elem sign_of(const F& f, int s) {
    return (s % 2 == 0) ? f.one() : f.neg(f.one());
}

} // namespace detail

// The internal-degree-m slice of one of the six (co)augmented complexes.
// For the four one-sided flavors the R-augmentation is concentrated in
// internal degree 0, so their augmented slices at m > 0 coincide with the
// plain ones; the bi(co)module flavors carry their graded (co)augmentation
// (Delta into / multiplication out of) in every internal degree.
template <class F>
FiniteComplex<F> build_slice(const PreKoszulPair<F>& pair, Flavor flavor, int m,
                             bool augmented = true) {
    const F f = pair.algebra.field;
    const GradedAlgebra<F>& A = pair.algebra;
    const GradedCoring<F>& C = pair.coring;
    if (m < 0 || m > A.max_degree || m > C.max_degree)
        throw InputError("build_slice: internal degree out of the truncated range");
    if (!check_prekoszul(pair))
        throw MathError(
            "build_slice: refusing the pair; the pre-Koszul identity fails, i.e. d o d at the "
            "C^2 -> A^2 corner equals m^{1,1} o (theta (x) theta) o Delta^{1,1} = " +
            prekoszul_defect(pair).to_string() + " != 0");

    FiniteComplex<F> cx;
    cx.field = f;
    cx.direction = (flavor == Flavor::left_comodule || flavor == Flavor::right_comodule ||
                    flavor == Flavor::bicomodule)
                       ? Direction::cochain
                       : Direction::chain;

    auto add_component = [&](std::size_t dim, const std::string& label) {
        cx.comp_dims.push_back(dim);
        cx.labels.push_back(label);
    };

    switch (flavor) {
        case Flavor::left_comodule: {
            if (augmented && m == 0) {
                add_component(1, "R");
                add_component(C.dim(0) * A.dim(0), "C^0(x)A^0");
                cx.arrows.push_back(Mat<F>::identity(f, 1));
                break;
            }
            for (int n = 0; n <= m; ++n)
                add_component(C.dim(m - n) * A.dim(n),
                              "C^" + std::to_string(m - n) + "(x)A^" + std::to_string(n));
            for (int n = 0; n < m; ++n) cx.arrows.push_back(detail::d_left(pair, m - n, n));
            break;
        }
        case Flavor::right_comodule: {
            if (augmented && m == 0) {
                add_component(1, "R");
                add_component(A.dim(0) * C.dim(0), "A^0(x)C^0");
                cx.arrows.push_back(Mat<F>::identity(f, 1));
                break;
            }
            for (int n = 0; n <= m; ++n)
                add_component(A.dim(n) * C.dim(m - n),
                              "A^" + std::to_string(n) + "(x)C^" + std::to_string(m - n));
            for (int n = 0; n < m; ++n) cx.arrows.push_back(detail::d_right(pair, n, m - n));
            break;
        }
        case Flavor::bicomodule: {
            // components at cochain degree n: direct sum over i+k = m-n of
            // C^i (x) A^n (x) C^k, blocks in ascending i.
            std::vector<BlockLayout> layout(m + 1);
            for (int n = 0; n <= m; ++n)
                for (int i = 0; i + n <= m; ++i)
                    layout[n].add(C.dim(i) * A.dim(n) * C.dim(m - n - i));
            if (augmented) {
                add_component(C.dim(m), "C^" + std::to_string(m));
            }
            for (int n = 0; n <= m; ++n)
                add_component(layout[n].total, "(C(x)A^" + std::to_string(n) + "(x)C)_" +
                                                   std::to_string(m));
            if (augmented) {
                // augmentation Delta: C^m -> sum_i C^i (x) A^0 (x) C^{m-i}
                Mat<F> aug(f, layout[0].total, C.dim(m));
                for (int i = 0; i <= m; ++i)
                    aug.set_block(layout[0].offsets[i], 0, C.comult(i, m - i));
                cx.arrows.push_back(aug);
            }
            for (int n = 0; n < m; ++n) {
                Mat<F> d(f, layout[n + 1].total, layout[n].total);
                for (int i = 0; i + n <= m; ++i) {
                    int k = m - n - i;
                    std::size_t src_off = layout[n].offsets[i];
                    std::size_t src_dim = layout[n].dims[i];
                    if (src_dim == 0) continue;
                    // d_l^n (x) Id_C : block i -> block i-1
                    if (i >= 1) {
                        Mat<F> part = Mat<F>::kronecker(detail::d_left(pair, i, n),
                                                        Mat<F>::identity(f, C.dim(k)));
                        d.add_block(layout[n + 1].offsets[i - 1], src_off, part);
                    }
                    // (-1)^{n+1} Id_C (x) d_r^n : block i -> block i (k drops)
                    if (k >= 1) {
                        Mat<F> part = Mat<F>::kronecker(Mat<F>::identity(f, C.dim(i)),
                                                        detail::d_right(pair, n, k))
                                          .scaled(detail::sign_of(f, n + 1));
                        d.add_block(layout[n + 1].offsets[i], src_off, part);
                    }
                }
                cx.arrows.push_back(d);
            }
            break;
        }
        case Flavor::right_module: {
            // K^r_n = C^n (x) A, stored with n descending: d_n^r = d_left(n, m-n).
            if (augmented && m == 0) {
                add_component(C.dim(0) * A.dim(0), "C^0(x)A^0");
                add_component(1, "R");
                cx.arrows.push_back(Mat<F>::identity(f, 1));
                break;
            }
            for (int n = m; n >= 0; --n)
                add_component(C.dim(n) * A.dim(m - n),
                              "C^" + std::to_string(n) + "(x)A^" + std::to_string(m - n));
            for (int n = m; n >= 1; --n) cx.arrows.push_back(detail::d_left(pair, n, m - n));
            break;
        }
        case Flavor::left_module: {
            if (augmented && m == 0) {
                add_component(A.dim(0) * C.dim(0), "A^0(x)C^0");
                add_component(1, "R");
                cx.arrows.push_back(Mat<F>::identity(f, 1));
                break;
            }
            for (int n = m; n >= 0; --n)
                add_component(A.dim(m - n) * C.dim(n),
                              "A^" + std::to_string(m - n) + "(x)C^" + std::to_string(n));
            for (int n = m; n >= 1; --n) cx.arrows.push_back(detail::d_right(pair, m - n, n));
            break;
        }
        case Flavor::bimodule: {
            // K_n = A (x) C^n (x) A; blocks A^i (x) C^n (x) A^k, ascending i.
            std::vector<BlockLayout> layout(m + 1);
            for (int n = 0; n <= m; ++n)
                for (int i = 0; i + n <= m; ++i)
                    layout[n].add(A.dim(i) * C.dim(n) * A.dim(m - n - i));
            for (int n = m; n >= 0; --n)
                add_component(layout[n].total, "(A(x)C^" + std::to_string(n) + "(x)A)_" +
                                                   std::to_string(m));
            for (int n = m; n >= 1; --n) {
                Mat<F> d(f, layout[n - 1].total, layout[n].total);
                for (int i = 0; i + n <= m; ++i) {
                    int k = m - n - i;
                    std::size_t src_off = layout[n].offsets[i];
                    if (layout[n].dims[i] == 0) continue;
                    // d_n^l (x) Id_A : A^i (x) C^n (x) A^k -> A^{i+1} (x) C^{n-1} (x) A^k
                    {
                        Mat<F> part = Mat<F>::kronecker(detail::d_right(pair, i, n),
                                                        Mat<F>::identity(f, A.dim(k)));
                        d.add_block(layout[n - 1].offsets[i + 1], src_off, part);
                    }
                    // (-1)^n Id_A (x) d_n^r : -> A^i (x) C^{n-1} (x) A^{k+1}
                    {
                        Mat<F> part = Mat<F>::kronecker(Mat<F>::identity(f, A.dim(i)),
                                                        detail::d_left(pair, n, k))
                                          .scaled(detail::sign_of(f, n));
                        d.add_block(layout[n - 1].offsets[i], src_off, part);
                    }
                }
                cx.arrows.push_back(d);
            }
            if (augmented) {
                // coaugmentation: multiplication sum A^i (x) C^0 (x) A^k -> A^m
                add_component(A.dim(m), "A^" + std::to_string(m));
                Mat<F> aug(f, A.dim(m), layout[0].total);
                for (int i = 0; i <= m; ++i)
                    aug.set_block(0, layout[0].offsets[i], A.mult(i, m - i));
                cx.arrows.push_back(aug);
            }
            break;
        }
    }
    cx.validate();
    return cx;
}

struct KoszulVerdict {
    int max_internal_degree = 0;
    std::array<std::vector<bool>, 6> exact; // [flavor][m]
    std::map<std::pair<int, int>, std::vector<std::size_t>> failure_homology;
    bool koszul = false;
    std::optional<int> witness_degree;
};

template <class F>
KoszulVerdict koszul_verdict(const PreKoszulPair<F>& pair, int N) {
    if (N > pair.algebra.max_degree || N > pair.coring.max_degree)
        throw InputError("koszul_verdict: degree bound exceeds the truncation");
    KoszulVerdict v;
    v.max_internal_degree = N;
    v.koszul = true;
    for (std::size_t fi = 0; fi < kAllFlavors.size(); ++fi) {
        v.exact[fi].resize(N + 1, false);
        for (int m = 0; m <= N; ++m) {
            FiniteComplex<F> slice = build_slice(pair, kAllFlavors[fi], m, true);
            std::vector<std::size_t> h = homology_dims(slice);
            bool ok = true;
            for (std::size_t d : h)
                if (d != 0) ok = false;
            v.exact[fi][m] = ok;
            if (!ok) {
                v.failure_homology[{int(fi), m}] = h;
                v.koszul = false;
                if (!v.witness_degree || m < *v.witness_degree) v.witness_degree = m;
            }
        }
    }
    return v;
}

// Theorem-level agreement: at every internal degree the six flavors decide
// exactness in unison, and the K_l slice matches the reversed K^r slice
// dimension-for-dimension (components and homology).
template <class F>
bool theorem_equivalence_check(const PreKoszulPair<F>& pair, int N) {
    KoszulVerdict v = koszul_verdict(pair, N);
    for (int m = 0; m <= N; ++m)
        for (std::size_t fi = 1; fi < kAllFlavors.size(); ++fi)
            if (v.exact[fi][m] != v.exact[0][m]) return false;
    for (int m = 1; m <= N; ++m) {
        FiniteComplex<F> kl = build_slice(pair, Flavor::left_comodule, m, true);
        FiniteComplex<F> kr = build_slice(pair, Flavor::right_module, m, true);
        std::vector<std::size_t> hl = homology_dims(kl);
        std::vector<std::size_t> hr = homology_dims(kr);
        if (kl.comp_dims.size() != kr.comp_dims.size()) return false;
        // K^r slices are stored with the homological degree descending, so
        // H^p(K_l(m)) = H_{m-p}(K^r(m)) is an index-to-index comparison here.
        for (std::size_t i = 0; i < hl.size(); ++i)
            if (kl.comp_dims[i] != kr.comp_dims[i] || hl[i] != hr[i]) return false;
    }
    return true;
}

} // namespace koszul

#endif
