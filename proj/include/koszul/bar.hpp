#ifndef KOSZUL_BAR_HPP
#define KOSZUL_BAR_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "koszul/complexes.hpp"
#include "koszul/graded.hpp"

namespace koszul {

// Dimensions indexed by (homological degree n, internal degree m).
struct BidegreeTable {
    std::map<std::pair<int, int>, std::size_t> entries;

    std::size_t at(int n, int m) const {
        auto it = entries.find({n, m});
        return it == entries.end() ? 0 : it->second;
    }
};

namespace detail {

// Block bookkeeping for direct sums indexed by integer tuples.
struct TupleBlocks {
    std::vector<std::vector<int>> keys;
    BlockLayout layout;
    std::map<std::vector<int>, std::size_t> index;

    void add(std::vector<int> key, std::size_t dim) {
        index.emplace(key, keys.size());
        keys.push_back(std::move(key));
        layout.add(dim);
    }
};

template <class F>
std::size_t product_dim(const std::vector<std::size_t>& dims, const std::vector<int>& parts) {
    std::size_t d = 1;
    for (int p : parts) d *= dims[p];
    return d;
}

} // namespace detail

// Internal-degree-m slice of the normalized bar complex Omega_.(A).
// Chain complex, stored with the homological degree descending
// (comp[0] = degree m, ..., comp[m-1] = degree 1); block order within a
// component is lexicographic on the composition (m_1,...,m_n) of m.
template <class F>
FiniteComplex<F> bar_complex(const GradedAlgebra<F>& a, int m) {
    if (m < 0 || m > a.max_degree)
        throw InputError("bar_complex: internal degree out of the truncated range");
    const F f = a.field;
    FiniteComplex<F> cx;
    cx.field = f;
    cx.direction = Direction::chain;
    if (m == 0) {
        cx.comp_dims.push_back(1);
        cx.labels.push_back("R");
        return cx;
    }
    std::vector<detail::TupleBlocks> blocks(m + 1);
    for (int n = 1; n <= m; ++n)
        for (auto& comp : compositions(m, n))
            blocks[n].add(comp, detail::product_dim<F>(a.dims, comp));
    for (int n = m; n >= 1; --n) {
        cx.comp_dims.push_back(blocks[n].layout.total);
        cx.labels.push_back("Abar^{(x)" + std::to_string(n) + "}_" + std::to_string(m));
    }
    for (int n = m; n >= 2; --n) {
        Mat<F> d(f, blocks[n - 1].layout.total, blocks[n].layout.total);
        for (std::size_t b = 0; b < blocks[n].keys.size(); ++b) {
            const std::vector<int>& src = blocks[n].keys[b];
            if (blocks[n].layout.dims[b] == 0) continue;
            for (int i = 1; i <= n - 1; ++i) {
                std::vector<int> tgt;
                tgt.reserve(n - 1);
                for (int j = 0; j < n; ++j) {
                    if (j == i) continue;
                    tgt.push_back(j == i - 1 ? src[i - 1] + src[i] : src[j]);
                }
                std::size_t tb = blocks[n - 1].index.at(tgt);
                std::size_t pre = 1, post = 1;
                for (int j = 0; j < i - 1; ++j) pre *= a.dims[src[j]];
                for (int j = i + 1; j < n; ++j) post *= a.dims[src[j]];
                Mat<F> part = Mat<F>::kronecker(
                    Mat<F>::identity(f, pre),
                    Mat<F>::kronecker(a.mult(src[i - 1], src[i]), Mat<F>::identity(f, post)));
                d.add_block(blocks[n - 1].layout.offsets[tb], blocks[n].layout.offsets[b],
                            part.scaled(detail::sign_of(f, i)));
            }
        }
        cx.arrows.push_back(d);
    }
    return cx;
}

// Internal-degree-m slice of the normalized cobar complex Omega^.(C).
// Cochain complex stored ascending (comp[0] = degree 1).
template <class F>
FiniteComplex<F> cobar_complex(const GradedCoring<F>& c, int m) {
    if (m < 0 || m > c.max_degree)
        throw InputError("cobar_complex: internal degree out of the truncated range");
    const F f = c.field;
    FiniteComplex<F> cx;
    cx.field = f;
    cx.direction = Direction::cochain;
    if (m == 0) {
        cx.comp_dims.push_back(1);
        cx.labels.push_back("R");
        return cx;
    }
    std::vector<detail::TupleBlocks> blocks(m + 1);
    for (int n = 1; n <= m; ++n)
        for (auto& comp : compositions(m, n))
            blocks[n].add(comp, detail::product_dim<F>(c.dims, comp));
    for (int n = 1; n <= m; ++n) {
        cx.comp_dims.push_back(blocks[n].layout.total);
        cx.labels.push_back("Cbar^{(x)" + std::to_string(n) + "}_" + std::to_string(m));
    }
    for (int n = 1; n <= m - 1; ++n) {
        Mat<F> d(f, blocks[n + 1].layout.total, blocks[n].layout.total);
        for (std::size_t b = 0; b < blocks[n].keys.size(); ++b) {
            const std::vector<int>& src = blocks[n].keys[b];
            if (blocks[n].layout.dims[b] == 0) continue;
            for (int i = 1; i <= n; ++i) {
                for (int p = 1; p <= src[i - 1] - 1; ++p) {
                    std::vector<int> tgt;
                    tgt.reserve(n + 1);
                    for (int j = 0; j < n; ++j) {
                        if (j == i - 1) {
                            tgt.push_back(p);
                            tgt.push_back(src[j] - p);
                        } else {
                            tgt.push_back(src[j]);
                        }
                    }
                    std::size_t tb = blocks[n + 1].index.at(tgt);
                    std::size_t pre = 1, post = 1;
                    for (int j = 0; j < i - 1; ++j) pre *= c.dims[src[j]];
                    for (int j = i; j < n; ++j) post *= c.dims[src[j]];
                    Mat<F> part = Mat<F>::kronecker(
                        Mat<F>::identity(f, pre),
                        Mat<F>::kronecker(c.comult(p, src[i - 1] - p),
                                          Mat<F>::identity(f, post)));
                    d.add_block(blocks[n + 1].layout.offsets[tb], blocks[n].layout.offsets[b],
                                part.scaled(detail::sign_of(f, i - 1)));
                }
            }
        }
        cx.arrows.push_back(d);
    }
    return cx;
}

// T(A) = Tor_.^A(R,R) dimensions: entry (n, m) = dim H_n of the degree-m bar
// slice, n <= m <= N, plus the connectedness entry (0,0) = 1.
template <class F>
BidegreeTable tor_table(const GradedAlgebra<F>& a, int N) {
    if (N > a.max_degree) throw InputError("tor_table: degree bound exceeds the truncation");
    BidegreeTable t;
    t.entries[{0, 0}] = 1;
    for (int m = 1; m <= N; ++m) {
        std::vector<std::size_t> h = homology_dims(bar_complex(a, m));
        for (int n = 1; n <= m; ++n) t.entries[{n, m}] = h[m - n];
    }
    return t;
}

// E(C) = Ext_C^.(R,R) dimensions from the cobar slices.
template <class F>
BidegreeTable ext_table(const GradedCoring<F>& c, int N) {
    if (N > c.max_degree) throw InputError("ext_table: degree bound exceeds the truncation");
    BidegreeTable t;
    t.entries[{0, 0}] = 1;
    for (int m = 1; m <= N; ++m) {
        std::vector<std::size_t> h = homology_dims(cobar_complex(c, m));
        for (int n = 1; n <= m; ++n) t.entries[{n, m}] = h[n - 1];
    }
    return t;
}

struct ChainMapReport {
    bool chain_map_ok = true;
    std::optional<std::pair<int, int>> first_violation; // (homological degree, internal degree)
    std::map<std::pair<int, int>, bool> induced_iso;    // (n, m), n <= m
    bool all_iso = true;
    std::string detail;

    bool ok() const { return chain_map_ok && all_iso; }
};

// phi_n = Id_A (x) (theta^{(x)n} . Delta(n)) : A (x) C^n -> A (x) Abar^{(x)n},
// a chain map from K~^l_.(A,C) to the normalized left bar resolution of A.
// The induced map C^n -> H_n(Omega(A)) is checked per internal-degree slice.
template <class F>
ChainMapReport phi_chain_map(const PreKoszulPair<F>& pair, int N) {
    const F f = pair.algebra.field;
    const GradedAlgebra<F>& A = pair.algebra;
    const GradedCoring<F>& C = pair.coring;
    if (N > A.max_degree || N > C.max_degree)
        throw InputError("phi_chain_map: degree bound exceeds the truncation");
    ChainMapReport rep;

    for (int m = 1; m <= N; ++m) {
        // blocks of the left bar resolution slice: tuples (m_0; m_1..m_n),
        // m_0 >= 0, m_i >= 1, ordered lexicographically.
        std::vector<detail::TupleBlocks> blocks(m + 1);
        for (int n = 0; n <= m; ++n)
            for (int m0 = 0; m0 <= m - n; ++m0) {
                if (n == 0) {
                    if (m0 == m) blocks[0].add({m0}, A.dims[m0]);
                    continue;
                }
                for (auto comp : compositions(m - m0, n)) {
                    std::vector<int> key;
                    key.push_back(m0);
                    key.insert(key.end(), comp.begin(), comp.end());
                    blocks[n].add(key, A.dims[m0] * detail::product_dim<F>(A.dims, comp));
                }
            }

        auto resolution_diff = [&](int n) { // position n -> n-1
            Mat<F> d(f, blocks[n - 1].layout.total, blocks[n].layout.total);
            for (std::size_t b = 0; b < blocks[n].keys.size(); ++b) {
                const std::vector<int>& src = blocks[n].keys[b]; // size n+1
                if (blocks[n].layout.dims[b] == 0) continue;
                for (int i = 0; i <= n - 1; ++i) {
                    // merge entries i and i+1 of the tuple; sign (+1, -1, ...).
                    std::vector<int> tgt;
                    for (int j = 0; j <= n; ++j) {
                        if (j == i + 1) continue;
                        tgt.push_back(j == i ? src[i] + src[i + 1] : src[j]);
                    }
                    std::size_t tb = blocks[n - 1].index.at(tgt);
                    std::size_t pre = 1, post = 1;
                    for (int j = 0; j < i; ++j) pre *= A.dims[src[j]];
                    for (int j = i + 2; j <= n; ++j) post *= A.dims[src[j]];
                    Mat<F> part = Mat<F>::kronecker(
                        Mat<F>::identity(f, pre),
                        Mat<F>::kronecker(A.mult(src[i], src[i + 1]),
                                          Mat<F>::identity(f, post)));
                    d.add_block(blocks[n - 1].layout.offsets[tb], blocks[n].layout.offsets[b],
                                part.scaled(detail::sign_of(f, i)));
                }
            }
            return d;
        };

        auto phi_n = [&](int n) { // A^{m-n} (x) C^n -> resolution slice position n
            Mat<F> phi(f, blocks[n].layout.total, A.dims[m - n] * C.dims[n]);
            std::vector<int> key;
            key.push_back(m - n);
            for (int j = 0; j < n; ++j) key.push_back(1);
            auto it = blocks[n].index.find(key);
            if (it == blocks[n].index.end()) return phi;
            Mat<F> theta_pow = Mat<F>::identity(f, 1);
            for (int j = 0; j < n; ++j) theta_pow = Mat<F>::kronecker(theta_pow, pair.theta);
            Mat<F> img = Mat<F>::kronecker(Mat<F>::identity(f, A.dims[m - n]),
                                           theta_pow * delta_n(C, n));
            phi.set_block(blocks[n].layout.offsets[it->second], 0, img);
            return phi;
        };

        for (int n = 1; n <= m; ++n) {
            Mat<F> lhs = phi_n(n - 1) * detail::d_right(pair, m - n, n);
            Mat<F> rhs = resolution_diff(n) * phi_n(n);
            if (!(lhs == rhs)) {
                rep.chain_map_ok = false;
                if (!rep.first_violation) {
                    rep.first_violation = {n, m};
                    rep.detail = "phi: chain-map square fails at homological degree " +
                                 std::to_string(n) + ", internal degree " + std::to_string(m);
                }
            }
        }

        // induced maps on bar homology
        FiniteComplex<F> omega = bar_complex(A, m);
        std::vector<std::size_t> h = homology_dims(omega);
        for (int n = 1; n <= m; ++n) {
            bool iso;
            if (n == m) {
                Mat<F> theta_pow = Mat<F>::identity(f, 1);
                for (int j = 0; j < n; ++j) theta_pow = Mat<F>::kronecker(theta_pow, pair.theta);
                Mat<F> g = theta_pow * delta_n(C, n); // C^n -> (A^1)^{(x)n}
                bool cycle_ok = omega.arrows.empty() || (omega.arrows[0] * g).is_zero();
                iso = cycle_ok && rank(g) == C.dims[n] && h[0] == C.dims[n];
            } else {
                iso = (h[m - n] == 0);
            }
            rep.induced_iso[{n, m}] = iso;
            if (!iso) rep.all_iso = false;
        }
    }
    return rep;
}

// psi^n : Cbar^{(x)n} (x) C -> A^n (x) C, a chain map from the normalized
// right cobar resolution of C to (K~_r(A,C), (-1)^. d_r).  The induced maps
// lambda^n : H^n(Omega(C)) -> A^n are checked per slice.
template <class F>
ChainMapReport psi_chain_map(const PreKoszulPair<F>& pair, int N) {
    const F f = pair.algebra.field;
    const GradedAlgebra<F>& A = pair.algebra;
    const GradedCoring<F>& C = pair.coring;
    if (N > A.max_degree || N > C.max_degree)
        throw InputError("psi_chain_map: degree bound exceeds the truncation");
    ChainMapReport rep;

    for (int m = 1; m <= N; ++m) {
        // blocks of the cobar resolution slice: tuples (m_1..m_n; k), k >= 0,
        // enumerated with the Cbar total ascending, lex within.
        std::vector<detail::TupleBlocks> blocks(m + 1);
        for (int n = 0; n <= m; ++n) {
            if (n == 0) {
                blocks[0].add({m}, C.dims[m]); // (; k=m)
                continue;
            }
            for (int s = n; s <= m; ++s)
                for (auto comp : compositions(s, n)) {
                    std::vector<int> key = comp;
                    key.push_back(m - s); // trailing C-leg degree
                    blocks[n].add(key, detail::product_dim<F>(C.dims, comp) * C.dims[m - s]);
                }
        }

        auto resolution_diff = [&](int n) { // position n -> n+1
            Mat<F> d(f, blocks[n + 1].layout.total, blocks[n].layout.total);
            for (std::size_t b = 0; b < blocks[n].keys.size(); ++b) {
                const std::vector<int>& src = blocks[n].keys[b]; // size n+1, last is k
                if (blocks[n].layout.dims[b] == 0) continue;
                int k = src[n];
                // split Cbar leg i (1-based), sign (-1)^{i-1}
                for (int i = 1; i <= n; ++i) {
                    for (int p = 1; p <= src[i - 1] - 1; ++p) {
                        std::vector<int> tgt;
                        for (int j = 0; j < n; ++j) {
                            if (j == i - 1) {
                                tgt.push_back(p);
                                tgt.push_back(src[j] - p);
                            } else {
                                tgt.push_back(src[j]);
                            }
                        }
                        tgt.push_back(k);
                        std::size_t tb = blocks[n + 1].index.at(tgt);
                        std::size_t pre = 1, post = C.dims[k];
                        for (int j = 0; j < i - 1; ++j) pre *= C.dims[src[j]];
                        for (int j = i; j < n; ++j) post *= C.dims[src[j]];
                        Mat<F> part = Mat<F>::kronecker(
                            Mat<F>::identity(f, pre),
                            Mat<F>::kronecker(C.comult(p, src[i - 1] - p),
                                              Mat<F>::identity(f, post)));
                        d.add_block(blocks[n + 1].layout.offsets[tb],
                                    blocks[n].layout.offsets[b],
                                    part.scaled(detail::sign_of(f, i - 1)));
                    }
                }
                // final term: (-1)^n Id (x) (p_C (x) Id) Delta on the C-leg
                for (int p = 1; p <= k; ++p) {
                    std::vector<int> tgt(src.begin(), src.end() - 1);
                    tgt.push_back(p);
                    tgt.push_back(k - p);
                    std::size_t tb = blocks[n + 1].index.at(tgt);
                    std::size_t pre = 1;
                    for (int j = 0; j < n; ++j) pre *= C.dims[src[j]];
                    Mat<F> part =
                        Mat<F>::kronecker(Mat<F>::identity(f, pre), C.comult(p, k - p));
                    d.add_block(blocks[n + 1].layout.offsets[tb], blocks[n].layout.offsets[b],
                                part.scaled(detail::sign_of(f, n)));
                }
            }
            return d;
        };

        auto psi_n = [&](int n) { // resolution position n -> A^n (x) C^{m-n}
            Mat<F> psi(f, A.dims[n] * C.dims[m - n], blocks[n].layout.total);
            std::vector<int> key(n, 1);
            key.push_back(m - n);
            auto it = blocks[n].index.find(key);
            if (it == blocks[n].index.end()) return psi;
            Mat<F> theta_pow = Mat<F>::identity(f, 1);
            for (int j = 0; j < n; ++j) theta_pow = Mat<F>::kronecker(theta_pow, pair.theta);
            Mat<F> img = Mat<F>::kronecker(iterated_mult(A, n) * theta_pow,
                                           Mat<F>::identity(f, C.dims[m - n]));
            psi.set_block(0, blocks[n].layout.offsets[it->second], img);
            return psi;
        };

        for (int n = 0; n <= m - 1; ++n) {
            Mat<F> lhs = psi_n(n + 1) * resolution_diff(n);
            Mat<F> rhs = (detail::d_right(pair, n, m - n) * psi_n(n))
                             .scaled(detail::sign_of(f, n));
            if (!(lhs == rhs)) {
                rep.chain_map_ok = false;
                if (!rep.first_violation) {
                    rep.first_violation = {n, m};
                    rep.detail = "psi: chain-map square fails at position " + std::to_string(n) +
                                 ", internal degree " + std::to_string(m);
                }
            }
        }

        // induced maps on cobar cohomology
        FiniteComplex<F> omega = cobar_complex(C, m);
        std::vector<std::size_t> h = homology_dims(omega);
        for (int n = 1; n <= m; ++n) {
            bool iso;
            if (n == m) {
                Mat<F> theta_pow = Mat<F>::identity(f, 1);
                for (int j = 0; j < n; ++j) theta_pow = Mat<F>::kronecker(theta_pow, pair.theta);
                Mat<F> L = iterated_mult(A, n) * theta_pow; // (C^1)^{(x)n} -> A^n
                bool welldef = n < 2 || (L * omega.arrows[n - 2]).is_zero();
                iso = welldef && h[n - 1] == A.dims[n] && rank(L) == A.dims[n];
            } else {
                iso = (h[n - 1] == 0);
            }
            rep.induced_iso[{n, m}] = iso;
            if (!iso) rep.all_iso = false;
        }
    }
    return rep;
}

} // namespace koszul

#endif
