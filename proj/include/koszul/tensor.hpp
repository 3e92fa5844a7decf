#ifndef KOSZUL_TENSOR_HPP
#define KOSZUL_TENSOR_HPP

#include <cstddef>
#include <vector>

#include "koszul/errors.hpp"
#include "koszul/matrix.hpp"

namespace koszul {

// Tensor-space dimensions can explode; refuse anything a desk run cannot hold.
inline constexpr std::size_t kMaxTensorDim = std::size_t(1) << 22;

inline std::size_t ipow_checked(std::size_t base, unsigned e) {
    std::size_t r = 1;
    for (unsigned i = 0; i < e; ++i) {
        if (base != 0 && r > kMaxTensorDim / base)
            throw InputError("tensor space dimension exceeds the supported limit");
        r *= base;
    }
    return r;
}

// Compositions of m into n parts >= 1, in ascending lexicographic order.
inline std::vector<std::vector<int>> compositions(int m, int n) {
    std::vector<std::vector<int>> out;
    if (n <= 0) {
        if (m == 0 && n == 0) out.push_back({});
        return out;
    }
    if (m < n) return out;
    std::vector<int> comp;
    comp.reserve(n);
    auto rec = [&](auto&& self, int pos, int rem) -> void {
        if (pos == n - 1) {
            comp.push_back(rem);
            out.push_back(comp);
            comp.pop_back();
            return;
        }
        for (int v = 1; v <= rem - (n - 1 - pos); ++v) {
            comp.push_back(v);
            self(self, pos + 1, rem - v);
            comp.pop_back();
        }
    };
    rec(rec, 0, m);
    return out;
}

// Offsets of a sequence of blocks inside a direct sum.
struct BlockLayout {
    std::vector<std::size_t> dims;
    std::vector<std::size_t> offsets;
    std::size_t total = 0;

    std::size_t add(std::size_t d) {
        offsets.push_back(total);
        dims.push_back(d);
        total += d;
        return dims.size() - 1;
    }
};

// Permutation matrix X (x) Y -> Y (x) X on a lexicographic tensor basis.
template <class F>
Mat<F> flip_matrix(F field, std::size_t dim_x, std::size_t dim_y) {
    Mat<F> m(field, dim_y * dim_x, dim_x * dim_y);
    for (std::size_t i = 0; i < dim_x; ++i)
        for (std::size_t j = 0; j < dim_y; ++j)
            m.at(j * dim_x + i, i * dim_y + j) = field.one();
    return m;
}

// dst[row_map[i]][col_map[j]] += src[i][j]; used to place blocks whose rows
// or columns are not contiguous in the target (nested direct-sum layouts).
template <class F>
void add_mapped(Mat<F>& dst, const Mat<F>& src, const std::vector<std::size_t>& row_map,
                const std::vector<std::size_t>& col_map) {
    const F& f = dst.field();
    for (std::size_t i = 0; i < src.rows(); ++i)
        for (std::size_t j = 0; j < src.cols(); ++j) {
            if (f.is_zero(src.at(i, j))) continue;
            auto& cell = dst.at(row_map[i], col_map[j]);
            cell = f.add(cell, src.at(i, j));
        }
}

inline std::vector<std::size_t> contiguous_indices(std::size_t off, std::size_t len) {
    std::vector<std::size_t> v(len);
    for (std::size_t i = 0; i < len; ++i) v[i] = off + i;
    return v;
}

// Index map for a sub-block of X (x) Y where X-block starts at o1 (length l1)
// and Y-block starts at o2 (length l2), Y having total dimension t2:
// local (r1*l2 + r2)  ->  (o1+r1)*t2 + (o2+r2).
inline std::vector<std::size_t> nested_pair_indices(std::size_t o1, std::size_t l1,
                                                    std::size_t t2, std::size_t o2,
                                                    std::size_t l2) {
    std::vector<std::size_t> v(l1 * l2);
    for (std::size_t r1 = 0; r1 < l1; ++r1)
        for (std::size_t r2 = 0; r2 < l2; ++r2) v[r1 * l2 + r2] = (o1 + r1) * t2 + (o2 + r2);
    return v;
}

// Word-reversal permutation on V^{(x)deg}, dim V = n_gen.
template <class F>
Mat<F> reversal_matrix(F field, std::size_t n_gen, unsigned deg) {
    std::size_t d = ipow_checked(n_gen, deg);
    Mat<F> m(field, d, d);
    for (std::size_t idx = 0; idx < d; ++idx) {
        // decode word, most significant letter first
        std::size_t rest = idx, rev = 0;
        std::vector<std::size_t> letters(deg);
        for (unsigned k = 0; k < deg; ++k) {
            letters[deg - 1 - k] = rest % (n_gen ? n_gen : 1);
            rest /= (n_gen ? n_gen : 1);
        }
        for (unsigned k = 0; k < deg; ++k) rev = rev * n_gen + letters[deg - 1 - k];
        m.at(rev, idx) = field.one();
    }
    return m;
}

} // namespace koszul

#endif
