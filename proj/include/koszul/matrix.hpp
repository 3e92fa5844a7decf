#ifndef KOSZUL_MATRIX_HPP
#define KOSZUL_MATRIX_HPP

#include <cstddef>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "koszul/errors.hpp"
#include "koszul/field.hpp"

namespace koszul {

// Dense exact matrix over a field F (RationalField or PrimeField).
// Row-major storage; all arithmetic exact.
template <class F>
class Mat {
public:
    using Elem = typename F::Elem;

    Mat() : field_(), rows_(0), cols_(0) {}
    Mat(F field, std::size_t rows, std::size_t cols)
        : field_(field), rows_(rows), cols_(cols), a_(rows * cols, field.zero()) {}

    static Mat identity(F field, std::size_t n) {
        Mat m(field, n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = field.one();
        return m;
    }
    static Mat zero(F field, std::size_t r, std::size_t c) { return Mat(field, r, c); }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const F& field() const { return field_; }

    Elem& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    const Elem& at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

    bool is_zero() const {
        for (const Elem& e : a_)
            if (!field_.is_zero(e)) return false;
        return true;
    }

    friend bool operator==(const Mat& a, const Mat& b) {
        if (!(a.field_ == b.field_) || a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
        for (std::size_t i = 0; i < a.a_.size(); ++i)
            if (!a.field_.eq(a.a_[i], b.a_[i])) return false;
        return true;
    }

    Mat operator+(const Mat& o) const {
        require_same_shape(o);
        Mat r = *this;
        for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = field_.add(r.a_[i], o.a_[i]);
        return r;
    }
    Mat operator-(const Mat& o) const {
        require_same_shape(o);
        Mat r = *this;
        for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = field_.sub(r.a_[i], o.a_[i]);
        return r;
    }
    Mat negated() const {
        Mat r = *this;
        for (Elem& e : r.a_) e = field_.neg(e);
        return r;
    }
    Mat scaled(const Elem& s) const {
        Mat r = *this;
        for (Elem& e : r.a_) e = field_.mul(e, s);
        return r;
    }

    Mat operator*(const Mat& o) const {
        if (!(field_ == o.field_)) throw InputError("matrix product: field mismatch");
        if (cols_ != o.rows_)
            throw InputError("matrix product: shape mismatch " + shape_str() + " * " + o.shape_str());
        Mat r(field_, rows_, o.cols_);
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t k = 0; k < cols_; ++k) {
                const Elem& aik = at(i, k);
                if (field_.is_zero(aik)) continue;
                const Elem* brow = &o.a_[k * o.cols_];
                Elem* rrow = &r.a_[i * o.cols_];
                for (std::size_t j = 0; j < o.cols_; ++j) {
                    if (field_.is_zero(brow[j])) continue;
                    rrow[j] = field_.add(rrow[j], field_.mul(aik, brow[j]));
                }
            }
        }
        return r;
    }

    Mat transpose() const {
        Mat r(field_, cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
        return r;
    }

    // Kronecker product with the left factor major:
    // (a (x) b)(u (x) v) = a(u) (x) b(v) in the lexicographic tensor basis.
    static Mat kronecker(const Mat& a, const Mat& b) {
        if (!(a.field_ == b.field_)) throw InputError("kronecker: field mismatch");
        Mat r(a.field_, a.rows_ * b.rows_, a.cols_ * b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const Elem& aik = a.at(i, k);
                if (a.field_.is_zero(aik)) continue;
                for (std::size_t j = 0; j < b.rows_; ++j)
                    for (std::size_t l = 0; l < b.cols_; ++l) {
                        const Elem& bjl = b.at(j, l);
                        if (b.field_.is_zero(bjl)) continue;
                        r.at(i * b.rows_ + j, k * b.cols_ + l) = a.field_.mul(aik, bjl);
                    }
            }
        return r;
    }

    void set_block(std::size_t r0, std::size_t c0, const Mat& m) {
        if (r0 + m.rows_ > rows_ || c0 + m.cols_ > cols_)
            throw InternalError("set_block out of range");
        for (std::size_t i = 0; i < m.rows_; ++i)
            for (std::size_t j = 0; j < m.cols_; ++j) at(r0 + i, c0 + j) = m.at(i, j);
    }
    void add_block(std::size_t r0, std::size_t c0, const Mat& m) {
        if (r0 + m.rows_ > rows_ || c0 + m.cols_ > cols_)
            throw InternalError("add_block out of range");
        for (std::size_t i = 0; i < m.rows_; ++i)
            for (std::size_t j = 0; j < m.cols_; ++j)
                at(r0 + i, c0 + j) = field_.add(at(r0 + i, c0 + j), m.at(i, j));
    }
    Mat block(std::size_t r0, std::size_t c0, std::size_t r, std::size_t c) const {
        if (r0 + r > rows_ || c0 + c > cols_) throw InternalError("block out of range");
        Mat m(field_, r, c);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j) m.at(i, j) = at(r0 + i, c0 + j);
        return m;
    }

    static Mat hstack(const std::vector<Mat>& parts, F field, std::size_t rows) {
        std::size_t c = 0;
        for (const Mat& m : parts) c += m.cols();
        Mat r(field, rows, c);
        std::size_t off = 0;
        for (const Mat& m : parts) {
            if (m.rows() != rows) throw InternalError("hstack: row mismatch");
            r.set_block(0, off, m);
            off += m.cols();
        }
        return r;
    }

    std::string shape_str() const {
        std::ostringstream os;
        os << rows_ << "x" << cols_;
        return os.str();
    }

    std::string to_string() const {
        std::ostringstream os;
        os << "[";
        for (std::size_t i = 0; i < rows_; ++i) {
            if (i) os << "; ";
            for (std::size_t j = 0; j < cols_; ++j) {
                if (j) os << ",";
                os << field_.to_string(at(i, j));
            }
        }
        os << "]";
        return os.str();
    }

private:
    void require_same_shape(const Mat& o) const {
        if (!(field_ == o.field_) || rows_ != o.rows_ || cols_ != o.cols_)
            throw InputError("matrix shape/field mismatch");
    }

    F field_;
    std::size_t rows_, cols_;
    std::vector<Elem> a_;
};

// In-place reduced row echelon form. Pivot choice: scan columns left to right,
// take the first unused row with a nonzero entry. Returns the pivot columns.
template <class F>
std::vector<std::size_t> rref_in_place(Mat<F>& m) {
    const F& f = m.field();
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t sel = row;
        while (sel < m.rows() && f.is_zero(m.at(sel, col))) ++sel;
        if (sel == m.rows()) continue;
        if (sel != row)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(sel, j), m.at(row, j));
        // normalize pivot row
        typename F::Elem invp = f.inv(m.at(row, col));
        for (std::size_t j = col; j < m.cols(); ++j) m.at(row, j) = f.mul(m.at(row, j), invp);
        // eliminate the column everywhere else
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == row) continue;
            const typename F::Elem& v = m.at(i, col);
            if (f.is_zero(v)) continue;
            typename F::Elem factor = v;
            for (std::size_t j = col; j < m.cols(); ++j)
                m.at(i, j) = f.sub(m.at(i, j), f.mul(factor, m.at(row, j)));
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

template <class F>
std::size_t rank(Mat<F> m) {
    return rref_in_place(m).size();
}

// Canonical basis of the right kernel {v : m v = 0}, one column per free
// variable of the RREF, ordered by free column.
template <class F>
Mat<F> kernel_basis_mat(const Mat<F>& m) {
    Mat<F> r = m;
    std::vector<std::size_t> pivots = rref_in_place(r);
    const F& f = m.field();
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t p : pivots) is_pivot[p] = true;
    std::size_t nullity = m.cols() - pivots.size();
    Mat<F> k(f, m.cols(), nullity);
    std::size_t out = 0;
    for (std::size_t c = 0; c < m.cols(); ++c) {
        if (is_pivot[c]) continue;
        k.at(c, out) = f.one();
        for (std::size_t i = 0; i < pivots.size(); ++i)
            k.at(pivots[i], out) = f.neg(r.at(i, c));
        ++out;
    }
    return k;
}

// Particular solution X of A X = B (free variables set to zero), or nullopt
// when the system is inconsistent.
template <class F>
std::optional<Mat<F>> solve(const Mat<F>& a, const Mat<F>& b) {
    if (a.rows() != b.rows()) throw InputError("solve: row mismatch");
    const F& f = a.field();
    Mat<F> aug(f, a.rows(), a.cols() + b.cols());
    aug.set_block(0, 0, a);
    aug.set_block(0, a.cols(), b);
    std::vector<std::size_t> pivots = rref_in_place(aug);
    for (std::size_t p : pivots)
        if (p >= a.cols()) return std::nullopt;
    Mat<F> x(f, a.cols(), b.cols());
    for (std::size_t i = 0; i < pivots.size(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) x.at(pivots[i], j) = aug.at(i, a.cols() + j);
    return x;
}

// For a singular square matrix the augmented system M X = I is inconsistent
// (pivots land in the identity columns), so solve() already reports nullopt.
template <class F>
std::optional<Mat<F>> inverse(const Mat<F>& m) {
    if (m.rows() != m.cols()) return std::nullopt;
    return solve(m, Mat<F>::identity(m.field(), m.rows()));
}

} // namespace koszul

#endif
