#pragma once
// Dense square/rectangular matrices over the rings of ring_core and over the integers.

#include "chevalley/ring_core.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace chevalley {

// Integer matrix used for the structure-constant layer.
struct IntMatrix {
    int rows = 0, cols = 0;
    std::vector<long long> a;

    IntMatrix() = default;
    IntMatrix(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c, 0) {}
    static IntMatrix identity(int n) {
        IntMatrix m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    long long& operator()(int i, int j) { return a[static_cast<std::size_t>(i) * cols + j]; }
    long long operator()(int i, int j) const { return a[static_cast<std::size_t>(i) * cols + j]; }

    friend IntMatrix operator*(const IntMatrix& x, const IntMatrix& y) {
        IntMatrix r(x.rows, y.cols);
        for (int i = 0; i < x.rows; ++i)
            for (int k = 0; k < x.cols; ++k) {
                long long v = x(i, k);
                if (v == 0) continue;
                for (int j = 0; j < y.cols; ++j) r(i, j) += v * y(k, j);
            }
        return r;
    }
    friend IntMatrix operator+(IntMatrix x, const IntMatrix& y) {
        for (std::size_t i = 0; i < x.a.size(); ++i) x.a[i] += y.a[i];
        return x;
    }
    friend IntMatrix operator-(IntMatrix x, const IntMatrix& y) {
        for (std::size_t i = 0; i < x.a.size(); ++i) x.a[i] -= y.a[i];
        return x;
    }
    friend IntMatrix operator*(long long k, IntMatrix x) {
        for (auto& v : x.a) v *= k;
        return x;
    }
    friend bool operator==(const IntMatrix& x, const IntMatrix& y) {
        return x.rows == y.rows && x.cols == y.cols && x.a == y.a;
    }
    bool is_zero() const {
        for (long long v : a)
            if (v != 0) return false;
        return true;
    }
};

template <LocalRing R>
class Matrix {
public:
    using Ring = R;
    using Context = typename R::Context;

    Matrix() = default;
    Matrix(const Context& ctx, int rows, int cols)
        : ctx_(ctx), rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols, ctx.zero()) {}

    static Matrix identity(const Context& ctx, int n) {
        Matrix m(ctx, n, n);
        for (int i = 0; i < n; ++i) m(i, i) = ctx.one();
        return m;
    }
    static Matrix from_int(const Context& ctx, const IntMatrix& im) {
        Matrix m(ctx, im.rows, im.cols);
        for (int i = 0; i < im.rows; ++i)
            for (int j = 0; j < im.cols; ++j)
                if (im(i, j) != 0) m(i, j) = ctx.from_int(im(i, j));
        return m;
    }
    static Matrix unit(const Context& ctx, int n, int i, int j) {
        Matrix m(ctx, n, n);
        m(i, j) = ctx.one();
        return m;
    }

    const Context& context() const { return ctx_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }

    R& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
    const R& operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }

    friend Matrix operator+(const Matrix& x, const Matrix& y) {
        x.check_shape(y);
        Matrix r = x;
        for (std::size_t i = 0; i < r.a_.size(); ++i) r.a_[i] = x.a_[i] + y.a_[i];
        return r;
    }
    friend Matrix operator-(const Matrix& x, const Matrix& y) {
        x.check_shape(y);
        Matrix r = x;
        for (std::size_t i = 0; i < r.a_.size(); ++i) r.a_[i] = x.a_[i] - y.a_[i];
        return r;
    }
    Matrix operator-() const {
        Matrix r = *this;
        for (auto& v : r.a_) v = -v;
        return r;
    }
    friend Matrix operator*(const R& k, const Matrix& x) {
        Matrix r = x;
        for (auto& v : r.a_)
            if (!v.is_zero()) v = k * v;
        return r;
    }
    friend Matrix operator*(const Matrix& x, const Matrix& y) {
        if (x.cols_ != y.rows_) throw InvalidArgument("matrix shapes do not compose");
        if (!(x.ctx_ == y.ctx_)) throw ContextMismatch(x.ctx_.name() + " vs " + y.ctx_.name());
        // nonzero pattern of y's rows; products here are very sparse
        std::vector<std::vector<int>> nz(y.rows_);
        for (int k = 0; k < y.rows_; ++k)
            for (int j = 0; j < y.cols_; ++j)
                if (!y(k, j).is_zero()) nz[k].push_back(j);
        Matrix r(x.ctx_, x.rows_, y.cols_);
        for (int i = 0; i < x.rows_; ++i)
            for (int k = 0; k < x.cols_; ++k) {
                const R& v = x(i, k);
                if (v.is_zero()) continue;
                for (int j : nz[k]) r(i, j) += v * y(k, j);
            }
        return r;
    }
    Matrix& operator+=(const Matrix& o) { return *this = *this + o; }
    Matrix& operator-=(const Matrix& o) { return *this = *this - o; }
    Matrix& operator*=(const Matrix& o) { return *this = *this * o; }

    friend bool operator==(const Matrix& x, const Matrix& y) {
        return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.ctx_ == y.ctx_ && x.a_ == y.a_;
    }

    bool is_zero() const {
        for (const auto& v : a_)
            if (!v.is_zero()) return false;
        return true;
    }
    bool is_identity() const { return *this == identity(ctx_, rows_); }
    bool congruent_to_identity() const {
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) {
                const R& v = (*this)(i, j);
                if (i == j ? !(v - ctx_.one()).in_radical() : !v.in_radical()) return false;
            }
        return true;
    }
    std::size_t nonzeros() const {
        std::size_t n = 0;
        for (const auto& v : a_) n += !v.is_zero();
        return n;
    }

    template <class F>
    auto map(F&& f, const auto& target_ctx) const {
        using T = std::decay_t<decltype(f(a_.front()))>;
        Matrix<T> out(target_ctx, rows_, cols_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) out(i, j) = f((*this)(i, j));
        return out;
    }
    auto residue() const {
        return map([](const R& v) { return v.residue(); }, ctx_.residue_context());
    }

    Matrix transpose() const {
        Matrix t(ctx_, cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    // Gauss-Jordan with unit pivots; a matrix over a local ring is invertible
    // iff every column offers a unit pivot.
    Matrix inverse() const {
        if (rows_ != cols_) throw InvalidArgument("inverse of a non-square matrix");
        int n = rows_;
        Matrix a = *this, inv = identity(ctx_, n);
        for (int c = 0; c < n; ++c) {
            int piv = -1;
            for (int r = c; r < n; ++r)
                if (a(r, c).is_unit()) {
                    piv = r;
                    break;
                }
            if (piv < 0) throw NonUnit("matrix is not invertible over " + ctx_.name());
            if (piv != c) {
                a.swap_rows(piv, c);
                inv.swap_rows(piv, c);
            }
            R s = a(c, c).inverse();
            a.scale_row(c, s);
            inv.scale_row(c, s);
            for (int r = 0; r < n; ++r) {
                if (r == c || a(r, c).is_zero()) continue;
                R f = a(r, c);
                a.axpy_row(r, c, f);
                inv.axpy_row(r, c, f);
            }
        }
        return inv;
    }

    R det() const {
        if (rows_ != cols_) throw InvalidArgument("det of a non-square matrix");
        int n = rows_;
        Matrix a = *this;
        R d = ctx_.one();
        for (int c = 0; c < n; ++c) {
            int piv = -1;
            for (int r = c; r < n; ++r)
                if (a(r, c).is_unit()) {
                    piv = r;
                    break;
                }
            if (piv < 0) return det_division_free();
            if (piv != c) {
                a.swap_rows(piv, c);
                d = -d;
            }
            d = d * a(c, c);
            R s = a(c, c).inverse();
            for (int r = c + 1; r < n; ++r) {
                if (a(r, c).is_zero()) continue;
                a.axpy_row(r, c, a(r, c) * s);
            }
        }
        return d;
    }

    std::vector<std::vector<std::string>> to_strings() const {
        std::vector<std::vector<std::string>> out(rows_, std::vector<std::string>(cols_));
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) out[i][j] = (*this)(i, j).to_string();
        return out;
    }

private:
    void check_shape(const Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) throw InvalidArgument("matrix shapes differ");
        if (!(ctx_ == o.ctx_)) throw ContextMismatch(ctx_.name() + " vs " + o.ctx_.name());
    }
    void swap_rows(int i, int j) {
        for (int c = 0; c < cols_; ++c) std::swap((*this)(i, c), (*this)(j, c));
    }
    void scale_row(int i, const R& s) {
        for (int c = 0; c < cols_; ++c)
            if (!(*this)(i, c).is_zero()) (*this)(i, c) = s * (*this)(i, c);
    }
    // row_i -= f * row_j
    void axpy_row(int i, int j, const R& f) {
        for (int c = 0; c < cols_; ++c)
            if (!(*this)(j, c).is_zero()) (*this)(i, c) -= f * (*this)(j, c);
    }
    // Bird's algorithm; used only when no unit pivot exists (det in J).
    R det_division_free() const {
        int n = rows_;
        Matrix x = *this;
        for (int k = 1; k < n; ++k) {
            Matrix mu(ctx_, n, n);
            R acc = ctx_.zero();
            for (int i = n - 1; i >= 0; --i) {
                mu(i, i) = -acc;
                acc += x(i, i);
                for (int j = i + 1; j < n; ++j) mu(i, j) = x(i, j);
            }
            x = mu * *this;
        }
        return n % 2 == 1 ? x(0, 0) : -x(0, 0);
    }

    Context ctx_{};
    int rows_ = 0, cols_ = 0;
    std::vector<R> a_;
};

}  // namespace chevalley
