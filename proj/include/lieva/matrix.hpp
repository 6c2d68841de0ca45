#pragma once

#include "lieva/rings.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace lieva {

// Dense matrix over a coefficient ring context, row-major. Entry order in
// products follows the ring: a[r][k] * b[k][c], which matters over
// noncommutative coefficients (quaternions, matrices of matrices).
template <RingContext C>
class Matrix {
public:
    using Element = typename C::Element;

    Matrix(C ctx, std::size_t rows, std::size_t cols)
        : ctx_(std::move(ctx)), rows_(rows), cols_(cols), a_(rows * cols, ctx_.zero()) {}

    static Matrix identity(const C& ctx, std::size_t n) {
        Matrix m(ctx, n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = ctx.one();
        return m;
    }

    const C& ctx() const { return ctx_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    const Element& at(std::size_t r, std::size_t c) const { return a_.at(r * cols_ + c); }
    Element& at(std::size_t r, std::size_t c) { return a_.at(r * cols_ + c); }

    Matrix operator+(const Matrix& o) const {
        same_shape(o);
        Matrix r(*this);
        for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = ctx_.add(a_[i], o.a_[i]);
        return r;
    }
    Matrix operator-(const Matrix& o) const {
        same_shape(o);
        Matrix r(*this);
        for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = ctx_.sub(a_[i], o.a_[i]);
        return r;
    }
    Matrix operator-() const {
        Matrix r(*this);
        for (auto& x : r.a_) x = ctx_.neg(x);
        return r;
    }

    Matrix operator*(const Matrix& o) const {
        if (cols_ != o.rows_ || !ctx_.matches(o.ctx_))
            throw std::invalid_argument("Matrix: product shape mismatch");
        Matrix r(ctx_, rows_, o.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const Element& aik = at(i, k);
                if (ctx_.is_zero(aik)) continue;
                for (std::size_t j = 0; j < o.cols_; ++j)
                    r.at(i, j) = ctx_.add(r.at(i, j), ctx_.mul(aik, o.at(k, j)));
            }
        return r;
    }

    Matrix scale_left(const Element& c) const {
        Matrix r(*this);
        for (auto& x : r.a_) x = ctx_.mul(c, x);
        return r;
    }
    Matrix scale_right(const Element& c) const {
        Matrix r(*this);
        for (auto& x : r.a_) x = ctx_.mul(x, c);
        return r;
    }

    Matrix transpose() const {
        Matrix r(ctx_, cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
        return r;
    }

    bool operator==(const Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_ || !ctx_.matches(o.ctx_)) return false;
        for (std::size_t i = 0; i < a_.size(); ++i)
            if (!ctx_.equal(a_[i], o.a_[i])) return false;
        return true;
    }
    bool operator!=(const Matrix& o) const { return !(*this == o); }

    bool is_zero() const {
        for (const auto& x : a_)
            if (!ctx_.is_zero(x)) return false;
        return true;
    }

    std::string to_string() const {
        std::string s = "[";
        for (std::size_t i = 0; i < rows_; ++i) {
            s += i ? ",[" : "[";
            for (std::size_t j = 0; j < cols_; ++j) {
                if (j) s += ",";
                s += ctx_.to_string(at(i, j));
            }
            s += "]";
        }
        return s + "]";
    }

private:
    void same_shape(const Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_ || !ctx_.matches(o.ctx_))
            throw std::invalid_argument("Matrix: shape mismatch");
    }

    C ctx_;
    std::size_t rows_, cols_;
    std::vector<Element> a_;
};

template <RingContext C>
Matrix<C> mat_mul(const Matrix<C>& a, const Matrix<C>& b) {
    return a * b;
}

// y = Ax with the matrix acting from the left.
template <RingContext C>
std::vector<typename C::Element> mat_apply(const Matrix<C>& m,
                                           const std::vector<typename C::Element>& x) {
    if (x.size() != m.cols()) throw std::invalid_argument("mat_apply: length mismatch");
    const C& r = m.ctx();
    std::vector<typename C::Element> y(m.rows(), r.zero());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) y[i] = r.add(y[i], r.mul(m.at(i, j), x[j]));
    return y;
}

template <RingContext C>
typename C::Element trace(const Matrix<C>& m) {
    if (!m.is_square()) throw std::invalid_argument("trace: matrix not square");
    auto t = m.ctx().zero();
    for (std::size_t i = 0; i < m.rows(); ++i) t = m.ctx().add(t, m.at(i, i));
    return t;
}

namespace detail {

template <RingContext C>
typename C::Element det_cofactor(const Matrix<C>& m) {
    const C& r = m.ctx();
    const std::size_t n = m.rows();
    if (n == 1) return m.at(0, 0);
    auto acc = r.zero();
    for (std::size_t j = 0; j < n; ++j) {
        if (r.is_zero(m.at(0, j))) continue;
        Matrix<C> minor(r, n - 1, n - 1);
        for (std::size_t i = 1; i < n; ++i)
            for (std::size_t k = 0, c = 0; k < n; ++k) {
                if (k == j) continue;
                minor.at(i - 1, c++) = m.at(i, k);
            }
        const auto term = r.mul(m.at(0, j), det_cofactor(minor));
        acc = (j % 2 == 0) ? r.add(acc, term) : r.sub(acc, term);
    }
    return acc;
}

// Fraction-free Bareiss elimination; every division is exact over an
// integral domain. Row swaps flip the sign.
template <ExactDivRing C>
typename C::Element det_bareiss(Matrix<C> m) {
    const C& r = m.ctx();
    const std::size_t n = m.rows();
    auto prev = r.one();
    bool negate = false;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        std::size_t sel = k;
        while (sel < n && r.is_zero(m.at(sel, k))) ++sel;
        if (sel == n) return r.zero();
        if (sel != k) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m.at(sel, j), m.at(k, j));
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                auto num = r.sub(r.mul(m.at(i, j), m.at(k, k)), r.mul(m.at(i, k), m.at(k, j)));
                m.at(i, j) = r.exact_div(num, prev);
            }
        prev = m.at(k, k);
    }
    const auto d = m.at(n - 1, n - 1);
    return negate ? r.neg(d) : d;
}

} // namespace detail

// Cofactor expansion through n = 4, fraction-free elimination for 5..12.
// Determinants over noncommutative coefficient rings are not defined here.
template <RingContext C>
typename C::Element det(const Matrix<C>& m) {
    if (!m.is_square()) throw std::invalid_argument("det: matrix not square");
    if (!m.ctx().commutative())
        throw std::domain_error("det: unsupported over a noncommutative ring");
    const std::size_t n = m.rows();
    if (n == 0) return m.ctx().one();
    if (n <= 4) return detail::det_cofactor(m);
    if (n <= 12) {
        if constexpr (ExactDivRing<C>) {
            return detail::det_bareiss(m);
        } else {
            throw std::domain_error("det: ring does not support exact division");
        }
    }
    throw std::invalid_argument("det: dimension above the supported bound of 12");
}

// A square matrix over a commutative ring is invertible exactly when its
// determinant is a unit of the ring.
template <InvertibilityRing C>
bool is_invertible_mat(const Matrix<C>& m) {
    return m.ctx().is_invertible(det(m));
}

template <RingContext C>
Matrix<C> gl_bracket(const Matrix<C>& a, const Matrix<C>& b) {
    if (!a.is_square() || a.rows() != b.rows())
        throw std::invalid_argument("gl_bracket: need square matrices of equal size");
    return a * b - b * a;
}

// Membership in sl_n: vanishing trace.
template <RingContext C>
bool sl_member(const Matrix<C>& m) {
    return m.ctx().is_zero(trace(m));
}

// Transpose with an entrywise involution, (j,l) -> star(a[l][j]).
template <RingContext C, typename Star>
Matrix<C> conj_transpose(const Matrix<C>& m, Star&& star) {
    Matrix<C> r(m.ctx(), m.cols(), m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r.at(j, i) = star(m.at(i, j));
    return r;
}

// Antisymmetric with respect to the involution: m* = -m.
template <RingContext C, typename Star>
bool is_antisymmetric(const Matrix<C>& m, Star&& star) {
    return conj_transpose(m, std::forward<Star>(star)) == -m;
}

template <RingContext C>
Matrix<C> mat_pow(const Matrix<C>& m, unsigned e) {
    if (!m.is_square()) throw std::invalid_argument("mat_pow: matrix not square");
    Matrix<C> acc = Matrix<C>::identity(m.ctx(), m.rows());
    Matrix<C> base = m;
    while (e) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

// n x n matrices as a coefficient ring (noncommutative for n >= 2), so
// polynomials and series can carry matrix coefficients.
template <RingContext C>
struct MatrixRing {
    using Element = Matrix<C>;
    static constexpr bool is_field = false;

    MatrixRing(C entry, std::size_t n) : entry_(std::move(entry)), n_(n) {}

    const C& entry() const { return entry_; }
    std::size_t n() const { return n_; }

    Element zero() const { return Element(entry_, n_, n_); }
    Element one() const { return Element::identity(entry_, n_); }
    Element add(const Element& a, const Element& b) const { return a + b; }
    Element sub(const Element& a, const Element& b) const { return a - b; }
    Element neg(const Element& a) const { return -a; }
    Element mul(const Element& a, const Element& b) const { return a * b; }
    bool is_zero(const Element& a) const { return a.is_zero(); }
    bool equal(const Element& a, const Element& b) const { return a == b; }
    Element from_int(std::int64_t k) const { return one().scale_left(entry_.from_int(k)); }
    Element from_rational(const BigRational& q) const
        requires RationalEmbedRing<C>
    {
        return one().scale_left(entry_.from_rational(q));
    }
    bool commutative() const { return n_ <= 1 && entry_.commutative(); }
    std::int64_t characteristic() const { return entry_.characteristic(); }
    std::string to_string(const Element& a) const { return a.to_string(); }
    bool matches(const MatrixRing& o) const { return n_ == o.n_ && entry_.matches(o.entry_); }

private:
    C entry_;
    std::size_t n_;
};

} // namespace lieva
