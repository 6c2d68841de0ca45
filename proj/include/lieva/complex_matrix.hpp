#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace lieva {

using Cplx = std::complex<double>;

// Square matrix of double-precision complex entries. Used by the floating
// point side of the norm and exponential routines; the exact side lives in
// Matrix<C>.
class ComplexMatrix {
public:
    explicit ComplexMatrix(std::size_t n) : n_(n), a_(n * n, Cplx(0.0, 0.0)) {
        if (n == 0) throw std::invalid_argument("ComplexMatrix: dimension must be positive");
    }

    static ComplexMatrix identity(std::size_t n) {
        ComplexMatrix m(n);
        for (std::size_t j = 0; j < n; ++j) m.at(j, j) = Cplx(1.0, 0.0);
        return m;
    }

    std::size_t dim() const { return n_; }
    Cplx& at(std::size_t j, std::size_t l) { return a_.at(j * n_ + l); }
    const Cplx& at(std::size_t j, std::size_t l) const { return a_.at(j * n_ + l); }

    bool is_finite() const {
        for (const Cplx& z : a_)
            if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
        return true;
    }

    ComplexMatrix operator+(const ComplexMatrix& o) const {
        same_dim(o);
        ComplexMatrix r(n_);
        for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] = a_[k] + o.a_[k];
        return r;
    }
    ComplexMatrix operator-(const ComplexMatrix& o) const {
        same_dim(o);
        ComplexMatrix r(n_);
        for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] = a_[k] - o.a_[k];
        return r;
    }
    ComplexMatrix operator*(const ComplexMatrix& o) const {
        same_dim(o);
        ComplexMatrix r(n_);
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t k = 0; k < n_; ++k) {
                const Cplx aik = at(i, k);
                if (aik == Cplx(0.0, 0.0)) continue;
                for (std::size_t j = 0; j < n_; ++j) r.at(i, j) += aik * o.at(k, j);
            }
        return r;
    }
    ComplexMatrix scaled(Cplx c) const {
        ComplexMatrix r(n_);
        for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] = c * a_[k];
        return r;
    }
    ComplexMatrix conj_transpose() const {
        ComplexMatrix r(n_);
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j) r.at(j, i) = std::conj(at(i, j));
        return r;
    }

    Cplx trace() const {
        Cplx t(0.0, 0.0);
        for (std::size_t j = 0; j < n_; ++j) t += at(j, j);
        return t;
    }

private:
    void same_dim(const ComplexMatrix& o) const {
        if (n_ != o.n_) throw std::invalid_argument("ComplexMatrix: dimension mismatch");
    }

    std::size_t n_;
    std::vector<Cplx> a_;
};

// Operator norm induced by the max norm on vectors: the largest row sum of
// entry moduli. Exactly computable, unlike the spectral norm.
inline double opnorm_inf(const ComplexMatrix& m) {
    double best = 0.0;
    for (std::size_t i = 0; i < m.dim(); ++i) {
        double row = 0.0;
        for (std::size_t j = 0; j < m.dim(); ++j) row += std::abs(m.at(i, j));
        if (row > best) best = row;
    }
    return best;
}

inline double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("max_abs_diff: dimension mismatch");
    double best = 0.0;
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j)
            best = std::max(best, std::abs(a.at(i, j) - b.at(i, j)));
    return best;
}

// Gaussian elimination with partial pivoting on a working copy; solves
// a * X = b. Singular (to machine precision) systems are rejected.
inline ComplexMatrix solve(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("solve: dimension mismatch");
    const std::size_t n = a.dim();
    ComplexMatrix u = a, x = b;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        for (std::size_t r = col + 1; r < n; ++r)
            if (std::abs(u.at(r, col)) > std::abs(u.at(piv, col))) piv = r;
        if (std::abs(u.at(piv, col)) == 0.0) throw std::domain_error("solve: singular matrix");
        if (piv != col)
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(u.at(piv, j), u.at(col, j));
                std::swap(x.at(piv, j), x.at(col, j));
            }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col) continue;
            const Cplx f = u.at(r, col) / u.at(col, col);
            if (f == Cplx(0.0, 0.0)) continue;
            for (std::size_t j = col; j < n; ++j) u.at(r, j) -= f * u.at(col, j);
            for (std::size_t j = 0; j < n; ++j) x.at(r, j) -= f * x.at(col, j);
        }
    }
    for (std::size_t r = 0; r < n; ++r) {
        const Cplx d = u.at(r, r);
        for (std::size_t j = 0; j < n; ++j) x.at(r, j) /= d;
    }
    return x;
}

// Determinant via the same pivoted elimination; sign tracks row swaps.
inline Cplx det(const ComplexMatrix& m) {
    const std::size_t n = m.dim();
    ComplexMatrix u = m;
    Cplx d(1.0, 0.0);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        for (std::size_t r = col + 1; r < n; ++r)
            if (std::abs(u.at(r, col)) > std::abs(u.at(piv, col))) piv = r;
        if (std::abs(u.at(piv, col)) == 0.0) return Cplx(0.0, 0.0);
        if (piv != col) {
            d = -d;
            for (std::size_t j = col; j < n; ++j) std::swap(u.at(piv, j), u.at(col, j));
        }
        d *= u.at(col, col);
        for (std::size_t r = col + 1; r < n; ++r) {
            const Cplx f = u.at(r, col) / u.at(col, col);
            for (std::size_t j = col; j < n; ++j) u.at(r, j) -= f * u.at(col, j);
        }
    }
    return d;
}

}  // namespace lieva
