#pragma once

#include "lieva/complex_matrix.hpp"
#include "lieva/matrix.hpp"
#include "lieva/norms.hpp"
#include "lieva/padic.hpp"
#include "lieva/rings.hpp"
#include "lieva/series.hpp"

#include "json.hpp"

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>

namespace lieva {

// Number of factors of p in n!, by Legendre's sum of floor(n / p^j). Strictly
// below n/(p-1) for n >= 1, which is what bounds |1/n!|_p in the exponential
// series.
inline std::uint64_t vp_factorial(std::uint64_t n, std::uint32_t p) {
    detail::check_prime_modulus(p);
    std::uint64_t acc = 0;
    for (std::uint64_t pw = p; pw <= n;) {
        acc += n / pw;
        if (pw > n / p) break;
        pw *= p;
    }
    return acc;
}

// ---------------------------------------------------------------------------
// Formal power series exponential
// ---------------------------------------------------------------------------

// exp(f) = sum_{m <= D} f^m / m! for f with zero constant term, over a
// characteristic-0 coefficient ring that admits the rationals 1/m!.
template <RingContext C>
    requires RationalEmbedRing<C>
PowerSeries<C> exp_series(const PowerSeries<C>& f) {
    if (f.ctx().characteristic() != 0)
        throw std::domain_error("exp_series: coefficients must have characteristic 0");
    if (!f.ctx().is_zero(f.constant_term()))
        throw std::domain_error("exp_series: constant term must vanish");
    const C& r = f.ctx();
    PowerSeries<C> acc = PowerSeries<C>::constant(r, f.nvars(), f.trunc(), r.one());
    PowerSeries<C> term = acc;
    for (long m = 1; m <= f.trunc(); ++m) {
        term = (term * f).scale_left(r.from_rational(BigRational(1, m)));
        if (term.is_zero()) break;
        acc = acc + term;
    }
    return acc;
}

// ---------------------------------------------------------------------------
// Floating complex matrix exponential
// ---------------------------------------------------------------------------

// Plain series summation in ascending order, stopping once the operator-norm
// tail bound ||A||^m / m! drops below 1e-16 * exp||A||. At desk scale
// (n <= 8, ||A|| <= 4) no scaling-and-squaring is needed.
inline ComplexMatrix exp_complex_matrix(const ComplexMatrix& a) {
    if (!a.is_finite())
        throw std::invalid_argument("exp_complex_matrix: entries must be finite");
    const double na = opnorm_inf(a);
    const double tail_goal = 1e-16 * std::exp(na);
    ComplexMatrix acc = ComplexMatrix::identity(a.dim());
    ComplexMatrix term = acc;
    double bound = 1.0;  // ||A||^m / m!
    for (std::size_t m = 1;; ++m) {
        term = (term * a).scaled(Cplx(1.0 / static_cast<double>(m), 0.0));
        acc = acc + term;
        bound *= na / static_cast<double>(m);
        if (bound < tail_goal) break;
        if (m > 1000) throw std::runtime_error("exp_complex_matrix: series did not converge");
    }
    if (!acc.is_finite()) throw std::runtime_error("exp_complex_matrix: overflow in summation");
    return acc;
}

// ---------------------------------------------------------------------------
// p-adic exponential
// ---------------------------------------------------------------------------

// exp(a) = sum a^m / m!, defined for |a|_p < p^{-1/(p-1)}. Norm values are
// integer powers of p, so the domain reads: valuation >= 1 for p > 2 and
// valuation >= 2 for p = 2. Terms beyond valuation N contribute nothing to
// the leading-digit window and stop the sum.
inline PadicScaled exp_padic(const PadicScaled& a) {
    const PadicField f(a.prime(), a.precision());
    if (a.is_zero()) return f.one();
    const long minval = (a.prime() == 2) ? 2 : 1;
    if (a.valuation() < minval)
        throw std::domain_error("exp_padic: argument outside the convergence domain");
    PadicScaled acc = f.one();
    PadicScaled term = f.one();
    const long cap = 64 * static_cast<long>(a.precision()) + 64;
    for (long m = 1; m <= cap; ++m) {
        term = term * a / f.from_int(m);
        if (term.is_zero() || term.valuation() > a.precision()) return acc;
        acc = acc + term;
    }
    throw std::logic_error("exp_padic: series failed to terminate");
}

// Matrix version; the domain condition uses the unweighted operator norm,
// which bounds every entry of every power of T.
inline Matrix<PadicField> exp_padic_matrix(const Matrix<PadicField>& t) {
    if (!t.is_square()) throw std::invalid_argument("exp_padic_matrix: matrix not square");
    const PadicField& f = t.ctx();
    const std::uint32_t p = f.prime();
    const long n = f.precision();
    const auto nrm = ultra_opnorm(t, WeightedUltraNorm::unweighted(p, t.rows())).value;
    if (!(nrm < UltraNorm::power(p, BigRational(-1, static_cast<long>(p - 1)))))
        throw std::domain_error("exp_padic_matrix: operator norm outside the convergence domain");
    Matrix<PadicField> acc = Matrix<PadicField>::identity(f, t.rows());
    Matrix<PadicField> term = acc;
    const long cap = 64 * n + 64;
    for (long m = 1; m <= cap; ++m) {
        term = mat_mul(term, t);
        const PadicScaled invm = f.inv(f.from_int(m));
        for (std::size_t i = 0; i < term.rows(); ++i)
            for (std::size_t j = 0; j < term.cols(); ++j)
                term.at(i, j) = term.at(i, j) * invm;
        // Entrywise convergence: an accumulator entry of valuation v keeps N
        // significant digits, so terms of valuation up to v + N still land in
        // its window even when that exceeds N itself.
        bool live = false;
        for (std::size_t i = 0; i < term.rows() && !live; ++i)
            for (std::size_t j = 0; j < term.cols() && !live; ++j) {
                const PadicScaled& e = term.at(i, j);
                if (e.is_zero()) continue;
                const PadicScaled& a = acc.at(i, j);
                if (a.is_zero() || e.valuation() <= a.valuation() + n) live = true;
            }
        if (!live) return acc;
        acc = acc + term;
    }
    throw std::logic_error("exp_padic_matrix: series failed to terminate");
}

// ---------------------------------------------------------------------------
// det(exp M) = exp(tr M), three calculi
// ---------------------------------------------------------------------------

struct ExpReport {
    std::string mode;  // "float" | "series" | "padic"
    std::string left;  // det(exp M)
    std::string right; // exp(tr M)
    std::optional<double> difference;  // float mode: |left - right|
    std::optional<bool> equal;         // exact modes: coefficient/digit equality
    std::map<std::string, std::string> params;

    bool pass(double float_tol = 1e-9) const {
        if (difference) return *difference <= float_tol;
        return equal.value_or(false);
    }
};

namespace detail {

inline std::string format_double(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

inline std::string format_complex(Cplx z) {
    if (z.imag() == 0.0) return format_double(z.real());
    return format_double(z.real()) + (z.imag() < 0 ? " - " : " + ") +
           format_double(std::abs(z.imag())) + "i";
}

}  // namespace detail

inline ExpReport det_exp_tr_report(const ComplexMatrix& m) {
    ExpReport r;
    r.mode = "float";
    const Cplx lhs = det(exp_complex_matrix(m));
    const Cplx rhs = std::exp(m.trace());
    r.left = detail::format_complex(lhs);
    r.right = detail::format_complex(rhs);
    r.difference = std::abs(lhs - rhs);
    r.params["n"] = std::to_string(m.dim());
    return r;
}

// Entrywise exponential series of a matrix whose entries all have zero
// constant term: orders grow with the power, so the sum is finite at D.
template <RingContext C>
    requires RationalEmbedRing<C>
Matrix<SeriesRing<C>> exp_series_matrix(const Matrix<SeriesRing<C>>& m) {
    if (!m.is_square()) throw std::invalid_argument("exp_series_matrix: matrix not square");
    const SeriesRing<C>& sr = m.ctx();
    if (!sr.commutative())
        throw std::domain_error("exp_series_matrix: coefficients must be commutative");
    if (sr.characteristic() != 0)
        throw std::domain_error("exp_series_matrix: coefficients must have characteristic 0");
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (!sr.coeff().is_zero(m.at(i, j).constant_term()))
                throw std::domain_error("exp_series_matrix: entries must have zero constant term");
    Matrix<SeriesRing<C>> acc = Matrix<SeriesRing<C>>::identity(sr, m.rows());
    Matrix<SeriesRing<C>> term = acc;
    for (long k = 1; k <= sr.trunc(); ++k) {
        term = mat_mul(term, m);
        const auto invk = sr.from_rational(BigRational(1, k));
        bool live = false;
        for (std::size_t i = 0; i < term.rows(); ++i)
            for (std::size_t j = 0; j < term.cols(); ++j) {
                term.at(i, j) = term.at(i, j) * invk;
                if (!term.at(i, j).is_zero()) live = true;
            }
        if (!live) break;
        acc = acc + term;
    }
    return acc;
}

// Series mode: det of the exponential matrix against the exponential of the
// trace series, compared coefficientwise through the shared truncation. The
// two sides go through independent code paths (matrix series + determinant
// vs scalar series exponential).
template <RingContext C>
    requires RationalEmbedRing<C>
ExpReport det_exp_tr_report(const Matrix<SeriesRing<C>>& m) {
    ExpReport r;
    r.mode = "series";
    const auto lhs = det(exp_series_matrix(m));
    const auto rhs = exp_series(trace(m));
    r.left = lhs.to_string();
    r.right = rhs.to_string();
    r.equal = (lhs == rhs);
    r.params["n"] = std::to_string(m.rows());
    r.params["truncation"] = std::to_string(m.ctx().trunc());
    return r;
}

inline ExpReport det_exp_tr_report(const Matrix<PadicField>& m) {
    ExpReport r;
    r.mode = "padic";
    const PadicScaled lhs = det(exp_padic_matrix(m));
    const PadicScaled rhs = exp_padic(trace(m));
    r.left = lhs.to_string();
    r.right = rhs.to_string();
    r.equal = (lhs == rhs);
    r.params["n"] = std::to_string(m.rows());
    r.params["prime"] = std::to_string(m.ctx().prime());
    r.params["precision"] = std::to_string(m.ctx().precision());
    return r;
}

inline nlohmann::json exp_report_json(const ExpReport& r) {
    nlohmann::json j{{"mode", r.mode}, {"left", r.left}, {"right", r.right},
                     {"params", r.params}};
    if (r.difference) j["difference"] = *r.difference;
    if (r.equal) j["equal"] = *r.equal;
    return j;
}

}  // namespace lieva
