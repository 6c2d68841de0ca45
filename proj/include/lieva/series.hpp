#pragma once

#include "lieva/polynomial.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace lieva {

// Formal power series truncated at a fixed total degree D: the quotient
// R[[t1..tn]] / (degree > D). Arithmetic is truncation-exact: every kept
// coefficient equals the corresponding coefficient of the exact series,
// because dropped terms can only influence degrees beyond D. Operands must
// carry the same D; mixing truncation orders is an error, not a coercion.
template <RingContext C>
class PowerSeries {
public:
    using Element = typename C::Element;

    PowerSeries(Polynomial<C> body, long trunc)
        : body_(body.truncate(trunc)), trunc_(trunc) {
        if (trunc < 0) throw std::invalid_argument("PowerSeries: negative truncation order");
    }

    static PowerSeries zero(const C& ctx, std::size_t nvars, long trunc) {
        return PowerSeries(Polynomial<C>(ctx, nvars), trunc);
    }
    static PowerSeries constant(const C& ctx, std::size_t nvars, long trunc, Element c) {
        return PowerSeries(Polynomial<C>::constant(ctx, nvars, std::move(c)), trunc);
    }
    static PowerSeries variable(const C& ctx, std::size_t nvars, long trunc, std::size_t var) {
        return PowerSeries(Polynomial<C>::variable(ctx, nvars, var), trunc);
    }

    const Polynomial<C>& body() const { return body_; }
    long trunc() const { return trunc_; }
    const C& ctx() const { return body_.ctx(); }
    std::size_t nvars() const { return body_.nvars(); }
    bool is_zero() const { return body_.is_zero(); }
    Element coeff(const MultiIndex& m) const { return body_.coeff(m); }
    Element constant_term() const { return body_.constant_term(); }

    PowerSeries operator+(const PowerSeries& o) const {
        aligned(o);
        return PowerSeries(body_ + o.body_, trunc_);
    }
    PowerSeries operator-(const PowerSeries& o) const {
        aligned(o);
        return PowerSeries(body_ - o.body_, trunc_);
    }
    PowerSeries operator-() const { return PowerSeries(-body_, trunc_); }
    PowerSeries operator*(const PowerSeries& o) const {
        aligned(o);
        return PowerSeries(body_ * o.body_, trunc_);
    }

    PowerSeries scale_left(const Element& c) const { return PowerSeries(body_.scale_left(c), trunc_); }
    PowerSeries scale_right(const Element& c) const { return PowerSeries(body_.scale_right(c), trunc_); }

    // Multiplicative inverse when the constant term is a unit. Writing
    // f = c * (e - p) with p of zero constant term, the geometric sum
    // sum_{j<=D} p^j inverts (e - p) exactly through degree D, and the unit
    // constant c is peeled off on the outside (order matters when the
    // coefficient ring does not commute).
    PowerSeries inverse() const
        requires InvertibilityRing<C>
    {
        const C& r = ctx();
        const Element c = constant_term();
        if (!r.is_invertible(c))
            throw std::domain_error("PowerSeries: constant term is not a unit");
        const Element cinv = r.inv(c);
        const PowerSeries e = constant(r, nvars(), trunc_, r.one());
        const PowerSeries p = e - scale_left(cinv);
        PowerSeries acc = e, pow = e;
        for (long j = 1; j <= trunc_; ++j) {
            pow = pow * p;
            if (pow.is_zero()) break;
            acc = acc + pow;
        }
        return acc.scale_right(cinv);
    }

    // Coefficientwise involution; the monomials are fixed points.
    template <typename Fn>
    PowerSeries star(Fn&& fn) const {
        return PowerSeries(body_.map_coeffs(std::forward<Fn>(fn)), trunc_);
    }

    bool operator==(const PowerSeries& o) const {
        aligned(o);
        return body_ == o.body_;
    }
    bool operator!=(const PowerSeries& o) const { return !(*this == o); }

    std::string to_string() const { return body_.to_string(); }

private:
    void aligned(const PowerSeries& o) const {
        if (trunc_ != o.trunc_)
            throw std::invalid_argument("PowerSeries: mixed truncation orders");
        if (nvars() != o.nvars() || !ctx().matches(o.ctx()))
            throw std::invalid_argument("PowerSeries: mixed series rings");
    }

    Polynomial<C> body_;
    long trunc_;
};

template <RingContext C>
struct SeriesRing {
    using Element = PowerSeries<C>;
    static constexpr bool is_field = false;

    SeriesRing(C coeff, std::size_t nvars, long trunc)
        : coeff_(std::move(coeff)), nvars_(nvars), trunc_(trunc) {
        if (trunc < 0) throw std::invalid_argument("SeriesRing: negative truncation order");
    }

    const C& coeff() const { return coeff_; }
    std::size_t nvars() const { return nvars_; }
    long trunc() const { return trunc_; }

    Element zero() const { return Element::zero(coeff_, nvars_, trunc_); }
    Element one() const { return Element::constant(coeff_, nvars_, trunc_, coeff_.one()); }
    Element add(const Element& a, const Element& b) const { return a + b; }
    Element sub(const Element& a, const Element& b) const { return a - b; }
    Element neg(const Element& a) const { return -a; }
    Element mul(const Element& a, const Element& b) const { return a * b; }
    bool is_zero(const Element& a) const { return a.is_zero(); }
    bool equal(const Element& a, const Element& b) const { return a == b; }
    Element from_int(std::int64_t n) const {
        return Element::constant(coeff_, nvars_, trunc_, coeff_.from_int(n));
    }
    Element from_rational(const BigRational& q) const
        requires RationalEmbedRing<C>
    {
        return Element::constant(coeff_, nvars_, trunc_, coeff_.from_rational(q));
    }
    // A truncated series is a unit exactly when its constant term is.
    bool is_invertible(const Element& a) const
        requires InvertibilityRing<C>
    {
        return coeff_.is_invertible(a.constant_term());
    }
    Element inv(const Element& a) const
        requires InvertibilityRing<C>
    {
        return a.inverse();
    }
    Element exact_div(const Element& a, const Element& b) const
        requires InvertibilityRing<C>
    {
        return a * b.inverse();
    }
    bool commutative() const { return coeff_.commutative(); }
    std::int64_t characteristic() const { return coeff_.characteristic(); }
    std::string to_string(const Element& a) const { return a.to_string(); }
    bool matches(const SeriesRing& o) const {
        return nvars_ == o.nvars_ && trunc_ == o.trunc_ && coeff_.matches(o.coeff_);
    }

private:
    C coeff_;
    std::size_t nvars_;
    long trunc_;
};

} // namespace lieva
