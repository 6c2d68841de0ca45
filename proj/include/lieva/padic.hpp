#pragma once

#include "lieva/prime_field.hpp"
#include "lieva/rational.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace lieva {

inline long padic_valuation(BigInt n, std::uint32_t p) {
    if (n == 0) throw std::domain_error("padic_valuation: zero has no finite valuation");
    long v = 0;
    while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
        mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
        ++v;
    }
    return v;
}

inline long padic_valuation(const BigRational& x, std::uint32_t p) {
    return padic_valuation(x.num(), p) - padic_valuation(x.den(), p);
}

// Modular inverse by extended Euclid. Requires gcd(a, m) = 1 and m > 1.
inline BigInt mod_inverse(const BigInt& a, const BigInt& m) {
    BigInt r0 = a % m, r1 = m;
    if (r0 < 0) r0 += m;
    BigInt s0 = 1, s1 = 0;
    while (r1 != 0) {
        BigInt q = r0 / r1;
        BigInt t = r0 - q * r1;
        r0 = std::move(r1);
        r1 = std::move(t);
        t = s0 - q * s1;
        s0 = std::move(s1);
        s1 = std::move(t);
    }
    if (r0 != 1) throw std::domain_error("mod_inverse: arguments not coprime");
    s0 %= m;
    if (s0 < 0) s0 += m;
    return s0;
}

// p-adic number at fixed relative precision: N significant p-adic digits.
// A nonzero value is p^v * u with 0 < u < p^N and p not dividing u. Exact
// zero is distinguished from "zero at precision N", which records that a sum
// cancelled below the representable digits; both behave as additive zero and
// neither is invertible.
//
// Addition aligns operands at the smaller valuation and reduces mod p^N
// there, so a cancellation of w digits silently leaves the top w digits of
// the stored mantissa unspecified-but-deterministic. Multiplication is exact
// on valuations and loses nothing.
class PadicScaled {
public:
    static PadicScaled zero(std::uint32_t p, int precision) {
        return PadicScaled(p, precision, State::exact_zero, 0, 1);
    }
    static PadicScaled zero_at_precision(std::uint32_t p, int precision) {
        return PadicScaled(p, precision, State::vanished, 0, 1);
    }
    static PadicScaled make(std::uint32_t p, int precision, long valuation, BigInt unit) {
        PadicScaled x(p, precision, State::nonzero, valuation, 1);
        unit %= x.pn_;
        if (unit < 0) unit += x.pn_;
        if (unit == 0 || mpz_divisible_ui_p(unit.get_mpz_t(), p))
            throw std::invalid_argument("PadicScaled: unit mantissa must be coprime to p");
        x.u_ = std::move(unit);
        return x;
    }

    std::uint32_t prime() const { return p_; }
    int precision() const { return n_; }
    bool is_zero() const { return state_ != State::nonzero; }
    bool is_exact_zero() const { return state_ == State::exact_zero; }
    bool is_zero_at_precision() const { return state_ == State::vanished; }

    long valuation() const {
        if (is_zero()) throw std::domain_error("PadicScaled: valuation of zero");
        return v_;
    }
    const BigInt& unit() const {
        if (is_zero()) throw std::domain_error("PadicScaled: unit of zero");
        return u_;
    }

    PadicScaled operator-() const {
        if (is_zero()) return *this;
        return PadicScaled(p_, n_, State::nonzero, v_, pn_ - u_);
    }

    PadicScaled operator+(const PadicScaled& o) const {
        same_prime(o);
        const int n = std::min(n_, o.n_);
        if (is_zero() || o.is_zero()) {
            const PadicScaled& z = is_zero() ? *this : o;
            const PadicScaled& x = is_zero() ? o : *this;
            if (x.is_zero())
                return (z.is_exact_zero() && x.is_exact_zero()) ? zero(p_, n)
                                                                : zero_at_precision(p_, n);
            return x.truncated(n);
        }
        const long v = std::min(v_, o.v_);
        const BigInt pn = pow_pn(p_, n);
        BigInt s = aligned_mantissa(v, n) + o.aligned_mantissa(v, n);
        s %= pn;
        if (s == 0) return zero_at_precision(p_, n);
        long w = padic_valuation(s, p_);
        BigInt u = s;
        if (w > 0) {
            BigInt pw;
            mpz_ui_pow_ui(pw.get_mpz_t(), p_, static_cast<unsigned long>(w));
            mpz_divexact(u.get_mpz_t(), u.get_mpz_t(), pw.get_mpz_t());
        }
        return PadicScaled(p_, n, State::nonzero, v + w, std::move(u));
    }

    PadicScaled operator-(const PadicScaled& o) const { return *this + (-o); }

    PadicScaled operator*(const PadicScaled& o) const {
        same_prime(o);
        const int n = std::min(n_, o.n_);
        if (is_exact_zero() || o.is_exact_zero()) return zero(p_, n);
        if (is_zero() || o.is_zero()) return zero_at_precision(p_, n);
        BigInt u = u_ * o.u_ % pow_pn(p_, n);
        return PadicScaled(p_, n, State::nonzero, v_ + o.v_, std::move(u));
    }

    PadicScaled inverse() const {
        if (is_exact_zero()) throw std::domain_error("PadicScaled: inverse of zero");
        if (is_zero_at_precision())
            throw std::domain_error("PadicScaled: inverse of a value that vanished at this precision");
        return PadicScaled(p_, n_, State::nonzero, -v_, mod_inverse(u_, pn_));
    }

    PadicScaled operator/(const PadicScaled& o) const { return *this * o.inverse(); }

    // Equality at the coarser of the two precisions: both zero kinds are
    // additive zero and compare equal; nonzero values must agree in valuation
    // and in all min(Na, Nb) mantissa digits.
    bool operator==(const PadicScaled& o) const {
        same_prime(o);
        if (is_zero() || o.is_zero()) return is_zero() && o.is_zero();
        if (v_ != o.v_) return false;
        const BigInt pn = pow_pn(p_, std::min(n_, o.n_));
        return (u_ - o.u_) % pn == 0;
    }
    bool operator!=(const PadicScaled& o) const { return !(*this == o); }

    // Exact rational value of the stored approximation, u * p^v.
    BigRational to_rational() const {
        if (is_zero()) return BigRational(0);
        BigInt pv;
        mpz_ui_pow_ui(pv.get_mpz_t(), p_, static_cast<unsigned long>(v_ < 0 ? -v_ : v_));
        return v_ >= 0 ? BigRational(BigInt(u_ * pv)) : BigRational(u_, pv);
    }

    std::string to_string() const {
        return "padic(" + to_rational().to_string() + "; " + std::to_string(p_) + ", " +
               std::to_string(n_) + ")";
    }

private:
    enum class State { exact_zero, vanished, nonzero };

    PadicScaled(std::uint32_t p, int precision, State st, long v, BigInt u)
        : p_(p), n_(precision), state_(st), v_(v), u_(std::move(u)) {
        detail::check_prime_modulus(p_);
        if (n_ < 1) throw std::invalid_argument("PadicScaled: precision must be >= 1");
        pn_ = pow_pn(p_, n_);
    }

    static BigInt pow_pn(std::uint32_t p, int n) {
        BigInt r;
        mpz_ui_pow_ui(r.get_mpz_t(), p, static_cast<unsigned long>(n));
        return r;
    }

    void same_prime(const PadicScaled& o) const {
        if (p_ != o.p_) throw std::invalid_argument("PadicScaled: mixed primes");
    }

    // Mantissa shifted from valuation v_ down to alignment level v <= v_,
    // reduced mod p^n.
    BigInt aligned_mantissa(long v, int n) const {
        BigInt pn = pow_pn(p_, n);
        long shift = v_ - v;
        if (shift >= n) return BigInt(0);
        BigInt ps;
        mpz_ui_pow_ui(ps.get_mpz_t(), p_, static_cast<unsigned long>(shift));
        return u_ * ps % pn;
    }

    PadicScaled truncated(int n) const {
        if (n == n_) return *this;
        if (is_exact_zero()) return zero(p_, n);
        if (is_zero_at_precision()) return zero_at_precision(p_, n);
        return PadicScaled(p_, n, State::nonzero, v_, u_ % pow_pn(p_, n));
    }

    std::uint32_t p_;
    int n_;
    State state_;
    long v_;
    BigInt u_;
    BigInt pn_;
};

inline PadicScaled padic_of_rational(const BigRational& x, std::uint32_t p, int precision) {
    if (x.is_zero()) return PadicScaled::zero(p, precision);
    BigInt num = x.num(), den = x.den();
    const long v = padic_valuation(num, p) - padic_valuation(den, p);
    // padic_valuation stripped nothing from the caller's copy, so strip here.
    BigInt pm;
    while (mpz_divisible_ui_p(num.get_mpz_t(), p)) mpz_divexact_ui(num.get_mpz_t(), num.get_mpz_t(), p);
    while (mpz_divisible_ui_p(den.get_mpz_t(), p)) mpz_divexact_ui(den.get_mpz_t(), den.get_mpz_t(), p);
    mpz_ui_pow_ui(pm.get_mpz_t(), p, static_cast<unsigned long>(precision));
    BigInt u = num % pm * mod_inverse(den, pm) % pm;
    if (u < 0) u += pm;
    return PadicScaled::make(p, precision, v, std::move(u));
}

} // namespace lieva
