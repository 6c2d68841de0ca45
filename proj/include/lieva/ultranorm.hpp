#pragma once

#include "lieva/padic.hpp"
#include "lieva/rational.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace lieva {

// Exact value of an ultrametric norm: either 0 or p^q with rational exponent
// q. Kept symbolic so norm laws (multiplicativity, the strong triangle
// inequality, weighted operator norms with exponents like -1/n) check exactly
// instead of through floating point.
class UltraNorm {
public:
    static UltraNorm zero(std::uint32_t p) { return UltraNorm(p, std::nullopt); }
    static UltraNorm one(std::uint32_t p) { return UltraNorm(p, BigRational(0)); }
    static UltraNorm power(std::uint32_t p, BigRational q) { return UltraNorm(p, std::move(q)); }

    std::uint32_t prime() const { return p_; }
    bool is_zero() const { return !q_.has_value(); }
    const BigRational& exponent() const {
        if (is_zero()) throw std::domain_error("UltraNorm: zero has no exponent");
        return *q_;
    }

    UltraNorm operator*(const UltraNorm& o) const {
        same_prime(o);
        if (is_zero() || o.is_zero()) return zero(p_);
        return power(p_, *q_ + *o.q_);
    }
    UltraNorm operator/(const UltraNorm& o) const {
        same_prime(o);
        if (o.is_zero()) throw std::domain_error("UltraNorm: division by zero norm");
        if (is_zero()) return zero(p_);
        return power(p_, *q_ - *o.q_);
    }

    // p > 1, so p^a < p^b exactly when a < b; zero is below everything else.
    bool operator<(const UltraNorm& o) const {
        same_prime(o);
        if (is_zero()) return !o.is_zero();
        if (o.is_zero()) return false;
        return *q_ < *o.q_;
    }
    bool operator==(const UltraNorm& o) const {
        same_prime(o);
        if (is_zero() || o.is_zero()) return is_zero() && o.is_zero();
        return *q_ == *o.q_;
    }
    bool operator!=(const UltraNorm& o) const { return !(*this == o); }
    bool operator<=(const UltraNorm& o) const { return *this < o || *this == o; }
    bool operator>(const UltraNorm& o) const { return o < *this; }
    bool operator>=(const UltraNorm& o) const { return o <= *this; }

    std::string to_string() const {
        if (is_zero()) return "0";
        if (q_->is_zero()) return "1";
        return std::to_string(p_) + "^(" + q_->to_string() + ")";
    }

private:
    UltraNorm(std::uint32_t p, std::optional<BigRational> q) : p_(p), q_(std::move(q)) {
        detail::check_prime_modulus(p_);
    }
    void same_prime(const UltraNorm& o) const {
        if (p_ != o.p_) throw std::invalid_argument("UltraNorm: mixed primes");
    }

    std::uint32_t p_;
    std::optional<BigRational> q_;
};

inline UltraNorm max(const UltraNorm& a, const UltraNorm& b) { return a < b ? b : a; }

// |x|_p = p^(-v) where v is the p-adic valuation of x; |0|_p = 0.
inline UltraNorm padic_abs(const BigRational& x, std::uint32_t p) {
    if (x.is_zero()) return UltraNorm::zero(p);
    return UltraNorm::power(p, BigRational(-padic_valuation(x, p)));
}

// A value that vanished at working precision has no knowable digits; its norm
// is reported as 0 together with the exact zero's.
inline UltraNorm padic_abs(const PadicScaled& x) {
    if (x.is_zero()) return UltraNorm::zero(x.prime());
    return UltraNorm::power(x.prime(), BigRational(-x.valuation()));
}

} // namespace lieva
