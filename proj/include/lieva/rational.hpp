#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace lieva {

using BigInt = mpz_class;

// Exact rational scalar, always in canonical form: gcd(num, den) = 1 and
// den > 0, with zero stored as 0/1. mpq_class preserves canonical form under
// arithmetic, so the constructors are the only places that canonicalize.
class BigRational {
public:
    BigRational() : v_(0) {}
    BigRational(long n) : v_(n) {}
    BigRational(const BigInt& n) : v_(n) {}
    BigRational(const BigInt& num, const BigInt& den) {
        if (den == 0) throw std::domain_error("BigRational: zero denominator");
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }
    BigRational(long num, long den) : BigRational(BigInt(num), BigInt(den)) {}

    const BigInt num() const { return v_.get_num(); }
    const BigInt den() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    BigRational operator-() const { return BigRational(mpq_class(-v_)); }
    BigRational operator+(const BigRational& o) const { return BigRational(mpq_class(v_ + o.v_)); }
    BigRational operator-(const BigRational& o) const { return BigRational(mpq_class(v_ - o.v_)); }
    BigRational operator*(const BigRational& o) const { return BigRational(mpq_class(v_ * o.v_)); }
    BigRational operator/(const BigRational& o) const {
        if (o.is_zero()) throw std::domain_error("BigRational: division by zero");
        return BigRational(mpq_class(v_ / o.v_));
    }
    BigRational& operator+=(const BigRational& o) { v_ += o.v_; return *this; }
    BigRational& operator-=(const BigRational& o) { v_ -= o.v_; return *this; }
    BigRational& operator*=(const BigRational& o) { v_ *= o.v_; return *this; }

    bool operator==(const BigRational& o) const { return v_ == o.v_; }
    bool operator!=(const BigRational& o) const { return v_ != o.v_; }
    bool operator<(const BigRational& o) const { return v_ < o.v_; }
    bool operator<=(const BigRational& o) const { return v_ <= o.v_; }
    bool operator>(const BigRational& o) const { return v_ > o.v_; }
    bool operator>=(const BigRational& o) const { return v_ >= o.v_; }

    BigRational inverse() const {
        if (is_zero()) throw std::domain_error("BigRational: inverse of zero");
        return BigRational(den(), num());
    }

    BigRational abs() const { return sign() < 0 ? -*this : *this; }

    BigRational pow_int(long e) const {
        if (e < 0) return inverse().pow_int(-e);
        mpz_class n, d;
        mpz_pow_ui(n.get_mpz_t(), v_.get_num().get_mpz_t(), static_cast<unsigned long>(e));
        mpz_pow_ui(d.get_mpz_t(), v_.get_den().get_mpz_t(), static_cast<unsigned long>(e));
        return BigRational(n, d);
    }

    // Canonical text form: "n" for integers, "n/d" otherwise.
    std::string to_string() const {
        if (is_integer()) return v_.get_num().get_str();
        return v_.get_num().get_str() + "/" + v_.get_den().get_str();
    }

    double to_double() const { return v_.get_d(); }

private:
    explicit BigRational(const mpq_class& q) : v_(q) {}
    mpq_class v_;
};

inline BigRational operator*(long n, const BigRational& q) { return BigRational(n) * q; }

} // namespace lieva
