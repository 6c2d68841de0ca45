#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace lieva {

namespace detail {

inline std::uint64_t powmod_u64(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
    std::uint64_t acc = 1 % mod;
    base %= mod;
    while (exp) {
        if (exp & 1) acc = acc * base % mod; // operands < 2^32, product fits
        base = base * base % mod;
        exp >>= 1;
    }
    return acc;
}

} // namespace detail

// Deterministic Miller-Rabin. The witness set {2, 7, 61} is exact for every
// n < 4759123141, which covers the full 32-bit range.
inline bool is_prime_u32(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint32_t q : {2u, 3u, 5u, 7u, 11u, 13u}) {
        if (n == q) return true;
        if (n % q == 0) return false;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    for (std::uint64_t a : {2ULL, 7ULL, 61ULL}) {
        if (a % n == 0) continue;
        std::uint64_t x = detail::powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = x * x % n;
            if (x == n - 1) { composite = false; break; }
        }
        if (composite) return false;
    }
    return true;
}

namespace detail {

// One-slot memo so element construction does not re-run Miller-Rabin on the
// same modulus millions of times. Per-thread, so no data races.
inline void check_prime_modulus(std::uint32_t p) {
    thread_local std::uint32_t last_ok = 0;
    if (p == last_ok) return;
    if (p >= (1u << 31)) throw std::domain_error("prime field: modulus must be < 2^31");
    if (!is_prime_u32(p)) throw std::domain_error("prime field: modulus " + std::to_string(p) + " is not prime");
    last_ok = p;
}

} // namespace detail

// Element of F_p for a prime p < 2^31, stored as the residue in [0, p).
class PrimeFieldElement {
public:
    PrimeFieldElement(std::uint32_t p, std::int64_t value) : p_(p) {
        detail::check_prime_modulus(p);
        std::int64_t r = value % static_cast<std::int64_t>(p);
        if (r < 0) r += p;
        r_ = static_cast<std::uint32_t>(r);
    }

    std::uint32_t modulus() const { return p_; }
    std::uint32_t residue() const { return r_; }
    bool is_zero() const { return r_ == 0; }

    PrimeFieldElement operator+(const PrimeFieldElement& o) const {
        same_field(o);
        std::uint32_t s = r_ + o.r_;
        if (s >= p_) s -= p_;
        return raw(p_, s);
    }
    PrimeFieldElement operator-(const PrimeFieldElement& o) const {
        same_field(o);
        return raw(p_, r_ >= o.r_ ? r_ - o.r_ : r_ + p_ - o.r_);
    }
    PrimeFieldElement operator-() const { return raw(p_, r_ == 0 ? 0 : p_ - r_); }
    PrimeFieldElement operator*(const PrimeFieldElement& o) const {
        same_field(o);
        return raw(p_, static_cast<std::uint32_t>(std::uint64_t(r_) * o.r_ % p_));
    }
    PrimeFieldElement operator/(const PrimeFieldElement& o) const { return *this * o.inverse(); }

    // Extended Euclid on (r, p); r coprime to the prime modulus when nonzero.
    PrimeFieldElement inverse() const {
        if (r_ == 0) throw std::domain_error("prime field: inverse of zero");
        std::int64_t t = 0, t1 = 1;
        std::int64_t a = p_, b = r_;
        while (b != 0) {
            std::int64_t q = a / b;
            std::int64_t tmp = t - q * t1;
            t = t1; t1 = tmp;
            tmp = a - q * b;
            a = b; b = tmp;
        }
        if (t < 0) t += p_;
        return raw(p_, static_cast<std::uint32_t>(t));
    }

    bool operator==(const PrimeFieldElement& o) const { return p_ == o.p_ && r_ == o.r_; }
    bool operator!=(const PrimeFieldElement& o) const { return !(*this == o); }

    std::string to_string() const { return std::to_string(r_); }

private:
    static PrimeFieldElement raw(std::uint32_t p, std::uint32_t r) {
        PrimeFieldElement e;
        e.p_ = p; e.r_ = r;
        return e;
    }
    PrimeFieldElement() : p_(0), r_(0) {}
    void same_field(const PrimeFieldElement& o) const {
        if (p_ != o.p_) throw std::invalid_argument("prime field: mixed moduli");
    }

    std::uint32_t p_, r_;
};

} // namespace lieva
