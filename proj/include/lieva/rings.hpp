#pragma once

#include "lieva/padic.hpp"
#include "lieva/prime_field.hpp"
#include "lieva/quaternion.hpp"
#include "lieva/rational.hpp"

#include <concepts>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace lieva {

// Coefficient rings are passed around as small context objects. An element by
// itself cannot produce zero or one of a runtime-parameterized ring (F_p needs
// p, Q_p needs p and N), so generic containers carry the context that made
// their entries. Contexts are immutable descriptors; matches() tells whether
// two contexts denote the same ring.
template <typename R>
concept RingContext =
    std::copy_constructible<R> &&
    requires(const R& r, const typename R::Element& a, const typename R::Element& b) {
        typename R::Element;
        { r.zero() } -> std::same_as<typename R::Element>;
        { r.one() } -> std::same_as<typename R::Element>;
        { r.add(a, b) } -> std::same_as<typename R::Element>;
        { r.sub(a, b) } -> std::same_as<typename R::Element>;
        { r.neg(a) } -> std::same_as<typename R::Element>;
        { r.mul(a, b) } -> std::same_as<typename R::Element>;
        { r.is_zero(a) } -> std::same_as<bool>;
        { r.equal(a, b) } -> std::same_as<bool>;
        { r.from_int(std::int64_t(0)) } -> std::same_as<typename R::Element>;
        { r.commutative() } -> std::same_as<bool>;
        { r.characteristic() } -> std::same_as<std::int64_t>;
        { r.to_string(a) } -> std::same_as<std::string>;
        { r.matches(r) } -> std::same_as<bool>;
    };

// Rings that can decide invertibility and invert units (fields, division
// rings, and Z with units +-1).
template <typename R>
concept InvertibilityRing = RingContext<R> &&
    requires(const R& r, const typename R::Element& a) {
        { r.is_invertible(a) } -> std::same_as<bool>;
        { r.inv(a) } -> std::same_as<typename R::Element>;
    };

// Every nonzero element invertible and multiplication commutative.
template <typename R>
concept FieldContext = InvertibilityRing<R> && requires { requires R::is_field; };

// exact_div(a, b) with the promise that b divides a exactly (as in
// fraction-free elimination); implementations may throw if it does not.
template <typename R>
concept ExactDivRing = RingContext<R> &&
    requires(const R& r, const typename R::Element& a, const typename R::Element& b) {
        { r.exact_div(a, b) } -> std::same_as<typename R::Element>;
    };

// Characteristic-zero rings with a canonical image of Q (needed by the
// exponential series for the 1/m! factors).
template <typename R>
concept RationalEmbedRing = RingContext<R> &&
    requires(const R& r, const BigRational& q) {
        { r.from_rational(q) } -> std::same_as<typename R::Element>;
    };

struct RationalField {
    using Element = BigRational;
    static constexpr bool is_field = true;

    Element zero() const { return BigRational(0); }
    Element one() const { return BigRational(1); }
    Element add(const Element& a, const Element& b) const { return a + b; }
    Element sub(const Element& a, const Element& b) const { return a - b; }
    Element neg(const Element& a) const { return -a; }
    Element mul(const Element& a, const Element& b) const { return a * b; }
    Element inv(const Element& a) const { return a.inverse(); }
    Element exact_div(const Element& a, const Element& b) const { return a / b; }
    bool is_invertible(const Element& a) const { return !a.is_zero(); }
    bool is_zero(const Element& a) const { return a.is_zero(); }
    bool equal(const Element& a, const Element& b) const { return a == b; }
    Element from_int(std::int64_t n) const { return BigRational(BigInt(n)); }
    Element from_rational(const BigRational& q) const { return q; }
    bool commutative() const { return true; }
    std::int64_t characteristic() const { return 0; }
    std::string to_string(const Element& a) const { return a.to_string(); }
    bool matches(const RationalField&) const { return true; }
};

struct IntegerRing {
    using Element = BigInt;
    static constexpr bool is_field = false;

    Element zero() const { return BigInt(0); }
    Element one() const { return BigInt(1); }
    Element add(const Element& a, const Element& b) const { return a + b; }
    Element sub(const Element& a, const Element& b) const { return a - b; }
    Element neg(const Element& a) const { return -a; }
    Element mul(const Element& a, const Element& b) const { return a * b; }
    bool is_invertible(const Element& a) const { return a == 1 || a == -1; }
    Element inv(const Element& a) const {
        if (!is_invertible(a)) throw std::domain_error("integers: only units are +-1");
        return a;
    }
    Element exact_div(const Element& a, const Element& b) const {
        if (b == 0 || !mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t()))
            throw std::domain_error("integers: inexact division");
        BigInt q;
        mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
        return q;
    }
    bool is_zero(const Element& a) const { return a == 0; }
    bool equal(const Element& a, const Element& b) const { return a == b; }
    Element from_int(std::int64_t n) const { return BigInt(n); }
    bool commutative() const { return true; }
    std::int64_t characteristic() const { return 0; }
    std::string to_string(const Element& a) const { return a.get_str(); }
    bool matches(const IntegerRing&) const { return true; }
};

struct PrimeField {
    using Element = PrimeFieldElement;
    static constexpr bool is_field = true;

    explicit PrimeField(std::uint32_t p) : p_(p) { detail::check_prime_modulus(p); }
    std::uint32_t prime() const { return p_; }

    Element zero() const { return Element(p_, 0); }
    Element one() const { return Element(p_, 1); }
    Element add(const Element& a, const Element& b) const { return a + b; }
    Element sub(const Element& a, const Element& b) const { return a - b; }
    Element neg(const Element& a) const { return -a; }
    Element mul(const Element& a, const Element& b) const { return a * b; }
    Element inv(const Element& a) const { return a.inverse(); }
    Element exact_div(const Element& a, const Element& b) const { return a / b; }
    bool is_invertible(const Element& a) const { return !a.is_zero(); }
    bool is_zero(const Element& a) const { return a.is_zero(); }
    bool equal(const Element& a, const Element& b) const { return a == b; }
    Element from_int(std::int64_t n) const { return Element(p_, n % p_); }
    // Defined only for denominators prime to p.
    Element from_rational(const BigRational& q) const {
        BigInt n = q.num() % p_, d = q.den() % p_;
        if (d == 0) throw std::domain_error("prime field: denominator divisible by p");
        Element num(p_, n.get_si()), den(p_, d.get_si());
        return num / den;
    }
    bool commutative() const { return true; }
    std::int64_t characteristic() const { return p_; }
    std::string to_string(const Element& a) const { return a.to_string(); }
    bool matches(const PrimeField& o) const { return p_ == o.p_; }

private:
    std::uint32_t p_;
};

struct PadicField {
    using Element = PadicScaled;
    static constexpr bool is_field = true;

    PadicField(std::uint32_t p, int precision) : p_(p), n_(precision) {
        detail::check_prime_modulus(p);
        if (precision < 1) throw std::invalid_argument("padic field: precision must be >= 1");
    }
    std::uint32_t prime() const { return p_; }
    int precision() const { return n_; }

    Element zero() const { return PadicScaled::zero(p_, n_); }
    Element one() const { return PadicScaled::make(p_, n_, 0, 1); }
    Element add(const Element& a, const Element& b) const { return a + b; }
    Element sub(const Element& a, const Element& b) const { return a - b; }
    Element neg(const Element& a) const { return -a; }
    Element mul(const Element& a, const Element& b) const { return a * b; }
    Element inv(const Element& a) const { return a.inverse(); }
    Element exact_div(const Element& a, const Element& b) const { return a / b; }
    bool is_invertible(const Element& a) const { return !a.is_zero(); }
    bool is_zero(const Element& a) const { return a.is_zero(); }
    bool equal(const Element& a, const Element& b) const { return a == b; }
    Element from_int(std::int64_t n) const { return padic_of_rational(BigRational(BigInt(n)), p_, n_); }
    Element from_rational(const BigRational& q) const { return padic_of_rational(q, p_, n_); }
    bool commutative() const { return true; }
    std::int64_t characteristic() const { return 0; }
    std::string to_string(const Element& a) const { return a.to_string(); }
    bool matches(const PadicField& o) const { return p_ == o.p_ && n_ == o.n_; }

private:
    std::uint32_t p_;
    int n_;
};

struct QuaternionRing {
    using Element = Quaternion;
    static constexpr bool is_field = false; // division ring, not commutative

    Element zero() const { return Quaternion(); }
    Element one() const { return Quaternion(1); }
    Element add(const Element& a, const Element& b) const { return a + b; }
    Element sub(const Element& a, const Element& b) const { return a - b; }
    Element neg(const Element& a) const { return -a; }
    Element mul(const Element& a, const Element& b) const { return a * b; }
    Element inv(const Element& a) const { return a.inverse(); }
    bool is_invertible(const Element& a) const { return !a.is_zero(); }
    bool is_zero(const Element& a) const { return a.is_zero(); }
    bool equal(const Element& a, const Element& b) const { return a == b; }
    Element from_int(std::int64_t n) const { return Quaternion(BigRational(BigInt(n))); }
    Element from_rational(const BigRational& q) const { return Quaternion(q); }
    bool commutative() const { return false; }
    std::int64_t characteristic() const { return 0; }
    std::string to_string(const Element& a) const { return a.to_string(); }
    bool matches(const QuaternionRing&) const { return true; }
};

// Runtime tag for the scalar field of a structure-constant table or suite.
struct FieldDescriptor {
    enum class Tag { rationals, prime_field, padic };

    static FieldDescriptor rationals() { return {Tag::rationals, 0, 0}; }
    static FieldDescriptor prime_field(std::uint32_t p) {
        detail::check_prime_modulus(p);
        return {Tag::prime_field, p, 0};
    }
    static FieldDescriptor padic(std::uint32_t p, int precision) {
        detail::check_prime_modulus(p);
        if (precision < 1) throw std::invalid_argument("field descriptor: precision must be >= 1");
        return {Tag::padic, p, precision};
    }

    Tag tag;
    std::uint32_t p;
    int precision;

    bool operator==(const FieldDescriptor&) const = default;

    std::string to_string() const {
        switch (tag) {
            case Tag::rationals: return "rational";
            case Tag::prime_field: return "fp(" + std::to_string(p) + ")";
            default: return "padic(" + std::to_string(p) + ", " + std::to_string(precision) + ")";
        }
    }
};

// The rationals and every Q_p contain Q, so their characteristic is 0; only
// the finite fields have characteristic p.
inline std::int64_t field_characteristic(const FieldDescriptor& f) {
    return f.tag == FieldDescriptor::Tag::prime_field ? std::int64_t(f.p) : 0;
}

} // namespace lieva
