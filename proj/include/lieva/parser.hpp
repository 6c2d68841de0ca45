#pragma once

#include "lieva/padic.hpp"
#include "lieva/polynomial.hpp"
#include "lieva/quaternion.hpp"
#include "lieva/rings.hpp"

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace lieva {

// Syntax error carrying the 0-based offset of the offending character.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& msg, std::size_t position)
        : std::runtime_error(msg + " at position " + std::to_string(position)), pos_(position) {}
    std::size_t position() const { return pos_; }

private:
    std::size_t pos_;
};

namespace detail {

class Cursor {
public:
    explicit Cursor(const std::string& s) : s_(s) {}

    bool at_end() const { return pos_ >= s_.size(); }
    char peek() const { return at_end() ? '\0' : s_[pos_]; }
    std::size_t pos() const { return pos_; }

    void advance() { ++pos_; }

    void skip_ws() {
        while (!at_end() && (s_[pos_] == ' ' || s_[pos_] == '\t')) ++pos_;
    }

    bool try_eat(char c) {
        if (peek() != c) return false;
        advance();
        return true;
    }

    void expect(char c) {
        if (!try_eat(c)) fail(std::string("expected '") + c + "'");
    }

    void expect_keyword(const std::string& kw) {
        for (char c : kw) expect(c);
    }

    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

    std::string digits() {
        const std::size_t start = pos_;
        while (!at_end() && s_[pos_] >= '0' && s_[pos_] <= '9') ++pos_;
        if (pos_ == start) fail("expected digits");
        return s_.substr(start, pos_ - start);
    }

    void require_end() {
        skip_ws();
        if (!at_end()) fail("trailing characters");
    }

private:
    const std::string& s_;
    std::size_t pos_ = 0;
};

// rational := ["-"] digits ["/" digits], denominator nonzero
inline BigRational rational(Cursor& c) {
    c.skip_ws();
    const bool neg = c.try_eat('-');
    c.skip_ws();
    const BigInt num(c.digits());
    BigInt den(1);
    if (c.try_eat('/')) {
        const std::size_t den_pos = c.pos();
        den = BigInt(c.digits());
        if (den == 0) throw ParseError("zero denominator", den_pos);
    }
    const BigRational r{num, den};
    return neg ? -r : r;
}

// unsigned rational for use after an explicit sign character
inline BigRational unsigned_rational(Cursor& c) {
    const BigInt num(c.digits());
    BigInt den(1);
    if (c.try_eat('/')) {
        const std::size_t den_pos = c.pos();
        den = BigInt(c.digits());
        if (den == 0) throw ParseError("zero denominator", den_pos);
    }
    return {num, den};
}

inline std::uint32_t small_uint(Cursor& c, const char* what) {
    const std::size_t start = c.pos();
    const std::string d = c.digits();
    if (d.size() > 10) throw ParseError(std::string(what) + " out of range", start);
    const unsigned long long v = std::stoull(d);
    if (v > 0x7fffffffULL) throw ParseError(std::string(what) + " out of range", start);
    return static_cast<std::uint32_t>(v);
}

// quaternion := rational sign rational "i" sign rational "j" sign rational "k"
inline Quaternion quaternion(Cursor& c) {
    const BigRational a = rational(c);
    BigRational comp[3];
    const char units[3] = {'i', 'j', 'k'};
    for (int u = 0; u < 3; ++u) {
        c.skip_ws();
        bool neg;
        if (c.try_eat('+')) neg = false;
        else if (c.try_eat('-')) neg = true;
        else c.fail("expected '+' or '-'");
        c.skip_ws();
        const BigRational v = unsigned_rational(c);
        c.expect(units[u]);
        comp[u] = neg ? -v : v;
    }
    return {a, comp[0], comp[1], comp[2]};
}

// padic := "padic(" rational ";" uint "," uint ")"
inline PadicScaled padic(Cursor& c) {
    c.skip_ws();
    c.expect_keyword("padic(");
    const BigRational x = rational(c);
    c.skip_ws();
    c.expect(';');
    c.skip_ws();
    const std::uint32_t p = small_uint(c, "prime");
    c.skip_ws();
    c.expect(',');
    c.skip_ws();
    const std::size_t prec_pos = c.pos();
    const std::uint32_t n = small_uint(c, "precision");
    if (n == 0 || n > 4096) throw ParseError("precision out of range", prec_pos);
    c.skip_ws();
    c.expect(')');
    return padic_of_rational(x, p, static_cast<int>(n));
}

// factor := "t" digits ["^" digits]; returns (variable index 0-based, exponent)
inline std::pair<std::uint32_t, std::uint32_t> poly_factor(Cursor& c) {
    c.expect('t');
    const std::size_t var_pos = c.pos();
    const std::uint32_t var = small_uint(c, "variable index");
    if (var == 0 || var > 64) throw ParseError("variable index out of range", var_pos);
    std::uint32_t exp = 1;
    if (c.try_eat('^')) exp = small_uint(c, "exponent");
    return {var - 1, exp};
}

struct PolyTerm {
    BigRational coef;
    std::map<std::uint32_t, std::uint32_t> exps;
};

// term := rational ["*" factor ("*" factor)*] | factor ("*" factor)*
inline PolyTerm poly_term(Cursor& c, bool negated) {
    PolyTerm t;
    t.coef = BigRational(1);
    c.skip_ws();
    bool have_factors = false;
    if (c.peek() == 't') {
        have_factors = true;
    } else {
        t.coef = unsigned_rational(c);
        if (c.try_eat('*')) {
            c.skip_ws();
            have_factors = true;
        }
    }
    if (have_factors) {
        while (true) {
            const auto [var, exp] = poly_factor(c);
            t.exps[var] += exp;
            if (!c.try_eat('*')) break;
            c.skip_ws();
        }
    }
    if (negated) t.coef = -t.coef;
    return t;
}

}  // namespace detail

inline BigRational parse_rational(const std::string& text) {
    detail::Cursor c(text);
    const BigRational r = detail::rational(c);
    c.require_end();
    return r;
}

inline Quaternion parse_quaternion(const std::string& text) {
    detail::Cursor c(text);
    const Quaternion q = detail::quaternion(c);
    c.require_end();
    return q;
}

inline PadicScaled parse_padic(const std::string& text) {
    detail::Cursor c(text);
    const PadicScaled x = detail::padic(c);
    c.require_end();
    return x;
}

// Polynomials over the rationals in variables t1, t2, ...; the variable count
// of the result is the largest index mentioned (at least 1).
inline Polynomial<RationalField> parse_polynomial(const std::string& text) {
    detail::Cursor c(text);
    std::vector<detail::PolyTerm> terms;
    c.skip_ws();
    bool negated = c.try_eat('-');
    terms.push_back(detail::poly_term(c, negated));
    while (true) {
        c.skip_ws();
        if (c.try_eat('+')) negated = false;
        else if (c.try_eat('-')) negated = true;
        else break;
        terms.push_back(detail::poly_term(c, negated));
    }
    c.require_end();

    // Every mentioned variable widens the ring, exponent zero included.
    std::size_t nvars = 1;
    for (const auto& t : terms)
        for (const auto& [var, exp] : t.exps)
            if (var + 1 > nvars) nvars = var + 1;

    const RationalField q;
    Polynomial<RationalField> result(q, nvars);
    for (const auto& t : terms) {
        std::vector<std::uint32_t> exps(nvars, 0);
        for (const auto& [var, exp] : t.exps) exps[var] += exp;
        result = result + Polynomial<RationalField>::monomial(q, MultiIndex(std::move(exps)), t.coef);
    }
    return result;
}

// Scalar or polynomial literal with the kind inferred from the text: p-adic
// literals start with "padic(", quaternions contain a unit letter, and
// polynomials mention a variable; everything else is a rational.
using ParsedScalar = std::variant<BigRational, PadicScaled, Quaternion, Polynomial<RationalField>>;

inline ParsedScalar parse_scalar_expr(const std::string& text) {
    std::size_t first = text.find_first_not_of(" \t");
    if (first == std::string::npos) throw ParseError("empty expression", 0);
    if (text.compare(first, 6, "padic(") == 0) return parse_padic(text);
    for (char ch : text) {
        if (ch == 'i' || ch == 'j' || ch == 'k') return parse_quaternion(text);
    }
    for (char ch : text) {
        if (ch == 't') return parse_polynomial(text);
    }
    return parse_rational(text);
}

}  // namespace lieva
