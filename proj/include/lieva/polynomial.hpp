#pragma once

#include "lieva/multi_index.hpp"
#include "lieva/rings.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace lieva {

namespace detail {

// A coefficient needs parentheses inside "c*t1^2" when it carries its own
// top-level arithmetic, e.g. a quaternion "1+2i+0j+0k". Function-call forms
// like "padic(-1/3; 5, 4)" keep their signs at bracket depth >= 1.
inline bool needs_parens(const std::string& s) {
    int depth = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        const char c = s[i];
        if (c == '(' || c == '[' || c == '{') ++depth;
        else if (c == ')' || c == ']' || c == '}') --depth;
        else if (depth == 0 && i > 0 && (c == '+' || c == '-' || c == '*' || c == ' ')) return true;
    }
    return false;
}

} // namespace detail

// Sparse multivariate polynomial over a coefficient ring context. The
// indeterminates are central: they commute with every coefficient even when
// the coefficient ring itself does not commute. No zero coefficient is ever
// stored, and terms iterate in graded lexicographic order.
template <RingContext C>
class Polynomial {
public:
    using Element = typename C::Element;
    using TermMap = std::map<MultiIndex, Element, GradedLexLess>;

    Polynomial(C ctx, std::size_t nvars) : ctx_(std::move(ctx)), nvars_(nvars) {}

    static Polynomial constant(const C& ctx, std::size_t nvars, Element c) {
        Polynomial p(ctx, nvars);
        p.add_term(MultiIndex(nvars), std::move(c));
        return p;
    }
    static Polynomial variable(const C& ctx, std::size_t nvars, std::size_t var) {
        if (var >= nvars) throw std::invalid_argument("Polynomial: variable index out of range");
        Polynomial p(ctx, nvars);
        p.add_term(MultiIndex::unit(nvars, var), ctx.one());
        return p;
    }
    static Polynomial monomial(const C& ctx, MultiIndex m, Element c) {
        Polynomial p(ctx, m.nvars());
        p.add_term(std::move(m), std::move(c));
        return p;
    }

    const C& ctx() const { return ctx_; }
    std::size_t nvars() const { return nvars_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Element coeff(const MultiIndex& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? ctx_.zero() : it->second;
    }
    Element constant_term() const { return coeff(MultiIndex(nvars_)); }

    // Total degree; -1 for the zero polynomial.
    long degree() const { return terms_.empty() ? -1 : terms_.rbegin()->first.degree(); }

    Polynomial operator+(const Polynomial& o) const {
        compatible(o);
        Polynomial r(*this);
        for (const auto& [m, c] : o.terms_) r.add_term(m, c);
        return r;
    }
    Polynomial operator-(const Polynomial& o) const {
        compatible(o);
        Polynomial r(*this);
        for (const auto& [m, c] : o.terms_) r.add_term(m, ctx_.neg(c));
        return r;
    }
    Polynomial operator-() const {
        Polynomial r(ctx_, nvars_);
        for (const auto& [m, c] : terms_) r.terms_.emplace(m, ctx_.neg(c));
        return r;
    }

    Polynomial operator*(const Polynomial& o) const {
        compatible(o);
        Polynomial r(ctx_, nvars_);
        for (const auto& [ma, ca] : terms_)
            for (const auto& [mb, cb] : o.terms_) r.add_term(ma + mb, ctx_.mul(ca, cb));
        return r;
    }

    Polynomial scale_left(const Element& c) const {
        Polynomial r(ctx_, nvars_);
        for (const auto& [m, v] : terms_) r.add_term(m, ctx_.mul(c, v));
        return r;
    }
    Polynomial scale_right(const Element& c) const {
        Polynomial r(ctx_, nvars_);
        for (const auto& [m, v] : terms_) r.add_term(m, ctx_.mul(v, c));
        return r;
    }

    // d/dt_{var+1}: the exponent comes down as an integer factor, which is
    // central, so this is well defined over noncommutative coefficients too.
    Polynomial partial(std::size_t var) const {
        if (var >= nvars_) throw std::invalid_argument("Polynomial: variable index out of range");
        Polynomial r(ctx_, nvars_);
        for (const auto& [m, c] : terms_) {
            if (m[var] == 0) continue;
            MultiIndex d = m;
            d[var] -= 1;
            r.add_term(d, ctx_.mul(ctx_.from_int(m[var]), c));
        }
        return r;
    }

    Polynomial homogeneous_part(long deg) const {
        Polynomial r(ctx_, nvars_);
        for (const auto& [m, c] : terms_)
            if (m.degree() == deg) r.terms_.emplace(m, c);
        return r;
    }

    // Keep only terms with total degree <= cap.
    Polynomial truncate(long cap) const {
        Polynomial r(ctx_, nvars_);
        for (const auto& [m, c] : terms_) {
            if (m.degree() > cap) break; // graded order: all later terms are higher
            r.terms_.emplace(m, c);
        }
        return r;
    }

    // Map every coefficient; drops new zeros. Used for involutions and for
    // pushing polynomials through ring morphisms.
    template <typename Fn>
    Polynomial map_coeffs(Fn&& fn) const {
        Polynomial r(ctx_, nvars_);
        for (const auto& [m, c] : terms_) r.add_term(m, fn(c));
        return r;
    }

    // Exact quotient: requires *this = q * g exactly; throws otherwise.
    // Leading-term division in graded-lex order, valid over any integral
    // domain whose context divides exactly.
    Polynomial exact_div(const Polynomial& g) const
        requires ExactDivRing<C>
    {
        compatible(g);
        if (g.is_zero()) throw std::domain_error("Polynomial: division by zero");
        Polynomial q(ctx_, nvars_);
        Polynomial r(*this);
        const auto& [gm, gc] = *g.terms_.rbegin();
        while (!r.is_zero()) {
            const auto& [rm, rc] = *r.terms_.rbegin();
            if (!gm.divides(rm)) throw std::domain_error("Polynomial: inexact division");
            const MultiIndex qm = rm - gm;
            Element qc = ctx_.exact_div(rc, gc);
            Polynomial t = monomial(ctx_, qm, qc);
            q = q + t;
            r = r - t * g;
        }
        return q;
    }

    bool operator==(const Polynomial& o) const {
        compatible(o);
        if (terms_.size() != o.terms_.size()) return false;
        auto it = o.terms_.begin();
        for (auto jt = terms_.begin(); jt != terms_.end(); ++jt, ++it)
            if (jt->first != it->first || !ctx_.equal(jt->second, it->second)) return false;
        return true;
    }
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    // Canonical text: descending graded-lex, "1" coefficients dropped from
    // nonconstant monomials, e.g. "3/2*t1^2*t2 + t3".
    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string out;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            const std::string mono = it->first.to_string();
            std::string cs = ctx_.to_string(it->second);
            bool neg = false;
            if (cs.size() > 1 && cs[0] == '-' && !detail::needs_parens(cs.substr(1))) {
                neg = true;
                cs = cs.substr(1);
            }
            if (detail::needs_parens(cs)) cs = "(" + cs + ")";
            std::string term;
            if (mono == "1") term = cs;
            else if (cs == "1") term = mono;
            else term = cs + "*" + mono;
            if (out.empty()) out = (neg ? "-" : "") + term;
            else out += (neg ? " - " : " + ") + term;
        }
        return out;
    }

private:
    void add_term(const MultiIndex& m, Element c) {
        if (ctx_.is_zero(c)) return;
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(m, std::move(c));
            return;
        }
        it->second = ctx_.add(it->second, c);
        if (ctx_.is_zero(it->second)) terms_.erase(it);
    }
    void compatible(const Polynomial& o) const {
        if (nvars_ != o.nvars_ || !ctx_.matches(o.ctx_))
            throw std::invalid_argument("Polynomial: mixed polynomial rings");
    }

    C ctx_;
    std::size_t nvars_;
    TermMap terms_;
};

// R[t1..tn] as a coefficient ring in its own right, so matrices and series
// can be built over polynomials.
template <RingContext C>
struct PolynomialRing {
    using Element = Polynomial<C>;
    static constexpr bool is_field = false;

    PolynomialRing(C coeff, std::size_t nvars) : coeff_(std::move(coeff)), nvars_(nvars) {}

    const C& coeff() const { return coeff_; }
    std::size_t nvars() const { return nvars_; }

    Element zero() const { return Element(coeff_, nvars_); }
    Element one() const { return Element::constant(coeff_, nvars_, coeff_.one()); }
    Element add(const Element& a, const Element& b) const { return a + b; }
    Element sub(const Element& a, const Element& b) const { return a - b; }
    Element neg(const Element& a) const { return -a; }
    Element mul(const Element& a, const Element& b) const { return a * b; }
    bool is_zero(const Element& a) const { return a.is_zero(); }
    bool equal(const Element& a, const Element& b) const { return a == b; }
    Element from_int(std::int64_t n) const {
        return Element::constant(coeff_, nvars_, coeff_.from_int(n));
    }
    Element from_rational(const BigRational& q) const
        requires RationalEmbedRing<C>
    {
        return Element::constant(coeff_, nvars_, coeff_.from_rational(q));
    }
    // Units of R[t] over an integral domain are the constant units of R.
    bool is_invertible(const Element& a) const
        requires InvertibilityRing<C>
    {
        return a.degree() == 0 && coeff_.is_invertible(a.constant_term());
    }
    Element inv(const Element& a) const
        requires InvertibilityRing<C>
    {
        if (!is_invertible(a)) throw std::domain_error("polynomial ring: not a unit");
        return Element::constant(coeff_, nvars_, coeff_.inv(a.constant_term()));
    }
    Element exact_div(const Element& a, const Element& b) const
        requires ExactDivRing<C>
    {
        return a.exact_div(b);
    }
    bool commutative() const { return coeff_.commutative(); }
    std::int64_t characteristic() const { return coeff_.characteristic(); }
    std::string to_string(const Element& a) const { return a.to_string(); }
    bool matches(const PolynomialRing& o) const {
        return nvars_ == o.nvars_ && coeff_.matches(o.coeff_);
    }

private:
    C coeff_;
    std::size_t nvars_;
};

} // namespace lieva
