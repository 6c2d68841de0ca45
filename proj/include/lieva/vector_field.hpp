#pragma once

#include "lieva/matrix.hpp"
#include "lieva/polynomial.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace lieva {

// A polynomial vector field (p_1, ..., p_n) in n variables, read as the
// first-order operator sum_j p_j d/dt_j. Components live in a commutative
// coefficient ring and their variable count equals the component count.
template <RingContext C>
class VectorField {
public:
    explicit VectorField(std::vector<Polynomial<C>> components)
        : comps_(std::move(components)) {
        if (comps_.empty()) throw std::invalid_argument("vector field: no components");
        if (!comps_.front().ctx().commutative())
            throw std::domain_error("vector field: coefficient ring must be commutative");
        for (const auto& p : comps_) {
            if (p.nvars() != comps_.size())
                throw std::invalid_argument(
                    "vector field: component count must equal the variable count");
            if (!p.ctx().matches(comps_.front().ctx()))
                throw std::invalid_argument("vector field: mixed coefficient rings");
        }
    }

    std::size_t n() const { return comps_.size(); }
    const Polynomial<C>& component(std::size_t j) const { return comps_.at(j); }
    const C& coeff_ctx() const { return comps_.front().ctx(); }

    bool operator==(const VectorField& o) const {
        if (n() != o.n()) return false;
        for (std::size_t j = 0; j < n(); ++j)
            if (!(comps_[j] == o.comps_[j])) return false;
        return true;
    }

    // Display form "p1 ∂1 + p2 ∂2 + ..."; compound components are
    // parenthesized. The machine-readable form is the component list.
    std::string to_string() const {
        std::string out;
        for (std::size_t j = 0; j < n(); ++j) {
            std::string p = comps_[j].to_string();
            if (p.find(" + ") != std::string::npos || p.find(" - ") != std::string::npos)
                p = "(" + p + ")";
            if (j) out += " + ";
            out += p + " ∂" + std::to_string(j + 1);
        }
        return out;
    }

private:
    std::vector<Polynomial<C>> comps_;
};

// The derivation applied to a polynomial: sum_j p_j * partial_j(f).
template <RingContext C>
Polynomial<C> vf_apply(const VectorField<C>& v, const Polynomial<C>& f) {
    if (f.nvars() != v.n() || !f.ctx().matches(v.coeff_ctx()))
        throw std::invalid_argument("vf_apply: polynomial lives in a different ring");
    Polynomial<C> acc(f.ctx(), f.nvars());
    for (std::size_t j = 0; j < v.n(); ++j) acc = acc + v.component(j) * f.partial(j);
    return acc;
}

// Commutator of the two derivations, componentwise:
// r_j = sum_l p_l partial_l(q_j) - q_l partial_l(p_j).
template <RingContext C>
VectorField<C> vf_bracket(const VectorField<C>& v, const VectorField<C>& w) {
    if (v.n() != w.n() || !v.coeff_ctx().matches(w.coeff_ctx()))
        throw std::invalid_argument("vf_bracket: mismatched vector fields");
    std::vector<Polynomial<C>> r;
    r.reserve(v.n());
    for (std::size_t j = 0; j < v.n(); ++j) {
        Polynomial<C> rj(v.component(0).ctx(), v.n());
        for (std::size_t l = 0; l < v.n(); ++l) {
            rj = rj + v.component(l) * w.component(j).partial(l);
            rj = rj - w.component(l) * v.component(j).partial(l);
        }
        r.push_back(std::move(rj));
    }
    return VectorField<C>(std::move(r));
}

// The linear vector field of a matrix: p_j = sum_l a_{jl} t_l. This sends the
// matrix commutator to minus the field bracket, an anti-homomorphism.
template <RingContext C>
VectorField<C> matrix_to_vf(const Matrix<C>& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("matrix_to_vf: matrix must be square");
    if (!m.ctx().commutative())
        throw std::domain_error("matrix_to_vf: coefficient ring must be commutative");
    const std::size_t n = m.rows();
    std::vector<Polynomial<C>> comps;
    comps.reserve(n);
    for (std::size_t j = 0; j < n; ++j) {
        Polynomial<C> pj(m.ctx(), n);
        for (std::size_t l = 0; l < n; ++l)
            pj = pj + Polynomial<C>::monomial(m.ctx(), MultiIndex::unit(n, l), m.at(j, l));
        comps.push_back(std::move(pj));
    }
    return VectorField<C>(std::move(comps));
}

}  // namespace lieva
