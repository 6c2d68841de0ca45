#pragma once

#include "lieva/linalg.hpp"
#include "lieva/matrix.hpp"

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace lieva {

// A finite-dimensional algebra presented by its multiplication table on a
// named basis: product(e_j, e_l) = sum_m c[j][l][m] e_m. The same container
// serves associative tables and bracket tables; the operations below say
// which reading they assume. Indices are 0-based throughout the library.
template <FieldContext F>
class StructureConstants {
public:
    using Element = typename F::Element;
    using Vec = FieldVec<F>;

    StructureConstants(const F& field, std::vector<std::string> basis_names)
        : field_(field), names_(std::move(basis_names)) {
        if (names_.empty())
            throw std::invalid_argument("structure constants: empty basis");
        table_.assign(dim(), std::vector<Vec>(dim(), vec_zero(field_, dim())));
    }

    std::size_t dim() const { return names_.size(); }
    const F& field() const { return field_; }
    const std::vector<std::string>& basis_names() const { return names_; }

    const Vec& product(std::size_t j, std::size_t l) const {
        check_index(j);
        check_index(l);
        return table_[j][l];
    }

    void set_product(std::size_t j, std::size_t l, Vec coords) {
        check_index(j);
        check_index(l);
        if (coords.size() != dim())
            throw std::invalid_argument("structure constants: coordinate length mismatch");
        table_[j][l] = std::move(coords);
    }

    Vec basis_element(std::size_t j) const {
        check_index(j);
        Vec v = vec_zero(field_, dim());
        v[j] = field_.one();
        return v;
    }

private:
    void check_index(std::size_t j) const {
        if (j >= dim()) throw std::out_of_range("structure constants: basis index");
    }

    F field_;
    std::vector<std::string> names_;
    std::vector<std::vector<Vec>> table_;
};

// Bilinear extension of the table.
template <FieldContext F>
FieldVec<F> mult(const StructureConstants<F>& sc, const FieldVec<F>& x, const FieldVec<F>& y) {
    const F& f = sc.field();
    const std::size_t n = sc.dim();
    if (x.size() != n || y.size() != n)
        throw std::invalid_argument("mult: element dimension mismatch");
    FieldVec<F> acc = vec_zero(f, n);
    for (std::size_t j = 0; j < n; ++j) {
        if (f.is_zero(x[j])) continue;
        for (std::size_t l = 0; l < n; ++l) {
            if (f.is_zero(y[l])) continue;
            const auto coeff = f.mul(x[j], y[l]);
            const auto& row = sc.product(j, l);
            for (std::size_t m = 0; m < n; ++m)
                acc[m] = f.add(acc[m], f.mul(coeff, row[m]));
        }
    }
    return acc;
}

// Commutator a*b - b*a of an associative table; this is the bracket of the
// Lie algebra attached to the associative algebra.
template <FieldContext F>
FieldVec<F> bracket_from_assoc(const FieldVec<F>& a, const FieldVec<F>& b,
                               const StructureConstants<F>& sc) {
    return vec_sub(sc.field(), mult(sc, a, b), mult(sc, b, a));
}

// Reads the table as a bracket and returns [x,[y,z]] + [y,[z,x]] + [z,[x,y]];
// the zero vector exactly when the Jacobi identity holds on this triple.
template <FieldContext F>
FieldVec<F> jacobi_defect(const StructureConstants<F>& sc, const FieldVec<F>& x,
                          const FieldVec<F>& y, const FieldVec<F>& z) {
    const F& f = sc.field();
    auto acc = mult(sc, x, mult(sc, y, z));
    acc = vec_add(f, acc, mult(sc, y, mult(sc, z, x)));
    return vec_add(f, acc, mult(sc, z, mult(sc, x, y)));
}

template <FieldContext F>
struct LieReport {
    bool antisymmetric = true;
    bool jacobi = true;
    // First failing pair (j, l); j == l flags a nonzero diagonal product.
    std::optional<std::pair<std::size_t, std::size_t>> antisymmetry_witness;
    // First triple of basis indices with nonzero defect, plus the defect.
    std::optional<std::array<std::size_t, 3>> jacobi_witness;
    std::optional<FieldVec<F>> jacobi_defect_value;

    bool pass() const { return antisymmetric && jacobi; }
};

// Checks the Lie axioms on the whole space by checking them on the basis.
// The alternating law [x,x] = 0 expands to: every diagonal product vanishes
// and c[j][l] = -c[l][j] for j != l. Both are checked directly, which keeps
// the certificate valid in characteristic 2, where antisymmetry alone is
// weaker than alternating. Once the bracket is alternating, the Jacobi sum
// is alternating in its three slots, so triples j < l < m suffice; without
// that, every ordered triple is examined.
template <FieldContext F>
LieReport<F> verify_lie(const StructureConstants<F>& sc) {
    const F& f = sc.field();
    const std::size_t n = sc.dim();
    LieReport<F> rep;

    for (std::size_t j = 0; j < n && rep.antisymmetric; ++j) {
        if (!vec_is_zero(f, sc.product(j, j))) {
            rep.antisymmetric = false;
            rep.antisymmetry_witness = {j, j};
        }
    }
    for (std::size_t j = 0; j < n && rep.antisymmetric; ++j) {
        for (std::size_t l = j + 1; l < n && rep.antisymmetric; ++l) {
            const auto neg = vec_scale(f, f.neg(f.one()), sc.product(l, j));
            if (!vec_equal(f, sc.product(j, l), neg)) {
                rep.antisymmetric = false;
                rep.antisymmetry_witness = {j, l};
            }
        }
    }

    auto probe = [&](std::size_t j, std::size_t l, std::size_t m) {
        const auto d = jacobi_defect(sc, sc.basis_element(j), sc.basis_element(l),
                                     sc.basis_element(m));
        if (!vec_is_zero(f, d)) {
            rep.jacobi = false;
            rep.jacobi_witness = {{j, l, m}};
            rep.jacobi_defect_value = d;
        }
        return rep.jacobi;
    };
    if (rep.antisymmetric) {
        for (std::size_t j = 0; j < n && rep.jacobi; ++j)
            for (std::size_t l = j + 1; l < n && rep.jacobi; ++l)
                for (std::size_t m = l + 1; m < n && rep.jacobi; ++m) probe(j, l, m);
    } else {
        for (std::size_t j = 0; j < n && rep.jacobi; ++j)
            for (std::size_t l = 0; l < n && rep.jacobi; ++l)
                for (std::size_t m = 0; m < n && rep.jacobi; ++m) probe(j, l, m);
    }
    return rep;
}

// Matrix of ad_x = [x, -] in the given basis: column l holds the coordinates
// of [x, e_l].
template <FieldContext F>
Matrix<F> ad_matrix(const StructureConstants<F>& sc, const FieldVec<F>& x) {
    const std::size_t n = sc.dim();
    Matrix<F> a(sc.field(), n, n);
    for (std::size_t l = 0; l < n; ++l) {
        const auto col = mult(sc, x, sc.basis_element(l));
        for (std::size_t m = 0; m < n; ++m) a.at(m, l) = col[m];
    }
    return a;
}

// A list of linearly independent coordinate vectors; independence is enforced
// at construction by row reduction.
template <FieldContext F>
class SubspaceBasis {
public:
    SubspaceBasis(const F& field, std::vector<FieldVec<F>> vectors, std::size_t ambient_dim)
        : field_(field), vectors_(std::move(vectors)), ambient_(ambient_dim) {
        for (const auto& v : vectors_)
            if (v.size() != ambient_)
                throw std::invalid_argument("subspace basis: vector length mismatch");
        if (rank(field_, vectors_) != vectors_.size())
            throw std::invalid_argument("subspace basis: vectors are dependent");
    }

    const std::vector<FieldVec<F>>& vectors() const { return vectors_; }
    std::size_t size() const { return vectors_.size(); }
    std::size_t ambient_dim() const { return ambient_; }
    bool contains(const FieldVec<F>& v) const { return in_span(field_, vectors_, v); }

private:
    F field_;
    std::vector<FieldVec<F>> vectors_;
    std::size_t ambient_;
};

// Basis of {x : [x, e_l] = 0 for all l}, the kernel of the adjoint action,
// computed as the nullspace of the system sum_j x_j c[j][l][m] = 0 stacked
// over all (l, m).
template <FieldContext F>
SubspaceBasis<F> center_basis(const StructureConstants<F>& sc) {
    const F& f = sc.field();
    const std::size_t n = sc.dim();
    std::vector<FieldVec<F>> rows;
    rows.reserve(n * n);
    for (std::size_t l = 0; l < n; ++l) {
        for (std::size_t m = 0; m < n; ++m) {
            FieldVec<F> row;
            row.reserve(n);
            for (std::size_t j = 0; j < n; ++j) row.push_back(sc.product(j, l)[m]);
            rows.push_back(std::move(row));
        }
    }
    return SubspaceBasis<F>(f, nullspace(f, rows, n), n);
}

// Basis of the span of all products of basis pairs; for a bracket table this
// is the commutator ideal. Every product of basis elements is re-checked to
// lie in the returned span, so the quotient is abelian by construction.
template <FieldContext F>
SubspaceBasis<F> derived_ideal_basis(const StructureConstants<F>& sc) {
    const F& f = sc.field();
    const std::size_t n = sc.dim();
    std::vector<FieldVec<F>> products;
    products.reserve(n * n);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t l = 0; l < n; ++l) products.push_back(sc.product(j, l));
    auto basis = row_space_basis(f, products);
    for (const auto& p : products)
        if (!in_span(f, basis, p))
            throw std::logic_error("derived ideal: product escaped its own span");
    return SubspaceBasis<F>(f, std::move(basis), n);
}

// True iff [e_j, s] stays in span(sub) for every basis element e_j and every
// basis vector s of sub.
template <FieldContext F>
bool is_ideal(const SubspaceBasis<F>& sub, const StructureConstants<F>& sc) {
    if (sub.ambient_dim() != sc.dim())
        throw std::invalid_argument("is_ideal: dimension mismatch");
    for (std::size_t j = 0; j < sc.dim(); ++j)
        for (const auto& s : sub.vectors())
            if (!sub.contains(mult(sc, sc.basis_element(j), s))) return false;
    return true;
}

// Leibniz law on all basis pairs: d(e_j e_l) = (d e_j) e_l + e_j (d e_l).
template <FieldContext F>
bool is_derivation(const Matrix<F>& d, const StructureConstants<F>& sc) {
    const F& f = sc.field();
    const std::size_t n = sc.dim();
    if (d.rows() != n || d.cols() != n)
        throw std::invalid_argument("is_derivation: operator dimension mismatch");
    for (std::size_t j = 0; j < n; ++j) {
        const auto dej = mat_apply(d, sc.basis_element(j));
        for (std::size_t l = 0; l < n; ++l) {
            const auto del = mat_apply(d, sc.basis_element(l));
            const auto lhs = mat_apply(d, sc.product(j, l));
            const auto rhs = vec_add(f, mult(sc, dej, sc.basis_element(l)),
                                     mult(sc, sc.basis_element(j), del));
            if (!vec_equal(f, lhs, rhs)) return false;
        }
    }
    return true;
}

// Rebuilds a rational table over another scalar field by embedding each
// coefficient; fails if a denominator is not invertible there.
template <FieldContext F>
    requires RationalEmbedRing<F>
StructureConstants<F> change_field(const StructureConstants<RationalField>& sc, const F& target) {
    StructureConstants<F> out(target, sc.basis_names());
    const std::size_t n = sc.dim();
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t l = 0; l < n; ++l) {
            FieldVec<F> coords;
            coords.reserve(n);
            for (const auto& c : sc.product(j, l)) coords.push_back(target.from_rational(c));
            out.set_product(j, l, std::move(coords));
        }
    }
    return out;
}

}  // namespace lieva
