#pragma once

#include "lieva/quaternion.hpp"
#include "lieva/structure_constants.hpp"

#include <string>
#include <vector>

namespace lieva {

template <FieldContext F>
FieldVec<F> flatten(const Matrix<F>& m) {
    FieldVec<F> v;
    v.reserve(m.rows() * m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) v.push_back(m.at(i, j));
    return v;
}

// Builds a bracket table from concrete matrices: the given matrices become
// the basis, and each bracket is computed as a matrix commutator, then
// re-expressed in that basis. The matrices must be linearly independent and
// closed under commutators; the table inherits the Lie axioms from matrix
// multiplication instead of being typed in by hand.
template <FieldContext F>
StructureConstants<F> table_from_matrices(const F& f, const std::vector<std::string>& names,
                                          const std::vector<Matrix<F>>& mats) {
    if (names.size() != mats.size())
        throw std::invalid_argument("table_from_matrices: name/matrix count mismatch");
    std::vector<FieldVec<F>> basis;
    basis.reserve(mats.size());
    for (const auto& m : mats) basis.push_back(flatten(m));
    if (rank(f, basis) != basis.size())
        throw std::invalid_argument("table_from_matrices: matrices are dependent");

    StructureConstants<F> sc(f, names);
    for (std::size_t j = 0; j < mats.size(); ++j) {
        for (std::size_t l = 0; l < mats.size(); ++l) {
            const auto comm = flatten(gl_bracket(mats[j], mats[l]));
            if (!in_span(f, basis, comm))
                throw std::invalid_argument("table_from_matrices: not closed under commutator");
            sc.set_product(j, l, coords_in_basis(f, basis, comm));
        }
    }
    return sc;
}

// Rotation generators of 3-space: L1 = E32 - E23, L2 = E13 - E31,
// L3 = E21 - E12, with [e1,e2] = e3 cyclically.
template <FieldContext F>
StructureConstants<F> so3_table(const F& f) {
    const auto one = f.one();
    const auto mone = f.neg(one);
    Matrix<F> l1(f, 3, 3), l2(f, 3, 3), l3(f, 3, 3);
    l1.at(2, 1) = one;
    l1.at(1, 2) = mone;
    l2.at(0, 2) = one;
    l2.at(2, 0) = mone;
    l3.at(1, 0) = one;
    l3.at(0, 1) = mone;
    return table_from_matrices(f, {"e1", "e2", "e3"}, {l1, l2, l3});
}

// Traceless 2x2 matrices on the basis h = E11 - E22, e = E12, f = E21.
template <FieldContext F>
StructureConstants<F> sl2_table(const F& f) {
    const auto one = f.one();
    Matrix<F> h(f, 2, 2), e(f, 2, 2), fmat(f, 2, 2);
    h.at(0, 0) = one;
    h.at(1, 1) = f.neg(one);
    e.at(0, 1) = one;
    fmat.at(1, 0) = one;
    return table_from_matrices(f, {"h", "e", "f"}, {h, e, fmat});
}

// Full matrix algebra basis E_ab under commutators, n <= 4.
template <FieldContext F>
StructureConstants<F> gl_table(const F& f, std::size_t n) {
    if (n < 1 || n > 4) throw std::invalid_argument("gl_table: dimension out of range");
    std::vector<std::string> names;
    std::vector<Matrix<F>> mats;
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
            names.push_back("E" + std::to_string(a + 1) + std::to_string(b + 1));
            Matrix<F> m(f, n, n);
            m.at(a, b) = f.one();
            mats.push_back(std::move(m));
        }
    }
    return table_from_matrices(f, names, mats);
}

// Strictly upper triangular 3x3 matrices: x = E12, y = E23, z = E13 with
// [x,y] = z and z central.
template <FieldContext F>
StructureConstants<F> heisenberg_table(const F& f) {
    Matrix<F> x(f, 3, 3), y(f, 3, 3), z(f, 3, 3);
    x.at(0, 1) = f.one();
    y.at(1, 2) = f.one();
    z.at(0, 2) = f.one();
    return table_from_matrices(f, {"x", "y", "z"}, {x, y, z});
}

// Zero bracket in dimension n.
template <FieldContext F>
StructureConstants<F> abelian_table(const F& f, std::size_t n) {
    std::vector<std::string> names;
    for (std::size_t j = 0; j < n; ++j) names.push_back("e" + std::to_string(j + 1));
    return StructureConstants<F>(f, names);
}

// Antisymmetric by construction but deliberately violating Jacobi:
// [e1,e2] = e3, [e2,e3] = e1, [e3,e1] = e1 gives
// [e1,[e2,e3]] + [e2,[e3,e1]] + [e3,[e1,e2]] = 0 + [e2,e1] + 0 = -e3.
template <FieldContext F>
StructureConstants<F> broken_table(const F& f) {
    StructureConstants<F> sc(f, {"e1", "e2", "e3"});
    const auto one = f.one();
    const auto mone = f.neg(one);
    auto unit = [&](std::size_t m, const typename F::Element& c) {
        FieldVec<F> v = vec_zero(f, 3);
        v[m] = c;
        return v;
    };
    sc.set_product(0, 1, unit(2, one));
    sc.set_product(1, 0, unit(2, mone));
    sc.set_product(1, 2, unit(0, one));
    sc.set_product(2, 1, unit(0, mone));
    sc.set_product(2, 0, unit(0, one));
    sc.set_product(0, 2, unit(0, mone));
    return sc;
}

// Associative multiplication table of the full matrix algebra M_n, products
// computed by actual matrix multiplication of the unit matrices.
template <FieldContext F>
StructureConstants<F> matrix_assoc_table(const F& f, std::size_t n) {
    if (n < 1 || n > 4) throw std::invalid_argument("matrix_assoc_table: dimension out of range");
    std::vector<std::string> names;
    std::vector<Matrix<F>> mats;
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
            names.push_back("E" + std::to_string(a + 1) + std::to_string(b + 1));
            Matrix<F> m(f, n, n);
            m.at(a, b) = f.one();
            mats.push_back(std::move(m));
        }
    }
    StructureConstants<F> sc(f, names);
    for (std::size_t j = 0; j < mats.size(); ++j)
        for (std::size_t l = 0; l < mats.size(); ++l)
            sc.set_product(j, l, flatten(mat_mul(mats[j], mats[l])));
    return sc;
}

// Associative table of the quaternions on the basis (1, i, j, k), read off
// from actual quaternion products.
inline StructureConstants<RationalField> quaternion_assoc_table(const RationalField& f) {
    const std::vector<Quaternion> units = {
        Quaternion(1, 0, 0, 0), Quaternion(0, 1, 0, 0), Quaternion(0, 0, 1, 0),
        Quaternion(0, 0, 0, 1)};
    StructureConstants<RationalField> sc(f, {"1", "i", "j", "k"});
    for (std::size_t j = 0; j < 4; ++j) {
        for (std::size_t l = 0; l < 4; ++l) {
            const Quaternion prod = units[j] * units[l];
            sc.set_product(j, l, {prod.re(), prod.ci(), prod.cj(), prod.ck()});
        }
    }
    return sc;
}

// Names of the tables shipped in the bundled data directory, sorted.
inline std::vector<std::string> bundled_table_names() {
    return {"abelian2", "abelian3", "broken",     "gl1", "gl2",
            "gl3",      "gl4",      "heisenberg", "sl2", "so3"};
}

// Builds a bundled table over the rationals. These builders generate the
// shipped data files and serve as the reference the loaded files are
// compared against in tests.
inline StructureConstants<RationalField> bundled_table(const RationalField& q,
                                                       const std::string& name) {
    if (name == "abelian2") return abelian_table(q, 2);
    if (name == "abelian3") return abelian_table(q, 3);
    if (name == "broken") return broken_table(q);
    if (name == "gl1") return gl_table(q, 1);
    if (name == "gl2") return gl_table(q, 2);
    if (name == "gl3") return gl_table(q, 3);
    if (name == "gl4") return gl_table(q, 4);
    if (name == "sl2") return sl2_table(q);
    if (name == "heisenberg") return heisenberg_table(q);
    if (name == "so3") return so3_table(q);
    throw std::invalid_argument("unknown bundled table: " + name);
}

// Commutator bracket table of an associative table.
template <FieldContext F>
StructureConstants<F> bracket_table_from_assoc(const StructureConstants<F>& assoc) {
    StructureConstants<F> sc(assoc.field(), assoc.basis_names());
    for (std::size_t j = 0; j < assoc.dim(); ++j)
        for (std::size_t l = 0; l < assoc.dim(); ++l)
            sc.set_product(j, l,
                           bracket_from_assoc(assoc.basis_element(j), assoc.basis_element(l), assoc));
    return sc;
}

}  // namespace lieva
