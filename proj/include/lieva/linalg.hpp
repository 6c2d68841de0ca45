#pragma once

#include "lieva/rings.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace lieva {

template <FieldContext F>
using FieldVec = std::vector<typename F::Element>;

template <FieldContext F>
FieldVec<F> vec_zero(const F& f, std::size_t n) {
    return FieldVec<F>(n, f.zero());
}

template <FieldContext F>
bool vec_is_zero(const F& f, const FieldVec<F>& v) {
    for (const auto& x : v)
        if (!f.is_zero(x)) return false;
    return true;
}

template <FieldContext F>
bool vec_equal(const F& f, const FieldVec<F>& a, const FieldVec<F>& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!f.equal(a[i], b[i])) return false;
    return true;
}

template <FieldContext F>
FieldVec<F> vec_add(const F& f, const FieldVec<F>& a, const FieldVec<F>& b) {
    if (a.size() != b.size()) throw std::invalid_argument("vec_add: length mismatch");
    FieldVec<F> r;
    r.reserve(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r.push_back(f.add(a[i], b[i]));
    return r;
}

template <FieldContext F>
FieldVec<F> vec_sub(const F& f, const FieldVec<F>& a, const FieldVec<F>& b) {
    if (a.size() != b.size()) throw std::invalid_argument("vec_sub: length mismatch");
    FieldVec<F> r;
    r.reserve(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r.push_back(f.sub(a[i], b[i]));
    return r;
}

template <FieldContext F>
FieldVec<F> vec_scale(const F& f, const typename F::Element& c, const FieldVec<F>& v) {
    FieldVec<F> r;
    r.reserve(v.size());
    for (const auto& x : v) r.push_back(f.mul(c, x));
    return r;
}

// In-place reduced row echelon form with deterministic pivoting: columns are
// scanned left to right and the first row with a nonzero entry wins. Returns
// the pivot columns in order.
template <FieldContext F>
std::vector<std::size_t> rref(const F& f, std::vector<FieldVec<F>>& rows) {
    std::vector<std::size_t> pivots;
    if (rows.empty()) return pivots;
    const std::size_t ncols = rows[0].size();
    std::size_t r = 0;
    for (std::size_t col = 0; col < ncols && r < rows.size(); ++col) {
        std::size_t sel = r;
        while (sel < rows.size() && f.is_zero(rows[sel][col])) ++sel;
        if (sel == rows.size()) continue;
        std::swap(rows[sel], rows[r]);
        const auto inv = f.inv(rows[r][col]);
        for (auto& x : rows[r]) x = f.mul(inv, x);
        for (std::size_t k = 0; k < rows.size(); ++k) {
            if (k == r || f.is_zero(rows[k][col])) continue;
            const auto factor = rows[k][col];
            for (std::size_t j = 0; j < ncols; ++j)
                rows[k][j] = f.sub(rows[k][j], f.mul(factor, rows[r][j]));
        }
        pivots.push_back(col);
        ++r;
    }
    return pivots;
}

template <FieldContext F>
std::size_t rank(const F& f, std::vector<FieldVec<F>> rows) {
    return rref(f, rows).size();
}

// Canonical basis of the span: the nonzero rows of the reduced echelon form.
template <FieldContext F>
std::vector<FieldVec<F>> row_space_basis(const F& f, std::vector<FieldVec<F>> rows) {
    const auto pivots = rref(f, rows);
    rows.resize(pivots.size());
    return rows;
}

// Basis of {x : Ax = 0} where the rows of `rows` are the equations. One basis
// vector per free column, in ascending column order.
template <FieldContext F>
std::vector<FieldVec<F>> nullspace(const F& f, std::vector<FieldVec<F>> rows, std::size_t ncols) {
    for (const auto& row : rows)
        if (row.size() != ncols) throw std::invalid_argument("nullspace: ragged rows");
    const auto pivots = rref(f, rows);
    std::vector<bool> is_pivot(ncols, false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<FieldVec<F>> basis;
    for (std::size_t j = 0; j < ncols; ++j) {
        if (is_pivot[j]) continue;
        FieldVec<F> v = vec_zero(f, ncols);
        v[j] = f.one();
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = f.neg(rows[r][j]);
        basis.push_back(std::move(v));
    }
    return basis;
}

// Particular solution of Ax = b with free variables set to zero, or nullopt
// when the system is inconsistent. A is given by rows.
template <FieldContext F>
std::optional<FieldVec<F>> solve(const F& f, std::vector<FieldVec<F>> rows, FieldVec<F> b) {
    if (rows.size() != b.size()) throw std::invalid_argument("solve: shape mismatch");
    const std::size_t ncols = rows.empty() ? 0 : rows[0].size();
    for (std::size_t i = 0; i < rows.size(); ++i) rows[i].push_back(b[i]);
    const auto pivots = rref(f, rows);
    if (!pivots.empty() && pivots.back() == ncols) return std::nullopt; // pivot in b column
    FieldVec<F> x = vec_zero(f, ncols);
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = rows[r][ncols];
    return x;
}

template <FieldContext F>
bool in_span(const F& f, const std::vector<FieldVec<F>>& basis, const FieldVec<F>& v) {
    std::vector<FieldVec<F>> rows = basis;
    const std::size_t r0 = rank(f, rows);
    rows.push_back(v);
    return rank(f, rows) == r0;
}

// Coordinates of `target` in the given spanning vectors; throws when target
// lies outside the span.
template <FieldContext F>
FieldVec<F> coords_in_basis(const F& f, const std::vector<FieldVec<F>>& basis,
                            const FieldVec<F>& target) {
    const std::size_t dim = target.size();
    std::vector<FieldVec<F>> rows(dim, vec_zero(f, basis.size()));
    for (std::size_t i = 0; i < basis.size(); ++i) {
        if (basis[i].size() != dim) throw std::invalid_argument("coords_in_basis: length mismatch");
        for (std::size_t j = 0; j < dim; ++j) rows[j][i] = basis[i][j];
    }
    auto sol = solve(f, std::move(rows), target);
    if (!sol) throw std::domain_error("coords_in_basis: target outside span");
    return *sol;
}

} // namespace lieva
