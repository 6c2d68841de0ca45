#include "doctest.h"

#include "lieva/linalg.hpp"
#include "lieva/matrix.hpp"
#include "lieva/polynomial.hpp"
#include "lieva/quaternion.hpp"
#include "lieva/rng.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <vector>

using namespace lieva;

// Reference determinant straight from the Leibniz permutation sum; cost n!
// but independent of the elimination code under test.
template <RingContext C>
static typename C::Element det_leibniz(const Matrix<C>& m) {
    const C& r = m.ctx();
    const std::size_t n = m.rows();
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), std::size_t(0));
    auto acc = r.zero();
    do {
        int inversions = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (perm[i] > perm[j]) ++inversions;
        auto term = r.one();
        for (std::size_t i = 0; i < n; ++i) term = r.mul(term, m.at(i, perm[i]));
        acc = (inversions % 2 == 0) ? r.add(acc, term) : r.sub(acc, term);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return acc;
}

template <RingContext C, typename Gen>
static Matrix<C> rand_mat(const C& ctx, std::size_t n, Gen&& entry) {
    Matrix<C> m(ctx, n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m.at(i, j) = entry();
    return m;
}

TEST_CASE("matrix units multiply like E_ab E_cd = delta_bc E_ad") {
    const RationalField q;
    Matrix<RationalField> e12(q, 2, 2), e21(q, 2, 2), e11(q, 2, 2), e22(q, 2, 2);
    e12.at(0, 1) = q.one();
    e21.at(1, 0) = q.one();
    e11.at(0, 0) = q.one();
    e22.at(1, 1) = q.one();
    CHECK(e12 * e21 == e11);
    CHECK(e21 * e12 == e22);
    CHECK(gl_bracket(e12, e21) == e11 - e22);
    CHECK(mat_apply(e12, {q.zero(), q.one()}) == std::vector<BigRational>{q.one(), q.zero()});
}

TEST_CASE("unipotent polynomial matrices invert exactly") {
    const RationalField q;
    const PolynomialRing<RationalField> qt(q, 1);
    using P = Polynomial<RationalField>;
    const P t = P::variable(q, 1, 0);
    Matrix<PolynomialRing<RationalField>> u(qt, 2, 2), v(qt, 2, 2);
    u.at(0, 0) = qt.one(); u.at(0, 1) = t;  u.at(1, 1) = qt.one();
    v.at(0, 0) = qt.one(); v.at(0, 1) = -t; v.at(1, 1) = qt.one();
    CHECK(u * v == Matrix<PolynomialRing<RationalField>>::identity(qt, 2));
    CHECK(det(u) == qt.one());
    CHECK(is_invertible_mat(u));
}

TEST_CASE("trace identities") {
    Rng rng(61);
    const PrimeField f7(7);
    for (int t = 0; t < 100; ++t) {
        auto a = rand_mat(f7, 3, [&] { return f7.from_int(rng.int_in(0, 6)); });
        auto b = rand_mat(f7, 3, [&] { return f7.from_int(rng.int_in(0, 6)); });
        CHECK(trace(a * b) == trace(b * a));
        CHECK(f7.is_zero(trace(gl_bracket(a, b))));
        CHECK(sl_member(gl_bracket(a, b)));
        CHECK(trace(a + b) == f7.add(trace(a), trace(b)));
    }
    // and over a polynomial ring, where entries do not commute with each other as matrices
    const RationalField q;
    const PolynomialRing<RationalField> qt(q, 2);
    for (int t = 0; t < 20; ++t) {
        auto rp = [&] {
            auto p = Polynomial<RationalField>::monomial(
                q, {static_cast<std::uint32_t>(rng.int_in(0, 2)),
                    static_cast<std::uint32_t>(rng.int_in(0, 2))},
                BigRational(rng.int_in(-3, 3)));
            return p;
        };
        auto a = rand_mat(qt, 2, rp);
        auto b = rand_mat(qt, 2, rp);
        CHECK(qt.is_zero(trace(gl_bracket(a, b))));
    }
}

TEST_CASE("determinant by cofactor expansion matches the Leibniz sum") {
    Rng rng(137);
    const RationalField q;
    const PrimeField f7(7);
    for (std::size_t n = 1; n <= 4; ++n) {
        for (int t = 0; t < 40; ++t) {
            auto a = rand_mat(q, n, [&] { return BigRational(rng.int_in(-9, 9), rng.int_in(1, 3)); });
            CHECK(det(a) == det_leibniz(a));
            auto b = rand_mat(f7, n, [&] { return f7.from_int(rng.int_in(0, 6)); });
            CHECK(det(b) == det_leibniz(b));
        }
    }
    Matrix<RationalField> two(q, 2, 2);
    two.at(0, 0) = BigRational(1); two.at(0, 1) = BigRational(2);
    two.at(1, 0) = BigRational(3); two.at(1, 1) = BigRational(4);
    CHECK(det(two) == BigRational(-2)); // ad - bc
}

TEST_CASE("determinant is multiplicative") {
    Rng rng(211);
    const PrimeField f7(7);
    for (int t = 0; t < 150; ++t) {
        auto a = rand_mat(f7, 3, [&] { return f7.from_int(rng.int_in(0, 6)); });
        auto b = rand_mat(f7, 3, [&] { return f7.from_int(rng.int_in(0, 6)); });
        CHECK(det(a * b) == f7.mul(det(a), det(b)));
    }
}

TEST_CASE("fraction-free elimination for 5 <= n <= 12") {
    Rng rng(307);
    const RationalField q;
    const PrimeField f13(13);
    const IntegerRing z;
    for (std::size_t n = 5; n <= 6; ++n) {
        for (int t = 0; t < 10; ++t) {
            auto a = rand_mat(q, n, [&] { return BigRational(rng.int_in(-6, 6), rng.int_in(1, 2)); });
            CHECK(det(a) == det_leibniz(a));
            auto b = rand_mat(f13, n, [&] { return f13.from_int(rng.int_in(0, 12)); });
            CHECK(det(b) == det_leibniz(b));
            auto c = rand_mat(z, n, [&] { return BigInt(rng.int_in(-5, 5)); });
            CHECK(det(c) == det_leibniz(c));
        }
    }
    // polynomial entries exercise exact division inside the elimination
    const PolynomialRing<RationalField> qt(q, 1);
    using P = Polynomial<RationalField>;
    for (int t = 0; t < 5; ++t) {
        auto a = rand_mat(qt, 5, [&] {
            P p = P::constant(q, 1, BigRational(rng.int_in(-3, 3)));
            if (rng.int_in(0, 1)) p = p + P::monomial(q, {1}, BigRational(rng.int_in(-2, 2)));
            return p;
        });
        CHECK(det(a) == det_leibniz(a));
    }
    // triangular determinants are the diagonal product
    auto tri = rand_mat(q, 6, [&] { return BigRational(0); });
    for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t j = i; j < 6; ++j) tri.at(i, j) = BigRational(rng.int_in(1, 9));
    BigRational diag(1);
    for (std::size_t i = 0; i < 6; ++i) diag *= tri.at(i, i);
    CHECK(det(tri) == diag);
}

TEST_CASE("determinant guard rails") {
    const RationalField q;
    CHECK_THROWS_AS(det(Matrix<RationalField>(q, 13, 13)), std::invalid_argument);
    CHECK_THROWS_AS(det(Matrix<RationalField>(q, 2, 3)), std::invalid_argument);
    const QuaternionRing h;
    CHECK_THROWS_AS(det(Matrix<QuaternionRing>(h, 2, 2)), std::domain_error);
}

TEST_CASE("invertibility delegates to ring units") {
    const IntegerRing z;
    Matrix<IntegerRing> a(z, 2, 2), b(z, 2, 2);
    a.at(0, 0) = 1; a.at(0, 1) = 1; a.at(1, 1) = 1;
    b.at(0, 0) = 2; b.at(1, 1) = 1;
    CHECK(is_invertible_mat(a));
    CHECK_FALSE(is_invertible_mat(b)); // det 2 is no unit of Z
    const RationalField q;
    Matrix<RationalField> bq(q, 2, 2);
    bq.at(0, 0) = BigRational(2); bq.at(1, 1) = BigRational(1);
    CHECK(is_invertible_mat(bq)); // but it is a unit of Q
}

TEST_CASE("conjugate transpose over quaternions") {
    const QuaternionRing h;
    const Quaternion qi(0, 1, 0, 0), qj(0, 0, 1, 0), qk(0, 0, 0, 1);
    auto star = [](const Quaternion& x) { return x.conj(); };

    Matrix<QuaternionRing> m(h, 2, 2);
    m.at(0, 0) = qi; m.at(0, 1) = qj; m.at(1, 1) = qk;
    const auto ct = conj_transpose(m, star);
    CHECK(ct.at(0, 0) == -qi);
    CHECK(ct.at(0, 1) == Quaternion());
    CHECK(ct.at(1, 0) == -qj);
    CHECK(ct.at(1, 1) == -qk);

    Matrix<QuaternionRing> d(h, 2, 2);
    d.at(0, 0) = qi; d.at(1, 1) = qi;
    CHECK(is_antisymmetric(d, star));

    Matrix<QuaternionRing> nd(h, 2, 2);
    nd.at(0, 1) = qi;
    CHECK_FALSE(is_antisymmetric(nd, star));

    // matrices with m* = -m close under the commutator
    Rng rng(401);
    auto rand_q = [&] {
        return Quaternion(BigRational(rng.int_in(-4, 4)), BigRational(rng.int_in(-4, 4)),
                          BigRational(rng.int_in(-4, 4)), BigRational(rng.int_in(-4, 4)));
    };
    for (int t = 0; t < 60; ++t) {
        auto raw_a = rand_mat(h, 3, rand_q);
        auto raw_b = rand_mat(h, 3, rand_q);
        const auto a = raw_a - conj_transpose(raw_a, star);
        const auto b = raw_b - conj_transpose(raw_b, star);
        REQUIRE(is_antisymmetric(a, star));
        REQUIRE(is_antisymmetric(b, star));
        CHECK(is_antisymmetric(gl_bracket(a, b), star));
    }
}

TEST_CASE("apply and powers") {
    Rng rng(503);
    const PrimeField f7(7);
    for (int t = 0; t < 50; ++t) {
        auto a = rand_mat(f7, 3, [&] { return f7.from_int(rng.int_in(0, 6)); });
        auto b = rand_mat(f7, 3, [&] { return f7.from_int(rng.int_in(0, 6)); });
        std::vector<PrimeFieldElement> x{f7.from_int(rng.int_in(0, 6)),
                                         f7.from_int(rng.int_in(0, 6)),
                                         f7.from_int(rng.int_in(0, 6))};
        CHECK(mat_apply(a * b, x) == mat_apply(a, mat_apply(b, x)));
    }
    const RationalField q;
    Matrix<RationalField> u(q, 2, 2);
    u.at(0, 0) = BigRational(1); u.at(0, 1) = BigRational(1); u.at(1, 1) = BigRational(1);
    const auto u5 = mat_pow(u, 5);
    CHECK(u5.at(0, 1) == BigRational(5));
    CHECK(mat_pow(u, 0) == Matrix<RationalField>::identity(q, 2));
}

TEST_CASE("exact elimination: rref, rank, nullspace, span") {
    const RationalField q;
    std::vector<FieldVec<RationalField>> rows = {
        {BigRational(1), BigRational(2), BigRational(3)},
        {BigRational(2), BigRational(4), BigRational(6)},
        {BigRational(0), BigRational(1), BigRational(1)},
    };
    CHECK(rank(q, rows) == 2);

    const auto ns = nullspace(q, rows, 3);
    REQUIRE(ns.size() == 1);
    for (const auto& row : rows) {
        BigRational dot(0);
        for (std::size_t j = 0; j < 3; ++j) dot += row[j] * ns[0][j];
        CHECK(dot.is_zero());
    }

    const std::vector<FieldVec<RationalField>> basis = {
        {BigRational(1), BigRational(0), BigRational(1)},
        {BigRational(0), BigRational(1), BigRational(1)},
    };
    const FieldVec<RationalField> inside = {BigRational(2), BigRational(3), BigRational(5)};
    const FieldVec<RationalField> outside = {BigRational(1), BigRational(0), BigRational(0)};
    CHECK(in_span(q, basis, inside));
    CHECK_FALSE(in_span(q, basis, outside));
    const auto coords = coords_in_basis(q, basis, inside);
    CHECK(coords == FieldVec<RationalField>{BigRational(2), BigRational(3)});
    CHECK_THROWS_AS(coords_in_basis(q, basis, outside), std::domain_error);
}

TEST_CASE("rank-nullity on random matrices over F_7") {
    Rng rng(601);
    const PrimeField f7(7);
    for (int t = 0; t < 100; ++t) {
        const std::size_t m = static_cast<std::size_t>(rng.int_in(1, 5));
        const std::size_t n = static_cast<std::size_t>(rng.int_in(1, 5));
        std::vector<FieldVec<PrimeField>> rows(m);
        for (auto& row : rows) {
            row.reserve(n);
            for (std::size_t j = 0; j < n; ++j) row.push_back(f7.from_int(rng.int_in(0, 6)));
        }
        const auto ns = nullspace(f7, rows, n);
        CHECK(rank(f7, rows) + ns.size() == n);
        for (const auto& v : ns) {
            for (const auto& row : rows) {
                auto dot = f7.zero();
                for (std::size_t j = 0; j < n; ++j) dot = f7.add(dot, f7.mul(row[j], v[j]));
                CHECK(f7.is_zero(dot));
            }
        }
    }
}
