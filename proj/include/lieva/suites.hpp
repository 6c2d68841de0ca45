#pragma once

#include "lieva/algebra_io.hpp"
#include "lieva/complex_matrix.hpp"
#include "lieva/exponential.hpp"
#include "lieva/norms.hpp"
#include "lieva/rng.hpp"
#include "lieva/vector_field.hpp"

#include "json.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace lieva {

// Request to run one named verification suite. Unset fields fall back to the
// suite's documented defaults; a seed is mandatory for the randomized suites.
struct SuiteSpec {
    std::string suite;
    std::string algebra;       // table-driven suites: bundled name or file path
    std::string mode = "all";  // det-exp-tr: float | series | padic | all
    std::optional<std::uint64_t> seed;
    std::optional<long> trials;
    std::optional<std::uint32_t> prime;
    std::optional<int> precision;
    std::optional<long> truncation;
    std::optional<std::size_t> dim;
};

// Outcome of a suite run. A failed run carries at least one witness; the
// witness list is capped so a systematically broken input cannot flood the
// report. Wall-clock time appears in the text rendering only, keeping the
// JSON rendering byte-identical across runs with the same seed.
struct SuiteReport {
    std::string suite;
    nlohmann::json parameters = nlohmann::json::object();
    bool pass = true;
    long checks = 0;
    std::vector<nlohmann::json> witnesses;
    double seconds = 0.0;
};

inline const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {
        "lie-axioms",          "adjoint",    "derivations",
        "vfield-bracket",      "det-exp-tr", "padic-exp",
        "ultrametric-norms",   "factorial-valuation",
        "quaternion",          "pnorm-inequalities"};
    return names;
}

inline bool suite_is_randomized(const std::string& name) {
    return name != "lie-axioms" && name != "factorial-valuation";
}

namespace suites_detail {

constexpr std::size_t max_witnesses = 10;

inline void fail_with(SuiteReport& rep, nlohmann::json witness) {
    rep.pass = false;
    if (rep.witnesses.size() < max_witnesses) rep.witnesses.push_back(std::move(witness));
}

inline BigRational small_rational(Rng& rng) {
    return {rng.int_in(-20, 20), rng.int_in(1, 12)};
}

// Random coordinates relative to an n-element basis. Rational coordinates get
// genuine denominators; other fields embed small integers.
template <FieldContext F>
FieldVec<F> random_element(const F& f, std::size_t n, Rng& rng) {
    FieldVec<F> v;
    v.reserve(n);
    for (std::size_t j = 0; j < n; ++j) {
        if constexpr (std::is_same_v<F, RationalField>)
            v.push_back(small_rational(rng));
        else
            v.push_back(f.from_int(rng.int_in(-9, 9)));
    }
    return v;
}

template <FieldContext F>
std::string vec_literal(const F& f, const FieldVec<F>& v) {
    std::string s = "(";
    for (std::size_t j = 0; j < v.size(); ++j) {
        if (j) s += ", ";
        s += scalar_to_literal(f, v[j]);
    }
    return s + ")";
}

template <RingContext C>
std::string matrix_literal(const Matrix<C>& m) {
    std::string s = "[";
    for (std::size_t i = 0; i < m.rows(); ++i) {
        if (i) s += ", ";
        s += "[";
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j) s += ", ";
            s += m.ctx().to_string(m.at(i, j));
        }
        s += "]";
    }
    return s + "]";
}

inline std::string matrix_literal(const ComplexMatrix& m) {
    std::string s = "[";
    for (std::size_t i = 0; i < m.dim(); ++i) {
        if (i) s += ", ";
        s += "[";
        for (std::size_t j = 0; j < m.dim(); ++j) {
            if (j) s += ", ";
            s += detail::format_complex(m.at(i, j));
        }
        s += "]";
    }
    return s + "]";
}

inline Polynomial<RationalField> random_poly(const RationalField& q, std::size_t nvars,
                                             long maxdeg, Rng& rng, int max_terms = 4) {
    using P = Polynomial<RationalField>;
    P acc(q, nvars);
    const long terms = rng.int_in(1, max_terms);
    for (long t = 0; t < terms; ++t) {
        std::vector<std::uint32_t> exps(nvars, 0);
        long budget = rng.int_in(0, maxdeg);
        for (std::size_t v = 0; v < nvars && budget > 0; ++v) {
            const long d = rng.int_in(0, budget);
            exps[v] = static_cast<std::uint32_t>(d);
            budget -= d;
        }
        acc = acc + P::monomial(q, MultiIndex(std::move(exps)), small_rational(rng));
    }
    return acc;
}

// Nonzero value with the requested valuation; the unit part is coprime to p.
inline PadicScaled random_padic_at(Rng& rng, std::uint32_t p, int precision, long valuation) {
    long cap = 1;
    for (int j = 0; j < precision && cap < 1000000; ++j) cap *= p;
    BigInt u(rng.int_in(1, cap - 1));
    if (u % p == 0) u = u + 1;
    return PadicScaled::make(p, precision, valuation, u);
}

inline long clamp_trials(std::optional<long> requested, long fallback, long cap) {
    const long t = requested.value_or(fallback);
    if (t < 1 || t > cap)
        throw std::invalid_argument("trials out of range (1.." + std::to_string(cap) + ")");
    return t;
}

// ---------------------------------------------------------------------------
// lie-axioms: alternating law and Jacobi identity of a bracket table
// ---------------------------------------------------------------------------

inline void suite_lie_axioms(const SuiteSpec& spec, const std::filesystem::path& data_dir,
                             SuiteReport& rep) {
    const std::string algebra = spec.algebra.empty() ? "so3" : spec.algebra;
    rep.parameters["algebra"] = algebra;
    AnyTable table = load_table(algebra, data_dir);
    if (spec.prime) {
        const auto* rat = std::get_if<StructureConstants<RationalField>>(&table);
        if (!rat)
            throw std::invalid_argument(
                "prime re-embedding is only defined for tables over the rationals");
        rep.parameters["prime"] = *spec.prime;
        table = change_field(*rat, PrimeField(*spec.prime));
    }
    std::visit(
        [&](const auto& sc) {
            rep.parameters["field"] = field_to_json(sc.field());
            rep.parameters["dim"] = sc.dim();
            const auto lie = verify_lie(sc);
            rep.checks += 2;
            if (!lie.antisymmetric) {
                const auto [j, l] = *lie.antisymmetry_witness;
                fail_with(rep, {{"law", "alternating"},
                                {"pair", nlohmann::json::array({j + 1, l + 1})}});
            }
            if (!lie.jacobi) {
                const auto& t = *lie.jacobi_witness;
                fail_with(rep,
                          {{"law", "jacobi"},
                           {"triple", nlohmann::json::array({t[0] + 1, t[1] + 1, t[2] + 1})},
                           {"defect", vec_literal(sc.field(), *lie.jacobi_defect_value)}});
            }
        },
        table);
}

// ---------------------------------------------------------------------------
// adjoint: ad is a homomorphism onto matrix commutators
// ---------------------------------------------------------------------------

inline void suite_adjoint(const SuiteSpec& spec, const std::filesystem::path& data_dir,
                          SuiteReport& rep) {
    const std::string algebra = spec.algebra.empty() ? "sl2" : spec.algebra;
    const long trials = clamp_trials(spec.trials, 200, 100000);
    rep.parameters["algebra"] = algebra;
    rep.parameters["trials"] = trials;
    AnyTable table = load_table(algebra, data_dir);
    Rng rng(*spec.seed);
    std::visit(
        [&](const auto& sc) {
            const auto& f = sc.field();
            rep.parameters["field"] = field_to_json(f);
            rep.parameters["dim"] = sc.dim();
            for (long k = 0; k < trials; ++k) {
                const auto x = random_element(f, sc.dim(), rng);
                const auto y = random_element(f, sc.dim(), rng);
                const auto lhs = ad_matrix(sc, mult(sc, x, y));
                const auto rhs = gl_bracket(ad_matrix(sc, x), ad_matrix(sc, y));
                ++rep.checks;
                if (!(lhs == rhs))
                    fail_with(rep, {{"law", "ad-homomorphism"},
                                    {"trial", k},
                                    {"x", vec_literal(f, x)},
                                    {"y", vec_literal(f, y)}});
            }
        },
        table);
}

// ---------------------------------------------------------------------------
// derivations: ad x obeys Leibniz; derivations are closed under commutators
// ---------------------------------------------------------------------------

inline void suite_derivations(const SuiteSpec& spec, const std::filesystem::path& data_dir,
                              SuiteReport& rep) {
    const std::string algebra = spec.algebra.empty() ? "sl2" : spec.algebra;
    const long trials = clamp_trials(spec.trials, 200, 100000);
    rep.parameters["algebra"] = algebra;
    rep.parameters["trials"] = trials;
    AnyTable table = load_table(algebra, data_dir);
    Rng rng(*spec.seed);
    std::visit(
        [&](const auto& sc) {
            const auto& f = sc.field();
            rep.parameters["field"] = field_to_json(f);
            rep.parameters["dim"] = sc.dim();
            for (long k = 0; k < trials; ++k) {
                const auto x = random_element(f, sc.dim(), rng);
                const auto y = random_element(f, sc.dim(), rng);
                const auto adx = ad_matrix(sc, x);
                const auto ady = ad_matrix(sc, y);
                ++rep.checks;
                if (!is_derivation(adx, sc))
                    fail_with(rep, {{"law", "ad-is-derivation"},
                                    {"trial", k},
                                    {"x", vec_literal(f, x)}});
                ++rep.checks;
                if (!is_derivation(gl_bracket(adx, ady), sc))
                    fail_with(rep, {{"law", "derivation-commutator"},
                                    {"trial", k},
                                    {"x", vec_literal(f, x)},
                                    {"y", vec_literal(f, y)}});
            }
        },
        table);
}

// ---------------------------------------------------------------------------
// vfield-bracket: bracket equals the operator commutator; linear fields
// reverse the sign of matrix commutators
// ---------------------------------------------------------------------------

inline void suite_vfield_bracket(const SuiteSpec& spec, SuiteReport& rep) {
    const long trials = clamp_trials(spec.trials, 100, 100000);
    const std::size_t max_nvars = spec.dim.value_or(3);
    const long max_deg = spec.truncation.value_or(3);
    if (max_nvars < 1 || max_nvars > 6)
        throw std::invalid_argument("vfield-bracket: dim (variable count) must be 1..6");
    if (max_deg < 1 || max_deg > 8)
        throw std::invalid_argument("vfield-bracket: truncation (degree cap) must be 1..8");
    rep.parameters["trials"] = trials;
    rep.parameters["variables_max"] = max_nvars;
    rep.parameters["degree_max"] = max_deg;
    const RationalField q;
    using VF = VectorField<RationalField>;
    Rng rng(*spec.seed);

    for (long k = 0; k < trials; ++k) {
        const std::size_t n = static_cast<std::size_t>(rng.int_in(1, static_cast<long>(max_nvars)));
        std::vector<Polynomial<RationalField>> vc, wc;
        for (std::size_t j = 0; j < n; ++j) {
            vc.push_back(random_poly(q, n, max_deg, rng));
            wc.push_back(random_poly(q, n, max_deg, rng));
        }
        const VF v(vc), w(wc);
        const auto fpoly = random_poly(q, n, max_deg, rng);
        const auto lhs = vf_apply(vf_bracket(v, w), fpoly);
        const auto rhs = vf_apply(v, vf_apply(w, fpoly)) - vf_apply(w, vf_apply(v, fpoly));
        ++rep.checks;
        if (!(lhs == rhs))
            fail_with(rep, {{"law", "bracket-commutator"},
                            {"trial", k},
                            {"v", v.to_string()},
                            {"w", w.to_string()},
                            {"f", fpoly.to_string()}});
    }

    for (long k = 0; k < trials; ++k) {
        Matrix<RationalField> a(q, 2, 2), b(q, 2, 2);
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 2; ++j) {
                a.at(i, j) = small_rational(rng);
                b.at(i, j) = small_rational(rng);
            }
        const auto comm = matrix_to_vf(gl_bracket(a, b));
        const auto br = vf_bracket(matrix_to_vf(a), matrix_to_vf(b));
        bool ok = true;
        for (std::size_t j = 0; j < comm.n(); ++j)
            if (!(comm.component(j) == -br.component(j))) ok = false;
        ++rep.checks;
        if (!ok)
            fail_with(rep, {{"law", "linear-field-antihomomorphism"},
                            {"trial", k},
                            {"a", matrix_literal(a)},
                            {"b", matrix_literal(b)}});
    }
}

// ---------------------------------------------------------------------------
// det-exp-tr: det(exp M) = exp(tr M) in float, series, and p-adic calculi
// ---------------------------------------------------------------------------

inline void detexp_float(long trials, Rng& rng, SuiteReport& rep) {
    constexpr double tol = 1e-9;
    for (long k = 0; k < trials; ++k) {
        const std::size_t n = 2 + static_cast<std::size_t>(k % 3);
        ComplexMatrix m(n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                m.at(i, j) = std::polar(rng.unit(), 6.283185307179586 * rng.unit());
        const ExpReport r = det_exp_tr_report(m);
        ++rep.checks;
        if (!r.pass(tol))
            fail_with(rep, {{"mode", "float"},
                            {"trial", k},
                            {"matrix", matrix_literal(m)},
                            {"left", r.left},
                            {"right", r.right},
                            {"difference", detail::format_double(*r.difference)}});
    }
}

inline void detexp_series(long trials, long trunc, Rng& rng, SuiteReport& rep) {
    const RationalField q;
    const SeriesRing<RationalField> sr(q, 1, trunc);
    using P = Polynomial<RationalField>;
    for (long k = 0; k < trials; ++k) {
        const std::size_t n = 2 + static_cast<std::size_t>(k % 2);
        Matrix<SeriesRing<RationalField>> m(sr, n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                m.at(i, j) = PowerSeries<RationalField>(
                    P::monomial(q, MultiIndex{1}, small_rational(rng)), trunc);
        const ExpReport r = det_exp_tr_report(m);
        ++rep.checks;
        if (!r.pass())
            fail_with(rep, {{"mode", "series"},
                            {"trial", k},
                            {"matrix", matrix_literal(m)},
                            {"left", r.left},
                            {"right", r.right}});
    }
}

inline void detexp_padic(long trials, std::uint32_t p, int precision, Rng& rng,
                         SuiteReport& rep) {
    const PadicField f(p, precision);
    for (long k = 0; k < trials; ++k) {
        Matrix<PadicField> m(f, 2, 2);
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 2; ++j)
                m.at(i, j) = random_padic_at(rng, p, precision, rng.int_in(1, 3));
        const ExpReport r = det_exp_tr_report(m);
        ++rep.checks;
        if (!r.pass())
            fail_with(rep, {{"mode", "padic"},
                            {"trial", k},
                            {"matrix", matrix_literal(m)},
                            {"left", r.left},
                            {"right", r.right}});
    }
}

inline void suite_det_exp_tr(const SuiteSpec& spec, SuiteReport& rep) {
    const std::string mode = spec.mode.empty() ? "all" : spec.mode;
    if (mode != "all" && mode != "float" && mode != "series" && mode != "padic")
        throw std::invalid_argument("det-exp-tr: mode must be float, series, padic, or all");
    const std::uint32_t p = spec.prime.value_or(5);
    const int precision = spec.precision.value_or(6);
    const long trunc = spec.truncation.value_or(6);
    if (precision < 1 || precision > 64)
        throw std::invalid_argument("det-exp-tr: precision must be 1..64");
    if (trunc < 1 || trunc > 16)
        throw std::invalid_argument("det-exp-tr: truncation must be 1..16");
    rep.parameters["mode"] = mode;
    rep.parameters["prime"] = p;
    rep.parameters["precision"] = precision;
    rep.parameters["truncation"] = trunc;
    if (spec.trials) {
        rep.parameters["trials"] = clamp_trials(spec.trials, 0, 100000);
    } else {
        rep.parameters["trials"] =
            nlohmann::json{{"float", 100}, {"padic", 50}, {"series", 50}};
    }
    Rng rng(*spec.seed);
    if (mode == "all" || mode == "float")
        detexp_float(spec.trials.value_or(100), rng, rep);
    if (mode == "all" || mode == "series")
        detexp_series(spec.trials.value_or(50), trunc, rng, rep);
    if (mode == "all" || mode == "padic")
        detexp_padic(spec.trials.value_or(50), p, precision, rng, rep);
}

// ---------------------------------------------------------------------------
// padic-exp: functional equation, inverse law, and domain rejection
// ---------------------------------------------------------------------------

inline void suite_padic_exp(const SuiteSpec& spec, SuiteReport& rep) {
    const long trials = clamp_trials(spec.trials, 100, 100000);
    const std::uint32_t p = spec.prime.value_or(5);
    const int precision = spec.precision.value_or(6);
    if (precision < 1 || precision > 64)
        throw std::invalid_argument("padic-exp: precision must be 1..64");
    const PadicField f(p, precision);
    rep.parameters["trials"] = trials;
    rep.parameters["prime"] = p;
    rep.parameters["precision"] = precision;
    Rng rng(*spec.seed);
    const long minval = (p == 2) ? 2 : 1;

    for (long k = 0; k < trials; ++k) {
        const PadicScaled a = random_padic_at(rng, p, precision, rng.int_in(minval, minval + 2));
        const PadicScaled b = random_padic_at(rng, p, precision, rng.int_in(minval, minval + 2));
        ++rep.checks;
        if (!(exp_padic(a + b) == exp_padic(a) * exp_padic(b)))
            fail_with(rep, {{"law", "homomorphism"},
                            {"trial", k},
                            {"a", a.to_string()},
                            {"b", b.to_string()}});
        ++rep.checks;
        if (!(exp_padic(a) * exp_padic(-a) == f.one()))
            fail_with(rep, {{"law", "inverse"}, {"trial", k}, {"a", a.to_string()}});
        if (k % 10 == 0) {
            const PadicScaled unit = random_padic_at(rng, p, precision, 0);
            ++rep.checks;
            bool rejected = false;
            try {
                (void)exp_padic(unit);
            } catch (const std::domain_error&) {
                rejected = true;
            }
            if (!rejected)
                fail_with(rep, {{"law", "domain-rejection"},
                                {"trial", k},
                                {"a", unit.to_string()}});
        }
    }
}

// ---------------------------------------------------------------------------
// ultrametric-norms: shift operator laws on a fixed grid, plus the entrywise
// operator-norm formula with constructive attainment on random matrices
// ---------------------------------------------------------------------------

inline void suite_ultrametric_norms(const SuiteSpec& spec, SuiteReport& rep) {
    const long trials = clamp_trials(spec.trials, 200, 100000);
    const std::size_t max_n = spec.dim.value_or(6);
    const std::uint32_t p = spec.prime.value_or(5);
    const int precision = spec.precision.value_or(8);
    if (max_n < 2 || max_n > 12)
        throw std::invalid_argument("ultrametric-norms: dim must be 2..12");
    if (precision < 1 || precision > 64)
        throw std::invalid_argument("ultrametric-norms: precision must be 1..64");
    const std::vector<std::uint32_t> grid_primes = {3, 5, 7, 13};
    rep.parameters["trials"] = trials;
    rep.parameters["dim_max"] = max_n;
    rep.parameters["prime"] = p;
    rep.parameters["precision"] = precision;
    rep.parameters["grid_primes"] = grid_primes;

    for (const std::uint32_t gp : grid_primes) {
        for (std::size_t n = 2; n <= max_n; ++n) {
            const auto t = shift_operator(n, gp, precision);
            const PadicField& f = t.ctx();
            Matrix<PadicField> scaled_id = Matrix<PadicField>::identity(f, n);
            for (std::size_t j = 0; j < n; ++j) scaled_id.at(j, j) = f.from_int(gp);
            ++rep.checks;
            if (!(mat_pow(t, static_cast<unsigned>(n)) == scaled_id))
                fail_with(rep, {{"law", "shift-power"},
                                {"n", n},
                                {"prime", gp}});
            const auto opn = ultra_opnorm(t, WeightedUltraNorm::shift_weights(gp, n));
            const auto expected = UltraNorm::power(gp, BigRational(-1, static_cast<long>(n)));
            ++rep.checks;
            if (!(opn.value == expected))
                fail_with(rep, {{"law", "shift-weighted-norm"},
                                {"n", n},
                                {"prime", gp},
                                {"norm", opn.value.to_string()},
                                {"expected", expected.to_string()}});
        }
    }

    const PadicField f(p, precision);
    Rng rng(*spec.seed);
    for (long k = 0; k < trials; ++k) {
        const std::size_t n = 1 + static_cast<std::size_t>(k % 4);
        Matrix<PadicField> m(f, n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                m.at(i, j) = (rng.int_in(0, 4) == 0)
                                 ? f.zero()
                                 : random_padic_at(rng, p, precision, rng.int_in(-2, 3));
        const auto w = WeightedUltraNorm::unweighted(p, n);
        const auto opn = ultra_opnorm(m, w);
        UltraNorm expected = UltraNorm::zero(p);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) expected = max(expected, padic_abs(m.at(i, j)));
        ++rep.checks;
        if (!(opn.value == expected))
            fail_with(rep, {{"law", "opnorm-max-entry"},
                            {"trial", k},
                            {"matrix", matrix_literal(m)},
                            {"norm", opn.value.to_string()},
                            {"expected", expected.to_string()}});
        std::vector<PadicScaled> basis_col(n, f.zero());
        basis_col[opn.witness_col] = f.one();
        ++rep.checks;
        if (!(ultra_vecnorm(mat_apply(m, basis_col), w) == opn.value))
            fail_with(rep, {{"law", "opnorm-attainment"},
                            {"trial", k},
                            {"matrix", matrix_literal(m)},
                            {"witness_col", opn.witness_col}});
    }
}

// ---------------------------------------------------------------------------
// factorial-valuation: v_p(n!) < n/(p-1), checked by cross-multiplication
// ---------------------------------------------------------------------------

inline void suite_factorial_valuation(const SuiteSpec& spec, SuiteReport& rep) {
    const long max_n = clamp_trials(spec.trials, 10000, 1000000);
    const std::vector<std::uint32_t> primes = {2,  3,  5,  7,  11, 13, 17, 19, 23,
                                               29, 31, 37, 41, 43, 47, 53, 59, 61,
                                               67, 71, 73, 79, 83, 89, 97};
    rep.parameters["max_n"] = max_n;
    rep.parameters["prime_max"] = 97;
    for (long n = 1; n <= max_n; ++n) {
        for (const std::uint32_t p : primes) {
            const std::uint64_t v = vp_factorial(static_cast<std::uint64_t>(n), p);
            ++rep.checks;
            if (!(v * (p - 1) < static_cast<std::uint64_t>(n))) {
                fail_with(rep, {{"law", "legendre-bound"},
                                {"n", n},
                                {"prime", p},
                                {"valuation", v}});
                return;
            }
        }
    }
}

// ---------------------------------------------------------------------------
// quaternion: norm multiplicativity, conjugation anti-automorphism, and the
// square of an imaginary quaternion
// ---------------------------------------------------------------------------

inline void suite_quaternion(const SuiteSpec& spec, SuiteReport& rep) {
    const long trials = clamp_trials(spec.trials, 10000, 1000000);
    rep.parameters["trials"] = trials;
    Rng rng(*spec.seed);
    for (long k = 0; k < trials; ++k) {
        const Quaternion x(small_rational(rng), small_rational(rng), small_rational(rng),
                           small_rational(rng));
        const Quaternion y(small_rational(rng), small_rational(rng), small_rational(rng),
                           small_rational(rng));
        ++rep.checks;
        if (!((x * y).norm_sq() == x.norm_sq() * y.norm_sq()))
            fail_with(rep, {{"law", "norm-multiplicative"},
                            {"trial", k},
                            {"x", x.to_string()},
                            {"y", y.to_string()}});
        ++rep.checks;
        if (!((x * y).conj() == y.conj() * x.conj()))
            fail_with(rep, {{"law", "conjugation-antiautomorphism"},
                            {"trial", k},
                            {"x", x.to_string()},
                            {"y", y.to_string()}});
        const Quaternion w(BigRational(0), x.ci(), x.cj(), x.ck());
        ++rep.checks;
        if (!(w * w == Quaternion(-w.norm_sq(), BigRational(0), BigRational(0), BigRational(0))))
            fail_with(rep, {{"law", "imaginary-square"},
                            {"trial", k},
                            {"w", w.to_string()}});
    }
}

// ---------------------------------------------------------------------------
// pnorm-inequalities: the two p-norm comparison bounds plus the Neumann
// series residual bound on random contractions
// ---------------------------------------------------------------------------

inline void suite_pnorm_inequalities(const SuiteSpec& spec, SuiteReport& rep) {
    const long trials = clamp_trials(spec.trials, 10000, 1000000);
    const std::size_t max_dim = spec.dim.value_or(16);
    if (max_dim < 1 || max_dim > 64)
        throw std::invalid_argument("pnorm-inequalities: dim must be 1..64");
    const long neumann_trials = std::max<long>(1, trials / 100);
    constexpr std::size_t neumann_terms = 60;
    rep.parameters["trials"] = trials;
    rep.parameters["dim_max"] = max_dim;
    rep.parameters["neumann_terms"] = neumann_terms;
    rep.parameters["neumann_trials"] = neumann_trials;
    const double exps[5] = {1.0, 1.5, 2.0, 3.0, std::numeric_limits<double>::infinity()};
    Rng rng(*spec.seed);

    for (long k = 0; k < trials; ++k) {
        const std::size_t n = static_cast<std::size_t>(rng.int_in(1, static_cast<long>(max_dim)));
        std::vector<double> v(n);
        for (auto& x : v) x = rng.in(-10.0, 10.0);
        double p = exps[rng.below(5)];
        double q = exps[rng.below(5)];
        if (q < p) std::swap(p, q);
        const PnormComparison cmp = pnorm_inequality_check(v, p, q);
        ++rep.checks;
        if (!cmp.pass()) {
            std::string vec = "(";
            for (std::size_t j = 0; j < n; ++j)
                vec += (j ? ", " : "") + detail::format_double(v[j]);
            vec += ")";
            fail_with(rep, {{"law", "pnorm-comparison"},
                            {"trial", k},
                            {"p", detail::format_double(p)},
                            {"q", detail::format_double(q)},
                            {"vector", vec},
                            {"norm_p", detail::format_double(cmp.norm_p)},
                            {"norm_q", detail::format_double(cmp.norm_q)}});
        }
    }

    for (long k = 0; k < neumann_trials; ++k) {
        const std::size_t n = static_cast<std::size_t>(rng.int_in(1, 8));
        ComplexMatrix x(n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) x.at(i, j) = Cplx(rng.in(-1.0, 1.0), rng.in(-1.0, 1.0));
        const double raw = opnorm_inf(x);
        const double target = rng.in(0.1, 0.85);
        if (raw > 0.0) x = x.scaled(Cplx(target / raw, 0.0));
        const double nrm = opnorm_inf(x);
        const ComplexMatrix s = neumann_inverse(x, neumann_terms);
        const ComplexMatrix residual =
            (ComplexMatrix::identity(n) - x) * s - ComplexMatrix::identity(n);
        const double res = opnorm_inf(residual);
        const double bound =
            std::pow(nrm, static_cast<double>(neumann_terms + 1)) / (1.0 - nrm) + 1e-12;
        ++rep.checks;
        if (!(res <= bound))
            fail_with(rep, {{"law", "neumann-residual"},
                            {"trial", k},
                            {"norm", detail::format_double(nrm)},
                            {"residual", detail::format_double(res)},
                            {"bound", detail::format_double(bound)}});
    }
}

}  // namespace suites_detail

// Runs one named suite. Throws std::invalid_argument for unknown suites,
// missing seeds, or out-of-range parameters (the driver maps these to usage
// errors); table files that cannot be read surface as std::runtime_error.
inline SuiteReport run_suite(const SuiteSpec& spec, const std::filesystem::path& data_dir) {
    bool known = false;
    for (const auto& n : suite_names()) known = known || (n == spec.suite);
    if (!known) throw std::invalid_argument("unknown suite: " + spec.suite);
    if (suite_is_randomized(spec.suite) && !spec.seed)
        throw std::invalid_argument("suite " + spec.suite + " requires a seed");

    SuiteReport rep;
    rep.suite = spec.suite;
    if (spec.seed) rep.parameters["seed"] = *spec.seed;
    const auto t0 = std::chrono::steady_clock::now();
    if (spec.suite == "lie-axioms")
        suites_detail::suite_lie_axioms(spec, data_dir, rep);
    else if (spec.suite == "adjoint")
        suites_detail::suite_adjoint(spec, data_dir, rep);
    else if (spec.suite == "derivations")
        suites_detail::suite_derivations(spec, data_dir, rep);
    else if (spec.suite == "vfield-bracket")
        suites_detail::suite_vfield_bracket(spec, rep);
    else if (spec.suite == "det-exp-tr")
        suites_detail::suite_det_exp_tr(spec, rep);
    else if (spec.suite == "padic-exp")
        suites_detail::suite_padic_exp(spec, rep);
    else if (spec.suite == "ultrametric-norms")
        suites_detail::suite_ultrametric_norms(spec, rep);
    else if (spec.suite == "factorial-valuation")
        suites_detail::suite_factorial_valuation(spec, rep);
    else if (spec.suite == "quaternion")
        suites_detail::suite_quaternion(spec, rep);
    else
        suites_detail::suite_pnorm_inequalities(spec, rep);
    rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

// Canonical JSON rendering: keys sorted, witnesses in discovery order, no
// timing field, so identical (suite, parameters, seed) gives identical bytes.
inline nlohmann::json report_to_json(const SuiteReport& rep) {
    nlohmann::json j;
    j["checks"] = rep.checks;
    j["parameters"] = rep.parameters;
    j["pass"] = rep.pass;
    j["suite"] = rep.suite;
    j["witnesses"] = rep.witnesses;
    return j;
}

inline std::string report_json_string(const SuiteReport& rep) {
    return report_to_json(rep).dump(2) + "\n";
}

inline std::string report_to_text(const SuiteReport& rep) {
    std::string out = "suite: " + rep.suite + "\n";
    out += "parameters:";
    for (const auto& [key, value] : rep.parameters.items())
        out += " " + key + "=" + (value.is_string() ? value.get<std::string>() : value.dump());
    out += "\n";
    out += "checks: " + std::to_string(rep.checks) + "\n";
    for (const auto& w : rep.witnesses) out += "witness: " + w.dump() + "\n";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3f", rep.seconds);
    out += "result: " + std::string(rep.pass ? "PASS" : "FAIL") + " (" + buf + " s)\n";
    return out;
}

}  // namespace lieva
