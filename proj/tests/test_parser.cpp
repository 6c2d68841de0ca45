#include "doctest.h"

#include "lieva/parser.hpp"
#include "lieva/rng.hpp"

#include <string>

using namespace lieva;

TEST_CASE("rational literals") {
    CHECK(parse_rational("3/4") == BigRational(3, 4));
    CHECK(parse_rational("-7") == BigRational(-7));
    CHECK(parse_rational("0") == BigRational(0));
    CHECK(parse_rational("12/8") == BigRational(3, 2));
    CHECK(parse_rational(" 42 ") == BigRational(42));
    CHECK(parse_rational("3/4").to_string() == "3/4");
    CHECK(parse_rational("-12/8").to_string() == "-3/2");

    CHECK_THROWS_AS(parse_rational(""), ParseError);
    CHECK_THROWS_AS(parse_rational("/4"), ParseError);
    CHECK_THROWS_AS(parse_rational("3/"), ParseError);
    CHECK_THROWS_AS(parse_rational("abc"), ParseError);
    try {
        parse_rational("3/0");
        FAIL("expected zero-denominator error");
    } catch (const ParseError& e) {
        CHECK(e.position() == 2);
    }
    try {
        parse_rational("3x");
        FAIL("expected trailing-characters error");
    } catch (const ParseError& e) {
        CHECK(e.position() == 1);
    }
}

TEST_CASE("quaternion literals") {
    const Quaternion q = parse_quaternion("1-2i+0j+3/4k");
    CHECK(q.re() == BigRational(1));
    CHECK(q.ci() == BigRational(-2));
    CHECK(q.cj() == BigRational(0));
    CHECK(q.ck() == BigRational(3, 4));
    CHECK(q.to_string() == "1-2i+0j+3/4k");
    CHECK(parse_quaternion(q.to_string()) == q);

    CHECK(parse_quaternion("-1/2+0i+0j+0k") == Quaternion(BigRational(-1, 2)));
    CHECK_THROWS_AS(parse_quaternion("1+2i+3j"), ParseError);
    try {
        parse_quaternion("1+2j+0i+0k");
        FAIL("expected unit-order error");
    } catch (const ParseError& e) {
        CHECK(e.position() == 3);
    }
}

TEST_CASE("p-adic literals") {
    const PadicScaled x = parse_padic("padic(1/3; 5, 4)");
    CHECK(x.prime() == 5);
    CHECK(x.precision() == 4);
    CHECK(x.valuation() == 0);
    CHECK(x.unit() == 417);
    CHECK(x.to_string() == "padic(417; 5, 4)");
    CHECK(parse_padic(x.to_string()) == x);

    CHECK(parse_padic("padic(0; 7, 3)").is_exact_zero());
    const PadicScaled neg = parse_padic("padic(26/5; 5, 3)");
    CHECK(neg.valuation() == -1);
    CHECK(neg.unit() == 26);

    CHECK_THROWS_AS(parse_padic("padic(1/3; 6, 4)"), std::domain_error);
    CHECK_THROWS_AS(parse_padic("padic(1/3; 5, 0)"), ParseError);
    CHECK_THROWS_AS(parse_padic("padic(1/3; 5)"), ParseError);
    CHECK_THROWS_AS(parse_padic("padic(1/3; 5, 4"), ParseError);
    CHECK_THROWS_AS(parse_padic("padik(1; 5, 4)"), ParseError);
}

TEST_CASE("polynomial literals") {
    const RationalField q;
    const auto p = parse_polynomial("3/2*t1^2*t2 + t3");
    CHECK(p.nvars() == 3);
    CHECK(p.to_string() == "3/2*t1^2*t2 + t3");
    CHECK(parse_polynomial(p.to_string()) == p);

    CHECK(parse_polynomial("-t1 - 2").to_string() == "-t1 - 2");
    CHECK(parse_polynomial("t1*t1") == parse_polynomial("t1^2"));
    CHECK(parse_polynomial("0").is_zero());
    CHECK(parse_polynomial("5/10").to_string() == "1/2");
    CHECK(parse_polynomial("2*t1 + 3*t1") == parse_polynomial("5*t1"));
    CHECK(parse_polynomial("t2^0") == Polynomial<RationalField>::constant(q, 2, BigRational(1)));

    try {
        parse_polynomial("t0");
        FAIL("expected variable-index error");
    } catch (const ParseError& e) {
        CHECK(e.position() == 1);
    }
    CHECK_THROWS_AS(parse_polynomial("3*"), ParseError);
    CHECK_THROWS_AS(parse_polynomial("t1^"), ParseError);
    CHECK_THROWS_AS(parse_polynomial("^2"), ParseError);
    CHECK_THROWS_AS(parse_polynomial("t1 t2"), ParseError);
}

TEST_CASE("scalar expression dispatch") {
    CHECK(std::holds_alternative<BigRational>(parse_scalar_expr("3/4")));
    CHECK(std::holds_alternative<PadicScaled>(parse_scalar_expr("padic(1; 5, 4)")));
    CHECK(std::holds_alternative<Quaternion>(parse_scalar_expr("1+0i+0j+0k")));
    CHECK(std::holds_alternative<Polynomial<RationalField>>(parse_scalar_expr("t1 + 1")));
    CHECK_THROWS_AS(parse_scalar_expr("   "), ParseError);
}

TEST_CASE("printed values round-trip through the parser") {
    Rng rng(907);
    const RationalField q;

    for (int t = 0; t < 400; ++t) {
        const BigRational r(rng.int_in(-999, 999), rng.int_in(1, 60));
        CHECK(parse_rational(r.to_string()) == r);
        CHECK(parse_rational(r.to_string()).to_string() == r.to_string());
    }

    for (int t = 0; t < 200; ++t) {
        const Quaternion w(BigRational(rng.int_in(-9, 9), rng.int_in(1, 4)),
                           BigRational(rng.int_in(-9, 9), rng.int_in(1, 4)),
                           BigRational(rng.int_in(-9, 9), rng.int_in(1, 4)),
                           BigRational(rng.int_in(-9, 9), rng.int_in(1, 4)));
        CHECK(parse_quaternion(w.to_string()) == w);
        CHECK(parse_quaternion(w.to_string()).to_string() == w.to_string());
    }

    const std::uint32_t primes[] = {2, 5, 13};
    for (int t = 0; t < 200; ++t) {
        const std::uint32_t p = primes[static_cast<std::size_t>(rng.int_in(0, 2))];
        const BigRational r(rng.int_in(-999, 999), rng.int_in(1, 50));
        const PadicScaled x = padic_of_rational(r, p, 5);
        CHECK(parse_padic(x.to_string()) == x);
        CHECK(parse_padic(x.to_string()).to_string() == x.to_string());
    }

    for (int t = 0; t < 200; ++t) {
        const std::size_t nvars = static_cast<std::size_t>(rng.int_in(1, 3));
        Polynomial<RationalField> poly(q, nvars);
        const int nterms = rng.int_in(0, 4);
        for (int k = 0; k < nterms; ++k) {
            std::vector<std::uint32_t> exps(nvars);
            for (auto& e : exps) e = static_cast<std::uint32_t>(rng.int_in(0, 3));
            poly = poly + Polynomial<RationalField>::monomial(
                              q, MultiIndex(exps), BigRational(rng.int_in(-9, 9), rng.int_in(1, 4)));
        }
        // printing forgets variables that never occur, so parsing recovers
        // the ring only when the top variable is actually mentioned; the
        // canonical-text round trip must hold regardless
        if (poly.degree() < 1) continue;
        const std::string s = poly.to_string();
        const auto parsed = parse_polynomial(s);
        CHECK(parsed.to_string() == s);
        if (parsed.nvars() == poly.nvars()) CHECK(parsed == poly);
    }
}

TEST_CASE("grammar-valid strings with scattered whitespace parse cleanly") {
    Rng rng(911);
    auto pad = [&](const std::string& core) {
        std::string out;
        for (char ch : core) {
            if ((ch == '+' || ch == '-') && rng.int_in(0, 1)) out += ' ';
            out += ch;
            if ((ch == '+' || ch == '-') && rng.int_in(0, 1)) out += ' ';
        }
        if (rng.int_in(0, 1)) out = " " + out;
        if (rng.int_in(0, 1)) out += " ";
        return out;
    };
    for (int t = 0; t < 200; ++t) {
        const BigRational r(rng.int_in(-99, 99), rng.int_in(1, 20));
        CHECK(parse_rational(pad(r.to_string())) == r);
        const Quaternion w(BigRational(rng.int_in(-5, 5)), BigRational(rng.int_in(-5, 5)),
                           BigRational(rng.int_in(-5, 5)), BigRational(rng.int_in(-5, 5)));
        CHECK(parse_quaternion(pad(w.to_string())) == w);
    }
}
