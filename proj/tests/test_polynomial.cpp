#include <catch2/catch_amalgamated.hpp>

#include <random>

#include <dickson/polynomial.hpp>

#include "support.hpp"

using dickson::CoeffPoly;
using dickson::ParamPoly;
using dickson::Poly;
using dickson::Rational;
using P = Poly<Rational>;

TEST_CASE("canonical trim") {
    CHECK(P(std::vector<Rational>{Rational(0), Rational(0)}).is_zero_poly());
    CHECK(P(std::vector<Rational>{Rational(1), Rational(0)}).degree() == 0);
    CHECK(P{}.degree() == -1);
    CHECK(P::monomial(3, Rational(0)).is_zero_poly());
}

TEST_CASE("indexing beyond the stored range yields zero") {
    const P p = P::monomial(2, Rational(5));
    CHECK(p[0] == Rational(0));
    CHECK(p[2] == Rational(5));
    CHECK(p[99] == Rational(0));
}

TEST_CASE("ring axioms on random polynomials") {
    std::mt19937_64 rng(1234);
    for (int trial = 0; trial < 60; ++trial) {
        const P a = testsupport::random_poly(rng, 8);
        const P b = testsupport::random_poly(rng, 8);
        const P c = testsupport::random_poly(rng, 8);
        CHECK(a + b == b + a);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a - a).is_zero_poly());
        CHECK(a * P(Rational(1)) == a);
        CHECK((a * P{}).is_zero_poly());
    }
}

TEST_CASE("degree of a product adds") {
    std::mt19937_64 rng(77);
    for (int trial = 0; trial < 40; ++trial) {
        const P a = testsupport::random_poly(rng, 6);
        const P b = testsupport::random_poly(rng, 6);
        if (a.is_zero_poly() || b.is_zero_poly()) continue;
        CHECK((a * b).degree() == a.degree() + b.degree());
        CHECK((a * b).leading() == a.leading() * b.leading());
    }
}

TEST_CASE("derivative is linear and satisfies the Leibniz rule") {
    std::mt19937_64 rng(4321);
    for (int trial = 0; trial < 60; ++trial) {
        const P a = testsupport::random_poly(rng, 8);
        const P b = testsupport::random_poly(rng, 8);
        CHECK((a + b).derivative() == a.derivative() + b.derivative());
        CHECK((a * b).derivative() == a.derivative() * b + a * b.derivative());
    }
    CHECK(P(Rational(3)).derivative().is_zero_poly());
    CHECK(P::monomial(4, Rational(1)).derivative() == P::monomial(3, Rational(4)));
}

TEST_CASE("evaluation is a ring homomorphism") {
    std::mt19937_64 rng(999);
    for (int trial = 0; trial < 60; ++trial) {
        const P a = testsupport::random_poly(rng, 7);
        const P b = testsupport::random_poly(rng, 7);
        const Rational x = testsupport::random_rational(rng, 6, 5);
        CHECK((a + b).eval(x) == a.eval(x) + b.eval(x));
        CHECK((a * b).eval(x) == a.eval(x) * b.eval(x));
    }
}

TEST_CASE("bivariate evaluation routes agree") {
    std::mt19937_64 rng(555);
    for (int trial = 0; trial < 40; ++trial) {
        const ParamPoly f = testsupport::random_param_poly(rng, 6);
        const Rational x = testsupport::random_rational(rng, 6, 5);
        const Rational a = testsupport::random_rational(rng, 6, 5);
        CHECK(eval(f, x, a) == at_parameter(f, a).eval(x));
    }
}

TEST_CASE("eval_double tracks exact evaluation") {
    const P p(std::vector<Rational>{Rational(1, 2), Rational(-3), Rational(1)});
    // 1/2 - 3x + x^2 at x = 2 -> -3/2, exactly representable
    CHECK(dickson::eval_double(p, 2.0) == -1.5);
}

TEST_CASE("pretty printing") {
    using dickson::param_monomial;
    const ParamPoly f = param_monomial(3, 0, 1) - param_monomial(1, 1, 3);
    CHECK(to_string(f) == "x^3 - 3*a*x");
    CHECK(to_string(ParamPoly{}) == "0");
    const CoeffPoly c = dickson::coeff_a_pow(2, Rational(-1, 2));
    CHECK(to_string(c) == "-1/2*a^2");
}

TEST_CASE("scalar multiplication both sides") {
    const P p = P::monomial(2, Rational(3));
    CHECK(p * Rational(2) == Rational(2) * p);
    CHECK((p * Rational(0)).is_zero_poly());
}
