#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "tetra/qseries.hpp"
#include "tetra/scalar.hpp"

using namespace tetra;

namespace {

LaurentPoly one_minus_u(int exp) {
    LaurentPoly p(1);
    p.add_term(exp, GaussianRational(-1));
    return p;
}

// Independent long-division oracle: naive coefficient-by-coefficient
// division of ordinary polynomials, written against the dense coefficient
// lists rather than LaurentPoly::div_exact.
LaurentPoly long_division_oracle(const LaurentPoly& a, const LaurentPoly& b) {
    std::vector<GaussianRational> x(static_cast<std::size_t>(a.max_exp()) + 1);
    std::vector<GaussianRational> y(static_cast<std::size_t>(b.max_exp()) + 1);
    for (const auto& [e, c] : a.terms()) x[static_cast<std::size_t>(e)] = c;
    for (const auto& [e, c] : b.terms()) y[static_cast<std::size_t>(e)] = c;
    std::vector<GaussianRational> quot(x.size() - y.size() + 1);
    for (std::size_t step = quot.size(); step-- > 0;) {
        GaussianRational f = x[step + y.size() - 1] / y.back();
        quot[step] = f;
        for (std::size_t k = 0; k < y.size(); ++k) x[step + k] -= f * y[k];
    }
    LaurentPoly q;
    for (std::size_t k = 0; k < quot.size(); ++k) q.add_term(static_cast<int>(k), quot[k]);
    for (const auto& c : x) REQUIRE(c.is_zero());
    return q;
}

std::mt19937 rng(20260814);

GaussianRational random_grat() {
    std::uniform_int_distribution<int> num(-6, 6), den(1, 4);
    return GaussianRational(Rational(num(rng), den(rng)), Rational(num(rng), den(rng)));
}

LaurentPoly random_poly() {
    std::uniform_int_distribution<int> exp(-5, 5), nterms(1, 4);
    LaurentPoly p;
    int n = nterms(rng);
    for (int k = 0; k < n; ++k) p.add_term(exp(rng), random_grat());
    return p;
}

Scalar random_scalar() {
    LaurentPoly num = random_poly();
    LaurentPoly den = random_poly();
    while (den.is_zero()) den = random_poly();
    return Scalar(num, den);
}

}  // namespace

TEST_CASE("gaussian rational field operations") {
    GaussianRational i = GaussianRational::i();
    CHECK(i * i == GaussianRational(-1));
    GaussianRational a(Rational(1, 2), Rational(3, 4));
    CHECK(a * a.inv() == GaussianRational(1));
    CHECK(a + (-a) == GaussianRational());
    CHECK((a / a).is_one());
    CHECK(a.conj() * a == GaussianRational(a.norm2()));
    CHECK_THROWS_AS(GaussianRational().inv(), std::domain_error);
    CHECK(a.str() == "1/2+3/4i");
    CHECK((-i).str() == "-i");
}

TEST_CASE("laurent polynomial arithmetic") {
    LaurentPoly p = LaurentPoly::monomial(2);       // u^2
    LaurentPoly q = LaurentPoly::monomial(-2);      // u^-2
    LaurentPoly s = p + q;
    CHECK(s.min_exp() == -2);
    CHECK(s.max_exp() == 2);
    CHECK((p * q).is_one());
    CHECK((s - s).is_zero());
    LaurentPoly prod = one_minus_u(2) * one_minus_u(4);
    CHECK(prod.coeff(0) == GaussianRational(1));
    CHECK(prod.coeff(2) == GaussianRational(-1));
    CHECK(prod.coeff(4) == GaussianRational(-1));
    CHECK(prod.coeff(6) == GaussianRational(1));
}

TEST_CASE("canonical form: (1-q^2)/(1-q) reduces to 1+q") {
    // q = u^2, so 1-q^2 = 1-u^4 and 1-q = 1-u^2.
    Scalar s(one_minus_u(4), one_minus_u(2));
    LaurentPoly expect(1);
    expect.add_term(2, GaussianRational(1));
    CHECK(s == Scalar(expect));
    CHECK(s.str() == "(1 + u^2)/(1)");
}

TEST_CASE("canonical form pushes units into the numerator") {
    // u^3 / u^5 => u^-2 / 1
    Scalar s(LaurentPoly::monomial(3), LaurentPoly::monomial(5));
    CHECK(s == Scalar::u_pow(-2));
    CHECK(s.den().is_one());
    // denominator constant coefficient is 1 after normalization
    Scalar t(LaurentPoly(1), one_minus_u(2).scaled(GaussianRational(Rational(3, 7))));
    CHECK(t.den().coeff(0).is_one());
    CHECK(t * Scalar(one_minus_u(2)) == Scalar(GaussianRational(Rational(7, 3))));
}

TEST_CASE("canonical form is idempotent and gcd-reduced") {
    for (int trial = 0; trial < 60; ++trial) {
        Scalar s = random_scalar();
        if (s.is_zero()) continue;
        Scalar re(s.num(), s.den());
        CHECK(re == s);
        LaurentPoly g = random_poly();
        if (g.is_zero()) continue;
        Scalar padded(s.num() * g, s.den() * g);
        CHECK(padded == s);
    }
}

TEST_CASE("scalar field axioms on random values") {
    for (int trial = 0; trial < 40; ++trial) {
        Scalar a = random_scalar(), b = random_scalar(), c = random_scalar();
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK(a - a == Scalar());
        if (!a.is_zero()) {
            CHECK(a * a.inv() == Scalar(1));
            CHECK(a.pow(3) * a.pow(-3) == Scalar(1));
        }
    }
    CHECK_THROWS_AS(Scalar(1).inv() / Scalar(0), std::domain_error);
    CHECK_THROWS_AS(Scalar(LaurentPoly(1), LaurentPoly()), std::domain_error);
}

TEST_CASE("q-integer [2]_q = q + q^-1") {
    LaurentPoly two = q_integer(2, 2);
    LaurentPoly expect;
    expect.add_term(2, GaussianRational(1));
    expect.add_term(-2, GaussianRational(1));
    CHECK(two == expect);
    // [m]! in base q^(1/2)
    CHECK(q_integer_factorial(0, 1) == Scalar(1));
    CHECK(q_integer_factorial(1, 1) == Scalar(1));
    CHECK(q_integer_factorial(2, 1) == Scalar(q_integer(2, 1)));
}

TEST_CASE("q-pochhammer values") {
    CHECK(q_pochhammer(2, 0).is_one());
    // (q; q)_2 = (1-q)(1-q^2)
    CHECK(q_pochhammer(2, 2) == one_minus_u(2) * one_minus_u(4));
    // (q^2; q^2)_3
    CHECK(q_pochhammer(4, 3) == one_minus_u(4) * one_minus_u(8) * one_minus_u(12));
    CHECK_THROWS_AS(q_pochhammer(0, 1), std::domain_error);
}

TEST_CASE("gaussian binomial binom(2,1) in base q^2 is 1+q^2") {
    // Oracle: long division of (q^2;q^2)_2 by ((q^2;q^2)_1)^2, frozen value 1 + u^4.
    LaurentPoly oracle = long_division_oracle(q_pochhammer(4, 2), q_pochhammer(4, 1) * q_pochhammer(4, 1));
    LaurentPoly frozen(1);
    frozen.add_term(4, GaussianRational(1));
    CHECK(oracle == frozen);
    CHECK(q_binomial(2, 1, 4) == frozen);
}

TEST_CASE("gaussian binomial symmetry and recurrence") {
    for (int m = 1; m <= 8; ++m) {
        for (int k = 0; k <= m; ++k) {
            CHECK(q_binomial(m, k, 2) == q_binomial(m, m - k, 2));
            // binom(m,k)_p = binom(m-1,k)_p + p^(m-k) binom(m-1,k-1)_p
            LaurentPoly rec = q_binomial(m - 1, k, 2);
            rec += LaurentPoly::monomial(2 * (m - k)) * q_binomial(m - 1, k - 1, 2);
            CHECK(q_binomial(m, k, 2) == rec);
        }
    }
    CHECK(q_binomial(3, -1, 2).is_zero());
    CHECK(q_binomial(3, 4, 2).is_zero());
}

TEST_CASE("serialization is deterministic and ascending") {
    Scalar s(one_minus_u(4), LaurentPoly(1));
    CHECK(s.str() == "(1 + -u^4)/(1)");
    Scalar t = Scalar::u_pow(-2) * Scalar(GaussianRational(Rational(0), Rational(1)));
    CHECK(t.str() == "((i)*u^-2)/(1)");
}
