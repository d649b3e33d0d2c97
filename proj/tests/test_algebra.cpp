#include <doctest.h>

#include "folcheck/matrix.hpp"
#include "folcheck/polynomial.hpp"
#include "folcheck/textio.hpp"
#include "support/oracles.hpp"

using namespace folcheck;

namespace {
Polynomial P(std::string_view text, int n = 4) { return parsePolynomial(text, n); }
}  // namespace

TEST_SUITE("scalar") {
  TEST_CASE("parse and print rationals") {
    CHECK(parseScalar("3") == 3);
    CHECK(parseScalar("-6/4") == Scalar(-3, 2));
    CHECK(toString(Scalar(-3, 2)) == "-3/2");
    CHECK(toString(Scalar(0)) == "0");
    CHECK_THROWS_AS(parseScalar("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parseScalar("x"), std::invalid_argument);
    CHECK_THROWS_AS(parseScalar(""), std::invalid_argument);
  }

  TEST_CASE("big values stay exact") {
    Scalar s = 1;
    for (int i = 0; i < 40; ++i) s *= Scalar(1, 3);
    for (int i = 0; i < 40; ++i) s *= 3;
    CHECK(s == 1);
  }
}

TEST_SUITE("monomial") {
  TEST_CASE("degree, divisibility, lcm and gcd") {
    Monomial a = Monomial::variable(0, 2) * Monomial::variable(2);
    Monomial b = Monomial::variable(0) * Monomial::variable(1);
    CHECK(a.degree() == 3);
    CHECK(Monomial::variable(0).divides(a));
    CHECK_FALSE(b.divides(a));
    const Monomial l = Monomial::lcm(a, b);
    CHECK(l[0] == 2);
    CHECK(l[1] == 1);
    CHECK(l[2] == 1);
    CHECK(Monomial::gcd(a, b) == Monomial::variable(0));
    CHECK(a.quotient(Monomial::variable(0)) == Monomial::variable(0) * Monomial::variable(2));
  }

  TEST_CASE("grevlex order with z1 > z2 > z3") {
    const Monomial z1 = Monomial::variable(0);
    const Monomial z2 = Monomial::variable(1);
    const Monomial z3 = Monomial::variable(2);
    CHECK(compareGrevlex(z1, z2) > 0);
    CHECK(compareGrevlex(z1 * z1, z1 * z2) > 0);
    // Same degree: the smaller power of the last variable wins.
    CHECK(compareGrevlex(z2 * z2, z1 * z3) > 0);
    CHECK(compareLex(z1 * z3, z2 * z2) > 0);
    CHECK(compareGrevlex(z1 * z2 * z3, z1 * z1) > 0);
  }

  TEST_CASE("exponent overflow is reported") {
    Monomial m = Monomial::variable(0, 60000);
    CHECK_THROWS_AS(m * m, std::overflow_error);
  }
}

TEST_SUITE("polynomial") {
  TEST_CASE("ring operations") {
    CHECK((P("z1 + z2") * P("z1 - z2")) == P("z1^2 - z2^2"));
    CHECK(P("z1 + z2").pow(3) == P("z1^3 + 3*z1^2*z2 + 3*z1*z2^2 + z2^3"));
    CHECK((P("z1") - P("z1")).isZero());
    CHECK(P("2*z1").pow(0) == Polynomial::constant(4, 1));
    CHECK_THROWS_AS(P("z1", 3) + P("z1", 4), AmbientMismatch);
  }

  TEST_CASE("evaluation is a ring homomorphism") {
    oracle::Random rng(3);
    for (int i = 0; i < 200; ++i) {
      const Polynomial p = rng.polynomial(4, 4, 5);
      const Polynomial q = rng.polynomial(4, 4, 5);
      const auto x = rng.point(4);
      CHECK(oracle::evaluate(p * q, x) == oracle::evaluate(p, x) * oracle::evaluate(q, x));
      CHECK(oracle::evaluate(p + q, x) == oracle::evaluate(p, x) + oracle::evaluate(q, x));
      CHECK(evaluate(p, x) == oracle::evaluate(p, x));
    }
  }

  TEST_CASE("partial derivatives") {
    CHECK(partialDerivative(P("z1^2*z2 + z3"), 0) == P("2*z1*z2"));
    CHECK(partialDerivative(P("z1^2*z2 + z3"), 2) == P("1"));
    CHECK(partialDerivative(P("7"), 1).isZero());
    // Term-wise definition as oracle.
    oracle::Random rng(5);
    for (int i = 0; i < 100; ++i) {
      const Polynomial p = rng.polynomial(4, 5, 5);
      const int k = rng.uniform(0, 3);
      std::vector<Polynomial::Term> terms;
      for (const auto& [m, c] : p.terms()) {
        if (m[k] == 0) continue;
        Monomial q = m;
        q.set(k, static_cast<Exponent>(m[k] - 1));
        terms.emplace_back(q, c * Scalar(m[k]));
      }
      CHECK(partialDerivative(p, k) == Polynomial::fromTerms(4, terms));
    }
  }

  TEST_CASE("linear substitution agrees with pointwise composition") {
    oracle::Random rng(9);
    for (int i = 0; i < 100; ++i) {
      const Polynomial p = rng.polynomial(3, 3, 4);
      const Matrix m = rng.matrix(3, 3);
      const auto x = rng.point(3);
      std::vector<Scalar> mx(3, 0);
      for (int r = 0; r < 3; ++r) {
        for (int c = 0; c < 3; ++c) mx[static_cast<std::size_t>(r)] += m(r, c) * x[static_cast<std::size_t>(c)];
      }
      CHECK(oracle::evaluate(linearSubstitute(p, m), x) == oracle::evaluate(p, mx));
    }
  }

  TEST_CASE("substituting linear forms changes the variable count") {
    // z1 -> w1 + w2, z2 -> w2 with two source variables and two targets.
    const Matrix m{{1, 1}, {0, 1}};
    CHECK(substituteLinearForms(P("z1*z2", 2), m) == P("z1*z2 + z2^2", 2));
  }

  TEST_CASE("homogeneity") {
    CHECK(homogeneousDegree(P("z1*z2 + z3^2")).homogeneous());
    CHECK(homogeneousDegree(P("z1*z2 + z3^2")).degree == 2);
    CHECK(homogeneousDegree(P("1/2*z1 + 1/3")).kind == Homogeneity::kMixed);
    CHECK(homogeneousDegree(Polynomial(4)).kind == Homogeneity::kZero);
  }

  TEST_CASE("content, primitive part and exact division") {
    CHECK(content(P("4*z1 + 6*z2")) == 2);
    CHECK(primitivePart(P("4*z1 + 6*z2")) == P("2*z1 + 3*z2"));
    CHECK(primitivePart(P("1/2*z1 + 1/3*z2")) == P("3*z1 + 2*z2"));
    CHECK(monomialContent(P("z1^2*z2 + z1*z2^3")) == Monomial::variable(0) * Monomial::variable(1));
    CHECK(divideExact(P("z1^2 - z2^2"), P("z1 - z2")) == P("z1 + z2"));
    CHECK_FALSE(divideExact(P("z1^2 + z2^2"), P("z1 - z2")).has_value());
    const DivisionResult d = divide(P("z1^2 + z2^2"), P("z1 - z2"));
    CHECK(d.quotient * P("z1 - z2") + d.remainder == P("z1^2 + z2^2"));
    CHECK(proportionality(P("z1 + z2"), P("-3*z1 - 3*z2")) == Scalar(-3));
    CHECK_FALSE(proportionality(P("z1 + z2"), P("z1 - z2")).has_value());
  }

  TEST_CASE("ambient changes") {
    CHECK(P("z1 + z3", 3).withAmbient(4) == P("z1 + z3"));
    CHECK_THROWS_AS(P("z4").withAmbient(3), std::invalid_argument);
  }
}

TEST_SUITE("matrix") {
  TEST_CASE("rank and null space") {
    const Matrix m{{1, 2, 3}, {2, 4, 6}, {1, 0, 1}};
    CHECK(m.rank() == 2);
    const auto kernel = m.nullSpace();
    REQUIRE(kernel.size() == 1);
    for (int r = 0; r < 3; ++r) {
      Scalar s = 0;
      for (int c = 0; c < 3; ++c) s += m(r, c) * kernel[0][static_cast<std::size_t>(c)];
      CHECK(s == 0);
    }
    CHECK(Matrix::identity(4).rank() == 4);
    CHECK((Matrix::diagonal({2, 3}) * Matrix::diagonal({Scalar(1, 2), Scalar(1, 3)})) == Matrix::identity(2));
  }

  TEST_CASE("rank agrees with an independent elimination") {
    oracle::Random rng(13);
    for (int i = 0; i < 100; ++i) {
      const Matrix m = rng.matrix(3, 4);
      std::vector<std::vector<Scalar>> rows(3, std::vector<Scalar>(4));
      for (int r = 0; r < 3; ++r) {
        for (int c = 0; c < 4; ++c) rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = m(r, c);
      }
      CHECK(m.rank() == oracle::rank(rows));
    }
  }
}
