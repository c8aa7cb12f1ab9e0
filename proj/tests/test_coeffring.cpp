#include <doctest.h>

#include <cmath>
#include <numbers>

#include "uqso/coeffring.hpp"
#include "uqso/random.hpp"

using namespace uqso;

namespace {

LaurentPoly random_poly(Rng& rng) {
  std::vector<LaurentPoly::Term> terms;
  int count = static_cast<int>(rng.index(4));
  for (int i = 0; i < count; ++i) {
    int e = static_cast<int>(rng.index(9)) - 4;
    long num = static_cast<long>(rng.index(7)) - 3;
    long den = 1 + static_cast<long>(rng.index(3));
    terms.emplace_back(e, Rational(num, den));
  }
  return LaurentPoly::from_terms(terms);
}

// (q^a - q^-a) / (q - q^-1) computed directly.
Complex direct_bracket(int a, Complex q) { return (std::pow(q, a) - std::pow(q, -a)) / (q - 1.0 / q); }

} // namespace

TEST_CASE("half integers store twice their value") {
  auto h = HalfInteger::from_twice(3);
  CHECK(h.twice() == 3);
  CHECK_FALSE(h.is_integer());
  CHECK(h.value() == doctest::Approx(1.5));
  CHECK(HalfInteger::from_int(2).is_integer());
  CHECK(HalfInteger::from_int(-1) < HalfInteger::from_twice(-1));
}

TEST_CASE("q-numbers of small integers") {
  auto q = [](int twice) { return LaurentPoly::monomial(twice); };
  CHECK(qnumber(0).is_zero());
  CHECK(qnumber(1) == LaurentPoly(1));
  CHECK(qnumber(2) == q(-2) + q(2));
  CHECK(qnumber(3) == q(-4) + LaurentPoly(1) + q(4));
  CHECK(qnumber(-2) == -qnumber(2));
  CHECK(qnumber(2).to_string() == "q^(-1) + q");
}

TEST_CASE("half-integer q-numbers are rejected") {
  try {
    qnumber(HalfInteger::from_twice(1));
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::InvalidArgument);
  }
}

TEST_CASE("q-number identity [a+1][a-1] = [a]^2 - 1") {
  for (int a = -6; a <= 6; ++a)
    CHECK(qnumber(a + 1) * qnumber(a - 1) == qnumber(a) * qnumber(a) - LaurentPoly(1));
}

TEST_CASE("q-numbers agree with the defining quotient numerically") {
  Rng rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    Complex q = std::polar(rng.uniform(0.5, 2.0), rng.uniform(0.1, 3.0));
    for (int a = -5; a <= 5; ++a) {
      Complex v = evaluate(qnumber(a), QValue(q)).complex();
      CHECK(std::abs(v - direct_bracket(a, q)) < 1e-10 * std::max(1.0, std::abs(v)));
    }
  }
}

TEST_CASE("canonical text") {
  CHECK(LaurentPoly().to_string() == "0");
  CHECK((-LaurentPoly::monomial(1)).to_string() == "-q^(1/2)");
  CHECK(LaurentPoly::monomial(2, Rational(3, 2)).to_string() == "3/2*q");
  CHECK(LaurentPoly(Rational(3, 2)).to_string() == "3/2");
  CHECK((LaurentPoly::monomial(-2) - LaurentPoly::monomial(4, 2)).to_string() == "q^(-1) - 2*q^2");
  CHECK(LaurentPoly::monomial(-3).to_string() == "q^(-3/2)");
  CHECK(q_power_text(0).empty());
  CHECK(q_power_text(4) == "q^2");
  CHECK(q_power_text(-2) == "q^(-1)");
}

TEST_CASE("ring axioms on random polynomials") {
  Rng rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    LaurentPoly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == LaurentPoly());
    CHECK(a.inverted().inverted() == a);
    CHECK((a * b).inverted() == a.inverted() * b.inverted());
    CHECK((a * b).at_one() == a.at_one() * b.at_one());
    CHECK((a + b).at_one() == a.at_one() + b.at_one());
  }
}

TEST_CASE("terms stay sorted with nonzero coefficients") {
  LaurentPoly p = LaurentPoly::from_terms({{4, 1}, {-2, 3}, {4, -1}, {0, 0}, {2, 5}});
  REQUIRE(p.size() == 2);
  CHECK(p.terms()[0].first == -2);
  CHECK(p.terms()[1].first == 2);
  CHECK(p.coefficient(2) == 5);
  CHECK(p.coefficient(4) == 0);
  CHECK_FALSE(p.is_constant());
  CHECK(LaurentPoly(7).is_constant());
}

TEST_CASE("evaluation") {
  LaurentPoly p = LaurentPoly::monomial(1) + LaurentPoly::monomial(-4, 2);
  Complex q(0.3, 1.1);
  Complex expect = std::sqrt(q) + 2.0 / (q * q);
  CHECK(std::abs(evaluate(p, QValue(q)).complex() - expect) < 1e-12);
  CHECK_THROWS_AS(evaluate(p, QValue(0.0, 0.0)), Error);
  try {
    evaluate(p, QValue(0.0, 0.0));
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ZeroBase);
  }
}

TEST_CASE("evaluation at a root of unity uses the fixed branch") {
  RootOfUnity root(5, 2);
  Complex half = root.pow(0.5);
  CHECK(std::abs(half * half - root.q()) < 1e-14);
  LaurentPoly p = LaurentPoly::monomial(3);
  CHECK(std::abs(evaluate(p, root).complex() - root.pow(1.5)) < 1e-13);
  CHECK(std::abs(qpow_complex(Complex(0.25, 0.1), root).complex() - root.pow(Complex(0.25, 0.1))) == 0.0);
}

TEST_CASE("non-finite values are rejected") {
  CHECK_THROWS_AS(QValue(std::nan(""), 0.0), Error);
  CHECK_THROWS_AS(QValue(0.0, INFINITY), Error);
}

TEST_CASE("roots of unity") {
  CHECK_THROWS_AS(RootOfUnity(1, 1), Error);
  CHECK_THROWS_AS(RootOfUnity(6, 3), Error);
  CHECK_THROWS_AS(RootOfUnity(5, 0), Error);
  RootOfUnity root(7, 3);
  CHECK(root.order() == 7);
  Complex qk = 1.0;
  for (int i = 0; i < 7; ++i)
    qk *= root.q();
  CHECK(std::abs(qk - 1.0) < 1e-12);
  // q^x q^y = q^{x+y}
  Complex x(0.3, 0.2), y(-1.7, 0.4);
  CHECK(std::abs(root.pow(x) * root.pow(y) - root.pow(x + y)) < 1e-13);
}

TEST_CASE("numeric brackets at roots of unity") {
  RootOfUnity root(5, 1);
  for (int a = -4; a <= 4; ++a) {
    Complex v = qbracket_numeric(Complex(a, 0), root).complex();
    CHECK(std::abs(v - evaluate(qnumber(a), root).complex()) < 1e-12);
  }
  CHECK(std::abs(qbracket_numeric(Complex(5, 0), root).complex()) < 1e-12);
  try {
    qbracket_numeric(Complex(0.3, 0), RootOfUnity(2, 1));
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DegenerateDenominator);
  }
  CHECK(std::abs(qbracket(Complex(2, 0), Complex(0.7, 0)) - direct_bracket(2, 0.7)) < 1e-12);
}
