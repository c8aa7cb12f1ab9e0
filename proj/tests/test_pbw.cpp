#include <doctest.h>

#include <functional>

#include <Eigen/Dense>

#include "uqso/djembed.hpp"
#include "uqso/pbw.hpp"
#include "uqso/reps.hpp"

using namespace uqso;
using namespace uqso::pbw;

namespace {

AlgebraElement I(int n, int k, int l, Variant v = Variant::Plus) { return AlgebraElement::generator(n, k, l, v); }

LaurentPoly qh(int twice, long c = 1) { return LaurentPoly::monomial(twice, Rational(c)); }

// Checks every straightening rule as a matrix identity, with the derived
// generators built from the adjacent ones by the recursion.
double worst_rule_violation(int n, Variant v, const std::vector<Eigen::MatrixXcd>& adjacent, Complex half,
                            const std::function<Complex(const LaurentPoly&)>& value) {
  const int s = variant_sign(v);
  const Complex up = s > 0 ? half : 1.0 / half;
  std::map<std::pair<int, int>, Eigen::MatrixXcd> m;
  for (int k = 2; k <= n; ++k)
    m[{k, k - 1}] = adjacent[k - 2];
  for (int gap = 2; gap < n; ++gap)
    for (int l = 1; l + gap <= n; ++l) {
      int k = l + gap;
      const auto& a = m[{l + 1, l}];
      const auto& b = m[{k, l + 1}];
      m[{k, l}] = up * a * b - (1.0 / up) * b * a;
    }
  const auto& rules = straightening_rules(n, v);
  const Eigen::Index d = adjacent.front().rows();
  double worst = 0.0;
  for (int a = 0; a < generator_count(n); ++a)
    for (int b = 0; b < a; ++b) {
      const auto& x = m[generator_at(a)];
      const auto& y = m[generator_at(b)];
      Eigen::MatrixXcd rhs = Eigen::MatrixXcd::Zero(d, d);
      for (const auto& t : rules.rule(static_cast<Letter>(a), static_cast<Letter>(b))) {
        Eigen::MatrixXcd term = Eigen::MatrixXcd::Identity(d, d);
        for (Letter g : t.letters)
          term = term * m[generator_at(g)];
        rhs += value(t.coeff) * term;
      }
      worst = std::max(worst, (x * y - rhs).cwiseAbs().maxCoeff());
    }
  return worst;
}

} // namespace

TEST_CASE("generator indexing") {
  CHECK(generator_count(3) == 3);
  CHECK(generator_count(6) == 15);
  CHECK(generator_index(2, 1) == 0);
  CHECK(generator_index(3, 1) == 1);
  CHECK(generator_index(3, 2) == 2);
  CHECK(generator_index(4, 1) == 3);
  for (int i = 0; i < generator_count(8); ++i) {
    auto [r, c] = generator_at(i);
    CHECK(generator_index(r, c) == i);
  }
  CHECK(generator_name(3, 1, Variant::Plus) == "I31");
  CHECK(generator_name(3, 1, Variant::Minus) == "Im31");
  CHECK(generator_name(3, 2, Variant::Minus) == "I32");
}

TEST_CASE("out-of-order product of adjacent generators") {
  AlgebraElement r = I(3, 3, 2) * I(3, 2, 1);
  CHECK(r.to_string() == "q*I21*I32 - q^(1/2)*I31");
  AlgebraElement m = I(3, 3, 2, Variant::Minus) * I(3, 2, 1, Variant::Minus);
  CHECK(m.to_string() == "q^(-1)*I21*I32 - q^(-1/2)*Im31");
}

TEST_CASE("products already in order are unchanged") {
  AlgebraElement r = I(4, 2, 1) * I(4, 3, 1) * I(4, 3, 1) * I(4, 4, 3);
  CHECK(r.to_string() == "I21*I31^2*I43");
  CHECK(r.degree() == 4);
  CHECK(r.terms().size() == 1);
}

TEST_CASE("recursion reproduces the basis generators") {
  for (Variant v : {Variant::Plus, Variant::Minus})
    for (int n = 3; n <= 6; ++n)
      for (int k = 2; k <= n; ++k)
        for (int l = 1; l < k; ++l)
          CHECK(build_Ikl(n, k, l, v) == I(n, k, l, v));
}

TEST_CASE("pair classification covers every configuration") {
  std::map<PairClass, int> seen;
  const int n = 5;
  for (int a = 0; a < generator_count(n); ++a)
    for (int b = 0; b < a; ++b)
      ++seen[classify_pair(generator_at(a), generator_at(b))];
  CHECK(seen.size() == 6);
  CHECK(classify_pair({3, 2}, {2, 1}) == PairClass::ChainKlLm);
  CHECK(classify_pair({3, 2}, {3, 1}) == PairClass::ChainKlKm);
  CHECK(classify_pair({3, 1}, {2, 1}) == PairClass::ChainKmLm);
  CHECK(classify_pair({4, 3}, {2, 1}) == PairClass::DisjointNested);
  CHECK(classify_pair({4, 1}, {3, 2}) == PairClass::DisjointEnclosing);
  CHECK(classify_pair({4, 2}, {3, 1}) == PairClass::Crossing);
  CHECK_THROWS_AS(classify_pair({2, 1}, {3, 2}), Error);
  CHECK_THROWS_AS(classify_pair({3, 2}, {3, 2}), Error);
}

TEST_CASE("straightening rules hold in the vector representation of U_q(sl_n)") {
  const std::vector<Complex> qs{{0.7, 0.0}, {1.3, 0.4}, std::polar(1.0, 0.9), std::polar(1.6, -2.2)};
  for (Variant v : {Variant::Plus, Variant::Minus})
    for (int n = 3; n <= 6; ++n)
      for (Complex q : qs) {
        auto rep = djembed::vector_rep_sln(n, QValue(q));
        std::vector<Eigen::MatrixXcd> adjacent;
        for (int j = 2; j <= n; ++j)
          adjacent.push_back(djembed::tilde_I_numeric(j, rep));
        double worst = worst_rule_violation(n, v, adjacent, std::sqrt(q), [&](const LaurentPoly& c) {
          return evaluate(c, QValue(q)).complex();
        });
        CHECK(worst < 1e-10);
      }
}

TEST_CASE("straightening rules hold in root-of-unity representations") {
  for (auto [n, k] : {std::pair{4, 5}, std::pair{5, 3}}) {
    auto omega = reps::random_generic_params(n, k, 3);
    auto ops = reps::build_representation(omega);
    std::vector<Eigen::MatrixXcd> adjacent;
    for (const auto& op : ops) {
      Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(op.dim), static_cast<Eigen::Index>(op.dim));
      for (const auto& e : op.entries)
        m(static_cast<Eigen::Index>(e.row), static_cast<Eigen::Index>(e.col)) = e.value;
      adjacent.push_back(m);
    }
    for (Variant v : {Variant::Plus, Variant::Minus}) {
      double worst = worst_rule_violation(n, v, adjacent, omega.root.pow(0.5), [&](const LaurentPoly& c) {
        return evaluate(c, omega.root).complex();
      });
      CHECK(worst < 1e-8);
    }
  }
}

TEST_CASE("defining relations reduce to zero") {
  for (Variant v : {Variant::Plus, Variant::Minus})
    for (int n = 3; n <= 6; ++n) {
      auto report = verify_defining_relations(n, v);
      CHECK(report.all_pass());
      const std::size_t commuting = static_cast<std::size_t>((n - 2) * (n - 3) / 2);
      CHECK(report.checks.size() == 2 * static_cast<std::size_t>(n - 2) + commuting);
    }
}

TEST_CASE("classical defining relations vanish at q = 1") {
  for (int n = 3; n <= 5; ++n)
    CHECK(verify_classical_defining_relations(n, Variant::Plus).all_pass());
}

TEST_CASE("a wrong middle coefficient is detected") {
  AlgebraElement x = I(3, 2, 1), y = I(3, 3, 2);
  AlgebraElement wrong = x * x * y - (x * y * x).scaled(LaurentPoly(2)) + y * x * x + y;
  CHECK_FALSE(wrong.is_zero());
}

TEST_CASE("commutation relations of the derived generators") {
  for (Variant v : {Variant::Plus, Variant::Minus})
    for (int n = 3; n <= 5; ++n) {
      auto report = verify_commutation_relations(n, v);
      CHECK(report.all_pass());
      for (const auto& c : report.checks)
        if (!c.exact_zero())
          MESSAGE(c.relation << " -> " << c.residual.to_string());
    }
}

TEST_CASE("the crossing identity is a plain commutator, not a q-commutator") {
  const int n = 4;
  LaurentPoly d = qh(2) - qh(-2);
  AlgebraElement rhs = (I(n, 2, 1) * I(n, 4, 3) - I(n, 4, 1) * I(n, 3, 2)).scaled(d);
  CHECK((commutator(I(n, 4, 2), I(n, 3, 1)) - rhs).is_zero());
  CHECK_FALSE((q_commutator(I(n, 4, 2), I(n, 3, 1)) - rhs).is_zero());
}

TEST_CASE("classical limit of the straightening rules") {
  for (int n = 3; n <= 5; ++n) {
    auto report = verify_classical_limit(n);
    CHECK(report.all_pass());
    CHECK(report.checks.size() == static_cast<std::size_t>(generator_count(n) * (generator_count(n) - 1) / 2));
  }
}

TEST_CASE("associativity on random monomials") {
  auto report = associativity_fuzz(4, 3, 60, 17);
  CHECK(report.trials == 60);
  CHECK(report.all_pass());
  CHECK(associativity_fuzz(5, 3, 30, 4, Variant::Minus).all_pass());
}

TEST_CASE("random monomials respect the degree and exponent bounds") {
  Rng rng(8);
  for (int i = 0; i < 200; ++i) {
    AlgebraElement m = random_monomial(4, Variant::Plus, 4, rng);
    REQUIRE(m.terms().size() == 1);
    const auto& [mono, c] = *m.terms().begin();
    CHECK(mono.degree() >= 1);
    CHECK(mono.degree() <= 4);
    for (const auto& [g, e] : mono.factors(Variant::Plus))
      CHECK(e <= 2);
    CHECK(c.size() == 1);
  }
}

TEST_CASE("arithmetic and scalars") {
  const int n = 4;
  AlgebraElement a = I(n, 3, 1) + I(n, 2, 1).scaled(qh(1));
  CHECK((a - a).is_zero());
  CHECK((a + (-a)).is_zero());
  CHECK(a.coefficient(Monomial(Word{0})) == qh(1));
  CHECK(AlgebraElement::scalar(n, Variant::Plus, 3) * a == a.scaled(3));
  CHECK(power(a, 0) == AlgebraElement::scalar(n, Variant::Plus, 1));
  CHECK(power(a, 2) == a * a);
  CHECK(AlgebraElement::zero(n, Variant::Plus).to_string() == "0");
  CHECK(AlgebraElement::scalar(n, Variant::Plus, 1).to_string() == "1");
  CHECK((I(n, 2, 1) * I(n, 2, 1)).scaled(qh(2) + qh(-2)).to_string() == "(q^(-1) + q)*I21^2");
  auto at_one = (I(n, 3, 2) * I(n, 2, 1)).coefficients_at_one();
  CHECK(at_one.at(Monomial(Word{0, 2})) == 1);
  CHECK(at_one.at(Monomial(Word{1})) == -1);
}

TEST_CASE("invalid input") {
  CHECK_THROWS_AS(AlgebraElement(2, Variant::Plus), Error);
  CHECK_THROWS_AS(I(3, 4, 1), Error);
  CHECK_THROWS_AS(I(3, 2, 2), Error);
  CHECK_THROWS_AS(Monomial(Word{2, 1}), Error);
  try {
    I(3, 2, 1) * I(4, 2, 1);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::RankMismatch);
  }
  try {
    I(3, 2, 1) + I(3, 2, 1, Variant::Minus);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::VariantMismatch);
  }
  CHECK_THROWS_AS(power(I(3, 2, 1), -1), Error);
}
