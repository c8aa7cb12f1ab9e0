#include <doctest.h>

#include <Eigen/Dense>

#include "uqso/commutant.hpp"
#include "uqso/random.hpp"

using namespace uqso;
using namespace uqso::reps;

namespace {

Eigen::MatrixXcd dense(const SparseOperator& op) {
  const auto d = static_cast<Eigen::Index>(op.dim);
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(d, d);
  for (const auto& e : op.entries)
    m(static_cast<Eigen::Index>(e.row), static_cast<Eigen::Index>(e.col)) = e.value;
  return m;
}

SparseOperator sparse(const std::string& name, const Eigen::MatrixXcd& m) {
  std::vector<SparseEntry> entries;
  for (Eigen::Index r = 0; r < m.rows(); ++r)
    for (Eigen::Index c = 0; c < m.cols(); ++c)
      if (m(r, c) != Complex(0.0))
        entries.push_back({static_cast<std::size_t>(r), static_cast<std::size_t>(c), m(r, c)});
  return SparseOperator::assemble(name, static_cast<std::size_t>(m.rows()), std::move(entries));
}

// Nullity of the Kronecker system (I (x) T - T^T (x) I) vec(X) = 0 from a full SVD.
std::size_t reference_nullity(const std::vector<SparseOperator>& ops, double tol) {
  const auto d = static_cast<Eigen::Index>(ops.front().dim);
  Eigen::MatrixXcd stacked(d * d * static_cast<Eigen::Index>(ops.size()), d * d);
  Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(d, d);
  for (std::size_t g = 0; g < ops.size(); ++g) {
    Eigen::MatrixXcd t = dense(ops[g]);
    Eigen::MatrixXcd block(d * d, d * d);
    for (Eigen::Index a = 0; a < d; ++a)
      for (Eigen::Index b = 0; b < d; ++b)
        block.block(a * d, b * d, d, d) = id(a, b) * t - t.transpose()(a, b) * id;
    stacked.block(static_cast<Eigen::Index>(g) * d * d, 0, d * d, d * d) = block;
  }
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(stacked);
  const auto& s = svd.singularValues();
  std::size_t rank = 0;
  for (Eigen::Index i = 0; i < s.size(); ++i)
    if (s(i) > tol * s(0))
      ++rank;
  return static_cast<std::size_t>(d * d) - rank;
}

std::vector<SparseOperator> direct_sum(const std::vector<SparseOperator>& a, const std::vector<SparseOperator>& b) {
  std::vector<SparseOperator> out;
  for (std::size_t g = 0; g < a.size(); ++g) {
    std::vector<SparseEntry> entries = a[g].entries;
    for (const auto& e : b[g].entries)
      entries.push_back({e.row + a[g].dim, e.col + a[g].dim, e.value});
    out.push_back(SparseOperator::assemble(a[g].name, a[g].dim + b[g].dim, std::move(entries)));
  }
  return out;
}

} // namespace

TEST_CASE("the identity commutes with everything") {
  auto id = sparse("1", Eigen::MatrixXcd::Identity(4, 4));
  CommutantStats stats;
  CHECK(commutant_dimension({id}, 1e-8, &stats) == 16);
  CHECK(stats.unknowns == 16);
  auto zero = SparseOperator::assemble("0", 3, {});
  CHECK(commutant_dimension({zero}) == 9);
}

TEST_CASE("a diagonal operator with distinct eigenvalues") {
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(5, 5);
  for (int i = 0; i < 5; ++i)
    m(i, i) = Complex(i, 0.5 * i);
  CHECK(commutant_dimension({sparse("D", m)}) == 5);
  m(3, 3) = m(1, 1);
  CHECK(commutant_dimension({sparse("D", m)}) == 7);
}

TEST_CASE("irreducible representations have a one-dimensional commutant") {
  for (auto [n, k] : {std::pair{3, 3}, std::pair{3, 5}, std::pair{4, 3}})
    for (std::uint64_t seed = 1; seed <= 3; ++seed) {
      auto ops = build_representation(random_generic_params(n, k, seed));
      CommutantStats stats;
      CHECK(commutant_dimension(ops, 1e-8, &stats) == 1);
      CHECK(stats.sigma_max > 0.0);
      CHECK(stats.eliminated + stats.merged + stats.dense_cols == stats.unknowns);
    }
}

TEST_CASE("a direct sum of two inequivalent representations") {
  auto a = build_representation(random_generic_params(3, 3, 1));
  auto b = build_representation(random_generic_params(3, 3, 2));
  CHECK(commutant_dimension(direct_sum(a, b)) == 2);
  CHECK(commutant_dimension(direct_sum(a, a)) == 4);
  auto c = build_representation(random_generic_params(4, 3, 1));
  auto d = build_representation(random_generic_params(4, 3, 2));
  CHECK(commutant_dimension(direct_sum(c, d)) == 2);
  CHECK(commutant_dimension(direct_sum(c, d)) == reference_nullity(direct_sum(c, d), 1e-8));
}

TEST_CASE("agreement with a full SVD on random small systems") {
  Rng rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    const Eigen::Index d = 2 + static_cast<Eigen::Index>(rng.index(4));
    std::vector<SparseOperator> ops;
    const int count = 1 + static_cast<int>(rng.index(2));
    for (int g = 0; g < count; ++g) {
      Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(d, d);
      for (Eigen::Index r = 0; r < d; ++r)
        for (Eigen::Index c = 0; c < d; ++c)
          if (rng.unit() < 0.4)
            m(r, c) = Complex(rng.uniform(-1, 1), rng.uniform(-1, 1));
      ops.push_back(sparse("T", m));
    }
    CHECK(commutant_dimension(ops) == reference_nullity(ops, 1e-8));
  }
  for (auto [n, k] : {std::pair{3, 5}, std::pair{4, 3}}) {
    auto ops = build_representation(random_generic_params(n, k, 5));
    CHECK(reference_nullity(ops, 1e-8) == 1);
  }
}

TEST_CASE("mismatched operators are rejected") {
  auto a = SparseOperator::assemble("A", 3, {});
  auto b = SparseOperator::assemble("B", 4, {});
  try {
    commutant_dimension({a, b});
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DimensionMismatch);
  }
  CHECK_THROWS_AS(commutant_dimension({}), Error);
  SparseOperator bad{"X", 2, {{3, 0, 1.0}}};
  CHECK_THROWS_AS(commutant_dimension({bad}), Error);
}
