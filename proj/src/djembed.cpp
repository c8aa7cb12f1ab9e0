#include "uqso/djembed.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "uqso/random.hpp"

namespace uqso::djembed {

// ---------------------------------------------------------------------------
// LMatrix

LMatrix::LMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

LMatrix LMatrix::identity(std::size_t n) {
  LMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    m.at(i, i) = LaurentPoly(1);
  return m;
}

bool LMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const LaurentPoly& p) { return p.is_zero(); });
}

LMatrix LMatrix::scaled(const LaurentPoly& c) const {
  LMatrix m = *this;
  for (auto& p : m.data_)
    p *= c;
  return m;
}

Eigen::MatrixXcd LMatrix::evaluate(QValue q) const {
  Eigen::MatrixXcd m(rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = uqso::evaluate(at(i, j), q).complex();
  return m;
}

std::vector<std::vector<Rational>> LMatrix::at_one() const {
  std::vector<std::vector<Rational>> out(rows_, std::vector<Rational>(cols_));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      out[i][j] = at(i, j).at_one();
  return out;
}

namespace {

void require_same_shape(const LMatrix& a, const LMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    fail(ErrorKind::DimensionMismatch, "matrix shapes differ");
}

} // namespace

LMatrix operator+(const LMatrix& a, const LMatrix& b) {
  require_same_shape(a, b);
  LMatrix m = a;
  for (std::size_t i = 0; i < a.data_.size(); ++i)
    m.data_[i] += b.data_[i];
  return m;
}

LMatrix operator-(const LMatrix& a, const LMatrix& b) {
  require_same_shape(a, b);
  LMatrix m = a;
  for (std::size_t i = 0; i < a.data_.size(); ++i)
    m.data_[i] -= b.data_[i];
  return m;
}

LMatrix operator*(const LMatrix& a, const LMatrix& b) {
  if (a.cols_ != b.rows_)
    fail(ErrorKind::DimensionMismatch, "matrix product shapes differ");
  LMatrix m(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const LaurentPoly& x = a.at(i, k);
      if (x.is_zero())
        continue;
      for (std::size_t j = 0; j < b.cols_; ++j)
        if (!b.at(k, j).is_zero())
          m.at(i, j) += x * b.at(k, j);
    }
  return m;
}

// ---------------------------------------------------------------------------
// Vector representation of U_q(sl_n)

namespace {

const LaurentPoly& two_bracket() {
  static const LaurentPoly b = LaurentPoly::monomial(2) + LaurentPoly::monomial(-2);
  return b;
}

int cartan(int i, int j) {
  if (i == j)
    return 2;
  return std::abs(i - j) == 1 ? -1 : 0;
}

template <typename M, typename S>
M cubic(const M& x, const M& y, const S& b) {
  return x * x * y - b * (x * y * x) + y * x * x;
}

LMatrix cubic_sym(const LMatrix& x, const LMatrix& y, const LaurentPoly& b) {
  return x * x * y - (x * y * x).scaled(b) + y * x * x;
}

void self_check_symbolic(const SlnRepMatrices& rep) {
  const int r = rep.n - 1;
  const LaurentPoly qq = LaurentPoly::monomial(2) - LaurentPoly::monomial(-2);
  std::vector<LMatrix> K;
  for (const auto& ki : rep.Kinv) {
    LMatrix k = ki;
    for (std::size_t d = 0; d < k.rows(); ++d)
      k.at(d, d) = ki.at(d, d).inverted();
    K.push_back(k);
  }
  auto check = [](bool ok, const std::string& what) {
    if (!ok)
      fail(ErrorKind::InvalidArgument, "vector representation self-check failed: " + what);
  };
  for (int i = 0; i < r; ++i) {
    check((K[i] * rep.Kinv[i]) == LMatrix::identity(rep.n), "K K^-1 = 1");
    for (int j = 0; j < r; ++j) {
      LaurentPoly up = LaurentPoly::monomial(2 * cartan(i, j));
      LaurentPoly down = LaurentPoly::monomial(-2 * cartan(i, j));
      check(K[i] * rep.E[j] * rep.Kinv[i] == rep.E[j].scaled(up), "K E K^-1");
      check(K[i] * rep.F[j] * rep.Kinv[i] == rep.F[j].scaled(down), "K F K^-1");
      LMatrix comm = (rep.E[i] * rep.F[j] - rep.F[j] * rep.E[i]).scaled(qq);
      LMatrix expect = i == j ? K[i] - rep.Kinv[i] : LMatrix(rep.n, rep.n);
      check(comm == expect, "[E,F] relation");
      if (std::abs(i - j) == 1) {
        check(cubic_sym(rep.E[i], rep.E[j], two_bracket()).is_zero(), "Serre relation for E");
        check(cubic_sym(rep.F[i], rep.F[j], two_bracket()).is_zero(), "Serre relation for F");
      } else if (i != j) {
        check((rep.E[i] * rep.E[j] - rep.E[j] * rep.E[i]).is_zero(), "E_i E_j = E_j E_i");
        check((rep.F[i] * rep.F[j] - rep.F[j] * rep.F[i]).is_zero(), "F_i F_j = F_j F_i");
      }
    }
  }
}

void self_check_numeric(const SlnRepMatrices& rep) {
  const int r = rep.n - 1;
  const Complex q = rep.q->complex();
  const double tol = 1e-10 * std::max({1.0, std::abs(q) * std::abs(q), 1.0 / (std::abs(q) * std::abs(q))});
  auto check = [tol](const Eigen::MatrixXcd& m, const std::string& what) {
    if (m.size() > 0 && m.cwiseAbs().maxCoeff() > tol)
      fail(ErrorKind::InvalidArgument, "vector representation self-check failed: " + what);
  };
  for (int i = 0; i < r; ++i) {
    Eigen::MatrixXcd K = rep.numKinv[i].inverse();
    for (int j = 0; j < r; ++j) {
      Complex up = std::pow(q, cartan(i, j));
      check(K * rep.numE[j] * rep.numKinv[i] - up * rep.numE[j], "K E K^-1");
      check(K * rep.numF[j] * rep.numKinv[i] - rep.numF[j] / up, "K F K^-1");
      Eigen::MatrixXcd comm = (q - 1.0 / q) * (rep.numE[i] * rep.numF[j] - rep.numF[j] * rep.numE[i]);
      if (i == j)
        comm -= K - rep.numKinv[i];
      check(comm, "[E,F] relation");
      if (std::abs(i - j) == 1) {
        check(cubic(rep.numE[i], rep.numE[j], q + 1.0 / q), "Serre relation for E");
        check(cubic(rep.numF[i], rep.numF[j], q + 1.0 / q), "Serre relation for F");
      }
    }
  }
}

} // namespace

SlnRepMatrices vector_rep_sln(int n, std::optional<QValue> q) {
  if (n < 2)
    fail(ErrorKind::InvalidArgument, "vector representation of U_q(sl_n) needs n >= 2");
  if (q && (q->complex() == Complex(0.0, 0.0)))
    fail(ErrorKind::DegenerateQ, "q = 0");
  if (q && std::abs(q->complex() - 1.0 / q->complex()) < 1e-12)
    fail(ErrorKind::DegenerateQ, "q - q^(-1) vanishes");
  SlnRepMatrices rep;
  rep.n = n;
  rep.q = q;
  const auto dim = static_cast<std::size_t>(n);
  for (int i = 0; i < n - 1; ++i) {
    LMatrix e(dim, dim), f(dim, dim), kinv = LMatrix::identity(dim);
    e.at(i, i + 1) = LaurentPoly(1);
    f.at(i + 1, i) = LaurentPoly(1);
    kinv.at(i, i) = LaurentPoly::monomial(-2);
    kinv.at(i + 1, i + 1) = LaurentPoly::monomial(2);
    rep.E.push_back(e);
    rep.F.push_back(f);
    rep.Kinv.push_back(kinv);
  }
  if (q) {
    for (int i = 0; i < n - 1; ++i) {
      rep.numE.push_back(rep.E[i].evaluate(*q));
      rep.numF.push_back(rep.F[i].evaluate(*q));
      rep.numKinv.push_back(rep.Kinv[i].evaluate(*q));
    }
    self_check_numeric(rep);
  } else {
    self_check_symbolic(rep);
  }
  return rep;
}

LMatrix tilde_I(int j, const SlnRepMatrices& rep) {
  if (j < 2 || j > rep.n)
    fail(ErrorKind::IndexOutOfRange, "tilde_I needs 2 <= j <= n");
  const int i = j - 2;
  return rep.F[i] - (rep.Kinv[i] * rep.E[i]).scaled(LaurentPoly::monomial(2));
}

Eigen::MatrixXcd tilde_I_numeric(int j, const SlnRepMatrices& rep) {
  if (j < 2 || j > rep.n)
    fail(ErrorKind::IndexOutOfRange, "tilde_I needs 2 <= j <= n");
  if (!rep.q)
    fail(ErrorKind::InvalidArgument, "numeric tilde_I needs a numeric representation");
  const int i = j - 2;
  return rep.numF[i] - rep.q->complex() * rep.numKinv[i] * rep.numE[i];
}

bool CheckReport::all_pass() const {
  return std::all_of(entries.begin(), entries.end(), [](const CheckEntry& e) { return e.pass; });
}

namespace {

std::string gen(int j) { return "I" + std::to_string(j) + std::to_string(j - 1); }

struct RelationForm {
  std::string name;
  int x;
  int y;
  bool cubic;
};

std::vector<RelationForm> so_relations(int n) {
  std::vector<RelationForm> out;
  for (int i = 2; i < n; ++i) {
    std::string x = gen(i), y = gen(i + 1);
    out.push_back({x + "^2*" + y + " - [2]*" + x + "*" + y + "*" + x + " + " + y + "*" + x + "^2 + " + y, i, i + 1,
                   true});
    out.push_back({y + "^2*" + x + " - [2]*" + y + "*" + x + "*" + y + " + " + x + "*" + y + "^2 + " + x, i + 1, i,
                   true});
  }
  for (int i = 2; i <= n; ++i)
    for (int j = i + 2; j <= n; ++j)
      out.push_back({gen(i) + "*" + gen(j) + " - " + gen(j) + "*" + gen(i), i, j, false});
  return out;
}

double max_abs(const Eigen::MatrixXcd& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

std::string q_text(Complex q) {
  std::ostringstream os;
  os.precision(6);
  os << q.real() << (q.imag() < 0 ? "-" : "+") << std::abs(q.imag()) << "i";
  return os.str();
}

} // namespace

CheckReport verify_embedding(int n, int samples, std::uint64_t seed) {
  if (n < 3)
    fail(ErrorKind::InvalidArgument, "the embedding check needs n >= 3");
  CheckReport report;
  const SlnRepMatrices rep = vector_rep_sln(n);
  std::vector<LMatrix> images;
  for (int j = 2; j <= n; ++j)
    images.push_back(tilde_I(j, rep));
  auto img = [&](int j) -> const LMatrix& { return images[j - 2]; };
  const auto relations = so_relations(n);

  std::vector<LMatrix> residuals;
  for (const auto& r : relations) {
    LMatrix res = r.cubic ? cubic_sym(img(r.x), img(r.y), two_bracket()) + img(r.y)
                          : img(r.x) * img(r.y) - img(r.y) * img(r.x);
    report.entries.push_back({r.name, "symbolic", res.is_zero(), std::nullopt});
    residuals.push_back(std::move(res));
  }

  // q = 1: the images are the classical antisymmetric generators.
  std::vector<LMatrix> classical;
  for (int j = 2; j <= n; ++j) {
    LMatrix c(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
    c.at(j - 1, j - 2) = LaurentPoly(1);
    c.at(j - 2, j - 1) = LaurentPoly(-1);
    bool same = img(j).at_one() == c.at_one();
    report.entries.push_back({gen(j) + " at q = 1 equals E_{" + std::to_string(j) + "," + std::to_string(j - 1) +
                                  "} - E_{" + std::to_string(j - 1) + "," + std::to_string(j) + "}",
                              "symbolic", same, std::nullopt});
    classical.push_back(std::move(c));
  }
  for (const auto& r : relations) {
    const LMatrix& x = classical[r.x - 2];
    const LMatrix& y = classical[r.y - 2];
    LMatrix res = r.cubic ? cubic_sym(x, y, LaurentPoly(2)) + y : x * y - y * x;
    report.entries.push_back({"classical " + r.name, "symbolic", res.is_zero(), std::nullopt});
  }

  // Numeric rerun against the symbolic residuals evaluated at the same q.
  Rng rng(seed);
  for (int s = 0; s < samples; ++s) {
    Complex qz = std::polar(rng.uniform(0.5, 2.0), rng.uniform(0.0, 2.0 * std::numbers::pi));
    QValue q(qz);
    double worst = 0.0;
    try {
      const SlnRepMatrices num = vector_rep_sln(n, q);
      std::vector<Eigen::MatrixXcd> nimg;
      for (int j = 2; j <= n; ++j)
        nimg.push_back(tilde_I_numeric(j, num));
      const Complex b = qz + 1.0 / qz;
      for (std::size_t r = 0; r < relations.size(); ++r) {
        const auto& x = nimg[relations[r].x - 2];
        const auto& y = nimg[relations[r].y - 2];
        Eigen::MatrixXcd res = relations[r].cubic ? Eigen::MatrixXcd(cubic(x, y, b) + y) : Eigen::MatrixXcd(x * y - y * x);
        worst = std::max(worst, max_abs(res - residuals[r].evaluate(q)));
      }
    } catch (const Error&) {
      worst = std::numeric_limits<double>::infinity();
    }
    report.entries.push_back({"numeric rerun at q = " + q_text(qz) + " matches symbolic residuals", "numeric",
                              worst < 1e-12, worst});
  }
  return report;
}

// ---------------------------------------------------------------------------
// psi on U_q(sl_2) irreps

namespace {

Complex bracket(int a, Complex q) { return (std::pow(q, a) - std::pow(q, -a)) / (q - 1.0 / q); }

Complex int_power(Complex base, int e) {
  if (e < 0)
    return 1.0 / int_power(base, -e);
  Complex r = 1.0;
  for (int i = 0; i < e; ++i)
    r *= base;
  return r;
}

} // namespace

Sl2IrrepMatrices sl2_irrep(int twoJ, QValue q) {
  if (twoJ < 0)
    fail(ErrorKind::InvalidArgument, "twoJ must be nonnegative");
  const Complex qz = q.complex();
  if (std::abs(qz) < 1e-300)
    fail(ErrorKind::DegenerateQ, "q = 0");
  if (std::abs(qz * qz - 1.0) < 1e-12)
    fail(ErrorKind::DegenerateQ, "q = +-1 makes q - q^(-1) vanish");
  for (int a = 1; a <= twoJ + 1; ++a)
    if (std::abs(int_power(qz, a) - 1.0) < 1e-12)
      fail(ErrorKind::DegenerateQ, "q^" + std::to_string(a) + " = 1; the " + std::to_string(twoJ + 1) +
                                       "-dimensional irrep is not defined");
  const int d = twoJ + 1;
  Sl2IrrepMatrices rep;
  rep.twoJ = twoJ;
  rep.q = q;
  rep.E = Eigen::MatrixXcd::Zero(d, d);
  rep.F = Eigen::MatrixXcd::Zero(d, d);
  rep.qH = Eigen::MatrixXcd::Zero(d, d);
  rep.qHinv = Eigen::MatrixXcd::Zero(d, d);
  const Complex half = std::sqrt(qz);
  // Row r holds weight m = j - r; twice: 2m = twoJ - 2r.
  for (int r = 0; r < d; ++r) {
    const int twoM = twoJ - 2 * r;
    rep.qH(r, r) = int_power(half, twoM);
    rep.qHinv(r, r) = int_power(half, -twoM);
    if (r > 0)
      rep.E(r - 1, r) = bracket((twoJ - twoM) / 2, qz);
    if (r + 1 < d)
      rep.F(r + 1, r) = bracket((twoJ + twoM) / 2, qz);
  }
  Eigen::MatrixXcd comm = rep.E * rep.F - rep.F * rep.E;
  Eigen::MatrixXcd expect = (rep.qH * rep.qH - rep.qHinv * rep.qHinv) / (qz - 1.0 / qz);
  double scale = std::max(1.0, max_abs(expect));
  if (max_abs(comm - expect) > 1e-9 * scale)
    fail(ErrorKind::DegenerateQ, "[E,F] self-check failed for this q");
  return rep;
}

std::pair<Eigen::MatrixXcd, Eigen::MatrixXcd> psi_images(const Sl2IrrepMatrices& rep) {
  const Complex q = rep.q.complex();
  const Eigen::Index d = rep.qH.rows();
  Eigen::MatrixXcd x = Complex(0.0, 1.0) / (q - 1.0 / q) * (rep.qH - rep.qHinv);
  Eigen::MatrixXcd inv = Eigen::MatrixXcd::Zero(d, d);
  for (Eigen::Index r = 0; r < d; ++r) {
    Complex s = rep.qH(r, r) + rep.qHinv(r, r);
    if (std::abs(s) < 1e-12)
      fail(ErrorKind::SingularDenominator, "q^H + q^(-H) vanishes on weight " + std::to_string(rep.twoJ - 2 * r) + "/2");
    inv(r, r) = 1.0 / s;
  }
  Eigen::MatrixXcd y = (rep.E - rep.F) * inv;
  return {x, y};
}

CheckReport verify_psi(int twoJ, QValue q, double tol) {
  const Sl2IrrepMatrices rep = sl2_irrep(twoJ, q);
  auto [x, y] = psi_images(rep);
  const Complex b = q.complex() + 1.0 / q.complex();
  CheckReport report;
  double r1 = max_abs(cubic(x, y, b) + y);
  double r2 = max_abs(cubic(y, x, b) + x);
  report.entries.push_back({"psi(I21)^2*psi(I32) - [2]*psi(I21)*psi(I32)*psi(I21) + psi(I32)*psi(I21)^2 + psi(I32)",
                            "numeric", r1 < tol, r1});
  report.entries.push_back({"psi(I32)^2*psi(I21) - [2]*psi(I32)*psi(I21)*psi(I32) + psi(I21)*psi(I32)^2 + psi(I21)",
                            "numeric", r2 < tol, r2});
  return report;
}

} // namespace uqso::djembed
