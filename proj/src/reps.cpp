#include "uqso/reps.hpp"

#include <Eigen/SparseCore>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "uqso/random.hpp"

namespace uqso::reps {

namespace {

std::string key_text(int i, int s) { return "(" + std::to_string(i) + "," + std::to_string(s) + ")"; }

std::string complex_text(Complex z) {
  std::ostringstream os;
  os.precision(6);
  os << z.real() << (z.imag() < 0 ? " - " : " + ") << std::abs(z.imag()) << "i";
  return os.str();
}

double distance_to_integer(Complex x) { return std::abs(x - std::round(x.real())); }

double distance_to_half_integer(Complex x) { return std::abs(x - (std::floor(x.real()) + 0.5)); }

} // namespace

// ---------------------------------------------------------------------------
// Parameters

int variable_count(int n) {
  int total = 0;
  for (int s = 2; s < n; ++s)
    total += s / 2;
  return total;
}

std::size_t representation_dimension(int n, int orderK) {
  std::size_t d = 1;
  for (int v = 0; v < variable_count(n); ++v)
    d *= static_cast<std::size_t>(orderK);
  return d;
}

std::vector<EntryKey> variable_layout(int n) {
  std::vector<EntryKey> out;
  for (int s = n - 1; s >= 2; --s)
    for (int i = 1; i <= s / 2; ++i)
      out.emplace_back(i, s);
  return out;
}

int ParamsOmega::parameter_count() const {
  return static_cast<int>(mTop.size() + h.size() + c.size());
}

void ParamsOmega::validate(double margin) const {
  if (n < 3)
    fail(ErrorKind::InvalidArgument, "representations need n >= 3");
  if (static_cast<int>(mTop.size()) != n / 2)
    fail(ErrorKind::InvalidArgument, "top row needs " + std::to_string(n / 2) + " entries, got " +
                                         std::to_string(mTop.size()));
  const auto layout = variable_layout(n);
  for (const auto* table : {&h, &c}) {
    const char* label = table == &h ? "h" : "c";
    if (table->size() != layout.size())
      fail(ErrorKind::InvalidArgument, std::string(label) + " needs " + std::to_string(layout.size()) +
                                           " entries, got " + std::to_string(table->size()));
    for (const auto& key : layout)
      if (!table->count(key))
        fail(ErrorKind::InvalidArgument,
             std::string("missing ") + label + key_text(key.first, key.second));
  }
  for (const auto& [key, value] : c)
    if (std::abs(value) == 0.0)
      fail(ErrorKind::DegenerateParameter, "c" + key_text(key.first, key.second) + " is zero");
  for (const auto& v : mTop)
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
      fail(ErrorKind::InvalidArgument, "top row entries must be finite");

  for (int j = 2; j < n; ++j) {
    for (int i = 1; i <= j / 2; ++i) {
      for (int s = i + 1; s <= j / 2; ++s) {
        Complex a = h.at({i, j}), b = h.at({s, j});
        if (distance_to_integer(a - b) < margin)
          fail(ErrorKind::DegenerateParameter,
               "h" + key_text(i, j) + " - h" + key_text(s, j) + " is (nearly) an integer");
        if (distance_to_integer(a + b) < margin)
          fail(ErrorKind::DegenerateParameter,
               "h" + key_text(i, j) + " + h" + key_text(s, j) + " is (nearly) an integer");
      }
    }
    if (j % 2 == 1 && distance_to_half_integer(h.at({j / 2, j})) < margin)
      fail(ErrorKind::DegenerateParameter, "h" + key_text(j / 2, j) + " is (nearly) half-integral");
  }
  if (n % 2 == 1 && distance_to_half_integer(mTop.back()) < margin)
    fail(ErrorKind::DegenerateParameter, "m" + key_text(n / 2, n) + " is (nearly) half-integral");
}

// ---------------------------------------------------------------------------
// Tableaux

struct Tableau::Shape {
  int n;
  int k;
  std::vector<EntryKey> layout;
  std::map<EntryKey, int> position;
  std::vector<Complex> base; // h value per variable
  std::vector<Complex> top;

  explicit Shape(const ParamsOmega& omega) : n(omega.n), k(omega.root.order()), layout(variable_layout(omega.n)) {
    for (std::size_t v = 0; v < layout.size(); ++v) {
      position[layout[v]] = static_cast<int>(v);
      base.push_back(omega.h.at(layout[v]));
    }
    top = omega.mTop;
  }

  int variable(int i, int s) const {
    auto it = position.find({i, s});
    if (it == position.end())
      fail(ErrorKind::IndexOutOfRange, "no tableau entry m" + key_text(i, s) + " for n = " + std::to_string(n));
    return it->second;
  }
};

Tableau::Tableau(std::shared_ptr<const Shape> shape, std::vector<int> offsets)
    : shape_(std::move(shape)), offsets_(std::move(offsets)) {}

int Tableau::n() const { return shape_->n; }
int Tableau::order() const { return shape_->k; }

int Tableau::offset(int i, int s) const { return offsets_[shape_->variable(i, s)]; }

Complex Tableau::m(int i, int s) const {
  if (s == shape_->n) {
    if (i < 1 || i > static_cast<int>(shape_->top.size()))
      fail(ErrorKind::IndexOutOfRange, "no top-row entry m" + key_text(i, s));
    return shape_->top[i - 1];
  }
  int v = shape_->variable(i, s);
  return shape_->base[v] + static_cast<double>(offsets_[v]);
}

std::vector<std::vector<Complex>> Tableau::rows() const {
  std::vector<std::vector<Complex>> out;
  for (int s = shape_->n; s >= 2; --s) {
    std::vector<Complex> row;
    for (int i = 1; i <= s / 2; ++i)
      row.push_back(m(i, s));
    out.push_back(std::move(row));
  }
  return out;
}

Tableau Tableau::shifted(int j, int s, int direction) const {
  if (s == shape_->n)
    fail(ErrorKind::TopRowShift, "the top row m_" + std::to_string(s) + " is fixed and cannot be shifted");
  if (direction != 1 && direction != -1)
    fail(ErrorKind::InvalidArgument, "shift direction must be +1 or -1");
  int v = shape_->variable(j, s);
  std::vector<int> next = offsets_;
  next[v] = (next[v] + direction + shape_->k) % shape_->k;
  return Tableau(shape_, std::move(next));
}

std::size_t Tableau::index() const {
  std::size_t idx = 0;
  for (int o : offsets_)
    idx = idx * static_cast<std::size_t>(shape_->k) + static_cast<std::size_t>(o);
  return idx;
}

std::vector<Tableau> enumerate_tableaux(const ParamsOmega& omega) {
  auto shape = std::make_shared<const Tableau::Shape>(omega);
  const std::size_t dim = representation_dimension(omega.n, omega.root.order());
  const std::size_t nv = shape->layout.size();
  std::vector<Tableau> out;
  out.reserve(dim);
  std::vector<int> offsets(nv, 0);
  for (std::size_t idx = 0; idx < dim; ++idx) {
    out.emplace_back(shape, offsets);
    for (std::size_t v = nv; v-- > 0;) {
      if (++offsets[v] < shape->k)
        break;
      offsets[v] = 0;
    }
  }
  return out;
}

Complex l_coord(const Tableau& xi, int j, int s) {
  int p = s / 2;
  if (s % 2 == 1)
    return xi.m(j, s) + static_cast<double>(p - j + 1);
  return xi.m(j, s) + static_cast<double>(p - j);
}

LCoords l_coords(const Tableau& xi) {
  LCoords out;
  for (int s = xi.n(); s >= 2; --s)
    for (int j = 1; j <= s / 2; ++j)
      out[{j, s}] = l_coord(xi, j, s);
  return out;
}

// ---------------------------------------------------------------------------
// Coefficients

Complex oriented_sqrt_bracket(Complex x, const RootOfUnity& root) {
  constexpr double flat = 1e-9;
  bool upper = std::abs(x.imag()) > flat ? x.imag() > 0 : (x.real() - std::floor(x.real())) < 0.5;
  if (upper)
    return std::sqrt(qbracket_numeric(x, root).complex());
  return Complex(0.0, 1.0) * std::sqrt(qbracket_numeric(-x, root).complex());
}

namespace {

constexpr double kVanishing = 1e-10;

struct Factor {
  Complex arg;
  std::string text;
};

// Product of oriented square roots over numerator factors divided by the
// product over denominator factors.
Complex sqrt_ratio(const std::vector<Factor>& num, const std::vector<Factor>& den, const RootOfUnity& root,
                   const Tableau& xi, const char* label) {
  Complex value = 1.0;
  for (const Factor& f : num)
    value *= oriented_sqrt_bracket(f.arg, root);
  for (const Factor& f : den) {
    Complex s = oriented_sqrt_bracket(f.arg, root);
    if (std::abs(s) * std::abs(s) < kVanishing)
      fail(ErrorKind::DegenerateParameter, std::string(label) + ": denominator bracket [" + f.text +
                                               "] vanishes at tableau " + std::to_string(xi.index()) +
                                               " (argument " + complex_text(f.arg) + ")");
    value /= s;
  }
  return value;
}

std::string l_text(int i, int s) { return "l" + key_text(i, s); }

void require_p(const Tableau& xi, int p, int top_row, const char* label) {
  if (p < 1 || top_row > xi.n())
    fail(ErrorKind::IndexOutOfRange, std::string(label) + ": p = " + std::to_string(p) +
                                         " out of range for n = " + std::to_string(xi.n()));
}

} // namespace

Complex coeff_A(const Tableau& xi, int j, int p, const RootOfUnity& root) {
  require_p(xi, p, 2 * p + 1, "A");
  if (j < 1 || j > p)
    fail(ErrorKind::IndexOutOfRange, "A: j must lie in 1..p");
  const Complex lj = l_coord(xi, j, 2 * p);
  const std::string ljs = l_text(j, 2 * p);
  std::vector<Factor> num, den;
  for (int i = 1; i <= p; ++i) {
    Complex li = l_coord(xi, i, 2 * p + 1);
    std::string lis = l_text(i, 2 * p + 1);
    num.push_back({li + lj, lis + " + " + ljs});
    num.push_back({li - lj - 1.0, lis + " - " + ljs + " - 1"});
  }
  for (int i = 1; i < p; ++i) {
    Complex li = l_coord(xi, i, 2 * p - 1);
    std::string lis = l_text(i, 2 * p - 1);
    num.push_back({li + lj, lis + " + " + ljs});
    num.push_back({li - lj - 1.0, lis + " - " + ljs + " - 1"});
  }
  for (int i = 1; i <= p; ++i) {
    if (i == j)
      continue;
    Complex li = l_coord(xi, i, 2 * p);
    std::string lis = l_text(i, 2 * p);
    den.push_back({li + lj, lis + " + " + ljs});
    den.push_back({li - lj, lis + " - " + ljs});
    den.push_back({li + lj + 1.0, lis + " + " + ljs + " + 1"});
    den.push_back({li - lj - 1.0, lis + " - " + ljs + " - 1"});
  }
  return sqrt_ratio(num, den, root, xi, "A");
}

Complex coeff_B(const Tableau& xi, int j, int p, const RootOfUnity& root) {
  require_p(xi, p, 2 * p, "B");
  if (j < 1 || j > p - 1)
    fail(ErrorKind::IndexOutOfRange, "B: j must lie in 1..p-1");
  const Complex lj = l_coord(xi, j, 2 * p - 1);
  const std::string ljs = l_text(j, 2 * p - 1);
  std::vector<Factor> num, den;
  for (int i = 1; i <= p; ++i) {
    Complex li = l_coord(xi, i, 2 * p);
    std::string lis = l_text(i, 2 * p);
    num.push_back({li + lj, lis + " + " + ljs});
    num.push_back({li - lj, lis + " - " + ljs});
  }
  for (int i = 1; i < p; ++i) {
    Complex li = l_coord(xi, i, 2 * p - 2);
    std::string lis = l_text(i, 2 * p - 2);
    num.push_back({li + lj, lis + " + " + ljs});
    num.push_back({li - lj, lis + " - " + ljs});
  }
  for (int i = 1; i < p; ++i) {
    if (i == j)
      continue;
    Complex li = l_coord(xi, i, 2 * p - 1);
    std::string lis = l_text(i, 2 * p - 1);
    den.push_back({li + lj, lis + " + " + ljs});
    den.push_back({li - lj, lis + " - " + ljs});
    den.push_back({li + lj - 1.0, lis + " + " + ljs + " - 1"});
    den.push_back({li - lj - 1.0, lis + " - " + ljs + " - 1"});
  }
  return sqrt_ratio(num, den, root, xi, "B");
}

Complex coeff_C(const Tableau& xi, int p, const RootOfUnity& root) {
  require_p(xi, p, 2 * p, "C");
  Complex num = 1.0, den = 1.0;
  for (int s = 1; s <= p; ++s)
    num *= qbracket_numeric(l_coord(xi, s, 2 * p), root).complex();
  for (int s = 1; s < p; ++s)
    num *= qbracket_numeric(l_coord(xi, s, 2 * p - 2), root).complex();
  for (int s = 1; s < p; ++s) {
    Complex l = l_coord(xi, s, 2 * p - 1);
    Complex a = qbracket_numeric(l, root).complex();
    Complex b = qbracket_numeric(l - 1.0, root).complex();
    if (std::abs(a) < kVanishing || std::abs(b) < kVanishing)
      fail(ErrorKind::DegenerateParameter, "C: denominator [" + l_text(s, 2 * p - 1) + "][" +
                                               l_text(s, 2 * p - 1) + " - 1] vanishes at tableau " +
                                               std::to_string(xi.index()));
    den *= a * b;
  }
  return num / den;
}

// ---------------------------------------------------------------------------
// Operators

SparseOperator SparseOperator::assemble(std::string name, std::size_t dim, std::vector<SparseEntry> entries) {
  std::sort(entries.begin(), entries.end(), [](const SparseEntry& a, const SparseEntry& b) {
    return a.row != b.row ? a.row < b.row : a.col < b.col;
  });
  SparseOperator op{std::move(name), dim, {}};
  for (const SparseEntry& e : entries) {
    if (e.row >= dim || e.col >= dim)
      fail(ErrorKind::IndexOutOfRange, "sparse entry outside a " + std::to_string(dim) + "-dimensional operator");
    if (!op.entries.empty() && op.entries.back().row == e.row && op.entries.back().col == e.col)
      op.entries.back().value += e.value;
    else
      op.entries.push_back(e);
  }
  std::erase_if(op.entries, [](const SparseEntry& e) { return e.value == Complex(0.0, 0.0); });
  return op;
}

std::size_t SparseOperator::max_column_nonzeros() const {
  std::map<std::size_t, std::size_t> counts;
  std::size_t best = 0;
  for (const auto& e : entries)
    best = std::max(best, ++counts[e.col]);
  return best;
}

namespace {

std::string adjacent_name(int row) { return "I" + std::to_string(row) + std::to_string(row - 1); }

void degenerate_denominator(const char* what, int j, int s, const Tableau& xi) {
  fail(ErrorKind::DegenerateParameter, std::string(what) + " vanishes for " + l_text(j, s) + " = " +
                                           complex_text(l_coord(xi, j, s)) + " at tableau " +
                                           std::to_string(xi.index()));
}

} // namespace

SparseOperator operator_odd(const ParamsOmega& omega, int p) {
  if (p < 1 || 2 * p + 1 > omega.n)
    fail(ErrorKind::IndexOutOfRange, "operator_odd needs 1 <= p and 2p+1 <= n");
  const RootOfUnity& root = omega.root;
  const auto basis = enumerate_tableaux(omega);
  std::vector<SparseEntry> entries;
  for (const Tableau& xi : basis) {
    const std::size_t col = xi.index();
    for (int j = 1; j <= p; ++j) {
      Complex l = l_coord(xi, j, 2 * p);
      Complex den = root.pow(l) + root.pow(-l);
      if (std::abs(den) < kVanishing)
        degenerate_denominator("q^l + q^(-l)", j, 2 * p, xi);
      Complex cj = omega.c.at({j, 2 * p});
      Tableau up = xi.shifted(j, 2 * p, +1);
      Tableau down = xi.shifted(j, 2 * p, -1);
      entries.push_back({up.index(), col, cj * coeff_A(xi, j, p, root) / den});
      entries.push_back({down.index(), col, -coeff_A(down, j, p, root) / cj / den});
    }
  }
  return SparseOperator::assemble(adjacent_name(2 * p + 1), basis.size(), std::move(entries));
}

SparseOperator operator_even(const ParamsOmega& omega, int p) {
  if (p < 1 || 2 * p > omega.n)
    fail(ErrorKind::IndexOutOfRange, "operator_even needs 1 <= p and 2p <= n");
  const RootOfUnity& root = omega.root;
  const auto basis = enumerate_tableaux(omega);
  std::vector<SparseEntry> entries;
  for (const Tableau& xi : basis) {
    const std::size_t col = xi.index();
    for (int j = 1; j < p; ++j) {
      Complex l = l_coord(xi, j, 2 * p - 1);
      Complex b2 = qbracket_numeric(2.0 * l - 1.0, root).complex();
      Complex b1 = qbracket_numeric(l, root).complex();
      Complex b0 = qbracket_numeric(l - 1.0, root).complex();
      if (std::abs(b2 * b1) < kVanishing)
        degenerate_denominator("[2l - 1][l]", j, 2 * p - 1, xi);
      if (std::abs(b2 * b0) < kVanishing)
        degenerate_denominator("[2l - 1][l - 1]", j, 2 * p - 1, xi);
      Complex cj = omega.c.at({j, 2 * p - 1});
      Tableau up = xi.shifted(j, 2 * p - 1, +1);
      Tableau down = xi.shifted(j, 2 * p - 1, -1);
      entries.push_back({up.index(), col, cj * coeff_B(xi, j, p, root) / (b2 * b1)});
      entries.push_back({down.index(), col, -coeff_B(down, j, p, root) / cj / (b2 * b0)});
    }
    entries.push_back({col, col, Complex(0.0, 1.0) * coeff_C(xi, p, root)});
  }
  return SparseOperator::assemble(adjacent_name(2 * p), basis.size(), std::move(entries));
}

std::vector<SparseOperator> build_representation(const ParamsOmega& omega) {
  omega.validate();
  std::vector<SparseOperator> ops;
  for (int g = 2; g <= omega.n; ++g)
    ops.push_back(g % 2 == 1 ? operator_odd(omega, (g - 1) / 2) : operator_even(omega, g / 2));
  return ops;
}

// ---------------------------------------------------------------------------
// Residuals

double ResidualReport::max_residual() const {
  double m = 0.0;
  for (const auto& r : residuals)
    m = std::max(m, r.residual);
  return m;
}

namespace {

using SpMat = Eigen::SparseMatrix<Complex>;

SpMat to_eigen(const SparseOperator& op) {
  std::vector<Eigen::Triplet<Complex>> triplets;
  triplets.reserve(op.entries.size());
  for (const auto& e : op.entries)
    triplets.emplace_back(static_cast<int>(e.row), static_cast<int>(e.col), e.value);
  SpMat m(static_cast<int>(op.dim), static_cast<int>(op.dim));
  m.setFromTriplets(triplets.begin(), triplets.end());
  return m;
}

double max_entry(const SpMat& m) {
  double best = 0.0;
  for (int k = 0; k < m.outerSize(); ++k)
    for (SpMat::InnerIterator it(m, k); it; ++it)
      best = std::max(best, std::abs(it.value()));
  return best;
}

} // namespace

ResidualReport relation_residual(const std::vector<SparseOperator>& ops, const RootOfUnity& root) {
  ResidualReport report;
  if (ops.empty())
    return report;
  for (const auto& op : ops)
    if (op.dim != ops.front().dim)
      fail(ErrorKind::DimensionMismatch, "operators have different dimensions");
  std::vector<SpMat> mats;
  for (const auto& op : ops)
    mats.push_back(to_eigen(op));
  const Complex q = root.q();
  const Complex b = q + 1.0 / q;
  auto name = [](std::size_t i) { return adjacent_name(static_cast<int>(i) + 2); };
  auto cubic = [&](const SpMat& x, const SpMat& y) -> SpMat {
    SpMat xx = x * x;
    SpMat xy = x * y;
    SpMat r = SpMat(xx * y) - b * SpMat(xy * x) + SpMat(y * xx) + y;
    return r;
  };
  for (std::size_t i = 0; i + 1 < ops.size(); ++i) {
    std::string x = name(i), y = name(i + 1);
    report.residuals.push_back({x + "^2*" + y + " - [2]*" + x + "*" + y + "*" + x + " + " + y + "*" + x + "^2 + " + y,
                                max_entry(cubic(mats[i], mats[i + 1]))});
    report.residuals.push_back({y + "^2*" + x + " - [2]*" + y + "*" + x + "*" + y + " + " + x + "*" + y + "^2 + " + x,
                                max_entry(cubic(mats[i + 1], mats[i]))});
  }
  for (std::size_t i = 0; i < ops.size(); ++i)
    for (std::size_t j = i + 2; j < ops.size(); ++j) {
      SpMat r = SpMat(mats[i] * mats[j]) - SpMat(mats[j] * mats[i]);
      report.residuals.push_back({name(i) + "*" + name(j) + " - " + name(j) + "*" + name(i), max_entry(r)});
    }
  return report;
}

// ---------------------------------------------------------------------------
// Sampling

ParamsOmega random_generic_params(int n, int orderK, std::uint64_t seed, int t) {
  if (n < 3)
    fail(ErrorKind::InvalidArgument, "random_generic_params needs n >= 3");
  ParamsOmega omega{n, RootOfUnity(orderK, t), {}, {}, {}};
  Rng rng(seed);
  constexpr double margin = 1e-3;
  auto real_part = [&] {
    for (;;) {
      double x = rng.unit();
      if (x > margin && std::abs(x - 0.5) > margin && x < 1.0 - margin)
        return x;
    }
  };
  const auto layout = variable_layout(n);
  // Imaginary parts sit in shuffled bins of [0.05, 0.45], half a bin apart at least.
  const std::size_t count = static_cast<std::size_t>(n / 2) + layout.size();
  const double width = 0.4 / static_cast<double>(count);
  for (int attempt = 0; attempt < 1000; ++attempt) {
    omega.mTop.clear();
    omega.h.clear();
    omega.c.clear();
    std::vector<std::size_t> bins(count);
    for (std::size_t i = 0; i < count; ++i)
      bins[i] = i;
    for (std::size_t i = count; i > 1; --i)
      std::swap(bins[i - 1], bins[rng.index(i)]);
    std::size_t next = 0;
    auto draw = [&] {
      double im = 0.05 + (static_cast<double>(bins[next++]) + 0.25 + 0.5 * rng.unit()) * width;
      return Complex(real_part(), im);
    };
    for (int i = 0; i < n / 2; ++i)
      omega.mTop.push_back(draw());
    for (const auto& key : layout) {
      omega.h[key] = draw();
      double radius = rng.uniform(0.5, 2.0);
      double phase = rng.uniform(0.0, 2.0 * std::numbers::pi);
      omega.c[key] = std::polar(radius, phase);
    }
    try {
      omega.validate(margin);
      return omega;
    } catch (const Error&) {
    }
  }
  fail(ErrorKind::DegenerateParameter, "could not sample generic parameters in 1000 attempts");
}

} // namespace uqso::reps
