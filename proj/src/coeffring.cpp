#include "uqso/coeffring.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

namespace uqso {

std::string_view error_kind_name(ErrorKind kind) {
  switch (kind) {
  case ErrorKind::InvalidArgument: return "InvalidArgument";
  case ErrorKind::ZeroBase: return "ZeroBase";
  case ErrorKind::DegenerateDenominator: return "DegenerateDenominator";
  case ErrorKind::RankMismatch: return "RankMismatch";
  case ErrorKind::VariantMismatch: return "VariantMismatch";
  case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
  case ErrorKind::TopRowShift: return "TopRowShift";
  case ErrorKind::DegenerateParameter: return "DegenerateParameter";
  case ErrorKind::DimensionMismatch: return "DimensionMismatch";
  case ErrorKind::DegenerateQ: return "DegenerateQ";
  case ErrorKind::SingularDenominator: return "SingularDenominator";
  case ErrorKind::SyntaxError: return "SyntaxError";
  case ErrorKind::IndexError: return "IndexError";
  case ErrorKind::Io: return "Io";
  }
  return "Unknown";
}

// ---------------------------------------------------------------------------
// QValue / RootOfUnity

QValue::QValue(double re, double im) : z_(re, im) {
  if (!std::isfinite(re) || !std::isfinite(im))
    fail(ErrorKind::InvalidArgument, "QValue components must be finite");
}

RootOfUnity::RootOfUnity(int orderK, int t) : order_(orderK), t_(t) {
  if (orderK < 2)
    fail(ErrorKind::InvalidArgument, "root of unity order must be >= 2");
  if (t < 1)
    fail(ErrorKind::InvalidArgument, "root of unity exponent t must be positive");
  if (std::gcd(orderK, t) != 1)
    fail(ErrorKind::InvalidArgument,
         "gcd(t, orderK) must be 1 for a primitive root (t=" + std::to_string(t) +
             ", orderK=" + std::to_string(orderK) + ")");
}

Complex RootOfUnity::log_q() const {
  return {0.0, 2.0 * std::numbers::pi * t_ / order_};
}

Complex RootOfUnity::q() const { return std::exp(log_q()); }

Complex RootOfUnity::pow(Complex x) const { return std::exp(x * log_q()); }

// ---------------------------------------------------------------------------
// LaurentPoly

LaurentPoly::LaurentPoly(long c) {
  if (c != 0)
    terms_.emplace_back(0, Rational(c));
}

LaurentPoly::LaurentPoly(Rational c) {
  c.canonicalize();
  if (c != 0)
    terms_.emplace_back(0, std::move(c));
}

LaurentPoly LaurentPoly::monomial(int twice, Rational c) {
  LaurentPoly p;
  c.canonicalize();
  if (c != 0)
    p.terms_.emplace_back(twice, std::move(c));
  return p;
}

LaurentPoly LaurentPoly::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return a.first < b.first; });
  LaurentPoly p;
  for (auto& [e, c] : terms) {
    c.canonicalize();
    if (!p.terms_.empty() && p.terms_.back().first == e)
      p.terms_.back().second += c;
    else
      p.terms_.emplace_back(e, c);
  }
  std::erase_if(p.terms_, [](const Term& t) { return t.second == 0; });
  return p;
}

bool LaurentPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.front().first == 0);
}

Rational LaurentPoly::coefficient(int twice) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), twice,
                             [](const Term& t, int e) { return t.first < e; });
  if (it != terms_.end() && it->first == twice)
    return it->second;
  return 0;
}

Rational LaurentPoly::at_one() const {
  Rational s = 0;
  for (const auto& [e, c] : terms_)
    s += c;
  return s;
}

LaurentPoly LaurentPoly::inverted() const {
  LaurentPoly p;
  p.terms_.reserve(terms_.size());
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it)
    p.terms_.emplace_back(-it->first, it->second);
  return p;
}

void LaurentPoly::add_scaled(const LaurentPoly& other, int sign) {
  std::vector<Term> out;
  out.reserve(terms_.size() + other.terms_.size());
  auto a = terms_.begin();
  auto b = other.terms_.begin();
  while (a != terms_.end() || b != other.terms_.end()) {
    if (b == other.terms_.end() || (a != terms_.end() && a->first < b->first)) {
      out.push_back(std::move(*a++));
    } else if (a == terms_.end() || b->first < a->first) {
      out.emplace_back(b->first, sign > 0 ? b->second : Rational(-b->second));
      ++b;
    } else {
      Rational c = sign > 0 ? Rational(a->second + b->second)
                            : Rational(a->second - b->second);
      if (c != 0)
        out.emplace_back(a->first, std::move(c));
      ++a;
      ++b;
    }
  }
  terms_ = std::move(out);
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
  add_scaled(other, +1);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) {
  add_scaled(other, -1);
  return *this;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly p = *this;
  for (auto& t : p.terms_)
    t.second = -t.second;
  return p;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero())
    return {};
  if (b.terms_.size() == 1) {
    LaurentPoly p;
    p.terms_.reserve(a.terms_.size());
    const auto& [eb, cb] = b.terms_.front();
    for (const auto& [e, c] : a.terms_)
      p.terms_.emplace_back(e + eb, c * cb);
    return p;
  }
  if (a.terms_.size() == 1)
    return b * a;
  std::vector<LaurentPoly::Term> prod;
  prod.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_)
      prod.emplace_back(ea + eb, ca * cb);
  return LaurentPoly::from_terms(std::move(prod));
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& other) {
  *this = *this * other;
  return *this;
}

std::string q_power_text(int twice) {
  if (twice == 0)
    return "";
  if (twice == 2)
    return "q";
  if (twice % 2 == 0) {
    int e = twice / 2;
    return e > 0 ? "q^" + std::to_string(e) : "q^(" + std::to_string(e) + ")";
  }
  return "q^(" + std::to_string(twice) + "/2)";
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty())
    return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    bool negative = sgn(c) < 0;
    Rational mag = abs(c);
    if (first)
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    first = false;
    std::string qp = q_power_text(e);
    if (qp.empty())
      out += mag.get_str();
    else if (mag == 1)
      out += qp;
    else
      out += mag.get_str() + "*" + qp;
  }
  return out;
}

// ---------------------------------------------------------------------------
// q-numbers and evaluation

LaurentPoly qnumber(HalfInteger a) {
  if (!a.is_integer())
    fail(ErrorKind::InvalidArgument,
         "[a] is not a Laurent polynomial in q^(1/2) for half-integer a = " +
             std::to_string(a.twice()) + "/2");
  int n = a.twice() / 2;
  if (n == 0)
    return {};
  int m = std::abs(n);
  std::vector<LaurentPoly::Term> terms;
  terms.reserve(m);
  // q^{m-1} + q^{m-3} + ... + q^{1-m}
  for (int e = 1 - m; e <= m - 1; e += 2)
    terms.emplace_back(2 * e, Rational(n > 0 ? 1 : -1));
  return LaurentPoly::from_terms(std::move(terms));
}

namespace {

Complex int_power(Complex base, int e) {
  if (e < 0)
    return 1.0 / int_power(base, -e);
  Complex r = 1.0;
  while (e > 0) {
    if (e & 1)
      r *= base;
    base *= base;
    e >>= 1;
  }
  return r;
}

Complex evaluate_with_root(const LaurentPoly& p, Complex half) {
  Complex sum = 0.0;
  for (const auto& [e, c] : p.terms())
    sum += c.get_d() * int_power(half, e);
  return sum;
}

} // namespace

QValue evaluate(const LaurentPoly& p, QValue q) {
  if (q.complex() == Complex(0.0, 0.0))
    fail(ErrorKind::ZeroBase, "cannot evaluate a Laurent polynomial at q = 0");
  return QValue(evaluate_with_root(p, std::sqrt(q.complex())));
}

QValue evaluate(const LaurentPoly& p, const RootOfUnity& root) {
  return QValue(evaluate_with_root(p, root.pow(0.5)));
}

QValue qpow_complex(Complex x, const RootOfUnity& root) {
  return QValue(root.pow(x));
}

QValue qbracket_numeric(Complex x, const RootOfUnity& root) {
  Complex q = root.q();
  Complex den = q - 1.0 / q;
  if (std::abs(den) < 1e-12)
    fail(ErrorKind::DegenerateDenominator,
         "q - q^(-1) vanishes for q = exp(2 pi i * " + std::to_string(root.t()) +
             "/" + std::to_string(root.order()) + ")");
  return QValue((root.pow(x) - root.pow(-x)) / den);
}

Complex qbracket(Complex x, Complex q) {
  Complex den = q - 1.0 / q;
  if (std::abs(den) < 1e-14)
    fail(ErrorKind::DegenerateDenominator, "q - q^(-1) vanishes");
  Complex lq = std::log(q);
  return (std::exp(x * lq) - std::exp(-x * lq)) / den;
}

} // namespace uqso
