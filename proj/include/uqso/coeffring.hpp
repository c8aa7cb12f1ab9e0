#pragma once

// Exact Laurent polynomials in q^{1/2} over the rationals, and numeric
// evaluation at complex q (including primitive roots of unity).

#include <complex>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "uqso/error.hpp"

namespace uqso {

using Rational = mpq_class;
using Complex = std::complex<double>;

/// An integer or half-integer, stored as twice its value.
class HalfInteger {
public:
  constexpr HalfInteger() = default;
  static constexpr HalfInteger from_int(int v) { return HalfInteger(2 * v); }
  static constexpr HalfInteger from_twice(int twice) { return HalfInteger(twice); }

  constexpr int twice() const { return twice_; }
  constexpr bool is_integer() const { return twice_ % 2 == 0; }
  constexpr double value() const { return twice_ / 2.0; }

  friend constexpr bool operator==(HalfInteger, HalfInteger) = default;
  friend constexpr auto operator<=>(HalfInteger, HalfInteger) = default;

private:
  constexpr explicit HalfInteger(int twice) : twice_(twice) {}
  int twice_ = 0;
};

/// A finite complex number used as an evaluation point or result.
class QValue {
public:
  QValue(double re, double im);
  explicit QValue(Complex z) : QValue(z.real(), z.imag()) {}

  double re() const { return z_.real(); }
  double im() const { return z_.imag(); }
  Complex complex() const { return z_; }

  friend bool operator==(const QValue&, const QValue&) = default;

private:
  Complex z_;
};

/// q = exp(2 pi i t / orderK) with gcd(t, orderK) = 1, so orderK is the
/// exact multiplicative order of q.
class RootOfUnity {
public:
  RootOfUnity(int orderK, int t);

  int order() const { return order_; }
  int t() const { return t_; }

  /// The fixed logarithm 2 pi i t / orderK.
  Complex log_q() const;
  Complex q() const;
  /// q^x := exp(x log q); a group homomorphism in x.
  Complex pow(Complex x) const;

  friend bool operator==(const RootOfUnity&, const RootOfUnity&) = default;

private:
  int order_;
  int t_;
};

class LaurentPoly {
public:
  /// (doubled exponent, nonzero coefficient), strictly ascending in exponent.
  using Term = std::pair<int, Rational>;

  LaurentPoly() = default;
  LaurentPoly(long c); // NOLINT: integers embed as constants
  explicit LaurentPoly(Rational c);

  /// c * q^{twice/2}
  static LaurentPoly monomial(int twice, Rational c = 1);
  static LaurentPoly q_pow(HalfInteger e) { return monomial(e.twice()); }
  static LaurentPoly from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Coefficient of q^{twice/2}, zero if absent.
  Rational coefficient(int twice) const;

  /// Exact value at q = 1.
  Rational at_one() const;
  /// Substitution q -> q^{-1}.
  LaurentPoly inverted() const;

  LaurentPoly& operator+=(const LaurentPoly& other);
  LaurentPoly& operator-=(const LaurentPoly& other);
  LaurentPoly& operator*=(const LaurentPoly& other);
  LaurentPoly operator-() const;

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }

  /// Canonical text, ascending exponents: "q^(-1) + q", "-q^(1/2)", "3/2".
  std::string to_string() const;
  /// Number of printed terms; callers parenthesize when > 1.
  std::size_t size() const { return terms_.size(); }

private:
  void add_scaled(const LaurentPoly& other, int sign);
  std::vector<Term> terms_;
};

/// Text for q^{twice/2} alone: "", "q", "q^2", "q^(-1)", "q^(1/2)".
std::string q_power_text(int twice);

/// [a] = (q^a - q^{-a}) / (q - q^{-1}) as an exact Laurent polynomial.
/// Only integer a gives a Laurent polynomial; half-integers are rejected.
LaurentPoly qnumber(HalfInteger a);
inline LaurentPoly qnumber(int a) { return qnumber(HalfInteger::from_int(a)); }

/// Substitutes q, with q^{1/2} taken as the principal square root.
QValue evaluate(const LaurentPoly& p, QValue q);
/// Substitutes q = root.q(), with q^{1/2} = root.pow(1/2) (same branch as qpow_complex).
QValue evaluate(const LaurentPoly& p, const RootOfUnity& root);

QValue qpow_complex(Complex x, const RootOfUnity& root);
/// (q^x - q^{-x}) / (q - q^{-1}) with q^x from qpow_complex.
QValue qbracket_numeric(Complex x, const RootOfUnity& root);

/// (q^x - q^{-x}) / (q - q^{-1}) for arbitrary complex q != 0, +-1, using
/// q^x = exp(x Log q) with the principal logarithm.
Complex qbracket(Complex x, Complex q);

} // namespace uqso
