#pragma once

// Matrix-level checks of the embedding U'_q(so_n) -> U_q(sl_n) on the vector
// representation, and of the map psi : U'_q(so_3) -> U_q(sl_2) (extended) on
// the finite dimensional irreps of U_q(sl_2).

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "uqso/coeffring.hpp"

namespace uqso::djembed {

/// Dense matrix of exact Laurent polynomials.
class LMatrix {
public:
  LMatrix(std::size_t rows, std::size_t cols);
  static LMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  LaurentPoly& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const LaurentPoly& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  bool is_zero() const;
  LMatrix scaled(const LaurentPoly& c) const;
  Eigen::MatrixXcd evaluate(QValue q) const;
  /// Exact entries at q = 1.
  std::vector<std::vector<Rational>> at_one() const;

  friend LMatrix operator+(const LMatrix& a, const LMatrix& b);
  friend LMatrix operator-(const LMatrix& a, const LMatrix& b);
  friend LMatrix operator*(const LMatrix& a, const LMatrix& b);
  friend bool operator==(const LMatrix& a, const LMatrix& b) = default;

private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<LaurentPoly> data_;
};

/// Vector representation of U_q(sl_n): E_i -> E_{i,i+1}, F_i -> E_{i+1,i},
/// q^{-H_i} -> diag with q^{-1} at i and q at i+1. Symbolic matrices are
/// always present; numeric copies exist when a q value was supplied.
struct SlnRepMatrices {
  int n = 0;
  std::optional<QValue> q;
  std::vector<LMatrix> E, F, Kinv;
  std::vector<Eigen::MatrixXcd> numE, numF, numKinv;

  bool symbolic() const { return !q.has_value(); }
};

/// Builds the representation (numeric when q is given) and self-checks the
/// U_q(sl_n) relations; n >= 2.
SlnRepMatrices vector_rep_sln(int n, std::optional<QValue> q = std::nullopt);

/// F_{j-1} - q q^{-H_{j-1}} E_{j-1}; 2 <= j <= n, else IndexOutOfRange.
LMatrix tilde_I(int j, const SlnRepMatrices& rep);
Eigen::MatrixXcd tilde_I_numeric(int j, const SlnRepMatrices& rep);

struct CheckEntry {
  std::string check;
  std::string mode; // "symbolic" or "numeric"
  bool pass = false;
  std::optional<double> residual;
};

struct CheckReport {
  std::vector<CheckEntry> entries;
  bool all_pass() const;
};

/// Every defining relation of U'_q(so_n) on the images I_{j,j-1} -> tilde_I(j)
/// reduced exactly; the q = 1 images and classical relations; and agreement
/// of the symbolic residuals with a numeric rerun at `samples` seeded q values.
CheckReport verify_embedding(int n, int samples = 20, std::uint64_t seed = 1);

struct Sl2IrrepMatrices {
  int twoJ = 0;
  QValue q{1.0, 0.0};
  Eigen::MatrixXcd E, F, qH, qHinv;
};

/// Weight basis |m>, m = j, j-1, ..., -j with j = twoJ/2: q^H |m> = q^m |m>,
/// E|m> = [j-m]|m+1>, F|m> = [j+m]|m-1>, so that
/// [E,F] = (q^{2H} - q^{-2H}) / (q - q^{-1}). Half-integer powers use the
/// principal square root of q. Throws DegenerateQ when q = 0, q = +-1 or q
/// is a root of unity of order <= twoJ + 1.
Sl2IrrepMatrices sl2_irrep(int twoJ, QValue q);

/// X = i/(q - q^{-1}) (q^H - q^{-H}) and Y = (E - F)(q^H + q^{-H})^{-1} on the
/// irrep, checked against both cubic relations of U'_q(so_3). Throws
/// SingularDenominator when q^H + q^{-H} is singular.
CheckReport verify_psi(int twoJ, QValue q, double tol = 1e-10);

/// The two images, for inspection.
std::pair<Eigen::MatrixXcd, Eigen::MatrixXcd> psi_images(const Sl2IrrepMatrices& rep);

} // namespace uqso::djembed
