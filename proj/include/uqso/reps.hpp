#pragma once

// Finite dimensional irreducible representations of U'_q(so_n) at a
// primitive root of unity q, of dimension k^N, on a basis of cyclic
// tableaux.

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "uqso/coeffring.hpp"

namespace uqso::reps {

/// (i, s): entry i of tableau row s.
using EntryKey = std::pair<int, int>;

/// The parameter set omega.
struct ParamsOmega {
  int n = 3;
  RootOfUnity root{3, 1};
  std::vector<Complex> mTop;      // floor(n/2) entries of the fixed top row
  std::map<EntryKey, Complex> h;  // (i, j), j = 2..n-1, i = 1..floor(j/2)
  std::map<EntryKey, Complex> c;  // same index range, nonzero

  /// Checks shapes, nonzero c and the genericity conditions: for i != s in a
  /// row j of h, h_ij - h_sj and h_ij + h_sj stay at least `margin` away from
  /// every integer; h_{p,2p+1} (and the top row when n is odd) stays `margin`
  /// away from the half-integers. Throws InvalidArgument or DegenerateParameter.
  void validate(double margin = 1e-9) const;

  /// floor(n/2) + 2 * sum_{j=2}^{n-1} floor(j/2); always n(n-1)/2.
  int parameter_count() const;
};

/// Number of variable tableau entries, sum_{s=2}^{n-1} floor(s/2).
int variable_count(int n);
/// k^N.
std::size_t representation_dimension(int n, int orderK);

/// Variable entries in basis order: s descending, then i ascending.
std::vector<EntryKey> variable_layout(int n);

class Tableau {
public:
  struct Shape;

  Tableau(std::shared_ptr<const Shape> shape, std::vector<int> offsets);

  int n() const;
  int order() const;
  /// Offsets m_{i,s} - h_{i,s} in [0, k-1], in variable_layout order.
  const std::vector<int>& offsets() const { return offsets_; }
  int offset(int i, int s) const;
  /// m_{i,s}; s = n reads the top row.
  Complex m(int i, int s) const;
  /// Rows m_n, m_{n-1}, ..., m_2.
  std::vector<std::vector<Complex>> rows() const;
  /// Replaces m_{j,s} by m_{j,s} +- 1 with cyclic wrap in [h, h + k - 1].
  /// Throws TopRowShift for s = n and IndexOutOfRange for a bad (j, s).
  Tableau shifted(int j, int s, int direction) const;
  /// Position in the basis: sum of offset_v * k^(N-1-v).
  std::size_t index() const;

private:
  std::shared_ptr<const Shape> shape_;
  std::vector<int> offsets_;
};

/// All k^N tableaux in basis order.
std::vector<Tableau> enumerate_tableaux(const ParamsOmega& omega);

/// l_{j,2p+1} = m_{j,2p+1} + p - j + 1 and l_{j,2p} = m_{j,2p} + p - j.
Complex l_coord(const Tableau& xi, int j, int s);

using LCoords = std::map<EntryKey, Complex>;
/// Every l-coordinate of the tableau, top row included.
LCoords l_coords(const Tableau& xi);

/// Square root of the q-bracket [x] on a branch chosen per factor so that the
/// products in A and B stay consistent under cyclic shifts: sqrt([x]) when x
/// lies in the upper half plane (or, for real x, when frac(x) < 1/2), and
/// i * sqrt([-x]) otherwise. Both square to [x].
Complex oriented_sqrt_bracket(Complex x, const RootOfUnity& root);

/// Raising/lowering coefficient of T(I_{2p+1,2p}) for 1 <= j <= p.
Complex coeff_A(const Tableau& xi, int j, int p, const RootOfUnity& root);
/// Raising/lowering coefficient of T(I_{2p,2p-1}) for 1 <= j <= p-1.
Complex coeff_B(const Tableau& xi, int j, int p, const RootOfUnity& root);
/// Diagonal coefficient of T(I_{2p,2p-1}).
Complex coeff_C(const Tableau& xi, int p, const RootOfUnity& root);

struct SparseEntry {
  std::size_t row;
  std::size_t col;
  Complex value;
};

/// Square sparse matrix, entries sorted row-major with no duplicates.
struct SparseOperator {
  std::string name;
  std::size_t dim = 0;
  std::vector<SparseEntry> entries;

  /// Sums duplicates, drops exact zeros and sorts.
  static SparseOperator assemble(std::string name, std::size_t dim, std::vector<SparseEntry> entries);
  /// Largest number of nonzeros in a single column.
  std::size_t max_column_nonzeros() const;
};

/// T(I_{2p+1,2p}); requires 2p + 1 <= n. Columns are source tableaux.
SparseOperator operator_odd(const ParamsOmega& omega, int p);
/// T(I_{2p,2p-1}); requires 2p <= n.
SparseOperator operator_even(const ParamsOmega& omega, int p);

/// Validates omega and returns T(I21), T(I32), ..., T(I_{n,n-1}).
std::vector<SparseOperator> build_representation(const ParamsOmega& omega);

struct RelationResidual {
  std::string relation;
  double residual; // max-entry norm
};

struct ResidualReport {
  std::vector<RelationResidual> residuals;
  double max_residual() const;
};

/// Residual of every defining relation of U'_q(so_n) on the operators
/// (ops[i] represents I_{i+2,i+1}).
ResidualReport relation_residual(const std::vector<SparseOperator>& ops, const RootOfUnity& root);

/// Generic parameters: h and the top row get real parts in (0, 1) away from
/// 0, 1/2, 1 and imaginary parts in [0.05, 0.45] with distinct imaginary
/// parts; c lies on the annulus 0.5 <= |c| <= 2. Resamples until validate()
/// passes with margin 1e-3.
ParamsOmega random_generic_params(int n, int orderK, std::uint64_t seed, int t = 1);

} // namespace uqso::reps
