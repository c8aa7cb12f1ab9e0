#pragma once

// Irreducibility witness: the dimension of the commutant of a set of
// operators, i.e. of {X : X T = T X for every T}.

#include <vector>

#include "uqso/reps.hpp"

namespace uqso::reps {

struct CommutantStats {
  std::size_t unknowns = 0;            // d^2
  std::size_t eliminated = 0;          // unknowns fixed to zero by singleton rows
  std::size_t merged = 0;              // doubleton rows used to tie two unknowns together
  std::size_t dense_rows = 0;          // rows left for the dense SVD
  std::size_t dense_cols = 0;
  double sigma_max = 0.0;
};

/// Nullity of the stacked system X T - T X = 0 over all ops. Rows with a
/// single surviving unknown force it to zero and are eliminated first; rows
/// with two tie one unknown to the other. The rest is decomposed densely on
/// an orthonormal basis of the tied classes, and singular values below
/// tol * sigma_max count as zero. Throws DimensionMismatch for non-square or unequal sizes.
std::size_t commutant_dimension(const std::vector<SparseOperator>& ops, double tol = 1e-8,
                                CommutantStats* stats = nullptr);

} // namespace uqso::reps
