#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "braidrep/matrix.hpp"

namespace braidrep {

/// The minimal polynomial has a root outside the rationals.
struct irrational_spectrum_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// The minimal polynomial has a repeated root.
struct not_diagonalizable_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// rational_roots could not split the polynomial completely.
struct partial_split_error : std::runtime_error {
  partial_split_error(std::vector<Scalar> roots, int remaining)
      : std::runtime_error("polynomial does not split over the rationals"),
        roots_found(std::move(roots)),
        remaining_degree(remaining) {}
  std::vector<Scalar> roots_found;
  int remaining_degree;
};

/// Monic polynomial of least degree annihilating m, as coefficients in
/// ascending degree order (constant first, leading 1 last). Found by the
/// first linear dependence among I, m, m², ... flattened to vectors.
std::vector<Scalar> minimal_polynomial(const Matrix& m);

/// All rational roots, with multiplicity, ascending. Requires a monic
/// polynomial with real (zero imaginary part) coefficients. Candidates come
/// from a divisor search on the primitive integer form. Throws
/// partial_split_error when a non-constant factor without rational roots
/// remains.
std::vector<Scalar> rational_roots(const std::vector<Scalar>& poly);

/// Spectral decomposition of a diagonalizable matrix with all-rational
/// spectrum: pairs (eigenvalue, projection) sorted by eigenvalue, with
/// P_l = prod_{j != l} (m - lambda_j I) / (lambda_l - lambda_j).
std::vector<std::pair<Scalar, Matrix>> spectral_projections(const Matrix& m);

/// Evaluates a polynomial (ascending coefficients) at a square matrix.
Matrix evaluate_polynomial(const std::vector<Scalar>& poly, const Matrix& m);

}  // namespace braidrep
