#pragma once

#include <optional>

#include "cusp/matrix.hpp"

namespace cusp {

struct HermiteForm {
  Matrix form;       // row-style reduced echelon form
  Matrix transform;  // unimodular, transform * input == form
  std::size_t rank = 0;
};

/// Row Hermite normal form. Pivots are positive and entries above a pivot
/// are reduced into [0, pivot), so the nonzero rows are a canonical basis of
/// the row lattice.
HermiteForm hermite_form(const Matrix& a);

/// Canonical (Hermite) basis of the lattice spanned by the rows of a; zero rows dropped.
Matrix row_lattice_basis(const Matrix& a);

/// Integer solutions x of x * a = 0, as rows of a Hermite-reduced basis.
/// The result is always saturated in Z^rows.
Matrix left_kernel(const Matrix& a);

/// Basis of (Q-span of rows) intersected with Z^cols, Hermite-reduced.
Matrix saturation(const Matrix& rows);

bool is_saturated(const Matrix& rows);

/// Integer x with x * b == v, if one exists. Unique when the rows of b are independent.
std::optional<Vector> solve_left(const Matrix& b, const Vector& v);

struct SmithForm {
  Matrix diagonal;  // same shape as input, nonnegative d_1 | d_2 | ...
  Matrix left;      // unimodular
  Matrix right;     // unimodular, left * input * right == diagonal
  std::size_t rank = 0;
};

SmithForm smith_form(const Matrix& a);

/// Extends the rows of a saturated basis to a basis of Z^n; returns only the added rows.
Matrix complement_basis(const Matrix& saturated_rows, std::size_t n);

}  // namespace cusp
