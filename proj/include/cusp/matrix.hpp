#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "cusp/integer.hpp"

namespace cusp {

/// Dense row-major matrix of arbitrary-precision integers.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, Integer(0)) {}
  Matrix(std::initializer_list<std::initializer_list<long>> rows);

  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<Integer> row_span(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  std::span<const Integer> row_span(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }

  Vector row(std::size_t i) const;
  Vector col(std::size_t j) const;
  std::vector<Vector> row_list() const;
  void set_row(std::size_t i, const Vector& v);
  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  void append_row(const Vector& v);

  Matrix transpose() const;
  bool is_symmetric() const;
  bool is_identity() const;

  friend bool operator==(const Matrix& a, const Matrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);
Matrix operator*(const Integer& k, const Matrix& a);
/// Matrix acting on a column vector.
Vector operator*(const Matrix& a, const Vector& v);
/// Row vector times matrix.
Vector operator*(const Vector& v, const Matrix& a);

Matrix power(const Matrix& a, unsigned long e);

/// Fraction-free (Bareiss) determinant.
Integer determinant(const Matrix& a);
/// Rank over the rationals.
std::size_t rank(const Matrix& a);
/// Inverse of a unimodular matrix; throws if det is not +-1.
Matrix unimodular_inverse(const Matrix& a);

std::string to_string(const Matrix& m);

}  // namespace cusp
