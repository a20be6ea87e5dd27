#pragma once

#include <string>
#include <vector>

#include "cusp/matrix.hpp"

namespace cusp {

/// Dense integer polynomial, coefficients from degree 0 upwards, no trailing zeros.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Integer> coeffs);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Integer>& coeffs() const { return coeffs_; }
  const Integer& leading() const { return coeffs_.back(); }
  bool is_zero() const { return coeffs_.empty(); }

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  void trim();
  std::vector<Integer> coeffs_;
};

Polynomial operator*(const Polynomial& a, const Polynomial& b);
Polynomial operator-(const Polynomial& a, const Polynomial& b);

struct Division {
  Polynomial quotient;
  Polynomial remainder;
};

/// Division by a monic polynomial.
Division divide_monic(const Polynomial& a, const Polynomial& monic);

/// det(xI - a), via Faddeev-LeVerrier (exact over Z).
Polynomial characteristic_polynomial(const Matrix& a);

/// Euler totient.
unsigned long euler_phi(unsigned long n);

Polynomial cyclotomic(unsigned long d);

struct CyclotomicSplit {
  std::vector<unsigned long> orders;  // d for each cyclotomic factor, with multiplicity
  Polynomial rest;                    // cofactor with no cyclotomic factor
};

CyclotomicSplit split_cyclotomic(const Polynomial& p);

std::string to_string(const Polynomial& p);

}  // namespace cusp
