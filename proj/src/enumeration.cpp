#include "cusp/enumeration.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "cusp/normal_form.hpp"

namespace cusp {
namespace {

Integer floor_q(const Rational& x) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return r;
}

// Smallest integer x with (x - c)^2 <= b, and largest; empty when lo > hi.
std::pair<Integer, Integer> integer_window(const Rational& c, const Rational& b) {
  double radius = std::sqrt(std::max(0.0, b.get_d()));
  Integer lo = floor_q(c) - Integer(static_cast<long>(std::ceil(radius))) - 1;
  Integer hi = floor_q(c) + Integer(static_cast<long>(std::ceil(radius))) + 2;
  auto inside = [&](const Integer& x) {
    Rational d = Rational(x) - c;
    return d * d <= b;
  };
  // widen in case the floating estimate was short, then shrink to the exact window
  while (inside(lo)) lo -= 1;
  while (inside(hi)) hi += 1;
  while (lo <= hi && !inside(lo)) lo += 1;
  while (hi >= lo && !inside(hi)) hi -= 1;
  return {lo, hi};
}

}  // namespace

bool lex_less(const Vector& a, const Vector& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

std::vector<Vector> enumerate_positive_definite(const Matrix& q, const Integer& target) {
  const std::size_t n = q.rows();
  std::vector<Vector> out;
  if (target < 0) return out;
  if (n == 0) {
    if (target == 0) out.emplace_back();
    return out;
  }
  // Q(x) = sum_i d_i (x_i + sum_{j>i} mu_ij x_j)^2
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m[i][j] = Rational(q(i, j));
  for (std::size_t i = 0; i < n; ++i) {
    if (m[i][i] <= 0) throw std::invalid_argument("enumeration: form is not positive definite");
    for (std::size_t j = i + 1; j < n; ++j) {
      m[j][i] = m[i][j];
      m[i][j] /= m[i][i];
    }
    for (std::size_t k = i + 1; k < n; ++k)
      for (std::size_t l = k; l < n; ++l) m[k][l] -= m[k][i] * m[i][l];
  }

  Vector x = zero_vector(n);
  std::vector<Rational> budget(n + 1);
  budget[n] = Rational(target);

  auto recurse = [&](auto&& self, std::size_t level) -> void {
    const std::size_t i = level - 1;
    Rational centre = 0;
    for (std::size_t j = i + 1; j < n; ++j) centre -= m[i][j] * Rational(x[j]);
    Rational allowed = budget[level] / m[i][i];
    auto [lo, hi] = integer_window(centre, allowed);
    for (Integer v = lo; v <= hi; v += 1) {
      x[i] = v;
      Rational d = Rational(v) - centre;
      budget[i] = budget[level] - m[i][i] * d * d;
      if (i == 0) {
        if (budget[0] == 0) out.push_back(x);
      } else {
        self(self, i);
      }
    }
    x[i] = 0;
  };
  recurse(recurse, n);
  std::sort(out.begin(), out.end(), lex_less);
  return out;
}

Vector reduce_modulo(const Vector& v, const Matrix& radical_rows) {
  Vector r = v;
  for (std::size_t k = 0; k < radical_rows.rows(); ++k) {
    Vector g = radical_rows.row(k);
    Integer gg = dot(g, g);
    if (gg == 0) continue;
    // nearest integer to -<r,g>/<g,g>; ties go to the shift of smaller
    // magnitude so that reduce(-v) == -reduce(v)
    Rational t(-dot(r, g), gg);
    t.canonicalize();
    Integer lo = floor_q(t);
    Rational frac = t - Rational(lo);
    Integer shift = lo;
    if (frac > Rational(1, 2) || (frac == Rational(1, 2) && abs(lo + 1) < abs(lo))) shift = lo + 1;
    r = r + shift * g;
  }
  return r;
}

ShortVectors vectors_of_square(const GramLattice& l, const Integer& square) {
  if (square >= 0) throw std::invalid_argument("vectors_of_square: square must be negative");
  Signature sig = l.signature();
  if (sig.positive > 0) throw std::domain_error("enumeration unbounded: form is not negative semidefinite");

  ShortVectors result;
  result.radical = left_kernel(l.gram());
  const std::size_t n = l.rank();
  Matrix complement = complement_basis(result.radical, n);
  if (complement.rows() == 0) return result;

  Matrix quotient = complement * l.gram() * complement.transpose();
  Matrix positive = Integer(-1) * quotient;
  for (const Vector& y : enumerate_positive_definite(positive, -square)) {
    Vector v = y * complement;
    result.representatives.push_back(reduce_modulo(v, result.radical));
  }
  std::sort(result.representatives.begin(), result.representatives.end(), lex_less);
  return result;
}

}  // namespace cusp
