#include "cusp/integer.hpp"

#include <stdexcept>

namespace cusp {

std::int64_t to_int64(const Integer& x) {
  if (!x.fits_slong_p()) throw std::overflow_error("integer does not fit in 64 bits: " + x.get_str());
  return static_cast<std::int64_t>(x.get_si());
}

int sign(const Integer& x) { return sgn(x); }
int sign(const Rational& x) { return sgn(x); }

Integer gcd(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

Integer lcm(const Integer& a, const Integer& b) {
  Integer l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

Integer mod(const Integer& a, const Integer& m) {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

Vector make_vector(std::initializer_list<long> xs) {
  Vector v;
  v.reserve(xs.size());
  for (long x : xs) v.emplace_back(x);
  return v;
}

Vector zero_vector(std::size_t n) { return Vector(n, Integer(0)); }

Vector unit_vector(std::size_t n, std::size_t i) {
  Vector v = zero_vector(n);
  v.at(i) = 1;
  return v;
}

Vector operator+(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dimension mismatch in vector sum");
  Vector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Vector operator-(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dimension mismatch in vector difference");
  Vector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Vector operator-(const Vector& a) {
  Vector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
  return r;
}

Vector operator*(const Integer& k, const Vector& a) {
  Vector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = k * a[i];
  return r;
}

Integer dot(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dimension mismatch in dot product");
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

bool is_zero(const Vector& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

Integer content(const Vector& v) {
  Integer g = 0;
  for (const auto& x : v) g = gcd(g, x);
  return g;
}

bool is_primitive(const Vector& v) { return content(v) == 1; }

Vector primitive_normalized(const Vector& v) {
  Integer g = content(v);
  if (g == 0) return v;
  Vector r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = v[i] / g;
  for (const auto& x : r) {
    if (x == 0) continue;
    if (x < 0)
      for (auto& y : r) y = -y;
    break;
  }
  return r;
}

std::string to_string(const Vector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += v[i].get_str();
  }
  return s + ")";
}

}  // namespace cusp
