#include "cusp/polynomial.hpp"

#include <map>
#include <stdexcept>

namespace cusp {

Polynomial::Polynomial(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Integer> c(a.coeffs().size() + b.coeffs().size() - 1, Integer(0));
  for (std::size_t i = 0; i < a.coeffs().size(); ++i)
    for (std::size_t j = 0; j < b.coeffs().size(); ++j) c[i + j] += a.coeffs()[i] * b.coeffs()[j];
  return Polynomial(std::move(c));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  std::vector<Integer> c(std::max(a.coeffs().size(), b.coeffs().size()), Integer(0));
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) c[i] += a.coeffs()[i];
  for (std::size_t i = 0; i < b.coeffs().size(); ++i) c[i] -= b.coeffs()[i];
  return Polynomial(std::move(c));
}

Division divide_monic(const Polynomial& a, const Polynomial& monic) {
  if (monic.is_zero() || monic.leading() != 1) throw std::invalid_argument("divisor is not monic");
  std::vector<Integer> rem = a.coeffs();
  const int db = monic.degree();
  if (a.degree() < db) return {Polynomial{}, a};
  std::vector<Integer> quot(a.degree() - db + 1, Integer(0));
  for (int k = a.degree() - db; k >= 0; --k) {
    Integer q = rem[k + db];
    quot[k] = q;
    if (q == 0) continue;
    for (int j = 0; j <= db; ++j) rem[k + j] -= q * monic.coeffs()[j];
  }
  return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Polynomial characteristic_polynomial(const Matrix& a) {
  if (!a.square()) throw std::invalid_argument("characteristic polynomial of a non-square matrix");
  const std::size_t n = a.rows();
  std::vector<Integer> c(n + 1, Integer(0));
  c[n] = 1;
  Matrix m(n, n);
  for (std::size_t k = 1; k <= n; ++k) {
    m = a * m;
    for (std::size_t i = 0; i < n; ++i) m(i, i) += c[n - k + 1];
    Matrix am = a * m;
    Integer tr = 0;
    for (std::size_t i = 0; i < n; ++i) tr += am(i, i);
    Integer kk(static_cast<unsigned long>(k));
    if (tr % kk != 0) throw std::logic_error("Faddeev-LeVerrier: inexact division");
    c[n - k] = -(tr / kk);
  }
  return Polynomial(std::move(c));
}

unsigned long euler_phi(unsigned long n) {
  unsigned long result = n;
  for (unsigned long p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

Polynomial cyclotomic(unsigned long d) {
  if (d == 0) throw std::invalid_argument("cyclotomic polynomial of order 0");
  static std::map<unsigned long, Polynomial> cache;
  if (auto it = cache.find(d); it != cache.end()) return it->second;
  std::vector<Integer> c(d + 1, Integer(0));
  c[0] = -1;
  c[d] = 1;
  Polynomial p(std::move(c));
  for (unsigned long e = 1; e < d; ++e)
    if (d % e == 0) p = divide_monic(p, cyclotomic(e)).quotient;
  cache.emplace(d, p);
  return p;
}

CyclotomicSplit split_cyclotomic(const Polynomial& p) {
  CyclotomicSplit s{{}, p};
  if (p.degree() <= 0) return s;
  const unsigned long deg = static_cast<unsigned long>(p.degree());
  // phi(d) >= sqrt(d/2), so d <= 2 deg^2 covers every candidate
  for (unsigned long d = 1; d <= 2 * deg * deg + 2; ++d) {
    if (euler_phi(d) > deg) continue;
    Polynomial phi = cyclotomic(d);
    while (s.rest.degree() >= phi.degree()) {
      Division q = divide_monic(s.rest, phi);
      if (!q.remainder.is_zero()) break;
      s.rest = q.quotient;
      s.orders.push_back(d);
    }
  }
  return s;
}

std::string to_string(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::string s;
  for (int k = p.degree(); k >= 0; --k) {
    const Integer& c = p.coeffs()[k];
    if (c == 0) continue;
    if (!s.empty()) s += (c > 0) ? " + " : " - ";
    else if (c < 0) s += "-";
    Integer a = abs(c);
    if (a != 1 || k == 0) s += a.get_str();
    if (k >= 1) s += "x";
    if (k >= 2) s += "^" + std::to_string(k);
  }
  return s;
}

}  // namespace cusp
