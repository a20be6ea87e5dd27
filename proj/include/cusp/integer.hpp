#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace cusp {

using Integer = mpz_class;
using Rational = mpq_class;

/// Integer coordinate vector. Which lattice it lives in is tracked by the caller.
using Vector = std::vector<Integer>;

std::int64_t to_int64(const Integer& x);
int sign(const Integer& x);
int sign(const Rational& x);

Integer gcd(const Integer& a, const Integer& b);
Integer lcm(const Integer& a, const Integer& b);

/// Nonnegative residue of a modulo m (m > 0).
Integer mod(const Integer& a, const Integer& m);

Vector make_vector(std::initializer_list<long> xs);
Vector zero_vector(std::size_t n);
Vector unit_vector(std::size_t n, std::size_t i);

Vector operator+(const Vector& a, const Vector& b);
Vector operator-(const Vector& a, const Vector& b);
Vector operator-(const Vector& a);
Vector operator*(const Integer& k, const Vector& a);

Integer dot(const Vector& a, const Vector& b);
bool is_zero(const Vector& v);
/// gcd of the entries; 0 for the zero vector.
Integer content(const Vector& v);
bool is_primitive(const Vector& v);
/// Divides out the content and makes the first nonzero entry positive.
Vector primitive_normalized(const Vector& v);

std::string to_string(const Vector& v);

}  // namespace cusp
