#include "cusp/normal_form.hpp"

#include <stdexcept>

namespace cusp {
namespace {

struct ExtendedGcd {
  Integer g, s, t;  // g = s*a + t*b
};

ExtendedGcd xgcd(const Integer& a, const Integer& b) {
  ExtendedGcd r;
  mpz_gcdext(r.g.get_mpz_t(), r.s.get_mpz_t(), r.t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

// rows (r1, r2) <- (s*r1 + t*r2, u*r1 + v*r2)
void combine_rows(Matrix& m, std::size_t r1, std::size_t r2, const Integer& s, const Integer& t, const Integer& u,
                  const Integer& v) {
  for (std::size_t j = 0; j < m.cols(); ++j) {
    Integer a = m(r1, j), b = m(r2, j);
    m(r1, j) = s * a + t * b;
    m(r2, j) = u * a + v * b;
  }
}

void add_row_multiple(Matrix& m, std::size_t dst, std::size_t src, const Integer& k) {
  if (k == 0) return;
  for (std::size_t j = 0; j < m.cols(); ++j) m(dst, j) += k * m(src, j);
}

void add_col_multiple(Matrix& m, std::size_t dst, std::size_t src, const Integer& k) {
  if (k == 0) return;
  for (std::size_t i = 0; i < m.rows(); ++i) m(i, dst) += k * m(i, src);
}

void negate_row(Matrix& m, std::size_t r) {
  for (std::size_t j = 0; j < m.cols(); ++j) m(r, j) = -m(r, j);
}

}  // namespace

HermiteForm hermite_form(const Matrix& a) {
  HermiteForm h{a, Matrix::identity(a.rows()), 0};
  Matrix& m = h.form;
  Matrix& u = h.transform;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    for (std::size_t i = r + 1; i < m.rows(); ++i) {
      if (m(i, c) == 0) continue;
      if (m(r, c) == 0) {
        m.swap_rows(r, i);
        u.swap_rows(r, i);
        continue;
      }
      auto [g, s, t] = xgcd(m(r, c), m(i, c));
      Integer p = m(r, c) / g, q = m(i, c) / g;
      // [s t; -q p] has determinant s*p + t*q = 1
      combine_rows(m, r, i, s, t, -q, p);
      combine_rows(u, r, i, s, t, -q, p);
    }
    if (m(r, c) == 0) continue;
    if (m(r, c) < 0) {
      negate_row(m, r);
      negate_row(u, r);
    }
    for (std::size_t i = 0; i < r; ++i) {
      Integer k = floor_div(m(i, c), m(r, c));
      add_row_multiple(m, i, r, -k);
      add_row_multiple(u, i, r, -k);
    }
    ++r;
  }
  h.rank = r;
  return h;
}

Matrix row_lattice_basis(const Matrix& a) {
  HermiteForm h = hermite_form(a);
  Matrix out(h.rank, a.cols());
  for (std::size_t i = 0; i < h.rank; ++i) out.set_row(i, h.form.row(i));
  return out;
}

Matrix left_kernel(const Matrix& a) {
  HermiteForm h = hermite_form(a);
  Matrix k(a.rows() - h.rank, a.rows());
  for (std::size_t i = h.rank; i < a.rows(); ++i) k.set_row(i - h.rank, h.transform.row(i));
  return row_lattice_basis(k);
}

Matrix saturation(const Matrix& rows) {
  Matrix relations = left_kernel(rows.transpose());
  return left_kernel(relations.transpose());
}

bool is_saturated(const Matrix& rows) { return row_lattice_basis(rows) == saturation(rows); }

std::optional<Vector> solve_left(const Matrix& b, const Vector& v) {
  if (v.size() != b.cols()) throw std::invalid_argument("dimension mismatch in solve_left");
  HermiteForm h = hermite_form(b);
  Vector y = zero_vector(b.rows());
  Vector residual = v;
  std::size_t c = 0;
  for (std::size_t r = 0; r < h.rank; ++r) {
    while (h.form(r, c) == 0) ++c;
    Integer q, rem;
    mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), residual[c].get_mpz_t(), h.form(r, c).get_mpz_t());
    if (rem != 0) return std::nullopt;
    y[r] = q;
    for (std::size_t j = 0; j < b.cols(); ++j) residual[j] -= q * h.form(r, j);
  }
  if (!is_zero(residual)) return std::nullopt;
  return y * h.transform;
}

SmithForm smith_form(const Matrix& a) {
  SmithForm s{a, Matrix::identity(a.rows()), Matrix::identity(a.cols()), 0};
  Matrix& m = s.diagonal;
  const std::size_t n = m.rows(), k = m.cols();
  for (std::size_t t = 0; t < std::min(n, k); ++t) {
    while (true) {
      // smallest nonzero |entry| in the trailing block becomes the pivot
      std::size_t pi = n, pj = k;
      for (std::size_t i = t; i < n; ++i)
        for (std::size_t j = t; j < k; ++j)
          if (m(i, j) != 0 && (pi == n || abs(m(i, j)) < abs(m(pi, pj)))) {
            pi = i;
            pj = j;
          }
      if (pi == n) {
        s.rank = t;
        return s;
      }
      m.swap_rows(t, pi);
      s.left.swap_rows(t, pi);
      m.swap_cols(t, pj);
      s.right.swap_cols(t, pj);

      bool clean = true;
      for (std::size_t i = t + 1; i < n; ++i) {
        if (m(i, t) == 0) continue;
        Integer q = floor_div(m(i, t), m(t, t));
        add_row_multiple(m, i, t, -q);
        add_row_multiple(s.left, i, t, -q);
        if (m(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < k; ++j) {
        if (m(t, j) == 0) continue;
        Integer q = floor_div(m(t, j), m(t, t));
        add_col_multiple(m, j, t, -q);
        add_col_multiple(s.right, j, t, -q);
        if (m(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // divisibility of the trailing block by the pivot
      std::size_t bad = n;
      for (std::size_t i = t + 1; i < n && bad == n; ++i)
        for (std::size_t j = t + 1; j < k; ++j)
          if (m(i, j) % m(t, t) != 0) {
            bad = i;
            break;
          }
      if (bad == n) break;
      add_row_multiple(m, t, bad, 1);
      add_row_multiple(s.left, t, bad, 1);
    }
    if (m(t, t) < 0) {
      negate_row(m, t);
      negate_row(s.left, t);
    }
  }
  s.rank = std::min(n, k);
  for (std::size_t t = 0; t < std::min(n, k); ++t)
    if (m(t, t) == 0) {
      s.rank = t;
      break;
    }
  return s;
}

Matrix complement_basis(const Matrix& saturated_rows, std::size_t n) {
  const std::size_t k = saturated_rows.rows();
  if (k == 0) return Matrix::identity(n);
  // column HNF: rows * V = [L 0]; L unimodular when the rows are saturated,
  // so the last n-k rows of V^{-1} complete a basis.
  HermiteForm h = hermite_form(saturated_rows.transpose());
  if (h.rank != k) throw std::invalid_argument("complement_basis: rows are dependent");
  Matrix v = h.transform.transpose();
  Matrix vinv = unimodular_inverse(v);
  Matrix out(n - k, n);
  for (std::size_t i = k; i < n; ++i) out.set_row(i - k, vinv.row(i));
  Matrix full = saturated_rows;
  for (std::size_t i = 0; i < out.rows(); ++i) full.append_row(out.row(i));
  Integer d = determinant(full);
  if (d != 1 && d != -1) throw std::invalid_argument("complement_basis: rows are not saturated");
  return out;
}

}  // namespace cusp
