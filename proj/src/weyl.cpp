#include "cusp/weyl.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "cusp/normal_form.hpp"

namespace cusp {
namespace {

Vector transvect(const GramLattice& l, const Vector& f, const Vector& e, const Vector& x) {
  Integer xf = l.pair(x, f), xe = l.pair(x, e), half = l.norm(e) / 2;
  return x + xf * e - xe * f - half * xf * f;
}

// Coefficient vectors with max-norm exactly r, lexicographic.
std::vector<Vector> shell(std::size_t dim, long r) {
  std::vector<Vector> out;
  if (dim == 0) {
    if (r == 0) out.push_back({});
    return out;
  }
  Vector v(dim);
  std::vector<long> c(dim, -r);
  while (true) {
    long top = 0;
    for (long x : c) top = std::max(top, std::labs(x));
    if (top == r) {
      for (std::size_t i = 0; i < dim; ++i) v[i] = c[i];
      out.push_back(v);
    }
    std::size_t i = dim;
    while (i > 0 && c[i - 1] == r) c[--i] = -r;
    if (i == 0) break;
    ++c[i - 1];
  }
  return out;
}

bool same_line(const Vector& a, const Vector& b) { return a == b || a == -b; }

}  // namespace

Vector reflect(const GramLattice& l, const Vector& root, const Vector& x) {
  if (l.norm(root) != -2) throw std::invalid_argument("reflection needs a root of square -2");
  return x + l.pair(x, root) * root;
}

Isometry reflection(const GramLattice& l, const Vector& root) {
  const std::size_t n = l.rank();
  Matrix m(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    Vector img = reflect(l, root, unit_vector(n, j));
    for (std::size_t i = 0; i < n; ++i) m(i, j) = img[i];
  }
  return Isometry(l, m);
}

std::optional<unsigned long> dihedral_order(const GramLattice& l, const Vector& a, const Vector& b) {
  if (l.norm(a) != -2 || l.norm(b) != -2) throw std::invalid_argument("dihedral order needs two roots");
  Integer c = abs(l.pair(a, b));
  if (c == 0) return 2;
  if (c == 1) return 3;
  return std::nullopt;
}

std::vector<int> chamber_sign(const GramLattice& l, const Vector& x, const std::vector<Vector>& roots) {
  if (l.norm(x) <= 0) throw std::invalid_argument("not in the positive cone");
  std::vector<int> s;
  s.reserve(roots.size());
  for (const auto& r : roots) s.push_back(sign(l.pair(x, r)));
  return s;
}

Vector PointedBlowup::lift(const Vector& base_class) const { return base_class * base.embedding; }

PointedBlowup pointed_blowup(const LooijengaSurface& blown, const PeriodPoint& blown_period) {
  if (blown.history().empty()) throw std::invalid_argument("surface has no recorded blow-up");
  const BlowupRecord& last = blown.history().back();
  BlowDown base = blow_down_with_embedding(blown, last.exceptional);
  PeriodPoint base_period = period_after_blowdown(blown_period, base);
  EllipticFibration fib = analyze_fibration(base.surface, base_period);
  if (!fib.has_section) throw std::domain_error("fibration on the blown-down surface has no section");
  TranslationGroup tg = mw_translation_group(base.surface, fib);
  return PointedBlowup{blown,       blown_period, last.exceptional,   last.component,
                       std::move(base), std::move(base_period), std::move(fib), std::move(tg)};
}

std::vector<SectionCandidate> boundary_sections(const PointedBlowup& pb, unsigned long bound) {
  const LooijengaSurface& y = pb.base.surface;
  const GramLattice& pic = y.picard();
  std::vector<Vector> seeds;
  for (const auto& h : y.history())
    if (h.component == pb.component) seeds.push_back(h.exceptional);
  std::vector<SectionCandidate> out;
  const std::size_t dim = pb.translations.directions.size();
  for (unsigned long r = 0; r <= bound; ++r) {
    for (const auto& coeffs : shell(dim, static_cast<long>(r))) {
      Vector e = zero_vector(pic.rank());
      for (std::size_t i = 0; i < dim; ++i) e = e + coeffs[i] * pb.translations.directions[i];
      for (const auto& seed : seeds) {
        Vector c = transvect(pic, pb.fibration.fiber, e, seed);
        Integer res = pb.blown_period.evaluate(pb.lift(c) - pb.exceptional);
        out.push_back({coeffs, seed, c, res});
      }
    }
    if (dim == 0) break;
  }
  return out;
}

WeylCertificate weyl_infiniteness_certificate(const PointedBlowup& pb, const CertificateOptions& opts) {
  const GramLattice& pic = pb.blown.picard();
  std::vector<SectionCandidate> through_p;
  for (auto& c : boundary_sections(pb, opts.section_bound))
    if (c.residue == 0) through_p.push_back(std::move(c));

  WeylCertificate cert;
  bool found = false;
  for (std::size_t j = 0; j < through_p.size() && !found; ++j)
    for (std::size_t i = 0; i < j && !found; ++i) {
      Vector a = pb.lift(through_p[i].section) - pb.exceptional;
      Vector b = pb.lift(through_p[j].section) - pb.exceptional;
      if (pic.pair(a, b) >= 2) {
        cert.section_a = through_p[i].section;
        cert.section_b = through_p[j].section;
        cert.alpha = a;
        cert.beta = b;
        found = true;
      }
    }
  if (!found) throw std::domain_error("certificate search exhausted");
  cert.pairing = pic.pair(cert.alpha, cert.beta);
  cert.order = dihedral_order(pic, cert.alpha, cert.beta);

  Sublattice m = boundary_complement(pb.blown).lattice;
  bool have_x = false;
  for (long r = 1; r <= 30 && !have_x; ++r)
    for (const auto& c : shell(m.rank(), r)) {
      Vector x = m.to_ambient(c);
      if (pic.norm(x) > 0 && pic.pair(x, cert.alpha) > 0 && pic.pair(x, cert.beta) > 0) {
        cert.witness = x;
        have_x = true;
        break;
      }
    }
  if (!have_x) throw std::domain_error("certificate search exhausted: no positive vector in the fundamental chamber");

  // positive roots a alpha + b beta of the rank-two system, by breadth-first reflection
  const std::size_t depth = (opts.witness_count + 1) / 2 + 1;
  const Integer c = cert.pairing;
  std::set<std::pair<Integer, Integer>> seen{{1, 0}, {0, 1}};
  std::vector<std::pair<Integer, Integer>> frontier{{1, 0}, {0, 1}};
  for (std::size_t d = 0; d < depth; ++d) {
    std::vector<std::pair<Integer, Integer>> next;
    for (const auto& [a, b] : frontier) {
      std::pair<Integer, Integer> images[2] = {{-a + b * c, b}, {a, -b + a * c}};
      for (auto img : images) {
        if (img.first < 0 || img.second < 0) img = {-img.first, -img.second};
        if (seen.insert(img).second) next.push_back(img);
      }
    }
    frontier = std::move(next);
  }
  std::vector<std::pair<Integer, Integer>> coeffs(seen.begin(), seen.end());
  std::sort(coeffs.begin(), coeffs.end(), [](const auto& u, const auto& v) {
    Integer hu = u.first + u.second, hv = v.first + v.second;
    return hu != hv ? hu < hv : u.first > v.first;
  });
  for (const auto& [a, b] : coeffs) cert.roots.push_back(a * cert.alpha + b * cert.beta);

  std::set<std::vector<int>> chambers{chamber_sign(pic, cert.witness, cert.roots)};
  Vector left = cert.witness, right = cert.witness;  // words ending ... s_a and ... s_b
  cert.words = 1;
  for (std::size_t len = 1; len + 1 <= depth; ++len) {
    Vector new_left = reflect(pic, cert.alpha, right);
    Vector new_right = reflect(pic, cert.beta, left);
    left = std::move(new_left);
    right = std::move(new_right);
    chambers.insert(chamber_sign(pic, left, cert.roots));
    chambers.insert(chamber_sign(pic, right, cert.roots));
    cert.words += 2;
  }
  cert.distinct_chambers = chambers.size();
  return cert;
}

CriterionReport totaro_check(const Sublattice& m, const std::vector<Isometry>& g, const std::vector<Isometry>& h,
                             const std::optional<WeylCertificate>& weyl, std::size_t witness_count) {
  CriterionReport rep;
  rep.signature = m.signature();
  rep.m = static_cast<long>(rep.signature.negative);
  rep.signature_ok = rep.signature.positive == 1 && rep.signature.null == 0 && rep.m >= 3;
  if (!rep.signature_ok) rep.failures.push_back("M does not have signature (1, m) with m >= 3");
  const bool hyperbolic = rep.signature.positive == 1 && rep.signature.null == 0 && rep.m >= 1;

  std::vector<Isometry> gm, hm;
  try {
    for (const auto& x : g) gm.push_back(x.restrict_to(m));
    for (const auto& x : h) hm.push_back(x.restrict_to(m));
  } catch (const std::exception& e) {
    rep.failures.push_back(std::string("isometry does not preserve M: ") + e.what());
    gm.clear();
    hm.clear();
  }
  for (const auto& x : gm) rep.g_restricted.push_back(x.matrix());
  for (const auto& x : hm) rep.h_restricted.push_back(x.matrix());

  // (b) commuting parabolics with one fixed line, independent logarithms
  if (hyperbolic && !gm.empty()) {
    bool ok = true;
    for (const auto& x : gm) {
      IsometryType t = classify_isometry(x);
      if (t.kind != IsometryKind::parabolic) {
        ok = false;
        rep.failures.push_back("a generator of G is not parabolic");
        break;
      }
      if (!rep.g_fixed_line) {
        rep.g_fixed_line = t.fixed_isotropic;
      } else if (!same_line(*rep.g_fixed_line, *t.fixed_isotropic)) {
        ok = false;
        rep.failures.push_back("generators of G fix different isotropic lines");
      }
    }
    for (std::size_t i = 0; i < gm.size() && ok; ++i)
      for (std::size_t j = i + 1; j < gm.size() && ok; ++j)
        if (!commute(gm[i], gm[j])) {
          ok = false;
          rep.failures.push_back("generators of G do not commute");
        }
    rep.zmminus1_ok = ok;

    const std::size_t n = m.rank();
    Matrix logs(gm.size(), n * n);
    for (std::size_t k = 0; k < gm.size(); ++k) {
      Matrix nil = gm[k].matrix() - Matrix::identity(n);
      Matrix l2 = Integer(2) * nil - nil * nil;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) logs(k, i * n + j) = l2(i, j);
    }
    rep.g_log_rank = static_cast<long>(rank(logs));
  } else if (gm.empty()) {
    rep.failures.push_back("G has no generators");
  }
  rep.rank_ok = rep.signature_ok && static_cast<long>(gm.size()) == rep.m - 1 && rep.g_log_rank == rep.m - 1;
  if (rep.signature_ok && !rep.rank_ok) rep.failures.push_back("G does not have m - 1 independent generators");

  // (c) infinite reflection subgroup moving the chamber
  if (weyl) {
    rep.weyl = weyl;
    const GramLattice& amb = m.ambient();
    bool ok = !weyl->order && m.contains(weyl->alpha) && m.contains(weyl->beta) && amb.norm(weyl->alpha) == -2 &&
              amb.norm(weyl->beta) == -2 && weyl->distinct_chambers >= witness_count;
    rep.weyl_infinite_ok = ok;
    if (!ok) rep.failures.push_back("Weyl certificate does not witness an infinite reflection group");
  } else {
    rep.failures.push_back("no Weyl certificate");
  }

  // (d) a parabolic of H with a different fixed line
  if (hyperbolic && rep.g_fixed_line) {
    for (const auto& x : hm) {
      IsometryType t = classify_isometry(x);
      if (t.kind == IsometryKind::parabolic && !same_line(*t.fixed_isotropic, *rep.g_fixed_line)) {
        rep.h_fixed_line = t.fixed_isotropic;
        rep.disjoint_parabolics_ok = true;
        break;
      }
    }
  }
  if (!rep.disjoint_parabolics_ok) rep.failures.push_back("H has no parabolic with a fixed line different from G");

  rep.verdict = rep.signature_ok && rep.rank_ok && rep.zmminus1_ok && rep.weyl_infinite_ok && rep.disjoint_parabolics_ok;
  return rep;
}

}  // namespace cusp
