#include "cusp/surface.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "cusp/normal_form.hpp"

namespace cusp {

LooijengaSurface::LooijengaSurface(GramLattice picard, std::vector<Vector> boundary, std::vector<long> self_ints,
                                   std::vector<BlowupRecord> history)
    : picard_(std::move(picard)),
      boundary_(std::move(boundary)),
      self_ints_(std::move(self_ints)),
      history_(std::move(history)) {
  const std::size_t r = boundary_.size();
  if (r < 3) throw std::invalid_argument("boundary cycles of length r <= 2 are not supported");
  if (self_ints_.size() != r) throw std::invalid_argument("self-intersection sequence length does not match boundary");
  for (const auto& b : boundary_) picard_.check_vector(b);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) {
      Integer expected = (i == j) ? Integer(self_ints_[i]) : Integer((j == (i + 1) % r || i == (j + 1) % r) ? 1 : 0);
      if (picard_.pair(boundary_[i], boundary_[j]) != expected)
        throw std::invalid_argument("boundary classes D" + std::to_string(i + 1) + ", D" + std::to_string(j + 1) +
                                    " do not form an anticanonical cycle");
    }
  for (const auto& h : history_) {
    if (h.component >= r) throw std::invalid_argument("blow-up history refers to a missing component");
    picard_.check_vector(h.exceptional);
  }
  Integer d2 = boundary_square();
  if (Integer(static_cast<unsigned long>(picard_.rank())) != 10 - d2)
    throw std::invalid_argument("Picard rank " + std::to_string(picard_.rank()) + " differs from 10 - D^2 = " +
                                Integer(10 - d2).get_str());
  Signature sig = picard_.signature();
  if (sig != Signature{1, picard_.rank() - 1, 0})
    throw std::invalid_argument("Picard lattice does not have signature (1, rho - 1)");
}

Vector LooijengaSurface::anticanonical() const {
  Vector d = zero_vector(picard_.rank());
  for (const auto& b : boundary_) d = d + b;
  return d;
}

Integer LooijengaSurface::boundary_square() const { return picard_.norm(anticanonical()); }

ToricSurface toric_from_sequence(const std::vector<long>& a) {
  const std::size_t r = a.size();
  if (r < 3) throw std::invalid_argument("boundary cycles of length r <= 2 are not supported");

  // v_{i+1} = -a_i v_i - v_{i-1}, starting from v_1 = (1,0), v_2 = (0,1)
  std::vector<std::array<Integer, 2>> v(r + 2);
  v[0] = {1, 0};
  v[1] = {0, 1};
  for (std::size_t i = 1; i <= r; ++i) {
    const long ai = a[i % r];
    v[i + 1] = {-ai * v[i][0] - v[i - 1][0], -ai * v[i][1] - v[i - 1][1]};
  }
  if (v[r] != v[0] || v[r + 1] != v[1])
    throw std::invalid_argument("sequence is not the boundary of a smooth toric surface (fan does not close)");
  const long total = std::accumulate(a.begin(), a.end(), 0L);
  if (total != 12 - 3 * static_cast<long>(r))
    throw std::invalid_argument("sequence is not the boundary of a smooth toric surface (fan winds more than once)");
  ToricFan fan;
  fan.rays.assign(v.begin(), v.begin() + r);
  for (const auto& ray : fan.rays)
    if (gcd(ray[0], ray[1]) != 1) throw std::logic_error("toric fan has a non-primitive ray");

  Matrix intersections(r, r);
  for (std::size_t i = 0; i < r; ++i) {
    intersections(i, i) = a[i];
    intersections(i, (i + 1) % r) = 1;
    intersections((i + 1) % r, i) = 1;
  }
  const std::size_t rho = r - 2;
  Matrix gram(rho, rho);
  std::vector<std::string> labels;
  for (std::size_t k = 0; k < rho; ++k) {
    labels.push_back("D" + std::to_string(k + 3));
    for (std::size_t l = 0; l < rho; ++l) gram(k, l) = intersections(k + 2, l + 2);
  }
  // sum_i <m, v_i> D_i = 0 for m = e_1, e_2
  std::vector<Vector> boundary(r, zero_vector(rho));
  for (std::size_t k = 0; k < rho; ++k) {
    boundary[0][k] = -fan.rays[k + 2][0];
    boundary[1][k] = -fan.rays[k + 2][1];
    boundary[k + 2][k] = 1;
  }
  GramLattice picard(gram, labels);
  Integer det = determinant(gram);
  if (det != 1 && det != -1) throw std::logic_error("toric Picard lattice is not unimodular");
  return {LooijengaSurface(picard, boundary, a), fan};
}

LooijengaSurface interior_blowup(const LooijengaSurface& s, std::size_t component) {
  if (component >= s.cycle_length()) throw std::out_of_range("component index out of range");
  const std::size_t n = s.picard_rank();
  Matrix gram(n + 1, n + 1);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) gram(i, j) = s.picard().gram()(i, j);
  gram(n, n) = -1;
  std::vector<std::string> labels = s.picard().labels();
  if (!labels.empty()) labels.push_back("E" + std::to_string(s.history().size() + 1));

  auto extend = [n](const Vector& v) {
    Vector w = v;
    w.resize(n + 1, Integer(0));
    return w;
  };
  Vector e = unit_vector(n + 1, n);
  std::vector<Vector> boundary;
  for (const auto& b : s.boundary()) boundary.push_back(extend(b));
  boundary[component] = boundary[component] - e;
  std::vector<long> self_ints = s.self_intersections();
  self_ints[component] -= 1;
  std::vector<BlowupRecord> history;
  for (const auto& h : s.history()) history.push_back({h.component, extend(h.exceptional)});
  history.push_back({component, e});
  return LooijengaSurface(GramLattice(gram, labels), boundary, self_ints, history);
}

BlowDown blow_down_with_embedding(const LooijengaSurface& s, const Vector& c) {
  const GramLattice& pic = s.picard();
  pic.check_vector(c);
  if (pic.norm(c) != -1) throw std::invalid_argument("not a (-1)-class");
  std::optional<std::size_t> met;
  for (std::size_t i = 0; i < s.cycle_length(); ++i) {
    Integer x = pic.pair(c, s.boundary()[i]);
    if (x == 0) continue;
    if (x != 1 || met) throw std::invalid_argument("not an interior (-1)-curve configuration");
    met = i;
  }
  if (!met) throw std::invalid_argument("not an interior (-1)-curve configuration");

  Sublattice perp = orthogonal_complement(pic, {c});
  const Matrix& basis = perp.basis();
  // x -> x + (x.C) C projects onto C-perp because C.C = -1
  auto image = [&](const Vector& x) {
    auto coords = perp.coordinates(x + pic.pair(x, c) * c);
    if (!coords) throw std::logic_error("projection is not integral");
    return *coords;
  };

  std::vector<std::string> labels;
  if (!pic.labels().empty()) {
    for (std::size_t i = 0; i < basis.rows(); ++i) {
      Vector row = basis.row(i);
      std::string label = "b" + std::to_string(i + 1);
      for (std::size_t k = 0; k < row.size(); ++k)
        if (row == unit_vector(row.size(), k)) label = pic.labels()[k];
      labels.push_back(label);
    }
  }
  std::vector<Vector> boundary;
  for (const auto& b : s.boundary()) boundary.push_back(image(b));
  std::vector<long> self_ints = s.self_intersections();
  self_ints[*met] += 1;
  // exceptional classes survive only if they are untouched by the contraction
  std::vector<BlowupRecord> history;
  for (const auto& h : s.history()) {
    if (h.exceptional == c || pic.pair(h.exceptional, c) != 0) continue;
    history.push_back({h.component, image(h.exceptional)});
  }
  return {LooijengaSurface(GramLattice(perp.induced_gram(), labels), boundary, self_ints, history), basis};
}

LooijengaSurface blow_down(const LooijengaSurface& s, const Vector& c) {
  return blow_down_with_embedding(s, c).surface;
}

BoundaryComplement boundary_complement(const LooijengaSurface& s) {
  Sublattice lambda = orthogonal_complement(s.picard(), s.boundary());
  const std::size_t r = s.cycle_length();
  const std::size_t image_rank = rank(Matrix::from_rows(s.boundary(), s.picard_rank()));
  const std::size_t relations = r - image_rank;
  Integer expected = 10 - s.boundary_square() - Integer(static_cast<unsigned long>(r)) +
                     Integer(static_cast<unsigned long>(relations));
  if (Integer(static_cast<unsigned long>(lambda.rank())) != expected)
    throw std::logic_error("rank of Lambda(Y,D) disagrees with 10 - D^2 - r + s");
  return {lambda, relations};
}

BoundaryDefiniteness boundary_definiteness(const LooijengaSurface& s) {
  BoundaryDefiniteness out;
  out.signature = signature_of(s.boundary_gram());
  out.gram_class = classify_definiteness(out.signature);
  const auto& a = s.self_intersections();
  out.criterion_applicable = std::none_of(a.begin(), a.end(), [](long x) { return x == -1; });
  out.criterion_definite = std::all_of(a.begin(), a.end(), [](long x) { return x <= -2; }) &&
                           std::any_of(a.begin(), a.end(), [](long x) { return x <= -3; });
  out.agrees = out.criterion_applicable &&
               (out.criterion_definite == (out.gram_class == Definiteness::negative_definite));
  return out;
}

}  // namespace cusp
