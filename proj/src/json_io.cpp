#include "cusp/json_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace cusp {
namespace {

const Json& field_of(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object()) throw SchemaError("'" + where + "' must be an object");
  auto it = j.find(key);
  if (it == j.end()) throw SchemaError("missing field '" + (where.empty() ? "" : where + ".") + key + "'");
  return *it;
}

void format_into(const Json& j, int depth, std::string& out) {
  const std::string pad(2 * (depth + 1), ' '), close(2 * depth, ' ');
  if (j.is_object() && !j.empty()) {
    out += "{\n";
    std::size_t i = 0;
    for (const auto& [key, value] : j.items()) {
      out += pad + Json(key).dump() + ": ";
      format_into(value, depth + 1, out);
      out += ++i < j.size() ? ",\n" : "\n";
    }
    out += close + "}";
  } else if (j.is_array() && !j.empty() &&
             !std::all_of(j.begin(), j.end(), [](const Json& x) { return x.is_primitive(); })) {
    out += "[\n";
    for (std::size_t i = 0; i < j.size(); ++i) {
      out += pad;
      format_into(j[i], depth + 1, out);
      out += i + 1 < j.size() ? ",\n" : "\n";
    }
    out += close + "]";
  } else if (j.is_array()) {
    out += "[";
    for (std::size_t i = 0; i < j.size(); ++i) out += (i ? ", " : "") + j[i].dump();
    out += "]";
  } else {
    out += j.dump();
  }
}

std::string join(const std::string& where, const char* key) { return where.empty() ? key : where + "." + key; }

}  // namespace

Json to_json(const Integer& x) {
  if (x.fits_slong_p()) return Json(x.get_si());
  return Json(x.get_str());
}

Json to_json(const Vector& v) {
  Json j = Json::array();
  for (const auto& x : v) j.push_back(to_json(x));
  return j;
}

Json to_json(const Matrix& m) {
  Json j = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) j.push_back(to_json(m.row(i)));
  return j;
}

Json to_json(const Signature& s) { return Json::array({s.positive, s.negative, s.null}); }

Json to_json(const GramLattice& l) {
  Json j;
  j["rank"] = l.rank();
  j["gram"] = to_json(l.gram());
  j["basis_labels"] = l.labels();
  return j;
}

Json to_json(const Sublattice& s) {
  Json j;
  j["rank"] = s.rank();
  j["basis"] = to_json(s.basis());
  j["induced_gram"] = to_json(s.induced_gram());
  return j;
}

Json to_json(const Isometry& g) {
  Json j;
  j["gram"] = to_json(g.ambient().gram());
  j["matrix"] = to_json(g.matrix());
  return j;
}

Json to_json(const LooijengaSurface& s) {
  Json j;
  j["picard"] = to_json(s.picard());
  Json b = Json::array();
  for (const auto& v : s.boundary()) b.push_back(to_json(v));
  j["boundary"] = b;
  j["self_ints"] = s.self_intersections();
  Json h = Json::array();
  for (const auto& rec : s.history()) h.push_back(Json::array({rec.component + 1, to_json(rec.exceptional)}));
  j["history"] = h;
  return j;
}

Json to_json(const PeriodPoint& p) {
  Json j;
  j["modulus"] = to_json(p.modulus());
  j["values"] = to_json(p.values());
  j["domain_basis"] = to_json(p.domain().basis());
  return j;
}

Json to_json(const FiberConfiguration& f) {
  Json j;
  j["type"] = f.kodaira_type;
  j["components"] = f.components();
  j["multiplicities"] = to_json(f.multiplicities);
  Json c = Json::array();
  for (const auto& v : f.classes) c.push_back(to_json(v));
  j["classes"] = c;
  return j;
}

Json to_json(const EllipticFibration& f) {
  Json j;
  j["m"] = to_json(f.multiplicity);
  j["F"] = to_json(f.fiber);
  j["has_section"] = f.has_section;
  j["zero_section"] = f.zero_section ? to_json(*f.zero_section) : Json(nullptr);
  Json fibers = Json::array();
  for (const auto& c : f.reducible_fibers) fibers.push_back(to_json(c));
  j["fibers"] = fibers;
  j["mw_rank"] = f.mw_rank ? Json(*f.mw_rank) : Json(nullptr);
  return j;
}

Json to_json(const IsometryType& t) {
  Json j;
  j["kind"] = std::string(to_string(t.kind));
  j["order"] = t.kind == IsometryKind::elliptic ? Json(t.order) : Json(nullptr);
  j["fixed_isotropic"] = t.fixed_isotropic ? to_json(*t.fixed_isotropic) : Json(nullptr);
  j["characteristic"] = to_json(Vector(t.characteristic.coeffs()));
  return j;
}

Json to_json(const WeylCertificate& c) {
  Json j;
  j["section_a"] = to_json(c.section_a);
  j["section_b"] = to_json(c.section_b);
  j["alpha"] = to_json(c.alpha);
  j["beta"] = to_json(c.beta);
  j["pairing"] = to_json(c.pairing);
  j["dihedral_order"] = c.order ? Json(*c.order) : Json("infinite");
  j["witness"] = to_json(c.witness);
  j["root_count"] = c.roots.size();
  j["words"] = c.words;
  j["distinct_chambers"] = c.distinct_chambers;
  return j;
}

Json to_json(const CriterionReport& r) {
  Json j;
  j["signature"] = to_json(r.signature);
  j["m"] = r.m;
  j["signature_ok"] = r.signature_ok;
  j["rank_ok"] = r.rank_ok;
  j["zmminus1_ok"] = r.zmminus1_ok;
  j["weyl_infinite_ok"] = r.weyl_infinite_ok;
  j["disjoint_parabolics_ok"] = r.disjoint_parabolics_ok;
  j["verdict"] = r.verdict;
  Json g = Json::array(), h = Json::array();
  for (const auto& m : r.g_restricted) g.push_back(to_json(m));
  for (const auto& m : r.h_restricted) h.push_back(to_json(m));
  j["g_generators"] = g;
  j["g_log_rank"] = r.g_log_rank;
  j["g_fixed_line"] = r.g_fixed_line ? to_json(*r.g_fixed_line) : Json(nullptr);
  j["h_generators"] = h;
  j["h_fixed_line"] = r.h_fixed_line ? to_json(*r.h_fixed_line) : Json(nullptr);
  j["weyl"] = r.weyl ? to_json(*r.weyl) : Json(nullptr);
  j["failures"] = r.failures;
  return j;
}

Integer integer_from_json(const Json& j, const std::string& field) {
  if (j.is_number_integer()) return j.is_number_unsigned() ? Integer(j.get<unsigned long>()) : Integer(j.get<long>());
  if (j.is_string()) {
    Integer x;
    if (x.set_str(j.get<std::string>(), 10) == 0) return x;
  }
  throw SchemaError("field '" + field + "' must be an integer");
}

Vector vector_from_json(const Json& j, const std::string& field) {
  if (!j.is_array()) throw SchemaError("field '" + field + "' must be an array of integers");
  Vector v;
  for (std::size_t i = 0; i < j.size(); ++i) v.push_back(integer_from_json(j[i], field + "[" + std::to_string(i) + "]"));
  return v;
}

Matrix matrix_from_json(const Json& j, const std::string& field) {
  if (!j.is_array()) throw SchemaError("field '" + field + "' must be an array of rows");
  std::vector<Vector> rows;
  for (std::size_t i = 0; i < j.size(); ++i) {
    rows.push_back(vector_from_json(j[i], field + "[" + std::to_string(i) + "]"));
    if (rows.back().size() != rows.front().size()) throw SchemaError("field '" + field + "' has rows of unequal length");
  }
  if (rows.empty()) return Matrix(0, 0);
  return Matrix::from_rows(rows, rows.front().size());
}

GramLattice lattice_from_json(const Json& j, const std::string& where) {
  Matrix g = matrix_from_json(field_of(j, "gram", where), join(where, "gram"));
  if (g.rows() != g.cols()) throw SchemaError("field '" + join(where, "gram") + "' must be square");
  if (j.contains("rank") && integer_from_json(j["rank"], join(where, "rank")) != Integer(g.rows()))
    throw SchemaError("field '" + join(where, "rank") + "' does not match the gram matrix");
  if (!g.is_symmetric()) throw SchemaError("field '" + join(where, "gram") + "' must be symmetric");
  std::vector<std::string> labels;
  if (j.contains("basis_labels") && !j["basis_labels"].empty()) {
    if (!j["basis_labels"].is_array()) throw SchemaError("field '" + join(where, "basis_labels") + "' must be an array");
    for (const auto& x : j["basis_labels"]) {
      if (!x.is_string()) throw SchemaError("field '" + join(where, "basis_labels") + "' must hold strings");
      labels.push_back(x.get<std::string>());
    }
  }
  return GramLattice(g, labels);
}

LooijengaSurface surface_from_json(const Json& j) {
  GramLattice pic = lattice_from_json(field_of(j, "picard", ""), "picard");
  const Json& b = field_of(j, "boundary", "");
  if (!b.is_array()) throw SchemaError("field 'boundary' must be an array");
  std::vector<Vector> boundary;
  for (std::size_t i = 0; i < b.size(); ++i) {
    boundary.push_back(vector_from_json(b[i], "boundary[" + std::to_string(i) + "]"));
    if (boundary.back().size() != pic.rank()) throw SchemaError("field 'boundary[" + std::to_string(i) + "]' has wrong length");
  }
  Vector si = vector_from_json(field_of(j, "self_ints", ""), "self_ints");
  std::vector<long> self_ints;
  for (const auto& x : si) self_ints.push_back(to_int64(x));
  std::vector<BlowupRecord> history;
  if (j.contains("history")) {
    const Json& h = j["history"];
    if (!h.is_array()) throw SchemaError("field 'history' must be an array");
    for (std::size_t i = 0; i < h.size(); ++i) {
      std::string where = "history[" + std::to_string(i) + "]";
      if (!h[i].is_array() || h[i].size() != 2) throw SchemaError("field '" + where + "' must be [index, class]");
      Integer idx = integer_from_json(h[i][0], where + "[0]");
      if (idx < 1 || idx > Integer(boundary.size())) throw SchemaError("field '" + where + "[0]' is out of range");
      Vector cls = vector_from_json(h[i][1], where + "[1]");
      if (cls.size() != pic.rank()) throw SchemaError("field '" + where + "[1]' has wrong length");
      history.push_back({static_cast<std::size_t>(to_int64(idx)) - 1, cls});
    }
  }
  return LooijengaSurface(pic, boundary, self_ints, history);
}

PeriodPoint period_from_json(const Json& j, const LooijengaSurface& s) {
  Integer m = integer_from_json(field_of(j, "modulus", ""), "modulus");
  Vector values = vector_from_json(field_of(j, "values", ""), "values");
  Matrix basis = matrix_from_json(field_of(j, "domain_basis", ""), "domain_basis");
  if (basis.rows() > 0 && basis.cols() != s.picard_rank())
    throw SchemaError("field 'domain_basis' does not match the Picard rank");
  if (basis.rows() == 0) basis = Matrix(0, s.picard_rank());
  Sublattice domain(s.picard(), basis);
  Sublattice lambda = boundary_complement(s).lattice;
  if (domain.rank() != lambda.rank())
    throw SchemaError("field 'domain_basis' does not span the boundary complement");
  for (std::size_t i = 0; i < basis.rows(); ++i)
    if (!lambda.contains(basis.row(i))) throw SchemaError("field 'domain_basis' does not span the boundary complement");
  return PeriodPoint(domain, m, values);
}

Isometry isometry_from_json(const Json& j, const GramLattice& ambient) {
  Matrix m = matrix_from_json(field_of(j, "matrix", ""), "matrix");
  if (m.rows() != ambient.rank() || m.cols() != ambient.rank())
    throw SchemaError("field 'matrix' does not match the lattice rank");
  return Isometry(ambient, m);
}

std::string format_json(const Json& j) {
  std::string out;
  format_into(j, 0, out);
  return out + "\n";
}

Json parse_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw SchemaError("'" + path + "' is not valid JSON: " + e.what());
  }
}

}  // namespace cusp
