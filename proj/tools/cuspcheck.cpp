#include <CLI11.hpp>

#include <iostream>
#include <sstream>

#include "cusp/pipeline.hpp"

using namespace cusp;

namespace {

constexpr int kStageFailure = 2;
constexpr int kInputError = 3;

// Wraps failures while reading user input so they map to the input exit code.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

template <typename F>
auto load(const std::string& what, F&& f) {
  try {
    return f();
  } catch (const SchemaError&) {
    throw;
  } catch (const std::exception& e) {
    throw InputError(what + ": " + e.what());
  }
}

std::vector<long> parse_longs(const std::string& text, const std::string& what) {
  std::vector<long> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stol(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw InputError(what + ": '" + item + "' is not an integer");
    }
  }
  if (out.empty()) throw InputError(what + " is empty");
  return out;
}

LooijengaSurface read_surface(const std::string& path) {
  return load("surface '" + path + "'", [&] { return surface_from_json(parse_json_file(path)); });
}

PeriodPoint read_period(const std::string& path, const LooijengaSurface& s) {
  return load("period '" + path + "'", [&] { return period_from_json(parse_json_file(path), s); });
}

Vector named_class(const std::string& name, const LooijengaSurface& s) {
  const std::size_t n = s.picard_rank();
  if (name == "D") return s.anticanonical();
  if (name == "beta") {
    Sublattice lambda = boundary_complement(s).lattice;
    ShortVectors roots = vectors_of_square(lambda.as_lattice(), -2);
    for (const auto& r : roots.representatives)
      if (r == primitive_normalized(r)) return lambda.to_ambient(r);
    throw InputError("class 'beta': the boundary complement has no roots");
  }
  if (name.size() > 1 && name[0] == 'D' && std::isdigit(static_cast<unsigned char>(name[1]))) {
    long i = parse_longs(name.substr(1), "class '" + name + "'").front();
    if (i < 1 || i > static_cast<long>(s.cycle_length())) throw InputError("class '" + name + "' is out of range");
    return s.boundary()[i - 1];
  }
  const auto& labels = s.picard().labels();
  for (std::size_t i = 0; i < labels.size(); ++i)
    if (labels[i] == name) return unit_vector(n, i);
  std::vector<long> coords = parse_longs(name, "class '" + name + "'");
  if (coords.size() != n) throw InputError("class '" + name + "' has wrong length");
  Vector v;
  for (long x : coords) v.push_back(x);
  return v;
}

void render_text(const Json& j, const std::string& prefix, std::ostream& out) {
  auto scalar_array = [](const Json& a) {
    return std::all_of(a.begin(), a.end(), [](const Json& x) { return x.is_primitive(); });
  };
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) render_text(value, prefix.empty() ? key : prefix + "." + key, out);
  } else if (j.is_array() && !scalar_array(j)) {
    for (std::size_t i = 0; i < j.size(); ++i) render_text(j[i], prefix + "[" + std::to_string(i) + "]", out);
  } else {
    out << prefix << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
  }
}

struct Output {
  std::string format = "json";
  void emit(const Json& j) const {
    if (format == "text")
      render_text(j, "", std::cout);
    else
      std::cout << format_json(j);
  }
};

Json invariants_json(const LooijengaSurface& s) {
  BoundaryDefiniteness bd = boundary_definiteness(s);
  BoundaryComplement bc = boundary_complement(s);
  Json j;
  j["r"] = s.cycle_length();
  j["self_ints"] = s.self_intersections();
  j["rho"] = s.picard_rank();
  j["D2"] = to_json(s.boundary_square());
  j["picard_signature"] = to_json(s.picard().signature());
  Json b;
  b["definiteness"] = std::string(to_string(bd.gram_class));
  b["signature"] = to_json(bd.signature);
  b["criterion_applicable"] = bd.criterion_applicable;
  b["criterion_definite"] = bd.criterion_definite;
  b["agrees"] = bd.criterion_applicable ? Json(bd.agrees) : Json(nullptr);
  j["boundary"] = b;
  j["lambda_rank"] = bc.lattice.rank();
  j["s"] = bc.relations;
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact lattice checks for Looijenga pairs and their automorphism groups"};
  app.require_subcommand(1);
  app.fallthrough();
  Output output;
  app.add_option("--output", output.format, "Output format")->check(CLI::IsMember({"json", "text"}));

  std::function<Json()> action;
  int failure_code = 0;

  // toric
  auto* toric = app.add_subcommand("toric", "Toric pair with a given boundary self-intersection cycle");
  std::string sequence;
  toric->add_option("--sequence", sequence, "Comma separated self-intersections")->required()->allow_extra_args(false);
  toric->callback([&] {
    action = [&] {
      std::vector<long> seq = parse_longs(sequence, "sequence");
      ToricSurface t = toric_from_sequence(seq);
      Json j = to_json(t.surface);
      Json rays = Json::array();
      for (const auto& r : t.fan.rays) rays.push_back(Json::array({to_json(r[0]), to_json(r[1])}));
      j["fan"] = rays;
      j["rho"] = t.surface.picard_rank();
      j["D2"] = to_json(t.surface.boundary_square());
      return j;
    };
  });

  std::string surface_path, period_path;

  // blowup
  auto* blowup = app.add_subcommand("blowup", "Blow up an interior point of a boundary component");
  long component = 0;
  blowup->add_option("--surface", surface_path)->required();
  blowup->add_option("--component", component, "1-based boundary index")->required();
  blowup->callback([&] {
    action = [&] {
      LooijengaSurface s = read_surface(surface_path);
      if (component < 1 || component > static_cast<long>(s.cycle_length())) throw InputError("component is out of range");
      return to_json(interior_blowup(s, static_cast<std::size_t>(component - 1)));
    };
  });

  // blowdown
  auto* blowdown = app.add_subcommand("blowdown", "Contract an interior (-1)-class");
  std::string curve;
  bool last = false;
  blowdown->add_option("--surface", surface_path)->required();
  auto* curve_opt = blowdown->add_option("--curve", curve, "Class name or comma separated coordinates");
  blowdown->add_flag("--last", last, "Use the last exceptional class")->excludes(curve_opt);
  blowdown->callback([&] {
    action = [&] {
      LooijengaSurface s = read_surface(surface_path);
      Vector c;
      if (last) {
        if (s.history().empty()) throw InputError("surface has no recorded blow-up");
        c = s.history().back().exceptional;
      } else if (!curve.empty()) {
        c = named_class(curve, s);
      } else {
        throw InputError("one of --curve or --last is required");
      }
      return to_json(blow_down(s, c));
    };
  });

  // invariants
  auto* invariants = app.add_subcommand("invariants", "Picard rank, D^2 and boundary definiteness");
  invariants->add_option("--surface", surface_path)->required();
  invariants->callback([&] { action = [&] { return invariants_json(read_surface(surface_path)); }; });

  // complement
  auto* complement = app.add_subcommand("complement", "Sublattice orthogonal to the boundary");
  complement->add_option("--surface", surface_path)->required();
  complement->callback([&] {
    action = [&] {
      BoundaryComplement bc = boundary_complement(read_surface(surface_path));
      Json j = to_json(bc.lattice);
      j["s"] = bc.relations;
      j["signature"] = to_json(bc.lattice.signature());
      j["definiteness"] = std::string(to_string(bc.lattice.definiteness()));
      return j;
    };
  });

  // roots
  auto* roots_cmd = app.add_subcommand("roots", "Square -2 classes of the boundary complement");
  roots_cmd->add_option("--surface", surface_path)->required();
  roots_cmd->callback([&] {
    action = [&] {
      Sublattice lambda = boundary_complement(read_surface(surface_path)).lattice;
      ShortVectors sv = vectors_of_square(lambda.as_lattice(), -2);
      Json j;
      Json rad = Json::array();
      for (std::size_t i = 0; i < sv.radical.rows(); ++i) rad.push_back(to_json(lambda.to_ambient(sv.radical.row(i))));
      j["radical"] = rad;
      j["cosets"] = sv.representatives.size();
      Json reps = Json::array();
      for (const auto& r : sv.representatives) reps.push_back({{"coordinates", to_json(r)}, {"class", to_json(lambda.to_ambient(r))}});
      j["representatives"] = reps;
      return j;
    };
  });

  // period solve | check
  auto* period = app.add_subcommand("period", "Torsion period points");
  period->require_subcommand(1);
  auto* solve = period->add_subcommand("solve", "Solve for a period point");
  std::vector<std::string> zeros, nonzeros;
  long modulus = 0;
  unsigned long search_bound = 64;
  solve->add_option("--surface", surface_path)->required();
  solve->add_option("--zero", zeros, "Class that must map to 0 (D, Di, beta, a basis label, or coordinates)");
  solve->add_option("--nonzero", nonzeros, "Class that must not map to 0");
  auto* mod_opt = solve->add_option("--modulus", modulus, "Fixed modulus");
  solve->add_option("--modulus-bound", search_bound, "Largest modulus tried when searching")->excludes(mod_opt);
  solve->callback([&] {
    action = [&]() -> Json {
      LooijengaSurface s = read_surface(surface_path);
      Sublattice lambda = boundary_complement(s).lattice;
      std::vector<PeriodConstraint> cons;
      for (const auto& z : zeros) cons.push_back({load("--zero", [&] { return named_class(z, s); }), ConstraintKind::equals_zero});
      for (const auto& z : nonzeros) cons.push_back({load("--nonzero", [&] { return named_class(z, s); }), ConstraintKind::nonzero});
      for (const auto& c : cons)
        if (!lambda.contains(c.target)) throw InputError("constraint class does not restrict trivially to the boundary");
      if (modulus != 0) {
        if (modulus < 1) throw InputError("modulus must be positive");
        auto phi = solve_period(lambda, cons, modulus);
        if (!phi) throw std::domain_error("no period point with modulus " + std::to_string(modulus) + " satisfies constraints");
        return to_json(*phi);
      }
      return to_json(solve_period_search(lambda, cons, search_bound));
    };
  });
  auto* check = period->add_subcommand("check", "Evaluate and test genericity");
  check->add_option("--surface", surface_path)->required();
  check->add_option("--period", period_path)->required();
  check->callback([&] {
    action = [&] {
      LooijengaSurface s = read_surface(surface_path);
      PeriodPoint phi = read_period(period_path, s);
      ShortVectors sv = vectors_of_square(phi.domain().as_lattice(), -2);
      Json j;
      j["modulus"] = to_json(phi.modulus());
      j["phi_D"] = phi.domain().contains(s.anticanonical()) ? to_json(phi.evaluate(s.anticanonical())) : Json(nullptr);
      j["residue_bound"] = to_json(section_residue_bound(phi));
      j["root_cosets"] = sv.representatives.size();
      j["generic"] = is_generic(phi, sv);
      return j;
    };
  });

  auto* pblow = period->add_subcommand("blowup", "Period point of the blow-up at a boundary point");
  long pcomponent = 0;
  long offset = 0;
  pblow->add_option("--surface", surface_path)->required();
  pblow->add_option("--period", period_path)->required();
  pblow->add_option("--component", pcomponent, "1-based boundary index, as for blowup")->required();
  pblow->add_option("--offset", offset, "Residue of the point relative to the first exceptional curve on the component");
  pblow->callback([&] {
    action = [&] {
      LooijengaSurface s = read_surface(surface_path);
      PeriodPoint phi = read_period(period_path, s);
      if (pcomponent < 1 || pcomponent > static_cast<long>(s.cycle_length())) throw InputError("component is out of range");
      const std::size_t c = static_cast<std::size_t>(pcomponent - 1);
      std::optional<Vector> ref;
      for (const auto& h : s.history())
        if (h.component == c) {
          ref = h.exceptional;
          break;
        }
      if (!ref) throw InputError("no exceptional curve is recorded on component " + std::to_string(pcomponent));
      LooijengaSurface blown = interior_blowup(s, c);
      return to_json(period_after_blowup(phi, s, blown, BoundaryPoint{c, *ref, offset}));
    };
  });

  // fibration
  auto* fibration = app.add_subcommand("fibration", "Elliptic fibration with fiber mD");
  fibration->add_option("--surface", surface_path)->required();
  fibration->add_option("--period", period_path)->required();
  fibration->callback([&] {
    action = [&] {
      LooijengaSurface s = read_surface(surface_path);
      PeriodPoint phi = read_period(period_path, s);
      return to_json(analyze_fibration(s, phi));
    };
  });

  // isometry classify
  auto* isometry = app.add_subcommand("isometry", "Isometries of hyperbolic lattices");
  isometry->require_subcommand(1);
  auto* classify = isometry->add_subcommand("classify", "Elliptic, parabolic or hyperbolic");
  std::string matrix_path, lattice_path;
  classify->add_option("--matrix", matrix_path, "JSON with 'matrix' and optionally 'gram'")->required();
  classify->add_option("--lattice", lattice_path, "JSON with 'gram' when the matrix file has none");
  classify->callback([&] {
    action = [&] {
      Json mj = parse_json_file(matrix_path);
      GramLattice l = load("lattice", [&] {
        if (!lattice_path.empty()) return lattice_from_json(parse_json_file(lattice_path), "");
        if (mj.contains("gram")) return lattice_from_json(mj, "");
        throw SchemaError("missing field 'gram' (pass --lattice)");
      });
      Isometry g = load("isometry", [&] { return isometry_from_json(mj, l); });
      return to_json(classify_isometry(g));
    };
  });

  // criterion check
  auto* criterion = app.add_subcommand("criterion", "Non-arithmeticity criterion");
  criterion->require_subcommand(1);
  auto* ccheck = criterion->add_subcommand("check", "Certify a blown-up pair");
  CertificateOptions copts;
  ccheck->add_option("--surface", surface_path)->required();
  ccheck->add_option("--period", period_path)->required();
  ccheck->add_option("--witness-count", copts.witness_count);
  ccheck->add_option("--section-bound", copts.section_bound);
  ccheck->callback([&] {
    action = [&] {
      LooijengaSurface s = read_surface(surface_path);
      PeriodPoint phi = read_period(period_path, s);
      Certification c = certify(s, phi, copts);
      if (!c.report.verdict) failure_code = kStageFailure;
      return to_json(c);
    };
  });

  // verify-paper
  auto* verify = app.add_subcommand("verify-paper", "Replay the construction and certify the criterion");
  std::string config_path;
  PipelineConfig cli_config;
  bool force_beta_zero = false;
  verify->add_option("--config", config_path, "JSON config");
  auto* mb = verify->add_option("--modulus-bound", cli_config.modulus_bound);
  auto* wc = verify->add_option("--witness-count", cli_config.witness_count);
  auto* sb = verify->add_option("--section-bound", cli_config.section_bound);
  verify->add_flag("--force-beta-zero", force_beta_zero, "Require phi(beta) = 0");
  verify->callback([&] {
    action = [&] {
      PipelineConfig config;
      if (!config_path.empty()) config = config_from_json(parse_json_file(config_path));
      if (mb->count()) config.modulus_bound = cli_config.modulus_bound;
      if (wc->count()) config.witness_count = cli_config.witness_count;
      if (sb->count()) config.section_bound = cli_config.section_bound;
      if (force_beta_zero) config.force_beta_zero = true;
      PipelineReport r = verify_paper(config);
      if (!r.ok()) failure_code = kStageFailure;
      return to_json(r);
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  try {
    Json result = action();
    output.emit(result);
    return failure_code;
  } catch (const SchemaError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kStageFailure;
  }
}
