#include "cusp/pipeline.hpp"

#include <algorithm>

namespace cusp {
namespace {

const std::vector<long> kSeed{-1, -2, -1, -1, -1, -1, -2};

Json self_ints_json(const LooijengaSurface& s) { return Json(s.self_intersections()); }

Json fiber_types(const EllipticFibration& f) {
  Json j = Json::array();
  for (const auto& c : f.reducible_fibers) j.push_back(c.kodaira_type);
  return j;
}

bool matches(const Json& computed, const Json& expected) {
  if (expected.is_null()) return true;
  for (const auto& [key, value] : expected.items())
    if (!computed.contains(key) || computed[key] != value) return false;
  return true;
}

unsigned long json_count(const Json& j, const char* key) {
  const Json& v = j[key];
  if (!v.is_number_integer() || v.get<long>() < 0) throw SchemaError(std::string("field '") + key + "' must be a non-negative integer");
  return v.get<unsigned long>();
}

}  // namespace

PipelineConfig config_from_json(const Json& j, PipelineConfig c) {
  if (!j.is_object()) throw SchemaError("config must be an object");
  for (const auto& [key, value] : j.items()) {
    if (key == "modulus_bound") {
      c.modulus_bound = json_count(j, "modulus_bound");
    } else if (key == "witness_count") {
      c.witness_count = json_count(j, "witness_count");
    } else if (key == "section_bound") {
      c.section_bound = json_count(j, "section_bound");
    } else if (key == "force_beta_zero") {
      if (!value.is_boolean()) throw SchemaError("field 'force_beta_zero' must be a boolean");
      c.force_beta_zero = value.get<bool>();
    } else if (key != "seeds") {
      throw SchemaError("unknown config field '" + key + "'");
    }
  }
  return c;
}

Json to_json(const PipelineConfig& c) {
  Json j;
  j["modulus_bound"] = c.modulus_bound;
  j["witness_count"] = c.witness_count;
  j["section_bound"] = c.section_bound;
  j["force_beta_zero"] = c.force_beta_zero;
  j["seeds"] = Json::array();
  return j;
}

Certification certify(const LooijengaSurface& blown, const PeriodPoint& blown_period, const CertificateOptions& opts) {
  PointedBlowup pb = pointed_blowup(blown, blown_period);
  Sublattice m = boundary_complement(blown).lattice;
  const GramLattice& pic = blown.picard();

  TranslationGroup gg = mw_translation_group(pb.base.surface, pb.fibration, &pb.base_period);
  std::vector<Isometry> g;
  for (const auto& e : gg.directions) g.push_back(eichler_transvection(pic, pb.lift(gg.fiber), pb.lift(e)));

  std::optional<WeylCertificate> weyl;
  std::optional<std::string> weyl_error;
  try {
    weyl = weyl_infiniteness_certificate(pb, opts);
  } catch (const std::domain_error& e) {
    weyl_error = e.what();
  }

  std::optional<SectionCandidate> q;
  for (auto& c : boundary_sections(pb, opts.section_bound))
    if (c.residue != 0) {
      q = std::move(c);
      break;
    }

  std::optional<BlowDown> second;
  std::optional<PeriodPoint> second_period;
  std::optional<EllipticFibration> second_fib;
  std::optional<TranslationGroup> hg;
  std::vector<Isometry> h;
  std::optional<std::string> second_error;
  if (q) {
    try {
      second = blow_down_with_embedding(blown, pb.lift(q->section));
      second_period = period_after_blowdown(blown_period, *second);
      second_fib = analyze_fibration(second->surface, *second_period);
      hg = mw_translation_group(second->surface, *second_fib, &*second_period);
      for (const auto& e : hg->directions)
        h.push_back(eichler_transvection(pic, hg->fiber * second->embedding, e * second->embedding));
    } catch (const std::domain_error& e) {
      second_error = e.what();
    } catch (const std::invalid_argument& e) {
      second_error = e.what();
    }
  } else {
    second_error = "no section meets the boundary component of p away from p";
  }

  CriterionReport report = totaro_check(m, g, h, weyl, opts.witness_count);
  if (weyl_error) report.failures.push_back(*weyl_error);
  if (second_error) report.failures.push_back("second fibration: " + *second_error);
  return Certification{std::move(pb),     std::move(m),          std::move(gg),         std::move(g),
                       std::move(q),      std::move(second),     std::move(second_period), std::move(second_fib),
                       std::move(hg),     std::move(h),          std::move(weyl),       std::move(weyl_error),
                       std::move(report)};
}

Json to_json(const Certification& c) {
  Json j;
  Json p;
  p["component"] = c.pointed.component + 1;
  p["exceptional"] = to_json(c.pointed.exceptional);
  p["base_fibration"] = to_json(c.pointed.fibration);
  j["p"] = p;
  Json g;
  g["fiber"] = to_json(c.pointed.lift(c.g_group.fiber));
  Json dirs = Json::array(), gens = Json::array();
  for (const auto& e : c.g_group.directions) dirs.push_back(to_json(c.pointed.lift(e)));
  for (const auto& x : c.g) gens.push_back(to_json(x.matrix()));
  g["directions"] = dirs;
  g["generators"] = gens;
  j["G"] = g;
  Json q;
  if (c.q) {
    q["section"] = to_json(c.pointed.lift(c.q->section));
    q["residue"] = to_json(c.q->residue);
  }
  j["q"] = c.q ? q : Json(nullptr);
  if (c.second && c.second_fibration) {
    Json s;
    s["self_ints"] = self_ints_json(c.second->surface);
    s["rho"] = c.second->surface.picard_rank();
    s["fibration"] = to_json(*c.second_fibration);
    j["second"] = s;
  } else {
    j["second"] = nullptr;
  }
  Json h;
  Json hdirs = Json::array(), hgens = Json::array();
  if (c.h_group && c.second) {
    h["fiber"] = to_json(c.h_group->fiber * c.second->embedding);
    for (const auto& e : c.h_group->directions) hdirs.push_back(to_json(e * c.second->embedding));
  }
  for (const auto& x : c.h) hgens.push_back(to_json(x.matrix()));
  h["directions"] = hdirs;
  h["generators"] = hgens;
  j["H"] = h;
  j["criterion"] = to_json(c.report);
  return j;
}

PipelineReport verify_paper(const PipelineConfig& config) {
  PipelineReport rep;
  rep.config = config;
  rep.assumptions = {
      "period points are torsion and every torsion period point is realized by some pair",
      "Mordell-Weil translations are modelled by Eichler transvections, a finite-index model of their image",
      "automorphisms fixing p are modelled by transvections whose direction lies in the kernel of the period point",
      "square -2 classes of M with period value 0 are taken to be effective; the lattice certificate does not use this",
      "infinite index of S in O(M) is witnessed by finitely many distinct chambers",
      "the arithmetic comparison group is virtually torsion-free",
      "the non-arithmeticity criterion itself is taken as given",
  };

  std::string current;
  auto record = [&](Stage s, bool extra_ok) {
    s.pass = matches(s.computed, s.paper_value) && extra_ok;
    rep.stages.push_back(std::move(s));
    if (!rep.stages.back().pass) rep.failed_stage = rep.stages.back().name;
    return rep.stages.back().pass;
  };

  try {
    current = "toric_seed";
    ToricSurface seed = toric_from_sequence(kSeed);
    {
      Json c;
      c["sequence"] = kSeed;
      c["rho"] = seed.surface.picard_rank();
      c["D2"] = to_json(seed.surface.boundary_square());
      Json rays = Json::array();
      for (const auto& r : seed.fan.rays) rays.push_back(Json::array({to_json(r[0]), to_json(r[1])}));
      c["rays"] = rays;
      if (!record({current, "the toric seed has rho = 7 - 2 = 5 and D^2 = 5", c, {{"rho", 5}, {"D2", 5}}}, true))
        return rep;
    }

    current = "interior_blowups";
    LooijengaSurface y = seed.surface;
    Json blown_at = Json::array();
    for (std::size_t i = 0; i < kSeed.size(); ++i)
      if (kSeed[i] == -1) {
        y = interior_blowup(y, i);
        blown_at.push_back(i + 1);
      }
    {
      BoundaryDefiniteness bd = boundary_definiteness(y);
      Json c;
      c["components"] = blown_at;
      c["self_ints"] = self_ints_json(y);
      c["rho"] = y.picard_rank();
      c["D2"] = to_json(y.boundary_square());
      c["boundary_definiteness"] = std::string(to_string(bd.gram_class));
      c["radical_rank"] = bd.signature.null;
      Json expected{{"self_ints", std::vector<long>(7, -2)}, {"rho", 10}, {"D2", 0}};
      if (!record({current, "one interior blow-up on each (-1)-component gives a cycle of seven (-2)-curves with rho = 10",
                   c, expected},
                  bd.gram_class == Definiteness::negative_semidefinite_degenerate && bd.signature.null == 1))
        return rep;
    }

    current = "boundary_complement";
    BoundaryComplement bc = boundary_complement(y);
    const Sublattice& lambda = bc.lattice;
    ShortVectors roots = vectors_of_square(lambda.as_lattice(), -2);
    const Vector d = y.anticanonical();
    Vector beta;
    {
      for (const auto& r : roots.representatives)
        if (r == primitive_normalized(r)) {
          beta = lambda.to_ambient(r);
          break;
        }
      Json c;
      c["rank"] = lambda.rank();
      c["s"] = bc.relations;
      c["contains_D"] = lambda.contains(d);
      Json rad = Json::array();
      for (std::size_t i = 0; i < roots.radical.rows(); ++i) rad.push_back(to_json(lambda.to_ambient(roots.radical.row(i))));
      c["radical"] = rad;
      c["root_cosets"] = roots.representatives.size();
      c["beta"] = beta.empty() ? Json(nullptr) : to_json(beta);
      bool radical_is_d = roots.radical.rows() == 1 &&
                          primitive_normalized(lambda.to_ambient(roots.radical.row(0))) == primitive_normalized(d);
      if (!record({current, "Lambda(Y,D) has rank 10 - D^2 - r + s = 3 and roots {+-beta + kF}", c,
                   {{"rank", 3}, {"s", 0}, {"contains_D", true}, {"root_cosets", 2}}},
                  radical_is_d && !beta.empty()))
        return rep;
    }

    current = "period_point";
    std::vector<PeriodConstraint> cons{{d, ConstraintKind::equals_zero},
                                       {beta, config.force_beta_zero ? ConstraintKind::equals_zero : ConstraintKind::nonzero}};
    PeriodPoint phi = solve_period_search(lambda, cons, config.modulus_bound);
    {
      Json c;
      c["modulus"] = to_json(phi.modulus());
      c["values"] = to_json(phi.values());
      c["phi_D"] = to_json(phi.evaluate(d));
      c["phi_beta"] = to_json(phi.evaluate(beta));
      bool ok = satisfies(phi, cons);
      if (!record({current, "a torsion period point with phi(D) = 0 and phi(beta) != 0", c, {{"phi_D", 0}}}, ok)) return rep;
    }

    current = "genericity";
    EllipticFibration fib1 = analyze_fibration(y, phi);
    {
      Json c;
      c["generic"] = is_generic(phi, roots);
      Json extra = Json::array();
      for (std::size_t i = 1; i < fib1.reducible_fibers.size(); ++i) extra.push_back(fib1.reducible_fibers[i].kodaira_type);
      c["extra_fibers"] = extra;
      c["mw_rank"] = *fib1.mw_rank;
      if (!record({current, "phi is nonzero on every root, so there are no other reducible fibers", c,
                   {{"generic", true}, {"extra_fibers", Json::array()}}},
                  true))
        return rep;
    }

    current = "fibration_pi1";
    {
      Json c;
      c["m"] = to_json(fib1.multiplicity);
      c["has_section"] = fib1.has_section;
      c["fibers"] = fiber_types(fib1);
      c["mw_rank"] = *fib1.mw_rank;
      c["zero_section"] = fib1.zero_section ? to_json(*fib1.zero_section) : Json(nullptr);
      if (!record({current, "pi_1 has fiber D, a section, and rank MW = 10 - 2 - (7 - 1) = 2", c,
                   {{"m", 1}, {"has_section", true}, {"fibers", {"I7"}}, {"mw_rank", 2}}},
                  true))
        return rep;
    }

    current = "fibration_trivial_period";
    {
      EllipticFibration fibt = analyze_fibration(y, trivial_period_point(lambda));
      Json c;
      c["fibers"] = fiber_types(fibt);
      c["mw_rank"] = *fibt.mw_rank;
      if (!record({current, "with the trivial period point an I2 fiber appears and rank MW = 10 - 2 - 7 = 1", c,
                   {{"fibers", {"I7", "I2"}}, {"mw_rank", 1}}},
                  true))
        return rep;
    }

    current = "point_p";
    CertificateOptions opts{config.witness_count, config.section_bound};
    std::optional<LooijengaSurface> yt;
    std::optional<PeriodPoint> pt;
    {
      const Integer image = section_residue_bound(phi);
      Json c;
      for (std::size_t comp = 0; comp < y.cycle_length() && !yt; ++comp) {
        std::optional<Vector> ref;
        for (const auto& hrec : y.history())
          if (hrec.component == comp) {
            ref = hrec.exceptional;
            break;
          }
        if (!ref) continue;
        for (Integer t = 0; t < image && !yt; t += 1) {
          LooijengaSurface candidate = interior_blowup(y, comp);
          PeriodPoint candidate_period = period_after_blowup(phi, y, candidate, BoundaryPoint{comp, *ref, t});
          try {
            weyl_infiniteness_certificate(pointed_blowup(candidate, candidate_period), opts);
          } catch (const std::domain_error&) {
            continue;
          }
          yt = candidate;
          pt = candidate_period;
          c["component"] = comp + 1;
          c["reference_section"] = to_json(*ref);
          c["offset"] = to_json(t);
          c["residue_bound"] = to_json(image);
        }
      }
      if (!yt) c["component"] = nullptr;
      if (!record({current, "a boundary point through which infinitely many sections pass", c, nullptr}, yt.has_value()))
        return rep;
    }

    current = "blowup_at_p";
    Sublattice m = boundary_complement(*yt).lattice;
    {
      BoundaryDefiniteness bd = boundary_definiteness(*yt);
      const auto& si = yt->self_intersections();
      Json c;
      c["self_ints"] = self_ints_json(*yt);
      c["rho"] = yt->picard_rank();
      c["D2"] = to_json(yt->boundary_square());
      c["M_rank"] = m.rank();
      c["M_signature"] = to_json(m.signature());
      c["boundary_definiteness"] = std::string(to_string(bd.gram_class));
      c["criterion_agrees"] = bd.criterion_applicable && bd.agrees;
      bool shape = std::count(si.begin(), si.end(), -2) == 6 && std::count(si.begin(), si.end(), -3) == 1;
      if (!record({current, "blowing up p gives six (-2)-curves and one (-3)-curve, D^2 = -1, M of rank 4 and signature (1,3)",
                   c,
                   {{"rho", 11},
                    {"D2", -1},
                    {"M_rank", 4},
                    {"M_signature", {1, 3, 0}},
                    {"boundary_definiteness", "negative_definite"},
                    {"criterion_agrees", true}}},
                  shape))
        return rep;
    }

    current = "certification";
    Certification cert = certify(*yt, *pt, opts);
    const CriterionReport& cr = cert.report;

    current = "translations_G";
    {
      Json c;
      c["generators"] = cert.g.size();
      bool preserved = std::all_of(cert.g.begin(), cert.g.end(), [&](const Isometry& x) {
        return x.matrix().transpose() * yt->picard().gram() * x.matrix() == yt->picard().gram();
      });
      c["gram_preserved"] = preserved;
      c["parabolic_commuting_common_line"] = cr.zmminus1_ok;
      c["log_rank"] = cr.g_log_rank;
      c["fixed_line"] = cr.g_fixed_line ? to_json(m.to_ambient(*cr.g_fixed_line)) : Json(nullptr);
      c["F1"] = to_json(cert.pointed.lift(cert.g_group.fiber));
      if (!record({current, "G is a free abelian group of rank 2 of parabolic isometries fixing F_1", c,
                   {{"generators", 2}, {"gram_preserved", true}, {"parabolic_commuting_common_line", true}, {"log_rank", 2}}},
                  true))
        return rep;
    }

    current = "second_fibration";
    {
      Json c;
      bool ok = cert.second && cert.second_fibration;
      if (ok) {
        c["q_section"] = to_json(cert.pointed.lift(cert.q->section));
        c["self_ints"] = self_ints_json(cert.second->surface);
        c["rho"] = cert.second->surface.picard_rank();
        c["m"] = to_json(cert.second_fibration->multiplicity);
        c["has_section"] = cert.second_fibration->has_section;
        c["fibers"] = fiber_types(*cert.second_fibration);
        c["mw_rank"] = *cert.second_fibration->mw_rank;
        ok = cert.second_fibration->multiplicity >= 2 && *cert.second_fibration->mw_rank >= 1;
      }
      if (!record({current, "blowing down a section not through p gives D' of seven (-2)-curves with phi(D') of order m != 1", c,
                   {{"self_ints", std::vector<long>(7, -2)}, {"rho", 10}, {"has_section", false}}},
                  ok))
        return rep;
    }

    current = "translations_H";
    {
      Json c;
      c["generators"] = cert.h.size();
      c["fixed_line"] = cr.h_fixed_line ? to_json(m.to_ambient(*cr.h_fixed_line)) : Json(nullptr);
      c["F2"] = cert.h_group && cert.second ? to_json(cert.h_group->fiber * cert.second->embedding) : Json(nullptr);
      c["differs_from_G"] = cr.disjoint_parabolics_ok;
      if (!record({current, "H consists of parabolics fixing F_2 != F_1, so G and H meet trivially", c,
                   {{"differs_from_G", true}}},
                  !cert.h.empty()))
        return rep;
    }

    current = "weyl_certificate";
    {
      Json c = cert.weyl ? to_json(*cert.weyl) : Json{{"error", cert.weyl_error.value_or("")}};
      if (!record({current, "two roots of M pairing to at least 2 generate an infinite Weyl group", c,
                   {{"dihedral_order", "infinite"}}},
                  cr.weyl_infinite_ok))
        return rep;
    }

    current = "criterion";
    {
      Json c;
      c["signature"] = to_json(cr.signature);
      c["m"] = cr.m;
      c["verdict"] = cr.verdict;
      rep.criterion = cr;
      if (!record({current, "Aut(Y~,D~) is not commensurable with an arithmetic group", c, {{"m", 3}, {"verdict", true}}},
                  true))
        return rep;
    }
  } catch (const std::exception& e) {
    Stage s{current, "stage raised an error", Json{{"error", e.what()}}, nullptr, false};
    rep.stages.push_back(std::move(s));
    rep.failed_stage = current;
  }
  return rep;
}

Json to_json(const PipelineReport& r) {
  Json j;
  j["format_version"] = r.format_version;
  j["config"] = to_json(r.config);
  Json stages = Json::array();
  for (const auto& s : r.stages) {
    Json x;
    x["name"] = s.name;
    x["claim"] = s.claim;
    x["computed"] = s.computed;
    x["paper_value"] = s.paper_value;
    x["pass"] = s.pass;
    stages.push_back(x);
  }
  j["stages"] = stages;
  j["failed_stage"] = r.failed_stage ? Json(*r.failed_stage) : Json(nullptr);
  j["criterion"] = r.criterion ? to_json(*r.criterion) : Json(nullptr);
  j["assumptions"] = r.assumptions;
  j["verdict"] = r.ok();
  return j;
}

}  // namespace cusp
