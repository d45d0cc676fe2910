#include "cli/commands.hpp"

#include <cstdio>
#include <functional>
#include <sstream>

#include "hrnum/characters.hpp"
#include "hrnum/isomorphism.hpp"

namespace hrnum::cli {

namespace {

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

std::string fmt(Complex z) {
  if (z.imag() == 0.0) return fmt(z.real());
  return fmt(z.real()) + (z.imag() < 0 ? " - " : " + ") + fmt(std::abs(z.imag())) + "i";
}

std::string join(const std::vector<LatticePoint>& pts) {
  std::string out = "[";
  for (std::size_t i = 0; i < pts.size(); ++i) out += (i ? ", " : "") + pts[i].to_string();
  return out + "]";
}

template <class T>
std::string join_numbers(const std::vector<T>& xs) {
  std::string out = "[";
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? ", " : "") + std::to_string(xs[i]);
  return out + "]";
}

Json cone_json(const ConeSpec& spec) {
  Json j;
  if (!spec.name.empty()) j["name"] = spec.name;
  j["rank"] = spec.cone.rank();
  j["generators"] = to_json(spec.cone.generators());
  return j;
}

std::string cone_label(const ConeSpec& spec) {
  std::string s = "<";
  const auto& g = spec.cone.generators();
  for (std::size_t i = 0; i < g.size(); ++i) s += (i ? ", " : "") + g[i].to_string();
  s += ">";
  return spec.name.empty() ? s : spec.name + " " + s;
}

template <class T>
Json optional_json(const std::optional<T>& v) {
  return v ? Json(*v) : Json(nullptr);
}

Json profile_json(const AxisProfile& p) {
  Json j;
  j["axis"] = p.axis + 1;
  j["gcd"] = p.gcd;
  j["multiplicity"] = optional_json(p.multiplicity);
  j["conductor"] = optional_json(p.conductor);
  j["gaps"] = p.gaps;
  j["recovery_index"] = optional_json(p.recovery_index);
  return j;
}

std::string profile_text(const AxisProfile& p) {
  std::string s = "  axis " + std::to_string(p.axis + 1) + ": gcd " + std::to_string(p.gcd);
  if (p.multiplicity) s += ", multiplicity " + std::to_string(*p.multiplicity);
  if (p.conductor) s += ", conductor " + std::to_string(*p.conductor) + ", gaps " + join_numbers(p.gaps);
  return s + "\n";
}

Json character_json(const CharacterPoint& z) {
  Json a = Json::array();
  for (const auto& c : z.zeta()) a.push_back(to_json(c));
  return a;
}

std::string character_text(const CharacterPoint& z) {
  std::string s = "(";
  for (std::size_t i = 0; i < z.rank(); ++i) s += (i ? ", " : "") + fmt(z[i]);
  return s + ")";
}

Report make_report(const std::string& command, Json inputs) {
  Report r;
  r.doc["command"] = command;
  r.doc["inputs"] = std::move(inputs);
  r.doc["results"] = nullptr;
  r.doc["diagnostics"] = Json::object();
  r.doc["exit_code"] = 0;
  return r;
}

// Runs body; any escaping exception becomes a diagnostic and an exit code.
Report guarded(Report r, const std::function<void(Report&)>& body) {
  try {
    body(r);
  } catch (const std::exception& e) {
    r.exit_code = exit_code_for(e);
    r.doc["results"] = nullptr;
    r.doc["diagnostics"]["error"] = e.what();
    if (const auto* se = dynamic_cast<const SupportError*>(&e))
      r.doc["diagnostics"]["offending"] = to_json(se->offending());
    if (const auto* he = dynamic_cast<const HypothesisError*>(&e))
      r.doc["diagnostics"]["failing_axis"] = profile_json(he->failing_profile());
    r.text = std::string("error: ") + e.what() + "\n";
  }
  r.doc["exit_code"] = r.exit_code;
  return r;
}

}  // namespace

int exit_code_for(const std::exception& e) {
  if (dynamic_cast<const InputError*>(&e)) return kParse;
  if (const auto* err = dynamic_cast<const Error*>(&e)) {
    switch (err->kind()) {
      case ErrorKind::Hypothesis: return kHypothesis;
      case ErrorKind::Support: return kSupport;
      case ErrorKind::InvalidCone:
      case ErrorKind::RankMismatch: return kParse;
      default: return kData;
    }
  }
  if (dynamic_cast<const std::invalid_argument*>(&e)) return kParse;
  return kData;
}

Report run_verify(const VerifyOptions& opt) {
  return guarded(make_report("verify", {{"spec", opt.spec}, {"box", opt.box}}), [&](Report& r) {
    if (opt.box < 1) throw InputError("--bound: box size must be at least 1");
    const auto spec = read_cone_spec(opt.spec);
    const Cone& cone = spec.cone;
    const auto box = LatticePoint(std::vector<Coord>(cone.rank(), opt.box));

    const auto hr = is_higher_rank_numerical(cone);
    const auto minimal = minimal_generators(cone);
    const auto gaps = gaps_in_box(cone, box);
    const auto semi = is_seminormal_in_box(cone, box);

    Json res;
    res["cone"] = cone_json(spec);
    res["higher_rank"] = hr.higher_rank;
    res["axis_profiles"] = Json::array();
    for (const auto& p : hr.profiles) res["axis_profiles"].push_back(profile_json(p));
    res["minimal_generators"] = to_json(minimal);
    res["box"] = to_json(box);
    res["gaps_in_box"] = to_json(gaps);
    res["seminormal_in_box"] = semi.seminormal;
    res["seminormality_counterexample"] =
        semi.counterexample ? Json::array({to_json(semi.counterexample->first), to_json(semi.counterexample->second)})
                            : Json(nullptr);
    r.doc["results"] = std::move(res);
    r.doc["diagnostics"]["axis_search_bound"] = kDefaultAxisSearchBound;

    std::ostringstream t;
    t << "cone " << cone_label(spec) << " (rank " << cone.rank() << ")\n";
    t << "higher-rank numerical: " << (hr.higher_rank ? "yes" : "no") << "\n";
    for (const auto& p : hr.profiles) t << profile_text(p);
    t << "minimal generators: " << join(minimal) << "\n";
    t << "gaps in box " << box.to_string() << ": " << join(gaps) << "\n";
    t << "seminormal in box: " << (semi.seminormal ? "yes" : "no");
    if (semi.counterexample)
      t << " (3s = 2t with s = " << semi.counterexample->first.to_string()
        << ", t = " << semi.counterexample->second.to_string() << ", t - s not in S)";
    t << "\n";
    r.text = t.str();
  });
}

Report run_iso(const IsoOptions& opt) {
  return guarded(make_report("iso", {{"spec_a", opt.spec_a}, {"spec_b", opt.spec_b}}), [&](Report& r) {
    const auto a = read_cone_spec(opt.spec_a);
    const auto b = read_cone_spec(opt.spec_b);
    const auto w = decide_algebra_isomorphism(a.cone, b.cone);

    Json res;
    res["cone_a"] = cone_json(a);
    res["cone_b"] = cone_json(b);
    res["minimal_generators_a"] = to_json(minimal_generators(a.cone));
    res["minimal_generators_b"] = to_json(minimal_generators(b.cone));
    res["isomorphic"] = w.has_value();
    std::ostringstream t;
    if (w) {
      Json images = Json::array();
      for (auto i : w->permutation.images()) images.push_back(i + 1);
      res["permutation"] = images;
      res["interpretation"] = w->rotation_note;
      t << "isomorphic: yes\n";
      t << "witness: coordinate permutation carrying B onto A:";
      for (std::size_t i = 0; i < w->permutation.size(); ++i)
        t << (i ? ", x" : " x") << i + 1 << " -> x" << w->permutation.images()[i] + 1;
      t << "\n";
      t << "The semigroup algebras are isomorphic exactly when the cones agree up to a\n"
           "coordinate permutation; " << w->rotation_note << ".\n";
    } else {
      res["permutation"] = nullptr;
      res["interpretation"] = "no coordinate permutation carries one cone onto the other, "
                              "so the semigroup algebras are not isomorphic";
      r.exit_code = kNotIsomorphic;
      t << "isomorphic: no\n";
      t << "not isomorphic: no coordinate permutation carries the minimal generators "
        << join(minimal_generators(b.cone)) << " onto " << join(minimal_generators(a.cone)) << "\n";
    }
    r.doc["results"] = std::move(res);
    r.text = t.str();
  });
}

Report run_norm(const NormOptions& opt) {
  Json inputs{{"spec", opt.spec}, {"poly", opt.poly}, {"boxes", opt.boxes}, {"tol", opt.tol}};
  if (opt.grid > 0) inputs["grid"] = opt.grid;
  return guarded(make_report("norm", std::move(inputs)), [&](Report& r) {
    if (!(opt.tol > 0.0)) throw InputError("--tol: tolerance must be positive");
    if (opt.boxes.empty()) throw InputError("--boxes: at least one box size is required");
    const auto spec = read_cone_spec(opt.spec);
    const auto p = read_polynomial(opt.poly, spec.cone.rank());
    std::vector<LatticePoint> schedule;
    for (Coord b : opt.boxes) {
      if (b < 0) throw InputError("--boxes: box sizes must be nonnegative");
      schedule.emplace_back(std::vector<Coord>(spec.cone.rank(), b));
    }
    const auto rep = norm_gap_report(spec.cone, p, schedule, opt.tol, opt.grid);

    Json res;
    res["cone"] = cone_json(spec);
    res["rows"] = Json::array();
    std::ostringstream t;
    t << "cone " << cone_label(spec) << "\n";
    t << "torus sup-norm " << fmt(rep.torus.value) << " (+ at most " << fmt(rep.torus.error_bound)
      << ", grid " << rep.torus.grid_per_dim << " per dimension)\n";
    t << "box\tfock norm\ttorus norm\tgap\n";
    for (const auto& row : rep.rows) {
      res["rows"].push_back({{"bound", to_json(row.bound)},
                             {"fock_norm", row.fock_norm},
                             {"torus_norm", row.torus_norm},
                             {"error_bound", row.error_bound},
                             {"gap", row.gap}});
      t << row.bound.to_string() << "\t" << fmt(row.fock_norm) << "\t" << fmt(row.torus_norm) << "\t"
        << fmt(row.gap) << "\n";
    }
    res["torus"] = {{"value", rep.torus.value},
                    {"error_bound", rep.torus.error_bound},
                    {"grid_per_dim", rep.torus.grid_per_dim}};
    res["fock_norms_nondecreasing"] = rep.fock_norms_nondecreasing();
    res["within_torus_bound"] = rep.within_torus_bound();
    res["final_gap"] = rep.final_gap();
    r.doc["results"] = std::move(res);
    r.doc["diagnostics"]["tolerance"] = opt.tol;
    r.doc["diagnostics"]["power_iteration_budget"] = kMaxPowerIterations;
    Json warnings = Json::array();
    if (!rep.fock_norms_nondecreasing()) warnings.push_back("fock norms decrease along the schedule");
    if (!rep.within_torus_bound()) warnings.push_back("a fock norm exceeds the certified torus bound");
    r.doc["diagnostics"]["warnings"] = warnings;
    for (const auto& w : warnings) t << "warning: " << w.get<std::string>() << "\n";
    r.text = t.str();
  });
}

Report run_char(const CharOptions& opt) {
  Json inputs{{"mode", opt.mode}, {"spec", opt.spec}};
  if (opt.mode == "recover" || opt.mode == "extend") inputs["sample"] = opt.sample;
  if (opt.mode == "extend") {
    inputs["at"] = opt.at;
    inputs["bound"] = opt.bound;
  }
  if (opt.mode == "counterexample" && opt.axis) inputs["axis"] = *opt.axis;
  return guarded(make_report("char", std::move(inputs)), [&](Report& r) {
    const auto spec = read_cone_spec(opt.spec);
    const Cone& cone = spec.cone;
    Json res;
    std::ostringstream t;
    if (opt.mode == "recover") {
      const auto chi = read_sample(opt.sample, cone.rank());
      const auto zeta = recover_point(cone, chi);
      res["point"] = character_json(zeta);
      res["consulted"] = to_json(recovery_points(cone));
      r.doc["diagnostics"]["zero_threshold"] = kZeroThreshold;
      r.doc["diagnostics"]["disc_tolerance"] = kRecoveryDiscTolerance;
      t << "recovered point: " << character_text(zeta) << "\n";
    } else if (opt.mode == "extend") {
      const auto chi = read_sample(opt.sample, cone.rank());
      const auto at = parse_point(opt.at, cone.rank(), "--at");
      if (opt.bound < 1) throw InputError("--bound: must be at least 1");
      const auto ext = extend_semicharacter(cone, chi, at, opt.bound);
      res["t"] = to_json(at);
      res["value"] = to_json(ext.value);
      res["n_used"] = optional_json(ext.n_used);
      res["admissible"] = ext.admissible;
      res["max_inconsistency"] = ext.max_inconsistency;
      r.doc["diagnostics"]["consistency_tolerance"] = kConsistencyTolerance;
      r.doc["diagnostics"]["zero_threshold"] = kZeroThreshold;
      t << "extension at " << at.to_string() << ": " << fmt(ext.value);
      if (ext.n_used) t << " (ratio at n = " << *ext.n_used << ")";
      t << "\nadmissible n: " << join_numbers(ext.admissible)
        << "\nlargest pairwise inconsistency: " << fmt(ext.max_inconsistency) << "\n";
    } else if (opt.mode == "counterexample") {
      std::size_t axis = 0;
      if (opt.axis) {
        if (*opt.axis < 1 || *opt.axis > cone.rank())
          throw InputError("--axis: must lie between 1 and " + std::to_string(cone.rank()));
        axis = *opt.axis - 1;
      } else {
        const auto hr = is_higher_rank_numerical(cone);
        if (hr.higher_rank)
          throw Error(ErrorKind::Data, "every axis has gcd 1: no counterexample exists");
        for (const auto& p : hr.profiles)
          if (p.gcd != 1) {
            axis = p.axis;
            break;
          }
      }
      const auto [a, b] = gcd_counterexample(cone, axis);
      res["axis"] = axis + 1;
      res["gcd"] = axis_profile(cone, axis).gcd;
      res["points"] = Json::array({character_json(a), character_json(b)});
      t << "axis " << axis + 1 << ": two distinct points with equal evaluations on S\n";
      t << "  " << character_text(a) << "\n  " << character_text(b) << "\n";
    } else {
      throw InputError("unknown char mode '" + opt.mode + "' (expected recover, extend or counterexample)");
    }
    r.doc["results"] = std::move(res);
    r.text = t.str();
  });
}

}  // namespace hrnum::cli
