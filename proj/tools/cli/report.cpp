#include "cli/report.hpp"

#include <sstream>

#include "orbicoh/builtins.hpp"
#include "orbicoh/charfun.hpp"
#include "orbicoh/error.hpp"

namespace orbicoh::cli {

using nlohmann::json;

std::string group_text(const FinAbGroup& g) { return g.to_string(); }

json group_json(const FinAbGroup& g) {
  json factors = json::array();
  for (const auto& t : g.torsion()) factors.push_back(t.get_str());
  return {{"rank", g.free_rank()}, {"factors", factors}};
}

FinAbGroup group_from_json(const json& j) {
  std::vector<Integer> orders;
  for (const auto& t : j.at("factors")) orders.push_back(parse_integer(t.get<std::string>()));
  return FinAbGroup::from_cyclic_orders(j.at("rank").get<std::size_t>(), orders);
}

namespace {

struct Instance {
  FacePoset poset;
  CharacteristicFunction v;
  AssumptionFlags flags;
};

class Labels {
 public:
  Labels(const FacePoset& p, std::vector<std::string> names) : p_(p), names_(std::move(names)) {
    if (names_.empty())
      for (int i = 1; i <= p.facet_count(); ++i) names_.push_back(std::to_string(i));
  }

  const std::string& facet(int i) const { return names_.at(static_cast<std::size_t>(i)); }

  std::string face(FaceId id) const {
    const Face& f = p_.face(id);
    if (f.facets.empty()) return "Q";
    std::string out = "Q_{";
    for (std::size_t k = 0; k < f.facets.size(); ++k) out += (k ? "," : "") + facet(f.facets[k]);
    out += "}";
    if (p_.faces_with(f.facets).size() > 1) out += "#" + std::to_string(f.component + 1);
    return out;
  }

  json facet_list(FaceId id) const {
    json out = json::array();
    for (int i : p_.face(id).facets) out.push_back(facet(i));
    return out;
  }

 private:
  const FacePoset& p_;
  std::vector<std::string> names_;
};

std::string index_text(const Index& i) { return i.to_string(); }
json index_json(const Index& i) { return i.is_finite() ? json(i.value().get_str()) : json("infinite"); }

std::string vector_text(const IntVector& v) {
  std::string out = "(";
  for (std::size_t k = 0; k < v.size(); ++k) out += (k ? ", " : "") + v[k].get_str();
  return out + ")";
}

std::string pad(const std::string& s, std::size_t width) {
  // Byte-width padding; labels are ASCII.
  return s.size() >= width ? s + " " : s + std::string(width - s.size(), ' ');
}

Instance build_instance(const InputDocument& doc) {
  auto checked_facets = [&](const FacetSet& fs, const std::string& where, int m) {
    for (int i : fs)
      if (m >= 0 && i >= m) throw SchemaError(where, "facet index " + std::to_string(i) + " out of range");
  };
  switch (doc.kind) {
    case InputKind::Poset: {
      for (std::size_t k = 0; k < doc.faces.size(); ++k)
        checked_facets(doc.faces[k].facets, "/faces/" + std::to_string(k), doc.m);
      auto p = FacePoset::from_faces(doc.n, doc.m, doc.faces);
      auto flags = doc.assumptions.apply(AssumptionFlags::defaults_for(p));
      return {std::move(p), CharacteristicFunction(doc.n, doc.vectors), flags};
    }
    case InputKind::Polytope: {
      auto p = FacePoset::from_vertex_facets(doc.n, doc.vertex_facet_sets);
      auto flags = doc.assumptions.apply(AssumptionFlags::defaults_for(p));
      return {std::move(p), CharacteristicFunction(doc.n, doc.vectors), flags};
    }
    case InputKind::Fan: {
      Fan fan(doc.n, doc.rays, doc.max_cones);
      auto pair = fan_to_pair(fan);
      auto flags = doc.assumptions.apply(pair.flags);
      return {std::move(pair.poset), std::move(pair.v), flags};
    }
  }
  throw SchemaError("", "unknown input kind");
}

class Builder {
 public:
  Builder(const InputDocument& doc, const PipelineOptions& options) : doc_(doc), options_(options) {
    report_.json["input"] = to_json(doc);
  }

  Report run() {
    std::optional<Fan> fan;
    if (doc_.kind == InputKind::Fan) {
      try {
        fan.emplace(doc_.n, doc_.rays, doc_.max_cones);
      } catch (const Error& e) {
        return fail("fan", e.what());
      }
      if (options_.fan_checks && !fan_section(*fan)) return std::move(report_);
    }

    std::optional<Instance> inst;
    try {
      inst.emplace(build_instance(doc_));
    } catch (const Error& e) {
      return fail("poset", e.what());
    }
    if (!doc_.facet_names.empty() &&
        doc_.facet_names.size() != static_cast<std::size_t>(inst->poset.facet_count()))
      throw SchemaError("/facet_names", "expected " + std::to_string(inst->poset.facet_count()) + " names");
    Labels labels(inst->poset, doc_.facet_names);

    poset_section(*inst);
    if (!validation_section(*inst, labels)) return std::move(report_);
    invariants_section(*inst, labels);
    cohomology_section(*inst);
    verdict_section(*inst, labels);
    if (fan && options_.fan_checks) cross_check_section(*inst);
    if (options_.fibration_fiber) fiber_section(*options_.fibration_fiber);
    report_.text = text_.str();
    return std::move(report_);
  }

 private:
  Report fail(const std::string& section, const std::string& message) {
    report_.status = 1;
    report_.json["validation"] = {{"ok", false}, {"error", message}, {"stage", section}};
    text_ << "Invalid input (" << section << "): " << message << "\n";
    report_.text = text_.str();
    return std::move(report_);
  }

  bool fan_section(const Fan& fan) {
    auto check = completeness_check(fan, options_.trials, options_.seed);
    json walls = json::array();
    for (const auto& w : check.walls.bad_walls()) walls.push_back(w);
    json section{{"rays", fan.rays().size()},
                 {"max_cones", fan.max_cones().size()},
                 {"walls", check.walls.counts.size()},
                 {"bad_walls", walls},
                 {"trials", check.trials},
                 {"resampled", check.resampled},
                 {"seed", options_.seed},
                 {"complete", check.passed()}};
    text_ << "Fan: " << fan.rays().size() << " rays, " << fan.max_cones().size() << " maximal cones\n";
    if (check.walls.ok())
      text_ << "  walls: " << check.walls.counts.size() << ", each shared by two cones\n";
    else
      text_ << "  walls: " << walls.size() << " of " << check.walls.counts.size()
            << " not shared by exactly two cones\n";
    if (check.counterexample) {
      section["counterexample"] = vector_text(*check.counterexample);
      text_ << "  sampling: direction " << vector_text(*check.counterexample) << " lies in "
            << check.containing_cones << " cones\n";
    } else {
      text_ << "  sampling: " << check.trials << " directions (seed " << options_.seed
            << "), each in exactly one cone\n";
    }
    report_.json["fan"] = section;
    if (!check.passed()) {
      report_.status = 1;
      report_.json["validation"] = {{"ok", false}, {"error", "fan is not complete"}, {"stage", "fan"}};
      text_ << "Invalid input (fan): fan is not complete\n";
      report_.text = text_.str();
      return false;
    }
    return true;
  }

  void poset_section(const Instance& inst) {
    const auto& p = inst.poset;
    const auto cls = classify(p);
    report_.json["poset"] = {{"n", p.dimension()},           {"m", p.facet_count()},
                             {"faces", p.size()},            {"vertices", p.vertex_count()},
                             {"class", to_string(cls)},      {"polytopal", p.polytopal()}};
    text_ << "Input: " << to_string(doc_.kind) << ", n = " << p.dimension() << ", m = " << p.facet_count()
          << " facets\n";
    text_ << "Poset: " << p.size() << " faces, " << p.vertex_count() << " vertices, class "
          << to_string(cls) << "\n";
  }

  bool validation_section(const Instance& inst, const Labels& labels) {
    auto result = validate(inst.poset, inst.v);
    json violations = json::array();
    for (const auto& viol : result.violations) {
      json entry{{"kind", to_string(viol.kind)}, {"message", viol.message}};
      if (viol.facet) entry["facet"] = labels.facet(*viol.facet);
      if (viol.face) entry["face"] = labels.face(*viol.face);
      violations.push_back(entry);
    }
    report_.json["validation"] = {{"ok", result.ok()}, {"violations", violations}};
    if (result.ok()) {
      text_ << "Characteristic function: valid\n";
      for (int i = 0; i < inst.poset.facet_count(); ++i)
        text_ << "  v_" << labels.facet(i) << " = " << vector_text(inst.v.vector(i)) << "\n";
      return true;
    }
    report_.status = 1;
    text_ << "Characteristic function: INVALID\n";
    for (const auto& viol : result.violations) {
      text_ << "  " << to_string(viol.kind);
      if (viol.facet) text_ << " at facet " << labels.facet(*viol.facet);
      if (viol.face) text_ << " at " << labels.face(*viol.face);
      text_ << ": " << viol.message << "\n";
    }
    report_.text = text_.str();
    return false;
  }

  void invariants_section(const Instance& inst, const Labels& labels) {
    const auto& p = inst.poset;
    mu_ = mu_table(p, inst.v);
    auto nhat = nhat_index(inst.v);
    report_.json["nhat_index"] = index_json(nhat);
    text_ << "|N/N^| = " << index_text(nhat) << "\n";

    json mu = json::array();
    text_ << "mu:\n";
    for (const auto& f : p.faces()) {
      mu.push_back({{"face", labels.face(f.id)},
                    {"facets", labels.facet_list(f.id)},
                    {"component", f.component},
                    {"dim", f.dim},
                    {"mu", index_json(mu_[f.id])}});
      text_ << "  " << pad(labels.face(f.id), 16) << index_text(mu_[f.id]) << "\n";
    }
    report_.json["mu"] = mu;

    json dets = json::array();
    text_ << "Vertex determinants:\n";
    for (const auto& [q, det] : vertex_dets(p, inst.v)) {
      dets.push_back({{"face", labels.face(q)}, {"facets", labels.facet_list(q)}, {"det", det.get_str()}});
      text_ << "  " << pad(labels.face(q), 16) << det.get_str() << "\n";
    }
    report_.json["vertex_dets"] = dets;
  }

  void cohomology_section(const Instance& inst) {
    const int n = inst.poset.dimension();
    json section;
    text_ << "Cohomology:\n";
    try {
      if (n < 2) throw Error(ErrorCode::DimensionTooSmall, "formulas need n >= 2");
      bool full = (n == 2 || n == 3) && inst.poset.vertex_count() > 0;
      CohomologyReport r = full ? full_report_low_dim(inst.poset, inst.v, inst.flags)
                                : boundary_degrees(inst.poset, inst.v, inst.flags);
      json degrees = json::object();
      for (const auto& [k, g] : r.degrees) {
        if (std::holds_alternative<ZeroOrTorsion>(g)) {
          degrees[std::to_string(k)] = "zero-or-torsion";
          text_ << "  H^" << k << " = 0 or a finite group\n";
        } else {
          degrees[std::to_string(k)] = group_json(std::get<FinAbGroup>(g));
          text_ << "  H^" << k << " = " << group_text(std::get<FinAbGroup>(g)) << "\n";
        }
      }
      section = {{"status", full ? "complete" : "boundary"}, {"degrees", degrees}};
    } catch (const Error& e) {
      section = {{"status", "skipped"}, {"reason", e.what()}};
      text_ << "  not computed: " << e.what() << "\n";
    }
    report_.json["cohomology"] = section;
  }

  void verdict_section(const Instance& inst, const Labels& labels) {
    auto primes = options_.primes;
    primes.insert(primes.end(), doc_.primes.begin(), doc_.primes.end());
    json verdicts = json::array();
    text_ << "Torsion verdicts:\n";
    for (const auto& v : analyze(inst.poset, inst.v, inst.flags, primes)) {
      json entry{{"prime", v.prime.get_str()}, {"decision", to_string(v.decision)}, {"notes", v.notes}};
      text_ << "  p = " << v.prime.get_str() << ": " << to_string(v.decision);
      if (v.witness) {
        entry["witness"] = labels.face(*v.witness);
        text_ << " (witness " << labels.face(*v.witness) << ")";
      }
      if (v.proved_case) {
        entry["case"] = to_string(*v.proved_case);
        text_ << " (" << to_string(*v.proved_case) << " case)";
      }
      text_ << "\n";
      for (const auto& note : v.notes) text_ << "      " << note << "\n";
      verdicts.push_back(entry);
    }
    report_.json["verdicts"] = verdicts;
  }

  void cross_check_section(const Instance& inst) {
    auto [top, next] = ray_delta_cokernels(inst.poset.dimension(), inst.v.vectors());
    const auto n = static_cast<std::size_t>(inst.poset.dimension());
    auto nhat = cokernel(IntMatrix::from_columns(n, inst.v.vectors()));
    auto wedge = wedge_square_quotient(n, inst.v.vectors());
    const bool agree = top == nhat && next == wedge;
    auto& section = report_.json["fan"];
    section["delta_cokernels"] = {{"top", group_json(top)}, {"next_torsion", group_json(next)}};
    section["lattice_route"] = {{"nhat_quotient", group_json(nhat)}, {"wedge_quotient", group_json(wedge)}};
    section["routes_agree"] = agree;
    const int d = inst.poset.dimension();
    text_ << "Boundary maps: coker = " << group_text(top) << " (H^" << 2 * d - 1
          << "), torsion coker = " << group_text(next) << " (Tor H^" << 2 * d - 2 << ")\n";
    text_ << "  lattice route: N/N^ = " << group_text(nhat) << ", wedge quotient = " << group_text(wedge)
          << (agree ? " (agree)" : " (DISAGREE)") << "\n";
    if (!agree) report_.status = 1;
  }

  void fiber_section(const Integer& a) {
    auto fiber = fibration_fiber(a);
    auto r = full_report_low_dim(fiber.poset, fiber.v, AssumptionFlags::defaults_for(fiber.poset));
    const auto& h3 = r.group(3);
    report_.json["fiber"] = {{"a", a.get_str()}, {"H3", group_json(h3)}};
    text_ << "Fiber over CP^1 (2-dimensional fan): H^3(F) = " << group_text(h3) << "\n";
  }

  const InputDocument& doc_;
  const PipelineOptions& options_;
  Report report_;
  std::ostringstream text_;
  MuTable mu_;
};

}  // namespace

Report run_pipeline(const InputDocument& doc, const PipelineOptions& options) {
  return Builder(doc, options).run();
}

}  // namespace orbicoh::cli
