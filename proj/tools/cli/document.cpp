#include "cli/document.hpp"

#include <set>

#include "orbicoh/error.hpp"

namespace orbicoh::cli {

std::string to_string(InputKind kind) {
  switch (kind) {
    case InputKind::Poset: return "poset";
    case InputKind::Polytope: return "polytope";
    case InputKind::Fan: return "fan";
  }
  return "poset";
}

AssumptionFlags AssumptionOverrides::apply(AssumptionFlags base) const {
  if (face_acyclic) base.face_acyclic = *face_acyclic;
  if (facet_h1_trivial) base.facet_h1_trivial = *facet_h1_trivial;
  for (const auto& [p, v] : face_p_acyclic) base.face_p_acyclic[p] = v;
  return base;
}

namespace {

using nlohmann::json;

std::string child(const std::string& at, const std::string& key) { return at + "/" + key; }
std::string child(const std::string& at, std::size_t index) { return at + "/" + std::to_string(index); }

const json& require(const json& obj, const std::string& at, const std::string& key) {
  auto it = obj.find(key);
  if (it == obj.end()) throw SchemaError(at, "missing required key \"" + key + "\"");
  return *it;
}

const json& as_array(const json& j, const std::string& at) {
  if (!j.is_array()) throw SchemaError(at, "expected an array");
  return j;
}

Integer read_integer(const json& j, const std::string& at) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) return Integer(std::to_string(j.get<std::uint64_t>()));
    return Integer(std::to_string(j.get<std::int64_t>()));
  }
  if (j.is_string()) {
    try {
      return parse_integer(j.get<std::string>());
    } catch (const Error&) {
      throw SchemaError(at, "\"" + j.get<std::string>() + "\" is not a decimal integer");
    }
  }
  throw SchemaError(at, "expected an integer or a decimal string");
}

int read_small(const json& j, const std::string& at, int min) {
  if (!j.is_number_integer()) throw SchemaError(at, "expected an integer");
  auto v = j.get<std::int64_t>();
  if (v < min || v > 1'000'000) throw SchemaError(at, "value " + std::to_string(v) + " out of range");
  return static_cast<int>(v);
}

std::vector<int> read_index_list(const json& j, const std::string& at) {
  std::vector<int> out;
  std::size_t k = 0;
  for (const auto& x : as_array(j, at)) out.push_back(read_small(x, child(at, k++), 0));
  return out;
}

IntVector read_vector(const json& j, const std::string& at) {
  IntVector out;
  std::size_t k = 0;
  for (const auto& x : as_array(j, at)) out.push_back(read_integer(x, child(at, k++)));
  return out;
}

std::vector<IntVector> read_vectors(const json& j, const std::string& at) {
  std::vector<IntVector> out;
  std::size_t k = 0;
  for (const auto& x : as_array(j, at)) out.push_back(read_vector(x, child(at, k++)));
  return out;
}

bool read_bool(const json& j, const std::string& at) {
  if (!j.is_boolean()) throw SchemaError(at, "expected true or false");
  return j.get<bool>();
}

AssumptionOverrides read_assumptions(const json& j, const std::string& at) {
  if (!j.is_object()) throw SchemaError(at, "expected an object");
  AssumptionOverrides out;
  for (const auto& [key, value] : j.items()) {
    const std::string here = child(at, key);
    if (key == "face_acyclic") {
      out.face_acyclic = read_bool(value, here);
    } else if (key == "facet_h1_trivial") {
      out.facet_h1_trivial = read_bool(value, here);
    } else if (key == "face_p_acyclic") {
      if (!value.is_object()) throw SchemaError(here, "expected an object keyed by prime");
      for (const auto& [p, flag] : value.items()) {
        Integer prime = read_integer(json(p), child(here, p));
        if (!is_prime(prime)) throw SchemaError(child(here, p), p + " is not prime");
        out.face_p_acyclic[prime] = read_bool(flag, child(here, p));
      }
    } else {
      throw SchemaError(here, "unknown key");
    }
  }
  return out;
}

}  // namespace

InputDocument parse_document(const json& j) {
  if (!j.is_object()) throw SchemaError("", "document must be a JSON object");
  static const std::set<std::string> known{"n",       "m",           "faces",       "vertex_facet_sets",
                                           "rays",    "max_cones",   "vectors",     "facet_names",
                                           "assumptions", "primes"};
  for (const auto& [key, value] : j.items())
    if (!known.count(key)) throw SchemaError("/" + key, "unknown key");

  InputDocument doc;
  doc.n = read_small(require(j, "", "n"), "/n", 1);

  const bool has_faces = j.contains("faces");
  const bool has_vertices = j.contains("vertex_facet_sets");
  const bool has_fan = j.contains("rays") || j.contains("max_cones");
  if (has_faces + has_vertices + has_fan != 1)
    throw SchemaError("", "give exactly one of \"faces\", \"vertex_facet_sets\" or \"rays\"/\"max_cones\"");

  if (has_faces) {
    doc.kind = InputKind::Poset;
    doc.m = read_small(require(j, "", "m"), "/m", 0);
    const auto& faces = as_array(j.at("faces"), "/faces");
    for (std::size_t k = 0; k < faces.size(); ++k) {
      const std::string at = child("/faces", k);
      if (!faces[k].is_object()) throw SchemaError(at, "expected an object");
      for (const auto& [key, value] : faces[k].items())
        if (key != "facets" && key != "covers") throw SchemaError(child(at, key), "unknown key");
      FaceSpec spec;
      spec.facets = read_index_list(require(faces[k], at, "facets"), child(at, "facets"));
      if (faces[k].contains("covers"))
        for (int c : read_index_list(faces[k].at("covers"), child(at, "covers")))
          spec.covers.push_back(static_cast<std::size_t>(c));
      doc.faces.push_back(std::move(spec));
    }
  } else if (has_vertices) {
    doc.kind = InputKind::Polytope;
    if (j.contains("m")) throw SchemaError("/m", "\"m\" is only used with \"faces\"");
    const auto& verts = as_array(j.at("vertex_facet_sets"), "/vertex_facet_sets");
    for (std::size_t k = 0; k < verts.size(); ++k)
      doc.vertex_facet_sets.push_back(read_index_list(verts[k], child("/vertex_facet_sets", k)));
  } else {
    doc.kind = InputKind::Fan;
    if (j.contains("m")) throw SchemaError("/m", "\"m\" is only used with \"faces\"");
    if (j.contains("vectors")) throw SchemaError("/vectors", "a fan takes its vectors from \"rays\"");
    doc.rays = read_vectors(require(j, "", "rays"), "/rays");
    const auto& cones = as_array(require(j, "", "max_cones"), "/max_cones");
    for (std::size_t k = 0; k < cones.size(); ++k)
      doc.max_cones.push_back(read_index_list(cones[k], child("/max_cones", k)));
  }
  if (doc.kind != InputKind::Fan) doc.vectors = read_vectors(require(j, "", "vectors"), "/vectors");

  if (j.contains("facet_names")) {
    const auto& names = as_array(j.at("facet_names"), "/facet_names");
    for (std::size_t k = 0; k < names.size(); ++k) {
      if (!names[k].is_string()) throw SchemaError(child("/facet_names", k), "expected a string");
      doc.facet_names.push_back(names[k].get<std::string>());
    }
  }
  if (j.contains("assumptions")) doc.assumptions = read_assumptions(j.at("assumptions"), "/assumptions");
  if (j.contains("primes")) {
    const auto& primes = as_array(j.at("primes"), "/primes");
    for (std::size_t k = 0; k < primes.size(); ++k) {
      Integer p = read_integer(primes[k], child("/primes", k));
      if (!is_prime(p)) throw SchemaError(child("/primes", k), p.get_str() + " is not prime");
      doc.primes.push_back(p);
    }
  }
  return doc;
}

InputDocument parse_document_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw SchemaError("", std::string("invalid JSON: ") + e.what());
  }
  return parse_document(j);
}

json integer_json(const Integer& x) {
  if (x.fits_slong_p()) return x.get_si();
  return x.get_str();
}

namespace {

json vectors_json(const std::vector<IntVector>& vs) {
  json out = json::array();
  for (const auto& v : vs) {
    json row = json::array();
    for (const auto& x : v) row.push_back(integer_json(x));
    out.push_back(row);
  }
  return out;
}

}  // namespace

json to_json(const InputDocument& doc) {
  json j;
  j["n"] = doc.n;
  switch (doc.kind) {
    case InputKind::Poset: {
      j["m"] = doc.m;
      json faces = json::array();
      for (const auto& f : doc.faces) faces.push_back({{"facets", f.facets}, {"covers", f.covers}});
      j["faces"] = faces;
      break;
    }
    case InputKind::Polytope:
      j["vertex_facet_sets"] = doc.vertex_facet_sets;
      break;
    case InputKind::Fan:
      j["rays"] = vectors_json(doc.rays);
      j["max_cones"] = doc.max_cones;
      break;
  }
  if (doc.kind != InputKind::Fan) j["vectors"] = vectors_json(doc.vectors);
  if (!doc.facet_names.empty()) j["facet_names"] = doc.facet_names;
  const auto& a = doc.assumptions;
  if (a.face_acyclic || a.facet_h1_trivial || !a.face_p_acyclic.empty()) {
    json flags = json::object();
    if (a.face_acyclic) flags["face_acyclic"] = *a.face_acyclic;
    if (a.facet_h1_trivial) flags["facet_h1_trivial"] = *a.facet_h1_trivial;
    if (!a.face_p_acyclic.empty()) {
      json per = json::object();
      for (const auto& [p, v] : a.face_p_acyclic) per[p.get_str()] = v;
      flags["face_p_acyclic"] = per;
    }
    j["assumptions"] = flags;
  }
  if (!doc.primes.empty()) {
    json primes = json::array();
    for (const auto& p : doc.primes) primes.push_back(integer_json(p));
    j["primes"] = primes;
  }
  return j;
}

}  // namespace orbicoh::cli
