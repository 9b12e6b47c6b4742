#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "orbicoh/cohomology.hpp"
#include "orbicoh/fan.hpp"
#include "orbicoh/poset.hpp"

namespace orbicoh::cli {

/// Malformed input; `where` is a JSON pointer into the document.
class SchemaError : public std::runtime_error {
 public:
  SchemaError(std::string where, const std::string& message)
      : std::runtime_error((where.empty() ? "<document>" : where) + ": " + message),
        where_(std::move(where)) {}
  const std::string& where() const noexcept { return where_; }

 private:
  std::string where_;
};

enum class InputKind { Poset, Polytope, Fan };

std::string to_string(InputKind kind);

/// Assumption flags as written in the document; unset entries fall back to
/// AssumptionFlags::defaults_for.
struct AssumptionOverrides {
  std::optional<bool> face_acyclic;
  std::optional<bool> facet_h1_trivial;
  std::map<Integer, bool> face_p_acyclic;

  AssumptionFlags apply(AssumptionFlags base) const;
  friend bool operator==(const AssumptionOverrides&, const AssumptionOverrides&) = default;
};

struct InputDocument {
  int n = 0;
  InputKind kind = InputKind::Polytope;
  int m = 0;                                // Poset kind only
  std::vector<FaceSpec> faces;              // Poset kind
  std::vector<FacetSet> vertex_facet_sets;  // Polytope kind
  std::vector<IntVector> rays;              // Fan kind
  std::vector<std::vector<int>> max_cones;  // Fan kind
  std::vector<IntVector> vectors;           // Poset and Polytope kinds
  std::vector<std::string> facet_names;
  AssumptionOverrides assumptions;
  std::vector<Integer> primes;

  friend bool operator==(const InputDocument&, const InputDocument&) = default;
};

/// Throws SchemaError.
InputDocument parse_document(const nlohmann::json& j);
/// Throws SchemaError, including for JSON syntax errors.
InputDocument parse_document_text(const std::string& text);

nlohmann::json to_json(const InputDocument& doc);

/// JSON encoding of an integer: a number when it fits in 64 bits, else a
/// decimal string.
nlohmann::json integer_json(const Integer& x);

}  // namespace orbicoh::cli
