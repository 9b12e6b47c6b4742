#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "cli/document.hpp"

namespace orbicoh::cli {

struct PipelineOptions {
  std::vector<Integer> primes;  // added to the document's own list
  std::uint64_t seed = 0;
  std::size_t trials = kDefaultTrials;
  /// Run the fan checks (completeness, delta cokernels, cross-check).
  bool fan_checks = false;
  /// Parameter a of the fibration example; adds the fiber section.
  std::optional<Integer> fibration_fiber;
};

struct Report {
  nlohmann::json json;
  std::string text;
  /// 0 when everything validated, 1 otherwise.
  int status = 0;
};

/// Runs the full analysis. Throws SchemaError for documents that are
/// well-formed JSON but name facets or faces inconsistently with their
/// declared sizes; semantic failures end up in the report with status 1.
Report run_pipeline(const InputDocument& doc, const PipelineOptions& options);

/// "Z^2 ⊕ Z/3" style.
std::string group_text(const FinAbGroup& g);
/// {"rank": r, "factors": ["2", "6"]}.
nlohmann::json group_json(const FinAbGroup& g);
FinAbGroup group_from_json(const nlohmann::json& j);

}  // namespace orbicoh::cli
