#include "cli/run.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "cli/document.hpp"
#include "cli/report.hpp"
#include "orbicoh/builtins.hpp"
#include "orbicoh/error.hpp"

namespace orbicoh::cli {

namespace {

struct Flags {
  std::vector<std::string> primes;
  bool json = false;
  std::string seed;
  std::size_t trials = kDefaultTrials;
};

void add_common(CLI::App* cmd, Flags& flags) {
  cmd->add_option("--prime", flags.primes, "Extra prime to analyze (repeatable)");
  cmd->add_flag("--json", flags.json, "Print the machine-readable report");
  cmd->add_option("--seed", flags.seed, "Seed for completeness sampling (default $ORBICOH_SEED or 0)");
  cmd->add_option("--trials", flags.trials, "Number of completeness samples")->check(CLI::PositiveNumber);
}

std::uint64_t parse_seed(const std::string& text, const char* source) {
  try {
    std::size_t used = 0;
    auto value = std::stoull(text, &used);
    if (used != text.size()) throw std::invalid_argument("trailing characters");
    return value;
  } catch (const std::exception&) {
    throw SchemaError(source, "seed \"" + text + "\" is not a non-negative integer");
  }
}

PipelineOptions options_from(const Flags& flags) {
  PipelineOptions opts;
  for (const auto& p : flags.primes) {
    Integer prime;
    try {
      prime = parse_integer(p);
    } catch (const Error&) {
      throw SchemaError("--prime", "\"" + p + "\" is not an integer");
    }
    if (!is_prime(prime)) throw SchemaError("--prime", p + " is not prime");
    opts.primes.push_back(prime);
  }
  if (!flags.seed.empty()) {
    opts.seed = parse_seed(flags.seed, "--seed");
  } else if (const char* env = std::getenv("ORBICOH_SEED"); env && *env) {
    opts.seed = parse_seed(env, "ORBICOH_SEED");
  }
  opts.trials = flags.trials;
  return opts;
}

InputDocument load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError(path, "cannot open file");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_document_text(buffer.str());
}

InputDocument pair_document(const NamedPair& pair) {
  InputDocument doc;
  doc.n = pair.poset.dimension();
  doc.kind = InputKind::Polytope;
  doc.vertex_facet_sets = pair.poset.vertex_facet_sets();
  doc.vectors = pair.v.vectors();
  doc.facet_names = pair.facet_names;
  return doc;
}

InputDocument fan_document(const NamedFan& fan) {
  InputDocument doc;
  doc.n = fan.fan.dimension();
  doc.kind = InputKind::Fan;
  doc.rays = fan.fan.rays();
  doc.max_cones = fan.fan.max_cones();
  doc.facet_names = fan.ray_names;
  return doc;
}

int emit(const Report& report, bool json, std::ostream& out) {
  if (json)
    out << report.json.dump(2) << "\n";
  else
    out << report.text;
  return report.status;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cohomology and torsion invariants of torus orbifolds"};
  app.require_subcommand(1);
  Flags flags;

  std::string file;
  auto* analyze = app.add_subcommand("analyze", "Analyze a poset, polytope or fan document");
  analyze->add_option("file", file, "Input JSON document")->required();
  add_common(analyze, flags);

  auto* fan = app.add_subcommand("fan", "Check a fan and compare both torsion routes");
  fan->add_option("file", file, "Input JSON document with rays and max_cones")->required();
  add_common(fan, flags);

  std::string name;
  long param = 0;
  auto* example = app.add_subcommand("example", "Run a built-in example");
  example
      ->add_option("name", name,
                   "weighted-triangle, simplex3, fibration, counterexample, diamond, simplex or prism")
      ->required()
      ->check(CLI::IsMember({"weighted-triangle", "simplex3", "fibration", "counterexample", "diamond",
                             "simplex", "prism"}));
  example->add_option("--param", param, "Family parameter (a, d, or the dimension n)");
  add_common(example, flags);

  std::vector<std::string> argv_store{"orbicoh"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : argv_store) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "orbicoh: " << e.what() << "\n";
    return 2;
  }

  try {
    PipelineOptions opts = options_from(flags);
    InputDocument doc;
    if (analyze->parsed()) {
      doc = load(file);
    } else if (fan->parsed()) {
      doc = load(file);
      if (doc.kind != InputKind::Fan) throw SchemaError("", "the fan command needs \"rays\" and \"max_cones\"");
      opts.fan_checks = true;
    } else {
      const bool given = example->count("--param") > 0;
      auto value = [&](long fallback) { return Integer(given ? param : fallback); };
      if (name == "weighted-triangle") {
        doc = pair_document(weighted_triangle(value(1)));
      } else if (name == "simplex3") {
        doc = pair_document(simplex3_example());
      } else if (name == "fibration") {
        doc = fan_document(fibration_fan(value(1)));
        opts.fan_checks = true;
        opts.fibration_fiber = value(1);
      } else if (name == "counterexample") {
        doc = fan_document(counterexample_fan(value(2)));
        opts.fan_checks = true;
      } else {
        auto kind = name == "diamond" ? PosetClass::Diamond
                    : name == "simplex" ? PosetClass::Simplex
                                        : PosetClass::Prism;
        doc = pair_document(reference_pair(kind, static_cast<int>(given ? param : 3)));
      }
    }
    return emit(run_pipeline(doc, opts), flags.json, out);
  } catch (const SchemaError& e) {
    err << "orbicoh: malformed input at " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "orbicoh: " << e.what() << "\n";
    return e.code() == ErrorCode::InvalidArgument ? 2 : 1;
  }
}

}  // namespace orbicoh::cli
