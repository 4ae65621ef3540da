#include <CLI11.hpp>

#include <algorithm>
#include <cstdint>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "bcforge/acceptance.hpp"
#include "bcforge/models.hpp"
#include "bcforge/report.hpp"

using namespace bcforge;

namespace {

constexpr int kOk = 0;
constexpr int kInvariantFailure = 1;
constexpr int kInvalidModel = 2;
constexpr int kUsage = 64;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ModelSource {
  std::string path;
  std::string preset;

  bool given() const { return !path.empty() || !preset.empty(); }
};

BuiltModel load(const ModelSource& src, const std::string& role) {
  if (!src.path.empty() && !src.preset.empty()) throw UsageError(role + ": give either a model file or a preset, not both");
  if (!src.given()) throw UsageError(role + ": a model file or a preset is required");
  if (!src.preset.empty()) {
    ModelSpec spec;
    try {
      spec = preset(src.preset);
    } catch (const UnknownPreset& e) {
      throw UsageError(e.what());
    }
    return build(spec);
  }
  return build(load_modelspec(src.path));
}

std::vector<Theory> parse_theories(const std::string& list) {
  if (list.empty() || list == "all") return all_theories();
  std::vector<Theory> out;
  std::istringstream in(list);
  std::string key;
  while (std::getline(in, key, ',')) {
    auto t = parse_theory(key);
    if (!t) throw UsageError("unknown theory '" + key + "' (expected dr, del, delbar, bc, aeppli, e1, pure)");
    if (std::find(out.begin(), out.end(), *t) == out.end()) out.push_back(*t);
  }
  return out;
}

Format parse_format_or_throw(const std::string& key) {
  auto f = parse_format(key);
  if (!f) throw UsageError("unknown format '" + key + "' (expected text, csv, json)");
  return *f;
}

int invariant_status(const Report& r) {
  for (const InvariantResult& i : r.invariants) {
    if (!i.pass) return kInvariantFailure;
  }
  return kOk;
}

void add_model_options(CLI::App* cmd, ModelSource& src) {
  cmd->add_option("--model", src.path, "modelspec-v1 JSON file");
  cmd->add_option("--preset", src.preset, "built-in model name (see `bcforge presets`)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Bott-Chern, Aeppli, Dolbeault and de Rham cohomology of finite bigraded models"};
  app.require_subcommand(0, 1);

  bool golden = false;
  std::uint64_t seed = 0;
  app.add_flag("--golden", golden, "run the acceptance suite against the shipped expected tables");
  app.add_option("--seed", seed, "seed offset for the synthetic acceptance instances");

  std::string format_key = "text";
  std::string theories_key = "all";
  bool representatives = false;

  ModelSource validate_src;
  CLI::App* validate_cmd = app.add_subcommand("validate", "check a model and its pairing");
  add_model_options(validate_cmd, validate_src);
  validate_cmd->add_option("--format", format_key, "text, csv or json");

  ModelSource table_src;
  CLI::App* table_cmd = app.add_subcommand("table", "cohomology dimensions per bidegree and total degree");
  add_model_options(table_cmd, table_src);
  table_cmd->add_option("--theories", theories_key, "comma list of dr, del, delbar, bc, aeppli, e1, pure");
  table_cmd->add_option("--format", format_key, "text, csv or json");
  table_cmd->add_flag("--representatives", representatives, "list a basis of representatives per class space");

  ModelSource ddbar_src;
  CLI::App* ddbar_cmd = app.add_subcommand("ddbar", "ddbar-lemma degrees and verdict");
  add_model_options(ddbar_cmd, ddbar_src);
  ddbar_cmd->add_option("--format", format_key, "text, csv or json");

  ModelSource sub_src, ambient_src;
  CLI::App* compare_cmd = app.add_subcommand("compare", "maps induced by a sub-model inclusion");
  compare_cmd->add_option("--sub-model", sub_src.path, "sub-model JSON file");
  compare_cmd->add_option("--sub-preset", sub_src.preset, "sub-model preset");
  compare_cmd->add_option("--ambient-model,--model", ambient_src.path, "ambient model JSON file");
  compare_cmd->add_option("--ambient-preset,--preset", ambient_src.preset, "ambient preset");
  compare_cmd->add_option("--theories", theories_key, "comma list of dr, del, delbar, bc, aeppli, e1, pure");
  compare_cmd->add_option("--format", format_key, "text, csv or json");

  std::string show;
  CLI::App* presets_cmd = app.add_subcommand("presets", "list built-in models");
  presets_cmd->add_option("--show", show, "print the modelspec-v1 JSON of one preset");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (golden) {
      auto results = run_acceptance(seed);
      std::cout << format_acceptance(results);
      for (const auto& r : results) {
        if (!r.pass) return kInvariantFailure;
      }
      return kOk;
    }
    if (presets_cmd->parsed()) {
      if (!show.empty()) {
        ModelSpec spec;
        try {
          spec = preset(show);
        } catch (const UnknownPreset& e) {
          throw UsageError(e.what());
        }
        std::cout << modelspec_to_json(spec);
        return kOk;
      }
      for (const std::string& name : preset_names()) std::cout << name << "\n";
      return kOk;
    }
    const Format format = parse_format_or_throw(format_key);
    Report report;
    if (validate_cmd->parsed()) {
      BuiltModel bm = load(validate_src, "validate");
      report.command = "validate";
      report.model = bm.spec.name;
      report.n = bm.spec.n;
      report.invariants = model_invariants(bm);
    } else if (table_cmd->parsed()) {
      std::vector<Theory> theories = parse_theories(theories_key);
      report = table_report(load(table_src, "table"), theories, false, representatives);
    } else if (ddbar_cmd->parsed()) {
      report = ddbar_report(load(ddbar_src, "ddbar"));
    } else if (compare_cmd->parsed()) {
      std::vector<Theory> theories = parse_theories(theories_key);
      BuiltModel sub = load(sub_src, "compare sub-model");
      BuiltModel ambient = load(ambient_src, "compare ambient");
      report = compare_report(sub, ambient, theories);
    } else {
      std::cerr << app.help();
      return kUsage;
    }
    std::cout << render(report, format);
    return invariant_status(report);
  } catch (const UsageError& e) {
    std::cerr << "bcforge: " << e.what() << "\n";
    return kUsage;
  } catch (const ModelValidationError& e) {
    std::cerr << "bcforge: invalid model\n" << e.what() << "\n";
    return kInvalidModel;
  } catch (const ModelError& e) {
    std::cerr << "bcforge: " << e.what() << "\n";
    return kInvalidModel;
  } catch (const std::exception& e) {
    std::cerr << "bcforge: " << e.what() << "\n";
    return kInvalidModel;
  }
}
