#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "bcforge/complex.hpp"
#include "bcforge/morphisms.hpp"
#include "bcforge/pd.hpp"

namespace bcforge {

/// Exponent of a character e^{sum w_c zeta_c}, one entry per flagged coordinate.
using Weight = std::vector<Scalar>;

/// coefficient * (a ^ b), with a and b one-form symbols.
struct StructureTerm {
  Scalar coefficient;
  std::string a;
  std::string b;
};

struct OneForm {
  std::string symbol;
  Bidegree type;  ///< (1,0) or (0,1)
  std::string partner;
  std::vector<StructureTerm> d;
};

/// e^{weight} dz_I ^ dz-bar_K. I and K hold holomorphic indices 1..n; the
/// barred index k stands for the conjugate partner of the k-th (1,0) form.
struct GeneratorSpec {
  Weight weight;
  std::vector<int> hol;
  std::vector<int> antihol;
};

enum class Rule { Explicit, AGamma, BGamma, CGamma, CPBGamma, CPCGamma };

std::string rule_key(Rule r);
std::optional<Rule> parse_rule(const std::string& key);

struct NamedCharacter {
  std::string name;
  Weight weight;
};

struct ModelSpec {
  std::string name;
  int n = 0;
  std::vector<OneForm> oneforms;
  /// Symbols of the flagged coordinate differentials, in weight order.
  std::vector<std::string> coordinates;
  std::vector<NamedCharacter> characters;
  std::vector<Weight> trivial_weights;
  Rule rule = Rule::Explicit;
  std::vector<GeneratorSpec> generators;
  /// Per (1,0) symbol, the character names used by the rules.
  std::map<std::string, std::string> alpha;
  std::map<std::string, std::string> beta;
  std::map<std::string, std::string> gamma;
};

/// Raised for malformed specs, missing rule data and unknown presets.
class ModelError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UnknownPreset : public ModelError {
 public:
  using ModelError::ModelError;
};

class UnresolvableGenerator : public ModelError {
 public:
  using ModelError::ModelError;
};

/// The built complex fails validate(); each violation is followed by the
/// generators on which the failing identity is nonzero.
class ModelValidationError : public ModelError {
 public:
  ModelValidationError(const std::string& what, std::vector<Violation> v)
      : ModelError(what), violations_(std::move(v)) {}
  const std::vector<Violation>& violations() const { return violations_; }

 private:
  std::vector<Violation> violations_;
};

struct Generator {
  Weight weight;
  std::uint32_t mask = 0;  ///< bit h-1: dz_h, bit n+h-1: its conjugate
  Bidegree bidegree;
  std::string label;
};

struct BuiltModel {
  ModelSpec spec;
  BigradedComplex complex;
  PairedComplex paired;
  /// Basis of each bidegree, in the order of complex.labels().
  std::map<Bidegree, std::vector<Generator>> generators;

  std::size_t generator_count() const;
  std::optional<std::pair<Bidegree, std::size_t>> find(const Weight& w, std::uint32_t mask) const;
};

/// Generators produced by spec.rule, deduplicated and in canonical order.
std::vector<Generator> expand_generators(const ModelSpec& spec);

/// Throws ModelError on spec invariant failures and missing rule data,
/// ModelValidationError when the produced complex does not validate.
BuiltModel build(const ModelSpec& spec);

/// Canonical label, e.g. "e^{-z1}*dz_{12,1}", "dz_{,23}", "1".
std::string generator_label(const ModelSpec& spec, const Weight& w, std::uint32_t mask);

const std::vector<std::string>& preset_names();
ModelSpec preset(const std::string& name);

/// Inclusion of sub into ambient by label resolution.
ComplexMap subcomplex_inclusion(const BuiltModel& sub, const BuiltModel& ambient);

/// Every generator (w, M) has a partner (-w, complement of M).
bool star_closure_check(const BuiltModel& bm);

/// Labels of generators whose rule weight does not cancel against the rule
/// weight of the complementary monomial. Empty for explicit specs.
std::vector<std::string> weight_bookkeeping_violations(const BuiltModel& bm);

/// modelspec-v1 JSON.
ModelSpec modelspec_from_json(const std::string& text);
std::string modelspec_to_json(const ModelSpec& spec);
/// Reads a file; throws ModelError with a parse diagnostic on failure.
ModelSpec load_modelspec(const std::string& path);

}  // namespace bcforge
