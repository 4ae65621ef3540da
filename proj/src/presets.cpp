#include "bcforge/models.hpp"

namespace bcforge {

namespace {

Weight w(const char* z, const char* zb) { return {Scalar(mpq_class(z)), Scalar(mpq_class(zb))}; }

ModelSpec nakamura_base(const std::string& name) {
  ModelSpec s;
  s.name = name;
  s.n = 3;
  for (int i = 1; i <= 3; ++i) {
    const std::string k = std::to_string(i);
    s.oneforms.push_back({"dz" + k, {1, 0}, "dzb" + k, {}});
  }
  for (int i = 1; i <= 3; ++i) {
    const std::string k = std::to_string(i);
    s.oneforms.push_back({"dzb" + k, {0, 1}, "dz" + k, {}});
  }
  s.coordinates = {"dz1", "dzb1"};
  return s;
}

// Completely solvable: characters e^{(z1+zb1)/2} on dz2, its inverse on dz3.
ModelSpec completely_solvable(const std::string& name, int which, Rule rule) {
  ModelSpec s = nakamura_base(name);
  s.characters = {{"a2", w("1/2", "1/2")},
                  {"a3", w("-1/2", "-1/2")},
                  {"b2", w("-1/2", "1/2")},
                  {"b3", w("1/2", "-1/2")}};
  s.alpha = {{"dz2", "a2"}, {"dz3", "a3"}};
  s.beta = {{"dz2", "b2"}, {"dz3", "b3"}};
  s.gamma = s.beta;
  for (int k = -4; k <= 4; ++k) {
    bool keep = which == 1 || (which == 2 && k % 2 == 0) || (which == 3 && k == 0);
    if (!keep) continue;
    mpq_class r(k, 2);
    s.trivial_weights.push_back({Scalar(-r), Scalar(r)});
  }
  s.rule = rule;
  return s;
}

ModelSpec complex_parallelizable(const std::string& name, bool case_a, Rule rule) {
  ModelSpec s = nakamura_base(name);
  s.characters = {{"a2", w("1", "0")}, {"a3", w("-1", "0")}};
  s.alpha = {{"dz2", "a2"}, {"dz3", "a3"}};
  if (case_a) {
    for (int a = -2; a <= 2; ++a) s.trivial_weights.push_back({Scalar(a), Scalar(-a)});
  } else {
    s.trivial_weights.push_back({Scalar(0), Scalar(0)});
  }
  s.rule = rule;
  return s;
}

}  // namespace

const std::vector<std::string>& preset_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const char* base : {"nakamura-cs-case1", "nakamura-cs-case2", "nakamura-cs-case3", "nakamura-cp-caseA",
                             "nakamura-cp-caseB"}) {
      out.push_back(base);
      out.push_back(std::string(base) + "-Agamma");
      out.push_back(std::string(base) + "-Bgamma");
    }
    return out;
  }();
  return names;
}

ModelSpec preset(const std::string& name) {
  std::string base = name;
  std::string suffix;
  for (const char* s : {"-Agamma", "-Bgamma"}) {
    if (name.size() > 7 && name.ends_with(s)) {
      base = name.substr(0, name.size() - 7);
      suffix = s;
    }
  }
  for (int which = 1; which <= 3; ++which) {
    if (base != "nakamura-cs-case" + std::to_string(which)) continue;
    Rule r = suffix == "-Agamma" ? Rule::AGamma : suffix == "-Bgamma" ? Rule::BGamma : Rule::CGamma;
    return completely_solvable(name, which, r);
  }
  if (base == "nakamura-cp-caseA" || base == "nakamura-cp-caseB") {
    Rule r = suffix == "-Agamma" ? Rule::AGamma : suffix == "-Bgamma" ? Rule::CPBGamma : Rule::CPCGamma;
    return complex_parallelizable(name, base == "nakamura-cp-caseA", r);
  }
  throw UnknownPreset("unknown preset " + name);
}

}  // namespace bcforge
