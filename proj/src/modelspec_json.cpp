#include <fstream>
#include <sstream>

#include <json.hpp>

#include "bcforge/models.hpp"

namespace bcforge {

namespace {

using nlohmann::json;

constexpr const char* kFormat = "modelspec-v1";

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw ModelError("modelspec: " + where + ": " + what);
}

const json& field(const json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) fail(where, std::string("missing field '") + key + "'");
  return j.at(key);
}

mpq_class rational(const json& num, const json& den, const std::string& where) {
  auto part = [&](const json& v) {
    if (v.is_number_integer()) return mpz_class(std::to_string(v.get<long long>()));
    if (v.is_string()) {
      try {
        return mpz_class(v.get<std::string>());
      } catch (const std::invalid_argument&) {
      }
    }
    fail(where, "expected an integer or a decimal string");
  };
  mpz_class d = part(den);
  if (d == 0) fail(where, "zero denominator");
  mpq_class q(part(num), d);
  q.canonicalize();
  return q;
}

Scalar quadruple(const json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 4) fail(where, "expected [re_num, re_den, im_num, im_den]");
  return Scalar(rational(j[0], j[1], where), rational(j[2], j[3], where));
}

json quadruple(const Scalar& s) {
  auto z = [](const mpz_class& v) -> json {
    if (v.fits_slong_p()) return v.get_si();
    return v.get_str();
  };
  return json::array({z(s.re().get_num()), z(s.re().get_den()), z(s.im().get_num()), z(s.im().get_den())});
}

Weight weight_from(const json& j, const std::string& where) {
  if (!j.is_array()) fail(where, "expected a list of coordinate quadruples");
  Weight w;
  for (std::size_t i = 0; i < j.size(); ++i) w.push_back(quadruple(j[i], where + "[" + std::to_string(i) + "]"));
  return w;
}

json weight_to(const Weight& w) {
  json out = json::array();
  for (const Scalar& s : w) out.push_back(quadruple(s));
  return out;
}

Scalar coefficient_from(const json& j, const std::string& where) {
  if (j.is_string()) {
    try {
      return Scalar::parse(j.get<std::string>());
    } catch (const std::exception& e) {
      fail(where, e.what());
    }
  }
  if (j.is_number_integer()) return Scalar(j.get<long>());
  return quadruple(j, where);
}

std::string string_from(const json& j, const std::string& where) {
  if (!j.is_string()) fail(where, "expected a string");
  return j.get<std::string>();
}

std::vector<int> indices_from(const json& j, const std::string& where) {
  if (!j.is_array()) fail(where, "expected a list of indices");
  std::vector<int> out;
  for (const json& v : j) {
    if (!v.is_number_integer()) fail(where, "expected integer indices");
    out.push_back(v.get<int>());
  }
  return out;
}

std::map<std::string, std::string> names_from(const json& j, const std::string& where) {
  if (!j.is_object()) fail(where, "expected an object mapping symbols to character names");
  std::map<std::string, std::string> out;
  for (auto it = j.begin(); it != j.end(); ++it) out[it.key()] = string_from(it.value(), where + "." + it.key());
  return out;
}

}  // namespace

ModelSpec modelspec_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    fail("input", e.what());
  }
  if (!j.is_object()) fail("input", "top level must be an object");
  if (j.contains("format") && j.at("format") != kFormat) fail("format", std::string("expected ") + kFormat);
  ModelSpec s;
  s.name = string_from(field(j, "name", "model"), "name");
  const json& n = field(j, "n", "model");
  if (!n.is_number_integer()) fail("n", "expected an integer");
  s.n = n.get<int>();

  const json& forms = field(j, "oneforms", "model");
  if (!forms.is_array()) fail("oneforms", "expected a list");
  for (std::size_t i = 0; i < forms.size(); ++i) {
    const std::string where = "oneforms[" + std::to_string(i) + "]";
    const json& f = forms[i];
    OneForm of;
    of.symbol = string_from(field(f, "symbol", where), where + ".symbol");
    std::vector<int> type = indices_from(field(f, "type", where), where + ".type");
    if (type.size() != 2) fail(where + ".type", "expected [p, q]");
    of.type = {type[0], type[1]};
    of.partner = string_from(field(f, "partner", where), where + ".partner");
    if (f.contains("d")) {
      const json& d = f.at("d");
      if (!d.is_array()) fail(where + ".d", "expected a list of terms");
      for (std::size_t t = 0; t < d.size(); ++t) {
        const std::string tw = where + ".d[" + std::to_string(t) + "]";
        of.d.push_back({coefficient_from(field(d[t], "coefficient", tw), tw + ".coefficient"),
                        string_from(field(d[t], "a", tw), tw + ".a"), string_from(field(d[t], "b", tw), tw + ".b")});
      }
    }
    s.oneforms.push_back(std::move(of));
  }

  const json& coords = field(j, "coordinates", "model");
  if (!coords.is_array()) fail("coordinates", "expected a list of symbols");
  for (const json& c : coords) s.coordinates.push_back(string_from(c, "coordinates"));

  if (j.contains("characters")) {
    const json& chars = j.at("characters");
    if (!chars.is_array()) fail("characters", "expected a list");
    for (std::size_t i = 0; i < chars.size(); ++i) {
      const std::string where = "characters[" + std::to_string(i) + "]";
      s.characters.push_back({string_from(field(chars[i], "name", where), where + ".name"),
                              weight_from(field(chars[i], "weight", where), where + ".weight")});
    }
  }
  if (j.contains("trivial_weights")) {
    const json& tw = j.at("trivial_weights");
    if (!tw.is_array()) fail("trivial_weights", "expected a list of weights");
    for (std::size_t i = 0; i < tw.size(); ++i) {
      s.trivial_weights.push_back(weight_from(tw[i], "trivial_weights[" + std::to_string(i) + "]"));
    }
  }

  const json& gens = field(j, "generators", "model");
  const std::string rule = string_from(field(gens, "rule", "generators"), "generators.rule");
  auto r = parse_rule(rule);
  if (!r) fail("generators.rule", "unknown rule '" + rule + "'");
  s.rule = *r;
  if (s.rule == Rule::Explicit) {
    const json& list = field(gens, "list", "generators");
    if (!list.is_array()) fail("generators.list", "expected a list");
    for (std::size_t i = 0; i < list.size(); ++i) {
      const std::string where = "generators.list[" + std::to_string(i) + "]";
      GeneratorSpec g;
      g.weight = weight_from(field(list[i], "weight", where), where + ".weight");
      g.hol = indices_from(field(list[i], "hol", where), where + ".hol");
      g.antihol = indices_from(field(list[i], "antihol", where), where + ".antihol");
      s.generators.push_back(std::move(g));
    }
  }
  if (gens.contains("alpha")) s.alpha = names_from(gens.at("alpha"), "generators.alpha");
  if (gens.contains("beta")) s.beta = names_from(gens.at("beta"), "generators.beta");
  if (gens.contains("gamma")) s.gamma = names_from(gens.at("gamma"), "generators.gamma");
  return s;
}

std::string modelspec_to_json(const ModelSpec& s) {
  json j;
  j["format"] = kFormat;
  j["name"] = s.name;
  j["n"] = s.n;
  j["oneforms"] = json::array();
  for (const OneForm& f : s.oneforms) {
    json d = json::array();
    for (const StructureTerm& t : f.d) d.push_back({{"coefficient", quadruple(t.coefficient)}, {"a", t.a}, {"b", t.b}});
    j["oneforms"].push_back(
        {{"symbol", f.symbol}, {"type", {f.type.p, f.type.q}}, {"partner", f.partner}, {"d", d}});
  }
  j["coordinates"] = s.coordinates;
  j["characters"] = json::array();
  for (const NamedCharacter& c : s.characters) j["characters"].push_back({{"name", c.name}, {"weight", weight_to(c.weight)}});
  j["trivial_weights"] = json::array();
  for (const Weight& w : s.trivial_weights) j["trivial_weights"].push_back(weight_to(w));
  json g;
  g["rule"] = rule_key(s.rule);
  if (s.rule == Rule::Explicit) {
    g["list"] = json::array();
    for (const GeneratorSpec& x : s.generators) {
      g["list"].push_back({{"weight", weight_to(x.weight)}, {"hol", x.hol}, {"antihol", x.antihol}});
    }
  }
  if (!s.alpha.empty()) g["alpha"] = s.alpha;
  if (!s.beta.empty()) g["beta"] = s.beta;
  if (!s.gamma.empty()) g["gamma"] = s.gamma;
  j["generators"] = g;
  return j.dump(2) + "\n";
}

ModelSpec load_modelspec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ModelError("modelspec: cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return modelspec_from_json(buf.str());
  } catch (const ModelError& e) {
    throw ModelError(path + ": " + e.what());
  }
}

}  // namespace bcforge
