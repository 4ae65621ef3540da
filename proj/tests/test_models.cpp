#include <doctest.h>

#include <set>

#include "bcforge/golden.hpp"
#include "bcforge/models.hpp"

using namespace bcforge;

namespace {

std::set<std::string> labels_at(const BuiltModel& bm, Bidegree b) {
  std::set<std::string> out;
  auto it = bm.generators.find(b);
  if (it == bm.generators.end()) return out;
  for (const Generator& g : it->second) out.insert(g.label);
  return out;
}

std::string base_of(const std::string& name) {
  if (name.ends_with("-Agamma") || name.ends_with("-Bgamma")) return name.substr(0, name.size() - 7);
  return name;
}

// Left-invariant model of a nilmanifold with phi_1..phi_n and their conjugates,
// every monomial a generator, no characters.
ModelSpec ce_spec(int n, const std::map<int, std::vector<StructureTerm>>& d) {
  ModelSpec s;
  s.name = "ce";
  s.n = n;
  for (int i = 1; i <= n; ++i) {
    std::string k = std::to_string(i);
    s.oneforms.push_back({"phi" + k, {1, 0}, "phib" + k, {}});
  }
  for (int i = 1; i <= n; ++i) {
    std::string k = std::to_string(i);
    s.oneforms.push_back({"phib" + k, {0, 1}, "phi" + k, {}});
  }
  for (const auto& [i, terms] : d) s.oneforms[i - 1].d = terms;
  for (std::uint32_t mask = 0; mask < (1u << (2 * n)); ++mask) {
    GeneratorSpec g;
    for (int h = 0; h < n; ++h) {
      if (mask >> h & 1u) g.hol.push_back(h + 1);
      if (mask >> (n + h) & 1u) g.antihol.push_back(h + 1);
    }
    s.generators.push_back(g);
  }
  return s;
}

// Conjugates each structure term of a (1,0) form onto its partner.
void add_conjugate_terms(ModelSpec& s) {
  for (int i = 0; i < s.n; ++i) {
    std::vector<StructureTerm> conj;
    for (const StructureTerm& t : s.oneforms[i].d) {
      auto bar = [](const std::string& x) {
        return x.starts_with("phib") ? "phi" + x.substr(4) : "phib" + x.substr(3);
      };
      conj.push_back({t.coefficient.conj(), bar(t.a), bar(t.b)});
    }
    s.oneforms[s.n + i].d = conj;
  }
}

ModelSpec iwasawa() {
  ModelSpec s = ce_spec(3, {{3, {{Scalar(-1), "phi1", "phi2"}}}});
  add_conjugate_terms(s);
  s.name = "iwasawa";
  return s;
}

}  // namespace

TEST_CASE("presets reproduce the transcribed generator tables") {
  for (const auto& t : golden::generator_tables()) {
    CAPTURE(t.preset);
    BuiltModel bm = build(preset(t.preset));
    std::size_t listed = 0;
    for (const Bidegree& b : antidiagonal_order(3)) {
      CAPTURE(to_string(b));
      auto it = t.labels.find(b);
      std::set<std::string> want;
      if (it != t.labels.end()) want.insert(it->second.begin(), it->second.end());
      CHECK(labels_at(bm, b) == want);
      listed += want.size();
    }
    CHECK(bm.generator_count() == listed);
  }
}

TEST_CASE("A_Gamma presets reproduce the degree listings") {
  for (const auto& t : golden::degree_tables()) {
    CAPTURE(t.preset);
    BuiltModel bm = build(preset(t.preset));
    std::map<int, std::set<std::string>> by_degree;
    for (const auto& [b, gs] : bm.generators) {
      for (const Generator& g : gs) by_degree[b.total()].insert(g.label);
    }
    for (int k = 0; k <= 6; ++k) {
      auto it = t.labels.find(k);
      REQUIRE(it != t.labels.end());
      CHECK(by_degree[k] == std::set<std::string>(it->second.begin(), it->second.end()));
    }
  }
}

TEST_CASE("documented builder examples") {
  BuiltModel case2 = build(preset("nakamura-cs-case2"));
  CHECK(labels_at(case2, {1, 1}) ==
        std::set<std::string>{"dz_{1,1}", "e^{-2z1}*dz_{2,2}", "e^{-2zb1}*dz_{2,2}", "e^{2z1}*dz_{3,3}",
                              "e^{2zb1}*dz_{3,3}", "dz_{2,3}", "dz_{3,2}"});
  CHECK(build(preset("nakamura-cp-caseB")).complex.dim({2, 2}) == 5);
  CHECK(build(preset("nakamura-cs-case1")).complex.dim({1, 1}) == 15);
  CHECK(build(preset("nakamura-cs-case3")).complex.dim({2, 2}) == 3);
  BuiltModel a = build(preset("nakamura-cp-caseA-Agamma"));
  CHECK(a.complex.tot_dim(2) == 5);
  std::set<std::string> deg2;
  for (const Bidegree b : {Bidegree{2, 0}, Bidegree{1, 1}, Bidegree{0, 2}}) {
    for (const auto& s : labels_at(a, b)) deg2.insert(s);
  }
  CHECK(deg2 == std::set<std::string>{"dz_{1,1}", "dz_{23,}", "dz_{2,3}", "dz_{3,2}", "dz_{,23}"});

  ModelSpec empty = preset("nakamura-cs-case1");
  empty.rule = Rule::Explicit;
  empty.generators.clear();
  BuiltModel zero = build(empty);
  CHECK(zero.generator_count() == 0);
  CHECK(validate(zero.complex).empty());
  CHECK(star_closure_check(zero));
}

TEST_CASE("preset dimension tables") {
  for (const auto& d : golden::dimension_tables()) {
    CAPTURE(d.preset);
    BuiltModel bm = build(preset(d.preset));
    CohomologyTable t =
        compute_table(bm.complex, 3, {Theory::Delbar, Theory::BottChern, Theory::DeRham}, true);
    CHECK(t.bigraded[Theory::Delbar] == d.delbar);
    CHECK(t.bigraded[Theory::BottChern] == d.bott_chern);
    CHECK(t.totals[Theory::DeRham] == d.de_rham);
    for (int k = 1; k <= 5; ++k) CHECK(t.ddbar->by_degree.at(k) == d.ddbar[k - 1]);
    CHECK(satisfies_ddbar_lemma(bm.complex) == d.ddbar_lemma);
  }
}

TEST_CASE("every preset is a valid paired model") {
  for (const std::string& name : preset_names()) {
    CAPTURE(name);
    BuiltModel bm = build(preset(name));
    CHECK(validate(bm.complex).empty());
    CHECK(check_pd_axioms(bm.paired).empty());
    CHECK(star_closure_check(bm));
    CHECK(weight_bookkeeping_violations(bm).empty());
    CHECK(star_duality_check(bm.paired).empty());
    ComplexMap inc = subcomplex_inclusion(bm, build(preset(base_of(name))));
    CHECK(check_map(inc).empty());
    if (bm.complex.has_conj()) {
      for (const Bidegree& b : antidiagonal_order(3)) {
        CHECK(h_del(bm.complex, b.p, b.q).dimension == h_delbar(bm.complex, b.q, b.p).dimension);
      }
    }
  }
}

TEST_CASE("C_Gamma rules are closed under conjugation") {
  for (const std::string& name : preset_names()) {
    if (base_of(name) != name) continue;
    CAPTURE(name);
    BuiltModel bm = build(preset(name));
    REQUIRE(bm.complex.has_conj());
    for (const auto& [b, gs] : bm.generators) CHECK(bm.complex.conj_defined_at(b));
  }
}

TEST_CASE("del delbar vanishes on the completely solvable C_Gamma") {
  for (const char* name : {"nakamura-cs-case1", "nakamura-cs-case2", "nakamura-cs-case3"}) {
    BuiltModel bm = build(preset(name));
    for (const Bidegree& b : bm.complex.support()) CHECK(bm.complex.del_delbar(b).is_zero());
    for (const Bidegree& b : antidiagonal_order(3)) {
      Matrix both = Matrix::vstack(bm.complex.del(b), bm.complex.delbar(b));
      CHECK(h_bott_chern(bm.complex, b.p, b.q).dimension == kernel(both).dim());
    }
  }
}

TEST_CASE("inclusions resolve by label") {
  BuiltModel c = build(preset("nakamura-cs-case1"));
  CHECK(check_map(subcomplex_inclusion(c, c)).empty());
  CHECK(check_map(subcomplex_inclusion(build(preset("nakamura-cs-case1-Agamma")), c)).empty());
  BuiltModel cp = build(preset("nakamura-cp-caseB"));
  CHECK(check_map(subcomplex_inclusion(build(preset("nakamura-cp-caseB-Bgamma")), cp)).empty());
  CHECK_THROWS_AS(subcomplex_inclusion(c, build(preset("nakamura-cs-case3"))), UnresolvableGenerator);
}

TEST_CASE("star closure detects a missing partner") {
  ModelSpec s = preset("nakamura-cs-case3");
  std::vector<Generator> gens = expand_generators(s);
  s.rule = Rule::Explicit;
  for (const Generator& g : gens) {
    if (g.label == "dz_{2,3}") continue;
    GeneratorSpec x{g.weight, {}, {}};
    for (int h = 0; h < 3; ++h) {
      if (g.mask >> h & 1u) x.hol.push_back(h + 1);
      if (g.mask >> (3 + h) & 1u) x.antihol.push_back(h + 1);
    }
    s.generators.push_back(x);
  }
  BuiltModel full = build(preset("nakamura-cs-case3"));
  BuiltModel cut = build(s);
  CHECK(cut.generator_count() + 1 == full.generator_count());
  CHECK(validate(cut.complex).empty());
  CHECK_FALSE(star_closure_check(cut));
  CHECK_FALSE(check_pd_axioms(cut.paired).empty());
}

TEST_CASE("nilmanifold model from structure constants") {
  BuiltModel bm = build(iwasawa());
  REQUIRE(validate(bm.complex).empty());
  CHECK(bm.complex.has_conj());
  CHECK(check_pd_axioms(bm.paired).empty());
  CHECK(star_closure_check(bm));
  CHECK(star_duality_check(bm.paired).empty());
  // Closed 1-forms: phi1, phi2 and their conjugates. All of phi1..phi3 are delbar-closed.
  CHECK(h_deRham(bm.complex, 1).dimension == 4);
  CHECK(h_delbar(bm.complex, 1, 0).dimension == 3);
  CHECK(h_delbar(bm.complex, 0, 1).dimension == 2);
  for (const Bidegree& b : antidiagonal_order(3)) {
    CHECK(h_del(bm.complex, b.p, b.q).dimension == h_delbar(bm.complex, b.q, b.p).dimension);
  }
  CHECK(ddbar_degrees(bm.complex).violations.empty());
}

TEST_CASE("broken models are rejected with the offending generator") {
  ModelSpec s = ce_spec(3, {{3, {{Scalar(1), "phi1", "phi2"}}}, {1, {{Scalar(1), "phi3", "phib3"}}}});
  add_conjugate_terms(s);
  try {
    build(s);
    FAIL("expected a validation error");
  } catch (const ModelValidationError& e) {
    std::string what = e.what();
    CHECK(what.find("del delbar + delbar del = 0") != std::string::npos);
    CHECK(what.find("dz_{3,}") != std::string::npos);
    REQUIRE_FALSE(e.violations().empty());
  }

  ModelSpec missing = preset("nakamura-cs-case1-Bgamma");
  missing.beta.erase("dz3");
  CHECK_THROWS_WITH_AS(build(missing), doctest::Contains("rule data missing"), ModelError);

  ModelSpec open = ce_spec(3, {{3, {{Scalar(1), "phi1", "phi2"}}}});
  add_conjugate_terms(open);
  open.generators.erase(open.generators.begin() + 3);  // phi1 ^ phi2
  CHECK_THROWS_AS(build(open), ModelValidationError);

  ModelSpec bad_type = ce_spec(2, {{1, {{Scalar(1), "phib1", "phib2"}}}});
  CHECK_THROWS_AS(build(bad_type), ModelError);
  CHECK_THROWS_AS(preset("nakamura-cs-case4"), UnknownPreset);

  ModelSpec asym = preset("nakamura-cs-case1");
  asym.trivial_weights.pop_back();
  CHECK_THROWS_WITH_AS(build(asym), doctest::Contains("negation"), ModelError);
}

TEST_CASE("modelspec JSON round trip") {
  for (const std::string& name : preset_names()) {
    CAPTURE(name);
    ModelSpec s = preset(name);
    std::string text = modelspec_to_json(s);
    ModelSpec back = modelspec_from_json(text);
    CHECK(modelspec_to_json(back) == text);
    BuiltModel a = build(s), b = build(back);
    for (const Bidegree& d : antidiagonal_order(3)) CHECK(labels_at(a, d) == labels_at(b, d));
  }
  ModelSpec iw = iwasawa();
  CHECK(modelspec_to_json(modelspec_from_json(modelspec_to_json(iw))) == modelspec_to_json(iw));

  CHECK_THROWS_AS(modelspec_from_json("{"), ModelError);
  CHECK_THROWS_WITH_AS(modelspec_from_json(R"({"name": "x", "n": 0})"), doctest::Contains("oneforms"), ModelError);
  CHECK_THROWS_WITH_AS(
      modelspec_from_json(
          R"({"name": "x", "n": 0, "oneforms": [], "coordinates": [], "generators": {"rule": "D-gamma"}})"),
      doctest::Contains("unknown rule"), ModelError);
  ModelSpec zero = modelspec_from_json(
      R"({"name": "z", "n": 0, "oneforms": [], "coordinates": [], "generators": {"rule": "explicit", "list": []}})");
  CHECK(build(zero).generator_count() == 0);
  CHECK_THROWS_AS(load_modelspec("/nonexistent/model.json"), ModelError);
}
