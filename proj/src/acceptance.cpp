#include "bcforge/acceptance.hpp"

#include <chrono>
#include <functional>
#include <iomanip>
#include <random>
#include <set>
#include <sstream>

#include "bcforge/golden.hpp"
#include "bcforge/models.hpp"
#include "bcforge/morphisms.hpp"
#include "bcforge/parallel.hpp"
#include "bcforge/pd.hpp"
#include "bcforge/synthetic.hpp"

namespace bcforge {

namespace {

constexpr int kMaxNotes = 5;

/// Collects mismatches; keeps the first few messages and a total count.
class Tally {
 public:
  void check(bool ok, const std::function<std::string()>& what) {
    ++checked_;
    if (ok) return;
    ++failed_;
    if (failed_ <= kMaxNotes) notes_ += (notes_.empty() ? "" : "; ") + what();
  }
  void note(const std::string& s) { extra_ += (extra_.empty() ? "" : ", ") + s; }
  bool pass() const { return failed_ == 0 && checked_ > 0; }
  std::string detail() const {
    std::string s = std::to_string(checked_) + " checks";
    if (!extra_.empty()) s += ", " + extra_;
    if (failed_) s += ", " + std::to_string(failed_) + " failed: " + notes_;
    if (!checked_) s += ", nothing checked";
    return s;
  }

 private:
  std::size_t checked_ = 0;
  std::size_t failed_ = 0;
  std::string notes_;
  std::string extra_;
};

template <class T>
std::string join(const std::vector<T>& v) {
  std::ostringstream out;
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << v[i];
  return out.str();
}

std::string base_of(const std::string& name) {
  if (name.ends_with("-Agamma") || name.ends_with("-Bgamma")) return name.substr(0, name.size() - 7);
  return name;
}

const golden::DimensionTable& expected(const std::string& preset) {
  for (const auto& d : golden::dimension_tables()) {
    if (d.preset == preset) return d;
  }
  throw std::out_of_range("no golden table for " + preset);
}

struct Models {
  std::map<std::string, BuiltModel> built;
  std::map<std::string, CohomologyTable> tables;
};

Models build_all(unsigned threads) {
  Models m;
  const auto& names = preset_names();
  std::vector<BuiltModel> built(names.size());
  std::vector<CohomologyTable> tables(names.size());
  parallel_for(names.size(), threads, [&](std::size_t i) {
    built[i] = build(preset(names[i]));
    tables[i] = compute_table(built[i].complex, 3, all_theories(), true, 1);
  });
  for (std::size_t i = 0; i < names.size(); ++i) {
    m.built.emplace(names[i], std::move(built[i]));
    m.tables.emplace(names[i], std::move(tables[i]));
  }
  return m;
}

const std::vector<std::string>& main_presets() {
  static const std::vector<std::string> names{"nakamura-cs-case1", "nakamura-cs-case2", "nakamura-cs-case3",
                                              "nakamura-cp-caseA", "nakamura-cp-caseB"};
  return names;
}

void compare_column(Tally& t, const std::string& what, const std::vector<std::size_t>& got,
                    const std::vector<std::size_t>& want) {
  t.check(got == want, [&] { return what + " got " + join(got) + " want " + join(want); });
}

Tally criterion1(const Models& m) {
  Tally t;
  for (const std::string& name : preset_names()) {
    compare_column(t, name + " dR", m.tables.at(name).totals.at(Theory::DeRham), expected(base_of(name)).de_rham);
  }
  return t;
}

Tally criterion2(const Models& m) {
  Tally t;
  for (const char* name : {"nakamura-cs-case1", "nakamura-cs-case2", "nakamura-cs-case3"}) {
    compare_column(t, std::string(name) + " BC", m.tables.at(name).bigraded.at(Theory::BottChern),
                   expected(name).bott_chern);
  }
  return t;
}

Tally criterion3(const Models& m) {
  Tally t;
  for (const std::string& name : main_presets()) {
    compare_column(t, name + " delbar", m.tables.at(name).bigraded.at(Theory::Delbar), expected(name).delbar);
  }
  return t;
}

Tally criterion4(const Models& m) {
  Tally t;
  compare_column(t, "caseA BC vs case1", m.tables.at("nakamura-cp-caseA").bigraded.at(Theory::BottChern),
                 expected("nakamura-cs-case1").bott_chern);
  compare_column(t, "caseB BC", m.tables.at("nakamura-cp-caseB").bigraded.at(Theory::BottChern),
                 expected("nakamura-cp-caseB").bott_chern);
  return t;
}

Tally criterion5(const Models& m) {
  Tally t;
  for (const std::string& name : main_presets()) {
    const auto& by = m.tables.at(name).ddbar->by_degree;
    std::vector<std::int64_t> got;
    for (int k = 1; k <= 5; ++k) got.push_back(by.count(k) ? by.at(k) : 0);
    const auto& want = expected(name);
    t.check(got == want.ddbar, [&] { return name + " got " + join(got) + " want " + join(want.ddbar); });
    bool lemma = satisfies_ddbar_lemma(m.built.at(name).complex);
    t.check(lemma == want.ddbar_lemma, [&] { return name + " ddbar-lemma verdict"; });
  }
  return t;
}

void laplacian_vs_quotient(Tally& t, const PairedComplex& pc, const std::string& tag) {
  const BigradedComplex& c = pc.base();
  for (const Bidegree& b : antidiagonal_order(pc.n())) {
    const std::pair<LaplacianKind, std::size_t> expect[] = {
        {LaplacianKind::DeRham, h_deRham(c, b.total()).dimension},
        {LaplacianKind::Del, h_del(c, b.p, b.q).dimension},
        {LaplacianKind::Delbar, h_delbar(c, b.p, b.q).dimension},
        {LaplacianKind::BottChern, h_bott_chern(c, b.p, b.q).dimension},
        {LaplacianKind::Aeppli, h_aeppli(c, b.p, b.q).dimension},
    };
    for (const auto& [kind, dim] : expect) {
      std::size_t got = laplacian_kernel_dim(pc, kind, b.p, b.q);
      t.check(got == dim, [&] {
        return tag + " " + laplacian_key(kind) + " at " + to_string(b) + ": " + std::to_string(got) + " vs " +
               std::to_string(dim);
      });
    }
  }
}

Tally criterion6(const Models& m, std::uint64_t seed, unsigned threads) {
  Tally t;
  for (const std::string& name : preset_names()) laplacian_vs_quotient(t, m.built.at(name).paired, name);
  const std::size_t count = 100;
  std::vector<Tally> per(count);
  parallel_for(count, threads, [&](std::size_t i) {
    auto inst = synthetic::random_paired_instance(seed + i);
    laplacian_vs_quotient(per[i], inst.ambient, "seed " + std::to_string(seed + i));
  });
  for (std::size_t i = 0; i < count; ++i) t.check(per[i].pass(), [&] { return per[i].detail(); });
  t.note(std::to_string(preset_names().size()) + " presets, " + std::to_string(count) + " random paired complexes");
  return t;
}

void duality(Tally& t, const PairedComplex& pc, const std::string& tag) {
  auto mismatches = star_duality_check(pc);
  t.check(mismatches.empty(), [&] { return tag + " star duality at " + to_string(mismatches.front().at); });
  const BigradedComplex& c = pc.base();
  const int n = pc.n();
  for (int p = 0; p <= n; ++p) {
    for (int q = 0; q <= n; ++q) {
      std::size_t bc = h_bott_chern(c, p, q).dimension;
      std::size_t a = h_aeppli(c, n - p, n - q).dimension;
      t.check(bc == a, [&] { return tag + " h_BC" + to_string({p, q}) + " != h_A" + to_string({n - p, n - q}); });
    }
  }
}

Tally criterion7(const Models& m, std::uint64_t seed, unsigned threads) {
  Tally t;
  for (const std::string& name : preset_names()) duality(t, m.built.at(name).paired, name);
  const std::size_t count = 100;
  std::vector<Tally> per(count);
  parallel_for(count, threads, [&](std::size_t i) {
    duality(per[i], synthetic::random_paired_instance(seed + i).ambient, "seed " + std::to_string(seed + i));
  });
  for (std::size_t i = 0; i < count; ++i) t.check(per[i].pass(), [&] { return per[i].detail(); });
  return t;
}

Tally criterion8(std::uint64_t seed, unsigned threads) {
  Tally t;
  // Surjectivity under the three hypotheses.
  const std::size_t pool = 400;
  std::vector<int> hyp(pool, 0), surj_fail(pool, 0), cols(pool, 0), tot_fail(pool, 0);
  // hyp[i] counts bidegrees of instance i meeting all three hypotheses.
  parallel_for(pool, threads, [&](std::size_t i) {
    auto inst = synthetic::random_transfer_instance(seed + i);
    const ComplexMap& m = inst.inclusion;
    bool r = rows_quasi_iso(m), c = cols_quasi_iso(m);
    if (c) {
      cols[i] = 1;
      tot_fail[i] = !total_cohomology_bijective(m);
    }
    if (!r || !c) return;
    for (const Bidegree& b : inst.ambient.support()) {
      if (!condition3_surjective(m, b.p, b.q)) continue;
      ++hyp[i];
      if (!induced_bc_map(m, b.p, b.q).surjective) ++surj_fail[i];
    }
  });
  int hyp_total = 0, cols_total = 0;
  for (std::size_t i = 0; i < pool; ++i) {
    hyp_total += hyp[i] > 0;
    cols_total += cols[i];
    t.check(surj_fail[i] == 0, [&] { return "surjectivity fails for seed " + std::to_string(seed + i); });
    t.check(tot_fail[i] == 0, [&] { return "total cohomology not bijective for seed " + std::to_string(seed + i); });
  }
  t.check(hyp_total >= 100, [&] { return "only " + std::to_string(hyp_total) + " surjectivity instances"; });
  t.check(cols_total >= 100, [&] { return "only " + std::to_string(cols_total) + " column quasi-iso instances"; });

  // Injectivity on star-closed paired sub-complexes.
  const std::size_t paired = 100;
  std::vector<int> inj_fail(paired, 0);
  parallel_for(paired, threads, [&](std::size_t i) {
    auto inst = synthetic::random_paired_instance(seed + i);
    if (!check_map(inst.inclusion).empty() || !check_pd_axioms(inst.sub).empty()) {
      inj_fail[i] = -1;
      return;
    }
    for (const Bidegree& b : antidiagonal_order(3)) {
      if (!induced_bc_map(inst.inclusion, b.p, b.q).injective) ++inj_fail[i];
    }
  });
  for (std::size_t i = 0; i < paired; ++i) {
    t.check(inj_fail[i] == 0, [&] {
      return (inj_fail[i] < 0 ? "invalid paired instance, seed " : "injectivity fails for paired seed ") +
             std::to_string(seed + i);
    });
  }
  t.note(std::to_string(hyp_total) + " surjectivity instances, " + std::to_string(paired) +
         " injectivity instances, " + std::to_string(cols_total) + " total-cohomology instances");
  return t;
}

Tally criterion9() {
  Tally t;
  for (const auto& table : golden::generator_tables()) {
    BuiltModel bm = build(preset(table.preset));
    std::size_t listed = 0;
    for (const Bidegree& b : antidiagonal_order(3)) {
      std::set<std::string> want, got;
      if (auto it = table.labels.find(b); it != table.labels.end()) want.insert(it->second.begin(), it->second.end());
      if (auto it = bm.generators.find(b); it != bm.generators.end()) {
        for (const Generator& g : it->second) got.insert(g.label);
      }
      listed += want.size();
      t.check(got == want, [&] {
        std::string s = table.preset + " " + to_string(b) + " missing:";
        for (const auto& x : want) {
          if (!got.count(x)) s += " " + x;
        }
        s += " extra:";
        for (const auto& x : got) {
          if (!want.count(x)) s += " " + x;
        }
        return s;
      });
    }
    t.check(bm.generator_count() == listed, [&] { return table.preset + " generators outside [0,3]^2"; });
  }
  return t;
}

Tally criterion10(std::uint64_t seed) {
  Tally t;
  int done = 0;
  for (std::uint64_t s = seed; s < seed + 1000 && done < 50; ++s) {
    auto inst = synthetic::random_transfer_instance(s);
    const ComplexMap& m = inst.inclusion;
    if (!cols_quasi_iso(m)) continue;
    std::mt19937_64 rng(s);
    std::uniform_int_distribution<int> coef(-2, 2);
    auto random_vector = [&](std::size_t n) {
      Vector v(n);
      for (auto& x : v) x = Scalar(mpq_class(coef(rng)), mpq_class(coef(rng)));
      return v;
    };
    const BigradedComplex& a = inst.ambient;
    for (const Bidegree& b : a.support()) {
      Vector phi = m.block(b) * random_vector(inst.sub.dim(b));
      phi = phi + a.delbar({b.p, b.q - 1}) * random_vector(a.dim({b.p, b.q - 1}));
      Subspace closed = kernel(a.delbar(b));
      if (closed.dim() > 0) phi = phi + closed.basis() * random_vector(closed.dim());
      DelbarSplit sp = split_modulo_delbar(m, phi, b.p, b.q);
      Vector rebuilt = m.block(b) * sp.phi_tilde + a.delbar({b.p, b.q - 1}) * sp.phi_hat;
      t.check(rebuilt == phi, [&] { return "seed " + std::to_string(s) + " at " + to_string(b); });
      ++done;
      break;
    }
  }
  t.check(done == 50, [&] { return "only " + std::to_string(done) + " admissible inputs"; });
  return t;
}

}  // namespace

std::vector<CriterionResult> run_acceptance(std::uint64_t seed, unsigned threads) {
  std::vector<CriterionResult> out;
  Models models;
  auto run = [&](int id, const char* title, const std::function<Tally()>& fn) {
    auto start = std::chrono::steady_clock::now();
    CriterionResult r{id, title, false, "", 0};
    try {
      Tally t = fn();
      r.pass = t.pass();
      r.detail = t.detail();
    } catch (const std::exception& e) {
      r.pass = false;
      r.detail = std::string("exception: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    out.push_back(r);
  };
  std::string build_error;
  try {
    models = build_all(threads);
  } catch (const std::exception& e) {
    build_error = e.what();
  }
  auto with_models = [&](const std::function<Tally(const Models&)>& fn) {
    return [&, fn]() -> Tally {
      if (!build_error.empty()) throw std::runtime_error("presets failed to build: " + build_error);
      return fn(models);
    };
  };
  run(1, "Golden de Rham", with_models(criterion1));
  run(2, "Golden Bott-Chern tables", with_models(criterion2));
  run(3, "Golden Dolbeault tables", with_models(criterion3));
  run(4, "Golden complex-parallelizable BC", with_models(criterion4));
  run(5, "ddbar-degrees", with_models(criterion5));
  run(6, "Laplacian/quotient oracle equivalence",
      with_models([&](const Models& m) { return criterion6(m, seed, threads); }));
  run(7, "Star duality", with_models([&](const Models& m) { return criterion7(m, seed, threads); }));
  run(8, "Transfer theorems", [&] { return criterion8(seed, threads); });
  run(9, "Rule/table agreement", criterion9);
  run(10, "split_modulo_delbar", [&] { return criterion10(seed); });
  return out;
}

std::string format_acceptance(const std::vector<CriterionResult>& results) {
  std::ostringstream out;
  for (const CriterionResult& r : results) {
    out << (r.pass ? "PASS" : "FAIL") << " " << r.id << " " << r.title << " (" << r.detail << "; "
        << std::fixed << std::setprecision(2) << r.seconds << "s)\n";
  }
  return out.str();
}

}  // namespace bcforge
