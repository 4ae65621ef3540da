#include "bcforge/report.hpp"

#include <iomanip>
#include <sstream>

#include <json.hpp>

namespace bcforge {

namespace {

using ojson = nlohmann::ordered_json;

constexpr const char* kSchema = "report-v1";

std::vector<std::string> tot_labels(const BigradedComplex& c, int k) {
  std::vector<std::string> out;
  for (const auto& s : c.tot_layout(k)) {
    for (const auto& l : c.labels(s.bidegree)) out.push_back(l);
  }
  return out;
}

RepresentativeEntry representatives_of(const BigradedComplex& c, Theory t, Bidegree b, bool total) {
  CohomologyResult r;
  switch (t) {
    case Theory::DeRham: r = h_deRham(c, b.total()); break;
    case Theory::Del: r = h_del(c, b.p, b.q); break;
    case Theory::Delbar: r = h_delbar(c, b.p, b.q); break;
    case Theory::BottChern: r = h_bott_chern(c, b.p, b.q); break;
    case Theory::Aeppli: r = h_aeppli(c, b.p, b.q); break;
    default: break;
  }
  RepresentativeEntry e{t, b, total, {}};
  const std::vector<std::string> labels = total ? tot_labels(c, b.total()) : c.labels(b);
  const Matrix& basis = r.representatives.basis();
  for (std::size_t j = 0; j < r.representatives.dim(); ++j) {
    std::vector<std::pair<std::string, std::string>> v;
    for (std::size_t i = 0; i < basis.rows(); ++i) {
      if (!basis(i, j).is_zero()) v.emplace_back(labels.at(i), basis(i, j).to_string());
    }
    e.vectors.push_back(std::move(v));
  }
  return e;
}

ojson bidegree_json(Bidegree b) { return ojson::array({b.p, b.q}); }

Bidegree bidegree_from(const ojson& j) {
  if (!j.is_array() || j.size() != 2) throw std::invalid_argument("report: bidegree must be [p, q]");
  return {j[0].get<int>(), j[1].get<int>()};
}

Theory theory_from(const ojson& j) {
  auto t = parse_theory(j.get<std::string>());
  if (!t) throw std::invalid_argument("report: unknown theory " + j.get<std::string>());
  return *t;
}

std::string position(const InducedEntry& e) {
  return e.total ? "k=" + std::to_string(e.at.total()) : to_string(e.at);
}

std::string pad(const std::string& s, std::size_t w) { return s.size() >= w ? s + " " : s + std::string(w - s.size(), ' '); }

}  // namespace

bool Report::ddbar_satisfied() const {
  if (!ddbar) return false;
  for (const auto& [k, v] : *ddbar) {
    if (v != 0) return false;
  }
  return true;
}

std::vector<InvariantResult> model_invariants(const BuiltModel& bm) {
  std::vector<InvariantResult> out;
  InvariantResult complex{"validate", true, {}};
  for (const Violation& v : validate(bm.complex)) complex.details.push_back(v.to_string());
  complex.pass = complex.details.empty();
  InvariantResult pd{"pd-axioms", true, {}};
  for (const Violation& v : check_pd_axioms(bm.paired)) pd.details.push_back(v.to_string());
  pd.pass = pd.details.empty();
  InvariantResult star{"star-closure", star_closure_check(bm), {}};
  if (!star.pass) star.details.push_back("some generator has no partner of opposite weight and complementary monomial");
  out.push_back(std::move(complex));
  out.push_back(std::move(pd));
  out.push_back(std::move(star));
  return out;
}

Report table_report(const BuiltModel& bm, const std::vector<Theory>& theories, bool with_ddbar,
                    bool with_representatives, unsigned threads) {
  Report r;
  r.command = "table";
  r.model = bm.spec.name;
  r.n = bm.spec.n;
  r.invariants = model_invariants(bm);
  r.table = compute_table(bm.complex, bm.spec.n, theories, with_ddbar, threads);
  if (with_ddbar) r.ddbar = r.table->ddbar->by_degree;
  if (with_representatives) {
    for (Theory t : theories) {
      if (t == Theory::E1 || t == Theory::Pure) continue;
      if (t == Theory::DeRham) {
        for (int k = 0; k <= 2 * bm.spec.n; ++k) r.representatives.push_back(representatives_of(bm.complex, t, {k, 0}, true));
        continue;
      }
      for (const Bidegree& b : r.table->bidegrees) r.representatives.push_back(representatives_of(bm.complex, t, b, false));
    }
  }
  return r;
}

Report ddbar_report(const BuiltModel& bm, unsigned threads) {
  Report r = table_report(bm, {}, true, false, threads);
  r.command = "ddbar";
  r.table.reset();
  return r;
}

Report compare_report(const BuiltModel& sub, const BuiltModel& ambient, const std::vector<Theory>& theories) {
  Report r;
  r.command = "compare";
  r.model = sub.spec.name;
  r.ambient = ambient.spec.name;
  r.n = ambient.spec.n;
  ComplexMap inc = subcomplex_inclusion(sub, ambient);
  InvariantResult chain{"chain-map", true, {}};
  for (const Violation& v : check_map(inc)) chain.details.push_back(v.to_string());
  chain.pass = chain.details.empty();
  r.invariants.push_back(chain);
  for (Theory t : theories) {
    std::vector<std::pair<Bidegree, bool>> positions;
    if (t == Theory::DeRham) {
      for (int k = 0; k <= 2 * r.n; ++k) positions.push_back({{k, 0}, true});
    } else {
      for (const Bidegree& b : antidiagonal_order(r.n)) positions.push_back({b, false});
    }
    for (const auto& [b, total] : positions) {
      InducedMap m = induced_map(inc, t, b);
      r.induced.push_back({t, b, total, m.source_dim, m.target_dim, m.injective, m.surjective});
    }
  }
  return r;
}

std::optional<Format> parse_format(const std::string& key) {
  if (key == "text") return Format::Text;
  if (key == "csv") return Format::Csv;
  if (key == "json") return Format::Json;
  return std::nullopt;
}

std::string render(const Report& r, Format f) {
  switch (f) {
    case Format::Text: return render_text(r);
    case Format::Csv: return render_csv(r);
    case Format::Json: return render_json(r);
  }
  return render_text(r);
}

std::string render_json(const Report& r) {
  ojson j;
  j["schema"] = kSchema;
  j["command"] = r.command;
  j["model"] = r.model;
  if (r.command == "compare") j["ambient"] = r.ambient;
  j["n"] = r.n;
  if (r.table) {
    const CohomologyTable& t = *r.table;
    ojson theories = ojson::array();
    for (Theory th : t.theories) theories.push_back(theory_key(th));
    j["theories"] = theories;
    ojson bids = ojson::array();
    for (const Bidegree& b : t.bidegrees) bids.push_back(bidegree_json(b));
    j["bidegrees"] = bids;
    ojson bigraded = ojson::object();
    ojson totals = ojson::object();
    for (Theory th : t.theories) {
      if (is_bigraded(th)) bigraded[theory_key(th)] = t.bigraded.at(th);
      totals[theory_key(th)] = t.totals.at(th);
    }
    j["bigraded"] = bigraded;
    j["totals"] = totals;
  }
  if (r.ddbar) {
    ojson d = ojson::array();
    for (const auto& [k, v] : *r.ddbar) d.push_back(ojson::array({k, v}));
    j["ddbar"] = {{"degrees", d}, {"verdict", r.ddbar_satisfied() ? "SATISFIED" : "VIOLATED"}};
  }
  if (r.command == "compare") {
    ojson ind = ojson::array();
    for (const InducedEntry& e : r.induced) {
      ojson x;
      x["theory"] = theory_key(e.theory);
      if (e.total) {
        x["degree"] = e.at.total();
      } else {
        x["bidegree"] = bidegree_json(e.at);
      }
      x["source_dim"] = e.source_dim;
      x["target_dim"] = e.target_dim;
      x["injective"] = e.injective;
      x["surjective"] = e.surjective;
      x["bijective"] = e.bijective();
      ind.push_back(x);
    }
    j["induced"] = ind;
  }
  ojson inv = ojson::array();
  for (const InvariantResult& i : r.invariants) inv.push_back({{"suite", i.suite}, {"pass", i.pass}, {"details", i.details}});
  j["invariants"] = inv;
  if (!r.representatives.empty()) {
    ojson reps = ojson::array();
    for (const RepresentativeEntry& e : r.representatives) {
      ojson x;
      x["theory"] = theory_key(e.theory);
      if (e.total) {
        x["degree"] = e.at.total();
      } else {
        x["bidegree"] = bidegree_json(e.at);
      }
      ojson vecs = ojson::array();
      for (const auto& v : e.vectors) {
        ojson terms = ojson::array();
        for (const auto& [label, coef] : v) terms.push_back(ojson::array({label, coef}));
        vecs.push_back(terms);
      }
      x["vectors"] = vecs;
      reps.push_back(x);
    }
    j["representatives"] = reps;
  }
  return j.dump(2) + "\n";
}

Report report_from_json(const std::string& text) {
  ojson j;
  try {
    j = ojson::parse(text);
  } catch (const ojson::parse_error& e) {
    throw std::invalid_argument(std::string("report: ") + e.what());
  }
  if (!j.is_object() || j.value("schema", "") != kSchema) throw std::invalid_argument("report: not a report-v1 document");
  try {
    Report r;
    r.command = j.at("command").get<std::string>();
    r.model = j.at("model").get<std::string>();
    if (j.contains("ambient")) r.ambient = j.at("ambient").get<std::string>();
    r.n = j.at("n").get<int>();
    if (j.contains("theories")) {
      CohomologyTable t;
      t.n = r.n;
      for (const auto& th : j.at("theories")) t.theories.push_back(theory_from(th));
      for (const auto& b : j.at("bidegrees")) t.bidegrees.push_back(bidegree_from(b));
      for (auto it = j.at("bigraded").begin(); it != j.at("bigraded").end(); ++it) {
        t.bigraded[theory_from(it.key())] = it.value().get<std::vector<std::size_t>>();
      }
      for (auto it = j.at("totals").begin(); it != j.at("totals").end(); ++it) {
        t.totals[theory_from(it.key())] = it.value().get<std::vector<std::size_t>>();
      }
      r.table = std::move(t);
    }
    if (j.contains("ddbar")) {
      std::map<int, std::int64_t> d;
      for (const auto& kv : j.at("ddbar").at("degrees")) d[kv.at(0).get<int>()] = kv.at(1).get<std::int64_t>();
      r.ddbar = std::move(d);
      if (r.table) {
        DdbarDegrees dd;
        dd.by_degree = *r.ddbar;
        r.table->ddbar = dd;
      }
    }
    if (j.contains("induced")) {
      for (const auto& x : j.at("induced")) {
        InducedEntry e;
        e.theory = theory_from(x.at("theory"));
        e.total = x.contains("degree");
        e.at = e.total ? Bidegree{x.at("degree").get<int>(), 0} : bidegree_from(x.at("bidegree"));
        e.source_dim = x.at("source_dim").get<std::size_t>();
        e.target_dim = x.at("target_dim").get<std::size_t>();
        e.injective = x.at("injective").get<bool>();
        e.surjective = x.at("surjective").get<bool>();
        r.induced.push_back(e);
      }
    }
    for (const auto& x : j.at("invariants")) {
      r.invariants.push_back(
          {x.at("suite").get<std::string>(), x.at("pass").get<bool>(), x.at("details").get<std::vector<std::string>>()});
    }
    if (j.contains("representatives")) {
      for (const auto& x : j.at("representatives")) {
        RepresentativeEntry e;
        e.theory = theory_from(x.at("theory"));
        e.total = x.contains("degree");
        e.at = e.total ? Bidegree{x.at("degree").get<int>(), 0} : bidegree_from(x.at("bidegree"));
        for (const auto& v : x.at("vectors")) {
          std::vector<std::pair<std::string, std::string>> terms;
          for (const auto& t : v) terms.emplace_back(t.at(0).get<std::string>(), t.at(1).get<std::string>());
          e.vectors.push_back(std::move(terms));
        }
        r.representatives.push_back(std::move(e));
      }
    }
    return r;
  } catch (const ojson::exception& e) {
    throw std::invalid_argument(std::string("report: ") + e.what());
  }
}

std::string render_csv(const Report& r) {
  std::ostringstream out;
  if (r.command == "compare") {
    out << "theory,p,q,k,source_dim,target_dim,injective,surjective,bijective\n";
    for (const InducedEntry& e : r.induced) {
      out << theory_key(e.theory) << ",";
      if (e.total) {
        out << ",," << e.at.total();
      } else {
        out << e.at.p << "," << e.at.q << ",";
      }
      out << "," << e.source_dim << "," << e.target_dim << "," << e.injective << "," << e.surjective << ","
          << e.bijective() << "\n";
    }
  } else {
    out << "section,p,q,k,theory,value\n";
    if (r.table) {
      const CohomologyTable& t = *r.table;
      for (std::size_t i = 0; i < t.bidegrees.size(); ++i) {
        for (Theory th : t.theories) {
          if (!is_bigraded(th)) continue;
          out << "bigraded," << t.bidegrees[i].p << "," << t.bidegrees[i].q << ",," << theory_key(th) << ","
              << t.bigraded.at(th)[i] << "\n";
        }
      }
      for (int k = 0; k <= 2 * t.n; ++k) {
        for (Theory th : t.theories) out << "total,,," << k << "," << theory_key(th) << "," << t.totals.at(th)[k] << "\n";
      }
    }
    if (r.ddbar) {
      for (const auto& [k, v] : *r.ddbar) out << "ddbar,,," << k << ",," << v << "\n";
    }
  }
  for (const InvariantResult& i : r.invariants) out << "invariant,,,," << i.suite << "," << i.pass << "\n";
  return out.str();
}

std::string render_text(const Report& r) {
  std::ostringstream out;
  out << "model: " << r.model;
  if (r.command == "compare") out << " -> " << r.ambient;
  out << " (n = " << r.n << ")\n";
  if (r.table) {
    const CohomologyTable& t = *r.table;
    std::vector<Theory> bigraded;
    for (Theory th : t.theories) {
      if (is_bigraded(th)) bigraded.push_back(th);
    }
    if (!bigraded.empty()) {
      out << "\n" << pad("(p,q)", 8);
      for (Theory th : bigraded) out << pad(theory_key(th), 8);
      out << "\n";
      int last = -1;
      for (std::size_t i = 0; i < t.bidegrees.size(); ++i) {
        if (last >= 0 && t.bidegrees[i].total() != last) out << "\n";
        last = t.bidegrees[i].total();
        out << pad(to_string(t.bidegrees[i]), 8);
        for (Theory th : bigraded) out << pad(std::to_string(t.bigraded.at(th)[i]), 8);
        out << "\n";
      }
    }
    if (!t.theories.empty()) {
      out << "\n" << pad("k", 8);
      for (Theory th : t.theories) out << pad(theory_key(th), 8);
      out << "\n";
      for (int k = 0; k <= 2 * t.n; ++k) {
        out << pad(std::to_string(k), 8);
        for (Theory th : t.theories) out << pad(std::to_string(t.totals.at(th)[k]), 8);
        out << "\n";
      }
    }
  }
  if (r.ddbar) {
    out << "\n" << pad("k", 8) << "ddbar\n";
    for (const auto& [k, v] : *r.ddbar) out << pad(std::to_string(k), 8) << v << "\n";
    out << "verdict: " << (r.ddbar_satisfied() ? "SATISFIED" : "VIOLATED") << "\n";
  }
  if (r.command == "compare") {
    out << "\n" << pad("theory", 8) << pad("at", 8) << pad("source", 8) << pad("target", 8) << pad("injective", 11)
        << pad("surjective", 11) << "bijective\n";
    for (const InducedEntry& e : r.induced) {
      auto yn = [](bool b) { return std::string(b ? "yes" : "no"); };
      out << pad(theory_key(e.theory), 8) << pad(position(e), 8) << pad(std::to_string(e.source_dim), 8)
          << pad(std::to_string(e.target_dim), 8) << pad(yn(e.injective), 11) << pad(yn(e.surjective), 11)
          << yn(e.bijective()) << "\n";
    }
  }
  if (!r.representatives.empty()) {
    out << "\nrepresentatives\n";
    for (const RepresentativeEntry& e : r.representatives) {
      for (const auto& v : e.vectors) {
        out << "  " << theory_key(e.theory) << " "
            << (e.total ? "k=" + std::to_string(e.at.total()) : to_string(e.at)) << ": ";
        for (std::size_t i = 0; i < v.size(); ++i) out << (i ? " + " : "") << "(" << v[i].second << ")" << v[i].first;
        out << "\n";
      }
    }
  }
  out << "\n";
  for (const InvariantResult& i : r.invariants) {
    out << (i.pass ? "PASS " : "FAIL ") << i.suite << "\n";
    for (const auto& d : i.details) out << "  " << d << "\n";
  }
  return out.str();
}

}  // namespace bcforge
