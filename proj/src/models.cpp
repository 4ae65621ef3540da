#include "bcforge/models.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <set>
#include <sstream>

namespace bcforge {

namespace {

constexpr int kMaxN = 8;

struct Layout {
  int n = 0;
  std::map<std::string, int> slot_of;
  std::vector<std::string> symbol_of_slot;
  std::vector<int> coord_slot;
  std::vector<std::size_t> coord_partner;
  /// d(form at slot) as (coefficient, slot a, slot b).
  std::vector<std::vector<std::tuple<Scalar, int, int>>> d;
  std::map<std::string, Weight> characters;
};

Bidegree mask_bidegree(std::uint32_t mask, int n) {
  const std::uint32_t low = (1u << n) - 1;
  return {std::popcount(mask & low), std::popcount(mask >> n)};
}

std::vector<int> slots(std::uint32_t mask) {
  std::vector<int> out;
  for (int s = 0; mask >> s; ++s) {
    if (mask >> s & 1u) out.push_back(s);
  }
  return out;
}

/// Sign of sorting `seq` and the resulting monomial; sign 0 on a repeated slot.
std::pair<int, std::uint32_t> normalize(const std::vector<int>& seq) {
  int sign = 1;
  std::uint32_t mask = 0;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (mask >> seq[i] & 1u) return {0, 0};
    mask |= 1u << seq[i];
    for (std::size_t j = i + 1; j < seq.size(); ++j) {
      if (seq[i] > seq[j]) sign = -sign;
    }
  }
  return {sign, mask};
}

std::uint32_t swap_mask(std::uint32_t mask, int n) {
  const std::uint32_t low = (1u << n) - 1;
  return ((mask & low) << n) | (mask >> n);
}

Weight zero_weight(std::size_t k) { return Weight(k, Scalar(0)); }

Weight operator-(Weight a) {
  for (auto& s : a) s = -s;
  return a;
}

Weight conj_swap(const Layout& l, const Weight& w) {
  Weight out(w.size());
  for (std::size_t c = 0; c < w.size(); ++c) out[l.coord_partner[c]] = w[c].conj();
  return out;
}

std::string weight_string(const Weight& w) {
  std::string s = "(";
  for (std::size_t i = 0; i < w.size(); ++i) s += (i ? ", " : "") + w[i].to_string();
  return s + ")";
}

std::string coordinate_name(const std::string& symbol) {
  if (symbol.size() > 1 && symbol[0] == 'd') return symbol.substr(1);
  return symbol;
}

std::string coefficient_prefix(const Scalar& c, bool first) {
  if (!c.is_real()) return std::string(first ? "" : "+") + "(" + c.to_string() + ")";
  mpq_class r = c.re();
  std::string sign = sgn(r) < 0 ? "-" : (first ? "" : "+");
  mpq_class a = abs(r);
  if (a == 1) return sign;
  if (a.get_den() == 1) return sign + a.get_str();
  return sign + "(" + a.get_str() + ")";
}

Layout make_layout(const ModelSpec& spec) {
  Layout l;
  l.n = spec.n;
  const int n = spec.n;
  if (n < 0 || n > kMaxN) throw ModelError("n must lie in [0, " + std::to_string(kMaxN) + "]");
  if (static_cast<int>(spec.oneforms.size()) != 2 * n) {
    throw ModelError("expected " + std::to_string(2 * n) + " one-forms, got " +
                     std::to_string(spec.oneforms.size()));
  }
  std::map<std::string, const OneForm*> by_symbol;
  std::vector<std::string> hol;
  for (const OneForm& f : spec.oneforms) {
    if (!by_symbol.emplace(f.symbol, &f).second) throw ModelError("duplicate one-form " + f.symbol);
    if (f.type == Bidegree{1, 0}) {
      hol.push_back(f.symbol);
    } else if (f.type != Bidegree{0, 1}) {
      throw ModelError("one-form " + f.symbol + " must have type (1,0) or (0,1)");
    }
  }
  if (static_cast<int>(hol.size()) != n) throw ModelError("expected n one-forms of type (1,0)");
  l.symbol_of_slot.resize(2 * n);
  for (int h = 0; h < n; ++h) {
    const OneForm& f = *by_symbol.at(hol[h]);
    auto it = by_symbol.find(f.partner);
    if (it == by_symbol.end()) throw ModelError("partner " + f.partner + " of " + f.symbol + " is not a one-form");
    const OneForm& g = *it->second;
    if (g.type != Bidegree{0, 1} || g.partner != f.symbol) {
      throw ModelError("partner of " + f.symbol + " must be a (0,1) form partnered back with it");
    }
    l.slot_of[f.symbol] = h;
    l.slot_of[g.symbol] = n + h;
    l.symbol_of_slot[h] = f.symbol;
    l.symbol_of_slot[n + h] = g.symbol;
  }
  if (static_cast<int>(l.slot_of.size()) != 2 * n) throw ModelError("conjugate partners must be an involution");

  std::map<std::string, std::size_t> coord_index;
  for (const std::string& c : spec.coordinates) {
    if (!l.slot_of.count(c)) throw ModelError("coordinate " + c + " is not a one-form");
    if (!coord_index.emplace(c, coord_index.size()).second) throw ModelError("duplicate coordinate " + c);
    l.coord_slot.push_back(l.slot_of.at(c));
  }
  for (const std::string& c : spec.coordinates) {
    const std::string& partner = by_symbol.at(c)->partner;
    if (!coord_index.count(partner)) throw ModelError("partner of coordinate " + c + " must be a coordinate");
    l.coord_partner.push_back(coord_index.at(partner));
  }

  l.d.resize(2 * n);
  for (const OneForm& f : spec.oneforms) {
    const int s = l.slot_of.at(f.symbol);
    if (coord_index.count(f.symbol) && !f.d.empty()) {
      throw ModelError("coordinate differential " + f.symbol + " must be closed");
    }
    for (const StructureTerm& t : f.d) {
      if (!l.slot_of.count(t.a) || !l.slot_of.count(t.b)) {
        throw ModelError("structure expression of " + f.symbol + " uses an unknown symbol");
      }
      const int a = l.slot_of.at(t.a), b = l.slot_of.at(t.b);
      Bidegree ta = mask_bidegree(1u << a, n), tb = mask_bidegree(1u << b, n);
      Bidegree delta{ta.p + tb.p - f.type.p, ta.q + tb.q - f.type.q};
      if (delta != Bidegree{1, 0} && delta != Bidegree{0, 1}) {
        throw ModelError("d(" + f.symbol + ") has a term " + t.a + "^" + t.b + " of the wrong type");
      }
      if (!t.coefficient.is_zero() && a != b) l.d[s].emplace_back(t.coefficient, a, b);
    }
  }

  const std::size_t k = spec.coordinates.size();
  auto check_weight = [&](const Weight& w, const std::string& what) {
    if (w.size() != k) throw ModelError(what + " has " + std::to_string(w.size()) + " entries, expected " +
                                        std::to_string(k));
  };
  for (const NamedCharacter& c : spec.characters) {
    check_weight(c.weight, "character " + c.name);
    if (!l.characters.emplace(c.name, c.weight).second) throw ModelError("duplicate character " + c.name);
  }
  std::set<Weight> trivial;
  for (const Weight& w : spec.trivial_weights) {
    check_weight(w, "trivial weight");
    trivial.insert(w);
  }
  for (const Weight& w : trivial) {
    if (!trivial.count(-w)) throw ModelError("trivial_weights is not closed under negation at " + weight_string(w));
    if (!trivial.count(conj_swap(l, w))) {
      throw ModelError("trivial_weights is not closed under conjugation at " + weight_string(w));
    }
  }
  for (const GeneratorSpec& g : spec.generators) {
    check_weight(g.weight, "generator weight");
    for (const auto* idx : {&g.hol, &g.antihol}) {
      std::set<int> seen;
      for (int i : *idx) {
        if (i < 1 || i > n || !seen.insert(i).second) throw ModelError("generator index out of range or repeated");
      }
    }
  }
  return l;
}

struct RuleWeights {
  /// Per rule branch, the weight of a monomial if the rule admits it.
  std::vector<std::function<std::optional<Weight>(std::uint32_t)>> admit;
  /// Per rule branch, the weight the rule assigns regardless of admission.
  std::vector<std::function<Weight(std::uint32_t)>> weight;
};

class RuleData {
 public:
  RuleData(const ModelSpec& spec, const Layout& l) : spec_(spec), l_(l) {
    for (const Weight& w : spec.trivial_weights) trivial_.insert(w);
  }

  Weight character(const std::map<std::string, std::string>& m, const std::string& which, int h,
                   bool required) const {
    const std::string& sym = l_.symbol_of_slot[h];
    auto it = m.find(sym);
    if (it == m.end()) {
      if (required) throw ModelError("rule data missing: " + which + " for " + sym);
      return zero_weight(spec_.coordinates.size());
    }
    auto c = l_.characters.find(it->second);
    if (c == l_.characters.end()) throw ModelError("unknown character " + it->second + " in " + which);
    return c->second;
  }

  bool has_alpha(int h) const { return spec_.alpha.count(l_.symbol_of_slot[h]) != 0; }
  bool trivial(const Weight& w) const { return trivial_.count(w) != 0; }

 private:
  const ModelSpec& spec_;
  const Layout& l_;
  std::set<Weight> trivial_;
};

RuleWeights rule_weights(const ModelSpec& spec, const Layout& l) {
  const int n = l.n;
  const std::size_t k = spec.coordinates.size();
  auto data = std::make_shared<RuleData>(spec, l);
  for (const auto& m : {spec.alpha, spec.beta, spec.gamma}) {
    for (const auto& [sym, name] : m) {
      if (!l.slot_of.count(sym) || l.slot_of.at(sym) >= n) {
        throw ModelError("rule data key " + sym + " is not a (1,0) form");
      }
      if (!l.characters.count(name)) throw ModelError("unknown character " + name);
    }
  }
  std::vector<Weight> alpha(n), alpha_bar(n);
  for (int h = 0; h < n; ++h) {
    alpha[h] = data->character(spec.alpha, "alpha", h, false);
    alpha_bar[h] = conj_swap(l, alpha[h]);
  }
  RuleWeights out;
  auto conjugated = [&l, n](std::function<Weight(std::uint32_t)> f) {
    return [&l, n, f](std::uint32_t mask) { return conj_swap(l, f(swap_mask(mask, n))); };
  };
  auto conjugated_admit = [&l, n](std::function<std::optional<Weight>(std::uint32_t)> f) {
    return [&l, n, f](std::uint32_t mask) -> std::optional<Weight> {
      auto w = f(swap_mask(mask, n));
      if (!w) return std::nullopt;
      return conj_swap(l, *w);
    };
  };

  switch (spec.rule) {
    case Rule::Explicit:
      break;
    case Rule::AGamma: {
      auto weight = [k](std::uint32_t) { return zero_weight(k); };
      auto admit = [=](std::uint32_t mask) -> std::optional<Weight> {
        Weight s = zero_weight(k);
        for (int h = 0; h < n; ++h) {
          if (mask >> h & 1u) s = s + alpha[h];
          if (mask >> (n + h) & 1u) s = s + alpha_bar[h];
        }
        if (!data->trivial(s)) return std::nullopt;
        return zero_weight(k);
      };
      out.admit.push_back(admit);
      out.weight.push_back(weight);
      break;
    }
    case Rule::BGamma:
    case Rule::CGamma: {
      std::vector<Weight> beta(n), gamma(n);
      std::uint32_t y = 0;
      for (int h = 0; h < n; ++h) {
        if (!data->has_alpha(h)) continue;
        y |= 1u << h;
        beta[h] = data->character(spec.beta, "beta", h, true);
        gamma[h] = data->character(spec.gamma, "gamma", h, true);
      }
      auto weight = [=](std::uint32_t mask) {
        Weight w = zero_weight(k);
        for (int h = 0; h < n; ++h) {
          if (!(y >> h & 1u)) continue;
          if (mask >> h & 1u) w = w + beta[h] - alpha[h];
          if (mask >> (n + h) & 1u) w = w + gamma[h] - alpha_bar[h];
        }
        return w;
      };
      auto admit = [=](std::uint32_t mask) -> std::optional<Weight> {
        Weight s = zero_weight(k);
        for (int h = 0; h < n; ++h) {
          if (!(y >> h & 1u)) continue;
          if (mask >> h & 1u) s = s + beta[h];
          if (mask >> (n + h) & 1u) s = s + gamma[h];
        }
        if (!data->trivial(s)) return std::nullopt;
        return weight(mask);
      };
      out.admit.push_back(admit);
      out.weight.push_back(weight);
      if (spec.rule == Rule::CGamma) {
        out.admit.push_back(conjugated_admit(admit));
        out.weight.push_back(conjugated(weight));
      }
      break;
    }
    case Rule::CPBGamma:
    case Rule::CPCGamma: {
      auto weight = [=](std::uint32_t mask) {
        Weight w = zero_weight(k);
        for (int h = 0; h < n; ++h) {
          if (mask >> h & 1u) w = w - alpha[h];
          if (mask >> (n + h) & 1u) w = w - alpha[h];
        }
        return w;
      };
      auto admit = [=](std::uint32_t mask) -> std::optional<Weight> {
        Weight s = zero_weight(k);
        for (int h = 0; h < n; ++h) {
          if (mask >> (n + h) & 1u) s = s + alpha_bar[h] - alpha[h];
        }
        if (!data->trivial(s)) return std::nullopt;
        return weight(mask);
      };
      out.admit.push_back(admit);
      out.weight.push_back(weight);
      if (spec.rule == Rule::CPCGamma) {
        out.admit.push_back(conjugated_admit(admit));
        out.weight.push_back(conjugated(weight));
      }
      break;
    }
  }
  return out;
}

std::vector<int> hol_indices(std::uint32_t mask, int n) {
  std::vector<int> out;
  for (int h = 0; h < n; ++h) {
    if (mask >> h & 1u) out.push_back(h + 1);
  }
  return out;
}

std::vector<int> antihol_indices(std::uint32_t mask, int n) { return hol_indices(mask >> n, n); }

bool canonical_less(const Generator& a, const Generator& b, int n) {
  if (a.bidegree != b.bidegree) return a.bidegree < b.bidegree;
  auto ha = hol_indices(a.mask, n), hb = hol_indices(b.mask, n);
  if (ha != hb) return ha < hb;
  auto ka = antihol_indices(a.mask, n), kb = antihol_indices(b.mask, n);
  if (ka != kb) return ka < kb;
  return a.weight < b.weight;
}

std::string index_string(const std::vector<int>& idx, int n) {
  std::string s;
  for (std::size_t i = 0; i < idx.size(); ++i) {
    if (n >= 10 && i) s += ".";
    s += std::to_string(idx[i]);
  }
  return s;
}

using Key = std::pair<std::uint32_t, Weight>;

/// Matrix whose nonzero columns mark the generators at `b` on which the
/// failing identity is nonzero; empty when the identity is not recognised.
Matrix failing_operator(const BigradedComplex& c, const Violation& v) {
  const Bidegree b = v.at;
  const Bidegree up{b.p + 1, b.q}, right{b.p, b.q + 1}, sw{b.q, b.p};
  if (v.identity == "del^2 = 0") return c.del(up) * c.del(b);
  if (v.identity == "delbar^2 = 0") return c.delbar(right) * c.delbar(b);
  if (v.identity == "del delbar + delbar del = 0") return c.del(right) * c.delbar(b) + c.delbar(up) * c.del(b);
  if (v.identity == "conj o conj = id") return c.conj(sw) * c.conj(b).conj() - Matrix::identity(c.dim(b));
  if (v.identity == "conj del = delbar conj") return c.conj(up) * c.del(b).conj() - c.delbar(sw) * c.conj(b);
  if (v.identity == "conj delbar = del conj") return c.conj(right) * c.delbar(b).conj() - c.del(sw) * c.conj(b);
  return Matrix();
}

}  // namespace

std::string rule_key(Rule r) {
  switch (r) {
    case Rule::Explicit: return "explicit";
    case Rule::AGamma: return "A-gamma";
    case Rule::BGamma: return "B-gamma";
    case Rule::CGamma: return "C-gamma";
    case Rule::CPBGamma: return "CP-B-gamma";
    case Rule::CPCGamma: return "CP-C-gamma";
  }
  return "explicit";
}

std::optional<Rule> parse_rule(const std::string& key) {
  for (Rule r : {Rule::Explicit, Rule::AGamma, Rule::BGamma, Rule::CGamma, Rule::CPBGamma, Rule::CPCGamma}) {
    if (rule_key(r) == key) return r;
  }
  return std::nullopt;
}

std::string generator_label(const ModelSpec& spec, const Weight& w, std::uint32_t mask) {
  const int n = spec.n;
  std::string weight;
  for (std::size_t c = 0; c < w.size(); ++c) {
    if (w[c].is_zero()) continue;
    weight += coefficient_prefix(w[c], weight.empty()) + coordinate_name(spec.coordinates[c]);
  }
  if (mask == 0) return weight.empty() ? "1" : "e^{" + weight + "}";
  std::string form = "dz_{" + index_string(hol_indices(mask, n), n) + "," +
                     index_string(antihol_indices(mask, n), n) + "}";
  return weight.empty() ? form : "e^{" + weight + "}*" + form;
}

std::vector<Generator> expand_generators(const ModelSpec& spec) {
  Layout l = make_layout(spec);
  const int n = l.n;
  std::map<Key, Generator> unique;
  auto add = [&](const Weight& w, std::uint32_t mask) {
    Generator g{w, mask, mask_bidegree(mask, n), generator_label(spec, w, mask)};
    unique.emplace(Key{mask, w}, std::move(g));
  };
  if (spec.rule == Rule::Explicit) {
    for (const GeneratorSpec& g : spec.generators) {
      std::uint32_t mask = 0;
      for (int h : g.hol) mask |= 1u << (h - 1);
      for (int k : g.antihol) mask |= 1u << (n + k - 1);
      add(g.weight, mask);
    }
  } else {
    RuleWeights rw = rule_weights(spec, l);
    for (std::uint32_t mask = 0; mask < (1u << (2 * n)); ++mask) {
      for (const auto& admit : rw.admit) {
        if (auto w = admit(mask)) add(*w, mask);
      }
    }
  }
  std::vector<Generator> out;
  out.reserve(unique.size());
  for (auto& [key, g] : unique) out.push_back(std::move(g));
  std::sort(out.begin(), out.end(), [n](const Generator& a, const Generator& b) { return canonical_less(a, b, n); });
  return out;
}

std::size_t BuiltModel::generator_count() const {
  std::size_t total = 0;
  for (const auto& [b, gs] : generators) total += gs.size();
  return total;
}

std::optional<std::pair<Bidegree, std::size_t>> BuiltModel::find(const Weight& w, std::uint32_t mask) const {
  auto it = generators.find(mask_bidegree(mask, spec.n));
  if (it == generators.end()) return std::nullopt;
  for (std::size_t i = 0; i < it->second.size(); ++i) {
    if (it->second[i].mask == mask && it->second[i].weight == w) return std::make_pair(it->first, i);
  }
  return std::nullopt;
}

BuiltModel build(const ModelSpec& spec) {
  Layout l = make_layout(spec);
  const int n = l.n;
  BuiltModel bm;
  bm.spec = spec;
  std::map<Key, std::pair<Bidegree, std::size_t>> index;
  for (Generator& g : expand_generators(spec)) {
    auto& list = bm.generators[g.bidegree];
    index[{g.mask, g.weight}] = {g.bidegree, list.size()};
    list.push_back(std::move(g));
  }
  for (const auto& [b, gs] : bm.generators) {
    std::vector<std::string> labels;
    for (const Generator& g : gs) labels.push_back(g.label);
    bm.complex.add_space(b, std::move(labels));
  }

  std::map<Bidegree, Matrix> del, delbar;
  for (const auto& [b, gs] : bm.generators) {
    for (std::size_t col = 0; col < gs.size(); ++col) {
      const Generator& g = gs[col];
      std::map<std::uint32_t, Scalar> image;
      const std::vector<int> m = slots(g.mask);
      for (std::size_t c = 0; c < g.weight.size(); ++c) {
        if (g.weight[c].is_zero()) continue;
        std::vector<int> seq{l.coord_slot[c]};
        seq.insert(seq.end(), m.begin(), m.end());
        auto [sign, mask] = normalize(seq);
        if (sign != 0) image[mask] += g.weight[c] * Scalar(sign);
      }
      for (std::size_t j = 0; j < m.size(); ++j) {
        for (const auto& [coef, a, bslot] : l.d[m[j]]) {
          std::vector<int> seq(m.begin(), m.begin() + j);
          seq.push_back(a);
          seq.push_back(bslot);
          seq.insert(seq.end(), m.begin() + j + 1, m.end());
          auto [sign, mask] = normalize(seq);
          if (sign != 0) image[mask] += coef * Scalar(j % 2 ? -sign : sign);
        }
      }
      for (const auto& [mask, coef] : image) {
        if (coef.is_zero()) continue;
        Bidegree t = mask_bidegree(mask, n);
        auto it = index.find({mask, g.weight});
        if (it == index.end()) {
          throw ModelValidationError("d(" + g.label + ") has a component along " +
                                         generator_label(spec, g.weight, mask) + " outside the model",
                                     {{"closed under d", b, g.label}});
        }
        auto& target = t == Bidegree{b.p + 1, b.q} ? del : delbar;
        Matrix& mat = target[b];
        if (mat.rows() == 0 && mat.cols() == 0) mat = Matrix(bm.complex.dim(t), gs.size());
        mat(it->second.second, col) += coef;
      }
    }
  }
  for (auto& [b, mat] : del) bm.complex.set_del(b, std::move(mat));
  for (auto& [b, mat] : delbar) bm.complex.set_delbar(b, std::move(mat));

  bool closed = true;
  std::map<Bidegree, Matrix> conj;
  for (const auto& [b, gs] : bm.generators) {
    Matrix mat(bm.complex.dim({b.q, b.p}), gs.size());
    for (std::size_t col = 0; col < gs.size() && closed; ++col) {
      const Generator& g = gs[col];
      std::vector<int> seq;
      for (int s : slots(g.mask)) seq.push_back(s < n ? s + n : s - n);
      auto [sign, mask] = normalize(seq);
      auto it = index.find({mask, conj_swap(l, g.weight)});
      if (it == index.end()) {
        closed = false;
        break;
      }
      mat(it->second.second, col) = Scalar(sign);
    }
    if (!closed) break;
    conj[b] = std::move(mat);
  }
  if (closed) {
    for (auto& [b, mat] : conj) bm.complex.set_conj(b, std::move(mat));
  }

  const auto& violations = validate(bm.complex);
  if (!violations.empty()) {
    std::ostringstream msg;
    msg << "model " << spec.name << " does not define a double complex:";
    for (const Violation& v : violations) {
      msg << "\n  " << v.to_string();
      Matrix f = failing_operator(bm.complex, v);
      std::vector<std::string> offending;
      const auto& labels = bm.complex.labels(v.at);
      for (std::size_t col = 0; col < f.cols() && col < labels.size(); ++col) {
        if (!is_zero(f.column(col))) offending.push_back(labels[col]);
      }
      if (!offending.empty()) {
        msg << " on";
        for (const auto& s : offending) msg << " " << s;
      }
    }
    throw ModelValidationError(msg.str(), violations);
  }

  std::map<Bidegree, Matrix> pairing;
  const std::uint32_t full = (1u << (2 * n)) - 1;
  for (const auto& [b, gs] : bm.generators) {
    const Bidegree d{n - b.p, n - b.q};
    auto it = bm.generators.find(d);
    if (it == bm.generators.end()) continue;
    Matrix mat(gs.size(), it->second.size());
    for (std::size_t i = 0; i < gs.size(); ++i) {
      for (std::size_t j = 0; j < it->second.size(); ++j) {
        const Generator& h = it->second[j];
        if ((gs[i].mask | h.mask) != full || !is_zero(gs[i].weight + h.weight)) continue;
        std::vector<int> seq = slots(gs[i].mask);
        for (int s : slots(h.mask)) seq.push_back(s);
        auto [sign, mask] = normalize(seq);
        if (sign != 0) mat(i, j) = Scalar(sign);
      }
    }
    pairing[b] = std::move(mat);
  }
  bm.paired = PairedComplex(bm.complex, n, std::move(pairing));
  return bm;
}

ComplexMap subcomplex_inclusion(const BuiltModel& sub, const BuiltModel& ambient) {
  std::map<std::string, std::pair<Bidegree, std::size_t>> where;
  for (const auto& [b, gs] : ambient.generators) {
    for (std::size_t i = 0; i < gs.size(); ++i) where[gs[i].label] = {b, i};
  }
  std::map<Bidegree, Matrix> blocks;
  for (const auto& [b, gs] : sub.generators) {
    Matrix m(ambient.complex.dim(b), gs.size());
    for (std::size_t j = 0; j < gs.size(); ++j) {
      auto it = where.find(gs[j].label);
      if (it == where.end() || it->second.first != b) {
        throw UnresolvableGenerator("generator " + gs[j].label + " of " + sub.spec.name + " has no counterpart in " +
                                    ambient.spec.name);
      }
      m(it->second.second, j) = Scalar(1);
    }
    blocks[b] = std::move(m);
  }
  return ComplexMap(sub.complex, ambient.complex, std::move(blocks), true);
}

bool star_closure_check(const BuiltModel& bm) {
  const std::uint32_t full = (1u << (2 * bm.spec.n)) - 1;
  for (const auto& [b, gs] : bm.generators) {
    for (const Generator& g : gs) {
      if (!bm.find(-g.weight, full & ~g.mask)) return false;
    }
  }
  return true;
}

std::vector<std::string> weight_bookkeeping_violations(const BuiltModel& bm) {
  std::vector<std::string> out;
  if (bm.spec.rule == Rule::Explicit) return out;
  Layout l = make_layout(bm.spec);
  RuleWeights rw = rule_weights(bm.spec, l);
  const std::uint32_t full = (1u << (2 * l.n)) - 1;
  for (const auto& [b, gs] : bm.generators) {
    for (const Generator& g : gs) {
      bool ok = false;
      for (const auto& f : rw.weight) {
        if (f(g.mask) == g.weight && is_zero(g.weight + f(full & ~g.mask))) ok = true;
      }
      if (!ok) out.push_back(g.label);
    }
  }
  return out;
}

}  // namespace bcforge
