#include "bcforge/synthetic.hpp"

#include <algorithm>
#include <array>
#include <set>

namespace bcforge::synthetic {

namespace {

Scalar nonzero_coefficient(std::mt19937_64& rng) {
  static const Scalar table[] = {Scalar(1), Scalar(-1), Scalar(2), Scalar::i(), -Scalar::i(),
                                 Scalar(1, 1), Scalar(mpq_class(1, 2))};
  std::uniform_int_distribution<std::size_t> d(0, std::size(table) - 1);
  return table[d(rng)];
}

bool coin(std::mt19937_64& rng, double p = 0.5) {
  return std::bernoulli_distribution(p)(rng);
}

int uniform(std::mt19937_64& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

const int kTopLevel = 1 << 20;

}  // namespace

std::vector<Bidegree> Shape::positions() const {
  const int a = at.p;
  const int b = at.q;
  if (kind == Kind::Square) return {{a, b}, {a + 1, b}, {a, b + 1}, {a + 1, b + 1}};
  std::vector<Bidegree> out;
  for (int i = 0; i < sources; ++i) out.push_back({a - i, b + i});
  for (int j = 0; j <= sources; ++j) {
    if ((j == 0 && drop_first) || (j == sources && drop_last)) continue;
    out.push_back({a - j + 1, b + j});
  }
  return out;
}

std::size_t ShapeBuilder::add(Bidegree b, int level) {
  gens_.push_back({b, level});
  return gens_.size() - 1;
}

void ShapeBuilder::add_del(std::size_t from, std::size_t to, const Scalar& c) {
  edges_.push_back({from, to, c, true});
}

void ShapeBuilder::add_delbar(std::size_t from, std::size_t to, const Scalar& c) {
  edges_.push_back({from, to, c, false});
}

std::vector<std::size_t> ShapeBuilder::add_shape(const Shape& s, std::mt19937_64& rng, int level) {
  std::vector<std::size_t> ids;
  for (const Bidegree& b : s.positions()) ids.push_back(add(b, level));
  if (s.kind == Shape::Kind::Square) {
    // x, del x, delbar x, del delbar x; delbar del x = -del delbar x.
    Scalar c1 = nonzero_coefficient(rng), c2 = nonzero_coefficient(rng), c3 = nonzero_coefficient(rng);
    add_del(ids[0], ids[1], c1);
    add_delbar(ids[0], ids[2], c2);
    add_del(ids[2], ids[3], c3);
    add_delbar(ids[1], ids[3], -(c2 * c3) / c1);
    return ids;
  }
  const int m = s.sources;
  std::map<int, std::size_t> target;
  std::size_t next = static_cast<std::size_t>(m);
  for (int j = 0; j <= m; ++j) {
    if ((j == 0 && s.drop_first) || (j == m && s.drop_last)) continue;
    target[j] = ids[next++];
  }
  for (int i = 0; i < m; ++i) {
    if (auto it = target.find(i); it != target.end()) add_del(ids[i], it->second, nonzero_coefficient(rng));
    if (auto it = target.find(i + 1); it != target.end()) {
      add_delbar(ids[i], it->second, nonzero_coefficient(rng));
    }
  }
  return ids;
}

void ShapeBuilder::mark_random_closed_subset(const std::vector<std::size_t>& ids, std::mt19937_64& rng,
                                             int level) {
  std::set<std::size_t> chosen;
  for (std::size_t id : ids) {
    if (coin(rng)) chosen.insert(id);
  }
  bool grew = true;
  while (grew) {
    grew = false;
    for (const Edge& e : edges_) {
      if (chosen.count(e.from) && !chosen.count(e.to)) {
        chosen.insert(e.to);
        grew = true;
      }
    }
  }
  for (std::size_t id : chosen) gens_[id].level = std::max(gens_[id].level, level);
}

void ShapeBuilder::close_under_duality(int n, int top_level) {
  const std::size_t count = gens_.size();
  const std::size_t edge_count = edges_.size();
  std::size_t one = add({0, 0}, top_level);
  std::size_t v = add({n, n}, top_level);
  pairs_.emplace_back(one, v, Scalar(1));
  pairs_.emplace_back(v, one, Scalar(1));
  std::vector<std::size_t> dual(count);
  for (std::size_t g = 0; g < count; ++g) {
    const Bidegree b = gens_[g].at;
    dual[g] = add({n - b.p, n - b.q}, gens_[g].level);
    pairs_.emplace_back(g, dual[g], Scalar(1));
    pairs_.emplace_back(dual[g], g, Scalar(b.total() % 2 == 0 ? 1 : -1));
  }
  // Stokes: pair(d x, f) = -(-1)^{|x|} pair(x, d f), so the dual differential
  // is -(-1)^{|x|} times the transpose.
  for (std::size_t k = 0; k < edge_count; ++k) {
    const Edge e = edges_[k];
    const int deg = gens_[e.from].at.total();
    Scalar c = deg % 2 == 0 ? -e.c : e.c;
    edges_.push_back({dual[e.to], dual[e.from], c, e.del});
  }
}

std::map<Bidegree, std::vector<std::size_t>> ShapeBuilder::by_bidegree(int min_level) const {
  std::map<Bidegree, std::vector<std::size_t>> out;
  for (std::size_t g = 0; g < gens_.size(); ++g) {
    if (gens_[g].level >= min_level) out[gens_[g].at].push_back(g);
  }
  return out;
}

BigradedComplex ShapeBuilder::build(int min_level) const {
  auto groups = by_bidegree(min_level);
  std::map<std::size_t, std::size_t> index;
  BigradedComplex c;
  for (const auto& [b, ids] : groups) {
    std::vector<std::string> labels;
    for (std::size_t k = 0; k < ids.size(); ++k) {
      index[ids[k]] = k;
      labels.push_back("g" + std::to_string(ids[k]));
    }
    c.add_space(b, std::move(labels));
  }
  std::map<Bidegree, Matrix> del, delbar;
  for (const Edge& e : edges_) {
    if (!index.count(e.from)) continue;
    if (!index.count(e.to)) throw std::logic_error("sub-complex generators are not closed under d");
    const Bidegree src = gens_[e.from].at;
    auto& slot = e.del ? del : delbar;
    if (!slot.count(src)) {
      Bidegree dst = e.del ? Bidegree{src.p + 1, src.q} : Bidegree{src.p, src.q + 1};
      slot[src] = Matrix(c.dim(dst), c.dim(src));
    }
    slot[src](index[e.to], index[e.from]) += e.c;
  }
  for (auto& [b, m] : del) c.set_del(b, std::move(m));
  for (auto& [b, m] : delbar) c.set_delbar(b, std::move(m));
  return c;
}

std::map<Bidegree, Matrix> ShapeBuilder::inclusion_blocks(int min_level) const {
  auto full = by_bidegree(0);
  auto sub = by_bidegree(min_level);
  std::map<Bidegree, Matrix> out;
  for (const auto& [b, ids] : sub) {
    const auto& all = full.at(b);
    Matrix m(all.size(), ids.size());
    for (std::size_t k = 0; k < ids.size(); ++k) {
      auto pos = std::find(all.begin(), all.end(), ids[k]) - all.begin();
      m(static_cast<std::size_t>(pos), k) = 1;
    }
    out[b] = std::move(m);
  }
  return out;
}

std::map<Bidegree, Matrix> ShapeBuilder::pairing(int n, int min_level) const {
  auto groups = by_bidegree(min_level);
  std::map<std::size_t, std::size_t> index;
  for (const auto& [b, ids] : groups) {
    for (std::size_t k = 0; k < ids.size(); ++k) index[ids[k]] = k;
  }
  auto dim = [&](Bidegree b) {
    auto it = groups.find(b);
    return it == groups.end() ? std::size_t{0} : it->second.size();
  };
  std::map<Bidegree, Matrix> out;
  for (const Bidegree& b : antidiagonal_order(n)) out[b] = Matrix(dim(b), dim({n - b.p, n - b.q}));
  for (const auto& [g, h, c] : pairs_) {
    if (!index.count(g) || !index.count(h)) continue;
    out[gens_[g].at](index[g], index[h]) = c;
  }
  return out;
}

Shape random_shape(std::mt19937_64& rng, int box, const std::function<bool(Bidegree)>& allowed,
                   double square_weight) {
  std::discrete_distribution<int> kind({square_weight, 1.0});
  for (int attempt = 0; attempt < 10000; ++attempt) {
    Shape s;
    s.kind = kind(rng) == 0 ? Shape::Kind::Square : Shape::Kind::Zigzag;
    s.at = {uniform(rng, 0, box), uniform(rng, 0, box)};
    if (s.kind == Shape::Kind::Zigzag) {
      s.sources = uniform(rng, 1, 3);
      s.drop_first = coin(rng);
      s.drop_last = coin(rng);
    }
    auto pos = s.positions();
    if (std::all_of(pos.begin(), pos.end(), allowed)) return s;
  }
  throw std::runtime_error("random_shape: no admissible shape found");
}

Matrix random_unitary(std::mt19937_64& rng, std::size_t n) {
  static const std::pair<long, long> rotations[] = {{3, 4}, {5, 12}, {8, 15}};
  static const long hyp[] = {5, 13, 17};
  Matrix u = Matrix::identity(n);
  if (n == 0) return u;
  for (std::size_t step = 0; step < 2 * n + 1; ++step) {
    const std::size_t i = static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(n) - 1));
    const std::size_t j = static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(n) - 1));
    int op = uniform(rng, 0, 2);
    if (op == 0 || i == j) {
      Scalar phase = std::array<Scalar, 4>{Scalar(1), Scalar::i(), Scalar(-1), -Scalar::i()}[uniform(rng, 0, 3)];
      for (std::size_t r = 0; r < n; ++r) u(r, i) *= phase;
    } else if (op == 1) {
      for (std::size_t r = 0; r < n; ++r) std::swap(u(r, i), u(r, j));
    } else {
      int t = uniform(rng, 0, 2);
      Scalar c(mpq_class(rotations[t].first, hyp[t]));
      Scalar s(mpq_class(rotations[t].second, hyp[t]));
      for (std::size_t r = 0; r < n; ++r) {
        Scalar a = u(r, i), b = u(r, j);
        u(r, i) = c * a + s * b;
        u(r, j) = c * b - s * a;
      }
    }
  }
  return u;
}

Matrix random_invertible(std::mt19937_64& rng, std::size_t n) {
  Matrix l = Matrix::identity(n);
  Matrix u = Matrix::identity(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      l(i, j) = Scalar(mpq_class(uniform(rng, -1, 1)), mpq_class(uniform(rng, -1, 1)));
      u(j, i) = Scalar(mpq_class(uniform(rng, -1, 1)), mpq_class(uniform(rng, -1, 1)));
    }
  }
  return l * u;
}

BigradedComplex change_basis(const BigradedComplex& c, const std::map<Bidegree, Matrix>& u,
                             const std::map<Bidegree, Matrix>& u_inv) {
  auto get = [&](const std::map<Bidegree, Matrix>& m, Bidegree b) {
    auto it = m.find(b);
    return it == m.end() ? Matrix::identity(c.dim(b)) : it->second;
  };
  BigradedComplex out;
  for (const Bidegree& b : c.support()) out.add_space(b, c.labels(b));
  for (const Bidegree& b : c.support()) {
    Bidegree right{b.p + 1, b.q}, up{b.p, b.q + 1};
    if (c.dim(right)) out.set_del(b, get(u_inv, right) * c.del(b) * get(u, b));
    if (c.dim(up)) out.set_delbar(b, get(u_inv, up) * c.delbar(b) * get(u, b));
    if (c.has_conj() && c.conj_defined_at(b)) {
      Bidegree m{b.q, b.p};
      out.set_conj(b, get(u_inv, m) * c.conj(b) * get(u, b).conj());
    }
  }
  return out;
}

namespace {

struct Mixed {
  BigradedComplex complex;
  std::map<Bidegree, Matrix> u, u_inv;
};

Mixed mix_unitary(const BigradedComplex& c, std::mt19937_64& rng) {
  Mixed m;
  for (const Bidegree& b : c.support()) {
    m.u[b] = random_unitary(rng, c.dim(b));
    m.u_inv[b] = m.u[b].conjugate_transpose();
  }
  m.complex = change_basis(c, m.u, m.u_inv);
  return m;
}

Mixed mix_invertible(const BigradedComplex& c, std::mt19937_64& rng) {
  Mixed m;
  for (const Bidegree& b : c.support()) {
    m.u[b] = random_invertible(rng, c.dim(b));
    m.u_inv[b] = inverse(m.u[b]);
  }
  m.complex = change_basis(c, m.u, m.u_inv);
  return m;
}

Matrix get_or_identity(const std::map<Bidegree, Matrix>& m, Bidegree b, std::size_t n) {
  auto it = m.find(b);
  return it == m.end() ? Matrix::identity(n) : it->second;
}

std::map<Bidegree, Matrix> transform_pairing(const std::map<Bidegree, Matrix>& p, const Mixed& m,
                                             const BigradedComplex& c, int n) {
  std::map<Bidegree, Matrix> out;
  for (const auto& [b, mat] : p) {
    Bidegree d{n - b.p, n - b.q};
    out[b] = get_or_identity(m.u, b, c.dim(b)).transpose() * mat * get_or_identity(m.u, d, c.dim(d));
  }
  return out;
}

// Inclusion blocks in mixed coordinates: u_ambient^{-1} * E * u_sub.
std::map<Bidegree, Matrix> transform_inclusion(const std::map<Bidegree, Matrix>& e, const Mixed& sub,
                                               const Mixed& ambient, const BigradedComplex& sub_raw,
                                               const BigradedComplex& amb_raw) {
  std::map<Bidegree, Matrix> out;
  for (const auto& [b, mat] : e) {
    out[b] = get_or_identity(ambient.u_inv, b, amb_raw.dim(b)) * mat *
             get_or_identity(sub.u, b, sub_raw.dim(b));
  }
  return out;
}

std::function<bool(Bidegree)> inside_pd_range(int n) {
  return [n](Bidegree b) {
    return b.p >= 0 && b.q >= 0 && b.p <= n && b.q <= n && !(b.p == 0 && b.q == 0) &&
           !(b.p == n && b.q == n);
  };
}

std::function<bool(Bidegree)> inside_box(int box) {
  return [box](Bidegree b) { return b.p >= 0 && b.q >= 0 && b.p <= box && b.q <= box; };
}

}  // namespace

BigradedComplex random_double_complex(std::uint64_t seed, int box) {
  std::mt19937_64 rng(seed);
  ShapeBuilder sb;
  const int count = uniform(rng, 1, 6);
  for (int k = 0; k < count; ++k) sb.add_shape(random_shape(rng, box, inside_box(box)), rng, 0);
  return mix_invertible(sb.build(), rng).complex;
}

PairedInstance random_paired_instance(std::uint64_t seed, int n) {
  std::mt19937_64 rng(seed);
  ShapeBuilder sb;
  const int count = uniform(rng, 1, 4);
  std::vector<Shape> shapes;
  for (int k = 0; k < count; ++k) {
    Shape s = !shapes.empty() && coin(rng, 0.3) ? shapes[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(shapes.size()) - 1))]
                                                : random_shape(rng, n, inside_pd_range(n));
    shapes.push_back(s);
    sb.add_shape(s, rng, coin(rng) ? 1 : 0);
  }
  sb.close_under_duality(n, kTopLevel);
  BigradedComplex amb_raw = sb.build(0);
  BigradedComplex sub_raw = sb.build(1);
  Mixed amb = mix_unitary(amb_raw, rng);
  Mixed sub = mix_unitary(sub_raw, rng);
  PairedComplex ambient(amb.complex, n, transform_pairing(sb.pairing(n, 0), amb, amb_raw, n));
  PairedComplex subp(sub.complex, n, transform_pairing(sb.pairing(n, 1), sub, sub_raw, n));
  ComplexMap incl(sub.complex, amb.complex,
                  transform_inclusion(sb.inclusion_blocks(1), sub, amb, sub_raw, amb_raw), true);
  return {std::move(ambient), std::move(subp), std::move(incl)};
}

TransferInstance random_transfer_instance(std::uint64_t seed, int box) {
  std::mt19937_64 rng(seed);
  ShapeBuilder sb;
  const int core = uniform(rng, 1, 4);
  for (int k = 0; k < core; ++k) sb.add_shape(random_shape(rng, box, inside_box(box)), rng, 1);
  const int extra = uniform(rng, 0, 4);
  const bool partial = coin(rng, 0.4);
  for (int k = 0; k < extra; ++k) {
    auto ids = sb.add_shape(random_shape(rng, box, inside_box(box), 4.0), rng, 0);
    if (partial) sb.mark_random_closed_subset(ids, rng, 1);
  }
  BigradedComplex amb_raw = sb.build(0);
  BigradedComplex sub_raw = sb.build(1);
  Mixed amb = mix_invertible(amb_raw, rng);
  Mixed sub = mix_invertible(sub_raw, rng);
  ComplexMap incl(sub.complex, amb.complex,
                  transform_inclusion(sb.inclusion_blocks(1), sub, amb, sub_raw, amb_raw), true);
  return {sub.complex, amb.complex, std::move(incl)};
}

SubisoInstance random_subiso_instance(std::uint64_t seed, int n) {
  std::mt19937_64 rng(seed);
  ShapeBuilder sb;
  auto allowed = inside_pd_range(n);
  const int base = uniform(rng, 1, 3);
  for (int k = 0; k < base; ++k) sb.add_shape(random_shape(rng, n, allowed), rng, 2);
  const int squares = uniform(rng, 1, 3);
  for (int k = 0; k < squares; ++k) {
    sb.add_shape(random_shape(rng, n, allowed, 1e9), rng, coin(rng) ? 1 : 0);
  }
  if (coin(rng, 0.3)) sb.add_shape(random_shape(rng, n, allowed), rng, coin(rng) ? 1 : 0);
  sb.close_under_duality(n, kTopLevel);
  BigradedComplex a_raw = sb.build(0), b_raw = sb.build(2), c_raw = sb.build(1);
  Mixed a = mix_unitary(a_raw, rng), b = mix_unitary(b_raw, rng), c = mix_unitary(c_raw, rng);
  SubisoInstance out{
      PairedComplex(a.complex, n, transform_pairing(sb.pairing(n, 0), a, a_raw, n)),
      PairedComplex(b.complex, n, transform_pairing(sb.pairing(n, 2), b, b_raw, n)),
      PairedComplex(c.complex, n, transform_pairing(sb.pairing(n, 1), c, c_raw, n)),
      ComplexMap(b.complex, a.complex, transform_inclusion(sb.inclusion_blocks(2), b, a, b_raw, a_raw), true),
      ComplexMap(c.complex, a.complex, transform_inclusion(sb.inclusion_blocks(1), c, a, c_raw, a_raw), true)};
  return out;
}

}  // namespace bcforge::synthetic
