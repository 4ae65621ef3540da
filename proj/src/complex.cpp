#include "bcforge/complex.hpp"

#include <algorithm>
#include <sstream>

#include "bcforge/parallel.hpp"

namespace bcforge {

namespace {

std::string shape_of(std::size_t r, std::size_t c) {
  return std::to_string(r) + "x" + std::to_string(c);
}

void check_shape(const Matrix& m, std::size_t rows, std::size_t cols, const char* what,
                 Bidegree at) {
  if (m.rows() != rows || m.cols() != cols) {
    throw DimensionError(std::string(what) + " at " + to_string(at) + " has shape " +
                         shape_of(m.rows(), m.cols()) + ", expected " + shape_of(rows, cols));
  }
}

// Coordinate subspace of Tot^k spanned by the summands accepted by `keep`.
template <class Pred>
Matrix coordinate_block(const std::vector<BigradedComplex::TotSummand>& layout, std::size_t dim,
                        Pred keep) {
  std::size_t cols = 0;
  for (const auto& s : layout) {
    if (keep(s.bidegree)) cols += s.dim;
  }
  Matrix m(dim, cols);
  std::size_t c = 0;
  for (const auto& s : layout) {
    if (!keep(s.bidegree)) continue;
    for (std::size_t i = 0; i < s.dim; ++i) m(s.offset + i, c++) = 1;
  }
  return m;
}

CohomologyResult quotient(std::optional<Bidegree> b, int degree, const Subspace& cocycles,
                          const Subspace& coboundaries, const char* theory) {
  if (!is_subspace_of(coboundaries, cocycles)) {
    throw std::logic_error(std::string(theory) + ": coboundaries not contained in cocycles at " +
                           (b ? to_string(*b) : "degree " + std::to_string(degree)));
  }
  CohomologyResult r;
  r.bidegree = b;
  r.degree = degree;
  r.dimension = cocycles.dim() - coboundaries.dim();
  r.representatives = complement_in(cocycles, coboundaries);
  return r;
}

}  // namespace

std::string to_string(const Bidegree& b) {
  return "(" + std::to_string(b.p) + "," + std::to_string(b.q) + ")";
}

std::string Violation::to_string() const {
  return bcforge::to_string(at) + " " + identity + ": " + detail;
}

namespace {

std::string join_violations(const std::vector<Violation>& v) {
  std::ostringstream os;
  os << "invalid complex";
  for (std::size_t k = 0; k < v.size() && k < 5; ++k) os << (k ? "; " : ": ") << v[k].to_string();
  if (v.size() > 5) os << "; ... (" << v.size() << " violations)";
  return os.str();
}

}  // namespace

InvalidComplex::InvalidComplex(const std::vector<Violation>& v)
    : std::runtime_error(join_violations(v)), violations_(v) {}

void BigradedComplex::invalidate() { cache_ = std::make_shared<Cache>(); }

void BigradedComplex::add_space(Bidegree b, std::vector<std::string> labels) {
  if (spaces_.count(b)) throw std::invalid_argument("space at " + to_string(b) + " added twice");
  spaces_[b] = std::move(labels);
  invalidate();
}

void BigradedComplex::set_del(Bidegree src, Matrix m) {
  check_shape(m, dim({src.p + 1, src.q}), dim(src), "del", src);
  del_[src] = std::move(m);
  invalidate();
}

void BigradedComplex::set_delbar(Bidegree src, Matrix m) {
  check_shape(m, dim({src.p, src.q + 1}), dim(src), "delbar", src);
  delbar_[src] = std::move(m);
  invalidate();
}

void BigradedComplex::set_conj(Bidegree src, Matrix m) {
  check_shape(m, dim({src.q, src.p}), dim(src), "conj", src);
  conj_[src] = std::move(m);
  has_conj_ = true;
  invalidate();
}

std::size_t BigradedComplex::dim(Bidegree b) const {
  auto it = spaces_.find(b);
  return it == spaces_.end() ? 0 : it->second.size();
}

const std::vector<std::string>& BigradedComplex::labels(Bidegree b) const {
  static const std::vector<std::string> none;
  auto it = spaces_.find(b);
  return it == spaces_.end() ? none : it->second;
}

std::vector<Bidegree> BigradedComplex::support() const {
  std::vector<Bidegree> out;
  for (const auto& [b, l] : spaces_) {
    if (!l.empty()) out.push_back(b);
  }
  return out;
}

std::size_t BigradedComplex::total_dim() const {
  std::size_t n = 0;
  for (const auto& [b, l] : spaces_) n += l.size();
  return n;
}

Matrix BigradedComplex::del(Bidegree src) const {
  auto it = del_.find(src);
  if (it != del_.end()) return it->second;
  return Matrix(dim({src.p + 1, src.q}), dim(src));
}

Matrix BigradedComplex::delbar(Bidegree src) const {
  auto it = delbar_.find(src);
  if (it != delbar_.end()) return it->second;
  return Matrix(dim({src.p, src.q + 1}), dim(src));
}

Matrix BigradedComplex::del_delbar(Bidegree src) const {
  return del({src.p, src.q + 1}) * delbar(src);
}

Matrix BigradedComplex::conj(Bidegree src) const {
  auto it = conj_.find(src);
  if (it != conj_.end()) return it->second;
  return Matrix(dim({src.q, src.p}), dim(src));
}

std::vector<BigradedComplex::TotSummand> BigradedComplex::tot_layout(int k) const {
  std::vector<TotSummand> out;
  std::size_t off = 0;
  for (const auto& [b, l] : spaces_) {
    if (b.total() != k || l.empty()) continue;
    out.push_back({b, off, l.size()});
    off += l.size();
  }
  return out;
}

std::size_t BigradedComplex::tot_dim(int k) const {
  std::size_t n = 0;
  for (const auto& s : tot_layout(k)) n += s.dim;
  return n;
}

Matrix BigradedComplex::d_total(int k) const {
  auto src = tot_layout(k);
  auto dst = tot_layout(k + 1);
  std::map<Bidegree, std::size_t> dst_off;
  std::size_t rows = 0;
  for (const auto& s : dst) {
    dst_off[s.bidegree] = s.offset;
    rows += s.dim;
  }
  std::size_t cols = 0;
  for (const auto& s : src) cols += s.dim;
  Matrix d(rows, cols);
  for (const auto& s : src) {
    Bidegree right{s.bidegree.p + 1, s.bidegree.q};
    Bidegree up{s.bidegree.p, s.bidegree.q + 1};
    if (auto it = dst_off.find(right); it != dst_off.end()) d.set_block(it->second, s.offset, del(s.bidegree));
    if (auto it = dst_off.find(up); it != dst_off.end()) d.set_block(it->second, s.offset, delbar(s.bidegree));
  }
  return d;
}

Matrix BigradedComplex::tot_inclusion(Bidegree b) const {
  auto layout = tot_layout(b.total());
  std::size_t n = 0;
  for (const auto& s : layout) n += s.dim;
  Matrix m(n, dim(b));
  for (const auto& s : layout) {
    if (s.bidegree == b) m.set_block(s.offset, 0, Matrix::identity(s.dim));
  }
  return m;
}

std::pair<int, int> BigradedComplex::degree_range() const {
  int lo = 0, hi = -1;
  bool first = true;
  for (const auto& b : support()) {
    if (first) {
      lo = hi = b.total();
      first = false;
    } else {
      lo = std::min(lo, b.total());
      hi = std::max(hi, b.total());
    }
  }
  return {lo, hi};
}

const std::vector<Violation>& BigradedComplex::violations() const {
  auto cache = cache_;
  std::call_once(cache->once, [&] { cache->violations = validate(*this); });
  return cache->violations;
}

void BigradedComplex::require_valid() const {
  const auto& v = violations();
  if (!v.empty()) throw InvalidComplex(v);
}

std::vector<Violation> validate(const BigradedComplex& c) {
  std::vector<Violation> out;
  for (const Bidegree& b : c.support()) {
    Bidegree right{b.p + 1, b.q};
    Bidegree up{b.p, b.q + 1};
    if (!(c.del(right) * c.del(b)).is_zero()) {
      out.push_back({"del^2 = 0", b, "del o del is nonzero"});
    }
    if (!(c.delbar(up) * c.delbar(b)).is_zero()) {
      out.push_back({"delbar^2 = 0", b, "delbar o delbar is nonzero"});
    }
    if (!(c.del(up) * c.delbar(b) + c.delbar(right) * c.del(b)).is_zero()) {
      out.push_back({"del delbar + delbar del = 0", b, "differentials do not anticommute"});
    }
  }
  if (!c.has_conj()) return out;
  for (const Bidegree& b : c.support()) {
    Bidegree mirror{b.q, b.p};
    if (!c.conj_defined_at(b)) {
      out.push_back({"conj defined", b, "conjugation missing on a supported bidegree"});
      continue;
    }
    if (c.conj(mirror) * c.conj(b).conj() != Matrix::identity(c.dim(b))) {
      out.push_back({"conj o conj = id", b, "conjugation is not an involution"});
    }
    Matrix lhs = c.conj({b.p + 1, b.q}) * c.del(b).conj();
    if (lhs != c.delbar(mirror) * c.conj(b)) {
      out.push_back({"conj del = delbar conj", b, "conjugation does not intertwine del with delbar"});
    }
    Matrix lhs2 = c.conj({b.p, b.q + 1}) * c.delbar(b).conj();
    if (lhs2 != c.del(mirror) * c.conj(b)) {
      out.push_back({"conj delbar = del conj", b, "conjugation does not intertwine delbar with del"});
    }
  }
  return out;
}

CohomologyResult h_delbar(const BigradedComplex& c, int p, int q) {
  c.require_valid();
  Bidegree b{p, q};
  return quotient(b, p + q, kernel(c.delbar(b)), column_space(c.delbar({p, q - 1})), "h_delbar");
}

CohomologyResult h_del(const BigradedComplex& c, int p, int q) {
  c.require_valid();
  Bidegree b{p, q};
  return quotient(b, p + q, kernel(c.del(b)), column_space(c.del({p - 1, q})), "h_del");
}

CohomologyResult h_deRham(const BigradedComplex& c, int k) {
  c.require_valid();
  return quotient(std::nullopt, k, kernel(c.d_total(k)), column_space(c.d_total(k - 1)), "h_deRham");
}

Subspace bc_cocycles(const BigradedComplex& c, Bidegree b) {
  return kernel(Matrix::vstack(c.del(b), c.delbar(b)));
}

Subspace bc_coboundaries(const BigradedComplex& c, Bidegree b) {
  return column_space(c.del_delbar({b.p - 1, b.q - 1}));
}

Subspace aeppli_cocycles(const BigradedComplex& c, Bidegree b) { return kernel(c.del_delbar(b)); }

Subspace aeppli_coboundaries(const BigradedComplex& c, Bidegree b) {
  return column_space(Matrix::hstack(c.del({b.p - 1, b.q}), c.delbar({b.p, b.q - 1})));
}

CohomologyResult h_bott_chern(const BigradedComplex& c, int p, int q) {
  c.require_valid();
  Bidegree b{p, q};
  return quotient(b, p + q, bc_cocycles(c, b), bc_coboundaries(c, b), "h_bott_chern");
}

CohomologyResult h_aeppli(const BigradedComplex& c, int p, int q) {
  c.require_valid();
  Bidegree b{p, q};
  return quotient(b, p + q, aeppli_cocycles(c, b), aeppli_coboundaries(c, b), "h_aeppli");
}

namespace {

QuotientSpaces pure_spaces(const BigradedComplex& c, Bidegree b) {
  Subspace closed = bc_cocycles(c, b);
  Matrix incl = c.tot_inclusion(b);
  Subspace exact = column_space(c.d_total(b.total() - 1));
  Subspace both = subspace_intersection(image(incl, closed), exact);
  // Vectors of `both` are supported on the A^{p,q} block; read them back.
  std::vector<Vector> back;
  for (const auto& v : both.vectors()) back.push_back(incl.transpose() * v);
  return {closed, Subspace::span(c.dim(b), back), false};
}

QuotientSpaces e1_spaces(const BigradedComplex& c, Bidegree b) {
  const int p = b.p;
  const int k = b.total();
  auto layout = c.tot_layout(k);
  const std::size_t n = c.tot_dim(k);
  Matrix fp = coordinate_block(layout, n, [&](Bidegree x) { return x.p >= p; });
  Matrix fp1 = coordinate_block(layout, n, [&](Bidegree x) { return x.p >= p + 1; });
  Matrix fp_prev = coordinate_block(c.tot_layout(k - 1), c.tot_dim(k - 1),
                                    [&](Bidegree x) { return x.p >= p; });
  // Coordinates of Tot^{k+1} outside F^{p+1}.
  Matrix low = coordinate_block(c.tot_layout(k + 1), c.tot_dim(k + 1),
                                [&](Bidegree x) { return x.p <= p; });
  Subspace z1 = image(fp, kernel(low.transpose() * c.d_total(k) * fp));
  Subspace denom = subspace_sum(column_space(fp1), column_space(c.d_total(k - 1) * fp_prev));
  return {z1, denom, true};
}

}  // namespace

QuotientSpaces quotient_spaces(const BigradedComplex& c, Theory t, Bidegree b) {
  c.require_valid();
  switch (t) {
    case Theory::DeRham: {
      const int k = b.total();
      return {kernel(c.d_total(k)), column_space(c.d_total(k - 1)), true};
    }
    case Theory::Del:
      return {kernel(c.del(b)), column_space(c.del({b.p - 1, b.q})), false};
    case Theory::Delbar:
      return {kernel(c.delbar(b)), column_space(c.delbar({b.p, b.q - 1})), false};
    case Theory::BottChern:
      return {bc_cocycles(c, b), bc_coboundaries(c, b), false};
    case Theory::Aeppli:
      return {aeppli_cocycles(c, b), aeppli_coboundaries(c, b), false};
    case Theory::E1:
      return e1_spaces(c, b);
    case Theory::Pure:
      return pure_spaces(c, b);
  }
  throw std::logic_error("unknown theory");
}

std::size_t h_pure_type(const BigradedComplex& c, int p, int q) {
  c.require_valid();
  if (c.dim({p, q}) == 0) return 0;
  return pure_spaces(c, {p, q}).dimension();
}

std::size_t frolicher_e1(const BigradedComplex& c, int p, int q) {
  c.require_valid();
  if (c.dim({p, q}) == 0) return 0;
  QuotientSpaces s = e1_spaces(c, {p, q});
  if (!is_subspace_of(s.coboundaries, s.cocycles)) {
    throw std::logic_error("frolicher_e1: boundary terms escape Z_1 at " + to_string(Bidegree{p, q}));
  }
  return s.dimension();
}

namespace {

DdbarDegrees ddbar_from(const std::map<int, std::int64_t>& bc_plus_a,
                        const std::map<int, std::int64_t>& betti) {
  DdbarDegrees out;
  for (const auto& [k, s] : bc_plus_a) {
    auto it = betti.find(k);
    std::int64_t b = it == betti.end() ? 0 : it->second;
    std::int64_t v = s - 2 * b;
    out.by_degree[k] = v;
    if (v < 0) {
      out.violations.push_back({"ddbar degree >= 0", {k, 0},
                                "degree " + std::to_string(k) + " has value " + std::to_string(v)});
    }
  }
  return out;
}

}  // namespace

DdbarDegrees ddbar_degrees(const BigradedComplex& c) {
  c.require_valid();
  auto [lo, hi] = c.degree_range();
  std::map<int, std::int64_t> sums, betti;
  for (int k = lo; k <= hi; ++k) {
    sums[k] = 0;
    betti[k] = static_cast<std::int64_t>(h_deRham(c, k).dimension);
  }
  for (const Bidegree& b : c.support()) {
    sums[b.total()] += static_cast<std::int64_t>(h_bott_chern(c, b.p, b.q).dimension +
                                                 h_aeppli(c, b.p, b.q).dimension);
  }
  return ddbar_from(sums, betti);
}

bool satisfies_ddbar_lemma(const BigradedComplex& c) {
  DdbarDegrees d = ddbar_degrees(c);
  return std::all_of(d.by_degree.begin(), d.by_degree.end(),
                     [](const auto& kv) { return kv.second == 0; });
}

std::string theory_key(Theory t) {
  switch (t) {
    case Theory::DeRham: return "dr";
    case Theory::Del: return "del";
    case Theory::Delbar: return "delbar";
    case Theory::BottChern: return "bc";
    case Theory::Aeppli: return "aeppli";
    case Theory::E1: return "e1";
    case Theory::Pure: return "pure";
  }
  return "?";
}

std::optional<Theory> parse_theory(const std::string& key) {
  for (Theory t : all_theories()) {
    if (theory_key(t) == key) return t;
  }
  return std::nullopt;
}

const std::vector<Theory>& all_theories() {
  static const std::vector<Theory> all{Theory::DeRham, Theory::Del,  Theory::Delbar, Theory::BottChern,
                                       Theory::Aeppli, Theory::E1, Theory::Pure};
  return all;
}

bool is_bigraded(Theory t) { return t != Theory::DeRham; }

std::vector<Bidegree> antidiagonal_order(int n) {
  std::vector<Bidegree> out;
  for (int k = 0; k <= 2 * n; ++k) {
    for (int p = std::min(k, n); p >= 0 && k - p <= n; --p) out.push_back({p, k - p});
  }
  return out;
}

namespace {

std::size_t bigraded_dim(const BigradedComplex& c, Theory t, Bidegree b) {
  switch (t) {
    case Theory::Del: return h_del(c, b.p, b.q).dimension;
    case Theory::Delbar: return h_delbar(c, b.p, b.q).dimension;
    case Theory::BottChern: return h_bott_chern(c, b.p, b.q).dimension;
    case Theory::Aeppli: return h_aeppli(c, b.p, b.q).dimension;
    case Theory::E1: return frolicher_e1(c, b.p, b.q);
    case Theory::Pure: return h_pure_type(c, b.p, b.q);
    case Theory::DeRham: break;
  }
  throw std::logic_error("bigraded_dim called for de Rham");
}

}  // namespace

CohomologyTable compute_table(const BigradedComplex& c, int n, const std::vector<Theory>& theories,
                              bool with_ddbar, unsigned threads) {
  c.require_valid();
  CohomologyTable t;
  t.n = n;
  t.bidegrees = antidiagonal_order(n);
  t.theories = theories;

  std::set<Theory> needed(theories.begin(), theories.end());
  if (with_ddbar) needed.insert({Theory::BottChern, Theory::Aeppli, Theory::DeRham});

  struct Task {
    Theory theory;
    std::size_t index;
  };
  std::vector<Task> tasks;
  std::map<Theory, std::vector<std::size_t>> dims;
  for (Theory th : needed) {
    std::size_t count = is_bigraded(th) ? t.bidegrees.size() : static_cast<std::size_t>(2 * n + 1);
    dims[th].assign(count, 0);
    for (std::size_t i = 0; i < count; ++i) tasks.push_back({th, i});
  }
  parallel_for(tasks.size(), threads, [&](std::size_t i) {
    const Task& task = tasks[i];
    std::size_t v = is_bigraded(task.theory)
                        ? bigraded_dim(c, task.theory, t.bidegrees[task.index])
                        : h_deRham(c, static_cast<int>(task.index)).dimension;
    dims.at(task.theory)[task.index] = v;
  });

  for (Theory th : needed) {
    std::vector<std::size_t> totals(2 * n + 1, 0);
    if (is_bigraded(th)) {
      for (std::size_t i = 0; i < t.bidegrees.size(); ++i) totals[t.bidegrees[i].total()] += dims[th][i];
    } else {
      totals = dims[th];
    }
    if (std::find(theories.begin(), theories.end(), th) != theories.end()) {
      if (is_bigraded(th)) t.bigraded[th] = dims[th];
      t.totals[th] = totals;
    }
  }
  if (with_ddbar) {
    std::map<int, std::int64_t> sums, betti;
    for (int k = 0; k <= 2 * n; ++k) {
      sums[k] = 0;
      betti[k] = static_cast<std::int64_t>(dims[Theory::DeRham][k]);
    }
    for (std::size_t i = 0; i < t.bidegrees.size(); ++i) {
      sums[t.bidegrees[i].total()] += static_cast<std::int64_t>(dims[Theory::BottChern][i] +
                                                                dims[Theory::Aeppli][i]);
    }
    t.ddbar = ddbar_from(sums, betti);
  }
  return t;
}

}  // namespace bcforge
