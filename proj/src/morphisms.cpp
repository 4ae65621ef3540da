#include "bcforge/morphisms.hpp"

#include <algorithm>
#include <set>

namespace bcforge {

ComplexMap::ComplexMap(BigradedComplex source, BigradedComplex target,
                       std::map<Bidegree, Matrix> blocks, bool inclusion)
    : source_(std::move(source)), target_(std::move(target)), blocks_(std::move(blocks)),
      inclusion_(inclusion) {
  for (const auto& [b, m] : blocks_) {
    if (m.rows() != target_.dim(b) || m.cols() != source_.dim(b)) {
      throw DimensionError("map block at " + to_string(b) + " has shape " + std::to_string(m.rows()) +
                           "x" + std::to_string(m.cols()) + ", expected " +
                           std::to_string(target_.dim(b)) + "x" + std::to_string(source_.dim(b)));
    }
  }
}

ComplexMap ComplexMap::identity(const BigradedComplex& c) {
  std::map<Bidegree, Matrix> blocks;
  for (const Bidegree& b : c.support()) blocks[b] = Matrix::identity(c.dim(b));
  return ComplexMap(c, c, std::move(blocks), true);
}

ComplexMap ComplexMap::zero(const BigradedComplex& source, const BigradedComplex& target) {
  return ComplexMap(source, target, {}, false);
}

Matrix ComplexMap::block(Bidegree b) const {
  auto it = blocks_.find(b);
  if (it != blocks_.end()) return it->second;
  return Matrix(target_.dim(b), source_.dim(b));
}

Matrix ComplexMap::tot_block(int k) const {
  auto src = source_.tot_layout(k);
  auto dst = target_.tot_layout(k);
  Matrix m(target_.tot_dim(k), source_.tot_dim(k));
  for (const auto& s : src) {
    for (const auto& t : dst) {
      if (s.bidegree == t.bidegree) m.set_block(t.offset, s.offset, block(s.bidegree));
    }
  }
  return m;
}

std::vector<Bidegree> ComplexMap::bidegrees() const {
  std::set<Bidegree> all;
  for (const Bidegree& b : source_.support()) all.insert(b);
  for (const Bidegree& b : target_.support()) all.insert(b);
  return {all.begin(), all.end()};
}

std::vector<Violation> check_map(const ComplexMap& m) {
  std::vector<Violation> out;
  const BigradedComplex& s = m.source();
  const BigradedComplex& t = m.target();
  for (const Bidegree& b : s.support()) {
    Bidegree right{b.p + 1, b.q};
    Bidegree up{b.p, b.q + 1};
    if (t.del(b) * m.block(b) != m.block(right) * s.del(b)) {
      out.push_back({"del F = F del", b, "map does not commute with del"});
    }
    if (t.delbar(b) * m.block(b) != m.block(up) * s.delbar(b)) {
      out.push_back({"delbar F = F delbar", b, "map does not commute with delbar"});
    }
    if (m.is_inclusion() && rank(m.block(b)) != s.dim(b)) {
      out.push_back({"inclusion injective", b, "block is not injective"});
    }
  }
  return out;
}

InducedMap induced_map(const ComplexMap& m, Theory t, Bidegree at) {
  QuotientSpaces src = quotient_spaces(m.source(), t, at);
  QuotientSpaces dst = quotient_spaces(m.target(), t, at);
  Matrix f = src.total ? m.tot_block(at.total()) : m.block(at);
  const std::string where = theory_key(t) + " at " + to_string(at);
  if (!is_subspace_of(image(f, src.cocycles), dst.cocycles)) {
    throw WellDefinednessError(where + ": image of a cocycle is not a cocycle");
  }
  if (!is_subspace_of(image(f, src.coboundaries), dst.coboundaries)) {
    throw WellDefinednessError(where + ": image of a coboundary is not a coboundary");
  }
  Subspace reps_src = complement_in(src.cocycles, src.coboundaries);
  Subspace reps_dst = complement_in(dst.cocycles, dst.coboundaries);
  Matrix system = Matrix::hstack(reps_dst.basis(), dst.coboundaries.basis());
  InducedMap out;
  out.source_dim = reps_src.dim();
  out.target_dim = reps_dst.dim();
  out.matrix = Matrix(out.target_dim, out.source_dim);
  for (std::size_t j = 0; j < reps_src.dim(); ++j) {
    auto x = solve(system, f * reps_src.vector(j));
    if (!x) throw WellDefinednessError(where + ": image class not expressible in target classes");
    for (std::size_t i = 0; i < out.target_dim; ++i) out.matrix(i, j) = (*x)[i];
  }
  std::size_t r = rank(out.matrix);
  out.injective = r == out.source_dim;
  out.surjective = r == out.target_dim;
  return out;
}

namespace {

bool all_bijective(const ComplexMap& m, Theory t) {
  for (const Bidegree& b : m.bidegrees()) {
    if (!induced_map(m, t, b).bijective()) return false;
  }
  return true;
}

}  // namespace

bool rows_quasi_iso(const ComplexMap& m) { return all_bijective(m, Theory::Del); }

bool cols_quasi_iso(const ComplexMap& m) { return all_bijective(m, Theory::Delbar); }

bool condition3_surjective(const ComplexMap& m, int p, int q) {
  return induced_map(m, Theory::Pure, {p, q}).surjective;
}

InducedMap induced_bc_map(const ComplexMap& m, int p, int q) {
  return induced_map(m, Theory::BottChern, {p, q});
}

bool total_cohomology_bijective(const ComplexMap& m) {
  auto [slo, shi] = m.source().degree_range();
  auto [tlo, thi] = m.target().degree_range();
  int lo = std::min(slo, tlo);
  int hi = std::max(shi, thi);
  for (int k = lo; k <= hi; ++k) {
    if (!induced_map(m, Theory::DeRham, {k, 0}).bijective()) return false;
  }
  return true;
}

DelbarSplit split_modulo_delbar(const ComplexMap& m, const Vector& phi, int p, int q) {
  const BigradedComplex& c = m.source();
  const BigradedComplex& a = m.target();
  const Bidegree b{p, q};
  const Bidegree up{p, q + 1};
  if (!m.is_inclusion()) throw PreconditionError("split_modulo_delbar needs an inclusion");
  if (phi.size() != a.dim(b)) {
    throw DimensionError("phi has length " + std::to_string(phi.size()) + ", A" + to_string(b) +
                         " has dimension " + std::to_string(a.dim(b)));
  }
  if (!induced_map(m, Theory::Delbar, b).bijective() || !induced_map(m, Theory::Delbar, up).bijective()) {
    throw PreconditionError("columns are not quasi-isomorphic at " + to_string(b));
  }
  Matrix f = m.block(b);
  Vector eta = a.delbar(b) * phi;
  auto xi = solve(m.block(up), eta);
  if (!xi) throw PreconditionError("delbar(phi) does not lie in the sub-complex");

  // xi is delbar-closed in C and exact in A, hence exact in C.
  auto phi1 = solve(c.delbar(b), *xi);
  if (!phi1) throw std::logic_error("split_modulo_delbar: delbar(phi) has no primitive in C");

  // psi = phi - phi1 is delbar-closed in A; write it as F z + delbar(phi_hat), z closed in C.
  Vector psi = phi - f * *phi1;
  Subspace closed = kernel(c.delbar(b));
  Matrix da = a.delbar({p, q - 1});
  auto sol = solve(Matrix::hstack(f * closed.basis(), da), psi);
  if (!sol) throw std::logic_error("split_modulo_delbar: closed remainder not hit by C");

  Vector coeffs(sol->begin(), sol->begin() + static_cast<std::ptrdiff_t>(closed.dim()));
  DelbarSplit out;
  out.phi_tilde = *phi1 + closed.basis() * coeffs;
  out.phi_hat.assign(sol->begin() + static_cast<std::ptrdiff_t>(closed.dim()), sol->end());
  if (f * out.phi_tilde + da * out.phi_hat != phi) {
    throw std::logic_error("split_modulo_delbar: identity check failed");
  }
  return out;
}

}  // namespace bcforge
