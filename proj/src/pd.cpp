#include "bcforge/pd.hpp"

#include <sstream>

namespace bcforge {

namespace {

std::string describe(const std::vector<Violation>& v) {
  std::ostringstream os;
  os << "pd-type axioms fail";
  for (std::size_t k = 0; k < v.size() && k < 5; ++k) os << (k ? "; " : ": ") << v[k].to_string();
  return os.str();
}

}  // namespace

InvalidPairing::InvalidPairing(const std::vector<Violation>& v)
    : std::runtime_error(describe(v)), violations_(v) {}

PairedComplex::PairedComplex(BigradedComplex base, int n, std::map<Bidegree, Matrix> pairing)
    : base_(std::move(base)), n_(n), pairing_(std::move(pairing)) {
  for (const auto& [b, m] : pairing_) {
    if (m.rows() != base_.dim(b) || m.cols() != base_.dim(dual(b))) {
      throw DimensionError("pairing at " + to_string(b) + " has shape " + std::to_string(m.rows()) +
                           "x" + std::to_string(m.cols()) + ", expected " +
                           std::to_string(base_.dim(b)) + "x" + std::to_string(base_.dim(dual(b))));
    }
  }
}

Matrix PairedComplex::pairing(Bidegree b) const {
  auto it = pairing_.find(b);
  if (it != pairing_.end()) return it->second;
  return Matrix(base_.dim(b), base_.dim(dual(b)));
}

void PairedComplex::fill_cache(Cache& cache) const {
  cache.violations = check_pd_axioms(*this);
  if (!cache.violations.empty()) return;
  for (const Bidegree& b : antidiagonal_order(n_)) cache.star[b] = inverse(pairing(b));
}

const std::vector<Violation>& PairedComplex::violations() const {
  auto cache = cache_;
  std::call_once(cache->once, [&] { fill_cache(*cache); });
  return cache->violations;
}

void PairedComplex::require_axioms() const {
  base_.require_valid();
  if (!violations().empty()) throw InvalidPairing(violations());
}

ConjLinearMap PairedComplex::star(Bidegree b) const {
  require_axioms();
  auto it = cache_->star.find(b);
  if (it != cache_->star.end()) return {it->second};
  return {Matrix(base_.dim(dual(b)), base_.dim(b))};
}

std::vector<Violation> check_pd_axioms(const PairedComplex& pc) {
  std::vector<Violation> out;
  const BigradedComplex& c = pc.base();
  const int n = pc.n();
  for (const Bidegree& b : c.support()) {
    if (b.p < 0 || b.q < 0 || b.p > n || b.q > n) {
      out.push_back({"support in [0,n]^2", b, "nonzero space outside the pd range"});
    }
  }
  if (c.dim({0, 0}) != 1) {
    out.push_back({"dim A^{0,0} = 1", {0, 0}, "dimension is " + std::to_string(c.dim({0, 0}))});
  }
  if (c.dim({n, n}) != 1) {
    out.push_back({"dim A^{n,n} = 1", {n, n}, "dimension is " + std::to_string(c.dim({n, n}))});
  }
  for (const Bidegree& b : antidiagonal_order(n)) {
    Matrix p = pc.pairing(b);
    if (p.rows() != p.cols()) {
      out.push_back({"pairing square", b,
                     "A^{p,q} and A^{n-p,n-q} have dimensions " + std::to_string(p.rows()) + " and " +
                         std::to_string(p.cols())});
    } else if (rank(p) != p.rows()) {
      out.push_back({"pairing nondegenerate", b,
                     "pairing has rank " + std::to_string(rank(p)) + " < " + std::to_string(p.rows())});
    }
  }
  if (!c.d_total(0).is_zero()) out.push_back({"d(Tot^0) = 0", {0, 0}, "d is nonzero in degree 0"});
  if (!c.d_total(2 * n - 1).is_zero()) {
    out.push_back({"d(Tot^{2n-1}) = 0", {n, n - 1}, "d is nonzero into the top degree"});
  }
  return out;
}

Matrix adjoint_via_star(const PairedComplex& pc, Differential which, int p, int q) {
  pc.require_axioms();
  const BigradedComplex& c = pc.base();
  Bidegree b{p, q};
  Bidegree mid = pc.dual(b);
  Matrix d = which == Differential::Del ? c.del(mid) : c.delbar(mid);
  Bidegree after = which == Differential::Del ? Bidegree{mid.p + 1, mid.q} : Bidegree{mid.p, mid.q + 1};
  ConjLinearMap inner = pc.star(b).before(d);
  return -pc.star(after).after(inner);
}

Matrix adjoint(const PairedComplex& pc, Differential which, int p, int q) {
  const BigradedComplex& c = pc.base();
  Bidegree src = which == Differential::Del ? Bidegree{p - 1, q} : Bidegree{p, q - 1};
  Matrix direct = (which == Differential::Del ? c.del(src) : c.delbar(src)).conjugate_transpose();
  Matrix via_star = adjoint_via_star(pc, which, p, q);
  if (direct != via_star) {
    throw AdjointMismatch(std::string(which == Differential::Del ? "del" : "delbar") +
                          "* at " + to_string(Bidegree{p, q}) +
                          ": conjugate transpose and -star d star disagree");
  }
  return direct;
}

std::string laplacian_key(LaplacianKind k) {
  switch (k) {
    case LaplacianKind::DeRham: return "dr";
    case LaplacianKind::Del: return "del";
    case LaplacianKind::Delbar: return "delbar";
    case LaplacianKind::BottChern: return "bc";
    case LaplacianKind::Aeppli: return "aeppli";
  }
  return "?";
}

const std::vector<LaplacianKind>& all_laplacians() {
  static const std::vector<LaplacianKind> all{LaplacianKind::DeRham, LaplacianKind::Del,
                                              LaplacianKind::Delbar, LaplacianKind::BottChern,
                                              LaplacianKind::Aeppli};
  return all;
}

namespace {

// a a^H and a^H a.
Matrix outer(const Matrix& a) { return a * a.conjugate_transpose(); }
Matrix inner(const Matrix& a) { return a.conjugate_transpose() * a; }

}  // namespace

Matrix laplacian(const PairedComplex& pc, LaplacianKind kind, int p, int q) {
  pc.require_axioms();
  const BigradedComplex& c = pc.base();
  Bidegree b{p, q};
  switch (kind) {
    case LaplacianKind::DeRham: {
      const int k = p + q;
      return outer(c.d_total(k - 1)) + inner(c.d_total(k));
    }
    case LaplacianKind::Del:
      return outer(c.del({p - 1, q})) + inner(c.del(b));
    case LaplacianKind::Delbar:
      return outer(c.delbar({p, q - 1})) + inner(c.delbar(b));
    case LaplacianKind::BottChern: {
      Matrix dd_in = c.del_delbar({p - 1, q - 1});
      Matrix dd_out = c.del_delbar(b);
      // delbar* del landing in A^{p,q}, and leaving it.
      Matrix g_in = c.delbar(b).conjugate_transpose() * c.del({p - 1, q + 1});
      Matrix g_out = c.delbar({p + 1, q - 1}).conjugate_transpose() * c.del(b);
      return outer(dd_in) + inner(dd_out) + outer(g_in) + inner(g_out) + inner(c.delbar(b)) +
             inner(c.del(b));
    }
    case LaplacianKind::Aeppli: {
      Matrix dd_in = c.del_delbar({p - 1, q - 1});
      Matrix dd_out = c.del_delbar(b);
      // delbar del* landing in A^{p,q}, and leaving it.
      Matrix h_in = c.delbar({p, q - 1}) * c.del({p, q - 1}).conjugate_transpose();
      Matrix h_out = c.delbar({p - 1, q}) * c.del({p - 1, q}).conjugate_transpose();
      return outer(c.del({p - 1, q})) + outer(c.delbar({p, q - 1})) + inner(dd_out) + outer(dd_in) +
             inner(h_out) + outer(h_in);
    }
  }
  throw std::logic_error("unknown laplacian kind");
}

std::size_t laplacian_kernel_dim(const PairedComplex& pc, LaplacianKind kind, int p, int q) {
  return kernel(laplacian(pc, kind, p, q)).dim();
}

std::size_t laplacian_kernel_dim_total(const PairedComplex& pc, int k) {
  return laplacian_kernel_dim(pc, LaplacianKind::DeRham, k, 0);
}

bool check_harmonic_decomposition(const Matrix& l) {
  if (l.rows() != l.cols()) return false;
  Subspace ker = kernel(l);
  Subspace im = column_space(l);
  return subspace_intersection(ker, im).dim() == 0 && ker.dim() + im.dim() == l.rows();
}

bool check_harmonic_decomposition(const PairedComplex& pc, LaplacianKind kind, int p, int q) {
  return check_harmonic_decomposition(laplacian(pc, kind, p, q));
}

std::vector<DualityMismatch> star_duality_check(const PairedComplex& pc) {
  pc.require_axioms();
  std::vector<DualityMismatch> out;
  const BigradedComplex& c = pc.base();
  for (const Bidegree& b : antidiagonal_order(pc.n())) {
    Bidegree d = pc.dual(b);
    DualityMismatch m;
    m.at = b;
    m.h_bc = h_bott_chern(c, b.p, b.q).dimension;
    m.h_aeppli_dual = h_aeppli(c, d.p, d.q).dimension;
    Matrix s = pc.star(b).matrix;
    Matrix lbc = laplacian(pc, LaplacianKind::BottChern, b.p, b.q);
    Matrix la = laplacian(pc, LaplacianKind::Aeppli, d.p, d.q);
    m.intertwines = s * lbc.conj() == la * s;
    if (m.h_bc != m.h_aeppli_dual || !m.intertwines) out.push_back(m);
  }
  return out;
}

}  // namespace bcforge
