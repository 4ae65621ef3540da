#pragma once

// Reference computations that share no code with the library's elimination:
// fraction-free Bareiss elimination over the Gaussian integers Z[i].

#include <gmpxx.h>

#include <cstddef>
#include <utility>
#include <vector>

#include "bcforge/matrix.hpp"

namespace oracle {

struct GaussInt {
  mpz_class re{0};
  mpz_class im{0};

  bool zero() const { return sgn(re) == 0 && sgn(im) == 0; }
};

inline GaussInt mul(const GaussInt& a, const GaussInt& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

inline GaussInt sub(const GaussInt& a, const GaussInt& b) { return {a.re - b.re, a.im - b.im}; }

// Exact quotient a / b; Bareiss guarantees divisibility.
inline GaussInt exact_div(const GaussInt& a, const GaussInt& b) {
  mpz_class n = b.re * b.re + b.im * b.im;
  mpz_class re = a.re * b.re + a.im * b.im;
  mpz_class im = a.im * b.re - a.re * b.im;
  mpz_class qr, qi;
  mpz_divexact(qr.get_mpz_t(), re.get_mpz_t(), n.get_mpz_t());
  mpz_divexact(qi.get_mpz_t(), im.get_mpz_t(), n.get_mpz_t());
  return {qr, qi};
}

// Scales every row by the lcm of its denominators to land in Z[i].
inline std::vector<std::vector<GaussInt>> integral_rows(const bcforge::Matrix& m) {
  std::vector<std::vector<GaussInt>> out(m.rows(), std::vector<GaussInt>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    mpz_class l = 1;
    for (std::size_t c = 0; c < m.cols(); ++c) {
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(r, c).re().get_den_mpz_t());
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(r, c).im().get_den_mpz_t());
    }
    for (std::size_t c = 0; c < m.cols(); ++c) {
      mpq_class re = m(r, c).re() * l;
      mpq_class im = m(r, c).im() * l;
      out[r][c] = {re.get_num(), im.get_num()};
    }
  }
  return out;
}

inline std::size_t bareiss_rank(const bcforge::Matrix& m) {
  auto a = integral_rows(m);
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  GaussInt prev{1, 0};
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && a[piv][c].zero()) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        a[i][j] = exact_div(sub(mul(a[r][c], a[i][j]), mul(a[i][c], a[r][j])), prev);
      }
      a[i][c] = GaussInt{};
    }
    prev = a[r][c];
    ++r;
  }
  return r;
}

inline std::size_t kernel_dim(const bcforge::Matrix& m) { return m.cols() - bareiss_rank(m); }

}  // namespace oracle
