#pragma once

#include <cstdint>
#include <random>

#include "bcforge/linalg.hpp"

namespace testsupport {

inline bcforge::Scalar small_scalar(std::mt19937_64& rng, int lo = -2, int hi = 2,
                                    bool gaussian = true) {
  std::uniform_int_distribution<int> d(lo, hi);
  long re = d(rng);
  long im = gaussian ? d(rng) : 0;
  return bcforge::Scalar(mpq_class(re), mpq_class(im));
}

inline bcforge::Matrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols,
                                     int lo = -2, int hi = 2, bool gaussian = true) {
  bcforge::Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = small_scalar(rng, lo, hi, gaussian);
  return m;
}

// Product of two random factors through an inner dimension, giving rank <= inner.
inline bcforge::Matrix random_low_rank(std::mt19937_64& rng, std::size_t rows, std::size_t cols,
                                       std::size_t inner) {
  return random_matrix(rng, rows, inner) * random_matrix(rng, inner, cols);
}

inline bcforge::Vector random_vector(std::mt19937_64& rng, std::size_t n) {
  bcforge::Vector v(n);
  for (auto& x : v) x = small_scalar(rng);
  return v;
}

// Random invertible matrix: unit lower times unit upper triangular.
inline bcforge::Matrix random_invertible(std::mt19937_64& rng, std::size_t n) {
  bcforge::Matrix l = bcforge::Matrix::identity(n);
  bcforge::Matrix u = bcforge::Matrix::identity(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      l(i, j) = small_scalar(rng, -1, 1);
      u(j, i) = small_scalar(rng, -1, 1);
    }
  }
  return l * u;
}

}  // namespace testsupport
