#pragma once

#include <gtest/gtest.h>

#include <cstddef>
#include <cstdint>
#include <type_traits>
#include <ostream>
#include <random>
#include <vector>

#include "hopfcat/field.hpp"
#include "hopfcat/matrix.hpp"

namespace hopfcat {

template <class K>
void PrintTo(const Matrix<K>& m, std::ostream* os) {
  *os << m.shape();
  if (m.rows() * m.cols() > 400) return;
  for (const auto& row : m.dense_rows()) {
    *os << "\n ";
    for (const auto& v : row) *os << ' ' << v.str();
  }
}

}  // namespace hopfcat

namespace hopfcat::testing {

using Rat = Rational;

/// Residues modulo 5, bound so that printing and comparisons are canonical.
inline ModP gf5(long v) { return ModP::from_int(v, FieldSpec::prime(5)); }

template <class K>
K scalar(long v) {
  if constexpr (std::is_same_v<K, ModP>) {
    return gf5(v);
  } else {
    return K(v);
  }
}

template <class K>
FieldSpec field_of() {
  if constexpr (std::is_same_v<K, ModP>) {
    return FieldSpec::prime(5);
  } else {
    return FieldSpec::rational();
  }
}

/// Deterministic source of small exact matrices.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  long small(long lo = -3, long hi = 3) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

  template <class K>
  Matrix<K> matrix(std::size_t r, std::size_t c, int zero_percent = 30) {
    Matrix<K> m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
      for (std::size_t j = 0; j < c; ++j) {
        if (small(0, 99) < zero_percent) continue;
        m.set(i, j, scalar<K>(small()));
      }
    }
    return m;
  }

  /// Square matrix of the requested rank built as a product of random factors.
  template <class K>
  Matrix<K> of_rank(std::size_t n, std::size_t r) {
    Matrix<K> a = matrix<K>(n, r, 0);
    Matrix<K> b = matrix<K>(r, n, 0);
    return a * b;
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

// Dense oracles, written independently of the sparse code paths.

template <class K>
using Dense = std::vector<std::vector<K>>;

template <class K>
Dense<K> dense_mul(const Dense<K>& a, const Dense<K>& b) {
  const std::size_t n = a.size(), m = b.empty() ? 0 : b[0].size(), k = b.size();
  Dense<K> c(n, std::vector<K>(m, K(0)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      K s(0);
      for (std::size_t t = 0; t < k; ++t) s += a[i][t] * b[t][j];
      c[i][j] = s;
    }
  }
  return c;
}

template <class K>
std::size_t dense_rank(Dense<K> a) {
  std::size_t rank = 0;
  const std::size_t rows = a.size();
  const std::size_t cols = rows == 0 ? 0 : a[0].size();
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t p = rank;
    while (p < rows && a[p][c].is_zero()) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[rank]);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank || a[r][c].is_zero()) continue;
      const K f = a[r][c] / a[rank][c];
      for (std::size_t k = c; k < cols; ++k) a[r][k] -= f * a[rank][k];
    }
    ++rank;
  }
  return rank;
}

template <class K>
Dense<K> dense_kron(const Dense<K>& a, const Dense<K>& b) {
  const std::size_t ar = a.size(), ac = a[0].size(), br = b.size(), bc = b[0].size();
  Dense<K> out(ar * br, std::vector<K>(ac * bc, K(0)));
  for (std::size_t i = 0; i < ar; ++i)
    for (std::size_t j = 0; j < ac; ++j)
      for (std::size_t k = 0; k < br; ++k)
        for (std::size_t l = 0; l < bc; ++l) out[i * br + k][j * bc + l] = a[i][j] * b[k][l];
  return out;
}

}  // namespace hopfcat::testing
