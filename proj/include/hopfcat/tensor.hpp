#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

#include "hopfcat/error.hpp"
#include "hopfcat/matrix.hpp"

namespace hopfcat {

using Parity = std::vector<int>;

inline std::size_t product(const std::vector<std::size_t>& dims, std::size_t first = 0,
                           std::size_t last = static_cast<std::size_t>(-1)) {
  last = std::min(last, dims.size());
  std::size_t p = 1;
  for (std::size_t i = first; i < last; ++i) p *= dims[i];
  return p;
}

/// (1_before (x) f (x) 1_after) * x, without forming the Kronecker product.
template <class K>
Matrix<K> apply_block(const Matrix<K>& x, std::size_t before, std::size_t after, const Matrix<K>& f) {
  const std::size_t n = f.cols();
  const std::size_t m = f.rows();
  require(x.rows() == before * n * after, ErrorKind::shape_mismatch, [&] {
    return "block map " + f.shape() + " on " + std::to_string(x.rows()) + " rows";
  });
  Matrix<K> out(before * m * after, x.cols());
  typename Matrix<K>::Column acc;
  for (std::size_t j = 0; j < x.cols(); ++j) {
    acc.clear();
    for (const auto& [r, v] : x.column(j)) {
      const std::size_t a = r / (n * after);
      const std::size_t b = (r / after) % n;
      const std::size_t c = r % after;
      for (const auto& [b2, fv] : f.column(b)) acc.emplace_back((a * m + b2) * after + c, fv * v);
    }
    out.set_column(j, acc);
  }
  return out;
}

/// x * (1_before (x) g (x) 1_after).
template <class K>
Matrix<K> apply_block_right(const Matrix<K>& x, std::size_t before, std::size_t after,
                            const Matrix<K>& g) {
  const std::size_t n = g.rows();
  const std::size_t m = g.cols();
  require(x.cols() == before * n * after, ErrorKind::shape_mismatch, [&] {
    return "right block map " + g.shape() + " on " + std::to_string(x.cols()) + " columns";
  });
  Matrix<K> out(x.rows(), before * m * after);
  typename Matrix<K>::Column acc;
  for (std::size_t a = 0; a < before; ++a) {
    for (std::size_t jj = 0; jj < m; ++jj) {
      for (std::size_t c = 0; c < after; ++c) {
        acc.clear();
        for (const auto& [i, gv] : g.column(jj)) {
          for (const auto& [r, v] : x.column((a * n + i) * after + c)) acc.emplace_back(r, v * gv);
        }
        out.set_column((a * m + jj) * after + c, acc);
      }
    }
  }
  return out;
}

/// Applies f to legs [first, first + count) of the row index.
template <class K>
Matrix<K> apply_on_legs(const Matrix<K>& x, const std::vector<std::size_t>& dims, std::size_t first,
                        std::size_t count, const Matrix<K>& f) {
  require(f.cols() == product(dims, first, first + count), ErrorKind::shape_mismatch, [&] {
    return "map " + f.shape() + " on legs " + std::to_string(first) + ".." + std::to_string(first + count);
  });
  return apply_block(x, product(dims, 0, first), product(dims, first + count), f);
}

template <class K>
Matrix<K> apply_on_leg(const Matrix<K>& x, const std::vector<std::size_t>& dims, std::size_t leg,
                       const Matrix<K>& f) {
  return apply_on_legs(x, dims, leg, 1, f);
}

/// (f (x) g) * x for x with rows indexed by cols(f) * cols(g).
template <class K>
Matrix<K> kron_apply(const Matrix<K>& f, const Matrix<K>& g, const Matrix<K>& x) {
  return apply_block(apply_block(x, 1, g.cols(), f), f.rows(), 1, g);
}

/// Reorders the row legs: output leg k is input leg perm[k]. With parities,
/// each transposed pair of odd basis vectors contributes a sign.
template <class K>
Matrix<K> permute_legs(const Matrix<K>& x, const std::vector<std::size_t>& dims,
                       const std::vector<std::size_t>& perm, const std::vector<Parity>& parities = {}) {
  const std::size_t legs = dims.size();
  require(perm.size() == legs && x.rows() == product(dims), ErrorKind::shape_mismatch, [&] {
    return "leg permutation does not match " + std::to_string(x.rows()) + " rows";
  });
  require(parities.empty() || parities.size() == legs, ErrorKind::shape_mismatch,
          "parity list does not match legs");
  std::vector<std::size_t> stride_in(legs), stride_out(legs), pos(legs);
  for (std::size_t k = 0; k < legs; ++k) pos[perm[k]] = k;
  {
    std::size_t s = 1;
    for (std::size_t k = legs; k-- > 0;) {
      stride_in[k] = s;
      s *= dims[k];
    }
    s = 1;
    for (std::size_t k = legs; k-- > 0;) {
      stride_out[k] = s;
      s *= dims[perm[k]];
    }
  }
  std::vector<std::pair<std::size_t, std::size_t>> inversions;
  for (std::size_t s = 0; s < legs; ++s) {
    for (std::size_t t = s + 1; t < legs; ++t) {
      if (pos[s] > pos[t]) inversions.emplace_back(s, t);
    }
  }
  Matrix<K> out(x.rows(), x.cols());
  std::vector<std::size_t> digit(legs);
  typename Matrix<K>::Column acc;
  for (std::size_t j = 0; j < x.cols(); ++j) {
    acc.clear();
    for (const auto& [r, v] : x.column(j)) {
      std::size_t target = 0;
      for (std::size_t k = 0; k < legs; ++k) {
        digit[k] = (r / stride_in[k]) % dims[k];
        target += digit[k] * stride_out[pos[k]];
      }
      int odd = 0;
      if (!parities.empty()) {
        for (const auto& [s, t] : inversions) odd ^= parities[s][digit[s]] & parities[t][digit[t]];
      }
      acc.emplace_back(target, odd ? -v : v);
    }
    out.set_column(j, acc);
  }
  return out;
}

/// The matrix of the leg permutation itself.
template <class K>
Matrix<K> permutation_matrix(const std::vector<std::size_t>& dims, const std::vector<std::size_t>& perm,
                             const std::vector<Parity>& parities = {}) {
  return permute_legs(Matrix<K>::identity(product(dims)), dims, perm, parities);
}

}  // namespace hopfcat
