#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "hopfcat/error.hpp"
#include "hopfcat/matrix.hpp"

namespace hopfcat {

namespace detail {

template <class K>
using Sparse = typename Matrix<K>::Column;

// v += s * w on sorted sparse vectors.
template <class K>
void axpy(Sparse<K>& v, const K& s, const Sparse<K>& w) {
  if (s.is_zero() || w.empty()) return;
  Sparse<K> out;
  out.reserve(v.size() + w.size());
  std::size_t p = 0, q = 0;
  while (p < v.size() || q < w.size()) {
    if (q == w.size() || (p < v.size() && v[p].first < w[q].first)) {
      out.push_back(std::move(v[p++]));
    } else if (p == v.size() || w[q].first < v[p].first) {
      out.emplace_back(w[q].first, s * w[q].second);
      ++q;
    } else {
      K x = v[p].second + s * w[q].second;
      if (!x.is_zero()) out.emplace_back(v[p].first, std::move(x));
      ++p;
      ++q;
    }
  }
  v = std::move(out);
}

template <class K>
void scale(Sparse<K>& v, const K& s) {
  for (auto& e : v) e.second *= s;
}

template <class K>
K entry(const Sparse<K>& v, std::size_t row) {
  auto it = std::lower_bound(v.begin(), v.end(), row,
                             [](const auto& e, std::size_t r) { return e.first < r; });
  return it != v.end() && it->first == row ? it->second : K(0);
}

}  // namespace detail

/// Incremental column echelon form. Columns are fed one at a time; each
/// independent column becomes a pivot (leading entry 1 at its pivot row), each
/// dependent one yields a kernel vector. Coefficients record every pivot as a
/// combination of the inputs, so the same object solves linear systems.
template <class K>
class ColumnEchelon {
 public:
  using Vec = detail::Sparse<K>;

  explicit ColumnEchelon(bool track = true) : track_(track) {}

  /// Adds input column number `count()`; returns true when it is independent.
  bool push(Vec v) {
    const std::size_t index = inputs_++;
    Vec coef;
    if (track_) coef.emplace_back(index, K(1));
    reduce(v, coef);
    if (v.empty()) {
      if (track_) kernel_.push_back(std::move(coef));
      return false;
    }
    const K inv = v.front().second.inverse();
    detail::scale(v, inv);
    if (track_) detail::scale(coef, inv);
    pivot_index_.emplace(v.front().first, basis_.size());
    basis_.push_back(std::move(v));
    coeffs_.push_back(std::move(coef));
    return true;
  }

  /// Reduces v against the pivots; coef accumulates minus the multiples used.
  void reduce(Vec& v, Vec& coef) const {
    while (!v.empty()) {
      auto it = pivot_index_.find(v.front().first);
      if (it == pivot_index_.end()) return;
      const K s = -v.front().second;
      detail::axpy(v, s, basis_[it->second]);
      if (track_) detail::axpy(coef, s, coeffs_[it->second]);
    }
  }

  /// Coefficients x (over the inputs) with sum x_i * input_i = b, if any.
  [[nodiscard]] std::optional<Vec> express(Vec b) const {
    Vec coef;
    reduce(b, coef);
    if (!b.empty()) return std::nullopt;
    detail::scale(coef, K(-1));
    return coef;
  }

  [[nodiscard]] std::size_t rank() const { return basis_.size(); }
  [[nodiscard]] std::size_t count() const { return inputs_; }
  [[nodiscard]] const std::vector<Vec>& kernel() const { return kernel_; }
  [[nodiscard]] const std::vector<Vec>& basis() const { return basis_; }

 private:
  bool track_;
  std::size_t inputs_ = 0;
  std::vector<Vec> basis_;
  std::vector<Vec> coeffs_;
  std::vector<Vec> kernel_;
  std::unordered_map<std::size_t, std::size_t> pivot_index_;
};

template <class K>
ColumnEchelon<K> column_echelon(const Matrix<K>& m, bool track = true) {
  ColumnEchelon<K> ech(track);
  for (std::size_t j = 0; j < m.cols(); ++j) ech.push(m.column(j));
  return ech;
}

template <class K>
std::size_t rank(const Matrix<K>& m) {
  return column_echelon(m, false).rank();
}

/// A subspace of K^ambient_dim given by independent basis columns. When the
/// basis is in reduced column echelon form, `pivots` lists the pivot row of
/// each column, which makes coordinates a lookup.
template <class K>
struct SubspaceEmbedding {
  std::size_t ambient_dim = 0;
  Matrix<K> basis;
  std::vector<std::size_t> pivots;

  [[nodiscard]] std::size_t dim() const { return basis.cols(); }
};

/// Reduced column echelon basis of the span of the given vectors.
template <class K>
SubspaceEmbedding<K> canonical_span(std::size_t ambient, const std::vector<detail::Sparse<K>>& vecs) {
  ColumnEchelon<K> ech(false);
  for (const auto& v : vecs) ech.push(v);
  std::vector<detail::Sparse<K>> cols = ech.basis();
  std::sort(cols.begin(), cols.end(),
            [](const auto& a, const auto& b) { return a.front().first < b.front().first; });
  // back-substitute: clear each pivot row from the columns with smaller pivots
  for (std::size_t k = cols.size(); k-- > 0;) {
    const std::size_t p = cols[k].front().first;
    for (std::size_t l = 0; l < k; ++l) {
      const K c = detail::entry<K>(cols[l], p);
      if (!c.is_zero()) detail::axpy(cols[l], -c, cols[k]);
    }
  }
  SubspaceEmbedding<K> out;
  out.ambient_dim = ambient;
  out.pivots.reserve(cols.size());
  for (const auto& c : cols) out.pivots.push_back(c.front().first);
  out.basis = Matrix<K>::from_columns(ambient, std::move(cols));
  return out;
}

template <class K>
SubspaceEmbedding<K> kernel_basis(const Matrix<K>& m) {
  return canonical_span<K>(m.cols(), column_echelon(m).kernel());
}

template <class K>
SubspaceEmbedding<K> image_basis(const Matrix<K>& m) {
  std::vector<detail::Sparse<K>> cols;
  for (std::size_t j = 0; j < m.cols(); ++j) cols.push_back(m.column(j));
  return canonical_span<K>(m.rows(), cols);
}

template <class K>
struct LinearSolution {
  bool consistent = false;
  std::size_t kernel_dim = 0;
  Matrix<K> particular;  // a with m * a = rhs, when consistent
};

/// Solves m * x = rhs column by column.
template <class K>
LinearSolution<K> solve_linear(const Matrix<K>& m, const Matrix<K>& rhs) {
  require(m.rows() == rhs.rows(), ErrorKind::shape_mismatch, [&] {
    return "system " + m.shape() + " with right-hand side " + rhs.shape();
  });
  const auto ech = column_echelon(m);
  LinearSolution<K> out;
  out.kernel_dim = m.cols() - ech.rank();
  out.particular = Matrix<K>(m.cols(), rhs.cols());
  for (std::size_t j = 0; j < rhs.cols(); ++j) {
    auto x = ech.express(rhs.column(j));
    if (!x) return out;
    out.particular.set_column(j, std::move(*x));
  }
  out.consistent = true;
  return out;
}

template <class K>
Matrix<K> mat_inverse(const Matrix<K>& m) {
  require(m.is_square(), ErrorKind::shape_mismatch, "inverse of non-square " + m.shape());
  const auto sol = solve_linear(m, Matrix<K>::identity(m.rows()));
  require(sol.consistent && sol.kernel_dim == 0, ErrorKind::not_invertible,
          "matrix " + m.shape() + " has rank " + std::to_string(m.cols() - sol.kernel_dim));
  return sol.particular;
}

template <class K>
bool is_invertible(const Matrix<K>& m) {
  return m.is_square() && rank(m) == m.rows();
}

/// x with basis(e) * x = h.
template <class K>
Matrix<K> factor_through(const SubspaceEmbedding<K>& e, const Matrix<K>& h) {
  require(h.rows() == e.ambient_dim, ErrorKind::shape_mismatch, [&] {
    return "factor " + h.shape() + " through subspace of K^" + std::to_string(e.ambient_dim);
  });
  Matrix<K> x(e.dim(), h.cols());
  if (e.pivots.size() == e.dim()) {
    std::unordered_map<std::size_t, std::size_t> where;
    for (std::size_t k = 0; k < e.pivots.size(); ++k) where.emplace(e.pivots[k], k);
    for (std::size_t j = 0; j < h.cols(); ++j) {
      typename Matrix<K>::Column col;
      for (const auto& [row, v] : h.column(j)) {
        auto it = where.find(row);
        if (it != where.end()) col.emplace_back(it->second, v);
      }
      x.set_column(j, std::move(col));
    }
    require(e.basis * x == h, ErrorKind::not_in_subspace,
            "column of " + h.shape() + " leaves the subspace");
    return x;
  }
  const auto sol = solve_linear(e.basis, h);
  require(sol.consistent, ErrorKind::not_in_subspace,
          "column of " + h.shape() + " leaves the subspace");
  return sol.particular;
}

/// Equalizer of f and g as ker(f - g). A retraction r with r f = r g = 1
/// certifies that the pair is coreflexive.
template <class K>
SubspaceEmbedding<K> equalizer_subspace(const Matrix<K>& f, const Matrix<K>& g,
                                        const std::optional<Matrix<K>>& retraction = std::nullopt) {
  require(f.rows() == g.rows() && f.cols() == g.cols(), ErrorKind::shape_mismatch, [&] {
    return "parallel pair " + f.shape() + " and " + g.shape();
  });
  if (retraction) {
    const auto id = Matrix<K>::identity(f.cols());
    require(*retraction * f == id && *retraction * g == id, ErrorKind::not_coreflexive,
            "retraction is not common to the pair");
  }
  return kernel_basis(Matrix<K>(f - g));
}

}  // namespace hopfcat
