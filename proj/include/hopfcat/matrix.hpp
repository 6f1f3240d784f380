#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hopfcat/error.hpp"
#include "hopfcat/field.hpp"

namespace hopfcat {

/// Exact matrix stored column by column; each column keeps its nonzero
/// entries sorted by row. Tensor indices follow the zero-based row-major
/// lexicographic convention: (i, j) in X (x) Y is i * dim(Y) + j.
template <class K>
class Matrix {
 public:
  using Entry = std::pair<std::size_t, K>;
  using Column = std::vector<Entry>;

  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(cols) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.data_[i].emplace_back(i, K(1));
    return m;
  }

  static Matrix zero(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }

  static Matrix from_rows(const std::vector<std::vector<K>>& rows, std::size_t cols_if_empty = 0) {
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? cols_if_empty : rows.front().size();
    Matrix m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
      require(rows[i].size() == c, ErrorKind::shape_mismatch,
              "row " + std::to_string(i) + " has " + std::to_string(rows[i].size()) +
                  " entries, expected " + std::to_string(c));
      for (std::size_t j = 0; j < c; ++j) {
        if (!rows[i][j].is_zero()) m.data_[j].emplace_back(i, rows[i][j]);
      }
    }
    return m;
  }

  static Matrix from_columns(std::size_t rows, std::vector<Column> cols) {
    Matrix m(rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) m.set_column(j, std::move(cols[j]));
    return m;
  }

  /// Integer shorthand used throughout the tests and constructors.
  static Matrix from_ints(const std::vector<std::vector<long>>& rows) {
    std::vector<std::vector<K>> conv;
    conv.reserve(rows.size());
    for (const auto& row : rows) conv.emplace_back(row.begin(), row.end());
    return from_rows(conv);
  }

  [[nodiscard]] std::size_t rows() const { return rows_; }
  [[nodiscard]] std::size_t cols() const { return cols_; }
  [[nodiscard]] bool is_square() const { return rows_ == cols_; }
  [[nodiscard]] const Column& column(std::size_t j) const { return data_[j]; }

  [[nodiscard]] std::size_t nnz() const {
    std::size_t n = 0;
    for (const auto& c : data_) n += c.size();
    return n;
  }

  [[nodiscard]] K at(std::size_t i, std::size_t j) const {
    check_index(i, j);
    const auto& col = data_[j];
    auto it = std::lower_bound(col.begin(), col.end(), i,
                               [](const Entry& e, std::size_t r) { return e.first < r; });
    return it != col.end() && it->first == i ? it->second : K(0);
  }

  void set(std::size_t i, std::size_t j, const K& v) {
    check_index(i, j);
    auto& col = data_[j];
    auto it = std::lower_bound(col.begin(), col.end(), i,
                               [](const Entry& e, std::size_t r) { return e.first < r; });
    const bool present = it != col.end() && it->first == i;
    if (v.is_zero()) {
      if (present) col.erase(it);
    } else if (present) {
      it->second = v;
    } else {
      col.insert(it, Entry{i, v});
    }
  }

  void add(std::size_t i, std::size_t j, const K& v) { set(i, j, at(i, j) + v); }

  /// Replaces column j by the given entries (any order, duplicates summed).
  void set_column(std::size_t j, Column entries) {
    require(j < cols_, ErrorKind::shape_mismatch, "column index out of range");
    normalize(entries);
    for (const auto& e : entries) {
      require(e.first < rows_, ErrorKind::shape_mismatch, "row index out of range");
    }
    data_[j] = std::move(entries);
  }

  /// Sorts by row, sums duplicates and drops zeros.
  static void normalize(Column& entries) {
    if (entries.empty()) return;
    if (!std::is_sorted(entries.begin(), entries.end(),
                        [](const Entry& a, const Entry& b) { return a.first < b.first; })) {
      std::sort(entries.begin(), entries.end(),
                [](const Entry& a, const Entry& b) { return a.first < b.first; });
    }
    std::size_t out = 0;
    for (std::size_t k = 0; k < entries.size();) {
      std::size_t row = entries[k].first;
      K sum = std::move(entries[k].second);
      for (++k; k < entries.size() && entries[k].first == row; ++k) sum += entries[k].second;
      if (!sum.is_zero()) entries[out++] = Entry{row, std::move(sum)};
    }
    entries.resize(out);
  }

  [[nodiscard]] Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t j = 0; j < cols_; ++j) {
      for (const auto& e : data_[j]) t.data_[e.first].emplace_back(j, e.second);
    }
    return t;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    require(a.cols_ == b.rows_, ErrorKind::shape_mismatch, [&] {
      return "product of " + a.shape() + " and " + b.shape();
    });
    Matrix out(a.rows_, b.cols_);
    Column acc;
    for (std::size_t j = 0; j < b.cols_; ++j) {
      acc.clear();
      for (const auto& [k, bv] : b.data_[j]) {
        for (const auto& [i, av] : a.data_[k]) acc.emplace_back(i, av * bv);
      }
      normalize(acc);
      out.data_[j] = acc;
    }
    return out;
  }

  friend Matrix operator+(const Matrix& a, const Matrix& b) { return combine(a, b, false); }
  friend Matrix operator-(const Matrix& a, const Matrix& b) { return combine(a, b, true); }

  friend Matrix operator*(const K& s, const Matrix& m) {
    if (s.is_zero()) return Matrix(m.rows_, m.cols_);
    Matrix out = m;
    for (auto& col : out.data_) {
      for (auto& e : col) e.second *= s;
    }
    return out;
  }

  friend Matrix operator-(const Matrix& m) { return K(-1) * m; }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  [[nodiscard]] std::string shape() const {
    return std::to_string(rows_) + "x" + std::to_string(cols_);
  }

  [[nodiscard]] std::vector<std::vector<K>> dense_rows() const {
    require(rows_ * cols_ <= (std::size_t{1} << 26), ErrorKind::shape_mismatch,
            "matrix " + shape() + " too large to densify");
    std::vector<std::vector<K>> out(rows_, std::vector<K>(cols_, K(0)));
    for (std::size_t j = 0; j < cols_; ++j) {
      for (const auto& [i, v] : data_[j]) out[i][j] = v;
    }
    return out;
  }

  /// Keeps columns [first, first + count).
  [[nodiscard]] Matrix columns(std::size_t first, std::size_t count) const {
    require(first + count <= cols_, ErrorKind::shape_mismatch, "column range out of bounds");
    Matrix out(rows_, count);
    for (std::size_t j = 0; j < count; ++j) out.data_[j] = data_[first + j];
    return out;
  }

  /// Horizontal concatenation [a | b].
  friend Matrix hstack(const Matrix& a, const Matrix& b) {
    require(a.rows_ == b.rows_, ErrorKind::shape_mismatch, [&] {
      return "hstack of " + a.shape() + " and " + b.shape();
    });
    Matrix out(a.rows_, a.cols_ + b.cols_);
    std::copy(a.data_.begin(), a.data_.end(), out.data_.begin());
    std::copy(b.data_.begin(), b.data_.end(), out.data_.begin() + static_cast<std::ptrdiff_t>(a.cols_));
    return out;
  }

 private:
  void check_index(std::size_t i, std::size_t j) const {
    require(i < rows_ && j < cols_, ErrorKind::shape_mismatch, [&] {
      return "index (" + std::to_string(i) + "," + std::to_string(j) + ") outside " + shape();
    });
  }

  static Matrix combine(const Matrix& a, const Matrix& b, bool subtract) {
    require(a.rows_ == b.rows_ && a.cols_ == b.cols_, ErrorKind::shape_mismatch, [&] {
      return (subtract ? "difference of " : "sum of ") + a.shape() + " and " + b.shape();
    });
    Matrix out(a.rows_, a.cols_);
    for (std::size_t j = 0; j < a.cols_; ++j) {
      const auto& x = a.data_[j];
      const auto& y = b.data_[j];
      auto& z = out.data_[j];
      z.reserve(x.size() + y.size());
      std::size_t p = 0, q = 0;
      while (p < x.size() || q < y.size()) {
        if (q == y.size() || (p < x.size() && x[p].first < y[q].first)) {
          z.push_back(x[p++]);
        } else if (p == x.size() || y[q].first < x[p].first) {
          z.emplace_back(y[q].first, subtract ? -y[q].second : y[q].second);
          ++q;
        } else {
          K v = subtract ? x[p].second - y[q].second : x[p].second + y[q].second;
          if (!v.is_zero()) z.emplace_back(x[p].first, std::move(v));
          ++p;
          ++q;
        }
      }
    }
    return out;
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Column> data_;
};

template <class K>
Matrix<K> kron(const Matrix<K>& a, const Matrix<K>& b) {
  Matrix<K> out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t ja = 0; ja < a.cols(); ++ja) {
    for (std::size_t jb = 0; jb < b.cols(); ++jb) {
      typename Matrix<K>::Column col;
      col.reserve(a.column(ja).size() * b.column(jb).size());
      for (const auto& [ia, av] : a.column(ja)) {
        for (const auto& [ib, bv] : b.column(jb)) col.emplace_back(ia * b.rows() + ib, av * bv);
      }
      out.set_column(ja * b.cols() + jb, std::move(col));
    }
  }
  return out;
}

template <class K>
Matrix<K> kron(const Matrix<K>& a, const Matrix<K>& b, const Matrix<K>& c) {
  return kron(kron(a, b), c);
}

/// First entry where a and b differ, rendered "(i,j): lhs=.. rhs=..".
template <class K>
std::optional<std::string> first_difference(const Matrix<K>& a, const Matrix<K>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    return "shape " + a.shape() + " vs " + b.shape();
  }
  for (std::size_t j = 0; j < a.cols(); ++j) {
    const auto& x = a.column(j);
    const auto& y = b.column(j);
    if (x == y) continue;
    std::size_t p = 0;
    while (p < x.size() && p < y.size() && x[p] == y[p]) ++p;
    std::size_t row;
    if (p == x.size()) {
      row = y[p].first;
    } else if (p == y.size()) {
      row = x[p].first;
    } else {
      row = std::min(x[p].first, y[p].first);
    }
    return "(" + std::to_string(row) + "," + std::to_string(j) + "): lhs=" + a.at(row, j).str() +
           " rhs=" + b.at(row, j).str();
  }
  return std::nullopt;
}

}  // namespace hopfcat
