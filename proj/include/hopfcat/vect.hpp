#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "hopfcat/error.hpp"
#include "hopfcat/field.hpp"
#include "hopfcat/matrix.hpp"
#include "hopfcat/tensor.hpp"

namespace hopfcat {

/// Finite-dimensional parity-graded vector space; an all-zero parity is the
/// trivially graded case.
struct VectObject {
  std::size_t dim = 0;
  Parity parity;

  static VectObject even(std::size_t n) { return {n, Parity(n, 0)}; }
  static VectObject graded(Parity p) {
    for (int b : p) require(b == 0 || b == 1, ErrorKind::invalid_argument, "parity entries must be 0 or 1");
    return {p.size(), p};
  }
  static VectObject unit() { return even(1); }

  [[nodiscard]] bool trivially_graded() const {
    for (int b : parity) {
      if (b != 0) return false;
    }
    return true;
  }

  friend bool operator==(const VectObject&, const VectObject&) = default;
};

inline VectObject tensor_objects(const VectObject& x, const VectObject& y) {
  VectObject out{x.dim * y.dim, Parity(x.dim * y.dim)};
  for (std::size_t i = 0; i < x.dim; ++i) {
    for (std::size_t j = 0; j < y.dim; ++j) out.parity[i * y.dim + j] = x.parity[i] ^ y.parity[j];
  }
  return out;
}

inline VectObject tensor_objects(const std::vector<VectObject>& xs) {
  VectObject out = VectObject::unit();
  for (const auto& x : xs) out = tensor_objects(out, x);
  return out;
}

enum class BraidingKind { symmetric, super };

inline std::string to_string(BraidingKind kind) {
  return kind == BraidingKind::symmetric ? "symmetric" : "super";
}

inline BraidingKind parse_braiding(const std::string& text) {
  if (text == "symmetric") return BraidingKind::symmetric;
  if (text == "super") return BraidingKind::super;
  fail(ErrorKind::parse_error, "unknown braiding '" + text + "'");
}

/// In characteristic 2 the super signs are all +1, so the super braiding is
/// only accepted there when the caller says so.
inline void validate_braiding(BraidingKind kind, const FieldSpec& spec, bool acknowledge_char2 = false) {
  require(kind != BraidingKind::super || spec.characteristic() != 2 || acknowledge_char2,
          ErrorKind::invalid_argument,
          "super braiding over prime:2 collapses to the symmetric one; acknowledge explicitly");
}

template <class K>
struct MorphismV {
  VectObject dom;
  VectObject cod;
  Matrix<K> mat;

  MorphismV() = default;
  MorphismV(VectObject d, VectObject c, Matrix<K> m) : dom(std::move(d)), cod(std::move(c)), mat(std::move(m)) {
    require(mat.rows() == cod.dim && mat.cols() == dom.dim, ErrorKind::shape_mismatch, [&] {
      return "matrix " + mat.shape() + " for a map of dimension " + std::to_string(dom.dim) + " -> " +
             std::to_string(cod.dim);
    });
    if (!dom.trivially_graded() && !cod.trivially_graded()) {
      for (std::size_t j = 0; j < mat.cols(); ++j) {
        for (const auto& e : mat.column(j)) {
          require(cod.parity[e.first] == dom.parity[j], ErrorKind::axiom_violation, [&] {
            return "entry (" + std::to_string(e.first) + "," + std::to_string(j) + ") mixes parities";
          });
        }
      }
    }
  }

  static MorphismV identity(const VectObject& x) { return {x, x, Matrix<K>::identity(x.dim)}; }
};

template <class K>
MorphismV<K> compose(const MorphismV<K>& g, const MorphismV<K>& f) {
  require(g.dom.dim == f.cod.dim, ErrorKind::shape_mismatch, [&] {
    return "composite of " + g.mat.shape() + " after " + f.mat.shape();
  });
  return {f.dom, g.cod, g.mat * f.mat};
}

template <class K>
MorphismV<K> tensor_morphisms(const MorphismV<K>& f, const MorphismV<K>& g) {
  return {tensor_objects(f.dom, g.dom), tensor_objects(f.cod, g.cod), kron(f.mat, g.mat)};
}

/// c_{x,y}: basis vector (i, j) of x (x) y goes to +-(j, i) of y (x) x.
template <class K>
MorphismV<K> braiding(const VectObject& x, const VectObject& y, BraidingKind kind) {
  Matrix<K> m(x.dim * y.dim, x.dim * y.dim);
  for (std::size_t i = 0; i < x.dim; ++i) {
    for (std::size_t j = 0; j < y.dim; ++j) {
      const bool odd = kind == BraidingKind::super && x.parity[i] && y.parity[j];
      m.set(j * x.dim + i, i * y.dim + j, K(odd ? -1 : 1));
    }
  }
  return {tensor_objects(x, y), tensor_objects(y, x), m};
}

/// Parities of the legs for permute_legs; empty under the symmetric braiding.
inline std::vector<Parity> leg_parities(const std::vector<VectObject>& legs, BraidingKind kind) {
  if (kind == BraidingKind::symmetric) return {};
  std::vector<Parity> out;
  for (const auto& x : legs) out.push_back(x.parity);
  return out;
}

inline std::vector<std::size_t> leg_dims(const std::vector<VectObject>& legs) {
  std::vector<std::size_t> out;
  for (const auto& x : legs) out.push_back(x.dim);
  return out;
}

}  // namespace hopfcat
