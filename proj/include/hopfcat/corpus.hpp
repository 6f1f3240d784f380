#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "hopfcat/coalg.hpp"
#include "hopfcat/modules.hpp"

namespace hopfcat::corpus {

inline std::vector<std::vector<std::size_t>> cyclic_table(std::size_t n) {
  std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) t[i][j] = (i + j) % n;
  }
  return t;
}

/// Symmetric group S_3 on permutations listed lexicographically (identity
/// first); entry (i, j) is the composite p_i o p_j.
inline std::vector<std::vector<std::size_t>> s3_table() {
  std::vector<std::array<int, 3>> perms;
  std::array<int, 3> p{0, 1, 2};
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  std::vector<std::vector<std::size_t>> t(6, std::vector<std::size_t>(6));
  for (std::size_t i = 0; i < 6; ++i) {
    for (std::size_t j = 0; j < 6; ++j) {
      std::array<int, 3> c{};
      for (int k = 0; k < 3; ++k) c[k] = perms[i][perms[j][k]];
      t[i][j] = static_cast<std::size_t>(std::find(perms.begin(), perms.end(), c) - perms.begin());
    }
  }
  return t;
}

inline std::vector<std::vector<std::size_t>> idempotent_table() { return {{0, 1}, {1, 1}}; }

template <class K>
Bimonoid<K> c2_group_algebra() {
  return monoid_algebra<K>(cyclic_table(2));
}

template <class K>
Bimonoid<K> s3_group_algebra() {
  return monoid_algebra<K>(s3_table());
}

template <class K>
Bimonoid<K> idempotent_monoid_algebra() {
  return monoid_algebra<K>(idempotent_table());
}

template <class K>
Bimonoid<K> unit_bimonoid() {
  const auto id = Matrix<K>::identity(1);
  return {Comonoid<K>::unit(), Monoid<K>(VectObject::unit(), id, id)};
}

/// Sweedler's four-dimensional Hopf algebra with basis 1, g, x, gx (index
/// a + 2b for g^a x^b): g^2 = 1, x^2 = 0, xg = -gx, with g group-like and
/// x skew-primitive, delta(x) = x (x) 1 + g (x) x. The comultiplication on
/// gx is obtained by multiplying delta(g) delta(x) inside H (x) H.
template <class K>
Bimonoid<K> sweedler_h4() {
  constexpr std::size_t n = 4;
  auto index = [](std::size_t a, std::size_t b) { return a + 2 * b; };
  Matrix<K> mu(n, n * n);
  for (std::size_t a = 0; a < 2; ++a) {
    for (std::size_t b = 0; b < 2; ++b) {
      for (std::size_t c = 0; c < 2; ++c) {
        for (std::size_t d = 0; d < 2; ++d) {
          if (b + d >= 2) continue;
          // g^a x^b g^c x^d = (-1)^(bc) g^(a+c) x^(b+d)
          const long sign = (b * c) % 2 ? -1 : 1;
          mu.set(index((a + c) % 2, b + d), index(a, b) * n + index(c, d), K(sign));
        }
      }
    }
  }
  Matrix<K> eta(n, 1);
  eta.set(0, 0, K(1));
  const auto id = Matrix<K>::identity(n);
  const auto flip = braiding<K>(VectObject::even(n), VectObject::even(n), BraidingKind::symmetric).mat;
  const auto mu2 = kron(mu, mu) * kron(id, flip, id);  // product on H (x) H
  auto basis = [&](std::size_t i, std::size_t j) {
    Matrix<K> v(n * n, 1);
    v.set(i * n + j, 0, K(1));
    return v;
  };
  const Matrix<K> d1 = basis(0, 0);
  const Matrix<K> dg = basis(1, 1);
  const Matrix<K> dx = basis(2, 0) + basis(1, 2);
  const Matrix<K> dgx = mu2 * kron(dg, dx);
  Matrix<K> delta = hstack(hstack(d1, dg), hstack(dx, dgx));
  Matrix<K> eps(1, n);
  eps.set(0, 0, K(1));
  eps.set(0, 1, K(1));
  return {Comonoid<K>(VectObject::even(n), delta, eps), Monoid<K>(VectObject::even(n), mu, eta)};
}

/// The known antipode of Sweedler's algebra: S(1)=1, S(g)=g, S(x)=-gx, S(gx)=x.
template <class K>
Matrix<K> sweedler_antipode() {
  Matrix<K> s(4, 4);
  s.set(0, 0, K(1));
  s.set(1, 1, K(1));
  s.set(3, 2, K(-1));
  s.set(2, 3, K(1));
  return s;
}

/// Divided-power coalgebra truncated at degree 1: delta(d1) = d0 (x) d1 + d1 (x) d0.
template <class K>
Comonoid<K> divided_power_comonoid(const VectObject& carrier = VectObject::even(2)) {
  Matrix<K> d(4, 2);
  d.set(0, 0, K(1));
  d.set(1, 1, K(1));
  d.set(2, 1, K(1));
  Matrix<K> e(1, 2);
  e.set(0, 0, K(1));
  return {carrier, d, e};
}

/// Basis 1, x with x odd and primitive.
template <class K>
Comonoid<K> odd_primitive_comonoid() {
  return divided_power_comonoid<K>(VectObject::graded({0, 1}));
}

/// Basis 1, x, z with x odd primitive and delta(z) = z (x) 1 + 1 (x) z + x (x) x.
template <class K>
Comonoid<K> odd_primitive_extension() {
  constexpr std::size_t n = 3;
  Matrix<K> d(n * n, n);
  d.set(0, 0, K(1));
  d.set(1 * n + 0, 1, K(1));
  d.set(0 * n + 1, 1, K(1));
  d.set(2 * n + 0, 2, K(1));
  d.set(0 * n + 2, 2, K(1));
  d.set(1 * n + 1, 2, K(1));
  Matrix<K> e(1, n);
  e.set(0, 0, K(1));
  return {VectObject::graded({0, 1, 0}), d, e};
}

/// Every named bimonoid, keyed by its corpus file stem.
template <class K>
std::vector<std::pair<std::string, Bimonoid<K>>> bimonoids() {
  return {{"c2_group_algebra", c2_group_algebra<K>()},
          {"s3_group_algebra", s3_group_algebra<K>()},
          {"idempotent_monoid_algebra", idempotent_monoid_algebra<K>()},
          {"sweedler_h4", sweedler_h4<K>()},
          {"unit_bimonoid", unit_bimonoid<K>()}};
}

/// The one-dimensional module on which the group-like g acts by -1 (1 for
/// x and gx on Sweedler's algebra map to 0).
template <class K>
ModuleOverBimonoid<K> sign_module(const Bimonoid<K>& h) {
  Matrix<K> chi(1, h.dim());
  chi.set(0, 0, K(1));
  chi.set(0, 1, K(-1));
  return character_module(h, chi);
}

/// Regular and trivial modules of every bimonoid, plus the sign module of
/// k[C2], which is not free.
template <class K>
std::vector<std::pair<std::string, ModuleOverBimonoid<K>>> modules(const std::string& name, const Bimonoid<K>& h) {
  std::vector<std::pair<std::string, ModuleOverBimonoid<K>>> out{
      {"regular", regular_module(h)}, {"trivial1", trivial_module(h, 1)}, {"trivial2", trivial_module(h, 2)}};
  if (name == "c2_group_algebra") out.emplace_back("sign", sign_module(h));
  return out;
}

}  // namespace hopfcat::corpus
