#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "hopfcat/error.hpp"
#include "hopfcat/linalg.hpp"
#include "hopfcat/report.hpp"
#include "hopfcat/tensor.hpp"
#include "hopfcat/vect.hpp"

namespace hopfcat {

template <class K>
struct Comonoid {
  VectObject carrier;
  MorphismV<K> delta;    // carrier -> carrier (x) carrier
  MorphismV<K> epsilon;  // carrier -> unit

  Comonoid() = default;
  Comonoid(VectObject c, const Matrix<K>& d, const Matrix<K>& e)
      : carrier(c),
        delta(c, tensor_objects(c, c), d),
        epsilon(c, VectObject::unit(), e) {}

  [[nodiscard]] std::size_t dim() const { return carrier.dim; }

  /// The unit comonoid k.
  static Comonoid unit() { return {VectObject::unit(), Matrix<K>::identity(1), Matrix<K>::identity(1)}; }
};

template <class K>
struct Monoid {
  VectObject carrier;
  MorphismV<K> mu;   // carrier (x) carrier -> carrier
  MorphismV<K> eta;  // unit -> carrier

  Monoid() = default;
  Monoid(VectObject c, const Matrix<K>& m, const Matrix<K>& e)
      : carrier(c),
        mu(tensor_objects(c, c), c, m),
        eta(VectObject::unit(), c, e) {}

  [[nodiscard]] std::size_t dim() const { return carrier.dim; }
};

template <class K>
struct Bimonoid {
  Comonoid<K> comonoid;
  Monoid<K> monoid;

  [[nodiscard]] std::size_t dim() const { return comonoid.dim(); }
  [[nodiscard]] const VectObject& carrier() const { return comonoid.carrier; }
  [[nodiscard]] const Matrix<K>& delta() const { return comonoid.delta.mat; }
  [[nodiscard]] const Matrix<K>& epsilon() const { return comonoid.epsilon.mat; }
  [[nodiscard]] const Matrix<K>& mu() const { return monoid.mu.mat; }
  [[nodiscard]] const Matrix<K>& eta() const { return monoid.eta.mat; }
};

template <class K>
Report check_comonoid(const Comonoid<K>& c) {
  const std::size_t n = c.dim();
  require(c.delta.dom == c.carrier && c.delta.cod == tensor_objects(c.carrier, c.carrier) &&
              c.epsilon.dom == c.carrier && c.epsilon.cod.dim == 1,
          ErrorKind::shape_mismatch, "comonoid structure maps do not match the carrier");
  const auto& d = c.delta.mat;
  const auto& e = c.epsilon.mat;
  const std::vector<std::size_t> legs{n, n};
  Report r;
  r.subject = "comonoid";
  r.expect_equal("coassociativity", apply_on_leg(d, legs, 0, d), apply_on_leg(d, legs, 1, d));
  r.expect_equal("left_counit", apply_on_leg(d, legs, 0, e), Matrix<K>::identity(n));
  r.expect_equal("right_counit", apply_on_leg(d, legs, 1, e), Matrix<K>::identity(n));
  return r;
}

template <class K>
Report check_monoid(const Monoid<K>& m) {
  const std::size_t n = m.dim();
  require(m.mu.cod == m.carrier && m.mu.dom == tensor_objects(m.carrier, m.carrier) &&
              m.eta.cod == m.carrier && m.eta.dom.dim == 1,
          ErrorKind::shape_mismatch, "monoid structure maps do not match the carrier");
  const auto& mu = m.mu.mat;
  const auto& eta = m.eta.mat;
  const auto id = Matrix<K>::identity(n);
  Report r;
  r.subject = "monoid";
  r.expect_equal("associativity", mu * kron(mu, id), mu * kron(id, mu));
  r.expect_equal("left_unit", mu * kron(eta, id), id);
  r.expect_equal("right_unit", mu * kron(id, eta), id);
  return r;
}

template <class K>
Report check_bimonoid(const Bimonoid<K>& h, BraidingKind braid = BraidingKind::symmetric) {
  require(h.comonoid.carrier == h.monoid.carrier, ErrorKind::shape_mismatch,
          "monoid and comonoid carriers differ");
  Report r;
  r.subject = "bimonoid";
  r.absorb(check_comonoid(h.comonoid), "comonoid.");
  r.absorb(check_monoid(h.monoid), "monoid.");
  const std::size_t n = h.dim();
  const auto id = Matrix<K>::identity(n);
  const auto c = braiding<K>(h.carrier(), h.carrier(), braid).mat;
  const auto& d = h.delta();
  const auto& e = h.epsilon();
  const auto& mu = h.mu();
  const auto& eta = h.eta();
  r.expect_equal("delta_multiplicative", d * mu,
                 kron(mu, mu) * kron(id, c, id) * kron(d, d));
  r.expect_equal("epsilon_multiplicative", e * mu, kron(e, e));
  r.expect_equal("delta_unital", d * eta, kron(eta, eta));
  r.expect_equal("epsilon_unital", e * eta, Matrix<K>::identity(1));
  return r;
}

/// Same carrier and counit, comultiplication c o delta.
template <class K>
Comonoid<K> dual_comonoid(const Comonoid<K>& c, BraidingKind braid) {
  const auto report = check_comonoid(c);
  if (const auto* bad = report.first_failure()) {
    fail(ErrorKind::axiom_violation, "dual of a non-comonoid: " + bad->name + " " + bad->detail);
  }
  return {c.carrier, braiding<K>(c.carrier, c.carrier, braid).mat * c.delta.mat, c.epsilon.mat};
}

/// C (x) D with delta = (1 (x) c (x) 1)(delta_C (x) delta_D).
template <class K>
Comonoid<K> tensor_comonoid(const Comonoid<K>& a, const Comonoid<K>& b, BraidingKind braid) {
  const std::vector<VectObject> legs{a.carrier, a.carrier, b.carrier, b.carrier};
  return {tensor_objects(a.carrier, b.carrier),
          permute_legs(kron(a.delta.mat, b.delta.mat), leg_dims(legs), {0, 2, 1, 3}, leg_parities(legs, braid)),
          kron(a.epsilon.mat, b.epsilon.mat)};
}

/// Group-like comonoid: delta(e_i) = e_i (x) e_i, epsilon(e_i) = 1.
template <class K>
Comonoid<K> group_like_comonoid(std::size_t n) {
  Matrix<K> d(n * n, n);
  Matrix<K> e(1, n);
  for (std::size_t i = 0; i < n; ++i) {
    d.set(i * n + i, i, K(1));
    e.set(0, i, K(1));
  }
  return {VectObject::even(n), d, e};
}

/// Monoid algebra of a finite monoid given by its table (table[i][j] is
/// the index of e_i e_j), with group-like comultiplication.
template <class K>
Bimonoid<K> monoid_algebra(const std::vector<std::vector<std::size_t>>& table) {
  const std::size_t n = table.size();
  require(n > 0, ErrorKind::not_a_monoid, "empty multiplication table");
  for (std::size_t i = 0; i < n; ++i) {
    require(table[i].size() == n, ErrorKind::not_a_monoid,
            "row " + std::to_string(i) + " of the table has " + std::to_string(table[i].size()) +
                " entries");
    for (std::size_t j = 0; j < n; ++j) {
      require(table[i][j] < n, ErrorKind::not_a_monoid,
              "product " + std::to_string(i) + "*" + std::to_string(j) + " leaves the set");
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        require(table[table[i][j]][k] == table[i][table[j][k]], ErrorKind::not_a_monoid,
                "associativity fails at (" + std::to_string(i) + "," + std::to_string(j) + "," +
                    std::to_string(k) + ")");
      }
    }
  }
  std::optional<std::size_t> unit;
  for (std::size_t u = 0; u < n && !unit; ++u) {
    bool ok = true;
    for (std::size_t j = 0; j < n && ok; ++j) ok = table[u][j] == j && table[j][u] == j;
    if (ok) unit = u;
  }
  require(unit.has_value(), ErrorKind::not_a_monoid, "no two-sided unit in the table");
  Matrix<K> mu(n, n * n);
  Matrix<K> eta(n, 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) mu.set(table[i][j], i * n + j, K(1));
  }
  eta.set(*unit, 0, K(1));
  return {group_like_comonoid<K>(n), Monoid<K>(VectObject::even(n), mu, eta)};
}

}  // namespace hopfcat
