#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "hopfcat/coalg.hpp"
#include "hopfcat/error.hpp"
#include "hopfcat/linalg.hpp"
#include "hopfcat/report.hpp"
#include "hopfcat/tensor.hpp"

namespace hopfcat {

/// A comodule M: C -> D, i.e. a coaction M -> C (x) M (x) D.
template <class K>
struct Comodule {
  Comonoid<K> src;
  Comonoid<K> tgt;
  VectObject carrier;
  Matrix<K> coaction;

  [[nodiscard]] std::size_t dim() const { return carrier.dim; }
  [[nodiscard]] std::vector<std::size_t> legs() const { return {src.dim(), carrier.dim, tgt.dim()}; }

  /// M -> C (x) M, by the counit of D.
  [[nodiscard]] Matrix<K> left_coaction() const {
    return apply_on_leg(coaction, legs(), 2, tgt.epsilon.mat);
  }
  /// M -> M (x) D, by the counit of C.
  [[nodiscard]] Matrix<K> right_coaction() const {
    return apply_on_leg(coaction, legs(), 0, src.epsilon.mat);
  }
};

template <class K>
bool same_comonoid(const Comonoid<K>& a, const Comonoid<K>& b) {
  return a.carrier == b.carrier && a.delta.mat == b.delta.mat && a.epsilon.mat == b.epsilon.mat;
}

template <class K>
Report check_comodule(const Comodule<K>& m) {
  const std::size_t c = m.src.dim(), d = m.tgt.dim(), n = m.dim();
  require(m.coaction.rows() == c * n * d && m.coaction.cols() == n, ErrorKind::shape_mismatch,
          "coaction " + m.coaction.shape() + " for a comodule of dimension " + std::to_string(n) +
              " between comonoids of dimension " + std::to_string(c) + " and " + std::to_string(d));
  Report r;
  r.subject = "comodule";
  const auto& g = m.coaction;
  const auto counit = apply_on_leg(apply_on_leg(g, {c, n, d}, 0, m.src.epsilon.mat), {1, n, d}, 2,
                                   m.tgt.epsilon.mat);
  r.expect_equal("counit", counit, Matrix<K>::identity(n));
  const auto twice_outer =
      apply_on_leg(apply_on_leg(g, {c, n, d}, 0, m.src.delta.mat), {c, c, n, d}, 3, m.tgt.delta.mat);
  const auto twice_inner = apply_on_leg(g, {c, n, d}, 1, g);
  r.expect_equal("coassociativity", twice_outer, twice_inner);
  const auto lam = m.left_coaction();
  const auto rho = m.right_coaction();
  r.expect_equal("left_right_commute", apply_on_leg(lam, {c, n}, 1, rho), apply_on_leg(rho, {n, d}, 0, lam));
  return r;
}

template <class K>
void require_comodule(const Comodule<K>& m, const std::string& what) {
  const auto report = check_comodule(m);
  if (const auto* bad = report.first_failure()) {
    fail(ErrorKind::axiom_violation, what + " is not a comodule: " + bad->name + " " + bad->detail);
  }
}

/// C as a comodule C -> C with coaction (1 (x) delta) delta.
template <class K>
Comodule<K> identity_comodule(const Comonoid<K>& c) {
  const auto report = check_comonoid(c);
  if (const auto* bad = report.first_failure()) {
    fail(ErrorKind::axiom_violation, "identity comodule of a non-comonoid: " + bad->name);
  }
  const auto& d = c.delta.mat;
  return {c, c, c.carrier, apply_on_leg(d, {c.dim(), c.dim()}, 1, d)};
}

/// C as a comodule C -> I through delta.
template <class K>
Comodule<K> left_regular_comodule(const Comonoid<K>& c) {
  return {c, Comonoid<K>::unit(), c.carrier, c.delta.mat};
}

/// C as a comodule I -> C through delta.
template <class K>
Comodule<K> right_regular_comodule(const Comonoid<K>& c) {
  return {Comonoid<K>::unit(), c, c.carrier, c.delta.mat};
}

/// (1 (x) f (x) 1) gamma_dom = gamma_cod f.
template <class K>
bool is_comodule_morphism(const Comodule<K>& dom, const Comodule<K>& cod, const Matrix<K>& f) {
  if (f.rows() != cod.dim() || f.cols() != dom.dim()) return false;
  if (dom.src.dim() != cod.src.dim() || dom.tgt.dim() != cod.tgt.dim()) return false;
  return apply_on_leg(dom.coaction, dom.legs(), 1, f) == cod.coaction * f;
}

template <class K>
struct ComoduleMorphism {
  Comodule<K> dom;
  Comodule<K> cod;
  Matrix<K> mat;
};

/// Parity of each basis vector of a subspace spanned by homogeneous
/// echelon columns: the parity of its pivot coordinate.
template <class K>
VectObject subspace_object(const SubspaceEmbedding<K>& e, const VectObject& ambient) {
  VectObject out{e.dim(), Parity(e.dim(), 0)};
  for (std::size_t k = 0; k < e.dim(); ++k) {
    const std::size_t p = e.pivots.size() == e.dim() ? e.pivots[k] : e.basis.column(k).front().first;
    out.parity[k] = ambient.parity[p];
    for (const auto& entry : e.basis.column(k)) {
      require(ambient.parity[entry.first] == out.parity[k], ErrorKind::axiom_violation,
              "equalizer basis vector mixes parities");
    }
  }
  return out;
}

/// The composite M <>_D N together with its embedding into M (x) N.
template <class K>
struct Composite {
  Comodule<K> comodule;
  SubspaceEmbedding<K> embedding;
};

/// M <>_D N as the equalizer of rho_M (x) 1 and 1 (x) lambda_N, with the
/// coaction induced from lambda_M (x) rho_N.
template <class K>
Composite<K> compose_comodules(const Comodule<K>& m, const Comodule<K>& n) {
  require(same_comonoid(m.tgt, n.src), ErrorKind::shape_mismatch,
          "target comonoid of the first comodule differs from the source of the second");
  const std::size_t dm = m.dim(), dn = n.dim();
  const std::size_t dc = m.src.dim(), de = n.tgt.dim();
  const auto f = kron(m.right_coaction(), Matrix<K>::identity(dn));
  const auto g = kron(Matrix<K>::identity(dm), n.left_coaction());
  const auto r = kron(Matrix<K>::identity(dm), m.tgt.epsilon.mat, Matrix<K>::identity(dn));
  const auto eq = equalizer_subspace(f, g, std::optional<Matrix<K>>(r));
  // lambda_M (x) rho_N lands in C (x) M (x) N (x) E in this order already
  const auto induced = kron_apply(m.left_coaction(), n.right_coaction(), eq.basis);
  // coordinates in C (x) eq (x) E are read off at the pivot rows of eq
  std::unordered_map<std::size_t, std::size_t> where;
  for (std::size_t k = 0; k < eq.pivots.size(); ++k) where.emplace(eq.pivots[k], k);
  const std::size_t mn = dm * dn, dk = eq.dim();
  Matrix<K> coaction(dc * dk * de, induced.cols());
  for (std::size_t j = 0; j < induced.cols(); ++j) {
    typename Matrix<K>::Column col;
    for (const auto& [row, v] : induced.column(j)) {
      const auto it = where.find((row / de) % mn);
      if (it != where.end()) col.emplace_back((row / (mn * de) * dk + it->second) * de + row % de, v);
    }
    coaction.set_column(j, std::move(col));
  }
  require(apply_on_legs(coaction, {dc, dk, de}, 1, 1, eq.basis) == induced, ErrorKind::factorization_failure,
          "induced coaction does not restrict to the equalizer");
  const auto carrier = subspace_object(eq, tensor_objects(m.carrier, n.carrier));
  return {Comodule<K>{m.src, n.tgt, carrier, coaction}, eq};
}

/// M (x) N: C (x) C' -> D (x) D', legs reordered with the braiding.
template <class K>
Comodule<K> tensor_comodules(const Comodule<K>& m, const Comodule<K>& n, BraidingKind braid) {
  const std::vector<VectObject> legs{m.src.carrier, m.carrier, m.tgt.carrier,
                                     n.src.carrier, n.carrier, n.tgt.carrier};
  const auto g = permute_legs(kron(m.coaction, n.coaction), leg_dims(legs), {0, 3, 1, 4, 2, 5},
                              leg_parities(legs, braid));
  return {tensor_comonoid(m.src, n.src, braid), tensor_comonoid(m.tgt, n.tgt, braid),
          tensor_objects(m.carrier, n.carrier), g};
}

template <class K>
Matrix<K> require_iso(const Comodule<K>& dom, const Comodule<K>& cod, Matrix<K> f, const std::string& what) {
  require(f.is_square() && is_invertible(f), ErrorKind::factorization_failure, what + " is not invertible");
  require(is_comodule_morphism(dom, cod, f), ErrorKind::factorization_failure,
          what + " does not intertwine the coactions");
  return f;
}

template <class K>
struct ConstraintIsos {
  Matrix<K> assoc;       // (M <> N) <> Q -> M <> (N <> Q)
  Matrix<K> left_unit;   // 1_C <> M -> M
  Matrix<K> right_unit;  // M <> 1_D -> M
};

template <class K>
Matrix<K> associator(const Comodule<K>& m, const Comodule<K>& n, const Comodule<K>& q) {
  const auto mn = compose_comodules(m, n);
  const auto mn_q = compose_comodules(mn.comodule, q);
  const auto nq = compose_comodules(n, q);
  const auto m_nq = compose_comodules(m, nq.comodule);
  const auto left = kron_apply(mn.embedding.basis, Matrix<K>::identity(q.dim()), mn_q.embedding.basis);
  SubspaceEmbedding<K> right{m.dim() * n.dim() * q.dim(),
                             kron_apply(Matrix<K>::identity(m.dim()), nq.embedding.basis, m_nq.embedding.basis),
                             {}};
  Matrix<K> a;
  try {
    a = factor_through(right, left);
  } catch (const Error&) {
    fail(ErrorKind::factorization_failure, "the two bracketings are different subspaces");
  }
  return require_iso(mn_q.comodule, m_nq.comodule, a, "associator");
}

template <class K>
Matrix<K> left_unitor(const Comodule<K>& m) {
  const auto c = compose_comodules(identity_comodule(m.src), m);
  const auto f = apply_on_leg(c.embedding.basis, {m.src.dim(), m.dim()}, 0, m.src.epsilon.mat);
  return require_iso(c.comodule, m, f, "left unit constraint");
}

template <class K>
Matrix<K> right_unitor(const Comodule<K>& m) {
  const auto c = compose_comodules(m, identity_comodule(m.tgt));
  const auto f = apply_on_leg(c.embedding.basis, {m.dim(), m.tgt.dim()}, 1, m.tgt.epsilon.mat);
  return require_iso(c.comodule, m, f, "right unit constraint");
}

template <class K>
ConstraintIsos<K> constraint_isos(const Comodule<K>& m, const Comodule<K>& n, const Comodule<K>& q) {
  return {associator(m, n, q), left_unitor(m), right_unitor(m)};
}

/// e: C (x) C° -> I and n: I -> C° (x) C, both carried by C:
///   e: x -> x(1) (x) x(3) (x) x(2)   in (C (x) C°) (x) C
///   n: x -> x(2) (x) x(1) (x) x(3)   in C (x) (C° (x) C)
template <class K>
struct Biduality {
  Comonoid<K> dual;
  Comodule<K> e;
  Comodule<K> n;
  Matrix<K> snake_left;   // (1_C (x) n) <> (e (x) 1_C) -> 1_C
  Matrix<K> snake_right;  // (n (x) 1_C°) <> (1_C° (x) e) -> 1_C°
};

template <class K>
Comodule<K> biduality_e(const Comonoid<K>& c, BraidingKind braid) {
  const auto dual = dual_comonoid(c, braid);
  const std::size_t d = c.dim();
  const auto twice = apply_on_leg(c.delta.mat, {d, d}, 1, c.delta.mat);
  const auto br = braiding<K>(c.carrier, c.carrier, braid).mat;
  return {tensor_comonoid(c, dual, braid), Comonoid<K>::unit(), c.carrier,
          apply_on_legs(twice, {d, d, d}, 1, 2, br)};
}

template <class K>
Comodule<K> biduality_n(const Comonoid<K>& c, BraidingKind braid) {
  const auto dual = dual_comonoid(c, braid);
  const std::size_t d = c.dim();
  const auto twice = apply_on_leg(c.delta.mat, {d, d}, 0, c.delta.mat);
  const auto br = braiding<K>(c.carrier, c.carrier, braid).mat;
  return {Comonoid<K>::unit(), tensor_comonoid(dual, c, braid), c.carrier,
          apply_on_legs(twice, {d, d, d}, 0, 2, br)};
}

/// Contracts every leg of a composite embedding except `keep` by its counit.
template <class K>
Matrix<K> contract_except(const Matrix<K>& x, const std::vector<std::size_t>& dims,
                          const std::vector<Matrix<K>>& counits, std::size_t keep) {
  Matrix<K> out = x;
  std::vector<std::size_t> cur = dims;
  for (std::size_t leg = dims.size(); leg-- > 0;) {
    if (leg == keep) continue;
    out = apply_on_leg(out, cur, leg, counits[leg]);
    cur[leg] = 1;
  }
  return out;
}

template <class K>
Biduality<K> biduality_data(const Comonoid<K>& c, BraidingKind braid) {
  Biduality<K> b;
  b.dual = dual_comonoid(c, braid);
  b.e = biduality_e(c, braid);
  b.n = biduality_n(c, braid);
  require_comodule(b.e, "e");
  require_comodule(b.n, "n");
  const auto id_c = identity_comodule(c);
  const auto id_dual = identity_comodule(b.dual);
  const auto& eps = c.epsilon.mat;
  const std::size_t d = c.dim();
  // legs of both snakes: four copies of C; keep the strand that leaves the snake
  try {
    const auto s1 = compose_comodules(tensor_comodules(id_c, b.n, braid), tensor_comodules(b.e, id_c, braid));
    b.snake_left = require_iso(s1.comodule, id_c,
                               contract_except(s1.embedding.basis, {d, d, d, d}, {eps, eps, eps, eps}, 3),
                               "left snake");
    const auto s2 =
        compose_comodules(tensor_comodules(b.n, id_dual, braid), tensor_comodules(id_dual, b.e, braid));
    b.snake_right = require_iso(s2.comodule, id_dual,
                                contract_except(s2.embedding.basis, {d, d, d, d}, {eps, eps, eps, eps}, 2),
                                "right snake");
  } catch (const Error& e) {
    fail(ErrorKind::snake_failure, e.what());
  }
  return b;
}

}  // namespace hopfcat
