#pragma once

#include <cstddef>
#include <string>

#include "hopfcat/coalg.hpp"
#include "hopfcat/error.hpp"
#include "hopfcat/fusion.hpp"
#include "hopfcat/linalg.hpp"
#include "hopfcat/report.hpp"

namespace hopfcat {

/// Left module (a, alpha: H (x) a -> a) over a bimonoid.
template <class K>
struct ModuleOverBimonoid {
  Bimonoid<K> bimonoid;
  VectObject carrier;
  MorphismV<K> action;

  ModuleOverBimonoid() = default;
  ModuleOverBimonoid(Bimonoid<K> h, VectObject a, const Matrix<K>& alpha)
      : bimonoid(std::move(h)), carrier(a), action(tensor_objects(bimonoid.carrier(), a), a, alpha) {}

  [[nodiscard]] std::size_t dim() const { return carrier.dim; }
};

template <class K>
Report check_module(const ModuleOverBimonoid<K>& m) {
  const auto& h = m.bimonoid;
  require(m.action.dom == tensor_objects(h.carrier(), m.carrier) && m.action.cod == m.carrier,
          ErrorKind::shape_mismatch, "action does not map H (x) a to a");
  const auto& alpha = m.action.mat;
  const auto id_a = Matrix<K>::identity(m.dim());
  Report r;
  r.subject = "module";
  r.expect_equal("associativity", alpha * kron(h.mu(), id_a),
                 alpha * kron(Matrix<K>::identity(h.dim()), alpha));
  r.expect_equal("unit", alpha * kron(h.eta(), id_a), id_a);
  return r;
}

template <class K>
ModuleOverBimonoid<K> regular_module(const Bimonoid<K>& h) {
  return {h, h.carrier(), h.mu()};
}

/// Action epsilon (x) 1 on an even carrier of the given dimension.
template <class K>
ModuleOverBimonoid<K> trivial_module(const Bimonoid<K>& h, std::size_t dim) {
  return {h, VectObject::even(dim), kron(h.epsilon(), Matrix<K>::identity(dim))};
}

/// One-dimensional module through an algebra map chi: H -> k.
template <class K>
ModuleOverBimonoid<K> character_module(const Bimonoid<K>& h, const Matrix<K>& chi) {
  return {h, VectObject::unit(), chi};
}

template <class K>
void require_module(const ModuleOverBimonoid<K>& m) {
  const auto report = check_module(m);
  if (const auto* bad = report.first_failure()) {
    fail(ErrorKind::axiom_violation, "not a module: " + bad->name + " " + bad->detail);
  }
}

/// H (x) a (x) y -> a (x) H (x) y,  h (x) v (x) w -> alpha(h(1) (x) v) (x) h(2) (x) w.
template <class K>
MorphismV<K> module_fusion(const ModuleOverBimonoid<K>& m, const VectObject& y,
                           BraidingKind braid = BraidingKind::symmetric) {
  require_module(m);
  const auto& h = m.bimonoid;
  const auto id_h = Matrix<K>::identity(h.dim());
  const auto id_a = Matrix<K>::identity(m.dim());
  const auto c = braiding<K>(h.carrier(), m.carrier, braid).mat;
  const auto core = kron(m.action.mat, id_h) * kron(id_h, c) * kron(h.delta(), id_a);
  return {tensor_objects({h.carrier(), m.carrier, y}), tensor_objects({m.carrier, h.carrier(), y}),
          kron(core, Matrix<K>::identity(y.dim))};
}

/// Internal hom b^a = Hom(a, b) with its lifted action. The carrier basis is
/// the matrix units e_ik (v_k -> w_i) at index i * dim(a) + k.
template <class K>
struct LiftedHom {
  VectObject carrier;
  MorphismV<K> rho;  // H (x) Hom -> Hom
  MorphismV<K> ev;   // a (x) Hom -> b
  std::size_t kernel_dim = 0;
};

/// Evaluation a (x) Hom(a, b) -> b.
template <class K>
Matrix<K> evaluation(std::size_t da, std::size_t db) {
  const std::size_t dh = da * db;
  Matrix<K> ev(db, da * dh);
  for (std::size_t i = 0; i < db; ++i) {
    for (std::size_t j = 0; j < da; ++j) ev.set(i, j * dh + i * da + j, K(1));
  }
  return ev;
}

/// The map h (x) v (x) f -> h(1) (x) v (x) h(2) (x) f on H (x) a (x) X.
template <class K>
Matrix<K> split_past(const Bimonoid<K>& h, const VectObject& a, std::size_t x_dim) {
  const auto id_h = Matrix<K>::identity(h.dim());
  const auto c = braiding<K>(h.carrier(), a, BraidingKind::symmetric).mat;
  return kron(id_h, c, Matrix<K>::identity(x_dim)) *
         kron(h.delta(), Matrix<K>::identity(a.dim * x_dim));
}

/// Solves ev (alpha (x) rho) psi = beta (1 (x) ev) for rho. For a fixed
/// matrix unit f and output row r the unknowns rho[(r, s)][(h2, f)] satisfy a
/// square system whose matrix is the module fusion of a, so it is solved once
/// with all right-hand sides together.
template <class K>
LiftedHom<K> lift_internal_hom(const ModuleOverBimonoid<K>& am, const ModuleOverBimonoid<K>& bm) {
  const auto& h = am.bimonoid;
  require(h.mu() == bm.bimonoid.mu() && h.delta() == bm.bimonoid.delta(), ErrorKind::invalid_argument,
          "modules over different bimonoids");
  require_module(am);
  require_module(bm);
  require(is_right_hopf(h), ErrorKind::not_hopf, "the fusion operator of the bimonoid is singular");
  const std::size_t n = h.dim(), da = am.dim(), db = bm.dim(), dh = da * db;
  const auto delta = h.delta().dense_rows();
  const auto alpha = am.action.mat.dense_rows();
  const auto beta = bm.action.mat.dense_rows();

  Matrix<K> system(n * da, n * da);
  for (std::size_t hh = 0; hh < n; ++hh)
    for (std::size_t j = 0; j < da; ++j)
      for (std::size_t h2 = 0; h2 < n; ++h2)
        for (std::size_t s = 0; s < da; ++s) {
          K v(0);
          for (std::size_t h1 = 0; h1 < n; ++h1) v += delta[h1 * n + h2][hh] * alpha[s][h1 * da + j];
          if (!v.is_zero()) system.set(hh * da + j, h2 * da + s, v);
        }
  // right-hand side column (f = (i, k), r): entry (h, j) = [k == j] beta[r][h * db + i]
  Matrix<K> rhs(n * da, dh * db);
  for (std::size_t i = 0; i < db; ++i)
    for (std::size_t k = 0; k < da; ++k)
      for (std::size_t r = 0; r < db; ++r)
        for (std::size_t hh = 0; hh < n; ++hh) {
          const K& b = beta[r][hh * db + i];
          if (!b.is_zero()) rhs.set(hh * da + k, (i * da + k) * db + r, b);
        }
  const auto sol = solve_linear(system, rhs);
  require(sol.kernel_dim == 0, ErrorKind::not_hopf,
          "module fusion is singular (kernel dimension " + std::to_string(sol.kernel_dim) + ")");
  require(sol.consistent, ErrorKind::inconsistent, "defining equation of the lifted action has no solution");

  Matrix<K> rho(dh, n * dh);
  for (std::size_t f = 0; f < dh; ++f)
    for (std::size_t r = 0; r < db; ++r)
      for (const auto& [idx, v] : sol.particular.column(f * db + r)) {
        const std::size_t h2 = idx / da, s = idx % da;
        rho.set(r * da + s, h2 * dh + f, v);
      }
  const auto hom = VectObject::even(dh);
  LiftedHom<K> out{hom, MorphismV<K>(tensor_objects(h.carrier(), hom), hom, rho),
                   MorphismV<K>(tensor_objects(am.carrier, hom), bm.carrier, evaluation<K>(da, db)),
                   sol.kernel_dim};
  return out;
}

/// ev (alpha (x) rho) psi = beta (1 (x) ev), plus the module axioms of rho.
template <class K>
Report check_ev_morphism(const LiftedHom<K>& l, const ModuleOverBimonoid<K>& am,
                         const ModuleOverBimonoid<K>& bm) {
  const auto& h = am.bimonoid;
  const std::size_t dh = am.dim() * bm.dim();
  require(l.carrier.dim == dh && l.rho.mat.rows() == dh && l.rho.mat.cols() == h.dim() * dh &&
              l.ev.mat.rows() == bm.dim() && l.ev.mat.cols() == am.dim() * dh,
          ErrorKind::shape_mismatch, "lifted hom shapes do not match the modules");
  Report r;
  r.subject = "lifted_hom";
  r.absorb(check_module(ModuleOverBimonoid<K>(h, l.carrier, l.rho.mat)), "rho.");
  const auto lhs = l.ev.mat * kron(am.action.mat, l.rho.mat) * split_past(h, am.carrier, dh);
  const auto rhs = bm.action.mat * kron(Matrix<K>::identity(h.dim()), l.ev.mat);
  r.expect_equal("ev_module_morphism", lhs, rhs);
  return r;
}

}  // namespace hopfcat
