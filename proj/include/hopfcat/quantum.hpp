#pragma once

#include <cstddef>
#include <string>
#include <utility>

#include "hopfcat/cells.hpp"
#include "hopfcat/coalg.hpp"
#include "hopfcat/comod.hpp"
#include "hopfcat/fusion.hpp"
#include "hopfcat/monoidale.hpp"
#include "hopfcat/report.hpp"

namespace hopfcat {

/// A comonoid C with a monoidal comonad g on the monoidale C° (x) C. The
/// 2-cells act between the composites built by QuantumShapes:
///   comult: g -> g <> g
///   counit: g -> 1_E
///   phi:    (g (x) g) <> p -> p <> g
///   phi0:   j -> j <> g
template <class K>
struct QuantumCategoryData {
  Comonoid<K> base;
  MonoidaleData<K> monoidale;
  Comodule<K> g;
  Matrix<K> comult;
  Matrix<K> counit;
  Matrix<K> phi;
  Matrix<K> phi0;
};

template <class K>
struct Verdict {
  bool is_quantum_category = false;
  bool is_quantum_groupoid = false;
  Matrix<K> hopf_matrix;
  Report diagnostics;
};

template <class K>
class QuantumShapes : public MonoidaleShapes<K> {
 public:
  explicit QuantumShapes(const QuantumCategoryData<K>& q) : MonoidaleShapes<K>(q.monoidale), q_(q) {}

  Cell<K> g(const std::string& label) const { return atom_cell(q_.g, label); }
  Cell<K> gg(const std::string& a, const std::string& b) const { return this->c(g(a), g(b)); }
  Cell<K> phi_dom(const std::string& a, const std::string& b, const std::string& pl) const {
    return this->c(this->t(g(a), g(b)), this->p(pl));
  }
  Cell<K> phi_cod(const std::string& pl, const std::string& h) const { return this->c(this->p(pl), g(h)); }
  Cell<K> phi0_cod(const std::string& jl, const std::string& h) const { return this->c(this->j(jl), g(h)); }

 private:
  const QuantumCategoryData<K>& q_;
};

namespace detail {

/// The map between cell carriers induced by f on the tensors of atom carriers.
template <class K>
Matrix<K> realize(const Cell<K>& dom, const Cell<K>& cod, const Matrix<K>& f) {
  const auto sol = solve_linear(cod.emb, f * dom.emb);
  require(sol.consistent && sol.kernel_dim == 0, ErrorKind::factorization_failure,
          "structure map does not restrict to the composites");
  return sol.particular;
}

template <class K>
void check_two_cell(Report& r, const std::string& name, const Matrix<K>& m, const Cell<K>& dom,
                    const Cell<K>& cod) {
  const bool shaped = m.rows() == cod.dim() && m.cols() == dom.dim();
  r.add(name + "_comodule_morphism", shaped && is_comodule_morphism(dom.comodule, cod.comodule, m),
        shaped ? "" : m.shape() + " between carriers of dimension " + std::to_string(dom.dim()) + " and " +
                          std::to_string(cod.dim()));
}

template <class F>
void expect_routes(Report& r, const std::string& name, F&& routes) {
  try {
    const auto [a, b] = routes();
    r.expect_equal(name, a, b);
  } catch (const Error& e) {
    r.add(name, false, e.what());
  }
}

template <class K>
std::pair<Matrix<K>, Matrix<K>> coassociativity(const QuantumCategoryData<K>& q) {
  QuantumShapes<K> s(q);
  const auto ig = Matrix<K>::identity(q.g.dim());
  const auto finish = s.c(s.gg("x1", "x2"), s.g("x3"));
  Path<K> a(s.g("g"), q.monoidale.braid);
  a.apply(q.comult, s.gg("u", "x3"));
  a.apply(q.comult, ig, finish);
  Path<K> b(s.g("g"), q.monoidale.braid);
  b.apply(q.comult, s.gg("x1", "v"));
  b.apply(ig, q.comult, s.c(s.g("x1"), s.gg("x2", "x3")));
  b.to(finish);
  return {a.map(), b.map()};
}

/// g -> g <> g -> 1 <> g -> g, with the counit on the left or right factor.
template <class K>
std::pair<Matrix<K>, Matrix<K>> counit_triangle(const QuantumCategoryData<K>& q, bool left) {
  QuantumShapes<K> s(q);
  const auto ig = Matrix<K>::identity(q.g.dim());
  Path<K> a(s.g("g"), q.monoidale.braid);
  a.apply(q.comult, s.gg("a", "b"));
  if (left) {
    a.apply(q.counit, ig, s.c(s.id(), s.g("b")));
    a.to(s.g("b"));
  } else {
    a.apply(ig, q.counit, s.c(s.g("a"), s.id()));
    a.to(s.g("a"));
  }
  return {a.map(), ig};
}

template <class K>
std::pair<Matrix<K>, Matrix<K>> phi_comultiplicative(const QuantumCategoryData<K>& q) {
  QuantumShapes<K> s(q);
  const auto braid = q.monoidale.braid;
  const auto ig = Matrix<K>::identity(q.g.dim());
  const auto ip = Matrix<K>::identity(q.monoidale.p.dim());
  const auto start = s.phi_dom("a", "b", "p");
  const auto finish = s.c(s.phi_cod("P", "h1"), s.g("h2"));

  Path<K> a(start, braid);
  a.apply(q.phi, s.phi_cod("P", "h"));
  a.apply(ip, q.comult, s.c(s.p("P"), s.gg("h1", "h2")));
  a.to(finish);

  Path<K> b(start, braid);
  b.apply(kron(q.comult, q.comult), ip, s.c(s.t(s.gg("a1", "a2"), s.gg("b1", "b2")), s.p("p")));
  b.to(s.c(s.t(s.g("a1"), s.g("b1")), s.phi_dom("a2", "b2", "p")));
  const auto head = s.t(s.g("a1"), s.g("b1"));
  b.apply(Matrix<K>::identity(head.dim()), q.phi, s.c(head, s.phi_cod("Q", "h2")));
  b.to(s.c(s.c(head, s.p("Q")), s.g("h2")));
  b.apply(q.phi, ig, finish);
  return {a.map(), b.map()};
}

template <class K>
std::pair<Matrix<K>, Matrix<K>> phi_counital(const QuantumCategoryData<K>& q) {
  QuantumShapes<K> s(q);
  const auto braid = q.monoidale.braid;
  const auto ip = Matrix<K>::identity(q.monoidale.p.dim());
  const auto start = s.phi_dom("a", "b", "P");
  Path<K> a(start, braid);
  a.apply(q.phi, s.phi_cod("P", "h"));
  a.apply(ip, q.counit, s.c(s.p("P"), s.id()));
  a.to(s.p("P"));
  Path<K> b(start, braid);
  b.apply(kron(q.counit, q.counit), ip, s.c(s.t(s.id(), s.id()), s.p("P")));
  b.to(s.p("P"));
  return {a.map(), b.map()};
}

template <class K>
std::pair<Matrix<K>, Matrix<K>> phi0_comultiplicative(const QuantumCategoryData<K>& q) {
  QuantumShapes<K> s(q);
  const auto braid = q.monoidale.braid;
  const auto ig = Matrix<K>::identity(q.g.dim());
  const auto ij = Matrix<K>::identity(q.monoidale.j.dim());
  const auto finish = s.c(s.phi0_cod("J", "h1"), s.g("h2"));
  Path<K> a(s.j("J"), braid);
  a.apply(q.phi0, s.phi0_cod("J", "h"));
  a.apply(ij, q.comult, s.c(s.j("J"), s.gg("h1", "h2")));
  a.to(finish);
  Path<K> b(s.j("J"), braid);
  b.apply(q.phi0, s.phi0_cod("J", "h2"));
  b.apply(q.phi0, ig, finish);
  return {a.map(), b.map()};
}

template <class K>
std::pair<Matrix<K>, Matrix<K>> phi0_counital(const QuantumCategoryData<K>& q) {
  QuantumShapes<K> s(q);
  const auto ij = Matrix<K>::identity(q.monoidale.j.dim());
  Path<K> a(s.j("J"), q.monoidale.braid);
  a.apply(q.phi0, s.phi0_cod("J", "h"));
  a.apply(ij, q.counit, s.c(s.j("J"), s.id()));
  a.to(s.j("J"));
  return {a.map(), ij};
}

/// ((g (x) g (x) g) <> (p (x) 1)) <> p -> ((1 (x) p) <> p) <> g, multiplying
/// the left pair first and then through alpha, or through alpha first.
template <class K>
std::pair<Matrix<K>, Matrix<K>> phi_associative(const QuantumCategoryData<K>& q) {
  QuantumShapes<K> s(q);
  const auto braid = q.monoidale.braid;
  const auto ig = Matrix<K>::identity(q.g.dim());
  const auto ip = Matrix<K>::identity(q.monoidale.p.dim());
  const auto three = s.t(s.g("a"), s.g("b"), s.g("c"));
  const auto start = s.c(s.c(three, s.t(s.p("P1"), s.id())), s.p("P2"));
  const auto finish = s.c(s.right_pair("Q1", "Q2"), s.g("h2"));

  Path<K> a(start, braid);
  a.to(s.c(s.t(s.phi_dom("a", "b", "P1"), s.g("c")), s.p("P2")));
  a.apply(kron(q.phi, ig), ip, s.c(s.t(s.phi_cod("P1", "h1"), s.g("c")), s.p("P2")));
  const auto pl = s.t(s.p("P1"), s.id());
  a.to(s.c(pl, s.phi_dom("h1", "c", "P2")));
  a.apply(Matrix<K>::identity(pl.dim()), q.phi, s.c(pl, s.phi_cod("P2", "h2")));
  a.to(s.c(s.c(pl, s.p("P2")), s.g("h2")));
  a.apply(q.monoidale.alpha, ig, finish);

  Path<K> b(start, braid);
  b.to(s.c(three, s.left_pair("P1", "P2")));
  b.apply(Matrix<K>::identity(three.dim()), q.monoidale.alpha, s.c(three, s.right_pair("Q1", "Q2")));
  b.to(s.c(s.t(s.g("a"), s.phi_dom("b", "c", "Q1")), s.p("Q2")));
  b.apply(kron(ig, q.phi), ip, s.c(s.t(s.g("a"), s.phi_cod("Q1", "k")), s.p("Q2")));
  const auto pr = s.t(s.id(), s.p("Q1"));
  b.to(s.c(pr, s.phi_dom("a", "k", "Q2")));
  b.apply(Matrix<K>::identity(pr.dim()), q.phi, s.c(pr, s.phi_cod("Q2", "h2")));
  b.to(finish);
  return {a.map(), b.map()};
}

/// (j (x) g) <> p -> g through lambda directly, or through phi0 and phi first.
/// The right-handed form uses (g (x) j) and rho.
template <class K>
std::pair<Matrix<K>, Matrix<K>> phi_unital(const QuantumCategoryData<K>& q, bool left) {
  QuantumShapes<K> s(q);
  const auto braid = q.monoidale.braid;
  const auto ig = Matrix<K>::identity(q.g.dim());
  const auto ip = Matrix<K>::identity(q.monoidale.p.dim());
  const auto& unit_map = left ? q.monoidale.lambda : q.monoidale.rho;
  auto pair = [&](const Cell<K>& x, const Cell<K>& y) { return left ? s.t(x, y) : s.t(y, x); };
  const auto unit_dom = [&] { return left ? s.left_unit_dom("J", "P") : s.right_unit_dom("J", "P"); };
  const auto start = s.c(pair(s.j("J"), s.g("a")), s.p("P"));

  Path<K> a(start, braid);
  a.to(s.c(s.g("a"), unit_dom()));
  a.apply(ig, unit_map, s.c(s.g("a"), s.id()));
  a.to(s.g("a"));

  Path<K> b(start, braid);
  b.apply(left ? kron(q.phi0, ig) : kron(ig, q.phi0), ip, s.c(pair(s.phi0_cod("J", "x"), s.g("a")), s.p("P")));
  const auto jl = pair(s.j("J"), s.id());
  b.to(s.c(jl, left ? s.phi_dom("x", "a", "P") : s.phi_dom("a", "x", "P")));
  b.apply(Matrix<K>::identity(jl.dim()), q.phi, s.c(jl, s.phi_cod("P", "a")));
  b.to(s.c(unit_dom(), s.g("a")));
  b.apply(unit_map, ig, s.c(s.id(), s.g("a")));
  b.to(s.g("a"));
  return {a.map(), b.map()};
}

}  // namespace detail

template <class K>
Report check_quantum_category(const QuantumCategoryData<K>& q) {
  const auto braid = q.monoidale.braid;
  const auto expected = tensor_comonoid(dual_comonoid(q.base, braid), q.base, braid);
  require(same_comonoid(q.monoidale.object, expected), ErrorKind::shape_mismatch,
          "monoidale is not on C° (x) C for the base comonoid");
  require(same_comonoid(q.g.src, expected) && same_comonoid(q.g.tgt, expected), ErrorKind::shape_mismatch,
          "g is not a comodule C° (x) C -> C° (x) C");
  Report r;
  r.subject = "quantum_category";
  r.absorb(check_monoidale(q.monoidale), "monoidale.");
  r.absorb(check_comodule(q.g), "g.");
  if (!r.passed()) return r;

  QuantumShapes<K> s(q);
  detail::check_two_cell(r, "comult", q.comult, s.g("g"), s.gg("a", "b"));
  detail::check_two_cell(r, "counit", q.counit, s.g("g"), s.id());
  detail::check_two_cell(r, "phi", q.phi, s.phi_dom("a", "b", "p"), s.phi_cod("p", "h"));
  detail::check_two_cell(r, "phi0", q.phi0, s.j("j"), s.phi0_cod("j", "h"));
  if (!r.passed()) return r;

  detail::expect_routes(r, "coassociativity", [&] { return detail::coassociativity(q); });
  detail::expect_routes(r, "left_counit", [&] { return detail::counit_triangle(q, true); });
  detail::expect_routes(r, "right_counit", [&] { return detail::counit_triangle(q, false); });
  detail::expect_routes(r, "phi_comultiplicative", [&] { return detail::phi_comultiplicative(q); });
  detail::expect_routes(r, "phi_counital", [&] { return detail::phi_counital(q); });
  detail::expect_routes(r, "phi0_comultiplicative", [&] { return detail::phi0_comultiplicative(q); });
  detail::expect_routes(r, "phi0_counital", [&] { return detail::phi0_counital(q); });
  detail::expect_routes(r, "phi_associative", [&] { return detail::phi_associative(q); });
  detail::expect_routes(r, "phi_left_unital", [&] { return detail::phi_unital(q, true); });
  detail::expect_routes(r, "phi_right_unital", [&] { return detail::phi_unital(q, false); });
  return r;
}

/// ((1 (x) g) <> (g (x) 1)) <> p => ((g (x) 1) <> p) <> g: comult on the
/// first strand, then phi.
template <class K>
MorphismV<K> hopf_pasting(const QuantumCategoryData<K>& q) {
  QuantumShapes<K> s(q);
  const auto braid = q.monoidale.braid;
  const auto ig = Matrix<K>::identity(q.g.dim());
  const auto ip = Matrix<K>::identity(q.monoidale.p.dim());
  const auto start = s.c(s.c(s.t(s.id(), s.g("g1")), s.t(s.g("g2"), s.id())), s.p("P"));
  const auto left = s.t(s.g("g3"), s.id());
  const auto finish = s.c(s.c(left, s.p("Q")), s.g("g5"));

  Path<K> a(start, braid);
  a.to(s.phi_dom("g2", "g1", "P"));
  a.apply(kron(q.comult, ig), ip, s.c(s.t(s.gg("g3", "g4"), s.g("g1")), s.p("P")));
  a.to(s.c(left, s.phi_dom("g4", "g1", "P")));
  a.apply(Matrix<K>::identity(left.dim()), q.phi, s.c(left, s.phi_cod("Q", "g5")));
  a.to(finish);
  return {start.comodule.carrier, finish.comodule.carrier, a.map()};
}

template <class K>
Verdict<K> is_quantum_groupoid(const QuantumCategoryData<K>& q) {
  Verdict<K> v;
  try {
    v.diagnostics = check_quantum_category(q);
  } catch (const Error& e) {
    v.diagnostics.subject = "quantum_category";
    v.diagnostics.add("well_formed", false, e.what());
  }
  v.is_quantum_category = v.diagnostics.passed();
  if (v.is_quantum_category) {
    try {
      v.hopf_matrix = hopf_pasting(q).mat;
      if (!v.hopf_matrix.is_square()) {
        v.diagnostics.values["hopf_shape"] = v.hopf_matrix.shape();
      } else {
        v.is_quantum_groupoid = is_invertible(v.hopf_matrix);
      }
    } catch (const Error& e) {
      v.diagnostics.values["hopf_error"] = e.what();
    }
  }
  v.diagnostics.verdicts["is_quantum_category"] = v.is_quantum_category;
  v.diagnostics.verdicts["is_quantum_groupoid"] = v.is_quantum_groupoid;
  return v;
}

/// A bimonoid as a monoidal comonad on the trivial monoidale over k.
template <class K>
QuantumCategoryData<K> from_bimonoid(const Bimonoid<K>& h, BraidingKind braid = BraidingKind::symmetric) {
  require_bimonoid(h, braid);
  QuantumCategoryData<K> q;
  q.base = Comonoid<K>::unit();
  q.monoidale = enveloping_monoidale(q.base, braid);
  const auto& e = q.monoidale.object;
  q.g = {e, e, h.carrier(), Matrix<K>::identity(h.dim())};
  QuantumShapes<K> s(q);
  q.comult = detail::realize(s.g("g"), s.gg("a", "b"), h.delta());
  q.counit = detail::realize(s.g("g"), s.id(), h.epsilon());
  q.phi = detail::realize(s.phi_dom("a", "b", "p"), s.phi_cod("p", "h"), h.mu());
  q.phi0 = detail::realize(s.j("j"), s.phi0_cod("j", "h"), h.eta());
  return q;
}

/// g = 1_E on the enveloping monoidale of c, with every 2-cell canonical.
template <class K>
QuantumCategoryData<K> identity_quantum_category(const Comonoid<K>& c, BraidingKind braid) {
  QuantumCategoryData<K> q;
  q.base = c;
  q.monoidale = enveloping_monoidale(c, braid);
  const auto& e = q.monoidale.object;
  q.g = identity_comodule(e);
  MonoidaleShapes<K> s(q.monoidale);
  auto strand = [&](const std::string& label) { return strand_cell(e, label); };
  q.comult = canonical_iso(strand("x"), s.c(strand("x"), strand("y")), braid);
  q.counit = Matrix<K>::identity(e.dim());
  q.phi = canonical_iso(s.c(s.t(strand("a"), strand("b")), s.p("P")), s.c(s.p("P"), strand("h")), braid);
  q.phi0 = canonical_iso(s.j("J"), s.c(s.j("J"), strand("h")), braid);
  return q;
}

}  // namespace hopfcat
