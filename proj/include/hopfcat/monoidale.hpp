#pragma once

#include <cstddef>
#include <map>
#include <string>

#include "hopfcat/cells.hpp"
#include "hopfcat/comod.hpp"
#include "hopfcat/report.hpp"

namespace hopfcat {

/// A monoidale (E, p, j, alpha, lambda, rho) in Comod(V). The constraint
/// matrices act between the left-bracketed composites built by
/// MonoidaleShapes:
///   alpha:  (p (x) 1) <> p  ->  (1 (x) p) <> p
///   lambda: (j (x) 1) <> p  ->  1_E
///   rho:    (1 (x) j) <> p  ->  1_E
template <class K>
struct MonoidaleData {
  Comonoid<K> object;
  Comodule<K> p;
  Comodule<K> j;
  Matrix<K> alpha;
  Matrix<K> lambda;
  Matrix<K> rho;
  BraidingKind braid = BraidingKind::symmetric;
};

/// Builds the composites that the coherence axioms talk about, with p and j
/// as opaque atoms under caller-chosen labels and every identity strand
/// under a fresh label.
template <class K>
class MonoidaleShapes {
 public:
  explicit MonoidaleShapes(const MonoidaleData<K>& m) : m_(m) {}

  Cell<K> p(const std::string& label) const { return atom_cell(m_.p, label); }
  Cell<K> j(const std::string& label) const { return atom_cell(m_.j, label); }
  Cell<K> id() { return strand_cell(m_.object, "1#" + std::to_string(fresh_++)); }

  Cell<K> t(const Cell<K>& a, const Cell<K>& b) const { return tensor_cells(a, b, m_.braid); }
  Cell<K> t(const Cell<K>& a, const Cell<K>& b, const Cell<K>& c) const {
    return tensor_cells(std::vector<Cell<K>>{a, b, c}, m_.braid);
  }
  static Cell<K> c(const Cell<K>& a, const Cell<K>& b) { return compose_cells(a, b); }

  /// (p_a (x) 1) <> p_b, the domain of alpha.
  Cell<K> left_pair(const std::string& a, const std::string& b) { return c(t(p(a), id()), p(b)); }
  /// (1 (x) p_a) <> p_b, the codomain of alpha.
  Cell<K> right_pair(const std::string& a, const std::string& b) { return c(t(id(), p(a)), p(b)); }
  Cell<K> left_unit_dom(const std::string& jl, const std::string& pl) { return c(t(j(jl), id()), p(pl)); }
  Cell<K> right_unit_dom(const std::string& jl, const std::string& pl) { return c(t(id(), j(jl)), p(pl)); }

  [[nodiscard]] BraidingKind braid() const { return m_.braid; }
  [[nodiscard]] std::size_t object_dim() const { return m_.object.dim(); }

 private:
  const MonoidaleData<K>& m_;
  std::size_t fresh_ = 0;
};

namespace detail {

template <class K>
void check_constraint(Report& r, const std::string& name, const Matrix<K>& m, const Cell<K>& dom,
                      const Cell<K>& cod) {
  const bool shaped = m.rows() == cod.dim() && m.cols() == dom.dim();
  r.add(name + "_invertible", shaped && is_invertible(m),
        shaped ? "" : m.shape() + " between carriers of dimension " + std::to_string(dom.dim()) + " and " +
                          std::to_string(cod.dim()));
  r.add(name + "_comodule_morphism", shaped && is_comodule_morphism(dom.comodule, cod.comodule, m));
}

template <class K>
void expect_paths(Report& r, const std::string& name, const Path<K>& a, const Path<K>& b) {
  r.expect_equal(name, a.map(), b.map());
}

}  // namespace detail

/// ((ab)c)d -> a(b(cd)) along both sides of the pentagon.
template <class K>
Report monoidale_pentagon(const MonoidaleData<K>& m) {
  MonoidaleShapes<K> s(m);
  const auto braid = m.braid;
  const auto ide = Matrix<K>::identity(m.object.dim());
  auto mk = [&](const Cell<K>& x) { return Matrix<K>::identity(x.dim()); };
  const auto start = s.c(s.c(s.t(s.p("12"), s.id(), s.id()), s.t(s.p("(12)3"), s.id())), s.p("top"));
  const auto finish = s.c(s.c(s.t(s.id(), s.id(), s.p("34")), s.t(s.id(), s.p("2(34)"))), s.p("top"));

  Path<K> a(start, braid);
  {
    const auto head = s.t(s.p("12"), s.id(), s.id());
    a.to(s.c(head, s.left_pair("(12)3", "top")));
    a.apply(mk(head), m.alpha, s.c(head, s.right_pair("34", "top")));
    const auto head2 = s.t(s.id(), s.id(), s.p("34"));
    a.to(s.c(head2, s.left_pair("12", "top")));
    a.apply(mk(head2), m.alpha, s.c(head2, s.right_pair("2(34)", "top")));
    a.to(finish);
  }
  Path<K> b(start, braid);
  {
    const auto tail = s.p("top");
    b.to(s.c(s.t(s.left_pair("12", "(12)3"), s.id()), tail));
    b.apply(kron(m.alpha, ide), mk(tail), s.c(s.t(s.right_pair("23", "1(23)"), s.id()), tail));
    const auto head = s.t(s.id(), s.p("23"), s.id());
    b.to(s.c(head, s.left_pair("1(23)", "top")));
    b.apply(mk(head), m.alpha, s.c(head, s.right_pair("(23)4", "top")));
    b.to(s.c(s.t(s.id(), s.left_pair("23", "(23)4")), tail));
    b.apply(kron(ide, m.alpha), mk(tail), s.c(s.t(s.id(), s.right_pair("34", "2(34)")), tail));
    b.to(finish);
  }
  Report r;
  detail::expect_paths(r, "pentagon", a, b);
  return r;
}

/// ((1 (x) j (x) 1) <> (p (x) 1)) <> p -> p through alpha and lambda, and through rho.
template <class K>
Report monoidale_triangle(const MonoidaleData<K>& m) {
  MonoidaleShapes<K> s(m);
  const auto braid = m.braid;
  const auto ide = Matrix<K>::identity(m.object.dim());
  const auto mid = s.t(s.id(), s.j("j"), s.id());
  const auto start = s.c(s.c(mid, s.t(s.p("1j"), s.id())), s.p("top"));
  const auto finish = s.p("top");
  const auto tail = s.p("top");
  const auto id_tail = Matrix<K>::identity(tail.dim());

  Path<K> a(start, braid);
  a.to(s.c(mid, s.left_pair("1j", "top")));
  a.apply(Matrix<K>::identity(mid.dim()), m.alpha, s.c(mid, s.right_pair("j2", "top")));
  a.to(s.c(s.t(s.id(), s.left_unit_dom("j", "j2")), tail));
  a.apply(kron(ide, m.lambda), id_tail, s.c(s.t(s.id(), s.id()), tail));
  a.to(finish);

  Path<K> b(start, braid);
  b.to(s.c(s.t(s.right_unit_dom("j", "1j"), s.id()), tail));
  b.apply(kron(m.rho, ide), id_tail, s.c(s.t(s.id(), s.id()), tail));
  b.to(finish);

  Report r;
  detail::expect_paths(r, "triangle", a, b);
  return r;
}

template <class K>
Report check_monoidale(const MonoidaleData<K>& m) {
  const auto ee = tensor_comonoid(m.object, m.object, m.braid);
  require(same_comonoid(m.p.src, ee) && same_comonoid(m.p.tgt, m.object), ErrorKind::shape_mismatch,
          "p is not a comodule E (x) E -> E");
  require(m.j.src.dim() == 1 && same_comonoid(m.j.tgt, m.object), ErrorKind::shape_mismatch,
          "j is not a comodule I -> E");
  Report r;
  r.subject = "monoidale";
  r.absorb(check_comodule(m.p), "p.");
  r.absorb(check_comodule(m.j), "j.");
  if (!r.passed()) return r;

  MonoidaleShapes<K> s(m);
  const auto unit = s.id();
  detail::check_constraint(r, "alpha", m.alpha, s.left_pair("a", "b"), s.right_pair("a", "b"));
  detail::check_constraint(r, "lambda", m.lambda, s.left_unit_dom("j", "p"), unit);
  detail::check_constraint(r, "rho", m.rho, s.right_unit_dom("j", "p"), unit);
  if (!r.passed()) return r;

  for (auto [name, fn] : {std::pair{"pentagon", &monoidale_pentagon<K>}, std::pair{"triangle", &monoidale_triangle<K>}}) {
    try {
      r.absorb(fn(m), "");
    } catch (const Error& e) {
      r.add(name, false, e.what());
    }
  }
  return r;
}

template <class K>
Cell<K> relabel(Cell<K> x, const std::map<std::string, std::string>& names) {
  for (auto& a : x.atoms) {
    const auto it = names.find(a.label);
    if (it != names.end()) a.label = it->second;
  }
  return x;
}

/// The monoidale on C° (x) C with p = 1 (x) e (x) 1 and j = n. Its
/// constraints are the canonical isos that keep the e and n atoms and the
/// outer strands in place.
template <class K>
MonoidaleData<K> enveloping_monoidale(const Comonoid<K>& c, BraidingKind braid) {
  const auto bid = biduality_data(c, braid);
  const auto& eps = c.epsilon.mat;
  auto p_cell = [&](const std::string& tag) {
    return tensor_cells(std::vector<Cell<K>>{strand_cell(bid.dual, tag + ".u"), atom_cell(bid.e, tag + ".e", std::optional(eps)),
                         strand_cell(c, tag + ".w")},
                        braid);
  };
  auto unit_cell = [&](const std::string& tag) {
    return tensor_cells(strand_cell(bid.dual, tag + ".l"), strand_cell(c, tag + ".r"), braid);
  };
  const auto n_cell = atom_cell(bid.n, "n", std::optional(eps));

  MonoidaleData<K> m;
  m.braid = braid;
  m.object = tensor_comonoid(bid.dual, c, braid);
  m.p = p_cell("p").comodule;
  m.j = bid.n;

  const auto ax = relabel(compose_cells(tensor_cells(p_cell("a"), unit_cell("x"), braid), p_cell("b")),
                          {{"a.e", "e1"}, {"b.e", "e2"}, {"a.u", "L"}, {"b.w", "R"}});
  const auto ay = relabel(compose_cells(tensor_cells(unit_cell("y"), p_cell("c"), braid), p_cell("d")),
                          {{"c.e", "e2"}, {"d.e", "e1"}, {"y.l", "L"}, {"d.w", "R"}});
  m.alpha = canonical_iso(ax, ay, braid);
  const auto target = relabel(unit_cell("t"), {{"t.l", "L"}, {"t.r", "R"}});
  const auto lx = relabel(compose_cells(tensor_cells(n_cell, unit_cell("x"), braid), p_cell("a")),
                          {{"a.u", "L"}, {"x.r", "R"}});
  m.lambda = canonical_iso(lx, target, braid);
  const auto rx = relabel(compose_cells(tensor_cells(unit_cell("x"), n_cell, braid), p_cell("a")),
                          {{"x.l", "L"}, {"a.w", "R"}});
  m.rho = canonical_iso(rx, target, braid);
  return m;
}

}  // namespace hopfcat
