#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "hopfcat/comod.hpp"
#include "hopfcat/error.hpp"
#include "hopfcat/linalg.hpp"
#include "hopfcat/tensor.hpp"

namespace hopfcat {

/// One building block of a composite 1-cell. Atoms with equal labels in two
/// cells are the same strand; an atom with a counit may be contracted away
/// when the other cell has no atom of that label.
template <class K>
struct Atom {
  std::string label;
  VectObject carrier;
  std::optional<Matrix<K>> counit;
};

/// A 1-cell of Comod(V) built from atoms by tensor and composition, with its
/// carrier embedded in the tensor product of the atom carriers.
template <class K>
struct Cell {
  Comodule<K> comodule;
  std::vector<Atom<K>> atoms;
  Matrix<K> emb;
  // for composites X <> Y: the carrier inside carrier(X) (x) carrier(Y)
  std::optional<SubspaceEmbedding<K>> factors;

  [[nodiscard]] std::size_t dim() const { return comodule.dim(); }
};

template <class K>
Cell<K> atom_cell(const Comodule<K>& m, const std::string& label, std::optional<Matrix<K>> counit = std::nullopt) {
  return {m, {Atom<K>{label, m.carrier, std::move(counit)}}, Matrix<K>::identity(m.dim()), std::nullopt};
}

/// The identity 1-cell on c as one contractible strand.
template <class K>
Cell<K> strand_cell(const Comonoid<K>& c, const std::string& label) {
  return atom_cell(identity_comodule(c), label, std::optional<Matrix<K>>(c.epsilon.mat));
}

template <class K>
Cell<K> tensor_cells(const Cell<K>& x, const Cell<K>& y, BraidingKind braid) {
  Cell<K> out{tensor_comodules(x.comodule, y.comodule, braid), x.atoms, kron(x.emb, y.emb), std::nullopt};
  out.atoms.insert(out.atoms.end(), y.atoms.begin(), y.atoms.end());
  return out;
}

template <class K>
Cell<K> tensor_cells(const std::vector<Cell<K>>& xs, BraidingKind braid) {
  require(!xs.empty(), ErrorKind::invalid_argument, "empty tensor of cells");
  Cell<K> out = xs.front();
  for (std::size_t i = 1; i < xs.size(); ++i) out = tensor_cells(out, xs[i], braid);
  return out;
}

/// X <> Y, i.e. first X then Y.
template <class K>
Cell<K> compose_cells(const Cell<K>& x, const Cell<K>& y) {
  auto comp = compose_comodules(x.comodule, y.comodule);
  Cell<K> out{std::move(comp.comodule), x.atoms, kron_apply(x.emb, y.emb, comp.embedding.basis),
              std::move(comp.embedding)};
  out.atoms.insert(out.atoms.end(), y.atoms.begin(), y.atoms.end());
  return out;
}

template <class K>
std::vector<std::size_t> atom_dims(const Cell<K>& x) {
  std::vector<std::size_t> d;
  for (const auto& a : x.atoms) d.push_back(a.carrier.dim);
  return d;
}

/// The embedding of x with every atom outside `keep` contracted by its counit
/// and the kept atoms reordered as listed.
template <class K>
Matrix<K> restrict_to_atoms(const Cell<K>& x, const std::vector<std::size_t>& keep, BraidingKind braid) {
  std::vector<bool> kept(x.atoms.size(), false);
  for (std::size_t k : keep) kept[k] = true;
  Matrix<K> m = x.emb;
  auto dims = atom_dims(x);
  for (std::size_t leg = dims.size(); leg-- > 0;) {
    if (kept[leg]) continue;
    const auto& a = x.atoms[leg];
    require(a.counit.has_value(), ErrorKind::factorization_failure,
            "atom '" + a.label + "' has no partner and cannot be contracted");
    m = apply_on_leg(m, dims, leg, *a.counit);
    dims[leg] = 1;
  }
  std::vector<std::size_t> order;  // kept legs in their current order
  for (std::size_t leg = 0; leg < dims.size(); ++leg) {
    if (kept[leg]) order.push_back(leg);
  }
  std::vector<std::size_t> sub_dims, perm;
  std::vector<VectObject> objs;
  for (std::size_t leg : order) {
    sub_dims.push_back(dims[leg]);
    objs.push_back(x.atoms[leg].carrier);
  }
  for (std::size_t k : keep) {
    perm.push_back(static_cast<std::size_t>(std::find(order.begin(), order.end(), k) - order.begin()));
  }
  return permute_legs(m, sub_dims, perm, leg_parities(objs, braid));
}

/// The unique comodule iso x -> y that is the identity on shared atoms and
/// the counit on atoms only one side has.
template <class K>
Matrix<K> canonical_iso(const Cell<K>& x, const Cell<K>& y, BraidingKind braid) {
  std::unordered_map<std::string, std::size_t> in_x;
  for (std::size_t i = 0; i < x.atoms.size(); ++i) {
    require(in_x.emplace(x.atoms[i].label, i).second, ErrorKind::invalid_argument,
            "repeated atom label '" + x.atoms[i].label + "'");
  }
  std::vector<std::size_t> keep_x, keep_y;
  for (std::size_t i = 0; i < y.atoms.size(); ++i) {
    const auto it = in_x.find(y.atoms[i].label);
    if (it == in_x.end()) continue;
    require(x.atoms[it->second].carrier == y.atoms[i].carrier, ErrorKind::shape_mismatch,
            "atom '" + y.atoms[i].label + "' has different carriers");
    keep_x.push_back(it->second);
    keep_y.push_back(i);
  }
  const auto lhs = restrict_to_atoms(y, keep_y, braid);
  const auto rhs = restrict_to_atoms(x, keep_x, braid);
  const auto sol = solve_linear(lhs, rhs);
  require(sol.kernel_dim == 0, ErrorKind::factorization_failure,
          "shared atoms do not determine the target carrier");
  require(sol.consistent, ErrorKind::factorization_failure, "shared atoms do not determine a map");
  return require_iso(x.comodule, y.comodule, sol.particular, "canonical iso");
}

/// sigma <> tau between composites X <> Y and X' <> Y'.
template <class K>
Matrix<K> hcomp(const Cell<K>& from, const Cell<K>& to, const Matrix<K>& sigma, const Matrix<K>& tau) {
  require(from.factors && to.factors, ErrorKind::invalid_argument, "horizontal composite of non-composites");
  const auto img = kron_apply(sigma, tau, from.factors->basis);
  try {
    return factor_through(*to.factors, img);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::not_in_subspace) throw;
    fail(ErrorKind::factorization_failure, "2-cells do not restrict to the composites");
  }
}

/// A 2-cell under construction: a running matrix from a fixed start cell.
template <class K>
class Path {
 public:
  Path(Cell<K> start, BraidingKind braid)
      : at_(std::move(start)), map_(Matrix<K>::identity(at_.dim())), braid_(braid) {}

  Path& to(const Cell<K>& y) {
    map_ = canonical_iso(at_, y, braid_) * map_;
    at_ = y;
    return *this;
  }

  Path& apply(const Matrix<K>& sigma, const Cell<K>& y) {
    require(sigma.cols() == at_.dim() && sigma.rows() == y.dim(), ErrorKind::shape_mismatch,
            "2-cell " + sigma.shape() + " between carriers of dimension " + std::to_string(at_.dim()) +
                " and " + std::to_string(y.dim()));
    map_ = sigma * map_;
    at_ = y;
    return *this;
  }

  /// Applies sigma <> tau where the current cell is a composite.
  Path& apply(const Matrix<K>& sigma, const Matrix<K>& tau, const Cell<K>& y) {
    map_ = hcomp(at_, y, sigma, tau) * map_;
    at_ = y;
    return *this;
  }

  [[nodiscard]] const Cell<K>& at() const { return at_; }
  [[nodiscard]] const Matrix<K>& map() const { return map_; }

 private:
  Cell<K> at_;
  Matrix<K> map_;
  BraidingKind braid_;
};

}  // namespace hopfcat
