#pragma once

#include <array>
#include <cstddef>
#include <string>

#include "hopfcat/coalg.hpp"
#include "hopfcat/error.hpp"
#include "hopfcat/linalg.hpp"
#include "hopfcat/report.hpp"

namespace hopfcat {

enum class FusionSide { galois, paper46 };

inline std::string to_string(FusionSide side) { return side == FusionSide::galois ? "galois" : "paper46"; }

inline FusionSide parse_fusion_side(const std::string& text) {
  if (text == "galois") return FusionSide::galois;
  if (text == "paper46") return FusionSide::paper46;
  fail(ErrorKind::parse_error, "unknown fusion side '" + text + "'");
}

template <class K>
void require_bimonoid(const Bimonoid<K>& h, BraidingKind braid) {
  const auto report = check_bimonoid(h, braid);
  if (const auto* bad = report.first_failure()) {
    fail(ErrorKind::axiom_violation, "not a bimonoid: " + bad->name + " " + bad->detail);
  }
}

/// galois:  h (x) h' -> h(1) (x) h(2) h'
/// paper46: h (x) h' -> h(1) h' (x) h(2)
template <class K>
MorphismV<K> fusion_operator(const Bimonoid<K>& h, FusionSide side,
                             BraidingKind braid = BraidingKind::symmetric) {
  require_bimonoid(h, braid);
  const auto hh = tensor_objects(h.carrier(), h.carrier());
  const auto id = Matrix<K>::identity(h.dim());
  const auto split = kron(h.delta(), id);
  if (side == FusionSide::galois) return {hh, hh, kron(id, h.mu()) * split};
  const auto c = braiding<K>(h.carrier(), h.carrier(), braid).mat;
  return {hh, hh, kron(h.mu(), id) * kron(id, c) * split};
}

template <class K>
bool is_right_hopf(const Bimonoid<K>& h, BraidingKind braid = BraidingKind::symmetric) {
  return is_invertible(fusion_operator(h, FusionSide::paper46, braid).mat);
}

template <class K>
struct AntipodeCertificate {
  MorphismV<K> s;
  std::array<bool, 2> side_checks{};  // (S * id, id * S)
};

/// Both convolution products of s with the identity, as matrices H -> H.
template <class K>
std::array<Matrix<K>, 2> convolutions_with_identity(const Bimonoid<K>& h, const Matrix<K>& s) {
  const auto id = Matrix<K>::identity(h.dim());
  return {h.mu() * kron(s, id) * h.delta(), h.mu() * kron(id, s) * h.delta()};
}

template <class K>
Report check_antipode(const Bimonoid<K>& h, const MorphismV<K>& s) {
  require(s.mat.rows() == h.dim() && s.mat.cols() == h.dim(), ErrorKind::shape_mismatch,
          "antipode candidate " + s.mat.shape() + " for a bimonoid of dimension " +
              std::to_string(h.dim()));
  const auto target = h.eta() * h.epsilon();
  const auto conv = convolutions_with_identity(h, s.mat);
  Report r;
  r.subject = "antipode";
  r.expect_equal("left_convolution", conv[0], target);
  r.expect_equal("right_convolution", conv[1], target);
  return r;
}

/// Solves mu (S (x) 1) delta = eta epsilon = mu (1 (x) S) delta for the n^2
/// entries of S at once. Unknown (a, b) is S[a][b] at index a * n + b.
template <class K>
AntipodeCertificate<K> extract_antipode(const Bimonoid<K>& h, BraidingKind braid = BraidingKind::symmetric) {
  require_bimonoid(h, braid);
  const std::size_t n = h.dim();
  const auto dd = h.delta().dense_rows();
  const auto mu = h.mu().dense_rows();
  const auto target = (h.eta() * h.epsilon()).dense_rows();
  Matrix<K> system(2 * n * n, n * n);
  Matrix<K> rhs(2 * n * n, 1);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t col = 0; col < n; ++col) {
      const std::size_t eq = r * n + col;
      rhs.set(eq, 0, target[r][col]);
      rhs.set(n * n + eq, 0, target[r][col]);
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          const K& d = dd[i * n + j][col];
          if (d.is_zero()) continue;
          for (std::size_t a = 0; a < n; ++a) {
            // mu(S e_i (x) e_j): unknown S[a][i]
            if (!mu[r][a * n + j].is_zero()) system.add(eq, a * n + i, d * mu[r][a * n + j]);
            // mu(e_i (x) S e_j): unknown S[a][j]
            if (!mu[r][i * n + a].is_zero()) system.add(n * n + eq, a * n + j, d * mu[r][i * n + a]);
          }
        }
      }
    }
  }
  const auto sol = solve_linear(system, rhs);
  require(sol.consistent, ErrorKind::no_antipode, "convolution equations are inconsistent");
  require(sol.kernel_dim == 0, ErrorKind::non_unique,
          "antipode solution space has dimension " + std::to_string(sol.kernel_dim));
  Matrix<K> s(n, n);
  for (const auto& [idx, v] : sol.particular.column(0)) s.set(idx / n, idx % n, v);
  AntipodeCertificate<K> cert{MorphismV<K>(h.carrier(), h.carrier(), s), {}};
  const auto report = check_antipode(h, cert.s);
  cert.side_checks = {report.passed("left_convolution"), report.passed("right_convolution")};
  return cert;
}

/// h (x) h' -> h(1) (x) S(h(2)) h', the inverse of the galois operator.
template <class K>
Matrix<K> galois_inverse(const Bimonoid<K>& h, const Matrix<K>& s) {
  const auto id = Matrix<K>::identity(h.dim());
  return kron(id, h.mu()) * kron(id, s, id) * kron(h.delta(), id);
}

/// S mu = mu (S (x) S) c.
template <class K>
bool is_anti_homomorphism(const Bimonoid<K>& h, const Matrix<K>& s,
                          BraidingKind braid = BraidingKind::symmetric) {
  const auto c = braiding<K>(h.carrier(), h.carrier(), braid).mat;
  return s * h.mu() == h.mu() * kron(s, s) * c;
}

}  // namespace hopfcat
