#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "hopfcat/matrix.hpp"

namespace hopfcat {

struct AxiomResult {
  std::string name;
  bool passed = false;
  std::string detail;  // first differing entry, or a reason
};

using StringMatrix = std::vector<std::vector<std::string>>;

/// Field-agnostic verdict: per-axiom results plus named verdict flags,
/// scalar values and certificate matrices already rendered to strings.
struct Report {
  std::string subject;
  std::vector<AxiomResult> axioms;
  std::map<std::string, bool> verdicts;
  std::map<std::string, std::string> values;
  std::map<std::string, StringMatrix> certificates;

  [[nodiscard]] bool passed() const {
    for (const auto& a : axioms) {
      if (!a.passed) return false;
    }
    return true;
  }

  [[nodiscard]] const AxiomResult* first_failure() const {
    for (const auto& a : axioms) {
      if (!a.passed) return &a;
    }
    return nullptr;
  }

  [[nodiscard]] bool has(const std::string& name) const {
    for (const auto& a : axioms) {
      if (a.name == name) return true;
    }
    return false;
  }

  [[nodiscard]] bool passed(const std::string& name) const {
    for (const auto& a : axioms) {
      if (a.name == name) return a.passed;
    }
    return false;
  }

  void add(std::string name, bool ok, std::string detail = {}) {
    axioms.push_back({std::move(name), ok, std::move(detail)});
  }

  template <class K>
  bool expect_equal(std::string name, const Matrix<K>& lhs, const Matrix<K>& rhs) {
    auto diff = first_difference(lhs, rhs);
    add(std::move(name), !diff, diff.value_or(""));
    return !diff;
  }

  /// Appends the axioms of another report under a prefix.
  void absorb(const Report& other, const std::string& prefix) {
    for (const auto& a : other.axioms) axioms.push_back({prefix + a.name, a.passed, a.detail});
  }
};

}  // namespace hopfcat
