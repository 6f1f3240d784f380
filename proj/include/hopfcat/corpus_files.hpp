#pragma once

#include <string>
#include <utility>
#include <vector>

#include "hopfcat/comod.hpp"
#include "hopfcat/corpus.hpp"
#include "hopfcat/io.hpp"
#include "hopfcat/quantum.hpp"

namespace hopfcat::corpus {

/// The checked-in corpus, keyed by file name. Documents leave the field open
/// so that one file serves every field; scalars are rendered over Q.
inline std::vector<std::pair<std::string, StructureDocument>> documents() {
  using K = Rational;
  const auto q = FieldSpec::rational();
  std::vector<std::pair<std::string, StructureDocument>> out;
  auto add = [&](const std::string& name, StructureDocument d) {
    d.field.reset();
    d.name = name;
    out.emplace_back(name + ".json", std::move(d));
  };
  for (const auto& [name, h] : bimonoids<K>()) {
    add(name, write_bimonoid(h, name, q));
    for (const auto& [mname, m] : modules(name, h)) {
      if (mname == "trivial2") continue;
      add(name + "_" + mname + "_module", write_module(m, "", name, q));
    }
    add(name + "_quantum", write_quantum(from_bimonoid(h), "", q));
  }
  const std::vector<std::pair<std::string, Comonoid<K>>> comonoids{
      {"group_like_1", group_like_comonoid<K>(1)},
      {"group_like_2", group_like_comonoid<K>(2)},
      {"divided_power_2", divided_power_comonoid<K>()}};
  for (const auto& [name, c] : comonoids) {
    add(name, write_comonoid(c, name, q));
    add(name + "_left_regular_comodule", write_comodule(left_regular_comodule(c), "", q));
    add(name + "_right_regular_comodule", write_comodule(right_regular_comodule(c), "", q));
  }
  auto odd = write_comonoid(odd_primitive_comonoid<K>(), "", q);
  odd.braiding = "super";
  add("odd_primitive", odd);
  add("group_like_2_identity_quantum",
      write_quantum(identity_quantum_category(group_like_comonoid<K>(2), BraidingKind::symmetric), "", q));
  return out;
}

}  // namespace hopfcat::corpus
