// Prints one PASS/FAIL line per acceptance criterion and exits nonzero if any
// criterion fails or takes ten seconds or longer.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "hopfcat/cli.hpp"
#include "hopfcat/corpus.hpp"
#include "hopfcat/corpus_files.hpp"
#include "oracles.hpp"

using namespace hopfcat;
using namespace hopfcat::testing;

namespace {

const std::string kCorpus = HOPFCAT_CORPUS_DIR;

/// Collects the first few failed expectations of one criterion.
struct Tally {
  std::vector<std::string> failures;

  void expect(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
};

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_command(args, out, err);
  return {code, out.str(), err.str()};
}

std::string corpus_file(const std::string& name) { return kCorpus + "/" + name + ".json"; }

bool expected_hopf(const std::string& name) {
  return name != "idempotent_monoid_algebra";
}

template <class K>
bool antipode_exists(const Bimonoid<K>& h) {
  try {
    extract_antipode(h);
    return true;
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::no_antipode) throw;
    return false;
  }
}

template <class K>
void hopf_verdicts(Tally& t) {
  const auto spec = field_of<K>();
  for (const auto& [name, h] : corpus::bimonoids<K>()) {
    const bool want = expected_hopf(name);
    t.expect(is_right_hopf(h) == want, name + " verdict over " + spec.str());
    const auto cli = run({"--field", spec.str(), "hopf", corpus_file(name)});
    t.expect(cli.code == (want ? 0 : 1), name + " hopf command over " + spec.str());
  }
  t.expect(corpus::s3_group_algebra<K>().dim() == 6, "S3 has dimension 6");
}

template <class K>
void antipode_certificates(Tally& t) {
  const auto spec = field_of<K>();
  for (const auto& [name, h] : corpus::bimonoids<K>()) {
    const bool hopf = is_right_hopf(h);
    t.expect(antipode_exists(h) == hopf, name + " antipode exists iff Hopf over " + spec.str());
    const auto oracle = oracle_antipode(h);
    t.expect(oracle.has_value() == hopf, name + " oracle solvability");
    if (!hopf) continue;
    const auto cert = extract_antipode(h);
    const auto r = check_antipode(h, cert.s);
    t.expect(r.passed("left_convolution") && r.passed("right_convolution"), name + " both-sided check");
    t.expect(cert.s.mat.dense_rows() == *oracle, name + " agrees with the convolution-solve oracle");
  }
  const auto h4 = corpus::sweedler_h4<K>();
  const auto s = extract_antipode(h4).s.mat;
  // basis 1, g, x, gx
  Matrix<K> minus_gx(4, 1);
  minus_gx.set(3, 0, K(-1));
  Matrix<K> x(4, 1);
  x.set(2, 0, K(1));
  t.expect(s * x == minus_gx, "Sweedler S(x) = -gx");
  t.expect(s * s != Matrix<K>::identity(4), "Sweedler S^2 is not the identity");
}

template <class K>
void fusion_consistency(Tally& t) {
  for (const auto& [name, h] : corpus::bimonoids<K>()) {
    const bool hopf = is_right_hopf(h);
    const auto galois = fusion_operator(h, FusionSide::galois).mat;
    t.expect(is_invertible(galois) == hopf, name + " galois invertible iff Hopf");
    t.expect(antipode_exists(h) == hopf, name + " antipode exists iff Hopf");
    if (!hopf) continue;
    const auto inv = galois_inverse(h, extract_antipode(h).s.mat);
    const auto id = Matrix<K>::identity(galois.rows());
    t.expect(inv * galois == id && galois * inv == id, name + " explicit galois inverse");
  }
}

template <class K>
void module_fusion_suite(Tally& t) {
  for (const auto& [name, h] : corpus::bimonoids<K>()) {
    const bool hopf = is_right_hopf(h);
    const auto mods = corpus::modules(name, h);
    t.expect(name != "c2_group_algebra" || mods.size() == 4, "c2 carries the sign module");
    // the 2-cell is invertible when every component is; trivial modules give
    // the flip, which is invertible for any bimonoid
    bool every_component = true;
    for (const auto& [mname, m] : mods) {
      t.expect(check_module(m).passed(), name + "/" + mname + " is a module");
      const bool inv = is_invertible(module_fusion(m, VectObject::unit()).mat);
      t.expect(!hopf || inv, name + "/" + mname + " unit fusion invertible over a Hopf member");
      every_component = every_component && inv;
    }
    t.expect(every_component == hopf, name + " unit fusion invertible on all modules iff Hopf");
    if (!hopf) {
      t.expect(!is_invertible(module_fusion(regular_module(h), VectObject::unit()).mat),
               name + " regular module witnesses singularity");
    }
  }
}

template <class K>
void internal_hom_suite(Tally& t) {
  for (const auto& [name, h] : corpus::bimonoids<K>()) {
    const auto mods = corpus::modules(name, h);
    if (!is_right_hopf(h)) {
      try {
        lift_internal_hom(regular_module(h), regular_module(h));
        t.expect(false, name + " regular pair must fail with NotHopf");
      } catch (const Error& e) {
        t.expect(e.kind() == ErrorKind::not_hopf, name + " regular pair fails with NotHopf");
      }
      continue;
    }
    for (const auto& [na, a] : mods) {
      for (const auto& [nb, b] : mods) {
        const auto pair = name + " (" + na + "," + nb + ")";
        const auto l = lift_internal_hom(a, b);
        t.expect(l.kernel_dim == 0, pair + " unique rho");
        t.expect(check_ev_morphism(l, a, b).passed(), pair + " ev is a module morphism");
        t.expect(l.rho.mat == closed_form_rho(h, a, b, kRhoChirality), pair + " rho matches the twisted formula");
      }
    }
  }
}

template <class K>
std::vector<std::pair<std::string, Comonoid<K>>> small_comonoids() {
  return {{"unit", Comonoid<K>::unit()},
          {"group_like_1", group_like_comonoid<K>(1)},
          {"group_like_2", group_like_comonoid<K>(2)},
          {"divided_power_2", corpus::divided_power_comonoid<K>()},
          {"odd_primitive", corpus::odd_primitive_comonoid<K>()}};
}

template <class K>
void comodule_calculus(Tally& t) {
  const auto cs = small_comonoids<K>();
  for (const auto& [nc, c] : cs) {
    for (const auto& [nd, d] : cs) {
      // C -> k composed with k -> D
      const auto m = left_regular_comodule(c);
      const auto n = right_regular_comodule(d);
      const auto comp = compose_comodules(m, n);
      t.expect(comp.comodule.dim() == c.dim() * d.dim(), nc + "," + nd + " composition over k multiplies");
      t.expect(comp.comodule.dim() == oracle_composite_dim(m, n), nc + "," + nd + " kernel oracle over k");
    }
    const auto id = identity_comodule(c);
    const auto r = right_regular_comodule(c);
    const auto l = left_regular_comodule(c);
    const std::vector<std::pair<Comodule<K>, Comodule<K>>> pairs{{id, id}, {r, id}, {id, l}, {r, l}};
    for (const auto& [a, b] : pairs) {
      t.expect(compose_comodules(a, b).comodule.dim() == oracle_composite_dim(a, b), nc + " kernel oracle");
    }
    try {
      for (const auto& [a, b, q] : {std::tuple{id, id, id}, std::tuple{r, id, l}, std::tuple{r, id, id}}) {
        const auto isos = constraint_isos(a, b, q);
        t.expect(is_invertible(isos.assoc), nc + " associator invertible");
        t.expect(is_invertible(isos.left_unit) && is_invertible(isos.right_unit), nc + " unitors invertible");
      }
    } catch (const Error& e) {
      t.expect(false, nc + " constraint isos: " + e.what());
    }
  }
}

template <class K>
void monoidale_suite(Tally& t) {
  for (const auto& [name, c] : {std::pair{std::string("unit"), Comonoid<K>::unit()},
                                std::pair{std::string("group_like_2"), group_like_comonoid<K>(2)}}) {
    const auto sym = enveloping_monoidale(c, BraidingKind::symmetric);
    t.expect(check_monoidale(sym).passed(), name + " symmetric monoidale");
    const auto sup = enveloping_monoidale(c, BraidingKind::super);
    t.expect(check_monoidale(sup).passed(), name + " super monoidale");
    t.expect(sym.p.coaction == sup.p.coaction && sym.j.coaction == sup.j.coaction && sym.alpha == sup.alpha &&
                 sym.lambda == sup.lambda && sym.rho == sup.rho,
             name + " identical matrices under the super flag");
  }
}

template <class K>
void quantum_bridge(Tally& t) {
  for (const auto& [name, h] : corpus::bimonoids<K>()) {
    const auto v = is_quantum_groupoid(from_bimonoid(h));
    t.expect(v.is_quantum_category, name + " is a quantum category");
    t.expect(v.is_quantum_groupoid == is_right_hopf(h), name + " groupoid iff Hopf");
  }
  const auto v = is_quantum_groupoid(identity_quantum_category(group_like_comonoid<K>(2), BraidingKind::symmetric));
  t.expect(v.is_quantum_category && v.is_quantum_groupoid, "identity comonad on group_like_2 gives (true, true)");
}

/// Every command over every corpus document, twice.
void reproducibility(Tally& t) {
  const std::string dir = std::filesystem::temp_directory_path().string();
  std::vector<std::vector<std::string>> commands;
  std::vector<std::string> certificates;
  for (const auto& [file, doc] : corpus::documents()) {
    const auto path = kCorpus + "/" + file;
    commands.push_back({"check", path});
    if (doc.kind == "bimonoid") {
      const auto cert = dir + "/hopfcat_acceptance_" + doc.name + "_antipode.json";
      commands.push_back({"hopf", path});
      commands.push_back({"fusion", path, "--side", "galois", "--emit-matrix"});
      commands.push_back({"--report", "text", "fusion", path, "--emit-matrix"});
      commands.push_back({"antipode", path, "-o", cert});
      if (doc.name != "idempotent_monoid_algebra") certificates.push_back(cert);
    } else if (doc.kind == "comonoid" && !doc.braiding) {
      commands.push_back({"monoidale", path});
    } else if (doc.kind == "quantum") {
      commands.push_back({"quantum", "check", path});
      commands.push_back({"quantum", "groupoid", path});
    }
  }
  commands.push_back({"lift-hom", corpus_file("c2_group_algebra"), corpus_file("c2_group_algebra_sign_module"),
                      corpus_file("c2_group_algebra_regular_module")});
  commands.push_back({"lift-hom", corpus_file("idempotent_monoid_algebra"),
                      corpus_file("idempotent_monoid_algebra_regular_module"),
                      corpus_file("idempotent_monoid_algebra_regular_module")});
  commands.push_back({"compose", corpus_file("divided_power_2_left_regular_comodule"),
                      corpus_file("group_like_2_right_regular_comodule")});
  for (const auto& c : commands) {
    std::string line;
    for (const auto& a : c) line += " " + a.substr(a.rfind('/') == std::string::npos ? 0 : a.rfind('/') + 1);
    const auto a = run(c);
    const auto b = run(c);
    t.expect(a.code <= 1, "exit " + std::to_string(a.code) + " for" + line + " " + a.err);
    t.expect(a.code == b.code && a.out == b.out && a.err == b.err, "byte-identical report for" + line);
    // fusion inverses re-verify
    if (c[0] == "fusion" && a.code == 0) {
      const auto j = nlohmann::json::parse(a.out);
      const auto spec = FieldSpec::parse(j["field"].get<std::string>());
      StructureDocument d;
      d.kind = "fusion";
      d.matrices["f"] = j["certificates"]["fusion"].get<StringMatrix>();
      d.matrices["g"] = j["certificates"]["fusion_inverse"].get<StringMatrix>();
      const std::size_t n = d.matrices["f"].size();
      const auto f = read_matrix<Rational>(d, "f", n, n, spec);
      const auto g = read_matrix<Rational>(d, "g", n, n, spec);
      t.expect(f * g == Matrix<Rational>::identity(n), "fusion inverse re-verifies for" + line);
    }
  }
  for (const auto& cert : certificates) {
    const auto r = run({"check", cert});
    t.expect(r.code == 0 && r.out.find("\"antipode\"") != std::string::npos, "certificate re-verifies: " + cert);
    const auto again = run({"check", cert});
    t.expect(again.out == r.out, "certificate report is byte-identical: " + cert);
    std::remove(cert.c_str());
  }
}

#define HOPFCAT_BOTH(fn)              \
  [](Tally& t) {                      \
    fn<Rational>(t);                  \
    fn<ModP>(t);                      \
  }

}  // namespace

int main() {
  struct Criterion {
    int id;
    std::string title;
    std::function<void(Tally&)> body;
  };
  const std::vector<Criterion> criteria{
      {1, "Hopf verdicts over Q and GF(5)", HOPFCAT_BOTH(hopf_verdicts)},
      {2, "antipode certificates", HOPFCAT_BOTH(antipode_certificates)},
      {3, "fusion and antipode consistency", HOPFCAT_BOTH(fusion_consistency)},
      {4, "module fusion at the unit tracks Hopfness", HOPFCAT_BOTH(module_fusion_suite)},
      {5, "lifted internal homs", HOPFCAT_BOTH(internal_hom_suite)},
      {6, "comodule calculus", HOPFCAT_BOTH(comodule_calculus)},
      {7, "enveloping monoidales", HOPFCAT_BOTH(monoidale_suite)},
      {8, "quantum groupoid bridge", HOPFCAT_BOTH(quantum_bridge)},
      {9, "reproducible reports and certificates", reproducibility},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    Tally t;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.body(t);
    } catch (const std::exception& e) {
      t.expect(false, std::string("unexpected exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    t.expect(secs < 10.0, "took " + std::to_string(secs) + " s");
    const bool ok = t.failures.empty();
    failed += ok ? 0 : 1;
    std::printf("%s criterion %d: %s (%.2f s)", ok ? "PASS" : "FAIL", c.id, c.title.c_str(), secs);
    if (!ok) std::printf(": %s%s", t.failures.front().c_str(), t.failures.size() > 1 ? " ..." : "");
    std::printf("\n");
  }
  return failed == 0 ? 0 : 1;
}
