#pragma once

#include <exception>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "hopfcat/comod.hpp"
#include "hopfcat/fusion.hpp"
#include "hopfcat/io.hpp"
#include "hopfcat/modules.hpp"
#include "hopfcat/monoidale.hpp"
#include "hopfcat/quantum.hpp"

namespace hopfcat {

enum ExitCode : int { kExitPass = 0, kExitFail = 1, kExitInvalid = 2 };

namespace cli {

struct Options {
  std::string report = "json";
  std::optional<std::string> field;
  bool allow_char2_super = false;
  std::string command;
  std::vector<std::string> files;
  std::string side = "paper46";
  bool emit_matrix = false;
  std::string output;
  std::optional<std::string> braiding;
};

struct Outcome {
  Report report;
  bool ok = false;
  std::string input;
};

inline std::string input_name(const StructureDocument& d, const std::string& path) {
  return d.name.empty() ? path : d.name;
}

template <class K>
Outcome run_check(const Options& o, const StructureDocument& d, const FieldSpec& spec) {
  Outcome out;
  const auto braid = read_braiding(d);
  validate_braiding(braid, spec, o.allow_char2_super);
  if (d.kind == "comonoid") {
    out.report = check_comonoid(read_comonoid<K>(d, spec));
  } else if (d.kind == "monoid") {
    out.report = check_monoid(read_monoid<K>(d, spec));
  } else if (d.kind == "bimonoid") {
    out.report = check_bimonoid(read_bimonoid<K>(d, spec), braid);
  } else if (d.kind == "module") {
    out.report = check_module(read_module<K>(d, spec));
  } else if (d.kind == "comodule") {
    out.report = check_comodule(read_comodule<K>(d, spec));
  } else if (d.kind == "antipode") {
    const auto a = read_antipode<K>(d, spec);
    require_bimonoid(a.bimonoid, braid);
    out.report = check_antipode(a.bimonoid, a.s);
  } else {
    out.report = check_quantum_category(read_quantum<K>(d, spec));
  }
  out.ok = out.report.passed();
  out.report.verdicts["passed"] = out.ok;
  return out;
}

template <class K>
Outcome run_fusion(const Options& o, const StructureDocument& d, const FieldSpec& spec) {
  const auto h = read_bimonoid<K>(d, spec);
  const auto braid = read_braiding(d);
  validate_braiding(braid, spec, o.allow_char2_super);
  const auto side = parse_fusion_side(o.side);
  const auto f = fusion_operator(h, side, braid).mat;
  Outcome out;
  out.ok = is_invertible(f);
  out.report.subject = "fusion";
  out.report.values["side"] = to_string(side);
  out.report.values["rank"] = std::to_string(rank(f));
  out.report.verdicts["invertible"] = out.ok;
  if (o.emit_matrix) {
    out.report.certificates["fusion"] = render_matrix(f, spec);
    if (out.ok) out.report.certificates["fusion_inverse"] = render_matrix(mat_inverse(f), spec);
  }
  return out;
}

template <class K>
Outcome run_hopf(const Options& o, const StructureDocument& d, const FieldSpec& spec) {
  const auto h = read_bimonoid<K>(d, spec);
  const auto braid = read_braiding(d);
  validate_braiding(braid, spec, o.allow_char2_super);
  Outcome out;
  out.report.subject = "hopf";
  out.ok = is_right_hopf(h, braid);
  out.report.verdicts["is_right_hopf"] = out.ok;
  out.report.values["fusion_rank"] = std::to_string(rank(fusion_operator(h, FusionSide::paper46, braid).mat));
  return out;
}

template <class K>
Outcome run_antipode(const Options& o, const StructureDocument& d, const FieldSpec& spec) {
  const auto h = read_bimonoid<K>(d, spec);
  const auto braid = read_braiding(d);
  validate_braiding(braid, spec, o.allow_char2_super);
  Outcome out;
  out.report.subject = "antipode";
  try {
    const auto cert = extract_antipode(h, braid);
    out.report.absorb(check_antipode(h, cert.s), "");
    out.report.certificates["antipode"] = render_matrix(cert.s.mat, spec);
    out.ok = out.report.passed();
    if (!o.output.empty()) {
      write_text_file(o.output, serialize_document(write_antipode(h, cert.s.mat, d.name + "_antipode", spec)));
    }
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::no_antipode) throw;
    out.report.values["reason"] = e.what();
    out.ok = false;
  }
  out.report.verdicts["antipode_exists"] = out.ok;
  return out;
}

template <class K>
Outcome run_lift_hom(const std::vector<StructureDocument>& docs, const FieldSpec& spec) {
  const auto h = read_bimonoid<K>(docs[0], spec);
  const auto a = read_module<K>(docs[1], spec);
  const auto b = read_module<K>(docs[2], spec);
  for (const auto* m : {&a, &b}) {
    require(m->bimonoid.mu() == h.mu() && m->bimonoid.delta() == h.delta() && m->bimonoid.eta() == h.eta() &&
                m->bimonoid.epsilon() == h.epsilon(),
            ErrorKind::invalid_argument, "module is not over the given bimonoid");
  }
  Outcome out;
  out.report.subject = "lifted_hom";
  try {
    const auto l = lift_internal_hom(a, b);
    out.report.absorb(check_ev_morphism(l, a, b), "");
    out.report.values["kernel_dim"] = std::to_string(l.kernel_dim);
    out.report.values["hom_dim"] = std::to_string(l.carrier.dim);
    out.report.certificates["rho"] = render_matrix(l.rho.mat, spec);
    out.ok = out.report.passed();
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::not_hopf) throw;
    out.report.values["reason"] = e.what();
    out.ok = false;
  }
  out.report.verdicts["lifted"] = out.ok;
  return out;
}

template <class K>
Outcome run_compose(const std::vector<StructureDocument>& docs, const FieldSpec& spec) {
  const auto m = read_comodule<K>(docs[0], spec);
  const auto n = read_comodule<K>(docs[1], spec);
  require_comodule(m, "first argument");
  require_comodule(n, "second argument");
  const auto comp = compose_comodules(m, n);
  Outcome out;
  out.report.subject = "composite";
  out.report.absorb(check_comodule(comp.comodule), "composite.");
  out.report.values["dim"] = std::to_string(comp.comodule.dim());
  out.report.certificates["coaction"] = render_matrix(comp.comodule.coaction, spec);
  out.report.certificates["embedding"] = render_matrix(comp.embedding.basis, spec);
  out.ok = out.report.passed();
  return out;
}

template <class K>
Outcome run_monoidale(const Options& o, const StructureDocument& d, const FieldSpec& spec) {
  const auto c = read_comonoid<K>(d, spec);
  const auto braid = o.braiding ? parse_braiding(*o.braiding) : read_braiding(d);
  validate_braiding(braid, spec, o.allow_char2_super);
  const auto m = enveloping_monoidale(c, braid);
  Outcome out;
  out.report = check_monoidale(m);
  out.report.values["braiding"] = to_string(braid);
  out.report.values["object_dim"] = std::to_string(m.object.dim());
  out.report.values["p_dim"] = std::to_string(m.p.dim());
  out.report.certificates["alpha"] = render_matrix(m.alpha, spec);
  out.report.certificates["lambda"] = render_matrix(m.lambda, spec);
  out.report.certificates["rho"] = render_matrix(m.rho, spec);
  out.ok = out.report.passed();
  out.report.verdicts["passed"] = out.ok;
  return out;
}

template <class K>
Outcome run_quantum(const Options& o, const StructureDocument& d, const FieldSpec& spec) {
  const auto q = read_quantum<K>(d, spec);
  validate_braiding(q.monoidale.braid, spec, o.allow_char2_super);
  Outcome out;
  if (o.command == "quantum check") {
    out.report = check_quantum_category(q);
    out.ok = out.report.passed();
    out.report.verdicts["is_quantum_category"] = out.ok;
    return out;
  }
  const auto v = is_quantum_groupoid(q);
  out.report = v.diagnostics;
  out.ok = v.is_quantum_groupoid;
  if (v.is_quantum_category) out.report.certificates["hopf"] = render_matrix(v.hopf_matrix, spec);
  return out;
}

template <class K>
Outcome dispatch(const Options& o, const std::vector<StructureDocument>& docs, const FieldSpec& spec) {
  const auto& c = o.command;
  if (c == "check") return run_check<K>(o, docs[0], spec);
  if (c == "fusion") return run_fusion<K>(o, docs[0], spec);
  if (c == "hopf") return run_hopf<K>(o, docs[0], spec);
  if (c == "antipode") return run_antipode<K>(o, docs[0], spec);
  if (c == "lift-hom") return run_lift_hom<K>(docs, spec);
  if (c == "compose") return run_compose<K>(docs, spec);
  if (c == "monoidale") return run_monoidale<K>(o, docs[0], spec);
  return run_quantum<K>(o, docs[0], spec);
}

}  // namespace cli

/// Runs one command line (without the program name). Reports go to out,
/// diagnostics to err. Returns 0 for pass/true, 1 for a well-formed negative
/// verdict and 2 for invalid input or internal errors.
inline int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
                       const std::optional<std::string>& env_field = std::nullopt) {
  cli::Options o;
  CLI::App app{"Exact verdicts for Hopf structures given by structure constants", "hopfcat"};
  app.require_subcommand(1);
  app.add_option("--report", o.report, "report format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--field", o.field, "field override: rational or prime:<p>");
  app.add_flag("--allow-char2-super", o.allow_char2_super, "accept the super braiding in characteristic 2");

  auto add = [&](CLI::App& parent, const std::string& name, const std::string& help,
                 std::vector<std::string> positional) {
    auto* sub = parent.add_subcommand(name, help);
    for (const auto& p : positional) sub->add_option(p, o.files, p)->required()->expected(1);
    return sub;
  };
  add(app, "check", "check the axioms of a structure document", {"file"});
  auto* fusion = add(app, "fusion", "fusion operator of a bimonoid", {"file"});
  fusion->add_option("--side", o.side, "galois or paper46")->check(CLI::IsMember({"galois", "paper46"}));
  fusion->add_flag("--emit-matrix", o.emit_matrix, "include the operator (and inverse) in the report");
  add(app, "hopf", "right Hopf verdict of a bimonoid", {"file"});
  auto* antipode = add(app, "antipode", "extract the antipode of a bimonoid", {"file"});
  antipode->add_option("-o,--output", o.output, "write the antipode certificate here");
  auto* lift = app.add_subcommand("lift-hom", "lift the internal hom of two modules");
  lift->add_option("files", o.files, "bimonoid moduleA moduleB")->required()->expected(3);
  auto* compose = app.add_subcommand("compose", "compose two comodules");
  compose->add_option("files", o.files, "comodM comodN")->required()->expected(2);
  auto* monoidale = add(app, "monoidale", "check the enveloping monoidale of a comonoid", {"file"});
  monoidale->add_option("--braiding", o.braiding, "symmetric or super")
      ->check(CLI::IsMember({"symmetric", "super"}));
  auto* quantum = app.add_subcommand("quantum", "quantum categories");
  quantum->require_subcommand(1);
  add(*quantum, "check", "check a monoidal comonad", {"file"});
  add(*quantum, "groupoid", "quantum groupoid verdict", {"file"});

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalid;
  }
  for (auto* sub : app.get_subcommands()) {
    o.command = sub->get_name();
    for (auto* inner : sub->get_subcommands()) o.command += " " + inner->get_name();
  }

  try {
    std::vector<StructureDocument> docs;
    for (const auto& f : o.files) docs.push_back(load_document(f));
    std::vector<const StructureDocument*> ptrs;
    for (const auto& d : docs) ptrs.push_back(&d);
    const auto spec = resolve_field(o.field, ptrs, env_field);
    cli::Outcome res = with_field(spec, [&](auto zero) {
      using K = decltype(zero);
      return cli::dispatch<K>(o, docs, spec);
    });
    std::string input;
    for (std::size_t i = 0; i < docs.size(); ++i) {
      input += (i ? " " : "") + cli::input_name(docs[i], o.files[i]);
    }
    out << (o.report == "json" ? report_json(res.report, o.command, input, spec)
                               : report_text(res.report, o.command, input, spec));
    return res.ok ? kExitPass : kExitFail;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInvalid;
  }
}

}  // namespace hopfcat
