#pragma once

#include <algorithm>
#include <cstddef>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <type_traits>
#include <vector>

#include "json.hpp"

#include "hopfcat/coalg.hpp"
#include "hopfcat/comod.hpp"
#include "hopfcat/error.hpp"
#include "hopfcat/field.hpp"
#include "hopfcat/modules.hpp"
#include "hopfcat/quantum.hpp"
#include "hopfcat/report.hpp"

namespace hopfcat {

inline constexpr const char* kSchemaVersion = "1";

/// Field-agnostic form of a structure file: scalars stay as strings until a
/// field is chosen. Children carry a role ("bimonoid", "source", ...).
struct StructureDocument {
  std::string schema_version = kSchemaVersion;
  std::string kind;
  std::string role;
  std::string name;
  std::optional<std::string> field;
  std::optional<std::string> braiding;
  std::size_t dim = 0;
  std::optional<Parity> parity;
  std::map<std::string, StringMatrix> matrices;
  std::vector<StructureDocument> children;

  [[nodiscard]] const StructureDocument& child(const std::string& r) const {
    for (const auto& c : children) {
      if (c.role == r) return c;
    }
    fail(ErrorKind::parse_error, "document '" + name + "' has no '" + r + "' part");
  }

  friend bool operator==(const StructureDocument&, const StructureDocument&) = default;
};

namespace detail {

using nlohmann::json;

inline const std::vector<std::string>& known_kinds() {
  static const std::vector<std::string> kinds{"comonoid", "monoid",    "bimonoid", "module",
                                              "comodule", "quantum",   "antipode"};
  return kinds;
}

inline std::string json_type(const json& j) { return j.type_name(); }

inline StructureDocument document_from_json(const json& j, const std::string& where, bool top) {
  require(j.is_object(), ErrorKind::parse_error, [&] { return where + " is a " + json_type(j) + ", expected an object"; });
  StructureDocument d;
  auto text = [&](const char* key, bool needed) -> std::optional<std::string> {
    const auto it = j.find(key);
    if (it == j.end()) {
      require(!needed, ErrorKind::parse_error, [&] { return where + " lacks \"" + key + "\""; });
      return std::nullopt;
    }
    require(it->is_string(), ErrorKind::parse_error,
            [&] { return where + "." + key + " is a " + json_type(*it) + ", expected a string"; });
    return it->get<std::string>();
  };
  for (const auto& [key, value] : j.items()) {
    static const std::vector<std::string> allowed{"schema_version", "kind",   "role",     "name",    "field",
                                                  "braiding",       "dim",    "parity",   "matrices", "children"};
    require(std::find(allowed.begin(), allowed.end(), key) != allowed.end(), ErrorKind::parse_error,
            [&] { return where + " has unknown key \"" + key + "\""; });
  }
  if (top) {
    d.schema_version = *text("schema_version", true);
    require(d.schema_version == kSchemaVersion, ErrorKind::parse_error,
            [&] { return "unsupported schema_version \"" + d.schema_version + "\""; });
  } else {
    require(!j.contains("schema_version"), ErrorKind::parse_error,
            [&] { return where + " repeats schema_version"; });
    d.role = *text("role", true);
  }
  d.kind = *text("kind", true);
  require(std::find(known_kinds().begin(), known_kinds().end(), d.kind) != known_kinds().end(),
          ErrorKind::parse_error, [&] { return where + ".kind \"" + d.kind + "\" is not a known kind"; });
  d.name = text("name", false).value_or("");
  d.field = text("field", false);
  d.braiding = text("braiding", false);
  const auto dim = j.find("dim");
  require(dim != j.end() && dim->is_number_unsigned(), ErrorKind::parse_error,
          [&] { return where + ".dim must be a non-negative integer"; });
  d.dim = dim->get<std::size_t>();
  if (const auto p = j.find("parity"); p != j.end()) {
    require(p->is_array(), ErrorKind::parse_error, [&] { return where + ".parity must be an array"; });
    Parity bits;
    for (const auto& b : *p) {
      require(b.is_number_unsigned() && b.get<int>() <= 1, ErrorKind::parse_error,
              [&] { return where + ".parity entries must be 0 or 1, found " + b.dump(); });
      bits.push_back(b.get<int>());
    }
    require(bits.size() == d.dim, ErrorKind::shape_mismatch, [&] {
      return where + ".parity has " + std::to_string(bits.size()) + " entries for dim " + std::to_string(d.dim);
    });
    d.parity = std::move(bits);
  }
  if (const auto ms = j.find("matrices"); ms != j.end()) {
    require(ms->is_object(), ErrorKind::parse_error, [&] { return where + ".matrices must be an object"; });
    for (const auto& [name, rows] : ms->items()) {
      const std::string at = where + ".matrices." + name;
      require(rows.is_array(), ErrorKind::parse_error, [&] { return at + " must be an array of rows"; });
      StringMatrix m;
      for (std::size_t r = 0; r < rows.size(); ++r) {
        const auto& row = rows[r];
        require(row.is_array(), ErrorKind::parse_error, [&] { return at + "[" + std::to_string(r) + "] is not a row"; });
        std::vector<std::string> out;
        for (std::size_t c = 0; c < row.size(); ++c) {
          require(row[c].is_string(), ErrorKind::parse_error, [&] {
            return at + "[" + std::to_string(r) + "][" + std::to_string(c) + "] is " + row[c].dump() +
                   ", expected a scalar string";
          });
          out.push_back(row[c].get<std::string>());
        }
        require(m.empty() || out.size() == m.front().size(), ErrorKind::shape_mismatch,
                [&] { return "matrix '" + name + "' is ragged at row " + std::to_string(r); });
        m.push_back(std::move(out));
      }
      d.matrices.emplace(name, std::move(m));
    }
  }
  if (const auto cs = j.find("children"); cs != j.end()) {
    require(cs->is_array(), ErrorKind::parse_error, [&] { return where + ".children must be an array"; });
    for (std::size_t i = 0; i < cs->size(); ++i) {
      d.children.push_back(document_from_json((*cs)[i], where + ".children[" + std::to_string(i) + "]", false));
    }
  }
  return d;
}

/// Indented JSON with arrays of scalars (matrix rows, parities) on one line.
inline void pretty(std::ostringstream& out, const json& j, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  const std::string inner(static_cast<std::size_t>(indent + 2), ' ');
  auto flat = [](const json& a) {
    return std::all_of(a.begin(), a.end(), [](const json& x) { return !x.is_structured(); });
  };
  if (j.is_object() && !j.empty()) {
    out << "{\n";
    std::size_t i = 0;
    for (const auto& [key, value] : j.items()) {
      out << inner << json(key).dump() << ": ";
      pretty(out, value, indent + 2);
      out << (++i < j.size() ? ",\n" : "\n");
    }
    out << pad << "}";
  } else if (j.is_array() && !j.empty() && !flat(j)) {
    out << "[\n";
    for (std::size_t i = 0; i < j.size(); ++i) {
      out << inner;
      pretty(out, j[i], indent + 2);
      out << (i + 1 < j.size() ? ",\n" : "\n");
    }
    out << pad << "]";
  } else if (j.is_array() && !j.empty()) {
    out << "[";
    for (std::size_t i = 0; i < j.size(); ++i) out << (i ? ", " : "") << j[i].dump();
    out << "]";
  } else {
    out << j.dump();
  }
}

inline std::string pretty(const json& j) {
  std::ostringstream out;
  pretty(out, j, 0);
  out << "\n";
  return out.str();
}

inline json document_to_json(const StructureDocument& d, bool top) {
  json j;
  if (top) {
    j["schema_version"] = d.schema_version;
  } else {
    j["role"] = d.role;
  }
  j["kind"] = d.kind;
  if (!d.name.empty()) j["name"] = d.name;
  if (d.field) j["field"] = *d.field;
  if (d.braiding) j["braiding"] = *d.braiding;
  j["dim"] = d.dim;
  if (d.parity) j["parity"] = *d.parity;
  if (!d.matrices.empty()) {
    json ms = json::object();
    for (const auto& [name, m] : d.matrices) ms[name] = m;
    j["matrices"] = ms;
  }
  if (!d.children.empty()) {
    json cs = json::array();
    for (const auto& c : d.children) cs.push_back(document_to_json(c, false));
    j["children"] = cs;
  }
  return j;
}

}  // namespace detail

inline StructureDocument parse_document(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    fail(ErrorKind::parse_error, std::string("invalid JSON: ") + e.what());
  }
  return detail::document_from_json(j, "document", true);
}

inline std::string serialize_document(const StructureDocument& d) {
  return detail::pretty(detail::document_to_json(d, true));
}

inline std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  require(in.good(), ErrorKind::invalid_argument, "cannot read '" + path + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

inline StructureDocument load_document(const std::string& path) { return parse_document(read_text_file(path)); }

inline void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  require(out.good(), ErrorKind::invalid_argument, "cannot write '" + path + "'");
  out << text;
}

/// Explicit choice > the documents' own field > environment default > rational.
/// Documents that state a field must agree unless overridden.
inline FieldSpec resolve_field(const std::optional<std::string>& override_field,
                               const std::vector<const StructureDocument*>& docs,
                               const std::optional<std::string>& env_default) {
  if (override_field) return FieldSpec::parse(*override_field);
  std::optional<FieldSpec> found;
  for (const auto* d : docs) {
    if (!d->field) continue;
    const auto f = FieldSpec::parse(*d->field);
    require(!found || *found == f, ErrorKind::field_mismatch,
            "documents disagree on the field: " + found.value_or(f).str() + " and " + f.str());
    found = f;
  }
  if (found) return *found;
  if (env_default && !env_default->empty()) return FieldSpec::parse(*env_default);
  return FieldSpec::rational();
}

/// Integers and "a/b" fractions in either field; residues reduce mod p.
template <class K>
K parse_scalar(const std::string& text, const FieldSpec& spec) {
  if constexpr (std::is_same_v<K, ModP>) {
    const auto slash = text.find('/');
    if (slash != std::string::npos) {
      const auto num = ModP::parse(std::string_view(text).substr(0, slash), spec);
      const auto den = ModP::parse(std::string_view(text).substr(slash + 1), spec);
      require(!den.is_zero(), ErrorKind::parse_error, "denominator of '" + text + "' vanishes in " + spec.str());
      return num / den;
    }
  }
  return K::parse(text, spec);
}

/// Canonical text of a scalar: lowest terms, or a residue in [0, p).
template <class K>
std::string format_scalar(const K& x, const FieldSpec& spec) {
  if constexpr (std::is_same_v<K, ModP>) {
    return (ModP::from_int(0, spec) + x).str();
  } else {
    return x.str();
  }
}

template <class K>
StringMatrix render_matrix(const Matrix<K>& m, const FieldSpec& spec) {
  StringMatrix out(m.rows(), std::vector<std::string>(m.cols(), format_scalar(K(0), spec)));
  for (std::size_t j = 0; j < m.cols(); ++j) {
    for (const auto& [i, v] : m.column(j)) out[i][j] = format_scalar(v, spec);
  }
  return out;
}

template <class K>
Matrix<K> read_matrix(const StructureDocument& d, const std::string& name, std::size_t rows, std::size_t cols,
                      const FieldSpec& spec) {
  const auto it = d.matrices.find(name);
  require(it != d.matrices.end(), ErrorKind::parse_error,
          [&] { return d.kind + " document lacks matrix '" + name + "'"; });
  const auto& m = it->second;
  const std::size_t have_cols = m.empty() ? cols : m.front().size();
  require(m.size() == rows && have_cols == cols, ErrorKind::shape_mismatch, [&] {
    return "matrix '" + name + "' is " + std::to_string(m.size()) + "x" +
           std::to_string(m.empty() ? 0 : m.front().size()) + ", expected " + std::to_string(rows) + "x" +
           std::to_string(cols);
  });
  Matrix<K> out(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      K v;
      try {
        v = parse_scalar<K>(m[i][j], spec);
      } catch (const Error& e) {
        fail(ErrorKind::parse_error, "matrix '" + name + "' entry (" + std::to_string(i) + "," +
                                         std::to_string(j) + "): " + e.what());
      }
      if (!v.is_zero()) out.set(i, j, v);
    }
  }
  return out;
}

inline void require_kind(const StructureDocument& d, const std::string& kind) {
  require(d.kind == kind, ErrorKind::parse_error,
          [&] { return "expected a " + kind + " document, found kind \"" + d.kind + "\""; });
}

inline VectObject read_carrier(const StructureDocument& d) {
  return d.parity ? VectObject::graded(*d.parity) : VectObject::even(d.dim);
}

inline BraidingKind read_braiding(const StructureDocument& d) {
  return d.braiding ? parse_braiding(*d.braiding) : BraidingKind::symmetric;
}

template <class K>
Comonoid<K> read_comonoid(const StructureDocument& d, const FieldSpec& spec) {
  require_kind(d, "comonoid");
  const std::size_t n = d.dim;
  return {read_carrier(d), read_matrix<K>(d, "delta", n * n, n, spec), read_matrix<K>(d, "epsilon", 1, n, spec)};
}

template <class K>
Monoid<K> read_monoid(const StructureDocument& d, const FieldSpec& spec) {
  require_kind(d, "monoid");
  const std::size_t n = d.dim;
  return {read_carrier(d), read_matrix<K>(d, "mu", n, n * n, spec), read_matrix<K>(d, "eta", n, 1, spec)};
}

template <class K>
Bimonoid<K> read_bimonoid(const StructureDocument& d, const FieldSpec& spec) {
  require_kind(d, "bimonoid");
  const std::size_t n = d.dim;
  const auto c = read_carrier(d);
  return {Comonoid<K>(c, read_matrix<K>(d, "delta", n * n, n, spec), read_matrix<K>(d, "epsilon", 1, n, spec)),
          Monoid<K>(c, read_matrix<K>(d, "mu", n, n * n, spec), read_matrix<K>(d, "eta", n, 1, spec))};
}

template <class K>
ModuleOverBimonoid<K> read_module(const StructureDocument& d, const FieldSpec& spec) {
  require_kind(d, "module");
  auto h = read_bimonoid<K>(d.child("bimonoid"), spec);
  const auto action = read_matrix<K>(d, "action", d.dim, h.dim() * d.dim, spec);
  return {std::move(h), read_carrier(d), action};
}

template <class K>
Comodule<K> read_comodule(const StructureDocument& d, const FieldSpec& spec) {
  require_kind(d, "comodule");
  Comodule<K> m;
  m.src = read_comonoid<K>(d.child("source"), spec);
  m.tgt = read_comonoid<K>(d.child("target"), spec);
  m.carrier = read_carrier(d);
  m.coaction = read_matrix<K>(d, "coaction", m.src.dim() * d.dim * m.tgt.dim(), d.dim, spec);
  return m;
}

template <class K>
struct AntipodeDocument {
  Bimonoid<K> bimonoid;
  MorphismV<K> s;
};

template <class K>
AntipodeDocument<K> read_antipode(const StructureDocument& d, const FieldSpec& spec) {
  require_kind(d, "antipode");
  auto h = read_bimonoid<K>(d.child("bimonoid"), spec);
  auto s = read_matrix<K>(d, "s", h.dim(), h.dim(), spec);
  const auto c = h.carrier();
  return {std::move(h), MorphismV<K>(c, c, std::move(s))};
}

/// The monoidale is always the enveloping one of the base; the comonad is
/// given by g and its four 2-cells in the bases of the composites.
template <class K>
QuantumCategoryData<K> read_quantum(const StructureDocument& d, const FieldSpec& spec) {
  require_kind(d, "quantum");
  const auto braid = read_braiding(d);
  validate_braiding(braid, spec, true);
  QuantumCategoryData<K> q;
  q.base = read_comonoid<K>(d.child("base"), spec);
  q.monoidale = enveloping_monoidale(q.base, braid);
  const auto& e = q.monoidale.object;
  q.g = {e, e, read_carrier(d), read_matrix<K>(d, "coaction", e.dim() * d.dim * e.dim(), d.dim, spec)};
  require_comodule(q.g, "g");
  QuantumShapes<K> s(q);
  const auto g = s.g("g");
  q.comult = read_matrix<K>(d, "comult", s.gg("a", "b").dim(), g.dim(), spec);
  q.counit = read_matrix<K>(d, "counit", e.dim(), g.dim(), spec);
  q.phi = read_matrix<K>(d, "phi", s.phi_cod("p", "h").dim(), s.phi_dom("a", "b", "p").dim(), spec);
  q.phi0 = read_matrix<K>(d, "phi0", s.phi0_cod("j", "h").dim(), q.monoidale.j.dim(), spec);
  return q;
}

namespace detail {

inline StructureDocument make_document(const std::string& kind, const std::string& name, const VectObject& c,
                                       const std::optional<FieldSpec>& spec) {
  StructureDocument d;
  d.kind = kind;
  d.name = name;
  if (spec) d.field = spec->str();
  d.dim = c.dim;
  if (!c.trivially_graded()) d.parity = c.parity;
  return d;
}

inline StructureDocument as_child(StructureDocument d, const std::string& role) {
  d.role = role;
  d.field.reset();
  return d;
}

}  // namespace detail

template <class K>
StructureDocument write_comonoid(const Comonoid<K>& c, const std::string& name, const FieldSpec& spec) {
  auto d = detail::make_document("comonoid", name, c.carrier, spec);
  d.matrices["delta"] = render_matrix(c.delta.mat, spec);
  d.matrices["epsilon"] = render_matrix(c.epsilon.mat, spec);
  return d;
}

template <class K>
StructureDocument write_bimonoid(const Bimonoid<K>& h, const std::string& name, const FieldSpec& spec) {
  auto d = detail::make_document("bimonoid", name, h.carrier(), spec);
  d.matrices["delta"] = render_matrix(h.delta(), spec);
  d.matrices["epsilon"] = render_matrix(h.epsilon(), spec);
  d.matrices["mu"] = render_matrix(h.mu(), spec);
  d.matrices["eta"] = render_matrix(h.eta(), spec);
  return d;
}

template <class K>
StructureDocument write_module(const ModuleOverBimonoid<K>& m, const std::string& name, const std::string& over,
                               const FieldSpec& spec) {
  auto d = detail::make_document("module", name, m.carrier, spec);
  d.matrices["action"] = render_matrix(m.action.mat, spec);
  d.children.push_back(detail::as_child(write_bimonoid(m.bimonoid, over, spec), "bimonoid"));
  return d;
}

template <class K>
StructureDocument write_comodule(const Comodule<K>& m, const std::string& name, const FieldSpec& spec) {
  auto d = detail::make_document("comodule", name, m.carrier, spec);
  d.matrices["coaction"] = render_matrix(m.coaction, spec);
  d.children.push_back(detail::as_child(write_comonoid(m.src, "", spec), "source"));
  d.children.push_back(detail::as_child(write_comonoid(m.tgt, "", spec), "target"));
  return d;
}

template <class K>
StructureDocument write_antipode(const Bimonoid<K>& h, const Matrix<K>& s, const std::string& name,
                                 const FieldSpec& spec) {
  auto d = detail::make_document("antipode", name, h.carrier(), spec);
  d.matrices["s"] = render_matrix(s, spec);
  d.children.push_back(detail::as_child(write_bimonoid(h, "", spec), "bimonoid"));
  return d;
}

template <class K>
StructureDocument write_quantum(const QuantumCategoryData<K>& q, const std::string& name, const FieldSpec& spec) {
  auto d = detail::make_document("quantum", name, q.g.carrier, spec);
  d.braiding = to_string(q.monoidale.braid);
  d.matrices["coaction"] = render_matrix(q.g.coaction, spec);
  d.matrices["comult"] = render_matrix(q.comult, spec);
  d.matrices["counit"] = render_matrix(q.counit, spec);
  d.matrices["phi"] = render_matrix(q.phi, spec);
  d.matrices["phi0"] = render_matrix(q.phi0, spec);
  d.children.push_back(detail::as_child(write_comonoid(q.base, "", spec), "base"));
  return d;
}

/// A report as sorted JSON; scalars are already strings.
inline std::string report_json(const Report& r, const std::string& command, const std::string& input,
                               const FieldSpec& spec) {
  nlohmann::json j;
  j["command"] = command;
  j["input"] = input;
  j["field"] = spec.str();
  j["subject"] = r.subject;
  j["passed"] = r.passed();
  nlohmann::json axioms = nlohmann::json::array();
  for (const auto& a : r.axioms) {
    nlohmann::json x{{"name", a.name}, {"passed", a.passed}};
    if (!a.detail.empty()) x["detail"] = a.detail;
    axioms.push_back(x);
  }
  j["axioms"] = axioms;
  j["verdicts"] = r.verdicts;
  j["values"] = r.values;
  j["certificates"] = r.certificates;
  return detail::pretty(j);
}

inline std::string report_text(const Report& r, const std::string& command, const std::string& input,
                               const FieldSpec& spec) {
  std::ostringstream out;
  out << command << " " << input << " [" << spec.str() << "]\n";
  for (const auto& a : r.axioms) {
    out << "  " << (a.passed ? "pass" : "FAIL") << "  " << a.name;
    if (!a.detail.empty()) out << "  (" << a.detail << ")";
    out << "\n";
  }
  for (const auto& [k, v] : r.verdicts) out << "  " << k << " = " << (v ? "true" : "false") << "\n";
  for (const auto& [k, v] : r.values) out << "  " << k << " = " << v << "\n";
  for (const auto& [k, m] : r.certificates) {
    out << "  " << k << ":\n";
    for (const auto& row : m) {
      out << "   ";
      for (const auto& x : row) out << " " << x;
      out << "\n";
    }
  }
  return out.str();
}

}  // namespace hopfcat
