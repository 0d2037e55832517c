#include "d2lab/io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace d2lab {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

[[noreturn]] void schema(const std::string& where, const std::string& what) {
  throw SchemaError(where + ": " + what);
}

const json& member(const json& obj, const char* key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) schema(where, std::string("missing field '") + key + "'");
  return *it;
}

std::size_t count(const json& v, const std::string& where) {
  if (!v.is_number_integer() || v.get<long long>() < 0) schema(where, "expected a non-negative integer");
  return v.get<std::size_t>();
}

Field parse_field(const json& doc) {
  auto it = doc.find("field");
  if (it == doc.end()) return Field::rational();
  const json& f = *it;
  if (!f.is_object()) schema("field", "expected an object");
  const json& kind = member(f, "kind", "field");
  if (kind == "rational") return Field::rational();
  if (kind != "prime") schema("field.kind", "expected \"rational\" or \"prime\"");
  const std::size_t p = count(member(f, "characteristic", "field"), "field.characteristic");
  try {
    return Field::prime(static_cast<std::uint32_t>(std::min<std::size_t>(p, 1u << 31)));
  } catch (const std::invalid_argument& ex) {
    schema("field.characteristic", ex.what());
  }
}

Scalar parse_scalar(const json& v, Field f, const std::string& where) {
  try {
    if (v.is_string()) return Scalar::parse(v.get<std::string>(), f);
    if (v.is_number_integer()) return Scalar::parse(std::to_string(v.get<long long>()), f);
  } catch (const std::invalid_argument& ex) {
    schema(where, ex.what());
  }
  schema(where, "expected a scalar string such as \"3/2\"");
}

Vector parse_vector(const json& v, std::size_t n, Field f, const std::string& where) {
  if (!v.is_array()) schema(where, "expected an array");
  if (v.size() != n) schema(where, "expected " + std::to_string(n) + " entries, got " + std::to_string(v.size()));
  Vector out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(parse_scalar(v[i], f, where + "[" + std::to_string(i) + "]"));
  return out;
}

Algebra parse_algebra(const json& a, Field f) {
  if (!a.is_object()) schema("algebra", "expected an object");
  const std::size_t n = count(member(a, "dim", "algebra"), "algebra.dim");
  if (n == 0) schema("algebra.dim", "must be positive");
  const json& c = member(a, "structure_constants", "algebra");
  const std::string cw = "algebra.structure_constants";
  if (!c.is_array() || c.size() != n) schema(cw, "expected an array of " + std::to_string(n) + " matrices");
  std::vector<Scalar> constants;
  constants.reserve(n * n * n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::string wi = cw + "[" + std::to_string(i) + "]";
    if (!c[i].is_array() || c[i].size() != n) schema(wi, "expected an array of " + std::to_string(n) + " vectors");
    for (std::size_t j = 0; j < n; ++j) {
      Vector row = parse_vector(c[i][j], n, f, wi + "[" + std::to_string(j) + "]");
      constants.insert(constants.end(), row.begin(), row.end());
    }
  }
  Vector unit = parse_vector(member(a, "unit", "algebra"), n, f, "algebra.unit");
  std::vector<std::string> labels;
  if (auto it = a.find("labels"); it != a.end()) {
    if (!it->is_array() || it->size() != n) schema("algebra.labels", "expected " + std::to_string(n) + " strings");
    for (const auto& l : *it) {
      if (!l.is_string()) schema("algebra.labels", "expected strings");
      labels.push_back(l.get<std::string>());
    }
  }
  return Algebra(f, n, std::move(constants), std::move(unit), std::move(labels));
}

std::vector<Permutation> parse_generators(const json& g, std::size_t degree, const std::string& where) {
  if (!g.is_array()) schema(where, "expected an array of cycle strings");
  std::vector<Permutation> out;
  for (std::size_t i = 0; i < g.size(); ++i) {
    const std::string wi = where + "[" + std::to_string(i) + "]";
    if (!g[i].is_string()) schema(wi, "expected a cycle string such as \"(1 2 3)\"");
    try {
      out.push_back(parse_cycles(g[i].get<std::string>(), degree));
    } catch (const std::invalid_argument& ex) {
      schema(wi, ex.what());
    }
  }
  return out;
}

std::size_t largest_point(const json& gens) {
  std::size_t best = 1;
  if (!gens.is_array()) return best;
  for (const auto& g : gens) {
    if (!g.is_string()) continue;
    std::size_t cur = 0;
    bool in_number = false;
    for (char ch : g.get<std::string>()) {
      if (std::isdigit(static_cast<unsigned char>(ch))) {
        cur = cur * 10 + static_cast<std::size_t>(ch - '0');
        in_number = true;
      } else {
        if (in_number) best = std::max(best, cur);
        cur = 0;
        in_number = false;
      }
    }
    if (in_number) best = std::max(best, cur);
  }
  return best;
}

}  // namespace

ExtensionDocument parse_extension(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& ex) {
    throw SchemaError(std::string("invalid JSON: ") + ex.what());
  }
  if (!doc.is_object()) schema("document", "expected a JSON object");
  ExtensionDocument out;
  if (auto it = doc.find("name"); it != doc.end()) {
    if (!it->is_string()) schema("name", "expected a string");
    out.name = it->get<std::string>();
  }
  const Field f = parse_field(doc);

  if (auto it = doc.find("group_algebra"); it != doc.end()) {
    if (doc.contains("algebra")) schema("document", "give either 'algebra' or 'group_algebra', not both");
    const json& g = *it;
    if (!g.is_object()) schema("group_algebra", "expected an object");
    const json& gg = member(g, "G", "group_algebra");
    const json& hg = member(g, "H", "group_algebra");
    std::size_t degree = 0;
    if (auto d = g.find("degree"); d != g.end()) degree = count(*d, "group_algebra.degree");
    else degree = std::max(largest_point(gg), largest_point(hg));
    if (degree == 0) schema("group_algebra.degree", "must be positive");
    auto gens = parse_generators(gg, degree, "group_algebra.G");
    auto hgens = parse_generators(hg, degree, "group_algebra.H");
    GroupAlgebraPair pair = group_algebra_pair(f, gens, hgens, degree);
    out.ext = build_extension(pair.algebra, pair.subgroup_basis);
    return out;
  }

  Algebra a = parse_algebra(member(doc, "algebra", "document"), f);
  const json& sb = member(doc, "subalgebra_basis", "document");
  if (!sb.is_array() || sb.empty()) schema("subalgebra_basis", "expected a non-empty array of vectors");
  std::vector<Vector> basis;
  for (std::size_t i = 0; i < sb.size(); ++i)
    basis.push_back(parse_vector(sb[i], a.dim(), f, "subalgebra_basis[" + std::to_string(i) + "]"));
  out.ext = build_extension(a, basis);
  return out;
}

ExtensionDocument load_extension(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw SchemaError("cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  ExtensionDocument doc = parse_extension(buf.str());
  if (doc.name.empty()) doc.name = path.stem().string();
  return doc;
}

namespace {

std::string field_name(Field f) {
  return f.kind() == Field::Kind::rational ? "Q" : "GF(" + std::to_string(f.characteristic()) + ")";
}

std::string one_line(std::string s) {
  std::string out;
  for (char c : s) {
    if (c == '\t') out += "\\t";
    else if (c == '\n') out += "\\n";
    else out += c;
  }
  return out;
}

std::size_t count_status(const Report& r, Status s, CheckKind k) {
  return static_cast<std::size_t>(std::count_if(r.records().begin(), r.records().end(), [&](const CheckRecord& c) {
    return c.status == s && c.kind == k;
  }));
}

}  // namespace

std::string report_to_json(const ReportHeader& h, const Report& report) {
  ordered_json j;
  j["schema_version"] = kReportSchemaVersion;
  j["command"] = h.command;
  j["input"] = h.input;
  j["field"] = field_name(h.field);
  j["dims"] = {{"A", h.dim_a}, {"B", h.dim_b}, {"R", h.dim_r}};
  j["consistent"] = report.consistent();
  j["summary"] = {{"checks", report.records().size()},
                  {"property_failures", count_status(report, Status::fail, CheckKind::property)},
                  {"negative_verdicts", count_status(report, Status::fail, CheckKind::verdict)},
                  {"skipped", static_cast<std::size_t>(std::count_if(
                                  report.records().begin(), report.records().end(),
                                  [](const CheckRecord& c) { return c.status == Status::skipped; }))}};
  ordered_json checks = ordered_json::array();
  for (const CheckRecord& c : report.records()) {
    ordered_json r;
    r["check_id"] = c.id;
    r["kind"] = std::string(to_string(c.kind));
    r["status"] = std::string(to_string(c.status));
    if (!c.witness.empty()) r["witness"] = c.witness;
    if (!c.note.empty()) r["note"] = c.note;
    ordered_json dims = ordered_json::object();
    for (const auto& [k, v] : c.dims) dims[k] = v;
    r["dimensions"] = dims;
    checks.push_back(std::move(r));
  }
  j["checks"] = std::move(checks);
  return j.dump(2) + "\n";
}

std::string report_to_text(const ReportHeader& h, const Report& report) {
  std::ostringstream out;
  out << "# d2lab report schema " << kReportSchemaVersion << " command " << h.command << " input " << h.input
      << " field " << field_name(h.field) << " dim A=" << h.dim_a << " B=" << h.dim_b << " R=" << h.dim_r << "\n";
  for (const CheckRecord& c : report.records()) {
    std::string dims;
    for (const auto& [k, v] : c.dims) {
      if (!dims.empty()) dims += ",";
      dims += k + "=" + std::to_string(v);
    }
    out << to_string(c.status) << '\t' << to_string(c.kind) << '\t' << c.id << '\t' << dims << '\t'
        << one_line(c.witness) << '\t' << one_line(c.note) << "\n";
  }
  out << "# consistent " << (report.consistent() ? "yes" : "no") << "\n";
  return out.str();
}

}  // namespace d2lab
