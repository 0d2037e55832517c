#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include "d2lab/algebra.hpp"
#include "d2lab/report.hpp"

namespace d2lab {

inline constexpr int kReportSchemaVersion = 1;

/// Malformed input document: bad JSON, missing or mistyped fields.
struct SchemaError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct ExtensionDocument {
  std::string name;
  Extension ext;
};

/// Document layout:
///
///   { "name": "...",
///     "field": {"kind": "rational"} | {"kind": "prime", "characteristic": p},
///     "algebra": { "dim": n,
///                  "structure_constants": c,   // c[i][j][k]: coefficient of e_k in e_i e_j
///                  "unit": [...], "labels": [...] },
///     "subalgebra_basis": [[...], ...] }
///
/// or, in place of "algebra" and "subalgebra_basis",
///
///     "group_algebra": {"degree": d, "G": ["(1 2 3)", ...], "H": [...]}
///
/// Scalars are strings such as "3/2" or "-1"; integers are accepted too.
/// Throws SchemaError, InvalidAlgebra, NotClosed, NotUnital or NotProper.
ExtensionDocument parse_extension(std::string_view json);
ExtensionDocument load_extension(const std::filesystem::path& path);

struct ReportHeader {
  std::string command;
  std::string input;
  Field field;
  std::size_t dim_a = 0;
  std::size_t dim_b = 0;
  std::size_t dim_r = 0;
};

/// Pretty-printed JSON, key order fixed, no timings.
std::string report_to_json(const ReportHeader& header, const Report& report);
/// One line per check: status, kind, id, dims, witness, note (tab separated).
std::string report_to_text(const ReportHeader& header, const Report& report);

}  // namespace d2lab
