#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "d2lab/galois.hpp"

namespace d2lab {

enum class Command { check_d2, bialgebroid, galois, duality, endo_tower, all };
enum class Carrier { T, S, Top };

/// "check-d2", "bialgebroid", ...; throws std::invalid_argument.
Command parse_command(std::string_view name);
std::string_view to_string(Command c);
/// "L", "R", "both" (also "left", "right").
std::vector<Side> parse_sides(std::string_view text);
/// "T", "S", "Top".
Carrier parse_carrier(std::string_view text);
std::string_view to_string(Carrier c);

struct PipelineOptions {
  Command command = Command::all;
  std::vector<Side> sides{Side::left, Side::right};
  std::vector<Carrier> carriers{Carrier::T, Carrier::S, Carrier::Top};
  Limits limits;
};

/// Limits for a --max-dim value: algebras up to n, endomorphism algebras up to n^2.
Limits limits_for(std::size_t max_dim);

/// Runs the requested stages in a fixed order.  An InternalInconsistency
/// inside a stage becomes a failed "<stage>.internal" property record.
/// Throws DimensionGuard when dim A or the endomorphism algebra is too large.
Report run_pipeline(const Extension& e, const PipelineOptions& options);

/// 0 when no property failed, 1 otherwise.
int exit_code(const Report& report);

}  // namespace d2lab
