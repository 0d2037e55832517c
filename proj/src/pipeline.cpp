#include "d2lab/pipeline.hpp"

#include <functional>
#include <optional>
#include <string>

#include "d2lab/duality.hpp"

namespace d2lab {

Command parse_command(std::string_view name) {
  if (name == "check-d2") return Command::check_d2;
  if (name == "bialgebroid") return Command::bialgebroid;
  if (name == "galois") return Command::galois;
  if (name == "duality") return Command::duality;
  if (name == "endo-tower") return Command::endo_tower;
  if (name == "all") return Command::all;
  throw std::invalid_argument("unknown command '" + std::string(name) + "'");
}

std::string_view to_string(Command c) {
  switch (c) {
    case Command::check_d2: return "check-d2";
    case Command::bialgebroid: return "bialgebroid";
    case Command::galois: return "galois";
    case Command::duality: return "duality";
    case Command::endo_tower: return "endo-tower";
    case Command::all: return "all";
  }
  return "?";
}

std::vector<Side> parse_sides(std::string_view text) {
  if (text == "L" || text == "left") return {Side::left};
  if (text == "R" || text == "right") return {Side::right};
  if (text == "both") return {Side::left, Side::right};
  throw std::invalid_argument("side must be L, R or both, got '" + std::string(text) + "'");
}

Carrier parse_carrier(std::string_view text) {
  if (text == "T") return Carrier::T;
  if (text == "S") return Carrier::S;
  if (text == "Top") return Carrier::Top;
  throw std::invalid_argument("carrier must be T, S or Top, got '" + std::string(text) + "'");
}

std::string_view to_string(Carrier c) {
  switch (c) {
    case Carrier::T: return "T";
    case Carrier::S: return "S";
    case Carrier::Top: return "Top";
  }
  return "?";
}

Limits limits_for(std::size_t max_dim) { return Limits{max_dim, max_dim * max_dim}; }

namespace {

void guarded(Report& rep, const std::string& stage, const std::function<void()>& fn) {
  try {
    fn();
  } catch (const InternalInconsistency& ex) {
    rep.property(stage + ".internal", false, ex.what());
  }
}

bool wants(Command c, Command stage) { return c == Command::all || c == stage; }

}  // namespace

Report run_pipeline(const Extension& e, const PipelineOptions& opt) {
  if (e.dim() > opt.limits.max_algebra_dim)
    throw DimensionGuard("dim A = " + std::to_string(e.dim()) + " exceeds the limit " +
                         std::to_string(opt.limits.max_algebra_dim));
  Report rep;
  const Depth2 d = analyze_depth2(e);
  const bool any_d2 = d.left || d.right;
  rep.info("extension.dims", true).dims = {
      {"A", e.dim()}, {"B", e.sub.dim()}, {"R", e.centralizer.dim()}, {"T", d.T.dim()}, {"S", d.S.dim()}};

  if (wants(opt.command, Command::check_d2)) {
    for (Side side : opt.sides) {
      const auto& cert = d.cert(side);
      const std::string id = "d2." + std::string(to_string(side));
      rep.verdict(id, cert.has_value(), cert ? "" : "not D2").dims = {
          {"quasibase_size", cert ? cert->size() : 0}};
      if (cert) guarded(rep, id, [&] { rep.append(verify_quasibases(e, d.T, d.S, *cert)); });
    }
    guarded(rep, "dual_basis", [&] { rep.append(verify_dual_bases(d)); });
  }

  std::optional<TBialgebroid> tb;
  std::optional<SBialgebroid> sb;
  auto need_t = [&] {
    if (!tb) tb = build_T_bialgebroid(d);
  };
  auto need_s = [&] {
    if (!sb) sb = build_S_bialgebroid(d);
  };

  if (wants(opt.command, Command::bialgebroid)) {
    for (Carrier c : opt.carriers) {
      const std::string name(to_string(c));
      if (!any_d2) {
        rep.skip("bialgebroid." + name, "not depth two on either side");
        continue;
      }
      guarded(rep, name, [&] {
        switch (c) {
          case Carrier::T:
            need_t();
            rep.append(tb->report);
            rep.append(verify_axioms(tb->bg, tb->tensors, "T"));
            rep.append(build_coassoc_witness(d, *tb).report);
            break;
          case Carrier::S:
            need_s();
            rep.append(sb->report);
            rep.append(verify_axioms(sb->bg, sb->tensors, "S"));
            rep.append(verify_S_coassoc_witness(d, *sb));
            break;
          case Carrier::Top: {
            need_t();
            const Bialgebroid top = to_opposite(tb->bg);
            rep.append(verify_axioms(top, build_carrier_tensors(top), "Top"));
            break;
          }
        }
      });
    }
  }

  if (wants(opt.command, Command::galois)) {
    if (any_d2) guarded(rep, "T", need_t);
    for (Side side : opt.sides) {
      const std::string stage = "galois." + std::string(to_string(side));
      guarded(rep, stage, [&] { rep.append(run_characterization(d, tb ? &*tb : nullptr, side).report); });
    }
  }

  if (wants(opt.command, Command::duality)) {
    for (Side side : opt.sides) {
      const std::string stage = "duality." + std::string(to_string(side));
      if (!d.cert(side)) {
        rep.skip(stage, "not " + std::string(to_string(side)) + " depth two");
        continue;
      }
      guarded(rep, stage, [&] {
        need_t();
        need_s();
        rep.append(verify_duality(d, *tb, *sb, side));
      });
    }
  }

  if (wants(opt.command, Command::endo_tower))
    guarded(rep, "endo_tower", [&] { rep.append(endo_tower(d, opt.limits)); });

  return rep;
}

int exit_code(const Report& report) { return report.consistent() ? 0 : 1; }

}  // namespace d2lab
