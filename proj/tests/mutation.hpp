#pragma once

#include <random>
#include <string>
#include <vector>

#include "d2lab/galois.hpp"
#include "support.hpp"

namespace mutation {

using namespace d2lab;

enum class Target { delta_T, epsilon_T, delta_S, coaction };

inline const char* name(Target t) {
  switch (t) {
    case Target::delta_T: return "Delta_T";
    case Target::epsilon_T: return "epsilon_T";
    case Target::delta_S: return "Delta_S";
    case Target::coaction: return "delta";
  }
  return "?";
}

struct Outcome {
  Target target;
  std::size_t row = 0;
  std::size_t col = 0;
  std::string change;
  bool detected = false;
  std::vector<std::string> caught_by;
};

inline void perturb(Matrix& m, std::mt19937& rng, Outcome& o) {
  std::uniform_int_distribution<std::size_t> r(0, m.rows() - 1), c(0, m.cols() - 1);
  o.row = r(rng);
  o.col = c(rng);
  const Scalar delta = support::small_nonzero(rng);
  o.change = "+" + delta.str();
  m(o.row, o.col) += delta;
}

/// `count` single-entry mutations with a fixed seed.  Coproducts and counits
/// are judged by the bialgebroid axioms, the coaction by the comodule
/// algebra checks.
inline std::vector<Outcome> run(const Depth2& d, const TBialgebroid& tb, const SBialgebroid& sb,
                                const Coaction& coaction, unsigned seed, int count = 20) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> pick(0, 3);
  std::vector<Outcome> out;
  for (int i = 0; i < count; ++i) {
    Outcome o;
    o.target = static_cast<Target>(pick(rng));
    Report rep;
    switch (o.target) {
      case Target::delta_T: {
        Bialgebroid bg = tb.bg;
        perturb(bg.coproduct, rng, o);
        rep = verify_axioms(bg, tb.tensors, "T");
        break;
      }
      case Target::epsilon_T: {
        Bialgebroid bg = tb.bg;
        perturb(bg.counit, rng, o);
        rep = verify_axioms(bg, tb.tensors, "T");
        break;
      }
      case Target::delta_S: {
        Bialgebroid bg = sb.bg;
        perturb(bg.coproduct, rng, o);
        rep = verify_axioms(bg, sb.tensors, "S");
        break;
      }
      case Target::coaction: {
        Coaction c = coaction;
        perturb(c.map, rng, o);
        rep = verify_comodule_algebra(d, c, tb.tensors);
        break;
      }
    }
    o.caught_by = rep.failures();
    o.detected = !o.caught_by.empty();
    out.push_back(std::move(o));
  }
  return out;
}

}  // namespace mutation
