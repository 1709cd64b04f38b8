#pragma once

#include <cstdint>

#include "finsem/decide.hpp"

namespace finsem {

inline constexpr std::uint64_t kDefaultProofBudget = 20'000'000;

// Decides intuitionistic derivability of the sequent by terminating
// contraction-free proof search (negation is handled internally as
// implication into falsum).  Deterministic; throws resource_limit_error
// if the node budget runs out.
Verdict prove_ipc(const Sequent& s, std::uint64_t budget = kDefaultProofBudget);

struct DisjunctionPropertyReport {
  bool left_derivable = false;
  bool right_derivable = false;
};

// Requires f to be a derivable disjunction; reports which disjuncts are
// themselves derivable (at least one always is).
DisjunctionPropertyReport check_disjunction_property(const Formula& f,
                                                     std::uint64_t budget = kDefaultProofBudget);

}  // namespace finsem
