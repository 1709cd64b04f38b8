#pragma once

#include <optional>
#include <string>
#include <vector>

#include "finsem/matrix.hpp"

namespace finsem {

struct Sequent {
  std::vector<Formula> premises;
  Formula conclusion;

  Fragment fragment() const;
};

// "phi1 ; phi2 ; ... |- psi"; the premise side may be empty.
Sequent parse_sequent(const std::string& text);
std::string print_sequent(const Sequent& s);

struct Verdict {
  bool derivable = false;
  std::string method;  // "matrix-2", "matrix-3", "syntactic-conj", ...
  std::optional<Valuation> witness;
  std::optional<Matrix> witness_matrix;
};

// Matrix-based decision for the fragments with a finite semantics:
// two-valued tables for fragments within {and,or}, the three-element
// algebra for fragments within {and,not}.  Fragments with -> or with
// both | and ~ are rejected (route those to prove_ipc).
Verdict decide(const Sequent& s);

// Pure-conjunction sequents: derivable iff every letter of the
// conclusion occurs in some premise.
Verdict decide_conj_syntactic(const Sequent& s);

// {and,or} sequents via CNF on both sides: derivable iff every
// conclusion clause has some premise clause as a subset.
Verdict decide_conj_disj_syntactic(const Sequent& s);

// Two-valued truth-table consequence with Boolean tables for all four
// connectives; any fragment allowed.
Verdict classical_consequence(const Sequent& s);

}  // namespace finsem
