#pragma once

#include <optional>
#include <tuple>
#include <utility>

#include "finsem/oracle.hpp"

namespace finsem {

enum class AlphaVariant { Arrow, OrNeg };

enum class RefutationMode { CompletenessViolation, SoundnessViolation };

// make_chain(n+1, {implies}) with p_i -> i; the value of alpha_n there
// (one below the top).
struct ChainCountermodel {
  Matrix chain;
  Valuation valuation;
  int value = 0;  // element index in the chain
};

ChainCountermodel chain_countermodel_report(int n);

struct RefutationReport {
  AlphaVariant variant = AlphaVariant::Arrow;
  int n = 0;  // candidate matrix size
  Formula alpha;
  RefutationMode mode = RefutationMode::CompletenessViolation;
  Formula witness_formula;  // alpha (completeness) or beta (soundness)
  std::optional<Valuation> witness_valuation;
  std::optional<std::pair<int, int>> identified_pair;  // (i, j), i < j
  std::optional<ChainCountermodel> chain_countermodel;
  // (i, j, Boolean valuation falsifying ~~(~p_i | p_j))
  std::vector<std::tuple<int, int, Valuation>> classical_falsifications;
  std::optional<Verdict> oracle_confirmation;
};

// Refutes the claim that M characterizes its fragment's derivability:
// either M validates alpha_n (a non-theorem) or M refutes the theorem
// beta_n obtained by collapsing an equal-valued letter pair.
RefutationReport refute_matrix(const Matrix& m, AlphaVariant variant,
                               bool use_oracle = true);

std::string render_report(const RefutationReport& r, const Matrix& m, bool porcelain);

// Re-checks every piece of evidence in the report against the matrix,
// chain, classical tables, and oracle; throws domain_error on mismatch.
void replay_report(const RefutationReport& r, const Matrix& m);

}  // namespace finsem
