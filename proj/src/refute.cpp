#include "finsem/refute.hpp"

#include <sstream>

namespace finsem {

namespace {

Formula gen_alpha(AlphaVariant variant, int n) {
  return variant == AlphaVariant::Arrow ? gen_alpha_arrow(n) : gen_alpha_orneg(n);
}

const char* variant_name(AlphaVariant v) {
  return v == AlphaVariant::Arrow ? "arrow" : "orneg";
}

}  // namespace

ChainCountermodel chain_countermodel_report(int n) {
  if (n < 1) throw domain_error("chain countermodel requires n >= 1");
  ChainCountermodel cm;
  cm.chain = make_chain(n + 1, Fragment::of({Connective::Implies}));
  for (int i = 1; i <= n + 1; ++i) cm.valuation[i] = i - 1;  // element "i"
  cm.value = evaluate(cm.chain, cm.valuation, gen_alpha_arrow(n));
  return cm;
}

RefutationReport refute_matrix(const Matrix& m, AlphaVariant variant, bool use_oracle) {
  Fragment f = m.fragment();
  if (variant == AlphaVariant::Arrow && !f.contains(Connective::Implies))
    throw domain_error("arrow variant requires a matrix with an imp table");
  if (variant == AlphaVariant::OrNeg &&
      !(f.contains(Connective::Or) && f.contains(Connective::Not)))
    throw domain_error("orneg variant requires a matrix with or and not tables");

  RefutationReport r;
  r.variant = variant;
  r.n = m.size;
  r.alpha = gen_alpha(variant, r.n);

  ConsequenceResult valid = is_valid(m, r.alpha);
  if (valid.holds) {
    // The matrix validates alpha_n, which is not intuitionistically
    // derivable: the candidate semantics proves too much.
    r.mode = RefutationMode::CompletenessViolation;
    r.witness_formula = r.alpha;
    if (variant == AlphaVariant::Arrow) {
      r.chain_countermodel = chain_countermodel_report(r.n);
    } else {
      // every disjunct ~~(~p_i | p_j), i != j, already fails classically
      for (int j = r.n + 1; j >= 2; --j)
        for (int i = j - 1; i >= 1; --i) {
          Valuation w;
          w[i] = 1;
          w[j] = 0;
          r.classical_falsifications.emplace_back(i, j, w);
        }
    }
    if (use_oracle) r.oracle_confirmation = prove_ipc({{}, r.alpha});
    return r;
  }

  // The matrix refutes alpha_n at w.  alpha_n has n+1 letters over n
  // values, so w identifies two letters with equal value; collapsing
  // them turns one disjunct into a theorem, and the whole fold with it,
  // while its value under w is unchanged.
  const Valuation& w = valid.witness;
  std::optional<std::pair<int, int>> pair;
  for (int i = 1; i <= r.n + 1 && !pair; ++i)
    for (int j = i + 1; j <= r.n + 1; ++j)
      if (w.at(i) == w.at(j)) {
        pair = {i, j};
        break;
      }
  if (!pair)
    throw std::logic_error("pigeonhole failure: no equal-valued letter pair in witness");

  r.mode = RefutationMode::SoundnessViolation;
  r.identified_pair = pair;
  r.witness_formula = substitute(r.alpha, pair->first, pair->second);
  r.witness_valuation = w;
  if (evaluate(m, w, r.witness_formula) != evaluate(m, w, r.alpha))
    throw std::logic_error("substitution changed the witness value");
  if (use_oracle) {
    r.oracle_confirmation = prove_ipc({{}, r.witness_formula});
    if (!r.oracle_confirmation->derivable)
      throw std::logic_error("beta instance unexpectedly not derivable");
  }
  return r;
}

void replay_report(const RefutationReport& r, const Matrix& m) {
  Formula alpha = gen_alpha(r.variant, r.n);
  if (alpha != r.alpha) throw domain_error("replay: alpha mismatch");
  if (r.mode == RefutationMode::CompletenessViolation) {
    if (!is_valid(m, r.alpha).holds)
      throw domain_error("replay: matrix does not validate alpha");
    if (r.oracle_confirmation && r.oracle_confirmation->derivable)
      throw domain_error("replay: oracle claims alpha derivable");
    if (r.chain_countermodel) {
      const ChainCountermodel& cm = *r.chain_countermodel;
      int value = evaluate(cm.chain, cm.valuation, r.alpha);
      if (value != cm.value || cm.chain.is_designated(value))
        throw domain_error("replay: chain countermodel does not refute alpha");
    }
    Matrix boolean = make_two(Fragment::full());
    for (const auto& [i, j, w] : r.classical_falsifications) {
      Formula disjunct = Formula::negate(Formula::negate(
          Formula::disj(Formula::negate(Formula::letter(i)), Formula::letter(j))));
      if (boolean.is_designated(evaluate(boolean, w, disjunct)))
        throw domain_error("replay: claimed classical falsification does not falsify");
    }
  } else {
    if (!r.witness_valuation || !r.identified_pair)
      throw domain_error("replay: soundness violation lacks witness data");
    auto [i, j] = *r.identified_pair;
    if (r.witness_valuation->at(i) != r.witness_valuation->at(j))
      throw domain_error("replay: identified pair not equal-valued");
    if (substitute(r.alpha, i, j) != r.witness_formula)
      throw domain_error("replay: beta mismatch");
    if (m.is_designated(evaluate(m, *r.witness_valuation, r.witness_formula)))
      throw domain_error("replay: matrix designates beta under the witness");
    if (r.oracle_confirmation && !r.oracle_confirmation->derivable)
      throw domain_error("replay: oracle does not certify beta");
  }
}

std::string render_report(const RefutationReport& r, const Matrix& m, bool porcelain) {
  std::ostringstream out;
  out << "variant: " << variant_name(r.variant) << "\n";
  out << "n: " << r.n << "\n";
  out << "mode: "
      << (r.mode == RefutationMode::CompletenessViolation ? "completeness-violation"
                                                          : "soundness-violation")
      << "\n";
  out << "alpha: " << print(r.alpha) << "\n";
  out << "witness-formula: " << print(r.witness_formula) << "\n";
  if (r.witness_valuation)
    out << "witness-valuation: " << render_valuation(*r.witness_valuation, m) << "\n";
  if (r.identified_pair)
    out << "identified-pair: p" << r.identified_pair->first << ",p"
        << r.identified_pair->second << "\n";
  if (r.chain_countermodel) {
    const ChainCountermodel& cm = *r.chain_countermodel;
    out << "chain-size: " << cm.chain.size << "\n";
    out << "chain-valuation: " << render_valuation(cm.valuation, cm.chain) << "\n";
    out << "chain-value: " << cm.chain.element_names[cm.value] << "\n";
  }
  for (const auto& [i, j, w] : r.classical_falsifications) {
    Matrix boolean = make_two(Fragment::full());
    out << "classical-falsification: ~~(~p" << i << " | p" << j << ") at "
        << render_valuation(w, boolean) << "\n";
  }
  if (r.oracle_confirmation)
    out << "oracle: " << (r.oracle_confirmation->derivable ? "derivable" : "not-derivable")
        << "\n";
  if (!porcelain) {
    out << "summary: ";
    if (r.mode == RefutationMode::CompletenessViolation)
      out << "the matrix validates a formula that is not intuitionistically derivable\n";
    else
      out << "the matrix refutes a substitution instance that is an intuitionistic theorem\n";
  }
  return out.str();
}

}  // namespace finsem
