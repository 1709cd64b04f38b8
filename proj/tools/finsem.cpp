#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "finsem/refute.hpp"
#include "finsem/search.hpp"

using namespace finsem;

namespace {

// 0 = answered, 1 = usage/parse error, 2 = resource limit, 3 = internal failure
constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitResource = 2;
constexpr int kExitInternal = 3;

Valuation parse_assignment(const std::string& text, const Matrix& m) {
  Valuation v;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t comma = text.find(',', start);
    std::string part = text.substr(
        start, comma == std::string::npos ? std::string::npos : comma - start);
    std::size_t eq = part.find('=');
    if (eq == std::string::npos || part.size() < 3 || part[0] != 'p')
      throw parse_error("assignment entries look like p1=value");
    int letter = std::stoi(part.substr(1, eq - 1));
    v[letter] = m.index_of(part.substr(eq + 1));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return v;
}

void print_verdict(const Verdict& v, bool porcelain) {
  std::cout << "verdict: " << (v.derivable ? "derivable" : "not-derivable") << "\n";
  std::cout << "method: " << v.method << "\n";
  if (v.witness && v.witness_matrix)
    std::cout << "witness: " << render_valuation(*v.witness, *v.witness_matrix) << "\n";
  (void)porcelain;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Decision procedures and finite-semantics refutations for "
               "fragments of intuitionistic propositional logic"};
  app.require_subcommand(1);
  bool porcelain = false;
  app.add_flag("--porcelain", porcelain, "machine-readable key: value output only");

  // parse
  std::string formula_text;
  auto* cmd_parse = app.add_subcommand("parse", "parse a formula and reprint it");
  cmd_parse->add_option("formula", formula_text)->required();

  // eval
  std::string matrix_path, assign_text, eval_formula;
  auto* cmd_eval = app.add_subcommand("eval", "evaluate a formula in a matrix");
  cmd_eval->add_option("--matrix", matrix_path)->required();
  cmd_eval->add_option("--assign", assign_text)->required();
  cmd_eval->add_option("formula", eval_formula)->required();

  // decide
  std::string sequent_text, method = "matrix";
  auto* cmd_decide = app.add_subcommand("decide", "decide a sequent in a matrix-characterized fragment");
  cmd_decide->add_option("--sequent", sequent_text)->required();
  cmd_decide->add_option("--method", method)->check(CLI::IsMember({"matrix", "syntactic", "oracle"}));

  // prove
  std::string prove_sequent;
  auto* cmd_prove = app.add_subcommand("prove", "intuitionistic derivability via proof search");
  cmd_prove->add_option("--sequent", prove_sequent)->required();

  // gen-alpha
  std::string variant = "arrow";
  int alpha_n = 1;
  bool expanded = false;
  auto* cmd_alpha = app.add_subcommand("gen-alpha", "generate a counterexample formula");
  cmd_alpha->add_option("--variant", variant)->check(CLI::IsMember({"arrow", "orneg"}));
  cmd_alpha->add_option("--n", alpha_n)->required();
  cmd_alpha->add_flag("--expanded", expanded, "fully parenthesized rendering");

  // refute
  std::string refute_matrix_path, refute_variant = "arrow";
  int chain_n = 0;
  bool no_oracle = false;
  auto* cmd_refute = app.add_subcommand("refute", "refute a candidate finite semantics");
  cmd_refute->add_option("--matrix", refute_matrix_path);
  cmd_refute->add_option("--chain", chain_n);
  cmd_refute->add_option("--variant", refute_variant)->check(CLI::IsMember({"arrow", "orneg"}));
  cmd_refute->add_flag("--no-oracle", no_oracle);

  // search
  std::string fragment_spec, corpus_path;
  int max_size = 2, workers = 1;
  auto* cmd_search = app.add_subcommand("search", "enumerate small matrices against a corpus");
  cmd_search->add_option("--fragment", fragment_spec)->required();
  cmd_search->add_option("--max-size", max_size)->required();
  cmd_search->add_option("--corpus", corpus_path);
  cmd_search->add_option("--workers", workers);

  // congruences
  std::string cong_matrix_path;
  auto* cmd_cong = app.add_subcommand("congruences", "list the congruences of a matrix");
  cmd_cong->add_option("--matrix", cong_matrix_path)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*cmd_parse) {
      Formula f = parse(formula_text);
      std::cout << "formula: " << print(f) << "\n";
      std::cout << "fragment: " << fragment_of(f).to_string() << "\n";
      return kExitOk;
    }
    if (*cmd_eval) {
      Matrix m = read_matrix_file(matrix_path);
      Valuation v = parse_assignment(assign_text, m);
      int value = evaluate(m, v, parse(eval_formula));
      std::cout << "value: " << m.element_names[value] << "\n";
      std::cout << "designated: " << (m.is_designated(value) ? "yes" : "no") << "\n";
      return kExitOk;
    }
    if (*cmd_decide) {
      Sequent s = parse_sequent(sequent_text);
      Verdict v;
      if (method == "oracle") {
        v = prove_ipc(s);
      } else if (method == "syntactic") {
        Fragment f = s.fragment();
        if (f.subset_of(Fragment::of({Connective::And})))
          v = decide_conj_syntactic(s);
        else
          v = decide_conj_disj_syntactic(s);
      } else {
        v = decide(s);
      }
      print_verdict(v, porcelain);
      return kExitOk;
    }
    if (*cmd_prove) {
      print_verdict(prove_ipc(parse_sequent(prove_sequent)), porcelain);
      return kExitOk;
    }
    if (*cmd_alpha) {
      Formula alpha = variant == "arrow" ? gen_alpha_arrow(alpha_n) : gen_alpha_orneg(alpha_n);
      std::cout << (expanded ? print_expanded(alpha) : print(alpha)) << "\n";
      return kExitOk;
    }
    if (*cmd_refute) {
      AlphaVariant av = refute_variant == "arrow" ? AlphaVariant::Arrow : AlphaVariant::OrNeg;
      Matrix m;
      if (!refute_matrix_path.empty()) {
        m = read_matrix_file(refute_matrix_path);
      } else if (chain_n >= 1) {
        Fragment f = av == AlphaVariant::Arrow
                         ? Fragment::of({Connective::Implies})
                         : Fragment::of({Connective::Or, Connective::Not});
        m = make_chain(chain_n, f);
      } else {
        std::cerr << "refute needs --matrix or --chain\n";
        return kExitUsage;
      }
      RefutationReport r = refute_matrix(m, av, !no_oracle);
      std::cout << render_report(r, m, porcelain);
      return kExitOk;
    }
    if (*cmd_search) {
      Fragment f = Fragment::parse(fragment_spec);
      Corpus corpus = corpus_path.empty() ? standard_corpus(f)
                                          : load_corpus_file(corpus_path);
      SearchOutcome outcome = search(f, max_size, corpus, workers);
      std::cout << render_outcome(outcome, corpus, porcelain);
      return kExitOk;
    }
    if (*cmd_cong) {
      Matrix m = read_matrix_file(cong_matrix_path);
      auto cs = congruences(m);
      std::cout << "count: " << cs.size() << "\n";
      for (const CongruenceRelation& rel : cs) {
        std::cout << "congruence:";
        for (const auto& block : rel.blocks) {
          std::cout << " {";
          for (std::size_t i = 0; i < block.size(); ++i) {
            if (i) std::cout << ',';
            std::cout << m.element_names[block[i]];
          }
          std::cout << "}";
        }
        std::cout << "\n";
      }
      return kExitOk;
    }
  } catch (const parse_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const resource_limit_error& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return kExitResource;
  } catch (const domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitUsage;
}
