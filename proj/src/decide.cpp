#include "finsem/decide.hpp"

#include <algorithm>
#include <set>

namespace finsem {

Fragment Sequent::fragment() const {
  Fragment f = fragment_of(conclusion);
  for (const Formula& p : premises) f = f.united(fragment_of(p));
  return f;
}

Sequent parse_sequent(const std::string& text) {
  std::size_t turnstile = text.find("|-");
  std::size_t tslen = 2;
  if (turnstile == std::string::npos) {
    turnstile = text.find("⊢");
    tslen = std::string("⊢").size();
  }
  if (turnstile == std::string::npos)
    throw parse_error("sequent has no '|-'");
  std::string lhs = text.substr(0, turnstile);
  std::string rhs = text.substr(turnstile + tslen);
  Sequent s{{}, parse(rhs)};
  auto non_blank = [](const std::string& str) {
    return str.find_first_not_of(" \t") != std::string::npos;
  };
  if (non_blank(lhs)) {
    std::size_t start = 0;
    for (;;) {
      std::size_t semi = lhs.find(';', start);
      std::string part = lhs.substr(
          start, semi == std::string::npos ? std::string::npos : semi - start);
      if (!non_blank(part)) throw parse_error("empty premise in sequent");
      s.premises.push_back(parse(part));
      if (semi == std::string::npos) break;
      start = semi + 1;
    }
  }
  return s;
}

std::string print_sequent(const Sequent& s) {
  std::string out;
  for (std::size_t i = 0; i < s.premises.size(); ++i) {
    if (i) out += " ; ";
    out += print(s.premises[i]);
  }
  if (!s.premises.empty()) out += ' ';
  out += "|- ";
  out += print(s.conclusion);
  return out;
}

namespace {

Verdict from_matrix(const Sequent& s, Matrix m, std::string method) {
  ConsequenceResult r = consequence(m, s.premises, s.conclusion);
  Verdict v;
  v.derivable = r.holds;
  v.method = std::move(method);
  if (!r.holds) {
    v.witness = r.witness;
    v.witness_matrix = std::move(m);
  }
  return v;
}

}  // namespace

Verdict decide(const Sequent& s) {
  Fragment f = s.fragment();
  if (f.contains(Connective::Implies))
    throw domain_error(
        "fragment '" + f.to_string() +
        "' has no finite semantics (contains implies); use the intuitionistic oracle");
  if (f.contains(Connective::Or) && f.contains(Connective::Not))
    throw domain_error(
        "fragment '" + f.to_string() +
        "' has no finite semantics (contains or,not); use the intuitionistic oracle");
  if (f.subset_of(Fragment::of({Connective::And, Connective::Or})))
    return from_matrix(s, make_two(f), "matrix-2");
  // remaining: fragments within {and,not} containing not
  return from_matrix(s, make_three(f), "matrix-3");
}

Verdict decide_conj_syntactic(const Sequent& s) {
  if (!s.fragment().subset_of(Fragment::of({Connective::And})))
    throw domain_error("decide_conj_syntactic requires the {and} fragment");
  std::set<int> premise_letters;
  for (const Formula& p : s.premises) {
    auto ls = letters_of(p);
    premise_letters.insert(ls.begin(), ls.end());
  }
  Verdict v;
  v.method = "syntactic-conj";
  v.derivable = true;
  for (int q : letters_of(s.conclusion))
    if (!premise_letters.count(q)) {
      v.derivable = false;
      break;
    }
  return v;
}

Verdict decide_conj_disj_syntactic(const Sequent& s) {
  if (!s.fragment().subset_of(Fragment::of({Connective::And, Connective::Or})))
    throw domain_error("decide_conj_disj_syntactic requires the {and,or} fragment");
  ClauseSet delta;
  for (const Formula& p : s.premises) {
    ClauseSet cs = to_cnf(p);
    delta.insert(cs.begin(), cs.end());
  }
  ClauseSet goal = to_cnf(s.conclusion);
  Verdict v;
  v.method = "syntactic-cnf";
  v.derivable = std::all_of(goal.begin(), goal.end(), [&](const Clause& c) {
    return std::any_of(delta.begin(), delta.end(), [&](const Clause& d) {
      return std::includes(c.begin(), c.end(), d.begin(), d.end());
    });
  });
  return v;
}

Verdict classical_consequence(const Sequent& s) {
  return from_matrix(s, make_two(Fragment::full()), "classical-2");
}

}  // namespace finsem
