#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "finsem/matrix.hpp"
#include "finsem/random_gen.hpp"

using namespace finsem;

namespace {
Formula L(int i) { return Formula::letter(i); }
}

TEST_CASE("parse basics") {
  CHECK(parse("p1") == L(1));
  CHECK(parse("~p1 & p2 -> p3 | p4") ==
        Formula::implies(Formula::conj(Formula::negate(L(1)), L(2)),
                         Formula::disj(L(3), L(4))));
  CHECK(parse("(p3 -> p2) -> (p3 -> p1)") ==
        Formula::implies(Formula::implies(L(3), L(2)), Formula::implies(L(3), L(1))));
}

TEST_CASE("parse associativity") {
  CHECK(parse("p1 & p2 & p3") == Formula::conj(Formula::conj(L(1), L(2)), L(3)));
  CHECK(parse("p1 | p2 | p3") == Formula::disj(Formula::disj(L(1), L(2)), L(3)));
  CHECK(parse("p1 -> p2 -> p3") == Formula::implies(L(1), Formula::implies(L(2), L(3))));
  CHECK(parse("~~p1") == Formula::negate(Formula::negate(L(1))));
}

TEST_CASE("parse unicode aliases") {
  CHECK(parse("¬p1 ∧ p2") == parse("~p1 & p2"));
  CHECK(parse("p1 ∨ p2 → p3") == parse("p1 | p2 -> p3"));
}

TEST_CASE("parse errors") {
  CHECK_THROWS_AS(parse("p0"), parse_error);
  CHECK_THROWS_AS(parse("p01"), parse_error);
  CHECK_THROWS_AS(parse("p1 &"), parse_error);
  CHECK_THROWS_AS(parse("(p1"), parse_error);
  CHECK_THROWS_AS(parse("p1 p2"), parse_error);
  CHECK_THROWS_AS(parse(""), parse_error);
  CHECK_THROWS_AS(parse("q1"), parse_error);
}

TEST_CASE("print") {
  CHECK(print(Formula::implies(L(2), L(1))) == "p2 -> p1");
  CHECK(print(Formula::negate(Formula::negate(
            Formula::disj(Formula::negate(L(1)), L(2))))) == "~~(~p1 | p2)");
  CHECK(print(Formula::conj(L(1), Formula::conj(L(2), L(3)))) == "p1 & (p2 & p3)");
}

TEST_CASE("print/parse round trip on random formulas") {
  std::mt19937 rng(7);
  for (int k = 0; k < 500; ++k) {
    Formula f = random_formula(rng, Fragment::full(), 8, 6);
    CHECK(parse(print(f)) == f);
    CHECK(parse(print_expanded(f)) == f);
  }
}

TEST_CASE("substitute") {
  CHECK(substitute(Formula::implies(L(2), L(1)), 2, 1) == Formula::implies(L(1), L(1)));
  CHECK(substitute(L(1), 2, 3) == L(1));
  SUBCASE("alpha_2 arrow collapse creates p2 -> p2") {
    Formula beta = substitute(gen_alpha_arrow(2), 3, 2);
    CHECK(print(beta).find("p2 -> p2") != std::string::npos);
  }
}

TEST_CASE("substitution locality") {
  std::mt19937 rng(11);
  for (int k = 0; k < 300; ++k) {
    Formula f = random_formula(rng, Fragment::full(), 5, 4);
    auto before = letters_of(f);
    if (std::find(before.begin(), before.end(), 2) == before.end()) continue;
    auto after = letters_of(substitute(f, 2, 4));
    for (int p : after) {
      bool allowed = p == 4 || (p != 2 && std::find(before.begin(), before.end(), p) != before.end());
      CHECK(allowed);
    }
  }
}

TEST_CASE("letters_of and fragment_of") {
  CHECK(fragment_of(Formula::negate(Formula::conj(L(1), L(2)))) ==
        Fragment::of({Connective::And, Connective::Not}));
  CHECK(fragment_of(L(5)) == Fragment::empty());
  CHECK(letters_of(gen_alpha_arrow(2)) == std::vector<int>{1, 2, 3});
}

TEST_CASE("dotvee") {
  CHECK(dotvee(L(1), L(2)) == Formula::implies(Formula::implies(L(1), L(2)), L(2)));
  Formula phi = parse("p1 & p2");
  CHECK(dotvee(phi, phi) == Formula::implies(Formula::implies(phi, phi), phi));
}

TEST_CASE("gen_alpha_arrow") {
  CHECK(gen_alpha_arrow(1) == Formula::implies(L(2), L(1)));
  Formula d1 = Formula::implies(L(2), L(1));
  Formula d2 = Formula::implies(L(3), L(1));
  Formula d3 = Formula::implies(L(3), L(2));
  CHECK(gen_alpha_arrow(2) == dotvee(dotvee(d1, d2), d3));
  CHECK(letters_of(gen_alpha_arrow(3)) == std::vector<int>{1, 2, 3, 4});
  CHECK_THROWS_AS(gen_alpha_arrow(0), domain_error);
}

TEST_CASE("expanded rendering of a two-step dotvee fold") {
  // [(p3 -> p2) dotvee (p3 -> p1)] dotvee (p2 -> p1), unfolded by hand
  std::string by_hand =
      "(((((p3 → p2) → (p3 → p1)) → (p3 → p1)) → (p2 → p1)) → (p2 → p1))";
  std::string norm;
  for (std::size_t i = 0; i < by_hand.size();) {
    if (by_hand.compare(i, 3, "→") == 0) { norm += "->"; i += 3; }
    else if (by_hand[i] == ' ') { ++i; }
    else { norm += by_hand[i]; ++i; }
  }
  Formula fold = dotvee(dotvee(parse("p3 -> p2"), parse("p3 -> p1")), parse("p2 -> p1"));
  std::string mine = print_expanded(fold);
  mine.erase(std::remove(mine.begin(), mine.end(), ' '), mine.end());
  CHECK(mine == norm);
}

TEST_CASE("gen_alpha_orneg") {
  CHECK(gen_alpha_orneg(1) ==
        Formula::negate(Formula::negate(Formula::disj(Formula::negate(L(1)), L(2)))));
  CHECK(fragment_of(gen_alpha_orneg(2)) == Fragment::of({Connective::Or, Connective::Not}));
  CHECK(substitute(gen_alpha_orneg(1), 2, 1) ==
        Formula::negate(Formula::negate(Formula::disj(Formula::negate(L(1)), L(1)))));
  CHECK_THROWS_AS(gen_alpha_orneg(0), domain_error);
}

TEST_CASE("alpha families have n(n+1)/2 disjuncts over p1..p_{n+1}") {
  for (int n = 1; n <= 5; ++n) {
    std::vector<int> expected;
    for (int i = 1; i <= n + 1; ++i) expected.push_back(i);
    CHECK(letters_of(gen_alpha_arrow(n)) == expected);
    CHECK(letters_of(gen_alpha_orneg(n)) == expected);
    // count or-fold disjuncts of the orneg variant
    int count = 1;
    Formula f = gen_alpha_orneg(n);
    while (f.kind() == Formula::Kind::Or) {
      ++count;
      f = f.left();
    }
    CHECK(count == n * (n + 1) / 2);
  }
}

TEST_CASE("to_cnf") {
  CHECK(to_cnf(Formula::disj(L(1), Formula::conj(L(2), L(3)))) ==
        ClauseSet{{1, 2}, {1, 3}});
  CHECK(to_cnf(L(1)) == ClauseSet{{1}});
  CHECK(to_cnf(Formula::conj(Formula::disj(L(1), L(2)), L(1))) ==
        ClauseSet{{1, 2}, {1}});
  CHECK_THROWS_AS(to_cnf(Formula::negate(L(1))), domain_error);
  CHECK_THROWS_AS(to_cnf(parse("p1 -> p2")), domain_error);
}

TEST_CASE("to_cnf clause limit") {
  // (p1&p2) | (p3&p4) | ... distributes into many clauses
  Formula f = Formula::conj(L(1), L(2));
  for (int i = 3; i <= 19; i += 2)
    f = Formula::disj(f, Formula::conj(L(i), L(i + 1)));
  CHECK_THROWS_AS(to_cnf(f, 64), resource_limit_error);
}

TEST_CASE("to_cnf preserves two-valued equivalence") {
  std::mt19937 rng(23);
  Matrix two = make_two(Fragment::of({Connective::And, Connective::Or}));
  for (int k = 0; k < 300; ++k) {
    Formula f = random_formula(rng, Fragment::of({Connective::And, Connective::Or}), 4, 4);
    ClauseSet cs = to_cnf(f);
    for (int mask = 0; mask < 16; ++mask) {
      Valuation v;
      for (int p = 1; p <= 4; ++p) v[p] = (mask >> (p - 1)) & 1;
      bool direct = two.is_designated(evaluate(two, v, f));
      bool via_cnf = true;
      for (const Clause& c : cs) {
        bool clause_true = false;
        for (int p : c) clause_true = clause_true || v[p] == 1;
        via_cnf = via_cnf && clause_true;
      }
      CHECK(direct == via_cnf);
    }
  }
}

TEST_CASE("fragment parsing and names") {
  CHECK(Fragment::parse("and,not") == Fragment::of({Connective::And, Connective::Not}));
  CHECK(Fragment::parse("empty") == Fragment::empty());
  CHECK(Fragment::parse("implies").to_string() == "implies");
  CHECK_THROWS_AS(Fragment::parse("xor"), parse_error);
}
