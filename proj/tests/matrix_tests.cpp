#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <sstream>

#include "finsem/matrix.hpp"
#include "finsem/random_gen.hpp"

using namespace finsem;

namespace {
Formula L(int i) { return Formula::letter(i); }
const Fragment kAndNot = Fragment::of({Connective::And, Connective::Not});
const Fragment kAndOr = Fragment::of({Connective::And, Connective::Or});
const Fragment kImp = Fragment::of({Connective::Implies});
}

TEST_CASE("validate_matrix") {
  Matrix three = make_three(kAndNot);
  CHECK(validate_matrix(three).empty());

  SUBCASE("out-of-range table entry") {
    Matrix bad = three;
    (*bad.table_not)[0] = 3;
    CHECK_THROWS_AS(validate_matrix(bad), domain_error);
  }
  SUBCASE("wrong table size") {
    Matrix bad = three;
    bad.table_and->resize(8);
    CHECK_THROWS_AS(validate_matrix(bad), domain_error);
  }
  SUBCASE("bad designated index") {
    Matrix bad = three;
    bad.designated = {5};
    CHECK_THROWS_AS(validate_matrix(bad), domain_error);
  }
  SUBCASE("degenerate designated sets warn but pass") {
    Matrix m = three;
    m.designated = {};
    CHECK(validate_matrix(m).size() == 1);
    m.designated = {0, 1, 2};
    CHECK(validate_matrix(m).size() == 1);
  }
}

TEST_CASE("make_two tables") {
  Matrix m = make_two(Fragment::of({Connective::And, Connective::Or, Connective::Not}));
  CHECK(m.apply_binary(Connective::And, 1, 0) == 0);
  CHECK(m.apply_binary(Connective::Or, 0, 1) == 1);
  CHECK(m.apply_unary(0) == 1);
  CHECK(m.designated == std::set<int>{1});
  Matrix full = make_two(Fragment::full());
  CHECK(full.apply_binary(Connective::Implies, 1, 0) == 0);
  CHECK(full.apply_binary(Connective::Implies, 0, 0) == 1);
}

TEST_CASE("make_three tables") {
  Matrix m = make_three(kAndNot);
  int h = 1;
  CHECK(m.apply_unary(h) == 0);
  CHECK(m.apply_binary(Connective::And, h, 2) == h);
  CHECK(m.apply_unary(m.apply_unary(h)) == 2);
  CHECK(m.element_names == std::vector<std::string>{"0", "h", "1"});
  CHECK_THROWS_AS(make_three(Fragment::of({Connective::Or})), domain_error);
  CHECK_THROWS_AS(make_three(Fragment::empty()), domain_error);
}

TEST_CASE("make_chain") {
  Matrix m = make_chain(3, kImp);
  // element "k" has index k-1
  CHECK(m.apply_binary(Connective::Implies, 2, 0) == 0);  // 3 -> 1 = 1
  CHECK(m.apply_binary(Connective::Implies, 1, 1) == 2);  // 2 -> 2 = 3 (top)
  Matrix m4 = make_chain(4, Fragment::of({Connective::Implies, Connective::And}));
  CHECK(m4.apply_binary(Connective::And, 1, 3) == 1);  // 2 & 4 = 2
  Matrix mn = make_chain(3, Fragment::of({Connective::Not}));
  CHECK(mn.apply_unary(0) == 2);
  CHECK(mn.apply_unary(1) == 0);
  CHECK(mn.apply_unary(2) == 0);
}

TEST_CASE("evaluate") {
  SUBCASE("alpha_2 in the 3-chain under p_i -> i") {
    Matrix m = make_chain(3, kImp);
    Valuation v{{1, 0}, {2, 1}, {3, 2}};
    CHECK(evaluate(m, v, gen_alpha_arrow(2)) == 1);  // element "2"
  }
  SUBCASE("double negation of h in 3") {
    Matrix m = make_three(kAndNot);
    Valuation v{{1, 1}};
    CHECK(evaluate(m, v, parse("~~p1")) == 2);
  }
  SUBCASE("two-valued") {
    Matrix m = make_two(kAndOr);
    Valuation v{{1, 0}, {2, 1}};
    CHECK(evaluate(m, v, parse("p1 | p1 & p2")) == 0);
  }
  SUBCASE("errors") {
    Matrix m = make_two(kAndOr);
    CHECK_THROWS_AS(evaluate(m, {}, L(1)), domain_error);
    CHECK_THROWS_AS(evaluate(m, {{1, 0}}, parse("~p1")), domain_error);
  }
}

TEST_CASE("evaluate depends only on occurring letters") {
  std::mt19937 rng(5);
  Matrix m = make_three(kAndNot);
  for (int k = 0; k < 200; ++k) {
    Formula f = random_formula(rng, kAndNot, 4, 3);
    Valuation v{{1, 1}, {2, 0}, {3, 2}};
    Valuation extended = v;
    extended[7] = 2;
    extended[9] = 0;
    CHECK(evaluate(m, v, f) == evaluate(m, extended, f));
  }
}

TEST_CASE("substitution/valuation exchange") {
  std::mt19937 rng(6);
  Matrix m = make_chain(4, Fragment::full());
  for (int k = 0; k < 200; ++k) {
    Formula f = random_formula(rng, Fragment::full(), 4, 3);
    Valuation v{{1, 2}, {2, 0}, {3, 3}};
    Valuation exchanged = v;
    exchanged[1] = v[3];  // p1 |-> v(p3)
    CHECK(evaluate(m, v, substitute(f, 1, 3)) == evaluate(m, exchanged, f));
  }
}

TEST_CASE("consequence") {
  SUBCASE("double negation fails in 3 with witness h") {
    Matrix m = make_three(kAndNot);
    auto r = consequence(m, {parse("~~p1")}, L(1));
    CHECK_FALSE(r.holds);
    CHECK(r.witness == Valuation{{1, 1}});
  }
  SUBCASE("contradictory premises prove anything") {
    Matrix m = make_three(kAndNot);
    CHECK(consequence(m, {L(1), parse("~p1")}, L(2)).holds);
  }
  SUBCASE("or projection fails with the first counter-valuation") {
    Matrix m = make_two(kAndOr);
    auto r = consequence(m, {parse("p1 | p2")}, L(1));
    CHECK_FALSE(r.holds);
    CHECK(r.witness == Valuation{{1, 0}, {2, 1}});
  }
}

TEST_CASE("is_valid") {
  CHECK_FALSE(is_valid(make_chain(3, kImp), gen_alpha_arrow(2)).holds);
  Formula peirce = parse("((p1 -> p2) -> p1) -> p1");
  CHECK(is_valid(make_two(Fragment::full()), peirce).holds);
  auto r = is_valid(make_chain(3, kImp), peirce);
  CHECK_FALSE(r.holds);
  SUBCASE("alpha_2 witness in the 3-chain") {
    auto a = is_valid(make_chain(3, kImp), gen_alpha_arrow(2));
    CHECK(a.witness == Valuation{{1, 0}, {2, 1}, {3, 2}});
  }
}

TEST_CASE("semantic monotonicity and cut on random sequents") {
  std::mt19937 rng(8);
  Matrix m = make_three(kAndNot);
  for (int k = 0; k < 100; ++k) {
    Sequent s = random_sequent(rng, kAndNot, 3, 3, 2);
    Formula extra = random_formula(rng, kAndNot, 3, 3);
    if (consequence(m, s.premises, s.conclusion).holds) {
      auto enlarged = s.premises;
      enlarged.push_back(extra);
      CHECK(consequence(m, enlarged, s.conclusion).holds);
      // cut: premises |- conclusion and premises+conclusion |- psi => premises |- psi
      Formula psi = random_formula(rng, kAndNot, 3, 3);
      auto with_cut = s.premises;
      with_cut.push_back(s.conclusion);
      if (consequence(m, with_cut, psi).holds)
        CHECK(consequence(m, s.premises, psi).holds);
    }
  }
}

TEST_CASE("is_subalgebra") {
  Matrix three = make_three(kAndNot);
  CHECK(is_subalgebra(three, {0, 2}));
  CHECK_FALSE(is_subalgebra(three, {1, 2}));
  CHECK(is_subalgebra(three, {0, 1, 2}));
  CHECK_THROWS_AS(is_subalgebra(three, {}), domain_error);
}

TEST_CASE("congruences of 3") {
  Matrix three = make_three(kAndNot);
  auto cs = congruences(three);
  REQUIRE(cs.size() == 3);
  CongruenceRelation all{{{0, 1, 2}}};
  CongruenceRelation diagonal{{{0}, {1}, {2}}};
  CongruenceRelation glued{{{0}, {1, 2}}};
  auto has = [&](const CongruenceRelation& r) {
    return std::find(cs.begin(), cs.end(), r) != cs.end();
  };
  CHECK(has(all));
  CHECK(has(diagonal));
  CHECK(has(glued));
  CongruenceRelation bad{{{0, 1}, {2}}};
  CHECK_FALSE(has(bad));
}

TEST_CASE("congruences of 2") {
  auto cs = congruences(make_two(Fragment::of({Connective::And})));
  CHECK(cs.size() == 2);
}

TEST_CASE("congruence size limit") {
  Matrix big = make_chain(9, kImp);
  CHECK_THROWS_AS(congruences(big), resource_limit_error);
}

TEST_CASE("congruence quotient soundness on 3") {
  // valuations agreeing up to blocks of {{0},{h,1}} give block-equal values
  std::mt19937 rng(9);
  Matrix three = make_three(kAndNot);
  auto block = [](int a) { return a == 0 ? 0 : 1; };
  for (int k = 0; k < 300; ++k) {
    Formula f = random_formula(rng, kAndNot, 4, 3);
    Valuation v, w;
    for (int p = 1; p <= 3; ++p) {
      v[p] = std::uniform_int_distribution<int>(0, 2)(rng);
      w[p] = v[p] == 0 ? 0 : std::uniform_int_distribution<int>(1, 2)(rng);
    }
    CHECK(block(evaluate(three, v, f)) == block(evaluate(three, w, f)));
  }
}

TEST_CASE("matrix file round trip") {
  Matrix three = make_three(kAndNot);
  std::istringstream in(write_matrix(three));
  Matrix back = read_matrix(in);
  CHECK(back.size == 3);
  CHECK(back.designated == three.designated);
  CHECK(back.table_and == three.table_and);
  CHECK(back.table_not == three.table_not);
}

TEST_CASE("matrix file errors") {
  SUBCASE("unknown element name") {
    std::istringstream in("size 2\nelements 0 1\ndesignated 2\n");
    CHECK_THROWS_AS(read_matrix(in), parse_error);
  }
  SUBCASE("missing cells") {
    std::istringstream in("size 2\nelements 0 1\ndesignated 1\nop not 1\n0 -> 1\n");
    CHECK_THROWS_AS(read_matrix(in), parse_error);
  }
  SUBCASE("empty file") {
    std::istringstream in("# nothing\n");
    CHECK_THROWS_AS(read_matrix(in), parse_error);
  }
}

TEST_CASE("lemma Lid on chains") {
  for (int m = 2; m <= 6; ++m) {
    Matrix chain = make_chain(m, kImp);
    for (int a = 0; a < m; ++a)
      for (int b = 0; b < m; ++b) {
        if (a < b) CHECK(chain.apply_binary(Connective::Implies, b, a) == a);
        if (a <= b) {
          // a dotvee b = (a -> b) -> b
          int ab = chain.apply_binary(Connective::Implies, a, b);
          CHECK(chain.apply_binary(Connective::Implies, ab, b) == b);
        }
      }
  }
}
