#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "finsem/formula.hpp"

namespace finsem {

// Letter index -> element index of some matrix.
using Valuation = std::map<int, int>;

// Finite algebra (one table per connective in its fragment) together
// with a designated subset D of the universe.
struct Matrix {
  int size = 0;
  std::vector<std::string> element_names;
  std::set<int> designated;

  std::optional<std::vector<int>> table_not;  // m entries
  std::optional<std::vector<int>> table_and;  // m*m entries, row-major in the left argument
  std::optional<std::vector<int>> table_or;
  std::optional<std::vector<int>> table_imp;

  Fragment fragment() const;
  bool has_table(Connective c) const;
  int apply_unary(int a) const { return (*table_not)[a]; }
  int apply_binary(Connective c, int a, int b) const;
  bool is_designated(int a) const { return designated.count(a) != 0; }

  const std::string& name_of(int a) const { return element_names[a]; }
  // Throws parse_error on unknown names.
  int index_of(const std::string& name) const;
};

// Throws domain_error on the first violated invariant; returns warnings
// (degenerate designated set) otherwise.
std::vector<std::string> validate_matrix(const Matrix& m);

// <{0,1}; F>, D = {1}: meet, join, Boolean negation and implication on
// request.  Doubles as the classical two-valued evaluator.
Matrix make_two(Fragment fragment);
// <{0, 1/2, 1}; F>, F within {and,not}, D = {1}: min and the Heyting
// meet complement (~0 = 1, ~h = ~1 = 0).
Matrix make_three(Fragment fragment);
// The m-element Heyting chain 1 < 2 < ... < m, D = {m}: min, max,
// a -> b = top if a <= b else b, ~a = a -> 1.
Matrix make_chain(int m, Fragment fragment);

int evaluate(const Matrix& m, const Valuation& v, const Formula& f);

struct ConsequenceResult {
  bool holds = false;
  Valuation witness;  // first counter-valuation when !holds
};

// Enumerates valuations over the occurring letters in lexicographic
// order (letters sorted by index; the last letter varies fastest).
ConsequenceResult consequence(const Matrix& m, const std::vector<Formula>& premises,
                              const Formula& conclusion);
ConsequenceResult is_valid(const Matrix& m, const Formula& f);

bool is_subalgebra(const Matrix& m, const std::set<int>& subset);

struct CongruenceRelation {
  std::vector<std::vector<int>> blocks;  // sorted: elements ascending, blocks by least element
  bool operator==(const CongruenceRelation&) const = default;
};

inline constexpr int kCongruenceSizeLimit = 8;

// All congruences of m, trivial ones included, enumerated via
// restricted-growth strings.
std::vector<CongruenceRelation> congruences(const Matrix& m);

// Line-oriented matrix file format; see README.
Matrix read_matrix(std::istream& in);
Matrix read_matrix_file(const std::string& path);
std::string write_matrix(const Matrix& m);

std::string render_valuation(const Valuation& v, const Matrix& m);

}  // namespace finsem
