#pragma once

#include <memory>
#include <set>
#include <string>
#include <vector>

#include "finsem/errors.hpp"

namespace finsem {

enum class Connective : unsigned {
  And = 1u,
  Or = 2u,
  Implies = 4u,
  Not = 8u,
};

// A subset of {and, or, implies, not}; sixteen possible values.
class Fragment {
 public:
  constexpr Fragment() : bits_(0) {}
  constexpr explicit Fragment(unsigned bits) : bits_(bits & 0xfu) {}

  static constexpr Fragment empty() { return Fragment(0); }
  static constexpr Fragment full() { return Fragment(0xfu); }
  static Fragment of(std::initializer_list<Connective> cs) {
    unsigned b = 0;
    for (auto c : cs) b |= static_cast<unsigned>(c);
    return Fragment(b);
  }

  // "and,not", "implies", "empty", ...
  static Fragment parse(const std::string& spec);

  bool contains(Connective c) const {
    return (bits_ & static_cast<unsigned>(c)) != 0;
  }
  bool subset_of(Fragment other) const { return (bits_ & ~other.bits_) == 0; }
  bool is_empty() const { return bits_ == 0; }

  Fragment united(Fragment other) const { return Fragment(bits_ | other.bits_); }
  Fragment with(Connective c) const {
    return Fragment(bits_ | static_cast<unsigned>(c));
  }

  unsigned bits() const { return bits_; }
  std::string to_string() const;

  friend bool operator==(Fragment a, Fragment b) { return a.bits_ == b.bits_; }
  friend bool operator!=(Fragment a, Fragment b) { return a.bits_ != b.bits_; }

 private:
  unsigned bits_;
};

struct FormulaNode;

// Immutable connective tree over letters p1, p2, ...  There are no
// constants in the language: every leaf is a letter.
class Formula {
 public:
  enum class Kind { Letter, And, Or, Implies, Not };

  // Empty handle; usable only as a target of assignment.
  Formula() = default;
  bool empty() const { return node_ == nullptr; }

  static Formula letter(int index);
  static Formula conj(Formula a, Formula b);
  static Formula disj(Formula a, Formula b);
  static Formula implies(Formula a, Formula b);
  static Formula negate(Formula a);

  Kind kind() const;
  // Valid only when kind() == Kind::Letter.
  int letter_index() const;
  // Valid for binary nodes.
  Formula left() const;
  Formula right() const;
  // Valid for Not nodes.
  Formula child() const;

  bool operator==(const Formula& other) const;
  bool operator!=(const Formula& other) const { return !(*this == other); }

 private:
  explicit Formula(std::shared_ptr<const FormulaNode> n) : node_(std::move(n)) {}

  std::shared_ptr<const FormulaNode> node_;
};

// Conjunction of disjunctions of letters.  Clauses are non-empty letter
// sets; the set always holds at least one clause.
using Clause = std::set<int>;
using ClauseSet = std::set<Clause>;

Formula parse(const std::string& text);
std::string print(const Formula& f);
// Fully parenthesized rendering (every compound subterm wrapped).
std::string print_expanded(const Formula& f);

Formula substitute(const Formula& f, int target, int replacement);
std::vector<int> letters_of(const Formula& f);
Fragment fragment_of(const Formula& f);

// phi dotvee psi = (phi -> psi) -> psi
Formula dotvee(const Formula& a, const Formula& b);

// Left-associated dotvee-fold of p_j -> p_i over 1 <= i < j <= n+1,
// pairs in descending lexicographic order on (j, i).
Formula gen_alpha_arrow(int n);
// Left-associated or-fold of ~~(~p_i | p_j) over the same pairs.
Formula gen_alpha_orneg(int n);

inline constexpr std::size_t kDefaultCnfClauseLimit = 1u << 16;

// Full distribution into conjunctive normal form; {and,or} formulas only.
ClauseSet to_cnf(const Formula& f, std::size_t max_clauses = kDefaultCnfClauseLimit);

}  // namespace finsem
