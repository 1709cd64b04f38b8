#include "finsem/formula.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace finsem {

Fragment Fragment::parse(const std::string& spec) {
  if (spec == "empty" || spec.empty()) return Fragment::empty();
  Fragment f;
  std::stringstream ss(spec);
  std::string name;
  while (std::getline(ss, name, ',')) {
    if (name == "and") f = f.with(Connective::And);
    else if (name == "or") f = f.with(Connective::Or);
    else if (name == "implies" || name == "imp") f = f.with(Connective::Implies);
    else if (name == "not") f = f.with(Connective::Not);
    else throw parse_error("unknown connective name '" + name + "' in fragment spec");
  }
  return f;
}

std::string Fragment::to_string() const {
  if (bits_ == 0) return "empty";
  std::string out;
  auto add = [&](const char* s) {
    if (!out.empty()) out += ',';
    out += s;
  };
  if (contains(Connective::And)) add("and");
  if (contains(Connective::Or)) add("or");
  if (contains(Connective::Implies)) add("implies");
  if (contains(Connective::Not)) add("not");
  return out;
}

struct FormulaNode {
  Formula::Kind kind;
  int index = 0;   // Letter
  Formula left;    // And/Or/Implies left, Not child
  Formula right;   // And/Or/Implies right
};

Formula Formula::letter(int index) {
  if (index < 1) throw domain_error("letter index must be >= 1");
  auto n = std::make_shared<FormulaNode>();
  n->kind = Kind::Letter;
  n->index = index;
  return Formula(std::move(n));
}

namespace {
std::shared_ptr<const FormulaNode> binary_node(Formula::Kind k, Formula a, Formula b) {
  auto n = std::make_shared<FormulaNode>();
  n->kind = k;
  n->left = std::move(a);
  n->right = std::move(b);
  return n;
}
}  // namespace

Formula Formula::conj(Formula a, Formula b) {
  return Formula(binary_node(Kind::And, std::move(a), std::move(b)));
}
Formula Formula::disj(Formula a, Formula b) {
  return Formula(binary_node(Kind::Or, std::move(a), std::move(b)));
}
Formula Formula::implies(Formula a, Formula b) {
  return Formula(binary_node(Kind::Implies, std::move(a), std::move(b)));
}
Formula Formula::negate(Formula a) {
  return Formula(binary_node(Kind::Not, std::move(a), Formula()));
}

Formula::Kind Formula::kind() const { return node_->kind; }
int Formula::letter_index() const { return node_->index; }
Formula Formula::left() const { return node_->left; }
Formula Formula::right() const { return node_->right; }
Formula Formula::child() const { return node_->left; }

bool Formula::operator==(const Formula& other) const {
  if (node_ == other.node_) return true;
  if (!node_ || !other.node_) return false;
  if (node_->kind != other.node_->kind) return false;
  switch (node_->kind) {
    case Kind::Letter:
      return node_->index == other.node_->index;
    case Kind::Not:
      return child() == other.child();
    default:
      return left() == other.left() && right() == other.right();
  }
}

namespace {

// ---- parsing -------------------------------------------------------------

struct Lexer {
  enum class Tok { Letter, Not, And, Or, Implies, LParen, RParen, End };

  const std::string& text;
  std::size_t pos = 0;
  Tok tok = Tok::End;
  int letter_index = 0;
  std::size_t tok_pos = 0;

  explicit Lexer(const std::string& t) : text(t) { advance(); }

  bool starts_with(const char* s) const {
    std::size_t n = std::char_traits<char>::length(s);
    return text.compare(pos, n, s) == 0;
  }

  void advance() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    tok_pos = pos;
    if (pos >= text.size()) {
      tok = Tok::End;
      return;
    }
    char c = text[pos];
    if (c == '(') { tok = Tok::LParen; ++pos; return; }
    if (c == ')') { tok = Tok::RParen; ++pos; return; }
    if (c == '~') { tok = Tok::Not; ++pos; return; }
    if (c == '&') { tok = Tok::And; ++pos; return; }
    if (c == '|') { tok = Tok::Or; ++pos; return; }
    if (starts_with("->")) { tok = Tok::Implies; pos += 2; return; }
    // Unicode aliases, accepted on input only.
    if (starts_with("¬")) { tok = Tok::Not; pos += 2; return; }
    if (starts_with("∧")) { tok = Tok::And; pos += 3; return; }
    if (starts_with("∨")) { tok = Tok::Or; pos += 3; return; }
    if (starts_with("→")) { tok = Tok::Implies; pos += 3; return; }
    if (c == 'p') {
      std::size_t start = ++pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      if (pos == start) throw parse_error("expected digits after 'p'", start);
      std::string digits = text.substr(start, pos - start);
      if (digits.size() > 1 && digits[0] == '0')
        throw parse_error("letter index has a leading zero", start);
      long value = std::stol(digits);
      if (value < 1) throw parse_error("letter index must be >= 1", start);
      tok = Tok::Letter;
      letter_index = static_cast<int>(value);
      return;
    }
    throw parse_error(std::string("unexpected character '") + c + "'", pos);
  }
};

struct Parser {
  Lexer lx;
  explicit Parser(const std::string& t) : lx(t) {}

  Formula formula() {
    Formula lhs = disjunction();
    if (lx.tok == Lexer::Tok::Implies) {
      lx.advance();
      return Formula::implies(std::move(lhs), formula());  // right-associative
    }
    return lhs;
  }

  Formula disjunction() {
    Formula f = conjunction();
    while (lx.tok == Lexer::Tok::Or) {
      lx.advance();
      f = Formula::disj(std::move(f), conjunction());
    }
    return f;
  }

  Formula conjunction() {
    Formula f = negation();
    while (lx.tok == Lexer::Tok::And) {
      lx.advance();
      f = Formula::conj(std::move(f), negation());
    }
    return f;
  }

  Formula negation() {
    if (lx.tok == Lexer::Tok::Not) {
      lx.advance();
      return Formula::negate(negation());
    }
    return atom();
  }

  Formula atom() {
    if (lx.tok == Lexer::Tok::Letter) {
      Formula f = Formula::letter(lx.letter_index);
      lx.advance();
      return f;
    }
    if (lx.tok == Lexer::Tok::LParen) {
      lx.advance();
      Formula f = formula();
      if (lx.tok != Lexer::Tok::RParen)
        throw parse_error("expected ')'", lx.tok_pos);
      lx.advance();
      return f;
    }
    throw parse_error("expected a letter, '~', or '('", lx.tok_pos);
  }
};

// ---- printing ------------------------------------------------------------

// ~ binds tighter than &, which binds tighter than |, which binds
// tighter than ->.  & and | are left-associative, -> right-associative.
int precedence(Formula::Kind k) {
  switch (k) {
    case Formula::Kind::Implies: return 1;
    case Formula::Kind::Or: return 2;
    case Formula::Kind::And: return 3;
    case Formula::Kind::Not: return 4;
    case Formula::Kind::Letter: return 5;
  }
  return 5;
}

void print_rec(const Formula& f, int min_prec, std::string& out) {
  int prec = precedence(f.kind());
  bool paren = prec < min_prec;
  if (paren) out += '(';
  switch (f.kind()) {
    case Formula::Kind::Letter:
      out += 'p';
      out += std::to_string(f.letter_index());
      break;
    case Formula::Kind::Not:
      out += '~';
      print_rec(f.child(), 4, out);
      break;
    case Formula::Kind::And:
      print_rec(f.left(), 3, out);
      out += " & ";
      print_rec(f.right(), 4, out);
      break;
    case Formula::Kind::Or:
      print_rec(f.left(), 2, out);
      out += " | ";
      print_rec(f.right(), 3, out);
      break;
    case Formula::Kind::Implies:
      print_rec(f.left(), 2, out);
      out += " -> ";
      print_rec(f.right(), 1, out);
      break;
  }
  if (paren) out += ')';
}

void print_expanded_rec(const Formula& f, std::string& out) {
  switch (f.kind()) {
    case Formula::Kind::Letter:
      out += 'p';
      out += std::to_string(f.letter_index());
      break;
    case Formula::Kind::Not:
      out += "~";
      print_expanded_rec(f.child(), out);
      break;
    case Formula::Kind::And:
    case Formula::Kind::Or:
    case Formula::Kind::Implies: {
      out += '(';
      print_expanded_rec(f.left(), out);
      out += f.kind() == Formula::Kind::And   ? " & "
             : f.kind() == Formula::Kind::Or ? " | "
                                             : " -> ";
      print_expanded_rec(f.right(), out);
      out += ')';
      break;
    }
  }
}

void collect_letters(const Formula& f, std::set<int>& out) {
  switch (f.kind()) {
    case Formula::Kind::Letter:
      out.insert(f.letter_index());
      break;
    case Formula::Kind::Not:
      collect_letters(f.child(), out);
      break;
    default:
      collect_letters(f.left(), out);
      collect_letters(f.right(), out);
  }
}

// Disjuncts p_j -> p_i (arrow) / ~~(~p_i | p_j) (orneg) share one pair
// order: ascending lexicographic on (i, j), so the n = 2 fold is
// ((1,2), (1,3), (2,3)).  With this order the fold over the m-element
// chain under p_i |-> i collapses step by step to the value m - 1.
std::vector<std::pair<int, int>> alpha_pairs(int n) {
  if (n < 1) throw domain_error("alpha index must be >= 1");
  std::vector<std::pair<int, int>> pairs;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n + 1; ++j) pairs.emplace_back(i, j);
  return pairs;
}

ClauseSet cnf_rec(const Formula& f, std::size_t max_clauses) {
  switch (f.kind()) {
    case Formula::Kind::Letter:
      return {{f.letter_index()}};
    case Formula::Kind::And: {
      ClauseSet cs = cnf_rec(f.left(), max_clauses);
      ClauseSet rs = cnf_rec(f.right(), max_clauses);
      cs.insert(rs.begin(), rs.end());
      if (cs.size() > max_clauses)
        throw resource_limit_error("CNF clause limit exceeded (" +
                                   std::to_string(max_clauses) + " clauses)");
      return cs;
    }
    case Formula::Kind::Or: {
      ClauseSet ls = cnf_rec(f.left(), max_clauses);
      ClauseSet rs = cnf_rec(f.right(), max_clauses);
      ClauseSet out;
      for (const Clause& a : ls)
        for (const Clause& b : rs) {
          Clause c = a;
          c.insert(b.begin(), b.end());
          out.insert(std::move(c));
          if (out.size() > max_clauses)
            throw resource_limit_error("CNF clause limit exceeded (" +
                                       std::to_string(max_clauses) + " clauses)");
        }
      return out;
    }
    default:
      throw domain_error("to_cnf requires a formula in the {and,or} fragment");
  }
}

}  // namespace

Formula parse(const std::string& text) {
  Parser p(text);
  Formula f = p.formula();
  if (p.lx.tok != Lexer::Tok::End)
    throw parse_error("trailing input after formula", p.lx.tok_pos);
  return f;
}

std::string print(const Formula& f) {
  std::string out;
  print_rec(f, 0, out);
  return out;
}

std::string print_expanded(const Formula& f) {
  std::string out;
  print_expanded_rec(f, out);
  return out;
}

Formula substitute(const Formula& f, int target, int replacement) {
  switch (f.kind()) {
    case Formula::Kind::Letter:
      return f.letter_index() == target ? Formula::letter(replacement) : f;
    case Formula::Kind::Not:
      return Formula::negate(substitute(f.child(), target, replacement));
    case Formula::Kind::And:
      return Formula::conj(substitute(f.left(), target, replacement),
                           substitute(f.right(), target, replacement));
    case Formula::Kind::Or:
      return Formula::disj(substitute(f.left(), target, replacement),
                           substitute(f.right(), target, replacement));
    case Formula::Kind::Implies:
      return Formula::implies(substitute(f.left(), target, replacement),
                              substitute(f.right(), target, replacement));
  }
  return f;
}

std::vector<int> letters_of(const Formula& f) {
  std::set<int> s;
  collect_letters(f, s);
  return std::vector<int>(s.begin(), s.end());
}

Fragment fragment_of(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::Letter:
      return Fragment::empty();
    case Formula::Kind::Not:
      return fragment_of(f.child()).with(Connective::Not);
    case Formula::Kind::And:
      return fragment_of(f.left()).united(fragment_of(f.right())).with(Connective::And);
    case Formula::Kind::Or:
      return fragment_of(f.left()).united(fragment_of(f.right())).with(Connective::Or);
    case Formula::Kind::Implies:
      return fragment_of(f.left()).united(fragment_of(f.right())).with(Connective::Implies);
  }
  return Fragment::empty();
}

Formula dotvee(const Formula& a, const Formula& b) {
  return Formula::implies(Formula::implies(a, b), b);
}

Formula gen_alpha_arrow(int n) {
  auto pairs = alpha_pairs(n);
  auto disjunct = [](std::pair<int, int> ij) {
    return Formula::implies(Formula::letter(ij.second), Formula::letter(ij.first));
  };
  Formula acc = disjunct(pairs[0]);
  for (std::size_t k = 1; k < pairs.size(); ++k) acc = dotvee(acc, disjunct(pairs[k]));
  return acc;
}

Formula gen_alpha_orneg(int n) {
  auto pairs = alpha_pairs(n);
  auto disjunct = [](std::pair<int, int> ij) {
    return Formula::negate(Formula::negate(
        Formula::disj(Formula::negate(Formula::letter(ij.first)),
                      Formula::letter(ij.second))));
  };
  Formula acc = disjunct(pairs[0]);
  for (std::size_t k = 1; k < pairs.size(); ++k)
    acc = Formula::disj(acc, disjunct(pairs[k]));
  return acc;
}

ClauseSet to_cnf(const Formula& f, std::size_t max_clauses) {
  if (!fragment_of(f).subset_of(Fragment::of({Connective::And, Connective::Or})))
    throw domain_error("to_cnf requires a formula in the {and,or} fragment");
  return cnf_rec(f, max_clauses);
}

}  // namespace finsem
