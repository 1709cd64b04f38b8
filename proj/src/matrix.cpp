#include "finsem/matrix.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <sstream>

namespace finsem {

Fragment Matrix::fragment() const {
  Fragment f;
  if (table_and) f = f.with(Connective::And);
  if (table_or) f = f.with(Connective::Or);
  if (table_imp) f = f.with(Connective::Implies);
  if (table_not) f = f.with(Connective::Not);
  return f;
}

bool Matrix::has_table(Connective c) const {
  switch (c) {
    case Connective::And: return table_and.has_value();
    case Connective::Or: return table_or.has_value();
    case Connective::Implies: return table_imp.has_value();
    case Connective::Not: return table_not.has_value();
  }
  return false;
}

int Matrix::apply_binary(Connective c, int a, int b) const {
  const std::vector<int>* t = nullptr;
  switch (c) {
    case Connective::And: t = &*table_and; break;
    case Connective::Or: t = &*table_or; break;
    case Connective::Implies: t = &*table_imp; break;
    case Connective::Not: throw domain_error("not is unary");
  }
  return (*t)[static_cast<std::size_t>(a) * size + b];
}

int Matrix::index_of(const std::string& name) const {
  for (int i = 0; i < size; ++i)
    if (element_names[i] == name) return i;
  throw parse_error("unknown element name '" + name + "'");
}

std::vector<std::string> validate_matrix(const Matrix& m) {
  if (m.size < 1) throw domain_error("matrix size must be >= 1");
  if (static_cast<int>(m.element_names.size()) != m.size)
    throw domain_error("element name count does not match size");
  {
    std::set<std::string> seen(m.element_names.begin(), m.element_names.end());
    if (static_cast<int>(seen.size()) != m.size)
      throw domain_error("element names are not distinct");
  }
  for (int d : m.designated)
    if (d < 0 || d >= m.size)
      throw domain_error("designated index " + std::to_string(d) + " out of range");
  auto check_table = [&](const std::optional<std::vector<int>>& t, const char* op, int arity) {
    if (!t) return;
    std::size_t expected = arity == 1 ? static_cast<std::size_t>(m.size)
                                      : static_cast<std::size_t>(m.size) * m.size;
    if (t->size() != expected)
      throw domain_error(std::string("table for '") + op + "' has " +
                         std::to_string(t->size()) + " entries, expected " +
                         std::to_string(expected));
    for (int e : *t)
      if (e < 0 || e >= m.size)
        throw domain_error(std::string("table for '") + op + "' has out-of-range entry " +
                           std::to_string(e));
  };
  check_table(m.table_not, "not", 1);
  check_table(m.table_and, "and", 2);
  check_table(m.table_or, "or", 2);
  check_table(m.table_imp, "imp", 2);
  if (m.fragment().is_empty() && !m.table_not && !m.table_and && !m.table_or && !m.table_imp) {
    // A matrix with no tables is legal: it interprets the empty fragment.
  }
  std::vector<std::string> warnings;
  if (m.designated.empty())
    warnings.push_back("designated set is empty: nothing is valid");
  if (static_cast<int>(m.designated.size()) == m.size)
    warnings.push_back("designated set is the whole universe: everything is valid");
  return warnings;
}

Matrix make_two(Fragment fragment) {
  Matrix m;
  m.size = 2;
  m.element_names = {"0", "1"};
  m.designated = {1};
  if (fragment.contains(Connective::And)) m.table_and = {0, 0, 0, 1};
  if (fragment.contains(Connective::Or)) m.table_or = {0, 1, 1, 1};
  if (fragment.contains(Connective::Implies)) m.table_imp = {1, 1, 0, 1};
  if (fragment.contains(Connective::Not)) m.table_not = {1, 0};
  return m;
}

Matrix make_three(Fragment fragment) {
  if (!fragment.subset_of(Fragment::of({Connective::And, Connective::Not})) ||
      fragment.is_empty())
    throw domain_error("make_three is defined only for non-empty fragments within {and,not}");
  Matrix m;
  m.size = 3;
  m.element_names = {"0", "h", "1"};
  m.designated = {2};
  if (fragment.contains(Connective::And)) {
    m.table_and = std::vector<int>(9);
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b) (*m.table_and)[a * 3 + b] = std::min(a, b);
  }
  if (fragment.contains(Connective::Not)) m.table_not = {2, 0, 0};
  return m;
}

Matrix make_chain(int m_size, Fragment fragment) {
  if (m_size < 1) throw domain_error("chain size must be >= 1");
  Matrix m;
  m.size = m_size;
  m.element_names.reserve(m_size);
  for (int i = 1; i <= m_size; ++i) m.element_names.push_back(std::to_string(i));
  m.designated = {m_size - 1};
  int top = m_size - 1;
  if (fragment.contains(Connective::And)) {
    m.table_and = std::vector<int>(static_cast<std::size_t>(m_size) * m_size);
    for (int a = 0; a < m_size; ++a)
      for (int b = 0; b < m_size; ++b) (*m.table_and)[a * m_size + b] = std::min(a, b);
  }
  if (fragment.contains(Connective::Or)) {
    m.table_or = std::vector<int>(static_cast<std::size_t>(m_size) * m_size);
    for (int a = 0; a < m_size; ++a)
      for (int b = 0; b < m_size; ++b) (*m.table_or)[a * m_size + b] = std::max(a, b);
  }
  if (fragment.contains(Connective::Implies)) {
    m.table_imp = std::vector<int>(static_cast<std::size_t>(m_size) * m_size);
    for (int a = 0; a < m_size; ++a)
      for (int b = 0; b < m_size; ++b)
        (*m.table_imp)[a * m_size + b] = a <= b ? top : b;
  }
  if (fragment.contains(Connective::Not)) {
    // ~a = a -> bottom
    m.table_not = std::vector<int>(m_size);
    for (int a = 0; a < m_size; ++a) (*m.table_not)[a] = a == 0 ? top : 0;
  }
  return m;
}

int evaluate(const Matrix& m, const Valuation& v, const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::Letter: {
      auto it = v.find(f.letter_index());
      if (it == v.end())
        throw domain_error("letter p" + std::to_string(f.letter_index()) +
                           " is not assigned by the valuation");
      return it->second;
    }
    case Formula::Kind::Not:
      if (!m.table_not) throw domain_error("matrix has no table for 'not'");
      return m.apply_unary(evaluate(m, v, f.child()));
    case Formula::Kind::And:
      if (!m.table_and) throw domain_error("matrix has no table for 'and'");
      return m.apply_binary(Connective::And, evaluate(m, v, f.left()),
                            evaluate(m, v, f.right()));
    case Formula::Kind::Or:
      if (!m.table_or) throw domain_error("matrix has no table for 'or'");
      return m.apply_binary(Connective::Or, evaluate(m, v, f.left()),
                            evaluate(m, v, f.right()));
    case Formula::Kind::Implies:
      if (!m.table_imp) throw domain_error("matrix has no table for 'imp'");
      return m.apply_binary(Connective::Implies, evaluate(m, v, f.left()),
                            evaluate(m, v, f.right()));
  }
  throw domain_error("malformed formula node");
}

ConsequenceResult consequence(const Matrix& m, const std::vector<Formula>& premises,
                              const Formula& conclusion) {
  auto conclusion_letters = letters_of(conclusion);
  std::set<int> letter_set(conclusion_letters.begin(), conclusion_letters.end());
  for (const Formula& p : premises) {
    auto ls = letters_of(p);
    letter_set.insert(ls.begin(), ls.end());
  }
  std::vector<int> letters(letter_set.begin(), letter_set.end());

  Valuation v;
  for (int p : letters) v[p] = 0;
  for (;;) {
    bool all_premises_designated = true;
    for (const Formula& p : premises)
      if (!m.is_designated(evaluate(m, v, p))) {
        all_premises_designated = false;
        break;
      }
    if (all_premises_designated && !m.is_designated(evaluate(m, v, conclusion)))
      return {false, v};
    // odometer: last letter fastest, so valuations come lexicographically
    int k = static_cast<int>(letters.size()) - 1;
    for (; k >= 0; --k) {
      int& cell = v[letters[k]];
      if (cell + 1 < m.size) {
        ++cell;
        break;
      }
      cell = 0;
    }
    if (k < 0) break;
  }
  return {true, {}};
}

ConsequenceResult is_valid(const Matrix& m, const Formula& f) {
  return consequence(m, {}, f);
}

bool is_subalgebra(const Matrix& m, const std::set<int>& subset) {
  if (subset.empty()) throw domain_error("subalgebra universe must be non-empty");
  for (int a : subset)
    if (a < 0 || a >= m.size) throw domain_error("subset index out of range");
  if (m.table_not)
    for (int a : subset)
      if (!subset.count(m.apply_unary(a))) return false;
  for (Connective c : {Connective::And, Connective::Or, Connective::Implies})
    if (m.has_table(c))
      for (int a : subset)
        for (int b : subset)
          if (!subset.count(m.apply_binary(c, a, b))) return false;
  return true;
}

namespace {

bool compatible(const Matrix& m, const std::vector<int>& block_of) {
  auto same = [&](int a, int b) { return block_of[a] == block_of[b]; };
  for (int a = 0; a < m.size; ++a)
    for (int b = a + 1; b < m.size; ++b) {
      if (!same(a, b)) continue;
      if (m.table_not && !same(m.apply_unary(a), m.apply_unary(b))) return false;
      for (Connective c : {Connective::And, Connective::Or, Connective::Implies}) {
        if (!m.has_table(c)) continue;
        for (int x = 0; x < m.size; ++x) {
          if (!same(m.apply_binary(c, a, x), m.apply_binary(c, b, x))) return false;
          if (!same(m.apply_binary(c, x, a), m.apply_binary(c, x, b))) return false;
        }
      }
    }
  return true;
}

CongruenceRelation to_relation(const std::vector<int>& block_of, int m) {
  int nblocks = *std::max_element(block_of.begin(), block_of.end()) + 1;
  CongruenceRelation rel;
  rel.blocks.assign(nblocks, {});
  for (int a = 0; a < m; ++a) rel.blocks[block_of[a]].push_back(a);
  // restricted-growth numbering already orders blocks by least element
  return rel;
}

}  // namespace

std::vector<CongruenceRelation> congruences(const Matrix& m) {
  if (m.size > kCongruenceSizeLimit)
    throw resource_limit_error("congruence enumeration is limited to size <= " +
                               std::to_string(kCongruenceSizeLimit));
  std::vector<CongruenceRelation> out;
  std::vector<int> block_of(m.size, 0);
  // enumerate restricted-growth strings
  std::function<void(int, int)> rec = [&](int pos, int max_used) {
    if (pos == m.size) {
      if (compatible(m, block_of)) out.push_back(to_relation(block_of, m.size));
      return;
    }
    for (int b = 0; b <= max_used + 1; ++b) {
      block_of[pos] = b;
      rec(pos + 1, std::max(max_used, b));
    }
  };
  if (m.size > 0) {
    block_of[0] = 0;
    rec(1, 0);
  }
  return out;
}

// ---- file format ---------------------------------------------------------

namespace {

std::vector<std::string> tokenize_line(const std::string& line) {
  std::string stripped = line.substr(0, line.find('#'));
  std::istringstream ss(stripped);
  std::vector<std::string> toks;
  std::string t;
  while (ss >> t) toks.push_back(t);
  return toks;
}

}  // namespace

Matrix read_matrix(std::istream& in) {
  Matrix m;
  std::string line;
  std::size_t lineno = 0;
  bool have_size = false;
  auto next_tokens = [&](std::vector<std::string>& toks) -> bool {
    while (std::getline(in, line)) {
      ++lineno;
      toks = tokenize_line(line);
      if (!toks.empty()) return true;
    }
    return false;
  };
  std::vector<std::string> toks;
  while (next_tokens(toks)) {
    const std::string& key = toks[0];
    if (key == "size") {
      if (toks.size() != 2) throw parse_error("size expects one integer", lineno);
      m.size = std::stoi(toks[1]);
      if (m.size < 1) throw parse_error("size must be >= 1", lineno);
      have_size = true;
    } else if (key == "elements") {
      if (!have_size) throw parse_error("elements before size", lineno);
      if (static_cast<int>(toks.size()) != m.size + 1)
        throw parse_error("expected " + std::to_string(m.size) + " element names", lineno);
      m.element_names.assign(toks.begin() + 1, toks.end());
    } else if (key == "designated") {
      for (std::size_t i = 1; i < toks.size(); ++i) m.designated.insert(m.index_of(toks[i]));
    } else if (key == "op") {
      if (toks.size() != 3) throw parse_error("op expects a name and an arity", lineno);
      const std::string& op = toks[1];
      int arity = std::stoi(toks[2]);
      std::size_t cells = arity == 1 ? static_cast<std::size_t>(m.size)
                                     : static_cast<std::size_t>(m.size) * m.size;
      std::vector<int> table(cells, -1);
      for (std::size_t c = 0; c < cells; ++c) {
        std::vector<std::string> row;
        if (!next_tokens(row))
          throw parse_error("unexpected end of file inside op " + op, lineno);
        std::size_t expected = arity == 1 ? 3u : 4u;  // a [b] -> c
        if (row.size() != expected || row[expected - 2] != "->")
          throw parse_error("malformed table row for op " + op, lineno);
        int result = m.index_of(row.back());
        std::size_t cell;
        if (arity == 1) {
          cell = static_cast<std::size_t>(m.index_of(row[0]));
        } else {
          cell = static_cast<std::size_t>(m.index_of(row[0])) * m.size + m.index_of(row[1]);
        }
        if (table[cell] != -1) throw parse_error("duplicate table cell for op " + op, lineno);
        table[cell] = result;
      }
      if (op == "not" && arity == 1) m.table_not = std::move(table);
      else if (op == "and" && arity == 2) m.table_and = std::move(table);
      else if (op == "or" && arity == 2) m.table_or = std::move(table);
      else if (op == "imp" && arity == 2) m.table_imp = std::move(table);
      else throw parse_error("unknown op/arity: " + op + "/" + std::to_string(arity), lineno);
    } else {
      throw parse_error("unknown directive '" + key + "'", lineno);
    }
  }
  if (!have_size) throw parse_error("matrix file has no size directive");
  validate_matrix(m);
  return m;
}

Matrix read_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw parse_error("cannot open matrix file '" + path + "'");
  return read_matrix(in);
}

std::string write_matrix(const Matrix& m) {
  std::ostringstream out;
  out << "size " << m.size << "\n";
  out << "elements";
  for (const auto& n : m.element_names) out << ' ' << n;
  out << "\ndesignated";
  for (int d : m.designated) out << ' ' << m.element_names[d];
  out << "\n";
  if (m.table_not) {
    out << "op not 1\n";
    for (int a = 0; a < m.size; ++a)
      out << m.element_names[a] << " -> " << m.element_names[m.apply_unary(a)] << "\n";
  }
  auto write_binary = [&](const char* name, Connective c) {
    if (!m.has_table(c)) return;
    out << "op " << name << " 2\n";
    for (int a = 0; a < m.size; ++a)
      for (int b = 0; b < m.size; ++b)
        out << m.element_names[a] << ' ' << m.element_names[b] << " -> "
            << m.element_names[m.apply_binary(c, a, b)] << "\n";
  };
  write_binary("and", Connective::And);
  write_binary("or", Connective::Or);
  write_binary("imp", Connective::Implies);
  return out.str();
}

std::string render_valuation(const Valuation& v, const Matrix& m) {
  std::string out;
  for (const auto& [letter, value] : v) {
    if (!out.empty()) out += ',';
    out += 'p';
    out += std::to_string(letter);
    out += '=';
    out += m.element_names[value];
  }
  return out;
}

}  // namespace finsem
