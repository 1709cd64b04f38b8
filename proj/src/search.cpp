#include "finsem/search.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>
#include <sstream>
#include <thread>

#include "finsem/random_gen.hpp"

namespace finsem {

namespace {

std::vector<Connective> connective_order(Fragment f) {
  std::vector<Connective> out;
  for (Connective c : {Connective::And, Connective::Or, Connective::Implies, Connective::Not})
    if (f.contains(c)) out.push_back(c);
  return out;
}

std::size_t cells_for(Connective c, int m) {
  return c == Connective::Not ? static_cast<std::size_t>(m)
                              : static_cast<std::size_t>(m) * m;
}

const std::vector<int>& table_of(const Matrix& mx, Connective c) {
  switch (c) {
    case Connective::And: return *mx.table_and;
    case Connective::Or: return *mx.table_or;
    case Connective::Implies: return *mx.table_imp;
    case Connective::Not: return *mx.table_not;
  }
  throw domain_error("bad connective");
}

std::vector<std::vector<int>> permutations_of(int m) {
  std::vector<int> p(m);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> out;
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

// Encoding of the matrix relabeled by perm (element a becomes perm[a]).
std::vector<int> encoding_under(const Matrix& mx, const std::vector<int>& perm) {
  int m = mx.size;
  std::vector<int> inv(m);
  for (int a = 0; a < m; ++a) inv[perm[a]] = a;
  std::vector<int> enc;
  enc.reserve(static_cast<std::size_t>(m) +
              4u * static_cast<std::size_t>(m) * m);
  for (int e = 0; e < m; ++e) enc.push_back(mx.is_designated(inv[e]) ? 1 : 0);
  for (Connective c : connective_order(mx.fragment())) {
    if (c == Connective::Not) {
      for (int e = 0; e < m; ++e) enc.push_back(perm[mx.apply_unary(inv[e])]);
    } else {
      for (int e = 0; e < m; ++e)
        for (int f = 0; f < m; ++f)
          enc.push_back(perm[mx.apply_binary(c, inv[e], inv[f])]);
    }
  }
  return enc;
}

Matrix decode_candidate(Fragment fragment, int m, std::uint64_t idx) {
  Matrix mx;
  mx.size = m;
  mx.element_names.reserve(m);
  for (int i = 0; i < m; ++i) mx.element_names.push_back(std::to_string(i));
  std::uint64_t dmask = idx & ((1ull << m) - 1);
  idx >>= m;
  for (int i = 0; i < m; ++i)
    if (dmask & (1ull << i)) mx.designated.insert(i);
  for (Connective c : connective_order(fragment)) {
    std::size_t cells = cells_for(c, m);
    std::vector<int> table(cells);
    for (std::size_t k = 0; k < cells; ++k) {
      table[k] = static_cast<int>(idx % m);
      idx /= m;
    }
    switch (c) {
      case Connective::And: mx.table_and = std::move(table); break;
      case Connective::Or: mx.table_or = std::move(table); break;
      case Connective::Implies: mx.table_imp = std::move(table); break;
      case Connective::Not: mx.table_not = std::move(table); break;
    }
  }
  return mx;
}

std::vector<std::size_t> entry_order_by_cost(const Corpus& corpus) {
  auto cost = [](const Sequent& s) {
    auto conclusion_letters = letters_of(s.conclusion);
    std::set<int> letters(conclusion_letters.begin(), conclusion_letters.end());
    for (const Formula& p : s.premises) {
      auto ls = letters_of(p);
      letters.insert(ls.begin(), ls.end());
    }
    return std::pair<std::size_t, std::size_t>(letters.size(), s.premises.size());
  };
  std::vector<std::size_t> order(corpus.entries.size());
  std::iota(order.begin(), order.end(), 0u);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return cost(corpus.entries[a].sequent) < cost(corpus.entries[b].sequent);
  });
  return order;
}

}  // namespace

std::vector<int> matrix_encoding(const Matrix& mx) {
  std::vector<int> identity(mx.size);
  std::iota(identity.begin(), identity.end(), 0);
  return encoding_under(mx, identity);
}

std::vector<int> canonical_encoding(const Matrix& mx) {
  auto perms = permutations_of(mx.size);
  std::vector<int> best = encoding_under(mx, perms[0]);
  for (std::size_t i = 1; i < perms.size(); ++i) {
    std::vector<int> enc = encoding_under(mx, perms[i]);
    if (enc < best) best = std::move(enc);
  }
  return best;
}

bool is_canonical(const Matrix& mx) {
  return matrix_encoding(mx) == canonical_encoding(mx);
}

std::uint64_t raw_candidate_count(Fragment fragment, int m) {
  if (m < 1) throw domain_error("matrix size must be >= 1");
  long double total = std::pow(2.0L, m);
  for (Connective c : connective_order(fragment))
    total *= std::pow(static_cast<long double>(m),
                      static_cast<long double>(cells_for(c, m)));
  if (total > static_cast<long double>(UINT64_MAX)) return UINT64_MAX;
  return static_cast<std::uint64_t>(total);
}

void enumerate_matrices(Fragment fragment, int m,
                        const std::function<void(const Matrix&)>& fn,
                        std::uint64_t raw_limit) {
  std::uint64_t total = raw_candidate_count(fragment, m);
  if (total > raw_limit)
    throw resource_limit_error("candidate space of size " + std::to_string(total) +
                               " exceeds the enumeration limit " +
                               std::to_string(raw_limit));
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    Matrix mx = decode_candidate(fragment, m, idx);
    if (is_canonical(mx)) fn(mx);
  }
}

CandidateOutcome test_candidate(const Matrix& mx, const Corpus& corpus) {
  std::vector<std::size_t> order = entry_order_by_cost(corpus);
  Fragment mf = mx.fragment();
  for (std::size_t e : order) {
    const CorpusEntry& entry = corpus.entries[e];
    if (!entry.sequent.fragment().subset_of(mf))
      throw domain_error("corpus entry '" + print_sequent(entry.sequent) +
                         "' is outside the matrix fragment");
    bool holds = consequence(mx, entry.sequent.premises, entry.sequent.conclusion).holds;
    if (entry.derivable && !holds) return {false, e, FailDirection::Unsound};
    if (!entry.derivable && holds) return {false, e, FailDirection::Incomplete};
  }
  return {};
}

SearchOutcome search(Fragment fragment, int max_size, const Corpus& corpus,
                     int workers, std::uint64_t raw_limit) {
  if (workers < 1) throw domain_error("worker count must be >= 1");
  SearchOutcome outcome;
  outcome.fragment = fragment;
  outcome.max_size = max_size;

  std::vector<std::size_t> order = entry_order_by_cost(corpus);
  using Survivor = std::pair<std::vector<int>, Matrix>;

  for (int m = 1; m <= max_size; ++m) {
    std::uint64_t total = raw_candidate_count(fragment, m);
    if (total > raw_limit)
      throw resource_limit_error("candidate space of size " + std::to_string(total) +
                                 " at m=" + std::to_string(m) +
                                 " exceeds the enumeration limit " +
                                 std::to_string(raw_limit));
    SizeStats stats;
    stats.size = m;
    stats.raw_count = total;

    auto perms = permutations_of(m);
    std::vector<SizeStats> worker_stats(workers);
    std::vector<std::vector<Survivor>> worker_survivors(workers);

    auto run = [&](int w) {
      SizeStats& st = worker_stats[w];
      for (std::uint64_t idx = w; idx < total; idx += static_cast<std::uint64_t>(workers)) {
        Matrix mx = decode_candidate(fragment, m, idx);
        std::vector<int> enc = encoding_under(mx, perms[0]);
        bool canonical = true;
        for (std::size_t p = 1; p < perms.size() && canonical; ++p)
          if (encoding_under(mx, perms[p]) < enc) canonical = false;
        if (!canonical) continue;
        ++st.canonical_count;
        CandidateOutcome res;
        bool pass = true;
        for (std::size_t e : order) {
          const CorpusEntry& entry = corpus.entries[e];
          bool holds = consequence(mx, entry.sequent.premises, entry.sequent.conclusion).holds;
          if (entry.derivable != holds) {
            res = {false, e,
                   entry.derivable ? FailDirection::Unsound : FailDirection::Incomplete};
            pass = false;
            break;
          }
        }
        if (pass) {
          ++st.survivor_count;
          worker_survivors[w].emplace_back(std::move(enc), std::move(mx));
        } else {
          ++st.rejections[{res.entry, res.direction}];
        }
      }
    };

    // fragment mismatch should surface as an exception, not a crash in a thread
    for (const CorpusEntry& entry : corpus.entries)
      if (!entry.sequent.fragment().subset_of(fragment))
        throw domain_error("corpus entry '" + print_sequent(entry.sequent) +
                           "' is outside the search fragment");

    if (workers == 1) {
      run(0);
    } else {
      std::vector<std::thread> threads;
      threads.reserve(workers);
      for (int w = 0; w < workers; ++w) threads.emplace_back(run, w);
      for (auto& t : threads) t.join();
    }

    std::vector<Survivor> survivors;
    for (int w = 0; w < workers; ++w) {
      SizeStats& st = worker_stats[w];
      stats.canonical_count += st.canonical_count;
      stats.survivor_count += st.survivor_count;
      for (const auto& [key, count] : st.rejections) stats.rejections[key] += count;
      for (auto& s : worker_survivors[w]) survivors.push_back(std::move(s));
    }
    std::sort(survivors.begin(), survivors.end(),
              [](const Survivor& a, const Survivor& b) { return a.first < b.first; });
    for (auto& s : survivors) outcome.survivors.push_back(std::move(s.second));
    outcome.per_size.push_back(std::move(stats));
  }
  return outcome;
}

// ---- corpus --------------------------------------------------------------

namespace {

void add_entry(Corpus& c, const std::string& sequent_text, std::string note) {
  CorpusEntry e;
  e.sequent = parse_sequent(sequent_text);
  e.derivable = prove_ipc(e.sequent).derivable;
  e.note = std::move(note);
  c.entries.push_back(std::move(e));
}

void add_entry(Corpus& c, Sequent s, std::string note) {
  CorpusEntry e;
  e.sequent = std::move(s);
  e.derivable = prove_ipc(e.sequent).derivable;
  e.note = std::move(note);
  c.entries.push_back(std::move(e));
}

}  // namespace

Corpus standard_corpus(Fragment f) {
  Corpus c;
  bool has_and = f.contains(Connective::And);
  bool has_or = f.contains(Connective::Or);
  bool has_imp = f.contains(Connective::Implies);
  bool has_not = f.contains(Connective::Not);

  add_entry(c, "p1 |- p1", "identity");
  add_entry(c, "p1 |- p2", "unrelated letter");
  add_entry(c, "p1 ; p2 |- p1", "projection");
  add_entry(c, "|- p1", "no letter is a theorem");

  if (has_and) {
    add_entry(c, "p1 & p2 |- p1", "and elimination");
    add_entry(c, "p1 & p2 |- p2 & p1", "and commutation");
    add_entry(c, "p1 |- p1 & p1", "and idempotence");
    add_entry(c, "p1 ; p2 |- p1 & p2", "and introduction");
    add_entry(c, "p1 & p2 |- p3", "missing letter");
  }
  if (has_or) {
    add_entry(c, "p1 |- p1 | p2", "or introduction");
    add_entry(c, "p1 | p2 |- p2 | p1", "or commutation");
    add_entry(c, "p1 | p1 |- p1", "or idempotence");
    add_entry(c, "p1 | p2 |- p1", "no projection out of or");
  }
  if (has_and && has_or) {
    add_entry(c, "p1 & (p2 | p3) |- (p1 & p2) | (p1 & p3)", "distributivity");
    add_entry(c, "(p1 & p2) | (p1 & p3) |- p1 & (p2 | p3)", "distributivity converse");
    add_entry(c, "p1 |- p1 & (p1 | p2)", "absorption");
  }
  if (has_not) {
    add_entry(c, "p1 ; ~p1 |- p2", "ex contradictione");
    add_entry(c, "~~p1 |- p1", "double negation elimination");
    add_entry(c, "p1 |- ~~p1", "double negation introduction");
    add_entry(c, "~p1 |- ~~~p1", "triple negation");
    add_entry(c, "~~~p1 |- ~p1", "triple negation converse");
    add_entry(c, "~p1 |- p2", "negation alone proves nothing new");
  }
  if (has_and && has_not) {
    add_entry(c, "|- ~(p1 & ~p1)", "non-contradiction");
    add_entry(c, "~p1 ; p2 |- ~(p1 & p2)", "negation through and");
    add_entry(c, "~(p1 & p2) ; p1 |- ~p2", "not generally invertible");
    add_entry(c, "~~(p1 & p2) |- ~~p1", "double negation distributes over and");
  }
  if (has_or && has_not) {
    for (int n = 1; n <= 3; ++n) {
      add_entry(c, Sequent{{}, gen_alpha_orneg(n)},
                "orneg alpha " + std::to_string(n));
      for (int i = 1; i <= n + 1; ++i)
        for (int j = i + 1; j <= n + 1; ++j)
          add_entry(c, Sequent{{}, substitute(gen_alpha_orneg(n), i, j)},
                    "orneg beta " + std::to_string(n) + " pair " +
                        std::to_string(i) + "," + std::to_string(j));
    }
    add_entry(c, "|- ~~(~p1 | p1)", "double-negated excluded middle");
    add_entry(c, "|- p1 | ~p1", "excluded middle fails");
  }
  if (has_imp) {
    for (int n = 1; n <= 3; ++n) {
      add_entry(c, Sequent{{}, gen_alpha_arrow(n)}, "arrow alpha " + std::to_string(n));
      for (int i = 1; i <= n + 1; ++i)
        for (int j = i + 1; j <= n + 1; ++j)
          add_entry(c, Sequent{{}, substitute(gen_alpha_arrow(n), i, j)},
                    "arrow beta " + std::to_string(n) + " pair " +
                        std::to_string(i) + "," + std::to_string(j));
    }
    add_entry(c, "|- p1 -> p1", "identity theorem");
    add_entry(c, "p1 ; p1 -> p2 |- p2", "modus ponens");
    add_entry(c, "p1 -> p2 ; p2 -> p3 |- p1 -> p3", "transitivity");
    add_entry(c, "|- ((p1 -> p2) -> p1) -> p1", "Peirce fails");
  }

  // Oracle-labeled random sequents; fixed seed per fragment.
  if (!f.is_empty()) {
    std::mt19937 rng(1234u + f.bits());
    for (int k = 0; k < 16; ++k)
      add_entry(c, random_sequent(rng, f, 2, 3, 2), "random " + std::to_string(k));
  }
  return c;
}

Corpus load_corpus(std::istream& in, bool validate_with_oracle) {
  Corpus c;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string stripped = line.substr(0, line.find('#'));
    if (stripped.find_first_not_of(" \t") == std::string::npos) continue;
    std::size_t s1 = stripped.find("::");
    if (s1 == std::string::npos) throw parse_error("corpus line has no '::'", lineno);
    std::size_t s2 = stripped.find("::", s1 + 2);
    std::string label = stripped.substr(s1 + 2, s2 == std::string::npos
                                                    ? std::string::npos
                                                    : s2 - s1 - 2);
    auto trim = [](std::string s) {
      std::size_t a = s.find_first_not_of(" \t");
      std::size_t b = s.find_last_not_of(" \t");
      return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
    };
    CorpusEntry e;
    e.sequent = parse_sequent(stripped.substr(0, s1));
    label = trim(label);
    if (label == "derivable") e.derivable = true;
    else if (label == "not-derivable") e.derivable = false;
    else throw parse_error("corpus label must be derivable|not-derivable", lineno);
    if (s2 != std::string::npos) e.note = trim(stripped.substr(s2 + 2));
    if (validate_with_oracle && prove_ipc(e.sequent).derivable != e.derivable)
      throw parse_error("corpus label disagrees with the oracle", lineno);
    c.entries.push_back(std::move(e));
  }
  return c;
}

Corpus load_corpus_file(const std::string& path, bool validate_with_oracle) {
  std::ifstream in(path);
  if (!in) throw parse_error("cannot open corpus file '" + path + "'");
  return load_corpus(in, validate_with_oracle);
}

std::string render_corpus(const Corpus& corpus) {
  std::ostringstream out;
  for (const CorpusEntry& e : corpus.entries) {
    out << print_sequent(e.sequent) << " :: "
        << (e.derivable ? "derivable" : "not-derivable");
    if (!e.note.empty()) out << " :: " << e.note;
    out << "\n";
  }
  return out.str();
}

std::string render_outcome(const SearchOutcome& outcome, const Corpus& corpus,
                           bool porcelain) {
  std::ostringstream out;
  out << "fragment: " << outcome.fragment.to_string() << "\n";
  out << "max-size: " << outcome.max_size << "\n";
  for (const SizeStats& st : outcome.per_size) {
    out << "size: " << st.size << " raw: " << st.raw_count
        << " canonical: " << st.canonical_count
        << " survivors: " << st.survivor_count << "\n";
    for (const auto& [key, count] : st.rejections) {
      out << "rejection: size=" << st.size << " entry=" << key.first << " direction="
          << (key.second == FailDirection::Unsound ? "unsound" : "incomplete")
          << " count=" << count;
      if (!porcelain)
        out << "  # " << print_sequent(corpus.entries[key.first].sequent);
      out << "\n";
    }
  }
  out << "survivor-count: " << outcome.survivors.size() << "\n";
  for (const Matrix& s : outcome.survivors) {
    if (porcelain) {
      out << "survivor: size=" << s.size << " encoding=";
      std::vector<int> enc = matrix_encoding(s);
      for (std::size_t i = 0; i < enc.size(); ++i) {
        if (i) out << ',';
        out << enc[i];
      }
      out << "\n";
    } else {
      out << "survivor:\n" << write_matrix(s) << "\n";
    }
  }
  return out.str();
}

}  // namespace finsem
