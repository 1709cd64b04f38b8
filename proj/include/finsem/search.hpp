#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <map>

#include "finsem/oracle.hpp"

namespace finsem {

struct CorpusEntry {
  Sequent sequent;
  bool derivable = false;
  std::string note;
};

struct Corpus {
  std::vector<CorpusEntry> entries;
};

// Paper-derived entries (alpha/beta families, double negation,
// distributivity, Glivenko-style pairs) plus oracle-labeled random
// sequents, restricted to the fragment.  Labels always come from
// prove_ipc, never from hand-written constants.
Corpus standard_corpus(Fragment fragment);

// One entry per line: "<sequent> :: derivable|not-derivable :: <note>".
Corpus load_corpus(std::istream& in, bool validate_with_oracle = true);
Corpus load_corpus_file(const std::string& path, bool validate_with_oracle = true);
std::string render_corpus(const Corpus& corpus);

enum class FailDirection { Unsound, Incomplete };

struct CandidateOutcome {
  bool pass = true;
  std::size_t entry = 0;  // index into the corpus when !pass
  FailDirection direction = FailDirection::Unsound;
};

// Checks condition "derivable iff matrix consequence" entry-wise;
// cheapest entries (fewest letters) are tried first.
CandidateOutcome test_candidate(const Matrix& m, const Corpus& corpus);

// Encoding of (designated set, tables) that is lexicographically least
// over all element permutations; equal encodings = isomorphic matrices.
std::vector<int> matrix_encoding(const Matrix& m);
std::vector<int> canonical_encoding(const Matrix& m);
bool is_canonical(const Matrix& m);

inline constexpr std::uint64_t kDefaultRawCandidateLimit = 300'000'000;

// Number of (designated set, tables) combinations of size m for the
// fragment, before isomorphism pruning.
std::uint64_t raw_candidate_count(Fragment fragment, int m);

// Calls fn for every canonical size-m matrix over the fragment's
// signature, in deterministic (encoding-ascending) order.
void enumerate_matrices(Fragment fragment, int m,
                        const std::function<void(const Matrix&)>& fn,
                        std::uint64_t raw_limit = kDefaultRawCandidateLimit);

struct SizeStats {
  int size = 0;
  std::uint64_t raw_count = 0;
  std::uint64_t canonical_count = 0;
  std::uint64_t survivor_count = 0;
  // (corpus entry, direction) -> rejected candidate count
  std::map<std::pair<std::size_t, FailDirection>, std::uint64_t> rejections;
};

struct SearchOutcome {
  Fragment fragment;
  int max_size = 0;
  std::vector<Matrix> survivors;  // sorted by (size, canonical encoding)
  std::vector<SizeStats> per_size;
};

// Tests every canonical candidate of sizes 1..max_size against the
// corpus.  The candidate stream may be partitioned across workers; the
// outcome is schedule-independent.
SearchOutcome search(Fragment fragment, int max_size, const Corpus& corpus,
                     int workers = 1,
                     std::uint64_t raw_limit = kDefaultRawCandidateLimit);

std::string render_outcome(const SearchOutcome& outcome, const Corpus& corpus,
                           bool porcelain);

}  // namespace finsem
