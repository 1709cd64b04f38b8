#pragma once

#include <stdexcept>
#include <string>

namespace finsem {

// Malformed textual input (formula, sequent, matrix file, corpus file).
class parse_error : public std::runtime_error {
 public:
  parse_error(const std::string& msg, std::size_t position)
      : std::runtime_error(msg + " (at position " + std::to_string(position) + ")"),
        position_(position) {}
  explicit parse_error(const std::string& msg)
      : std::runtime_error(msg), position_(0) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// Violated precondition or structural invariant of a domain operation.
class domain_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A configurable bound (CNF clause limit, proof-search budget,
// enumeration size cap) was exceeded.
class resource_limit_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace finsem
