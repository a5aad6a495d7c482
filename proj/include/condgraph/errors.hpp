#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace condgraph {

/// A precondition of a mathematical operation does not hold.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Raised by inverse() on a singular matrix.
class SingularMatrixError : public DomainError {
 public:
  explicit SingularMatrixError(int nullity)
      : DomainError("matrix is singular (nullity " + std::to_string(nullity) + ")"),
        nullity_(nullity) {}
  int nullity() const { return nullity_; }

 private:
  int nullity_;
};

class Graph6Error : public std::runtime_error {
 public:
  Graph6Error(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " at byte " + std::to_string(offset)), offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

/// Internal contradiction, e.g. a nullity signature outside the selection
/// rule table. Reaching this is a bug.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace condgraph
