#pragma once

#include <stdexcept>
#include <string>

namespace lmriv {

/// Input exceeds the exhaustive-enumeration budget.
class SizeCapError : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// Input outside an operation's mathematical domain (e.g. a tree where a
/// cycle is required).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A proved identity failed to hold; always a bug, never bad input.
class InternalInconsistency : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace lmriv
