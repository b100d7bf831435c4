#ifndef PVALENT_ERRORS_HPP
#define PVALENT_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pvalent {

/// A mathematical precondition of an operation is violated (p <= m, an
/// inadmissible delta, a missing hypothesis). Maps to CLI exit code 3.
class DomainError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// Arguments that are malformed independently of the mathematics
/// (grid too small, unknown suite name, bad instance spec).
class InvalidArgument : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// A coefficient phase does not satisfy the alignment hypothesis.
class AlignmentError : public DomainError {
public:
  AlignmentError(const std::string& what, std::size_t k) : DomainError(what), index_(k) {}

  /// Perturbation index k of the first offending coefficient a_{k+p}.
  std::size_t index() const noexcept { return index_; }

private:
  std::size_t index_;
};

/// Input document could not be parsed. Maps to CLI exit code 2.
class ParseError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

}  // namespace pvalent

#endif
