#pragma once

#include <stdexcept>
#include <string>

namespace bessum {

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// A lower hypergeometric parameter sits on a pole of the plain series.
class PoleError : public DomainError {
 public:
  explicit PoleError(const std::string& what) : DomainError(what) {}
};

}  // namespace bessum
