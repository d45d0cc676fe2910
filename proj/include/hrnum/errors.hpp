#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "hrnum/lattice.hpp"

namespace hrnum {

enum class ErrorKind {
  InvalidCone,
  RankMismatch,
  Overflow,
  SearchBound,
  Hypothesis,
  Support,
  Data,
  Numeric,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

class OverflowError : public Error {
 public:
  explicit OverflowError(const std::string& what) : Error(ErrorKind::Overflow, what) {}
};

// Raised when a polynomial has exponents outside the cone. Carries the
// offending exponents, sorted.
class SupportError : public Error {
 public:
  explicit SupportError(std::vector<LatticePoint> offending);
  const std::vector<LatticePoint>& offending() const { return offending_; }

 private:
  std::vector<LatticePoint> offending_;
};

void require_rank(std::size_t expected, const LatticePoint& p, const char* what);

}  // namespace hrnum
