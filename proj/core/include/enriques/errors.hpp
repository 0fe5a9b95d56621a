#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "enriques/arith.hpp"

namespace enriques {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input matrix or graph: non-square, non-symmetric, bad edge data.
class StructuralError : public Error {
 public:
  using Error::Error;
};

// Input outside the domain of an operation (zero vector, v^2 < 0, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

class LookupError : public Error {
 public:
  using Error::Error;
};

// Data that contradicts a lattice-theoretic identity (non-square index, ...).
class InconsistencyError : public Error {
 public:
  using Error::Error;
};

class NoOverlatticeError : public Error {
 public:
  using Error::Error;
};

class AmbiguityError : public Error {
 public:
  AmbiguityError(const std::string& what, std::vector<std::string> candidates)
      : Error(what), candidates_(std::move(candidates)) {}
  const std::vector<std::string>& candidates() const { return candidates_; }

 private:
  std::vector<std::string> candidates_;
};

class ClassificationError : public Error {
 public:
  ClassificationError(const std::string& what, IntVector witness)
      : Error(what), witness_(std::move(witness)) {}
  // Vector (in subset coordinates) with nonnegative self-pairing.
  const IntVector& witness() const { return witness_; }

 private:
  IntVector witness_;
};

class BoundViolation : public Error {
 public:
  using Error::Error;
};

class UnsupportedError : public Error {
 public:
  using Error::Error;
};

class RefusalError : public Error {
 public:
  using Error::Error;
};

// Signals a bug: a proven identity failed or a watchdog fired.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace enriques
