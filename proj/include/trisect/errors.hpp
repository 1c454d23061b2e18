#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace trisect {

using Integer = mpz_class;
using IntVector = std::vector<Integer>;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed text input. Line and column are 1-based; 0 means unknown.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line = 0, std::size_t column = 0);

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  const std::string& reason() const { return reason_; }

 private:
  std::string reason_;
  std::size_t line_;
  std::size_t column_;
};

// Input that parses but violates a domain invariant.
class ValidationError : public Error {
 public:
  using Error::Error;
};

class DimensionError : public Error {
 public:
  using Error::Error;
};

// A Heegaard pair whose stacked homology matrix has torsion in its cokernel.
class NotHomologicallyStandard : public ValidationError {
 public:
  explicit NotHomologicallyStandard(std::vector<Integer> divisors, const std::string& context = {});

  const std::vector<Integer>& divisors() const { return divisors_; }

 private:
  std::vector<Integer> divisors_;
};

class UnsupportedError : public Error {
 public:
  using Error::Error;
};

// An enumeration whose estimated cost exceeds the configured cap.
class RefusedError : public Error {
 public:
  RefusedError(Integer estimate, Integer cap);

  const Integer& estimate() const { return estimate_; }
  const Integer& cap() const { return cap_; }

 private:
  Integer estimate_;
  Integer cap_;
};

std::string format_divisors(const std::vector<Integer>& divisors);

}  // namespace trisect
