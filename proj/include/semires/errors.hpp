#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace semires {

// Base of everything the library throws on bad input or a failed internal check.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class OverflowError : public Error {
 public:
  using Error::Error;
};

// --- semigroup ---
class GcdNotOne : public Error {
 public:
  using Error::Error;
};

class ZeroOrNegativeGenerator : public Error {
 public:
  using Error::Error;
};

class NonMinimalGenerator : public Error {
 public:
  NonMinimalGenerator(std::size_t index, const std::string& what)
      : Error(what), index_(index) {}
  /// 0-based position of the redundant generator in the caller's tuple.
  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

class NotInSemigroup : public Error {
 public:
  using Error::Error;
};

// --- polynomials and matrices ---
class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class DegreeMismatch : public Error {
 public:
  using Error::Error;
};

class NotSkewSymmetric : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

// --- presentation / resolution ---
class NotInClass : public Error {
 public:
  using Error::Error;
};

class InvalidParameters : public Error {
 public:
  using Error::Error;
};

class UnsupportedEmbeddingDimension : public Error {
 public:
  using Error::Error;
};

class UnsupportedClass : public Error {
 public:
  using Error::Error;
};

class NotHomogeneous : public Error {
 public:
  using Error::Error;
};

class VerificationFailure : public Error {
 public:
  using Error::Error;
};

// --- invariants / indispensability ---
class ConsistencyFailure : public Error {
 public:
  using Error::Error;
};

class CrossValidationMismatch : public Error {
 public:
  using Error::Error;
};

}  // namespace semires
