#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "semires/semigroup.hpp"

namespace semires {

/// Exponent vector of a monomial in K[x_1, ..., x_k].
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<Int> exponents);

  static Monomial one(std::size_t nvars) { return Monomial(std::vector<Int>(nvars, 0)); }
  /// x_{index+1}^exponent (index is 0-based).
  static Monomial variable(std::size_t nvars, std::size_t index, Int exponent = 1);

  std::size_t nvars() const noexcept { return exps_.size(); }
  Int operator[](std::size_t i) const { return exps_.at(i); }
  std::span<const Int> exponents() const noexcept { return exps_; }
  bool is_one() const noexcept;

  Monomial operator*(const Monomial& other) const;

  auto operator<=>(const Monomial&) const = default;

 private:
  std::vector<Int> exps_;
};

/// The S-grading of the ambient ring: deg x_i = weights[i].
class Grading {
 public:
  explicit Grading(std::vector<Int> weights) : weights_(std::move(weights)) {}

  std::size_t nvars() const noexcept { return weights_.size(); }
  std::span<const Int> weights() const noexcept { return weights_; }
  Int sdegree(const Monomial& m) const;

  friend bool operator==(const Grading& a, const Grading& b) { return a.weights_ == b.weights_; }

 private:
  std::vector<Int> weights_;
};

using GradingPtr = std::shared_ptr<const Grading>;

GradingPtr make_grading(std::vector<Int> weights);
GradingPtr make_grading(const NumericalSemigroup& s);

/// Sum of e_i * n_i. Throws DimensionMismatch on a length mismatch.
Int sdegree(const Monomial& m, const NumericalSemigroup& s);

/// S-graded-lex: higher S-degree first, ties broken by descending
/// lexicographic exponent vectors (x_1 heaviest).
struct TermOrder {
  const Grading* grading = nullptr;
  bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Sparse polynomial with integer coefficients. Terms are kept in a
/// canonical order with no zero coefficients, so == is structural.
class Poly {
 public:
  using TermMap = std::map<Monomial, Int, TermOrder>;

  explicit Poly(GradingPtr grading);

  static Poly constant(GradingPtr grading, Int c);
  static Poly term(GradingPtr grading, const Monomial& m, Int c = 1);
  /// x_{index+1}^exponent.
  static Poly var(GradingPtr grading, std::size_t index, Int exponent = 1);

  const GradingPtr& grading() const noexcept { return grading_; }
  std::size_t nvars() const noexcept { return grading_->nvars(); }
  const TermMap& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }

  /// Common S-degree of every term; nullopt if inhomogeneous or zero.
  std::optional<Int> homogeneous_degree() const;

  Poly operator-() const;
  Poly& operator+=(const Poly& other);
  Poly& operator-=(const Poly& other);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly scaled(Int c) const;
  Poly pow(unsigned e) const;

  friend bool operator==(const Poly& a, const Poly& b);

  /// ASCII rendering, e.g. "x1^4 - x2^2*x3"; the zero polynomial is "0".
  std::string to_string() const;
  static Poly parse(std::string_view text, GradingPtr grading);

 private:
  void add_term(const Monomial& m, Int c);
  void require_same_ring(const Poly& other) const;

  GradingPtr grading_;
  TermMap terms_;
};

Poly add(const Poly& a, const Poly& b);
Poly mul(const Poly& a, const Poly& b);
Poly neg(const Poly& a);
/// Common S-degree, checking that the polynomial lives over S's grading.
std::optional<Int> is_homogeneous(const Poly& p, const NumericalSemigroup& s);

}  // namespace semires
