#pragma once

#include <initializer_list>
#include <utility>
#include <vector>

#include "semires/poly.hpp"

namespace semires::detail {

// Builds polynomials by role index (1-based, as in the printed theorems)
// while writing them in the caller's variable order.
class RoleRing {
 public:
  RoleRing(GradingPtr grading, std::vector<int> perm)
      : grading_(std::move(grading)), perm_(std::move(perm)) {}

  const GradingPtr& grading() const { return grading_; }

  Monomial mono(std::initializer_list<std::pair<int, Int>> factors) const {
    std::vector<Int> e(grading_->nvars(), 0);
    for (auto [role, exp] : factors) e[static_cast<std::size_t>(perm_.at(role - 1))] += exp;
    return Monomial(std::move(e));
  }

  /// x_role^exp as a polynomial.
  Poly x(int role, Int exp = 1) const { return Poly::term(grading_, mono({{role, exp}})); }

  Poly monomial(std::initializer_list<std::pair<int, Int>> factors, Int c = 1) const {
    return Poly::term(grading_, mono(factors), c);
  }

  Poly binomial(std::initializer_list<std::pair<int, Int>> lhs,
                std::initializer_list<std::pair<int, Int>> rhs) const {
    return Poly::term(grading_, mono(lhs)) - Poly::term(grading_, mono(rhs));
  }

  Poly zero() const { return Poly(grading_); }

 private:
  GradingPtr grading_;
  std::vector<int> perm_;
};

template <std::size_t K>
std::vector<int> perm_vector(const std::array<int, K>& perm) {
  return std::vector<int>(perm.begin(), perm.end());
}

}  // namespace semires::detail
