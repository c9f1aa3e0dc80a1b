#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "semires/graded_matrix.hpp"
#include "semires/presentation.hpp"

namespace semires {

/// Outcome of a symbolic check: a line per check, the failing ones repeated
/// in `failures`, plus named findings (polynomials located, exponents, ...).
struct VerificationReport {
  bool passed = true;
  std::vector<std::string> checks;
  std::vector<std::string> failures;
  std::vector<std::pair<std::string, std::string>> findings;

  void record(bool ok, const std::string& what);
  void note(std::string key, std::string value) { findings.emplace_back(std::move(key), std::move(value)); }
  std::string summary() const;
};

/// 0 <- A <- A^{b1} <- ... <- A^{b_{k-1}} <- 0 with explicit maps.
/// maps[i] is phi_{i+1}: level i+1 -> level i. Level 0 is A in degree 0.
struct GradedResolution {
  ClassTag class_tag = ClassTag::Unsupported;
  NumericalSemigroup semigroup;
  Int N = 0;
  /// phi_1's entries: the ideal generators, in theorem order.
  std::vector<Poly> generators;
  std::vector<GradedMatrix> maps;
  /// Twists per level 0..k-1 in basis order (the order the matrices use).
  std::vector<std::vector<Int>> basis_degrees;
  /// The same twists, sorted ascending per level.
  std::vector<std::vector<Int>> betti_degrees;
  /// Role -> caller generator index used to build the matrices.
  std::vector<int> role_perm;
  /// Corrections applied to printed matrices, human readable.
  std::vector<std::string> adjustments;

  std::size_t length() const noexcept { return maps.size(); }
  std::vector<std::size_t> betti_numbers() const;
  const std::vector<Int>& level(std::size_t i) const { return betti_degrees.at(i); }
};

/// Builds the explicit resolution for the semigroup's class and runs
/// verify_complex before returning (VerificationFailure if it fails).
GradedResolution resolve(const NumericalSemigroup& s);
GradedResolution resolve(const Classification& c);

/// Koszul complex on homogeneous f (subsets in lexicographic order; the
/// differential sends e_T to sum_j (-1)^{pos_T(j)} f_j e_{T \ j}).
GradedResolution koszul(std::span<const Poly> f, const NumericalSemigroup& s);

VerificationReport verify_complex(const GradedResolution& r);
/// Alternating phi2, pf(D_ii) = +f_i (i = 1,3,5) / -f_i (i = 2,4),
/// det(D_11) = f_1^2, det(D_22) = f_2^2, phi3 = phi1^t.
VerificationReport verify_pfaffian(const GradedResolution& r);
/// 2-minors of phi3 contain f1, f4, f5, x3 f2, x3 f3 (up to sign); the 4-minors
/// of phi2 contain x2 f2 f4 and x3 f3^e (records e).
VerificationReport verify_witness_minors(const GradedResolution& r);
/// s_{i,j} + s_{k-1-i, b_i-j+1} = s_0 with each level sorted ascending.
VerificationReport duality_check(const GradedResolution& r);

bool is_symmetric_class(ClassTag tag);

}  // namespace semires
