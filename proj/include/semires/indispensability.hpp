#pragma once

#include <array>
#include <cstddef>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "semires/presentation.hpp"
#include "semires/resolution.hpp"

namespace semires {

enum class Method {
  DifferencesLemma,
  SymmetricHalfCheck,
  CI3Criterion,
  CI4Criterion,
  AlwaysTrue4SymNonCI,
  PseudoLevels12,
};

std::string to_string(Method m);

/// One pair of Betti degrees at a level; `pair` is 1-based into the sorted level.
struct Witness {
  std::size_t level = 0;
  std::array<std::size_t, 2> pair{};
  Int diff = 0;
  bool in_semigroup = false;

  friend bool operator==(const Witness&, const Witness&) = default;
};

struct IndispensabilityReport {
  bool verdict = true;
  Method method = Method::DifferencesLemma;
  /// Every pair examined, failing or not.
  std::vector<Witness> witnesses;
  std::set<std::size_t> levels_checked;
  /// Human-readable account of a closed-form criterion.
  std::vector<std::string> details;

  std::vector<Witness> failing() const;
  /// Levels with at least one difference in S.
  std::set<std::size_t> failing_levels() const;
};

/// |s_ij - s_ij'| in S for some pair at a requested level (0 counts as in S).
IndispensabilityReport differences_check(const GradedResolution& r, const std::set<std::size_t>& levels);

IndispensabilityReport strong_indisp(const NumericalSemigroup& s);
IndispensabilityReport strong_indisp(const Classification& c);

enum class Constraint { AllNonzero, AtMostOneZero };

enum class Uniqueness { UniqueAndPositive, NotUnique, HasForbiddenZero, NoRepresentation };

std::string to_string(Uniqueness u);

struct UniquenessResult {
  Uniqueness status = Uniqueness::NoRepresentation;
  std::vector<std::vector<Int>> representations;
};

UniquenessResult uniqueness_check(Int target, std::span<const Int> base, Constraint constraint);

struct CrossValidation {
  IndispensabilityReport closed_form;
  IndispensabilityReport differences;
  bool agree() const { return closed_form.verdict == differences.verdict; }
};

/// Closed-form verdict against differences_check on the built resolution.
/// Throws CrossValidationMismatch when they disagree.
CrossValidation cross_validate(const NumericalSemigroup& s);
CrossValidation cross_validate(const Classification& c, const GradedResolution& r);

}  // namespace semires
