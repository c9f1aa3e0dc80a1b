#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "semires/presentation.hpp"
#include "semires/resolution.hpp"

namespace semires {

/// Sparse univariate numerator of the Hilbert series: exponent -> coefficient.
struct KPolynomial {
  std::map<Int, Int> terms;

  Int coefficient(Int e) const;
  /// K(1): the coefficient sum.
  Int value_at_one() const;
  /// "1 - z^27 - z^28 - z^30 + z^37 + z^48"
  std::string to_string() const;

  friend bool operator==(const KPolynomial&, const KPolynomial&) = default;
};

KPolynomial k_polynomial(const GradedResolution& r);

struct HilbertCheck {
  bool passed = true;
  Int max_degree = 0;
  /// Coefficients 0..max_degree of K(z) / prod(1 - z^{n_i}).
  std::vector<Int> series;
  /// Degrees where the coefficient is not the membership indicator.
  std::vector<Int> mismatches;
};

/// g(S) + N + 5.
Int default_hilbert_degree(const NumericalSemigroup& s);
HilbertCheck hilbert_series(const GradedResolution& r, Int max_degree);
bool hilbert_check(const GradedResolution& r, Int max_degree);

/// Top-level Betti degrees minus N, sorted.
std::vector<Int> pf_from_betti(const GradedResolution& r);

/// PF(S) evaluated from the presentation parameters (Frobenius singleton for
/// 4-generated symmetric non-CI). UnsupportedClass for other classes.
std::vector<Int> closed_form_pf(const Classification& c);

/// One printed expression for a named degree, evaluated.
struct DegreeExpression {
  std::string text;
  Int value = 0;
};

struct DegreeRelation {
  std::string name;  // "a1", "s0", "b2", "c1", ...
  Int value = 0;
  std::vector<DegreeExpression> alternatives;
  /// Expressions printed for this degree that do not hold in general; kept
  /// with their values for inspection, not asserted.
  std::vector<DegreeExpression> misprints;
};

struct DegreeRelations {
  ClassTag tag = ClassTag::Unsupported;
  /// a1..a5 (symmetric) or b1..b6 (pseudosymmetric): level-2 degrees in column order.
  std::vector<DegreeRelation> middle;
  /// s0 (symmetric) or c1, c2 (pseudosymmetric): top-level degrees in column order.
  std::vector<DegreeRelation> top;

  std::vector<Int> middle_values() const;
  std::vector<Int> top_values() const;
};

/// Evaluates every alternative; ConsistencyFailure on the first disagreement
/// (among alternatives, or against the built resolution's twists).
DegreeRelations degree_relations(const Classification& c);
DegreeRelations degree_relations(const Classification& c, const GradedResolution& r);

}  // namespace semires
