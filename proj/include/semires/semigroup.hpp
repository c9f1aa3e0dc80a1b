#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace semires {

using Int = std::int64_t;

/// Result cap for representation enumeration; all uses in this library are tiny.
inline constexpr std::size_t kDefaultRepresentationLimit = 1'000'000;

/// A nonnegative solution of sum(coefficients[i] * base[i]) == value.
struct Representation {
  std::vector<Int> coefficients;
  Int value = 0;

  friend bool operator==(const Representation&, const Representation&) = default;
};

struct Representations {
  std::vector<Representation> items;  // lexicographically ascending coefficients
  bool truncated = false;             // true if the limit was hit
};

/// All nonnegative representations of `target` over an arbitrary positive
/// base (gcd need not be 1). Depth-first, highest index first, pruned by
/// prefix gcds. Results are sorted lexicographically.
Representations representations_over(std::span<const Int> base, Int target,
                                     std::size_t limit = kDefaultRepresentationLimit);

/// True iff target is a nonnegative combination of base.
bool in_span(std::span<const Int> base, Int target);

/// Least t >= 1 with t * value in <base>; t = min(base) always qualifies.
Int minimal_multiple(Int value, std::span<const Int> base);

enum class Symmetry { Symmetric, Pseudosymmetric, Neither };

std::string to_string(Symmetry s);

/// A numerical semigroup given by its minimal generators, kept in the
/// caller's order (several constructions assign roles by index).
///
/// Membership goes through the Apery set of the multiplicity (the smallest
/// generator): n is in S iff n >= w, where w is the Apery element in the
/// residue class of n.
class NumericalSemigroup {
 public:
  /// Validates positivity, gcd 1 and minimality, in that order.
  static NumericalSemigroup create(std::vector<Int> generators);

  std::span<const Int> generators() const noexcept { return gens_; }
  Int generator(std::size_t i) const { return gens_.at(i); }
  std::size_t embedding_dimension() const noexcept { return gens_.size(); }
  Int multiplicity() const noexcept { return multiplicity_; }
  /// N = n_1 + ... + n_k.
  Int generator_sum() const noexcept { return sum_; }

  bool contains(Int n) const noexcept;
  Int frobenius() const noexcept { return frobenius_; }
  std::vector<Int> gaps() const;
  /// Least elements of S in each residue class mod m, indexed by residue.
  std::vector<Int> apery(Int m) const;
  std::span<const Int> apery_of_multiplicity() const noexcept { return apery_; }

  /// PF(S) straight from the definition: gaps n with n + n_i in S for all i.
  std::vector<Int> pseudofrobenius() const;
  std::size_t type() const { return pseudofrobenius().size(); }
  Symmetry classify_symmetry() const;

  Representations representations(Int s, std::size_t limit = kDefaultRepresentationLimit) const;

  std::string to_string() const;

  friend bool operator==(const NumericalSemigroup& a, const NumericalSemigroup& b) {
    return a.gens_ == b.gens_;
  }

 private:
  explicit NumericalSemigroup(std::vector<Int> gens);

  std::vector<Int> gens_;
  Int multiplicity_ = 0;
  Int sum_ = 0;
  std::vector<Int> apery_;
  Int frobenius_ = -1;
};

/// Shortest-path Apery table of `modulus` over the generators: entry r is the
/// least combination congruent to r, or -1 if no combination hits that class.
std::vector<Int> apery_table(std::span<const Int> generators, Int modulus);

}  // namespace semires
