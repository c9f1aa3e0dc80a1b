#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "semires/poly.hpp"

namespace semires {

/// Where a graded matrix breaks the twist rule deg(entry) = col - row.
struct GradingViolation {
  std::size_t row = 0;
  std::size_t col = 0;
  std::string reason;
};

/// Matrix of a graded map between twisted free modules
///   A(-col_degrees[0]) + ... --> A(-row_degrees[0]) + ...
/// Every nonzero entry (i, j) is homogeneous of degree col_degrees[j] - row_degrees[i].
class GradedMatrix {
 public:
  /// Throws DegreeMismatch if any entry violates the twist rule.
  GradedMatrix(GradingPtr grading, std::vector<Int> row_degrees, std::vector<Int> col_degrees,
               std::vector<Poly> entries_row_major);
  /// All-zero matrix.
  GradedMatrix(GradingPtr grading, std::vector<Int> row_degrees, std::vector<Int> col_degrees);

  std::size_t rows() const noexcept { return row_degrees_.size(); }
  std::size_t cols() const noexcept { return col_degrees_.size(); }
  const std::vector<Int>& row_degrees() const noexcept { return row_degrees_; }
  const std::vector<Int>& col_degrees() const noexcept { return col_degrees_; }
  const GradingPtr& grading() const noexcept { return grading_; }

  const Poly& at(std::size_t r, std::size_t c) const;
  /// Replaces an entry; throws DegreeMismatch if it breaks the twist rule.
  void set(std::size_t r, std::size_t c, Poly p);

  bool is_zero() const;
  std::vector<GradingViolation> grading_violations() const;

  /// Plain transpose of the entries (no graded meaning attached).
  std::vector<std::vector<Poly>> transposed_entries() const;
  std::vector<std::vector<Poly>> entries() const;

 private:
  std::string check_entry(std::size_t r, std::size_t c, const Poly& p) const;

  GradingPtr grading_;
  std::vector<Int> row_degrees_;
  std::vector<Int> col_degrees_;
  std::vector<Poly> entries_;
};

/// Composition A * B; requires A.col_degrees == B.row_degrees.
GradedMatrix mat_mul(const GradedMatrix& a, const GradedMatrix& b);

/// Exact determinant by cofactor expansion (square, at most 5x5).
Poly determinant(const std::vector<std::vector<Poly>>& m);

/// Determinant of the submatrix on the given rows/cols.
Poly minor(const GradedMatrix& m, std::span<const std::size_t> rows,
           std::span<const std::size_t> cols);

/// Pfaffian of a 4x4 alternating matrix: a01*a23 - a02*a13 + a03*a12.
/// Throws NotSkewSymmetric otherwise.
Poly pfaffian4(const std::vector<std::vector<Poly>>& m);

/// The square submatrix left after deleting row and column `index`.
std::vector<std::vector<Poly>> delete_row_col(const std::vector<std::vector<Poly>>& m,
                                              std::size_t index);

}  // namespace semires
