#include "semires/graded_matrix.hpp"

#include <utility>

#include "semires/checked.hpp"
#include "semires/errors.hpp"

namespace semires {

GradedMatrix::GradedMatrix(GradingPtr grading, std::vector<Int> row_degrees,
                           std::vector<Int> col_degrees, std::vector<Poly> entries_row_major)
    : grading_(std::move(grading)),
      row_degrees_(std::move(row_degrees)),
      col_degrees_(std::move(col_degrees)),
      entries_(std::move(entries_row_major)) {
  if (entries_.size() != rows() * cols())
    throw DimensionMismatch("graded matrix expects " + std::to_string(rows() * cols()) +
                            " entries, got " + std::to_string(entries_.size()));
  for (std::size_t r = 0; r < rows(); ++r)
    for (std::size_t c = 0; c < cols(); ++c)
      if (auto why = check_entry(r, c, entries_[r * cols() + c]); !why.empty())
        throw DegreeMismatch(why);
}

GradedMatrix::GradedMatrix(GradingPtr grading, std::vector<Int> row_degrees,
                           std::vector<Int> col_degrees)
    : grading_(std::move(grading)),
      row_degrees_(std::move(row_degrees)),
      col_degrees_(std::move(col_degrees)),
      entries_(rows() * cols(), Poly(grading_)) {}

const Poly& GradedMatrix::at(std::size_t r, std::size_t c) const {
  if (r >= rows() || c >= cols()) throw DimensionMismatch("matrix index out of range");
  return entries_[r * cols() + c];
}

void GradedMatrix::set(std::size_t r, std::size_t c, Poly p) {
  if (r >= rows() || c >= cols()) throw DimensionMismatch("matrix index out of range");
  if (auto why = check_entry(r, c, p); !why.empty()) throw DegreeMismatch(why);
  entries_[r * cols() + c] = std::move(p);
}

std::string GradedMatrix::check_entry(std::size_t r, std::size_t c, const Poly& p) const {
  if (!(*p.grading() == *grading_))
    return "entry (" + std::to_string(r + 1) + "," + std::to_string(c + 1) +
           ") lives in a different ring";
  if (p.is_zero()) return {};
  const auto d = p.homogeneous_degree();
  const Int expected = checked::sub(col_degrees_[c], row_degrees_[r]);
  if (!d)
    return "entry (" + std::to_string(r + 1) + "," + std::to_string(c + 1) + ") " +
           p.to_string() + " is not homogeneous";
  if (*d != expected)
    return "entry (" + std::to_string(r + 1) + "," + std::to_string(c + 1) + ") " +
           p.to_string() + " has degree " + std::to_string(*d) + ", expected " +
           std::to_string(expected);
  return {};
}

bool GradedMatrix::is_zero() const {
  for (const auto& p : entries_)
    if (!p.is_zero()) return false;
  return true;
}

std::vector<GradingViolation> GradedMatrix::grading_violations() const {
  std::vector<GradingViolation> out;
  for (std::size_t r = 0; r < rows(); ++r)
    for (std::size_t c = 0; c < cols(); ++c)
      if (auto why = check_entry(r, c, entries_[r * cols() + c]); !why.empty())
        out.push_back({r, c, std::move(why)});
  return out;
}

std::vector<std::vector<Poly>> GradedMatrix::entries() const {
  std::vector<std::vector<Poly>> out(rows(), std::vector<Poly>(cols(), Poly(grading_)));
  for (std::size_t r = 0; r < rows(); ++r)
    for (std::size_t c = 0; c < cols(); ++c) out[r][c] = at(r, c);
  return out;
}

std::vector<std::vector<Poly>> GradedMatrix::transposed_entries() const {
  std::vector<std::vector<Poly>> out(cols(), std::vector<Poly>(rows(), Poly(grading_)));
  for (std::size_t r = 0; r < rows(); ++r)
    for (std::size_t c = 0; c < cols(); ++c) out[c][r] = at(r, c);
  return out;
}

GradedMatrix mat_mul(const GradedMatrix& a, const GradedMatrix& b) {
  if (a.col_degrees() != b.row_degrees())
    throw DegreeMismatch("cannot compose: source twists of the left map differ from the target "
                         "twists of the right map");
  std::vector<Poly> entries;
  entries.reserve(a.rows() * b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < b.cols(); ++c) {
      Poly acc(a.grading());
      for (std::size_t k = 0; k < a.cols(); ++k) {
        const Poly& x = a.at(r, k);
        const Poly& y = b.at(k, c);
        if (!x.is_zero() && !y.is_zero()) acc += x * y;
      }
      entries.push_back(std::move(acc));
    }
  // The constructor re-validates the twist rule on every product entry.
  return GradedMatrix(a.grading(), a.row_degrees(), b.col_degrees(), std::move(entries));
}

std::vector<std::vector<Poly>> delete_row_col(const std::vector<std::vector<Poly>>& m,
                                              std::size_t index) {
  std::vector<std::vector<Poly>> out;
  for (std::size_t r = 0; r < m.size(); ++r) {
    if (r == index) continue;
    std::vector<Poly> row;
    for (std::size_t c = 0; c < m[r].size(); ++c)
      if (c != index) row.push_back(m[r][c]);
    out.push_back(std::move(row));
  }
  return out;
}

namespace {

Poly det_rec(const std::vector<std::vector<Poly>>& m, std::vector<std::size_t>& cols,
             std::size_t row) {
  const GradingPtr& g = m[0][0].grading();
  if (row == m.size()) return Poly::constant(g, 1);
  Poly acc(g);
  Int sign = 1;
  for (std::size_t i = 0; i < cols.size(); ++i) {
    const std::size_t c = cols[i];
    if (!m[row][c].is_zero()) {
      cols.erase(cols.begin() + static_cast<std::ptrdiff_t>(i));
      Poly sub = det_rec(m, cols, row + 1);
      cols.insert(cols.begin() + static_cast<std::ptrdiff_t>(i), c);
      if (!sub.is_zero()) acc += (m[row][c] * sub).scaled(sign);
    }
    sign = -sign;
  }
  return acc;
}

}  // namespace

Poly determinant(const std::vector<std::vector<Poly>>& m) {
  if (m.empty()) throw DimensionMismatch("determinant of an empty matrix");
  if (m.size() > 5) throw DimensionMismatch("cofactor determinant limited to 5x5");
  for (const auto& row : m)
    if (row.size() != m.size()) throw DimensionMismatch("determinant needs a square matrix");
  std::vector<std::size_t> cols(m.size());
  for (std::size_t i = 0; i < cols.size(); ++i) cols[i] = i;
  return det_rec(m, cols, 0);
}

Poly minor(const GradedMatrix& m, std::span<const std::size_t> rows,
           std::span<const std::size_t> cols) {
  if (rows.size() != cols.size()) throw DimensionMismatch("minor needs a square selection");
  std::vector<std::vector<Poly>> sub;
  for (std::size_t r : rows) {
    std::vector<Poly> row;
    for (std::size_t c : cols) row.push_back(m.at(r, c));
    sub.push_back(std::move(row));
  }
  return determinant(sub);
}

Poly pfaffian4(const std::vector<std::vector<Poly>>& m) {
  if (m.size() != 4) throw DimensionMismatch("pfaffian4 needs a 4x4 matrix");
  for (const auto& row : m)
    if (row.size() != 4) throw DimensionMismatch("pfaffian4 needs a 4x4 matrix");
  for (std::size_t i = 0; i < 4; ++i) {
    if (!m[i][i].is_zero()) throw NotSkewSymmetric("nonzero diagonal entry");
    for (std::size_t j = i + 1; j < 4; ++j)
      if (!(m[i][j] + m[j][i]).is_zero())
        throw NotSkewSymmetric("entries (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                               ") and its transpose are not negatives");
  }
  return m[0][1] * m[2][3] - m[0][2] * m[1][3] + m[0][3] * m[1][2];
}

}  // namespace semires
