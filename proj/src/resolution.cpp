#include "semires/resolution.hpp"

#include <algorithm>
#include <sstream>

#include "role_ring.hpp"
#include "semires/checked.hpp"
#include "semires/errors.hpp"

namespace semires {

namespace {

using detail::RoleRing;
using Grid = std::vector<std::vector<Poly>>;

// Column twists follow from the row twists and any nonzero entry of the column.
GradedMatrix graded_from_rows(const GradingPtr& g, const std::vector<Int>& row_degrees,
                              const Grid& m) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  std::vector<Int> col_degrees(cols, 0);
  for (std::size_t c = 0; c < cols; ++c) {
    bool found = false;
    for (std::size_t r = 0; r < rows && !found; ++r) {
      if (m[r][c].is_zero()) continue;
      const auto d = m[r][c].homogeneous_degree();
      if (!d) throw NotHomogeneous("entry " + m[r][c].to_string() + " is not homogeneous");
      col_degrees[c] = checked::add(row_degrees[r], *d);
      found = true;
    }
    if (!found) throw VerificationFailure("zero column in a resolution map");
  }
  std::vector<Poly> flat;
  for (const auto& row : m)
    for (const auto& p : row) flat.push_back(p);
  return GradedMatrix(g, row_degrees, std::move(col_degrees), std::move(flat));
}

GradedResolution assemble(ClassTag tag, const NumericalSemigroup& s, std::vector<Poly> generators,
                          const std::vector<Grid>& grids, std::vector<int> role_perm,
                          std::vector<std::string> adjustments) {
  const GradingPtr g = generators.empty() ? make_grading(s) : generators.front().grading();
  GradedResolution r{tag, s, s.generator_sum(), std::move(generators), {}, {}, {},
                     std::move(role_perm), std::move(adjustments)};
  r.basis_degrees.push_back({0});
  for (const auto& grid : grids) {
    r.maps.push_back(graded_from_rows(g, r.basis_degrees.back(), grid));
    r.basis_degrees.push_back(r.maps.back().col_degrees());
  }
  for (auto level : r.basis_degrees) {
    std::sort(level.begin(), level.end());
    r.betti_degrees.push_back(std::move(level));
  }
  return r;
}

Grid row_of(const std::vector<Poly>& f) { return Grid{f}; }

Grid column_of(const std::vector<Poly>& f) {
  Grid out;
  for (const auto& p : f) out.push_back({p});
  return out;
}

bool grid_product_is_zero(const Grid& a, const Grid& b) {
  for (std::size_t r = 0; r < a.size(); ++r)
    for (std::size_t c = 0; c < b[0].size(); ++c) {
      Poly acc(a[0][0].grading());
      for (std::size_t k = 0; k < b.size(); ++k) acc += a[r][k] * b[k][c];
      if (!acc.is_zero()) return false;
    }
  return true;
}

GradedResolution resolve_herzog(const Classification& c) {
  const auto& d = std::get<HerzogData>(c.data);
  const RoleRing R(make_grading(c.semigroup), {0, 1, 2});
  auto f = generators_ideal(c);
  const Grid phi2{
      {R.x(3, d.a(2, 3)), R.x(2, d.a(3, 2))},
      {R.x(1, d.a(3, 1)), R.x(3, d.a(1, 3))},
      {R.x(2, d.a(1, 2)), R.x(1, d.a(2, 1))},
  };
  const Grid phi1 = row_of(f);
  return assemble(c.tag, c.semigroup, std::move(f), {phi1, phi2}, {0, 1, 2}, {});
}

GradedResolution resolve_bresinsky(const Classification& c) {
  const auto& d = std::get<BresinskyData>(c.data);
  const auto perm = detail::perm_vector(d.perm);
  const RoleRing R(make_grading(c.semigroup), perm);
  auto f = generators_ideal(c);
  const Poly z = R.zero();
  const Poly x3a43 = R.x(3, d.a(4, 3)), x2a32 = R.x(2, d.a(3, 2)), x4a24 = R.x(4, d.a(2, 4));
  const Poly x4a14 = R.x(4, d.a(1, 4)), x1a31 = R.x(1, d.a(3, 1)), x1a21 = R.x(1, d.a(2, 1));
  const Poly x2a42 = R.x(2, d.a(4, 2)), x3a13 = R.x(3, d.a(1, 3));
  const Grid phi2{
      {z, -x3a43, z, -x2a32, -x4a24},
      {x3a43, z, x4a14, z, -x1a31},
      {z, -x4a14, z, -x1a21, -x2a42},
      {x2a32, z, x1a21, z, -x3a13},
      {x4a24, x1a31, x2a42, x3a13, z},
  };
  const Grid phi1 = row_of(f);
  const Grid phi3 = column_of(f);
  return assemble(c.tag, c.semigroup, std::move(f), {phi1, phi2, phi3}, perm, {});
}

GradedResolution resolve_komeda(const Classification& c) {
  const auto& d = std::get<KomedaData>(c.data);
  const auto perm = detail::perm_vector(d.perm);
  const RoleRing R(make_grading(c.semigroup), perm);
  auto f = generators_ideal(c);
  const Int a1 = d.alpha[0], a2 = d.alpha[1], a3 = d.alpha[2], a4 = d.alpha[3], a21 = d.alpha21;
  const Poly z = R.zero();
  const Poly& f2 = f[1];
  const Poly& f3 = f[2];
  const Grid phi2{
      {R.x(2), z, R.x(3, a3 - 1), z, R.x(4), z},
      {z, f3, z, R.monomial({{1, 1}, {3, a3 - 1}}), R.x(1, a1 - a21), R.x(4, a4 - 1)},
      {R.x(1, a21 + 1), -f2, R.x(4, a4 - 1), z, R.monomial({{1, 1}, {2, a2 - 1}}), z},
      {z, z, z, R.x(2), R.x(3), R.x(1, a21)},
      {-R.x(3), z, -R.x(1, a1 - a21 - 1), R.x(4), z, R.x(2, a2 - 1)},
  };
  // Transpose of the printed 2x6 matrix.
  Grid phi3{
      {R.x(4), -R.monomial({{2, a2 - 1}, {3, a3 - 1}})},
      {-R.x(1), R.x(4, a4 - 1)},
      {z, f2},
      {R.x(3), -R.x(1, a1 - 1)},
      {-R.x(2), R.monomial({{1, a21}, {3, a3 - 1}})},
      {z, f3},
  };
  std::vector<std::string> adjustments;
  if (!grid_product_is_zero(phi2, phi3)) {
    // As printed, phi2 * phi3 leaves 2*x4^(a4-1)*f3, 2*x1^a21*f3 and
    // 2*x2^(a2-1)*f3 in rows 2, 4, 5 of the second column; the sign of
    // f3 in the last row of phi3 fixes all three.
    phi3[5][1] = -f3;
    adjustments.push_back("phi3 entry (6,2): printed f3 replaced by -f3 so that phi2*phi3 = 0");
  }
  const Grid phi1 = row_of(f);
  return assemble(c.tag, c.semigroup, std::move(f), {phi1, phi2, phi3}, perm,
                  std::move(adjustments));
}

std::vector<int> ci_role_perm(const Classification& c) {
  switch (c.tag) {
    case ClassTag::TwoGen: return {0, 1};
    case ClassTag::ThreeGenSymmetricCI: return detail::perm_vector(std::get<CI3Data>(c.data).perm);
    case ClassTag::FourGenCI: {
      const auto& ci = std::get<CI4Data>(c.data);
      return std::visit([](const auto& x) { return detail::perm_vector(x.perm); },
                        ci.decomposition);
    }
    default: return {};
  }
}

std::string poly_list(const std::vector<Poly>& ps) {
  std::string out;
  for (const auto& p : ps) out += (out.empty() ? "" : ", ") + p.to_string();
  return out;
}

}  // namespace

void VerificationReport::record(bool ok, const std::string& what) {
  checks.push_back((ok ? "ok: " : "FAIL: ") + what);
  if (!ok) {
    passed = false;
    failures.push_back(what);
  }
}

std::string VerificationReport::summary() const {
  std::ostringstream os;
  os << (passed ? "passed" : "FAILED") << " (" << checks.size() << " checks";
  if (!failures.empty()) os << ", " << failures.size() << " failures";
  os << ")";
  for (const auto& f : failures) os << "\n  " << f;
  return os.str();
}

std::vector<std::size_t> GradedResolution::betti_numbers() const {
  std::vector<std::size_t> out;
  for (const auto& level : betti_degrees) out.push_back(level.size());
  return out;
}

bool is_symmetric_class(ClassTag tag) {
  return tag == ClassTag::TwoGen || tag == ClassTag::ThreeGenSymmetricCI ||
         tag == ClassTag::FourGenCI || tag == ClassTag::FourGenSymmetricNonCI;
}

GradedResolution koszul(std::span<const Poly> f, const NumericalSemigroup& s) {
  if (f.empty()) throw InvalidParameters("Koszul complex needs at least one polynomial");
  for (const auto& p : f)
    if (!p.homogeneous_degree())
      throw NotHomogeneous("Koszul input " + p.to_string() + " is not homogeneous");
  const std::size_t r = f.size();
  const GradingPtr g = f.front().grading();

  // Subsets of {0..r-1} as bitmasks, grouped by size, lexicographic within a size.
  std::vector<std::vector<unsigned>> by_size(r + 1);
  for (std::size_t size = 0; size <= r; ++size) {
    std::vector<bool> pick(r, false);
    std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(size), true);
    do {
      unsigned mask = 0;
      for (std::size_t i = 0; i < r; ++i)
        if (pick[i]) mask |= 1u << i;
      by_size[size].push_back(mask);
    } while (std::prev_permutation(pick.begin(), pick.end()));
  }

  std::vector<Grid> grids;
  for (std::size_t level = 1; level <= r; ++level) {
    const auto& rows = by_size[level - 1];
    const auto& cols = by_size[level];
    Grid m(rows.size(), std::vector<Poly>(cols.size(), Poly(g)));
    for (std::size_t c = 0; c < cols.size(); ++c) {
      int pos = 0;
      for (std::size_t j = 0; j < r; ++j) {
        if (!(cols[c] & (1u << j))) continue;
        const unsigned face = cols[c] & ~(1u << j);
        const auto it = std::find(rows.begin(), rows.end(), face);
        m[static_cast<std::size_t>(it - rows.begin())][c] = (pos % 2 == 0) ? f[j] : -f[j];
        ++pos;
      }
    }
    grids.push_back(std::move(m));
  }

  const std::size_t k = s.embedding_dimension();
  ClassTag tag = ClassTag::Unsupported;
  if (r + 1 == k) tag = k == 2 ? ClassTag::TwoGen
                       : k == 3 ? ClassTag::ThreeGenSymmetricCI
                                : ClassTag::FourGenCI;
  std::vector<int> perm(k);
  for (std::size_t i = 0; i < k; ++i) perm[i] = static_cast<int>(i);
  return assemble(tag, s, std::vector<Poly>(f.begin(), f.end()), grids, perm, {});
}

GradedResolution resolve(const Classification& c) {
  std::optional<GradedResolution> r;
  switch (c.tag) {
    case ClassTag::TwoGen:
    case ClassTag::ThreeGenSymmetricCI:
    case ClassTag::FourGenCI: {
      const auto f = generators_ideal(c);
      r = koszul(f, c.semigroup);
      r->class_tag = c.tag;
      r->role_perm = ci_role_perm(c);
      break;
    }
    case ClassTag::ThreeGenNonSymmetric: r = resolve_herzog(c); break;
    case ClassTag::FourGenSymmetricNonCI: r = resolve_bresinsky(c); break;
    case ClassTag::FourGenPseudosymmetric: r = resolve_komeda(c); break;
    case ClassTag::Unsupported:
      throw UnsupportedClass("no explicit resolution for " + c.semigroup.to_string() + " (" +
                             c.note + ")");
  }
  const auto report = verify_complex(*r);
  if (!report.passed)
    throw VerificationFailure("resolution of " + c.semigroup.to_string() +
                              " is not a complex: " + report.summary());
  return std::move(*r);
}

GradedResolution resolve(const NumericalSemigroup& s) { return resolve(classify(s)); }

VerificationReport verify_complex(const GradedResolution& r) {
  VerificationReport rep;
  for (std::size_t i = 0; i < r.maps.size(); ++i) {
    const auto bad = r.maps[i].grading_violations();
    std::string what = "phi" + std::to_string(i + 1) + " respects the grading";
    for (const auto& v : bad) what += "; " + v.reason;
    rep.record(bad.empty(), what);
  }
  for (std::size_t i = 0; i + 1 < r.maps.size(); ++i) {
    const auto& a = r.maps[i];
    const auto& b = r.maps[i + 1];
    const std::string name = "phi" + std::to_string(i + 1) + "*phi" + std::to_string(i + 2);
    if (a.col_degrees() != b.row_degrees()) {
      rep.record(false, name + ": twists do not match");
      continue;
    }
    std::string what = name + " = 0";
    bool ok = true;
    for (std::size_t row = 0; row < a.rows(); ++row)
      for (std::size_t col = 0; col < b.cols(); ++col) {
        Poly acc(a.grading());
        for (std::size_t k = 0; k < a.cols(); ++k) acc += a.at(row, k) * b.at(k, col);
        if (!acc.is_zero()) {
          ok = false;
          what += "; entry (" + std::to_string(row + 1) + "," + std::to_string(col + 1) +
                  ") = " + acc.to_string();
        }
      }
    rep.record(ok, what);
  }
  return rep;
}

VerificationReport verify_pfaffian(const GradedResolution& r) {
  VerificationReport rep;
  if (r.class_tag != ClassTag::FourGenSymmetricNonCI || r.maps.size() != 3) {
    rep.record(false, "pfaffian structure applies to 4-generated symmetric non-CI resolutions");
    return rep;
  }
  const Grid delta = r.maps[1].entries();
  bool alternating = delta.size() == 5;
  for (std::size_t i = 0; i < delta.size() && alternating; ++i) {
    if (!delta[i][i].is_zero()) alternating = false;
    for (std::size_t j = i + 1; j < delta.size(); ++j)
      if (!(delta[i][j] + delta[j][i]).is_zero()) alternating = false;
  }
  rep.record(alternating, "phi2 is alternating");
  if (!alternating) return rep;

  const auto& f = r.generators;
  for (std::size_t i = 0; i < 5; ++i) {
    const Poly pf = pfaffian4(delete_row_col(delta, i));
    const bool plus = (i % 2 == 0);  // i = 1, 3, 5 in 1-based terms
    const Poly expected = plus ? f[i] : -f[i];
    rep.record(pf == expected, "pf(D_" + std::to_string(i + 1) + std::to_string(i + 1) + ") = " +
                                   (plus ? "" : "-") + "f" + std::to_string(i + 1) +
                                   (pf == expected ? "" : " (got " + pf.to_string() + ")"));
  }
  for (std::size_t i = 0; i < 2; ++i) {
    const Poly det = determinant(delete_row_col(delta, i));
    const Poly sq = f[i] * f[i];
    rep.record(det == sq, "det(D_" + std::to_string(i + 1) + std::to_string(i + 1) + ") = f" +
                              std::to_string(i + 1) + "^2");
  }
  const Grid phi1t = r.maps[0].transposed_entries();
  rep.record(phi1t == r.maps[2].entries(), "phi3 = phi1^t");
  return rep;
}

VerificationReport verify_witness_minors(const GradedResolution& r) {
  VerificationReport rep;
  if (r.class_tag != ClassTag::FourGenPseudosymmetric || r.maps.size() != 3) {
    rep.record(false, "witness minors apply to 4-generated pseudosymmetric resolutions");
    return rep;
  }
  const RoleRing R(r.maps[0].grading(), r.role_perm);
  const auto& f = r.generators;
  const auto& phi2 = r.maps[1];
  const auto& phi3 = r.maps[2];

  std::vector<Poly> two_minors;
  for (std::size_t a = 0; a < phi3.rows(); ++a)
    for (std::size_t b = a + 1; b < phi3.rows(); ++b) {
      const std::array<std::size_t, 2> rows{a, b};
      const std::array<std::size_t, 2> cols{0, 1};
      two_minors.push_back(minor(phi3, rows, cols));
    }
  auto among = [](const std::vector<Poly>& pool, const Poly& w) {
    return std::any_of(pool.begin(), pool.end(),
                       [&](const Poly& p) { return p == w || p == -w; });
  };
  const std::vector<std::pair<std::string, Poly>> wanted{
      {"f1", f[0]}, {"f4", f[3]}, {"f5", f[4]}, {"x3*f2", R.x(3) * f[1]}, {"x3*f3", R.x(3) * f[2]}};
  for (const auto& [name, w] : wanted)
    rep.record(among(two_minors, w), name + " is a 2-minor of phi3");

  std::vector<Poly> four_minors;
  std::vector<std::size_t> rows(phi2.rows()), cols(phi2.cols());
  std::vector<bool> rpick(phi2.rows(), false), cpick(phi2.cols(), false);
  std::fill(rpick.begin(), rpick.begin() + 4, true);
  do {
    std::vector<std::size_t> rs;
    for (std::size_t i = 0; i < rpick.size(); ++i)
      if (rpick[i]) rs.push_back(i);
    std::fill(cpick.begin(), cpick.end(), false);
    std::fill(cpick.begin(), cpick.begin() + 4, true);
    do {
      std::vector<std::size_t> cs;
      for (std::size_t i = 0; i < cpick.size(); ++i)
        if (cpick[i]) cs.push_back(i);
      Poly m = minor(phi2, rs, cs);
      if (!m.is_zero()) four_minors.push_back(std::move(m));
    } while (std::prev_permutation(cpick.begin(), cpick.end()));
  } while (std::prev_permutation(rpick.begin(), rpick.end()));
  rep.note("nonzero 4-minors of phi2", std::to_string(four_minors.size()));

  const Poly x2f2f4 = R.x(2) * f[1] * f[3];
  const bool has_f2f4 = among(four_minors, x2f2f4);
  rep.record(has_f2f4, "x2*f2*f4 is a 4-minor of phi2");
  if (has_f2f4) rep.note("x2*f2*f4", x2f2f4.to_string());

  std::optional<unsigned> exponent;
  for (unsigned e = 1; e <= 4 && !exponent; ++e)
    if (among(four_minors, R.x(3) * f[2].pow(e))) exponent = e;
  rep.record(exponent.has_value(), "x3*f3^e is a 4-minor of phi2 for some e in 1..4");
  if (exponent) {
    rep.note("x3*f3^e exponent", std::to_string(*exponent));
    rep.note("x3*f3^e", (R.x(3) * f[2].pow(*exponent)).to_string());
  }
  rep.note("generators", poly_list(f));
  return rep;
}

VerificationReport duality_check(const GradedResolution& r) {
  VerificationReport rep;
  if (!is_symmetric_class(r.class_tag)) {
    rep.record(false, "duality applies to symmetric classes only");
    return rep;
  }
  const std::size_t top = r.betti_degrees.size() - 1;
  rep.record(r.betti_degrees[top].size() == 1, "top Betti number is 1");
  if (r.betti_degrees[top].size() != 1) return rep;
  const Int s0 = r.betti_degrees[top][0];
  rep.note("s0", std::to_string(s0));
  for (std::size_t i = 0; i <= top; ++i) {
    const auto& lo = r.betti_degrees[i];
    const auto& hi = r.betti_degrees[top - i];
    const bool same_rank = lo.size() == hi.size();
    rep.record(same_rank, "beta_" + std::to_string(i) + " = beta_" + std::to_string(top - i));
    if (!same_rank) continue;
    bool ok = true;
    for (std::size_t j = 0; j < lo.size(); ++j)
      if (lo[j] + hi[hi.size() - 1 - j] != s0) ok = false;
    rep.record(ok, "level " + std::to_string(i) + " pairs with level " + std::to_string(top - i) +
                       " against s0 = " + std::to_string(s0));
  }
  return rep;
}

}  // namespace semires
