#include "semires/presentation.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

#include "role_ring.hpp"
#include "semires/checked.hpp"
#include "semires/errors.hpp"

namespace semires {

namespace {

using detail::RoleRing;

std::vector<std::array<Int, 2>> pair_reps(Int a, Int b, Int target) {
  const std::array<Int, 2> base{a, b};
  std::vector<std::array<Int, 2>> out;
  for (const auto& r : representations_over(base, target).items)
    out.push_back({r.coefficients[0], r.coefficients[1]});
  return out;
}

std::vector<std::array<Int, 3>> triple_reps(Int a, Int b, Int c, Int target) {
  const std::array<Int, 3> base{a, b, c};
  std::vector<std::array<Int, 3>> out;
  for (const auto& r : representations_over(base, target).items)
    out.push_back({r.coefficients[0], r.coefficients[1], r.coefficients[2]});
  return out;
}

std::vector<Int> minimal_multiples(const NumericalSemigroup& s) {
  const auto gens = s.generators();
  std::vector<Int> out;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    std::vector<Int> others;
    for (std::size_t j = 0; j < gens.size(); ++j)
      if (j != i) others.push_back(gens[j]);
    out.push_back(minimal_multiple(gens[i], others));
  }
  return out;
}

void require_dimension(const NumericalSemigroup& s, std::size_t k, const char* what) {
  if (s.embedding_dimension() != k)
    throw NotInClass(std::string(what) + " needs embedding dimension " + std::to_string(k) +
                     ", got " + s.to_string());
}

std::vector<CI3Data> all_ci3(const NumericalSemigroup& s) {
  static constexpr std::array<std::array<int, 3>, 3> kPairs{{{0, 1, 2}, {0, 2, 1}, {1, 2, 0}}};
  std::vector<CI3Data> out;
  for (const auto& perm : kPairs) {
    const Int n1 = s.generator(perm[0]);
    const Int n2 = s.generator(perm[1]);
    const Int n3 = s.generator(perm[2]);
    const Int g = std::gcd(n1, n2);
    if (g <= 1) continue;
    auto reps = pair_reps(n1 / g, n2 / g, n3);
    if (reps.empty()) continue;
    CI3Data d;
    d.perm = perm;
    d.alpha3 = g;
    d.m1 = n1 / g;
    d.m2 = n2 / g;
    d.representations = std::move(reps);
    std::vector<std::array<Int, 2>> positive;
    for (const auto& r : d.representations)
      if (r[0] != 0 && r[1] != 0) positive.push_back(r);
    d.chosen = positive.size() == 1 ? positive.front() : d.representations.front();
    d.ambiguous = d.representations.size() > 1;
    out.push_back(std::move(d));
  }
  return out;
}

std::optional<CI3Data> try_ci3(const NumericalSemigroup& s) {
  auto all = all_ci3(s);
  if (all.empty()) return std::nullopt;
  return all.front();
}

std::vector<CI4CaseI> all_case_one(const NumericalSemigroup& s) {
  std::vector<CI4CaseI> out;
  for (int single = 3; single >= 0; --single) {
    std::array<int, 3> triple{};
    int t = 0;
    for (int i = 0; i < 4; ++i)
      if (i != single) triple[t++] = i;
    const Int ell = std::gcd(std::gcd(s.generator(triple[0]), s.generator(triple[1])),
                             s.generator(triple[2]));
    if (ell <= 1) continue;
    std::vector<Int> reduced;
    for (int i : triple) reduced.push_back(s.generator(i) / ell);
    std::optional<NumericalSemigroup> inner;
    try {
      inner = NumericalSemigroup::create(reduced);
    } catch (const Error&) {
      continue;
    }
    if (inner->classify_symmetry() != Symmetry::Symmetric) continue;
    if (!inner->contains(s.generator(single))) continue;
    for (const auto& inner_data : all_ci3(*inner)) {
      CI4CaseI d;
      d.ell = ell;
      d.inner = inner_data;
      for (int r = 0; r < 3; ++r) d.perm[r] = triple[inner_data.perm[r]];
      d.perm[3] = single;
      const auto n = role_generators(s, d.perm);
      d.representations = triple_reps(n[0], n[1], n[2], checked::mul(ell, n[3]));
      std::vector<std::array<Int, 3>> admissible;
      for (const auto& r : d.representations)
        if ((r[0] == 0) + (r[1] == 0) + (r[2] == 0) <= 1) admissible.push_back(r);
      d.chosen = admissible.size() == 1 ? admissible.front() : d.representations.front();
      d.ambiguous = d.representations.size() > 1;
      out.push_back(std::move(d));
    }
  }
  return out;
}

std::vector<CI4CaseII> all_case_two(const NumericalSemigroup& s) {
  static constexpr std::array<std::array<int, 4>, 3> kSplits{
      {{0, 1, 2, 3}, {0, 2, 1, 3}, {0, 3, 1, 2}}};
  std::vector<CI4CaseII> out;
  for (const auto& perm : kSplits) {
    const auto n = role_generators(s, perm);
    const Int p = std::gcd(n[0], n[1]);
    const Int pp = std::gcd(n[2], n[3]);
    if (p <= 1 || pp <= 1) continue;
    auto reps12 = pair_reps(n[0] / p, n[1] / p, pp);
    auto reps34 = pair_reps(n[2] / pp, n[3] / pp, p);
    if (reps12.empty() || reps34.empty()) continue;
    CI4CaseII d;
    d.perm = perm;
    d.p = p;
    d.p_prime = pp;
    d.alpha = {n[1] / p, n[0] / p, n[3] / pp, n[2] / pp};
    d.reps12 = std::move(reps12);
    d.reps34 = std::move(reps34);
    std::vector<std::array<Int, 4>> positive;
    for (const auto& a : d.reps12)
      for (const auto& b : d.reps34)
        if (a[0] && a[1] && b[0] && b[1]) positive.push_back({a[0], a[1], b[0], b[1]});
    if (positive.size() == 1) {
      d.chosen = positive.front();
    } else {
      d.chosen = {d.reps12.front()[0], d.reps12.front()[1], d.reps34.front()[0],
                  d.reps34.front()[1]};
    }
    d.ambiguous = d.reps12.size() * d.reps34.size() > 1;
    out.push_back(std::move(d));
  }
  return out;
}

// Komeda's formulas for (n1, n2, n3, n4), with overflow checks.
std::array<Int, 4> komeda_generators(const KomedaParams& p) {
  using namespace checked;
  const Int a1 = p.alpha1, a2 = p.alpha2, a3 = p.alpha3, a4 = p.alpha4, a21 = p.alpha21;
  const Int rest = sub(sub(a1, a21), 1);  // alpha1 - alpha21 - 1
  return {
      add(mul(mul(a2, a3), sub(a4, 1)), 1),
      add(add(mul(mul(a21, a3), a4), mul(rest, sub(a3, 1))), a3),
      add(sub(add(mul(a1, a4), mul(mul(rest, sub(a2, 1)), sub(a4, 1))), a4), 1),
      add(add(mul(mul(a1, a2), sub(a3, 1)), mul(a21, sub(a2, 1))), a2),
  };
}

std::array<Int, 4> bresinsky_generators(const BresinskyData& d) {
  using namespace checked;
  const auto& al = d.alpha;
  return {
      add(mul(mul(al[1], al[2]), d.a(1, 4)), mul(mul(d.a(3, 2), d.a(1, 3)), d.a(2, 4))),
      add(mul(mul(al[2], al[3]), d.a(2, 1)), mul(mul(d.a(3, 1), d.a(4, 3)), d.a(2, 4))),
      add(mul(mul(al[0], al[3]), d.a(3, 2)), mul(mul(d.a(1, 4), d.a(4, 2)), d.a(3, 1))),
      add(mul(mul(al[0], al[1]), d.a(4, 3)), mul(mul(d.a(4, 2), d.a(2, 1)), d.a(1, 3))),
  };
}

bool bresinsky_constraints_hold(const BresinskyData& d) {
  static constexpr std::array<std::pair<int, int>, 8> kPairs{
      {{2, 1}, {3, 1}, {3, 2}, {4, 2}, {1, 3}, {4, 3}, {1, 4}, {2, 4}}};
  for (auto [i, j] : kPairs)
    if (d.a(i, j) <= 0 || d.a(i, j) >= d.alpha[j - 1]) return false;
  return d.alpha[0] == d.a(2, 1) + d.a(3, 1) && d.alpha[1] == d.a(3, 2) + d.a(4, 2) &&
         d.alpha[2] == d.a(1, 3) + d.a(4, 3) && d.alpha[3] == d.a(1, 4) + d.a(2, 4);
}

std::array<Int, 8> bresinsky_key(const BresinskyData& d) {
  return {d.a(2, 1), d.a(3, 1), d.a(3, 2), d.a(4, 2), d.a(1, 3), d.a(4, 3), d.a(1, 4), d.a(2, 4)};
}

std::vector<std::array<Int, 2>> positive_pair_reps(Int a, Int b, Int target) {
  auto all = pair_reps(a, b, target);
  std::erase_if(all, [](const auto& r) { return r[0] == 0 || r[1] == 0; });
  return all;
}

}  // namespace

std::string to_string(ClassTag tag) {
  switch (tag) {
    case ClassTag::TwoGen: return "TwoGen";
    case ClassTag::ThreeGenSymmetricCI: return "ThreeGenSymmetricCI";
    case ClassTag::ThreeGenNonSymmetric: return "ThreeGenNonSymmetric";
    case ClassTag::FourGenCI: return "FourGenCI";
    case ClassTag::FourGenSymmetricNonCI: return "FourGenSymmetricNonCI";
    case ClassTag::FourGenPseudosymmetric: return "FourGenPseudosymmetric";
    case ClassTag::Unsupported: return "Unsupported";
  }
  return "?";
}

ClassTag class_tag_from_string(const std::string& s) {
  for (auto tag : {ClassTag::TwoGen, ClassTag::ThreeGenSymmetricCI, ClassTag::ThreeGenNonSymmetric,
                   ClassTag::FourGenCI, ClassTag::FourGenSymmetricNonCI,
                   ClassTag::FourGenPseudosymmetric, ClassTag::Unsupported})
    if (to_string(tag) == s) return tag;
  throw InvalidParameters("unknown class tag '" + s + "'");
}

HerzogData herzog(const NumericalSemigroup& s) {
  require_dimension(s, 3, "herzog");
  if (s.classify_symmetry() == Symmetry::Symmetric)
    throw NotInClass(s.to_string() + " is symmetric; use the complete-intersection data");
  const auto alpha = minimal_multiples(s);
  std::array<std::vector<std::array<Int, 2>>, 3> reps;
  for (int i = 0; i < 3; ++i) {
    const int k = (i == 0) ? 1 : 0;
    const int l = (i == 2) ? 1 : 2;
    reps[i] = positive_pair_reps(s.generator(k), s.generator(l),
                                 checked::mul(alpha[i], s.generator(i)));
  }
  std::vector<HerzogData> valid;
  for (const auto& r1 : reps[0])
    for (const auto& r2 : reps[1])
      for (const auto& r3 : reps[2]) {
        HerzogData d;
        d.alpha = {alpha[0], alpha[1], alpha[2]};
        d.cross[0][1] = r1[0];
        d.cross[0][2] = r1[1];
        d.cross[1][0] = r2[0];
        d.cross[1][2] = r2[1];
        d.cross[2][0] = r3[0];
        d.cross[2][1] = r3[1];
        if (d.a(2, 1) + d.a(3, 1) == d.alpha[0] && d.a(1, 2) + d.a(3, 2) == d.alpha[1] &&
            d.a(1, 3) + d.a(2, 3) == d.alpha[2])
          valid.push_back(d);
      }
  if (valid.empty())
    throw NotInClass("no Herzog parameter set fits " + s.to_string());
  // The representation lists are sorted, so the first hit is lexicographically smallest.
  HerzogData out = valid.front();
  out.ambiguous = valid.size() > 1;
  return out;
}

CI3Data ci3(const NumericalSemigroup& s) {
  require_dimension(s, 3, "ci3");
  if (s.classify_symmetry() != Symmetry::Symmetric)
    throw NotInClass(s.to_string() + " is not symmetric");
  if (auto d = try_ci3(s)) return *d;
  throw NotInClass("no gluing decomposition found for " + s.to_string());
}

std::vector<CI3Data> ci3_decompositions(const NumericalSemigroup& s) {
  if (s.embedding_dimension() != 3 || s.classify_symmetry() != Symmetry::Symmetric) return {};
  return all_ci3(s);
}

std::vector<std::variant<CI4CaseI, CI4CaseII>> ci4_decompositions(const NumericalSemigroup& s) {
  std::vector<std::variant<CI4CaseI, CI4CaseII>> out;
  if (s.embedding_dimension() != 4) return out;
  for (auto& d : all_case_one(s)) out.emplace_back(std::move(d));
  for (auto& d : all_case_two(s)) out.emplace_back(std::move(d));
  return out;
}

std::optional<CI4Data> ci4(const NumericalSemigroup& s) {
  if (s.embedding_dimension() != 4) return std::nullopt;
  const auto all = ci4_decompositions(s);
  if (all.empty()) return std::nullopt;
  CI4Data d{all.front(), std::nullopt};
  for (const auto& other : all)
    if (other.index() != d.decomposition.index()) {
      d.alternate = other;
      break;
    }
  return d;
}

BresinskyData bresinsky(const NumericalSemigroup& s) {
  require_dimension(s, 4, "bresinsky");
  if (s.classify_symmetry() != Symmetry::Symmetric)
    throw NotInClass(s.to_string() + " is not symmetric");
  if (ci4(s)) throw NotInClass(s.to_string() + " is a complete intersection");
  const auto alpha_orig = minimal_multiples(s);
  RolePerm<4> perm{0, 1, 2, 3};
  do {
    const auto n = role_generators(s, perm);
    std::array<Int, 4> al{};
    for (int r = 0; r < 4; ++r) al[r] = alpha_orig[perm[r]];
    using checked::mul;
    const auto r1 = positive_pair_reps(n[2], n[3], mul(al[0], n[0]));  // (a13, a14)
    const auto r2 = positive_pair_reps(n[0], n[3], mul(al[1], n[1]));  // (a21, a24)
    const auto r3 = positive_pair_reps(n[0], n[1], mul(al[2], n[2]));  // (a31, a32)
    const auto r4 = positive_pair_reps(n[1], n[2], mul(al[3], n[3]));  // (a42, a43)
    std::vector<BresinskyData> valid;
    for (const auto& x1 : r1)
      for (const auto& x2 : r2)
        for (const auto& x3 : r3)
          for (const auto& x4 : r4) {
            BresinskyData d;
            d.perm = perm;
            d.alpha = al;
            d.a(1, 3) = x1[0];
            d.a(1, 4) = x1[1];
            d.a(2, 1) = x2[0];
            d.a(2, 4) = x2[1];
            d.a(3, 1) = x3[0];
            d.a(3, 2) = x3[1];
            d.a(4, 2) = x4[0];
            d.a(4, 3) = x4[1];
            if (bresinsky_constraints_hold(d) && bresinsky_generators(d) == n) valid.push_back(d);
          }
    if (!valid.empty()) {
      auto best = std::min_element(valid.begin(), valid.end(), [](const auto& a, const auto& b) {
        return bresinsky_key(a) < bresinsky_key(b);
      });
      BresinskyData out = *best;
      out.ambiguous = valid.size() > 1;
      return out;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  throw NotInClass("no Bresinsky parameter set fits " + s.to_string());
}

KomedaData komeda(const NumericalSemigroup& s) {
  require_dimension(s, 4, "komeda");
  if (s.classify_symmetry() != Symmetry::Pseudosymmetric)
    throw NotInClass(s.to_string() + " is not pseudosymmetric");
  const auto alpha_orig = minimal_multiples(s);
  RolePerm<4> perm{0, 1, 2, 3};
  do {
    const auto n = role_generators(s, perm);
    std::array<Int, 4> al{};
    for (int r = 0; r < 4; ++r) al[r] = alpha_orig[perm[r]];
    // f2 = x2^a2 - x1^a21 * x4 pins down alpha21.
    const Int rest = checked::sub(checked::mul(al[1], n[1]), n[3]);
    if (rest <= 0 || rest % n[0] != 0) continue;
    const Int a21 = rest / n[0];
    if (a21 >= al[0]) continue;
    const KomedaParams params{al[0], al[1], al[2], al[3], a21};
    if (komeda_generators(params) != n) continue;
    return KomedaData{perm, al, a21};
  } while (std::next_permutation(perm.begin(), perm.end()));
  throw NotInClass("no Komeda parameter set fits " + s.to_string());
}

NumericalSemigroup from_komeda(const KomedaParams& p) {
  if (p.alpha1 <= 0 || p.alpha2 <= 0 || p.alpha3 <= 0 || p.alpha4 <= 0 || p.alpha21 <= 0)
    throw InvalidParameters("Komeda parameters must be positive");
  if (p.alpha21 >= p.alpha1) throw InvalidParameters("Komeda parameters need alpha21 < alpha1");
  const auto n = komeda_generators(p);
  try {
    return NumericalSemigroup::create(std::vector<Int>(n.begin(), n.end()));
  } catch (const Error& e) {
    throw InvalidParameters(std::string("Komeda parameters give no 4-generated semigroup: ") +
                            e.what());
  }
}

NumericalSemigroup from_bresinsky(const BresinskyParams& p) {
  BresinskyData d;
  d.a(2, 1) = p.a21;
  d.a(3, 1) = p.a31;
  d.a(3, 2) = p.a32;
  d.a(4, 2) = p.a42;
  d.a(1, 3) = p.a13;
  d.a(4, 3) = p.a43;
  d.a(1, 4) = p.a14;
  d.a(2, 4) = p.a24;
  d.alpha = {checked::add(p.a21, p.a31), checked::add(p.a32, p.a42), checked::add(p.a13, p.a43),
             checked::add(p.a14, p.a24)};
  if (!bresinsky_constraints_hold(d))
    throw InvalidParameters("Bresinsky parameters must be positive");
  const auto n = bresinsky_generators(d);
  try {
    return NumericalSemigroup::create(std::vector<Int>(n.begin(), n.end()));
  } catch (const Error& e) {
    throw InvalidParameters(std::string("Bresinsky parameters give no 4-generated semigroup: ") +
                            e.what());
  }
}

KomedaParams komeda_params(const KomedaData& d) {
  return {d.alpha[0], d.alpha[1], d.alpha[2], d.alpha[3], d.alpha21};
}

BresinskyParams bresinsky_params(const BresinskyData& d) {
  return {d.a(2, 1), d.a(3, 1), d.a(3, 2), d.a(4, 2), d.a(1, 3), d.a(4, 3), d.a(1, 4), d.a(2, 4)};
}

Classification classify(const NumericalSemigroup& s) {
  const std::size_t k = s.embedding_dimension();
  if (k == 1 || k >= 5)
    throw UnsupportedEmbeddingDimension("embedding dimension " + std::to_string(k) +
                                        " is outside the supported range 2..4");
  if (k == 2) return {ClassTag::TwoGen, s, TwoGenData{}, {}};
  const Symmetry sym = s.classify_symmetry();
  if (k == 3) {
    if (sym == Symmetry::Symmetric) return {ClassTag::ThreeGenSymmetricCI, s, ci3(s), {}};
    return {ClassTag::ThreeGenNonSymmetric, s, herzog(s), {}};
  }
  if (auto d = ci4(s)) return {ClassTag::FourGenCI, s, std::move(*d), {}};
  if (sym == Symmetry::Symmetric) return {ClassTag::FourGenSymmetricNonCI, s, bresinsky(s), {}};
  if (sym == Symmetry::Pseudosymmetric)
    return {ClassTag::FourGenPseudosymmetric, s, komeda(s), {}};
  return {ClassTag::Unsupported, s, std::monostate{},
          "4-generated, neither symmetric nor pseudosymmetric"};
}

std::vector<Poly> generators_ideal(const Classification& c) {
  const GradingPtr g = make_grading(c.semigroup);
  switch (c.tag) {
    case ClassTag::TwoGen: {
      const RoleRing R(g, {0, 1});
      return {R.binomial({{1, c.semigroup.generator(1)}}, {{2, c.semigroup.generator(0)}})};
    }
    case ClassTag::ThreeGenNonSymmetric: {
      const auto& d = std::get<HerzogData>(c.data);
      const RoleRing R(g, {0, 1, 2});
      return {
          R.binomial({{1, d.alpha[0]}}, {{2, d.a(1, 2)}, {3, d.a(1, 3)}}),
          R.binomial({{2, d.alpha[1]}}, {{1, d.a(2, 1)}, {3, d.a(2, 3)}}),
          R.binomial({{3, d.alpha[2]}}, {{1, d.a(3, 1)}, {2, d.a(3, 2)}}),
      };
    }
    case ClassTag::ThreeGenSymmetricCI: {
      const auto& d = std::get<CI3Data>(c.data);
      const RoleRing R(g, detail::perm_vector(d.perm));
      return {
          R.binomial({{1, d.m2}}, {{2, d.m1}}),
          R.binomial({{3, d.alpha3}}, {{1, d.chosen[0]}, {2, d.chosen[1]}}),
      };
    }
    case ClassTag::FourGenCI: {
      const auto& ci = std::get<CI4Data>(c.data);
      if (const auto* one = std::get_if<CI4CaseI>(&ci.decomposition)) {
        const RoleRing R(g, detail::perm_vector(one->perm));
        const auto& in = one->inner;
        return {
            R.binomial({{1, in.m2}}, {{2, in.m1}}),
            R.binomial({{3, in.alpha3}}, {{1, in.chosen[0]}, {2, in.chosen[1]}}),
            R.binomial({{4, one->ell}},
                       {{1, one->chosen[0]}, {2, one->chosen[1]}, {3, one->chosen[2]}}),
        };
      }
      const auto& two = std::get<CI4CaseII>(ci.decomposition);
      const RoleRing R(g, detail::perm_vector(two.perm));
      return {
          R.binomial({{1, two.alpha[0]}}, {{2, two.alpha[1]}}),
          R.binomial({{3, two.alpha[2]}}, {{4, two.alpha[3]}}),
          R.binomial({{1, two.chosen[0]}, {2, two.chosen[1]}},
                     {{3, two.chosen[2]}, {4, two.chosen[3]}}),
      };
    }
    case ClassTag::FourGenSymmetricNonCI: {
      const auto& d = std::get<BresinskyData>(c.data);
      const RoleRing R(g, detail::perm_vector(d.perm));
      return {
          R.binomial({{1, d.alpha[0]}}, {{3, d.a(1, 3)}, {4, d.a(1, 4)}}),
          R.binomial({{2, d.alpha[1]}}, {{1, d.a(2, 1)}, {4, d.a(2, 4)}}),
          R.binomial({{3, d.alpha[2]}}, {{1, d.a(3, 1)}, {2, d.a(3, 2)}}),
          R.binomial({{4, d.alpha[3]}}, {{2, d.a(4, 2)}, {3, d.a(4, 3)}}),
          R.binomial({{3, d.a(4, 3)}, {1, d.a(2, 1)}}, {{2, d.a(3, 2)}, {4, d.a(1, 4)}}),
      };
    }
    case ClassTag::FourGenPseudosymmetric: {
      const auto& d = std::get<KomedaData>(c.data);
      const RoleRing R(g, detail::perm_vector(d.perm));
      const Int a1 = d.alpha[0], a2 = d.alpha[1], a3 = d.alpha[2], a4 = d.alpha[3];
      const Int a21 = d.alpha21;
      return {
          R.binomial({{1, a1}}, {{3, 1}, {4, a4 - 1}}),
          R.binomial({{2, a2}}, {{1, a21}, {4, 1}}),
          R.binomial({{3, a3}}, {{1, a1 - a21 - 1}, {2, 1}}),
          R.binomial({{4, a4}}, {{1, 1}, {2, a2 - 1}, {3, a3 - 1}}),
          R.binomial({{3, a3 - 1}, {1, a21 + 1}}, {{2, 1}, {4, a4 - 1}}),
      };
    }
    case ClassTag::Unsupported: break;
  }
  throw UnsupportedClass("no presentation for " + c.semigroup.to_string() + " (" + c.note + ")");
}

}  // namespace semires
