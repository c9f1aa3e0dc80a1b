#include "semires/invariants.hpp"

#include <algorithm>
#include <initializer_list>
#include <sstream>

#include "semires/checked.hpp"
#include "semires/errors.hpp"

namespace semires {

namespace {

// Sum of coefficient * generator products with overflow checks.
Int lin(std::initializer_list<std::pair<Int, Int>> terms) {
  Int acc = 0;
  for (auto [c, n] : terms) acc = checked::add(acc, checked::mul(c, n));
  return acc;
}

DegreeRelation relation(std::string name, std::vector<DegreeExpression> alts,
                        std::vector<DegreeExpression> misprints = {}) {
  for (std::size_t i = 1; i < alts.size(); ++i)
    if (alts[i].value != alts[0].value)
      throw ConsistencyFailure(name + ": " + alts[0].text + " = " + std::to_string(alts[0].value) +
                               " but " + alts[i].text + " = " + std::to_string(alts[i].value));
  DegreeRelation r{std::move(name), alts.front().value, std::move(alts), std::move(misprints)};
  return r;
}

DegreeRelations symmetric_relations(const Classification& c) {
  const auto& d = std::get<BresinskyData>(c.data);
  const auto n = role_generators(c.semigroup, d.perm);
  const Int n1 = n[0], n2 = n[1], n3 = n[2], n4 = n[3];
  const Int a1 = d.alpha[0], a2 = d.alpha[1], a3 = d.alpha[2], a4 = d.alpha[3];
  auto A = [&](int i, int j) { return d.a(i, j); };

  DegreeRelations out;
  out.tag = c.tag;
  out.middle.push_back(relation(
      "a1", {{"alpha2*n2 + alpha43*n3", lin({{a2, n2}, {A(4, 3), n3}})},
             {"alpha4*n4 + alpha32*n2", lin({{a4, n4}, {A(3, 2), n2}})},
             {"alpha21*n1 + alpha43*n3 + alpha24*n4", lin({{A(2, 1), n1}, {A(4, 3), n3}, {A(2, 4), n4}})}}));
  out.middle.push_back(relation(
      "a2", {{"alpha1*n1 + alpha43*n3", lin({{a1, n1}, {A(4, 3), n3}})},
             {"alpha3*n3 + alpha14*n4", lin({{a3, n3}, {A(1, 4), n4}})},
             {"alpha32*n2 + alpha14*n4 + alpha31*n1", lin({{A(3, 2), n2}, {A(1, 4), n4}, {A(3, 1), n1}})}}));
  out.middle.push_back(relation(
      "a3", {{"alpha2*n2 + alpha14*n4", lin({{a2, n2}, {A(1, 4), n4}})},
             {"alpha4*n4 + alpha21*n1", lin({{a4, n4}, {A(2, 1), n1}})},
             {"alpha21*n1 + alpha43*n3 + alpha42*n2", lin({{A(2, 1), n1}, {A(4, 3), n3}, {A(4, 2), n2}})}}));
  out.middle.push_back(relation(
      "a4", {{"alpha1*n1 + alpha32*n2", lin({{a1, n1}, {A(3, 2), n2}})},
             {"alpha3*n3 + alpha21*n1", lin({{a3, n3}, {A(2, 1), n1}})},
             {"alpha32*n2 + alpha14*n4 + alpha13*n3", lin({{A(3, 2), n2}, {A(1, 4), n4}, {A(1, 3), n3}})}}));
  out.middle.push_back(relation(
      "a5", {{"alpha1*n1 + alpha24*n4", lin({{a1, n1}, {A(2, 4), n4}})},
             {"alpha2*n2 + alpha31*n1", lin({{a2, n2}, {A(3, 1), n1}})},
             {"alpha3*n3 + alpha42*n2", lin({{a3, n3}, {A(4, 2), n2}})},
             {"alpha4*n4 + alpha13*n3", lin({{a4, n4}, {A(1, 3), n3}})}}));
  const auto& av = out.middle;
  out.top.push_back(relation(
      "s0", {{"a1 + alpha1*n1", checked::add(av[0].value, lin({{a1, n1}}))},
             {"a2 + alpha2*n2", checked::add(av[1].value, lin({{a2, n2}}))},
             {"a3 + alpha3*n3", checked::add(av[2].value, lin({{a3, n3}}))},
             {"a4 + alpha4*n4", checked::add(av[3].value, lin({{a4, n4}}))},
             {"a5 + alpha21*n1 + alpha43*n3",
              checked::add(av[4].value, lin({{A(2, 1), n1}, {A(4, 3), n3}}))}}));
  return out;
}

DegreeRelations pseudosymmetric_relations(const Classification& c) {
  const auto& d = std::get<KomedaData>(c.data);
  const auto n = role_generators(c.semigroup, d.perm);
  const Int n1 = n[0], n2 = n[1], n3 = n[2], n4 = n[3];
  const Int a1 = d.alpha[0], a2 = d.alpha[1], a3 = d.alpha[2], a4 = d.alpha[3], a21 = d.alpha21;

  DegreeRelations out;
  out.tag = c.tag;
  out.middle.push_back(relation(
      "b1", {{"alpha1*n1 + n2", lin({{a1, n1}, {1, n2}})},
             {"alpha3*n3 + (alpha21+1)*n1", lin({{a3, n3}, {a21 + 1, n1}})},
             {"n2 + n3 + (alpha4-1)*n4", lin({{1, n2}, {1, n3}, {a4 - 1, n4}})}}));
  // deg f2 + deg f3.
  out.middle.push_back(relation("b2", {{"alpha2*n2 + alpha3*n3", lin({{a2, n2}, {a3, n3}})}}));
  out.middle.push_back(relation(
      "b3", {{"alpha1*n1 + (alpha3-1)*n3", lin({{a1, n1}, {a3 - 1, n3}})},
             {"alpha3*n3 + (alpha4-1)*n4", lin({{a3, n3}, {a4 - 1, n4}})},
             {"(alpha1-alpha21-1)*n1 + n2 + (alpha4-1)*n4",
              lin({{a1 - a21 - 1, n1}, {1, n2}, {a4 - 1, n4}})}}));
  out.middle.push_back(relation(
      "b4", {{"alpha2*n2 + n1 + (alpha3-1)*n3", lin({{a2, n2}, {1, n1}, {a3 - 1, n3}})},
             {"alpha4*n4 + n2", lin({{a4, n4}, {1, n2}})},
             {"(alpha21+1)*n1 + (alpha3-1)*n3 + n4", lin({{a21 + 1, n1}, {a3 - 1, n3}, {1, n4}})}}));
  out.middle.push_back(relation(
      "b5", {{"alpha1*n1 + n4", lin({{a1, n1}, {1, n4}})},
             {"(alpha1-alpha21)*n1 + alpha2*n2", lin({{a1 - a21, n1}, {a2, n2}})},
             {"n1 + (alpha2-1)*n2 + alpha3*n3", lin({{1, n1}, {a2 - 1, n2}, {a3, n3}})},
             {"n3 + alpha4*n4", lin({{1, n3}, {a4, n4}})}}));
  out.middle.push_back(relation(
      "b6", {{"alpha2*n2 + (alpha4-1)*n4", lin({{a2, n2}, {a4 - 1, n4}})},
             {"alpha21*n1 + alpha4*n4", lin({{a21, n1}, {a4, n4}})},
             {"(alpha21+1)*n1 + (alpha2-1)*n2 + (alpha3-1)*n3",
              lin({{a21 + 1, n1}, {a2 - 1, n2}, {a3 - 1, n3}})}}));
  const auto b = [&](std::size_t i) { return out.middle[i - 1].value; };
  // The first column of phi3 has zeros against b3 and b6, so the printed
  // b3 and b6 expressions for c1 are not relations; b2 + n1 is.
  out.top.push_back(relation(
      "c1",
      {{"b1 + n4", checked::add(b(1), n4)},
       {"b2 + n1", checked::add(b(2), n1)},
       {"b4 + n3", checked::add(b(4), n3)},
       {"b5 + n2", checked::add(b(5), n2)}},
      {{"b3 + (alpha21+1)*n1", checked::add(b(3), lin({{a21 + 1, n1}}))},
       {"b6 + alpha3*n3", checked::add(b(6), lin({{a3, n3}}))}}));
  out.top.push_back(relation(
      "c2",
      {{"b1 + (alpha2-1)*n2 + (alpha3-1)*n3", checked::add(b(1), lin({{a2 - 1, n2}, {a3 - 1, n3}}))},
       {"alpha2*n2 + alpha3*n3 + (alpha4-1)*n4", lin({{a2, n2}, {a3, n3}, {a4 - 1, n4}})},
       {"b3 + alpha2*n2", checked::add(b(3), lin({{a2, n2}}))},
       {"b4 + (alpha1-1)*n1", checked::add(b(4), lin({{a1 - 1, n1}}))},
       {"b5 + alpha21*n1 + (alpha3-1)*n3", checked::add(b(5), lin({{a21, n1}, {a3 - 1, n3}}))},
       {"b6 + alpha3*n3", checked::add(b(6), lin({{a3, n3}}))}}));
  return out;
}

void match_level(const std::vector<DegreeRelation>& rel, const std::vector<Int>& twists,
                 const std::string& level) {
  if (rel.size() != twists.size())
    throw ConsistencyFailure(level + ": " + std::to_string(rel.size()) + " relations but " +
                             std::to_string(twists.size()) + " basis elements");
  for (std::size_t i = 0; i < rel.size(); ++i)
    if (rel[i].value != twists[i])
      throw ConsistencyFailure(rel[i].name + " = " + std::to_string(rel[i].value) +
                               " but the resolution has twist " + std::to_string(twists[i]) +
                               " at " + level + " column " + std::to_string(i + 1));
}

}  // namespace

Int KPolynomial::coefficient(Int e) const {
  const auto it = terms.find(e);
  return it == terms.end() ? 0 : it->second;
}

Int KPolynomial::value_at_one() const {
  Int acc = 0;
  for (const auto& [e, c] : terms) acc = checked::add(acc, c);
  return acc;
}

std::string KPolynomial::to_string() const {
  if (terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms) {
    const Int mag = c < 0 ? -c : c;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (e == 0) {
      os << mag;
      continue;
    }
    if (mag != 1) os << mag << "*";
    os << "z";
    if (e != 1) os << "^" << e;
  }
  return os.str();
}

KPolynomial k_polynomial(const GradedResolution& r) {
  KPolynomial k;
  for (std::size_t i = 0; i < r.betti_degrees.size(); ++i) {
    const Int sign = (i % 2 == 0) ? 1 : -1;
    for (Int s : r.betti_degrees[i]) k.terms[s] = checked::add(k.terms[s], sign);
  }
  std::erase_if(k.terms, [](const auto& t) { return t.second == 0; });
  return k;
}

Int default_hilbert_degree(const NumericalSemigroup& s) {
  return checked::add(checked::add(s.frobenius(), s.generator_sum()), 5);
}

HilbertCheck hilbert_series(const GradedResolution& r, Int max_degree) {
  if (max_degree < 0) throw InvalidParameters("truncation degree must be nonnegative");
  HilbertCheck h;
  h.max_degree = max_degree;
  auto& c = h.series;
  c.assign(static_cast<std::size_t>(max_degree) + 1, 0);
  for (const auto& [e, coef] : k_polynomial(r).terms)
    if (e <= max_degree) c[static_cast<std::size_t>(e)] = coef;
  // Multiply by 1/(1 - z^n) for each generator.
  for (Int n : r.semigroup.generators())
    for (Int d = n; d <= max_degree; ++d)
      c[static_cast<std::size_t>(d)] =
          checked::add(c[static_cast<std::size_t>(d)], c[static_cast<std::size_t>(d - n)]);
  for (Int d = 0; d <= max_degree; ++d) {
    const Int want = r.semigroup.contains(d) ? 1 : 0;
    if (c[static_cast<std::size_t>(d)] != want) h.mismatches.push_back(d);
  }
  h.passed = h.mismatches.empty();
  return h;
}

bool hilbert_check(const GradedResolution& r, Int max_degree) {
  return hilbert_series(r, max_degree).passed;
}

std::vector<Int> pf_from_betti(const GradedResolution& r) {
  std::vector<Int> out;
  for (Int s : r.betti_degrees.back()) out.push_back(checked::sub(s, r.N));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Int> closed_form_pf(const Classification& c) {
  const Int N = c.semigroup.generator_sum();
  std::vector<Int> out;
  switch (c.tag) {
    case ClassTag::ThreeGenNonSymmetric: {
      const auto& d = std::get<HerzogData>(c.data);
      const Int n1 = c.semigroup.generator(0), n2 = c.semigroup.generator(1),
                n3 = c.semigroup.generator(2);
      out = {checked::sub(lin({{d.alpha[0], n1}, {d.a(2, 3), n3}}), N),
             checked::sub(lin({{d.alpha[0], n1}, {d.a(3, 2), n2}}), N)};
      break;
    }
    case ClassTag::FourGenSymmetricNonCI: {
      const auto& d = std::get<BresinskyData>(c.data);
      const auto n = role_generators(c.semigroup, d.perm);
      out = {checked::sub(lin({{d.alpha[0], n[0]}, {d.a(3, 2), n[1]}, {d.alpha[3], n[3]}}), N)};
      break;
    }
    case ClassTag::FourGenPseudosymmetric: {
      const auto& d = std::get<KomedaData>(c.data);
      const auto n = role_generators(c.semigroup, d.perm);
      out = {checked::sub(lin({{d.alpha[0], n[0]}, {1, n[1]}, {1, n[3]}}), N),
             checked::sub(lin({{d.alpha[0], n[0]}, {d.alpha[1], n[1]}, {d.alpha[2] - 1, n[2]}}), N)};
      break;
    }
    default:
      throw UnsupportedClass("no closed-form PF for class " + to_string(c.tag));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Int> DegreeRelations::middle_values() const {
  std::vector<Int> out;
  for (const auto& r : middle) out.push_back(r.value);
  return out;
}

std::vector<Int> DegreeRelations::top_values() const {
  std::vector<Int> out;
  for (const auto& r : top) out.push_back(r.value);
  return out;
}

DegreeRelations degree_relations(const Classification& c) {
  switch (c.tag) {
    case ClassTag::FourGenSymmetricNonCI: return symmetric_relations(c);
    case ClassTag::FourGenPseudosymmetric: return pseudosymmetric_relations(c);
    default:
      throw UnsupportedClass("no degree relations for class " + to_string(c.tag));
  }
}

DegreeRelations degree_relations(const Classification& c, const GradedResolution& r) {
  auto rel = degree_relations(c);
  if (r.basis_degrees.size() != 4)
    throw ConsistencyFailure("expected a length-3 resolution");
  match_level(rel.middle, r.basis_degrees[2], "level 2");
  match_level(rel.top, r.basis_degrees[3], "level 3");
  return rel;
}

}  // namespace semires
