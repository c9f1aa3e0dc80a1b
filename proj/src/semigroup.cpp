#include "semires/semigroup.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <queue>
#include <sstream>
#include <utility>

#include "semires/checked.hpp"
#include "semires/errors.hpp"

namespace semires {

namespace {

void enumerate(std::span<const Int> base, const std::vector<Int>& prefix_gcd, std::size_t idx,
               Int remaining, std::vector<Int>& coeffs, Representations& out, Int target,
               std::size_t limit) {
  if (out.truncated) return;
  if (remaining % prefix_gcd[idx] != 0) return;
  if (idx == 0) {
    coeffs[0] = remaining / base[0];
    if (out.items.size() >= limit) {
      out.truncated = true;
      return;
    }
    out.items.push_back(Representation{coeffs, target});
    return;
  }
  for (Int u = remaining / base[idx]; u >= 0; --u) {
    coeffs[idx] = u;
    enumerate(base, prefix_gcd, idx - 1, remaining - u * base[idx], coeffs, out, target, limit);
    if (out.truncated) return;
  }
  coeffs[idx] = 0;
}

bool reachable(std::span<const Int> base, const std::vector<Int>& prefix_gcd, std::size_t idx,
               Int remaining) {
  if (remaining % prefix_gcd[idx] != 0) return false;
  if (idx == 0) return true;
  for (Int u = remaining / base[idx]; u >= 0; --u)
    if (reachable(base, prefix_gcd, idx - 1, remaining - u * base[idx])) return true;
  return false;
}

std::vector<Int> prefix_gcds(std::span<const Int> base) {
  std::vector<Int> g(base.size());
  Int acc = 0;
  for (std::size_t i = 0; i < base.size(); ++i) {
    acc = std::gcd(acc, base[i]);
    g[i] = acc;
  }
  return g;
}

void require_positive_base(std::span<const Int> base) {
  for (Int b : base)
    if (b <= 0) throw ZeroOrNegativeGenerator("representation base entries must be positive");
}

}  // namespace

Representations representations_over(std::span<const Int> base, Int target, std::size_t limit) {
  Representations out;
  if (target < 0) return out;
  if (base.empty()) {
    if (target == 0) out.items.push_back(Representation{{}, 0});
    return out;
  }
  require_positive_base(base);
  std::vector<Int> coeffs(base.size(), 0);
  enumerate(base, prefix_gcds(base), base.size() - 1, target, coeffs, out, target, limit);
  std::sort(out.items.begin(), out.items.end(),
            [](const Representation& a, const Representation& b) {
              return a.coefficients < b.coefficients;
            });
  return out;
}

bool in_span(std::span<const Int> base, Int target) {
  if (target < 0) return false;
  if (target == 0) return true;
  if (base.empty()) return false;
  require_positive_base(base);
  return reachable(base, prefix_gcds(base), base.size() - 1, target);
}

Int minimal_multiple(Int value, std::span<const Int> base) {
  if (base.empty()) throw InvalidParameters("minimal_multiple needs a nonempty base");
  const Int cap = *std::min_element(base.begin(), base.end());
  for (Int t = 1; t <= cap; ++t)
    if (in_span(base, checked::mul(t, value))) return t;
  // t = min(base) is always representable, so this is unreachable.
  throw VerificationFailure("minimal multiple search exceeded its cap");
}

std::string to_string(Symmetry s) {
  switch (s) {
    case Symmetry::Symmetric: return "Symmetric";
    case Symmetry::Pseudosymmetric: return "Pseudosymmetric";
    case Symmetry::Neither: return "Neither";
  }
  return "?";
}

std::vector<Int> apery_table(std::span<const Int> generators, Int modulus) {
  if (modulus <= 0) throw InvalidParameters("Apery modulus must be positive");
  std::vector<Int> dist(static_cast<std::size_t>(modulus), -1);
  using Item = std::pair<Int, Int>;  // (value, residue)
  std::priority_queue<Item, std::vector<Item>, std::greater<>> queue;
  dist[0] = 0;
  queue.emplace(0, 0);
  while (!queue.empty()) {
    auto [value, residue] = queue.top();
    queue.pop();
    if (value != dist[static_cast<std::size_t>(residue)]) continue;
    for (Int g : generators) {
      const Int next = checked::add(value, g);
      const auto r = static_cast<std::size_t>(next % modulus);
      if (dist[r] < 0 || next < dist[r]) {
        dist[r] = next;
        queue.emplace(next, static_cast<Int>(r));
      }
    }
  }
  return dist;
}

NumericalSemigroup NumericalSemigroup::create(std::vector<Int> generators) {
  if (generators.empty()) throw GcdNotOne("empty generator tuple");
  for (std::size_t i = 0; i < generators.size(); ++i)
    if (generators[i] <= 0)
      throw ZeroOrNegativeGenerator("generator " + std::to_string(i + 1) + " = " +
                                    std::to_string(generators[i]) + " is not positive");
  Int g = 0;
  for (Int n : generators) g = std::gcd(g, n);
  if (g != 1) throw GcdNotOne("gcd of generators is " + std::to_string(g));
  for (std::size_t i = 0; i < generators.size(); ++i) {
    std::vector<Int> others;
    for (std::size_t j = 0; j < generators.size(); ++j)
      if (j != i) others.push_back(generators[j]);
    if (in_span(others, generators[i]))
      throw NonMinimalGenerator(i, "generator " + std::to_string(i + 1) + " = " +
                                       std::to_string(generators[i]) +
                                       " lies in the semigroup generated by the others");
  }
  return NumericalSemigroup(std::move(generators));
}

NumericalSemigroup::NumericalSemigroup(std::vector<Int> gens) : gens_(std::move(gens)) {
  multiplicity_ = *std::min_element(gens_.begin(), gens_.end());
  for (Int n : gens_) sum_ = checked::add(sum_, n);
  apery_ = apery_table(gens_, multiplicity_);
  frobenius_ = *std::max_element(apery_.begin(), apery_.end()) - multiplicity_;
}

bool NumericalSemigroup::contains(Int n) const noexcept {
  if (n < 0) return false;
  return n >= apery_[static_cast<std::size_t>(n % multiplicity_)];
}

std::vector<Int> NumericalSemigroup::gaps() const {
  std::vector<Int> out;
  for (Int n = 1; n <= frobenius_; ++n)
    if (!contains(n)) out.push_back(n);
  return out;
}

std::vector<Int> NumericalSemigroup::apery(Int m) const {
  if (m <= 0 || !contains(m))
    throw NotInSemigroup(std::to_string(m) + " is not a nonzero element of " + to_string());
  return apery_table(gens_, m);
}

std::vector<Int> NumericalSemigroup::pseudofrobenius() const {
  std::vector<Int> candidates = gaps();
  if (frobenius_ < 0) candidates.push_back(frobenius_);  // S = N: PF = {-1}
  std::vector<Int> out;
  for (Int n : candidates) {
    bool ok = true;
    for (Int g : gens_)
      if (!contains(n + g)) {
        ok = false;
        break;
      }
    if (ok) out.push_back(n);
  }
  std::sort(out.begin(), out.end());
  return out;
}

Symmetry NumericalSemigroup::classify_symmetry() const {
  const auto pf = pseudofrobenius();
  if (pf.size() == 1 && pf[0] == frobenius_) return Symmetry::Symmetric;
  if (pf.size() == 2 && frobenius_ % 2 == 0 && pf[0] == frobenius_ / 2 && pf[1] == frobenius_)
    return Symmetry::Pseudosymmetric;
  return Symmetry::Neither;
}

Representations NumericalSemigroup::representations(Int s, std::size_t limit) const {
  return representations_over(gens_, s, limit);
}

std::string NumericalSemigroup::to_string() const {
  std::ostringstream os;
  os << '<';
  for (std::size_t i = 0; i < gens_.size(); ++i) os << (i ? "," : "") << gens_[i];
  os << '>';
  return os.str();
}

}  // namespace semires
