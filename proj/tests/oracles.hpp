#pragma once

// Brute-force references and random instance generators for the unit tests.

#include <algorithm>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "semires/errors.hpp"
#include "semires/presentation.hpp"
#include "semires/semigroup.hpp"

namespace oracle {

using semires::Int;

// Sums of generators reachable up to a bound past the conductor.
struct Membership {
  std::vector<Int> gens;
  std::vector<bool> in;
  Int frobenius = -1;

  explicit Membership(std::vector<Int> g) : gens(std::move(g)) {
    const Int lo = *std::min_element(gens.begin(), gens.end());
    const Int hi = *std::max_element(gens.begin(), gens.end());
    const Int bound = (lo - 1) * (hi - 1) + 2 * hi + 8;
    in.assign(static_cast<std::size_t>(bound) + 1, false);
    in[0] = true;
    for (Int n = 1; n <= bound; ++n)
      for (Int x : gens)
        if (x <= n && in[static_cast<std::size_t>(n - x)]) {
          in[static_cast<std::size_t>(n)] = true;
          break;
        }
    for (Int n = bound; n >= 0; --n)
      if (!in[static_cast<std::size_t>(n)]) {
        frobenius = n;
        break;
      }
  }

  bool contains(Int n) const {
    if (n < 0) return false;
    if (n >= static_cast<Int>(in.size())) return true;
    return in[static_cast<std::size_t>(n)];
  }

  std::vector<Int> gaps() const {
    std::vector<Int> out;
    for (Int n = 1; n <= frobenius; ++n)
      if (!contains(n)) out.push_back(n);
    return out;
  }

  std::vector<Int> pf() const {
    std::vector<Int> out;
    for (Int n : gaps()) {
      bool ok = true;
      for (Int x : gens) ok = ok && contains(n + x);
      if (ok) out.push_back(n);
    }
    return out;
  }
};

// Number of nonnegative solutions of sum c_i * base_i = target, by nested loops.
inline std::size_t count_representations(const std::vector<Int>& base, Int target) {
  if (base.empty()) return target == 0 ? 1 : 0;
  std::vector<Int> rest(base.begin() + 1, base.end());
  std::size_t total = 0;
  for (Int c = 0; c * base[0] <= target; ++c) total += count_representations(rest, target - c * base[0]);
  return total;
}

inline std::vector<Int> gens_of(const semires::NumericalSemigroup& s) {
  return {s.generators().begin(), s.generators().end()};
}

// Random minimal generating sets of size k with entries in [2, max].
inline std::vector<semires::NumericalSemigroup> random_semigroups(std::mt19937_64& rng, std::size_t count,
                                                                  std::size_t k, Int max) {
  std::uniform_int_distribution<Int> dist(2, max);
  std::set<std::vector<Int>> seen;
  std::vector<semires::NumericalSemigroup> out;
  for (std::size_t tries = 0; out.size() < count && tries < 200 * count; ++tries) {
    std::vector<Int> g(k);
    for (auto& x : g) x = dist(rng);
    auto key = g;
    std::sort(key.begin(), key.end());
    if (std::adjacent_find(key.begin(), key.end()) != key.end() || !seen.insert(key).second) continue;
    try {
      out.push_back(semires::NumericalSemigroup::create(g));
    } catch (const semires::Error&) {
    }
  }
  return out;
}

inline std::vector<semires::NumericalSemigroup> random_komeda(std::mt19937_64& rng, std::size_t count) {
  std::uniform_int_distribution<Int> dist(2, 8);
  std::set<std::vector<Int>> seen;
  std::vector<semires::NumericalSemigroup> out;
  for (std::size_t tries = 0; out.size() < count && tries < 200 * count; ++tries) {
    const Int a1 = dist(rng);
    std::uniform_int_distribution<Int> d21(1, a1 - 1);
    try {
      auto s = semires::from_komeda({a1, dist(rng), dist(rng), dist(rng), d21(rng)});
      if (seen.insert(gens_of(s)).second) out.push_back(std::move(s));
    } catch (const semires::InvalidParameters&) {
    }
  }
  return out;
}

inline std::vector<semires::NumericalSemigroup> random_bresinsky(std::mt19937_64& rng, std::size_t count) {
  std::uniform_int_distribution<Int> dist(1, 4);
  std::set<std::vector<Int>> seen;
  std::vector<semires::NumericalSemigroup> out;
  for (std::size_t tries = 0; out.size() < count && tries < 200 * count; ++tries) {
    semires::BresinskyParams p{dist(rng), dist(rng), dist(rng), dist(rng),
                               dist(rng), dist(rng), dist(rng), dist(rng)};
    try {
      auto s = semires::from_bresinsky(p);
      if (seen.insert(gens_of(s)).second) out.push_back(std::move(s));
    } catch (const semires::InvalidParameters&) {
    }
  }
  return out;
}

inline std::vector<semires::NumericalSemigroup> random_herzog(std::mt19937_64& rng, std::size_t count, Int max) {
  std::vector<semires::NumericalSemigroup> out;
  while (out.size() < count) {
    for (auto& s : random_semigroups(rng, count, 3, max))
      if (s.classify_symmetry() != semires::Symmetry::Symmetric && out.size() < count) out.push_back(s);
  }
  return out;
}

}  // namespace oracle
