#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "semires/errors.hpp"
#include "semires/semigroup.hpp"

using namespace semires;

TEST_CASE("create rejects bad generating sets") {
  CHECK_THROWS_AS(NumericalSemigroup::create({2, 4}), GcdNotOne);
  CHECK_THROWS_AS(NumericalSemigroup::create({6, 10, 15, 30}), NonMinimalGenerator);
  CHECK_THROWS_AS(NumericalSemigroup::create({0, 3}), ZeroOrNegativeGenerator);
  CHECK_THROWS_AS(NumericalSemigroup::create({-2, 3}), ZeroOrNegativeGenerator);
  CHECK_THROWS_AS(NumericalSemigroup::create({}), Error);
  try {
    NumericalSemigroup::create({3, 5, 8});
    FAIL("8 = 3 + 5 should be rejected");
  } catch (const NonMinimalGenerator& e) {
    CHECK(e.index() == 2);
  }
}

TEST_CASE("order of generators is kept") {
  const auto s = NumericalSemigroup::create({13, 9, 11, 14});
  CHECK(s.generator(0) == 13);
  CHECK(s.multiplicity() == 9);
  CHECK(s.generator_sum() == 47);
  CHECK(s.embedding_dimension() == 4);
}

TEST_CASE("membership, gaps and frobenius on small examples") {
  const auto s = NumericalSemigroup::create({7, 9, 10});
  CHECK(s.contains(0));
  CHECK(s.contains(16));
  CHECK_FALSE(s.contains(22));
  CHECK_FALSE(s.contains(-7));
  CHECK(s.frobenius() == 22);

  const auto two = NumericalSemigroup::create({2, 3});
  CHECK(two.gaps() == std::vector<Int>{1});
  CHECK(two.frobenius() == 1);

  const auto b = NumericalSemigroup::create({7, 9, 8, 13});
  CHECK(b.frobenius() == 19);
  CHECK(b.pseudofrobenius() == std::vector<Int>{19});
  CHECK(b.type() == 1);
}

TEST_CASE("apery sets") {
  const auto s = NumericalSemigroup::create({7, 9, 10});
  const auto w = s.apery(7);
  REQUIRE(w.size() == 7);
  CHECK(w[0] == 0);
  for (std::size_t r = 1; r < 7; ++r) {
    CHECK(s.contains(w[r]));
    CHECK_FALSE(s.contains(w[r] - 7));
    CHECK(w[r] % 7 == static_cast<Int>(r));
  }
  CHECK(*std::max_element(w.begin(), w.end()) - 7 == s.frobenius());
  CHECK_THROWS_AS(s.apery(11), NotInSemigroup);
}

TEST_CASE("symmetry classes") {
  CHECK(NumericalSemigroup::create({7, 9, 8, 13}).classify_symmetry() == Symmetry::Symmetric);
  CHECK(NumericalSemigroup::create({13, 9, 11, 14}).classify_symmetry() == Symmetry::Pseudosymmetric);
  CHECK(NumericalSemigroup::create({5, 6, 7}).classify_symmetry() == Symmetry::Neither);
  CHECK(NumericalSemigroup::create({4, 6, 5}).classify_symmetry() == Symmetry::Symmetric);
}

TEST_CASE("representations") {
  const auto two = NumericalSemigroup::create({2, 3});
  const auto reps = two.representations(9);
  REQUIRE(reps.items.size() == 2);
  CHECK(reps.items[0].coefficients == std::vector<Int>{0, 3});
  CHECK(reps.items[1].coefficients == std::vector<Int>{3, 1});
  CHECK_FALSE(reps.truncated);
  CHECK(two.representations(1).items.empty());

  const auto capped = two.representations(60, 3);
  CHECK(capped.truncated);
  CHECK(capped.items.size() == 3);

  const std::vector<Int> base{6, 10};
  CHECK(in_span(base, 16));
  CHECK_FALSE(in_span(base, 15));
  CHECK(representations_over(base, 30).items.size() == 2);
  CHECK(minimal_multiple(9, std::vector<Int>{7, 10}) == 3);
}

TEST_CASE("property: semigroup agrees with a reachability oracle") {
  std::mt19937_64 rng(1729);
  for (std::size_t k : {2u, 3u, 4u, 5u}) {
    for (const auto& s : oracle::random_semigroups(rng, 60, k, 45)) {
      const oracle::Membership o(oracle::gens_of(s));
      CAPTURE(s.to_string());
      CHECK(s.frobenius() == o.frobenius);
      CHECK(s.gaps() == o.gaps());
      CHECK(s.pseudofrobenius() == o.pf());
      for (Int n = -3; n <= o.frobenius + 5; ++n) CHECK(s.contains(n) == o.contains(n));

      // symmetric iff the gap count is half of g + 1; pseudosymmetric iff PF = {g/2, g}
      const auto g = o.frobenius;
      const auto gaps = static_cast<Int>(o.gaps().size());
      const auto sym = s.classify_symmetry();
      CHECK((sym == Symmetry::Symmetric) == (2 * gaps == g + 1));
      CHECK((sym == Symmetry::Pseudosymmetric) == (g % 2 == 0 && o.pf() == std::vector<Int>{g / 2, g}));
    }
  }
}

TEST_CASE("property: representation counts match brute force") {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<Int> target(0, 70);
  for (const auto& s : oracle::random_semigroups(rng, 40, 3, 20)) {
    const auto base = oracle::gens_of(s);
    for (int i = 0; i < 5; ++i) {
      const Int t = target(rng);
      const auto reps = s.representations(t);
      CHECK(reps.items.size() == oracle::count_representations(base, t));
      for (const auto& r : reps.items) {
        Int sum = 0;
        for (std::size_t j = 0; j < base.size(); ++j) sum += r.coefficients[j] * base[j];
        CHECK(sum == t);
      }
      CHECK(std::is_sorted(reps.items.begin(), reps.items.end(),
                           [](const auto& a, const auto& b) { return a.coefficients < b.coefficients; }));
    }
  }
}
