#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "semires/errors.hpp"
#include "semires/indispensability.hpp"

using namespace semires;

namespace {

NumericalSemigroup S(std::vector<Int> g) { return NumericalSemigroup::create(std::move(g)); }

// Levels where two Betti degrees differ by an element of S (0 included).
std::set<std::size_t> bad_levels(const GradedResolution& r, const oracle::Membership& o) {
  std::set<std::size_t> out;
  for (std::size_t i = 1; i < r.betti_degrees.size(); ++i) {
    const auto& lv = r.betti_degrees[i];
    for (std::size_t a = 0; a < lv.size(); ++a)
      for (std::size_t b = a + 1; b < lv.size(); ++b)
        if (o.contains(std::abs(lv[a] - lv[b]))) out.insert(i);
  }
  return out;
}

std::vector<NumericalSemigroup> sorted_cis(std::size_t k, Int max, ClassTag tag) {
  std::vector<NumericalSemigroup> out;
  std::vector<Int> g(k);
  auto rec = [&](auto&& self, std::size_t pos, Int lo) -> void {
    if (pos == k) {
      try {
        auto s = NumericalSemigroup::create(g);
        if (classify(s).tag == tag) out.push_back(std::move(s));
      } catch (const Error&) {
      }
      return;
    }
    for (Int v = lo; v <= max; ++v) {
      g[pos] = v;
      self(self, pos + 1, v + 1);
    }
  };
  rec(rec, 0, 2);
  return out;
}

}  // namespace

TEST_CASE("uniqueness of representations") {
  const std::vector<Int> b{2, 3};
  CHECK(uniqueness_check(5, b, Constraint::AllNonzero).status == Uniqueness::UniqueAndPositive);
  CHECK(uniqueness_check(6, b, Constraint::AllNonzero).status == Uniqueness::NotUnique);
  CHECK(uniqueness_check(6, b, Constraint::AllNonzero).representations.size() == 2);
  CHECK(uniqueness_check(4, b, Constraint::AllNonzero).status == Uniqueness::HasForbiddenZero);
  CHECK(uniqueness_check(1, b, Constraint::AllNonzero).status == Uniqueness::NoRepresentation);

  const std::vector<Int> t{4, 6, 5};
  CHECK(uniqueness_check(9, t, Constraint::AtMostOneZero).status == Uniqueness::UniqueAndPositive);
  CHECK(uniqueness_check(4, t, Constraint::AtMostOneZero).status == Uniqueness::HasForbiddenZero);
  CHECK(to_string(Uniqueness::UniqueAndPositive) == "unique_and_positive");
}

TEST_CASE("differences at given levels") {
  const auto r = resolve(S({13, 9, 11, 14}));
  const auto rep = differences_check(r, {1, 2, 3});
  CHECK_FALSE(rep.verdict);
  CHECK(rep.levels_checked == std::set<std::size_t>{1, 2, 3});
  CHECK(rep.witnesses.size() == 10 + 15 + 1);
  // the top pair differs by g/2 = 15, a gap
  for (const auto& w : rep.witnesses)
    if (w.level == 3) {
      CHECK(w.diff == 15);
      CHECK_FALSE(w.in_semigroup);
      CHECK(w.pair == std::array<std::size_t, 2>{1, 2});
    }
  CHECK(rep.failing_levels().count(3) == 0);

  auto dup = resolve(S({7, 9, 10}));
  CHECK(differences_check(dup, {1, 2}).verdict);
  dup.betti_degrees[1] = {27, 27, 30};
  const auto bad = differences_check(dup, {1});
  CHECK_FALSE(bad.verdict);
  CHECK(bad.failing().front().diff == 0);
}

TEST_CASE("verdicts on small families") {
  CHECK(strong_indisp(S({4, 6, 5})).verdict);
  CHECK(strong_indisp(S({4, 6, 7})).verdict);
  CHECK_FALSE(strong_indisp(S({4, 6, 9})).verdict);
  CHECK(strong_indisp(S({4, 6, 9})).method == Method::CI3Criterion);
  CHECK(strong_indisp(S({8, 12, 10, 9})).verdict);
  CHECK_FALSE(strong_indisp(S({8, 12, 10, 17})).verdict);
  CHECK(strong_indisp(S({75, 180, 119, 136})).verdict);
  CHECK_FALSE(strong_indisp(S({12, 14, 15, 18})).verdict);
  CHECK(strong_indisp(S({7, 9, 8, 13})).method == Method::AlwaysTrue4SymNonCI);
  CHECK(strong_indisp(S({7, 9, 8, 13})).verdict);
  CHECK(strong_indisp(S({2, 3})).verdict);
  CHECK_FALSE(strong_indisp(S({13, 9, 11, 14})).verdict);
  CHECK(strong_indisp(S({13, 9, 11, 14})).method == Method::PseudoLevels12);
  CHECK_THROWS_AS(strong_indisp(S({6, 7, 8, 9})), UnsupportedClass);
}

TEST_CASE("cross validation on the worked examples") {
  for (auto g : std::vector<std::vector<Int>>{{4, 6, 5}, {4, 6, 9}, {8, 12, 10, 9}, {8, 12, 10, 17},
                                              {75, 180, 119, 136}, {12, 14, 15, 18}, {7, 9, 8, 13},
                                              {13, 9, 11, 14}, {7, 9, 10}}) {
    CAPTURE(g.size());
    const auto cv = cross_validate(S(g));
    CHECK(cv.agree());
  }
  const auto cv = cross_validate(S({7, 9, 8, 13}));
  CHECK(cv.differences.method == Method::SymmetricHalfCheck);
}

TEST_CASE("property: Bresinsky instances are always strongly indispensable") {
  std::mt19937_64 rng(11);
  for (const auto& s : oracle::random_bresinsky(rng, 200)) {
    CAPTURE(s.to_string());
    CHECK(strong_indisp(s).verdict);
    const auto r = resolve(s);
    CHECK(bad_levels(r, oracle::Membership(oracle::gens_of(s))).empty());
  }
}

TEST_CASE("property: Herzog instances pass at both levels") {
  std::mt19937_64 rng(12);
  for (const auto& s : oracle::random_herzog(rng, 200, 80)) {
    CAPTURE(s.to_string());
    const auto rep = strong_indisp(s);
    CHECK(rep.verdict);
    CHECK(rep.levels_checked == std::set<std::size_t>{1, 2});
    CHECK(bad_levels(resolve(s), oracle::Membership(oracle::gens_of(s))).empty());
  }
}

TEST_CASE("property: pseudosymmetric top pair differs by a gap") {
  std::mt19937_64 rng(13);
  for (const auto& s : oracle::random_komeda(rng, 150)) {
    CAPTURE(s.to_string());
    const auto r = resolve(s);
    const oracle::Membership o(oracle::gens_of(s));
    const auto& top = r.level(3);
    REQUIRE(top.size() == 2);
    CHECK(top[1] - top[0] == o.frobenius / 2);
    CHECK_FALSE(o.contains(top[1] - top[0]));
    const auto bad = bad_levels(r, o);
    CHECK(strong_indisp(s).verdict == bad.empty());
  }
}

TEST_CASE("property: closed forms agree with Betti differences on complete intersections") {
  for (const auto& s : sorted_cis(3, 30, ClassTag::ThreeGenSymmetricCI)) {
    CAPTURE(s.to_string());
    const auto r = resolve(s);
    CHECK(strong_indisp(s).verdict == bad_levels(r, oracle::Membership(oracle::gens_of(s))).empty());
  }
  for (const auto& s : sorted_cis(4, 26, ClassTag::FourGenCI)) {
    CAPTURE(s.to_string());
    const auto r = resolve(s);
    CHECK(strong_indisp(s).verdict == bad_levels(r, oracle::Membership(oracle::gens_of(s))).empty());
  }
}
