#include <random>

#include "doctest.h"
#include "semires/errors.hpp"
#include "semires/graded_matrix.hpp"
#include "semires/poly.hpp"

using namespace semires;

namespace {

GradingPtr g4() { return make_grading(std::vector<Int>{13, 9, 11, 14}); }

// Random polynomial with small coefficients and exponents, any degree.
Poly random_poly(std::mt19937_64& rng, const GradingPtr& g, int terms) {
  std::uniform_int_distribution<Int> coeff(-3, 3), expo(0, 2);
  Poly p(g);
  for (int t = 0; t < terms; ++t) {
    std::vector<Int> e(g->nvars());
    for (auto& x : e) x = expo(rng);
    p += Poly::term(g, Monomial(e), coeff(rng));
  }
  return p;
}

}  // namespace

TEST_CASE("sdegree and homogeneity") {
  const auto s = NumericalSemigroup::create({7, 9, 10});
  CHECK(sdegree(Monomial({4, 0, 0}), s) == 28);
  CHECK(sdegree(Monomial({1, 1, 1}), s) == 26);
  CHECK_THROWS_AS(sdegree(Monomial({1, 1}), s), DimensionMismatch);

  const auto g = make_grading(s);
  const auto f = Poly::parse("x1^4 - x2^2*x3", g);
  CHECK(is_homogeneous(f, s) == std::optional<Int>(28));
  CHECK_FALSE(is_homogeneous(Poly::parse("x1 - x2", g), s).has_value());
  CHECK_FALSE(Poly(g).homogeneous_degree().has_value());
}

TEST_CASE("parse and render") {
  const auto g = g4();
  const auto f = Poly::parse("x1^2*x3 - x2*x4^2", g);
  CHECK(f.size() == 2);
  CHECK(Poly::parse(f.to_string(), g) == f);
  CHECK(Poly::parse("x1^2*x3 − x2*x4^2", g) == f);
  CHECK(Poly::parse("0", g).is_zero());
  CHECK(Poly(g).to_string() == "0");
  CHECK(Poly::parse("3*x1 - 2", g) == Poly::var(g, 0).scaled(3) - Poly::constant(g, 2));
  CHECK_THROWS_AS(Poly::parse("x9", g), ParseError);
  CHECK_THROWS_AS(Poly::parse("x1^", g), ParseError);
  CHECK_THROWS_AS(Poly::parse("x1 + * x2", g), ParseError);
}

TEST_CASE("arithmetic across rings is refused") {
  const auto a = Poly::var(g4(), 0);
  const auto b = Poly::var(make_grading(std::vector<Int>{2, 3}), 0);
  CHECK_THROWS_AS(a + b, DimensionMismatch);
}

TEST_CASE("property: ring axioms and round trip") {
  std::mt19937_64 rng(4242);
  const auto g = g4();
  for (int i = 0; i < 150; ++i) {
    const auto a = random_poly(rng, g, 4);
    const auto b = random_poly(rng, g, 3);
    const auto c = random_poly(rng, g, 3);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a - a).is_zero());
    CHECK(a + neg(a) == Poly(g));
    CHECK(a.pow(2) == a * a);
    CHECK(a * Poly::constant(g, 1) == a);
    CHECK(Poly::parse(a.to_string(), g) == a);
  }
}

TEST_CASE("determinant and pfaffian") {
  const auto g = g4();
  auto x = [&](std::size_t i) { return Poly::var(g, i); };
  const Poly z(g);
  // [[0,a,b,c],[-a,0,d,e],[-b,-d,0,f],[-c,-e,-f,0]] with pf = af - be + cd
  std::vector<std::vector<Poly>> m{{z, x(0), x(1), x(2)},
                                   {-x(0), z, x(3), x(0) * x(1)},
                                   {-x(1), -x(3), z, x(2) * x(3)},
                                   {-x(2), -(x(0) * x(1)), -(x(2) * x(3)), z}};
  const auto pf = pfaffian4(m);
  CHECK(pf == x(0) * x(2) * x(3) - x(1) * x(0) * x(1) + x(2) * x(3));
  CHECK(determinant(m) == pf * pf);
  m[0][1] = x(3);
  CHECK_THROWS_AS(pfaffian4(m), NotSkewSymmetric);

  const auto one = Poly::constant(g, 1);
  CHECK(determinant({{one}}) == one);
  CHECK(determinant({{x(0), x(1)}, {x(2), x(3)}}) == x(0) * x(3) - x(1) * x(2));
  CHECK(delete_row_col(m, 0).size() == 3);
}

TEST_CASE("property: det of a random alternating 4x4 is the square of its pfaffian") {
  std::mt19937_64 rng(7);
  const auto g = make_grading(std::vector<Int>{2, 3, 5});
  for (int t = 0; t < 60; ++t) {
    std::vector<std::vector<Poly>> m(4, std::vector<Poly>(4, Poly(g)));
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = i + 1; j < 4; ++j) {
        m[i][j] = random_poly(rng, g, 2);
        m[j][i] = -m[i][j];
      }
    const auto pf = pfaffian4(m);
    CHECK(determinant(m) == pf * pf);
  }
}

TEST_CASE("graded matrices") {
  const auto s = NumericalSemigroup::create({7, 9, 10});
  const auto g = make_grading(s);
  const auto f1 = Poly::parse("x1^4 - x2^2*x3", g);
  const auto f2 = Poly::parse("x2^3 - x1*x3^2", g);

  GradedMatrix row(g, {0}, {28, 27}, {f1, f2});
  CHECK(row.rows() == 1);
  CHECK(row.grading_violations().empty());
  CHECK_THROWS_AS(GradedMatrix(g, {0}, {27, 28}, {f1, f2}), DegreeMismatch);
  CHECK_THROWS_AS(row.set(0, 0, f2), DegreeMismatch);

  // the Koszul syzygy (f2, -f1)^t
  GradedMatrix col(g, {28, 27}, {55}, {f2, -f1});
  const auto prod = mat_mul(row, col);
  CHECK(prod.is_zero());
  CHECK(prod.row_degrees() == std::vector<Int>{0});
  CHECK(prod.col_degrees() == std::vector<Int>{55});

  GradedMatrix bad(g, {27, 28}, {55}, {f1, -f2});
  CHECK_THROWS_AS(mat_mul(row, bad), DegreeMismatch);

  const std::vector<std::size_t> r0{0}, c1{1};
  CHECK(minor(row, r0, c1) == f2);
  CHECK(row.transposed_entries().size() == 2);
  CHECK(GradedMatrix(g, {0, 0}, {5}).is_zero());
}
