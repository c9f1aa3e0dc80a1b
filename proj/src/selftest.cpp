#include "semires/selftest.hpp"

#include <functional>
#include <sstream>

#include "semires/errors.hpp"
#include "semires/graded_matrix.hpp"
#include "semires/indispensability.hpp"
#include "semires/invariants.hpp"
#include "semires/presentation.hpp"
#include "semires/resolution.hpp"

namespace semires {

namespace {

template <typename T>
std::string show(const std::vector<T>& v) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << "]";
  return os.str();
}

NumericalSemigroup S(std::vector<Int> g) { return NumericalSemigroup::create(std::move(g)); }

KPolynomial kpoly(std::initializer_list<std::pair<Int, Int>> t) {
  KPolynomial k;
  for (auto [e, c] : t) k.terms[e] = c;
  return k;
}

class Table {
 public:
  void add(std::string group, std::string name, const std::function<std::pair<bool, std::string>()>& f) {
    SelftestCheck c{std::move(group), std::move(name), false, ""};
    try {
      auto [ok, detail] = f();
      c.passed = ok;
      c.detail = std::move(detail);
    } catch (const std::exception& e) {
      c.detail = std::string("exception: ") + e.what();
    }
    checks_.push_back(std::move(c));
  }
  std::vector<SelftestCheck> take() { return std::move(checks_); }

 private:
  std::vector<SelftestCheck> checks_;
};

std::vector<std::size_t> levels(const IndispensabilityReport& r) {
  const auto l = r.failing_levels();
  return {l.begin(), l.end()};
}

bool indisp_verdict(std::vector<Int> g) { return strong_indisp(S(std::move(g))).verdict; }

}  // namespace

std::vector<SelftestCheck> run_selftest() {
  Table t;

  // 1: <7,9,10>
  t.add("1", "<7,9,10> Herzog alphas", [] {
    const auto c = classify(S({7, 9, 10}));
    const auto& d = std::get<HerzogData>(c.data);
    const bool ok = c.tag == ClassTag::ThreeGenNonSymmetric && d.alpha == std::array<Int, 3>{4, 3, 3} &&
                    d.a(1, 2) == 2 && d.a(1, 3) == 1 && d.a(2, 1) == 1 && d.a(2, 3) == 2 &&
                    d.a(3, 1) == 3 && d.a(3, 2) == 1;
    return std::pair{ok, show(std::vector<Int>(d.alpha.begin(), d.alpha.end()))};
  });
  t.add("1", "<7,9,10> Betti degrees", [] {
    const auto r = resolve(S({7, 9, 10}));
    const bool ok = r.level(1) == std::vector<Int>{27, 28, 30} && r.level(2) == std::vector<Int>{37, 48};
    return std::pair{ok, show(r.level(1)) + " " + show(r.level(2))};
  });
  t.add("1", "<7,9,10> PF", [] {
    const auto s = S({7, 9, 10});
    const auto r = resolve(s);
    const std::vector<Int> want{11, 22};
    const bool ok = pf_from_betti(r) == want && s.pseudofrobenius() == want &&
                    closed_form_pf(classify(s)) == want;
    return std::pair{ok, show(pf_from_betti(r))};
  });
  t.add("1", "<7,9,10> K-polynomial", [] {
    const auto k = k_polynomial(resolve(S({7, 9, 10})));
    return std::pair{k == kpoly({{0, 1}, {27, -1}, {28, -1}, {30, -1}, {37, 1}, {48, 1}}), k.to_string()};
  });
  t.add("1", "<7,9,10> ideal generators", [] {
    const auto f = generators_ideal(classify(S({7, 9, 10})));
    const auto g = make_grading(S({7, 9, 10}));
    const bool ok = f.size() == 3 && f[0] == Poly::parse("x1^4 - x2^2*x3", g) &&
                    f[1] == Poly::parse("x2^3 - x1*x3^2", g) && f[2] == Poly::parse("x3^3 - x1^3*x2", g);
    return std::pair{ok, f.size() == 3 ? f[0].to_string() + ", " + f[1].to_string() + ", " + f[2].to_string() : ""};
  });

  // 2: <7,9,8,13>
  t.add("2", "<7,9,8,13> Bresinsky alphas", [] {
    const auto c = classify(S({7, 9, 8, 13}));
    const auto& d = std::get<BresinskyData>(c.data);
    const auto p = bresinsky_params(d);
    const bool ok = c.tag == ClassTag::FourGenSymmetricNonCI &&
                    d.alpha == std::array<Int, 4>{3, 3, 2, 2} &&
                    p == BresinskyParams{2, 1, 1, 2, 1, 1, 1, 1} &&
                    d.perm == RolePerm<4>{0, 1, 2, 3};
    return std::pair{ok, show(std::vector<Int>(d.alpha.begin(), d.alpha.end()))};
  });
  t.add("2", "<7,9,8,13> (a1..a5) and s0", [] {
    const auto s = S({7, 9, 8, 13});
    const auto c = classify(s);
    const auto rel = degree_relations(c, resolve(c));
    const bool ok = rel.middle_values() == std::vector<Int>{35, 29, 40, 30, 34} &&
                    rel.top_values() == std::vector<Int>{56};
    return std::pair{ok, show(rel.middle_values()) + " s0=" + show(rel.top_values())};
  });
  t.add("2", "<7,9,8,13> Frobenius 19", [] {
    const auto s = S({7, 9, 8, 13});
    const auto r = resolve(s);
    const bool ok = s.frobenius() == 19 && pf_from_betti(r) == std::vector<Int>{19} &&
                    closed_form_pf(classify(s)) == std::vector<Int>{19};
    return std::pair{ok, std::to_string(s.frobenius())};
  });
  t.add("2", "<7,9,8,13> Betti degrees and K-polynomial", [] {
    const auto r = resolve(S({7, 9, 8, 13}));
    const auto k = k_polynomial(r);
    const bool ok = r.level(1) == std::vector<Int>{16, 21, 22, 26, 27} &&
                    r.level(2) == std::vector<Int>{29, 30, 34, 35, 40} && r.level(3) == std::vector<Int>{56} &&
                    k == kpoly({{0, 1}, {16, -1}, {21, -1}, {22, -1}, {26, -1}, {27, -1}, {29, 1},
                                {30, 1}, {34, 1}, {35, 1}, {40, 1}, {56, -1}});
    return std::pair{ok, k.to_string()};
  });
  t.add("2", "<7,9,8,13> Hilbert series to degree 40", [] {
    const auto h = hilbert_series(resolve(S({7, 9, 8, 13})), 40);
    bool ok = h.passed;
    std::vector<Int> ones;
    for (Int d = 0; d <= 40; ++d) {
      const bool want = d == 0 || d == 7 || d == 8 || d == 9 || (d >= 13 && d <= 18) || d >= 20;
      if (h.series[static_cast<std::size_t>(d)] != (want ? 1 : 0)) ok = false;
      if (h.series[static_cast<std::size_t>(d)] == 1 && d < 20) ones.push_back(d);
    }
    return std::pair{ok, show(ones) + " then all of [20,40]"};
  });
  t.add("2", "<7,9,8,13> duality sums 56", [] {
    const auto rep = duality_check(resolve(S({7, 9, 8, 13})));
    return std::pair{rep.passed, rep.summary()};
  });
  t.add("2", "<7,9,8,13> pfaffians", [] {
    const auto rep = verify_pfaffian(resolve(S({7, 9, 8, 13})));
    return std::pair{rep.passed, rep.summary()};
  });

  // 3: <13,9,11,14>
  t.add("3", "<13,9,11,14> Komeda parameters", [] {
    const auto c = classify(S({13, 9, 11, 14}));
    const auto p = komeda_params(std::get<KomedaData>(c.data));
    const bool ok = c.tag == ClassTag::FourGenPseudosymmetric && p == KomedaParams{3, 3, 2, 3, 1};
    return std::pair{ok, show(std::vector<Int>{p.alpha1, p.alpha2, p.alpha3, p.alpha4, p.alpha21})};
  });
  t.add("3", "<13,9,11,14> (b1..b6), (c1,c2)", [] {
    const auto c = classify(S({13, 9, 11, 14}));
    const auto rel = degree_relations(c, resolve(c));
    const bool ok = rel.middle_values() == std::vector<Int>{48, 49, 50, 51, 53, 55} &&
                    rel.top_values() == std::vector<Int>{62, 77};
    return std::pair{ok, show(rel.middle_values()) + " " + show(rel.top_values())};
  });
  t.add("3", "<13,9,11,14> PF", [] {
    const auto s = S({13, 9, 11, 14});
    const std::vector<Int> want{15, 30};
    const bool ok = pf_from_betti(resolve(s)) == want && s.pseudofrobenius() == want &&
                    closed_form_pf(classify(s)) == want;
    return std::pair{ok, show(pf_from_betti(resolve(s)))};
  });
  t.add("3", "<13,9,11,14> K-polynomial", [] {
    const auto k = k_polynomial(resolve(S({13, 9, 11, 14})));
    const bool ok = k == kpoly({{0, 1}, {22, -1}, {27, -1}, {37, -1}, {39, -1}, {42, -1}, {48, 1},
                                {49, 1}, {50, 1}, {51, 1}, {53, 1}, {55, 1}, {62, -1}, {77, -1}});
    return std::pair{ok, k.to_string()};
  });
  t.add("3", "<13,9,11,14> not strongly indispensable, level-1 witness 20", [] {
    const auto rep = strong_indisp(S({13, 9, 11, 14}));
    bool has20 = false;
    for (const auto& w : rep.failing())
      if (w.level == 1 && w.diff == 20) has20 = true;
    return std::pair{!rep.verdict && has20, rep.verdict ? "true" : "false"};
  });
  t.add("3", "<13,9,11,14> witness minors", [] {
    const auto rep = verify_witness_minors(resolve(S({13, 9, 11, 14})));
    return std::pair{rep.passed, rep.summary()};
  });
  t.add("3", "<13,9,11,14> f5", [] {
    const auto f = generators_ideal(classify(S({13, 9, 11, 14})));
    const auto g = make_grading(S({13, 9, 11, 14}));
    return std::pair{f.at(4) == Poly::parse("x1^2*x3 - x2*x4^2", g), f.at(4).to_string()};
  });

  // 4: indispensability families
  t.add("4", "<4,6,n3> iff n3 in {5,7}", [] {
    std::string detail;
    bool ok = true;
    for (Int n3 : {5, 7, 9, 11, 13, 15}) {
      const bool v = indisp_verdict({4, 6, n3});
      ok = ok && v == (n3 == 5 || n3 == 7);
      detail += std::to_string(n3) + (v ? ":T " : ":F ");
    }
    return std::pair{ok, detail};
  });
  t.add("4", "<8,12,10,n4> iff n4 in {9,11,13}", [] {
    std::string detail;
    bool ok = true;
    for (Int n4 : {9, 11, 13, 17, 19}) {
      const bool v = indisp_verdict({8, 12, 10, n4});
      ok = ok && v == (n4 <= 13);
      detail += std::to_string(n4) + (v ? ":T " : ":F ");
    }
    return std::pair{ok, detail};
  });
  t.add("4", "<75,180,119,136> strongly indispensable", [] {
    const auto rep = strong_indisp(S({75, 180, 119, 136}));
    return std::pair{rep.verdict && rep.method == Method::CI4Criterion, rep.verdict ? "true" : "false"};
  });
  t.add("4", "<5,12,11,14> fails at level 2 only (10 in S)", [] {
    const auto rep = differences_check(resolve(S({5, 12, 11, 14})), {1, 2});
    bool has10 = false;
    for (const auto& w : rep.failing())
      if (w.level == 2 && w.diff == 10) has10 = true;
    const bool ok = !strong_indisp(S({5, 12, 11, 14})).verdict &&
                    rep.failing_levels() == std::set<std::size_t>{2} && has10;
    return std::pair{ok, show(levels(rep))};
  });
  t.add("4", "<5,11,8,12> fails at levels 1 (8) and 2 (10)", [] {
    const auto rep = strong_indisp(S({5, 11, 8, 12}));
    bool has8 = false, has10 = false;
    for (const auto& w : rep.failing()) {
      if (w.level == 1 && w.diff == 8) has8 = true;
      if (w.level == 2 && w.diff == 10) has10 = true;
    }
    const bool ok = !rep.verdict && rep.failing_levels() == std::set<std::size_t>{1, 2} && has8 && has10;
    return std::pair{ok, show(levels(rep))};
  });

  // Remaining worked examples.
  t.add("examples", "from_komeda(5,2,2,2,2) = <5,12,11,14>", [] {
    const auto s = from_komeda({5, 2, 2, 2, 2});
    return std::pair{s == S({5, 12, 11, 14}), s.to_string()};
  });
  t.add("examples", "from_komeda(4,2,2,2,2) = <5,11,8,12>", [] {
    const auto s = from_komeda({4, 2, 2, 2, 2});
    return std::pair{s == S({5, 11, 8, 12}) && s.classify_symmetry() == Symmetry::Pseudosymmetric,
                     s.to_string()};
  });
  t.add("examples", "<75,180,119,136> Case II (15,17), (1,1,1,1)", [] {
    const auto c = classify(S({75, 180, 119, 136}));
    const auto& two = std::get<CI4CaseII>(std::get<CI4Data>(c.data).decomposition);
    const bool ok = c.tag == ClassTag::FourGenCI && two.p == 15 && two.p_prime == 17 &&
                    two.chosen == std::array<Int, 4>{1, 1, 1, 1} && !two.ambiguous;
    return std::pair{ok, "p=" + std::to_string(two.p) + " p'=" + std::to_string(two.p_prime)};
  });
  t.add("examples", "<8,12,10,9> Case I, ell = 2, inner <4,6,5>", [] {
    const auto c = classify(S({8, 12, 10, 9}));
    const auto& one = std::get<CI4CaseI>(std::get<CI4Data>(c.data).decomposition);
    return std::pair{c.tag == ClassTag::FourGenCI && one.ell == 2 && one.perm[3] == 3,
                     "ell=" + std::to_string(one.ell)};
  });
  t.add("examples", "<7,9,8,13> is not a complete intersection", [] {
    return std::pair{!ci4(S({7, 9, 8, 13})).has_value(), ""};
  });
  t.add("examples", "<4,6,5> ideal", [] {
    const auto f = generators_ideal(classify(S({4, 6, 5})));
    const auto g = make_grading(S({4, 6, 5}));
    const bool ok = f.size() == 2 && f[0] == Poly::parse("x1^3 - x2^2", g) &&
                    f[1] == Poly::parse("x3^2 - x1*x2", g);
    return std::pair{ok, f.size() == 2 ? f[0].to_string() + ", " + f[1].to_string() : ""};
  });
  t.add("examples", "<7,9,10> contains 16, not 22", [] {
    const auto s = S({7, 9, 10});
    return std::pair{s.contains(16) && !s.contains(22) && s.contains(0) && s.frobenius() == 22, ""};
  });
  t.add("examples", "symmetry of the three running examples", [] {
    const bool ok = S({7, 9, 8, 13}).classify_symmetry() == Symmetry::Symmetric &&
                    S({13, 9, 11, 14}).classify_symmetry() == Symmetry::Pseudosymmetric &&
                    S({7, 9, 10}).classify_symmetry() == Symmetry::Pseudosymmetric &&
                    S({5, 6, 7}).classify_symmetry() == Symmetry::Neither;
    return std::pair{ok, ""};
  });
  return t.take();
}

}  // namespace semires
