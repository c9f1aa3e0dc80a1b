#include "semires/serialize.hpp"

#include <algorithm>
#include <sstream>

namespace semires {

namespace {

template <std::size_t K>
Json roles(const RolePerm<K>& perm) {
  Json out = Json::array();
  for (int p : perm) out.push_back(p + 1);
  return out;
}

Json ci3_params(const CI3Data& d) {
  return Json{{"roles", roles(d.perm)},          {"alpha3", d.alpha3},
              {"m1", d.m1},                      {"m2", d.m2},
              {"alpha31", d.chosen[0]},          {"alpha32", d.chosen[1]},
              {"representations", d.representations}, {"ambiguous", d.ambiguous}};
}

Json ci4_part(const std::variant<CI4CaseI, CI4CaseII>& v) {
  if (const auto* one = std::get_if<CI4CaseI>(&v)) {
    return Json{{"case", "I"},
                {"roles", roles(one->perm)},
                {"ell", one->ell},
                {"inner", ci3_params(one->inner)},
                {"alpha41", one->chosen[0]},
                {"alpha42", one->chosen[1]},
                {"alpha43", one->chosen[2]},
                {"representations", one->representations},
                {"ambiguous", one->ambiguous}};
  }
  const auto& two = std::get<CI4CaseII>(v);
  return Json{{"case", "II"},
              {"roles", roles(two.perm)},
              {"p", two.p},
              {"p_prime", two.p_prime},
              {"alpha", two.alpha},
              {"p1234", two.chosen},
              {"reps12", two.reps12},
              {"reps34", two.reps34},
              {"ambiguous", two.ambiguous}};
}

struct ParamsVisitor {
  Json operator()(std::monostate) const { return nullptr; }
  Json operator()(const TwoGenData&) const { return Json::object(); }
  Json operator()(const HerzogData& d) const {
    Json j{{"ambiguous", d.ambiguous}};
    for (int i = 1; i <= 3; ++i) j["alpha" + std::to_string(i)] = d.alpha[i - 1];
    for (int i = 1; i <= 3; ++i)
      for (int k = 1; k <= 3; ++k)
        if (i != k) j["alpha" + std::to_string(i) + std::to_string(k)] = d.a(i, k);
    return j;
  }
  Json operator()(const CI3Data& d) const { return ci3_params(d); }
  Json operator()(const CI4Data& d) const {
    Json j = ci4_part(d.decomposition);
    if (d.alternate) j["alternate"] = ci4_part(*d.alternate);
    return j;
  }
  Json operator()(const BresinskyData& d) const {
    Json j{{"roles", roles(d.perm)}, {"ambiguous", d.ambiguous}};
    for (int i = 1; i <= 4; ++i) j["alpha" + std::to_string(i)] = d.alpha[i - 1];
    for (auto [i, k] : {std::pair{2, 1}, {3, 1}, {3, 2}, {4, 2}, {1, 3}, {4, 3}, {1, 4}, {2, 4}})
      j["alpha" + std::to_string(i) + std::to_string(k)] = d.a(i, k);
    return j;
  }
  Json operator()(const KomedaData& d) const {
    Json j{{"roles", roles(d.perm)}, {"alpha21", d.alpha21}};
    for (int i = 1; i <= 4; ++i) j["alpha" + std::to_string(i)] = d.alpha[i - 1];
    return j;
  }
};

}  // namespace

Json to_json(const NumericalSemigroup& s) {
  return Json(std::vector<Int>(s.generators().begin(), s.generators().end()));
}

Json to_json(const Classification& c) {
  Json j{{"class", to_string(c.tag)},
         {"generators", to_json(c.semigroup)},
         {"params", std::visit(ParamsVisitor{}, c.data)}};
  if (!c.note.empty()) j["note"] = c.note;
  if (c.tag != ClassTag::Unsupported) {
    Json f = Json::array();
    for (const auto& p : generators_ideal(c)) f.push_back(p.to_string());
    j["ideal"] = f;
  }
  return j;
}

Json to_json(const GradedMatrix& m) {
  Json entries = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m.at(r, c).to_string());
    entries.push_back(row);
  }
  return Json{{"rows", m.rows()},
              {"cols", m.cols()},
              {"row_degrees", m.row_degrees()},
              {"col_degrees", m.col_degrees()},
              {"entries", entries}};
}

Json to_json(const GradedResolution& r) {
  Json maps = Json::array();
  for (const auto& m : r.maps) maps.push_back(to_json(m));
  return Json{{"class", to_string(r.class_tag)},
              {"generators", to_json(r.semigroup)},
              {"N", r.N},
              {"betti_numbers", r.betti_numbers()},
              {"betti_degrees", r.betti_degrees},
              {"maps", maps},
              {"adjustments", r.adjustments}};
}

Json to_json(const KPolynomial& k) {
  Json terms = Json::array();
  for (const auto& [e, c] : k.terms) terms.push_back(Json{{"coeff", c}, {"exp", e}});
  return Json{{"terms", terms}, {"text", k.to_string()}};
}

Json to_json(const IndispensabilityReport& r) {
  Json w = Json::array();
  for (const auto& x : r.witnesses)
    w.push_back(Json{{"level", x.level}, {"pair", x.pair}, {"diff", x.diff},
                     {"in_semigroup", x.in_semigroup}});
  Json j{{"verdict", r.verdict},
         {"method", to_string(r.method)},
         {"witnesses", w},
         {"levels_checked", std::vector<std::size_t>(r.levels_checked.begin(), r.levels_checked.end())}};
  if (!r.details.empty()) j["details"] = r.details;
  return j;
}

Json to_json(const VerificationReport& r) {
  Json findings = Json::object();
  for (const auto& [k, v] : r.findings) findings[k] = v;
  return Json{{"passed", r.passed}, {"checks", r.checks}, {"failures", r.failures},
              {"findings", findings}};
}

Json to_json(const DegreeRelations& d) {
  auto rel = [](const std::vector<DegreeRelation>& v) {
    Json out = Json::array();
    for (const auto& r : v) {
      Json alts = Json::array();
      for (const auto& a : r.alternatives) alts.push_back(Json{{"expr", a.text}, {"value", a.value}});
      Json item{{"name", r.name}, {"value", r.value}, {"alternatives", alts}};
      if (!r.misprints.empty()) {
        Json bad = Json::array();
        for (const auto& a : r.misprints) bad.push_back(Json{{"expr", a.text}, {"value", a.value}});
        item["not_relations"] = bad;
      }
      out.push_back(item);
    }
    return out;
  };
  return Json{{"class", to_string(d.tag)}, {"middle", rel(d.middle)}, {"top", rel(d.top)}};
}

std::string render_text(const GradedResolution& r) {
  std::ostringstream os;
  os << to_string(r.class_tag) << " " << r.semigroup.to_string() << "  N = " << r.N << "\n";
  for (std::size_t i = 0; i < r.betti_degrees.size(); ++i) {
    os << "level " << i << ":";
    for (Int d : r.betti_degrees[i]) os << " " << d;
    os << "\n";
  }
  for (std::size_t i = 0; i < r.maps.size(); ++i) {
    const auto& m = r.maps[i];
    os << "\nphi" << i + 1 << " (" << m.rows() << "x" << m.cols() << ")\n";
    std::vector<std::size_t> width(m.cols(), 0);
    std::vector<std::vector<std::string>> cells(m.rows(), std::vector<std::string>(m.cols()));
    for (std::size_t row = 0; row < m.rows(); ++row)
      for (std::size_t c = 0; c < m.cols(); ++c) {
        cells[row][c] = m.at(row, c).to_string();
        width[c] = std::max(width[c], cells[row][c].size());
      }
    for (std::size_t c = 0; c < m.cols(); ++c)
      width[c] = std::max(width[c], std::to_string(m.col_degrees()[c]).size());
    os << "      ";
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const auto d = std::to_string(m.col_degrees()[c]);
      os << "  " << std::string(width[c] - d.size(), ' ') << d;
    }
    os << "\n";
    for (std::size_t row = 0; row < m.rows(); ++row) {
      const auto d = std::to_string(m.row_degrees()[row]);
      os << std::string(6 - std::min<std::size_t>(6, d.size()), ' ') << d;
      for (std::size_t c = 0; c < m.cols(); ++c)
        os << "  " << std::string(width[c] - cells[row][c].size(), ' ') << cells[row][c];
      os << "\n";
    }
  }
  for (const auto& a : r.adjustments) os << "\nadjusted: " << a << "\n";
  return os.str();
}

}  // namespace semires
