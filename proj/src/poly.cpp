#include "semires/poly.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <sstream>
#include <utility>

#include "semires/checked.hpp"
#include "semires/errors.hpp"

namespace semires {

Monomial::Monomial(std::vector<Int> exponents) : exps_(std::move(exponents)) {
  for (Int e : exps_)
    if (e < 0) throw InvalidParameters("negative exponent in monomial");
}

Monomial Monomial::variable(std::size_t nvars, std::size_t index, Int exponent) {
  if (index >= nvars) throw DimensionMismatch("variable index out of range");
  std::vector<Int> e(nvars, 0);
  e[index] = exponent;
  return Monomial(std::move(e));
}

bool Monomial::is_one() const noexcept {
  for (Int e : exps_)
    if (e != 0) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  if (other.nvars() != nvars()) throw DimensionMismatch("monomial variable counts differ");
  std::vector<Int> e(exps_);
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = checked::add(e[i], other.exps_[i]);
  return Monomial(std::move(e));
}

Int Grading::sdegree(const Monomial& m) const {
  if (m.nvars() != weights_.size())
    throw DimensionMismatch("monomial has " + std::to_string(m.nvars()) +
                            " exponents, ring has " + std::to_string(weights_.size()) +
                            " variables");
  Int d = 0;
  for (std::size_t i = 0; i < weights_.size(); ++i)
    d = checked::add(d, checked::mul(m[i], weights_[i]));
  return d;
}

GradingPtr make_grading(std::vector<Int> weights) {
  return std::make_shared<const Grading>(std::move(weights));
}

GradingPtr make_grading(const NumericalSemigroup& s) {
  return make_grading(std::vector<Int>(s.generators().begin(), s.generators().end()));
}

Int sdegree(const Monomial& m, const NumericalSemigroup& s) {
  return Grading(std::vector<Int>(s.generators().begin(), s.generators().end())).sdegree(m);
}

bool TermOrder::operator()(const Monomial& a, const Monomial& b) const {
  const Int da = grading->sdegree(a);
  const Int db = grading->sdegree(b);
  if (da != db) return da > db;
  return a > b;
}

Poly::Poly(GradingPtr grading) : grading_(std::move(grading)), terms_(TermOrder{grading_.get()}) {
  if (!grading_) throw InvalidParameters("polynomial needs a grading");
}

Poly Poly::constant(GradingPtr grading, Int c) {
  Poly p(std::move(grading));
  p.add_term(Monomial::one(p.nvars()), c);
  return p;
}

Poly Poly::term(GradingPtr grading, const Monomial& m, Int c) {
  Poly p(std::move(grading));
  if (m.nvars() != p.nvars()) throw DimensionMismatch("monomial does not fit the ring");
  p.add_term(m, c);
  return p;
}

Poly Poly::var(GradingPtr grading, std::size_t index, Int exponent) {
  const std::size_t n = grading->nvars();
  return term(std::move(grading), Monomial::variable(n, index, exponent));
}

void Poly::add_term(const Monomial& m, Int c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (inserted) return;
  it->second = checked::add(it->second, c);
  if (it->second == 0) terms_.erase(it);
}

void Poly::require_same_ring(const Poly& other) const {
  if (grading_ != other.grading_ && !(*grading_ == *other.grading_))
    throw DimensionMismatch("polynomials live in differently graded rings");
}

std::optional<Int> Poly::homogeneous_degree() const {
  if (terms_.empty()) return std::nullopt;
  const Int d = grading_->sdegree(terms_.begin()->first);
  for (const auto& [m, c] : terms_)
    if (grading_->sdegree(m) != d) return std::nullopt;
  return d;
}

Poly Poly::operator-() const { return scaled(-1); }

Poly& Poly::operator+=(const Poly& other) {
  require_same_ring(other);
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& other) {
  require_same_ring(other);
  for (const auto& [m, c] : other.terms_) add_term(m, checked::neg(c));
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  a.require_same_ring(b);
  Poly out(a.grading_);
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, checked::mul(ca, cb));
  return out;
}

Poly Poly::scaled(Int c) const {
  Poly out(grading_);
  if (c == 0) return out;
  for (const auto& [m, coeff] : terms_) out.terms_.emplace_hint(out.terms_.end(), m, checked::mul(coeff, c));
  return out;
}

Poly Poly::pow(unsigned e) const {
  Poly result = constant(grading_, 1);
  Poly base = *this;
  while (e) {
    if (e & 1u) result = result * base;
    e >>= 1u;
    if (e) base = base * base;
  }
  return result;
}

bool operator==(const Poly& a, const Poly& b) {
  if (a.grading_ != b.grading_ && !(*a.grading_ == *b.grading_)) return false;
  return a.terms_ == b.terms_;
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    const Int mag = c < 0 ? checked::neg(c) : c;
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (m.is_one()) {
      os << mag;
      continue;
    }
    bool need_star = false;
    if (mag != 1) {
      os << mag;
      need_star = true;
    }
    for (std::size_t i = 0; i < m.nvars(); ++i) {
      if (m[i] == 0) continue;
      if (need_star) os << '*';
      os << 'x' << (i + 1);
      if (m[i] != 1) os << '^' << m[i];
      need_star = true;
    }
  }
  return os.str();
}

namespace {

class PolyParser {
 public:
  PolyParser(std::string_view text, GradingPtr grading)
      : text_(text), grading_(std::move(grading)) {}

  Poly parse() {
    Poly out(grading_);
    skip_ws();
    if (at_end()) throw ParseError("empty polynomial");
    bool first = true;
    while (!at_end()) {
      Int sign = 1;
      if (consume_sign(sign)) {
        skip_ws();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      auto [m, c] = parse_term();
      out += Poly::term(grading_, m, checked::mul(sign, c));
      skip_ws();
    }
    return out;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError(why + " at offset " + std::to_string(pos_) + " in \"" + std::string(text_) +
                     "\"");
  }

  // Accepts ASCII '+'/'-' and U+2212 MINUS SIGN.
  bool consume_sign(Int& sign) {
    if (text_[pos_] == '+') {
      ++pos_;
      return true;
    }
    if (text_[pos_] == '-') {
      sign = -sign;
      ++pos_;
      return true;
    }
    if (text_.substr(pos_, 3) == "\xE2\x88\x92") {
      sign = -sign;
      pos_ += 3;
      return true;
    }
    return false;
  }

  Int parse_int() {
    if (at_end() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) fail("expected digits");
    Int v = 0;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = checked::add(checked::mul(v, 10), text_[pos_] - '0');
      ++pos_;
    }
    return v;
  }

  std::pair<Monomial, Int> parse_term() {
    std::vector<Int> exps(grading_->nvars(), 0);
    Int coeff = 1;
    while (true) {
      skip_ws();
      if (at_end()) fail("expected a factor");
      const char ch = text_[pos_];
      if (std::isdigit(static_cast<unsigned char>(ch))) {
        coeff = checked::mul(coeff, parse_int());
      } else if (ch == 'x') {
        ++pos_;
        const Int index = parse_int();
        if (index < 1 || static_cast<std::size_t>(index) > exps.size())
          fail("variable x" + std::to_string(index) + " out of range");
        Int e = 1;
        skip_ws();
        if (!at_end() && text_[pos_] == '^') {
          ++pos_;
          skip_ws();
          e = parse_int();
        }
        exps[static_cast<std::size_t>(index - 1)] =
            checked::add(exps[static_cast<std::size_t>(index - 1)], e);
      } else {
        fail("unexpected character");
      }
      skip_ws();
      if (!at_end() && text_[pos_] == '*') {
        ++pos_;
        continue;
      }
      break;
    }
    return {Monomial(std::move(exps)), coeff};
  }

  std::string_view text_;
  GradingPtr grading_;
  std::size_t pos_ = 0;
};

}  // namespace

Poly Poly::parse(std::string_view text, GradingPtr grading) {
  return PolyParser(text, std::move(grading)).parse();
}

Poly add(const Poly& a, const Poly& b) { return a + b; }
Poly mul(const Poly& a, const Poly& b) { return a * b; }
Poly neg(const Poly& a) { return -a; }

std::optional<Int> is_homogeneous(const Poly& p, const NumericalSemigroup& s) {
  const auto gens = s.generators();
  if (p.nvars() != gens.size() ||
      !std::equal(gens.begin(), gens.end(), p.grading()->weights().begin()))
    throw DimensionMismatch("polynomial is not graded by " + s.to_string());
  return p.homogeneous_degree();
}

}  // namespace semires
