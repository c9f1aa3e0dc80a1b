#pragma once

#include <array>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "semires/poly.hpp"
#include "semires/semigroup.hpp"

namespace semires {

/// Role permutations map a role index (0-based) to the caller's generator index.
template <std::size_t K>
using RolePerm = std::array<int, K>;

/// Two generators: I_S = (x1^{n2} - x2^{n1}).
struct TwoGenData {};

/// 3-generated non-symmetric (Herzog). alpha[i] is the least t with
/// t*n_i in the span of the other two; cross[i][j] is alpha_{(i+1)(j+1)}.
struct HerzogData {
  std::array<Int, 3> alpha{};
  std::array<std::array<Int, 3>, 3> cross{};
  bool ambiguous = false;

  Int a(int i, int j) const { return cross[i - 1][j - 1]; }
  friend bool operator==(const HerzogData&, const HerzogData&) = default;
};

/// 3-generated symmetric: S = <alpha3*m1, alpha3*m2, alpha31*m1 + alpha32*m2>
/// after the role permutation.
struct CI3Data {
  RolePerm<3> perm{0, 1, 2};
  Int alpha3 = 0;
  Int m1 = 0;
  Int m2 = 0;
  /// Every representation (alpha31, alpha32) of n3 over (m1, m2).
  std::vector<std::array<Int, 2>> representations;
  /// The designated one: the unique one when unique, else the lexicographically
  /// smallest (and `ambiguous` is set).
  std::array<Int, 2> chosen{};
  bool ambiguous = false;

  friend bool operator==(const CI3Data&, const CI3Data&) = default;
};

/// 4-generated symmetric, not a complete intersection (Bresinsky).
/// alpha[i] is the least t with t*n_i in the span of the others; the defined
/// cross entries are 21, 31, 32, 42, 13, 43, 14, 24.
struct BresinskyData {
  RolePerm<4> perm{0, 1, 2, 3};
  std::array<Int, 4> alpha{};
  std::array<std::array<Int, 4>, 4> cross{};
  bool ambiguous = false;

  Int a(int i, int j) const { return cross[i - 1][j - 1]; }
  Int& a(int i, int j) { return cross[i - 1][j - 1]; }
  friend bool operator==(const BresinskyData&, const BresinskyData&) = default;
};

/// The eight free Bresinsky parameters, in the order
/// (a21, a31, a32, a42, a13, a43, a14, a24).
struct BresinskyParams {
  Int a21, a31, a32, a42, a13, a43, a14, a24;
  friend bool operator==(const BresinskyParams&, const BresinskyParams&) = default;
};

/// 4-generated pseudosymmetric (Komeda).
struct KomedaData {
  RolePerm<4> perm{0, 1, 2, 3};
  std::array<Int, 4> alpha{};
  Int alpha21 = 0;

  friend bool operator==(const KomedaData&, const KomedaData&) = default;
};

struct KomedaParams {
  Int alpha1, alpha2, alpha3, alpha4, alpha21;
  friend bool operator==(const KomedaParams&, const KomedaParams&) = default;
};

/// Complete intersection glued as (3-generated CI) + one generator.
struct CI4CaseI {
  RolePerm<4> perm{0, 1, 2, 3};
  Int ell = 0;  // gcd(n1, n2, n3)
  CI3Data inner;  // data of <n1/ell, n2/ell, n3/ell>, roles already composed into perm
  /// Every (alpha41, alpha42, alpha43) with ell*n4 = alpha41*n1 + alpha42*n2 + alpha43*n3.
  std::vector<std::array<Int, 3>> representations;
  std::array<Int, 3> chosen{};
  bool ambiguous = false;

  friend bool operator==(const CI4CaseI&, const CI4CaseI&) = default;
};

/// Complete intersection glued from two 2-generated pieces.
struct CI4CaseII {
  RolePerm<4> perm{0, 1, 2, 3};
  Int p = 0;        // gcd(n1, n2)
  Int p_prime = 0;  // gcd(n3, n4)
  /// Exponents of F1 = x1^a1 - x2^a2 and F2 = x3^a3 - x4^a4.
  std::array<Int, 4> alpha{};
  /// (p1, p2) with p' = p1*n1/p + p2*n2/p.
  std::vector<std::array<Int, 2>> reps12;
  /// (p3, p4) with p = p3*n3/p' + p4*n4/p'.
  std::vector<std::array<Int, 2>> reps34;
  std::array<Int, 4> chosen{};
  bool ambiguous = false;

  friend bool operator==(const CI4CaseII&, const CI4CaseII&) = default;
};

struct CI4Data {
  std::variant<CI4CaseI, CI4CaseII> decomposition;
  /// The other case's decomposition, when both exist.
  std::optional<std::variant<CI4CaseI, CI4CaseII>> alternate;

  bool is_case_one() const { return std::holds_alternative<CI4CaseI>(decomposition); }
};

enum class ClassTag {
  TwoGen,
  ThreeGenSymmetricCI,
  ThreeGenNonSymmetric,
  FourGenCI,
  FourGenSymmetricNonCI,
  FourGenPseudosymmetric,
  Unsupported,
};

std::string to_string(ClassTag tag);
ClassTag class_tag_from_string(const std::string& s);

using ClassData = std::variant<std::monostate, TwoGenData, HerzogData, CI3Data, CI4Data,
                               BresinskyData, KomedaData>;

struct Classification {
  ClassTag tag = ClassTag::Unsupported;
  NumericalSemigroup semigroup;
  ClassData data;
  std::string note;  // why Unsupported, when it is
};

/// Throws UnsupportedEmbeddingDimension for k = 1 or k >= 5.
Classification classify(const NumericalSemigroup& s);

HerzogData herzog(const NumericalSemigroup& s);
CI3Data ci3(const NumericalSemigroup& s);
std::optional<CI4Data> ci4(const NumericalSemigroup& s);
/// Every gluing decomposition (pair choices for k = 3; Case I triples with
/// each inner pair choice, then Case II splits, for k = 4). ci3 and ci4
/// return the first.
std::vector<CI3Data> ci3_decompositions(const NumericalSemigroup& s);
std::vector<std::variant<CI4CaseI, CI4CaseII>> ci4_decompositions(const NumericalSemigroup& s);
BresinskyData bresinsky(const NumericalSemigroup& s);
KomedaData komeda(const NumericalSemigroup& s);

NumericalSemigroup from_komeda(const KomedaParams& p);
NumericalSemigroup from_bresinsky(const BresinskyParams& p);
KomedaParams komeda_params(const KomedaData& d);
BresinskyParams bresinsky_params(const BresinskyData& d);

/// Generator values in role order.
template <std::size_t K>
std::array<Int, K> role_generators(const NumericalSemigroup& s, const RolePerm<K>& perm) {
  std::array<Int, K> out{};
  for (std::size_t r = 0; r < K; ++r) out[r] = s.generator(static_cast<std::size_t>(perm[r]));
  return out;
}

/// The binomial generators of I_S in the order of the matching theorem
/// (f_1, ..., f_5 or F_1, F_2, F_3), in the caller's variables.
std::vector<Poly> generators_ideal(const Classification& c);

}  // namespace semires
