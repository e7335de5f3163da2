#pragma once

// Graded limits of minimal affinizations of type G2.
//
// For lambda = k omega1 + l omega2 the graded limit decomposes over g as
//
//   (+)_{a in S} V((k - a1 + a3 + a4 - a5) omega1 + (l - a2 - 3a3 - 3a4) omega2)
//
// where S is the set of a in Z_+^5 with
//   a1 <= k,  a1 - a3 + a5 <= k,  2a2 + 3a3 + 3a4 <= l,  2a2 + 3a4 + 3a5 <= l.
// Multiplicities agree with those of the minimal affinization itself as a
// U_q(g)-module.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "g2aff/character.hpp"
#include "g2aff/g2.hpp"

namespace g2aff {

using Rational = boost::multiprecision::cpp_rational;

// lambda = k omega1 + l omega2, with l = 3r + s and s in {0, 1, 2}.
class HighestWeightInput {
 public:
  HighestWeightInput(std::int64_t k, std::int64_t l);

  std::int64_t k() const { return k_; }
  std::int64_t l() const { return l_; }
  std::int64_t r() const { return l_ / 3; }
  std::int64_t s() const { return l_ % 3; }
  Weight lambda() const { return {k_, l_}; }

  friend bool operator==(const HighestWeightInput&, const HighestWeightInput&) = default;

 private:
  std::int64_t k_;
  std::int64_t l_;
};

// (a1, ..., a5) in Z_+^5, stored zero-based.
struct PolyhedralPoint {
  std::array<std::int64_t, 5> a{};

  std::int64_t operator[](std::size_t i) const { return a[i]; }
  bool in_S(const HighestWeightInput& input) const;

  friend auto operator<=>(const PolyhedralPoint&, const PolyhedralPoint&) = default;
  friend bool operator==(const PolyhedralPoint&, const PolyhedralPoint&) = default;
};

// Sorted lattice points of S.
std::vector<PolyhedralPoint> enumerate_S(const HighestWeightInput& input);

// Highest weight of the summand labelled by a. Throws NotInPolytopeError if
// a is not in S.
Weight target_weight(const PolyhedralPoint& a, const HighestWeightInput& input);

IrrDecomposition decompose_graded_limit(const HighestWeightInput& input);
FormalCharacter graded_limit_character(const HighestWeightInput& input);
Int128 graded_limit_dimension(const HighestWeightInput& input);

// Kirillov-Reshetikhin case: n omega1 (node 1) or n omega2 (node 2).
IrrDecomposition kr_decomposition(int node, std::int64_t n);

// Dominant monomials whose simple modules are the minimal affinizations of
// V_q(lambda). The spectral parameter is a fixed formal symbol a; a factor
// Y_{node, a q^qexp} is stored as (node, qexp).
enum class MonomialVariant { kFirst, kSecond };

struct MonomialFactor {
  int node = 0;
  std::int64_t qexp = 0;

  friend bool operator==(const MonomialFactor&, const MonomialFactor&) = default;
};

struct DominantMonomial {
  std::vector<MonomialFactor> factors;

  std::size_t count(int node) const;
  std::string to_string() const;
  friend bool operator==(const DominantMonomial&, const DominantMonomial&) = default;
};

DominantMonomial highest_l_weight_monomials(const HighestWeightInput& input, MonomialVariant variant);

// A defining relation of the cyclic g[t]-module M(lambda), as data.
enum class RelationKind {
  kNPlusCurrentAnnihilation,  // n_+[t] v = 0
  kCartanCurrentEigenvalue,   // (h t^j) v = delta_{j0} <h, lambda> v
  kSimplePower,               // f_i^{exponent} v = 0
  kCurrentAnnihilation,       // (f_alpha t) v = 0
};

struct RelationDescriptor {
  RelationKind kind;
  std::optional<Root> root;  // kCurrentAnnihilation only
  std::optional<int> index;  // kSimplePower only
  std::int64_t exponent = 0;

  std::string to_string(const HighestWeightInput& input) const;
  friend bool operator==(const RelationDescriptor&, const RelationDescriptor&) = default;
};

std::vector<RelationDescriptor> relations_of_M(const HighestWeightInput& input);

// Weight of the PBW monomial
//   (f_{2a1+3a2} t^2)^(a5) (f_{a1+3a2} t^2)^(a4) (f_{a1+3a2} t)^(a3)
//   (f_{a1+2a2} t)^(a2) (f_{2a1+3a2} t)^(a1)
// negated, so it lies in Q_+. Computed in both coordinate systems; throws
// InternalConsistencyError if they disagree.
Weight wt_of_point(const PolyhedralPoint& a);

// Total t-degree of the same monomial: a1 + a2 + a3 + 2a4 + 2a5.
std::int64_t t_degree_of_point(const PolyhedralPoint& a);

// The (r+1) x (r+1) matrix with entries 1/(3r+1-3i-j)! (zero when the
// argument is negative).
std::vector<std::vector<Rational>> factorial_matrix(std::int64_t r);
// Its determinant, exactly. Requires r >= 1.
Rational factorial_matrix_det(std::int64_t r);

}  // namespace g2aff
