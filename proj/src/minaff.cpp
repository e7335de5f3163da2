#include "g2aff/minaff.hpp"

#include <algorithm>
#include <sstream>

#include "g2aff/errors.hpp"

namespace g2aff {

using checked::add;
using checked::mul;
using checked::sub;

HighestWeightInput::HighestWeightInput(std::int64_t k, std::int64_t l) : k_(k), l_(l) {
  if (k < 0 || l < 0) {
    throw InvalidArgumentError("highest weight coefficients must be nonnegative, got k=" + std::to_string(k) +
                               " l=" + std::to_string(l));
  }
}

bool PolyhedralPoint::in_S(const HighestWeightInput& input) const {
  const auto [a1, a2, a3, a4, a5] = a;
  if (a1 < 0 || a2 < 0 || a3 < 0 || a4 < 0 || a5 < 0) return false;
  const std::int64_t k = input.k();
  const std::int64_t l = input.l();
  return a1 <= k && a1 - a3 + a5 <= k && 2 * a2 + 3 * a3 + 3 * a4 <= l && 2 * a2 + 3 * a4 + 3 * a5 <= l;
}

std::vector<PolyhedralPoint> enumerate_S(const HighestWeightInput& input) {
  const std::int64_t k = input.k();
  const std::int64_t l = input.l();
  std::vector<PolyhedralPoint> out;
  for (std::int64_t a1 = 0; a1 <= k; ++a1) {
    for (std::int64_t a2 = 0; 2 * a2 <= l; ++a2) {
      for (std::int64_t a3 = 0; 2 * a2 + 3 * a3 <= l; ++a3) {
        for (std::int64_t a4 = 0; 2 * a2 + 3 * a3 + 3 * a4 <= l; ++a4) {
          const std::int64_t a5_max = std::min(k - a1 + a3, (l - 2 * a2 - 3 * a4) / 3);
          for (std::int64_t a5 = 0; a5 <= a5_max; ++a5) {
            PolyhedralPoint p{{a1, a2, a3, a4, a5}};
            if (p.in_S(input)) out.push_back(p);
          }
        }
      }
    }
  }
  // Loop order is already lexicographic.
  return out;
}

namespace {

Weight summand_weight(const PolyhedralPoint& p, const HighestWeightInput& input) {
  const auto [a1, a2, a3, a4, a5] = p.a;
  return {input.k() - a1 + a3 + a4 - a5, input.l() - a2 - 3 * a3 - 3 * a4};
}

}  // namespace

Weight target_weight(const PolyhedralPoint& a, const HighestWeightInput& input) {
  if (!a.in_S(input)) {
    std::ostringstream os;
    os << "point (" << a[0] << "," << a[1] << "," << a[2] << "," << a[3] << "," << a[4]
       << ") is not in S for lambda = " << to_string(input.lambda());
    throw NotInPolytopeError(os.str());
  }
  return summand_weight(a, input);
}

IrrDecomposition decompose_graded_limit(const HighestWeightInput& input) {
  IrrDecomposition out;
  for (const auto& p : enumerate_S(input)) out.add(summand_weight(p, input));
  return out;
}

FormalCharacter graded_limit_character(const HighestWeightInput& input) {
  return decompose_graded_limit(input).character();
}

Int128 graded_limit_dimension(const HighestWeightInput& input) {
  return decompose_graded_limit(input).total_dimension();
}

IrrDecomposition kr_decomposition(int node, std::int64_t n) {
  if (node == 1) return decompose_graded_limit(HighestWeightInput(n, 0));
  if (node == 2) return decompose_graded_limit(HighestWeightInput(0, n));
  throw InvalidArgumentError("node must be 1 or 2, got " + std::to_string(node));
}

std::size_t DominantMonomial::count(int node) const {
  return static_cast<std::size_t>(
      std::count_if(factors.begin(), factors.end(), [node](const MonomialFactor& f) { return f.node == node; }));
}

std::string DominantMonomial::to_string() const {
  if (factors.empty()) return "1";
  std::ostringstream os;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i > 0) os << "·";
    os << "Y[" << factors[i].node << ",q^" << factors[i].qexp << "]";
  }
  return os.str();
}

DominantMonomial highest_l_weight_monomials(const HighestWeightInput& input, MonomialVariant variant) {
  const std::int64_t k = input.k();
  const std::int64_t l = input.l();
  DominantMonomial m;
  if (variant == MonomialVariant::kFirst) {
    for (std::int64_t i = 0; i < k; ++i) m.factors.push_back({1, 6 * i});
    for (std::int64_t i = 0; i < l; ++i) m.factors.push_back({2, 6 * k + 2 * i + 1});
  } else {
    for (std::int64_t i = 0; i < l; ++i) m.factors.push_back({2, 2 * i});
    for (std::int64_t i = 0; i < k; ++i) m.factors.push_back({1, 2 * l + 6 * i + 5});
  }
  return m;
}

std::string RelationDescriptor::to_string(const HighestWeightInput& input) const {
  std::ostringstream os;
  switch (kind) {
    case RelationKind::kNPlusCurrentAnnihilation:
      os << "n+[t] v = 0";
      break;
    case RelationKind::kCartanCurrentEigenvalue:
      os << "(h t^j) v = delta_{j,0} <h, " << g2aff::to_string(input.lambda()) << "> v";
      break;
    case RelationKind::kSimplePower:
      os << "f_" << *index << "^" << exponent << " v = 0";
      break;
    case RelationKind::kCurrentAnnihilation:
      os << "(f_" << g2aff::to_string(root->coords()) << " t) v = 0";
      break;
  }
  return os.str();
}

std::vector<RelationDescriptor> relations_of_M(const HighestWeightInput& input) {
  const Weight lambda = input.lambda();
  std::vector<RelationDescriptor> out;
  out.push_back({RelationKind::kNPlusCurrentAnnihilation, std::nullopt, std::nullopt, 1});
  out.push_back({RelationKind::kCartanCurrentEigenvalue, std::nullopt, std::nullopt, 0});
  for (int i : {1, 2}) {
    out.push_back({RelationKind::kSimplePower, std::nullopt, i, add<std::int64_t>(coroot_pairing(simple_root(i), lambda), 1)});
  }
  for (const Root& alpha : {Root(1, 0), Root(0, 1), Root(1, 1)}) {
    out.push_back({RelationKind::kCurrentAnnihilation, alpha, std::nullopt, 1});
  }
  return out;
}

Weight wt_of_point(const PolyhedralPoint& p) {
  const auto [a1, a2, a3, a4, a5] = p.a;
  const RootCoords in_roots{2 * a1 + a2 + a3 + a4 + 2 * a5, 3 * a1 + 2 * a2 + 3 * a3 + 3 * a4 + 3 * a5};
  const Weight in_fundamentals{a1 - a3 - a4 + a5, a2 + 3 * a3 + 3 * a4};
  if (Weight::from_roots(in_roots) != in_fundamentals || in_fundamentals.to_roots() != in_roots) {
    throw InternalConsistencyError("wt(a) disagrees between root and fundamental coordinates");
  }
  return in_fundamentals;
}

std::int64_t t_degree_of_point(const PolyhedralPoint& p) {
  const auto [a1, a2, a3, a4, a5] = p.a;
  return a1 + a2 + a3 + 2 * a4 + 2 * a5;
}

namespace {

using BigInt = boost::multiprecision::cpp_int;

BigInt factorial(std::int64_t n) {
  BigInt out = 1;
  for (std::int64_t i = 2; i <= n; ++i) out *= i;
  return out;
}

// Bareiss elimination; exact for integer matrices.
BigInt integer_det(std::vector<std::vector<BigInt>> m) {
  const std::size_t n = m.size();
  BigInt previous = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t swap = k + 1;
      while (swap < n && m[swap][k] == 0) ++swap;
      if (swap == n) return 0;
      std::swap(m[k], m[swap]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / previous;
      }
    }
    previous = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

}  // namespace

std::vector<std::vector<Rational>> factorial_matrix(std::int64_t r) {
  if (r < 1) throw InvalidArgumentError("r must be positive, got " + std::to_string(r));
  std::vector<std::vector<Rational>> a(static_cast<std::size_t>(r + 1),
                                       std::vector<Rational>(static_cast<std::size_t>(r + 1)));
  for (std::int64_t i = 0; i <= r; ++i) {
    for (std::int64_t j = 0; j <= r; ++j) {
      const std::int64_t n = 3 * r + 1 - 3 * i - j;
      if (n >= 0) a[i][j] = Rational(BigInt(1), factorial(n));
    }
  }
  return a;
}

Rational factorial_matrix_det(std::int64_t r) {
  if (r < 1) throw InvalidArgumentError("r must be positive, got " + std::to_string(r));
  // Scale every entry by (3r+1)! to clear denominators.
  const BigInt scale = factorial(3 * r + 1);
  std::vector<std::vector<BigInt>> b(static_cast<std::size_t>(r + 1),
                                     std::vector<BigInt>(static_cast<std::size_t>(r + 1)));
  for (std::int64_t i = 0; i <= r; ++i) {
    for (std::int64_t j = 0; j <= r; ++j) {
      const std::int64_t n = 3 * r + 1 - 3 * i - j;
      if (n >= 0) b[i][j] = scale / factorial(n);
    }
  }
  BigInt denominator = 1;
  for (std::int64_t i = 0; i <= r; ++i) denominator *= scale;
  return Rational(integer_det(std::move(b)), denominator);
}

}  // namespace g2aff
