#include "g2aff/affine.hpp"

#include <algorithm>
#include <sstream>
#include <tuple>

#include "g2aff/checked.hpp"
#include "g2aff/errors.hpp"

namespace g2aff {

using checked::add;
using checked::mul;

std::int64_t AffineRealRoot::k_coefficient() const { return mul<std::int64_t>(6 / finite.norm(), p); }

std::string AffineRealRoot::to_string() const {
  std::ostringstream os;
  os << "[" << finite.m() << "," << finite.n() << "," << p << "]";
  return os.str();
}

bool operator<(const AffineRealRoot& a, const AffineRealRoot& b) {
  return std::make_tuple(a.p, a.finite.m(), a.finite.n()) < std::make_tuple(b.p, b.finite.m(), b.finite.n());
}

std::int64_t affine_coroot_pairing(const AffineRealRoot& gamma, const AffineWeightAtom& atom) {
  return add(coroot_pairing(gamma.finite, atom.finite), mul(gamma.k_coefficient(), atom.level));
}

std::array<AffineWeightAtom, 3> rho_atoms(const HighestWeightInput& input) {
  return {input.k() * AffineWeightAtom{Weight::omega1(), 1},
          input.r() * AffineWeightAtom{3 * Weight::omega2(), 1},
          AffineWeightAtom{input.s() * Weight::omega2(), 1}};
}

std::int64_t rho_for_atoms(const AffineRealRoot& gamma, std::span<const AffineWeightAtom> atoms) {
  std::int64_t total = 0;
  for (const auto& atom : atoms) total = add(total, std::max<std::int64_t>(0, -affine_coroot_pairing(gamma, atom)));
  return total;
}

std::int64_t rho(const AffineRealRoot& gamma, const HighestWeightInput& input) {
  if (!gamma.is_positive()) throw NonPositiveRootError("rho is defined on positive real roots only: " + gamma.to_string());
  const auto atoms = rho_atoms(input);
  return rho_for_atoms(gamma, atoms);
}

std::vector<AffineRealRoot> positive_real_roots(std::int64_t p_max) {
  std::vector<AffineRealRoot> out;
  for (std::int64_t p = 0; p <= p_max; ++p) {
    for (const Root& alpha : all_roots()) {
      AffineRealRoot gamma{alpha, p};
      if (gamma.is_positive()) out.push_back(gamma);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::pair<AffineRealRoot, std::int64_t>> rho_table(const HighestWeightInput& input, std::int64_t p_max) {
  if (p_max < 2) throw InvalidArgumentError("p_max must be at least 2, got " + std::to_string(p_max));
  std::vector<std::pair<AffineRealRoot, std::int64_t>> out;
  for (const auto& gamma : positive_real_roots(p_max)) out.emplace_back(gamma, rho(gamma, input));
  return out;
}

std::vector<DemazureEntry> demazure_sequence(const HighestWeightInput& input) {
  std::vector<DemazureEntry> out;
  if (input.k() > 0) out.push_back({-input.k() * Weight::omega1(), input.k()});
  if (input.r() > 0) out.push_back({-(3 * input.r()) * Weight::omega2(), input.r()});
  if (input.s() > 0) out.push_back({-input.s() * Weight::omega2(), 1});
  return out;
}

}  // namespace g2aff
