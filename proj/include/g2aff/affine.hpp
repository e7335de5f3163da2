#pragma once

// Real roots of untwisted affine G2 and the annihilation exponents rho(gamma)
// of the generating vector of the multiple Demazure module attached to
// lambda = k omega1 + l omega2.
//
// Affine weights are taken modulo C delta; only the finite part and the
// Lambda0 level are tracked.

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "g2aff/g2.hpp"
#include "g2aff/minaff.hpp"

namespace g2aff {

// gamma = alpha + p delta.
struct AffineRealRoot {
  Root finite;
  std::int64_t p = 0;

  bool is_positive() const { return p > 0 || (p == 0 && finite.is_positive()); }
  // 6p / (alpha, alpha): the K-coefficient of gamma^vee.
  std::int64_t k_coefficient() const;
  std::string to_string() const;

  friend bool operator==(const AffineRealRoot&, const AffineRealRoot&) = default;
};

// Sort key (p, m, n).
bool operator<(const AffineRealRoot& a, const AffineRealRoot& b);

// finite + level * Lambda0.
struct AffineWeightAtom {
  Weight finite;
  std::int64_t level = 0;

  friend AffineWeightAtom operator*(std::int64_t n, const AffineWeightAtom& a) { return {n * a.finite, n * a.level}; }
  friend bool operator==(const AffineWeightAtom&, const AffineWeightAtom&) = default;
};

// <gamma^vee, atom> with <alpha^vee, Lambda0> = 0 and <K, Lambda0> = 1.
std::int64_t affine_coroot_pairing(const AffineRealRoot& gamma, const AffineWeightAtom& atom);

// k(omega1 + Lambda0), r(3 omega2 + Lambda0), s omega2 + Lambda0.
std::array<AffineWeightAtom, 3> rho_atoms(const HighestWeightInput& input);

// Sum over the atoms of max(0, -<gamma^vee, atom>).
std::int64_t rho_for_atoms(const AffineRealRoot& gamma, std::span<const AffineWeightAtom> atoms);

// Throws NonPositiveRootError unless gamma is a positive real root.
std::int64_t rho(const AffineRealRoot& gamma, const HighestWeightInput& input);

// All positive real roots alpha + p delta with p <= p_max, sorted by (p, m, n).
std::vector<AffineRealRoot> positive_real_roots(std::int64_t p_max);

// rho on positive_real_roots(p_max). Requires p_max >= 2.
std::vector<std::pair<AffineRealRoot, std::int64_t>> rho_table(const HighestWeightInput& input,
                                                              std::int64_t p_max = 4);

// Entry (finite, multiplier) of the multiple Demazure sequence; the affine
// weight is finite + multiplier * Lambda0.
struct DemazureEntry {
  Weight finite;
  std::int64_t multiplier = 0;

  friend bool operator==(const DemazureEntry&, const DemazureEntry&) = default;
};

// (-k omega1, k), (-3r omega2, r) and, when s != 0, (-s omega2, 1). Entries
// with zero multiplier are omitted.
std::vector<DemazureEntry> demazure_sequence(const HighestWeightInput& input);

}  // namespace g2aff
