#include "g2aff/affine.hpp"

#include <gtest/gtest.h>

#include "g2aff/errors.hpp"

namespace g2aff {
namespace {

// The five closed forms, keyed by (m, n, p) of the root.
std::map<std::array<std::int64_t, 3>, std::int64_t> closed_forms(std::int64_t k, std::int64_t l) {
  const std::int64_t r = l / 3;
  const std::int64_t d = l % 3 == 2 ? 1 : 0;
  return {
      {{-1, -2, 1}, 3 * r + d}, {{-1, -3, 1}, 2 * r + d}, {{-2, -3, 1}, k + 2 * r + d},
      {{-1, -3, 2}, r},         {{-2, -3, 2}, r},
  };
}

TEST(AffineRoot, PositivityAndKCoefficient) {
  EXPECT_TRUE((AffineRealRoot{Root(1, 0), 0}).is_positive());
  EXPECT_FALSE((AffineRealRoot{Root(-1, 0), 0}).is_positive());
  EXPECT_TRUE((AffineRealRoot{Root(-2, -3), 1}).is_positive());
  EXPECT_FALSE((AffineRealRoot{Root(0, 1), -1}).is_positive());
  for (std::int64_t p = -3; p <= 3; ++p) {
    for (const Root& alpha : all_roots()) {
      EXPECT_EQ((AffineRealRoot{alpha, p}).k_coefficient(), alpha.is_long() ? p : 3 * p);
    }
  }
  EXPECT_EQ((AffineRealRoot{Root(-1, -2), 1}).to_string(), "[-1,-2,1]");
}

TEST(AffineRoot, Ordering) {
  const auto roots = positive_real_roots(2);
  EXPECT_EQ(roots.size(), 6u + 12u + 12u);
  EXPECT_TRUE(std::is_sorted(roots.begin(), roots.end()));
  EXPECT_EQ(roots.front(), (AffineRealRoot{Root(0, 1), 0}));
  for (const auto& gamma : roots) EXPECT_TRUE(gamma.is_positive());
}

TEST(AffineCorootPairing, Examples) {
  EXPECT_EQ(affine_coroot_pairing({Root(1, 0), 0}, {Weight::omega1(), 0}), 1);
  EXPECT_EQ(affine_coroot_pairing({Root(-1, -2), 1}, {Weight::omega2(), 1}), 1);
  for (std::int64_t k = 0; k <= 5; ++k) {
    EXPECT_EQ(affine_coroot_pairing({Root(-2, -3), 1}, k * AffineWeightAtom{Weight::omega1(), 1}), -k);
  }
}

TEST(AffineCorootPairing, LinearInAtom) {
  const AffineWeightAtom atoms[] = {{{1, 0}, 1}, {{0, 3}, 1}, {{0, 1}, 1}, {{2, -1}, 0}};
  for (const auto& gamma : positive_real_roots(3)) {
    for (const auto& atom : atoms) {
      for (std::int64_t n = -4; n <= 4; ++n) {
        EXPECT_EQ(affine_coroot_pairing(gamma, n * atom), n * affine_coroot_pairing(gamma, atom));
      }
    }
  }
}

TEST(Rho, Examples) {
  const HighestWeightInput in(3, 8);  // r = 2, s = 2
  EXPECT_EQ(rho({Root(-1, -2), 1}, in), 7);
  EXPECT_EQ(rho({Root(-2, -3), 1}, in), 3 + 4 + 1);
  EXPECT_EQ(rho({Root(0, 1), 0}, in), 0);
  EXPECT_EQ(rho({Root(-1, -2), 1}, HighestWeightInput(1, 2)), 1);
  EXPECT_THROW(rho({Root(0, -1), 0}, in), NonPositiveRootError);
  EXPECT_THROW(rho({Root(2, 3), -1}, in), NonPositiveRootError);
}

TEST(Rho, AtomsAndCustomAtoms) {
  const HighestWeightInput in(2, 5);
  const auto atoms = rho_atoms(in);
  EXPECT_EQ(atoms[0], (AffineWeightAtom{{2, 0}, 2}));
  EXPECT_EQ(atoms[1], (AffineWeightAtom{{0, 3}, 1}));
  EXPECT_EQ(atoms[2], (AffineWeightAtom{{0, 2}, 1}));
  for (const auto& gamma : positive_real_roots(3)) EXPECT_EQ(rho_for_atoms(gamma, atoms), rho(gamma, in));
  const std::vector<AffineWeightAtom> single = {{{0, 0}, 1}};
  EXPECT_EQ(rho_for_atoms({Root(-1, -2), 1}, single), 0);
}

TEST(RhoTable, ZeroInput) {
  for (const auto& [gamma, value] : rho_table(HighestWeightInput(0, 0))) EXPECT_EQ(value, 0) << gamma.to_string();
}

TEST(RhoTable, RIsOneSIsZero) {
  std::map<std::array<std::int64_t, 3>, std::int64_t> nonzero;
  for (const auto& [gamma, value] : rho_table(HighestWeightInput(0, 3))) {
    if (value != 0) nonzero[{gamma.finite.m(), gamma.finite.n(), gamma.p}] = value;
  }
  const std::map<std::array<std::int64_t, 3>, std::int64_t> expected = {
      {{-1, -2, 1}, 3}, {{-1, -3, 1}, 2}, {{-2, -3, 1}, 2}, {{-1, -3, 2}, 1}, {{-2, -3, 2}, 1}};
  EXPECT_EQ(nonzero, expected);
}

TEST(RhoTable, ClosedFormsUpToTwelve) {
  for (std::int64_t k = 0; k <= 12; ++k) {
    for (std::int64_t l = 0; k + l <= 12; ++l) {
      const auto expected = closed_forms(k, l);
      const auto table = rho_table(HighestWeightInput(k, l), 4);
      EXPECT_EQ(table.size(), positive_real_roots(4).size());
      for (const auto& [gamma, value] : table) {
        const auto it = expected.find({gamma.finite.m(), gamma.finite.n(), gamma.p});
        EXPECT_EQ(value, it == expected.end() ? 0 : it->second) << gamma.to_string() << " at " << k << "," << l;
      }
    }
  }
}

TEST(RhoTable, RequiresPMaxAtLeastTwo) {
  EXPECT_THROW(rho_table(HighestWeightInput(1, 1), 1), InvalidArgumentError);
}

TEST(Demazure, Examples) {
  EXPECT_EQ(demazure_sequence(HighestWeightInput(2, 0)), (std::vector<DemazureEntry>{{{-2, 0}, 2}}));
  EXPECT_EQ(demazure_sequence(HighestWeightInput(0, 3)), (std::vector<DemazureEntry>{{{0, -3}, 1}}));
  EXPECT_EQ(demazure_sequence(HighestWeightInput(1, 4)),
            (std::vector<DemazureEntry>{{{-1, 0}, 1}, {{0, -3}, 1}, {{0, -1}, 1}}));
  EXPECT_TRUE(demazure_sequence(HighestWeightInput(0, 0)).empty());
  EXPECT_EQ(demazure_sequence(HighestWeightInput(3, 11)),
            (std::vector<DemazureEntry>{{{-3, 0}, 3}, {{0, -9}, 3}, {{0, -2}, 1}}));
}

TEST(Demazure, FiniteParts) {
  // Summing finite parts recovers -lambda.
  for (std::int64_t k = 0; k <= 6; ++k) {
    for (std::int64_t l = 0; l <= 9; ++l) {
      Weight sum;
      for (const auto& e : demazure_sequence(HighestWeightInput(k, l))) {
        EXPECT_GT(e.multiplier, 0);
        sum = sum + e.finite;
      }
      EXPECT_EQ(sum, (Weight{-k, -l}));
    }
  }
}

}  // namespace
}  // namespace g2aff
