#include "g2aff/g2.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "g2aff/errors.hpp"

namespace g2aff {
namespace {

const RootCoords kAlpha1{1, 0};
const RootCoords kAlpha2{0, 1};

TEST(G2Pairing, GramMatrixEntries) {
  EXPECT_EQ(pairing(kAlpha1, kAlpha1), 6);
  EXPECT_EQ(pairing(kAlpha1, kAlpha2), -3);
  EXPECT_EQ(pairing(kAlpha2, kAlpha2), 2);
  EXPECT_EQ(pairing(RootCoords{1, 2}, RootCoords{1, 2}), 2);  // 6 - 12 + 8
}

TEST(G2Pairing, Symmetric) {
  for (std::int64_t a = -3; a <= 3; ++a)
    for (std::int64_t b = -3; b <= 3; ++b)
      for (std::int64_t c = -3; c <= 3; ++c)
        for (std::int64_t d = -3; d <= 3; ++d) EXPECT_EQ(pairing(RootCoords{a, b}, RootCoords{c, d}), pairing(RootCoords{c, d}, RootCoords{a, b}));
}

TEST(G2CorootPairing, FundamentalWeightsAreDual) {
  EXPECT_EQ(coroot_pairing(Root(1, 0), Weight::omega1()), 1);
  EXPECT_EQ(coroot_pairing(Root(0, 1), Weight::omega1()), 0);
  EXPECT_EQ(coroot_pairing(Root(1, 0), Weight::omega2()), 0);
  EXPECT_EQ(coroot_pairing(Root(0, 1), Weight::omega2()), 1);
  EXPECT_EQ(coroot_pairing(Root(1, 2), Weight::omega2()), 2);
}

TEST(G2CorootPairing, InvalidRoot) {
  EXPECT_THROW(coroot_pairing(RootCoords{2, 0}, Weight::omega1()), InvalidRootError);
  EXPECT_THROW(Root(0, 0), InvalidRootError);
  EXPECT_THROW(Root(1, 4), InvalidRootError);
}

TEST(G2Roots, LongAndShort) {
  std::set<RootCoords> long_roots;
  std::set<RootCoords> short_roots;
  for (const Root& alpha : positive_roots()) (alpha.is_long() ? long_roots : short_roots).insert(alpha.coords());
  EXPECT_EQ(long_roots, (std::set<RootCoords>{{1, 0}, {1, 3}, {2, 3}}));
  EXPECT_EQ(short_roots, (std::set<RootCoords>{{0, 1}, {1, 1}, {1, 2}}));
  EXPECT_EQ(all_roots().size(), 12u);
}

TEST(G2Weights, FundamentalWeightsInRootCoordinates) {
  EXPECT_EQ(Weight::omega1().to_roots(), (RootCoords{2, 3}));
  EXPECT_EQ(Weight::omega2().to_roots(), (RootCoords{1, 2}));
  EXPECT_TRUE((Weight{0, 3}).is_dominant());
  EXPECT_FALSE((Weight{-1, 3}).is_dominant());
}

TEST(G2Weights, CoordinateRoundTrip) {
  for (std::int64_t a = -25; a <= 25; ++a) {
    for (std::int64_t b = -25; b <= 25; ++b) {
      const Weight w{a, b};
      EXPECT_EQ(Weight::from_roots(w.to_roots()), w);
      const RootCoords r{a, b};
      EXPECT_EQ(Weight::from_roots(r).to_roots(), r);
    }
  }
}

TEST(G2Weights, OverflowIsDetected) {
  const Weight big{std::int64_t{1} << 62, 0};
  EXPECT_THROW(big.to_roots(), OverflowError);
}

TEST(G2Reflections, Examples) {
  EXPECT_EQ(simple_reflection(1, Weight::omega1()), Weight::omega1() - Weight::from_roots(kAlpha1));
  EXPECT_EQ(simple_reflection(2, Weight::omega1()), Weight::omega1());
  EXPECT_THROW(simple_reflection(3, Weight::omega1()), InvalidArgumentError);
}

TEST(G2Reflections, InvolutiveAndIsometric) {
  for (int i : {1, 2}) {
    for (std::int64_t a = -5; a <= 5; ++a) {
      for (std::int64_t b = -5; b <= 5; ++b) {
        const Weight w{a, b};
        EXPECT_EQ(simple_reflection(i, simple_reflection(i, w)), w);
        EXPECT_EQ(pairing(simple_reflection(i, w), simple_reflection(i, Weight{2, -1})), pairing(w, Weight{2, -1}));
        EXPECT_EQ(Weight::from_roots(simple_reflection(i, w.to_roots())), simple_reflection(i, w));
      }
    }
  }
}

TEST(G2Reflections, OrbitOfOmega1HasSixElements) {
  // Closure under s1, s2 computed here by hand-rolled search.
  std::set<Weight> orbit{Weight::omega1()};
  std::vector<Weight> todo{Weight::omega1()};
  while (!todo.empty()) {
    Weight w = todo.back();
    todo.pop_back();
    for (int i : {1, 2}) {
      if (orbit.insert(simple_reflection(i, w)).second) todo.push_back(simple_reflection(i, w));
    }
  }
  EXPECT_EQ(orbit.size(), 6u);
  EXPECT_EQ(weyl_orbit(Weight::omega1()).size(), 6u);
  EXPECT_EQ(weyl_orbit(Weight{1, 1}).size(), 12u);
  EXPECT_EQ(weyl_orbit(Weight{}).size(), 1u);
}

TEST(G2WeylGroup, TwelveElementsClosedWithIdentity) {
  const auto& group = weyl_group();
  ASSERT_EQ(group.size(), 12u);
  EXPECT_EQ(group.front(), WeylElement());
  EXPECT_EQ(group.front().det(), 1);
  for (const auto& x : group) {
    for (const auto& y : group) EXPECT_NE(std::find(group.begin(), group.end(), x * y), group.end());
  }
}

TEST(G2WeylGroup, SignCharacterMatchesWordParity) {
  for (const auto& w : weyl_group()) EXPECT_EQ(w.det(), w.length_parity() == 0 ? 1 : -1);
  // A non-reduced word has the same sign as its reduction.
  WeylElement w = WeylElement::simple(1) * WeylElement::simple(1) * WeylElement::simple(2);
  EXPECT_EQ(w, WeylElement::simple(2));
  EXPECT_EQ(w.det(), -1);
  EXPECT_EQ(w.length_parity(), 1);
}

TEST(G2WeylGroup, LongestElementNegatesPositiveRoots) {
  const WeylElement& w0 = longest_element();
  EXPECT_EQ(w0.word().size(), 6u);
  for (const Root& alpha : positive_roots()) EXPECT_EQ(w0.apply(alpha), -alpha);
}

TEST(G2WeylGroup, PreservesRootsAndPairing) {
  for (const auto& w : weyl_group()) {
    for (const Root& alpha : all_roots()) EXPECT_TRUE(Root::is_root(w.apply(alpha.coords())));
    for (std::int64_t a = -3; a <= 3; ++a)
      for (std::int64_t b = -3; b <= 3; ++b)
        for (std::int64_t c = -3; c <= 3; ++c) {
          const Weight x{a, b};
          const Weight y{c, a - b};
          EXPECT_EQ(pairing(w.apply(x), w.apply(y)), pairing(x, y));
        }
  }
}

TEST(G2Dominant, Examples) {
  auto [mu, w] = dominant_representative(Weight::omega1());
  EXPECT_EQ(mu, Weight::omega1());
  EXPECT_EQ(w, WeylElement());

  const Weight reflected = simple_reflection(1, Weight::omega1());
  std::tie(mu, w) = dominant_representative(reflected);
  EXPECT_EQ(mu, Weight::omega1());
  EXPECT_EQ(w.apply(reflected), Weight::omega1());

  std::tie(mu, w) = dominant_representative(Weight{-1, -1});
  EXPECT_EQ(mu, (Weight{1, 1}));
  EXPECT_EQ(w, longest_element());
}

TEST(G2Dominant, RepresentativeIsConjugate) {
  for (std::int64_t a = -8; a <= 8; ++a) {
    for (std::int64_t b = -8; b <= 8; ++b) {
      auto [mu, w] = dominant_representative(Weight{a, b});
      EXPECT_TRUE(mu.is_dominant());
      EXPECT_EQ(w.apply(Weight{a, b}), mu);
    }
  }
}

TEST(G2Rho, PairsToOneWithSimpleCoroots) {
  EXPECT_EQ(coroot_pairing(simple_root(1), Weight::rho()), 1);
  EXPECT_EQ(coroot_pairing(simple_root(2), Weight::rho()), 1);
}

}  // namespace
}  // namespace g2aff
