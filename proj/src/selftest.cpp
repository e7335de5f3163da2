#include "g2aff/selftest.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <sstream>

#include "g2aff/affine.hpp"
#include "g2aff/character.hpp"
#include "g2aff/errors.hpp"
#include "g2aff/g2.hpp"
#include "g2aff/limit.hpp"
#include "g2aff/minaff.hpp"

namespace g2aff {

bool SelftestReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const SelftestCheck& c) { return c.passed; });
}

namespace {

std::string describe(const HighestWeightInput& in) {
  return "(k,l)=(" + std::to_string(in.k()) + "," + std::to_string(in.l()) + ")";
}

std::string g2_structure(std::int64_t scale) {
  const std::int64_t box = 10 * scale;
  for (std::int64_t a = -box; a <= box; ++a) {
    for (std::int64_t b = -box; b <= box; ++b) {
      Weight w{a, b};
      if (Weight::from_roots(w.to_roots()) != w) return "coordinate roundtrip fails at " + to_string(w);
    }
  }
  const auto& group = weyl_group();
  if (group.size() != 12) return "Weyl group has " + std::to_string(group.size()) + " elements";
  for (const auto& x : group) {
    if (x.det() != (x.length_parity() == 0 ? 1 : -1)) return "det disagrees with word parity for " + x.to_string();
    for (const auto& y : group) {
      if (std::find(group.begin(), group.end(), x * y) == group.end()) return "group not closed";
    }
    for (const Root& alpha : all_roots()) {
      if (!Root::is_root(x.apply(alpha.coords()))) return "W does not preserve the roots";
    }
  }
  for (const auto& w : group) {
    for (std::int64_t a = -2 * scale; a <= 2 * scale; ++a) {
      for (std::int64_t b = -2 * scale; b <= 2 * scale; ++b) {
        for (const Weight& y : {Weight{1, 0}, Weight{0, 1}, Weight{-2, 3}}) {
          if (pairing(w.apply(Weight{a, b}), w.apply(y)) != pairing(Weight{a, b}, y)) return "pairing not W-invariant";
        }
      }
    }
  }
  int long_count = 0;
  for (const Root& alpha : positive_roots()) long_count += alpha.is_long() ? 1 : 0;
  if (long_count != 3) return "expected 3 long positive roots";
  for (int i : {1, 2}) {
    if (coroot_pairing(simple_root(i), Weight::rho()) != 1) return "rho is not 1 on simple coroots";
  }
  return {};
}

std::string character_oracles(std::int64_t scale) {
  const std::int64_t bound = 2 * scale;
  for (std::int64_t c1 = 0; c1 <= bound; ++c1) {
    for (std::int64_t c2 = 0; c1 + c2 <= bound; ++c2) {
      const Weight lambda{c1, c2};
      const FormalCharacter chi = irreducible_character(lambda);
      if (!chi.is_weyl_invariant()) return "ch V" + to_string(lambda) + " is not W-invariant";
      if (chi.total() != weyl_dimension(lambda)) return "dimension mismatch for " + to_string(lambda);
      const RootCoords top = lambda.to_roots();
      for (std::int64_t m = -top.m; m <= top.m; ++m) {
        for (std::int64_t n = -top.n; n <= top.n; ++n) {
          const Weight mu = Weight::from_roots({m, n});
          if (chi.coeff(mu) != weight_multiplicity_alternating(lambda, mu)) {
            return "Freudenthal and alternating sum disagree at lambda=" + to_string(lambda) + " mu=" + to_string(mu);
          }
        }
      }
      IrrDecomposition single;
      single.add(lambda);
      if (decompose_character(chi) != single) return "peeling ch V" + to_string(lambda) + " fails";
    }
  }
  std::mt19937_64 rng(20240611);
  std::uniform_int_distribution<int> coin(0, 3);
  const std::int64_t key_bound = std::min<std::int64_t>(6, 2 * scale);
  for (int trial = 0; trial < 4 * scale; ++trial) {
    IrrDecomposition d;
    for (std::int64_t c1 = 0; c1 <= key_bound; ++c1) {
      for (std::int64_t c2 = 0; c1 + c2 <= key_bound; ++c2) {
        int n = coin(rng);
        if (n == 3) d.add({c1, c2}, 1 + coin(rng));
      }
    }
    if (decompose_character(d.character()) != d) return "assemble/decompose roundtrip fails";
  }
  return {};
}

std::string minaff_structure(std::int64_t scale) {
  const std::int64_t bound = 5 * scale;
  for (std::int64_t k = 0; k <= bound; ++k) {
    for (std::int64_t l = 0; k + l <= bound; ++l) {
      const HighestWeightInput in(k, l);
      const auto points = enumerate_S(in);
      for (const auto& p : points) {
        if (!target_weight(p, in).is_dominant()) return "non-dominant summand for " + describe(in);
        if (!p.in_S(HighestWeightInput(k + 1, l)) || !p.in_S(HighestWeightInput(k, l + 1))) {
          return "S is not monotone at " + describe(in);
        }
      }
      if (decompose_graded_limit(in).multiplicity(in.lambda()) != 1) return "top multiplicity != 1 for " + describe(in);
      for (auto variant : {MonomialVariant::kFirst, MonomialVariant::kSecond}) {
        auto m = highest_l_weight_monomials(in, variant);
        if (m.count(1) != static_cast<std::size_t>(k) || m.count(2) != static_cast<std::size_t>(l)) {
          return "monomial factor counts wrong for " + describe(in);
        }
      }
    }
  }
  const std::int64_t small = 2 * scale;
  for (std::int64_t k = 0; k <= small; ++k) {
    for (std::int64_t l = 0; k + l <= small; ++l) {
      const HighestWeightInput in(k, l);
      const FormalCharacter chi = graded_limit_character(in);
      if (decompose_character(chi) != decompose_graded_limit(in)) return "oracle roundtrip fails for " + describe(in);
      const FormalCharacter bound_chi =
          graded_limit_character(HighestWeightInput(k, 0)) * graded_limit_character(HighestWeightInput(0, l));
      if (!chi.dominated_by(bound_chi)) return "tensor bound fails for " + describe(in);
    }
  }
  for (std::int64_t k = 0; k <= 3 * scale; ++k) {
    IrrDecomposition expected;
    for (std::int64_t j = 0; j <= k; ++j) expected.add({j, 0});
    if (kr_decomposition(1, k) != expected) return "KR closed form fails at k=" + std::to_string(k);
  }
  for (std::int64_t i = 0; i < 7 * 7 * 7 * 7 * 7; ++i) {
    PolyhedralPoint p;
    std::int64_t rest = i;
    for (auto& x : p.a) {
      x = rest % 7;
      rest /= 7;
    }
    wt_of_point(p);  // throws on disagreement
  }
  for (std::int64_t r = 1; r <= std::min<std::int64_t>(30, 5 * scale); ++r) {
    if (factorial_matrix_det(r) == 0) return "factorial matrix singular at r=" + std::to_string(r);
  }
  return {};
}

std::string affine_structure(std::int64_t scale) {
  const std::int64_t bound = 3 * scale;
  const auto roots = positive_real_roots(4);
  for (std::int64_t k = 0; k <= bound; ++k) {
    for (std::int64_t l = 0; k + l <= bound; ++l) {
      const HighestWeightInput in(k, l);
      const std::int64_t r = in.r();
      const std::int64_t d = in.s() == 2 ? 1 : 0;
      for (const auto& gamma : roots) {
        std::int64_t expected = 0;
        const auto m = gamma.finite.m();
        const auto n = gamma.finite.n();
        if (gamma.p == 1 && m == -1 && n == -2) expected = 3 * r + d;
        if (gamma.p == 1 && m == -1 && n == -3) expected = 2 * r + d;
        if (gamma.p == 1 && m == -2 && n == -3) expected = k + 2 * r + d;
        if (gamma.p == 2 && ((m == -1 && n == -3) || (m == -2 && n == -3))) expected = r;
        if (rho(gamma, in) != expected) return "rho mismatch at " + gamma.to_string() + " for " + describe(in);
      }
    }
  }
  for (const auto& gamma : roots) {
    const std::int64_t expected = gamma.finite.is_long() ? gamma.p : 3 * gamma.p;
    if (gamma.k_coefficient() != expected) return "K-coefficient wrong at " + gamma.to_string();
    const AffineWeightAtom atom{{1, 2}, 1};
    for (std::int64_t n = 0; n <= 5; ++n) {
      if (affine_coroot_pairing(gamma, n * atom) != n * affine_coroot_pairing(gamma, atom)) {
        return "affine coroot pairing is not linear";
      }
    }
  }
  return {};
}

std::string limit_structure(std::int64_t scale) {
  const std::vector<NodeSet> sets = {{1}, {2}, {1, 2}};
  for (const auto& a : sets) {
    for (const auto& b : sets) {
      NodeSet u = a;
      u.insert(b.begin(), b.end());
      auto ta = exponent_table(a);
      auto tb = exponent_table(b);
      for (const auto& [alpha, e] : exponent_table(u)) {
        if (e != std::max(ta.at(alpha), tb.at(alpha))) return "exponent table is not max-compatible";
      }
    }
  }
  std::vector<Root> order = positive_roots();
  std::sort(order.begin(), order.end());
  const TruncatedSeries reference = product_series({1, 2}, 3);
  do {
    if (product_series({1, 2}, 3, order) != reference) return "product series depends on factor order";
  } while (std::next_permutation(order.begin(), order.end()));

  const std::int64_t degree = 1 + scale;
  for (const auto& nodes : sets) {
    const std::int64_t n_max = 2 * degree + 4;
    const auto result = convergence_check(nodes, degree, n_max);
    if (!result.first_stable_n) {
      return "normalized characters did not stabilize by n=" + std::to_string(n_max) + " at D=" + std::to_string(degree);
    }
    const TruncatedSeries limit = product_series(nodes, degree);
    for (std::int64_t n = 1; n <= *result.first_stable_n + 1; ++n) {
      if (!normalized_truncated_char(diagonal_input(nodes, n), degree).dominated_by(limit)) {
        return "normalized character exceeds the limit series";
      }
    }
  }
  return {};
}

}  // namespace

SelftestReport run_selftest(std::int64_t scale) {
  if (scale < 1) throw InvalidArgumentError("scale must be >= 1");
  const std::vector<std::pair<std::string, std::function<std::string(std::int64_t)>>> suites = {
      {"g2-structure", g2_structure},
      {"character-oracles", character_oracles},
      {"graded-limit-structure", minaff_structure},
      {"affine-rho", affine_structure},
      {"limit-character", limit_structure},
  };
  SelftestReport report;
  for (const auto& [name, fn] : suites) {
    SelftestCheck check{name, false, {}};
    try {
      check.detail = fn(scale);
      check.passed = check.detail.empty();
    } catch (const std::exception& e) {
      check.detail = std::string("exception: ") + e.what();
    }
    report.checks.push_back(std::move(check));
  }
  return report;
}

}  // namespace g2aff
