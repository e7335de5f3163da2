#pragma once

// Normalized characters e^{-lambda} ch L(m) as power series in
// x1 = e^{-alpha1}, x2 = e^{-alpha2}, and their limit along
// lambda_n = n * sum_{j in J} omega_j:
//
//   prod_{alpha > 0} (1 - e^{-alpha})^{-max_{j in J} <omega_j^vee, alpha>}.
//
// Series are truncated to the box {0..D}^2 of exponents.

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "g2aff/checked.hpp"
#include "g2aff/g2.hpp"
#include "g2aff/minaff.hpp"

namespace g2aff {

using NodeSet = std::set<int>;

// Coefficient (m, n) multiplies e^{-(m alpha1 + n alpha2)}.
class TruncatedSeries {
 public:
  explicit TruncatedSeries(std::int64_t degree);

  static TruncatedSeries one(std::int64_t degree);

  std::int64_t degree() const { return degree_; }
  // Zero outside the box.
  Int128 at(std::int64_t m, std::int64_t n) const;
  void set(std::int64_t m, std::int64_t n, Int128 value);
  void add(std::int64_t m, std::int64_t n, Int128 value);

  // Product with terms outside the box discarded. Degrees must match.
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
  // Every coefficient <= the matching one of other.
  bool dominated_by(const TruncatedSeries& other) const;

  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

 private:
  std::size_t index(std::int64_t m, std::int64_t n) const;

  std::int64_t degree_;
  std::vector<Int128> coeffs_;
};

// max_{j in J} <omega_j^vee, alpha> for every positive root. Throws
// InvalidArgumentError for empty J or nodes outside {1, 2}.
std::map<Root, std::int64_t> exponent_table(const NodeSet& nodes);

// (1 - e^{-alpha})^{-e} expanded in the box.
TruncatedSeries negative_binomial_series(const Root& alpha, std::int64_t exponent, std::int64_t degree);

// Product over positive roots, factors multiplied in `order` (defaults to
// positive_roots()).
TruncatedSeries product_series(const NodeSet& nodes, std::int64_t degree);
TruncatedSeries product_series(const NodeSet& nodes, std::int64_t degree, const std::vector<Root>& order);

// e^{-lambda} ch L(m) truncated to the box.
TruncatedSeries normalized_truncated_char(const HighestWeightInput& input, std::int64_t degree);

// n * sum_{j in J} omega_j as an input.
HighestWeightInput diagonal_input(const NodeSet& nodes, std::int64_t n);

struct ConvergenceResult {
  // Smallest n with agreement at both n and n + 1 (both <= n_max).
  std::optional<std::int64_t> first_stable_n;
  // n with agreement, among 1..n_max.
  std::vector<std::int64_t> agreeing_n;
};

ConvergenceResult convergence_check(const NodeSet& nodes, std::int64_t degree, std::int64_t n_max);

}  // namespace g2aff
