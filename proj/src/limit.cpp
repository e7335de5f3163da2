#include "g2aff/limit.hpp"

#include <algorithm>

#include "g2aff/errors.hpp"

namespace g2aff {

using checked::add;
using checked::mul;

TruncatedSeries::TruncatedSeries(std::int64_t degree) : degree_(degree) {
  if (degree < 1) throw InvalidArgumentError("truncation degree must be >= 1, got " + std::to_string(degree));
  coeffs_.assign(static_cast<std::size_t>((degree + 1) * (degree + 1)), 0);
}

TruncatedSeries TruncatedSeries::one(std::int64_t degree) {
  TruncatedSeries s(degree);
  s.set(0, 0, 1);
  return s;
}

std::size_t TruncatedSeries::index(std::int64_t m, std::int64_t n) const {
  return static_cast<std::size_t>(m * (degree_ + 1) + n);
}

Int128 TruncatedSeries::at(std::int64_t m, std::int64_t n) const {
  if (m < 0 || n < 0 || m > degree_ || n > degree_) return 0;
  return coeffs_[index(m, n)];
}

void TruncatedSeries::set(std::int64_t m, std::int64_t n, Int128 value) {
  if (m < 0 || n < 0 || m > degree_ || n > degree_) {
    throw InvalidArgumentError("exponent outside the truncation box");
  }
  coeffs_[index(m, n)] = value;
}

void TruncatedSeries::add(std::int64_t m, std::int64_t n, Int128 value) {
  if (m < 0 || n < 0 || m > degree_ || n > degree_) return;
  auto& c = coeffs_[index(m, n)];
  c = checked::add(c, value);
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  if (a.degree_ != b.degree_) throw InvalidArgumentError("truncation degrees differ");
  const std::int64_t d = a.degree_;
  TruncatedSeries out(d);
  for (std::int64_t m1 = 0; m1 <= d; ++m1) {
    for (std::int64_t n1 = 0; n1 <= d; ++n1) {
      const Int128 x = a.at(m1, n1);
      if (x == 0) continue;
      for (std::int64_t m2 = 0; m1 + m2 <= d; ++m2) {
        for (std::int64_t n2 = 0; n1 + n2 <= d; ++n2) {
          const Int128 y = b.at(m2, n2);
          if (y != 0) out.add(m1 + m2, n1 + n2, mul(x, y));
        }
      }
    }
  }
  return out;
}

bool TruncatedSeries::dominated_by(const TruncatedSeries& other) const {
  if (degree_ != other.degree_) throw InvalidArgumentError("truncation degrees differ");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] > other.coeffs_[i]) return false;
  }
  return true;
}

std::map<Root, std::int64_t> exponent_table(const NodeSet& nodes) {
  if (nodes.empty()) throw InvalidArgumentError("node set J must be nonempty");
  for (int j : nodes) {
    if (j != 1 && j != 2) throw InvalidArgumentError("node must be 1 or 2, got " + std::to_string(j));
  }
  std::map<Root, std::int64_t> out;
  for (const Root& alpha : positive_roots()) {
    // The fundamental coweights are dual to the simple roots.
    std::int64_t e = 0;
    if (nodes.contains(1)) e = std::max(e, alpha.m());
    if (nodes.contains(2)) e = std::max(e, alpha.n());
    out.emplace(alpha, e);
  }
  return out;
}

TruncatedSeries negative_binomial_series(const Root& alpha, std::int64_t exponent, std::int64_t degree) {
  TruncatedSeries s(degree);
  // (1 - x)^{-e} = sum_j C(j + e - 1, j) x^j; for e = 0 only j = 0 survives.
  Int128 binom = 1;
  for (std::int64_t j = 0; j * alpha.m() <= degree && j * alpha.n() <= degree; ++j) {
    if (j > 0) {
      if (exponent == 0) break;
      binom = mul<Int128>(binom, j + exponent - 1) / j;
    }
    s.set(j * alpha.m(), j * alpha.n(), binom);
  }
  return s;
}

TruncatedSeries product_series(const NodeSet& nodes, std::int64_t degree, const std::vector<Root>& order) {
  const auto exponents = exponent_table(nodes);
  TruncatedSeries out = TruncatedSeries::one(degree);
  for (const Root& alpha : order) out = out * negative_binomial_series(alpha, exponents.at(alpha), degree);
  return out;
}

TruncatedSeries product_series(const NodeSet& nodes, std::int64_t degree) {
  return product_series(nodes, degree, positive_roots());
}

TruncatedSeries normalized_truncated_char(const HighestWeightInput& input, std::int64_t degree) {
  TruncatedSeries out(degree);
  const Weight lambda = input.lambda();
  const IrrDecomposition decomposition = decompose_graded_limit(input);
  for (const auto& [mu, mult] : decomposition.parts()) {
    // Weights of V(mu) lie below mu, so a summand whose top is already
    // outside the box contributes nothing.
    const RootCoords top = (lambda - mu).to_roots();
    if (top.m > degree || top.n > degree) continue;
    const FormalCharacter chi = irreducible_character(mu);
    for (const auto& [nu, c] : chi.terms()) {
      const RootCoords depth = (lambda - nu).to_roots();
      out.add(depth.m, depth.n, mul(mult, c));
    }
  }
  return out;
}

HighestWeightInput diagonal_input(const NodeSet& nodes, std::int64_t n) {
  exponent_table(nodes);  // validates J
  return HighestWeightInput(nodes.contains(1) ? n : 0, nodes.contains(2) ? n : 0);
}

ConvergenceResult convergence_check(const NodeSet& nodes, std::int64_t degree, std::int64_t n_max) {
  const TruncatedSeries limit = product_series(nodes, degree);
  ConvergenceResult result;
  bool previous = false;
  for (std::int64_t n = 1; n <= n_max; ++n) {
    const bool agrees = normalized_truncated_char(diagonal_input(nodes, n), degree) == limit;
    if (agrees) result.agreeing_n.push_back(n);
    if (agrees && previous) {
      result.first_stable_n = n - 1;
      break;
    }
    previous = agrees;
  }
  return result;
}

}  // namespace g2aff
