#include "g2aff/g2.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

#include "g2aff/checked.hpp"
#include "g2aff/errors.hpp"

namespace g2aff {

using checked::add;
using checked::mul;
using checked::sub;

RootCoords Weight::to_roots() const {
  return {add(mul<std::int64_t>(2, c1), c2), add(mul<std::int64_t>(3, c1), mul<std::int64_t>(2, c2))};
}

Weight Weight::from_roots(const RootCoords& r) {
  return {sub(mul<std::int64_t>(2, r.m), r.n), sub(mul<std::int64_t>(2, r.n), mul<std::int64_t>(3, r.m))};
}

Weight operator+(const Weight& a, const Weight& b) { return {add(a.c1, b.c1), add(a.c2, b.c2)}; }
Weight operator-(const Weight& a, const Weight& b) { return {sub(a.c1, b.c1), sub(a.c2, b.c2)}; }
Weight operator-(const Weight& a) { return Weight{} - a; }
Weight operator*(std::int64_t n, const Weight& a) { return {mul(n, a.c1), mul(n, a.c2)}; }

std::int64_t RootCoords::height() const { return add(m, n); }

RootCoords operator+(const RootCoords& a, const RootCoords& b) { return {add(a.m, b.m), add(a.n, b.n)}; }
RootCoords operator-(const RootCoords& a, const RootCoords& b) { return {sub(a.m, b.m), sub(a.n, b.n)}; }
RootCoords operator-(const RootCoords& a) { return RootCoords{} - a; }
RootCoords operator*(std::int64_t k, const RootCoords& a) { return {mul(k, a.m), mul(k, a.n)}; }

namespace {

constexpr std::array<RootCoords, 6> kPositive = {
    RootCoords{1, 0}, RootCoords{0, 1}, RootCoords{1, 1},
    RootCoords{1, 2}, RootCoords{1, 3}, RootCoords{2, 3},
};

}  // namespace

bool Root::is_root(const RootCoords& c) {
  for (const auto& p : kPositive) {
    if (c == p || (c.m == -p.m && c.n == -p.n)) return true;
  }
  return false;
}

Root::Root(std::int64_t m, std::int64_t n) : coords_{m, n} {
  if (!is_root(coords_)) {
    throw InvalidRootError("not a root of G2: " + g2aff::to_string(coords_));
  }
}

std::int64_t Root::norm() const { return pairing(coords_, coords_); }

const std::vector<Root>& positive_roots() {
  static const std::vector<Root> roots = [] {
    std::vector<Root> out;
    for (const auto& p : kPositive) out.emplace_back(p);
    return out;
  }();
  return roots;
}

const std::vector<Root>& all_roots() {
  static const std::vector<Root> roots = [] {
    std::vector<Root> out;
    for (const auto& p : kPositive) {
      out.emplace_back(p);
      out.emplace_back(-p);
    }
    std::sort(out.begin(), out.end());
    return out;
  }();
  return roots;
}

Root simple_root(int i) {
  if (i == 1) return Root(1, 0);
  if (i == 2) return Root(0, 1);
  throw InvalidArgumentError("simple root index must be 1 or 2, got " + std::to_string(i));
}

std::int64_t pairing(const RootCoords& x, const RootCoords& y) {
  std::int64_t v = mul<std::int64_t>(6, mul(x.m, y.m));
  v = sub(v, mul<std::int64_t>(3, add(mul(x.m, y.n), mul(x.n, y.m))));
  return add(v, mul<std::int64_t>(2, mul(x.n, y.n)));
}

std::int64_t pairing(const Weight& x, const Weight& y) { return pairing(x.to_roots(), y.to_roots()); }

std::int64_t coroot_pairing(const Root& alpha, const Weight& lambda) {
  // (alpha, alpha) divides 2 (alpha, lambda) on the weight lattice.
  return mul<std::int64_t>(2, pairing(alpha.coords(), lambda.to_roots())) / alpha.norm();
}

std::int64_t coroot_pairing(const RootCoords& alpha, const Weight& lambda) {
  return coroot_pairing(Root(alpha), lambda);
}

RootCoords simple_reflection(int i, const RootCoords& x) {
  // <alpha1^vee, x> = 2m - n and <alpha2^vee, x> = 2n - 3m.
  if (i == 1) return {sub(x.n, x.m), x.n};
  if (i == 2) return {x.m, sub(mul<std::int64_t>(3, x.m), x.n)};
  throw InvalidArgumentError("simple reflection index must be 1 or 2, got " + std::to_string(i));
}

Weight simple_reflection(int i, const Weight& lambda) {
  if (i == 1) return {-lambda.c1, add(lambda.c2, mul<std::int64_t>(3, lambda.c1))};
  if (i == 2) return {add(lambda.c1, lambda.c2), -lambda.c2};
  throw InvalidArgumentError("simple reflection index must be 1 or 2, got " + std::to_string(i));
}

WeylElement::WeylElement() : matrix_{1, 0, 0, 1} {}

WeylElement WeylElement::simple(int i) {
  if (i == 1) return WeylElement({-1, 1, 0, 1}, {1});
  if (i == 2) return WeylElement({1, 0, 3, -1}, {2});
  throw InvalidArgumentError("simple reflection index must be 1 or 2, got " + std::to_string(i));
}

int WeylElement::det() const {
  return static_cast<int>(matrix_[0] * matrix_[3] - matrix_[1] * matrix_[2]);
}

RootCoords WeylElement::apply(const RootCoords& x) const {
  return {add(mul(matrix_[0], x.m), mul(matrix_[1], x.n)), add(mul(matrix_[2], x.m), mul(matrix_[3], x.n))};
}

Weight WeylElement::apply(const Weight& x) const { return Weight::from_roots(apply(x.to_roots())); }

Root WeylElement::apply(const Root& x) const { return Root(apply(x.coords())); }

WeylElement operator*(const WeylElement& a, const WeylElement& b) {
  const auto& x = a.matrix_;
  const auto& y = b.matrix_;
  WeylElement::Matrix m = {x[0] * y[0] + x[1] * y[2], x[0] * y[1] + x[1] * y[3],
                           x[2] * y[0] + x[3] * y[2], x[2] * y[1] + x[3] * y[3]};
  std::vector<int> word = a.word_;
  word.insert(word.end(), b.word_.begin(), b.word_.end());
  return WeylElement(m, std::move(word));
}

std::string WeylElement::to_string() const {
  if (word_.empty()) return "id";
  std::string out;
  for (int i : word_) out += "s" + std::to_string(i);
  return out;
}

const std::vector<WeylElement>& weyl_group() {
  static const std::vector<WeylElement> group = [] {
    std::vector<WeylElement> found{WeylElement()};
    std::deque<WeylElement> queue{WeylElement()};
    while (!queue.empty()) {
      WeylElement w = queue.front();
      queue.pop_front();
      for (int i : {1, 2}) {
        WeylElement next = WeylElement::simple(i) * w;
        if (std::find(found.begin(), found.end(), next) == found.end()) {
          found.push_back(next);
          queue.push_back(next);
        }
      }
    }
    std::stable_sort(found.begin(), found.end(), [](const WeylElement& a, const WeylElement& b) {
      if (a.word().size() != b.word().size()) return a.word().size() < b.word().size();
      return a < b;
    });
    return found;
  }();
  return group;
}

const WeylElement& longest_element() { return weyl_group().back(); }

std::pair<Weight, WeylElement> dominant_representative(const Weight& lambda) {
  Weight mu = lambda;
  WeylElement w;
  while (!mu.is_dominant()) {
    int i = mu.c1 < 0 ? 1 : 2;
    mu = simple_reflection(i, mu);
    w = WeylElement::simple(i) * w;
  }
  return {mu, w};
}

std::vector<Weight> weyl_orbit(const Weight& lambda) {
  std::set<Weight> orbit;
  for (const auto& w : weyl_group()) orbit.insert(w.apply(lambda));
  return {orbit.begin(), orbit.end()};
}

std::string to_string(const Weight& w) {
  std::ostringstream os;
  os << "(" << w.c1 << "," << w.c2 << ")";
  return os.str();
}

std::string to_string(const RootCoords& r) {
  std::ostringstream os;
  os << "[" << r.m << "," << r.n << "]";
  return os.str();
}

std::string to_string(Int128 value) {
  if (value == 0) return "0";
  bool negative = value < 0;
  // Work in the negative range so the minimum value is representable.
  Int128 v = negative ? value : -value;
  std::string digits;
  while (v != 0) {
    digits.push_back(static_cast<char>('0' - static_cast<int>(v % 10)));
    v /= 10;
  }
  if (negative) digits.push_back('-');
  std::reverse(digits.begin(), digits.end());
  return digits;
}

}  // namespace g2aff
