#pragma once

// Root datum of G2.
//
// Conventions: alpha1 is the long simple root, alpha2 the short one, with
// Gram matrix [[6, -3], [-3, 2]] in the (alpha1, alpha2) basis. The
// fundamental weights are omega1 = 2 alpha1 + 3 alpha2 and
// omega2 = alpha1 + 2 alpha2, so the weight lattice equals the root lattice
// and both coordinate systems are integral.

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace g2aff {

struct RootCoords;

// Element of the weight lattice in fundamental-weight coordinates.
struct Weight {
  std::int64_t c1 = 0;
  std::int64_t c2 = 0;

  constexpr Weight() = default;
  constexpr Weight(std::int64_t a, std::int64_t b) : c1(a), c2(b) {}

  static constexpr Weight omega1() { return {1, 0}; }
  static constexpr Weight omega2() { return {0, 1}; }
  static constexpr Weight rho() { return {1, 1}; }

  bool is_dominant() const { return c1 >= 0 && c2 >= 0; }
  RootCoords to_roots() const;
  static Weight from_roots(const RootCoords& r);

  friend Weight operator+(const Weight& a, const Weight& b);
  friend Weight operator-(const Weight& a, const Weight& b);
  friend Weight operator-(const Weight& a);
  friend Weight operator*(std::int64_t n, const Weight& a);

  friend constexpr auto operator<=>(const Weight&, const Weight&) = default;
  friend constexpr bool operator==(const Weight&, const Weight&) = default;
};

// Element of the weight lattice in simple-root coordinates: m alpha1 + n alpha2.
struct RootCoords {
  std::int64_t m = 0;
  std::int64_t n = 0;

  constexpr RootCoords() = default;
  constexpr RootCoords(std::int64_t a, std::int64_t b) : m(a), n(b) {}

  std::int64_t height() const;

  friend RootCoords operator+(const RootCoords& a, const RootCoords& b);
  friend RootCoords operator-(const RootCoords& a, const RootCoords& b);
  friend RootCoords operator-(const RootCoords& a);
  friend RootCoords operator*(std::int64_t k, const RootCoords& a);

  friend constexpr auto operator<=>(const RootCoords&, const RootCoords&) = default;
  friend constexpr bool operator==(const RootCoords&, const RootCoords&) = default;
};

// One of the 12 roots of G2. Construction from coordinates outside the root
// set throws InvalidRootError.
class Root {
 public:
  Root(std::int64_t m, std::int64_t n);
  explicit Root(const RootCoords& coords) : Root(coords.m, coords.n) {}

  static bool is_root(const RootCoords& coords);

  const RootCoords& coords() const { return coords_; }
  std::int64_t m() const { return coords_.m; }
  std::int64_t n() const { return coords_.n; }

  bool is_positive() const { return coords_.m > 0 || (coords_.m == 0 && coords_.n > 0); }
  // (alpha, alpha): 6 for long roots, 2 for short ones.
  std::int64_t norm() const;
  bool is_long() const { return norm() == 6; }
  Root operator-() const { return Root(-coords_.m, -coords_.n); }

  friend auto operator<=>(const Root&, const Root&) = default;
  friend bool operator==(const Root&, const Root&) = default;

 private:
  RootCoords coords_;
};

// Positive roots in the order alpha1, alpha2, alpha1+alpha2, alpha1+2alpha2,
// alpha1+3alpha2, 2alpha1+3alpha2.
const std::vector<Root>& positive_roots();
const std::vector<Root>& all_roots();
Root simple_root(int i);

// Invariant form under the Gram matrix [[6, -3], [-3, 2]].
std::int64_t pairing(const RootCoords& x, const RootCoords& y);
std::int64_t pairing(const Weight& x, const Weight& y);

// <alpha^vee, lambda> = 2 (alpha, lambda) / (alpha, alpha).
std::int64_t coroot_pairing(const Root& alpha, const Weight& lambda);
// Same, for coordinates not yet validated as a root.
std::int64_t coroot_pairing(const RootCoords& alpha, const Weight& lambda);

Weight simple_reflection(int i, const Weight& lambda);
RootCoords simple_reflection(int i, const RootCoords& x);

// Weyl group element, represented by its action on simple-root coordinates.
// Two elements compare equal iff their matrices do; the word is kept only as
// one witness for printing.
class WeylElement {
 public:
  using Matrix = std::array<std::int64_t, 4>;  // row-major 2x2

  WeylElement();  // identity
  static WeylElement simple(int i);

  const Matrix& matrix() const { return matrix_; }
  const std::vector<int>& word() const { return word_; }
  int length_parity() const { return static_cast<int>(word_.size() % 2); }
  // Sign character; agrees with the matrix determinant.
  int det() const;

  RootCoords apply(const RootCoords& x) const;
  Weight apply(const Weight& x) const;
  Root apply(const Root& x) const;

  // (a * b)(x) = a(b(x)).
  friend WeylElement operator*(const WeylElement& a, const WeylElement& b);
  friend bool operator==(const WeylElement& a, const WeylElement& b) { return a.matrix_ == b.matrix_; }
  friend bool operator<(const WeylElement& a, const WeylElement& b) { return a.matrix_ < b.matrix_; }

  std::string to_string() const;

 private:
  WeylElement(Matrix matrix, std::vector<int> word) : matrix_(matrix), word_(std::move(word)) {}

  Matrix matrix_;
  std::vector<int> word_;
};

// All 12 elements, each with a shortest word, ordered by (length, matrix).
const std::vector<WeylElement>& weyl_group();
const WeylElement& longest_element();

// Returns (w(lambda), w) with w(lambda) dominant.
std::pair<Weight, WeylElement> dominant_representative(const Weight& lambda);

// Sorted, duplicate-free W-orbit.
std::vector<Weight> weyl_orbit(const Weight& lambda);

std::string to_string(const Weight& w);
std::string to_string(const RootCoords& r);

}  // namespace g2aff
