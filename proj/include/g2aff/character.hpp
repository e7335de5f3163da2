#pragma once

// Formal characters over the G2 weight lattice and decomposition into
// irreducible characters.
//
// Irreducible characters are computed by the Freudenthal recursion. The
// alternating-sum (Kostant/Racah) multiplicity formula is kept as an
// independent route for cross-checking; neither route divides by the Weyl
// denominator.

#include <cstdint>
#include <functional>
#include <map>
#include <utility>
#include <vector>

#include "g2aff/checked.hpp"
#include "g2aff/g2.hpp"

namespace g2aff {

// Finitely supported Z-valued function on the weight lattice. Zero
// coefficients are never stored.
class FormalCharacter {
 public:
  using Terms = std::map<Weight, Int128>;

  FormalCharacter() = default;
  // e^mu with the given coefficient.
  static FormalCharacter monomial(const Weight& mu, Int128 coeff = 1);

  Int128 coeff(const Weight& mu) const;
  void add_term(const Weight& mu, Int128 coeff);

  const Terms& terms() const& { return terms_; }
  Terms terms() && { return std::move(terms_); }
  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  // Sum of all coefficients (the dimension, for a module character).
  Int128 total() const;
  // coeff(mu) == coeff(w mu) for every w in W.
  bool is_weyl_invariant() const;
  // Every coefficient of *this is <= the matching coefficient of other.
  bool dominated_by(const FormalCharacter& other) const;

  // Multiply every coefficient by n.
  FormalCharacter scaled(Int128 n) const;
  // Multiply by e^mu.
  FormalCharacter shifted(const Weight& mu) const;

  FormalCharacter& operator+=(const FormalCharacter& other);
  FormalCharacter& operator-=(const FormalCharacter& other);
  friend FormalCharacter operator+(FormalCharacter a, const FormalCharacter& b) { return a += b; }
  friend FormalCharacter operator-(FormalCharacter a, const FormalCharacter& b) { return a -= b; }
  friend FormalCharacter operator*(const FormalCharacter& a, const FormalCharacter& b);
  friend bool operator==(const FormalCharacter&, const FormalCharacter&) = default;

 private:
  Terms terms_;
};

// Direct sum of irreducibles: dominant weight -> positive multiplicity.
class IrrDecomposition {
 public:
  using Parts = std::map<Weight, Int128>;

  IrrDecomposition() = default;

  // Adds `mult` copies of V(mu). mu must be dominant and mult >= 0.
  void add(const Weight& mu, Int128 mult = 1);
  Int128 multiplicity(const Weight& mu) const;

  const Parts& parts() const& { return parts_; }
  Parts parts() && { return std::move(parts_); }
  bool empty() const { return parts_.empty(); }
  std::size_t size() const { return parts_.size(); }

  // Sum over parts of mult * dim V(mu).
  Int128 total_dimension() const;
  // Sum over parts of mult * ch V(mu).
  FormalCharacter character() const;

  friend bool operator==(const IrrDecomposition&, const IrrDecomposition&) = default;

 private:
  Parts parts_;
};

// Dimension of V(lambda) by the Weyl product over the six positive roots.
Int128 weyl_dimension(const Weight& lambda);

// Weight multiplicity of mu in V(lambda) by the Freudenthal recursion.
Int128 weight_multiplicity_freudenthal(const Weight& lambda, const Weight& mu);

// Weight multiplicity of mu in V(lambda) as the alternating sum over W of
// Kostant partition function values.
Int128 weight_multiplicity_alternating(const Weight& lambda, const Weight& mu);

// Number of ways to write x as a Z_+-combination of the positive roots.
Int128 kostant_partition(const RootCoords& x);

// ch V(lambda), via Freudenthal on dominant weights and W-orbit filling.
FormalCharacter irreducible_character(const Weight& lambda);

// Inverse of IrrDecomposition::character. Peels the dominant support weight
// of maximal height (ties broken by larger (m, n) in root coordinates).
// Throws NotAModuleCharacterError if chi is not a nonnegative combination of
// irreducible characters.
IrrDecomposition decompose_character(const FormalCharacter& chi);

}  // namespace g2aff
