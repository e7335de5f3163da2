#include "g2aff/character.hpp"

#include <algorithm>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <tuple>

#include "g2aff/errors.hpp"

namespace g2aff {

using checked::add;
using checked::mul;
using checked::sub;

FormalCharacter FormalCharacter::monomial(const Weight& mu, Int128 coeff) {
  FormalCharacter out;
  out.add_term(mu, coeff);
  return out;
}

Int128 FormalCharacter::coeff(const Weight& mu) const {
  auto it = terms_.find(mu);
  return it == terms_.end() ? 0 : it->second;
}

void FormalCharacter::add_term(const Weight& mu, Int128 coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(mu, coeff);
  if (inserted) return;
  it->second = add(it->second, coeff);
  if (it->second == 0) terms_.erase(it);
}

Int128 FormalCharacter::total() const {
  Int128 sum = 0;
  for (const auto& [mu, c] : terms_) sum = add(sum, c);
  return sum;
}

bool FormalCharacter::is_weyl_invariant() const {
  for (const auto& [mu, c] : terms_) {
    for (int i : {1, 2}) {
      if (coeff(simple_reflection(i, mu)) != c) return false;
    }
  }
  return true;
}

bool FormalCharacter::dominated_by(const FormalCharacter& other) const {
  for (const auto& [mu, c] : terms_) {
    if (c > other.coeff(mu)) return false;
  }
  for (const auto& [mu, c] : other.terms_) {
    if (c < 0 && coeff(mu) > c) return false;
  }
  return true;
}

FormalCharacter FormalCharacter::scaled(Int128 n) const {
  FormalCharacter out;
  if (n == 0) return out;
  for (const auto& [mu, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), mu, mul(c, n));
  return out;
}

FormalCharacter FormalCharacter::shifted(const Weight& shift) const {
  FormalCharacter out;
  for (const auto& [mu, c] : terms_) out.terms_.emplace(mu + shift, c);
  return out;
}

FormalCharacter& FormalCharacter::operator+=(const FormalCharacter& other) {
  for (const auto& [mu, c] : other.terms_) add_term(mu, c);
  return *this;
}

FormalCharacter& FormalCharacter::operator-=(const FormalCharacter& other) {
  for (const auto& [mu, c] : other.terms_) add_term(mu, sub<Int128>(0, c));
  return *this;
}

FormalCharacter operator*(const FormalCharacter& a, const FormalCharacter& b) {
  FormalCharacter out;
  for (const auto& [x, cx] : a.terms_) {
    for (const auto& [y, cy] : b.terms_) out.add_term(x + y, mul(cx, cy));
  }
  return out;
}

void IrrDecomposition::add(const Weight& mu, Int128 mult) {
  if (!mu.is_dominant()) throw NonDominantWeightError("decomposition key must be dominant: " + to_string(mu));
  if (mult < 0) throw InvalidArgumentError("negative multiplicity for " + to_string(mu));
  if (mult == 0) return;
  auto [it, inserted] = parts_.try_emplace(mu, mult);
  if (!inserted) it->second = checked::add(it->second, mult);
}

Int128 IrrDecomposition::multiplicity(const Weight& mu) const {
  auto it = parts_.find(mu);
  return it == parts_.end() ? 0 : it->second;
}

Int128 IrrDecomposition::total_dimension() const {
  Int128 sum = 0;
  for (const auto& [mu, n] : parts_) sum = checked::add(sum, checked::mul(n, weyl_dimension(mu)));
  return sum;
}

FormalCharacter IrrDecomposition::character() const {
  FormalCharacter out;
  for (const auto& [mu, n] : parts_) out += irreducible_character(mu).scaled(n);
  return out;
}

namespace {

void require_dominant(const Weight& lambda) {
  if (!lambda.is_dominant()) throw NonDominantWeightError("highest weight must be dominant: " + to_string(lambda));
}

// lambda - mu in Q_+.
bool is_below(const Weight& mu, const Weight& lambda) {
  RootCoords d = (lambda - mu).to_roots();
  return d.m >= 0 && d.n >= 0;
}

// Multiplicities of all dominant weights of V(lambda).
std::map<Weight, Int128> dominant_multiplicities(const Weight& lambda) {
  const RootCoords top = lambda.to_roots();
  std::vector<std::pair<RootCoords, Weight>> candidates;  // (lambda - mu, mu)
  for (std::int64_t a = 0; a <= top.m; ++a) {
    for (std::int64_t b = 0; b <= top.n; ++b) {
      Weight mu = Weight::from_roots({top.m - a, top.n - b});
      if (mu.is_dominant()) candidates.emplace_back(RootCoords{a, b}, mu);
    }
  }
  std::sort(candidates.begin(), candidates.end(), [](const auto& x, const auto& y) {
    return std::make_tuple(x.first.height(), x.first.m) < std::make_tuple(y.first.height(), y.first.m);
  });

  const Weight lambda_rho = lambda + Weight::rho();
  const std::int64_t top_norm = pairing(lambda_rho, lambda_rho);
  const std::int64_t top_height = top.height();

  std::map<Weight, Int128> mult;
  auto lookup = [&](const Weight& nu) -> Int128 {
    auto it = mult.find(dominant_representative(nu).first);
    return it == mult.end() ? 0 : it->second;
  };

  for (const auto& [depth, mu] : candidates) {
    if (depth.m == 0 && depth.n == 0) {
      mult[mu] = 1;
      continue;
    }
    Int128 numerator = 0;
    for (const Root& alpha : positive_roots()) {
      const Weight step = Weight::from_roots(alpha.coords());
      Weight nu = mu + step;
      while (nu.to_roots().height() <= top_height) {
        Int128 m = lookup(nu);
        if (m != 0) numerator = add(numerator, mul<Int128>(pairing(nu.to_roots(), alpha.coords()), m));
        nu = nu + step;
      }
    }
    numerator = mul<Int128>(2, numerator);
    const Weight mu_rho = mu + Weight::rho();
    const Int128 denominator = top_norm - pairing(mu_rho, mu_rho);
    if (denominator <= 0 || numerator % denominator != 0) {
      throw InternalConsistencyError("Freudenthal recursion produced a non-integral multiplicity at " +
                                     to_string(mu));
    }
    mult[mu] = numerator / denominator;
  }
  return mult;
}

FormalCharacter compute_irreducible_character(const Weight& lambda) {
  FormalCharacter out;
  for (const auto& [mu, m] : dominant_multiplicities(lambda)) {
    if (m == 0) continue;
    for (const Weight& nu : weyl_orbit(mu)) out.add_term(nu, m);
  }
  return out;
}

// Characters are immutable once computed; readers share, a miss takes the
// writer lock.
class CharacterCache {
 public:
  std::shared_ptr<const FormalCharacter> get(const Weight& lambda) {
    {
      std::shared_lock lock(mutex_);
      auto it = cache_.find(lambda);
      if (it != cache_.end()) return it->second;
    }
    auto value = std::make_shared<const FormalCharacter>(compute_irreducible_character(lambda));
    std::unique_lock lock(mutex_);
    return cache_.try_emplace(lambda, std::move(value)).first->second;
  }

 private:
  std::shared_mutex mutex_;
  std::map<Weight, std::shared_ptr<const FormalCharacter>> cache_;
};

CharacterCache& character_cache() {
  static CharacterCache cache;
  return cache;
}

// Kostant partition function on the box [0, M] x [0, N], grown on demand.
class KostantTable {
 public:
  Int128 get(const RootCoords& x) {
    if (x.m < 0 || x.n < 0) return 0;
    std::lock_guard lock(mutex_);
    if (x.m > max_m_ || x.n > max_n_) rebuild(std::max(x.m, 2 * max_m_), std::max(x.n, 2 * max_n_));
    return table_[static_cast<std::size_t>(x.m * (max_n_ + 1) + x.n)];
  }

 private:
  void rebuild(std::int64_t max_m, std::int64_t max_n) {
    max_m_ = max_m;
    max_n_ = max_n;
    const std::int64_t width = max_n + 1;
    table_.assign(static_cast<std::size_t>((max_m + 1) * width), 0);
    table_[0] = 1;
    for (const Root& alpha : positive_roots()) {
      const std::int64_t a = alpha.m();
      const std::int64_t b = alpha.n();
      for (std::int64_t m = a; m <= max_m; ++m) {
        for (std::int64_t n = b; n <= max_n; ++n) {
          auto& cell = table_[static_cast<std::size_t>(m * width + n)];
          cell = add(cell, table_[static_cast<std::size_t>((m - a) * width + (n - b))]);
        }
      }
    }
  }

  std::mutex mutex_;
  std::int64_t max_m_ = -1;
  std::int64_t max_n_ = -1;
  std::vector<Int128> table_;
};

}  // namespace

Int128 weyl_dimension(const Weight& lambda) {
  require_dominant(lambda);
  const Weight shifted = lambda + Weight::rho();
  Int128 numerator = 1;
  Int128 denominator = 1;
  for (const Root& alpha : positive_roots()) {
    numerator = mul<Int128>(numerator, pairing(shifted.to_roots(), alpha.coords()));
    denominator = mul<Int128>(denominator, pairing(Weight::rho().to_roots(), alpha.coords()));
  }
  return numerator / denominator;
}

Int128 kostant_partition(const RootCoords& x) {
  static KostantTable table;
  return table.get(x);
}

Int128 weight_multiplicity_alternating(const Weight& lambda, const Weight& mu) {
  require_dominant(lambda);
  const RootCoords target = (mu + Weight::rho()).to_roots();
  const Weight lambda_rho = lambda + Weight::rho();
  Int128 sum = 0;
  for (const WeylElement& w : weyl_group()) {
    Int128 p = kostant_partition(w.apply(lambda_rho).to_roots() - target);
    sum = add(sum, mul<Int128>(w.det(), p));
  }
  return sum;
}

Int128 weight_multiplicity_freudenthal(const Weight& lambda, const Weight& mu) {
  require_dominant(lambda);
  const Weight dominant = dominant_representative(mu).first;
  if (!is_below(dominant, lambda)) return 0;
  const auto mult = dominant_multiplicities(lambda);
  auto it = mult.find(dominant);
  return it == mult.end() ? 0 : it->second;
}

FormalCharacter irreducible_character(const Weight& lambda) {
  require_dominant(lambda);
  return *character_cache().get(lambda);
}

IrrDecomposition decompose_character(const FormalCharacter& chi) {
  if (!chi.is_weyl_invariant()) throw NotAModuleCharacterError("character is not W-invariant");

  std::int64_t max_m = 0;
  std::int64_t max_n = 0;
  for (const auto& [mu, c] : chi.terms()) {
    if (!mu.is_dominant()) continue;
    RootCoords r = mu.to_roots();
    max_m = std::max(max_m, r.m);
    max_n = std::max(max_n, r.n);
  }
  // Every peeled weight is dominant and lies in [0, max_m] x [0, max_n].
  const std::int64_t max_steps = (max_m + 1) * (max_n + 1);

  FormalCharacter rest = chi;
  IrrDecomposition out;
  for (std::int64_t step = 0;; ++step) {
    const Weight* best = nullptr;
    std::tuple<std::int64_t, std::int64_t, std::int64_t> best_key{};
    for (const auto& [mu, c] : rest.terms()) {
      if (!mu.is_dominant()) continue;
      RootCoords r = mu.to_roots();
      auto key = std::make_tuple(r.height(), r.m, r.n);
      if (best == nullptr || key > best_key) {
        best = &mu;
        best_key = key;
      }
    }
    if (best == nullptr) break;
    if (step >= max_steps) throw NotAModuleCharacterError("peeling did not terminate within the support bound");
    const Weight mu = *best;
    const Int128 c = rest.coeff(mu);
    if (c < 0) {
      throw NotAModuleCharacterError("negative multiplicity " + to_string(c) + " at " + to_string(mu));
    }
    out.add(mu, c);
    rest -= irreducible_character(mu).scaled(c);
  }
  if (!rest.empty()) throw NotAModuleCharacterError("character has no dominant part but is nonzero");
  return out;
}

}  // namespace g2aff
