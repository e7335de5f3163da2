#include "g2aff/json_io.hpp"

#include <algorithm>

#include "g2aff/errors.hpp"

namespace g2aff::json_io {

Json integer(Int128 value) {
  if (fits_int64(value)) return Json(static_cast<std::int64_t>(value));
  return Json(to_string(value));
}

Json weight(const Weight& w) { return Json::array({w.c1, w.c2}); }

namespace {

template <typename Map>
std::vector<std::pair<Weight, Int128>> descending(const Map& terms) {
  std::vector<std::pair<Weight, Int128>> out(terms.begin(), terms.end());
  std::reverse(out.begin(), out.end());  // std::map keeps (c1, c2) ascending
  return out;
}

Int128 parse_integer(const Json& j) {
  if (j.is_number_integer()) return j.get<std::int64_t>();
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    bool negative = !s.empty() && s[0] == '-';
    Int128 v = 0;
    for (std::size_t i = negative ? 1 : 0; i < s.size(); ++i) {
      if (s[i] < '0' || s[i] > '9') throw InvalidArgumentError("bad integer string: " + s);
      v = checked::add<Int128>(checked::mul<Int128>(v, 10), s[i] - '0');
    }
    return negative ? -v : v;
  }
  throw InvalidArgumentError("expected an integer, got " + j.dump());
}

const char* kind_name(RelationKind kind) {
  switch (kind) {
    case RelationKind::kNPlusCurrentAnnihilation:
      return "n+[t]-annihilation";
    case RelationKind::kCartanCurrentEigenvalue:
      return "h-current-eigenvalue";
    case RelationKind::kSimplePower:
      return "f_i-power";
    case RelationKind::kCurrentAnnihilation:
      return "f_alpha-t-annihilation";
  }
  return "";
}

}  // namespace

Json character(const FormalCharacter& chi) {
  Json out = Json::array();
  for (const auto& [mu, c] : descending(chi.terms())) out.push_back({{"weight", weight(mu)}, {"coeff", integer(c)}});
  return out;
}

Json decomposition(const IrrDecomposition& d) {
  Json out = Json::array();
  for (const auto& [mu, n] : descending(d.parts())) out.push_back({{"weight", weight(mu)}, {"mult", integer(n)}});
  return out;
}

Json monomial(const DominantMonomial& m) {
  Json out = Json::array();
  for (const auto& f : m.factors) out.push_back({{"node", f.node}, {"qexp", f.qexp}});
  return out;
}

Json rho_table(const std::vector<std::pair<AffineRealRoot, std::int64_t>>& table) {
  Json out = Json::array();
  for (const auto& [gamma, value] : table) {
    out.push_back({{"root", Json::array({gamma.finite.m(), gamma.finite.n(), gamma.p})}, {"rho", value}});
  }
  return out;
}

Json series(const TruncatedSeries& s) {
  Json coeffs = Json::array();
  for (std::int64_t m = 0; m <= s.degree(); ++m) {
    for (std::int64_t n = 0; n <= s.degree(); ++n) {
      if (s.at(m, n) != 0) coeffs.push_back({{"m", m}, {"n", n}, {"c", integer(s.at(m, n))}});
    }
  }
  return {{"D", s.degree()}, {"coeffs", coeffs}};
}

Json demazure(const std::vector<DemazureEntry>& sequence) {
  Json out = Json::array();
  for (const auto& e : sequence) out.push_back({{"finite", weight(e.finite)}, {"level", e.multiplier}});
  return out;
}

Json relations(const std::vector<RelationDescriptor>& relations, const HighestWeightInput& input) {
  Json out = Json::array();
  for (const auto& r : relations) {
    Json entry = {{"kind", kind_name(r.kind)}};
    entry["root"] = r.root ? Json::array({r.root->m(), r.root->n()}) : Json(nullptr);
    entry["index"] = r.index ? Json(*r.index) : Json(nullptr);
    entry["exponent"] = r.exponent;
    entry["text"] = r.to_string(input);
    out.push_back(std::move(entry));
  }
  return out;
}

Weight parse_weight(const Json& j) {
  if (!j.is_array() || j.size() != 2) throw InvalidArgumentError("weight must be a pair [c1, c2]");
  return {j[0].get<std::int64_t>(), j[1].get<std::int64_t>()};
}

FormalCharacter parse_character(const Json& j) {
  FormalCharacter out;
  for (const auto& entry : j) out.add_term(parse_weight(entry.at("weight")), parse_integer(entry.at("coeff")));
  return out;
}

IrrDecomposition parse_decomposition(const Json& j) {
  IrrDecomposition out;
  for (const auto& entry : j) out.add(parse_weight(entry.at("weight")), parse_integer(entry.at("mult")));
  return out;
}

}  // namespace g2aff::json_io
