#pragma once

// JSON forms used by the command-line tool.
//
//   Weight            [c1, c2]
//   FormalCharacter   [{"weight": [c1, c2], "coeff": c}, ...]   (c1, c2) descending
//   IrrDecomposition  [{"weight": [c1, c2], "mult": n}, ...]    (c1, c2) descending
//   DominantMonomial  [{"node": i, "qexp": e}, ...]
//   rho table         [{"root": [m, n, p], "rho": v}, ...]       (p, m, n) ascending
//   TruncatedSeries   {"D": D, "coeffs": [{"m": m, "n": n, "c": c}, ...]}  (m, n) ascending
//
// Integers that do not fit in 64 bits are written as decimal strings.

#include <utility>
#include <vector>

#include "json.hpp"

#include "g2aff/affine.hpp"
#include "g2aff/character.hpp"
#include "g2aff/limit.hpp"
#include "g2aff/minaff.hpp"

namespace g2aff::json_io {

using Json = nlohmann::ordered_json;

Json integer(Int128 value);
Json weight(const Weight& w);
Json character(const FormalCharacter& chi);
Json decomposition(const IrrDecomposition& d);
Json monomial(const DominantMonomial& m);
Json rho_table(const std::vector<std::pair<AffineRealRoot, std::int64_t>>& table);
Json series(const TruncatedSeries& s);
Json demazure(const std::vector<DemazureEntry>& sequence);
Json relations(const std::vector<RelationDescriptor>& relations, const HighestWeightInput& input);

Weight parse_weight(const Json& j);
FormalCharacter parse_character(const Json& j);
IrrDecomposition parse_decomposition(const Json& j);

}  // namespace g2aff::json_io
