#pragma once

#include <optional>
#include <string>

#include "json.hpp"
#include "walkspec/bounds.hpp"
#include "walkspec/numeric.hpp"
#include "walkspec/regularity.hpp"
#include "walkspec/spectral.hpp"

namespace walkspec::json_io {

using Json = nlohmann::ordered_json;

/// Exact rationals travel as {"num": "...", "den": "..."} so no digits are lost.
Json rational(const Rational& q);
Rational rational_from(const Json& j);
Json optional_rational(const std::optional<Rational>& q);
std::optional<Rational> optional_rational_from(const Json& j);
Json optional_double(const std::optional<double>& x);
std::optional<double> optional_double_from(const Json& j);

Json interval(const CertifiedInterval& iv);
CertifiedInterval interval_from(const Json& j);

Json bound(const BoundReport& rep);
BoundReport bound_from(const Json& j);

Json sandwich(const Sandwich& s);
Sandwich sandwich_from(const Json& j);

Json profile(const RegularityProfile& prof);
RegularityProfile profile_from(const Json& j);

/// Current UTC time as an ISO-8601 string.
std::string utc_timestamp();

}  // namespace walkspec::json_io
