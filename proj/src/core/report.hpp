#pragma once

// JSON and text renderings of analysis results. Every number in JSON output
// is a decimal string; rationals are "a/b".

#include "code_core.hpp"
#include "constructions.hpp"
#include "covering.hpp"
#include "density.hpp"
#include "verify.hpp"

#include "json.hpp"

#include <string>

namespace rankmetric {

using Json = nlohmann::ordered_json;

Json distribution_json(const RankDistribution& w);
Json covering_json(const CoveringReport& r);
Json analyze_json(const RankMetricCode& c, const EnumOptions& opt);
Json macwilliams_json(const RankDistribution& w, std::size_t n, std::size_t m, const BigInt& q);
Json density_json(const DensityReport& r);
Json verify_json(const VerifyReport& r);

std::string analyze_text(const Json& j);
std::string covering_text(const Json& j);
std::string macwilliams_text(const Json& j);
std::string density_text(const Json& j);
std::string verify_text(const Json& j);

// Header comments recorded in generated MRD code files.
std::vector<std::string> mrd_comments(const MrdConstruction& c, std::size_t d);

// floor(x * 10^digits) / 10^digits as a decimal string, for display only.
std::string decimal_approx(const Rational& x, unsigned digits = 12);

}  // namespace rankmetric
