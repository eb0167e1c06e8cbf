#pragma once

#include "rsharp/corpus.hpp"
#include "rsharp/numeric/verify.hpp"
#include "rsharp/region.hpp"

#include <json.hpp>

#include <string>

namespace rsharp {

using Json = nlohmann::json;

inline constexpr int kSchemaVersion = 1;

// [num, den] as integers, or as decimal strings when either part overflows 64 bits.
Json rational_json(const Rational& q);
Rational rational_from_json(const Json& j);

// {vertices: [[xn, xd, yn, yd]...], edges: [{from, to, condition_tag}], relevant, subcase, degenerate}
Json region_json(const RieszRegion& region, const std::vector<RelevantVertex>& relevant = {});
RieszRegion region_from_json(const Json& j);  // vertices, edges and the degenerate flag

enum class Formulation { Newton, Factor, Both };

Json analysis_report(const std::string& input, Formulation f);
Json verification_json(const numeric::VerificationReport& rep);
Json corpus_json(const CorpusReport& rep);

}  // namespace rsharp
