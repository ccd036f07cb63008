#pragma once

#include <nlohmann/json.hpp>

#include "critnum/crit_set.hpp"
#include "critnum/crosscheck.hpp"
#include "critnum/embedding.hpp"
#include "critnum/inequality.hpp"
#include "critnum/weights.hpp"

// JSON encodings used by the command line front end. Half-integers are
// strings ("3", "7/2"), weights are integer arrays, intervals are [lo, hi]
// pairs ([] when empty).

namespace critnum {

using Json = nlohmann::ordered_json;

Json to_json(HalfInt h);
Json to_json(const CritSet& s);
Json to_json(const IntInterval& iv);
Json to_json(const LanglandsParam& p);
Json to_json(const PipelineTrace& t);
Json to_json(const WitnessT0& w);
Json to_json(const MismatchReport& r);
Json to_json(const FuzzSummary& s);

// Input document: {"pi": <side>, "sigma": <side>} where a side is either
// {"n"?, "w", "l", "delta"?} or {"mu", "delta"?}; delta defaults to 0.
// Throws ValidationError with field-qualified violations.
std::pair<LanglandsParam, LanglandsParam> parse_pair_document(const Json& doc);

Json violation_to_json(const Violation& v);

}  // namespace critnum
