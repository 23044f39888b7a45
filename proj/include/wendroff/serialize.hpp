#pragma once

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "wendroff/analysis.hpp"
#include "wendroff/polynomial.hpp"
#include "wendroff/roots.hpp"
#include "wendroff/sequence.hpp"

namespace wendroff {

using Json = nlohmann::ordered_json;

// Polynomials: {"degree": d, "coeffs": ["p/q", ...]}, descending powers.
Json polynomial_to_json(const Polynomial& p);
/// Throws ParameterError on malformed input or a degree/coeffs mismatch.
Polynomial polynomial_from_json(const Json& j);

// Sequences: {"config": {...}, "a": "p/q", "ells": {"2": "p/q", ...}, "polys": [...]}
Json sequence_to_json(const WendroffSequence& seq);
/// Restores a sequence as written, without rebuilding it, so a modified file
/// is verified as-is.
WendroffSequence sequence_from_json(const Json& j);

// Root sets: {"poly": id, "tol": "p/q", "roots": [{"value", "radius", "exact"}, ...]}
Json rootset_to_json(const RootSet& set);

Json report_to_json(const VerificationReport& report);
Json comparison_to_json(const ComparisonReport& report);

/// One root per row: degree,index,value,radius,exact.
std::string roots_csv(const std::vector<std::pair<int, RootSet>>& sets);
/// index,zero_D,zero_C,delta.
std::string comparison_csv(const ComparisonReport& report);

}  // namespace wendroff
