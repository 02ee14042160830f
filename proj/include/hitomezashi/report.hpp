#pragma once

#include <json.hpp>

#include "hitomezashi/analysis.hpp"

namespace hitomezashi {

using nlohmann::json;

json to_json(const Window& w);
json to_json(const GridConvention& c);
json to_json(const DirectionSpec& d);
json to_json(const StitchPattern& p);
json to_json(const Design& d);
json to_json(const Cycle& c);
json to_json(const MotifCensus& c);
json to_json(const LatticeIsometry& g);
json to_json(const WallpaperClassification& c);
json to_json(const SelfDualResult& r);
json to_json(const VerificationResult& r);
json to_json(const AnalysisReport& r);
json to_json(const CalibrationResult& r);

Window window_from_json(const json& j);
GridConvention convention_from_json(const json& j);
DirectionSpec direction_from_json(const json& j);
StitchPattern pattern_from_json(const json& j);
Design design_from_json(const json& j);
Cycle cycle_from_json(const json& j);
MotifCensus census_from_json(const json& j);
LatticeIsometry isometry_from_json(const json& j);
WallpaperClassification classification_from_json(const json& j);
SelfDualResult self_dual_from_json(const json& j);
VerificationResult verification_from_json(const json& j);
AnalysisReport report_from_json(const json& j);

/// Two-space indented, keys sorted, trailing newline.
std::string dump(const json& j);

}  // namespace hitomezashi
