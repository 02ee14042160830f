#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hitomezashi/design_graph.hpp"
#include "hitomezashi/koch_oracle.hpp"
#include "hitomezashi/stitcher.hpp"
#include "hitomezashi/symmetry.hpp"

namespace hitomezashi {

inline constexpr const char* kToolVersion = "hitomezashi 1.0.0";

struct InvariantResult {
    bool pass = true;
    std::int64_t checked = 0;
    std::int64_t failures = 0;

    friend bool operator==(const InvariantResult&, const InvariantResult&) = default;
};

/// degree_two, empty_untouched, alternation, partition, quarter_empty.
/// quarter_empty is only checked (checked > 0) when both window sides have
/// an even number of vertices.
std::map<std::string, InvariantResult> check_invariants(const Design& design);

struct AnalysisReport {
    std::string tool_version = kToolVersion;
    StitchPattern pattern;
    Window window;
    std::map<std::string, InvariantResult> invariant_results;
    MotifCensus census_front;
    MotifCensus census_back;
    std::optional<WallpaperClassification> wallpaper_front;
    std::optional<WallpaperClassification> wallpaper_back;
    std::optional<SelfDualResult> self_dual;
    std::optional<VerificationResult> koch;
    std::vector<std::string> errors;
};

struct AnalyzeOptions {
    bool classify = true;
    bool self_dual = true;
};

/// Invariants, censuses, wallpaper groups of both sides and self-duality.
/// Classification failures are recorded in `errors` with group Unknown.
AnalysisReport analyze(const Design& design, const AnalyzeOptions& opts = {});

/// Centered window spanning `cells` translation cells per side.
Window analysis_window(const StitchPattern& pattern, std::int64_t cells = 4);

struct CalibrationCandidate {
    GridConvention convention;
    bool accepted = false;
    std::string reason;
};

struct CalibrationResult {
    std::vector<CalibrationCandidate> candidates;  // all 64, in enumeration order
    std::optional<GridConvention> chosen;
};

/**
 * Tries the 64 phase_base/phase_slope settings with presence parity
 * {0, 0, 1}. A setting is accepted when the all-zero design on `window`
 * satisfies the stitch invariants, has a front census of one 12-segment
 * class and classifies as p6mm. Candidates are enumerated in lexicographic
 * order of (phase_base, phase_slope), so the first accepted is the least.
 */
CalibrationResult calibrate(const Window& window = Window::square(0, 40));

}  // namespace hitomezashi
