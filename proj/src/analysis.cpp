#include "hitomezashi/analysis.hpp"

namespace hitomezashi {

std::map<std::string, InvariantResult> check_invariants(const Design& design) {
    const Window& w = design.window();
    const GridConvention& conv = design.pattern().convention;
    std::map<std::string, InvariantResult> out;
    auto record = [](InvariantResult& r, bool ok) {
        ++r.checked;
        if (!ok) {
            ++r.failures;
            r.pass = false;
        }
    };

    InvariantResult& degree = out["degree_two"];
    InvariantResult& untouched = out["empty_untouched"];
    std::int64_t empty = 0;
    std::int64_t present_edges = 0;
    for (std::int64_t j = w.j_min; j <= w.j_max; ++j) {
        for (std::int64_t i = w.i_min; i <= w.i_max; ++i) {
            const Vertex v{i, j};
            int front = 0;
            int back = 0;
            for (const Vertex& step : kDirections) {
                front += design.contains_edge(Side::Front, v, v + step) ? 1 : 0;
                back += design.contains_edge(Side::Back, v, v + step) ? 1 : 0;
            }
            for (int d = 0; d < 3; ++d) {
                const Vertex u = v + kDirections[d];
                if (w.contains(u) && is_line_present(segment_between(v, u).line, conv)) ++present_edges;
            }
            if (present_line_count(v, conv) == 0) {
                ++empty;
                record(untouched, front == 0 && back == 0);
            } else if (w.is_interior(v)) {
                record(degree, front == 2 && back == 2);
            }
        }
    }

    InvariantResult& alternation = out["alternation"];
    for (Side side : {Side::Front, Side::Back}) {
        const Side other = side == Side::Front ? Side::Back : Side::Front;
        for (const SegmentId& seg : design.side(side)) {
            const SegmentId next{seg.line, seg.s + 1};
            auto [a, b] = segment_endpoints(next);
            if (!w.contains(a) || !w.contains(b)) continue;
            record(alternation, design.contains(other, next));
        }
    }

    InvariantResult& partition = out["partition"];
    record(partition, static_cast<std::int64_t>(design.segment_count()) == present_edges);

    InvariantResult& quarter = out["quarter_empty"];
    if (w.width() % 2 == 0 && w.height() % 2 == 0) record(quarter, 4 * empty == w.vertex_count());
    return out;
}

Window analysis_window(const StitchPattern& pattern, std::int64_t cells) {
    const std::int64_t cell = translation_cell(pattern);
    return Window::centered((cells * cell + 1) / 2 + 1);
}

namespace {

WallpaperClassification classify_or_note(const Design& design, const char* side,
                                         std::vector<std::string>& errors) {
    try {
        return classify_wallpaper(design);
    } catch (const OverlapTooSmallError& e) {
        errors.push_back(std::string(side) + " classification: " + e.what());
        WallpaperClassification c;
        c.note = e.what();
        return c;
    }
}

}  // namespace

AnalysisReport analyze(const Design& design, const AnalyzeOptions& opts) {
    AnalysisReport report;
    report.pattern = design.pattern();
    report.window = design.window();
    report.invariant_results = check_invariants(design);
    report.census_front = motif_census(design, Side::Front);
    report.census_back = motif_census(design, Side::Back);
    if (opts.classify) {
        report.wallpaper_front = classify_or_note(design, "front", report.errors);
        report.wallpaper_back = classify_or_note(design.dual(), "back", report.errors);
    }
    if (opts.self_dual) {
        try {
            report.self_dual = is_self_dual(design);
        } catch (const OverlapTooSmallError& e) {
            report.errors.push_back(std::string("self-duality: ") + e.what());
        }
    }
    return report;
}

CalibrationResult calibrate(const Window& window) {
    CalibrationResult result;
    // Enumerate (base_A, base_B, base_C, slope_A, slope_B, slope_C) lexicographically.
    for (int bits = 0; bits < 64; ++bits) {
        GridConvention conv;
        for (int f = 0; f < 3; ++f) {
            conv.phase_base[f] = (bits >> (5 - f)) & 1;
            conv.phase_slope[f] = (bits >> (2 - f)) & 1;
        }
        CalibrationCandidate cand{conv, false, ""};
        const Design design = generate_design(window, StitchPattern::uniform(DirectionSpec::constant(0), conv));
        bool invariants_ok = true;
        for (const auto& [name, r] : check_invariants(design)) invariants_ok = invariants_ok && r.pass;
        const MotifCensus census = motif_census(design, Side::Front);
        if (!invariants_ok) {
            cand.reason = "invariant failure";
        } else if (census.counts.size() != 1 || census.counts.begin()->first.length() != 12) {
            cand.reason = "front census is not a single 12-segment class";
        } else {
            try {
                const WallpaperClassification c = classify_wallpaper(design);
                if (c.group == WallpaperGroup::p6mm) {
                    cand.accepted = true;
                    cand.reason = "accepted";
                } else {
                    cand.reason = "classified " + to_string(c.group);
                }
            } catch (const std::exception& e) {
                cand.reason = std::string("classification failed: ") + e.what();
            }
        }
        if (cand.accepted && !result.chosen) result.chosen = conv;
        result.candidates.push_back(std::move(cand));
    }
    return result;
}

}  // namespace hitomezashi
