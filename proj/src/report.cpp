#include "hitomezashi/report.hpp"

namespace hitomezashi {

namespace {

json vertex_json(Vertex v) { return json::array({v.i, v.j}); }
Vertex vertex_from(const json& j) { return {j.at(0).get<std::int64_t>(), j.at(1).get<std::int64_t>()}; }

const char* mode_name(DirectionMode m) {
    switch (m) {
    case DirectionMode::Constant: return "constant";
    case DirectionMode::Periodic: return "periodic";
    case DirectionMode::Koch: return "koch";
    }
    return "?";
}

json segments_json(const std::vector<SegmentId>& segs) {
    json out = json::array();
    for (const SegmentId& s : segs) {
        out.push_back(json::array({std::string(1, family_name(s.line.family)), s.line.k, s.s}));
    }
    return out;
}

std::vector<SegmentId> segments_from(const json& j) {
    std::vector<SegmentId> out;
    out.reserve(j.size());
    for (const json& e : j) {
        const std::string fam = e.at(0).get<std::string>();
        if (fam.size() != 1) throw std::invalid_argument("bad family tag '" + fam + "'");
        out.push_back({{family_from_name(fam[0]), e.at(1).get<std::int64_t>()}, e.at(2).get<std::int64_t>()});
    }
    return out;
}

json sixths_json(const std::optional<SixthPoint>& p) {
    if (!p) return nullptr;
    return json::array({p->i6, p->j6});
}

}  // namespace

json to_json(const Window& w) {
    return {{"i_min", w.i_min}, {"i_max", w.i_max}, {"j_min", w.j_min}, {"j_max", w.j_max}};
}

Window window_from_json(const json& j) {
    Window w{j.at("i_min").get<std::int64_t>(), j.at("i_max").get<std::int64_t>(),
             j.at("j_min").get<std::int64_t>(), j.at("j_max").get<std::int64_t>()};
    w.validate();
    return w;
}

json to_json(const GridConvention& c) {
    return {{"presence_parity", c.presence_parity},
            {"phase_base", c.phase_base},
            {"phase_slope", c.phase_slope}};
}

GridConvention convention_from_json(const json& j) {
    GridConvention c;
    c.presence_parity = j.at("presence_parity").get<std::array<int, 3>>();
    c.phase_base = j.at("phase_base").get<std::array<int, 3>>();
    c.phase_slope = j.at("phase_slope").get<std::array<int, 3>>();
    c.validate();
    return c;
}

json to_json(const DirectionSpec& d) {
    json j{{"mode", mode_name(d.mode)}, {"phase", d.phase}};
    switch (d.mode) {
    case DirectionMode::Constant: j["bit"] = d.constant_bit; break;
    case DirectionMode::Periodic: j["word"] = d.word.to_string(); break;
    case DirectionMode::Koch: j["order"] = d.koch_order; break;
    }
    return j;
}

DirectionSpec direction_from_json(const json& j) {
    const std::string mode = j.at("mode").get<std::string>();
    const std::int64_t phase = j.at("phase").get<std::int64_t>();
    if (mode == "constant") return DirectionSpec::constant(j.at("bit").get<int>(), phase);
    if (mode == "periodic") return DirectionSpec::periodic(BinaryWord::parse(j.at("word").get<std::string>()), phase);
    if (mode == "koch") return DirectionSpec::koch(j.at("order").get<int>(), phase);
    throw std::invalid_argument("unknown direction mode '" + mode + "'");
}

json to_json(const StitchPattern& p) {
    json spec;
    for (Family f : kFamilies) spec[std::string(1, family_name(f))] = to_json(p.direction(f));
    return {{"spec", spec}, {"convention", to_json(p.convention)}};
}

StitchPattern pattern_from_json(const json& j) {
    StitchPattern p;
    for (Family f : kFamilies) p.direction(f) = direction_from_json(j.at("spec").at(std::string(1, family_name(f))));
    p.convention = convention_from_json(j.at("convention"));
    p.validate();
    return p;
}

json to_json(const Design& d) {
    return {{"window", to_json(d.window())},
            {"pattern", to_json(d.pattern())},
            {"flipped", d.flipped()},
            {"front", segments_json(d.front())},
            {"back", segments_json(d.back())}};
}

Design design_from_json(const json& j) {
    return Design(window_from_json(j.at("window")), pattern_from_json(j.at("pattern")),
                  segments_from(j.at("front")), segments_from(j.at("back")), j.at("flipped").get<bool>());
}

json to_json(const Cycle& c) {
    json vs = json::array();
    for (const Vertex& v : c.vertices()) vs.push_back(vertex_json(v));
    return {{"length", c.length()}, {"vertices", vs}};
}

Cycle cycle_from_json(const json& j) {
    std::vector<Vertex> vs;
    for (const json& e : j.at("vertices")) vs.push_back(vertex_from(e));
    return Cycle(std::move(vs));
}

json to_json(const MotifCensus& c) {
    json classes = json::array();
    for (const auto& [sig, n] : c.counts) {
        classes.push_back({{"signature", sig.to_string()}, {"length", sig.length()}, {"count", n}});
    }
    return {{"classes", classes}, {"open_paths", c.open_paths}, {"closed", c.closed_count()}};
}

MotifCensus census_from_json(const json& j) {
    MotifCensus c;
    for (const json& e : j.at("classes")) {
        c.counts[MotifSignature::parse(e.at("signature").get<std::string>())] = e.at("count").get<std::int64_t>();
    }
    c.open_paths = j.at("open_paths").get<std::int64_t>();
    return c;
}

json to_json(const LatticeIsometry& g) {
    return {{"rotation", g.rotation},
            {"reflect", g.reflect},
            {"translation", vertex_json(g.translation)},
            {"center_sixths", sixths_json(g.center())}};
}

LatticeIsometry isometry_from_json(const json& j) {
    return {j.at("rotation").get<int>(), j.at("reflect").get<bool>(), vertex_from(j.at("translation"))};
}

json to_json(const WallpaperClassification& c) {
    json witnesses = json::array();
    for (const Witness& w : c.witnesses) {
        json e = to_json(w.isometry);
        e["kind"] = to_string(w.kind);
        witnesses.push_back(e);
    }
    return {{"group", to_string(c.group)},
            {"rotation_order", c.rotation_order},
            {"mirror_axes", c.mirror_axes},
            {"has_glide", c.has_glide},
            {"witnesses", witnesses},
            {"note", c.note}};
}

WallpaperClassification classification_from_json(const json& j) {
    WallpaperClassification c;
    c.group = wallpaper_from_string(j.at("group").get<std::string>());
    c.rotation_order = j.at("rotation_order").get<int>();
    c.mirror_axes = j.at("mirror_axes").get<std::vector<int>>();
    c.has_glide = j.at("has_glide").get<bool>();
    for (const json& e : j.at("witnesses")) {
        const std::string kind = e.at("kind").get<std::string>();
        WitnessKind k = WitnessKind::Translation;
        for (WitnessKind cand : {WitnessKind::Translation, WitnessKind::Rotation, WitnessKind::Mirror, WitnessKind::Glide}) {
            if (to_string(cand) == kind) k = cand;
        }
        c.witnesses.push_back({k, isometry_from_json(e)});
    }
    c.note = j.at("note").get<std::string>();
    return c;
}

json to_json(const SelfDualResult& r) {
    return {{"self_dual", r.self_dual}, {"witness", r.witness ? to_json(*r.witness) : json(nullptr)}};
}

SelfDualResult self_dual_from_json(const json& j) {
    SelfDualResult r;
    r.self_dual = j.at("self_dual").get<bool>();
    if (!j.at("witness").is_null()) r.witness = isometry_from_json(j.at("witness"));
    return r;
}

json to_json(const VerificationResult& r) {
    return {{"order", r.order},
            {"found", r.found},
            {"phases", r.phases},
            {"matched_cycle", r.matched_cycle ? to_json(*r.matched_cycle) : json(nullptr)},
            {"window", to_json(r.window)},
            {"candidates_tried", r.candidates_tried}};
}

VerificationResult verification_from_json(const json& j) {
    VerificationResult r;
    r.order = j.at("order").get<int>();
    r.found = j.at("found").get<bool>();
    r.phases = j.at("phases").get<std::array<std::int64_t, 3>>();
    if (!j.at("matched_cycle").is_null()) r.matched_cycle = cycle_from_json(j.at("matched_cycle"));
    r.window = window_from_json(j.at("window"));
    r.candidates_tried = j.at("candidates_tried").get<std::int64_t>();
    return r;
}

json to_json(const AnalysisReport& r) {
    json inv;
    for (const auto& [name, res] : r.invariant_results) {
        inv[name] = {{"pass", res.pass}, {"checked", res.checked}, {"failures", res.failures}};
    }
    auto opt = [](const auto& o) { return o ? to_json(*o) : json(nullptr); };
    return {{"tool_version", r.tool_version},
            {"pattern", to_json(r.pattern)},
            {"window", to_json(r.window)},
            {"invariant_results", inv},
            {"census", {{"front", to_json(r.census_front)}, {"back", to_json(r.census_back)}}},
            {"wallpaper", {{"front", opt(r.wallpaper_front)}, {"back", opt(r.wallpaper_back)}}},
            {"self_dual", opt(r.self_dual)},
            {"koch", opt(r.koch)},
            {"errors", r.errors}};
}

AnalysisReport report_from_json(const json& j) {
    AnalysisReport r;
    r.tool_version = j.at("tool_version").get<std::string>();
    r.pattern = pattern_from_json(j.at("pattern"));
    r.window = window_from_json(j.at("window"));
    for (const auto& [name, res] : j.at("invariant_results").items()) {
        r.invariant_results[name] = {res.at("pass").get<bool>(), res.at("checked").get<std::int64_t>(),
                                     res.at("failures").get<std::int64_t>()};
    }
    r.census_front = census_from_json(j.at("census").at("front"));
    r.census_back = census_from_json(j.at("census").at("back"));
    const json& wp = j.at("wallpaper");
    if (!wp.at("front").is_null()) r.wallpaper_front = classification_from_json(wp.at("front"));
    if (!wp.at("back").is_null()) r.wallpaper_back = classification_from_json(wp.at("back"));
    if (!j.at("self_dual").is_null()) r.self_dual = self_dual_from_json(j.at("self_dual"));
    if (!j.at("koch").is_null()) r.koch = verification_from_json(j.at("koch"));
    r.errors = j.at("errors").get<std::vector<std::string>>();
    return r;
}

json to_json(const CalibrationResult& r) {
    json cands = json::array();
    for (const auto& c : r.candidates) {
        cands.push_back({{"convention", to_json(c.convention)}, {"accepted", c.accepted}, {"reason", c.reason}});
    }
    return {{"tool_version", kToolVersion},
            {"candidates", cands},
            {"chosen", r.chosen ? to_json(*r.chosen) : json(nullptr)}};
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace hitomezashi
