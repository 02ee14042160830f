// hitomezashi: render, analyze and verify dilute isometric hitomezashi designs.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "hitomezashi/analysis.hpp"
#include "hitomezashi/koch_oracle.hpp"
#include "hitomezashi/render.hpp"
#include "hitomezashi/report.hpp"

using namespace hitomezashi;

namespace {

enum ExitCode : int {
    kOk = 0,
    kUsage = 2,
    kIo = 3,
    kInconclusive = 4,
    kNotFound = 5,
};

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct PatternArgs {
    std::string word;
    std::string word_a, word_b, word_c;
    int koch_order = 0;
    std::int64_t phase_a = 0, phase_b = 0, phase_c = 0;
    std::string window;

    void attach(CLI::App* cmd) {
        cmd->add_option("--word", word, "Offset word for all three directions");
        cmd->add_option("--word-a", word_a, "Offset word for family A");
        cmd->add_option("--word-b", word_b, "Offset word for family B");
        cmd->add_option("--word-c", word_c, "Offset word for family C");
        cmd->add_option("--koch-order", koch_order, "Koch word order in all three directions");
        cmd->add_option("--phase-a", phase_a, "Ordinal shift for family A");
        cmd->add_option("--phase-b", phase_b, "Ordinal shift for family B");
        cmd->add_option("--phase-c", phase_c, "Ordinal shift for family C");
        cmd->add_option("--window", window, "imin:imax:jmin:jmax");
    }

    StitchPattern pattern() const {
        const std::array<std::int64_t, 3> phases{phase_a, phase_b, phase_c};
        if (koch_order != 0) {
            if (!word.empty() || !word_a.empty() || !word_b.empty() || !word_c.empty()) {
                throw UsageError("--koch-order cannot be combined with --word options");
            }
            if (koch_order < 1) throw UsageError("--koch-order must be >= 1");
            return koch_pattern(koch_order, phases);
        }
        const std::array<const std::string*, 3> per{&word_a, &word_b, &word_c};
        StitchPattern p;
        for (Family f : kFamilies) {
            const std::string& text = per[index_of(f)]->empty() ? word : *per[index_of(f)];
            if (text.empty()) {
                throw UsageError(std::string("no word given for family ") + family_name(f) +
                                 " (use --word, --word-" + static_cast<char>('a' + index_of(f)) +
                                 " or --koch-order)");
            }
            BinaryWord w;
            try {
                w = BinaryWord::parse(text);
            } catch (const WordParseError& e) {
                throw UsageError(std::string("family ") + family_name(f) + " word: " + e.what());
            }
            p.direction(f) = DirectionSpec::periodic(std::move(w), phases[index_of(f)]);
        }
        return p;
    }

    std::optional<Window> parsed_window() const {
        if (window.empty()) return std::nullopt;
        std::array<std::int64_t, 4> v{};
        std::istringstream in(window);
        std::string part;
        int n = 0;
        while (std::getline(in, part, ':')) {
            if (n == 4) throw UsageError("window must be imin:imax:jmin:jmax");
            try {
                std::size_t used = 0;
                v[n] = std::stoll(part, &used);
                if (used != part.size()) throw std::invalid_argument(part);
            } catch (const std::exception&) {
                throw UsageError("bad window component '" + part + "'");
            }
            ++n;
        }
        if (n != 4) throw UsageError("window must be imin:imax:jmin:jmax");
        Window w{v[0], v[1], v[2], v[3]};
        try {
            w.validate();
        } catch (const std::exception& e) {
            throw UsageError(std::string("window: ") + e.what());
        }
        return w;
    }
};

void write_file(const std::string& path, const std::string& contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open '" + path + "' for writing");
    out << contents;
    out.close();
    if (!out) throw IoError("failed writing '" + path + "'");
}

RenderSide parse_side(const std::string& s) {
    if (s == "front") return RenderSide::Front;
    if (s == "back") return RenderSide::Back;
    if (s == "both") return RenderSide::Both;
    throw UsageError("--side must be front, back or both");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Dilute hitomezashi on the isometric grid"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kToolVersion);

    PatternArgs render_args;
    std::string render_side = "front";
    std::string render_out;
    std::string render_design_json;
    RenderOptions render_opts;
    bool highlight_koch = false;
    auto* render = app.add_subcommand("render", "Write an SVG chart of a design");
    render_args.attach(render);
    render->add_option("--side", render_side, "front, back or both");
    render->add_flag("--mirror-back", render_opts.mirror_back, "Mirror back stitches left-right");
    render->add_flag("--dots", render_opts.show_grid_dots, "Draw visited vertices");
    render->add_flag("--empty", render_opts.show_empty_vertices, "Mark empty vertices");
    render->add_flag("--highlight-koch", highlight_koch, "Outline front cycles congruent to the Koch iterate");
    render->add_option("--stroke-width", render_opts.stroke_width, "Stroke width in lattice units");
    render->add_option("--unit-px", render_opts.unit_px, "Pixels per lattice unit");
    render->add_option("--design-json", render_design_json, "Also write the design as JSON");
    render->add_option("--out", render_out, "SVG output path")->required();

    PatternArgs analyze_args;
    std::string analyze_report;
    bool skip_self_dual = false;
    auto* analyze_cmd = app.add_subcommand("analyze", "Invariants, motif census, wallpaper group, self-duality");
    analyze_args.attach(analyze_cmd);
    analyze_cmd->add_flag("--no-self-dual", skip_self_dual, "Skip the self-duality search");
    analyze_cmd->add_option("--report", analyze_report, "JSON report path")->required();

    int koch_order = 0;
    bool phase_search = false;
    bool long_running = false;
    std::string koch_window_text;
    std::string koch_report;
    auto* verify = app.add_subcommand("verify-koch", "Look for the Koch iterate in the Koch word design");
    verify->add_option("--order", koch_order, "Koch order 1..6")->required();
    verify->add_flag("--phase-search", phase_search, "Search B/C phases when (0,0,0) fails");
    verify->add_flag("--long-running", long_running, "Allow orders 5 and 6");
    verify->add_option("--window", koch_window_text, "imin:imax:jmin:jmax (default: auto)");
    verify->add_option("--report", koch_report, "JSON report path")->required();

    std::string calibrate_out;
    auto* calibrate_cmd = app.add_subcommand("calibrate", "Search the stitch phase convention");
    calibrate_cmd->add_option("--out", calibrate_out, "Write all candidates as JSON");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*render) {
            const StitchPattern pattern = render_args.pattern();
            const Window window = render_args.parsed_window().value_or(
                render_args.koch_order ? koch_window(render_args.koch_order) : Window::square(0, 40));
            render_opts.side = parse_side(render_side);
            const Design design = generate_design(window, pattern);
            if (highlight_koch) {
                if (!render_args.koch_order) throw UsageError("--highlight-koch needs --koch-order");
                const MotifSignature target = signature_of(koch_polygon(render_args.koch_order).cycle);
                for (Cycle& c : closed_cycles(design, Side::Front)) {
                    if (c.length() == target.length() && signature_of(c) == target) {
                        render_opts.highlight.push_back(std::move(c));
                    }
                }
            }
            write_file(render_out, to_svg(design, render_opts));
            if (!render_design_json.empty()) write_file(render_design_json, dump(to_json(design)));
            std::cout << "wrote " << render_out << " (" << design.front().size() << " front, "
                      << design.back().size() << " back segments)\n";
            return kOk;
        }

        if (*analyze_cmd) {
            const StitchPattern pattern = analyze_args.pattern();
            const Window window = analyze_args.parsed_window().value_or(analysis_window(pattern, 6));
            const Design design = generate_design(window, pattern);
            AnalyzeOptions opts;
            opts.self_dual = !skip_self_dual;
            const AnalysisReport report = analyze(design, opts);
            write_file(analyze_report, dump(to_json(report)));
            std::cout << "front: " << to_string(report.wallpaper_front->group)
                      << ", back: " << to_string(report.wallpaper_back->group);
            if (report.self_dual) std::cout << ", self-dual: " << (report.self_dual->self_dual ? "yes" : "no");
            std::cout << "\n";
            if (!report.errors.empty()) {
                for (const auto& e : report.errors) std::cerr << "inconclusive: " << e << "\n";
                return kInconclusive;
            }
            return kOk;
        }

        if (*verify) {
            if (koch_order < 1 || koch_order > 6) throw UsageError("--order must be in 1..6");
            if (koch_order >= 5 && !long_running) throw UsageError("orders 5 and 6 need --long-running");
            PatternArgs w;
            w.window = koch_window_text;
            const Window window = w.parsed_window().value_or(koch_window(koch_order));
            AnalysisReport report;
            report.koch = verify_koch(koch_order, window, phase_search);
            report.pattern = koch_pattern(koch_order, report.koch->phases);
            report.window = window;
            const Design design = generate_design(window, report.pattern);
            report.invariant_results = check_invariants(design);
            report.census_front = motif_census(design, Side::Front);
            report.census_back = motif_census(design, Side::Back);
            write_file(koch_report, dump(to_json(report)));
            if (!report.koch->found) {
                std::cerr << "Koch order " << koch_order << " iterate not found\n";
                return kNotFound;
            }
            const auto& p = report.koch->phases;
            std::cout << "Koch order " << koch_order << " found at phases (" << p[0] << ", " << p[1]
                      << ", " << p[2] << ")\n";
            return kOk;
        }

        if (*calibrate_cmd) {
            const CalibrationResult result = calibrate();
            for (const auto& c : result.candidates) {
                if (!c.accepted) continue;
                std::cout << "accepted: " << to_json(c.convention).dump() << "\n";
            }
            if (!calibrate_out.empty()) write_file(calibrate_out, dump(to_json(result)));
            if (!result.chosen) {
                std::cerr << "calibration failed: no convention accepted\n";
                return kInconclusive;
            }
            std::cout << "chosen: " << to_json(*result.chosen).dump() << "\n";
            return kOk;
        }
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kIo;
    } catch (const WindowTooSmallError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return kOk;
}
