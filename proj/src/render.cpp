#include "hitomezashi/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace hitomezashi {

void RenderOptions::validate() const {
    if (!(unit_px > 0.0)) throw std::invalid_argument("unit_px must be positive");
    if (!(stroke_width > 0.0)) throw std::invalid_argument("stroke_width must be positive");
}

namespace {

std::string fixed4(double v) {
    if (std::fabs(v) < 5e-5) v = 0.0;  // no "-0.0000"
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.4f", v);
    return buf;
}

class Canvas {
public:
    Canvas(const Window& w, const RenderOptions& opts) : unit_(opts.unit_px) {
        // The window is a rhombus; its extreme x values sit at the corners.
        const std::array<Vertex, 4> corners{Vertex{w.i_min, w.j_min}, Vertex{w.i_max, w.j_min},
                                            Vertex{w.i_min, w.j_max}, Vertex{w.i_max, w.j_max}};
        x_min_ = x_max_ = vertex_to_cartesian(corners[0]).x;
        y_min_ = y_max_ = vertex_to_cartesian(corners[0]).y;
        for (const Vertex& c : corners) {
            const Point p = vertex_to_cartesian(c);
            x_min_ = std::min(x_min_, p.x);
            x_max_ = std::max(x_max_, p.x);
            y_min_ = std::min(y_min_, p.y);
            y_max_ = std::max(y_max_, p.y);
        }
        x_min_ -= kMargin;
        x_max_ += kMargin;
        y_min_ -= kMargin;
        y_max_ += kMargin;
    }

    double width() const { return (x_max_ - x_min_) * unit_; }
    double height() const { return (y_max_ - y_min_) * unit_; }

    std::pair<std::string, std::string> xy(Vertex v, bool mirrored = false) const {
        const Point p = vertex_to_cartesian(v);
        const double x = mirrored ? x_max_ - p.x : p.x - x_min_;
        return {fixed4(x * unit_), fixed4((y_max_ - p.y) * unit_)};
    }

private:
    static constexpr double kMargin = 1.0;
    double unit_;
    double x_min_, x_max_, y_min_, y_max_;
};

void emit_segments(std::string& out, const Canvas& canvas, const std::vector<SegmentId>& segs,
                   const char* cls, bool mirrored) {
    for (const SegmentId& seg : segs) {
        auto [a, b] = segment_endpoints(seg);
        auto [x1, y1] = canvas.xy(a, mirrored);
        auto [x2, y2] = canvas.xy(b, mirrored);
        out += "<line class=\"";
        out += cls;
        out += "\" x1=\"" + x1 + "\" y1=\"" + y1 + "\" x2=\"" + x2 + "\" y2=\"" + y2 + "\"/>\n";
    }
}

}  // namespace

std::string to_svg(const Design& design, const RenderOptions& opts) {
    opts.validate();
    const Window& w = design.window();
    const Canvas canvas(w, opts);
    const std::string stroke = fixed4(opts.stroke_width * opts.unit_px);
    const std::string dot_r = fixed4(0.06 * opts.unit_px);

    std::string out;
    out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + fixed4(canvas.width()) +
           "\" height=\"" + fixed4(canvas.height()) + "\" viewBox=\"0.0000 0.0000 " +
           fixed4(canvas.width()) + " " + fixed4(canvas.height()) + "\">\n";
    out += "<style>\n";
    out += ".front{stroke:#1b2a49;stroke-width:" + stroke + ";stroke-linecap:round}\n";
    out += ".back{stroke:#c0392b;stroke-width:" + stroke + ";stroke-linecap:round;stroke-dasharray:" +
           fixed4(0.15 * opts.unit_px) + "}\n";
    out += ".dot{fill:#9aa5b1}\n.empty{fill:none;stroke:#9aa5b1;stroke-width:" + fixed4(0.02 * opts.unit_px) + "}\n";
    out += ".highlight{fill:none;stroke:#f39c12;stroke-width:" + fixed4(2.0 * opts.stroke_width * opts.unit_px) +
           ";stroke-linejoin:round}\n";
    out += "</style>\n";

    if (opts.show_grid_dots || opts.show_empty_vertices) {
        out += "<g id=\"grid\">\n";
        const GridConvention& conv = design.pattern().convention;
        for (std::int64_t j = w.j_min; j <= w.j_max; ++j) {
            for (std::int64_t i = w.i_min; i <= w.i_max; ++i) {
                const bool empty = present_line_count({i, j}, conv) == 0;
                if (empty ? !opts.show_empty_vertices : !opts.show_grid_dots) continue;
                auto [x, y] = canvas.xy({i, j});
                out += "<circle class=\"";
                out += empty ? "empty" : "dot";
                out += "\" cx=\"" + x + "\" cy=\"" + y + "\" r=\"" + dot_r + "\"/>\n";
            }
        }
        out += "</g>\n";
    }
    if (opts.side != RenderSide::Front) {
        out += "<g id=\"back\">\n";
        emit_segments(out, canvas, design.back(), "back", opts.mirror_back);
        out += "</g>\n";
    }
    if (opts.side != RenderSide::Back) {
        out += "<g id=\"front\">\n";
        emit_segments(out, canvas, design.front(), "front", false);
        out += "</g>\n";
    }
    if (!opts.highlight.empty()) {
        out += "<g id=\"highlight\">\n";
        for (const Cycle& c : opts.highlight) {
            out += "<polygon class=\"highlight\" points=\"";
            bool first = true;
            for (const Vertex& v : c.vertices()) {
                auto [x, y] = canvas.xy(v);
                if (!first) out += ' ';
                out += x + "," + y;
                first = false;
            }
            out += "\"/>\n";
        }
        out += "</g>\n";
    }
    out += "</svg>\n";
    return out;
}

}  // namespace hitomezashi
