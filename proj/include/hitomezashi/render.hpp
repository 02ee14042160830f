#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hitomezashi/design_graph.hpp"
#include "hitomezashi/stitcher.hpp"

namespace hitomezashi {

enum class RenderSide { Front, Back, Both };

struct RenderOptions {
    RenderSide side = RenderSide::Front;
    /// Reflect back stitches left-right, as seen when the fabric is turned over.
    bool mirror_back = false;
    bool show_grid_dots = false;
    bool show_empty_vertices = false;
    std::vector<Cycle> highlight;
    double stroke_width = 0.12;
    double unit_px = 12.0;

    void validate() const;
};

/// SVG 1.1 document. Byte-identical for identical inputs: coordinates are
/// printed with four decimals and elements are emitted as grid dots, back,
/// front, highlights, each in segment order.
std::string to_svg(const Design& design, const RenderOptions& opts);

}  // namespace hitomezashi
