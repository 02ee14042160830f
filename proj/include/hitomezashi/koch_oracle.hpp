#pragma once

#include <array>
#include <cstdint>
#include <optional>

#include "hitomezashi/design_graph.hpp"
#include "hitomezashi/grid.hpp"
#include "hitomezashi/stitcher.hpp"

namespace hitomezashi {

/// Koch snowflake iterate drawn on lattice vertices. Order 0 is the
/// triangle; order 1 the hexagram.
struct KochPolygon {
    int order = 0;
    Cycle cycle;
};

/**
 * Built purely geometrically: an up-pointing triangle of side 3^order with
 * a corner at the origin, traversed counterclockwise, then `order` rounds of
 * replacing every edge p->q by p, p+d, p+d+rot(-60)(d), p+2d, q with
 * d = (q-p)/3. The bump turns right, i.e. away from the interior.
 */
KochPolygon koch_polygon(int order);

/// Rotate a lattice vector by 60 deg * turns counterclockwise.
Vertex rotate60(Vertex v, int turns) noexcept;

struct VerificationResult {
    int order = 1;
    bool found = false;
    std::array<std::int64_t, 3> phases{0, 0, 0};
    std::optional<Cycle> matched_cycle;
    Window window;
    std::int64_t candidates_tried = 0;
};

/// Smallest centered window accepted by verify_koch for this order:
/// half-side 2*3^order plus one period of the palindromic word.
Window koch_window(int order);

class WindowTooSmallError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// All three directions in Koch mode with the given per-family phases.
StitchPattern koch_pattern(int order, std::array<std::int64_t, 3> phases,
                           const GridConvention& conv = default_convention());

/**
 * Searches for a front cycle congruent to koch_polygon(order) in the Koch
 * word design. Phases (0,0,0) are tried first; with phase_search the (B, C)
 * phases then run lexicographically over one period with A held at 0.
 */
VerificationResult verify_koch(int order, const Window& window, bool phase_search,
                               const GridConvention& conv = default_convention());

}  // namespace hitomezashi
