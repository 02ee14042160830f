#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "hitomezashi/grid.hpp"
#include "hitomezashi/words.hpp"

namespace hitomezashi {

enum class DirectionMode { Constant, Periodic, Koch };

/// Offset bits for the present lines of one family.
struct DirectionSpec {
    DirectionMode mode = DirectionMode::Constant;
    int constant_bit = 0;
    BinaryWord word;      // Periodic only
    int koch_order = 1;   // Koch only
    std::int64_t phase = 0;

    static DirectionSpec constant(int bit, std::int64_t phase = 0);
    static DirectionSpec periodic(BinaryWord word, std::int64_t phase = 0);
    static DirectionSpec koch(int order, std::int64_t phase = 0);

    /// One period of the bit sequence over present-line ordinals.
    BinaryWord period_word() const;
    void validate() const;

    friend bool operator==(const DirectionSpec&, const DirectionSpec&) = default;
};

struct StitchPattern {
    std::array<DirectionSpec, 3> spec;
    GridConvention convention = default_convention();

    /// Same instructions in all three directions.
    static StitchPattern uniform(const DirectionSpec& d,
                                 const GridConvention& conv = default_convention());

    const DirectionSpec& direction(Family f) const noexcept { return spec[index_of(f)]; }
    DirectionSpec& direction(Family f) noexcept { return spec[index_of(f)]; }
    void validate() const;

    friend bool operator==(const StitchPattern&, const StitchPattern&) = default;
};

enum class Side { Front, Back };

/**
 * Finite window of a stitched pattern.
 *
 * Holds every unit segment of a present line with both endpoints in the
 * window, split into the front and back sides. Segment lists are sorted by
 * (family, k, s). Membership queries are O(1).
 */
class Design {
public:
    Design(Window window, StitchPattern pattern, std::vector<SegmentId> front,
           std::vector<SegmentId> back, bool flipped = false);

    const Window& window() const noexcept { return window_; }
    const StitchPattern& pattern() const noexcept { return pattern_; }
    /// True when this is the reverse side of the generated design.
    bool flipped() const noexcept { return flipped_; }

    const std::vector<SegmentId>& front() const noexcept { return front_; }
    const std::vector<SegmentId>& back() const noexcept { return back_; }
    const std::vector<SegmentId>& side(Side s) const noexcept {
        return s == Side::Front ? front_ : back_;
    }

    bool contains(Side s, SegmentId seg) const noexcept;
    bool contains_edge(Side s, Vertex a, Vertex b) const noexcept;
    std::size_t segment_count() const noexcept { return front_.size() + back_.size(); }

    Design dual() const;

    friend bool operator==(const Design& a, const Design& b) {
        return a.window_ == b.window_ && a.pattern_ == b.pattern_ &&
               a.flipped_ == b.flipped_ && a.front_ == b.front_ && a.back_ == b.back_;
    }

private:
    std::int64_t slot(SegmentId seg) const noexcept;

    Window window_;
    StitchPattern pattern_;
    std::vector<SegmentId> front_;
    std::vector<SegmentId> back_;
    bool flipped_ = false;
    // Per (vertex, forward direction): 0 none, 1 front, 2 back.
    std::vector<std::uint8_t> mask_;
};

int line_bit(LineId line, const StitchPattern& pattern);
bool is_front(SegmentId seg, const StitchPattern& pattern);

Design generate_design(const Window& window, const StitchPattern& pattern);
Design dual(const Design& design);

}  // namespace hitomezashi
