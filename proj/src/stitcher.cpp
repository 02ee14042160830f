#include "hitomezashi/stitcher.hpp"

#include <algorithm>

namespace hitomezashi {

DirectionSpec DirectionSpec::constant(int bit, std::int64_t phase) {
    DirectionSpec d;
    d.mode = DirectionMode::Constant;
    d.constant_bit = bit;
    d.phase = phase;
    d.validate();
    return d;
}

DirectionSpec DirectionSpec::periodic(BinaryWord word, std::int64_t phase) {
    DirectionSpec d;
    d.mode = DirectionMode::Periodic;
    d.word = std::move(word);
    d.phase = phase;
    d.validate();
    return d;
}

DirectionSpec DirectionSpec::koch(int order, std::int64_t phase) {
    DirectionSpec d;
    d.mode = DirectionMode::Koch;
    d.koch_order = order;
    d.phase = phase;
    d.validate();
    return d;
}

BinaryWord DirectionSpec::period_word() const {
    switch (mode) {
    case DirectionMode::Constant: return BinaryWord(1, constant_bit != 0);
    case DirectionMode::Periodic: return word;
    case DirectionMode::Koch: return palindromic_period(koch_word(koch_order));
    }
    return {};
}

void DirectionSpec::validate() const {
    switch (mode) {
    case DirectionMode::Constant:
        if (constant_bit != 0 && constant_bit != 1) {
            throw std::invalid_argument("constant bit must be 0 or 1");
        }
        break;
    case DirectionMode::Periodic:
        if (word.empty()) throw std::invalid_argument("periodic word must be non-empty");
        break;
    case DirectionMode::Koch:
        if (koch_order < 1) {
            throw InvalidOrderError("Koch order must be >= 1, got " + std::to_string(koch_order));
        }
        break;
    }
}

StitchPattern StitchPattern::uniform(const DirectionSpec& d, const GridConvention& conv) {
    StitchPattern p{{d, d, d}, conv};
    p.validate();
    return p;
}

void StitchPattern::validate() const {
    for (const auto& d : spec) d.validate();
    convention.validate();
}

// A flat lookup keyed by the lower endpoint and forward direction 0..2.
std::int64_t Design::slot(SegmentId seg) const noexcept {
    auto [a, b] = segment_endpoints(seg);
    if (!window_.contains(a) || !window_.contains(b)) return -1;
    const std::int64_t v = (a.j - window_.j_min) * window_.width() + (a.i - window_.i_min);
    return 3 * v + index_of(seg.line.family);
}

Design::Design(Window window, StitchPattern pattern, std::vector<SegmentId> front,
               std::vector<SegmentId> back, bool flipped)
    : window_(window),
      pattern_(std::move(pattern)),
      front_(std::move(front)),
      back_(std::move(back)),
      flipped_(flipped) {
    window_.validate();
    std::sort(front_.begin(), front_.end());
    std::sort(back_.begin(), back_.end());
    mask_.assign(static_cast<std::size_t>(3 * window_.vertex_count()), 0);
    auto mark = [&](const std::vector<SegmentId>& segs, std::uint8_t tag) {
        for (const SegmentId& seg : segs) {
            std::int64_t at = slot(seg);
            if (at < 0) throw std::invalid_argument("segment " + to_string(seg) + " outside window");
            if (mask_[at] != 0) throw std::invalid_argument("segment " + to_string(seg) + " listed twice");
            mask_[at] = tag;
        }
    };
    mark(front_, 1);
    mark(back_, 2);
}

bool Design::contains(Side s, SegmentId seg) const noexcept {
    std::int64_t at = slot(seg);
    return at >= 0 && mask_[at] == (s == Side::Front ? 1 : 2);
}

bool Design::contains_edge(Side s, Vertex a, Vertex b) const noexcept {
    if (direction_index(b - a) < 0) return false;
    return contains(s, segment_between(a, b));
}

Design Design::dual() const { return Design(window_, pattern_, back_, front_, !flipped_); }

int line_bit(LineId line, const StitchPattern& pattern) {
    const std::int64_t ordinal = present_line_ordinal(line, pattern.convention);
    const DirectionSpec& d = pattern.direction(line.family);
    if (d.mode == DirectionMode::Constant) return d.constant_bit;
    const BinaryWord& w = d.mode == DirectionMode::Periodic
                              ? d.word
                              : palindromic_period(koch_word(d.koch_order));
    return w.at_periodic(ordinal + d.phase);
}

namespace {

// Parity offset such that segment s is front iff (s + offset) is odd.
int line_offset(LineId line, std::int64_t ordinal, int bit, const GridConvention& conv) {
    const Family f = line.family;
    return static_cast<int>(
        floor_mod(conv.base(f) + conv.slope(f) * ordinal + bit, 2));
}

}  // namespace

bool is_front(SegmentId seg, const StitchPattern& pattern) {
    const int bit = line_bit(seg.line, pattern);
    const std::int64_t ordinal = present_line_ordinal(seg.line, pattern.convention);
    return floor_mod(seg.s + line_offset(seg.line, ordinal, bit, pattern.convention), 2) == 1;
}

Design generate_design(const Window& window, const StitchPattern& pattern) {
    window.validate();
    pattern.validate();
    const GridConvention& conv = pattern.convention;

    std::array<BinaryWord, 3> words;
    for (Family f : kFamilies) words[index_of(f)] = pattern.direction(f).period_word();

    std::vector<SegmentId> front;
    std::vector<SegmentId> back;
    const std::size_t estimate = static_cast<std::size_t>(window.vertex_count()) * 3 / 4;
    front.reserve(estimate);
    back.reserve(estimate);

    auto emit_line = [&](LineId line, std::int64_t s_lo, std::int64_t s_hi) {
        if (s_lo > s_hi || !is_line_present(line, conv)) return;
        const std::int64_t ordinal = present_line_ordinal(line, conv);
        const DirectionSpec& d = pattern.direction(line.family);
        const int bit = words[index_of(line.family)].at_periodic(ordinal + d.phase);
        const int offset = line_offset(line, ordinal, bit, conv);
        for (std::int64_t s = s_lo; s <= s_hi; ++s) {
            SegmentId seg{line, s};
            (floor_mod(s + offset, 2) == 1 ? front : back).push_back(seg);
        }
    };

    for (std::int64_t k = window.j_min; k <= window.j_max; ++k) {
        emit_line({Family::A, k}, window.i_min, window.i_max - 1);
    }
    for (std::int64_t k = window.i_min; k <= window.i_max; ++k) {
        emit_line({Family::B, k}, window.j_min, window.j_max - 1);
    }
    // C segment s joins (k-s, s) and (k-s-1, s+1).
    for (std::int64_t k = window.i_min + window.j_min; k <= window.i_max + window.j_max; ++k) {
        const std::int64_t lo = std::max(window.j_min, k - window.i_max);
        const std::int64_t hi = std::min(window.j_max - 1, k - 1 - window.i_min);
        emit_line({Family::C, k}, lo, hi);
    }
    return Design(window, pattern, std::move(front), std::move(back));
}

Design dual(const Design& design) { return design.dual(); }

}  // namespace hitomezashi
