#include "hitomezashi/grid.hpp"

#include <cmath>
#include <limits>

namespace hitomezashi {

char family_name(Family f) noexcept {
    static constexpr char names[] = {'A', 'B', 'C'};
    return names[index_of(f)];
}

Family family_from_name(char c) {
    switch (c) {
    case 'A': case 'a': return Family::A;
    case 'B': case 'b': return Family::B;
    case 'C': case 'c': return Family::C;
    default: throw std::invalid_argument(std::string("unknown line family '") + c + "'");
    }
}

int direction_index(Vertex step) noexcept {
    for (int d = 0; d < 6; ++d) {
        if (kDirections[d] == step) return d;
    }
    return -1;
}

bool GridConvention::is_dilute() const noexcept {
    // Line-count at (i, j) depends only on (i mod 2, j mod 2).
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            int n = present_line_count({i, j}, *this);
            if (n != 0 && n != 2) return false;
        }
    }
    return true;
}

void GridConvention::validate() const {
    for (int f = 0; f < 3; ++f) {
        for (int v : {presence_parity[f], phase_base[f], phase_slope[f]}) {
            if (v != 0 && v != 1) {
                throw std::invalid_argument("grid convention entries must be 0 or 1");
            }
        }
    }
    if (!is_dilute()) {
        throw std::invalid_argument(
            "presence parities leave some vertex on 1 or 3 present lines");
    }
}

GridConvention default_convention() { return GridConvention{}; }

void Window::validate() const {
    if (i_min > i_max || j_min > j_max) {
        throw std::invalid_argument("window bounds are inverted");
    }
    constexpr std::int64_t kMaxSide = 1 << 15;
    if (width() > kMaxSide || height() > kMaxSide) {
        throw std::length_error("window side exceeds " + std::to_string(kMaxSide));
    }
}

Point vertex_to_cartesian(Vertex v) noexcept {
    static const double kHalfRoot3 = std::sqrt(3.0) / 2.0;
    return {static_cast<double>(v.i) + static_cast<double>(v.j) / 2.0,
            static_cast<double>(v.j) * kHalfRoot3};
}

std::array<LineId, 3> lines_through(Vertex v) noexcept {
    return {LineId{Family::A, v.j}, LineId{Family::B, v.i}, LineId{Family::C, v.i + v.j}};
}

bool is_line_present(LineId line, const GridConvention& conv) noexcept {
    return floor_mod(line.k, 2) == conv.parity(line.family);
}

std::int64_t present_line_ordinal(LineId line, const GridConvention& conv) {
    if (!is_line_present(line, conv)) {
        throw NotAStitchLineError("line " + to_string(line) + " carries no stitching");
    }
    return (line.k - conv.parity(line.family)) / 2;
}

LineId line_from_ordinal(Family f, std::int64_t ordinal, const GridConvention& conv) noexcept {
    return {f, 2 * ordinal + conv.parity(f)};
}

int present_line_count(Vertex v, const GridConvention& conv) noexcept {
    int n = 0;
    for (const LineId& line : lines_through(v)) {
        n += is_line_present(line, conv) ? 1 : 0;
    }
    return n;
}

DegreeClass vertex_degree_class(Vertex v, const GridConvention& conv) {
    switch (present_line_count(v, conv)) {
    case 0: return DegreeClass::Empty;
    case 2: return DegreeClass::Visited;
    default:
        throw std::logic_error("vertex lies on an odd number of present lines; convention is not dilute");
    }
}

std::pair<Vertex, Vertex> segment_endpoints(SegmentId seg) noexcept {
    const std::int64_t k = seg.line.k;
    const std::int64_t s = seg.s;
    switch (seg.line.family) {
    case Family::A: return {{s, k}, {s + 1, k}};
    case Family::B: return {{k, s}, {k, s + 1}};
    case Family::C: return {{k - s, s}, {k - s - 1, s + 1}};
    }
    return {};
}

SegmentId segment_between(Vertex a, Vertex b) {
    int d = direction_index(b - a);
    if (d < 0) {
        throw std::invalid_argument("vertices are not lattice neighbors");
    }
    if (d >= 3) {
        std::swap(a, b);
        d -= 3;
    }
    switch (d) {
    case 0: return {{Family::A, a.j}, a.i};
    case 1: return {{Family::B, a.i}, a.j};
    default: return {{Family::C, a.i + a.j}, a.j};
    }
}

std::int64_t position_on_line(Vertex v, Family f) noexcept {
    return f == Family::A ? v.i : v.j;
}

std::string to_string(const LineId& line) {
    return std::string(1, family_name(line.family)) + ":" + std::to_string(line.k);
}

std::string to_string(const SegmentId& seg) {
    return to_string(seg.line) + "@" + std::to_string(seg.s);
}

}  // namespace hitomezashi
