#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

#include "hitomezashi/words.hpp"

/**
 * Triangular lattice geometry.
 *
 * Vertex (i, j) sits at Cartesian (i + j/2, j*sqrt(3)/2). The three line
 * families are indexed by the tri-axial coordinates
 *
 *     A: j = k   (direction   0 deg)
 *     B: i = k   (direction  60 deg)
 *     C: i+j = k (direction 120 deg)
 *
 * so every unit stitch is addressed by integers only.
 */
namespace hitomezashi {

enum class Family : std::uint8_t { A = 0, B = 1, C = 2 };

inline constexpr std::array<Family, 3> kFamilies{Family::A, Family::B, Family::C};

constexpr int index_of(Family f) noexcept { return static_cast<int>(f); }
char family_name(Family f) noexcept;
Family family_from_name(char c);

struct Vertex {
    std::int64_t i = 0;
    std::int64_t j = 0;

    friend auto operator<=>(const Vertex&, const Vertex&) = default;
    friend Vertex operator+(Vertex a, Vertex b) noexcept { return {a.i + b.i, a.j + b.j}; }
    friend Vertex operator-(Vertex a, Vertex b) noexcept { return {a.i - b.i, a.j - b.j}; }
};

struct Point {
    double x = 0.0;
    double y = 0.0;
};

struct LineId {
    Family family = Family::A;
    std::int64_t k = 0;

    friend auto operator<=>(const LineId&, const LineId&) = default;
};

struct SegmentId {
    LineId line;
    std::int64_t s = 0;

    friend auto operator<=>(const SegmentId&, const SegmentId&) = default;
};

/// Unit steps in counterclockwise order from +x; direction d has angle 60*d degrees.
inline constexpr std::array<Vertex, 6> kDirections{
    Vertex{1, 0}, Vertex{0, 1}, Vertex{-1, 1}, Vertex{-1, 0}, Vertex{0, -1}, Vertex{1, -1}};

/// Index 0..5 of a unit step, or -1 when `step` is not a lattice neighbor offset.
int direction_index(Vertex step) noexcept;

/// Per-family integer parameters of the dilute line selection and stitch phase.
struct GridConvention {
    std::array<int, 3> presence_parity{0, 0, 1};
    std::array<int, 3> phase_base{0, 0, 0};
    std::array<int, 3> phase_slope{1, 1, 1};

    int parity(Family f) const noexcept { return presence_parity[index_of(f)]; }
    int base(Family f) const noexcept { return phase_base[index_of(f)]; }
    int slope(Family f) const noexcept { return phase_slope[index_of(f)]; }

    /// Every vertex lies on 0 or 2 present lines.
    bool is_dilute() const noexcept;
    void validate() const;

    friend bool operator==(const GridConvention&, const GridConvention&) = default;
};

/// Convention frozen by the calibration harness (see `hitomezashi calibrate`).
GridConvention default_convention();

/// Closed parallelogram of lattice vertices i_min..i_max x j_min..j_max.
struct Window {
    std::int64_t i_min = 0;
    std::int64_t i_max = 0;
    std::int64_t j_min = 0;
    std::int64_t j_max = 0;

    static Window square(std::int64_t lo, std::int64_t hi) { return {lo, hi, lo, hi}; }
    static Window centered(std::int64_t half) { return {-half, half, -half, half}; }

    void validate() const;
    std::int64_t width() const noexcept { return i_max - i_min + 1; }
    std::int64_t height() const noexcept { return j_max - j_min + 1; }
    std::int64_t vertex_count() const noexcept { return width() * height(); }
    bool contains(Vertex v) const noexcept {
        return v.i >= i_min && v.i <= i_max && v.j >= j_min && v.j <= j_max;
    }
    /// All six lattice neighbors of v are in the window.
    bool is_interior(Vertex v) const noexcept {
        return v.i > i_min && v.i < i_max && v.j > j_min && v.j < j_max;
    }

    friend bool operator==(const Window&, const Window&) = default;
};

class NotAStitchLineError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

Point vertex_to_cartesian(Vertex v) noexcept;

/// Lines (A, B, C) through v: k = j, k = i, k = i + j.
std::array<LineId, 3> lines_through(Vertex v) noexcept;

bool is_line_present(LineId line, const GridConvention& conv) noexcept;

/// Consecutive present lines of a family get consecutive ordinals.
std::int64_t present_line_ordinal(LineId line, const GridConvention& conv);
LineId line_from_ordinal(Family f, std::int64_t ordinal, const GridConvention& conv) noexcept;

enum class DegreeClass { Empty, Visited };

int present_line_count(Vertex v, const GridConvention& conv) noexcept;
DegreeClass vertex_degree_class(Vertex v, const GridConvention& conv);

std::pair<Vertex, Vertex> segment_endpoints(SegmentId seg) noexcept;

/// Segment joining two lattice neighbors (either order).
SegmentId segment_between(Vertex a, Vertex b);

/// Position of vertex v along a line through it, in that line's s parameter.
std::int64_t position_on_line(Vertex v, Family f) noexcept;

std::string to_string(const LineId& line);
std::string to_string(const SegmentId& seg);

}  // namespace hitomezashi
