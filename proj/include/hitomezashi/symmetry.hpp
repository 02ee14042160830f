#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hitomezashi/grid.hpp"
#include "hitomezashi/stitcher.hpp"

namespace hitomezashi {

/// Point with lattice coordinates in sixths: (i6 / 6, j6 / 6). Vertices,
/// edge midpoints and triangle centers are all representable.
struct SixthPoint {
    std::int64_t i6 = 0;
    std::int64_t j6 = 0;

    static SixthPoint from(Vertex v) noexcept { return {6 * v.i, 6 * v.j}; }
    Point cartesian() const noexcept;
    friend auto operator<=>(const SixthPoint&, const SixthPoint&) = default;
};

/// Integer 2x2 matrix acting on lattice coordinates (column vectors).
struct LatticeMatrix {
    std::int64_t a = 1, b = 0, c = 0, d = 1;

    Vertex operator*(Vertex v) const noexcept { return {a * v.i + b * v.j, c * v.i + d * v.j}; }
    std::int64_t det() const noexcept { return a * d - b * c; }
};

/**
 * v -> rotate(rotation * 60deg, reflect ? mirror_x(v) : v) + translation.
 *
 * The mirror is across the +x axis, applied before the rotation.
 */
struct LatticeIsometry {
    int rotation = 0;
    bool reflect = false;
    Vertex translation{};

    static LatticeIsometry identity() { return {}; }
    static LatticeIsometry translate(Vertex t) { return {0, false, t}; }

    Vertex linear(Vertex v) const noexcept;
    Vertex apply(Vertex v) const noexcept { return linear(v) + translation; }
    SixthPoint apply(SixthPoint p) const noexcept;
    int apply_direction(int d) const noexcept;
    LatticeMatrix matrix() const noexcept;

    LatticeIsometry inverse() const noexcept;
    /// (*this) after `inner`.
    LatticeIsometry compose(const LatticeIsometry& inner) const noexcept;

    bool is_translation() const noexcept { return rotation == 0 && !reflect; }
    bool is_identity() const noexcept { return is_translation() && translation == Vertex{}; }
    /// Order of the linear part as a rotation (1, 2, 3 or 6); 0 for reflections.
    int rotation_order() const noexcept;
    /// For reflection-type elements: the square, always a translation.
    Vertex square_translation() const noexcept;
    bool is_mirror() const noexcept { return reflect && square_translation() == Vertex{}; }

    /// Rotation center, or a point on the mirror axis; nullopt for translations and glides.
    std::optional<SixthPoint> center() const;

    friend bool operator==(const LatticeIsometry&, const LatticeIsometry&) = default;
};

enum class WallpaperGroup {
    p1, p2, p3, p3m1, p31m, p6, p6mm, cm, cmm, pm, pg, pmm, pmg, pgg, p4, p4m, p4g, Unknown
};

std::string to_string(WallpaperGroup g);
WallpaperGroup wallpaper_from_string(const std::string& name);

class OverlapTooSmallError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Per-family minimal period of the offset bits over present-line ordinals.
std::array<std::int64_t, 3> pattern_period(const StitchPattern& pattern);

/// True iff the infinite design generated by `pattern` is invariant under
/// the translation, decided from the words alone.
bool pattern_translation_invariant(const StitchPattern& pattern, Vertex t);

/// Least L with (L, 0) and (0, L) both translations of the infinite design.
std::int64_t translation_cell(const StitchPattern& pattern);

/**
 * True iff g carries the `from` side of the design onto the `to` side on
 * the overlap of the window with its image. Throws OverlapTooSmallError
 * when that overlap does not contain a full translation cell.
 */
bool maps_side(const Design& design, const LatticeIsometry& g, Side from, Side to);
bool is_symmetry(const Design& design, const LatticeIsometry& g);

enum class WitnessKind { Translation, Rotation, Mirror, Glide };
std::string to_string(WitnessKind kind);

struct Witness {
    WitnessKind kind = WitnessKind::Translation;
    LatticeIsometry isometry;

    friend bool operator==(const Witness&, const Witness&) = default;
};

struct WallpaperClassification {
    WallpaperGroup group = WallpaperGroup::Unknown;
    int rotation_order = 1;
    /// Mirror axis classes, as multiples of 30 deg modulo 180 deg.
    std::vector<int> mirror_axes;
    bool has_glide = false;
    std::vector<Witness> witnesses;
    std::string note;
};

/// Classifies the front side of a periodic design by verified search.
WallpaperClassification classify_wallpaper(const Design& design);

struct SelfDualResult {
    bool self_dual = false;
    std::optional<LatticeIsometry> witness;
};

SelfDualResult is_self_dual(const Design& design);

/// The twelve point operations in canonical enumeration order.
std::array<LatticeIsometry, 12> point_operations();

}  // namespace hitomezashi
