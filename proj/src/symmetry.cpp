#include "hitomezashi/symmetry.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace hitomezashi {

Point SixthPoint::cartesian() const noexcept {
    const double i = static_cast<double>(i6) / 6.0;
    const double j = static_cast<double>(j6) / 6.0;
    return {i + j / 2.0, j * std::sqrt(3.0) / 2.0};
}

// ---------------------------------------------------------------------------
// LatticeIsometry

namespace {

Vertex mirror_x(Vertex v) noexcept { return {v.i + v.j, -v.j}; }

Vertex rotate(Vertex v, int turns) noexcept {
    for (int t = 0; t < turns; ++t) v = Vertex{-v.j, v.i + v.j};
    return v;
}

int norm_turns(int r) noexcept { return static_cast<int>(floor_mod(r, 6)); }

}  // namespace

Vertex LatticeIsometry::linear(Vertex v) const noexcept {
    return rotate(reflect ? mirror_x(v) : v, norm_turns(rotation));
}

SixthPoint LatticeIsometry::apply(SixthPoint p) const noexcept {
    const Vertex image = linear(Vertex{p.i6, p.j6});
    return {image.i + 6 * translation.i, image.j + 6 * translation.j};
}

int LatticeIsometry::apply_direction(int d) const noexcept {
    const int mapped = reflect ? (6 - d) % 6 : d;
    return (mapped + norm_turns(rotation)) % 6;
}

LatticeMatrix LatticeIsometry::matrix() const noexcept {
    const Vertex c0 = linear({1, 0});
    const Vertex c1 = linear({0, 1});
    return {c0.i, c1.i, c0.j, c1.j};
}

LatticeIsometry LatticeIsometry::inverse() const noexcept {
    LatticeIsometry inv;
    inv.reflect = reflect;
    // Reflection-type linear parts are involutions.
    inv.rotation = reflect ? norm_turns(rotation) : norm_turns(-rotation);
    const Vertex t = inv.linear(translation);
    inv.translation = {-t.i, -t.j};
    return inv;
}

LatticeIsometry LatticeIsometry::compose(const LatticeIsometry& inner) const noexcept {
    LatticeIsometry out;
    // R^a F^x R^b F^y: F R^b = R^-b F.
    out.rotation = norm_turns(reflect ? rotation - inner.rotation : rotation + inner.rotation);
    out.reflect = reflect != inner.reflect;
    out.translation = linear(inner.translation) + translation;
    return out;
}

int LatticeIsometry::rotation_order() const noexcept {
    if (reflect) return 0;
    const int r = norm_turns(rotation);
    return r == 0 ? 1 : 6 / std::gcd(r, 6);
}

Vertex LatticeIsometry::square_translation() const noexcept {
    return compose(*this).translation;
}

std::optional<SixthPoint> LatticeIsometry::center() const {
    if (reflect) {
        if (!is_mirror()) return std::nullopt;
        // Midpoint of the origin and its image lies on the axis.
        return SixthPoint{3 * translation.i, 3 * translation.j};
    }
    if (norm_turns(rotation) == 0) return std::nullopt;
    // Solve (I - M) c = t.
    const LatticeMatrix m = matrix();
    const LatticeMatrix k{1 - m.a, -m.b, -m.c, 1 - m.d};
    const std::int64_t det = k.det();
    const std::int64_t ni = 6 * (k.d * translation.i - k.b * translation.j);
    const std::int64_t nj = 6 * (-k.c * translation.i + k.a * translation.j);
    if (ni % det != 0 || nj % det != 0) {
        throw std::logic_error("rotation center is not a sixth-lattice point");
    }
    return SixthPoint{ni / det, nj / det};
}

std::array<LatticeIsometry, 12> point_operations() {
    std::array<LatticeIsometry, 12> ops;
    for (int f = 0; f < 2; ++f) {
        for (int r = 0; r < 6; ++r) ops[6 * f + r] = LatticeIsometry{r, f == 1, {}};
    }
    return ops;
}

std::string to_string(WallpaperGroup g) {
    static const char* names[] = {"p1",  "p2",  "p3", "p3m1", "p31m", "p6",  "p6mm", "cm", "cmm",
                                  "pm",  "pg",  "pmm", "pmg", "pgg",  "p4",  "p4m",  "p4g", "Unknown"};
    return names[static_cast<int>(g)];
}

WallpaperGroup wallpaper_from_string(const std::string& name) {
    for (int n = 0; n <= static_cast<int>(WallpaperGroup::Unknown); ++n) {
        auto g = static_cast<WallpaperGroup>(n);
        if (to_string(g) == name) return g;
    }
    throw std::invalid_argument("unknown wallpaper group '" + name + "'");
}

std::string to_string(WitnessKind kind) {
    switch (kind) {
    case WitnessKind::Translation: return "translation";
    case WitnessKind::Rotation: return "rotation";
    case WitnessKind::Mirror: return "mirror";
    case WitnessKind::Glide: return "glide";
    }
    return "?";
}

// ---------------------------------------------------------------------------
// Pattern periodicity

std::array<std::int64_t, 3> pattern_period(const StitchPattern& pattern) {
    std::array<std::int64_t, 3> out{};
    for (Family f : kFamilies) {
        out[index_of(f)] =
            static_cast<std::int64_t>(pattern.direction(f).period_word().minimal_cyclic_period());
    }
    return out;
}

bool pattern_translation_invariant(const StitchPattern& pattern, Vertex t) {
    const GridConvention& conv = pattern.convention;
    for (Family f : kFamilies) {
        std::int64_t dk = 0;
        std::int64_t ds = 0;
        switch (f) {
        case Family::A: dk = t.j; ds = t.i; break;
        case Family::B: dk = t.i; ds = t.j; break;
        case Family::C: dk = t.i + t.j; ds = t.j; break;
        }
        if (floor_mod(dk, 2) != 0) return false;
        const std::int64_t dm = dk / 2;
        const DirectionSpec& d = pattern.direction(f);
        const BinaryWord w = d.period_word();
        // Segment (k, s) goes to (k + dk, s + ds); its side must not change.
        for (std::int64_t m = 0; m < static_cast<std::int64_t>(w.size()); ++m) {
            const std::int64_t flip = ds + conv.slope(f) * dm + w.at_periodic(m + dm + d.phase) -
                                      w.at_periodic(m + d.phase);
            if (floor_mod(flip, 2) != 0) return false;
        }
    }
    return true;
}

std::int64_t translation_cell(const StitchPattern& pattern) {
    const auto periods = pattern_period(pattern);
    std::int64_t l = 1;
    for (auto p : periods) l = std::lcm(l, p);
    const std::int64_t limit = 4 * l;
    for (std::int64_t cell = 1; cell <= limit; ++cell) {
        if (pattern_translation_invariant(pattern, {cell, 0}) &&
            pattern_translation_invariant(pattern, {0, cell})) {
            return cell;
        }
    }
    throw std::logic_error("no translation cell found within 4 * lcm of the periods");
}

// ---------------------------------------------------------------------------
// Symmetry checks

namespace {

// Does {v in W : g(v) in W} contain a cell x cell block of vertices?
bool overlap_holds_cell(const Window& w, const LatticeIsometry& g, std::int64_t cell) {
    const std::int64_t width = w.width();
    const std::int64_t height = w.height();
    if (width <= cell || height <= cell) return false;
    std::vector<std::int32_t> sums(static_cast<std::size_t>((width + 1) * (height + 1)), 0);
    auto at = [&](std::int64_t x, std::int64_t y) -> std::int32_t& {
        return sums[static_cast<std::size_t>(y * (width + 1) + x)];
    };
    for (std::int64_t y = 0; y < height; ++y) {
        for (std::int64_t x = 0; x < width; ++x) {
            const Vertex v{w.i_min + x, w.j_min + y};
            const int inside = w.contains(g.apply(v)) ? 1 : 0;
            at(x + 1, y + 1) = inside + at(x, y + 1) + at(x + 1, y) - at(x, y);
        }
    }
    const std::int64_t side = cell + 1;
    const std::int32_t full = static_cast<std::int32_t>(side * side);
    for (std::int64_t y = 0; y + side <= height; ++y) {
        for (std::int64_t x = 0; x + side <= width; ++x) {
            if (at(x + side, y + side) - at(x, y + side) - at(x + side, y) + at(x, y) == full) {
                return true;
            }
        }
    }
    return false;
}

bool maps_into(const Design& design, const LatticeIsometry& g, Side from, Side to) {
    const Window& w = design.window();
    for (const SegmentId& seg : design.side(from)) {
        auto [a, b] = segment_endpoints(seg);
        const Vertex ga = g.apply(a);
        const Vertex gb = g.apply(b);
        if (!w.contains(ga) || !w.contains(gb)) continue;
        if (!design.contains(to, segment_between(ga, gb))) return false;
    }
    return true;
}

bool maps_side_unchecked(const Design& design, const LatticeIsometry& g, Side from, Side to) {
    return maps_into(design, g, from, to) && maps_into(design, g.inverse(), to, from);
}

std::int64_t norm2(Vertex v) noexcept { return v.i * v.i + v.i * v.j + v.j * v.j; }

std::int64_t cross(Vertex a, Vertex b) noexcept { return a.i * b.j - a.j * b.i; }

Vertex window_center(const Window& w) {
    return {floor_div(w.i_min + w.i_max, 2), floor_div(w.j_min + w.j_max, 2)};
}

struct TranslationLattice {
    Vertex t1;
    Vertex t2;

    std::int64_t det() const noexcept { return cross(t1, t2); }

    // Rational point (in sixths) as integer combination of t1, t2?
    bool contains_sixths(std::int64_t i6, std::int64_t j6) const noexcept {
        const std::int64_t d = 6 * det();
        const std::int64_t x = i6 * t2.j - j6 * t2.i;
        const std::int64_t y = t1.i * j6 - t1.j * i6;
        return x % d == 0 && y % d == 0;
    }
    bool contains(Vertex v) const noexcept { return contains_sixths(6 * v.i, 6 * v.j); }

    // Integer vectors v = x*t1 + y*t2 with x, y in [0, 1).
    std::vector<Vertex> fundamental_cell() const {
        const std::int64_t d = det();
        const std::array<Vertex, 4> corners{Vertex{}, t1, t2, t1 + t2};
        std::int64_t i_lo = 0, i_hi = 0, j_lo = 0, j_hi = 0;
        for (const Vertex& c : corners) {
            i_lo = std::min(i_lo, c.i); i_hi = std::max(i_hi, c.i);
            j_lo = std::min(j_lo, c.j); j_hi = std::max(j_hi, c.j);
        }
        std::vector<Vertex> out;
        for (std::int64_t j = j_lo; j <= j_hi; ++j) {
            for (std::int64_t i = i_lo; i <= i_hi; ++i) {
                // x = cross(v, t2) / d, y = cross(t1, v) / d, normalized for sign of d.
                std::int64_t x = cross({i, j}, t2);
                std::int64_t y = cross(t1, {i, j});
                std::int64_t dd = d;
                if (dd < 0) { x = -x; y = -y; dd = -dd; }
                if (x >= 0 && x < dd && y >= 0 && y < dd) out.push_back({i, j});
            }
        }
        std::sort(out.begin(), out.end(), [](Vertex a, Vertex b) {
            return std::pair(norm2(a), a) < std::pair(norm2(b), b);
        });
        return out;
    }
};

void require_window(const Design& design, std::int64_t cell) {
    const Window& w = design.window();
    if (w.width() < 3 * cell || w.height() < 3 * cell) {
        throw OverlapTooSmallError("window " + std::to_string(w.width()) + "x" +
                                   std::to_string(w.height()) + " is smaller than 3 translation cells (" +
                                   std::to_string(3 * cell) + ")");
    }
}

TranslationLattice find_translations(const Design& design, std::int64_t cell) {
    std::vector<Vertex> found;
    for (std::int64_t j = -cell; j <= cell; ++j) {
        for (std::int64_t i = -cell; i <= cell; ++i) {
            if (i == 0 && j == 0) continue;
            const auto g = LatticeIsometry::translate({i, j});
            if (maps_side_unchecked(design, g, Side::Front, Side::Front)) found.push_back({i, j});
        }
    }
    std::sort(found.begin(), found.end(), [](Vertex a, Vertex b) {
        return std::pair(norm2(a), a) < std::pair(norm2(b), b);
    });
    if (found.empty()) throw std::logic_error("no translation symmetry found within one cell");
    TranslationLattice lattice{found.front(), {}};
    bool have_second = false;
    for (const Vertex& v : found) {
        if (cross(lattice.t1, v) != 0) {
            lattice.t2 = v;
            have_second = true;
            break;
        }
    }
    if (!have_second) throw std::logic_error("translations found are all collinear");
    if (lattice.det() < 0) lattice.t2 = Vertex{-lattice.t2.i, -lattice.t2.j};
    for (const Vertex& v : found) {
        if (!lattice.contains(v)) throw std::logic_error("translation basis does not span the found translations");
    }
    return lattice;
}

// Candidate isometries with linear part `op`, centred on the window.
std::vector<LatticeIsometry> candidates(const LatticeIsometry& op, const Vertex& center,
                                        const std::vector<Vertex>& offsets) {
    std::vector<LatticeIsometry> out;
    out.reserve(offsets.size());
    const Vertex base = center - op.linear(center);
    for (const Vertex& t0 : offsets) out.push_back(LatticeIsometry{op.rotation, op.reflect, base + t0});
    return out;
}

// Distance proxy from the window centre to the element's fixed set.
std::int64_t displacement(const LatticeIsometry& g, Vertex center) {
    return norm2(g.apply(center) - center);
}

}  // namespace

bool maps_side(const Design& design, const LatticeIsometry& g, Side from, Side to) {
    const std::int64_t cell = translation_cell(design.pattern());
    if (!overlap_holds_cell(design.window(), g, cell)) {
        throw OverlapTooSmallError("overlap of window and its image holds no full translation cell (" +
                                   std::to_string(cell) + ")");
    }
    return maps_side_unchecked(design, g, from, to);
}

bool is_symmetry(const Design& design, const LatticeIsometry& g) {
    return maps_side(design, g, Side::Front, Side::Front);
}

WallpaperClassification classify_wallpaper(const Design& design) {
    const std::int64_t cell = translation_cell(design.pattern());
    require_window(design, cell);
    const Window& w = design.window();
    const Vertex center = window_center(w);
    const TranslationLattice lattice = find_translations(design, cell);
    const std::vector<Vertex> offsets = lattice.fundamental_cell();

    WallpaperClassification out;
    auto verified = [&](const LatticeIsometry& g) { return maps_side(design, g, Side::Front, Side::Front); };

    out.witnesses.push_back({WitnessKind::Translation, LatticeIsometry::translate(lattice.t1)});
    out.witnesses.push_back({WitnessKind::Translation, LatticeIsometry::translate(lattice.t2)});

    std::optional<LatticeIsometry> best_rotation;
    // Per reflection linear part (rotation index r): a verified element.
    std::array<std::optional<LatticeIsometry>, 6> reflections;
    std::vector<LatticeIsometry> order3;
    for (const LatticeIsometry& op : point_operations()) {
        if (op.is_identity()) continue;
        for (const LatticeIsometry& g : candidates(op, center, offsets)) {
            if (!overlap_holds_cell(w, g, cell)) continue;
            if (!maps_side_unchecked(design, g, Side::Front, Side::Front)) continue;
            if (g.reflect) {
                auto& slot = reflections[floor_mod(g.rotation, 6)];
                if (!slot || displacement(g, center) < displacement(*slot, center)) slot = g;
                continue;
            }
            if (!best_rotation || g.rotation_order() > best_rotation->rotation_order()) best_rotation = g;
            if (g.rotation_order() == 3) order3.push_back(g);
        }
    }
    out.rotation_order = best_rotation ? best_rotation->rotation_order() : 1;
    if (best_rotation) out.witnesses.push_back({WitnessKind::Rotation, *best_rotation});

    // Split reflection classes into mirrors and pure glides.
    std::array<std::optional<LatticeIsometry>, 6> mirrors;
    std::array<bool, 6> centered{};
    bool any_reflection = false;
    for (int r = 0; r < 6; ++r) {
        if (!reflections[r]) continue;
        any_reflection = true;
        const LatticeIsometry& g = *reflections[r];
        std::optional<LatticeIsometry> best;
        for (int a = -4; a <= 4; ++a) {
            for (int b = -4; b <= 4; ++b) {
                const Vertex tau{a * lattice.t1.i + b * lattice.t2.i, a * lattice.t1.j + b * lattice.t2.j};
                LatticeIsometry m{g.rotation, true, g.translation + tau};
                if (!m.is_mirror()) continue;
                if (!best || displacement(m, center) < displacement(*best, center)) best = m;
            }
        }
        if (best && overlap_holds_cell(w, *best, cell) && verified(*best)) {
            mirrors[r] = best;
            out.mirror_axes.push_back(r);
            out.witnesses.push_back({WitnessKind::Mirror, *best});
            // A lattice vector whose axis component is not twice a lattice vector
            // gives a glide whose vector is not a translation.
            for (const Vertex& tk : {lattice.t1, lattice.t2}) {
                const Vertex folded = tk + best->linear(tk);
                if (!lattice.contains_sixths(3 * folded.i, 3 * folded.j)) {
                    centered[r] = true;
                    LatticeIsometry glide{best->rotation, true, best->translation + tk};
                    if (!out.has_glide && overlap_holds_cell(w, glide, cell) && verified(glide)) {
                        out.witnesses.push_back({WitnessKind::Glide, glide});
                    }
                    out.has_glide = true;
                    break;
                }
            }
        } else {
            if (!out.has_glide) out.witnesses.push_back({WitnessKind::Glide, g});
            out.has_glide = true;
        }
    }

    auto on_some_mirror = [&](SixthPoint c) {
        for (const auto& m : mirrors) {
            if (!m) continue;
            // c lies on a translate of m iff (I - L) c - t_m is a translation.
            const Vertex lc = m->linear(Vertex{c.i6, c.j6});
            if (lattice.contains_sixths(c.i6 - lc.i - 6 * m->translation.i,
                                        c.j6 - lc.j - 6 * m->translation.j)) {
                return true;
            }
        }
        return false;
    };
    // All rotation centres of one order, modulo translations.
    auto centers_of = [&](const std::vector<LatticeIsometry>& rotations) {
        std::vector<SixthPoint> pts;
        for (const LatticeIsometry& g : rotations) {
            for (int a = 0; a < 3; ++a) {
                for (int b = 0; b < 3; ++b) {
                    const Vertex tau{a * lattice.t1.i + b * lattice.t2.i, a * lattice.t1.j + b * lattice.t2.j};
                    pts.push_back(*LatticeIsometry{g.rotation, false, g.translation + tau}.center());
                }
            }
        }
        return pts;
    };

    const std::size_t n_mirror = out.mirror_axes.size();
    const bool any_centered = std::any_of(centered.begin(), centered.end(), [](bool c) { return c; });
    switch (out.rotation_order) {
    case 1:
        if (!any_reflection) out.group = WallpaperGroup::p1;
        else if (n_mirror == 1) out.group = any_centered ? WallpaperGroup::cm : WallpaperGroup::pm;
        else if (n_mirror == 0) out.group = WallpaperGroup::pg;
        else out.note = "mirrors in several directions without rotation";
        break;
    case 2:
        if (!any_reflection) out.group = WallpaperGroup::p2;
        else if (n_mirror == 2 && floor_mod(out.mirror_axes[1] - out.mirror_axes[0], 6) == 3) {
            out.group = any_centered ? WallpaperGroup::cmm : WallpaperGroup::pmm;
        } else if (n_mirror == 1) out.group = WallpaperGroup::pmg;
        else if (n_mirror == 0) out.group = WallpaperGroup::pgg;
        else out.note = "mirror directions inconsistent with 2-fold rotation";
        break;
    case 3: {
        if (!any_reflection) {
            out.group = WallpaperGroup::p3;
            break;
        }
        if (n_mirror != 3) {
            out.note = "3-fold rotation with " + std::to_string(n_mirror) + " mirror directions";
            break;
        }
        const auto pts = centers_of(order3);
        const bool all_on = std::all_of(pts.begin(), pts.end(), on_some_mirror);
        out.group = all_on ? WallpaperGroup::p3m1 : WallpaperGroup::p31m;
        break;
    }
    case 6:
        if (!any_reflection) out.group = WallpaperGroup::p6;
        else if (n_mirror == 6) out.group = WallpaperGroup::p6mm;
        else out.note = "6-fold rotation with " + std::to_string(n_mirror) + " mirror directions";
        break;
    default:
        out.note = "unexpected rotation order";
    }

    // Witnesses are re-checked, never trusted.
    for (const Witness& wit : out.witnesses) {
        if (!maps_side(design, wit.isometry, Side::Front, Side::Front)) {
            out.group = WallpaperGroup::Unknown;
            out.note = "witness failed re-verification";
        }
    }
    return out;
}

SelfDualResult is_self_dual(const Design& design) {
    const std::int64_t cell = translation_cell(design.pattern());
    require_window(design, cell);
    const Vertex center = window_center(design.window());
    const TranslationLattice lattice = find_translations(design, cell);
    const std::vector<Vertex> offsets = lattice.fundamental_cell();
    for (const LatticeIsometry& op : point_operations()) {
        for (const LatticeIsometry& g : candidates(op, center, offsets)) {
            if (!overlap_holds_cell(design.window(), g, cell)) continue;
            if (maps_side_unchecked(design, g, Side::Front, Side::Back)) {
                return {true, g};
            }
        }
    }
    return {false, std::nullopt};
}

}  // namespace hitomezashi
