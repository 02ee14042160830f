#include <gtest/gtest.h>

#include <random>

#include "hitomezashi/design_graph.hpp"
#include "hitomezashi/symmetry.hpp"
#include "test_helpers.hpp"

using namespace hitomezashi;
using namespace hitomezashi::test;

namespace {

Design make(const StitchPattern& p, std::int64_t half = 30) {
    return generate_design(Window::centered(half), p);
}

// Multiset of cycle lengths is a cheap isometry invariant.
std::map<std::size_t, std::int64_t> length_profile(const MotifCensus& c) {
    std::map<std::size_t, std::int64_t> out;
    for (const auto& [sig, n] : c.counts) out[sig.length()] += n;
    return out;
}

}  // namespace

TEST(Symmetry, IsometryAlgebra) {
    std::mt19937 rng(4);
    std::uniform_int_distribution<int> r(0, 5);
    std::uniform_int_distribution<std::int64_t> t(-9, 9);
    for (int n = 0; n < 200; ++n) {
        const LatticeIsometry g{r(rng), r(rng) % 2 == 1, {t(rng), t(rng)}};
        const LatticeIsometry h{r(rng), r(rng) % 2 == 1, {t(rng), t(rng)}};
        const Vertex v{t(rng), t(rng)};
        EXPECT_EQ(g.inverse().apply(g.apply(v)), v);
        EXPECT_EQ(g.compose(h).apply(v), g.apply(h.apply(v)));
        // Direction map agrees with the vertex map.
        for (int d = 0; d < 6; ++d) {
            EXPECT_EQ(g.apply(v + kDirections[d]) - g.apply(v), kDirections[g.apply_direction(d)]);
        }
        // Lattice isometries preserve the squared length i^2 + ij + j^2.
        const Vertex a = g.linear(v);
        EXPECT_EQ(a.i * a.i + a.i * a.j + a.j * a.j, v.i * v.i + v.i * v.j + v.j * v.j);
    }
}

TEST(Symmetry, RotationCentersAreFixed) {
    for (int r = 1; r < 6; ++r) {
        const LatticeIsometry g{r, false, {2, -1}};
        const auto c = g.center();
        ASSERT_TRUE(c.has_value());
        EXPECT_EQ(g.apply(*c), *c);
    }
    const LatticeIsometry mirror{0, true, {0, 0}};
    EXPECT_TRUE(mirror.is_mirror());
    EXPECT_FALSE(LatticeIsometry::translate({1, 0}).center().has_value());
}

TEST(Symmetry, PatternPeriod) {
    EXPECT_EQ(pattern_period(all_zero()), (std::array<std::int64_t, 3>{1, 1, 1}));
    EXPECT_EQ(pattern_period(all_periodic("0001")), (std::array<std::int64_t, 3>{4, 4, 4}));
    EXPECT_EQ(pattern_period(StitchPattern::uniform(DirectionSpec::koch(2))),
              (std::array<std::int64_t, 3>{6, 6, 6}));
}

TEST(Symmetry, AnalyticTranslationsHoldOnTheFiniteDesign) {
    std::mt19937 rng(8);
    for (int trial = 0; trial < 20; ++trial) {
        const StitchPattern p = random_pattern(rng, 4);
        const std::int64_t cell = translation_cell(p);
        const Design d = generate_design(Window::centered(2 * cell + 2), p);
        EXPECT_TRUE(is_symmetry(d, LatticeIsometry::translate({cell, 0})));
        EXPECT_TRUE(is_symmetry(d, LatticeIsometry::translate({0, cell})));
    }
}

TEST(Symmetry, IsSymmetryExamples) {
    const Design d = make(all_zero());
    EXPECT_TRUE(is_symmetry(d, LatticeIsometry::identity()));
    EXPECT_FALSE(is_symmetry(d, LatticeIsometry::translate({1, 0})));
    // A hexagram centre: the front census is pure hexagrams; rotate about one.
    const auto cycles = closed_cycles(d, Side::Front);
    ASSERT_FALSE(cycles.empty());
    const Cycle& star = cycles[cycles.size() / 2];
    std::int64_t si = 0, sj = 0;
    for (const Vertex& v : star.vertices()) {
        si += v.i;
        sj += v.j;
    }
    // The hexagram centre is a vertex (the mean of its 12 vertices).
    ASSERT_EQ(si % 12, 0);
    ASSERT_EQ(sj % 12, 0);
    const Vertex c{si / 12, sj / 12};
    const LatticeIsometry rot60{1, false, c - LatticeIsometry{1, false, {}}.linear(c)};
    EXPECT_TRUE(is_symmetry(d, rot60));
}

TEST(Symmetry, OverlapTooSmall) {
    const Design d = generate_design(Window::centered(3), all_periodic("0001"));
    EXPECT_THROW(is_symmetry(d, LatticeIsometry::translate({2, 0})), OverlapTooSmallError);
    EXPECT_THROW(classify_wallpaper(d), OverlapTooSmallError);
    EXPECT_THROW(is_self_dual(d), OverlapTooSmallError);
}

TEST(Symmetry, PaperWallpaperGroups) {
    const Design zero = make(all_zero());
    EXPECT_EQ(classify_wallpaper(zero).group, WallpaperGroup::p6mm);
    EXPECT_EQ(classify_wallpaper(dual(zero)).group, WallpaperGroup::p6mm);
    const Design four = make(all_periodic("0001"), 40);
    EXPECT_EQ(classify_wallpaper(four).group, WallpaperGroup::p3m1);
}

TEST(Symmetry, WitnessesReverify) {
    for (const char* word : {"0", "0001", "01", "001", "0011"}) {
        const Design d = make(all_periodic(word), 40);
        const WallpaperClassification c = classify_wallpaper(d);
        ASSERT_GE(c.witnesses.size(), 2u) << word;
        int rotations = 0, mirrors = 0;
        for (const Witness& w : c.witnesses) {
            EXPECT_TRUE(is_symmetry(d, w.isometry)) << word;
            if (w.kind == WitnessKind::Rotation) {
                ++rotations;
                EXPECT_EQ(w.isometry.rotation_order(), c.rotation_order);
            }
            if (w.kind == WitnessKind::Mirror) {
                ++mirrors;
                EXPECT_TRUE(w.isometry.is_mirror());
            }
        }
        EXPECT_EQ(rotations, c.rotation_order > 1 ? 1 : 0);
        EXPECT_EQ(mirrors, static_cast<int>(c.mirror_axes.size()));
        EXPECT_NE(c.rotation_order, 4);
        if (c.group == WallpaperGroup::p6mm) {
            EXPECT_EQ(c.rotation_order, 6);
            EXPECT_EQ(c.mirror_axes.size(), 6u);
        }
    }
}

TEST(Symmetry, ClassificationStableUnderWindowGrowth) {
    for (const char* word : {"0", "0001", "01"}) {
        const StitchPattern p = all_periodic(word);
        const std::int64_t base = 3 * translation_cell(p) / 2 + 2;
        const WallpaperGroup g1 = classify_wallpaper(generate_design(Window::centered(base), p)).group;
        const WallpaperGroup g2 = classify_wallpaper(generate_design(Window::centered(2 * base), p)).group;
        const WallpaperGroup g3 = classify_wallpaper(generate_design(Window::centered(3 * base), p)).group;
        EXPECT_EQ(g1, g2) << word;
        EXPECT_EQ(g1, g3) << word;
        EXPECT_NE(g1, WallpaperGroup::Unknown) << word;
    }
}

TEST(Symmetry, NeverFourFoldOnRandomPatterns) {
    std::mt19937 rng(12);
    for (int trial = 0; trial < 15; ++trial) {
        StitchPattern p = StitchPattern::uniform(DirectionSpec::periodic(random_nonempty_word(rng, 4)));
        const std::int64_t cell = translation_cell(p);
        const Design d = generate_design(Window::centered(2 * cell + 2), p);
        const WallpaperClassification c = classify_wallpaper(d);
        EXPECT_NE(c.rotation_order, 4);
        EXPECT_NE(c.group, WallpaperGroup::p4);
        EXPECT_NE(c.group, WallpaperGroup::p4m);
        EXPECT_NE(c.group, WallpaperGroup::p4g);
        for (const Witness& w : c.witnesses) EXPECT_TRUE(is_symmetry(d, w.isometry));
    }
}

TEST(Symmetry, SelfDuality) {
    const Design alt = make(all_periodic("01"));
    const SelfDualResult r = is_self_dual(alt);
    EXPECT_TRUE(r.self_dual);
    ASSERT_TRUE(r.witness.has_value());
    EXPECT_TRUE(maps_side(alt, *r.witness, Side::Front, Side::Back));
    EXPECT_TRUE(maps_side(alt, r.witness->inverse(), Side::Back, Side::Front));

    for (const char* word : {"0", "0001"}) {
        const Design d = make(all_periodic(word), 40);
        EXPECT_FALSE(is_self_dual(d).self_dual) << word;
        // Oracle: the two sides have different cycle-length profiles, so no
        // isometry can exchange them.
        EXPECT_NE(length_profile(motif_census(d, Side::Front)), length_profile(motif_census(d, Side::Back)));
    }
}

TEST(Symmetry, GroupNamesRoundTrip) {
    for (int n = 0; n <= static_cast<int>(WallpaperGroup::Unknown); ++n) {
        const auto g = static_cast<WallpaperGroup>(n);
        EXPECT_EQ(wallpaper_from_string(to_string(g)), g);
    }
    EXPECT_THROW(wallpaper_from_string("p5"), std::invalid_argument);
}
