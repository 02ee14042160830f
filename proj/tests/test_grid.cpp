#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <set>

#include "hitomezashi/grid.hpp"

using namespace hitomezashi;

TEST(Grid, VertexToCartesian) {
    auto p = vertex_to_cartesian({0, 0});
    EXPECT_DOUBLE_EQ(p.x, 0.0);
    EXPECT_DOUBLE_EQ(p.y, 0.0);
    p = vertex_to_cartesian({1, 0});
    EXPECT_DOUBLE_EQ(p.x, 1.0);
    EXPECT_DOUBLE_EQ(p.y, 0.0);
    p = vertex_to_cartesian({0, 2});
    EXPECT_DOUBLE_EQ(p.x, 1.0);
    EXPECT_NEAR(p.y, std::sqrt(3.0), 1e-12);
}

TEST(Grid, NeighborsAtUnitDistance) {
    const Vertex v{3, -2};
    const Point c = vertex_to_cartesian(v);
    for (const Vertex& d : kDirections) {
        const Point n = vertex_to_cartesian(v + d);
        EXPECT_NEAR(std::hypot(n.x - c.x, n.y - c.y), 1.0, 1e-12);
    }
}

TEST(Grid, LinesThrough) {
    auto l = lines_through({2, 3});
    EXPECT_EQ(l[0], (LineId{Family::A, 3}));
    EXPECT_EQ(l[1], (LineId{Family::B, 2}));
    EXPECT_EQ(l[2], (LineId{Family::C, 5}));
    l = lines_through({0, 0});
    EXPECT_EQ(l[2], (LineId{Family::C, 0}));
    l = lines_through({-1, 4});
    EXPECT_EQ(l[0].k, 4);
    EXPECT_EQ(l[1].k, -1);
    EXPECT_EQ(l[2].k, 3);
}

TEST(Grid, LinePresence) {
    const GridConvention conv = default_convention();
    EXPECT_TRUE(is_line_present({Family::A, 4}, conv));
    EXPECT_FALSE(is_line_present({Family::B, -3}, conv));
    EXPECT_FALSE(is_line_present({Family::C, 4}, conv));
    EXPECT_TRUE(is_line_present({Family::C, -1}, conv));
}

// Only parity assignments with an odd number of offset families are dilute.
TEST(Grid, DiluteParitiesByExhaustion) {
    for (int bits = 0; bits < 8; ++bits) {
        GridConvention conv;
        conv.presence_parity = {bits & 1, (bits >> 1) & 1, (bits >> 2) & 1};
        bool dilute = true;
        for (std::int64_t i = -2; i <= 2; ++i) {
            for (std::int64_t j = -2; j <= 2; ++j) {
                int n = 0;
                for (const LineId& l : lines_through({i, j})) n += floor_mod(l.k, 2) == conv.parity(l.family);
                dilute = dilute && (n == 0 || n == 2);
            }
        }
        const int offsets = (bits & 1) + ((bits >> 1) & 1) + ((bits >> 2) & 1);
        EXPECT_EQ(dilute, offsets % 2 == 1) << "bits=" << bits;
        EXPECT_EQ(conv.is_dilute(), dilute);
    }
    GridConvention all_even;
    all_even.presence_parity = {0, 0, 0};
    EXPECT_THROW(all_even.validate(), std::invalid_argument);
    EXPECT_NO_THROW(default_convention().validate());
}

TEST(Grid, PresentLineOrdinal) {
    const GridConvention conv = default_convention();
    EXPECT_EQ(present_line_ordinal({Family::A, 4}, conv), 2);
    EXPECT_EQ(present_line_ordinal({Family::C, 1}, conv), 0);
    EXPECT_EQ(present_line_ordinal({Family::B, -2}, conv), -1);
    EXPECT_THROW(present_line_ordinal({Family::A, 3}, conv), NotAStitchLineError);
    for (Family f : kFamilies) {
        for (std::int64_t m = -5; m <= 5; ++m) {
            EXPECT_EQ(present_line_ordinal(line_from_ordinal(f, m, conv), conv), m);
        }
    }
}

TEST(Grid, DegreeClassExamples) {
    const GridConvention conv = default_convention();
    EXPECT_EQ(vertex_degree_class({1, 1}, conv), DegreeClass::Empty);
    EXPECT_EQ(vertex_degree_class({0, 0}, conv), DegreeClass::Visited);
}

TEST(Grid, QuarterOfVerticesEmpty) {
    const GridConvention conv = default_convention();
    int empty = 0;
    for (std::int64_t i = 0; i <= 99; ++i) {
        for (std::int64_t j = 0; j <= 99; ++j) {
            empty += vertex_degree_class({i, j}, conv) == DegreeClass::Empty;
        }
    }
    EXPECT_EQ(empty, 2500);
}

TEST(Grid, DiluteInvariantOnRandomVertices) {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<std::int64_t> coord(-1000000, 1000000);
    const GridConvention conv = default_convention();
    for (int n = 0; n < 5000; ++n) {
        const Vertex v{coord(rng), coord(rng)};
        const int count = present_line_count(v, conv);
        ASSERT_TRUE(count == 0 || count == 2);
        EXPECT_EQ(count == 0, floor_mod(v.i, 2) == 1 && floor_mod(v.j, 2) == 1);
        const auto l = lines_through(v);
        EXPECT_EQ(l[2].k, l[0].k + l[1].k);
    }
}

TEST(Grid, SegmentBijection) {
    const Window w{-4, 5, -3, 6};
    std::set<SegmentId> seen;
    for (std::int64_t j = w.j_min; j <= w.j_max; ++j) {
        for (std::int64_t i = w.i_min; i <= w.i_max; ++i) {
            const Vertex v{i, j};
            for (const Vertex& d : kDirections) {
                const Vertex u = v + d;
                if (!w.contains(u)) continue;
                const SegmentId seg = segment_between(v, u);
                EXPECT_EQ(segment_between(u, v), seg);
                auto [a, b] = segment_endpoints(seg);
                EXPECT_TRUE((a == v && b == u) || (a == u && b == v));
                seen.insert(seg);
            }
        }
    }
    // Edges in an m x n parallelogram: horizontal + vertical + diagonal.
    const std::int64_t m = w.width();
    const std::int64_t n = w.height();
    EXPECT_EQ(static_cast<std::int64_t>(seen.size()), (m - 1) * n + m * (n - 1) + (m - 1) * (n - 1));
    EXPECT_THROW(segment_between({0, 0}, {1, 1}), std::invalid_argument);
}

TEST(Grid, SegmentEndpointsMatchParameterization) {
    EXPECT_EQ(segment_endpoints({{Family::A, 3}, 5}), (std::pair<Vertex, Vertex>{{5, 3}, {6, 3}}));
    EXPECT_EQ(segment_endpoints({{Family::B, 3}, 5}), (std::pair<Vertex, Vertex>{{3, 5}, {3, 6}}));
    EXPECT_EQ(segment_endpoints({{Family::C, 3}, 5}), (std::pair<Vertex, Vertex>{{-2, 5}, {-3, 6}}));
}

TEST(Grid, WindowValidation) {
    EXPECT_THROW((Window{2, 1, 0, 0}.validate()), std::invalid_argument);
    EXPECT_THROW((Window{0, 1 << 20, 0, 1}.validate()), std::length_error);
    const Window w = Window::square(0, 4);
    EXPECT_TRUE(w.is_interior({1, 3}));
    EXPECT_FALSE(w.is_interior({0, 3}));
}
