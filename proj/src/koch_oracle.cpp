#include "hitomezashi/koch_oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

namespace hitomezashi {

Vertex rotate60(Vertex v, int turns) noexcept {
    turns = static_cast<int>(floor_mod(turns, 6));
    for (int t = 0; t < turns; ++t) v = Vertex{-v.j, v.i + v.j};
    return v;
}

namespace {

std::int64_t pow3(int e) {
    std::int64_t p = 1;
    for (int n = 0; n < e; ++n) p *= 3;
    return p;
}

}  // namespace

KochPolygon koch_polygon(int order) {
    if (order < 0) {
        throw InvalidOrderError("Koch polygon order must be >= 0, got " + std::to_string(order));
    }
    if (order > 9) {
        throw InvalidOrderError("Koch polygon order " + std::to_string(order) + " is too large");
    }
    const std::int64_t side = pow3(order);
    std::vector<Vertex> poly{{0, 0}, {side, 0}, {0, side}};
    for (int round = 0; round < order; ++round) {
        std::vector<Vertex> next;
        next.reserve(poly.size() * 4);
        for (std::size_t n = 0; n < poly.size(); ++n) {
            const Vertex p = poly[n];
            const Vertex q = poly[(n + 1) % poly.size()];
            const Vertex delta = q - p;
            const Vertex third{delta.i / 3, delta.j / 3};
            const Vertex a = p + third;
            next.push_back(p);
            next.push_back(a);
            next.push_back(a + rotate60(third, -1));
            next.push_back(a + third);
        }
        poly = std::move(next);
    }

    // Expand to unit steps.
    std::vector<Vertex> unit;
    unit.reserve(std::size_t{3} << (2 * order));
    for (std::size_t n = 0; n < poly.size(); ++n) {
        const Vertex p = poly[n];
        const Vertex q = poly[(n + 1) % poly.size()];
        const Vertex delta = q - p;
        const std::int64_t len = std::max({std::abs(delta.i), std::abs(delta.j)});
        const Vertex step{delta.i / len, delta.j / len};
        for (std::int64_t t = 0; t < len; ++t) unit.push_back(p + Vertex{step.i * t, step.j * t});
    }
    KochPolygon out{order, Cycle(std::move(unit))};
    if (out.cycle.length() != (std::size_t{3} << (2 * order))) {
        throw std::logic_error("Koch polygon has the wrong segment count");
    }
    return out;
}

Window koch_window(int order) {
    if (order < 1) throw InvalidOrderError("Koch order must be >= 1");
    const std::int64_t period = 2 * pow3(order - 1);
    return Window::centered(2 * pow3(order) + period);
}

StitchPattern koch_pattern(int order, std::array<std::int64_t, 3> phases,
                           const GridConvention& conv) {
    StitchPattern p;
    for (Family f : kFamilies) p.direction(f) = DirectionSpec::koch(order, phases[index_of(f)]);
    p.convention = conv;
    p.validate();
    return p;
}

VerificationResult verify_koch(int order, const Window& window, bool phase_search,
                               const GridConvention& conv) {
    if (order < 1) throw InvalidOrderError("Koch order must be >= 1, got " + std::to_string(order));
    window.validate();
    const Window needed = koch_window(order);
    if (window.width() < needed.width() || window.height() < needed.height()) {
        throw WindowTooSmallError("window " + std::to_string(window.width()) + "x" +
                                  std::to_string(window.height()) + " too small for Koch order " +
                                  std::to_string(order) + "; need " +
                                  std::to_string(needed.width()) + "x" +
                                  std::to_string(needed.height()));
    }

    const KochPolygon target = koch_polygon(order);
    const MotifSignature target_sig = signature_of(target.cycle);
    const std::int64_t period = 2 * pow3(order - 1);

    VerificationResult result;
    result.order = order;
    result.window = window;

    auto attempt = [&](std::int64_t phase_b, std::int64_t phase_c) {
        ++result.candidates_tried;
        const Design design = generate_design(window, koch_pattern(order, {0, phase_b, phase_c}, conv));
        for (Component& c : build_components(design, Side::Front)) {
            if (!c.closed || c.vertices.size() != target.cycle.length()) continue;
            Cycle cycle(std::move(c.vertices));
            if (signature_of(cycle) == target_sig) {
                result.found = true;
                result.phases = {0, phase_b, phase_c};
                result.matched_cycle = std::move(cycle);
                return true;
            }
        }
        return false;
    };

    if (attempt(0, 0) || !phase_search) return result;
    for (std::int64_t b = 0; b < period; ++b) {
        for (std::int64_t c = 0; c < period; ++c) {
            if (b == 0 && c == 0) continue;
            if (attempt(b, c)) return result;
        }
    }
    return result;
}

}  // namespace hitomezashi
