#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "hitomezashi/grid.hpp"
#include "hitomezashi/stitcher.hpp"

namespace hitomezashi {

/// Closed stitch path: consecutive vertices are neighbors, last joins first.
class Cycle {
public:
    Cycle() = default;
    /// Throws std::invalid_argument unless the vertices form a simple lattice cycle.
    explicit Cycle(std::vector<Vertex> vertices);

    const std::vector<Vertex>& vertices() const noexcept { return vertices_; }
    std::size_t length() const noexcept { return vertices_.size(); }

    /// Edge directions 0..5 in traversal order.
    std::vector<std::uint8_t> directions() const;

    friend bool operator==(const Cycle&, const Cycle&) = default;

private:
    std::vector<Vertex> vertices_;
};

/// Connected piece of one side of a design. Open paths only occur where the
/// window boundary cuts a loop.
struct Component {
    std::vector<Vertex> vertices;  // traversal order; closed ones start at their least vertex
    bool closed = false;

    std::size_t segment_count() const noexcept {
        return closed ? vertices.size() : vertices.size() - 1;
    }
};

/// Lexicographically least edge-direction code over rotations, both
/// traversal senses and the 12 lattice point operations.
struct MotifSignature {
    std::vector<std::uint8_t> code;

    std::size_t length() const noexcept { return code.size(); }
    std::string to_string() const;
    static MotifSignature parse(const std::string& text);

    friend auto operator<=>(const MotifSignature&, const MotifSignature&) = default;
};

struct MotifCensus {
    std::map<MotifSignature, std::int64_t> counts;
    std::int64_t open_paths = 0;

    std::int64_t closed_count() const noexcept;
    std::int64_t count(const MotifSignature& sig) const noexcept;

    friend bool operator==(const MotifCensus&, const MotifCensus&) = default;
};

/// Canonical form of a cyclic direction sequence.
MotifSignature canonical_signature(const std::vector<std::uint8_t>& directions);
MotifSignature signature_of(const Cycle& cycle);

std::vector<Component> build_components(const Design& design, Side side);
std::vector<Cycle> closed_cycles(const Design& design, Side side);
MotifCensus motif_census(const Design& design, Side side);
bool cycle_matches(const Cycle& cycle, const Cycle& reference);

}  // namespace hitomezashi
