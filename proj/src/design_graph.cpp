#include "hitomezashi/design_graph.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <stdexcept>

namespace hitomezashi {

Cycle::Cycle(std::vector<Vertex> vertices) : vertices_(std::move(vertices)) {
    if (vertices_.size() < 3) {
        throw std::invalid_argument("a cycle needs at least 3 vertices");
    }
    std::set<Vertex> seen(vertices_.begin(), vertices_.end());
    if (seen.size() != vertices_.size()) {
        throw std::invalid_argument("cycle revisits a vertex");
    }
    for (std::size_t n = 0; n < vertices_.size(); ++n) {
        const Vertex& a = vertices_[n];
        const Vertex& b = vertices_[(n + 1) % vertices_.size()];
        if (direction_index(b - a) < 0) {
            throw std::invalid_argument("consecutive cycle vertices are not lattice neighbors");
        }
    }
}

std::vector<std::uint8_t> Cycle::directions() const {
    std::vector<std::uint8_t> dirs(vertices_.size());
    for (std::size_t n = 0; n < vertices_.size(); ++n) {
        const Vertex& a = vertices_[n];
        const Vertex& b = vertices_[(n + 1) % vertices_.size()];
        dirs[n] = static_cast<std::uint8_t>(direction_index(b - a));
    }
    return dirs;
}

std::string MotifSignature::to_string() const {
    std::string out(code.size(), '0');
    for (std::size_t n = 0; n < code.size(); ++n) out[n] = static_cast<char>('0' + code[n]);
    return out;
}

MotifSignature MotifSignature::parse(const std::string& text) {
    MotifSignature sig;
    sig.code.reserve(text.size());
    for (char c : text) {
        if (c < '0' || c > '5') throw std::invalid_argument("signature digits must be 0..5");
        sig.code.push_back(static_cast<std::uint8_t>(c - '0'));
    }
    return sig;
}

std::int64_t MotifCensus::closed_count() const noexcept {
    std::int64_t total = 0;
    for (const auto& [sig, n] : counts) total += n;
    return total;
}

std::int64_t MotifCensus::count(const MotifSignature& sig) const noexcept {
    auto it = counts.find(sig);
    return it == counts.end() ? 0 : it->second;
}

namespace {

// Booth's algorithm: start index of the least rotation.
std::size_t least_rotation(const std::vector<std::uint8_t>& s) {
    const std::size_t n = s.size();
    std::vector<std::int64_t> fail(2 * n, -1);
    std::size_t k = 0;
    for (std::size_t j = 1; j < 2 * n; ++j) {
        const std::uint8_t sj = s[j % n];
        std::int64_t i = fail[j - k - 1];
        while (i != -1 && sj != s[(k + i + 1) % n]) {
            if (sj < s[(k + i + 1) % n]) k = j - i - 1;
            i = fail[i];
        }
        if (sj != s[(k + i + 1) % n]) {  // i == -1
            if (sj < s[k % n]) k = j;
            fail[j - k] = -1;
        } else {
            fail[j - k] = i + 1;
        }
    }
    return k % n;
}

}  // namespace

MotifSignature canonical_signature(const std::vector<std::uint8_t>& directions) {
    const std::size_t n = directions.size();
    MotifSignature best;
    std::vector<std::uint8_t> image(n);
    std::vector<std::uint8_t> rotated(n);
    for (int reflect = 0; reflect < 2; ++reflect) {
        for (int rot = 0; rot < 6; ++rot) {
            for (int backwards = 0; backwards < 2; ++backwards) {
                for (std::size_t m = 0; m < n; ++m) {
                    // Reversed traversal walks each edge the other way.
                    std::uint8_t d = backwards ? static_cast<std::uint8_t>((directions[n - 1 - m] + 3) % 6)
                                               : directions[m];
                    int mapped = reflect ? (6 - d) % 6 : d;
                    image[m] = static_cast<std::uint8_t>((mapped + rot) % 6);
                }
                const std::size_t start = least_rotation(image);
                for (std::size_t m = 0; m < n; ++m) rotated[m] = image[(start + m) % n];
                if (best.code.empty() || rotated < best.code) best.code = rotated;
            }
        }
    }
    return best;
}

MotifSignature signature_of(const Cycle& cycle) { return canonical_signature(cycle.directions()); }

std::vector<Component> build_components(const Design& design, Side side) {
    const Window& w = design.window();
    const std::int64_t width = w.width();
    auto local = [&](Vertex v) { return (v.j - w.j_min) * width + (v.i - w.i_min); };
    auto global = [&](std::int64_t idx) { return Vertex{w.i_min + idx % width, w.j_min + idx / width}; };

    const auto n_vertices = static_cast<std::size_t>(w.vertex_count());
    std::vector<std::array<std::int64_t, 2>> adj(n_vertices, {-1, -1});
    std::vector<std::uint8_t> degree(n_vertices, 0);
    for (const SegmentId& seg : design.side(side)) {
        auto [a, b] = segment_endpoints(seg);
        const std::int64_t la = local(a);
        const std::int64_t lb = local(b);
        if (degree[la] == 2 || degree[lb] == 2) {
            throw std::logic_error("vertex of degree > 2 on one side; design is not dilute");
        }
        adj[la][degree[la]++] = lb;
        adj[lb][degree[lb]++] = la;
    }

    std::vector<Component> out;
    std::vector<bool> visited(n_vertices, false);
    auto walk = [&](std::int64_t start, std::int64_t first_step) {
        Component c;
        std::int64_t prev = -1;
        std::int64_t cur = start;
        std::int64_t next = first_step;
        while (true) {
            visited[cur] = true;
            c.vertices.push_back(global(cur));
            if (next < 0 || next == start) {
                c.closed = next == start;
                break;
            }
            prev = cur;
            cur = next;
            next = -1;
            for (std::uint8_t e = 0; e < degree[cur]; ++e) {
                if (adj[cur][e] != prev) next = adj[cur][e];
            }
        }
        return c;
    };

    // Open paths start at their endpoints; then everything left is a loop.
    for (std::size_t v = 0; v < n_vertices; ++v) {
        if (degree[v] == 1 && !visited[v]) out.push_back(walk(static_cast<std::int64_t>(v), adj[v][0]));
    }
    // Scanning in (j, i) order; convert to the (i, j) least vertex afterwards.
    for (std::size_t v = 0; v < n_vertices; ++v) {
        if (degree[v] != 2 || visited[v]) continue;
        Component c = walk(static_cast<std::int64_t>(v), std::min(adj[v][0], adj[v][1]));
        auto least = std::min_element(c.vertices.begin(), c.vertices.end());
        std::rotate(c.vertices.begin(), least, c.vertices.end());
        out.push_back(std::move(c));
    }
    return out;
}

std::vector<Cycle> closed_cycles(const Design& design, Side side) {
    std::vector<Cycle> cycles;
    for (Component& c : build_components(design, side)) {
        if (c.closed) cycles.emplace_back(std::move(c.vertices));
    }
    return cycles;
}

MotifCensus motif_census(const Design& design, Side side) {
    MotifCensus census;
    for (const Component& c : build_components(design, side)) {
        if (!c.closed) {
            ++census.open_paths;
            continue;
        }
        std::vector<std::uint8_t> dirs(c.vertices.size());
        for (std::size_t n = 0; n < c.vertices.size(); ++n) {
            dirs[n] = static_cast<std::uint8_t>(
                direction_index(c.vertices[(n + 1) % c.vertices.size()] - c.vertices[n]));
        }
        ++census.counts[canonical_signature(dirs)];
    }
    return census;
}

bool cycle_matches(const Cycle& cycle, const Cycle& reference) {
    return cycle.length() == reference.length() && signature_of(cycle) == signature_of(reference);
}

}  // namespace hitomezashi
