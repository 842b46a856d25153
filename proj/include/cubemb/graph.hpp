#pragma once

// Bridgeless cubic (multi)graphs: edge-list parsing, validation, a catalog of
// named graphs, configuration-model random generation, perfect matchings and
// complementary 2-factors.
//
// Conventions used throughout the library:
//   - vertex ids 0..n-1, edge ids 0..m-1, both dense
//   - parallel edges are allowed and tracked by edge id; loops are rejected
//     (a loop at a cubic vertex forces a bridge)
//   - a dart is a directed traversal of an edge; edge e yields dart 2e
//     (endpoint[0] -> endpoint[1]) and dart 2e+1 (the reverse)

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace cubemb {

struct Dart {
    int edge = -1;
    int end = 0;  // which endpoint of the edge is the tail

    constexpr int id() const { return 2 * edge + end; }
    static constexpr Dart from_id(int id) { return Dart{id >> 1, id & 1}; }
    constexpr Dart reversed() const { return Dart{edge, 1 - end}; }
    friend constexpr bool operator==(const Dart&, const Dart&) = default;
};

constexpr int reverse_dart(int dart_id) { return dart_id ^ 1; }
constexpr int dart_edge(int dart_id) { return dart_id >> 1; }

struct CubicGraph {
    int n = 0;
    int m = 0;
    std::vector<std::array<int, 2>> edges;      // endpoint pairs, by edge id
    std::vector<std::array<int, 3>> incidence;  // incident edge ids, by vertex
    bool bridgeless = false;                    // cached at construction

    int tail(int dart_id) const { return edges[dart_id >> 1][dart_id & 1]; }
    int head(int dart_id) const { return edges[dart_id >> 1][1 - (dart_id & 1)]; }

    // The dart of edge e whose tail is v. Precondition: v is an endpoint of e.
    int dart_at(int e, int v) const {
        if (edges[e][0] == v) return 2 * e;
        if (edges[e][1] == v) return 2 * e + 1;
        throw std::invalid_argument("vertex " + std::to_string(v) +
                                    " is not an endpoint of edge " + std::to_string(e));
    }

    // Darts with tail v, in incidence order (ascending edge id).
    std::array<int, 3> darts_at(int v) const {
        return {dart_at(incidence[v][0], v), dart_at(incidence[v][1], v),
                dart_at(incidence[v][2], v)};
    }

    int other_end(int e, int v) const {
        return edges[e][0] == v ? edges[e][1] : edges[e][0];
    }
};

namespace detail {

inline bool compute_connected(int n, const std::vector<std::array<int, 2>>& edges,
                              const std::vector<std::vector<int>>& inc) {
    if (n == 0) return true;
    std::vector<char> seen(n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int e : inc[v]) {
            int w = edges[e][0] == v ? edges[e][1] : edges[e][0];
            if (!seen[w]) {
                seen[w] = 1;
                ++reached;
                stack.push_back(w);
            }
        }
    }
    return reached == n;
}

// Iterative low-link bridge detection; parallel edges handled by skipping only
// the arrival edge id, so a parallel pair never counts as a bridge.
inline bool compute_bridgeless(int n, int m, const std::vector<std::array<int, 2>>& edges,
                               const std::vector<std::vector<int>>& inc) {
    std::vector<int> disc(n, -1), low(n, 0);
    int timer = 0;
    struct Frame {
        int v;
        int via_edge;
        size_t next;
    };
    for (int root = 0; root < n; ++root) {
        if (disc[root] != -1) continue;
        std::vector<Frame> stack{{root, -1, 0}};
        disc[root] = low[root] = timer++;
        while (!stack.empty()) {
            Frame& f = stack.back();
            if (f.next < inc[f.v].size()) {
                int e = inc[f.v][f.next++];
                if (e == f.via_edge) continue;
                int w = edges[e][0] == f.v ? edges[e][1] : edges[e][0];
                if (disc[w] == -1) {
                    disc[w] = low[w] = timer++;
                    stack.push_back({w, e, 0});
                } else {
                    low[f.v] = std::min(low[f.v], disc[w]);
                }
            } else {
                int v = f.v;
                stack.pop_back();
                if (!stack.empty()) {
                    int p = stack.back().v;
                    low[p] = std::min(low[p], low[v]);
                    if (low[v] > disc[p]) return false;  // f.via_edge is a bridge
                }
            }
        }
    }
    (void)m;
    return true;
}

}  // namespace detail

inline CubicGraph make_cubic_graph(int n, std::vector<std::array<int, 2>> edge_list) {
    if (n <= 0 || n % 2 != 0)
        throw std::invalid_argument("vertex count must be positive and even, got " +
                                    std::to_string(n));
    const int m = static_cast<int>(edge_list.size());
    if (m != 3 * n / 2)
        throw std::invalid_argument("edge count " + std::to_string(m) + " != 3n/2 = " +
                                    std::to_string(3 * n / 2));
    std::vector<std::vector<int>> inc(n);
    for (int e = 0; e < m; ++e) {
        auto [u, v] = edge_list[e];
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("edge " + std::to_string(e) + " endpoint out of range");
        if (u == v)
            throw std::invalid_argument("loop edge " + std::to_string(e) + " at vertex " +
                                        std::to_string(u));
        inc[u].push_back(e);
        inc[v].push_back(e);
    }
    CubicGraph g;
    g.n = n;
    g.m = m;
    g.edges = std::move(edge_list);
    g.incidence.resize(n);
    for (int v = 0; v < n; ++v) {
        if (inc[v].size() != 3)
            throw std::invalid_argument("vertex " + std::to_string(v) + " has degree " +
                                        std::to_string(inc[v].size()) + ", expected 3");
        std::copy(inc[v].begin(), inc[v].end(), g.incidence[v].begin());
    }
    g.bridgeless = detail::compute_bridgeless(n, m, g.edges, inc);
    return g;
}

inline bool is_bridgeless(const CubicGraph& g) { return g.bridgeless; }

inline bool is_connected(const CubicGraph& g) {
    std::vector<std::vector<int>> inc(g.n);
    for (int v = 0; v < g.n; ++v)
        inc[v].assign(g.incidence[v].begin(), g.incidence[v].end());
    return detail::compute_connected(g.n, g.edges, inc);
}

// Edge-list text format: first non-comment line "n m", then m lines "u v".
// '#' starts a comment line. Edge id = order of appearance.
inline CubicGraph parse_graph(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int n = -1, m = -1;
    std::vector<std::array<int, 2>> edges;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        int a, b;
        if (!(ls >> a)) continue;  // blank or comment-only line
        std::string trailing;
        if (!(ls >> b) || (ls >> trailing)) {
            throw std::invalid_argument("malformed line " + std::to_string(lineno) +
                                        ": expected two integers");
        }
        if (n < 0) {
            n = a;
            m = b;
            if (m < 0) throw std::invalid_argument("header declares negative edge count");
            continue;
        }
        if (static_cast<int>(edges.size()) == m)
            throw std::invalid_argument("line " + std::to_string(lineno) +
                                        ": extra line after " + std::to_string(m) +
                                        " edges (duplicate header?)");
        edges.push_back({a, b});
    }
    if (n < 0) throw std::invalid_argument("empty graph document");
    if (static_cast<int>(edges.size()) != m)
        throw std::invalid_argument("expected " + std::to_string(m) + " edges, found " +
                                    std::to_string(edges.size()));
    return make_cubic_graph(n, std::move(edges));
}

inline std::string to_edge_list_text(const CubicGraph& g) {
    std::ostringstream out;
    out << g.n << ' ' << g.m << '\n';
    for (const auto& [u, v] : g.edges) out << u << ' ' << v << '\n';
    return out.str();
}

// Catalog graphs with fixed canonical numbering (documented in the README).
inline CubicGraph named_graph(const std::string& name) {
    if (name == "theta") {
        return make_cubic_graph(2, {{0, 1}, {0, 1}, {0, 1}});
    }
    if (name == "k4") {
        return make_cubic_graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    }
    if (name == "k33") {
        std::vector<std::array<int, 2>> e;
        for (int u = 0; u < 3; ++u)
            for (int v = 3; v < 6; ++v) e.push_back({u, v});
        return make_cubic_graph(6, std::move(e));
    }
    if (name == "petersen") {
        std::vector<std::array<int, 2>> e;
        for (int i = 0; i < 5; ++i) e.push_back({i, (i + 1) % 5});      // outer cycle
        for (int i = 0; i < 5; ++i) e.push_back({i, i + 5});            // spokes
        for (int i = 0; i < 5; ++i) e.push_back({5 + i, 5 + (i + 2) % 5});  // pentagram
        return make_cubic_graph(10, std::move(e));
    }
    if (name.rfind("prism_", 0) == 0) {
        int k = 0;
        try {
            size_t pos = 0;
            k = std::stoi(name.substr(6), &pos);
            if (pos != name.size() - 6) k = 0;
        } catch (const std::exception&) {
            k = 0;
        }
        if (k < 3) throw std::invalid_argument("prism_k requires integer k >= 3: " + name);
        std::vector<std::array<int, 2>> e;
        for (int i = 0; i < k; ++i) e.push_back({i, (i + 1) % k});
        for (int i = 0; i < k; ++i) e.push_back({k + i, k + (i + 1) % k});
        for (int i = 0; i < k; ++i) e.push_back({i, k + i});
        return make_cubic_graph(2 * k, std::move(e));
    }
    throw std::invalid_argument("unknown graph name: " + name);
}

struct RandomCubicStats {
    int attempts = 0;
    int loop_rejections = 0;
    int connectivity_rejections = 0;
};

// Configuration-model pairing with rejection of loops, retried until the
// result is connected and bridgeless. Deterministic for a fixed engine state.
inline CubicGraph random_cubic(int n, std::mt19937_64& rng, RandomCubicStats* stats = nullptr,
                               int max_attempts = 10000) {
    if (n < 4 || n % 2 != 0)
        throw std::invalid_argument("random cubic graph requires even n >= 4, got " +
                                    std::to_string(n));
    RandomCubicStats local;
    for (local.attempts = 1; local.attempts <= max_attempts; ++local.attempts) {
        std::vector<int> points;
        points.reserve(3 * n);
        for (int v = 0; v < n; ++v)
            for (int c = 0; c < 3; ++c) points.push_back(v);
        for (size_t i = points.size() - 1; i > 0; --i) {
            size_t j = static_cast<size_t>(rng() % (i + 1));
            std::swap(points[i], points[j]);
        }
        bool loop = false;
        std::vector<std::array<int, 2>> edges;
        edges.reserve(3 * n / 2);
        for (size_t i = 0; i + 1 < points.size(); i += 2) {
            int u = points[i], v = points[i + 1];
            if (u == v) {
                loop = true;
                break;
            }
            edges.push_back({std::min(u, v), std::max(u, v)});
        }
        if (loop) {
            ++local.loop_rejections;
            continue;
        }
        CubicGraph g = make_cubic_graph(n, std::move(edges));
        if (!g.bridgeless || !is_connected(g)) {
            ++local.connectivity_rejections;
            continue;
        }
        if (stats) *stats = local;
        return g;
    }
    throw std::runtime_error("random cubic generation failed after " +
                             std::to_string(max_attempts) + " attempts");
}

struct Matching {
    std::vector<int> edges;  // sorted edge ids

    bool is_perfect(const CubicGraph& g) const {
        return static_cast<int>(edges.size()) == g.n / 2;
    }
    bool contains(int e) const {
        return std::binary_search(edges.begin(), edges.end(), e);
    }
};

namespace detail {

inline bool matching_search(const CubicGraph& g, std::vector<char>& covered,
                            std::vector<int>& chosen) {
    int v = -1;
    for (int u = 0; u < g.n; ++u)
        if (!covered[u]) {
            v = u;
            break;
        }
    if (v == -1) return true;
    for (int e : g.incidence[v]) {  // ascending edge id: deterministic tie-break
        int w = g.other_end(e, v);
        if (covered[w]) continue;
        covered[v] = covered[w] = 1;
        chosen.push_back(e);
        if (matching_search(g, covered, chosen)) return true;
        chosen.pop_back();
        covered[v] = covered[w] = 0;
    }
    return false;
}

}  // namespace detail

// Deterministic perfect matching (lowest-vertex, lowest-edge-id backtracking).
// Existence is guaranteed for bridgeless cubic graphs.
inline Matching perfect_matching(const CubicGraph& g) {
    std::vector<char> covered(g.n, 0);
    std::vector<int> chosen;
    if (!detail::matching_search(g, covered, chosen))
        throw std::runtime_error(
            "no perfect matching found; input is not a bridgeless cubic graph");
    std::sort(chosen.begin(), chosen.end());
    return Matching{std::move(chosen)};
}

struct Cycle {
    std::vector<int> vertices;  // cyclic; edges[i] joins vertices[i], vertices[i+1]
    std::vector<int> edges;
};

// Decompose the complement of a perfect matching into vertex-disjoint cycles.
// Each cycle starts at its smallest vertex and leaves it along the smaller
// available edge id, so the traversal (and orientation) is deterministic.
inline std::vector<Cycle> two_factor_cycles(const CubicGraph& g, const Matching& matching) {
    if (!matching.is_perfect(g))
        throw std::invalid_argument("matching of size " + std::to_string(matching.edges.size()) +
                                    " is not perfect for n = " + std::to_string(g.n));
    for (size_t i = 0; i + 1 < matching.edges.size(); ++i) {
        // reject shared endpoints while we're at it
        for (size_t j = i + 1; j < matching.edges.size(); ++j) {
            const auto& a = g.edges[matching.edges[i]];
            const auto& b = g.edges[matching.edges[j]];
            if (a[0] == b[0] || a[0] == b[1] || a[1] == b[0] || a[1] == b[1])
                throw std::invalid_argument("matching edges " + std::to_string(matching.edges[i]) +
                                            " and " + std::to_string(matching.edges[j]) +
                                            " share a vertex");
        }
    }
    std::vector<char> in_matching(g.m, 0);
    for (int e : matching.edges) in_matching[e] = 1;
    std::vector<char> used(g.m, 0);
    std::vector<Cycle> cycles;
    for (int start = 0; start < g.n; ++start) {
        bool has_unused = false;
        for (int e : g.incidence[start])
            if (!in_matching[e] && !used[e]) has_unused = true;
        if (!has_unused) continue;
        Cycle c;
        int v = start;
        while (true) {
            c.vertices.push_back(v);
            int next_edge = -1;
            for (int e : g.incidence[v])
                if (!in_matching[e] && !used[e] && (next_edge == -1 || e < next_edge))
                    next_edge = e;
            if (next_edge == -1)
                throw std::logic_error("2-factor traversal stuck at vertex " + std::to_string(v));
            used[next_edge] = 1;
            c.edges.push_back(next_edge);
            v = g.other_end(next_edge, v);
            if (v == start) break;
        }
        cycles.push_back(std::move(c));
    }
    return cycles;
}

}  // namespace cubemb
