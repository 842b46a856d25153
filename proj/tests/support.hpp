#pragma once

// Shared fixtures and independent oracles for the test suites. The planar K4
// embedding below was traced by hand from its rotation system and acts as the
// reference for the face-tracing tests; the orientability oracle enumerates
// simple cycles directly instead of using the library's spanning-tree check.

#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include <cubemb/cubemb.hpp>

namespace testsupport {

// Planar embedding of K4 (neighbor order 0:(1,2,3), 1:(0,3,2), 2:(0,1,3),
// 3:(0,2,1), all signs positive). Its faces are the four triangles.
inline cubemb::Embedding planar_k4() {
    cubemb::Embedding emb;
    emb.rotation = {{0, 2, 4}, {1, 8, 6}, {3, 7, 10}, {5, 11, 9}};
    emb.signature = {1, 1, 1, 1, 1, 1};
    return emb;
}

// Planar embedding of the theta multigraph: three 2-gon faces.
inline cubemb::Embedding planar_theta() {
    cubemb::Embedding emb;
    emb.rotation = {{0, 2, 4}, {1, 5, 3}};
    emb.signature = {1, 1, 1};
    return emb;
}

// All simple cycles of a small multigraph, found by brute force over edge
// subsets: a subset is a cycle iff every touched vertex has degree exactly 2
// and the touched vertices are connected. Independent of the library's
// orientability routine.
inline std::vector<std::vector<int>> all_simple_cycles(const cubemb::CubicGraph& g) {
    std::vector<std::vector<int>> cycles;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << g.m); ++mask) {
        std::vector<int> deg(g.n, 0);
        std::vector<int> members;
        for (int e = 0; e < g.m; ++e)
            if (mask >> e & 1) {
                ++deg[g.edges[e][0]];
                ++deg[g.edges[e][1]];
                members.push_back(e);
            }
        bool ok = true;
        int touched = 0;
        for (int v = 0; v < g.n; ++v) {
            if (deg[v] == 0) continue;
            if (deg[v] != 2) {
                ok = false;
                break;
            }
            ++touched;
        }
        if (!ok || touched == 0) continue;
        // connectivity of the touched subgraph
        std::vector<char> seen(g.n, 0);
        int start = -1;
        for (int v = 0; v < g.n; ++v)
            if (deg[v] == 2) {
                start = v;
                break;
            }
        std::vector<int> stack{start};
        seen[start] = 1;
        int reached = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int e : members) {
                if (g.edges[e][0] != v && g.edges[e][1] != v) continue;
                int w = g.other_end(e, v);
                if (!seen[w]) {
                    seen[w] = 1;
                    ++reached;
                    stack.push_back(w);
                }
            }
        }
        if (reached == touched) cycles.push_back(members);
    }
    return cycles;
}

// Orientable iff every simple cycle has positive signature product.
inline bool orientable_by_cycle_oracle(const cubemb::CubicGraph& g,
                                       const std::vector<int>& signature) {
    for (const auto& cycle : all_simple_cycles(g)) {
        int prod = 1;
        for (int e : cycle) prod *= signature[e];
        if (prod < 0) return false;
    }
    return true;
}

inline std::multiset<std::multiset<int>> face_vertex_sets(const cubemb::CubicGraph& g,
                                                          const cubemb::FaceSet& fs) {
    std::multiset<std::multiset<int>> out;
    for (const auto& w : fs.walks) {
        std::multiset<int> verts;
        for (int pos = 0; pos < w.length(); ++pos) verts.insert(w.tail_at(g, pos));
        out.insert(std::move(verts));
    }
    return out;
}

inline std::multiset<int> walk_edge_multiset(const cubemb::FacialWalk& w) {
    std::multiset<int> out;
    for (const auto& s : w.steps) out.insert(cubemb::dart_edge(s.dart));
    return out;
}

// Distinct edge ids of a walk, for face intersections.
inline std::set<int> walk_edge_set(const cubemb::FacialWalk& w) {
    std::set<int> out;
    for (const auto& s : w.steps) out.insert(cubemb::dart_edge(s.dart));
    return out;
}

}  // namespace testsupport
