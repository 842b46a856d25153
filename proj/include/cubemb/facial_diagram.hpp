#pragma once

// The facial diagram H of an embedding: one node per edge traversal (2m
// total), facial links between walk-consecutive nodes (labelled by the shared
// vertex), and one singular or regular link per edge of G. Singular links
// carry a sign: '+' when the edge is traversed twice in opposite directions
// (bad singular), '-' when traversed twice in the same direction (good
// singular). H is cubic: every node meets two facial links and one edge link.

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "embedding.hpp"
#include "graph.hpp"

namespace cubemb {

struct FDNode {
    int id = -1;
    int walk = -1;
    int pos = -1;
    int edge = -1;
};

enum class LinkKind { Facial, Singular, Regular };

struct FDLink {
    int a = -1;
    int b = -1;
    LinkKind kind = LinkKind::Facial;
    int vertex = -1;  // facial links: the shared vertex of G
    int sign = 0;     // singular links: +1 bad, -1 good
    int edge = -1;    // singular/regular links: the underlying edge of G
};

// One traversal as seen by the structural checkers: edge plus direction.
struct WalkStep {
    int edge = -1;
    int tail = -1;
    int head = -1;
    friend bool operator==(const WalkStep&, const WalkStep&) = default;
};

struct FacialDiagram {
    int m = 0;
    std::vector<FDNode> nodes;
    std::vector<FDLink> links;
    std::vector<std::vector<int>> walk_nodes;        // per walk, cyclic node order
    std::vector<std::vector<WalkStep>> walk_steps;   // traversal view per walk
    std::vector<EdgeClass> classes;                  // per edge of G

    int node_degree(int id) const {
        int d = 0;
        for (const auto& l : links) d += (l.a == id) + (l.b == id);
        return d;
    }
};

inline FacialDiagram build_diagram(const CubicGraph& g, const FaceSet& fs) {
    FacialDiagram fd;
    fd.m = g.m;
    fd.classes = classify_edges(fs);

    std::vector<int> offset(fs.walks.size() + 1, 0);
    for (size_t w = 0; w < fs.walks.size(); ++w)
        offset[w + 1] = offset[w] + fs.walks[w].length();

    fd.walk_nodes.resize(fs.walks.size());
    fd.walk_steps.resize(fs.walks.size());
    for (size_t w = 0; w < fs.walks.size(); ++w) {
        const auto& walk = fs.walks[w];
        for (int pos = 0; pos < walk.length(); ++pos) {
            int id = offset[w] + pos;
            fd.nodes.push_back({id, static_cast<int>(w), pos, walk.edge_at(pos)});
            fd.walk_nodes[w].push_back(id);
            fd.walk_steps[w].push_back(
                {walk.edge_at(pos), walk.tail_at(g, pos), walk.head_at(g, pos)});
        }
    }

    // Facial links: consecutive traversals share the head of the earlier one.
    for (size_t w = 0; w < fs.walks.size(); ++w) {
        const auto& walk = fs.walks[w];
        for (int pos = 0; pos < walk.length(); ++pos) {
            int next = (pos + 1) % walk.length();
            fd.links.push_back({offset[w] + pos, offset[w] + next, LinkKind::Facial,
                                walk.head_at(g, pos), 0, -1});
        }
    }

    // One singular or regular link per edge of G.
    for (int e = 0; e < g.m; ++e) {
        const auto& [t0, t1] = fs.edge_traversals[e];
        int a = offset[t0.walk] + t0.pos;
        int b = offset[t1.walk] + t1.pos;
        if (fd.classes[e] == EdgeClass::Regular) {
            fd.links.push_back({a, b, LinkKind::Regular, -1, 0, e});
        } else {
            int sign = fd.classes[e] == EdgeClass::BadSingular ? +1 : -1;
            fd.links.push_back({a, b, LinkKind::Singular, -1, sign, e});
        }
    }
    return fd;
}

// Unordered pairs of singular links of one walk whose occurrences interleave
// cyclically: (..., e1, ..., e2, ..., e1, ..., e2, ...).
inline std::vector<std::pair<int, int>> crossing_pairs(const FacialDiagram& fd) {
    // group singular edges by walk with their two positions
    std::map<int, std::vector<std::pair<int, std::pair<int, int>>>> by_walk;
    for (const auto& l : fd.links) {
        if (l.kind != LinkKind::Singular) continue;
        const FDNode& na = fd.nodes[l.a];
        const FDNode& nb = fd.nodes[l.b];
        int p = std::min(na.pos, nb.pos), q = std::max(na.pos, nb.pos);
        by_walk[na.walk].push_back({l.edge, {p, q}});
    }
    std::vector<std::pair<int, int>> out;
    for (auto& [walk, entries] : by_walk) {
        std::sort(entries.begin(), entries.end());
        for (size_t i = 0; i < entries.size(); ++i) {
            for (size_t j = i + 1; j < entries.size(); ++j) {
                auto [p1, p2] = entries[i].second;
                auto [q1, q2] = entries[j].second;
                bool in1 = p1 < q1 && q1 < p2;
                bool in2 = p1 < q2 && q2 < p2;
                if (in1 != in2) out.push_back({entries[i].first, entries[j].first});
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline std::vector<int> saturated_vertices(const FacialDiagram& fd, const CubicGraph& g) {
    std::vector<int> out;
    for (int v = 0; v < g.n; ++v) {
        bool sat = true;
        for (int e : g.incidence[v])
            if (fd.classes[e] == EdgeClass::Regular) sat = false;
        if (sat) out.push_back(v);
    }
    return out;
}

struct PropertyViolation {
    int property = 0;
    int walk = -1;              // -1 for per-vertex properties
    std::vector<int> positions;  // positional witness (vertex id for property 5)
    std::string detail;
};

namespace detail {

// (a, e1, b, e2, c) read off consecutive traversals i, i+1 of a walk.
inline std::array<int, 5> pair_pattern(const std::vector<WalkStep>& walk, int i) {
    int j = (i + 1) % static_cast<int>(walk.size());
    return {walk[i].tail, walk[i].edge, walk[j].tail, walk[j].edge, walk[j].head};
}

inline bool has_pair(const std::vector<WalkStep>& walk, const WalkStep& first,
                     const WalkStep& second) {
    const int t = static_cast<int>(walk.size());
    for (int i = 0; i < t; ++i)
        if (walk[i] == first && walk[(i + 1) % t] == second) return true;
    return false;
}

inline std::vector<PropertyViolation> check_property1(
    const std::vector<std::vector<WalkStep>>& walks) {
    std::vector<PropertyViolation> out;
    for (size_t w = 0; w < walks.size(); ++w) {
        const int t = static_cast<int>(walks[w].size());
        std::map<std::array<int, 5>, int> first_seen;
        for (int i = 0; i < t; ++i) {
            auto key = pair_pattern(walks[w], i);
            auto [it, inserted] = first_seen.insert({key, i});
            if (!inserted) {
                std::ostringstream msg;
                msg << "pattern (" << key[0] << "," << key[1] << "," << key[2] << "," << key[3]
                    << "," << key[4] << ") repeats";
                out.push_back({1, static_cast<int>(w), {it->second, i}, msg.str()});
            }
        }
    }
    return out;
}

inline std::vector<PropertyViolation> check_property2(
    const std::vector<std::vector<WalkStep>>& walks) {
    std::vector<PropertyViolation> out;
    for (size_t w = 0; w < walks.size(); ++w) {
        const int t = static_cast<int>(walks[w].size());
        std::map<std::array<int, 5>, int> first_seen;
        for (int i = 0; i < t; ++i) first_seen.insert({pair_pattern(walks[w], i), i});
        for (int i = 0; i < t; ++i) {
            auto key = pair_pattern(walks[w], i);
            std::array<int, 5> rev{key[4], key[3], key[2], key[1], key[0]};
            auto it = first_seen.find(rev);
            if (it != first_seen.end() && key < rev) {
                std::ostringstream msg;
                msg << "pattern (" << key[0] << "," << key[1] << "," << key[2] << "," << key[3]
                    << "," << key[4] << ") and its reversal both occur";
                out.push_back({2, static_cast<int>(w), {i, it->second}, msg.str()});
            }
        }
    }
    return out;
}

inline int third_edge_at(const CubicGraph& g, int v, int e1, int e2) {
    int remaining = -1;
    bool used1 = false, used2 = false;
    for (int e : g.incidence[v]) {
        if (e == e1 && !used1) {
            used1 = true;
        } else if (e == e2 && !used2) {
            used2 = true;
        } else {
            remaining = e;
        }
    }
    if (!used1 || !used2 || remaining < 0)
        throw std::logic_error("edges " + std::to_string(e1) + ", " + std::to_string(e2) +
                               " are not both incident with vertex " + std::to_string(v));
    return remaining;
}

// Shared engine for properties 3 and 4: every consecutive same-sign singular
// pair must be accompanied by the two continuation sites through the third
// edge at the middle vertex (in either cyclic arrangement).
inline std::vector<PropertyViolation> check_consecutive_singular(
    const CubicGraph& g, const std::vector<std::vector<WalkStep>>& walks,
    const std::vector<EdgeClass>& classes, EdgeClass wanted, int property) {
    std::vector<PropertyViolation> out;
    for (size_t w = 0; w < walks.size(); ++w) {
        const auto& walk = walks[w];
        const int t = static_cast<int>(walk.size());
        for (int i = 0; i < t; ++i) {
            const WalkStep& s1 = walk[i];
            const WalkStep& s2 = walk[(i + 1) % t];
            if (classes[s1.edge] != wanted || classes[s2.edge] != wanted) continue;
            const int a = s1.tail, b = s1.head, c = s2.head;
            const int e1 = s1.edge, e2 = s2.edge;
            const int e3 = third_edge_at(g, b, e1, e2);
            const int d = g.other_end(e3, b);
            bool ok;
            if (wanted == EdgeClass::GoodSingular) {
                // (a,e1,b,e3,d) and (d,e3,b,e2,c) must appear somewhere in F
                ok = has_pair(walk, {e1, a, b}, {e3, b, d}) &&
                     has_pair(walk, {e3, d, b}, {e2, b, c});
            } else {
                // (c,e2,b,e3,d) and (d,e3,b,e1,a) must appear somewhere in F
                ok = has_pair(walk, {e2, c, b}, {e3, b, d}) &&
                     has_pair(walk, {e3, d, b}, {e1, b, a});
            }
            if (!ok) {
                std::ostringstream msg;
                msg << "consecutive " << (wanted == EdgeClass::GoodSingular ? "-" : "+")
                    << " singular pair (" << e1 << "," << e2 << ") at vertex " << b
                    << " lacks its continuation through edge " << e3;
                out.push_back({property, static_cast<int>(w), {i, (i + 1) % t}, msg.str()});
            }
        }
    }
    return out;
}

inline std::vector<PropertyViolation> check_property5(const CubicGraph& g,
                                                      const std::vector<EdgeClass>& classes) {
    std::vector<PropertyViolation> out;
    for (int v = 0; v < g.n; ++v) {
        int singular = 0, bad = 0;
        for (int e : g.incidence[v]) {
            if (classes[e] != EdgeClass::Regular) ++singular;
            if (classes[e] == EdgeClass::BadSingular) ++bad;
        }
        if (singular == 3 && bad != 1 && bad != 3) {
            std::ostringstream msg;
            msg << "saturated vertex " << v << " has " << bad << " incident + links";
            out.push_back({5, -1, {v}, msg.str()});
        }
    }
    return out;
}

}  // namespace detail

// Structural properties of the facial diagram, k in 1..5. Returns the list of
// violations (empty when the property holds); each violation carries the walk
// and the positions witnessing it.
inline std::vector<PropertyViolation> check_structural_property(const FacialDiagram& fd,
                                                                const CubicGraph& g, int k) {
    switch (k) {
        case 1: return detail::check_property1(fd.walk_steps);
        case 2: return detail::check_property2(fd.walk_steps);
        case 3:
            return detail::check_consecutive_singular(g, fd.walk_steps, fd.classes,
                                                      EdgeClass::GoodSingular, 3);
        case 4:
            return detail::check_consecutive_singular(g, fd.walk_steps, fd.classes,
                                                      EdgeClass::BadSingular, 4);
        case 5: return detail::check_property5(g, fd.classes);
        default:
            throw std::invalid_argument("structural property index must be 1..5, got " +
                                        std::to_string(k));
    }
}

// DOT rendering: facial links solid (labelled by the shared vertex), singular
// links dashed (labelled +/-), regular links dotted.
inline std::string to_dot(const FacialDiagram& fd) {
    std::ostringstream out;
    out << "graph facial_diagram {\n";
    for (const auto& n : fd.nodes)
        out << "  n" << n.id << " [label=\"w" << n.walk << "p" << n.pos << " e" << n.edge
            << "\"];\n";
    for (const auto& l : fd.links) {
        out << "  n" << l.a << " -- n" << l.b;
        switch (l.kind) {
            case LinkKind::Facial:
                out << " [style=solid, label=\"v" << l.vertex << "\"];\n";
                break;
            case LinkKind::Singular:
                out << " [style=dashed, label=\"" << (l.sign > 0 ? "+" : "-") << "\"];\n";
                break;
            case LinkKind::Regular:
                out << " [style=dotted];\n";
                break;
        }
    }
    out << "}\n";
    return out.str();
}

}  // namespace cubemb
