#pragma once

// Signed combinatorial embeddings of cubic graphs.
//
// An embedding is a rotation system pi (a cyclic order of the three darts with
// tail v, for every vertex v) together with a signature lambda: E -> {+1,-1}.
// Faces are traced on 4m states (dart, sense):
//
//     from (d = u->v along edge e, sense s):
//         s' = s * lambda(e)
//         next dart = rotation successor of reverse(d) at v   if s' = +1
//                     rotation predecessor of reverse(d) at v  if s' = -1
//         next state = (next dart, s')
//
// Orbits of this permutation occur in mirror pairs traversing the same edges
// in reversed order; one representative per pair is a facial walk. Mirrors are
// paired by matching reversed dart sequences rather than by a closed-form
// state map, and the pairing is validated by the "every edge is traversed
// exactly twice" invariant.

#include <cstdint>
#include <map>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "graph.hpp"

namespace cubemb {

using Rotation = std::vector<std::array<int, 3>>;  // dart ids, one triple per vertex

struct Embedding {
    Rotation rotation;           // canonical anchor: smallest dart id first
    std::vector<int> signature;  // +1 or -1 per edge
};

// Rotate a triple so its smallest element comes first; the cyclic order is
// preserved, only the anchor changes.
inline std::array<int, 3> canonical_triple(std::array<int, 3> t) {
    int k = 0;
    if (t[1] < t[k]) k = 1;
    if (t[2] < t[k]) k = 2;
    return {t[k], t[(k + 1) % 3], t[(k + 2) % 3]};
}

inline bool cyclically_equal(const std::array<int, 3>& a, const std::array<int, 3>& b) {
    return canonical_triple(a) == canonical_triple(b);
}

// Rotation bit 0 picks (a,b,c) with a<b<c; bit 1 picks (a,c,b). These are the
// two cyclic orders of three darts, and the encoding used by enumeration.
inline std::array<int, 3> rotation_from_bit(const CubicGraph& g, int v, int bit) {
    auto d = g.darts_at(v);
    std::sort(d.begin(), d.end());
    if (bit) std::swap(d[1], d[2]);
    return d;
}

inline Embedding canonical_embedding(const CubicGraph& g) {
    Embedding emb;
    emb.rotation.reserve(g.n);
    for (int v = 0; v < g.n; ++v) emb.rotation.push_back(rotation_from_bit(g, v, 0));
    emb.signature.assign(g.m, +1);
    return emb;
}

inline void validate_embedding(const CubicGraph& g, const Embedding& emb) {
    if (static_cast<int>(emb.rotation.size()) != g.n)
        throw std::invalid_argument("embedding has " + std::to_string(emb.rotation.size()) +
                                    " rotation triples for " + std::to_string(g.n) + " vertices");
    if (static_cast<int>(emb.signature.size()) != g.m)
        throw std::invalid_argument("embedding has " + std::to_string(emb.signature.size()) +
                                    " signature entries for " + std::to_string(g.m) + " edges");
    for (int v = 0; v < g.n; ++v) {
        auto expect = g.darts_at(v);
        std::sort(expect.begin(), expect.end());
        auto got = emb.rotation[v];
        std::sort(got.begin(), got.end());
        if (expect != got)
            throw std::invalid_argument("rotation at vertex " + std::to_string(v) +
                                        " does not list the darts with tail " +
                                        std::to_string(v));
    }
    for (int e = 0; e < g.m; ++e)
        if (emb.signature[e] != 1 && emb.signature[e] != -1)
            throw std::invalid_argument("signature of edge " + std::to_string(e) +
                                        " must be +1 or -1");
}

inline void canonicalize(Embedding& emb) {
    for (auto& t : emb.rotation) t = canonical_triple(t);
}

inline int rotation_successor(const Embedding& emb, int v, int dart_id) {
    const auto& t = emb.rotation[v];
    for (int i = 0; i < 3; ++i)
        if (t[i] == dart_id) return t[(i + 1) % 3];
    throw std::logic_error("dart " + std::to_string(dart_id) + " not in rotation at vertex " +
                           std::to_string(v));
}

inline int rotation_predecessor(const Embedding& emb, int v, int dart_id) {
    const auto& t = emb.rotation[v];
    for (int i = 0; i < 3; ++i)
        if (t[i] == dart_id) return t[(i + 2) % 3];
    throw std::logic_error("dart " + std::to_string(dart_id) + " not in rotation at vertex " +
                           std::to_string(v));
}

// Uniform over the two cyclic rotations per vertex and the two signs per edge.
inline Embedding random_embedding(const CubicGraph& g, std::mt19937_64& rng) {
    Embedding emb;
    emb.rotation.reserve(g.n);
    for (int v = 0; v < g.n; ++v)
        emb.rotation.push_back(rotation_from_bit(g, v, static_cast<int>(rng() & 1)));
    emb.signature.resize(g.m);
    for (int e = 0; e < g.m; ++e) emb.signature[e] = (rng() & 1) ? -1 : +1;
    return emb;
}

// One step of the face-tracing permutation. States are (dart, sense) with
// state id = 2*dart + (sense < 0).
struct TraceState {
    int dart = -1;
    int sense = +1;

    int id() const { return 2 * dart + (sense < 0 ? 1 : 0); }
    static TraceState from_id(int id) { return {id >> 1, (id & 1) ? -1 : +1}; }
    friend bool operator==(const TraceState&, const TraceState&) = default;
};

inline TraceState trace_step(const CubicGraph& g, const Embedding& emb, TraceState s) {
    const int e = dart_edge(s.dart);
    const int sense = s.sense * emb.signature[e];
    const int v = g.head(s.dart);
    const int back = reverse_dart(s.dart);
    const int next =
        sense > 0 ? rotation_successor(emb, v, back) : rotation_predecessor(emb, v, back);
    return {next, sense};
}

struct FacialWalk {
    std::vector<TraceState> steps;  // cyclic; anchored at the smallest state id

    int length() const { return static_cast<int>(steps.size()); }
    int edge_at(int pos) const { return dart_edge(steps[pos].dart); }
    int tail_at(const CubicGraph& g, int pos) const { return g.tail(steps[pos].dart); }
    int head_at(const CubicGraph& g, int pos) const { return g.head(steps[pos].dart); }

    // The walk as the alternating sequence v0, e1, v1, e2, ..., v_{t-1}, e_t.
    std::vector<int> alternating_sequence(const CubicGraph& g) const {
        std::vector<int> seq;
        seq.reserve(2 * steps.size());
        for (const auto& s : steps) {
            seq.push_back(g.tail(s.dart));
            seq.push_back(dart_edge(s.dart));
        }
        return seq;
    }
};

struct EdgeTraversal {
    int walk = -1;
    int pos = -1;
    int end = 0;  // dart end bit: 0 traverses endpoint[0]->endpoint[1]
    friend bool operator==(const EdgeTraversal&, const EdgeTraversal&) = default;
};

struct FaceSet {
    int n = 0;
    int m = 0;
    std::vector<FacialWalk> walks;
    std::vector<std::array<EdgeTraversal, 2>> edge_traversals;  // per edge, (walk,pos) order

    int face_count() const { return static_cast<int>(walks.size()); }
};

enum class EdgeClass { Regular, GoodSingular, BadSingular };

inline const char* to_string(EdgeClass c) {
    switch (c) {
        case EdgeClass::Regular: return "regular";
        case EdgeClass::GoodSingular: return "good_singular";
        case EdgeClass::BadSingular: return "bad_singular";
    }
    return "?";
}

struct ClassCounts {
    int bad = 0;
    int good = 0;
    int regular = 0;

    int singular() const { return bad + good; }
    int total() const { return bad + good + regular; }
    friend bool operator==(const ClassCounts&, const ClassCounts&) = default;
};

namespace detail {

// Lexicographically least cyclic rotation (plain O(t^2) scan; walks are short).
inline std::vector<int> least_cyclic_rotation(const std::vector<int>& seq) {
    const size_t t = seq.size();
    size_t best = 0;
    for (size_t cand = 1; cand < t; ++cand) {
        for (size_t k = 0; k < t; ++k) {
            int a = seq[(cand + k) % t];
            int b = seq[(best + k) % t];
            if (a != b) {
                if (a < b) best = cand;
                break;
            }
        }
    }
    std::vector<int> out(t);
    for (size_t k = 0; k < t; ++k) out[k] = seq[(best + k) % t];
    return out;
}

inline std::vector<int> mirror_dart_sequence(const std::vector<int>& darts) {
    std::vector<int> out(darts.rbegin(), darts.rend());
    for (int& d : out) d = reverse_dart(d);
    return out;
}

}  // namespace detail

inline std::vector<int> walk_darts(const FacialWalk& w) {
    std::vector<int> out;
    out.reserve(w.steps.size());
    for (const auto& s : w.steps) out.push_back(s.dart);
    return out;
}

// Direction- and anchor-invariant key identifying a facial walk as a closed
// walk of the graph. Two embeddings have "the same facial walks" iff their
// multisets of keys agree.
inline std::vector<int> face_key(const FacialWalk& w) {
    auto darts = walk_darts(w);
    auto k1 = detail::least_cyclic_rotation(darts);
    auto k2 = detail::least_cyclic_rotation(detail::mirror_dart_sequence(darts));
    return k1 < k2 ? k1 : k2;
}

inline std::vector<std::vector<int>> face_multiset_key(const FaceSet& fs) {
    std::vector<std::vector<int>> keys;
    keys.reserve(fs.walks.size());
    for (const auto& w : fs.walks) keys.push_back(face_key(w));
    std::sort(keys.begin(), keys.end());
    return keys;
}

inline FaceSet trace_faces(const CubicGraph& g, const Embedding& emb) {
    validate_embedding(g, emb);
    const int n_states = 4 * g.m;
    std::vector<char> visited(n_states, 0);
    std::vector<std::vector<TraceState>> orbits;

    for (int s0 = 0; s0 < n_states; ++s0) {
        if (visited[s0]) continue;
        std::vector<TraceState> orbit;
        TraceState s = TraceState::from_id(s0);
        do {
            visited[s.id()] = 1;
            orbit.push_back(s);
            s = trace_step(g, emb, s);
        } while (s.id() != s0);
        orbits.push_back(std::move(orbit));
    }

    // Pair each orbit with its mirror: the orbit traversing the reversed darts
    // in reversed cyclic order. Orbit indices ascend with their smallest state
    // id (states are scanned in order), so keeping the earlier orbit of each
    // pair keeps the one containing the globally smallest state id.
    std::map<std::vector<int>, std::vector<size_t>> by_key;
    std::vector<std::vector<int>> own_key(orbits.size());
    for (size_t i = 0; i < orbits.size(); ++i) {
        std::vector<int> darts;
        darts.reserve(orbits[i].size());
        for (const auto& s : orbits[i]) darts.push_back(s.dart);
        own_key[i] = detail::least_cyclic_rotation(darts);
        by_key[own_key[i]].push_back(i);
    }
    std::vector<int> partner(orbits.size(), -1);
    for (size_t i = 0; i < orbits.size(); ++i) {
        if (partner[i] != -1) continue;
        std::vector<int> darts;
        darts.reserve(orbits[i].size());
        for (const auto& s : orbits[i]) darts.push_back(s.dart);
        auto mirror_key = detail::least_cyclic_rotation(detail::mirror_dart_sequence(darts));
        auto it = by_key.find(mirror_key);
        int chosen = -1;
        if (it != by_key.end()) {
            for (size_t j : it->second) {
                if (j != i && partner[j] == -1) {
                    chosen = static_cast<int>(j);
                    break;
                }
            }
        }
        if (chosen == -1)
            throw std::logic_error("face orbit has no mirror partner (orbit of length " +
                                   std::to_string(orbits[i].size()) +
                                   "); self-mirror orbits should be impossible");
        partner[i] = chosen;
        partner[chosen] = static_cast<int>(i);
    }

    FaceSet fs;
    fs.n = g.n;
    fs.m = g.m;
    for (size_t i = 0; i < orbits.size(); ++i) {
        if (partner[i] >= 0 && static_cast<size_t>(partner[i]) < i) continue;  // mirror kept
        fs.walks.push_back(FacialWalk{std::move(orbits[i])});
    }

    fs.edge_traversals.assign(g.m, {EdgeTraversal{}, EdgeTraversal{}});
    std::vector<int> seen(g.m, 0);
    int total_len = 0;
    for (size_t w = 0; w < fs.walks.size(); ++w) {
        const auto& walk = fs.walks[w];
        total_len += walk.length();
        for (int pos = 0; pos < walk.length(); ++pos) {
            int d = walk.steps[pos].dart;
            int e = dart_edge(d);
            if (seen[e] >= 2)
                throw std::logic_error("edge " + std::to_string(e) +
                                       " traversed more than twice; mirror pairing failed");
            fs.edge_traversals[e][seen[e]++] = {static_cast<int>(w), pos, d & 1};
        }
    }
    if (total_len != 2 * g.m)
        throw std::logic_error("face walk lengths sum to " + std::to_string(total_len) +
                               ", expected 2m = " + std::to_string(2 * g.m));
    for (int e = 0; e < g.m; ++e)
        if (seen[e] != 2)
            throw std::logic_error("edge " + std::to_string(e) + " traversed " +
                                   std::to_string(seen[e]) + " times, expected 2");
    return fs;
}

inline int euler_characteristic(const CubicGraph& g, const FaceSet& fs) {
    return g.n - g.m + fs.face_count();
}

// True iff every cycle of g has positive signature product, i.e. lambda is
// equivalent to the all-positive signature under vertex sign flips.
inline bool is_orientable(const CubicGraph& g, const Embedding& emb) {
    validate_embedding(g, emb);
    std::vector<int> sign(g.n, 0);
    for (int root = 0; root < g.n; ++root) {
        if (sign[root] != 0) continue;
        sign[root] = +1;
        std::vector<int> queue{root};
        std::vector<int> via(g.n, -1);
        while (!queue.empty()) {
            int v = queue.back();
            queue.pop_back();
            for (int e : g.incidence[v]) {
                int w = g.other_end(e, v);
                if (sign[w] == 0) {
                    sign[w] = sign[v] * emb.signature[e];
                    via[w] = e;
                    queue.push_back(w);
                } else if (e != via[v]) {
                    if (emb.signature[e] != sign[v] * sign[w]) return false;
                }
            }
        }
    }
    return true;
}

inline std::vector<EdgeClass> classify_edges(const FaceSet& fs) {
    std::vector<EdgeClass> out(fs.m);
    for (int e = 0; e < fs.m; ++e) {
        const auto& [a, b] = fs.edge_traversals[e];
        if (a.walk != b.walk)
            out[e] = EdgeClass::Regular;
        else if (a.end == b.end)
            out[e] = EdgeClass::GoodSingular;  // same direction twice
        else
            out[e] = EdgeClass::BadSingular;  // opposite directions
    }
    return out;
}

inline ClassCounts count_classes(const FaceSet& fs) {
    ClassCounts c;
    for (EdgeClass k : classify_edges(fs)) {
        if (k == EdgeClass::BadSingular)
            ++c.bad;
        else if (k == EdgeClass::GoodSingular)
            ++c.good;
        else
            ++c.regular;
    }
    return c;
}

// Circular <=> no singular edge. In a cubic graph every facial walk of a
// singular-free embedding is a cycle: repeating a vertex needs four darts.
inline bool is_circular(const FaceSet& fs) {
    for (int e = 0; e < fs.m; ++e)
        if (fs.edge_traversals[e][0].walk == fs.edge_traversals[e][1].walk) return false;
    return true;
}

}  // namespace cubemb
