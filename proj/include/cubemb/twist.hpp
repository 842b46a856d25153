#pragma once

// The twist of an edge (negating its signature) and the local rotation moves
// it simulates. Twisting a regular edge merges its two faces; twisting a
// singular edge splits or re-routes its face. All operations return new
// embedding values; faces are retraced from scratch after each move.

#include <stdexcept>
#include <string>

#include "embedding.hpp"
#include "graph.hpp"

namespace cubemb {

struct TwistRecord {
    int edge = -1;
    ClassCounts before;
    ClassCounts after;
    int faces_before = 0;
    int faces_after = 0;
};

inline Embedding twist(const Embedding& emb, int e) {
    if (e < 0 || e >= static_cast<int>(emb.signature.size()))
        throw std::invalid_argument("twist: edge id " + std::to_string(e) + " out of range");
    Embedding out = emb;
    out.signature[e] = -out.signature[e];
    return out;
}

// Reverse the cyclic order of the rotation at v; the signature is unchanged.
inline Embedding local_rotation_flip(const Embedding& emb, int v) {
    if (v < 0 || v >= static_cast<int>(emb.rotation.size()))
        throw std::invalid_argument("local_rotation_flip: vertex id " + std::to_string(v) +
                                    " out of range");
    Embedding out = emb;
    auto& t = out.rotation[v];
    t = canonical_triple({t[0], t[2], t[1]});
    return out;
}

// Twist every edge incident with v, once per incidence.
inline Embedding triple_twist(const CubicGraph& g, const Embedding& emb, int v) {
    if (v < 0 || v >= g.n)
        throw std::invalid_argument("triple_twist: vertex id " + std::to_string(v) +
                                    " out of range");
    Embedding out = emb;
    for (int e : g.incidence[v]) out.signature[e] = -out.signature[e];
    return out;
}

// Given rotations pi_a and pi_b differing by local flips at some vertex set S,
// produce the signature lambda' such that (pi_a, lambda') and (pi_b, lambda)
// have the same facial walks: lambda flipped once per edge incidence at S.
// The face multiset equality is asserted; a mismatch is an implementation bug.
inline std::vector<int> reachability_equivalence_check(const CubicGraph& g, const Rotation& pi_a,
                                                       const Rotation& pi_b,
                                                       const std::vector<int>& lambda) {
    if (pi_a.size() != static_cast<size_t>(g.n) || pi_b.size() != static_cast<size_t>(g.n))
        throw std::invalid_argument("rotation size does not match vertex count");
    std::vector<int> lambda_prime = lambda;
    for (int v = 0; v < g.n; ++v) {
        if (cyclically_equal(pi_a[v], pi_b[v])) continue;
        for (int e : g.incidence[v]) lambda_prime[e] = -lambda_prime[e];
    }
    FaceSet fa = trace_faces(g, Embedding{pi_a, lambda_prime});
    FaceSet fb = trace_faces(g, Embedding{pi_b, lambda});
    if (face_multiset_key(fa) != face_multiset_key(fb))
        throw std::logic_error(
            "local-flip equivalence failed: (pi_a, lambda') and (pi_b, lambda) "
            "trace different facial walks");
    return lambda_prime;
}

inline TwistRecord record_twist(const CubicGraph& g, const Embedding& before_emb, int e) {
    TwistRecord r;
    r.edge = e;
    FaceSet before = trace_faces(g, before_emb);
    r.before = count_classes(before);
    r.faces_before = before.face_count();
    FaceSet after = trace_faces(g, twist(before_emb, e));
    r.after = count_classes(after);
    r.faces_after = after.face_count();
    return r;
}

}  // namespace cubemb
