#pragma once

// Singular-edge reduction over twist space: the greedy elimination of '-'
// links (each such twist removes the link and every link crossing it), the
// '+' cascade heuristic that manufactures new '-' links by twisting '+' links
// with crossing partners, exhaustive signature sweeps for circular
// embeddings, and the perfect-matching construction bounding the singular
// count by m/3.

#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "embedding.hpp"
#include "facial_diagram.hpp"
#include "graph.hpp"
#include "twist.hpp"

namespace cubemb {

struct TwistSequence {
    Embedding initial;
    Embedding final_embedding;
    ClassCounts initial_counts;
    ClassCounts final_counts;
    std::vector<TwistRecord> steps;
};

inline Embedding replay(const TwistSequence& seq) {
    Embedding cur = seq.initial;
    for (const auto& s : seq.steps) cur = twist(cur, s.edge);
    return cur;
}

namespace detail {

inline int crossing_partner_count(const FacialDiagram& fd, int e) {
    int c = 0;
    for (const auto& [a, b] : crossing_pairs(fd))
        if (a == e || b == e) ++c;
    return c;
}

}  // namespace detail

// Repeatedly twist the smallest-id good-singular ('-') edge until none is
// left. Each step removes the twisted link and its crossing partners, so the
// singular count strictly decreases and the '+' count never increases; both
// facts are asserted per step.
inline TwistSequence greedy_reduce(const CubicGraph& g, const Embedding& emb) {
    TwistSequence seq;
    seq.initial = emb;
    Embedding cur = emb;
    FaceSet fs = trace_faces(g, cur);
    seq.initial_counts = count_classes(fs);
    ClassCounts counts = seq.initial_counts;

    while (counts.good > 0) {
        auto classes = classify_edges(fs);
        int e = -1;
        for (int i = 0; i < g.m; ++i)
            if (classes[i] == EdgeClass::GoodSingular) {
                e = i;
                break;
            }
        const int crossings = detail::crossing_partner_count(build_diagram(g, fs), e);

        TwistRecord rec;
        rec.edge = e;
        rec.before = counts;
        rec.faces_before = fs.face_count();
        cur = twist(cur, e);
        fs = trace_faces(g, cur);
        rec.after = count_classes(fs);
        rec.faces_after = fs.face_count();

        if (rec.after.singular() > rec.before.singular() - 1 - crossings)
            throw std::logic_error("twist of - link " + std::to_string(e) +
                                   " removed fewer links than its " +
                                   std::to_string(crossings) + " crossings require");
        if (rec.after.bad > rec.before.bad)
            throw std::logic_error("twist of - link " + std::to_string(e) +
                                   " increased the + link count");
        counts = rec.after;
        seq.steps.push_back(rec);
    }
    seq.final_embedding = cur;
    seq.final_counts = counts;
    return seq;
}

// Heuristic search below the greedy fixed point: after each greedy pass, if
// singular links remain and some '+' link crosses another singular link,
// twist one such '+' link (chosen at random) to flip its partner's sign to
// '-', then reduce again. Only these cascade twists count against the budget.
// The returned sequence is truncated at the best singular count seen, so
// replaying it reproduces the returned embedding.
inline TwistSequence plus_cascade(const CubicGraph& g, const Embedding& emb, int budget,
                                  std::mt19937_64& rng) {
    if (budget < 0) throw std::invalid_argument("plus_cascade: negative budget");
    TwistSequence seq;
    seq.initial = emb;
    FaceSet fs0 = trace_faces(g, emb);
    seq.initial_counts = count_classes(fs0);

    Embedding cur = emb;
    std::vector<TwistRecord> steps;
    int best_singular = seq.initial_counts.singular();
    size_t best_prefix = 0;
    int cascade_used = 0;

    while (true) {
        TwistSequence pass = greedy_reduce(g, cur);
        for (const auto& s : pass.steps) steps.push_back(s);
        cur = pass.final_embedding;
        ClassCounts counts = pass.final_counts;
        if (counts.singular() < best_singular) {
            best_singular = counts.singular();
            best_prefix = steps.size();
        }
        if (counts.singular() == 0 || cascade_used >= budget) break;

        FaceSet fs = trace_faces(g, cur);
        FacialDiagram fd = build_diagram(g, fs);
        std::vector<int> candidates;
        for (int e = 0; e < g.m; ++e)
            if (fd.classes[e] == EdgeClass::BadSingular &&
                detail::crossing_partner_count(fd, e) > 0)
                candidates.push_back(e);
        if (candidates.empty()) break;

        int e = candidates[static_cast<size_t>(rng() % candidates.size())];
        TwistRecord rec;
        rec.edge = e;
        rec.before = counts;
        rec.faces_before = fs.face_count();
        cur = twist(cur, e);
        FaceSet after = trace_faces(g, cur);
        rec.after = count_classes(after);
        rec.faces_after = after.face_count();
        steps.push_back(rec);
        ++cascade_used;
    }

    seq.steps.assign(steps.begin(), steps.begin() + static_cast<long>(best_prefix));
    seq.final_embedding = seq.initial;
    for (const auto& s : seq.steps) seq.final_embedding = twist(seq.final_embedding, s.edge);
    seq.final_counts = count_classes(trace_faces(g, seq.final_embedding));
    return seq;
}

enum class SearchStatus { CircularFound, BudgetExhausted };

struct SearchOutcome {
    SearchStatus status = SearchStatus::BudgetExhausted;
    std::optional<Embedding> witness;
    std::uint64_t states_visited = 0;
    int best_singular = 0;
};

// Sweep all 2^m signatures under a fixed rotation, in binary-reflected
// Gray-code order (signature bit e set <=> lambda(e) = -1), and return the
// first circular embedding found. For cubic graphs the signature sweep covers
// every face multiset of every embedding, so a miss here is a miss overall.
inline SearchOutcome search_circular_exhaustive(const CubicGraph& g, const Rotation& pi,
                                                int cap = 24) {
    if (g.m > cap)
        throw std::invalid_argument("signature space 2^" + std::to_string(g.m) +
                                    " exceeds cap 2^" + std::to_string(cap));
    SearchOutcome out;
    out.best_singular = g.m + 1;
    Embedding emb;
    emb.rotation = pi;
    emb.signature.assign(g.m, +1);
    const std::uint64_t total = std::uint64_t{1} << g.m;
    for (std::uint64_t i = 0; i < total; ++i) {
        const std::uint64_t code = i ^ (i >> 1);
        for (int e = 0; e < g.m; ++e)
            emb.signature[e] = (code >> e) & 1 ? -1 : +1;
        FaceSet fs = trace_faces(g, emb);
        ClassCounts counts = count_classes(fs);
        out.states_visited = i + 1;
        if (counts.singular() < out.best_singular) out.best_singular = counts.singular();
        if (counts.singular() == 0) {
            out.status = SearchStatus::CircularFound;
            out.witness = emb;
            return out;
        }
    }
    out.status = SearchStatus::BudgetExhausted;
    return out;
}

struct MatchingBoundResult {
    Embedding embedding;
    Matching matching;
    std::vector<Cycle> factor_cycles;
};

// Extend the 2-factor complementary to a perfect matching into a set of
// facial walks: orient each factor cycle and build the rotation at every
// vertex so the cycle continues straight through it. Every factor cycle then
// traces as one face, factor edges are regular, and only matching edges can
// be singular -- at most m/3 of them.
inline MatchingBoundResult matching_bound_embedding(const CubicGraph& g) {
    MatchingBoundResult res;
    res.matching = perfect_matching(g);
    res.factor_cycles = two_factor_cycles(g, res.matching);

    std::vector<char> in_matching(g.m, 0);
    for (int e : res.matching.edges) in_matching[e] = 1;

    // per vertex: the oriented factor darts through it
    std::vector<int> dart_in(g.n, -1), dart_out(g.n, -1);
    for (const auto& cycle : res.factor_cycles) {
        const int len = static_cast<int>(cycle.vertices.size());
        for (int i = 0; i < len; ++i) {
            int u = cycle.vertices[i];
            int e = cycle.edges[i];
            int d = g.dart_at(e, u);  // u -> next vertex
            dart_out[u] = d;
            dart_in[g.head(d)] = d;
        }
    }

    res.embedding.rotation.resize(g.n);
    for (int v = 0; v < g.n; ++v) {
        if (dart_in[v] < 0 || dart_out[v] < 0)
            throw std::logic_error("vertex " + std::to_string(v) + " missing from the 2-factor");
        int matching_dart = -1;
        for (int e : g.incidence[v])
            if (in_matching[e]) matching_dart = g.dart_at(e, v);
        // successor of reverse(dart_in) is dart_out; the matching dart fills
        // the remaining slot of the cyclic triple
        res.embedding.rotation[v] =
            canonical_triple({reverse_dart(dart_in[v]), dart_out[v], matching_dart});
    }
    res.embedding.signature.assign(g.m, +1);
    return res;
}

}  // namespace cubemb
