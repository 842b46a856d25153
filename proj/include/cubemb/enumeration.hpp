#pragma once

// Brute-force ground truth over embedding space. A configuration index packs
// the whole embedding, little-endian: bit v (v < n) selects one of the two
// cyclic rotations at vertex v, bit n+e selects the sign of edge e (set bit =
// -1). Full sweeps visit all 2^(n+m) configurations; signature-only sweeps
// fix the canonical rotation and visit 2^m, which for cubic graphs reaches
// every face multiset of every embedding (local rotation changes are
// equivalent to signature changes).

#include <cstdint>
#include <functional>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "embedding.hpp"
#include "facial_diagram.hpp"
#include "graph.hpp"

namespace cubemb {

struct Rational {
    long long num = 0;
    long long den = 1;

    static Rational of(long long n, long long d) {
        if (d == 0) throw std::invalid_argument("rational with zero denominator");
        if (d < 0) {
            n = -n;
            d = -d;
        }
        long long g = std::gcd(n < 0 ? -n : n, d);
        if (g == 0) g = 1;
        return Rational{n / g, d / g};
    }
    double value() const { return static_cast<double>(num) / static_cast<double>(den); }
    friend bool operator==(const Rational&, const Rational&) = default;
};

enum class SweepMode { Auto, Full, SignatureOnly };

namespace detail {

constexpr int kFullSweepAutoBits = 20;  // Auto picks the full sweep up to 2^20 configs
constexpr int kSignatureCapBits = 24;

inline SweepMode resolve_mode(const CubicGraph& g, SweepMode mode) {
    if (mode != SweepMode::Auto) return mode;
    return g.n + g.m <= kFullSweepAutoBits ? SweepMode::Full : SweepMode::SignatureOnly;
}

}  // namespace detail

inline Embedding embedding_from_config(const CubicGraph& g, std::uint64_t config) {
    Embedding emb;
    emb.rotation.reserve(g.n);
    for (int v = 0; v < g.n; ++v)
        emb.rotation.push_back(rotation_from_bit(g, v, static_cast<int>((config >> v) & 1)));
    emb.signature.resize(g.m);
    for (int e = 0; e < g.m; ++e)
        emb.signature[e] = (config >> (g.n + e)) & 1 ? -1 : +1;
    return emb;
}

inline std::uint64_t config_count(const CubicGraph& g, SweepMode mode) {
    const int bits = mode == SweepMode::SignatureOnly ? g.m : g.n + g.m;
    return std::uint64_t{1} << bits;
}

// Visit every configuration of the chosen sweep in index order. For the
// signature-only sweep the rotation bits stay zero, so reported indices are
// full-encoding indices with the signature field shifted to bits n..n+m-1.
template <typename Fn>
void sweep_configs(const CubicGraph& g, SweepMode mode, Fn&& fn) {
    mode = detail::resolve_mode(g, mode);
    if (mode == SweepMode::SignatureOnly) {
        if (g.m > detail::kSignatureCapBits)
            throw std::invalid_argument("signature sweep 2^" + std::to_string(g.m) +
                                        " exceeds cap 2^" +
                                        std::to_string(detail::kSignatureCapBits));
        Embedding emb = canonical_embedding(g);
        const std::uint64_t total = std::uint64_t{1} << g.m;
        for (std::uint64_t i = 0; i < total; ++i) {
            for (int e = 0; e < g.m; ++e) emb.signature[e] = (i >> e) & 1 ? -1 : +1;
            fn(i << g.n, emb, trace_faces(g, emb));
        }
    } else {
        const int bits = g.n + g.m;
        if (bits > 25)
            throw std::invalid_argument("full sweep 2^" + std::to_string(bits) +
                                        " exceeds cap 2^25");
        const std::uint64_t total = std::uint64_t{1} << bits;
        for (std::uint64_t i = 0; i < total; ++i) {
            Embedding emb = embedding_from_config(g, i);
            fn(i, emb, trace_faces(g, emb));
        }
    }
}

// Full-sweep stream over every (pi, lambda); the documented cap is
// n + m <= 25 configuration bits.
template <typename Fn>
void enumerate_embeddings(const CubicGraph& g, Fn&& fn, int max_bits = 25) {
    if (g.n + g.m > max_bits)
        throw std::invalid_argument("enumeration space 2^" + std::to_string(g.n + g.m) +
                                    " exceeds cap 2^" + std::to_string(max_bits));
    sweep_configs(g, SweepMode::Full, std::forward<Fn>(fn));
}

struct MinSingularResult {
    int count = 0;
    Embedding witness;
    std::uint64_t config_index = 0;
    std::uint64_t configurations = 0;
    SweepMode mode_used = SweepMode::Full;
};

inline MinSingularResult min_singular(const CubicGraph& g, SweepMode mode = SweepMode::Auto) {
    mode = detail::resolve_mode(g, mode);
    MinSingularResult res;
    res.mode_used = mode;
    res.count = g.m + 1;
    sweep_configs(g, mode, [&](std::uint64_t idx, const Embedding& emb, const FaceSet& fs) {
        ++res.configurations;
        int s = count_classes(fs).singular();
        if (s < res.count) {
            res.count = s;
            res.witness = emb;
            res.config_index = idx;
        }
    });
    return res;
}

struct ExactClassExpectations {
    Rational bad, good, regular;
    std::uint64_t sum_bad = 0, sum_good = 0, sum_regular = 0;
    std::uint64_t configurations = 0;
};

// Exact class-count averages over the uniform distribution on all (pi,
// lambda), computed by a sharded full sweep with integer partial sums.
inline ExactClassExpectations exact_expected_classes(const CubicGraph& g, int workers = 1) {
    const int bits = g.n + g.m;
    if (bits > 25)
        throw std::invalid_argument("full sweep 2^" + std::to_string(bits) +
                                    " exceeds cap 2^25");
    const std::uint64_t total = std::uint64_t{1} << bits;
    if (workers < 1) workers = 1;
    if (static_cast<std::uint64_t>(workers) > total) workers = static_cast<int>(total);

    struct Partial {
        std::uint64_t bad = 0, good = 0, regular = 0;
    };
    std::vector<Partial> partials(workers);
    auto run = [&](int w) {
        const std::uint64_t lo = total * w / workers;
        const std::uint64_t hi = total * (w + 1) / workers;
        Partial p;
        for (std::uint64_t i = lo; i < hi; ++i) {
            ClassCounts c = count_classes(trace_faces(g, embedding_from_config(g, i)));
            p.bad += c.bad;
            p.good += c.good;
            p.regular += c.regular;
        }
        partials[w] = p;
    };
    if (workers == 1) {
        run(0);
    } else {
        std::vector<std::thread> threads;
        for (int w = 0; w < workers; ++w) threads.emplace_back(run, w);
        for (auto& t : threads) t.join();
    }
    ExactClassExpectations out;
    out.configurations = total;
    for (const auto& p : partials) {
        out.sum_bad += p.bad;
        out.sum_good += p.good;
        out.sum_regular += p.regular;
    }
    out.bad = Rational::of(static_cast<long long>(out.sum_bad), static_cast<long long>(total));
    out.good = Rational::of(static_cast<long long>(out.sum_good), static_cast<long long>(total));
    out.regular =
        Rational::of(static_cast<long long>(out.sum_regular), static_cast<long long>(total));
    return out;
}

struct Property6Report {
    int min_singular = 0;
    std::uint64_t embeddings_checked = 0;  // embeddings attaining the minimum
    std::uint64_t crossing_violations = 0;
    std::uint64_t configurations = 0;
    SweepMode mode_used = SweepMode::Full;
    bool passed = true;
};

using ConfigFilter = std::function<bool(std::uint64_t, const FaceSet&)>;

// Check that every embedding attaining the minimum singular count has a
// crossing-free facial diagram. A violation is a falsification of the claim,
// reported rather than thrown. The optional filter restricts the swept space
// (used by tests to exercise the non-vacuous path).
inline Property6Report verify_property6(const CubicGraph& g, SweepMode mode = SweepMode::Auto,
                                        const ConfigFilter& filter = nullptr) {
    mode = detail::resolve_mode(g, mode);
    Property6Report rep;
    rep.mode_used = mode;
    rep.min_singular = g.m + 1;
    sweep_configs(g, mode, [&](std::uint64_t idx, const Embedding&, const FaceSet& fs) {
        ++rep.configurations;
        if (filter && !filter(idx, fs)) return;
        rep.min_singular = std::min(rep.min_singular, count_classes(fs).singular());
    });
    if (rep.min_singular > g.m)
        throw std::invalid_argument("property-6 sweep filter rejected every configuration");
    sweep_configs(g, mode, [&](std::uint64_t idx, const Embedding&, const FaceSet& fs) {
        if (filter && !filter(idx, fs)) return;
        if (count_classes(fs).singular() != rep.min_singular) return;
        ++rep.embeddings_checked;
        if (!crossing_pairs(build_diagram(g, fs)).empty()) ++rep.crossing_violations;
    });
    rep.passed = rep.crossing_violations == 0;
    return rep;
}

struct Lemma2CoverageReport {
    std::uint64_t signature_sweep_configs = 0;
    std::uint64_t full_sweep_configs = 0;
    std::uint64_t signature_face_multisets = 0;
    std::uint64_t full_face_multisets = 0;
    bool equal = false;
};

// The face multisets reachable by signature changes alone (fixed rotation)
// must equal those reachable by the full (pi, lambda) sweep.
inline Lemma2CoverageReport verify_lemma2_coverage(const CubicGraph& g) {
    Lemma2CoverageReport rep;
    std::set<std::vector<std::vector<int>>> sig_set, full_set;
    sweep_configs(g, SweepMode::SignatureOnly,
                  [&](std::uint64_t, const Embedding&, const FaceSet& fs) {
                      ++rep.signature_sweep_configs;
                      sig_set.insert(face_multiset_key(fs));
                  });
    sweep_configs(g, SweepMode::Full, [&](std::uint64_t, const Embedding&, const FaceSet& fs) {
        ++rep.full_sweep_configs;
        full_set.insert(face_multiset_key(fs));
    });
    rep.signature_face_multisets = sig_set.size();
    rep.full_face_multisets = full_set.size();
    rep.equal = sig_set == full_set;
    return rep;
}

struct EnumerationSummary {
    std::string graph;
    int n = 0, m = 0;
    std::uint64_t total_configurations = 0;
    int min_singular = 0;
    std::uint64_t min_config_index = 0;
    Embedding min_witness;
    std::uint64_t circular_count = 0;
    ExactClassExpectations expectations;
    Rational conjectured_per_class;  // m/3
};

// Single sharded full sweep computing the whole summary. Shards are merged in
// worker order; the minimum ties break toward the smaller configuration
// index, so the result is identical for any worker count.
inline EnumerationSummary enumerate_summary(const CubicGraph& g, const std::string& label,
                                            int workers = 1, int max_bits = 25) {
    const int bits = g.n + g.m;
    if (bits > max_bits)
        throw std::invalid_argument("enumeration space 2^" + std::to_string(bits) +
                                    " exceeds cap 2^" + std::to_string(max_bits));
    const std::uint64_t total = std::uint64_t{1} << bits;
    if (workers < 1) workers = 1;
    if (static_cast<std::uint64_t>(workers) > total) workers = static_cast<int>(total);

    struct Partial {
        std::uint64_t bad = 0, good = 0, regular = 0, circular = 0;
        int min_singular = 0;
        std::uint64_t min_config = 0;
    };
    std::vector<Partial> partials(workers);
    auto run = [&](int w) {
        const std::uint64_t lo = total * w / workers;
        const std::uint64_t hi = total * (w + 1) / workers;
        Partial p;
        p.min_singular = g.m + 1;
        for (std::uint64_t i = lo; i < hi; ++i) {
            ClassCounts c = count_classes(trace_faces(g, embedding_from_config(g, i)));
            p.bad += c.bad;
            p.good += c.good;
            p.regular += c.regular;
            const int s = c.singular();
            if (s == 0) ++p.circular;
            if (s < p.min_singular) {
                p.min_singular = s;
                p.min_config = i;
            }
        }
        partials[w] = p;
    };
    if (workers == 1) {
        run(0);
    } else {
        std::vector<std::thread> threads;
        for (int w = 0; w < workers; ++w) threads.emplace_back(run, w);
        for (auto& t : threads) t.join();
    }

    EnumerationSummary s;
    s.graph = label;
    s.n = g.n;
    s.m = g.m;
    s.total_configurations = total;
    s.min_singular = g.m + 1;
    std::uint64_t sum_bad = 0, sum_good = 0, sum_regular = 0;
    for (const auto& p : partials) {
        sum_bad += p.bad;
        sum_good += p.good;
        sum_regular += p.regular;
        s.circular_count += p.circular;
        if (p.min_singular < s.min_singular ||
            (p.min_singular == s.min_singular && p.min_config < s.min_config_index)) {
            s.min_singular = p.min_singular;
            s.min_config_index = p.min_config;
        }
    }
    s.min_witness = embedding_from_config(g, s.min_config_index);
    s.expectations.configurations = total;
    s.expectations.sum_bad = sum_bad;
    s.expectations.sum_good = sum_good;
    s.expectations.sum_regular = sum_regular;
    s.expectations.bad = Rational::of(static_cast<long long>(sum_bad), static_cast<long long>(total));
    s.expectations.good =
        Rational::of(static_cast<long long>(sum_good), static_cast<long long>(total));
    s.expectations.regular =
        Rational::of(static_cast<long long>(sum_regular), static_cast<long long>(total));
    s.conjectured_per_class = Rational::of(g.m, 3);
    return s;
}

}  // namespace cubemb
