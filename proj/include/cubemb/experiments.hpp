#pragma once

// Monte Carlo experiments on random embeddings: class-count means, variances
// and normal-approximation confidence intervals, plus sweeps over random
// cubic graph families. All runs are deterministic functions of (seed,
// samples, workers): workers own contiguous sample ranges, draw from seeds
// derived by splitmix64, and are merged in worker order.

#include <cmath>
#include <cstdint>
#include <iomanip>
#include <optional>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "embedding.hpp"
#include "enumeration.hpp"
#include "graph.hpp"
#include "prng.hpp"

namespace cubemb {

constexpr double kZ99 = 2.5758293035489004;  // two-sided 99% normal quantile

struct ClassStats {
    double mean = 0.0;
    double variance = 0.0;  // sample variance
    double ci99 = 0.0;      // half-width: z99 * sqrt(variance / samples)
};

struct ExperimentReport {
    std::string graph;
    int n = 0, m = 0;
    std::uint64_t samples = 0;
    std::uint64_t seed = 0;
    int workers = 1;
    ClassStats bad, good, regular;
    double conjectured = 0.0;  // m/3
    std::optional<ExactClassExpectations> exact;  // when oracle-computable
};

namespace detail {

struct MomentAccumulator {
    std::uint64_t sum = 0;
    std::uint64_t sum_sq = 0;

    void add(int x) {
        sum += static_cast<std::uint64_t>(x);
        sum_sq += static_cast<std::uint64_t>(x) * static_cast<std::uint64_t>(x);
    }
    void merge(const MomentAccumulator& o) {
        sum += o.sum;
        sum_sq += o.sum_sq;
    }
    ClassStats stats(std::uint64_t n_samples) const {
        ClassStats s;
        const double n = static_cast<double>(n_samples);
        s.mean = static_cast<double>(sum) / n;
        if (n_samples > 1)
            s.variance = (static_cast<double>(sum_sq) - n * s.mean * s.mean) / (n - 1.0);
        s.ci99 = kZ99 * std::sqrt(s.variance / n);
        return s;
    }
};

}  // namespace detail

inline ExperimentReport monte_carlo_classes(const CubicGraph& g, std::uint64_t samples,
                                            std::uint64_t seed, int workers = 1,
                                            const std::string& label = "") {
    if (samples < 1) throw std::invalid_argument("monte_carlo_classes requires samples >= 1");
    if (workers < 1) workers = 1;
    if (static_cast<std::uint64_t>(workers) > samples) workers = static_cast<int>(samples);

    struct Partial {
        detail::MomentAccumulator bad, good, regular;
    };
    std::vector<Partial> partials(workers);
    auto run = [&](int w) {
        const std::uint64_t lo = samples * w / workers;
        const std::uint64_t hi = samples * (w + 1) / workers;
        std::mt19937_64 rng(worker_seed(seed, w));
        Partial p;
        for (std::uint64_t i = lo; i < hi; ++i) {
            ClassCounts c = count_classes(trace_faces(g, random_embedding(g, rng)));
            p.bad.add(c.bad);
            p.good.add(c.good);
            p.regular.add(c.regular);
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

    detail::MomentAccumulator bad, good, regular;
    for (const auto& p : partials) {
        bad.merge(p.bad);
        good.merge(p.good);
        regular.merge(p.regular);
    }
    ExperimentReport rep;
    rep.graph = label;
    rep.n = g.n;
    rep.m = g.m;
    rep.samples = samples;
    rep.seed = seed;
    rep.workers = workers;
    rep.bad = bad.stats(samples);
    rep.good = good.stats(samples);
    rep.regular = regular.stats(samples);
    rep.conjectured = static_cast<double>(g.m) / 3.0;
    if (g.n + g.m <= detail::kFullSweepAutoBits) rep.exact = exact_expected_classes(g);
    return rep;
}

inline std::string experiment_csv_header() {
    return "graph,n,m,samples,seed,mean_bad,mean_good,mean_regular,"
           "var_bad,var_good,var_regular,ci99_bad,ci99_good,ci99_regular,conjectured";
}

inline std::string experiment_csv_row(const ExperimentReport& r) {
    std::ostringstream out;
    out << std::setprecision(12) << r.graph << ',' << r.n << ',' << r.m << ',' << r.samples
        << ',' << r.seed << ',' << r.bad.mean << ',' << r.good.mean << ',' << r.regular.mean
        << ',' << r.bad.variance << ',' << r.good.variance << ',' << r.regular.variance << ','
        << r.bad.ci99 << ',' << r.good.ci99 << ',' << r.regular.ci99 << ',' << r.conjectured;
    return out.str();
}

struct SweepRow {
    int n = 0, m = 0;
    std::uint64_t samples = 0;
    std::uint64_t seed = 0;
    double norm_bad = 0.0, norm_good = 0.0, norm_regular = 0.0;
};

// For each n, draw a fresh random bridgeless cubic graph per sample together
// with a random embedding of it, and report class means normalized by m.
inline std::vector<SweepRow> sweep_families(const std::vector<int>& n_list,
                                            std::uint64_t samples, std::uint64_t seed) {
    if (samples < 1) throw std::invalid_argument("sweep_families requires samples >= 1");
    std::vector<SweepRow> rows;
    for (size_t idx = 0; idx < n_list.size(); ++idx) {
        const int n = n_list[idx];
        std::mt19937_64 rng(worker_seed(seed, static_cast<int>(idx)));
        std::uint64_t sum_bad = 0, sum_good = 0, sum_regular = 0;
        for (std::uint64_t s = 0; s < samples; ++s) {
            CubicGraph g = random_cubic(n, rng);
            ClassCounts c = count_classes(trace_faces(g, random_embedding(g, rng)));
            sum_bad += c.bad;
            sum_good += c.good;
            sum_regular += c.regular;
        }
        SweepRow row;
        row.n = n;
        row.m = 3 * n / 2;
        row.samples = samples;
        row.seed = seed;
        const double denom = static_cast<double>(samples) * row.m;
        row.norm_bad = static_cast<double>(sum_bad) / denom;
        row.norm_good = static_cast<double>(sum_good) / denom;
        row.norm_regular = static_cast<double>(sum_regular) / denom;
        rows.push_back(row);
    }
    return rows;
}

inline std::string sweep_csv_header() {
    return "graph,n,m,samples,seed,norm_bad,norm_good,norm_regular";
}

inline std::string sweep_csv_row(const SweepRow& r) {
    std::ostringstream out;
    out << std::setprecision(12) << "random," << r.n << ',' << r.m << ',' << r.samples << ','
        << r.seed << ',' << r.norm_bad << ',' << r.norm_good << ',' << r.norm_regular;
    return out.str();
}

}  // namespace cubemb
