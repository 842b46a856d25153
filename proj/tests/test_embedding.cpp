#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include <cubemb/embedding.hpp>
#include <cubemb/graph.hpp>

#include "support.hpp"

using namespace cubemb;
using testsupport::planar_k4;
using testsupport::planar_theta;

TEST_CASE("planar K4 faces match the hand trace") {
    auto g = named_graph("k4");
    auto fs = trace_faces(g, planar_k4());

    REQUIRE(fs.face_count() == 4);
    for (const auto& w : fs.walks) CHECK(w.length() == 3);
    CHECK(euler_characteristic(g, fs) == 2);

    // the faces are the four triangles of K4
    std::multiset<std::multiset<int>> expect{{0, 1, 3}, {0, 1, 2}, {0, 2, 3}, {1, 2, 3}};
    CHECK(testsupport::face_vertex_sets(g, fs) == expect);

    // deterministic representative choice: walks in ascending smallest-state
    // order, anchored at their smallest state
    std::vector<std::vector<int>> darts;
    for (const auto& w : fs.walks) darts.push_back(walk_darts(w));
    CHECK(darts == std::vector<std::vector<int>>{{0, 8, 5}, {0, 6, 3}, {2, 10, 5}, {6, 10, 9}});

    auto classes = classify_edges(fs);
    for (int e = 0; e < g.m; ++e) CHECK(classes[e] == EdgeClass::Regular);
    CHECK(count_classes(fs) == ClassCounts{0, 0, 6});
    CHECK(is_circular(fs));
}

TEST_CASE("theta faces") {
    auto g = named_graph("theta");

    auto fs = trace_faces(g, canonical_embedding(g));
    REQUIRE(fs.face_count() == 1);
    CHECK(fs.walks[0].length() == 6);
    CHECK(count_classes(fs) == ClassCounts{3, 0, 0});
    CHECK(euler_characteristic(g, fs) == 0);
    CHECK_FALSE(is_circular(fs));

    auto planar = trace_faces(g, planar_theta());
    REQUIRE(planar.face_count() == 3);
    for (const auto& w : planar.walks) CHECK(w.length() == 2);
    CHECK(count_classes(planar) == ClassCounts{0, 0, 3});
    CHECK(euler_characteristic(g, planar) == 2);
    CHECK(is_circular(planar));

    // Euler bound: any theta embedding has 2 - 3 + F in {0, 1, 2}
    for (std::uint64_t seed = 0; seed < 32; ++seed) {
        std::mt19937_64 rng(seed);
        auto fs2 = trace_faces(g, random_embedding(g, rng));
        int chi = euler_characteristic(g, fs2);
        CHECK(chi <= 2);
        CHECK(chi >= 0);
    }
}

TEST_CASE("face walks alternate vertices and edges") {
    auto g = named_graph("k4");
    auto fs = trace_faces(g, planar_k4());
    auto seq = fs.walks[0].alternating_sequence(g);
    CHECK(seq == std::vector<int>{0, 0, 1, 4, 3, 2});  // v0,e1,v1,e2,v2,e3
}

TEST_CASE("face set invariants over random embeddings") {
    for (const char* name : {"theta", "k4", "k33", "petersen"}) {
        auto g = named_graph(name);
        for (std::uint64_t seed = 0; seed < 50; ++seed) {
            std::mt19937_64 rng(seed);
            auto emb = random_embedding(g, rng);
            auto fs = trace_faces(g, emb);

            int total = 0;
            for (const auto& w : fs.walks) total += w.length();
            CHECK(total == 2 * g.m);

            for (int e = 0; e < g.m; ++e) {
                const auto& [a, b] = fs.edge_traversals[e];
                CHECK(dart_edge(fs.walks[a.walk].steps[a.pos].dart) == e);
                CHECK(dart_edge(fs.walks[b.walk].steps[b.pos].dart) == e);
            }

            int chi = euler_characteristic(g, fs);
            CHECK(chi <= 2);
            if (is_orientable(g, emb)) {
                CHECK(chi % 2 == 0);
                auto classes = classify_edges(fs);
                for (int e = 0; e < g.m; ++e)
                    CHECK(classes[e] != EdgeClass::GoodSingular);
            }

            CHECK(count_classes(fs).total() == g.m);

            // walks are anchored at their smallest state id
            for (const auto& w : fs.walks) {
                int lo = w.steps[0].id();
                for (const auto& s : w.steps) CHECK(lo <= s.id());
            }
        }
    }
}

TEST_CASE("orientability") {
    auto k4 = named_graph("k4");
    auto emb = canonical_embedding(k4);
    CHECK(is_orientable(k4, emb));

    SECTION("vertex sign flip preserves orientability") {
        auto flipped = emb;
        for (int e : k4.incidence[2]) flipped.signature[e] = -flipped.signature[e];
        CHECK(is_orientable(k4, flipped));
    }

    SECTION("single negative edge is nonorientable (every K4 edge lies on a cycle)") {
        for (int e = 0; e < k4.m; ++e) {
            auto neg = emb;
            neg.signature[e] = -1;
            CHECK_FALSE(is_orientable(k4, neg));
            CHECK_FALSE(testsupport::orientable_by_cycle_oracle(k4, neg.signature));
        }
    }

    SECTION("agrees with the brute-force cycle oracle") {
        for (const char* name : {"theta", "k4", "k33"}) {
            auto g = named_graph(name);
            std::mt19937_64 rng(7);
            for (int trial = 0; trial < 40; ++trial) {
                auto random = random_embedding(g, rng);
                CHECK(is_orientable(g, random) ==
                      testsupport::orientable_by_cycle_oracle(g, random.signature));
            }
        }
    }
}

TEST_CASE("trace is invariant under rotation re-anchoring") {
    auto g = named_graph("petersen");
    std::mt19937_64 rng(11);
    auto emb = random_embedding(g, rng);
    auto key = face_multiset_key(trace_faces(g, emb));

    auto shifted = emb;
    for (int v = 0; v < g.n; ++v) {
        auto t = shifted.rotation[v];
        shifted.rotation[v] = {t[1], t[2], t[0]};  // same cyclic order, new anchor
    }
    CHECK(face_multiset_key(trace_faces(g, shifted)) == key);
}

TEST_CASE("vertex sign flip preserves the face multiset") {
    // flip lambda on the three incident edges and reverse the rotation
    for (const char* name : {"theta", "k4", "petersen"}) {
        auto g = named_graph(name);
        std::mt19937_64 rng(3);
        for (int trial = 0; trial < 20; ++trial) {
            auto emb = random_embedding(g, rng);
            auto key = face_multiset_key(trace_faces(g, emb));
            int v = static_cast<int>(rng() % g.n);
            auto flipped = emb;
            for (int e : g.incidence[v]) flipped.signature[e] = -flipped.signature[e];
            auto t = flipped.rotation[v];
            flipped.rotation[v] = canonical_triple({t[0], t[2], t[1]});
            CHECK(face_multiset_key(trace_faces(g, flipped)) == key);
        }
    }
}

TEST_CASE("random embeddings are deterministic and calibrated") {
    auto g = named_graph("k4");
    std::mt19937_64 a(42), b(42);
    auto e1 = random_embedding(g, a);
    auto e2 = random_embedding(g, b);
    CHECK(e1.rotation == e2.rotation);
    CHECK(e1.signature == e2.signature);

    // sampler calibration: P(lambda = +1) = 1/2 within 3 sigma
    const int N = 100000;
    std::mt19937_64 rng(2024);
    std::vector<int> plus(g.m, 0);
    std::vector<int> rot_bit(g.n, 0);
    for (int i = 0; i < N; ++i) {
        auto emb = random_embedding(g, rng);
        for (int e = 0; e < g.m; ++e) plus[e] += emb.signature[e] > 0;
        for (int v = 0; v < g.n; ++v) rot_bit[v] += emb.rotation[v] == rotation_from_bit(g, v, 1);
    }
    const double sigma = std::sqrt(0.25 * N);
    for (int e = 0; e < g.m; ++e) CHECK(std::abs(plus[e] - N / 2.0) <= 3 * sigma);
    for (int v = 0; v < g.n; ++v) CHECK(std::abs(rot_bit[v] - N / 2.0) <= 3 * sigma);
}

TEST_CASE("embedding validation rejects malformed input") {
    auto g = named_graph("k4");
    auto emb = canonical_embedding(g);

    auto bad = emb;
    bad.signature[2] = 0;
    CHECK_THROWS_AS(trace_faces(g, bad), std::invalid_argument);

    bad = emb;
    bad.rotation[0] = {0, 2, 6};  // dart 6 has tail 1, not 0
    CHECK_THROWS_AS(trace_faces(g, bad), std::invalid_argument);

    bad = emb;
    bad.rotation.pop_back();
    CHECK_THROWS_AS(trace_faces(g, bad), std::invalid_argument);

    bad = emb;
    bad.signature.push_back(1);
    CHECK_THROWS_AS(trace_faces(g, bad), std::invalid_argument);
}
