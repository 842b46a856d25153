#include <catch2/catch_amalgamated.hpp>

#include <cubemb/twist.hpp>

#include "support.hpp"

using namespace cubemb;
using testsupport::planar_k4;

TEST_CASE("twist is an involution and rejects bad ids") {
    auto g = named_graph("petersen");
    std::mt19937_64 rng(5);
    auto emb = random_embedding(g, rng);
    for (int e = 0; e < g.m; ++e) {
        auto back = twist(twist(emb, e), e);
        CHECK(back.signature == emb.signature);
        CHECK(back.rotation == emb.rotation);
    }
    CHECK_THROWS_AS(twist(emb, -1), std::invalid_argument);
    CHECK_THROWS_AS(twist(emb, g.m), std::invalid_argument);
}

TEST_CASE("twisting any edge of planar K4 merges two triangles") {
    auto g = named_graph("k4");
    auto emb = planar_k4();
    for (int e = 0; e < g.m; ++e) {
        auto fs = trace_faces(g, twist(emb, e));
        CHECK(fs.face_count() == 3);  // 4 -> 3: two faces merged
        CHECK(euler_characteristic(g, fs) == 1);
        auto classes = classify_edges(fs);
        CHECK(classes[e] == EdgeClass::GoodSingular);
        CHECK(count_classes(fs) == ClassCounts{0, 1, 5});
    }
}

TEST_CASE("twisting a regular edge merges exactly its two faces") {
    for (const char* name : {"k4", "k33", "petersen"}) {
        auto g = named_graph(name);
        for (std::uint64_t seed = 0; seed < 20; ++seed) {
            std::mt19937_64 rng(seed);
            auto emb = random_embedding(g, rng);
            auto fs = trace_faces(g, emb);
            auto classes = classify_edges(fs);
            for (int e = 0; e < g.m; ++e) {
                if (classes[e] != EdgeClass::Regular) continue;
                const auto& [t0, t1] = fs.edge_traversals[e];
                const auto& f1 = fs.walks[t0.walk];
                const auto& f2 = fs.walks[t1.walk];

                auto after = trace_faces(g, twist(emb, e));
                CHECK(after.face_count() == fs.face_count() - 1);

                // the merged walk carries every traversal of both former faces
                const auto& [a0, a1] = after.edge_traversals[e];
                REQUIRE(a0.walk == a1.walk);
                const auto& merged = after.walks[a0.walk];
                CHECK(merged.length() == f1.length() + f2.length());
                auto want = testsupport::walk_edge_multiset(f1);
                for (int x : testsupport::walk_edge_multiset(f2)) want.insert(x);
                CHECK(testsupport::walk_edge_multiset(merged) == want);

                // singular delta equals |E(F1) cap E(F2)|
                auto s1 = testsupport::walk_edge_set(f1);
                auto s2 = testsupport::walk_edge_set(f2);
                int common = 0;
                for (int x : s1) common += s2.count(x);
                CHECK(count_classes(after).singular() ==
                      count_classes(fs).singular() + common);
            }
        }
    }
}

TEST_CASE("face count delta by twisted edge class") {
    auto g = named_graph("k33");
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        std::mt19937_64 rng(seed);
        auto emb = random_embedding(g, rng);
        auto fs = trace_faces(g, emb);
        auto classes = classify_edges(fs);
        for (int e = 0; e < g.m; ++e) {
            auto after = trace_faces(g, twist(emb, e));
            int delta = after.face_count() - fs.face_count();
            switch (classes[e]) {
                case EdgeClass::Regular: CHECK(delta == -1); break;
                case EdgeClass::GoodSingular: CHECK(delta == +1); break;
                case EdgeClass::BadSingular: CHECK(delta == 0); break;
            }
        }
    }
}

TEST_CASE("local rotation flip") {
    auto g = named_graph("k4");
    auto emb = planar_k4();

    SECTION("double flip restores the embedding") {
        for (int v = 0; v < g.n; ++v) {
            auto once = local_rotation_flip(emb, v);
            CHECK(local_rotation_flip(once, v).rotation == emb.rotation);
        }
        CHECK_THROWS_AS(local_rotation_flip(emb, g.n), std::invalid_argument);
    }

    SECTION("flip equals the triple twist on face multisets") {
        for (const char* name : {"theta", "k4", "petersen"}) {
            auto gg = named_graph(name);
            std::mt19937_64 rng(17);
            for (int trial = 0; trial < 25; ++trial) {
                auto e0 = random_embedding(gg, rng);
                int v = static_cast<int>(rng() % gg.n);
                auto via_flip = face_multiset_key(trace_faces(gg, local_rotation_flip(e0, v)));
                auto via_twists = face_multiset_key(trace_faces(gg, triple_twist(gg, e0, v)));
                CHECK(via_flip == via_twists);
            }
        }
    }

    SECTION("flipping every vertex mirrors the embedding, faces unchanged") {
        auto mirrored = emb;
        for (int v = 0; v < g.n; ++v) mirrored = local_rotation_flip(mirrored, v);
        CHECK(face_multiset_key(trace_faces(g, mirrored)) ==
              face_multiset_key(trace_faces(g, emb)));
    }
}

TEST_CASE("triple twist flips three distinct edges") {
    auto th = named_graph("theta");
    auto emb = canonical_embedding(th);
    auto out = triple_twist(th, emb, 0);
    CHECK(out.signature == std::vector<int>{-1, -1, -1});
    CHECK(out.rotation == emb.rotation);

    auto k4 = named_graph("k4");
    auto e = canonical_embedding(k4);
    auto t = triple_twist(k4, e, 1);
    int flipped = 0;
    for (int i = 0; i < k4.m; ++i) flipped += t.signature[i] != e.signature[i];
    CHECK(flipped == 3);
}

TEST_CASE("local flips are simulated by signature twists") {
    auto g = named_graph("k4");
    auto emb = planar_k4();

    SECTION("empty flip set") {
        auto lambda = reachability_equivalence_check(g, emb.rotation, emb.rotation,
                                                     emb.signature);
        CHECK(lambda == emb.signature);
    }

    SECTION("single vertex matches triple_twist") {
        for (int v = 0; v < g.n; ++v) {
            auto pi_b = local_rotation_flip(emb, v).rotation;
            auto lambda = reachability_equivalence_check(g, emb.rotation, pi_b, emb.signature);
            CHECK(lambda == triple_twist(g, emb, v).signature);
        }
    }

    SECTION("flipping all vertices cancels on every edge") {
        auto mirrored = emb;
        for (int v = 0; v < g.n; ++v) mirrored = local_rotation_flip(mirrored, v);
        auto lambda = reachability_equivalence_check(g, emb.rotation, mirrored.rotation,
                                                     emb.signature);
        CHECK(lambda == emb.signature);  // both endpoints flipped: net unchanged
    }

    SECTION("random flip sets on random embeddings") {
        for (const char* name : {"theta", "k33"}) {
            auto gg = named_graph(name);
            std::mt19937_64 rng(23);
            for (int trial = 0; trial < 15; ++trial) {
                auto e0 = random_embedding(gg, rng);
                auto flipped = e0;
                for (int v = 0; v < gg.n; ++v)
                    if (rng() & 1) flipped = local_rotation_flip(flipped, v);
                CHECK_NOTHROW(reachability_equivalence_check(gg, e0.rotation, flipped.rotation,
                                                             e0.signature));
            }
        }
    }
}
