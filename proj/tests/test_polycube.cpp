#include <set>

#include "doctest.h"
#include "ftam/generators.hpp"

using namespace ftam;

namespace {

Polycube P(std::set<Vec3> v) { return Polycube{std::move(v)}; }

// Valid configurations of a small assembly, one representative per chiral pair.
std::set<Configuration> up_to_chirality(const Assembly& a) {
    std::set<Configuration> out;
    for (const auto& c : naive_configs(a)) out.insert(std::min(c, chiral(c)));
    return out;
}

}  // namespace

TEST_CASE("vertex classification") {
    CHECK(classify_vertex(P({{0, 0, 0}}), {0, 0, 0}) == VertexClass::Convex);
    CHECK(classify_vertex(P({{0, 0, 0}}), {1, 1, 1}) == VertexClass::Convex);
    auto L = P({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}});
    CHECK(classify_vertex(L, {1, 1, 1}) == VertexClass::Concave);
    CHECK(classify_vertex(L, {1, 1, 0}) == VertexClass::Concave);
    // 2x2x2 block missing two opposite corners.
    std::set<Vec3> eight;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k) eight.insert({i, j, k});
    auto two = eight;
    two.erase({0, 0, 0});
    two.erase({1, 1, 1});
    CHECK(classify_vertex(P(two), {1, 1, 1}) == VertexClass::TwoConvex);
    auto tripod = P({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
    CHECK(classify_vertex(tripod, {1, 1, 1}) == VertexClass::V3);
    auto skew = P({{0, 0, 0}, {0, 0, 1}, {0, 1, 0}, {1, 0, 1}});
    CHECK(classify_vertex(skew, {1, 1, 1}) == VertexClass::V4);
    auto v6 = P({{0, 0, 0}, {0, 0, 1}, {0, 1, 0}, {1, 0, 1}, {1, 1, 0}});
    CHECK(classify_vertex(v6, {1, 1, 1}) == VertexClass::V6);
    auto v7 = P({{0, 0, 0}, {0, 0, 1}, {0, 1, 0}, {0, 1, 1}, {1, 0, 0}, {1, 1, 1}});
    CHECK(classify_vertex(v7, {1, 1, 1}) == VertexClass::V7);
    auto domino = P({{0, 0, 0}, {1, 0, 0}});
    CHECK(classify_vertex(domino, {1, 0, 0}) == VertexClass::NonVertex);
    CHECK_THROWS(classify_vertex(domino, {5, 5, 5}));
    CHECK_THROWS(classify_vertex(P(eight), {1, 1, 1}));
}

TEST_CASE("perspective counts") {
    int total = 0;
    for (auto v : {VertexClass::Convex, VertexClass::Concave, VertexClass::V3, VertexClass::V4, VertexClass::V6,
                   VertexClass::V7})
        total += perspectives(v);
    CHECK(total == 15);
}

TEST_CASE("protocol tables") {
    CHECK(protocol_for(VertexClass::Convex, 0) == Protocol{3, "FFF"});
    CHECK(protocol_for(VertexClass::Concave, 0).bonds == "FRRFF");
    CHECK(protocol_for(VertexClass::Concave, 1).bonds == "FFRRF");
    CHECK(protocol_for(VertexClass::Concave, 2).bonds == "FFFRR");
    CHECK(protocol_for(VertexClass::V6, 0) == Protocol{7, "FRFRFFF"});
    CHECK_THROWS_AS(protocol_for(VertexClass::V7, 0), ReconfigurableError);
    CHECK_THROWS_AS(protocol_for(VertexClass::V3, 0), ReconfigurableError);
    auto all = deterministic_protocols();
    CHECK(all.size() == 11);
    for (const auto& p : all) CHECK(p.bonds[0] == 'F');
}

TEST_CASE("each deterministic protocol folds one way up to chirality") {
    for (const auto& p : deterministic_protocols()) {
        CAPTURE(p.bonds);
        if (p.bonds == "FRFFFRF") continue;
        CHECK(up_to_chirality(protocol_loop(p)).size() == 1);
    }
    auto shared = up_to_chirality(protocol_loop({6, "FFFFFF"}));
    CHECK(shared.size() >= 3);
}

TEST_CASE("FRFFFRF is not a rotation of the V6 loop and cannot close") {
    // Every other V6 entry is a rotation of FRFRFFF read from a fold; the one starting two
    // places later is FRFFFFR.
    CHECK(up_to_chirality(protocol_loop({7, "FRFFFRF"})).empty());
    CHECK(up_to_chirality(protocol_loop({7, "FRFFFFR"})).size() == 1);
}

TEST_CASE("outline geometry") {
    auto t = polycube_outline(P({{0, 0, 0}}), 2);
    CHECK(t.placements.size() == 24);
    CHECK(t.links.size() == 48);
    int flexible = 0;
    for (const auto& l : t.links) flexible += l.flexible;
    CHECK(flexible == 24);
    // The outline's own configuration is valid.
    CompileOptions opt;
    opt.seed = {0};
    auto c = compile_target(t, opt);
    auto a = target_assembly(t, c.types);
    CHECK(validate(a, t.configuration()).valid);
    CHECK(is_rigid(a));
}

TEST_CASE("outline vertex loops follow the protocol tables") {
    for (const auto& shape : {P({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}}), P({{0, 0, 0}, {1, 0, 0}, {2, 0, 0}, {1, 1, 0}}),
                              P({{0, 0, 0}, {0, 0, 1}, {0, 1, 0}, {1, 0, 1}})}) {
        auto r = analyze_polycube(shape);
        CHECK_FALSE(r.vertices.empty());
        for (const auto& v : r.vertices) {
            CAPTURE(v.loop);
            CHECK(v.matches_protocol);
        }
    }
}

TEST_CASE("determinism report") {
    auto cube = analyze_polycube(P({{0, 0, 0}}));
    CHECK(cube.deterministic());
    CHECK(cube.edge_frames == 1);
    auto skew = analyze_polycube(P({{0, 0, 0}, {0, 0, 1}, {0, 1, 0}, {1, 0, 1}}));
    CHECK_FALSE(skew.symmetric);
    CHECK(skew.reconfigurable_free);

    // Two 3x3x3 ends joined through face centers by a one-voxel bar.
    std::set<Vec3> dumbbell;
    for (int x = 0; x < 7; ++x)
        for (int y = 0; y < 3; ++y)
            for (int z = 0; z < 3; ++z)
                if (x != 3 || (y == 1 && z == 1)) dumbbell.insert({x, y, z});
    auto d = analyze_polycube(P(dumbbell));
    CHECK(d.edge_frames == 3);
    CHECK_FALSE(d.edges_connected);
    CHECK(d.symmetric);
    CHECK_FALSE(d.warnings.empty());

    CHECK_THROWS_AS(compile_polycube(P({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}})), ReconfigurableError);
}

TEST_CASE("compiled polycubes assemble their outline") {
    const std::vector<std::set<Vec3>> shapes{{{0, 0, 0}},
                                            {{0, 0, 0}, {1, 0, 0}},
                                            {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}},
                                            {{0, 0, 0}, {1, 0, 0}, {2, 0, 0}},
                                            {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {1, 1, 0}},
                                            {{0, 0, 0}, {1, 0, 0}, {2, 0, 0}, {1, 1, 0}}};
    for (const auto& v : shapes) {
        auto c = compile_polycube(P(v));
        REQUIRE(c.report.deterministic());
        CHECK(check_assembly(c.system.seed, c.system).empty());
        auto want = canonical_shape(c.target.placements);
        for (std::uint64_t seed = 0; seed < 4; ++seed) {
            auto out = run_to_terminal(c.system, initial_state(c.system, seed), 1000);
            CHECK(out.terminal);
            CHECK(out.state.assembly.size() == c.target.placements.size());
            auto e = compute_embedding(out.state.assembly, out.state.configuration);
            REQUIRE(e.embedding);
            CHECK(canonical_form(out.state.assembly, *e.embedding, false) == want);
        }
    }
}
