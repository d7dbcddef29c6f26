#include <random>

#include "doctest.h"
#include "ftam/assembly.hpp"
#include "support.hpp"

using namespace ftam;
using namespace testing_support;

TEST_CASE("tau stability examples") {
    auto two = strip(2, false);
    CHECK(tau_stable(two.a, 2));
    Builder path;
    for (int i = 0; i < 3; ++i) path.tile();
    path.bond(0, Side::E, 1, Side::W, false, 1);
    path.bond(1, Side::E, 2, Side::W, false, 1);
    CHECK_FALSE(tau_stable(path.a, 2));
    Builder cycle;
    for (int i = 0; i < 4; ++i) cycle.tile();
    for (int i = 0; i < 4; ++i) cycle.bond(i, Side::E, (i + 1) % 4, Side::W, false, 1);
    CHECK(tau_stable(cycle.a, 2));
    CHECK(exhaustive_min_cut(cycle.a) == 2);
    Builder single;
    single.tile();
    CHECK(tau_stable(single.a, 5));
    Builder split;
    split.tile();
    split.tile();
    CHECK_THROWS(tau_stable(split.a, 1));
}

TEST_CASE("min cut agrees with exhaustive bipartitions") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 2 + static_cast<int>(rng() % 9);
        auto b = random_graph(rng, n);
        CHECK(min_cut_weight(b.a) == exhaustive_min_cut(b.a));
    }
}

TEST_CASE("face graph contraction") {
    auto rigid = strip(2, false);
    auto g = face_graph(rigid.a);
    CHECK(g.node_count == 1);
    CHECK(g.edges.empty());
    auto flex = strip(2, true);
    g = face_graph(flex.a);
    CHECK(g.node_count == 2);
    CHECK(g.edges.size() == 1);

    Builder dominoes;
    for (int i = 0; i < 4; ++i) dominoes.tile();
    dominoes.bond(0, Side::E, 1, Side::W, false);
    dominoes.bond(2, Side::E, 3, Side::W, false);
    dominoes.bond(0, Side::N, 2, Side::S, true);
    dominoes.bond(1, Side::N, 3, Side::S, true);
    g = face_graph(dominoes.a);
    CHECK(g.node_count == 2);
    CHECK(g.edges.size() == 1);

    auto loop = tube_loop();
    CHECK(face_graph(loop.a).node_count == 4);
    auto flat = square_loop(false);
    CHECK(face_graph(flat.a).node_count == 1);
}

TEST_CASE("check_assembly violations") {
    auto ok = strip(3, false);
    CHECK(check_assembly(ok.a, ok.system()).empty());

    auto dup = strip(2, false);
    dup.tile();
    dup.types[2]->glue(Side::W) = dup.types[1]->glue(Side::W);
    dup.a.add_bond({0, Side::E}, {2, Side::W}, false, 2);
    auto v = check_assembly(dup.a, dup.system());
    CHECK(std::find(v.begin(), v.end(), Violation::DuplicateGlueUse) != v.end());

    Builder weak;
    weak.tile();
    weak.tile();
    weak.bond(0, Side::E, 1, Side::W, false, 1);
    v = check_assembly(weak.a, weak.system());
    CHECK(v == std::vector<Violation>{Violation::NotTauStable});

    auto foreign = strip(2, false);
    FtamSystem empty;
    v = check_assembly(foreign.a, empty);
    CHECK(std::find(v.begin(), v.end(), Violation::UnknownTileType) != v.end());
}
