#include <set>
#include <sstream>

#include "doctest.h"
#include "ftam/io.hpp"
#include "support.hpp"

using namespace ftam;
using namespace testing_support;

namespace {

const char* kMinimal = R"({
  "format_version": "ftam-1",
  "seed": {
    "bonds": [],
    "tiles": [
      {
        "type": "t",
        "uid": 0
      }
    ]
  },
  "temperature": 2,
  "tile_types": [
    {
      "glues": {
        "E": {
          "flexible": true,
          "label": "a",
          "strength": 2
        },
        "W": {
          "flexible": true,
          "label": "a*",
          "strength": 2
        }
      },
      "id": "t"
    }
  ]
}
)";

std::set<Vec3> obj_vertices(const std::string& obj) {
    std::set<Vec3> out;
    std::istringstream in(obj);
    std::string tag;
    while (in >> tag) {
        if (tag == "v") {
            Vec3 v;
            in >> v.x >> v.y >> v.z;
            out.insert(v);
        } else {
            std::string rest;
            std::getline(in, rest);
        }
    }
    return out;
}

}  // namespace

TEST_CASE("minimal system round-trips byte for byte") {
    auto s = parse_system(kMinimal);
    CHECK(s.base.temperature == 2);
    REQUIRE(s.base.tile_types.size() == 1);
    CHECK(s.base.tile_types[0]->glue(Side::W).label == GlueLabel{"a", false}.complement());
    CHECK(serialize_system(s) == kMinimal);
}

TEST_CASE("system parse errors") {
    std::string dup = kMinimal;
    auto pos = dup.find("\"tile_types\": [") + 15;
    dup.insert(pos, R"({"id": "t", "glues": {}},)");
    try {
        parse_system(dup);
        FAIL("expected an error");
    } catch (const FormatError& e) {
        CHECK(e.kind == FormatErrorKind::DuplicateId);
        CHECK(e.field == "/tile_types/1/id");
    }
    try {
        parse_system("{\"format_version\": \"ftam-1\", \"temperature\": 2}");
        FAIL("expected an error");
    } catch (const FormatError& e) {
        CHECK(e.kind == FormatErrorKind::Schema);
        CHECK(e.field == "/tile_types");
    }
    CHECK_THROWS_AS(parse_system("{"), FormatError);
    CHECK_THROWS_AS(parse_system("{\"format_version\": \"other\"}"), FormatError);
}

TEST_CASE("staged systems round-trip") {
    auto b = strip(3, true);
    StagedSystem ss{b.system(), {}};
    ss.base.tile_types.resize(1);
    ss.stages.push_back({"more", {b.types[1], b.types[2]}});
    auto text = serialize_system(ss);
    auto back = parse_system(text);
    CHECK(back.stages.size() == 1);
    CHECK(back.base.seed.bonds().size() == 2);
    CHECK(back.base.seed.bonds()[0].flexible);
    CHECK(serialize_system(back) == text);
}

TEST_CASE("configuration strings only list flexible bonds") {
    Builder b;
    for (int i = 0; i < 3; ++i) b.tile();
    b.bond(0, Side::E, 1, Side::W, false);
    b.bond(1, Side::E, 2, Side::W, true);
    CHECK(configuration_string(b.a, {Rel::Straight, Rel::Up}) == "U");
    CHECK(parse_configuration_string(b.a, "D") == Configuration{Rel::Straight, Rel::Down});
    CHECK_THROWS_AS(parse_configuration_string(b.a, "DU"), FormatError);
    CHECK_THROWS_AS(parse_configuration_string(b.a, "X"), FormatError);
}

TEST_CASE("snapshots round-trip and reject a wrong embedding") {
    auto b = tube_loop();
    StagedSystem ss{b.system(), {}};
    RunState st = initial_state(ss.base, 5);
    st.configuration = {Rel::Up, Rel::Up, Rel::Up, Rel::Up};
    auto snap = snapshot_of(ss, 0, st);
    REQUIRE(snap.embedding);
    auto text = serialize_snapshot(snap);
    auto back = parse_snapshot(text);
    CHECK(back.configuration == snap.configuration);
    CHECK(back.embedding == snap.embedding);
    CHECK(serialize_snapshot(back) == text);

    auto bad = snap;
    bad.configuration = Configuration{Rel::Down, Rel::Down, Rel::Down, Rel::Down};
    try {
        parse_snapshot(serialize_snapshot(bad));
        FAIL("expected an error");
    } catch (const FormatError& e) {
        CHECK(e.kind == FormatErrorKind::InvalidEmbedding);
    }
}

TEST_CASE("snapshots keep run history") {
    auto seed = std::make_shared<TileType>();
    seed->id = "s";
    seed->glue(Side::E) = {{"a", false}, 2, true};
    auto t = std::make_shared<TileType>();
    t->id = "t";
    t->glue(Side::W) = {{"a", true}, 2, true};
    t->glue(Side::E) = {{"b", false}, 2, false};
    auto u = std::make_shared<TileType>();
    u->id = "u";
    u->glue(Side::W) = {{"b", true}, 2, false};
    FtamSystem s;
    s.tile_types = {seed, t, u};
    s.seed.add_tile(0, seed);
    auto out = run_to_terminal(s, initial_state(s, 3), 10);
    REQUIRE(out.state.history.size() == 2);
    auto snap = snapshot_of({s, {}}, 0, out.state);
    auto text = serialize_snapshot(snap);
    auto back = parse_snapshot(text);
    REQUIRE(back.history.size() == 2);
    CHECK(back.history[1].configuration == out.state.history[1].configuration);
    CHECK(back.history[0].binds == out.state.history[0].binds);
    CHECK(serialize_snapshot(back) == text);
}

TEST_CASE("certificates round-trip and verify") {
    auto b = square_loop(true);
    Certificate c;
    c.flexibility = FlexibilityCertificate{{Rel::Straight, Rel::Straight, Rel::Straight, Rel::Straight},
                                           {Rel::Up, Rel::Straight, Rel::Up, Rel::Straight}};
    auto s = b.system();
    auto back = parse_certificate(serialize_certificate(b.a, c), b.a, s);
    REQUIRE(back.flexibility);
    CHECK(back.flexibility->second == c.flexibility->second);
    CHECK(verify_certificate(s, b.a, back));

    auto one = strip(1, false);
    one.tile();
    one.bond(0, Side::E, 1, Side::W, true, 2, true);
    auto sys = one.system();
    sys.seed = Assembly{};
    sys.seed.add_tile(0, one.types[0]);
    Certificate n;
    n.nonterminality = NonterminalityCertificate{{}, {one.types[1], neighbor(kAnchorPlacement, Side::E, Rel::Down, Side::W),
                                                      {{{0, Side::E}, Side::W}}}};
    auto nb = parse_certificate(serialize_certificate(sys.seed, n), sys.seed, sys);
    REQUIRE(nb.nonterminality);
    CHECK(nb.nonterminality->site.placement == n.nonterminality->site.placement);
    CHECK(verify_certificate(sys, sys.seed, nb));
}

TEST_CASE("OBJ export") {
    Builder one;
    one.tile();
    Embedding e{kAnchorPlacement};
    auto obj = export_obj(one.a, e);
    auto fp = tile_footprint(kAnchorPlacement);
    CHECK(obj_vertices(obj) == std::set<Vec3>(fp.begin(), fp.end()));
    CHECK(obj.find("g tile_0") != std::string::npos);

    // The tube's quads share the eight corners of a unit square prism.
    auto b = tube_loop();
    auto te = *compute_embedding(b.a, {Rel::Up, Rel::Up, Rel::Up, Rel::Up}).embedding;
    std::set<Vec3> expect;
    for (const auto& p : te)
        for (auto v : tile_footprint(p)) expect.insert(v);
    CHECK(expect.size() == 8);
    CHECK(obj_vertices(export_obj(b.a, te)) == expect);
}

TEST_CASE("DIMACS parsing") {
    auto f = parse_dimacs("c example\np cnf 3 2\n1 -2 3 0\n-1 -1 -1 0\n");
    REQUIRE(f.size() == 2);
    CHECK(f[0] == Clause{1, -2, 3});
    CHECK(f[1] == Clause{-1, -1, -1});
    CHECK(parse_dimacs(write_dimacs(f)) == f);
    CHECK(parse_dimacs("1 2\n3 0\n") == Cnf{{1, 2, 3}});
    CHECK_THROWS_AS(parse_dimacs("1 2 0\n"), FormatError);
    CHECK_THROWS_AS(parse_dimacs("1 2 3 4 0\n"), FormatError);
    CHECK_THROWS_AS(parse_dimacs("1 x 3 0\n"), FormatError);
}

TEST_CASE("metadata and search restrictions round-trip") {
    auto b = square_loop(true);
    StagedSystem ss{b.system(), {}};
    ss.metadata = {{"rows", 2}, {"cols", 3}};
    auto back = parse_system(serialize_system(ss));
    CHECK(back.metadata == ss.metadata);

    Snapshot snap;
    snap.system = ss;
    snap.assembly = b.a;
    snap.allowed = {rel_bit(Rel::Straight), static_cast<std::uint8_t>(rel_bit(Rel::Up) | rel_bit(Rel::Down)),
                    7, rel_bit(Rel::Down)};
    auto text = serialize_snapshot(snap);
    CHECK(text.find("\"UD\"") != std::string::npos);
    auto again = parse_snapshot(text);
    CHECK(again.allowed == snap.allowed);
    CHECK(again.system.metadata == ss.metadata);
    CHECK(serialize_snapshot(again) == text);

    auto bad = text;
    bad.replace(bad.find("\"UD\""), 4, "\"UX\"");
    CHECK_THROWS_AS(parse_snapshot(bad), FormatError);
}
