#include <set>
#include <vector>

#include "doctest.h"
#include "ftam/geometry.hpp"

using namespace ftam;

namespace {

Placement P(Vec3 l, Dir n, Dir o = Dir::PY) {
    if (axis(o) == axis(n)) o = Dir::PX;
    return {l, n, o};
}

// Independent reference: march both center rays (doubled units) and look for a meeting point.
Rel ray_oracle(const Placement& a, const Placement& b) {
    Vec3 ca = center2(a), cb = center2(b);
    Vec3 na = vec(a.normal), nb = vec(b.normal);
    Vec3 d = cb - ca;
    if (a.normal == b.normal && na.x * d.x + na.y * d.y + na.z * d.z == 0) return Rel::Straight;
    for (int t = 0; t <= 4; ++t)
        for (int s = 0; s <= 4; ++s) {
            if (ca + t * na == cb + s * nb) return Rel::Up;
            if (ca - t * na == cb - s * nb) return Rel::Down;
        }
    return Rel::Incompatible;
}

std::vector<Placement> all_near(Vec3 around) {
    std::vector<Placement> out;
    for (int x = -2; x <= 2; ++x)
        for (int y = -2; y <= 2; ++y)
            for (int z = -2; z <= 2; ++z)
                for (Dir n : kAllDirs)
                    for (Dir o : kAllDirs)
                        if (axis(o) != axis(n)) out.push_back({around + Vec3{x, y, z}, n, o});
    return out;
}

bool share_edge(const Placement& a, const Placement& b) {
    if (overlaps(a, b)) return false;
    return shared_side(a, b).has_value();
}

}  // namespace

TEST_CASE("direction algebra") {
    for (Dir d : kAllDirs) {
        CHECK(inverse(inverse(d)) == d);
        CHECK(vec(inverse(d)) == -vec(d));
    }
    CHECK(cross(Dir::PX, Dir::PY) == Dir::PZ);
    CHECK_THROWS(cross(Dir::PX, Dir::NX));
}

TEST_CASE("tile footprint follows the min-corner convention") {
    auto f = tile_footprint(P({0, 0, 0}, Dir::PZ, Dir::PY));
    std::set<Vec3> got(f.begin(), f.end());
    CHECK(got == std::set<Vec3>{{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {1, 1, 0}});
    auto g = tile_footprint(P({1, 0, 0}, Dir::NX, Dir::PZ));
    CHECK(std::set<Vec3>(g.begin(), g.end()) == std::set<Vec3>{{1, 0, 0}, {1, 1, 0}, {1, 0, 1}, {1, 1, 1}});
    auto h = tile_footprint(P({0, 0, 0}, Dir::PZ, Dir::PX));
    CHECK(std::set<Vec3>(h.begin(), h.end()) == got);
    CHECK_THROWS(tile_footprint({{0, 0, 0}, Dir::PZ, Dir::NZ}));
}

TEST_CASE("classify_orientation examples") {
    Placement a = P({0, 0, 0}, Dir::PZ);
    CHECK(classify_orientation(a, P({1, 0, 0}, Dir::PZ)) == Rel::Straight);
    CHECK(classify_orientation(a, P({1, 0, 0}, Dir::NX)) == Rel::Up);
    CHECK(classify_orientation(a, P({1, 0, 0}, Dir::PX)) == Rel::Incompatible);
    // Inverse rays of ((1,0,-1),+x) meet the -z ray at (0.5,0.5,-0.5).
    CHECK(classify_orientation(a, P({1, 0, -1}, Dir::PX)) == Rel::Down);
    CHECK(classify_orientation(a, P({1, 0, -1}, Dir::NX)) == Rel::Incompatible);
    CHECK_THROWS(classify_orientation(a, P({3, 0, 0}, Dir::PZ)));
    CHECK_THROWS(classify_orientation(a, P({0, 0, 0}, Dir::NZ)));
}

TEST_CASE("classification agrees with the ray oracle and is symmetric") {
    const Placement bases[] = {P({0, 0, 0}, Dir::PZ), P({2, -1, 3}, Dir::NX, Dir::PZ), P({-1, 4, 0}, Dir::PY, Dir::NX)};
    int pairs = 0;
    for (const auto& a : bases)
        for (const auto& b : all_near(a.location)) {
            if (!share_edge(a, b)) continue;
            ++pairs;
            Rel r = classify_orientation(a, b);
            CHECK(r == ray_oracle(a, b));
            CHECK(classify_orientation(b, a) == r);
        }
    CHECK(pairs > 0);
}

TEST_CASE("three relative positions per edge") {
    for (Dir n : kAllDirs) {
        Placement a = P({0, 0, 0}, n);
        for (Side s : kAllSides) {
            std::set<std::pair<Vec3, Dir>> ok;
            for (const auto& b : all_near(a.location)) {
                if (!share_edge(a, b) || edge2(b, *shared_side(b, a)) != edge2(a, s)) continue;
                if (classify_orientation(a, b) != Rel::Incompatible) ok.insert({center2(b), b.normal});
            }
            CHECK(ok.size() == 3);
        }
    }
}

TEST_CASE("neighbor places the requested side on the shared edge") {
    for (const auto& a : {P({0, 0, 0}, Dir::PZ), P({1, 2, 3}, Dir::NY, Dir::PZ)})
        for (Side s : kAllSides)
            for (Rel r : {Rel::Straight, Rel::Up, Rel::Down})
                for (Side s2 : kAllSides) {
                    Placement b = neighbor(a, s, r, s2);
                    CHECK(well_formed(b));
                    CHECK(edge2(b, s2) == edge2(a, s));
                    CHECK(classify_orientation(a, b) == r);
                }
}

TEST_CASE("can_bind rules") {
    GlueLabel a{"a", false};
    Glue r2{a, 2, false}, r2c{a.complement(), 2, false}, r1c{a.complement(), 1, false};
    Glue f2{a, 2, true}, f2c{a.complement(), 2, true};
    CHECK(can_bind(r2, r2c, Rel::Straight) == BondSpec{2, false});
    CHECK(can_bind(f2, f2c, Rel::Up) == BondSpec{2, true});
    CHECK_FALSE(can_bind(r2, r2c, Rel::Up));
    CHECK_FALSE(can_bind(r2, r1c, Rel::Straight));
    CHECK_FALSE(can_bind(Glue{}, r2c, Rel::Straight));
    CHECK_FALSE(can_bind(r2, r2, Rel::Straight));
    CHECK_FALSE(can_bind(f2, f2c, Rel::Incompatible));
    CHECK(can_bind(r2c, r2, Rel::Straight) == can_bind(r2, r2c, Rel::Straight));
    CHECK(GlueLabel::parse("a*") == a.complement());
    CHECK(GlueLabel::parse("a*").complement().complement() == GlueLabel::parse("a*"));
}

TEST_CASE("rotations are the 24 proper symmetries") {
    std::set<std::array<int, 9>> seen;
    for (const auto& r : rotations()) seen.insert(r.m);
    CHECK(seen.size() == 24);
    Placement a = P({0, 0, 0}, Dir::PZ), b = P({1, 0, 0}, Dir::NX);
    for (const auto& r : rotations())
        CHECK(classify_orientation(r.apply(a), r.apply(b)) == Rel::Up);
}
