#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>

namespace ftam {

struct Vec3 {
    int x = 0, y = 0, z = 0;

    friend Vec3 operator+(Vec3 a, Vec3 b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
    friend Vec3 operator-(Vec3 a, Vec3 b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
    friend Vec3 operator*(int k, Vec3 a) { return {k * a.x, k * a.y, k * a.z}; }
    Vec3 operator-() const { return {-x, -y, -z}; }
    int operator[](int i) const { return i == 0 ? x : (i == 1 ? y : z); }
    int& operator[](int i) { return i == 0 ? x : (i == 1 ? y : z); }
    auto operator<=>(const Vec3&) const = default;
};

// 21 bits per coordinate; callers stay well inside +-2^20.
inline std::int64_t pack(Vec3 v) {
    constexpr std::int64_t off = 1 << 20;
    return ((v.x + off) << 42) | ((v.y + off) << 21) | (v.z + off);
}

enum class Dir : std::uint8_t { PX, NX, PY, NY, PZ, NZ };
enum class Side : std::uint8_t { N, E, S, W };
enum class Rel : std::uint8_t { Straight, Up, Down, Incompatible };

inline constexpr std::array<Dir, 6> kAllDirs{Dir::PX, Dir::NX, Dir::PY, Dir::NY, Dir::PZ, Dir::NZ};
inline constexpr std::array<Side, 4> kAllSides{Side::N, Side::E, Side::S, Side::W};

Vec3 vec(Dir d);
Dir inverse(Dir d);
int axis(Dir d);
std::optional<Dir> dir_of(Vec3 v);
// Throws std::invalid_argument for parallel arguments.
Dir cross(Dir a, Dir b);

Side opposite(Side s);
char side_char(Side s);
Side side_from_char(char c);
const char* dir_name(Dir d);
std::optional<Dir> dir_from_name(const std::string& s);
const char* rel_name(Rel r);
char rel_char(Rel r);

struct Placement {
    Vec3 location;
    Dir normal = Dir::PZ;
    Dir orientation = Dir::PY;
    auto operator<=>(const Placement&) const = default;
};

bool well_formed(const Placement& p);
// Unit axes spanned by a tile with this normal, positive direction only.
std::array<Vec3, 2> plane_axes(Dir normal);

// World direction of a tile side. N is the orientation, E = orientation x normal.
Dir side_dir(const Placement& p, Side s);
// Twice the tile center; identifies the occupied square independent of normal sign.
Vec3 center2(const Placement& p);
Placement from_center2(Vec3 c2, Dir normal, Dir orientation);
// Twice the midpoint of a side; identifies the lattice edge.
Vec3 edge2(const Placement& p, Side s);

std::array<Vec3, 4> tile_footprint(const Placement& p);
bool overlaps(const Placement& a, const Placement& b);

// Throws std::invalid_argument if the tiles overlap or do not share an edge.
Rel classify_orientation(const Placement& p, const Placement& p2);
// Side of p lying on the edge shared with p2, if any.
std::optional<Side> shared_side(const Placement& p, const Placement& p2);

// Placement of the tile whose side s2 meets side s of p in relation rel.
Placement neighbor(const Placement& p, Side s, Rel rel, Side s2);

struct GlueLabel {
    std::string base;
    bool complemented = false;

    bool empty() const { return base.empty(); }
    GlueLabel complement() const;
    std::string str() const;
    static GlueLabel parse(const std::string& s);
    auto operator<=>(const GlueLabel&) const = default;
};

struct Glue {
    GlueLabel label;
    int strength = 0;
    bool flexible = false;

    bool null() const { return label.empty(); }
    bool operator==(const Glue&) const = default;
};

struct BondSpec {
    int strength = 0;
    bool flexible = false;
    bool operator==(const BondSpec&) const = default;
};

bool complementary(const GlueLabel& a, const GlueLabel& b);
std::optional<BondSpec> can_bind(const Glue& g, const Glue& g2, Rel rel);

// Proper lattice rotations as signed permutation matrices.
struct Rotation {
    std::array<int, 9> m{};
    Vec3 apply(Vec3 v) const;
    Dir apply(Dir d) const;
    Placement apply(const Placement& p) const;
};
const std::array<Rotation, 24>& rotations();

}  // namespace ftam
