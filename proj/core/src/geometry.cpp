#include "ftam/geometry.hpp"

#include <stdexcept>

namespace ftam {

Vec3 vec(Dir d) {
    switch (d) {
        case Dir::PX: return {1, 0, 0};
        case Dir::NX: return {-1, 0, 0};
        case Dir::PY: return {0, 1, 0};
        case Dir::NY: return {0, -1, 0};
        case Dir::PZ: return {0, 0, 1};
        case Dir::NZ: return {0, 0, -1};
    }
    return {};
}

Dir inverse(Dir d) { return static_cast<Dir>(static_cast<int>(d) ^ 1); }

int axis(Dir d) { return static_cast<int>(d) >> 1; }

std::optional<Dir> dir_of(Vec3 v) {
    for (Dir d : kAllDirs)
        if (vec(d) == v) return d;
    return std::nullopt;
}

Dir cross(Dir a, Dir b) {
    Vec3 u = vec(a), v = vec(b);
    Vec3 c{u.y * v.z - u.z * v.y, u.z * v.x - u.x * v.z, u.x * v.y - u.y * v.x};
    auto d = dir_of(c);
    if (!d) throw std::invalid_argument("cross of parallel directions");
    return *d;
}

Side opposite(Side s) { return static_cast<Side>((static_cast<int>(s) + 2) & 3); }

char side_char(Side s) { return "NESW"[static_cast<int>(s)]; }

Side side_from_char(char c) {
    switch (c) {
        case 'N': return Side::N;
        case 'E': return Side::E;
        case 'S': return Side::S;
        case 'W': return Side::W;
    }
    throw std::invalid_argument(std::string("bad side '") + c + "'");
}

const char* dir_name(Dir d) {
    static const char* names[] = {"+x", "-x", "+y", "-y", "+z", "-z"};
    return names[static_cast<int>(d)];
}

std::optional<Dir> dir_from_name(const std::string& s) {
    for (Dir d : kAllDirs)
        if (s == dir_name(d)) return d;
    return std::nullopt;
}

const char* rel_name(Rel r) {
    static const char* names[] = {"Straight", "Up", "Down", "Incompatible"};
    return names[static_cast<int>(r)];
}

char rel_char(Rel r) { return "SUDX"[static_cast<int>(r)]; }

bool well_formed(const Placement& p) { return axis(p.normal) != axis(p.orientation); }

std::array<Vec3, 2> plane_axes(Dir normal) {
    switch (axis(normal)) {
        case 0: return {Vec3{0, 1, 0}, Vec3{0, 0, 1}};
        case 1: return {Vec3{1, 0, 0}, Vec3{0, 0, 1}};
        default: return {Vec3{1, 0, 0}, Vec3{0, 1, 0}};
    }
}

static void require(const Placement& p) {
    if (!well_formed(p)) throw std::invalid_argument("orientation not perpendicular to normal");
}

Dir side_dir(const Placement& p, Side s) {
    require(p);
    Dir east = cross(p.orientation, p.normal);
    switch (s) {
        case Side::N: return p.orientation;
        case Side::E: return east;
        case Side::S: return inverse(p.orientation);
        case Side::W: return inverse(east);
    }
    return p.orientation;
}

Vec3 center2(const Placement& p) {
    require(p);
    auto [u, v] = plane_axes(p.normal);
    return 2 * p.location + u + v;
}

Placement from_center2(Vec3 c2, Dir normal, Dir orientation) {
    auto [u, v] = plane_axes(normal);
    Vec3 l = c2 - u - v;
    return {{l.x / 2, l.y / 2, l.z / 2}, normal, orientation};
}

Vec3 edge2(const Placement& p, Side s) { return center2(p) + vec(side_dir(p, s)); }

std::array<Vec3, 4> tile_footprint(const Placement& p) {
    require(p);
    auto [u, v] = plane_axes(p.normal);
    const Vec3 l = p.location;
    return {l, l + u, l + v, l + u + v};
}

bool overlaps(const Placement& a, const Placement& b) { return center2(a) == center2(b); }

Rel classify_orientation(const Placement& p, const Placement& p2) {
    if (overlaps(p, p2)) throw std::invalid_argument("overlapping placements");
    Vec3 diff = center2(p2) - center2(p);
    const Vec3 n = vec(p.normal);
    if (axis(p.normal) == axis(p2.normal)) {
        // Coplanar neighbours sit two half-units apart along an in-plane axis.
        if (n.x * diff.x + n.y * diff.y + n.z * diff.z == 0) {
            auto d = dir_of(Vec3{diff.x / 2, diff.y / 2, diff.z / 2});
            if (d && 2 * vec(*d) == diff)
                return p.normal == p2.normal ? Rel::Straight : Rel::Incompatible;
        }
        throw std::invalid_argument("tiles do not share an edge");
    }
    // Perpendicular neighbours: diff = d + n or d - n, d along the other normal axis.
    for (int sign : {1, -1}) {
        auto d = dir_of(diff - sign * n);
        if (!d || axis(*d) != axis(p2.normal)) continue;
        if (sign == 1) return p2.normal == inverse(*d) ? Rel::Up : Rel::Incompatible;
        return p2.normal == *d ? Rel::Down : Rel::Incompatible;
    }
    throw std::invalid_argument("tiles do not share an edge");
}

std::optional<Side> shared_side(const Placement& p, const Placement& p2) {
    for (Side s : kAllSides)
        for (Side t : kAllSides)
            if (edge2(p, s) == edge2(p2, t)) return s;
    return std::nullopt;
}

Placement neighbor(const Placement& p, Side s, Rel rel, Side s2) {
    const Vec3 d = vec(side_dir(p, s));
    const Vec3 n = vec(p.normal);
    const Vec3 c = center2(p);
    Vec3 c2, f;
    Dir n2;
    switch (rel) {
        case Rel::Straight: n2 = p.normal; c2 = c + 2 * d; f = -d; break;
        case Rel::Up: n2 = *dir_of(-d); c2 = c + d + n; f = -n; break;
        case Rel::Down: n2 = *dir_of(d); c2 = c + d - n; f = n; break;
        default: throw std::invalid_argument("neighbor with incompatible relation");
    }
    const Dir fd = *dir_of(f);
    Dir o;
    switch (s2) {
        case Side::N: o = fd; break;
        case Side::S: o = inverse(fd); break;
        case Side::E: o = cross(n2, fd); break;
        default: o = cross(fd, n2); break;
    }
    return from_center2(c2, n2, o);
}

GlueLabel GlueLabel::complement() const {
    if (empty()) throw std::logic_error("the null label has no complement");
    return {base, !complemented};
}

std::string GlueLabel::str() const { return complemented ? base + "*" : base; }

GlueLabel GlueLabel::parse(const std::string& s) {
    if (!s.empty() && s.back() == '*') return {s.substr(0, s.size() - 1), true};
    return {s, false};
}

bool complementary(const GlueLabel& a, const GlueLabel& b) {
    return !a.empty() && a.base == b.base && a.complemented != b.complemented;
}

std::optional<BondSpec> can_bind(const Glue& g, const Glue& g2, Rel rel) {
    if (rel == Rel::Incompatible || g.null() || g2.null()) return std::nullopt;
    if (!complementary(g.label, g2.label) || g.strength != g2.strength || g.strength <= 0)
        return std::nullopt;
    if (g.flexible != g2.flexible) return std::nullopt;
    if (!g.flexible && rel != Rel::Straight) return std::nullopt;
    return BondSpec{g.strength, g.flexible};
}

Vec3 Rotation::apply(Vec3 v) const {
    return {m[0] * v.x + m[1] * v.y + m[2] * v.z, m[3] * v.x + m[4] * v.y + m[5] * v.z,
            m[6] * v.x + m[7] * v.y + m[8] * v.z};
}

Dir Rotation::apply(Dir d) const { return *dir_of(apply(vec(d))); }

Placement Rotation::apply(const Placement& p) const {
    return from_center2(apply(center2(p)), apply(p.normal), apply(p.orientation));
}

const std::array<Rotation, 24>& rotations() {
    static const std::array<Rotation, 24> all = [] {
        std::array<Rotation, 24> out{};
        int k = 0;
        const int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
        for (auto& pm : perms)
            for (int signs = 0; signs < 8; ++signs) {
                Rotation r;
                for (int row = 0; row < 3; ++row)
                    r.m[row * 3 + pm[row]] = (signs >> row & 1) ? -1 : 1;
                const auto& a = r.m;
                int det = a[0] * (a[4] * a[8] - a[5] * a[7]) - a[1] * (a[3] * a[8] - a[5] * a[6]) +
                          a[2] * (a[3] * a[7] - a[4] * a[6]);
                if (det == 1) out[k++] = r;
            }
        return out;
    }();
    return all;
}

}  // namespace ftam
