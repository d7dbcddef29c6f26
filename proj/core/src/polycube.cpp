#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

#include "ftam/generators.hpp"

namespace ftam {

namespace {

constexpr Vec3 kUnit[3] = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};

Dir orientation_for(Dir normal) {
    switch (axis(normal)) {
        case 0: return Dir::PY;
        case 1: return Dir::PZ;
        default: return Dir::PY;
    }
}

int floor_div(int a, int b) { return a >= 0 ? a / b : -((-a + b - 1) / b); }

struct Scaled {
    const Polycube& p;
    int s;
    bool operator()(Vec3 c) const {
        return p.voxels.count({floor_div(c.x, s), floor_div(c.y, s), floor_div(c.z, s)}) != 0;
    }
};

// Tile on the face of unit cell c facing n.
Placement face_tile(Vec3 c, Dir n) {
    Vec3 loc = c;
    if (vec(n)[axis(n)] > 0) loc = loc + vec(n);
    return {loc, n, orientation_for(n)};
}

std::string cell_name(Vec3 c, Dir n) {
    return std::to_string(c.x) + "_" + std::to_string(c.y) + "_" + std::to_string(c.z) + dir_name(n);
}

std::set<Vec3> rotate_set(const std::set<Vec3>& v, const Rotation& r, bool mirror) {
    std::set<Vec3> out;
    for (Vec3 c : v) {
        // Voxel centers in doubled coordinates keep the action exact.
        Vec3 d = 2 * c + Vec3{1, 1, 1};
        if (mirror) d.x = -d.x;
        out.insert(r.apply(d));
    }
    Vec3 lo = *out.begin();
    for (Vec3 c : out)
        for (int k = 0; k < 3; ++k) lo[k] = std::min(lo[k], c[k]);
    std::set<Vec3> shifted;
    for (Vec3 c : out) shifted.insert(c - lo);
    return shifted;
}

std::set<Vec3> canonical_voxels(const std::set<Vec3>& v, bool mirror) {
    std::set<Vec3> best;
    bool have = false;
    for (const auto& r : rotations()) {
        auto cur = rotate_set(v, r, mirror);
        if (!have || cur < best) {
            best = std::move(cur);
            have = true;
        }
    }
    return best;
}

bool bends(const Polycube& p, Vec3 a, int ax) {
    // The four voxels around the unit segment from lattice point a along axis ax.
    int u = (ax + 1) % 3, w = (ax + 2) % 3;
    bool q[2][2];
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) q[i][j] = p.voxels.count(a - (1 - i) * kUnit[u] - (1 - j) * kUnit[w]) != 0;
    int n = q[0][0] + q[0][1] + q[1][0] + q[1][1];
    return n == 1 || n == 3 || (n == 2 && q[0][0] == q[1][1]);
}

}  // namespace

bool polycube_connected(const Polycube& p) {
    if (p.voxels.empty()) return false;
    std::set<Vec3> seen{*p.voxels.begin()};
    std::vector<Vec3> stack{*p.voxels.begin()};
    while (!stack.empty()) {
        Vec3 c = stack.back();
        stack.pop_back();
        for (Dir d : kAllDirs) {
            Vec3 n = c + vec(d);
            if (p.voxels.count(n) && seen.insert(n).second) stack.push_back(n);
        }
    }
    return seen.size() == p.voxels.size();
}

bool polycube_symmetric(const Polycube& p) {
    return canonical_voxels(p.voxels, false) == canonical_voxels(p.voxels, true);
}

Target polycube_outline(const Polycube& p, int s) {
    if (s < 1) throw std::invalid_argument("face scale must be positive");
    Scaled solid{p, s};
    Target t;
    std::map<std::pair<Vec3, Dir>, int> index;
    for (Vec3 v : p.voxels)
        for (int i = 0; i < s; ++i)
            for (int j = 0; j < s; ++j)
                for (int k = 0; k < s; ++k) {
                    Vec3 c = s * v + Vec3{i, j, k};
                    for (Dir n : kAllDirs)
                        if (!solid(c + vec(n))) index[{c, n}] = t.add(face_tile(c, n), cell_name(c, n));
                }
    // Walk around each edge through empty space: convex, then straight, then concave.
    std::set<std::pair<int, int>> done;
    for (const auto& [key, i] : index) {
        auto [c, n] = key;
        for (Side sd : kAllSides) {
            Dir d = side_dir(t.placements[i], sd);
            std::pair<Vec3, Dir> other;
            if (!solid(c + vec(d))) other = {c, d};
            else if (!solid(c + vec(d) + vec(n))) other = {c + vec(d), n};
            else other = {c + vec(d) + vec(n), inverse(d)};
            int j = index.at(other);
            if (done.count({std::min(i, j), std::max(i, j)})) continue;
            done.insert({std::min(i, j), std::max(i, j)});
            bool straight = classify_orientation(t.placements[i], t.placements[j]) == Rel::Straight;
            t.link(i, j, !straight);
        }
    }
    return t;
}

DeterminismReport analyze_polycube(const Polycube& p, int s) {
    if (!polycube_connected(p)) throw std::invalid_argument("polycube must be face-connected and non-empty");
    DeterminismReport r;
    r.symmetric = polycube_symmetric(p);

    // Lattice points touching the solid.
    std::set<Vec3> points;
    for (Vec3 v : p.voxels)
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                for (int k = 0; k < 2; ++k) points.insert(v + Vec3{i, j, k});

    // Edge frames: components of the bending segments.
    std::map<Vec3, Vec3> parent;
    std::function<Vec3(Vec3)> find = [&](Vec3 x) {
        auto it = parent.find(x);
        if (it == parent.end() || it->second == x) return parent[x] = x;
        return it->second = find(it->second);
    };
    for (Vec3 a : points)
        for (int ax = 0; ax < 3; ++ax)
            if (bends(p, a, ax)) parent[find(a + kUnit[ax])] = find(a);
    std::set<Vec3> roots;
    for (auto& [x, _] : parent) roots.insert(find(x));
    r.edge_frames = static_cast<int>(roots.size());
    r.edges_connected = r.edge_frames <= 1;
    if (r.edge_frames > 1)
        r.warnings.push_back(std::to_string(r.edge_frames) + " edge frames; relative chirality is not forced unless "
                             "blocking or symmetry intervenes");

    Target outline = polycube_outline(p, s);
    std::map<Vec3, std::vector<int>> at_point;  // scaled point -> outline tiles with that corner
    for (std::size_t i = 0; i < outline.placements.size(); ++i)
        for (Vec3 c : tile_footprint(outline.placements[i])) at_point[c].push_back(static_cast<int>(i));
    std::map<std::pair<int, int>, bool> flexible;
    for (const auto& l : outline.links) flexible[{std::min(l.a, l.b), std::max(l.a, l.b)}] = l.flexible;

    for (Vec3 pt : points) {
        VertexClass cls;
        try {
            cls = classify_vertex(p, pt);
        } catch (const std::invalid_argument&) {
            continue;
        }
        if (cls == VertexClass::NonVertex) continue;
        VertexReport vr{pt, cls, "", false};
        if (cls == VertexClass::V3 || cls == VertexClass::V7) r.reconfigurable_free = false;
        // Read the loop(s) of bonds around the scaled point.
        std::map<int, std::vector<std::pair<int, bool>>> around;
        for (int i : at_point[s * pt])
            for (const auto& [pair, flex] : flexible) {
                if (pair.first != i && pair.second != i) continue;
                int other = pair.first == i ? pair.second : pair.first;
                Vec3 d = edge2(outline.placements[i], *shared_side(outline.placements[i], outline.placements[other])) -
                         2 * (s * pt);
                if (std::abs(d.x) + std::abs(d.y) + std::abs(d.z) == 1) around[i].push_back({other, flex});
            }
        std::set<int> seen;
        std::vector<std::string> loops;
        for (const auto& [start, _] : around) {
            if (seen.count(start)) continue;
            std::string seq;
            int prev = -1, cur = start;
            do {
                seen.insert(cur);
                const auto& nb = around[cur];
                auto step = nb[0].first != prev ? nb[0] : nb[1];
                seq += step.second ? 'F' : 'R';
                prev = cur;
                cur = step.first;
            } while (cur != start);
            loops.push_back(seq);
        }
        for (const auto& l : loops) vr.loop += (vr.loop.empty() ? "" : "|") + l;
        if (cls != VertexClass::V3 && cls != VertexClass::V7) {
            vr.matches_protocol = true;
            for (const auto& l : loops) {
                bool any = false;
                for (int k = 0; k < perspectives(cls); ++k) {
                    auto proto = protocol_for(cls, k).bonds;
                    for (std::size_t rot = 0; rot < l.size() && !any; ++rot) {
                        std::string a = l.substr(rot) + l.substr(0, rot);
                        std::string b(a.rbegin(), a.rend());
                        any = a == proto || b == proto;
                    }
                }
                vr.matches_protocol = vr.matches_protocol && any;
            }
        }
        r.vertices.push_back(vr);
    }
    if (!r.symmetric) r.warnings.push_back("polycube is chiral; the mirror image may assemble");
    return r;
}

CompiledPolycube compile_polycube(const Polycube& p, int s) {
    if (s < 2) throw std::invalid_argument("face scale must be at least 2");
    CompiledPolycube out;
    out.report = analyze_polycube(p, s);
    for (const auto& v : out.report.vertices)
        if (v.cls == VertexClass::V3 || v.cls == VertexClass::V7)
            throw ReconfigurableError(std::string("reconfigurable vertex ") + vertex_class_name(v.cls));
    out.target = polycube_outline(p, s);

    // Seed: the three tiles around the smallest convex corner.
    std::optional<Vec3> corner;
    for (const auto& v : out.report.vertices)
        if (v.cls == VertexClass::Convex && (!corner || v.point < *corner)) corner = v.point;
    if (!corner) throw std::invalid_argument("polycube has no convex vertex");
    std::vector<int> seed;
    for (std::size_t i = 0; i < out.target.placements.size(); ++i)
        for (Vec3 c : tile_footprint(out.target.placements[i]))
            if (c == s * *corner) seed.push_back(static_cast<int>(i));
    if (seed.size() != 3) throw std::logic_error("convex corner without three tiles");

    CompileOptions opt;
    opt.prefix = "pc:";
    opt.seed = seed;
    out.compiled = compile_target(out.target, opt);
    out.system = out.compiled.system.base;
    return out;
}

}  // namespace ftam
