#include "ftam/sat3.hpp"

#include <cstdlib>
#include <deque>
#include <set>
#include <stdexcept>

namespace ftam {

namespace {

Placement xy(int x, int y, int z) { return {{x, y, z}, Dir::PZ, Dir::PY}; }
Placement xz(int x, int y, int z) { return {{x, y, z}, Dir::PY, Dir::PZ}; }  // in the plane y = const
Placement yz(int x, int y, int z) { return {{x, y, z}, Dir::PX, Dir::PZ}; }  // in the plane x = const

// SAH swung open about the ES's far edge, TAH swung open about the near edge.
constexpr Rotation kSahOpen{{0, 0, 1, 0, 1, 0, -1, 0, 0}};
constexpr Rotation kSahClose{{0, 0, -1, 0, 1, 0, 1, 0, 0}};
constexpr Rotation kTahOpen{{0, 0, -1, 0, 1, 0, 1, 0, 0}};

Placement moved(const Placement& p, const Rotation& r, Vec3 pivot2, Vec3 shift2 = {}) {
    Vec3 c = r.apply(center2(p) - pivot2) + pivot2 + shift2;
    return from_center2(c, r.apply(p.normal), r.apply(p.orientation));
}

Rel flip(Rel r) {
    if (r == Rel::Up) return Rel::Down;
    if (r == Rel::Down) return Rel::Up;
    return r;
}

struct Raw {
    int a, b;
    bool flexible;
};

struct Layout {
    Target t;
    std::map<Vec3, int> at;  // center2 -> tile
    std::vector<Raw> links;

    int add(const Placement& p, const std::string& name) {
        Vec3 c = center2(p);
        if (at.count(c)) throw std::logic_error("sat3 layout: " + name + " overlaps " + t.names[at[c]]);
        int i = t.add(p, name);
        at[c] = i;
        return i;
    }
    int find(const Placement& p) const {
        auto it = at.find(center2(p));
        if (it == at.end()) throw std::logic_error("sat3 layout: no tile at requested placement");
        return it->second;
    }
    int link(int a, int b, bool flexible) {
        links.push_back({a, b, flexible});
        return static_cast<int>(links.size()) - 1;
    }
};

// Adds an outline, dropping the links that sit on any of the given edges.
std::map<Vec3, int> add_outline(Layout& L, const Polycube& p, const std::string& prefix, const std::set<Vec3>& cut,
                                const Rotation& r, Vec3 pivot2) {
    Target o = polycube_outline(p, 1);
    std::vector<int> idx(o.placements.size());
    std::map<Vec3, int> by_home;
    for (std::size_t i = 0; i < o.placements.size(); ++i) {
        idx[i] = L.add(moved(o.placements[i], r, pivot2), prefix + o.names[i]);
        by_home[center2(o.placements[i])] = idx[i];
    }
    for (const auto& l : o.links) {
        const auto& pa = o.placements[l.a];
        Vec3 e = edge2(pa, *shared_side(pa, o.placements[l.b]));
        if (cut.count(e)) continue;
        L.link(idx[l.a], idx[l.b], l.flexible);
    }
    return by_home;
}

// Flips tile normals so that every link joins compatible faces.
void orient(Layout& L) {
    const int n = static_cast<int>(L.t.placements.size());
    std::vector<std::vector<int>> adj(n);
    for (const auto& l : L.links) {
        adj[l.a].push_back(l.b);
        adj[l.b].push_back(l.a);
    }
    auto& P = L.t.placements;
    std::vector<char> seen(n, 0);
    seen[0] = 1;
    std::deque<int> q{0};
    while (!q.empty()) {
        int t = q.front();
        q.pop_front();
        for (int o : adj[t]) {
            if (seen[o]) continue;
            if (classify_orientation(P[t], P[o]) == Rel::Incompatible) P[o].normal = inverse(P[o].normal);
            seen[o] = 1;
            q.push_back(o);
        }
    }
    for (int i = 0; i < n; ++i)
        if (!seen[i]) throw std::logic_error("sat3 layout: " + L.t.names[i] + " is not connected");
    for (const auto& l : L.links) {
        Rel r = classify_orientation(P[l.a], P[l.b]);
        if (r == Rel::Incompatible) throw std::logic_error("sat3 layout: non-orientable at " + L.t.names[l.a]);
        if (!l.flexible && r != Rel::Straight) throw std::logic_error("sat3 layout: rigid fold at " + L.t.names[l.a]);
        L.t.links.push_back({l.a, l.b, l.flexible});
    }
}

Vec3 edge_dir(const Placement& p, Side s) { return vec(cross(side_dir(p, s), p.normal)); }

Side side_facing(const Placement& p, Dir d) {
    for (Side s : kAllSides)
        if (side_dir(p, s) == d) return s;
    throw std::logic_error("sat3 layout: no side faces the requested direction");
}

}  // namespace

std::string Sat3Machine::main_loop_string(const Configuration& c) const {
    std::string s;
    for (int b : main_loop) s += rel_char(c[b]);
    return s;
}

std::string Sat3Machine::checker_string(const Configuration& c, int clause, int strip) const {
    std::string s;
    for (int i = 0; i < 8; ++i) s += rel_char(c[checkers[clause][8 * strip + i]]);
    return s;
}

std::vector<int> Sat3Machine::free_bonds() const {
    std::vector<int> out(main_loop.begin(), main_loop.end());
    for (const auto& g : checkers) out.insert(out.end(), g.begin(), g.end());
    for (const auto& g : vcgs) out.insert(out.end(), g.begin(), g.end());
    return out;
}

Sat3Machine generate_sat3(const Cnf& f, Sat3Variant variant) {
    if (f.empty()) throw std::invalid_argument("formula has no clauses");
    Sat3Machine m;
    m.formula = f;
    m.variant = variant;

    std::map<int, int> polarity;  // bit 0 positive, bit 1 negative
    std::vector<int> seen;
    for (const auto& cl : f)
        for (int lit : cl) {
            if (lit == 0) throw std::invalid_argument("literal 0 in formula");
            int v = std::abs(lit);
            if (!polarity.count(v)) seen.push_back(v);
            polarity[v] |= lit > 0 ? 1 : 2;
        }
    std::map<int, int> var_index;
    for (int v : seen) {
        if (polarity[v] == 3) {
            var_index[v] = static_cast<int>(m.variables.size());
            m.variables.push_back(v);
        } else {
            m.stripped.push_back(v);
        }
    }

    const int clauses = static_cast<int>(f.size());
    const int W = 17;               // ES length along x, also the rope length
    const int D = 3 * clauses + 1;  // ES rows; row 0 carries the main loop
    const int Y = D + 1;            // positive crossbar row, the negative one is north of it
    auto hy = [](int j) { return 2 + 3 * j; };
    auto hx = [](int k) { return 10 + 2 * k; };
    auto chimney = [](int i) { return 3 + 4 * i; };

    auto gadget = [&](int j, int k) { return var_index.count(std::abs(f[j][k])) > 0; };
    std::set<std::pair<int, int>> holes;
    for (int j = 0; j < clauses; ++j)
        for (int k = 0; k < 3; ++k)
            if (gadget(j, k)) holes.insert({hx(k), hy(j)});

    Layout L;
    const Rotation id{{1, 0, 0, 0, 1, 0, 0, 0, 1}};

    // Evaluation space.
    std::map<std::pair<int, int>, int> es;
    for (int y = 0; y < D; ++y)
        for (int x = 0; x < W; ++x)
            if (!holes.count({x, y}))
                es[{x, y}] = L.add(xy(x, y, 0), "es_" + std::to_string(x) + "_" + std::to_string(y));
    for (auto [c, i] : es) {
        auto [x, y] = c;
        if (es.count({x + 1, y})) L.link(i, es[{x + 1, y}], false);
        if (es.count({x, y + 1})) L.link(i, es[{x, y + 1}], false);
    }

    // Trivial assignment hat, pressed on the ES.
    Polycube tah;
    for (int y = 1; y < D; ++y)
        for (int x = -1; x < W; ++x)
            for (int z = 2; z < 4; ++z) tah.voxels.insert({x, y, z});
    for (Vec3 v : {Vec3{-1, 0, 0}, {-1, 0, 1}, {-1, 0, 2}, {-1, 0, 3}, {0, 0, 3}, {1, 0, 3}}) tah.voxels.insert(v);
    for (int j = 0; j < clauses; ++j) {
        for (int z = 2; z < 6; ++z) tah.voxels.insert({W, hy(j), z});  // checker block
        for (int k = 0; k < 3; ++k)
            if (gadget(j, k) && f[j][k] < 0) tah.voxels.insert({hx(k), hy(j), 1});  // force bump
    }
    auto tah_at = add_outline(L, tah, "tah:", {{0, 1, 0}, {4, 1, 6}, {3, 0, 6}}, id, {});
    const int tah_attach = tah_at.at(center2(xy(-1, 0, 0)));
    const int tah_rope = tah_at.at(center2(xy(1, 0, 3)));

    // Rope.
    std::vector<int> rope;
    for (int i = 0; i < W; ++i) {
        rope.push_back(L.add(xy(2 + i, 0, 3), "rope_" + std::to_string(i)));
        if (i) L.link(rope[i - 1], rope[i], false);
    }

    // Variable constraint gadgets.
    m.vcgs.resize(m.variables.size());
    std::map<std::pair<int, bool>, std::map<std::pair<int, int>, int>> level;  // (var, positive) -> cells
    auto level_z = [&](int i, bool positive) { return positive ? 1 - chimney(i) : -1 - chimney(i); };
    for (int i = 0; i < static_cast<int>(m.variables.size()); ++i)
        for (bool pos : {true, false}) {
            std::set<std::pair<int, int>> cells;
            const int row = pos ? Y : Y + 1;
            int lo = W;
            for (int j = 0; j < clauses; ++j)
                for (int k = 0; k < 3; ++k) {
                    int lit = f[j][k];
                    if (var_index.count(std::abs(lit)) && var_index[std::abs(lit)] == i && (lit > 0) == pos) {
                        for (int y = hy(j); y <= row; ++y) cells.insert({hx(k), y});
                        lo = std::min(lo, hx(k));
                    }
                }
            const int bx = W + 2 + 2 * i;
            for (int x = lo; x <= bx; ++x) cells.insert({x, row});
            auto& lv = level[{i, pos}];
            const int z = level_z(i, pos);
            const std::string tag = "lvl_" + std::to_string(m.variables[i]) + (pos ? "p_" : "n_");
            for (auto [x, y] : cells) lv[{x, y}] = L.add(xy(x, y, z), tag + std::to_string(x) + "_" + std::to_string(y));
            for (auto [c, t] : lv) {
                auto [x, y] = c;
                if (lv.count({x + 1, y})) L.link(t, lv[{x + 1, y}], false);
                if (lv.count({x, y + 1})) L.link(t, lv[{x, y + 1}], false);
            }
        }
    for (int j = 0; j < clauses; ++j)
        for (int k = 0; k < 3; ++k) {
            if (!gadget(j, k)) continue;
            const int lit = f[j][k], i = var_index[std::abs(lit)];
            const bool pos = lit > 0;
            const int capz = pos ? 1 : -1, low = level_z(i, pos);
            const int x = hx(k), y = hy(j);
            const std::string tag = std::to_string(j) + "_" + std::to_string(k);
            int cap = L.add(xy(x, y, capz), "cap_" + tag);
            int legs = L.add(xz(x, y, pos ? 0 : -1), "leg_s_" + tag);
            int legn = L.add(xz(x, y + 1, pos ? 0 : -1), "leg_n_" + tag);
            auto& g = m.vcgs[i];
            g.push_back(L.link(es.at({x, y - 1}), legs, true));
            g.push_back(L.link(legs, cap, true));
            g.push_back(L.link(es.at({x, y + 1}), legn, true));
            g.push_back(L.link(legn, cap, true));
            for (int side = 0; side < 2; ++side) {
                int prev = cap;
                for (int z = capz - 1; z >= low; --z) {
                    int t = L.add(yz(x + side, y, z), (side ? "che_" : "chw_") + tag + "_" + std::to_string(z));
                    L.link(prev, t, prev == cap);
                    prev = t;
                }
                L.link(prev, level[{i, pos}].at({x, y}), true);
            }
        }
    for (int i = 0; i < static_cast<int>(m.variables.size()); ++i) {
        const int bx = W + 2 + 2 * i, c = chimney(i);
        const std::string tag = std::to_string(m.variables[i]);
        int bottom = L.add(xz(bx, Y + 1, -1 - c), "bridge_" + tag + "_0");
        int top = L.add(xz(bx, Y + 1, -c), "bridge_" + tag + "_1");
        L.link(bottom, top, false);
        m.vcgs[i].push_back(L.link(level[{i, true}].at({bx, Y}), top, true));
        m.vcgs[i].push_back(L.link(level[{i, false}].at({bx, Y + 1}), bottom, true));
    }

    // Satisfying assignment hat, designed pressed on the ES and swung open.
    const Vec3 sah_pivot{2 * W, 0, 0};
    const std::array<int, 3> ends{hx(0), hx(1), hx(2)};
    Polycube sah;
    for (int y = 1; y < D; ++y)
        for (int x = 1; x <= W; ++x)
            for (int z = 2; z < 4; ++z) sah.voxels.insert({x, y, z});
    for (int x = W - 3; x <= W; ++x) sah.voxels.insert({x, 0, 2});
    sah.voxels.insert({W, 0, 0});
    sah.voxels.insert({W, 0, 1});
    std::set<Vec3> sah_cut{{2 * W, 1, 0}, {2 * (W - 3), 1, 4}};
    for (int j = 0; j < clauses; ++j) {
        for (int r : {hy(j), hy(j) + 1}) {
            sah.voxels.erase({1, r, 2});  // strip anchor step
            for (int x : {2, 3, 6, 7}) sah.voxels.insert({x, r, 4});  // niches
            sah_cut.insert({4, 2 * r + 1, 6});
        }
        for (int e : ends) sah_cut.insert({2 * e, 2 * hy(j) + 1, 4});
    }
    auto sah_at = add_outline(L, sah, "sah:", sah_cut, kSahOpen, sah_pivot);
    auto sah_tile = [&](const Placement& pressed) { return sah_at.at(center2(pressed)); };
    const int sah_attach = sah_tile(xy(W, 0, 0));
    const int sah_rope = sah_tile(xy(W - 3, 0, 2));

    // Checkers, two strips per clause, folded twice in the trivial state.
    m.checkers.resize(clauses);
    for (int j = 0; j < clauses; ++j) {
        std::array<std::array<int, 2>, 2> last{};
        for (int s = 0; s < 2; ++s) {
            const int r = hy(j) + s;
            const std::string tag = "chk_" + std::to_string(j) + "_" + std::to_string(s) + "_";
            auto add = [&](const Placement& p, const std::string& name) {
                return L.add(moved(p, kSahOpen, sah_pivot), tag + name);
            };
            // Pieces q1..q8: legs of one tile, tops and flats of two.
            std::vector<std::vector<int>> q(9);
            q[0] = {sah_tile(xy(1, r, 3))};
            q[1] = {add(yz(2, r, 3), "q1")};
            q[2] = {add(xy(2, r, 4), "q2a"), add(xy(3, r, 4), "q2b")};
            q[3] = {add(yz(4, r, 3), "q3")};
            q[4] = {add(xy(4, r, 3), "q4a"), add(xy(5, r, 3), "q4b")};
            q[5] = {add(yz(6, r, 3), "q5")};
            q[6] = {add(xy(6, r, 4), "q6a"), add(xy(7, r, 4), "q6b")};
            q[7] = {add(yz(8, r, 3), "q7")};
            q[8] = {add(xy(8, r, 3), "q8a"), add(xy(9, r, 3), "q8b")};
            for (int b = 1; b <= 8; ++b) {
                m.checkers[j][8 * s + b - 1] = L.link(q[b - 1].back(), q[b].front(), true);
                if (q[b].size() == 2) L.link(q[b][0], q[b][1], false);
            }
            last[s] = {q[8][0], q[8][1]};
            if (s == 0) {
                int d1 = add(yz(ends[0], r, 2), "drop1");
                int d2 = add(yz(ends[0], r, 1), "drop2");
                int blk = add(xy(ends[0], r, 1), "blocker");
                L.link(q[8][1], d1, true);
                L.link(d1, d2, false);
                L.link(d2, blk, true);
            }
        }
        L.link(last[0][0], last[1][0], false);
        L.link(last[0][1], last[1][1], false);
    }

    // Main loop.
    m.main_loop = {L.link(es.at({W - 1, 0}), sah_attach, true), L.link(sah_rope, rope.back(), true),
                   L.link(rope.front(), tah_rope, true), L.link(tah_attach, es.at({0, 0}), true)};

    orient(L);
    m.target = L.t;
    const auto& P = m.target.placements;

    // Satisfied-state relations of the main loop from the moved endpoints.
    auto satisfied = [&](int t) {
        const std::string& n = m.target.names[t];
        if (n.rfind("tah:", 0) == 0) return moved(P[t], kTahOpen, {});
        if (n.rfind("rope_", 0) == 0) return moved(P[t], id, {}, {-10, 0, -2});
        if (n.rfind("sah:", 0) == 0) return moved(P[t], kSahClose, sah_pivot);
        return P[t];
    };
    for (int i = 0; i < 4; ++i) {
        const auto& l = m.target.links[m.main_loop[i]];
        m.satisfied_main[i] = classify_orientation(satisfied(l.a), satisfied(l.b));
    }

    CompileOptions opt;
    opt.prefix = "sat3:";
    opt.seed = {0};
    opt.link_strength.assign(m.target.links.size(), 2);
    auto compiled = compile_target(m.target, opt);
    auto types = compiled.types;

    if (variant == Sat3Variant::Terminality) {
        // Two single-strength glues facing -y on the rope's first tile and the TAH tile it meets.
        const int R = rope.front(), T = tah_rope;
        const Side rs = side_facing(P[R], Dir::NY), ts = side_facing(P[T], Dir::NY);
        auto with = [&](int t, Side s, const std::string& label) {
            auto copy = std::make_shared<TileType>(*types[t]);
            copy->glue(s) = {{label, false}, 1, true};
            types[t] = copy;
        };
        with(R, rs, "sat3:lock-rope");
        with(T, ts, "sat3:lock-tah");
        // The lock square closes the corner the two tiles form in the satisfied state.
        Placement r2 = satisfied(R), t2 = satisfied(T);
        Side rs2 = side_facing(r2, Dir::NY), ts2 = side_facing(t2, Dir::NY);
        Vec3 e1 = edge2(r2, rs2), e2 = edge2(t2, ts2);
        Vec3 u1 = edge_dir(r2, rs2), u2 = edge_dir(t2, ts2);
        std::optional<Vec3> corner;
        for (int a : {1, -1})
            for (int b : {1, -1})
                if (e1 + a * u1 == e2 + b * u2) corner = e1 + a * u1;
        if (!corner) throw std::logic_error("sat3 layout: lock edges do not meet");
        Vec3 c = e1 + e2 - *corner;
        auto lock = std::make_shared<TileType>();
        lock->id = "sat3:lock";
        for (Dir n : {Dir::PY, Dir::NY}) {
            Placement lp = from_center2(c, n, *dir_of(e1 - c));
            if (classify_orientation(r2, lp) == Rel::Incompatible || classify_orientation(t2, lp) == Rel::Incompatible)
                continue;
            for (Side s : kAllSides)
                if (edge2(lp, s) == e2) lock->glue(s) = {{"sat3:lock-tah", true}, 1, true};
            lock->glue(Side::N) = {{"sat3:lock-rope", true}, 1, true};
            break;
        }
        m.lock = lock;
    }

    m.system.temperature = 2;
    m.system.tile_types = types;
    if (m.lock) m.system.tile_types.push_back(m.lock);
    m.system.seed = target_assembly(m.target, types);
    m.trivial = m.target.configuration();

    const std::string t8 = m.checker_string(m.trivial, 0, 0);
    m.sequences = {t8, t8.substr(0, 4) + "SSSS", "SSSSSSSS"};

    m.dimensions = {{"es_length", W},
                    {"es_rows", D},
                    {"rope_length", W},
                    {"clauses", clauses},
                    {"variables", static_cast<int>(m.variables.size())},
                    {"stripped", static_cast<int>(m.stripped.size())},
                    {"tiles", static_cast<int>(P.size())},
                    {"bonds", static_cast<int>(m.target.links.size())}};
    return m;
}

Configuration sat_state_config(const Sat3Machine& m, const std::map<int, bool>& assignment) {
    Configuration c = m.trivial;
    for (int i = 0; i < 4; ++i) c[m.main_loop[i]] = m.satisfied_main[i];
    for (std::size_t i = 0; i < m.variables.size(); ++i) {
        auto it = assignment.find(m.variables[i]);
        if (it == assignment.end())
            throw std::invalid_argument("assignment misses variable " + std::to_string(m.variables[i]));
        if (it->second)
            for (int b : m.vcgs[i]) c[b] = flip(c[b]);
    }
    std::set<int> eligible(m.variables.begin(), m.variables.end());
    for (std::size_t j = 0; j < m.formula.size(); ++j) {
        int slot = 0;
        for (int k = 2; k >= 0; --k) {
            int lit = m.formula[j][k], v = std::abs(lit);
            if (!eligible.count(v) || assignment.at(v) == (lit > 0)) slot = k;
        }
        for (int s = 0; s < 2; ++s)
            for (int b = 0; b < 8; ++b) {
                char ch = m.sequences[slot][b];
                c[m.checkers[j][8 * s + b]] = ch == 'S' ? Rel::Straight : ch == 'U' ? Rel::Up : Rel::Down;
            }
    }
    return c;
}

std::vector<std::uint8_t> sat3_factored_mask(const Sat3Machine& m, bool satisfied_only) {
    std::vector<std::uint8_t> mask(m.trivial.size());
    for (std::size_t b = 0; b < mask.size(); ++b) mask[b] = rel_bit(m.trivial[b]);
    const std::uint8_t all = rel_bit(Rel::Straight) | rel_bit(Rel::Up) | rel_bit(Rel::Down);
    for (int b : m.free_bonds()) mask[b] = all;
    if (satisfied_only)
        for (int i = 0; i < 4; ++i) mask[m.main_loop[i]] = rel_bit(m.satisfied_main[i]);
    return mask;
}

EnumResult sat3_factored_search(const Sat3Machine& m, bool satisfied_only, std::uint64_t budget) {
    EnumOptions opt;
    opt.node_budget = budget;
    opt.allowed = sat3_factored_mask(m, satisfied_only);
    return enumerate_configs(m.assembly(), opt);
}

std::optional<std::map<int, bool>> brute_force_sat(const Cnf& f) {
    std::set<int> vars;
    for (const auto& cl : f)
        for (int lit : cl) vars.insert(std::abs(lit));
    std::vector<int> vs(vars.begin(), vars.end());
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << vs.size()); ++code) {
        std::map<int, bool> a;
        for (std::size_t i = 0; i < vs.size(); ++i) a[vs[i]] = (code >> i) & 1;
        bool ok = true;
        for (const auto& cl : f) {
            bool sat = false;
            for (int lit : cl) sat = sat || a[std::abs(lit)] == (lit > 0);
            ok = ok && sat;
        }
        if (ok) return a;
    }
    return std::nullopt;
}

}  // namespace ftam
