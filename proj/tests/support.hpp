#pragma once

#include <map>
#include <memory>
#include <random>
#include <string>
#include <tuple>
#include <unordered_set>
#include <vector>

#include "ftam/configspace.hpp"

namespace testing_support {

using namespace ftam;

// Builds assemblies with one fresh tile type per tile and one fresh glue pair per bond.
struct Builder {
    Assembly a;
    std::vector<std::shared_ptr<TileType>> types;
    int next_glue = 0;
    int temperature = 2;

    int tile() {
        int uid = static_cast<int>(types.size());
        auto t = std::make_shared<TileType>();
        t->id = "t" + std::to_string(uid);
        types.push_back(t);
        a.add_tile(uid, t);
        return uid;
    }

    // Puts complementary glues on both sides; binds them unless only_glue is set.
    int bond(int u, Side s, int v, Side t, bool flexible, int strength = 2, bool only_glue = false) {
        std::string base = "g" + std::to_string(next_glue++);
        types[u]->glue(s) = Glue{{base, false}, strength, flexible};
        types[v]->glue(t) = Glue{{base, true}, strength, flexible};
        if (only_glue) return -1;
        return a.add_bond({u, s}, {v, t}, flexible, strength);
    }

    FtamSystem system() const {
        FtamSystem s;
        s.seed = a;
        s.temperature = temperature;
        for (const auto& t : types) s.tile_types.push_back(t);
        return s;
    }
};

// A chain of n tiles joined W-E.
inline Builder strip(int n, bool flexible) {
    Builder b;
    for (int i = 0; i < n; ++i) b.tile();
    for (int i = 0; i + 1 < n; ++i) b.bond(i, Side::E, i + 1, Side::W, flexible);
    return b;
}

// Four tiles around a 2x2 block, every adjacency a bond.
inline Builder square_loop(bool flexible) {
    Builder b;
    for (int i = 0; i < 4; ++i) b.tile();
    b.bond(0, Side::E, 1, Side::W, flexible);
    b.bond(1, Side::N, 2, Side::S, flexible);
    b.bond(2, Side::W, 3, Side::E, flexible);
    b.bond(3, Side::S, 0, Side::N, flexible);
    return b;
}

// Four tiles around a unit tube: each tile's N side bonds the next tile's S side.
inline Builder tube_loop() {
    Builder b;
    for (int i = 0; i < 4; ++i) b.tile();
    for (int i = 0; i < 4; ++i) b.bond(i, Side::N, (i + 1) % 4, Side::S, true);
    return b;
}

// Three tiles meeting at a convex corner, pairwise flexible.
inline Builder convex_corner() {
    Builder b;
    for (int i = 0; i < 3; ++i) b.tile();
    b.bond(0, Side::E, 1, Side::W, true);
    b.bond(1, Side::N, 2, Side::E, true);
    b.bond(2, Side::S, 0, Side::N, true);
    return b;
}

// Assembly whose bond sides come from explicit placements; returns the matching configuration.
struct Placed {
    Builder b;
    Configuration config;
};

inline Placed from_placements(const std::vector<Placement>& ps,
                              const std::vector<std::tuple<int, int, bool>>& bonds) {
    Placed out;
    for (std::size_t i = 0; i < ps.size(); ++i) out.b.tile();
    for (auto [i, j, flexible] : bonds) {
        Side si = *shared_side(ps[i], ps[j]), sj = *shared_side(ps[j], ps[i]);
        out.b.bond(i, si, j, sj, flexible);
        out.config.push_back(classify_orientation(ps[i], ps[j]));
    }
    return out;
}

// Random assembly grown by a lattice walk; bonds are consistent with the walk's embedding,
// so at least that configuration is valid.
inline Builder random_assembly(std::mt19937_64& rng, int tiles, int max_flexible, double rigid_share = 0.3,
                               double extra_bond = 0.5) {
    Builder b;
    std::vector<Placement> place;
    std::unordered_set<std::int64_t> occ;
    std::map<std::int64_t, std::vector<std::pair<int, Side>>> sides_at;
    auto add = [&](const Placement& p) {
        int uid = b.tile();
        place.push_back(p);
        occ.insert(pack(center2(p)));
        for (Side s : kAllSides) sides_at[pack(edge2(p, s))].push_back({uid, s});
        return uid;
    };
    std::map<std::int64_t, std::pair<int, bool>> edge_use;  // count, straight
    auto edge_free = [&](std::int64_t key, bool straight) {
        auto it = edge_use.find(key);
        return it == edge_use.end() || (!it->second.second && !straight);
    };
    auto mark = [&](std::int64_t key, bool straight) {
        auto& u = edge_use[key];
        ++u.first;
        u.second = u.second || straight;
    };
    std::vector<std::vector<char>> used;
    auto side_used = [&](int uid, Side s) -> char& {
        if (static_cast<int>(used.size()) <= uid) used.resize(uid + 1, std::vector<char>(4, 0));
        return used[uid][static_cast<int>(s)];
    };
    int flexible = 0;
    add(kAnchorPlacement);
    int guard = 0;
    while (static_cast<int>(place.size()) < tiles && guard++ < 10000) {
        int from = static_cast<int>(rng() % place.size());
        Side s = kAllSides[rng() % 4];
        if (side_used(from, s)) continue;
        Rel r = static_cast<Rel>(rng() % 3);
        bool rigid = r == Rel::Straight && std::uniform_real_distribution<>(0, 1)(rng) < rigid_share;
        if (!rigid && flexible >= max_flexible) {
            if (r != Rel::Straight) continue;
            rigid = true;
        }
        Side s2 = kAllSides[rng() % 4];
        Placement p = neighbor(place[from], s, r, s2);
        if (occ.count(pack(center2(p)))) continue;
        auto key = pack(edge2(place[from], s));
        if (!edge_free(key, r == Rel::Straight)) continue;
        int uid = add(p);
        b.bond(from, s, uid, s2, !rigid);
        side_used(from, s) = side_used(uid, s2) = 1;
        mark(key, r == Rel::Straight);
        flexible += !rigid;
    }
    // Close some loops between tiles that ended up sharing an edge.
    for (auto& [key, list] : sides_at) {
        for (std::size_t i = 0; i < list.size(); ++i)
            for (std::size_t j = i + 1; j < list.size(); ++j) {
                auto [u, su] = list[i];
                auto [v, sv] = list[j];
                if (u == v || side_used(u, su) || side_used(v, sv)) continue;
                if (std::uniform_real_distribution<>(0, 1)(rng) > extra_bond) continue;
                Rel r = classify_orientation(place[u], place[v]);
                if (r == Rel::Incompatible) continue;
                bool rigid = r == Rel::Straight && std::uniform_real_distribution<>(0, 1)(rng) < rigid_share;
                if (!rigid && flexible >= max_flexible) {
                    if (r != Rel::Straight) continue;
                    rigid = true;
                }
                if (!edge_free(key, r == Rel::Straight)) continue;
                b.bond(u, su, v, sv, !rigid);
                side_used(u, su) = side_used(v, sv) = 1;
                mark(key, r == Rel::Straight);
                flexible += !rigid;
            }
    }
    return b;
}

inline TileTypePtr make_type(std::string id, std::array<Glue, 4> glues) {
    auto t = std::make_shared<TileType>();
    t->id = std::move(id);
    t->glues = glues;
    return t;
}

// Reference: lightest cut over every bipartition that keeps tile 0 on one side.
inline long exhaustive_min_cut(const Assembly& a) {
    const int n = static_cast<int>(a.size());
    long best = -1;
    for (unsigned mask = 1; mask < (1u << (n - 1)); ++mask) {
        long w = 0;
        for (const auto& b : a.bonds()) {
            int i = a.index_of(b.a.uid), j = a.index_of(b.b.uid);
            bool si = i > 0 && (mask >> (i - 1) & 1), sj = j > 0 && (mask >> (j - 1) & 1);
            if (si != sj) w += b.strength;
        }
        if (best < 0 || w < best) best = w;
    }
    return best;
}

inline Builder random_graph(std::mt19937_64& rng, int n) {
    Builder b;
    for (int i = 0; i < n; ++i) b.tile();
    // Spanning tree first, then extras; sides are reused freely since only the graph matters here.
    for (int i = 1; i < n; ++i) {
        int j = static_cast<int>(rng() % i);
        b.a.add_bond({j, Side::N}, {i, Side::S}, false, 1 + static_cast<int>(rng() % 3));
    }
    int extra = static_cast<int>(rng() % (n + 1));
    for (int k = 0; k < extra; ++k) {
        int i = static_cast<int>(rng() % n), j = static_cast<int>(rng() % n);
        if (i != j) b.a.add_bond({i, Side::E}, {j, Side::W}, false, 1 + static_cast<int>(rng() % 3));
    }
    return b;
}

// Random tile types whose glues reuse labels found on the seed, so attachments happen.
inline FtamSystem random_system(std::mt19937_64& rng, const Builder& b) {
    FtamSystem s = b.system();
    std::vector<GlueLabel> labels;
    for (const auto& t : b.types)
        for (const auto& g : t->glues)
            if (!g.null()) labels.push_back(g.label);
    // Seed tiles are fully bonded in the builder; give them some open glues of their own.
    for (auto& t : b.types)
        for (auto& g : t->glues)
            if (g.null() && rng() % 2) g = {labels[rng() % labels.size()], 1 + int(rng() % 2), rng() % 2 == 0};
    s.seed = b.a;
    int extra = 1 + int(rng() % 3);
    for (int k = 0; k < extra; ++k) {
        std::array<Glue, 4> gs{};
        for (auto& g : gs)
            if (rng() % 3)
                g = {labels[rng() % labels.size()].complement(), 1 + int(rng() % 2), rng() % 2 == 0};
        s.tile_types.push_back(make_type("x" + std::to_string(k), gs));
    }
    return s;
}

inline std::vector<Configuration> sorted(std::vector<Configuration> v) {
    std::sort(v.begin(), v.end());
    return v;
}

}  // namespace testing_support
