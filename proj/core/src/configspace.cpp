#include "ftam/configspace.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <unordered_map>

namespace ftam {

const char* config_violation_name(ConfigViolation v) {
    switch (v) {
        case ConfigViolation::Overlap: return "Overlap";
        case ConfigViolation::BondThroughSameSpace: return "BondThroughSameSpace";
        case ConfigViolation::ContradictingLoop: return "ContradictingLoop";
        case ConfigViolation::Incomplete: return "Incomplete";
    }
    return "?";
}

Configuration straight_config(const Assembly& a) { return Configuration(a.bonds().size(), Rel::Straight); }

int anchor_uid(const Assembly& a) {
    if (a.size() == 0) throw std::invalid_argument("empty assembly");
    int m = a.tiles().front().uid;
    for (const auto& t : a.tiles()) m = std::min(m, t.uid);
    return m;
}

namespace {

bool complete(const Assembly& a, const Configuration& c) {
    if (c.size() != a.bonds().size()) return false;
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i] == Rel::Incompatible) return false;
        if (!a.bonds()[i].flexible && c[i] != Rel::Straight) return false;
    }
    return true;
}

std::vector<std::vector<int>> incidence(const Assembly& a) {
    std::vector<std::vector<int>> inc(a.size());
    for (int i = 0; i < static_cast<int>(a.bonds().size()); ++i) {
        const auto& b = a.bonds()[i];
        inc[a.index_of(b.a.uid)].push_back(i);
        inc[a.index_of(b.b.uid)].push_back(i);
    }
    return inc;
}

struct EdgeUse {
    int count = 0;
    bool straight = false;
};

// Returns false if adding a bond of this kind to the edge breaks the single-straight rule.
bool edge_admits(const EdgeUse& u, bool straight) { return u.count == 0 || (!u.straight && !straight); }

}  // namespace

EmbedResult compute_embedding(const Assembly& a, const Configuration& c, int anchor, const Placement& ap) {
    if (!a.has(anchor)) throw std::invalid_argument("anchor not in assembly");
    if (!complete(a, c)) return {std::nullopt, ConfigViolation::Incomplete};
    const auto inc = incidence(a);
    Embedding e(a.size());
    std::vector<char> placed(a.size(), 0);
    int root = a.index_of(anchor);
    e[root] = ap;
    placed[root] = 1;
    std::deque<int> queue{root};
    while (!queue.empty()) {
        int t = queue.front();
        queue.pop_front();
        for (int bi : inc[t]) {
            const Bond& b = a.bonds()[bi];
            bool from_a = a.index_of(b.a.uid) == t;
            SideRef self = from_a ? b.a : b.b, other = from_a ? b.b : b.a;
            int o = a.index_of(other.uid);
            Placement p = neighbor(e[t], self.side, c[bi], other.side);
            if (!placed[o]) {
                e[o] = p;
                placed[o] = 1;
                queue.push_back(o);
            } else if (!(e[o] == p)) {
                return {std::nullopt, ConfigViolation::ContradictingLoop};
            }
        }
    }
    if (std::find(placed.begin(), placed.end(), 0) != placed.end())
        throw std::invalid_argument("assembly is disconnected");
    std::unordered_map<std::int64_t, int> occ;
    for (std::size_t i = 0; i < e.size(); ++i)
        if (!occ.emplace(pack(center2(e[i])), static_cast<int>(i)).second)
            return {std::nullopt, ConfigViolation::Overlap};
    std::unordered_map<std::int64_t, EdgeUse> edges;
    for (std::size_t i = 0; i < a.bonds().size(); ++i) {
        const Bond& b = a.bonds()[i];
        auto& u = edges[pack(edge2(e[a.index_of(b.a.uid)], b.a.side))];
        bool straight = c[i] == Rel::Straight;
        if (!edge_admits(u, straight)) return {std::nullopt, ConfigViolation::BondThroughSameSpace};
        ++u.count;
        u.straight = u.straight || straight;
    }
    return {std::move(e), std::nullopt};
}

EmbedResult compute_embedding(const Assembly& a, const Configuration& c) {
    return compute_embedding(a, c, anchor_uid(a), kAnchorPlacement);
}

Verdict validate(const Assembly& a, const Configuration& c) {
    auto r = compute_embedding(a, c);
    if (r.embedding) return {true, std::nullopt};
    return {false, r.failure};
}

Configuration chiral(const Configuration& c) {
    Configuration out = c;
    for (auto& r : out) {
        if (r == Rel::Up)
            r = Rel::Down;
        else if (r == Rel::Down)
            r = Rel::Up;
    }
    return out;
}

namespace {

class Enumerator {
public:
    Enumerator(const Assembly& a, const EnumOptions& opt) : a_(a), opt_(opt), inc_(incidence(a)) {
        place_.resize(a.size());
        placed_.assign(a.size(), 0);
        cur_ = straight_config(a);
        build_order();
    }

    EnumResult run() {
        int root = a_.index_of(anchor_uid(a_));
        place_[root] = kAnchorPlacement;
        placed_[root] = 1;
        occ_[pack(center2(kAnchorPlacement))] = root;
        dfs(0);
        return std::move(out_);
    }

private:
    void build_order() {
        std::vector<char> seen_tile(a_.size(), 0), seen_bond(a_.bonds().size(), 0);
        int root = a_.index_of(anchor_uid(a_));
        std::deque<int> queue{root};
        seen_tile[root] = 1;
        while (!queue.empty()) {
            int t = queue.front();
            queue.pop_front();
            for (int bi : inc_[t]) {
                if (seen_bond[bi]) continue;
                seen_bond[bi] = 1;
                order_.push_back(bi);
                const Bond& b = a_.bonds()[bi];
                for (int o : {a_.index_of(b.a.uid), a_.index_of(b.b.uid)})
                    if (!seen_tile[o]) {
                        seen_tile[o] = 1;
                        queue.push_back(o);
                    }
            }
        }
        if (std::find(seen_tile.begin(), seen_tile.end(), 0) != seen_tile.end())
            throw std::invalid_argument("assembly is disconnected");
    }

    std::uint8_t allowed(int bi) const {
        std::uint8_t m = a_.bonds()[bi].flexible ? rel_bit(Rel::Straight) | rel_bit(Rel::Up) | rel_bit(Rel::Down)
                                                 : rel_bit(Rel::Straight);
        if (!opt_.allowed.empty()) m &= opt_.allowed[bi];
        return m;
    }

    bool add_edge(std::int64_t key, bool straight) {
        auto& u = edges_[key];
        if (!edge_admits(u, straight)) return false;
        ++u.count;
        if (straight) ++straight_count_[key];
        u.straight = u.straight || straight;
        return true;
    }

    void remove_edge(std::int64_t key, bool straight) {
        auto& u = edges_[key];
        --u.count;
        if (straight && --straight_count_[key] == 0) u.straight = false;
    }

    bool stop() const {
        return out_.overflow || (opt_.max_configs && out_.configs.size() >= opt_.max_configs);
    }

    void dfs(std::size_t i) {
        if (stop()) return;
        if (++out_.nodes > opt_.node_budget) {
            out_.overflow = true;
            return;
        }
        if (i == order_.size()) {
            out_.configs.push_back(cur_);
            return;
        }
        const int bi = order_[i];
        const Bond& b = a_.bonds()[bi];
        int ia = a_.index_of(b.a.uid), ib = a_.index_of(b.b.uid);
        SideRef sa = b.a, sb = b.b;
        if (!placed_[ia]) {
            std::swap(ia, ib);
            std::swap(sa, sb);
        }
        const std::uint8_t mask = allowed(bi);
        const std::int64_t ekey = pack(edge2(place_[ia], sa.side));
        for (Rel r : {Rel::Straight, Rel::Up, Rel::Down}) {
            if (!(mask & rel_bit(r))) continue;
            Placement p = neighbor(place_[ia], sa.side, r, sb.side);
            bool straight = r == Rel::Straight;
            if (placed_[ib]) {
                if (!(place_[ib] == p)) continue;
                if (!add_edge(ekey, straight)) continue;
                cur_[bi] = r;
                dfs(i + 1);
                remove_edge(ekey, straight);
            } else {
                auto key = pack(center2(p));
                if (occ_.count(key)) continue;
                if (!add_edge(ekey, straight)) continue;
                occ_[key] = ib;
                place_[ib] = p;
                placed_[ib] = 1;
                cur_[bi] = r;
                dfs(i + 1);
                placed_[ib] = 0;
                occ_.erase(key);
                remove_edge(ekey, straight);
            }
            if (stop()) break;
        }
        cur_[bi] = Rel::Straight;
    }

    const Assembly& a_;
    const EnumOptions& opt_;
    std::vector<std::vector<int>> inc_;
    std::vector<int> order_;
    std::vector<Placement> place_;
    std::vector<char> placed_;
    std::unordered_map<std::int64_t, int> occ_;
    std::unordered_map<std::int64_t, EdgeUse> edges_;
    std::unordered_map<std::int64_t, int> straight_count_;
    Configuration cur_;
    EnumResult out_;
};

}  // namespace

EnumResult enumerate_configs(const Assembly& a, const EnumOptions& opt) { return Enumerator(a, opt).run(); }

std::vector<Configuration> all_configs(const Assembly& a, std::uint64_t budget) {
    EnumOptions opt;
    opt.node_budget = budget;
    auto r = enumerate_configs(a, opt);
    if (r.overflow) throw BudgetExceeded("configuration search exceeded " + std::to_string(budget) + " nodes");
    return std::move(r.configs);
}

std::vector<Configuration> naive_configs(const Assembly& a) {
    const auto flex = a.flexible_bonds();
    std::vector<Configuration> out;
    Configuration c = straight_config(a);
    std::size_t total = 1;
    for (std::size_t i = 0; i < flex.size(); ++i) total *= 3;
    for (std::size_t code = 0; code < total; ++code) {
        std::size_t k = code;
        for (int bi : flex) {
            c[bi] = static_cast<Rel>(k % 3);
            k /= 3;
        }
        if (validate(a, c).valid) out.push_back(c);
    }
    return out;
}

bool is_rigid_set(const std::vector<Configuration>& configs) {
    if (configs.size() == 1) return true;
    return configs.size() == 2 && configs[1] == chiral(configs[0]) && configs[0] != configs[1];
}

bool is_rigid(const Assembly& a, std::uint64_t budget) { return is_rigid_set(all_configs(a, budget)); }

namespace {

std::unordered_map<std::int64_t, EdgeUse> edge_uses(const Assembly& a, const Configuration& c, const Embedding& e) {
    std::unordered_map<std::int64_t, EdgeUse> uses;
    for (std::size_t i = 0; i < a.bonds().size(); ++i) {
        const Bond& b = a.bonds()[i];
        auto& u = uses[pack(edge2(e[a.index_of(b.a.uid)], b.a.side))];
        ++u.count;
        u.straight = u.straight || c[i] == Rel::Straight;
    }
    return uses;
}

struct Candidate {
    SideRef a, b;
    Rel rel;
    BondSpec spec;
};

}  // namespace

std::vector<NewBond> formable_bonds(const Assembly& a, const Configuration& c, const Embedding& e) {
    // Unbound, non-null sides grouped by the lattice edge they lie on.
    std::map<std::int64_t, std::vector<std::pair<int, Side>>> open;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const Tile& t = a.tiles()[i];
        for (Side s : kAllSides) {
            if (t.type->glue(s).null() || a.bond_at({t.uid, s})) continue;
            open[pack(edge2(e[i], s))].push_back({static_cast<int>(i), s});
        }
    }
    const auto uses = edge_uses(a, c, e);
    std::vector<NewBond> out;
    for (auto& [key, sides] : open) {
        if (sides.size() < 2) continue;
        std::vector<Candidate> cands;
        for (std::size_t i = 0; i < sides.size(); ++i)
            for (std::size_t j = i + 1; j < sides.size(); ++j) {
                auto [ti, si] = sides[i];
                auto [tj, sj] = sides[j];
                if (ti == tj) continue;
                Rel rel = classify_orientation(e[ti], e[tj]);
                const Tile& x = a.tiles()[ti];
                const Tile& y = a.tiles()[tj];
                auto spec = can_bind(x.type->glue(si), y.type->glue(sj), rel);
                if (!spec) continue;
                SideRef ra{x.uid, si}, rb{y.uid, sj};
                if (rb < ra) std::swap(ra, rb);
                cands.push_back({ra, rb, rel, *spec});
            }
        if (cands.empty()) continue;
        std::sort(cands.begin(), cands.end(), [](const Candidate& l, const Candidate& r) {
            return std::tie(l.a, l.b) < std::tie(r.a, r.b);
        });
        EdgeUse base;
        if (auto it = uses.find(key); it != uses.end()) base = it->second;
        // At most four sides meet at an edge, so subsets are tiny.
        std::vector<std::size_t> best;
        for (unsigned mask = 1; mask < (1u << cands.size()); ++mask) {
            std::vector<std::size_t> pick;
            for (std::size_t k = 0; k < cands.size(); ++k)
                if (mask >> k & 1) pick.push_back(k);
            EdgeUse u = base;
            bool ok = true;
            std::vector<SideRef> used;
            for (auto k : pick) {
                const auto& cd = cands[k];
                bool straight = cd.rel == Rel::Straight;
                if (!edge_admits(u, straight)) ok = false;
                ++u.count;
                u.straight = u.straight || straight;
                for (auto r : {cd.a, cd.b}) {
                    if (std::find(used.begin(), used.end(), r) != used.end()) ok = false;
                    used.push_back(r);
                }
            }
            if (!ok) continue;
            if (pick.size() > best.size() || (pick.size() == best.size() && pick < best)) best = pick;
        }
        for (auto k : best) out.push_back({cands[k].a, cands[k].b, cands[k].rel, cands[k].spec});
    }
    return out;
}

int count_new_bonds(const Assembly& a, const Configuration& c) {
    auto r = compute_embedding(a, c);
    if (!r.embedding) throw std::invalid_argument("count_new_bonds on an invalid configuration");
    return static_cast<int>(formable_bonds(a, c, *r.embedding).size());
}

bool verify_flexibility_certificate(const Assembly& a, const Configuration& c, const Configuration& c2) {
    if (c.size() != a.bonds().size() || c2.size() != a.bonds().size()) return false;
    if (c == c2 || c2 == chiral(c)) return false;
    return validate(a, c).valid && validate(a, c2).valid;
}

bool verify_nonterminality_certificate(const FtamSystem& s, const Assembly& a, const Configuration& c,
                                       const FrontierSite& f) {
    if (!f.tile_type || f.binds.empty() || f.binds.size() > 4) return false;
    auto known = s.find_type(f.tile_type->id);
    if (!known || known->glues != f.tile_type->glues) return false;
    if (!well_formed(f.placement)) return false;
    auto r = compute_embedding(a, c);
    if (!r.embedding) return false;
    const Embedding& e = *r.embedding;
    for (const auto& p : e)
        if (overlaps(p, f.placement)) return false;
    auto uses = edge_uses(a, c, e);
    int total = 0;
    std::vector<Side> own;
    std::vector<SideRef> theirs;
    for (const auto& b : f.binds) {
        if (!a.has(b.existing.uid) || a.bond_at(b.existing)) return false;
        if (std::find(own.begin(), own.end(), b.own) != own.end()) return false;
        if (std::find(theirs.begin(), theirs.end(), b.existing) != theirs.end()) return false;
        own.push_back(b.own);
        theirs.push_back(b.existing);
        const Placement& p = e[a.index_of(b.existing.uid)];
        auto key = pack(edge2(p, b.existing.side));
        if (key != pack(edge2(f.placement, b.own))) return false;
        Rel rel = classify_orientation(p, f.placement);
        auto spec = can_bind(a.glue(b.existing), f.tile_type->glue(b.own), rel);
        if (!spec) return false;
        if (auto it = uses.find(key); it != uses.end() && !edge_admits(it->second, rel == Rel::Straight))
            return false;
        total += spec->strength;
    }
    return total >= s.temperature;
}

namespace {

// Unlabeled cells carry normal -1: the doubled center alone fixes the square.
CanonicalForm canonical_cells(const std::vector<CanonicalCell>& cells, bool allow_reflection) {
    CanonicalForm best;
    bool have = false;
    for (int mirror = 0; mirror < (allow_reflection ? 2 : 1); ++mirror)
        for (const Rotation& rot : rotations()) {
            CanonicalForm cur;
            cur.reserve(cells.size());
            for (auto cell : cells) {
                Vec3 v = cell.c2;
                if (mirror) v.x = -v.x;
                cell.c2 = rot.apply(v);
                if (cell.normal >= 0) {
                    Vec3 n = vec(static_cast<Dir>(cell.normal));
                    if (mirror) n.x = -n.x;
                    cell.normal = static_cast<int>(*dir_of(rot.apply(n)));
                }
                cur.push_back(cell);
            }
            Vec3 lo = cur.empty() ? Vec3{} : cur.front().c2;
            for (const auto& cell : cur)
                for (int k = 0; k < 3; ++k) lo[k] = std::min(lo[k], cell.c2[k]);
            // Translate by an even vector so half-unit parity is preserved.
            for (int k = 0; k < 3; ++k) lo[k] = lo[k] >= 0 ? lo[k] / 2 * 2 : -((-lo[k] + 1) / 2) * 2;
            for (auto& cell : cur) cell.c2 = cell.c2 - lo;
            std::sort(cur.begin(), cur.end());
            if (!have || cur < best) {
                best = std::move(cur);
                have = true;
            }
        }
    return best;
}

}  // namespace

CanonicalForm canonical_form(const Assembly& a, const Embedding& e, bool labeled, bool allow_reflection) {
    std::vector<CanonicalCell> cells;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (labeled)
            cells.push_back({center2(e[i]), static_cast<int>(e[i].normal), a.tiles()[i].type->id});
        else
            cells.push_back({center2(e[i]), -1, ""});
    }
    return canonical_cells(cells, allow_reflection);
}

CanonicalForm canonical_shape(const std::vector<Placement>& ps, bool allow_reflection) {
    std::vector<CanonicalCell> cells;
    for (const auto& p : ps) cells.push_back({center2(p), -1, ""});
    return canonical_cells(cells, allow_reflection);
}

}  // namespace ftam
