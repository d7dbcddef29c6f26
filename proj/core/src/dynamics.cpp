#include "ftam/dynamics.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <set>
#include <tuple>
#include <unordered_map>
#include <unordered_set>

namespace ftam {

std::uint64_t uniform_index(std::mt19937_64& rng, std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("uniform_index over an empty range");
    const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
    const std::uint64_t limit = max - max % n;
    std::uint64_t x;
    do x = rng();
    while (x >= limit);
    return x % n;
}

std::mt19937_64 step_engine(std::uint64_t rng_seed, std::uint64_t step) {
    std::seed_seq seq{static_cast<std::uint32_t>(rng_seed), static_cast<std::uint32_t>(rng_seed >> 32),
                      static_cast<std::uint32_t>(step), static_cast<std::uint32_t>(step >> 32)};
    return std::mt19937_64(seq);
}

namespace {

struct OpenSide {
    int tile;  // assembly index
    Side side;
};

struct EdgeState {
    int count = 0;
    bool straight = false;
};

bool admits(const EdgeState& u, bool straight) { return u.count == 0 || (!u.straight && !straight); }

auto site_key(const FrontierSite& f) {
    return std::make_tuple(f.tile_type->id, f.placement, f.binds);
}

}  // namespace

std::vector<FrontierSite> frontier(const FtamSystem& s, const Assembly& a, const Configuration& c,
                                   const Embedding& e) {
    std::unordered_set<std::int64_t> occupied;
    for (const auto& p : e) occupied.insert(pack(center2(p)));
    std::unordered_map<std::int64_t, EdgeState> uses;
    for (std::size_t i = 0; i < a.bonds().size(); ++i) {
        const Bond& b = a.bonds()[i];
        auto& u = uses[pack(edge2(e[a.index_of(b.a.uid)], b.a.side))];
        ++u.count;
        u.straight = u.straight || c[i] == Rel::Straight;
    }
    std::unordered_map<std::int64_t, std::vector<OpenSide>> open;
    std::vector<OpenSide> open_list;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const Tile& t = a.tiles()[i];
        for (Side sd : kAllSides) {
            if (t.type->glue(sd).null() || a.bond_at({t.uid, sd})) continue;
            OpenSide o{static_cast<int>(i), sd};
            open[pack(edge2(e[i], sd))].push_back(o);
            open_list.push_back(o);
        }
    }
    auto edge_ok = [&](std::int64_t key, bool straight) {
        auto it = uses.find(key);
        return it == uses.end() || admits(it->second, straight);
    };

    // Candidate (type, placement) pairs reachable through at least one glue match.
    std::set<std::pair<std::string, Placement>> seen;
    std::vector<std::pair<TileTypePtr, Placement>> cands;
    for (const auto& o : open_list) {
        const Glue& g = a.tiles()[o.tile].type->glue(o.side);
        for (Rel rel : {Rel::Straight, Rel::Up, Rel::Down}) {
            if (rel != Rel::Straight && !g.flexible) continue;
            if (!edge_ok(pack(edge2(e[o.tile], o.side)), rel == Rel::Straight)) continue;
            for (const auto& tt : s.tile_types)
                for (Side s2 : kAllSides) {
                    if (!can_bind(g, tt->glue(s2), rel)) continue;
                    Placement p = neighbor(e[o.tile], o.side, rel, s2);
                    if (occupied.count(pack(center2(p)))) continue;
                    if (seen.insert({tt->id, p}).second) cands.push_back({tt, p});
                }
        }
    }

    std::vector<FrontierSite> out;
    for (const auto& [tt, p] : cands) {
        // Per side of the new tile, the existing sides it could bind.
        std::vector<std::vector<std::pair<SiteBind, int>>> options;
        for (Side own : kAllSides) {
            const Glue& g = tt->glue(own);
            if (g.null()) continue;
            auto key = pack(edge2(p, own));
            auto it = open.find(key);
            if (it == open.end()) continue;
            std::vector<std::pair<SiteBind, int>> opts;
            for (const auto& o : it->second) {
                const Placement& q = e[o.tile];
                Rel rel = classify_orientation(q, p);
                auto spec = can_bind(a.tiles()[o.tile].type->glue(o.side), g, rel);
                if (!spec || !edge_ok(key, rel == Rel::Straight)) continue;
                opts.push_back({SiteBind{{a.tiles()[o.tile].uid, o.side}, own}, spec->strength});
            }
            if (!opts.empty()) options.push_back(std::move(opts));
        }
        // Every side with a partner binds one of them; branch when a side has several.
        std::vector<std::size_t> pick(options.size(), 0);
        while (true) {
            FrontierSite f{tt, p, {}, -1};
            int total = 0;
            for (std::size_t k = 0; k < options.size(); ++k) {
                f.binds.push_back(options[k][pick[k]].first);
                total += options[k][pick[k]].second;
            }
            std::sort(f.binds.begin(), f.binds.end());
            bool distinct = std::adjacent_find(f.binds.begin(), f.binds.end(), [](auto& l, auto& r) {
                                return l.existing == r.existing;
                            }) == f.binds.end();
            if (!f.binds.empty() && distinct && total >= s.temperature) out.push_back(std::move(f));
            std::size_t k = 0;
            while (k < options.size() && ++pick[k] == options[k].size()) pick[k++] = 0;
            if (k == options.size()) break;
        }
    }
    std::sort(out.begin(), out.end(), [](const FrontierSite& l, const FrontierSite& r) {
        return site_key(l) < site_key(r);
    });
    out.erase(std::unique(out.begin(), out.end(),
                          [](const FrontierSite& l, const FrontierSite& r) { return site_key(l) == site_key(r); }),
              out.end());
    return out;
}

std::vector<FrontierSite> frontier(const FtamSystem& s, const Assembly& a, const Configuration& c) {
    auto r = compute_embedding(a, c);
    if (!r.embedding) throw std::invalid_argument("frontier of an invalid configuration");
    return frontier(s, a, c, *r.embedding);
}

std::vector<FrontierSite> frontier_multiset(const FtamSystem& s, const Assembly& a,
                                            const std::vector<Configuration>& configs) {
    std::vector<FrontierSite> out;
    for (std::size_t k = 0; k < configs.size(); ++k)
        for (auto& f : frontier(s, a, configs[k])) {
            f.configuration = static_cast<int>(k);
            out.push_back(std::move(f));
        }
    return out;
}

std::vector<FrontierSite> frontier_multiset(const FtamSystem& s, const Assembly& a, std::uint64_t budget) {
    return frontier_multiset(s, a, all_configs(a, budget));
}

std::vector<Configuration> c_max(const Assembly& a, const std::vector<Configuration>& configs) {
    std::vector<Configuration> best;
    int best_count = -1;
    for (const auto& c : configs) {
        int n = count_new_bonds(a, c);
        if (n > best_count) {
            best_count = n;
            best.clear();
        }
        if (n == best_count) best.push_back(c);
    }
    return best;
}

std::vector<Configuration> c_max(const Assembly& a, std::uint64_t budget) { return c_max(a, all_configs(a, budget)); }

RunState initial_state(const FtamSystem& s, std::uint64_t rng_seed) {
    RunState st;
    st.assembly = s.seed;
    st.rng_seed = rng_seed;
    st.configuration = straight_config(s.seed);
    return st;
}

namespace {

void attach(Assembly& a, Configuration& c, const FrontierSite& f, int uid, const Embedding& e) {
    a.add_tile(uid, f.tile_type);
    for (const auto& b : f.binds) {
        const Placement& q = e[a.index_of(b.existing.uid)];
        Rel rel = classify_orientation(q, f.placement);
        a.bind(b.existing, {uid, b.own}, rel);
        c.push_back(rel);
    }
}

}  // namespace

StepResult assembly_step(const FtamSystem& s, const RunState& st, std::uint64_t budget) {
    const auto configs = all_configs(st.assembly, budget);
    const auto sites = frontier_multiset(s, st.assembly, configs);
    if (sites.empty()) return {st, true};

    auto rng = step_engine(st.rng_seed, st.step_count);
    const FrontierSite& f = sites[uniform_index(rng, sites.size())];
    const Configuration& c = configs[f.configuration];

    RunState next = st;
    const int uid = st.assembly.max_uid() + 1;
    Configuration c1 = c;
    attach(next.assembly, c1, f, uid, *compute_embedding(st.assembly, c).embedding);

    const auto maxed = c_max(next.assembly, all_configs(next.assembly, budget));
    Configuration chosen = maxed[uniform_index(rng, maxed.size())];
    auto e = compute_embedding(next.assembly, chosen);
    HistoryEntry h;
    h.tile_type = f.tile_type->id;
    h.uid = uid;
    h.binds = f.binds;
    h.frontier_size = sites.size();
    h.cmax_size = maxed.size();
    for (const auto& nb : formable_bonds(next.assembly, chosen, *e.embedding)) {
        next.assembly.add_bond(nb.a, nb.b, nb.spec.flexible, nb.spec.strength);
        chosen.push_back(nb.rel);
        h.formed.push_back({nb.a, nb.b});
    }
    h.configuration = chosen;
    next.configuration = std::move(chosen);
    next.history.push_back(std::move(h));
    ++next.step_count;
    return {std::move(next), false};
}

RunOutcome run_to_terminal(const FtamSystem& s, RunState st, std::uint64_t max_steps, std::uint64_t budget) {
    RunOutcome out;
    while (out.steps < max_steps) {
        auto r = assembly_step(s, st, budget);
        if (r.terminal) {
            out.terminal = true;
            break;
        }
        st = std::move(r.state);
        ++out.steps;
    }
    if (!out.terminal && out.steps == max_steps) out.terminal = is_terminal(s, st.assembly, budget);
    out.state = std::move(st);
    return out;
}

std::optional<TerminalityWitness> nonterminality_witness(const FtamSystem& s, const Assembly& a,
                                                         std::uint64_t budget) {
    for (const auto& c : all_configs(a, budget)) {
        auto sites = frontier(s, a, c);
        if (!sites.empty()) return TerminalityWitness{c, sites.front()};
    }
    return std::nullopt;
}

bool is_terminal(const FtamSystem& s, const Assembly& a, std::uint64_t budget) {
    return !nonterminality_witness(s, a, budget);
}

Assembly replay(const Assembly& seed, const FtamSystem& s, const std::vector<HistoryEntry>& history) {
    Assembly a = seed;
    for (const auto& h : history) {
        auto tt = s.find_type(h.tile_type);
        if (!tt) throw std::invalid_argument("history names unknown tile type " + h.tile_type);
        a.add_tile(h.uid, tt);
        for (const auto& b : h.binds) {
            auto spec = a.glue(b.existing);
            a.add_bond(b.existing, {h.uid, b.own}, spec.flexible, spec.strength);
        }
        for (const auto& [x, y] : h.formed) {
            auto spec = a.glue(x);
            a.add_bond(x, y, spec.flexible, spec.strength);
        }
    }
    return a;
}

FtamSystem system_at_stage(const StagedSystem& ss, std::size_t stages_added) {
    FtamSystem s = ss.base;
    for (std::size_t k = 0; k < stages_added && k < ss.stages.size(); ++k)
        for (const auto& t : ss.stages[k].tile_types) s.tile_types.push_back(t);
    return s;
}

StagedOutcome staged_run(const StagedSystem& ss, std::uint64_t rng_seed, std::uint64_t max_steps,
                         std::uint64_t budget) {
    StagedOutcome out;
    RunState st = initial_state(ss.base, rng_seed);
    for (std::size_t k = 0; k <= ss.stages.size(); ++k) {
        auto r = run_to_terminal(system_at_stage(ss, k), std::move(st), max_steps, budget);
        out.all_terminal = out.all_terminal && r.terminal;
        st = r.state;
        out.boundaries.push_back(std::move(r));
    }
    return out;
}

}  // namespace ftam
