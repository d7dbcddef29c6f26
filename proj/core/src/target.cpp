#include <algorithm>

#include "ftam/generators.hpp"

namespace ftam {

int Target::add(const Placement& p, std::string name) {
    placements.push_back(p);
    names.push_back(std::move(name));
    return static_cast<int>(placements.size()) - 1;
}

void Target::link(int a, int b, bool flexible) {
    if (!shared_side(placements[a], placements[b])) throw std::invalid_argument("linked tiles do not share an edge");
    if (!flexible && classify_orientation(placements[a], placements[b]) != Rel::Straight)
        throw std::invalid_argument("rigid link across a fold");
    links.push_back({a, b, flexible});
}

Configuration Target::configuration() const {
    Configuration c;
    for (const auto& l : links) c.push_back(classify_orientation(placements[l.a], placements[l.b]));
    return c;
}

std::vector<int> greedy_order(const Target& t, const std::vector<int>& seed, const std::vector<int>& stage_of,
                              const std::vector<int>& link_strength) {
    const int n = static_cast<int>(t.placements.size());
    std::vector<std::vector<std::pair<int, int>>> adj(n);  // partner, fixed strength
    for (std::size_t k = 0; k < t.links.size(); ++k) {
        int fixed = link_strength.empty() ? 0 : link_strength[k];
        adj[t.links[k].a].push_back({t.links[k].b, fixed});
        adj[t.links[k].b].push_back({t.links[k].a, fixed});
    }
    std::vector<char> placed(n, 0);
    std::vector<int> score(n, 0), fixed_sum(n, 0), free_links(n, 0);
    std::vector<int> order;
    auto place = [&](int i) {
        placed[i] = 1;
        order.push_back(i);
        for (auto [j, f] : adj[i]) {
            ++score[j];
            if (f > 0) fixed_sum[j] += f;
            else ++free_links[j];
        }
    };
    for (int i : seed) place(i);
    auto stage = [&](int i) { return stage_of.empty() ? 0 : stage_of[i]; };
    while (static_cast<int>(order.size()) < n) {
        int best = -1;
        for (int i = 0; i < n; ++i) {
            if (placed[i] || (free_links[i] == 0 && fixed_sum[i] < 2)) continue;
            if (best < 0 || stage(i) < stage(best) || (stage(i) == stage(best) && score[i] > score[best])) best = i;
        }
        if (best < 0) throw std::invalid_argument("target cannot grow from the seed through its links");
        place(best);
    }
    return order;
}

Compiled compile_target(const Target& t, const CompileOptions& opt) {
    const int n = static_cast<int>(t.placements.size());
    Compiled out;
    out.order = opt.order.empty() ? greedy_order(t, opt.seed, opt.stage_of, opt.link_strength) : opt.seed;
    if (!opt.order.empty()) out.order.insert(out.order.end(), opt.order.begin(), opt.order.end());
    if (static_cast<int>(out.order.size()) != n) throw std::invalid_argument("order must cover every tile once");
    std::vector<int> rank(n, -1);
    for (int k = 0; k < n; ++k) {
        if (rank[out.order[k]] >= 0) throw std::invalid_argument("order repeats a tile");
        rank[out.order[k]] = k;
    }
    std::vector<char> in_seed(n, 0);
    for (int i : opt.seed) in_seed[i] = 1;

    // Strength of each order-decided link, decided by its later endpoint.
    auto fixed = [&](std::size_t k) { return opt.link_strength.empty() ? 0 : opt.link_strength[k]; };
    std::vector<int> earlier(n, 0), earlier_fixed(n, 0);
    for (std::size_t k = 0; k < t.links.size(); ++k) {
        const auto& l = t.links[k];
        int later = rank[l.a] > rank[l.b] ? l.a : l.b;
        if (in_seed[l.a] && in_seed[l.b]) continue;
        if (fixed(k) > 0) earlier_fixed[later] += fixed(k);
        else ++earlier[later];
    }
    std::vector<std::shared_ptr<TileType>> types(n);
    for (int i = 0; i < n; ++i) {
        types[i] = std::make_shared<TileType>();
        types[i]->id = opt.prefix + t.names[i];
    }
    for (std::size_t k = 0; k < t.links.size(); ++k) {
        const auto& l = t.links[k];
        Side sa = *shared_side(t.placements[l.a], t.placements[l.b]);
        Side sb = *shared_side(t.placements[l.b], t.placements[l.a]);
        int later = rank[l.a] > rank[l.b] ? l.a : l.b;
        int strength = fixed(k);
        if (strength == 0)
            strength = (in_seed[l.a] && in_seed[l.b]) || (earlier[later] <= 1 && earlier_fixed[later] == 0) ? 2 : 1;
        std::string label = opt.link_label.empty() || opt.link_label[k].empty()
                                ? opt.prefix + t.names[l.a] + "~" + t.names[l.b]
                                : opt.link_label[k];
        if (!types[l.a]->glue(sa).null() || !types[l.b]->glue(sb).null())
            throw std::invalid_argument("two links on one side of " + t.names[l.a] + " or " + t.names[l.b]);
        types[l.a]->glue(sa) = {{label, false}, strength, l.flexible};
        types[l.b]->glue(sb) = {{label, true}, strength, l.flexible};
    }
    for (const auto& p : types) out.types.push_back(p);

    auto& sys = out.system;
    sys.base.temperature = opt.temperature;
    sys.stages.resize(opt.stages);
    for (int i = 0; i < n; ++i) {
        int st = opt.stage_of.empty() ? 0 : opt.stage_of[i];
        if (st == 0) sys.base.tile_types.push_back(out.types[i]);
        else sys.stages.at(st - 1).tile_types.push_back(out.types[i]);
    }
    for (int i : opt.seed) sys.base.seed.add_tile(i, out.types[i]);
    for (const auto& l : t.links)
        if (in_seed[l.a] && in_seed[l.b])
            sys.base.seed.bind({l.a, *shared_side(t.placements[l.a], t.placements[l.b])},
                               {l.b, *shared_side(t.placements[l.b], t.placements[l.a])},
                               classify_orientation(t.placements[l.a], t.placements[l.b]));
    return out;
}

Assembly target_assembly(const Target& t, const std::vector<TileTypePtr>& types) {
    Assembly a;
    for (std::size_t i = 0; i < t.placements.size(); ++i) a.add_tile(static_cast<int>(i), types[i]);
    for (const auto& l : t.links)
        a.bind({l.a, *shared_side(t.placements[l.a], t.placements[l.b])},
               {l.b, *shared_side(t.placements[l.b], t.placements[l.a])},
               classify_orientation(t.placements[l.a], t.placements[l.b]));
    return a;
}

}  // namespace ftam
