#include "ftam/assembly.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/one_bit_color_map.hpp>
#include <boost/graph/stoer_wagner_min_cut.hpp>
#include <boost/property_map/property_map.hpp>

namespace ftam {

void Assembly::add_tile(int uid, TileTypePtr type) {
    if (index_.count(uid)) throw std::invalid_argument("duplicate tile uid " + std::to_string(uid));
    index_[uid] = static_cast<int>(tiles_.size());
    tiles_.push_back({uid, std::move(type)});
}

int Assembly::add_bond(SideRef a, SideRef b, bool flexible, int strength) {
    if (!has(a.uid) || !has(b.uid)) throw std::invalid_argument("bond endpoint not in assembly");
    if (a.uid == b.uid) throw std::invalid_argument("tile bonded to itself");
    int id = static_cast<int>(bonds_.size());
    bonds_.push_back({a, b, flexible, strength});
    side_use_.try_emplace(side_key(a), id);
    side_use_.try_emplace(side_key(b), id);
    return id;
}

int Assembly::bind(SideRef a, SideRef b, Rel rel) {
    auto spec = can_bind(glue(a), glue(b), rel);
    if (!spec) throw std::invalid_argument("glues cannot bind");
    return add_bond(a, b, spec->flexible, spec->strength);
}

void Assembly::set_type(int uid, TileTypePtr type) { tiles_[index_of(uid)].type = std::move(type); }

int Assembly::index_of(int uid) const {
    auto it = index_.find(uid);
    if (it == index_.end()) throw std::out_of_range("no tile with uid " + std::to_string(uid));
    return it->second;
}

std::optional<int> Assembly::bond_at(SideRef r) const {
    auto it = side_use_.find(side_key(r));
    if (it == side_use_.end()) return std::nullopt;
    return it->second;
}

int Assembly::max_uid() const {
    int m = -1;
    for (const auto& t : tiles_) m = std::max(m, t.uid);
    return m;
}

std::vector<int> Assembly::flexible_bonds() const {
    std::vector<int> out;
    for (int i = 0; i < static_cast<int>(bonds_.size()); ++i)
        if (bonds_[i].flexible) out.push_back(i);
    return out;
}

TileTypePtr FtamSystem::find_type(const std::string& id) const {
    for (const auto& t : tile_types)
        if (t->id == id) return t;
    return nullptr;
}

namespace {

struct Dsu {
    std::vector<int> p;
    explicit Dsu(std::size_t n) : p(n) { std::iota(p.begin(), p.end(), 0); }
    int find(int x) { return p[x] == x ? x : p[x] = find(p[x]); }
    void unite(int a, int b) { p[find(a)] = find(b); }
};

}  // namespace

FaceGraph face_graph(const Assembly& a) {
    Dsu d(a.size());
    for (const auto& b : a.bonds())
        if (!b.flexible) d.unite(a.index_of(b.a.uid), a.index_of(b.b.uid));
    FaceGraph g;
    std::map<int, int> ids;
    g.node.resize(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        auto [it, fresh] = ids.try_emplace(d.find(static_cast<int>(i)), g.node_count);
        if (fresh) ++g.node_count;
        g.node[i] = it->second;
    }
    std::set<std::pair<int, int>> edges;
    for (const auto& b : a.bonds()) {
        if (!b.flexible) continue;
        int u = g.node[a.index_of(b.a.uid)], v = g.node[a.index_of(b.b.uid)];
        if (u != v) edges.insert(std::minmax(u, v));
    }
    g.edges.assign(edges.begin(), edges.end());
    return g;
}

bool connected(const Assembly& a) {
    if (a.size() == 0) return false;
    Dsu d(a.size());
    for (const auto& b : a.bonds()) d.unite(a.index_of(b.a.uid), a.index_of(b.b.uid));
    int root = d.find(0);
    for (std::size_t i = 1; i < a.size(); ++i)
        if (d.find(static_cast<int>(i)) != root) return false;
    return true;
}

long min_cut_weight(const Assembly& a) {
    if (!connected(a)) throw std::invalid_argument("assembly is disconnected");
    if (a.size() == 1) return -1;
    using Graph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS, boost::no_property,
                                        boost::property<boost::edge_weight_t, long>>;
    Graph g(a.size());
    for (const auto& b : a.bonds())
        boost::add_edge(a.index_of(b.a.uid), a.index_of(b.b.uid), static_cast<long>(b.strength), g);
    return boost::stoer_wagner_min_cut(g, boost::get(boost::edge_weight, g));
}

bool tau_stable(const Assembly& a, int tau) {
    long w = min_cut_weight(a);
    return w < 0 || w >= tau;
}

const char* violation_name(Violation v) {
    switch (v) {
        case Violation::DuplicateGlueUse: return "DuplicateGlueUse";
        case Violation::UnknownTileType: return "UnknownTileType";
        case Violation::GlueMismatch: return "GlueMismatch";
        case Violation::DanglingBond: return "DanglingBond";
        case Violation::Disconnected: return "Disconnected";
        case Violation::NotTauStable: return "NotTauStable";
    }
    return "?";
}

std::vector<Violation> check_assembly(const Assembly& a, const FtamSystem& s) {
    std::vector<Violation> out;
    auto flag = [&](Violation v) {
        if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
    };
    for (const auto& t : a.tiles()) {
        auto known = s.find_type(t.type->id);
        if (!known || known->glues != t.type->glues) flag(Violation::UnknownTileType);
    }
    std::set<long long> used;
    for (const auto& b : a.bonds()) {
        if (!a.has(b.a.uid) || !a.has(b.b.uid)) {
            flag(Violation::DanglingBond);
            continue;
        }
        for (auto r : {b.a, b.b})
            if (!used.insert(side_key(r)).second) flag(Violation::DuplicateGlueUse);
        const Glue& g = a.glue(b.a);
        const Glue& h = a.glue(b.b);
        bool ok = complementary(g.label, h.label) && g.strength == h.strength && g.strength == b.strength &&
                  g.flexible == h.flexible && g.flexible == b.flexible && b.strength > 0;
        if (!ok) flag(Violation::GlueMismatch);
    }
    if (!connected(a)) {
        flag(Violation::Disconnected);
        return out;
    }
    if (!tau_stable(a, s.temperature)) flag(Violation::NotTauStable);
    return out;
}

}  // namespace ftam
