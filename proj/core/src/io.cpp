#include "ftam/io.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "json.hpp"

namespace ftam {

using json = nlohmann::json;

namespace {

[[noreturn]] void fail(FormatErrorKind k, const std::string& field, const std::string& msg) {
    throw FormatError(k, field, msg);
}

const json& need(const json& j, const std::string& key, const std::string& at) {
    if (!j.is_object() || !j.contains(key)) fail(FormatErrorKind::Schema, at + "/" + key, "missing field");
    return j.at(key);
}

template <class T>
T get(const json& j, const std::string& at) {
    try {
        return j.get<T>();
    } catch (const json::exception& e) {
        fail(FormatErrorKind::Schema, at, e.what());
    }
}

json parse_json(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        fail(FormatErrorKind::Syntax, "", e.what());
    }
}

void check_version(const json& j) {
    auto v = get<std::string>(need(j, "format_version", ""), "/format_version");
    if (v != kFormatVersion) fail(FormatErrorKind::Version, "/format_version", "unsupported version " + v);
}

Side side_at(const json& j, const std::string& at) {
    auto s = get<std::string>(j, at);
    if (s.size() != 1 || std::string("NESW").find(s[0]) == std::string::npos)
        fail(FormatErrorKind::Schema, at, "bad side " + s);
    return side_from_char(s[0]);
}

Dir dir_at(const json& j, const std::string& at) {
    auto d = dir_from_name(get<std::string>(j, at));
    if (!d) fail(FormatErrorKind::Schema, at, "bad direction");
    return *d;
}

json side_ref_json(const SideRef& r) { return json::array({r.uid, std::string(1, side_char(r.side))}); }

SideRef side_ref_at(const json& j, const std::string& at) {
    if (!j.is_array() || j.size() != 2) fail(FormatErrorKind::Schema, at, "expected [uid, side]");
    return {get<int>(j[0], at + "/0"), side_at(j[1], at + "/1")};
}

json glue_json(const Glue& g) {
    return {{"label", g.label.str()}, {"strength", g.strength}, {"flexible", g.flexible}};
}

json type_json(const TileType& t) {
    json glues = json::object();
    for (Side s : kAllSides)
        if (!t.glue(s).null()) glues[std::string(1, side_char(s))] = glue_json(t.glue(s));
    return {{"id", t.id}, {"glues", glues}};
}

TileTypePtr type_at(const json& j, const std::string& at) {
    auto t = std::make_shared<TileType>();
    t->id = get<std::string>(need(j, "id", at), at + "/id");
    const json& glues = need(j, "glues", at);
    if (!glues.is_object()) fail(FormatErrorKind::Schema, at + "/glues", "expected object");
    for (auto it = glues.begin(); it != glues.end(); ++it) {
        std::string gat = at + "/glues/" + it.key();
        Side s = side_at(json(it.key()), gat);
        Glue g;
        g.label = GlueLabel::parse(get<std::string>(need(*it, "label", gat), gat + "/label"));
        g.strength = get<int>(need(*it, "strength", gat), gat + "/strength");
        g.flexible = get<bool>(need(*it, "flexible", gat), gat + "/flexible");
        if (g.label.base.empty() || g.strength <= 0) fail(FormatErrorKind::Schema, gat, "glue needs a label and positive strength");
        t->glue(s) = g;
    }
    return t;
}

json types_json(const std::vector<TileTypePtr>& ts) {
    json out = json::array();
    for (const auto& t : ts) out.push_back(type_json(*t));
    return out;
}

std::vector<TileTypePtr> types_at(const json& j, const std::string& at, std::set<std::string>& ids) {
    if (!j.is_array()) fail(FormatErrorKind::Schema, at, "expected array");
    std::vector<TileTypePtr> out;
    for (std::size_t i = 0; i < j.size(); ++i) {
        auto t = type_at(j[i], at + "/" + std::to_string(i));
        if (!ids.insert(t->id).second) fail(FormatErrorKind::DuplicateId, at + "/" + std::to_string(i) + "/id", "duplicate tile type id " + t->id);
        out.push_back(std::move(t));
    }
    return out;
}

json assembly_json(const Assembly& a) {
    json tiles = json::array(), bonds = json::array();
    for (const auto& t : a.tiles()) tiles.push_back({{"uid", t.uid}, {"type", t.type->id}});
    for (const auto& b : a.bonds()) bonds.push_back({{"a", side_ref_json(b.a)}, {"b", side_ref_json(b.b)}});
    return {{"tiles", tiles}, {"bonds", bonds}};
}

TileTypePtr lookup(const std::vector<TileTypePtr>& types, const std::string& id) {
    for (const auto& t : types)
        if (t->id == id) return t;
    return nullptr;
}

// Bond strength and flexibility are implied by the glues on either side.
Assembly assembly_at(const json& j, const std::string& at, const std::vector<TileTypePtr>& types) {
    Assembly a;
    const json& tiles = need(j, "tiles", at);
    if (!tiles.is_array()) fail(FormatErrorKind::Schema, at + "/tiles", "expected array");
    for (std::size_t i = 0; i < tiles.size(); ++i) {
        std::string tat = at + "/tiles/" + std::to_string(i);
        int uid = get<int>(need(tiles[i], "uid", tat), tat + "/uid");
        auto id = get<std::string>(need(tiles[i], "type", tat), tat + "/type");
        auto t = lookup(types, id);
        if (!t) fail(FormatErrorKind::UnknownReference, tat + "/type", "unknown tile type " + id);
        if (a.has(uid)) fail(FormatErrorKind::DuplicateId, tat + "/uid", "duplicate uid");
        a.add_tile(uid, t);
    }
    const json& bonds = need(j, "bonds", at);
    if (!bonds.is_array()) fail(FormatErrorKind::Schema, at + "/bonds", "expected array");
    for (std::size_t i = 0; i < bonds.size(); ++i) {
        std::string bat = at + "/bonds/" + std::to_string(i);
        SideRef x = side_ref_at(need(bonds[i], "a", bat), bat + "/a");
        SideRef y = side_ref_at(need(bonds[i], "b", bat), bat + "/b");
        if (!a.has(x.uid) || !a.has(y.uid)) fail(FormatErrorKind::UnknownReference, bat, "bond names a missing tile");
        const Glue& g = a.glue(x);
        try {
            a.add_bond(x, y, g.flexible, g.strength);
        } catch (const std::exception& e) {
            fail(FormatErrorKind::Schema, bat, e.what());
        }
    }
    return a;
}

std::vector<TileTypePtr> all_types(const StagedSystem& s) {
    return system_at_stage(s, s.stages.size()).tile_types;
}

}  // namespace

std::string serialize_system(const StagedSystem& s) {
    json j;
    j["format_version"] = kFormatVersion;
    j["temperature"] = s.base.temperature;
    j["tile_types"] = types_json(s.base.tile_types);
    j["seed"] = assembly_json(s.base.seed);
    if (!s.stages.empty()) {
        json st = json::array();
        for (const auto& g : s.stages) st.push_back({{"name", g.name}, {"tile_types", types_json(g.tile_types)}});
        j["stages"] = st;
    }
    if (!s.metadata.empty()) j["metadata"] = s.metadata;
    return j.dump(2) + "\n";
}

std::string serialize_system(const FtamSystem& s) { return serialize_system(StagedSystem{s, {}}); }

namespace {

StagedSystem system_at(const json& j, const std::string& at) {
    StagedSystem s;
    std::set<std::string> ids;
    s.base.temperature = get<int>(need(j, "temperature", at), at + "/temperature");
    if (s.base.temperature <= 0) fail(FormatErrorKind::Schema, at + "/temperature", "temperature must be positive");
    s.base.tile_types = types_at(need(j, "tile_types", at), at + "/tile_types", ids);
    if (j.contains("stages")) {
        const json& st = j["stages"];
        if (!st.is_array()) fail(FormatErrorKind::Schema, at + "/stages", "expected array");
        for (std::size_t i = 0; i < st.size(); ++i) {
            std::string sat = at + "/stages/" + std::to_string(i);
            Stage g;
            g.name = get<std::string>(need(st[i], "name", sat), sat + "/name");
            g.tile_types = types_at(need(st[i], "tile_types", sat), sat + "/tile_types", ids);
            s.stages.push_back(std::move(g));
        }
    }
    s.base.seed = assembly_at(need(j, "seed", at), at + "/seed", all_types(s));
    if (j.contains("metadata")) s.metadata = get<std::map<std::string, int>>(j["metadata"], at + "/metadata");
    return s;
}

}  // namespace

StagedSystem parse_system(const std::string& text) {
    json j = parse_json(text);
    check_version(j);
    return system_at(j, "");
}

std::string configuration_string(const Assembly& a, const Configuration& c) {
    std::string out;
    for (std::size_t i = 0; i < a.bonds().size() && i < c.size(); ++i)
        if (a.bonds()[i].flexible) out += rel_char(c[i]);
    return out;
}

Configuration parse_configuration_string(const Assembly& a, const std::string& s) {
    Configuration c;
    std::size_t k = 0;
    for (const auto& b : a.bonds()) {
        if (!b.flexible) {
            c.push_back(Rel::Straight);
            continue;
        }
        if (k >= s.size()) fail(FormatErrorKind::Schema, "", "configuration string too short");
        char ch = s[k++];
        if (ch == 'S') c.push_back(Rel::Straight);
        else if (ch == 'U') c.push_back(Rel::Up);
        else if (ch == 'D') c.push_back(Rel::Down);
        else fail(FormatErrorKind::Schema, "", std::string("bad configuration letter ") + ch);
    }
    if (k != s.size()) fail(FormatErrorKind::Schema, "", "configuration string too long");
    return c;
}

namespace {

json placement_json(const Placement& p) {
    return {{"location", {p.location.x, p.location.y, p.location.z}},
            {"normal", dir_name(p.normal)},
            {"orientation", dir_name(p.orientation)}};
}

Placement placement_at(const json& j, const std::string& at) {
    const json& l = need(j, "location", at);
    if (!l.is_array() || l.size() != 3) fail(FormatErrorKind::Schema, at + "/location", "expected [x, y, z]");
    Placement p{{get<int>(l[0], at + "/location/0"), get<int>(l[1], at + "/location/1"), get<int>(l[2], at + "/location/2")},
                dir_at(need(j, "normal", at), at + "/normal"),
                dir_at(need(j, "orientation", at), at + "/orientation")};
    if (!well_formed(p)) fail(FormatErrorKind::Schema, at, "orientation must be perpendicular to the normal");
    return p;
}

json embedding_json(const Assembly& a, const Embedding& e) {
    json out = json::array();
    for (std::size_t i = 0; i < e.size(); ++i) {
        json p = placement_json(e[i]);
        p["uid"] = a.tiles()[i].uid;
        out.push_back(p);
    }
    return out;
}

Embedding embedding_at(const json& j, const std::string& at, const Assembly& a) {
    if (!j.is_array() || j.size() != a.size()) fail(FormatErrorKind::Schema, at, "expected one placement per tile");
    Embedding e(a.size());
    std::vector<char> seen(a.size(), 0);
    for (std::size_t i = 0; i < j.size(); ++i) {
        std::string pat = at + "/" + std::to_string(i);
        int uid = get<int>(need(j[i], "uid", pat), pat + "/uid");
        if (!a.has(uid)) fail(FormatErrorKind::UnknownReference, pat + "/uid", "unknown uid");
        int k = a.index_of(uid);
        if (seen[k]++) fail(FormatErrorKind::DuplicateId, pat + "/uid", "uid placed twice");
        e[k] = placement_at(j[i], pat);
    }
    return e;
}

json site_json(const FrontierSite& f) {
    json binds = json::array();
    for (const auto& b : f.binds)
        binds.push_back({{"existing", side_ref_json(b.existing)}, {"own", std::string(1, side_char(b.own))}});
    return {{"tile_type", f.tile_type->id}, {"placement", placement_json(f.placement)}, {"binds", binds}};
}

std::vector<SiteBind> binds_at(const json& j, const std::string& at) {
    if (!j.is_array()) fail(FormatErrorKind::Schema, at, "expected array");
    std::vector<SiteBind> out;
    for (std::size_t i = 0; i < j.size(); ++i) {
        std::string bat = at + "/" + std::to_string(i);
        out.push_back({side_ref_at(need(j[i], "existing", bat), bat + "/existing"), side_at(need(j[i], "own", bat), bat + "/own")});
    }
    return out;
}

// History configurations cover the bonds present after that step, a prefix of the final bond list.
Assembly bond_prefix(const Assembly& a, std::size_t n) {
    Assembly p;
    for (const auto& t : a.tiles()) p.add_tile(t.uid, t.type);
    for (std::size_t i = 0; i < n && i < a.bonds().size(); ++i) {
        const Bond& b = a.bonds()[i];
        p.add_bond(b.a, b.b, b.flexible, b.strength);
    }
    return p;
}

std::size_t bonds_after(const std::vector<HistoryEntry>& h, std::size_t upto, std::size_t seed_bonds) {
    std::size_t n = seed_bonds;
    for (std::size_t i = 0; i <= upto; ++i) n += h[i].binds.size() + h[i].formed.size();
    return n;
}

json history_json(const Snapshot& s) {
    json out = json::array();
    for (std::size_t i = 0; i < s.history.size(); ++i) {
        const auto& h = s.history[i];
        json formed = json::array();
        for (const auto& [x, y] : h.formed) formed.push_back({side_ref_json(x), side_ref_json(y)});
        json binds = json::array();
        for (const auto& b : h.binds)
            binds.push_back({{"existing", side_ref_json(b.existing)}, {"own", std::string(1, side_char(b.own))}});
        Assembly pre = bond_prefix(s.assembly, h.configuration.size());
        out.push_back({{"tile_type", h.tile_type},
                       {"uid", h.uid},
                       {"binds", binds},
                       {"formed", formed},
                       {"configuration", configuration_string(pre, h.configuration)},
                       {"frontier_size", h.frontier_size},
                       {"cmax_size", h.cmax_size}});
    }
    return out;
}

}  // namespace

Snapshot snapshot_of(const StagedSystem& s, std::size_t stages_added, const RunState& st, bool with_embedding) {
    Snapshot out;
    out.system = s;
    out.stages_added = stages_added;
    out.assembly = st.assembly;
    out.configuration = st.configuration;
    if (with_embedding) {
        auto r = compute_embedding(st.assembly, st.configuration);
        if (r.embedding) out.embedding = std::move(r.embedding);
    }
    out.rng_seed = st.rng_seed;
    out.step_count = st.step_count;
    out.history = st.history;
    return out;
}

std::string serialize_snapshot(const Snapshot& s) {
    json j;
    j["format_version"] = kFormatVersion;
    json sys = json::parse(serialize_system(s.system));
    sys.erase("format_version");
    j["system"] = sys;
    j["stages_added"] = s.stages_added;
    j["assembly"] = assembly_json(s.assembly);
    if (s.configuration) j["configuration"] = configuration_string(s.assembly, *s.configuration);
    if (s.embedding) j["embedding"] = embedding_json(s.assembly, *s.embedding);
    j["rng_seed"] = s.rng_seed;
    j["step_count"] = s.step_count;
    j["history"] = history_json(s);
    if (!s.allowed.empty()) {
        json allowed = json::array();
        for (std::size_t i = 0; i < s.assembly.bonds().size(); ++i) {
            if (!s.assembly.bonds()[i].flexible) continue;
            std::string letters;
            for (Rel r : {Rel::Straight, Rel::Up, Rel::Down})
                if (s.allowed[i] & rel_bit(r)) letters += rel_char(r);
            allowed.push_back(letters);
        }
        j["allowed"] = allowed;
    }
    return j.dump(2) + "\n";
}

Snapshot parse_snapshot(const std::string& text) {
    json j = parse_json(text);
    check_version(j);
    Snapshot s;
    s.system = system_at(need(j, "system", ""), "/system");
    if (j.contains("stages_added")) s.stages_added = get<std::size_t>(j["stages_added"], "/stages_added");
    s.assembly = assembly_at(need(j, "assembly", ""), "/assembly", all_types(s.system));
    if (j.contains("configuration"))
        s.configuration = parse_configuration_string(s.assembly, get<std::string>(j["configuration"], "/configuration"));
    if (j.contains("embedding")) {
        s.embedding = embedding_at(j["embedding"], "/embedding", s.assembly);
        Configuration c = s.configuration ? *s.configuration : straight_config(s.assembly);
        int anchor = anchor_uid(s.assembly);
        auto r = compute_embedding(s.assembly, c, anchor, (*s.embedding)[s.assembly.index_of(anchor)]);
        if (!r.embedding || *r.embedding != *s.embedding)
            fail(FormatErrorKind::InvalidEmbedding, "/embedding", "embedding does not match the configuration");
    }
    if (j.contains("rng_seed")) s.rng_seed = get<std::uint64_t>(j["rng_seed"], "/rng_seed");
    if (j.contains("step_count")) s.step_count = get<std::uint64_t>(j["step_count"], "/step_count");
    if (j.contains("history")) {
        const json& h = j["history"];
        if (!h.is_array()) fail(FormatErrorKind::Schema, "/history", "expected array");
        const std::size_t seed_bonds = s.assembly.bonds().size() - [&] {
            std::size_t n = 0;
            for (const auto& e : h) {
                if (e.contains("binds") && e["binds"].is_array()) n += e["binds"].size();
                if (e.contains("formed") && e["formed"].is_array()) n += e["formed"].size();
            }
            return std::min(n, s.assembly.bonds().size());
        }();
        for (std::size_t i = 0; i < h.size(); ++i) {
            std::string hat = "/history/" + std::to_string(i);
            HistoryEntry e;
            e.tile_type = get<std::string>(need(h[i], "tile_type", hat), hat + "/tile_type");
            e.uid = get<int>(need(h[i], "uid", hat), hat + "/uid");
            e.binds = binds_at(need(h[i], "binds", hat), hat + "/binds");
            const json& formed = need(h[i], "formed", hat);
            for (std::size_t k = 0; k < formed.size(); ++k) {
                std::string fat = hat + "/formed/" + std::to_string(k);
                if (!formed[k].is_array() || formed[k].size() != 2) fail(FormatErrorKind::Schema, fat, "expected a pair");
                e.formed.push_back({side_ref_at(formed[k][0], fat + "/0"), side_ref_at(formed[k][1], fat + "/1")});
            }
            e.frontier_size = get<std::uint64_t>(need(h[i], "frontier_size", hat), hat + "/frontier_size");
            e.cmax_size = get<std::uint64_t>(need(h[i], "cmax_size", hat), hat + "/cmax_size");
            s.history.push_back(std::move(e));
            Assembly pre = bond_prefix(s.assembly, bonds_after(s.history, i, seed_bonds));
            s.history.back().configuration =
                parse_configuration_string(pre, get<std::string>(need(h[i], "configuration", hat), hat + "/configuration"));
        }
    }
    if (j.contains("allowed")) {
        const json& al = j["allowed"];
        if (!al.is_array()) fail(FormatErrorKind::Schema, "/allowed", "expected array");
        std::size_t k = 0;
        for (const auto& b : s.assembly.bonds()) {
            if (!b.flexible) {
                s.allowed.push_back(rel_bit(Rel::Straight));
                continue;
            }
            std::string at = "/allowed/" + std::to_string(k);
            if (k >= al.size()) fail(FormatErrorKind::Schema, "/allowed", "one entry per flexible bond expected");
            std::uint8_t mask = 0;
            for (char ch : get<std::string>(al[k++], at)) {
                if (ch == 'S') mask |= rel_bit(Rel::Straight);
                else if (ch == 'U') mask |= rel_bit(Rel::Up);
                else if (ch == 'D') mask |= rel_bit(Rel::Down);
                else fail(FormatErrorKind::Schema, at, std::string("bad relation letter ") + ch);
            }
            s.allowed.push_back(mask);
        }
        if (k != al.size()) fail(FormatErrorKind::Schema, "/allowed", "one entry per flexible bond expected");
    }
    return s;
}

std::string serialize_certificate(const Assembly& a, const Certificate& c) {
    json j;
    j["format_version"] = kFormatVersion;
    if (c.flexibility) {
        j["kind"] = "flexibility";
        j["first"] = configuration_string(a, c.flexibility->first);
        j["second"] = configuration_string(a, c.flexibility->second);
    } else if (c.nonterminality) {
        j["kind"] = "nonterminality";
        j["configuration"] = configuration_string(a, c.nonterminality->configuration);
        j["site"] = site_json(c.nonterminality->site);
    } else {
        j["kind"] = "none";
    }
    return j.dump(2) + "\n";
}

Certificate parse_certificate(const std::string& text, const Assembly& a, const FtamSystem& types) {
    json j = parse_json(text);
    check_version(j);
    auto kind = get<std::string>(need(j, "kind", ""), "/kind");
    Certificate c;
    if (kind == "flexibility") {
        c.flexibility = FlexibilityCertificate{
            parse_configuration_string(a, get<std::string>(need(j, "first", ""), "/first")),
            parse_configuration_string(a, get<std::string>(need(j, "second", ""), "/second"))};
    } else if (kind == "nonterminality") {
        const json& site = need(j, "site", "");
        NonterminalityCertificate n;
        n.configuration = parse_configuration_string(a, get<std::string>(need(j, "configuration", ""), "/configuration"));
        auto id = get<std::string>(need(site, "tile_type", "/site"), "/site/tile_type");
        n.site.tile_type = types.find_type(id);
        if (!n.site.tile_type) fail(FormatErrorKind::UnknownReference, "/site/tile_type", "unknown tile type " + id);
        n.site.placement = placement_at(need(site, "placement", "/site"), "/site/placement");
        n.site.binds = binds_at(need(site, "binds", "/site"), "/site/binds");
        c.nonterminality = std::move(n);
    } else if (kind != "none") {
        fail(FormatErrorKind::Schema, "/kind", "unknown certificate kind " + kind);
    }
    return c;
}

bool verify_certificate(const FtamSystem& s, const Assembly& a, const Certificate& c) {
    if (c.flexibility) return verify_flexibility_certificate(a, c.flexibility->first, c.flexibility->second);
    if (c.nonterminality)
        return verify_nonterminality_certificate(s, a, c.nonterminality->configuration, c.nonterminality->site);
    return false;
}

std::string export_obj(const Assembly& a, const Embedding& e) {
    std::ostringstream out;
    out << "# ftam embedding, " << e.size() << " tiles\n";
    std::size_t base = 1;
    for (std::size_t i = 0; i < e.size(); ++i) {
        // Corners in boundary order so the two triangles share the diagonal 0-2.
        auto [u, v] = plane_axes(e[i].normal);
        Vec3 l = e[i].location;
        Vec3 corners[4] = {l, l + u, l + u + v, l + v};
        out << "g tile_" << a.tiles()[i].uid << "\n";
        for (const auto& c : corners) out << "v " << c.x << ' ' << c.y << ' ' << c.z << "\n";
        // Wind counter-clockwise around the normal.
        Vec3 uv{u.y * v.z - u.z * v.y, u.z * v.x - u.x * v.z, u.x * v.y - u.y * v.x};
        bool ccw = uv == vec(e[i].normal);
        if (ccw)
            out << "f " << base << ' ' << base + 1 << ' ' << base + 2 << "\nf " << base << ' ' << base + 2 << ' ' << base + 3 << "\n";
        else
            out << "f " << base << ' ' << base + 2 << ' ' << base + 1 << "\nf " << base << ' ' << base + 3 << ' ' << base + 2 << "\n";
        base += 4;
    }
    return out.str();
}

std::string export_embedding_json(const Assembly& a, const Embedding& e) {
    json j;
    j["format_version"] = kFormatVersion;
    j["embedding"] = embedding_json(a, e);
    return j.dump(2) + "\n";
}

Cnf parse_dimacs(const std::string& text) {
    Cnf f;
    std::istringstream in(text);
    std::string line;
    std::vector<int> pending;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first) || first[0] == 'c' || first[0] == 'p' || first[0] == '%') continue;
        ls.clear();
        ls.str(line);
        long lit;
        while (ls >> lit) {
            if (lit == 0) {
                if (pending.size() != 3)
                    fail(FormatErrorKind::Schema, "line " + std::to_string(lineno), "clause must have exactly 3 literals");
                f.push_back({pending[0], pending[1], pending[2]});
                pending.clear();
            } else {
                pending.push_back(static_cast<int>(lit));
            }
        }
        if (!ls.eof()) fail(FormatErrorKind::Syntax, "line " + std::to_string(lineno), "expected integers");
    }
    if (!pending.empty()) fail(FormatErrorKind::Schema, "end of input", "unterminated clause");
    return f;
}

std::string write_dimacs(const Cnf& f) {
    int vars = 0;
    for (const auto& c : f)
        for (int l : c) vars = std::max(vars, std::abs(l));
    std::ostringstream out;
    out << "p cnf " << vars << ' ' << f.size() << "\n";
    for (const auto& c : f) out << c[0] << ' ' << c[1] << ' ' << c[2] << " 0\n";
    return out.str();
}

}  // namespace ftam
