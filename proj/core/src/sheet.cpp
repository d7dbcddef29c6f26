#include <map>
#include <set>

#include "ftam/generators.hpp"

namespace ftam {

namespace {

using Cell = std::pair<int, int>;

std::string cell_name(Cell c) { return std::to_string(c.first) + "_" + std::to_string(c.second); }

// Cross net for n = 4: strip x in [0,16) y in [0,4), top y in [4,8) and bottom y in [-4,0) over x in [4,8).
std::vector<Cell> net_cells() {
    std::vector<Cell> out;
    for (int y = -4; y < 8; ++y)
        for (int x = 0; x < 16; ++x)
            if ((y >= 0 && y < 4) || (x >= 4 && x < 8)) out.push_back({x, y});
    return out;
}

struct NetLink {
    int a, b;
    bool vertical_line;  // the shared edge lies on a line x = const
    int line;            // that constant
};

// Folds the flat net along the given lines and returns the placements.
std::vector<Placement> fold(const std::vector<Cell>& cells, const std::vector<NetLink>& links,
                            const std::map<std::pair<bool, int>, Rel>& lines) {
    Target flat;
    for (auto [x, y] : cells) flat.add({{x, y, 0}, Dir::PZ, Dir::PY}, cell_name({x, y}));
    Configuration c;
    for (const auto& l : links) {
        flat.link(l.a, l.b, true);
        auto it = lines.find({l.vertical_line, l.line});
        c.push_back(it == lines.end() ? Rel::Straight : it->second);
    }
    CompileOptions opt;
    opt.seed = {0};
    auto a = target_assembly(flat, compile_target(flat, opt).types);
    auto e = compute_embedding(a, c, 0, Placement{{cells[0].first, cells[0].second, 0}, Dir::PZ, Dir::PY});
    if (!e.embedding) throw std::logic_error("sheet fold does not close");
    return *e.embedding;
}

// Links every pair of free tile sides that meet on one edge.
void close_up(Target& t, const std::vector<int>& perimeter) {
    std::set<std::pair<int, Side>> used;
    for (const auto& l : t.links) {
        used.insert({l.a, *shared_side(t.placements[l.a], t.placements[l.b])});
        used.insert({l.b, *shared_side(t.placements[l.b], t.placements[l.a])});
    }
    std::map<Vec3, std::vector<std::pair<int, Side>>> at;
    for (int i : perimeter)
        for (Side s : kAllSides)
            if (!used.count({i, s})) at[edge2(t.placements[i], s)].push_back({i, s});
    for (const auto& [edge, v] : at) {
        if (v.size() != 2) continue;
        auto [i, si] = v[0];
        auto [j, sj] = v[1];
        if (shared_side(t.placements[i], t.placements[j]) != si || shared_side(t.placements[j], t.placements[i]) != sj)
            continue;
        Rel r = classify_orientation(t.placements[i], t.placements[j]);
        if (r == Rel::Incompatible) continue;
        t.link(i, j, r != Rel::Straight);
    }
}

}  // namespace

Sheet generate_sheet(int n) {
    if (n != 4) throw std::invalid_argument("only n = 4 is supported");
    Sheet sh;
    sh.n = n;
    const auto cells = net_cells();
    std::map<Cell, int> index;
    for (std::size_t i = 0; i < cells.size(); ++i) index[cells[i]] = static_cast<int>(i);
    auto on_perimeter = [&](Cell c) {
        for (auto [dx, dy] : {std::pair{1, 0}, {-1, 0}, {0, 1}, {0, -1}})
            if (!index.count({c.first + dx, c.second + dy})) return true;
        return false;
    };
    std::vector<char> perim(cells.size());
    std::vector<int> perimeter;
    for (std::size_t i = 0; i < cells.size(); ++i)
        if ((perim[i] = on_perimeter(cells[i]))) perimeter.push_back(static_cast<int>(i));
        else sh.base_tiles.push_back(static_cast<int>(i));

    std::vector<NetLink> net;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        auto [x, y] = cells[i];
        if (auto it = index.find({x + 1, y}); it != index.end()) net.push_back({static_cast<int>(i), it->second, true, x + 1});
        if (auto it = index.find({x, y + 1}); it != index.end()) net.push_back({static_cast<int>(i), it->second, false, y + 1});
    }

    // Base hinges: the cube's folds plus the brick's folds that cross base cells.
    auto base_hinge = [](const NetLink& l) {
        if (l.vertical_line) return l.line == 4 || l.line == 8 || l.line == 12;
        return l.line == -2 || l.line == 0 || l.line == 1 || l.line == 4;
    };
    const std::map<std::pair<bool, int>, Rel> cube_folds{
        {{true, 4}, Rel::Up}, {{true, 8}, Rel::Up}, {{true, 12}, Rel::Up}, {{false, 0}, Rel::Up}, {{false, 4}, Rel::Up}};
    // Cross-section of the brick column x in [4,8): rows [-4,-3] [-2..0] [1,2,3] [4,5,6] [7], closing on itself.
    const std::map<std::pair<bool, int>, Rel> brick_folds{
        {{false, -2}, Rel::Up}, {{false, 1}, Rel::Up}, {{false, 4}, Rel::Up}, {{false, 7}, Rel::Up}};

    for (SheetStage st : {SheetStage::Cube, SheetStage::Brick}) {
        const bool brick = st == SheetStage::Brick;
        const std::string tag = brick ? "brick:" : "cube:";
        Target& t = brick ? sh.brick_target : sh.cube_target;
        auto placed = fold(cells, net, brick ? brick_folds : cube_folds);
        for (std::size_t i = 0; i < cells.size(); ++i)
            t.add(placed[i], (perim[i] ? tag : "") + cell_name(cells[i]));
        std::vector<int> strength;
        std::vector<std::string> label;
        for (const auto& l : net) {
            bool straight = classify_orientation(placed[l.a], placed[l.b]) == Rel::Straight;
            bool flexible = perim[l.a] || perim[l.b] ? (!perim[l.a] || !perim[l.b]) || !straight : base_hinge(l);
            t.link(l.a, l.b, flexible);
            bool mixed = perim[l.a] != perim[l.b];
            strength.push_back(mixed ? 1 : 0);
            label.push_back(mixed ? "sheet:" + cell_name(cells[l.a]) + "~" + cell_name(cells[l.b]) : "");
        }
        close_up(t, perimeter);
        strength.resize(t.links.size(), 0);
        label.resize(t.links.size());
        CompileOptions opt;
        opt.prefix = "sheet:";
        opt.seed = {index.at({5, 1})};
        opt.stage_of.assign(cells.size(), 0);
        for (int i : perimeter) opt.stage_of[i] = 1;
        opt.stages = 1;
        opt.link_strength = strength;
        opt.link_label = label;
        auto c = compile_target(t, opt);
        if (!validate(target_assembly(t, c.types), t.configuration()).valid)
            throw std::logic_error("sheet target is not a valid configuration");
        if (!brick) sh.base = c.system.base;
        (brick ? sh.brick : sh.cube) = c.system.stages[0];
        (brick ? sh.brick : sh.cube).name = brick ? "brick" : "cube";
    }
    sh.dimensions = {{"n", n},
                     {"net_cells", static_cast<int>(cells.size())},
                     {"base_tiles", static_cast<int>(sh.base_tiles.size())},
                     {"perimeter_tiles", static_cast<int>(perimeter.size())},
                     {"base_tile_types", static_cast<int>(sh.base.tile_types.size())},
                     {"cube_stage_types", static_cast<int>(sh.cube.tile_types.size())},
                     {"brick_stage_types", static_cast<int>(sh.brick.tile_types.size())},
                     {"brick_cross_section", 3}};
    return sh;
}

}  // namespace ftam
