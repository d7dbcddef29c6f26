#pragma once

#include <array>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "ftam/geometry.hpp"

namespace ftam {

struct TileType {
    std::string id;
    std::array<Glue, 4> glues{};

    const Glue& glue(Side s) const { return glues[static_cast<int>(s)]; }
    Glue& glue(Side s) { return glues[static_cast<int>(s)]; }
};

using TileTypePtr = std::shared_ptr<const TileType>;

struct Tile {
    int uid = 0;
    TileTypePtr type;
};

struct SideRef {
    int uid = 0;
    Side side = Side::N;
    auto operator<=>(const SideRef&) const = default;
};

struct Bond {
    SideRef a, b;
    bool flexible = false;
    int strength = 0;
};

class Assembly {
public:
    const std::vector<Tile>& tiles() const { return tiles_; }
    const std::vector<Bond>& bonds() const { return bonds_; }
    std::size_t size() const { return tiles_.size(); }

    // Throws on duplicate uid.
    void add_tile(int uid, TileTypePtr type);
    // Appends a bond record after endpoint checks; glue-level checks live in check_assembly.
    int add_bond(SideRef a, SideRef b, bool flexible, int strength);
    // Adds the bond implied by the two glues; throws if they cannot bind in rel.
    int bind(SideRef a, SideRef b, Rel rel = Rel::Straight);
    void set_type(int uid, TileTypePtr type);

    bool has(int uid) const { return index_.count(uid) != 0; }
    int index_of(int uid) const;
    const Tile& tile(int uid) const { return tiles_[index_of(uid)]; }
    const Glue& glue(SideRef r) const { return tile(r.uid).type->glue(r.side); }
    // Bond index using this side, if any.
    std::optional<int> bond_at(SideRef r) const;
    int max_uid() const;
    std::vector<int> flexible_bonds() const;

private:
    std::vector<Tile> tiles_;
    std::vector<Bond> bonds_;
    std::unordered_map<int, int> index_;
    std::unordered_map<long long, int> side_use_;
};

inline long long side_key(SideRef r) { return static_cast<long long>(r.uid) * 4 + static_cast<int>(r.side); }

struct FtamSystem {
    std::vector<TileTypePtr> tile_types;
    Assembly seed;
    int temperature = 2;

    TileTypePtr find_type(const std::string& id) const;
};

struct Stage {
    std::string name;
    std::vector<TileTypePtr> tile_types;
};

struct StagedSystem {
    FtamSystem base;
    std::vector<Stage> stages;
    std::map<std::string, int> metadata;  // generator dimensions, carried through documents
};

struct FaceGraph {
    // node[i] is the face of the i-th tile in assembly order.
    std::vector<int> node;
    int node_count = 0;
    std::vector<std::pair<int, int>> edges;
};

FaceGraph face_graph(const Assembly& a);
bool connected(const Assembly& a);

// Throws std::invalid_argument on a disconnected assembly.
bool tau_stable(const Assembly& a, int tau);
// Weight of the lightest cut separating the bond graph; -1 for a single tile.
long min_cut_weight(const Assembly& a);

enum class Violation {
    DuplicateGlueUse,
    UnknownTileType,
    GlueMismatch,
    DanglingBond,
    Disconnected,
    NotTauStable,
};

const char* violation_name(Violation v);
std::vector<Violation> check_assembly(const Assembly& a, const FtamSystem& s);

}  // namespace ftam
