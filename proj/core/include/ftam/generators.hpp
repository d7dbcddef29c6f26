#pragma once

#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "ftam/dynamics.hpp"

namespace ftam {

// ---- vertices ----

enum class VertexClass { Convex, Concave, V3, V4, V6, V7, TwoConvex, NonVertex };

const char* vertex_class_name(VertexClass v);
int perspectives(VertexClass v);

struct Polycube {
    std::set<Vec3> voxels;
};

struct ReconfigurableError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Looks at the eight voxels around a lattice point. Throws std::invalid_argument for interior,
// exterior and non-manifold points.
VertexClass classify_vertex(const Polycube& p, Vec3 point);

struct Protocol {
    int loop_length = 0;
    std::string bonds;  // over {R, F}, first is F
    bool operator==(const Protocol&) const = default;
};

Protocol protocol_for(VertexClass v, int perspective);
// The eleven protocols that fix a single perspective.
std::vector<Protocol> deterministic_protocols();
// Loop of tiles sharing one corner: tile i's W side bonds tile i+1's S side.
Assembly protocol_loop(const Protocol& p);

// ---- target-driven compilation ----

// A fixed arrangement of tiles and designated bonds between edge-sharing pairs.
struct Target {
    std::vector<Placement> placements;
    std::vector<std::string> names;
    struct Link {
        int a = 0, b = 0;
        bool flexible = false;
    };
    std::vector<Link> links;

    int add(const Placement& p, std::string name);
    void link(int a, int b, bool flexible);
    // Configuration of the full assembly matching the placements, links in order.
    Configuration configuration() const;
};

struct CompileOptions {
    std::string prefix;
    std::vector<int> seed;           // tile indices present at the start
    std::vector<int> order;          // growth order of the rest; empty = greedy by earlier partners
    std::vector<int> stage_of;       // per tile, 0 = base; empty = all base
    int stages = 0;
    int temperature = 2;
    std::vector<int> link_strength;       // per link; 0 = decided by the growth order
    std::vector<std::string> link_label;  // per link; empty = derived from the tile names
};

struct Compiled {
    StagedSystem system;
    std::vector<TileTypePtr> types;  // per target tile
    std::vector<int> order;          // seed first, then growth order
};

// One tile type per target tile and one glue pair per link. A tile with one earlier partner
// binds it at strength 2; with more, every earlier link has strength 1.
Compiled compile_target(const Target& t, const CompileOptions& opt);
// The whole target as one assembly (uids = tile indices), using the compiled types.
Assembly target_assembly(const Target& t, const std::vector<TileTypePtr>& types);
// Greedy order: repeatedly the attachable unplaced tile of lowest stage with the most placed
// partners, ties by index. A tile is attachable once it has an order-decided link to a placed
// tile or fixed-strength links summing to 2.
std::vector<int> greedy_order(const Target& t, const std::vector<int>& seed, const std::vector<int>& stage_of = {},
                              const std::vector<int>& link_strength = {});

// ---- polycubes ----

struct VertexReport {
    Vec3 point;
    VertexClass cls = VertexClass::NonVertex;
    std::string loop;  // bond sequence read around the vertex in the outline
    bool matches_protocol = false;
};

struct DeterminismReport {
    bool symmetric = false;
    bool reconfigurable_free = true;
    bool edges_connected = true;
    int edge_frames = 0;
    std::vector<VertexReport> vertices;
    std::vector<std::string> warnings;
    bool deterministic() const { return symmetric && reconfigurable_free && edges_connected; }
};

Target polycube_outline(const Polycube& p, int face_scale);
DeterminismReport analyze_polycube(const Polycube& p, int face_scale = 2);
bool polycube_connected(const Polycube& p);
bool polycube_symmetric(const Polycube& p);

struct CompiledPolycube {
    FtamSystem system;
    DeterminismReport report;
    Target target;
    Compiled compiled;
};

// Throws ReconfigurableError if a V3 or V7 vertex is present.
CompiledPolycube compile_polycube(const Polycube& p, int face_scale = 2);

// ---- film ----

using Image = std::vector<std::vector<bool>>;

// A one-voxel-thick slab whose top face carries one pixel per image cell. Each pixel is a flap
// hinged on the top face; stage 1 adds either a pin-down tile (flap flat) or a one-by-two bump
// around the raised flap.
struct Film {
    StagedSystem system;
    Target target;  // the intended terminal assembly
    Compiled compiled;
    std::vector<int> flaps;  // target index of each pixel's flap, row-major
    Image image;
    std::map<std::string, int> dimensions;
};

Film generate_film(int rows, int cols, const Image& image);

// ---- sheet ----

enum class SheetStage { Cube, Brick };

// The six-square cross net of an n x n x n cube. The base grows the net minus its outer
// perimeter; either stage adds the perimeter cells, which close the net into the hollow cube or
// roll it into a long tube with a 3 x 3 cross-section.
struct Sheet {
    int n = 0;
    FtamSystem base;
    Stage cube, brick;
    Target cube_target, brick_target;  // base tiles first, same indices in both
    std::vector<int> base_tiles;
    std::map<std::string, int> dimensions;

    StagedSystem with(SheetStage s) const { return {base, {s == SheetStage::Cube ? cube : brick}}; }
    const Target& target(SheetStage s) const { return s == SheetStage::Cube ? cube_target : brick_target; }
};

// Only n = 4 is supported.
Sheet generate_sheet(int n);

}  // namespace ftam
