#include <algorithm>

#include "ftam/generators.hpp"

namespace ftam {

const char* vertex_class_name(VertexClass v) {
    switch (v) {
        case VertexClass::Convex: return "convex";
        case VertexClass::Concave: return "concave";
        case VertexClass::V3: return "v3";
        case VertexClass::V4: return "v4";
        case VertexClass::V6: return "v6";
        case VertexClass::V7: return "v7";
        case VertexClass::TwoConvex: return "two-convex";
        case VertexClass::NonVertex: return "none";
    }
    return "?";
}

int perspectives(VertexClass v) {
    switch (v) {
        case VertexClass::Convex: return 1;
        case VertexClass::Concave: return 3;
        case VertexClass::V3: return 1;
        case VertexClass::V4: return 2;
        case VertexClass::V6: return 5;
        case VertexClass::V7: return 3;
        case VertexClass::TwoConvex: return 1;
        case VertexClass::NonVertex: return 0;
    }
    return 0;
}

namespace {

// Cell (i,j,k) in {0,1}^3 around the point covers voxel point + (i-1, j-1, k-1).
bool occupied(const Polycube& p, Vec3 point, int i, int j, int k) {
    return p.voxels.count(point + Vec3{i - 1, j - 1, k - 1}) != 0;
}

}  // namespace

VertexClass classify_vertex(const Polycube& p, Vec3 point) {
    bool occ[2][2][2];
    int count = 0;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k) count += occ[i][j][k] = occupied(p, point, i, j, k);
    if (count == 0 || count == 8) throw std::invalid_argument("point is not on the surface");
    // The surface is the same for a pattern and its complement.
    if (count > 4)
        for (auto& a : occ)
            for (auto& b : a)
                for (auto& c : b) c = !c;
    const int k = std::min(count, 8 - count);

    // Quarter squares of the surface meeting at the point.
    int faces = 0;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            faces += occ[0][i][j] != occ[1][i][j];
            faces += occ[i][0][j] != occ[i][1][j];
            faces += occ[i][j][0] != occ[i][j][1];
        }
    // Half-axis segments from the point along which the surface bends.
    int edges = 0;
    for (int ax = 0; ax < 3; ++ax)
        for (int side = 0; side < 2; ++side) {
            bool q[2][2];
            for (int u = 0; u < 2; ++u)
                for (int v = 0; v < 2; ++v) {
                    int c[3];
                    c[ax] = side;
                    c[(ax + 1) % 3] = u;
                    c[(ax + 2) % 3] = v;
                    q[u][v] = occ[c[0]][c[1]][c[2]];
                }
            int n = q[0][0] + q[0][1] + q[1][0] + q[1][1];
            if (n == 1 || n == 3 || (n == 2 && q[0][0] == q[1][1])) ++edges;
        }

    if (k == 1) return VertexClass::Convex;
    if (k == 2 && faces == 4) return VertexClass::NonVertex;
    if (k == 2 && faces == 6) return edges == 6 ? VertexClass::TwoConvex : VertexClass::V7;
    if (k == 3 && faces == 5) return VertexClass::Concave;
    if (k == 3 && faces == 7) return VertexClass::V6;
    if (k == 4 && faces == 4) return VertexClass::NonVertex;
    if (k == 4 && faces == 6) return edges == 6 ? VertexClass::V3 : VertexClass::V4;
    throw std::invalid_argument("non-manifold point");
}

Protocol protocol_for(VertexClass v, int perspective) {
    static const std::map<VertexClass, std::vector<std::string>> table{
        {VertexClass::Convex, {"FFF"}},
        {VertexClass::TwoConvex, {"FFF"}},
        {VertexClass::Concave, {"FRRFF", "FFRRF", "FFFRR"}},
        {VertexClass::V4, {"FRFFRF", "FFRFFR"}},
        {VertexClass::V6, {"FRFRFFF", "FFRFRFF", "FFFRFRF", "FFFFRFR", "FRFFFRF"}},
    };
    if (v == VertexClass::V3 || v == VertexClass::V7)
        throw ReconfigurableError(std::string("vertex ") + vertex_class_name(v) + " has no deterministic protocol");
    auto it = table.find(v);
    if (it == table.end()) throw std::invalid_argument("not a vertex");
    if (perspective < 0 || perspective >= static_cast<int>(it->second.size()))
        throw std::out_of_range("perspective out of range");
    const auto& s = it->second[perspective];
    return {static_cast<int>(s.size()), s};
}

std::vector<Protocol> deterministic_protocols() {
    std::vector<Protocol> out;
    for (VertexClass v : {VertexClass::Convex, VertexClass::Concave, VertexClass::V4, VertexClass::V6})
        for (int k = 0; k < perspectives(v); ++k) out.push_back(protocol_for(v, k));
    return out;
}

Assembly protocol_loop(const Protocol& p) {
    std::vector<std::shared_ptr<TileType>> types;
    for (int i = 0; i < p.loop_length; ++i) {
        auto t = std::make_shared<TileType>();
        t->id = "loop" + std::to_string(i);
        types.push_back(t);
    }
    for (int i = 0; i < p.loop_length; ++i) {
        bool flexible = p.bonds[i] == 'F';
        std::string label = "v" + std::to_string(i);
        types[i]->glue(Side::W) = {{label, false}, 2, flexible};
        types[(i + 1) % p.loop_length]->glue(Side::S) = {{label, true}, 2, flexible};
    }
    Assembly a;
    for (int i = 0; i < p.loop_length; ++i) a.add_tile(i, types[i]);
    for (int i = 0; i < p.loop_length; ++i) a.bind({i, Side::W}, {(i + 1) % p.loop_length, Side::S});
    return a;
}

}  // namespace ftam
