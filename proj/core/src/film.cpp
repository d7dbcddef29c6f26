#include <map>

#include "ftam/generators.hpp"

namespace ftam {

namespace {

std::string name_of(Vec3 c, Dir n) {
    return std::to_string(c.x) + "_" + std::to_string(c.y) + "_" + std::to_string(c.z) + dir_name(n);
}

}  // namespace

Film generate_film(int rows, int cols, const Image& image) {
    if (rows < 1 || cols < 1) throw std::invalid_argument("film needs at least one pixel");
    if (static_cast<int>(image.size()) != rows) throw std::invalid_argument("image height mismatch");
    for (const auto& r : image)
        if (static_cast<int>(r.size()) != cols) throw std::invalid_argument("image width mismatch");

    // Pixel (r, c) owns top cells A = (3c+1, 2r+1) and B = A + x.
    const int width = 3 * cols + 1, depth = 2 * rows + 1;
    Polycube shape;
    for (int x = 0; x < width; ++x)
        for (int y = 0; y < depth; ++y) shape.voxels.insert({x, y, 0});
    // A marker voxel under one corner leaves the slab without symmetries.
    shape.voxels.insert({0, 0, -1});
    auto cell_a = [](int r, int c) { return Vec3{3 * c + 1, 2 * r + 1, 0}; };
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c)
            if (image[r][c]) {
                shape.voxels.insert(cell_a(r, c) + Vec3{0, 0, 1});
                shape.voxels.insert(cell_a(r, c) + Vec3{1, 0, 1});
            }
    Target outline = polycube_outline(shape, 1);
    std::map<std::string, int> by_name;
    for (std::size_t i = 0; i < outline.names.size(); ++i) by_name[outline.names[i]] = static_cast<int>(i);

    // Stage of each outline tile: pin tiles are the pixel cells' top faces and every bump face.
    const int n = static_cast<int>(outline.placements.size());
    std::vector<int> stage(n, 0);
    std::vector<int> flap_of(n, -1);
    Film f;
    f.image = image;
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) {
            Vec3 a = cell_a(r, c), b = a + Vec3{1, 0, 0};
            int flap;
            if (image[r][c]) {
                Vec3 up = a + Vec3{0, 0, 1};
                for (Vec3 v : {up, up + Vec3{1, 0, 0}})
                    for (Dir d : kAllDirs)
                        if (auto it = by_name.find(name_of(v, d)); it != by_name.end()) stage[it->second] = 1;
                flap = by_name.at(name_of(up, Dir::NX));
            } else {
                stage[by_name.at(name_of(b, Dir::PZ))] = 1;
                flap = by_name.at(name_of(a, Dir::PZ));
            }
            stage[flap] = 0;
            flap_of[flap] = r * cols + c;
            f.flaps.push_back(flap);
        }

    // The flap keeps a flexible hinge to the top face and its links to pin tiles only.
    Target& t = f.target;
    t.placements = outline.placements;
    t.names = outline.names;
    for (int i = 0; i < n; ++i)
        if (flap_of[i] >= 0) t.names[i] = "flap_" + std::to_string(flap_of[i] / cols) + "_" + std::to_string(flap_of[i] % cols);
    for (const auto& l : outline.links) {
        int fl = flap_of[l.a] >= 0 ? l.a : flap_of[l.b] >= 0 ? l.b : -1;
        if (fl < 0) {
            t.link(l.a, l.b, l.flexible);
            continue;
        }
        int other = fl == l.a ? l.b : l.a;
        if (stage[other] == 1) {
            t.link(l.a, l.b, l.flexible);
            continue;
        }
        int r = flap_of[fl] / cols, c = flap_of[fl] % cols;
        Vec3 hinge_cell = cell_a(r, c) - Vec3{1, 0, 0};
        if (t.names[other] == name_of(hinge_cell, Dir::PZ)) t.link(l.a, l.b, true);
    }

    // Seed: the three tiles at the marker's outer corner.
    const Vec3 m{0, 0, -1};
    std::vector<int> seed{by_name.at(name_of(m, Dir::NX)), by_name.at(name_of(m, Dir::NY)), by_name.at(name_of(m, Dir::NZ))};
    CompileOptions opt;
    opt.prefix = "film:";
    opt.seed = seed;
    opt.stage_of = stage;
    opt.stages = 1;
    f.compiled = compile_target(t, opt);
    f.system = f.compiled.system;
    f.system.stages[0].name = "pins";
    f.dimensions = {{"rows", rows},           {"cols", cols},         {"slab_width", width},
                    {"slab_depth", depth},    {"slab_height", 1},     {"pixel_pitch_x", 3},
                    {"pixel_pitch_y", 2},     {"face_scale", 1},      {"tiles", n},
                    {"marker_voxels", 1},
                    {"pin_stage_types", static_cast<int>(f.system.stages[0].tile_types.size())}};
    return f;
}

}  // namespace ftam
