#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "ftam/generators.hpp"
#include "ftam/io.hpp"
#include "ftam/sat3.hpp"
#include "json.hpp"

using namespace ftam;

namespace {

constexpr int kOk = 0, kNegative = 1, kError = 2;

struct Failure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Failure("cannot read " + path);
    return {std::istreambuf_iterator<char>(in), {}};
}

void write_out(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Failure("cannot write " + path);
    out << text;
}

// A snapshot document, or a system document read as a snapshot of its seed.
Snapshot load_snapshot(const std::string& path) {
    std::string text = read_file(path);
    auto j = nlohmann::json::parse(text, nullptr, false);
    if (j.is_object() && j.contains("system")) return parse_snapshot(text);
    Snapshot s;
    s.system = parse_system(text);
    s.assembly = s.system.base.seed;
    return s;
}

FtamSystem types_of(const Snapshot& s) { return system_at_stage(s.system, s.stages_added); }

EnumResult enumerate(const Snapshot& s, std::uint64_t budget, std::size_t limit = 0) {
    EnumOptions opt;
    opt.node_budget = budget;
    opt.allowed = s.allowed;
    opt.max_configs = limit;
    return enumerate_configs(s.assembly, opt);
}

std::vector<int> parse_ints(const std::string& text) {
    std::vector<int> out;
    std::string cur;
    for (char ch : text + ",") {
        if (ch == ',' || ch == ';' || ch == ' ') {
            if (!cur.empty()) out.push_back(std::stoi(cur));
            cur.clear();
        } else {
            cur += ch;
        }
    }
    return out;
}

Polycube parse_voxels(const std::string& text) {
    auto v = parse_ints(text);
    if (v.empty() || v.size() % 3) throw Failure("voxels must be x,y,z triples");
    Polycube p;
    for (std::size_t i = 0; i < v.size(); i += 3) p.voxels.insert({v[i], v[i + 1], v[i + 2]});
    return p;
}

Image parse_image(const std::string& text, int rows, int cols) {
    Image img;
    std::vector<bool> row;
    for (char ch : text + ";") {
        if (ch == '0' || ch == '1') row.push_back(ch == '1');
        else if (ch == ';' || ch == '/') {
            if (!row.empty()) img.push_back(row);
            row.clear();
        }
    }
    if (static_cast<int>(img.size()) != rows) throw Failure("image row count does not match --rows");
    for (const auto& r : img)
        if (static_cast<int>(r.size()) != cols) throw Failure("image row length does not match --cols");
    return img;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Flexible tile assembly simulator, verifier and construction compiler"};
    app.require_subcommand(1);
    std::uint64_t budget = kDefaultBudget;
    app.add_option("--budget", budget, "Node budget for configuration enumeration");

    std::string input, output, certificate_path;

    auto* sim = app.add_subcommand("simulate", "Run a system to a terminal assembly");
    std::uint64_t seed = 0, max_steps = 1000;
    sim->add_option("system", input, "System document")->required();
    sim->add_option("--seed", seed, "RNG seed");
    sim->add_option("--max-steps", max_steps, "Step cap per stage");
    sim->add_option("-o,--output", output, "Snapshot output (default stdout)");

    auto* configs = app.add_subcommand("configs", "List the valid configurations of an assembly");
    std::size_t limit = 0;
    bool count_only = false;
    configs->add_option("snapshot", input, "Snapshot or system document")->required();
    configs->add_option("--limit", limit, "Stop after this many configurations");
    configs->add_flag("--count", count_only, "Print only the number of configurations");

    auto* check = app.add_subcommand("check", "Decide rigidity or terminality");
    std::string property;
    check->add_option("property", property, "rigidity or terminality")
        ->required()
        ->check(CLI::IsMember({"rigidity", "terminality"}));
    check->add_option("snapshot", input, "Snapshot or system document")->required();
    check->add_option("--certificate", certificate_path, "Certificate output (default stdout)");

    auto* verify = app.add_subcommand("verify", "Check a certificate against a snapshot");
    verify->add_option("snapshot", input, "Snapshot or system document")->required();
    verify->add_option("certificate", certificate_path, "Certificate document")->required();

    auto* gen = app.add_subcommand("gen", "Generate a construction");
    gen->require_subcommand(1);
    auto* g_poly = gen->add_subcommand("polycube", "Outline of a polycube");
    std::string voxels;
    int face_scale = 2;
    g_poly->add_option("--voxels", voxels, "Voxels as x,y,z;x,y,z;...")->required();
    g_poly->add_option("--face-scale", face_scale, "Tiles per voxel face edge");
    auto* g_film = gen->add_subcommand("film", "Reconfigurable film");
    int rows = 2, cols = 2;
    std::string image;
    g_film->add_option("--rows", rows, "Pixel rows");
    g_film->add_option("--cols", cols, "Pixel columns");
    g_film->add_option("--image", image, "Raised pixels, rows of 0/1 separated by ';' (default none)");
    auto* g_sheet = gen->add_subcommand("sheet", "Sheet folding into a cube or a brick");
    int n = 4;
    std::string stage = "cube";
    g_sheet->add_option("--n", n, "Cube edge length");
    g_sheet->add_option("--stage", stage, "cube or brick")->check(CLI::IsMember({"cube", "brick"}));
    auto* g_sat = gen->add_subcommand("sat3", "Machine for a 3-CNF formula");
    std::string variant = "rigidity";
    bool as_snapshot = false, factored = false, satisfied_only = false, without_lock = false;
    g_sat->add_option("cnf", input, "DIMACS file with three literals per clause")->required();
    g_sat->add_option("--variant", variant, "rigidity or terminality")
        ->check(CLI::IsMember({"rigidity", "terminality"}));
    g_sat->add_flag("--snapshot", as_snapshot, "Emit a snapshot of the trivial state");
    g_sat->add_flag("--factored", factored, "Restrict searches to the free bond groups (implies --snapshot)");
    g_sat->add_flag("--satisfied-only", satisfied_only, "With --factored, hold the main loop satisfied");
    g_sat->add_flag("--without-lock", without_lock, "Terminality variant without the lock tile type");

    for (auto* g : {g_poly, g_film, g_sheet, g_sat}) g->add_option("-o,--output", output, "Output (default stdout)");

    auto* exp = app.add_subcommand("export", "Export an embedding");
    std::string format = "obj";
    exp->add_option("snapshot", input, "Snapshot or system document")->required();
    exp->add_option("--format", format, "obj or json")->check(CLI::IsMember({"obj", "json"}));
    exp->add_option("-o,--output", output, "Output (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kOk : kError;
    }

    try {
        if (*sim) {
            StagedSystem ss = parse_system(read_file(input));
            auto out = staged_run(ss, seed, max_steps, budget);
            const auto& last = out.boundaries.back();
            if (!out.all_terminal) std::cerr << "capped at --max-steps before reaching a terminal assembly\n";
            write_out(output, serialize_snapshot(snapshot_of(ss, out.boundaries.size() - 1, last.state)));
            return kOk;
        }
        if (*configs) {
            Snapshot s = load_snapshot(input);
            auto r = enumerate(s, budget, limit);
            if (r.overflow) {
                std::cout << "unknown-budget-exceeded\n";
                return kError;
            }
            if (count_only) {
                std::cout << r.configs.size() << "\n";
            } else {
                for (const auto& c : r.configs) std::cout << configuration_string(s.assembly, c) << "\n";
            }
            return kOk;
        }
        if (*check) {
            Snapshot s = load_snapshot(input);
            auto r = enumerate(s, budget);
            if (r.overflow) {
                std::cout << "unknown-budget-exceeded\n";
                return kError;
            }
            Certificate cert;
            if (property == "rigidity") {
                if (is_rigid_set(r.configs)) {
                    std::cout << "rigid\n";
                    return kOk;
                }
                const Configuration& first = r.configs[0];
                for (const auto& c : r.configs)
                    if (c != first && c != chiral(first)) {
                        cert.flexibility = FlexibilityCertificate{first, c};
                        break;
                    }
                std::cout << "flexible\n";
            } else {
                FtamSystem types = types_of(s);
                std::optional<NonterminalityCertificate> found;
                for (const auto& c : r.configs) {
                    auto sites = frontier(types, s.assembly, c);
                    if (!sites.empty()) {
                        found = NonterminalityCertificate{c, sites.front()};
                        break;
                    }
                }
                if (!found) {
                    std::cout << "terminal\n";
                    return kOk;
                }
                cert.nonterminality = *found;
                std::cout << "not terminal\n";
            }
            write_out(certificate_path, serialize_certificate(s.assembly, cert));
            return kNegative;
        }
        if (*verify) {
            Snapshot s = load_snapshot(input);
            FtamSystem types = types_of(s);
            auto cert = parse_certificate(read_file(certificate_path), s.assembly, types);
            bool ok = verify_certificate(types, s.assembly, cert);
            std::cout << (ok ? "valid" : "invalid") << "\n";
            return ok ? kOk : kNegative;
        }
        if (*gen) {
            if (*g_poly) {
                auto c = compile_polycube(parse_voxels(voxels), face_scale);
                StagedSystem ss{c.system, {}};
                ss.metadata = {{"face_scale", face_scale},
                               {"tiles", static_cast<int>(c.target.placements.size())},
                               {"edge_frames", c.report.edge_frames},
                               {"deterministic", c.report.deterministic() ? 1 : 0}};
                for (const auto& w : c.report.warnings) std::cerr << "warning: " << w << "\n";
                write_out(output, serialize_system(ss));
            } else if (*g_film) {
                Image img = image.empty() ? Image(rows, std::vector<bool>(cols, false)) : parse_image(image, rows, cols);
                auto f = generate_film(rows, cols, img);
                StagedSystem ss = f.system;
                ss.metadata = f.dimensions;
                write_out(output, serialize_system(ss));
            } else if (*g_sheet) {
                auto sh = generate_sheet(n);
                StagedSystem ss = sh.with(stage == "cube" ? SheetStage::Cube : SheetStage::Brick);
                ss.metadata = sh.dimensions;
                write_out(output, serialize_system(ss));
            } else if (*g_sat) {
                Cnf f = parse_dimacs(read_file(input));
                auto m = generate_sat3(f, variant == "terminality" ? Sat3Variant::Terminality : Sat3Variant::Rigidity);
                StagedSystem ss{m.system, {}};
                if (without_lock && m.lock) std::erase(ss.base.tile_types, m.lock);
                ss.metadata = m.dimensions;
                if (!as_snapshot && !factored) {
                    write_out(output, serialize_system(ss));
                    return kOk;
                }
                Snapshot snap;
                snap.system = ss;
                snap.assembly = m.assembly();
                snap.configuration = m.trivial;
                snap.embedding = compute_embedding(m.assembly(), m.trivial).embedding;
                if (factored) snap.allowed = sat3_factored_mask(m, satisfied_only);
                write_out(output, serialize_snapshot(snap));
            }
            return kOk;
        }
        if (*exp) {
            Snapshot s = load_snapshot(input);
            std::optional<Embedding> e = s.embedding;
            if (!e) {
                auto r = compute_embedding(s.assembly, s.configuration ? *s.configuration : straight_config(s.assembly));
                if (!r.embedding) throw Failure("configuration has no valid embedding");
                e = r.embedding;
            }
            write_out(output, format == "obj" ? export_obj(s.assembly, *e) : export_embedding_json(s.assembly, *e));
            return kOk;
        }
    } catch (const BudgetExceeded& e) {
        std::cout << "unknown-budget-exceeded\n";
        return kError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kError;
    }
    return kError;
}
