#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "ftam/generators.hpp"
#include "ftam/io.hpp"

namespace ftam {

enum class Sat3Variant { Rigidity, Terminality };

// The machine built for a 3-CNF formula, in its trivial state. Bond k of the assembly is link k
// of the target, and tile uids are target indices.
struct Sat3Machine {
    Cnf formula;
    Sat3Variant variant = Sat3Variant::Rigidity;
    std::vector<int> variables;  // variables with both polarities, in order of first use
    std::vector<int> stripped;   // variables seen with a single polarity

    FtamSystem system;  // seed = the machine in its trivial state
    Target target;      // trivial-state placements
    Configuration trivial;
    TileTypePtr lock;  // terminality variant only

    // ES-SAH, SAH-rope, rope-TAH, TAH-ES.
    std::array<int, 4> main_loop{};
    std::array<Rel, 4> satisfied_main{};
    // Per clause: two strips of eight bonds, south strip first.
    std::vector<std::array<int, 16>> checkers;
    // Per clause and slot: the three strip sequences, by slot. Slot k needs 2 - k bumps.
    std::array<std::string, 3> sequences;
    // Per eligible variable: every bond that changes when the variable flips.
    std::vector<std::vector<int>> vcgs;
    std::map<std::string, int> dimensions;

    const Assembly& assembly() const { return system.seed; }
    std::string main_loop_string(const Configuration& c) const;
    std::string checker_string(const Configuration& c, int clause, int strip) const;
    // Main loop, checker and VCG bonds.
    std::vector<int> free_bonds() const;
};

// Throws std::invalid_argument on literals of 0 or an empty formula.
Sat3Machine generate_sat3(const Cnf& f, Sat3Variant variant);

// Satisfied state: main loop set, each variable's gadgets placed per the assignment (true pops the
// positive literals down), each checker pointing at its first true literal (slot 0 if none).
Configuration sat_state_config(const Sat3Machine& m, const std::map<int, bool>& assignment);

// Enumeration over the free bond groups only; every other bond keeps its trivial-state relation.
// With satisfied_only the main loop is held in the satisfied state.
EnumResult sat3_factored_search(const Sat3Machine& m, bool satisfied_only, std::uint64_t budget = kDefaultBudget);
std::vector<std::uint8_t> sat3_factored_mask(const Sat3Machine& m, bool satisfied_only);

// Brute force over all assignments of the formula's variables.
std::optional<std::map<int, bool>> brute_force_sat(const Cnf& f);

}  // namespace ftam
