#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ftam/assembly.hpp"

namespace ftam {

// One entry per bond of the assembly, indexed like Assembly::bonds().
// Rigid bonds are always Straight; only flexible entries are serialized.
using Configuration = std::vector<Rel>;
// One placement per tile, indexed like Assembly::tiles().
using Embedding = std::vector<Placement>;

enum class ConfigViolation { Overlap, BondThroughSameSpace, ContradictingLoop, Incomplete };

const char* config_violation_name(ConfigViolation v);

struct Verdict {
    bool valid = false;
    std::optional<ConfigViolation> violation;
};

struct EmbedResult {
    std::optional<Embedding> embedding;
    std::optional<ConfigViolation> failure;
};

struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline constexpr Placement kAnchorPlacement{{0, 0, 0}, Dir::PZ, Dir::PY};
inline constexpr std::uint64_t kDefaultBudget = 10'000'000;

// All-Straight configuration for a.
Configuration straight_config(const Assembly& a);
int anchor_uid(const Assembly& a);

// Breadth-first placement propagation. Reports ContradictingLoop or Overlap on failure.
EmbedResult compute_embedding(const Assembly& a, const Configuration& c, int anchor, const Placement& ap);
EmbedResult compute_embedding(const Assembly& a, const Configuration& c);

Verdict validate(const Assembly& a, const Configuration& c);
Configuration chiral(const Configuration& c);

struct EnumOptions {
    std::uint64_t node_budget = kDefaultBudget;
    // Optional per-bond restriction: bit r set means Rel r is allowed. Empty = unrestricted.
    std::vector<std::uint8_t> allowed;
    // Stop after this many configurations (0 = all). Not an overflow.
    std::size_t max_configs = 0;
};

struct EnumResult {
    std::vector<Configuration> configs;
    bool overflow = false;
    std::uint64_t nodes = 0;
};

inline constexpr std::uint8_t rel_bit(Rel r) { return static_cast<std::uint8_t>(1u << static_cast<int>(r)); }

EnumResult enumerate_configs(const Assembly& a, const EnumOptions& opt = {});
// Throwing convenience wrapper: all of C(a) or BudgetExceeded.
std::vector<Configuration> all_configs(const Assembly& a, std::uint64_t budget = kDefaultBudget);
// Exhaustive 3^k reference enumeration; only for small k.
std::vector<Configuration> naive_configs(const Assembly& a);

bool is_rigid_set(const std::vector<Configuration>& configs);
bool is_rigid(const Assembly& a, std::uint64_t budget = kDefaultBudget);

struct NewBond {
    SideRef a, b;
    Rel rel = Rel::Straight;
    BondSpec spec;
};

// Maximum set of new bonds formable in the embedding of c, with the documented tie-break.
std::vector<NewBond> formable_bonds(const Assembly& a, const Configuration& c, const Embedding& e);
int count_new_bonds(const Assembly& a, const Configuration& c);

bool verify_flexibility_certificate(const Assembly& a, const Configuration& c, const Configuration& c2);

struct SiteBind {
    SideRef existing;
    Side own = Side::N;
    auto operator<=>(const SiteBind&) const = default;
};

struct FrontierSite {
    TileTypePtr tile_type;
    Placement placement;
    std::vector<SiteBind> binds;
    int configuration = -1;  // index into the enumerated set, when produced by frontier_multiset
};

bool verify_nonterminality_certificate(const FtamSystem& s, const Assembly& a, const Configuration& c,
                                       const FrontierSite& f);

// Canonical form of an embedding up to rotation and translation.
struct CanonicalCell {
    Vec3 c2;
    int normal = 0;
    std::string label;
    auto operator<=>(const CanonicalCell&) const = default;
};
using CanonicalForm = std::vector<CanonicalCell>;

CanonicalForm canonical_form(const Assembly& a, const Embedding& e, bool labeled, bool allow_reflection = false);
// Canonical form of a bare set of placements.
CanonicalForm canonical_shape(const std::vector<Placement>& ps, bool allow_reflection = false);

}  // namespace ftam
