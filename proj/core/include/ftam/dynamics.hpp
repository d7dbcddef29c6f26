#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "ftam/configspace.hpp"

namespace ftam {

// Unbiased index in [0, n) by rejection on the raw 64-bit output.
std::uint64_t uniform_index(std::mt19937_64& rng, std::uint64_t n);
// Engine for one assembly step; depends only on (rng_seed, step).
std::mt19937_64 step_engine(std::uint64_t rng_seed, std::uint64_t step);

std::vector<FrontierSite> frontier(const FtamSystem& s, const Assembly& a, const Configuration& c,
                                   const Embedding& e);
std::vector<FrontierSite> frontier(const FtamSystem& s, const Assembly& a, const Configuration& c);
// Sites of every valid configuration, with multiplicity; site.configuration indexes `configs`.
std::vector<FrontierSite> frontier_multiset(const FtamSystem& s, const Assembly& a,
                                            const std::vector<Configuration>& configs);
std::vector<FrontierSite> frontier_multiset(const FtamSystem& s, const Assembly& a,
                                            std::uint64_t budget = kDefaultBudget);

std::vector<Configuration> c_max(const Assembly& a, const std::vector<Configuration>& configs);
std::vector<Configuration> c_max(const Assembly& a, std::uint64_t budget = kDefaultBudget);

struct HistoryEntry {
    std::string tile_type;
    int uid = 0;
    std::vector<SiteBind> binds;
    std::vector<std::pair<SideRef, SideRef>> formed;
    Configuration configuration;  // configuration of the assembly after this step
    std::uint64_t frontier_size = 0;
    std::uint64_t cmax_size = 0;
};

struct RunState {
    Assembly assembly;
    Configuration configuration;
    std::uint64_t rng_seed = 0;
    std::uint64_t step_count = 0;
    std::vector<HistoryEntry> history;
};

RunState initial_state(const FtamSystem& s, std::uint64_t rng_seed);

struct StepResult {
    RunState state;
    bool terminal = false;
};

StepResult assembly_step(const FtamSystem& s, const RunState& st, std::uint64_t budget = kDefaultBudget);

struct RunOutcome {
    RunState state;
    bool terminal = false;
    std::uint64_t steps = 0;
};

RunOutcome run_to_terminal(const FtamSystem& s, RunState st, std::uint64_t max_steps,
                           std::uint64_t budget = kDefaultBudget);

struct TerminalityWitness {
    Configuration configuration;
    FrontierSite site;
};

std::optional<TerminalityWitness> nonterminality_witness(const FtamSystem& s, const Assembly& a,
                                                         std::uint64_t budget = kDefaultBudget);
bool is_terminal(const FtamSystem& s, const Assembly& a, std::uint64_t budget = kDefaultBudget);

// Rebuilds the assembly from the seed and a history.
Assembly replay(const Assembly& seed, const FtamSystem& s, const std::vector<HistoryEntry>& history);

FtamSystem system_at_stage(const StagedSystem& ss, std::size_t stages_added);

struct StagedOutcome {
    std::vector<RunOutcome> boundaries;  // one per stage boundary, base first
    bool all_terminal = true;
};

StagedOutcome staged_run(const StagedSystem& ss, std::uint64_t rng_seed, std::uint64_t max_steps,
                         std::uint64_t budget = kDefaultBudget);

}  // namespace ftam
