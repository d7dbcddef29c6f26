#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ftam/dynamics.hpp"

namespace ftam {

inline constexpr const char* kFormatVersion = "ftam-1";

enum class FormatErrorKind { Syntax, Schema, Version, DuplicateId, UnknownReference, InvalidEmbedding };

struct FormatError : std::runtime_error {
    FormatErrorKind kind;
    std::string field;  // JSON pointer of the offending value, when known
    FormatError(FormatErrorKind k, std::string f, const std::string& msg)
        : std::runtime_error(f.empty() ? msg : f + ": " + msg), kind(k), field(std::move(f)) {}
};

// Systems. A document without stages parses to a StagedSystem with no stages.
std::string serialize_system(const StagedSystem& s);
std::string serialize_system(const FtamSystem& s);
StagedSystem parse_system(const std::string& text);

struct Snapshot {
    StagedSystem system;
    std::size_t stages_added = 0;  // tile types in play: base plus this many stages
    Assembly assembly;
    std::optional<Configuration> configuration;
    std::optional<Embedding> embedding;
    std::uint64_t rng_seed = 0;
    std::uint64_t step_count = 0;
    std::vector<HistoryEntry> history;
    // Per bond, the relations a search may use (rel_bit mask). Empty = unrestricted.
    std::vector<std::uint8_t> allowed;
};

Snapshot snapshot_of(const StagedSystem& s, std::size_t stages_added, const RunState& st, bool with_embedding = true);
std::string serialize_snapshot(const Snapshot& s);
// Checks that a present embedding is the one the configuration induces.
Snapshot parse_snapshot(const std::string& text);

// Only flexible bonds are written, in bond order, one letter each (S, U, D).
std::string configuration_string(const Assembly& a, const Configuration& c);
Configuration parse_configuration_string(const Assembly& a, const std::string& s);

struct FlexibilityCertificate {
    Configuration first, second;
};

struct NonterminalityCertificate {
    Configuration configuration;
    FrontierSite site;
};

struct Certificate {
    std::optional<FlexibilityCertificate> flexibility;
    std::optional<NonterminalityCertificate> nonterminality;
};

std::string serialize_certificate(const Assembly& a, const Certificate& c);
// Tile types named by the certificate are resolved against `types`.
Certificate parse_certificate(const std::string& text, const Assembly& a, const FtamSystem& types);
bool verify_certificate(const FtamSystem& s, const Assembly& a, const Certificate& c);

// Wavefront OBJ: one quad (two triangles) per tile, grouped by uid.
std::string export_obj(const Assembly& a, const Embedding& e);
std::string export_embedding_json(const Assembly& a, const Embedding& e);

using Clause = std::array<int, 3>;
using Cnf = std::vector<Clause>;
// DIMACS clause lines of width exactly 3; comments and the problem line are accepted.
Cnf parse_dimacs(const std::string& text);
std::string write_dimacs(const Cnf& f);

}  // namespace ftam
