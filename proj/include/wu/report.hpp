#pragma once

// Command layer behind the CLI: parses inputs, dispatches to classifiers and
// oracles, and produces paired JSON/text reports. Kept in the library so the
// command flows are directly testable.

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace wu::cli {

struct Report {
    nlohmann::json data;
    std::string text;
    int exit_code = 0;  // 0 ok; 1 divergence or failed sweep
};

/// Enumeration caps, every one overridable through WU_CAP.
struct Caps {
    int group = 256;
    int ring = 64;
    int module = 256;

    static Caps with_override(int cap) {
        if (cap <= 0) return Caps{};
        return Caps{cap, cap, cap};
    }
};

Report cmd_classify(const std::string& expr);
/// Classify the cokernel of a relation matrix, given as a JSON array of
/// integer rows.
Report cmd_classify_relations(const std::string& matrix_json, int generators);

Report cmd_embed(const std::string& from, const std::string& to,
                 const Caps& caps = {});

Report cmd_type(const std::string& literal,
                const std::optional<std::string>& second,
                bool generator_spec = false);

Report cmd_ring(const std::string& preset_or_file,
                std::vector<std::string> checks, const Caps& caps = {});

struct SweepOptions {
    int pmax = 3;
    long long omax = 81;
    bool parallel = false;
};

/// Suites: thm55, embed, prop51, invariants, rings, all.
Report cmd_sweep(const std::string& suite, const SweepOptions& options = {},
                 const Caps& caps = {});

}  // namespace wu::cli
