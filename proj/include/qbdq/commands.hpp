#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "qbdq/analysis.hpp"
#include "qbdq/channel.hpp"
#include "qbdq/protocol.hpp"

namespace qbdq {

// Subcommand exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;         // bad input or an invariant mismatch
inline constexpr int kExitGroverMiss = 2;    // session ran, final measurement missed
inline constexpr int kExitChannelAbort = 3;  // eavesdropping check failed after max restarts

/// Everything a subcommand needs; unset optionals mean "choose automatically".
struct RunConfig {
    std::string db_path;
    std::uint64_t query_index = 0;
    std::uint64_t rng_seed = 42;
    std::optional<std::uint64_t> forced_lambda;
    std::optional<int> iterations;
    std::optional<std::size_t> decoy_count;
    double decoy_threshold = 0.05;
    Eavesdropper eavesdropper = Eavesdropper::None;
    std::string output_path;  // empty = stdout
    FormulaMode formula_mode = FormulaMode::TableFit;
    std::vector<std::uint64_t> sizes;  // compare subcommand; empty = 8..400 step 8
};

/// Loads {"items": [...], "keys": [...]} JSON or two-column "item,key" CSV.
Database load_database(const std::string& path);

/// The 16-item sample database shipped with the tool (same content as
/// data/example16.json).
Database demo_database();

/// Scripted two-client walkthrough over the demo database: Alice replays the
/// pinned run (lambda 12, query 8, 6 iterations), Bob runs a fresh session on
/// query 4. Exits 0 only if Alice's session reproduces the expected values
/// and decrypts 5.
int cmd_demo(std::ostream& out);

/// One full client session with decoy checks on both quantum transmissions;
/// writes the transcript JSON to output_path (or stdout).
int cmd_query(const RunConfig& config, std::ostream& out);

/// CSV of p_target/p_index per iteration count for the configured query.
int cmd_grover_scan(const RunConfig& config, std::ostream& out);

/// Communication-cost comparison CSV across database sizes.
int cmd_compare(const RunConfig& config, std::ostream& out);

/// Standalone decoy-channel check; prints a ChannelReport JSON object.
int cmd_decoy_test(const RunConfig& config, std::ostream& out);

}  // namespace qbdq
