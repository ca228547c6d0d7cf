#include <cstdint>
#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qbdq/commands.hpp"

namespace {

std::optional<int> parse_iterations(const std::string& text) {
    if (text == "auto") return std::nullopt;
    const int value = std::stoi(text);
    if (value < 0) throw CLI::ValidationError("--iterations", "must be 'auto' or >= 0");
    return value;
}

std::vector<std::uint64_t> parse_sizes(const std::string& text) {
    std::uint64_t start = 0, stop = 0, step = 0;
    const auto c1 = text.find(':');
    const auto c2 = text.find(':', c1 == std::string::npos ? c1 : c1 + 1);
    if (c1 == std::string::npos || c2 == std::string::npos) {
        throw CLI::ValidationError("--sizes", "expected START:STOP:STEP");
    }
    start = std::stoull(text.substr(0, c1));
    stop = std::stoull(text.substr(c1 + 1, c2 - c1 - 1));
    step = std::stoull(text.substr(c2 + 1));
    if (step == 0 || start < 2 || stop < start) {
        throw CLI::ValidationError("--sizes", "need START >= 2, STOP >= START, STEP > 0");
    }
    std::vector<std::uint64_t> sizes;
    for (std::uint64_t n = start; n <= stop; n += step) sizes.push_back(n);
    return sizes;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"qbdq - quantum private database query simulator"};
    app.require_subcommand(1);

    qbdq::RunConfig config;
    std::string iterations_text = "auto";
    std::string eavesdropper_text = "none";
    std::string formula_text = "table";
    std::string sizes_text;
    long long forced_lambda = -1;
    long long decoy_count = -1;

    const auto add_common = [&](CLI::App* cmd, bool needs_db) {
        auto* db = cmd->add_option("--db", config.db_path, "database file (JSON or CSV)");
        if (needs_db) db->required();
        cmd->add_option("--seed", config.rng_seed, "RNG seed");
        cmd->add_option("--out", config.output_path, "output file (default: stdout)");
    };

    auto* demo = app.add_subcommand("demo", "scripted two-client walkthrough");

    auto* query = app.add_subcommand("query", "run one private-query session");
    add_common(query, true);
    query->add_option("--query-index", config.query_index, "row to retrieve");
    query->add_option("--force-lambda", forced_lambda, "pin the step-2 measurement result");
    query->add_option("--iterations", iterations_text, "'auto' or a fixed count");
    query->add_option("--decoys", decoy_count, "decoy photons per transmission");
    query->add_option("--threshold", config.decoy_threshold, "decoy error-rate threshold");
    query->add_option("--eavesdropper", eavesdropper_text, "none | intercept-resend");

    auto* scan = app.add_subcommand("grover-scan", "per-iteration probability scan");
    add_common(scan, true);
    scan->add_option("--query-index", config.query_index, "row to retrieve");
    scan->add_option("--force-lambda", forced_lambda, "pin the step-2 measurement result");

    auto* compare = app.add_subcommand("compare", "communication-cost comparison CSV");
    add_common(compare, false);
    compare->add_option("--sizes", sizes_text, "database sizes as START:STOP:STEP");
    compare->add_option("--formula-mode", formula_text, "table | text");

    auto* decoy = app.add_subcommand("decoy-test", "standalone decoy-channel check");
    add_common(decoy, false);
    decoy->add_option("--decoys", decoy_count, "number of decoy photons");
    decoy->add_option("--threshold", config.decoy_threshold, "decoy error-rate threshold");
    decoy->add_option("--eavesdropper", eavesdropper_text, "none | intercept-resend");

    CLI11_PARSE(app, argc, argv);

    try {
        config.iterations = parse_iterations(iterations_text);
        if (forced_lambda >= 0) config.forced_lambda = static_cast<std::uint64_t>(forced_lambda);
        if (decoy_count >= 0) config.decoy_count = static_cast<std::size_t>(decoy_count);
        if (!sizes_text.empty()) config.sizes = parse_sizes(sizes_text);

        if (eavesdropper_text == "none") {
            config.eavesdropper = qbdq::Eavesdropper::None;
        } else if (eavesdropper_text == "intercept-resend") {
            config.eavesdropper = qbdq::Eavesdropper::InterceptResend;
        } else {
            std::cerr << "unknown eavesdropper '" << eavesdropper_text << "'\n";
            return qbdq::kExitError;
        }
        if (formula_text == "table") {
            config.formula_mode = qbdq::FormulaMode::TableFit;
        } else if (formula_text == "text") {
            config.formula_mode = qbdq::FormulaMode::Text;
        } else {
            std::cerr << "unknown formula mode '" << formula_text << "'\n";
            return qbdq::kExitError;
        }

        if (demo->parsed()) return qbdq::cmd_demo(std::cout);
        if (query->parsed()) return qbdq::cmd_query(config, std::cout);
        if (scan->parsed()) return qbdq::cmd_grover_scan(config, std::cout);
        if (compare->parsed()) return qbdq::cmd_compare(config, std::cout);
        if (decoy->parsed()) return qbdq::cmd_decoy_test(config, std::cout);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return qbdq::kExitError;
    }
    return qbdq::kExitError;
}
