#include "qbdq/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>
#include <utility>

#include "qbdq/bitmath.hpp"

namespace qbdq {

KeyEnsemble KeyEnsemble::uniform(const std::vector<std::uint64_t>& keys) {
    if (keys.empty()) throw std::invalid_argument("key ensemble: no keys");
    KeyEnsemble ensemble;
    ensemble.entries.reserve(keys.size());
    const double p = 1.0 / static_cast<double>(keys.size());
    for (std::size_t i = 0; i < keys.size(); ++i) {
        ensemble.entries.push_back({p, i, keys[i]});
    }
    return ensemble;
}

double holevo_entropy(const KeyEnsemble& ensemble) {
    double total = 0.0;
    for (const KeyEnsembleEntry& e : ensemble.entries) total += e.probability;
    if (std::abs(total - 1.0) > 1e-9) {
        throw std::invalid_argument("holevo_entropy: probabilities sum to " +
                                    std::to_string(total));
    }
    // The mixture is diagonal in the (index, key) basis labels, so its
    // eigenvalues are the accumulated probabilities per distinct label.
    std::map<std::pair<std::uint64_t, std::uint64_t>, double> eigenvalues;
    for (const KeyEnsembleEntry& e : ensemble.entries) {
        eigenvalues[{e.index, e.key}] += e.probability;
    }
    double entropy = 0.0;
    for (const auto& [label, q] : eigenvalues) {
        if (q > 0.0) entropy -= q * std::log2(q);
    }
    return entropy;
}

std::string scheme_name(Scheme scheme) {
    switch (scheme) {
        case Scheme::J11G12: return "J11G12";
        case Scheme::R13: return "R13";
        case Scheme::QBDQ: return "QBDQ";
    }
    throw std::invalid_argument("unknown scheme");
}

namespace {

void check_size(std::uint64_t database_size) {
    if (database_size < 2) throw std::invalid_argument("cost formulas require N >= 2");
}

}  // namespace

std::uint64_t cost_qubits(Scheme scheme, std::uint64_t database_size, int data_qubits,
                          FormulaMode mode) {
    check_size(database_size);
    const std::uint64_t log_n = static_cast<std::uint64_t>(ceil_log2(database_size));
    switch (scheme) {
        case Scheme::J11G12:
            if (mode == FormulaMode::TableFit) return database_size * log_n;
            return database_size * static_cast<std::uint64_t>(ceil_log4(database_size));
        case Scheme::R13:
            return database_size;
        case Scheme::QBDQ:
            if (mode == FormulaMode::TableFit) return log_n;
            return 2 * (log_n + static_cast<std::uint64_t>(data_qubits));
    }
    throw std::invalid_argument("unknown scheme");
}

std::uint64_t cost_cbits(Scheme scheme, std::uint64_t database_size, FormulaMode mode) {
    check_size(database_size);
    switch (scheme) {
        case Scheme::J11G12:
        case Scheme::R13:
            return mode == FormulaMode::TableFit ? database_size : database_size + 1;
        case Scheme::QBDQ:
            return mode == FormulaMode::TableFit
                       ? static_cast<std::uint64_t>(ceil_log2(database_size))
                       : 1;
    }
    throw std::invalid_argument("unknown scheme");
}

std::uint64_t cost_measurements(Scheme scheme, std::uint64_t database_size) {
    check_size(database_size);
    switch (scheme) {
        case Scheme::J11G12:
            return static_cast<std::uint64_t>(ceil_log2(database_size)) * database_size;
        case Scheme::R13:
            return database_size;
        case Scheme::QBDQ:
            return 2;
    }
    throw std::invalid_argument("unknown scheme");
}

std::vector<EfficiencyRecord> emit_comparison_tables(std::vector<std::uint64_t> sizes,
                                                     int data_qubits, FormulaMode mode) {
    std::sort(sizes.begin(), sizes.end());
    sizes.erase(std::unique(sizes.begin(), sizes.end()), sizes.end());

    std::vector<EfficiencyRecord> records;
    records.reserve(sizes.size() * 3);
    for (std::uint64_t n : sizes) {
        for (Scheme scheme : {Scheme::J11G12, Scheme::R13, Scheme::QBDQ}) {
            EfficiencyRecord record;
            record.scheme = scheme;
            record.database_size = n;
            record.transmitted_qubits = cost_qubits(scheme, n, data_qubits, mode);
            record.exchanged_cbits = cost_cbits(scheme, n, mode);
            record.measurements = cost_measurements(scheme, n);
            records.push_back(record);
        }
    }
    return records;
}

void write_comparison_csv(std::ostream& out, const std::vector<EfficiencyRecord>& records) {
    out << "N,scheme,qubits,cbits,measurements\n";
    for (const EfficiencyRecord& r : records) {
        out << r.database_size << ',' << scheme_name(r.scheme) << ',' << r.transmitted_qubits
            << ',' << r.exchanged_cbits << ',' << r.measurements << '\n';
    }
}

}  // namespace qbdq
