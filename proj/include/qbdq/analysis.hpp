#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace qbdq {

struct KeyEnsembleEntry {
    double probability = 0.0;
    std::uint64_t index = 0;
    std::uint64_t key = 0;
};

/// Mixture of basis states |index>|key>, one entry per database row.
struct KeyEnsemble {
    std::vector<KeyEnsembleEntry> entries;

    /// Equiprobable ensemble (1/N, i, keys[i]).
    static KeyEnsemble uniform(const std::vector<std::uint64_t>& keys);
};

/// Holevo bound of the ensemble in bits: S(rho) - sum_i p_i S(rho_i). Every
/// entry is a pure basis state, so the bound reduces to the Shannon entropy
/// of the probabilities accumulated over distinct (index, key) labels.
double holevo_entropy(const KeyEnsemble& ensemble);

enum class Scheme { J11G12, R13, QBDQ };

/// TableFit reproduces the published comparison tables exactly (for the
/// J11/G12 substring count k this forces k = ceil(log2 N)); Text evaluates
/// the accompanying prose formulas instead (k = log sqrt(N), rounded up to
/// whole substrings, and 2(ceil(log2 N) + m) qubits for QBDQ). The two
/// sources disagree, so both are exposed and labeled rather than reconciled.
enum class FormulaMode { TableFit, Text };

std::string scheme_name(Scheme scheme);

std::uint64_t cost_qubits(Scheme scheme, std::uint64_t database_size, int data_qubits,
                          FormulaMode mode = FormulaMode::TableFit);
std::uint64_t cost_cbits(Scheme scheme, std::uint64_t database_size,
                         FormulaMode mode = FormulaMode::TableFit);
std::uint64_t cost_measurements(Scheme scheme, std::uint64_t database_size);

struct EfficiencyRecord {
    Scheme scheme = Scheme::QBDQ;
    std::uint64_t database_size = 0;
    std::uint64_t transmitted_qubits = 0;
    std::uint64_t exchanged_cbits = 0;
    std::uint64_t measurements = 0;
};

/// One record per (size, scheme), sizes ascending (deduplicated), schemes in
/// the order J11G12, R13, QBDQ.
std::vector<EfficiencyRecord> emit_comparison_tables(std::vector<std::uint64_t> sizes,
                                                     int data_qubits,
                                                     FormulaMode mode = FormulaMode::TableFit);

/// CSV with header "N,scheme,qubits,cbits,measurements", LF line endings.
void write_comparison_csv(std::ostream& out, const std::vector<EfficiencyRecord>& records);

}  // namespace qbdq
