#pragma once

#include <string>
#include <vector>

#include "parafock/coeffs.hpp"
#include "parafock/label.hpp"
#include "parafock/oscillator.hpp"

namespace parafock::cli {

enum class Format { json, csv, plain };

const char* to_string(Format f);

// Shared run configuration for all CLI commands.
struct RunConfig {
    int p = 1;
    int cutoff = 6;
    double tol = 1e-10;
    osc::OscillatorParams params{};
    rep::CoeffVariant variant = rep::CoeffVariant::corrected;
    Format format = Format::plain;
    std::string out;  // empty = stdout

    // Throws std::invalid_argument when outside the supported ranges;
    // verification commands additionally need cutoff >= 3 of headroom for
    // interior-block checks.
    void validate(bool verification) const;
};

struct CheckRecord {
    std::string id;
    std::string realization;  // "matrix" (5x5), "fock" (lazy actions)
    int probe_size = 0;
    double residual = 0.0;
    double threshold = 0.0;
    bool at_least = false;  // witness checks pass when residual >= threshold
    bool pass = false;
};

CheckRecord make_check(std::string id, std::string realization, int probe_size, double residual,
                       double threshold, bool at_least = false);

struct M3TableRow {
    rep::BasisLabel label;
    double realized = 0.0;
    double printed = 0.0;
};

struct VerificationReport {
    static constexpr int schema = 1;
    std::string suite;
    RunConfig config;
    std::vector<CheckRecord> checks;
    std::vector<M3TableRow> m3_table;  // populated by the wqs suite
    bool pass = false;

    void finalize();  // overall pass = conjunction of per-check passes
};

// Named verification suites.  `all` concatenates defining, triple, adjoint
// and wqs at the configured parameters.
VerificationReport run_suite(const std::string& suite, const RunConfig& config);

// Serialization.  JSON output is byte-deterministic: fixed key order and
// fixed 17-significant-digit float formatting.
std::string render_report(const VerificationReport& report);

// 17-significant-digit float formatting shared by all machine outputs.
std::string fmt_g17(double x);

}  // namespace parafock::cli
