#pragma once

#include <string>
#include <vector>

#include "dosc/oscillator.hpp"

namespace dosc::report {

struct CheckResult {
    std::string name;
    std::string identity;  // the relation being verified, human readable
    double residual;
    double tolerance;
    bool pass;
};

struct ReportOptions {
    double b = 2.0;
    int p = 1;
    int n_max = 10;
    double tol_coarse = 1e-6;
    double tol_fine = 1e-8;
    int grid_nodes = 4000;
};

struct VerificationReport {
    ReportOptions options;
    osc::ModelParams params;
    std::vector<std::pair<std::string, std::string>> conventions;
    std::vector<CheckResult> checks;

    bool all_pass() const;
};

// Runs the full identity registry for one parameter set.
VerificationReport run_verification(const ReportOptions& options);

// Deterministic JSON serialization (fixed ordering, 17 significant digits).
std::string to_json(const VerificationReport& report);
std::string to_text(const VerificationReport& report);

// 17-significant-digit round-trip-safe float formatting shared with the CSV
// emitters.
std::string format_double(double value);

}  // namespace dosc::report
