#pragma once

#include <string>
#include <vector>

#include "sdlab/config.hpp"

namespace sdlab::verify {

struct CheckResult {
    std::string name;
    bool passed = false;
    double residual = 0.0;   // criterion-specific defect measure (0 when exact)
    std::string info;
};

struct CriterionResult {
    int id = 0;
    std::string name;
    std::vector<CheckResult> checks;

    bool passed() const;
    double max_residual() const;
    int failures() const;
};

struct SuiteReport {
    std::string suite;
    RunConfig config;
    std::vector<CriterionResult> criteria;

    bool passed() const;
};

// One entry point per acceptance criterion.
CriterionResult even_m_exactness(const RunConfig& cfg);       // 1
CriterionResult odd_m_bounds(const RunConfig& cfg);           // 2
CriterionResult interpolation_example(const RunConfig& cfg);  // 3
CriterionResult determinant_identity(const RunConfig& cfg);   // 4
CriterionResult nullity_bounds(const RunConfig& cfg);         // 5
CriterionResult kms_zdi_formulas(const RunConfig& cfg);       // 6
CriterionResult kms_normal_closed_form(const RunConfig& cfg); // 7
CriterionResult nk_count_formula(const RunConfig& cfg);       // 8
CriterionResult similarity_deciders(const RunConfig& cfg);    // 9
CriterionResult identity_residuals(const RunConfig& cfg);     // 10
CriterionResult monotonicity(const RunConfig& cfg);           // 11
CriterionResult circularity_verdicts(const RunConfig& cfg);   // 12

/// suite is one of "companion" (criteria 1-5), "kms" (6-11), "numrange" (12)
/// or "all". `inject_singular` plants a singular-diagonal-block fixture into
/// the companion suite; its rejection is recorded as a failing check, which is
/// the expected negative-path outcome.
SuiteReport run_suite(const std::string& suite, const RunConfig& cfg,
                      bool inject_singular = false);

/// Deterministic renderings: no timestamps, no environment data, so identical
/// (inputs, config, seed) produce byte-identical output.
std::string report_json(const SuiteReport& report);
std::string report_text(const SuiteReport& report);

} // namespace sdlab::verify
