// Acceptance gate: runs every criterion at its stated tolerance and prints
// one pass/fail line per criterion. Exit code is the number of failing
// criteria. Wall-clock budgets: the even-m exactness run must stay under 60 s
// and the whole suite under 5 minutes.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "sdlab/config.hpp"
#include "sdlab/verify.hpp"

using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

} // namespace

int main() {
    sdlab::RunConfig cfg;   // spec defaults: grid 4096, degree 12, 720 samples, seed 42

    struct Entry {
        std::function<sdlab::verify::CriterionResult(const sdlab::RunConfig&)> run;
        double budget_seconds;   // 0 = no individual budget
    };
    const std::vector<Entry> entries = {
        {sdlab::verify::even_m_exactness, 60.0},
        {sdlab::verify::odd_m_bounds, 0.0},
        {sdlab::verify::interpolation_example, 0.0},
        {sdlab::verify::determinant_identity, 0.0},
        {sdlab::verify::nullity_bounds, 0.0},
        {sdlab::verify::kms_zdi_formulas, 0.0},
        {sdlab::verify::kms_normal_closed_form, 0.0},
        {sdlab::verify::nk_count_formula, 0.0},
        {sdlab::verify::similarity_deciders, 0.0},
        {sdlab::verify::identity_residuals, 0.0},
        {sdlab::verify::monotonicity, 0.0},
        {sdlab::verify::circularity_verdicts, 0.0},
    };

    const auto suite_start = Clock::now();
    int failures = 0;
    for (const Entry& entry : entries) {
        const auto start = Clock::now();
        const sdlab::verify::CriterionResult result = entry.run(cfg);
        const double elapsed = seconds_since(start);

        bool ok = result.passed();
        std::string note;
        if (entry.budget_seconds > 0.0 && elapsed > entry.budget_seconds) {
            ok = false;
            note = " [over budget " + std::to_string(entry.budget_seconds) + "s]";
        }
        std::printf("%s criterion %2d: %s (%zu checks, %d failed, max residual %.3g, %.1fs)%s\n",
                    ok ? "PASS" : "FAIL", result.id, result.name.c_str(), result.checks.size(),
                    result.failures(), result.max_residual(), elapsed, note.c_str());
        for (const auto& check : result.checks)
            if (!check.passed)
                std::printf("       FAIL %s%s%s\n", check.name.c_str(),
                            check.info.empty() ? "" : ": ", check.info.c_str());
        if (!ok) ++failures;
    }

    std::printf("%d/%zu criteria passed\n", int(entries.size()) - failures, entries.size());

    const double total = seconds_since(suite_start);
    const bool within_budget = total < 300.0;
    std::printf("%s total wall clock %.1fs (budget 300s)\n", within_budget ? "PASS" : "FAIL",
                total);
    if (!within_budget) ++failures;
    return failures;
}
