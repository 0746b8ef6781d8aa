#pragma once

#include <cstdint>

namespace sdlab {

/// Shared knobs for the CLI and the verification suites.
struct RunConfig {
    int grid_size = 4096;          // theta samples for the zdi grid oracle
    double tol = 0.0;              // 0 = per-module defaults
    int max_word_degree = 12;      // Specht enumeration cap
    int boundary_samples = 720;    // numerical-range sweep resolution
    std::uint64_t seed = 42;       // random corpora
};

} // namespace sdlab
