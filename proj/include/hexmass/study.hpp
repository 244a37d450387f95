#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hexmass/mass.hpp"
#include "hexmass/meshgen.hpp"

// Accuracy-study harness: the per-element error metric, the shear-family
// error table, the delta sweep over randomly perturbed elements, and a
// timing microbenchmark.

namespace hexmass {

enum class Scheme { cm, lm, np1, np4 };

const char* scheme_name(Scheme s);

struct ErrorStats {
    std::string scheme;
    double delta = 0.0;
    int n_elements = 0;
    int n_skipped = 0;   // elements with J0 <= 0, dropped from the averages
    double mean_error_pct = 0.0;
    double max_error_pct = 0.0;
};

struct StudyConfig {
    std::vector<double> deltas;          // non-negative, ascending
    int elements_per_delta = 100;
    std::uint64_t seed = 0;
    std::vector<Scheme> schemes = {Scheme::cm, Scheme::lm, Scheme::np1, Scheme::np4};
};

/// Default sweep: delta 0.0 to 0.7 in steps of 0.05.
StudyConfig default_study_config(std::uint64_t seed);

// Mean over the 8 diagonal entries of the relative absolute error, in
// percent. Throws std::domain_error if any exact entry is zero.
double element_error_pct(const LumpedMass& approx, const LumpedMass& exact);

struct EpsilonTable {
    double epsilon = 0.0;
    double cm_error_pct = 0.0;
    double np1_error_pct = 0.0;
    double lm_error_pct = 0.0;
    double np4_error_pct = 0.0;
};

// Shear element with the default densities: all four schemes versus the
// exact lumped matrix.
EpsilonTable run_epsilon_table(double epsilon);

// One ErrorStats row per (scheme, delta). Per-delta seeds are derived
// from cfg.seed and the delta index, so extending the grid does not
// reshuffle earlier draws. Deterministic for fixed cfg.
std::vector<ErrorStats> run_delta_study(const StudyConfig& cfg);

// CSV with header scheme,delta,n_elements,n_skipped,mean_error_pct,
// max_error_pct and 12-significant-digit numeric fields.
std::string to_csv(const std::vector<ErrorStats>& stats);

struct BenchRow {
    std::string scheme;
    double ns_per_element = 0.0;
};

// Wall time per element for CM, LM, NP1, NP4, and the exact rule over
// pre-generated perturbed elements. Throws std::invalid_argument when
// repetitions < 1 or n_elements < 1.
std::vector<BenchRow> run_bench(int n_elements, int repetitions);

}  // namespace hexmass
