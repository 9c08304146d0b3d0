#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "connlab/complex.hpp"

namespace connlab {

/// Parameters of a random-complex sweep. Defaults mirror the vertex and
/// edge-density ranges of the survey experiments.
struct ScanConfig {
    long long trials = 500;
    int vertex_min = 3;
    int vertex_max = 15;
    double density_min = 0.2;
    double density_max = 0.8;
    std::uint64_t seed = 1;
    double tol = 1e-9;
    std::size_t max_simplices = 1500;
    bool connected_only = false;
    bool include_fixtures = true;  // degenerate fixtures prepended to the sweep
    std::vector<std::string> checks;  // verify_all subset; empty = all
};

/// Running statistics for one named check over a sweep.
struct CheckStat {
    long long evaluated = 0;
    long long passed = 0;
    double min_margin = 0.0;
    bool has_margin = false;
    long long worst_trial = -1;
    long long worst_index = -1;     // offending k where applicable
    std::string worst_complex;      // serialized witness complex

    void record(long long trial, double margin, bool pass, const std::string& complex_text,
                long long index = -1);
};

struct ScanReport {
    std::string name;
    ScanConfig cfg;
    std::map<std::string, CheckStat> checks;
    bool clean = true;  // false when a check failed or a counterexample candidate appeared
    double wall_seconds = 0.0;
    std::string failure;  // first hard failure description, empty when none

    /// Deterministic content (excludes wall time) — byte-identical across
    /// reruns with the same config.
    nlohmann::json result_json() const;
    /// result + meta (wall time).
    nlohmann::json full_json() const;
};

/// Per-trial seed derivation (splittable, order-independent).
std::uint64_t trial_seed(std::uint64_t seed, long long trial);

/// Seeded random Whitney complex inside the configured ranges; resamples
/// deterministically while the simplex cap or connectivity flag rejects.
Complex sample_complex(const ScanConfig& cfg, long long trial);

/// Question A sweep: margins min_k S_k(L)-S_k(D) and min_k S_k(L)-S_k(g).
/// A negative margin beyond tol is re-verified at tightened residuals and
/// reported as a counterexample candidate (clean = false), never dropped.
ScanReport scan_loewner(const ScanConfig& cfg);

/// Question B sweep: spectral gap lambda_1(g) - lambda_2(g) on connected
/// complexes.
ScanReport scan_green_top(const ScanConfig& cfg);

/// Question C sweep: rho(L) - rho(g).
ScanReport scan_spectral_radius(const ScanConfig& cfg);

/// Every exact identity and spectral bound on every trial; any failure
/// halts the sweep with a serialized witness.
ScanReport verify_all(const ScanConfig& cfg);

/// The same identity suite on one supplied complex.
ScanReport verify_single(const Complex& g, const ScanConfig& cfg);

/// Re-evaluate one named check against a witness complex; returns the
/// reproduced margin (used for witness round-trips).
double replay_witness(const std::string& check, const std::string& complex_text);

/// Spectra/cumulative/degree CSV plus the two SVG figures for a complex.
/// Writes <prefix>spectra.csv, <prefix>figure1.svg, <prefix>figure2.svg and
/// returns the paths.
std::vector<std::string> emit_figures(const Complex& g, const std::string& prefix);

}  // namespace connlab
