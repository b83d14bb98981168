#pragma once

// Run configuration: a plain-text file of `key = value` lines grouped under
// [section] headers named after the modules. Comments start with '#' or ';'.
// Unknown sections or keys, repeated keys and malformed values are errors.

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "ctrng/extraction.hpp"
#include "ctrng/integrator.hpp"
#include "ctrng/nist.hpp"
#include "ctrng/sfm.hpp"
#include "ctrng/td_signature.hpp"
#include "ctrng/trajectory.hpp"

namespace ctrng {

struct ExtractionSettings {
    int M = 0;     // required
    double f_c = 0;  // GHz, required
    int channels = 2;
    std::optional<double> duration;  // ns of clocking per channel; derived from the nist block when absent
    std::optional<double> t_start;   // first edge; warm-up + max delay + two samples when absent
    extraction::TieRule tie_rule = extraction::TieRule::Zero;
    bool discard_first_cycle = false;
    std::uint64_t trace_edges = 200;  // rows of the latch trace export
};

struct AnalysisSettings {
    double duration = 2000;  // ns of trajectory fed to the ACF and bandwidth estimate
    double lag_min = 0.5;
    double lag_max = 30;
    td::PeakSettings peaks;
    double delay_window = 0.5;  // +- ns around each feedback delay for the reported maxima
};

struct NistSettings {
    std::uint64_t sequence_length = 1'000'000;
    std::size_t sequence_count = 100;
    nist::TestParams params;
    std::vector<nist::TestId> tests{nist::kAllTests.begin(), nist::kAllTests.end()};
    unsigned threads = 0;
    std::vector<std::filesystem::path> input;  // bit files for `nist`; the extracted streams when empty
};

struct OutputSettings {
    std::filesystem::path dir = "out";
    bool write_trajectory = true;  // trajectory.csv from `simulate`
    bool trajectory_fields = false;
};

struct RunConfig {
    sfm::VcselParams sfm;
    sfm::IntegrationSettings integration;
    bool t_end_given = false;  // integration.t_end set explicitly
    ExtractionSettings extraction;
    AnalysisSettings analysis;
    NistSettings nist;
    OutputSettings output;
    std::string text;  // source text, hashed into the manifest

    /// Cross-module checks; throws ConfigError naming the field.
    void validate() const;

    extraction::ExtractionConfig extraction_config() const;
    /// Clocking time per channel: explicit duration, or enough edges for the NIST sequences.
    double extraction_duration() const;
    /// Time of the last sample any stage needs.
    double simulation_end() const;
    /// The integration block with t_end filled in from simulation_end() when not explicit.
    sfm::IntegrationSettings integration_settings() const;
};

/// Parses and validates. Parse errors carry "line N"; validation errors name the field.
RunConfig parse_config(const std::string& text, const std::string& origin = "<config>");
RunConfig load_config(const std::filesystem::path& path);

}  // namespace ctrng
