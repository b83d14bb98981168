#pragma once

// Suite-level analysis over many sequences: pass proportions against the
// binomial confidence interval and the uniformity of p-values.

#include <cstddef>
#include <optional>
#include <ostream>
#include <vector>

#include <nlohmann/json.hpp>

#include "ctrng/bitstream.hpp"
#include "ctrng/nist.hpp"

namespace ctrng::nist {

struct ProportionInterval {
    double center = 0;      // 1 - alpha
    double half_width = 0;  // 3 sqrt(alpha (1 - alpha) / n)
    std::size_t n = 0;

    double lower() const noexcept { return center - half_width; }
    double upper() const noexcept { return center + half_width; }
};

/// (1 - alpha) +- 3 sqrt(alpha (1 - alpha) / n). Throws ConfigError when n == 0.
ProportionInterval proportion_interval(double alpha, std::size_t n);

/// Chi-square p-value of `p_values` spread over 10 equal bins on [0, 1].
double uniformity_p(const std::vector<double>& p_values);

/// Significance applied to a sequence's worst p-value when a test reports
/// `statistics` p-values: 1 - (1 - alpha)^(1 / statistics).
double worst_case_threshold(double alpha, std::size_t statistics);

struct SuiteTestSummary {
    TestId id = TestId::Frequency;
    std::size_t applicable_count = 0;
    std::size_t statistic_count = 0;
    std::string reason;  // set when no sequence was applicable

    double proportion = 0;             // sequences whose worst p clears the adjusted threshold
    double worst_p = 1;                // min over statistics of the uniformity p-value
    double min_sequence_p = 1;         // smallest p-value seen in any sequence
    std::vector<double> statistic_proportions;  // fraction with p >= alpha, per statistic
    std::vector<double> statistic_uniformity;   // uniformity p-value, per statistic
    std::size_t statistics_below_interval = 0;
    ProportionInterval interval;  // for applicable_count sequences
    bool passed = false;          // proportion >= interval lower bound (false when not applicable)
};

struct SuiteReport {
    std::size_t sequence_count = 0;
    std::size_t sequence_length = 0;
    double alpha = 0.01;
    ProportionInterval interval;  // for sequence_count sequences
    std::vector<SuiteTestSummary> tests;
    std::vector<std::vector<TestResult>> per_sequence;  // [sequence][test]
    bool overall = false;  // at least one applicable test and all applicable tests passed

    nlohmann::json to_json() const;
    /// Table with one row per test: proportion, worst p, verdict.
    void write_table(std::ostream& os) const;
};

struct SuiteOptions {
    std::vector<TestId> tests{kAllTests.begin(), kAllTests.end()};
    unsigned threads = 0;  // 0: hardware concurrency
};

/// Runs every selected test on every sequence. Requires >= 2 sequences of one length.
SuiteReport run_suite(const std::vector<BitStream>& sequences, const TestParams& params,
                      const SuiteOptions& options = {});

}  // namespace ctrng::nist
