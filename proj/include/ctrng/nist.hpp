#pragma once

// The fifteen statistical tests of NIST SP 800-22 rev 1a. Every test takes a
// sequence of 0/1 bytes and returns its p-value list, or a not-applicable
// marker when the sequence is too short for the configured parameters.

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ctrng/bitstream.hpp"

namespace ctrng::nist {

enum class TestId {
    Frequency,
    BlockFrequency,
    Runs,
    LongestRun,
    Rank,
    Spectral,
    NonOverlappingTemplate,
    OverlappingTemplate,
    Universal,
    LinearComplexity,
    Serial,
    ApproximateEntropy,
    CumulativeSums,
    RandomExcursions,
    RandomExcursionsVariant,
};

inline constexpr std::array<TestId, 15> kAllTests = {
    TestId::Frequency,          TestId::BlockFrequency,         TestId::Runs,
    TestId::LongestRun,         TestId::Rank,                   TestId::Spectral,
    TestId::NonOverlappingTemplate, TestId::OverlappingTemplate, TestId::Universal,
    TestId::LinearComplexity,   TestId::Serial,                 TestId::ApproximateEntropy,
    TestId::CumulativeSums,     TestId::RandomExcursions,       TestId::RandomExcursionsVariant,
};

/// Display name, e.g. "Monobit Frequency".
std::string_view display_name(TestId id) noexcept;
/// Short identifier, e.g. "monobit_frequency".
std::string_view key(TestId id) noexcept;
/// Accepts either form; throws ConfigError for unknown names.
TestId test_from_name(std::string_view name);

struct TestParams {
    int block_frequency_m = 128;
    int template_m = 9;              // non-overlapping template length
    int overlapping_m = 9;
    int overlapping_block = 1032;
    int universal_L = 7;
    int universal_Q = 1280;
    int linear_complexity_m = 500;
    int serial_m = 16;
    int approximate_entropy_m = 10;
    double alpha = 0.01;

    /// Range checks that do not depend on the sequence length.
    void validate() const;
};

struct TestResult {
    TestId id = TestId::Frequency;
    bool applicable = true;
    std::string reason;            // why the test was not applicable
    std::vector<double> p_values;  // empty when not applicable

    /// Smallest p-value in the list (1 when not applicable).
    double worst_p() const noexcept;
    /// Every p-value >= alpha. Not-applicable results never pass.
    bool passed(double alpha) const noexcept;
};

using Bits = std::span<const std::uint8_t>;

TestResult monobit_frequency(Bits bits);
TestResult block_frequency(Bits bits, int block);
TestResult runs(Bits bits);
TestResult longest_run_of_ones(Bits bits);
TestResult binary_matrix_rank(Bits bits);
TestResult spectral_dft(Bits bits);
TestResult non_overlapping_template(Bits bits, int m);
TestResult overlapping_template(Bits bits, int m, int block);
TestResult universal_maurer(Bits bits, int L, int Q);
TestResult linear_complexity(Bits bits, int block);
TestResult serial(Bits bits, int m);
TestResult approximate_entropy(Bits bits, int m);
TestResult cumulative_sums(Bits bits);  // p-values: forward, backward
TestResult random_excursions(Bits bits);          // states -4..-1, 1..4
TestResult random_excursions_variant(Bits bits);  // states -9..-1, 1..9

TestResult run_test(TestId id, Bits bits, const TestParams& params);
TestResult run_test(std::string_view name, const BitStream& bits, const TestParams& params);

/// Length of the shortest LFSR over GF(2) that generates `bits`.
int berlekamp_massey(Bits bits);
/// Same result, word-parallel over packed bits; used by the linear complexity test.
int berlekamp_massey_packed(Bits bits);

/// Rank over GF(2) of a 32x32 matrix given as 32 row words.
int gf2_rank(std::array<std::uint32_t, 32> rows);

/// Aperiodic (non-self-overlapping) templates of length m in ascending order,
/// each stored with its first bit as the most significant.
std::vector<std::uint32_t> aperiodic_templates(int m);

/// Minimum sequence length for the universal test at block length L (0 when L unsupported).
std::uint64_t universal_min_length(int L);

}  // namespace ctrng::nist
