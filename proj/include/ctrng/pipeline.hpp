#pragma once

// Orchestration of the stages: simulate -> TD analysis -> extraction -> NIST.
// Every command writes its export files and a manifest into the output
// directory and returns a process exit code.

#include <cstdint>
#include <exception>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "ctrng/bitstream.hpp"
#include "ctrng/config.hpp"
#include "ctrng/extraction.hpp"
#include "ctrng/td_signature.hpp"
#include "ctrng/trajectory.hpp"

namespace ctrng::pipeline {

inline constexpr std::string_view kVersion = "0.1.0";

enum ExitCode : int {
    kPass = 0,
    kVerdictFail = 1,  // ran to completion, some verdict failed
    kConfigFailure = 2,
    kRuntimeFailure = 3,
};

std::string sha256_hex(std::span<const std::uint8_t> data);
std::string sha256_file(const std::filesystem::path& path);

struct ChannelTd {
    Channel channel = Channel::X;
    td::AcfCurve acf;
    td::TdReport report;
    td::Spectrum spectrum;
    double bandwidth_GHz = 0;
    std::vector<std::pair<std::string, double>> delays;  // name, lag
    std::vector<double> max_near_delay;                  // max |C| within the window around each delay
};

struct TdAnalysis {
    std::vector<ChannelTd> channels;
    bool concealed = false;  // every channel concealed
    double bandwidth_GHz = 0;  // smallest channel bandwidth

    nlohmann::json to_json(const RunConfig& cfg) const;
};

/// ACF, peak scan and bandwidth of the first analysis.duration ns of `traj`.
TdAnalysis analyze_td(const Trajectory& traj, const RunConfig& cfg);

struct SimulationProducts {
    Trajectory analysis_window;  // first analysis.duration ns after warm-up
    std::vector<BitStream> streams;  // one per extracted channel (x, then y)
    std::vector<extraction::TraceRow> trace;  // first latch edges of channel x
};

/// Integrates the model once, streaming the trajectory through the
/// extractors so memory stays bounded. With `extract` false only the analysis
/// window is produced and the run stops at its end.
SimulationProducts simulate_and_extract(const RunConfig& cfg, bool extract);

/// Same products computed from a stored trajectory.
SimulationProducts extract_from(const Trajectory& traj, const RunConfig& cfg, bool extract);

/// Sequences of `length` bits alternating between the streams: sequence k is
/// block k / streams.size() of stream k % streams.size().
std::vector<BitStream> assemble_sequences(const std::vector<BitStream>& streams, std::uint64_t length,
                                          std::size_t count);

/// Error record written on failure: {"error": {command, kind, message[, time_ns]}}.
nlohmann::json error_record(std::string_view command, const std::exception& e);

int cmd_simulate(const RunConfig& cfg);
int cmd_acf(const RunConfig& cfg);
int cmd_extract(const RunConfig& cfg);
int cmd_nist(const RunConfig& cfg);
int cmd_pipeline(const RunConfig& cfg);

/// Dispatches by command name and turns exceptions into an error record
/// (error.json in the output directory and on stderr) plus a nonzero code.
int run_command(std::string_view command, const RunConfig& cfg);

/// Loads the config then runs the command; config errors are reported the same way.
int run_command(std::string_view command, const std::filesystem::path& config_path,
                const std::filesystem::path& out_override = {});

}  // namespace ctrng::pipeline
