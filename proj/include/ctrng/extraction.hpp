#pragma once

// Multi-bit extraction: M one-bit comparators I(t) > I(t - T_m), each latched
// by a positive-edge D flip-flop whose clock lags the previous one by
// tau / M, and a parity (XOR) tree over all latches. One output bit is
// emitted after every latch edge, giving M * f_c bits/s per channel.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include "ctrng/bitstream.hpp"
#include "ctrng/trajectory.hpp"

namespace ctrng::extraction {

enum class TieRule { Zero, One };

/// T_m = sqrt(3.2 m - 1) ns, m = 1 .. M.
std::vector<double> delay_schedule(int M);

struct ExtractionConfig {
    int M = 1;
    double f_c = 10.0;  // GHz
    std::vector<double> schedule;  // T_1 .. T_M, ns
    double t_start = 0.0;          // first clock edge, ns
    TieRule tie_rule = TieRule::Zero;
    bool discard_first_cycle = false;  // drop the M bits emitted while latches still hold reset values

    double tau() const noexcept { return 1.0 / f_c; }
    double delta_tau() const noexcept { return tau() / static_cast<double>(M); }
    double max_delay() const;

    /// Checks M, f_c, schedule size and the two hard timing inequalities.
    /// Throws ConfigError naming the offending index or pair.
    void validate() const;

    /// Validated configuration with the default schedule.
    static ExtractionConfig make(int M, double f_c_GHz, double t_start, TieRule tie = TieRule::Zero);
};

/// Time of the latch edge of flip-flop `m` (0-based) in clock cycle `k`:
/// t_start + (k M + m) * tau / M. Shared by every extractor so edge times agree bitwise.
double edge_time(const ExtractionConfig& cfg, std::int64_t k, int m) noexcept;

struct TimingReport {
    double tau = 0.0;
    double delta_tau = 0.0;
    double min_delay = 0.0;
    double min_gap = 0.0;
    int gap_i = 0;  // 1-based indices of the closest pair
    int gap_j = 0;
    bool delays_exceed_tau = false;
    bool gaps_exceed_tau = false;
    double bandwidth_GHz = 0.0;
    double stagger_bandwidth_product = 0.0;  // delta_tau * B_w
    bool stagger_ok = false;                  // product >= 1
    bool stagger_strong = false;              // product >= 10
};

/// Reports every timing constraint. The two hard inequalities (T_m > tau and
/// |T_i - T_j| > tau) throw ConfigError when violated; the stagger/bandwidth
/// ratio is advisory only.
TimingReport validate_timing(const ExtractionConfig& cfg, double bandwidth_GHz);

/// 1 iff I(t) > I(t - delay); ties resolved by `tie`. Values between samples
/// come from cubic interpolation. Throws RangeError outside the trajectory.
bool comparator_bit(const Trajectory& traj, Channel c, double t, double delay, TieRule tie = TieRule::Zero);

struct LatchState {
    std::vector<std::uint8_t> latched;  // one entry per flip-flop
    std::uint64_t next_edge = 0;        // emission-order index of the next edge
    bool parity = false;                // XOR of `latched`
};

/// Event-ordered extractor that can be fed a trajectory piece by piece.
class Extractor {
public:
    Extractor(ExtractionConfig cfg, Channel channel);

    /// Process edges in emission order while edge time <= `t_until` and the
    /// edge index is below `edge_limit`, appending one bit per edge to `out`.
    /// Returns the number of edges processed.
    std::uint64_t run(const Trajectory& traj, double t_until, std::uint64_t edge_limit, BitStream& out);

    const LatchState& state() const noexcept { return state_; }
    const ExtractionConfig& config() const noexcept { return cfg_; }
    Channel channel() const noexcept { return channel_; }
    /// Earliest time the next edge will read from the trajectory.
    double next_lookback_time() const noexcept;
    double next_edge_time() const noexcept;

private:
    ExtractionConfig cfg_;
    Channel channel_;
    LatchState state_;
};

BitStreamInfo make_info(const ExtractionConfig& cfg, Channel c, double duration);

/// Number of edges (= bits before any discard) for a window of `duration` ns.
std::uint64_t edge_count(const ExtractionConfig& cfg, double duration);

/// M * floor(duration / tau) bits (less M when discard_first_cycle is set).
BitStream extract(const Trajectory& traj, Channel c, const ExtractionConfig& cfg, double duration);

/// Latch states and XOR output after each of the first `edges` edges.
struct TraceRow {
    double t_ns = 0.0;
    std::vector<std::uint8_t> latched;
    std::uint8_t output = 0;
};

std::vector<TraceRow> extract_trace(const Trajectory& traj, Channel c, const ExtractionConfig& cfg, std::uint64_t edges);
/// CSV `t_ns,ff_1..ff_M,xor`.
void write_trace_csv(std::ostream& os, const std::vector<TraceRow>& rows, int M);

/// channels * M * f_c in bits/s.
double throughput(const ExtractionConfig& cfg, int channels);

}  // namespace ctrng::extraction
