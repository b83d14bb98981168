#pragma once

#include <cstdint>
#include <random>

#include "ctrng/history.hpp"
#include "ctrng/sfm.hpp"
#include "ctrng/trajectory.hpp"

namespace ctrng::sfm {

struct IntegrationSettings {
    double h = 5e-5;           // step, ns (0.05 ps)
    double t_end = 2200.0;     // ns
    double warm_up = 200.0;    // ns discarded before the first output sample
    std::int64_t decimation = 20;
    std::uint64_t seed = 1;
    double divergence_bound = 1e6;
    bool keep_fields = false;

    void validate() const;
};

/// Default initial condition: E = 1e-3 (1 + i) on both modes, N = mu, n = 0,
/// each component scaled by (1 + 1e-6 u) with u uniform in [-1, 1] from `seed`.
SimState initial_state(const VcselParams& p, std::uint64_t seed);

/// Number of integration steps a delay spans. Throws ConfigError unless the
/// delay is an integer multiple of h.
std::int64_t delay_steps(double delay, double h, const char* name);

/// Fixed-step integrator for the delayed system. Classical RK4 on the
/// deterministic equations; Euler-Maruyama on the same grid when noise is on.
/// Delayed values at RK4 half steps come from cubic interpolation of the
/// stored grid samples.
class Integrator {
public:
    Integrator(const VcselParams& p, const IntegrationSettings& s, const SimState& ic);

    /// Advance to `t` (ns, clipped to t_end) and return the decimated samples
    /// produced on the way that lie at or after the warm-up time.
    Trajectory advance_to(double t);

    const SimState& state() const noexcept { return state_; }
    double time() const noexcept { return static_cast<double>(step_) * settings_.h; }
    std::int64_t step_index() const noexcept { return step_; }
    std::int64_t total_steps() const noexcept { return last_step_; }
    /// Time of the first output sample.
    double first_sample_time() const noexcept;

private:
    void step_rk4();
    void step_euler_maruyama();
    HistorySample sample_of(const SimState& s) const noexcept;
    DelayedInputs delayed_at(std::int64_t index) const;
    DelayedInputs delayed_mid(std::int64_t index) const;
    double gaussian();

    VcselParams params_;
    IntegrationSettings settings_;
    FeedbackConstants fc_;
    SimState state_;
    HistoryBuffer history_;
    std::int64_t lag_field_;
    std::int64_t lag_phase_;
    std::int64_t step_ = 0;
    std::int64_t last_step_ = 0;
    std::int64_t first_sample_step_ = 0;
    std::mt19937_64 rng_;
};

/// Integrate from `ic` to settings.t_end and return the post-warm-up trajectory.
Trajectory integrate(const VcselParams& p, const SimState& ic, const IntegrationSettings& s);

}  // namespace ctrng::sfm
