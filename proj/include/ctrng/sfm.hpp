#pragma once

// Spin-flip model of a VCSEL with polarization-rotated optical feedback and
// delayed electro-optic phase modulation. Time unit is ns throughout.

#include <complex>

namespace ctrng::sfm {

using cplx = std::complex<double>;

/// How the linear anisotropy term enters the field equations.
///   Real:    -(g_a + g_p) E_x,      +(g_a + g_p) E_y
///   Complex: -(g_a + i g_p) E_x,    +(g_a + i g_p) E_y
enum class Anisotropy { Real, Complex };

struct VcselParams {
    double k = 300.0;         // cavity decay rate
    double alpha = 4.0;       // linewidth enhancement factor
    double g_N = 1.0;         // carrier decay rate
    double g_a = 0.5;         // dichroism
    double g_p = 30.0;        // birefringence
    double g_s = 50.0;        // spin-flip rate
    double beta_sp = 1e-6;    // spontaneous emission factor
    double mu = 4.5;          // normalized pump, threshold at 1
    double omega_0 = 2.2176e15;  // rad/s
    double g1 = 15.0;         // feedback strength, x mode
    double g2 = 15.0;         // feedback strength, y mode
    double theta_p1 = 0.39269908169872414;  // 22.5 deg
    double theta_p2 = 0.39269908169872414;
    double tau_o1 = 1.5;      // VCSEL -> PBS
    double tau_o2 = 1.5;      // PBS -> mirror
    double tau_e = 23.25;     // electro-optic loop delay
    bool noise_enabled = false;
    Anisotropy anisotropy = Anisotropy::Complex;

    /// Optical roundtrip time 2 (tau_o1 + tau_o2).
    double tau_o() const noexcept { return 2.0 * (tau_o1 + tau_o2); }
    /// Lag at which the phase signal enters the feedback: tau_e + 2 tau_o1 + tau_o2.
    double tau_phase() const noexcept { return tau_e + 2.0 * tau_o1 + tau_o2; }

    /// Throws ConfigError naming the first violated constraint.
    void validate() const;
};

struct SimState {
    cplx E_x{};
    cplx E_y{};
    double N = 0.0;
    double n = 0.0;
    double t = 0.0;
};

struct Derivative {
    cplx dE_x{};
    cplx dE_y{};
    double dN = 0.0;
    double dn = 0.0;
};

/// Values the right-hand side needs from the past.
struct DelayedInputs {
    cplx E_x{};      // E_x(t - tau_o)
    cplx E_y{};      // E_y(t - tau_o)
    double phi = 0;  // phi(t - tau_e - 2 tau_o1 - tau_o2)
};

/// |E_y sin(2 theta_p1) - E_x cos(2 theta_p1)|^2
double phase_signal(cplx E_x, cplx E_y, double theta_p1) noexcept;

/// Constants of the feedback path that do not change during a run.
struct FeedbackConstants {
    double c1 = 0;    // cos(2 theta_p1)
    double s1 = 0;    // sin(2 theta_p1), also Psi_x
    double cos2 = 0;  // cos^2(2 theta_p2)
    double sin2 = 0;  // sin^2(2 theta_p2)
    cplx rotation{};  // exp(-i omega_0 tau_o)

    static FeedbackConstants from(const VcselParams& p) noexcept;
};

struct FeedbackPair {
    cplx x{};
    cplx y{};
};

/// Polarization-rotated feedback with phase modulation driven by the delayed
/// phase signal. Isolated so that alternative readings can be swapped in.
FeedbackPair feedback_term(const VcselParams& p, const FeedbackConstants& fc, const DelayedInputs& d) noexcept;

/// Field and carrier derivatives. `noise` is added to the field equations as is
/// (already scaled); pass zeros for the deterministic system.
/// Throws NumericalError when any input is non-finite.
Derivative rhs(const SimState& s, const DelayedInputs& d, const VcselParams& p, const FeedbackConstants& fc,
               cplx noise_x = {}, cplx noise_y = {});

Derivative rhs(const SimState& s, const DelayedInputs& d, const VcselParams& p);

/// Max-norm of rhs with the delayed inputs set equal to the current state.
double steady_state_residual(const SimState& s, const VcselParams& p);

}  // namespace ctrng::sfm
