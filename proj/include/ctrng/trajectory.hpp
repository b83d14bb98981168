#pragma once

#include <complex>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string_view>
#include <vector>

namespace ctrng {

enum class Channel { X, Y };

std::string_view to_string(Channel c) noexcept;
Channel channel_from_string(std::string_view s);

/// Uniformly sampled channel intensities, optionally with the complex fields.
struct Trajectory {
    double dt = 0.0;  // ns
    double t0 = 0.0;  // ns, time of grid index 0
    std::int64_t first = 0;  // grid index of sample 0; nonzero after drop_before
    std::vector<double> I_x;
    std::vector<double> I_y;
    std::vector<std::complex<double>> E_x;  // empty unless requested
    std::vector<std::complex<double>> E_y;

    std::size_t size() const noexcept { return I_x.size(); }
    bool has_fields() const noexcept { return !E_x.empty(); }
    double time(std::size_t i) const noexcept { return t0 + static_cast<double>(first + static_cast<std::int64_t>(i)) * dt; }
    double t_begin() const noexcept { return time(0); }
    double t_end() const noexcept { return size() == 0 ? time(0) : time(size() - 1); }

    std::span<const double> channel(Channel c) const noexcept { return c == Channel::X ? I_x : I_y; }

    /// Append samples that continue this trajectory on the same grid.
    void append(const Trajectory& next);
    /// Drop leading samples so that the first kept sample is at or before `t`
    /// with at least `margin` samples ahead of it retained. Sample times and
    /// interpolated values of the kept samples are unchanged bit for bit.
    void drop_before(double t, std::size_t margin = 2);

    /// Keep every `factor`-th sample.
    Trajectory decimated(std::size_t factor) const;
};

/// Four-point cubic (Lagrange) interpolation of a channel at time t.
/// Throws RangeError when the stencil leaves the sampled range.
double interpolate(const Trajectory& traj, Channel c, double t);

/// CSV with header t_ns,I_x,I_y[,Re_Ex,Im_Ex,Re_Ey,Im_Ey]; times with 15 significant digits.
void write_csv(std::ostream& os, const Trajectory& traj, bool with_fields);
Trajectory read_csv(std::istream& is);

}  // namespace ctrng
