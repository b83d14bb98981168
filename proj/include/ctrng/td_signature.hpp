#pragma once

#include <iosfwd>
#include <span>
#include <vector>

namespace ctrng::td {

/// values[j] is the normalized autocorrelation at lag j * lag_step.
struct AcfCurve {
    double lag_step = 0.0;  // ns
    std::vector<double> values;

    double max_lag() const noexcept { return values.empty() ? 0.0 : lag_step * static_cast<double>(values.size() - 1); }
};

/// Normalized autocorrelation of `series` (sample spacing dt, ns) for lags
/// 0 .. max_lag:
///
///   C(L) = sum_i x_i x_{i+L} / sqrt(sum_{i<n-L} x_i^2 * sum_{i>=L} x_i^2),   x = I - mean(I)
///
/// The normalization by the energies of the two overlapping segments keeps
/// C(0) = 1 and |C| <= 1 at every lag. Computed through a zero-padded FFT.
/// Throws ConfigError for a constant series or when n < 2 max_lag / dt.
AcfCurve autocorrelation(std::span<const double> series, double dt, double max_lag);

/// Same quantity evaluated lag by lag with direct sums, O(n * lags).
AcfCurve autocorrelation_direct(std::span<const double> series, double dt, double max_lag);

struct PeakSettings {
    double threshold_sigma = 5.0;
    double floor = 0.05;
    /// Local maxima closer than this (ns) are merged, keeping the higher one.
    double merge_within = 0.1;
};

struct TdPeak {
    double lag_ns = 0.0;
    double height = 0.0;  // signed ACF value at the peak
};

struct TdReport {
    double lag_min = 0.0;
    double lag_max = 0.0;
    double sigma = 0.0;      // spread of |C| over the window, top 1% excluded
    double threshold = 0.0;  // max(threshold_sigma * sigma, floor)
    std::vector<TdPeak> peaks;
    bool concealed = true;   // no peak in the window
};

/// Scan [lag_min, lag_max] for local maxima of |C| above the threshold.
TdReport detect_td_peaks(const AcfCurve& acf, double lag_min, double lag_max, const PeakSettings& settings = {});

/// Largest |C| within +-half_width of `lag`.
double max_abs_near(const AcfCurve& acf, double lag, double half_width);

/// One-sided averaged periodogram (Welch: 8 Hann-windowed segments, 50% overlap,
/// per-segment mean removed). DC bin excluded from `power`.
struct Spectrum {
    double df = 0.0;                 // GHz
    std::vector<double> frequency;   // GHz, bins 1 .. L/2
    std::vector<double> power;       // arbitrary units
};

Spectrum welch_spectrum(std::span<const double> series, double dt, int segments = 8);

/// Smallest frequency below which `fraction` of the AC power lies (GHz).
double energy_bandwidth(const Spectrum& s, double fraction = 0.8);

/// 80%-energy bandwidth of `series`; requires at least 2^14 samples.
double estimate_bandwidth(std::span<const double> series, double dt);

void write_acf_csv(std::ostream& os, const AcfCurve& acf);
void write_spectrum_csv(std::ostream& os, const Spectrum& s);

}  // namespace ctrng::td
