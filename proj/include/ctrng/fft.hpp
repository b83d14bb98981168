#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <string_view>

namespace ctrng {

/// Real-input DFT of fixed length backed by FFTW. Plans are made with
/// FFTW_ESTIMATE so results do not depend on timing measurements.
/// Instances are not shareable across threads; constructing them is.
class RealFft {
public:
    explicit RealFft(std::size_t n);
    ~RealFft();
    RealFft(const RealFft&) = delete;
    RealFft& operator=(const RealFft&) = delete;

    std::size_t size() const noexcept { return n_; }
    std::size_t bins() const noexcept { return n_ / 2 + 1; }

    /// out[k] = sum_j in[j] exp(-2 pi i j k / n), k = 0 .. n/2. `in` may be
    /// shorter than n; the remainder is zero-padded.
    void forward(std::span<const double> in, std::span<std::complex<double>> out);
    /// Unnormalized inverse: out[j] = sum_k X[k] exp(+2 pi i j k / n) over the full Hermitian spectrum.
    void inverse(std::span<const std::complex<double>> in, std::span<double> out);

private:
    std::size_t n_;
    double* real_ = nullptr;
    void* spec_ = nullptr;
    void* plan_fwd_ = nullptr;
    void* plan_inv_ = nullptr;
};

/// Version string of the FFT library, recorded in run manifests.
std::string_view fft_library_version() noexcept;

/// Smallest size >= n of the form 2^a 3^b 5^c.
std::size_t fft_friendly_size(std::size_t n);

}  // namespace ctrng
