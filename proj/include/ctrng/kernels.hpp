#pragma once

// Data-parallel inner loops with a portable scalar reference and an AVX2
// variant picked at runtime. Every variant returns bit-identical results for
// the integer kernels and for abs2; the floating reductions (dot, sum) may
// differ in the last few ulps because the summation order changes.

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

namespace ctrng::kernels {

enum class Backend { Scalar, Avx2 };

std::string_view to_string(Backend b) noexcept;

bool supported(Backend b) noexcept;
/// Backend chosen at startup: the widest one the CPU supports.
Backend active() noexcept;
/// Override the active backend (tests, benchmarks). Throws ConfigError when unsupported.
void select(Backend b);

double dot(std::span<const double> a, std::span<const double> b);
double sum(std::span<const double> a);
/// out[i] = |z[i]|^2, computed as re*re + im*im without contraction.
void abs2(std::span<const std::complex<double>> z, std::span<double> out);
/// Number of nonzero bytes in a 0/1 byte array.
std::uint64_t count_ones(std::span<const std::uint8_t> bits);
/// Number of i with bits[i] != bits[i+1].
std::uint64_t count_transitions(std::span<const std::uint8_t> bits);

// Direct access to each implementation, for equivalence tests.
namespace scalar {
double dot(const double* a, const double* b, std::size_t n);
double sum(const double* a, std::size_t n);
void abs2(const std::complex<double>* z, double* out, std::size_t n);
std::uint64_t count_ones(const std::uint8_t* bits, std::size_t n);
std::uint64_t count_transitions(const std::uint8_t* bits, std::size_t n);
}  // namespace scalar

namespace avx2 {
double dot(const double* a, const double* b, std::size_t n);
double sum(const double* a, std::size_t n);
void abs2(const std::complex<double>* z, double* out, std::size_t n);
std::uint64_t count_ones(const std::uint8_t* bits, std::size_t n);
std::uint64_t count_transitions(const std::uint8_t* bits, std::size_t n);
}  // namespace avx2

}  // namespace ctrng::kernels
