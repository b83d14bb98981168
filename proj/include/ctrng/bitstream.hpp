#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "ctrng/trajectory.hpp"

namespace ctrng {

/// Generation metadata carried alongside the bits.
struct BitStreamInfo {
    std::string channel = "x";
    int M = 0;
    double f_c_GHz = 0.0;
    double t_start_ns = 0.0;
    double duration_ns = 0.0;
    std::vector<double> schedule;
};

/// Packed bit sequence. Bit i lives in byte i / 8 at position i % 8 (LSB
/// first); unused high bits of the last byte are always zero.
class BitStream {
public:
    BitStream() = default;
    explicit BitStream(BitStreamInfo info) : info_(std::move(info)) {}

    std::uint64_t size() const noexcept { return count_; }
    bool empty() const noexcept { return count_ == 0; }
    const std::vector<std::uint8_t>& bytes() const noexcept { return bytes_; }
    const BitStreamInfo& info() const noexcept { return info_; }
    BitStreamInfo& info() noexcept { return info_; }

    void push_back(bool bit) {
        if ((count_ & 7u) == 0) bytes_.push_back(0);
        bytes_.back() |= static_cast<std::uint8_t>(static_cast<unsigned>(bit) << (count_ & 7u));
        ++count_;
    }

    bool operator[](std::uint64_t i) const noexcept { return (bytes_[i >> 3] >> (i & 7u)) & 1u; }

    void append(const BitStream& other);
    /// Bits [first, first + count) as a new stream with the same metadata.
    BitStream slice(std::uint64_t first, std::uint64_t count) const;
    /// One byte (0 or 1) per bit.
    std::vector<std::uint8_t> unpacked() const;

    static BitStream from_bits(std::span<const std::uint8_t> bits);
    static BitStream from_packed(std::vector<std::uint8_t> bytes, std::uint64_t bit_count);

    friend bool operator==(const BitStream& a, const BitStream& b) noexcept {
        return a.count_ == b.count_ && a.bytes_ == b.bytes_;
    }

private:
    std::vector<std::uint8_t> bytes_;
    std::uint64_t count_ = 0;
    BitStreamInfo info_;
};

/// Writes `path` (raw packed bytes) and `path` + ".json" (sidecar header with
/// channel, M, f_c_GHz, t_start_ns, duration_ns, bit_count, schedule).
void write_bitstream(const std::filesystem::path& path, const BitStream& bits);
/// Reads a bit file; the sidecar is used when present, otherwise every byte is taken as 8 bits.
BitStream read_bitstream(const std::filesystem::path& path);
/// Text file of '0'/'1' characters (whitespace ignored), the format of the NIST reference data.
BitStream read_ascii_bits(const std::filesystem::path& path);

}  // namespace ctrng
