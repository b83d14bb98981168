#pragma once

#include <cstdint>
#include <vector>

#include "ctrng/sfm.hpp"

namespace ctrng::sfm {

struct HistorySample {
    cplx E_x{};
    cplx E_y{};
    double phi = 0.0;
};

/// Ring storage of field samples on the integration grid, addressed by
/// absolute step index. Indices before 0 resolve to the initial condition.
class HistoryBuffer {
public:
    /// `max_lag_steps` is the deepest lag that will be requested.
    HistoryBuffer(std::int64_t max_lag_steps, const HistorySample& initial);

    std::size_t capacity() const noexcept { return data_.size(); }

    /// Append the sample for step `index`; indices must be consecutive from 0.
    void push(std::int64_t index, const HistorySample& s);

    const HistorySample& at(std::int64_t index) const;

    /// Four-point cubic interpolation at index + 1/2. The stencil stays on one
    /// side of index 0, where the initial segment joins the solution.
    HistorySample midpoint(std::int64_t index) const;

    std::int64_t newest() const noexcept { return newest_; }

private:
    std::vector<HistorySample> data_;
    std::uint64_t mask_ = 0;
    std::int64_t newest_ = -1;
    HistorySample initial_;
};

}  // namespace ctrng::sfm
