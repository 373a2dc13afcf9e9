#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <utility>
#include <vector>

namespace hnilm {

// Uniformly sampled active-power series. timestamp(i) = start_time + i*period.
// Missing samples are stored as NaN; all present samples are finite and >= 0.
class PowerSeries {
public:
    static constexpr double kMissing = std::numeric_limits<double>::quiet_NaN();

    PowerSeries(std::int64_t start_time, std::int64_t period, std::vector<double> values);

    std::int64_t start_time() const noexcept { return start_time_; }
    std::int64_t period() const noexcept { return period_; }
    std::size_t size() const noexcept { return values_.size(); }
    bool empty() const noexcept { return values_.empty(); }

    // One past the last covered instant.
    std::int64_t end_time() const noexcept {
        return start_time_ + static_cast<std::int64_t>(values_.size()) * period_;
    }

    std::int64_t timestamp(std::size_t i) const noexcept {
        return start_time_ + static_cast<std::int64_t>(i) * period_;
    }

    double value(std::size_t i) const noexcept { return values_[i]; }
    bool is_missing(std::size_t i) const noexcept { return values_[i] != values_[i]; }

    std::span<const double> values() const noexcept { return values_; }

    std::size_t missing_count() const noexcept;

    // Sum and mean over present samples.
    double total_power() const noexcept;
    double mean_power() const noexcept;

private:
    std::int64_t start_time_;
    std::int64_t period_;
    std::vector<double> values_;
};

bool same_grid(const PowerSeries& a, const PowerSeries& b) noexcept;

struct RawSample {
    std::int64_t timestamp;
    double watts;
};

// Bin irregular raw samples onto a uniform grid; each slot is the mean of the
// samples falling in [t, t+period), empty slots are missing.
PowerSeries regularize(std::span<const RawSample> samples, std::int64_t period);

// Downsample by an integer factor, averaging and ignoring missing samples.
PowerSeries resample(const PowerSeries& series, std::int64_t new_period);

// Restrict both series to their overlapping time range.
std::pair<PowerSeries, PowerSeries> align(const PowerSeries& a, const PowerSeries& b);

} // namespace hnilm
