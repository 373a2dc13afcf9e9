#include "series.hpp"

#include <algorithm>
#include <cmath>

#include "error.hpp"
#include "localtime.hpp"

namespace hnilm {

PowerSeries::PowerSeries(std::int64_t start_time, std::int64_t period, std::vector<double> values)
    : start_time_(start_time), period_(period), values_(std::move(values)) {
    if (period_ <= 0) fail(errc::invalid_sample, "period must be > 0");
    for (double v : values_) {
        if (std::isnan(v)) continue;
        if (!std::isfinite(v) || v < 0.0)
            fail(errc::invalid_sample, "power samples must be finite and non-negative");
    }
}

std::size_t PowerSeries::missing_count() const noexcept {
    std::size_t n = 0;
    for (double v : values_)
        if (std::isnan(v)) ++n;
    return n;
}

double PowerSeries::total_power() const noexcept {
    double sum = 0.0;
    for (double v : values_)
        if (!std::isnan(v)) sum += v;
    return sum;
}

double PowerSeries::mean_power() const noexcept {
    double sum = 0.0;
    std::size_t n = 0;
    for (double v : values_) {
        if (std::isnan(v)) continue;
        sum += v;
        ++n;
    }
    return n ? sum / static_cast<double>(n) : 0.0;
}

bool same_grid(const PowerSeries& a, const PowerSeries& b) noexcept {
    return a.start_time() == b.start_time() && a.period() == b.period() && a.size() == b.size();
}

PowerSeries regularize(std::span<const RawSample> samples, std::int64_t period) {
    if (samples.empty()) fail(errc::empty_input, "no raw samples");
    if (period <= 0) fail(errc::invalid_sample, "period must be > 0");

    std::int64_t min_ts = samples.front().timestamp;
    std::int64_t max_ts = samples.front().timestamp;
    for (const RawSample& s : samples) {
        if (!std::isfinite(s.watts) || s.watts < 0.0)
            fail(errc::invalid_sample, "raw watts must be finite and non-negative");
        min_ts = std::min(min_ts, s.timestamp);
        max_ts = std::max(max_ts, s.timestamp);
    }

    std::int64_t start = floor_div(min_ts, period) * period;
    std::size_t slots = static_cast<std::size_t>(floor_div(max_ts, period) - floor_div(min_ts, period)) + 1;

    std::vector<double> sums(slots, 0.0);
    std::vector<std::size_t> counts(slots, 0);
    for (const RawSample& s : samples) {
        auto bin = static_cast<std::size_t>(floor_div(s.timestamp - start, period));
        sums[bin] += s.watts;
        counts[bin] += 1;
    }

    std::vector<double> values(slots, PowerSeries::kMissing);
    for (std::size_t i = 0; i < slots; ++i)
        if (counts[i]) values[i] = sums[i] / static_cast<double>(counts[i]);

    return PowerSeries(start, period, std::move(values));
}

PowerSeries resample(const PowerSeries& series, std::int64_t new_period) {
    if (new_period <= 0 || new_period % series.period() != 0)
        fail(errc::incompatible_period, "new period must be a positive multiple of the series period");

    auto factor = static_cast<std::size_t>(new_period / series.period());
    if (factor == 1) return series;

    std::vector<double> out;
    out.reserve((series.size() + factor - 1) / factor);
    for (std::size_t i = 0; i < series.size(); i += factor) {
        double sum = 0.0;
        std::size_t n = 0;
        for (std::size_t j = i; j < std::min(i + factor, series.size()); ++j) {
            if (series.is_missing(j)) continue;
            sum += series.value(j);
            ++n;
        }
        out.push_back(n ? sum / static_cast<double>(n) : PowerSeries::kMissing);
    }
    return PowerSeries(series.start_time(), new_period, std::move(out));
}

std::pair<PowerSeries, PowerSeries> align(const PowerSeries& a, const PowerSeries& b) {
    if (a.period() != b.period())
        fail(errc::incompatible_period, "aligned series must share a period");
    if (floor_mod(b.start_time() - a.start_time(), a.period()) != 0)
        fail(errc::incompatible_period, "series grids are phase-shifted");

    std::int64_t lo = std::max(a.start_time(), b.start_time());
    std::int64_t hi = std::min(a.end_time(), b.end_time());
    if (lo >= hi) fail(errc::no_overlap, "series do not overlap in time");

    auto slice = [&](const PowerSeries& s) {
        auto first = static_cast<std::size_t>((lo - s.start_time()) / s.period());
        auto last = static_cast<std::size_t>((hi - s.start_time()) / s.period());
        std::vector<double> v(s.values().begin() + first, s.values().begin() + last);
        return PowerSeries(lo, s.period(), std::move(v));
    };
    return {slice(a), slice(b)};
}

} // namespace hnilm
