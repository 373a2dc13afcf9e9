#include "events.hpp"

#include <algorithm>
#include <cmath>

#include "error.hpp"
#include "io.hpp"
#include "localtime.hpp"

namespace hnilm {

std::vector<Event> detect_events(const PowerSeries& series, double threshold) {
    if (threshold <= 0.0) fail(errc::invalid_sample, "threshold must be > 0");
    if (series.size() < 2) fail(errc::too_short, "need at least 2 samples to detect events");

    std::vector<Event> events;
    for (std::size_t i = 1; i < series.size(); ++i) {
        if (series.is_missing(i - 1) || series.is_missing(i)) continue;
        double delta = series.value(i) - series.value(i - 1);
        if (std::abs(delta) > threshold) events.push_back({i, series.timestamp(i), delta});
    }
    return events;
}

EventStats daily_event_stats(const PowerSeries& series, double threshold, std::int64_t utc_offset) {
    std::vector<Event> events = detect_events(series, threshold);

    EventStats stats;
    std::int64_t first_day = local_day(series.timestamp(0), utc_offset);
    std::int64_t last_day = local_day(series.timestamp(series.size() - 1), utc_offset);
    for (std::int64_t d = first_day; d <= last_day; ++d) stats.per_day_counts[d] = 0;
    for (const Event& e : events) stats.per_day_counts[local_day(e.timestamp, utc_offset)] += 1;

    std::vector<std::size_t> counts;
    counts.reserve(stats.per_day_counts.size());
    for (const auto& [day, count] : stats.per_day_counts) counts.push_back(count);
    std::sort(counts.begin(), counts.end());

    std::size_t n = counts.size();
    // Even-length median is the mean of the central pair (Table-2 style 2050.5).
    stats.median_per_day = (n % 2 == 1)
                               ? static_cast<double>(counts[n / 2])
                               : (static_cast<double>(counts[n / 2 - 1]) + static_cast<double>(counts[n / 2])) / 2.0;
    stats.max_per_day = counts.back();
    return stats;
}

std::vector<std::pair<double, double>> threshold_sweep(const PowerSeries& series,
                                                       std::vector<double> thresholds,
                                                       std::int64_t utc_offset) {
    if (thresholds.empty()) fail(errc::empty_input, "no thresholds given");
    std::sort(thresholds.begin(), thresholds.end());

    std::vector<std::pair<double, double>> sweep;
    sweep.reserve(thresholds.size());
    for (double t : thresholds)
        sweep.emplace_back(t, daily_event_stats(series, t, utc_offset).median_per_day);
    return sweep;
}

SimultaneityReport simultaneous_event_rate(const std::vector<const PowerSeries*>& feeds,
                                           double threshold) {
    if (feeds.size() < 2) fail(errc::empty_input, "need at least 2 feeds");
    const PowerSeries& first = *feeds.front();
    for (const PowerSeries* f : feeds) {
        if (f->period() != first.period())
            fail(errc::incompatible_period, "feeds must share a period");
        if (f->start_time() != first.start_time() || f->size() != first.size())
            fail(errc::no_overlap, "feeds must be aligned to one grid");
    }
    if (first.size() < 2) fail(errc::too_short, "need at least 2 samples");

    SimultaneityReport report;
    std::size_t intervals = first.size() - 1;
    for (std::size_t i = 0; i < intervals; ++i) {
        int stepping = 0;
        for (const PowerSeries* f : feeds) {
            if (f->is_missing(i) || f->is_missing(i + 1)) continue;
            if (std::abs(f->value(i + 1) - f->value(i)) > threshold) ++stepping;
            if (stepping >= 2) break;
        }
        if (stepping >= 2) report.interval_indices.push_back(i);
    }
    report.rate = static_cast<double>(report.interval_indices.size()) / static_cast<double>(intervals);
    return report;
}

std::string events_to_csv(const std::vector<Event>& events) {
    std::string out = "index,timestamp,delta_watts\n";
    for (const Event& e : events) {
        out += std::to_string(e.index);
        out += ',';
        out += std::to_string(e.timestamp);
        out += ',';
        out += format_watts(e.delta);
        out += '\n';
    }
    return out;
}

} // namespace hnilm
