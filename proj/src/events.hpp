#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "series.hpp"

namespace hnilm {

// A step change between consecutive samples: |delta| strictly exceeds the
// detection threshold.
struct Event {
    std::size_t index; // sample index of the later sample, >= 1
    std::int64_t timestamp;
    double delta; // signed watts
};

struct EventStats {
    std::map<std::int64_t, std::size_t> per_day_counts; // local day index -> count
    double median_per_day = 0.0;
    std::size_t max_per_day = 0;
};

std::vector<Event> detect_events(const PowerSeries& series, double threshold);

// Counts events per local calendar day over the series' span; days without
// events count as zero.
EventStats daily_event_stats(const PowerSeries& series, double threshold, std::int64_t utc_offset);

// Median daily event count for each threshold; non-increasing in threshold.
std::vector<std::pair<double, double>> threshold_sweep(const PowerSeries& series,
                                                       std::vector<double> thresholds,
                                                       std::int64_t utc_offset);

struct SimultaneityReport {
    double rate = 0.0;                        // fraction of intervals with >= 2 feeds stepping
    std::vector<std::size_t> interval_indices; // interval i covers samples (i, i+1)
};

// Diagnostic for the one-appliance-per-interval assumption across feeds that
// share one grid.
SimultaneityReport simultaneous_event_rate(const std::vector<const PowerSeries*>& feeds,
                                           double threshold);

std::string events_to_csv(const std::vector<Event>& events);

} // namespace hnilm
