#pragma once

#include <map>
#include <string>
#include <vector>

#include "disagg.hpp"
#include "series.hpp"

namespace hnilm {

struct OnOffCounts {
    std::size_t tp = 0;
    std::size_t fp = 0;
    std::size_t fn = 0;
    std::size_t tn = 0;
};

struct FScore {
    double f = 0.0;
    double precision = 0.0;
    double recall = 0.0;
    OnOffCounts counts;
};

// Per-timestamp ON/OFF classification (ON means power > on_threshold) over the
// aligned overlap; samples missing on either side are excluded. Zero
// denominators yield 0 by convention.
FScore f_score(const PowerSeries& truth, const PowerSeries& predicted, double on_threshold);

// Normalised error in assigned power: sum of |predicted - truth| over the
// aligned overlap divided by the truth's total (the period cancels out of the
// energy ratio).
double nep(const PowerSeries& truth, const PowerSeries& predicted);

struct ApplianceScore {
    std::string name;
    FScore f;
    double nep = 0.0;
};

struct MetricReport {
    std::vector<ApplianceScore> scores;
};

// Whether a predicted timestamp counts as ON by its power draw or by its
// chosen state index being non-zero.
enum class OnMode { PowerThreshold, StateIndex };

MetricReport evaluate(const std::map<std::string, PowerSeries>& truth_set, const DisaggResult& result,
                      double on_threshold, OnMode mode = OnMode::PowerThreshold);

std::string report_to_csv(const MetricReport& report);
std::string report_to_json(const MetricReport& report);

} // namespace hnilm
