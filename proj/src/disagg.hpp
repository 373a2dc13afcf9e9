#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "events.hpp"
#include "series.hpp"

namespace hnilm {

// Named load with an ordered set of power states; state 0 is always OFF (0 W).
class ApplianceModel {
public:
    ApplianceModel(std::string name, std::vector<double> states);

    const std::string& name() const noexcept { return name_; }
    const std::vector<double>& states() const noexcept { return states_; }
    std::size_t num_states() const noexcept { return states_.size(); }

private:
    std::string name_;
    std::vector<double> states_;
};

struct TrainResult {
    ApplianceModel model;
    bool degenerate; // fewer distinct on-values than requested states
};

// Learns state levels from a sub-metered feed: state 0 fixed at 0 W, the rest
// are 1-D k-means centroids (k-means++ seeding, <0.1 W movement convergence)
// over samples above on_threshold.
TrainResult train_states(const PowerSeries& submetered, std::size_t num_states,
                         double on_threshold, std::uint64_t seed, const std::string& name);

inline constexpr std::uint64_t kCombinationCapDefault = 1000000;

struct DisaggResult {
    std::int64_t start_time = 0;
    std::int64_t period = 0;
    std::vector<std::string> names;
    std::vector<PowerSeries> predicted;          // one per appliance
    std::vector<std::vector<int>> state_indices; // -1 where the aggregate is missing
    std::vector<double> residual;                // signed watts; NaN where the aggregate is missing

    std::int64_t timestamp(std::size_t i) const noexcept {
        return start_time + static_cast<std::int64_t>(i) * period;
    }
};

// Per-timestamp combinatorial optimisation: picks the state tuple whose total
// is nearest the aggregate sample. Ties resolve to the lower total, then the
// lexicographically smaller tuple in model order.
DisaggResult co_disaggregate(const PowerSeries& aggregate, const std::vector<ApplianceModel>& models,
                             std::uint64_t combination_cap = kCombinationCapDefault);

struct Activation {
    Event on_event;
    Event off_event;
    double power; // mean of |rise| and |fall|
};

struct HartResult {
    std::vector<Activation> activations;
    std::vector<Event> unmatched;
};

// Edge matching: each falling event pairs with the earliest unmatched prior
// rising event of agreeing magnitude within the on-duration horizon.
HartResult hart_disaggregate(const PowerSeries& aggregate, double threshold,
                             double match_tolerance_fraction, std::int64_t max_on_duration);

// Partition by local day type; each part keeps the full grid with the other
// part's samples missing.
std::pair<PowerSeries, PowerSeries> temporal_split(const PowerSeries& series, std::int64_t utc_offset);

// First half for training, second half for testing.
std::pair<PowerSeries, PowerSeries> split_halves(const PowerSeries& series);

} // namespace hnilm
