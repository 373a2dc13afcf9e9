#include "disagg.hpp"

#include <algorithm>
#include <cmath>
#include <deque>

#include "error.hpp"
#include "localtime.hpp"
#include "rng.hpp"

namespace hnilm {

ApplianceModel::ApplianceModel(std::string name, std::vector<double> states)
    : name_(std::move(name)), states_(std::move(states)) {
    if (states_.size() < 2) fail(errc::invalid_spec, "a model needs at least OFF and one ON state");
    if (states_.front() != 0.0) fail(errc::invalid_spec, "state 0 must be OFF (0 W)");
    for (std::size_t i = 1; i < states_.size(); ++i) {
        if (!std::isfinite(states_[i]) || states_[i] <= states_[i - 1])
            fail(errc::invalid_spec, "states must be finite and strictly increasing");
    }
}

namespace {

// Plain Lloyd iterations over scalars, k-means++ seeded.
std::vector<double> kmeans_1d(const std::vector<double>& points, std::size_t k, Rng& rng) {
    std::vector<double> centroids;
    centroids.reserve(k);
    centroids.push_back(points[rng.index(points.size())]);
    std::vector<double> d2(points.size());
    while (centroids.size() < k) {
        double total = 0.0;
        for (std::size_t i = 0; i < points.size(); ++i) {
            double best = std::abs(points[i] - centroids[0]);
            for (std::size_t c = 1; c < centroids.size(); ++c)
                best = std::min(best, std::abs(points[i] - centroids[c]));
            d2[i] = best * best;
            total += d2[i];
        }
        if (total <= 0.0) {
            // All points coincide with a centroid; reuse the first point.
            centroids.push_back(points[0]);
            continue;
        }
        double target = rng.uniform01() * total;
        double acc = 0.0;
        std::size_t chosen = points.size() - 1;
        for (std::size_t i = 0; i < points.size(); ++i) {
            acc += d2[i];
            if (acc >= target) {
                chosen = i;
                break;
            }
        }
        centroids.push_back(points[chosen]);
    }

    std::vector<double> sums(k);
    std::vector<std::size_t> counts(k);
    for (int iter = 0; iter < 100; ++iter) {
        std::fill(sums.begin(), sums.end(), 0.0);
        std::fill(counts.begin(), counts.end(), 0);
        for (double p : points) {
            std::size_t best = 0;
            double best_d = std::abs(p - centroids[0]);
            for (std::size_t c = 1; c < k; ++c) {
                double d = std::abs(p - centroids[c]);
                if (d < best_d) {
                    best_d = d;
                    best = c;
                }
            }
            sums[best] += p;
            counts[best] += 1;
        }
        double movement = 0.0;
        for (std::size_t c = 0; c < k; ++c) {
            if (!counts[c]) continue; // empty cluster keeps its centroid
            double next = sums[c] / static_cast<double>(counts[c]);
            movement = std::max(movement, std::abs(next - centroids[c]));
            centroids[c] = next;
        }
        if (movement < 0.1) break;
    }
    std::sort(centroids.begin(), centroids.end());
    return centroids;
}

} // namespace

TrainResult train_states(const PowerSeries& submetered, std::size_t num_states,
                         double on_threshold, std::uint64_t seed, const std::string& name) {
    if (num_states < 2) fail(errc::invalid_spec, "num_states must be >= 2");
    if (submetered.empty()) fail(errc::empty_input, "empty training series");

    std::vector<double> on_values;
    for (std::size_t i = 0; i < submetered.size(); ++i) {
        if (submetered.is_missing(i)) continue;
        if (submetered.value(i) > on_threshold) on_values.push_back(submetered.value(i));
    }
    if (on_values.empty()) fail(errc::no_on_state, "no sample above the on threshold");

    std::vector<double> distinct = on_values;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());

    std::size_t k = num_states - 1;
    std::vector<double> levels;
    bool degenerate = false;
    if (distinct.size() <= k) {
        levels = distinct;
        degenerate = distinct.size() < k;
    } else {
        Rng rng(mix_seed(seed, name));
        levels = kmeans_1d(on_values, k, rng);
        // Coinciding centroids collapse into one state.
        levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
        degenerate = levels.size() < k;
    }

    std::vector<double> states{0.0};
    states.insert(states.end(), levels.begin(), levels.end());
    return {ApplianceModel(name, std::move(states)), degenerate};
}

namespace {

struct Candidate {
    double total;
    std::vector<int> tuple;
};

// Enumerates state tuples in lexicographic model order, keeping only the
// first (lex-smallest) tuple per distinct total.
std::vector<Candidate> enumerate_candidates(const std::vector<ApplianceModel>& models) {
    std::vector<Candidate> candidates;
    std::vector<int> tuple(models.size(), 0);
    for (;;) {
        double total = 0.0;
        for (std::size_t m = 0; m < models.size(); ++m)
            total += models[m].states()[static_cast<std::size_t>(tuple[m])];
        candidates.push_back({total, tuple});

        std::size_t m = models.size();
        while (m > 0) {
            --m;
            if (tuple[m] + 1 < static_cast<int>(models[m].num_states())) {
                ++tuple[m];
                std::fill(tuple.begin() + static_cast<std::ptrdiff_t>(m) + 1, tuple.end(), 0);
                break;
            }
            if (m == 0) {
                std::stable_sort(candidates.begin(), candidates.end(),
                                 [](const Candidate& a, const Candidate& b) { return a.total < b.total; });
                candidates.erase(std::unique(candidates.begin(), candidates.end(),
                                             [](const Candidate& a, const Candidate& b) {
                                                 return a.total == b.total;
                                             }),
                                 candidates.end());
                return candidates;
            }
        }
    }
}

} // namespace

DisaggResult co_disaggregate(const PowerSeries& aggregate, const std::vector<ApplianceModel>& models,
                             std::uint64_t combination_cap) {
    if (models.empty()) fail(errc::empty_input, "no appliance models");

    std::uint64_t combos = 1;
    for (const ApplianceModel& m : models) {
        combos *= m.num_states();
        if (combos > combination_cap)
            fail(errc::too_many_combinations,
                 "state combinations exceed the cap of " + std::to_string(combination_cap));
    }

    std::vector<Candidate> candidates = enumerate_candidates(models);

    std::size_t n = aggregate.size();
    std::vector<std::vector<double>> predicted(models.size(), std::vector<double>(n, PowerSeries::kMissing));
    std::vector<std::vector<int>> state_indices(models.size(), std::vector<int>(n, -1));
    std::vector<double> residual(n, PowerSeries::kMissing);

    for (std::size_t t = 0; t < n; ++t) {
        if (aggregate.is_missing(t)) continue;
        double target = aggregate.value(t);

        auto it = std::lower_bound(candidates.begin(), candidates.end(), target,
                                   [](const Candidate& c, double v) { return c.total < v; });
        // Nearest total wins; on an exact distance tie the lower total wins.
        const Candidate* best;
        if (it == candidates.end()) {
            best = &candidates.back();
        } else if (it == candidates.begin()) {
            best = &*it;
        } else {
            const Candidate& lower = *(it - 1);
            const Candidate& upper = *it;
            best = (std::abs(target - lower.total) <= std::abs(target - upper.total)) ? &lower : &upper;
        }

        double total = 0.0;
        for (std::size_t m = 0; m < models.size(); ++m) {
            int s = best->tuple[m];
            double watts = models[m].states()[static_cast<std::size_t>(s)];
            predicted[m][t] = watts;
            state_indices[m][t] = s;
            total += watts;
        }
        residual[t] = target - total;
    }

    DisaggResult result;
    result.start_time = aggregate.start_time();
    result.period = aggregate.period();
    result.state_indices = std::move(state_indices);
    result.residual = std::move(residual);
    for (std::size_t m = 0; m < models.size(); ++m) {
        result.names.push_back(models[m].name());
        result.predicted.emplace_back(aggregate.start_time(), aggregate.period(), std::move(predicted[m]));
    }
    return result;
}

HartResult hart_disaggregate(const PowerSeries& aggregate, double threshold,
                             double match_tolerance_fraction, std::int64_t max_on_duration) {
    if (match_tolerance_fraction <= 0.0 || match_tolerance_fraction >= 1.0)
        fail(errc::invalid_spec, "match tolerance must be in (0, 1)");

    std::vector<Event> events = detect_events(aggregate, threshold);

    HartResult result;
    std::deque<Event> open_rises;
    for (const Event& e : events) {
        if (e.delta > 0.0) {
            open_rises.push_back(e);
            continue;
        }
        double fall = -e.delta;
        bool matched = false;
        for (auto it = open_rises.begin(); it != open_rises.end(); ++it) {
            if (e.timestamp - it->timestamp > max_on_duration) continue;
            double rise = it->delta;
            if (std::abs(rise - fall) <= match_tolerance_fraction * std::max(rise, fall)) {
                result.activations.push_back({*it, e, (rise + fall) / 2.0});
                open_rises.erase(it);
                matched = true;
                break;
            }
        }
        if (!matched) result.unmatched.push_back(e);
    }
    for (const Event& e : open_rises) result.unmatched.push_back(e);
    std::sort(result.unmatched.begin(), result.unmatched.end(),
              [](const Event& a, const Event& b) { return a.index < b.index; });
    return result;
}

std::pair<PowerSeries, PowerSeries> temporal_split(const PowerSeries& series, std::int64_t utc_offset) {
    std::vector<double> weekday(series.size(), PowerSeries::kMissing);
    std::vector<double> weekend(series.size(), PowerSeries::kMissing);
    for (std::size_t i = 0; i < series.size(); ++i) {
        if (series.is_missing(i)) continue;
        if (is_weekend(local_day(series.timestamp(i), utc_offset)))
            weekend[i] = series.value(i);
        else
            weekday[i] = series.value(i);
    }
    return {PowerSeries(series.start_time(), series.period(), std::move(weekday)),
            PowerSeries(series.start_time(), series.period(), std::move(weekend))};
}

std::pair<PowerSeries, PowerSeries> split_halves(const PowerSeries& series) {
    if (series.size() < 2) fail(errc::too_short, "cannot halve fewer than 2 samples");
    std::size_t half = series.size() / 2;
    std::vector<double> first(series.values().begin(), series.values().begin() + static_cast<std::ptrdiff_t>(half));
    std::vector<double> second(series.values().begin() + static_cast<std::ptrdiff_t>(half), series.values().end());
    return {PowerSeries(series.start_time(), series.period(), std::move(first)),
            PowerSeries(series.timestamp(half), series.period(), std::move(second))};
}

} // namespace hnilm
