#include "metrics.hpp"

#include <cmath>

#include "error.hpp"
#include "io.hpp"

#include <nlohmann/json.hpp>

namespace hnilm {

namespace {

FScore score_counts(const OnOffCounts& c) {
    FScore s;
    s.counts = c;
    s.precision = (c.tp + c.fp) ? static_cast<double>(c.tp) / static_cast<double>(c.tp + c.fp) : 0.0;
    s.recall = (c.tp + c.fn) ? static_cast<double>(c.tp) / static_cast<double>(c.tp + c.fn) : 0.0;
    s.f = (s.precision + s.recall > 0.0) ? 2.0 * s.precision * s.recall / (s.precision + s.recall) : 0.0;
    return s;
}

} // namespace

FScore f_score(const PowerSeries& truth, const PowerSeries& predicted, double on_threshold) {
    auto [t, p] = align(truth, predicted);
    OnOffCounts c;
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (t.is_missing(i) || p.is_missing(i)) continue;
        bool truth_on = t.value(i) > on_threshold;
        bool pred_on = p.value(i) > on_threshold;
        if (truth_on && pred_on)
            ++c.tp;
        else if (!truth_on && pred_on)
            ++c.fp;
        else if (truth_on && !pred_on)
            ++c.fn;
        else
            ++c.tn;
    }
    return score_counts(c);
}

double nep(const PowerSeries& truth, const PowerSeries& predicted) {
    auto [t, p] = align(truth, predicted);
    double abs_error = 0.0;
    double truth_total = 0.0;
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (t.is_missing(i) || p.is_missing(i)) continue;
        abs_error += std::abs(p.value(i) - t.value(i));
        truth_total += t.value(i);
    }
    if (truth_total <= 0.0) fail(errc::zero_energy, "truth series carries no energy");
    return abs_error / truth_total;
}

MetricReport evaluate(const std::map<std::string, PowerSeries>& truth_set, const DisaggResult& result,
                      double on_threshold, OnMode mode) {
    MetricReport report;
    for (std::size_t m = 0; m < result.names.size(); ++m) {
        const std::string& name = result.names[m];
        auto it = truth_set.find(name);
        if (it == truth_set.end()) fail(errc::missing_truth, "no truth series for '" + name + "'");
        const PowerSeries& truth = it->second;
        const PowerSeries& predicted = result.predicted[m];

        ApplianceScore score;
        score.name = name;
        score.nep = nep(truth, predicted);
        if (mode == OnMode::PowerThreshold) {
            score.f = f_score(truth, predicted, on_threshold);
        } else {
            auto [t, p] = align(truth, predicted);
            auto offset = static_cast<std::size_t>((t.start_time() - predicted.start_time()) / predicted.period());
            const std::vector<int>& states = result.state_indices[m];
            OnOffCounts c;
            for (std::size_t i = 0; i < t.size(); ++i) {
                if (t.is_missing(i) || p.is_missing(i)) continue;
                bool truth_on = t.value(i) > on_threshold;
                bool pred_on = states[offset + i] != 0;
                if (truth_on && pred_on)
                    ++c.tp;
                else if (!truth_on && pred_on)
                    ++c.fp;
                else if (truth_on && !pred_on)
                    ++c.fn;
                else
                    ++c.tn;
            }
            score.f = score_counts(c);
        }
        report.scores.push_back(std::move(score));
    }
    return report;
}

std::string report_to_csv(const MetricReport& report) {
    std::string out = "appliance,f_score,nep,tp,fp,fn,tn\n";
    for (const ApplianceScore& s : report.scores) {
        out += s.name;
        out += ',';
        out += format_watts(s.f.f);
        out += ',';
        out += format_watts(s.nep);
        out += ',';
        out += std::to_string(s.f.counts.tp);
        out += ',';
        out += std::to_string(s.f.counts.fp);
        out += ',';
        out += std::to_string(s.f.counts.fn);
        out += ',';
        out += std::to_string(s.f.counts.tn);
        out += '\n';
    }
    return out;
}

std::string report_to_json(const MetricReport& report) {
    nlohmann::json doc = nlohmann::json::array();
    for (const ApplianceScore& s : report.scores) {
        doc.push_back({{"appliance", s.name},
                       {"f_score", s.f.f},
                       {"precision", s.f.precision},
                       {"recall", s.f.recall},
                       {"nep", s.nep},
                       {"tp", s.f.counts.tp},
                       {"fp", s.f.counts.fp},
                       {"fn", s.f.counts.fn},
                       {"tn", s.f.counts.tn}});
    }
    return doc.dump(2) + "\n";
}

} // namespace hnilm
