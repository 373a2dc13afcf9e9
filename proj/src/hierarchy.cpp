#include "hierarchy.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "error.hpp"
#include "localtime.hpp"

namespace hnilm {

const char* level_name(MeterLevel level) {
    switch (level) {
    case MeterLevel::Transformer: return "transformer";
    case MeterLevel::Building: return "building";
    case MeterLevel::Floor: return "floor";
    case MeterLevel::Load: return "load";
    }
    return "load";
}

MeterLevel level_from_name(const std::string& name) {
    if (name == "transformer") return MeterLevel::Transformer;
    if (name == "building") return MeterLevel::Building;
    if (name == "floor") return MeterLevel::Floor;
    if (name == "load") return MeterLevel::Load;
    fail(errc::parse_error, "unknown meter level '" + name + "'");
}

MeterHierarchy::MeterHierarchy(std::vector<MeterNode> nodes, std::string root_id)
    : root_(std::move(root_id)) {
    for (MeterNode& n : nodes) {
        if (n.id.empty()) fail(errc::invalid_spec, "node id must not be empty");
        auto [it, inserted] = nodes_.emplace(n.id, std::move(n));
        if (!inserted) fail(errc::invalid_spec, "duplicate node id '" + it->first + "'");
    }
    if (!nodes_.count(root_)) fail(errc::invalid_spec, "root '" + root_ + "' is not a node");

    std::set<std::string> reached;
    std::vector<std::string> stack{root_};
    while (!stack.empty()) {
        std::string id = stack.back();
        stack.pop_back();
        if (!reached.insert(id).second)
            fail(errc::invalid_spec, "node '" + id + "' reached twice (cycle or shared child)");
        const MeterNode& n = nodes_.at(id);
        for (const std::string& child : n.children) {
            auto it = nodes_.find(child);
            if (it == nodes_.end())
                fail(errc::invalid_spec, "child '" + child + "' of '" + id + "' does not exist");
            if (static_cast<int>(it->second.level) < static_cast<int>(n.level))
                fail(errc::invalid_spec,
                     "level of '" + child + "' inverts the metering order under '" + id + "'");
            stack.push_back(child);
        }
    }
    if (reached.size() != nodes_.size())
        fail(errc::invalid_spec, "hierarchy has nodes unreachable from the root (multiple roots?)");
}

const MeterNode& MeterHierarchy::node(const std::string& id) const {
    auto it = nodes_.find(id);
    if (it == nodes_.end()) fail(errc::unknown_node, "no node '" + id + "'");
    return it->second;
}

std::vector<HierarchyViolation> validate_hierarchy(const MeterHierarchy& h, double tolerance_fraction) {
    std::vector<HierarchyViolation> violations;
    for (const auto& [id, node] : h.nodes()) {
        if (!node.series) continue;
        bool any_child_series = std::any_of(node.children.begin(), node.children.end(),
                                            [&](const std::string& c) { return h.node(c).series.has_value(); });
        if (!any_child_series) continue;

        AggregateResult agg = aggregate_children(h, id);
        const PowerSeries& parent = *node.series;
        // Nothing to compare when the grids are incompatible or disjoint.
        if (parent.period() != agg.series.period()) continue;
        if (floor_mod(agg.series.start_time() - parent.start_time(), parent.period()) != 0) continue;
        if (std::max(parent.start_time(), agg.series.start_time()) >=
            std::min(parent.end_time(), agg.series.end_time()))
            continue;
        auto [p, c] = align(parent, agg.series);
        for (std::size_t i = 0; i < p.size(); ++i) {
            if (p.is_missing(i) || c.is_missing(i)) continue;
            if (p.value(i) < (1.0 - tolerance_fraction) * c.value(i))
                violations.push_back({id, p.timestamp(i), p.value(i), c.value(i)});
        }
    }
    return violations;
}

AggregateResult aggregate_children(const MeterHierarchy& h, const std::string& node_id) {
    const MeterNode& node = h.node(node_id);
    std::vector<const PowerSeries*> feeds;
    for (const std::string& child : node.children) {
        const MeterNode& c = h.node(child);
        if (c.series) feeds.push_back(&*c.series);
    }
    if (feeds.empty()) fail(errc::no_data, "node '" + node_id + "' has no child series");

    std::int64_t period = feeds.front()->period();
    std::int64_t lo = feeds.front()->start_time();
    std::int64_t hi = feeds.front()->end_time();
    for (const PowerSeries* f : feeds) {
        if (f->period() != period)
            fail(errc::incompatible_period, "children of '" + node_id + "' have mixed periods");
        lo = std::max(lo, f->start_time());
        hi = std::min(hi, f->end_time());
    }
    if (lo >= hi) fail(errc::no_overlap, "children of '" + node_id + "' share no time range");

    auto n = static_cast<std::size_t>((hi - lo) / period);
    std::vector<double> sum(n, 0.0);
    std::size_t substituted = 0;
    for (const PowerSeries* f : feeds) {
        auto offset = static_cast<std::size_t>((lo - f->start_time()) / period);
        for (std::size_t i = 0; i < n; ++i) {
            double v = f->value(offset + i);
            if (std::isnan(v)) {
                ++substituted; // a dead child feed reads as zero at the parent
                continue;
            }
            sum[i] += v;
        }
    }
    return {PowerSeries(lo, period, std::move(sum)), substituted};
}

} // namespace hnilm
