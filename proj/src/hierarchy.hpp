#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "series.hpp"

namespace hnilm {

enum class MeterLevel { Transformer = 0, Building = 1, Floor = 2, Load = 3 };

const char* level_name(MeterLevel level);
MeterLevel level_from_name(const std::string& name);

struct MeterNode {
    std::string id;
    MeterLevel level = MeterLevel::Load;
    std::optional<PowerSeries> series;
    std::vector<std::string> children;
};

// Rooted meter tree; construction enforces the structural invariants
// (unique ids, single root, acyclic, level order never inverted).
class MeterHierarchy {
public:
    MeterHierarchy(std::vector<MeterNode> nodes, std::string root_id);

    const std::string& root() const noexcept { return root_; }
    const std::map<std::string, MeterNode>& nodes() const noexcept { return nodes_; }

    bool contains(const std::string& id) const { return nodes_.count(id) != 0; }
    const MeterNode& node(const std::string& id) const;

private:
    std::map<std::string, MeterNode> nodes_;
    std::string root_;
};

struct HierarchyViolation {
    std::string node_id;
    std::int64_t timestamp;
    double parent_watts;
    double children_watts;
};

// Flags timestamps where a parent reads less than (1 - tolerance) times the
// sum of its metered children.
std::vector<HierarchyViolation> validate_hierarchy(const MeterHierarchy& h, double tolerance_fraction);

struct AggregateResult {
    PowerSeries series;
    std::size_t missing_substitutions; // child samples summed as 0
};

// Pointwise sum of the node's child series over their common time range.
AggregateResult aggregate_children(const MeterHierarchy& h, const std::string& node_id);

} // namespace hnilm
