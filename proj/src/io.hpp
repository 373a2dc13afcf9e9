#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "hierarchy.hpp"
#include "series.hpp"

namespace hnilm {

// COMBED-style series CSV: header "timestamp,power", integer epoch seconds,
// decimal watts. Missing samples are written as absent rows and recovered by
// regularizing onto the grid on load.
PowerSeries load_series_csv(const std::filesystem::path& path, std::int64_t period);
void save_series_csv(const PowerSeries& series, const std::filesystem::path& path);

std::vector<RawSample> load_raw_csv(const std::filesystem::path& path);

// Hierarchy metadata: one JSON document {nodes:[{id, level, parent, csv_path}]}.
// csv_path is relative to the JSON's directory; nodes without one carry no
// series (their feed, if needed, is computed from their children).
MeterHierarchy load_hierarchy(const std::filesystem::path& json_path, std::int64_t period);
void save_hierarchy(const MeterHierarchy& h, const std::filesystem::path& dir);

// Write-to-temp-then-rename so partial output never lands under the final name.
void atomic_write(const std::filesystem::path& path, const std::string& content);

std::string format_watts(double v);

} // namespace hnilm
