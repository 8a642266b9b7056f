#pragma once

#include "partition_lab/level_formula.hpp"

#include <nlohmann/json.hpp>

#include <cstdint>
#include <string>

namespace plab {

/// {"n": 21, "levels": {"1": "21", "2": "330", ...}, "total": "792"}.
/// Counts are decimal strings so no reader truncates them.
nlohmann::json to_json(const LevelBreakdown& breakdown);
LevelBreakdown breakdown_from_json(const nlohmann::json& j);

struct TimingRecord {
    std::string task;
    std::uint32_t n = 0;
    double millis = 0.0;

    friend bool operator==(const TimingRecord&, const TimingRecord&) = default;
};

nlohmann::json to_json(const TimingRecord& record);
TimingRecord timing_from_json(const nlohmann::json& j);

} // namespace plab
