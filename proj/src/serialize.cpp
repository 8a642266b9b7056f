#include "partition_lab/serialize.hpp"

namespace plab {

nlohmann::json to_json(const LevelBreakdown& breakdown)
{
    nlohmann::json levels = nlohmann::json::object();
    for (const auto& [k, value] : breakdown.per_level)
        levels[std::to_string(k)] = to_decimal(value);
    return {{"n", breakdown.n}, {"levels", levels}, {"total", to_decimal(breakdown.total)}};
}

LevelBreakdown breakdown_from_json(const nlohmann::json& j)
{
    LevelBreakdown out;
    out.n = j.at("n").get<std::uint32_t>();
    for (const auto& [key, value] : j.at("levels").items())
        out.per_level[static_cast<std::uint32_t>(std::stoul(key))] = parse_decimal(value.get<std::string>());
    out.total = parse_decimal(j.at("total").get<std::string>());
    out.by_convention = out.n == 0;
    return out;
}

nlohmann::json to_json(const TimingRecord& record)
{
    return {{"task", record.task}, {"n", record.n}, {"millis", record.millis}};
}

TimingRecord timing_from_json(const nlohmann::json& j)
{
    return {j.at("task").get<std::string>(), j.at("n").get<std::uint32_t>(), j.at("millis").get<double>()};
}

} // namespace plab
