#pragma once

#include "json.hpp"

#include "crossfree/certification.hpp"
#include "crossfree/extremal.hpp"
#include "crossfree/pipeline.hpp"

// JSON views of every report. Each object carries a "schema" version field;
// fields named "elapsed_ms" or "ms" are the only timing-dependent content.
namespace crossfree::json {

using Json = nlohmann::ordered_json;

Json to_json(const CertReport& report);
Json to_json(const pipeline::Check& check);
Json to_json(const pipeline::BoundsReport& report);
Json to_json(const pipeline::Schedule& plan);
Json to_json(const pipeline::ScheduleRun& run);
Json to_json(const pipeline::LomonosovReport& report);
Json to_json(const extremal::ExtremalResult& result, const extremal::SearchSpace& space);
Json to_json(const extremal::SweepTable& table);

// Copy of `value` with every "elapsed_ms" / "ms" member removed, recursively.
Json without_timing(Json value);

}  // namespace crossfree::json
