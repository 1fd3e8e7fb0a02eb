#pragma once

#include "sched/adversary.hpp"
#include "sched/dualfit.hpp"
#include "sched/outcome.hpp"
#include "sched/trace.hpp"

#include <json.hpp>

#include <string>

namespace sched {

/// Interchange document: an instance plus the server count it targets.
struct InstanceDoc {
  int servers = 1;
  Instance instance;
};

// Rationals travel as strings ("p/q" or decimal), parsed exactly.

nlohmann::json instance_to_json(const InstanceDoc& doc);
InstanceDoc instance_from_json(const nlohmann::json& j);

nlohmann::json trace_to_json(const InstanceDoc& doc, const ScheduleTrace& trace);
ScheduleTrace trace_from_json(const nlohmann::json& j);

nlohmann::json outcomes_to_json(const OutcomeSet& outcomes);

nlohmann::json dual_to_json(const DualSolution& dual);
DualSolution dual_from_json(const nlohmann::json& j);

nlohmann::json transcript_to_json(const AdversaryTranscript& transcript);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace sched
