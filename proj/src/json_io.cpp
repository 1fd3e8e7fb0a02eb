#include "sched/json_io.hpp"

#include <fstream>
#include <sstream>

namespace sched {

namespace {

using nlohmann::json;

std::string rat(const Rational& q) { return to_string(q); }

Rational unrat(const json& j, const char* what) {
  if (j.is_number_integer()) return Rational(static_cast<long>(j.get<long long>()));
  if (!j.is_string())
    throw std::invalid_argument(std::string("expected a rational string for ") + what);
  return parse_rational(j.get<std::string>());
}

}  // namespace

nlohmann::json instance_to_json(const InstanceDoc& doc) {
  json jobs = json::array();
  for (const JobType& j : doc.instance.jobs())
    jobs.push_back({{"id", j.id},
                    {"v", rat(j.value)},
                    {"D", rat(j.demand)},
                    {"a", rat(j.arrival)},
                    {"d", rat(j.deadline)}});
  return json{{"servers", doc.servers}, {"jobs", jobs}};
}

InstanceDoc instance_from_json(const nlohmann::json& j) {
  InstanceDoc doc;
  doc.servers = j.value("servers", 1);
  if (doc.servers < 1) throw std::invalid_argument("servers must be at least 1");
  std::vector<JobType> jobs;
  for (const json& item : j.at("jobs")) {
    JobType job;
    job.id = item.at("id").get<std::string>();
    job.value = unrat(item.at("v"), "v");
    job.demand = unrat(item.at("D"), "D");
    job.arrival = unrat(item.at("a"), "a");
    job.deadline = unrat(item.at("d"), "d");
    jobs.push_back(std::move(job));
  }
  doc.instance = Instance(std::move(jobs));
  return doc;
}

nlohmann::json trace_to_json(const InstanceDoc& doc, const ScheduleTrace& trace) {
  json out = instance_to_json(doc);
  json segments = json::array();
  for (int s = 0; s < trace.servers; ++s)
    for (const Segment& seg : trace.per_server[static_cast<std::size_t>(s)])
      segments.push_back(
          {{"server", s}, {"job", seg.job}, {"start", rat(seg.start)}, {"end", rat(seg.end)}});
  out["segments"] = segments;
  return out;
}

ScheduleTrace trace_from_json(const nlohmann::json& j) {
  int servers = j.value("servers", 1);
  ScheduleTrace trace(servers);
  for (const json& item : j.at("segments")) {
    int server = item.at("server").get<int>();
    if (server < 0 || server >= servers)
      throw std::invalid_argument("segment server index out of range");
    trace.per_server[static_cast<std::size_t>(server)].push_back(
        Segment{unrat(item.at("start"), "start"), unrat(item.at("end"), "end"),
                item.at("job").get<std::string>()});
  }
  return trace;
}

nlohmann::json outcomes_to_json(const OutcomeSet& outcomes) {
  json jobs = json::object();
  for (const auto& [id, o] : outcomes) {
    json entry;
    switch (o.decision) {
      case DecisionKind::Committed: entry["decision"] = "committed"; break;
      case DecisionKind::Rejected: entry["decision"] = "rejected"; break;
      case DecisionKind::Uncommitted: entry["decision"] = "uncommitted"; break;
    }
    entry["decision_time"] = o.decision_time ? json(rat(*o.decision_time)) : json(nullptr);
    entry["completed"] = o.completed;
    entry["notification_time"] =
        o.notification_time ? json(rat(*o.notification_time)) : json(nullptr);
    entry["processed"] = rat(o.processed);
    entry["payment"] = o.payment ? json(rat(*o.payment)) : json(nullptr);
    jobs[id] = entry;
  }
  return json{{"jobs", jobs}};
}

nlohmann::json dual_to_json(const DualSolution& dual) {
  json alpha = json::object();
  for (const auto& [id, a] : dual.alpha) alpha[id] = rat(a);
  json beta = json::array();
  for (const StepFunction& fn : dual.beta) {
    json steps = json::array();
    for (const auto& [t, v] : fn.points()) steps.push_back(json::array({rat(t), rat(v)}));
    beta.push_back(steps);
  }
  return json{{"alpha", alpha}, {"beta", beta}};
}

DualSolution dual_from_json(const nlohmann::json& j) {
  DualSolution dual;
  if (j.contains("alpha"))
    for (auto it = j.at("alpha").begin(); it != j.at("alpha").end(); ++it)
      dual.alpha[it.key()] = unrat(it.value(), "alpha");
  if (j.contains("beta"))
    for (const json& steps : j.at("beta")) {
      std::vector<std::pair<Time, Rational>> points;
      for (const json& step : steps)
        points.emplace_back(unrat(step.at(0), "beta time"), unrat(step.at(1), "beta value"));
      dual.beta.emplace_back(std::move(points));
    }
  return dual;
}

nlohmann::json transcript_to_json(const AdversaryTranscript& transcript) {
  json rounds = json::array();
  for (const AdversaryRound& r : transcript.rounds)
    rounds.push_back({{"job",
                       {{"id", r.job.id},
                        {"v", rat(r.job.value)},
                        {"D", rat(r.job.demand)},
                        {"a", rat(r.job.arrival)},
                        {"d", rat(r.job.deadline)}}},
                      {"admitted", r.admitted},
                      {"decision_time", rat(r.decision_time)},
                      {"wait_correction", rat(r.wait_correction)}});
  const char* outcome = "round-cap-reached";
  switch (transcript.outcome) {
    case AdversaryTranscript::Outcome::Overcommitted: outcome = "overcommitted"; break;
    case AdversaryTranscript::Outcome::RatioWitness: outcome = "ratio-witness"; break;
    case AdversaryTranscript::Outcome::RoundCapReached: outcome = "round-cap-reached"; break;
    case AdversaryTranscript::Outcome::NotApplicable: outcome = "not-applicable"; break;
  }
  return json{{"outcome", outcome}, {"rounds", rounds}};
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << content;
}

}  // namespace sched
