#pragma once

// File formats: instance JSON, trace JSON, report CSV/JSON.

#include <filesystem>
#include <string>

#include <json.hpp>

#include "oscm/algorithms.hpp"
#include "oscm/harness.hpp"
#include "oscm/model.hpp"

namespace oscm::io {

using nlohmann::json;

/// {"n": 9, "k": 2, "regularity": "general"|"two_regular", "requests": [[3,4],[1,2],...]}
/// Rejects anything that fails validate_instance (Parse error).
Instance instance_from_json(const json& j);
json instance_to_json(const Instance& inst);

Instance load_instance(const std::filesystem::path& path);
void save_instance(const Instance& inst, const std::filesystem::path& path);

json trace_to_json(const Trace& trace);
Trace trace_from_json(const json& j);
Trace load_trace(const std::filesystem::path& path);

json findings_to_json(const std::vector<AuditFinding>& findings);
json report_to_json(const RatioReport& report);
json sweep_to_json(const SweepSummary& summary, bool include_reports);

/// seed,n,alg,source,alg_crossings,opt_crossings,ratio,violations
std::string csv_header();
std::string csv_row(const RatioReport& report);
std::string sweep_csv(const SweepSummary& summary);

/// Ratio as text: fixed six decimals, "inf" when infinite.
std::string format_ratio(const std::optional<double>& ratio);

void write_text(const std::filesystem::path& path, const std::string& text);
std::string read_text(const std::filesystem::path& path);

} // namespace oscm::io
