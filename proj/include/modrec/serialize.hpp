#pragma once

#include <string>

#include <json.hpp>

#include "modrec/recovery.hpp"
#include "modrec/signal_model.hpp"

namespace modrec {

void to_json(nlohmann::json& j, const SignalSpec& spec);
void from_json(const nlohmann::json& j, SignalSpec& spec);

void to_json(nlohmann::json& j, const SampleStream& stream);
void from_json(const nlohmann::json& j, SampleStream& stream);

void to_json(nlohmann::json& j, const RecoveryConfig& config);
void from_json(const nlohmann::json& j, RecoveryConfig& config);

void to_json(nlohmann::json& j, const TrialReport& report);
void from_json(const nlohmann::json& j, TrialReport& report);

/// Write j to path with a trailing newline, 2-space indent (deterministic:
/// keys are emitted sorted, doubles in shortest round-trip form).
void save_json(const nlohmann::json& j, const std::string& path);
nlohmann::json load_json(const std::string& path);

} // namespace modrec
