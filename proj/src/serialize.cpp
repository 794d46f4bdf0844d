#include "modrec/serialize.hpp"

#include <fstream>
#include <stdexcept>

namespace modrec {

using nlohmann::json;

void to_json(json& j, const SignalSpec& spec) {
    j = json{{"w0", spec.w0},          {"w", spec.w},
             {"amps", spec.amps},      {"centers", spec.centers},
             {"energy_e", spec.energy_e}, {"tail_t0", spec.tail_t0},
             {"tail_rho", spec.tail_rho}};
}

void from_json(const json& j, SignalSpec& spec) {
    j.at("w0").get_to(spec.w0);
    j.at("w").get_to(spec.w);
    j.at("amps").get_to(spec.amps);
    j.at("centers").get_to(spec.centers);
    j.at("energy_e").get_to(spec.energy_e);
    j.at("tail_t0").get_to(spec.tail_t0);
    j.at("tail_rho").get_to(spec.tail_rho);
}

void to_json(json& j, const SampleStream& stream) {
    j = json{{"start_index", stream.start_index},
             {"samples", stream.samples},
             {"ts", stream.ts}};
    // present iff the samples are modulo-reduced
    if (stream.folded_delta) j["folded_delta"] = *stream.folded_delta;
}

void from_json(const json& j, SampleStream& stream) {
    j.at("start_index").get_to(stream.start_index);
    j.at("samples").get_to(stream.samples);
    j.at("ts").get_to(stream.ts);
    stream.samples_lo.clear();
    if (j.contains("folded_delta") && !j.at("folded_delta").is_null())
        stream.folded_delta = j.at("folded_delta").get<double>();
    else
        stream.folded_delta.reset();
}

void to_json(json& j, const RecoveryConfig& config) {
    j = json{{"w", config.w},           {"energy_e", config.energy_e},
             {"tail_t0", config.tail_t0}, {"tail_rho", config.tail_rho},
             {"delta", config.delta},   {"ts", config.ts},
             {"margin", config.margin}};
}

void from_json(const json& j, RecoveryConfig& config) {
    j.at("w").get_to(config.w);
    j.at("energy_e").get_to(config.energy_e);
    j.at("tail_t0").get_to(config.tail_t0);
    j.at("tail_rho").get_to(config.tail_rho);
    j.at("delta").get_to(config.delta);
    j.at("ts").get_to(config.ts);
    j.at("margin").get_to(config.margin);
}

void to_json(json& j, const TrialReport& report) {
    j = json{{"config", report.config},
             {"kind", to_string(report.kind)},
             {"order", report.order},
             {"max_pred_error", report.max_pred_error},
             {"success", report.success},
             {"n_start", report.n_start},
             {"n_end", report.n_end},
             {"warnings", report.warnings}};
    j["error_bound"] = report.error_bound ? json(*report.error_bound) : json(nullptr);
    j["max_recovery_error"] =
        report.max_recovery_error ? json(*report.max_recovery_error) : json(nullptr);
}

void from_json(const json& j, TrialReport& report) {
    j.at("config").get_to(report.config);
    report.kind = filter_kind_from_string(j.at("kind").get<std::string>());
    j.at("order").get_to(report.order);
    j.at("max_pred_error").get_to(report.max_pred_error);
    j.at("success").get_to(report.success);
    j.at("n_start").get_to(report.n_start);
    j.at("n_end").get_to(report.n_end);
    j.at("warnings").get_to(report.warnings);
    if (!j.at("error_bound").is_null())
        report.error_bound = j.at("error_bound").get<double>();
    else
        report.error_bound.reset();
    if (!j.at("max_recovery_error").is_null())
        report.max_recovery_error = j.at("max_recovery_error").get<double>();
    else
        report.max_recovery_error.reset();
}

void save_json(const json& j, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << j.dump(2) << "\n";
    if (!out) throw std::runtime_error("write failed: " + path);
}

json load_json(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open: " + path);
    return json::parse(in);
}

} // namespace modrec
