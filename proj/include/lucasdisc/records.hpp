#pragma once

#include <string>

#include <json.hpp>

namespace lucasdisc::records {

/// Machine-readable result envelope emitted by the CLI. Serialization
/// round-trips losslessly (numbers that may exceed 2^53 travel as strings).
struct output_record {
    std::string command;
    nlohmann::json inputs = nlohmann::json::object();
    nlohmann::json result;
    std::string method;
    double timing_ms = 0.0;
};

inline void to_json(nlohmann::json& j, const output_record& r) {
    j = nlohmann::json{{"command", r.command},
                       {"inputs", r.inputs},
                       {"result", r.result},
                       {"method", r.method},
                       {"timing_ms", r.timing_ms}};
}

inline void from_json(const nlohmann::json& j, output_record& r) {
    j.at("command").get_to(r.command);
    r.inputs = j.at("inputs");
    r.result = j.at("result");
    j.at("method").get_to(r.method);
    j.at("timing_ms").get_to(r.timing_ms);
}

} // namespace lucasdisc::records
