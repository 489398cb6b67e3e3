#pragma once

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "burger/verification.hpp"

namespace burger {

inline constexpr const char* tool_name = "burger";
inline constexpr const char* tool_version = "0.1.0";

enum class ReportFormat { text, json };

// One run's structured output. Serialization is byte-stable for identical
// inputs: insertion-ordered keys, canonical rational formatting, no floats.
struct Report {
    std::string command;
    std::vector<std::pair<std::string, std::string>> config;  // flag echo, fixed order
    nlohmann::ordered_json payload = nlohmann::ordered_json::object();
    VerificationRecord ledger;

    void echo(const std::string& key, const std::string& value) { config.emplace_back(key, value); }

    std::string render(ReportFormat format) const;
    std::string to_text() const;
    std::string to_json() const;
};

}  // namespace burger
