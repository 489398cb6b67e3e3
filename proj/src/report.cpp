#include "burger/report.hpp"

#include <sstream>

#include "burger/weighted_space.hpp"

namespace burger {

namespace {

void render_value(std::ostringstream& out, const nlohmann::ordered_json& value,
                  const std::string& indent) {
    using json = nlohmann::ordered_json;
    switch (value.type()) {
        case json::value_t::object:
            for (const auto& [key, child] : value.items()) {
                out << indent << key << ":";
                if (child.is_object() || child.is_array()) {
                    out << "\n";
                    render_value(out, child, indent + "  ");
                } else {
                    out << " " << (child.is_string() ? child.get<std::string>() : child.dump())
                        << "\n";
                }
            }
            break;
        case json::value_t::array:
            for (const auto& child : value) {
                if (child.is_object() || child.is_array()) {
                    out << indent << "-\n";
                    render_value(out, child, indent + "  ");
                } else {
                    out << indent << "- "
                        << (child.is_string() ? child.get<std::string>() : child.dump()) << "\n";
                }
            }
            break;
        default:
            out << indent << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
    }
}

}  // namespace

std::string Report::to_text() const {
    std::ostringstream out;
    out << tool_name << " " << tool_version << "\n";
    out << "command: " << command << "\n";
    out << "well-forming convention: " << well_forming_convention() << "\n";
    if (!config.empty()) {
        out << "config:\n";
        for (const auto& [key, value] : config) out << "  " << key << ": " << value << "\n";
    }
    if (!payload.empty()) {
        out << "result:\n";
        render_value(out, payload, "  ");
    }
    if (!ledger.assertions.empty()) {
        out << "ledger:\n";
        for (const auto& a : ledger.assertions) {
            out << "  " << (a.passed ? "[pass] " : "[FAIL] ") << a.name;
            if (!a.passed && !a.witness.empty()) out << ": " << a.witness;
            out << "\n";
        }
    }
    const std::size_t failures = ledger.failure_count();
    out << "status: "
        << (failures == 0 ? "ok" : "FAILED (" + std::to_string(failures) + " assertions)")
        << "\n";
    return out.str();
}

std::string Report::to_json() const {
    nlohmann::ordered_json doc;
    doc["tool"] = tool_name;
    doc["version"] = tool_version;
    doc["command"] = command;
    doc["well_forming_convention"] = well_forming_convention();
    nlohmann::ordered_json cfg = nlohmann::ordered_json::object();
    for (const auto& [key, value] : config) cfg[key] = value;
    doc["config"] = std::move(cfg);
    doc["result"] = payload;
    nlohmann::ordered_json entries = nlohmann::ordered_json::array();
    for (const auto& a : ledger.assertions) {
        nlohmann::ordered_json entry;
        entry["name"] = a.name;
        entry["status"] = a.passed ? "pass" : "fail";
        if (!a.passed && !a.witness.empty()) entry["witness"] = a.witness;
        entries.push_back(std::move(entry));
    }
    doc["ledger"] = std::move(entries);
    doc["status"] = ledger.all_passed() ? "ok" : "failed";
    return doc.dump(2) + "\n";
}

std::string Report::render(ReportFormat format) const {
    return format == ReportFormat::json ? to_json() : to_text();
}

}  // namespace burger
