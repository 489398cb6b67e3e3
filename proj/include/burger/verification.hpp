#pragma once

#include <sstream>
#include <string>
#include <vector>

namespace burger {

struct Assertion {
    std::string name;
    bool passed = false;
    std::string witness;  // empty unless the assertion failed
};

// Ordered list of named assertion outcomes. Serialized one line per
// assertion: name, status, witness if failed.
struct VerificationRecord {
    std::vector<Assertion> assertions;

    void check(const std::string& name, bool condition, const std::string& witness_on_fail = "") {
        assertions.push_back({name, condition, condition ? std::string() : witness_on_fail});
    }

    void merge(const VerificationRecord& other, const std::string& prefix = "") {
        for (const auto& a : other.assertions)
            assertions.push_back({prefix + a.name, a.passed, a.witness});
    }

    bool all_passed() const {
        for (const auto& a : assertions)
            if (!a.passed) return false;
        return true;
    }

    const Assertion* first_failure() const {
        for (const auto& a : assertions)
            if (!a.passed) return &a;
        return nullptr;
    }

    std::size_t failure_count() const {
        std::size_t n = 0;
        for (const auto& a : assertions)
            if (!a.passed) ++n;
        return n;
    }

    std::string to_text() const {
        std::ostringstream out;
        for (const auto& a : assertions) {
            out << (a.passed ? "[pass] " : "[FAIL] ") << a.name;
            if (!a.passed && !a.witness.empty()) out << ": " << a.witness;
            out << '\n';
        }
        return out.str();
    }
};

}  // namespace burger
