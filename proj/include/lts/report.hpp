#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace lts {

/// One failed identity together with the basis tuple that witnesses it.
/// Witness indices are 0-based; serializers shift them to 1-based.
struct Violation {
    std::string rule;
    std::vector<std::size_t> witness;
    std::string detail;

    bool operator==(const Violation&) const = default;
};

/// Outcome of a verification pass. Empty means every identity held.
/// Violations are stored in the order they were found, which for every
/// checker in this library is lexicographic in the witness tuple.
struct Report {
    std::vector<Violation> violations;

    [[nodiscard]] bool ok() const { return violations.empty(); }
    [[nodiscard]] std::size_t count() const { return violations.size(); }

    void add(std::string rule, std::vector<std::size_t> witness, std::string detail = {}) {
        violations.push_back({std::move(rule), std::move(witness), std::move(detail)});
    }

    void append(const Report& other) {
        violations.insert(violations.end(), other.violations.begin(), other.violations.end());
    }

    [[nodiscard]] std::size_t count_rule(const std::string& rule) const {
        std::size_t n = 0;
        for (const auto& v : violations) {
            if (v.rule == rule) ++n;
        }
        return n;
    }
};

}  // namespace lts
