#pragma once

#include <string>
#include <utility>
#include <vector>

namespace beg {

/// One verified claim inside a report.
struct Check {
    std::string id;
    std::string statement;
    bool pass = false;
    std::string witness;
};

struct Report {
    std::string case_name;
    std::vector<Check> claims;

    void add(std::string id, std::string statement, bool pass, std::string witness = "") {
        claims.push_back({std::move(id), std::move(statement), pass, std::move(witness)});
    }

    bool all_pass() const {
        for (const auto& c : claims)
            if (!c.pass) return false;
        return true;
    }

    std::size_t failure_count() const {
        std::size_t n = 0;
        for (const auto& c : claims)
            if (!c.pass) ++n;
        return n;
    }

    void merge(const Report& other) {
        for (const auto& c : other.claims) claims.push_back(c);
    }
};

}  // namespace beg
