#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace clzeta {

/// One exact comparison; lhs and rhs are printed in full.
struct Check {
    std::string name;
    bool pass = false;
    std::string lhs;
    std::string rhs;
};

struct SuiteOptions {
    std::optional<long> q;
    std::optional<int> nmax;
    std::optional<int> b;
    int shards = 1;
    std::optional<std::uint64_t> budget;
};

struct SuiteReport {
    std::string suite;
    nlohmann::json params;
    std::vector<Check> checks;

    bool passed() const;
};

/// feit-fine, fat-line, nonred-node, zhat, u-collapse, euler, durfee, aut-end,
/// zt-dirichlet, surjectivity, framing, conj, perms, strategy.
const std::vector<std::string>& suite_names();

/// Throws InvalidArgumentError for an unknown suite.
SuiteReport run_suite(const std::string& name, const SuiteOptions& options = {});

nlohmann::json to_json(const Check& check);
nlohmann::json to_json(const SuiteReport& report);

} // namespace clzeta
