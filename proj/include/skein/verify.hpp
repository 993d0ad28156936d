#pragma once

// Exact checks of the structural identities, grouped by id, with a JSON
// report per run.

#include <random>
#include <string>
#include <vector>

#include <json.hpp>

#include "skein/hecke.hpp"

namespace skein {

/// Strand and degree ceilings accepted by run_verify.
inline constexpr int kVerifyMaxN = 6;
inline constexpr int kVerifyMaxDegree = 8;

struct VerifyCase {
    std::string name;
    bool passed;
    nlohmann::json info;  // null when there is nothing to add
};

struct VerifyReport {
    std::string theorem;
    nlohmann::json params;
    bool passed = true;
    std::vector<VerifyCase> details;
    long long elapsed_ms = 0;

    void add(std::string name, bool ok, nlohmann::json info = nullptr) {
        passed = passed && ok;
        details.push_back({std::move(name), ok, std::move(info)});
    }
    nlohmann::json to_json() const;
    std::string to_text() const;
};

/// Every id accepted by run_verify, "all" last.
const std::vector<std::string>& verify_ids();

/// Throws std::invalid_argument for an unknown id or out-of-range parameters.
VerifyReport run_verify(const std::string& id, int n, int degree);

/// A sparse element of H_n with small Laurent coefficients.
HeckeElt random_element(int n, std::mt19937_64& rng, int max_terms = 4);

}  // namespace skein
