#pragma once

// The seeded acceptance battery shared by `gkt suite` and the acceptance test binary.

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace gkt::suite {

struct CriterionResult {
    int number = 0;
    std::string id;
    bool passed = false;
    std::string summary;
    nlohmann::json details;
};

/// Identifiers in criterion order: cube_order, ks_embedding, dirac, triple, adjoint, ata, lax,
/// counterexample, polar, calculus, schatten, eigen_inequalities, poincare, yosida, determinism.
const std::vector<std::string>& criterion_ids();

/// Runs one criterion. Exceptions are caught and reported as failures.
CriterionResult run_criterion(const std::string& id, std::uint64_t seed);

struct SuiteOptions {
    std::uint64_t seed = 1;
    std::vector<std::string> only;  // empty: every criterion
};

struct SuiteReport {
    std::uint64_t seed = 1;
    std::vector<CriterionResult> results;

    bool passed() const;
    std::vector<std::string> failures() const;
};

/// Throws InvalidArgument for unknown identifiers. `determinism` reruns the other selected
/// criteria (all of them when it is selected alone) and compares the serialised results.
SuiteReport run_suite(const SuiteOptions& options);

nlohmann::json to_json(const CriterionResult& r);
nlohmann::json to_json(const SuiteReport& r);

}  // namespace gkt::suite
