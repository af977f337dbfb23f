#pragma once

#include <optional>
#include <string>
#include <vector>

#include "immpoly/rational.hpp"

namespace immpoly {

// One checked statement.  `skipped` marks hypothesis violations: the claim
// does not apply, so the record is informational and never a failure.
struct VerifyAssertion {
    std::string label;
    bool ok = false;
    bool skipped = false;
    std::string detail;  // failure witness or skip reason
};

struct SuiteReport {
    std::string suite;
    std::vector<VerifyAssertion> assertions;

    int passed() const;
    int failed() const;
    int skipped() const;
    bool ok() const { return failed() == 0; }
};

// max_n = 0 leaves each suite's default size ceiling in place.  beta/gamma
// replace the suite's default (beta, gamma) sweep with the single given
// pair; give both or neither.
struct SuiteOptions {
    int max_n = 0;
    std::optional<Rational> beta, gamma;
};

const std::vector<std::string>& suite_names();

// Runs one suite by name; throws std::invalid_argument for unknown names
// or inconsistent options.
SuiteReport run_suite(const std::string& name, const SuiteOptions& opt = {});

}  // namespace immpoly
