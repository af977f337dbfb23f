#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace immpoly {

// Raised when a request exceeds a configured size cap; callers distinguish
// it from argument errors (the CLI maps it to its own exit code).
class tractability_error : public std::runtime_error {
public:
    explicit tractability_error(const std::string& what)
        : std::runtime_error(what)
    {
    }
};

// Size caps are configuration, not hard constants.  immanant_order bounds
// full immanant evaluation, poly_order bounds full coefficient vectors, and
// census_assignments bounds the total arrow assignments one orientation
// census may enumerate.
struct TractabilityCaps {
    int immanant_order = 9;
    int poly_order = 9;
    std::uint64_t census_assignments = 100'000'000;
};

TractabilityCaps& global_caps();

// 12 is a hard ceiling for the permutation kernels (cycle-type keys are
// packed into 64-bit products of small primes).
inline constexpr int kKernelOrderLimit = 12;

}  // namespace immpoly
