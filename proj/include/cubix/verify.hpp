#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "cubix/e6_weyl.hpp"
#include "cubix/finite_orthogonal.hpp"

namespace cubix {

struct Check {
    std::string name;
    bool passed;
    std::string detail; // expected/actual on failure, empty or a note on pass
};

struct SuiteResult {
    std::string suite;
    std::vector<Check> checks;
    std::map<std::string, std::int64_t> counts;

    bool ok() const;
};

// Expensive groups can be passed in (e.g. from the on-disk cache); each
// suite computes whatever it is not handed.
struct VerifyContext {
    const GroupEnumeration* orthogonal = nullptr;
    const WeylGroup* weyl = nullptr;
    int jobs = 1;
};

// Suites: lattice, finite, weyl, ball, milnor.  Deterministic; every check
// uses fixed seeds.  Throws ResourceCap only if a closure overruns.
const std::vector<std::string>& suite_names();
SuiteResult run_suite(const std::string& name, const VerifyContext& ctx = {});

} // namespace cubix
