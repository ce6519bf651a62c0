#pragma once

#include <string>
#include <vector>

namespace gdet {

struct SuiteResult {
    std::string name;
    bool passed = true;
    unsigned long checks = 0;
    std::string detail;  // first failure, empty when passed
};

/// Small-scale run of the library's invariants: group axioms, Eisenstein
/// identities, family round-trips for m in [-3, 3], three-way determinant
/// agreement on 200 random elements, ring-homomorphism properties,
/// classify/achieve consistency and the congruence lemmas.
std::vector<SuiteResult> run_selftest();

}  // namespace gdet
