#pragma once

#include <cstdint>
#include <string>

#include "korb/divisors.hpp"

namespace korb {

struct SuiteResult {
    std::string suite;
    bool passed = true;
    long long checked = 0;
    std::vector<std::string> counterexamples;  // capped at 20
};

// randomized transvections on U^2 + <-2n-2>: form preserved, det +1,
// trivial disc action, orientation +1, pivot fixed
SuiteResult verify_transvections(int n, long long count, std::uint64_t seed);

// exhaustive over primitive positive-square vectors with coordinates in
// [-bound, bound]: equality of saturation invariants partitions exactly like
// equality of normal forms, and every vector gets a verified monodromy chain
// onto its normal-form representative (explicit composites on a sample)
SuiteResult verify_faithfulness(int n, int bound);

// coverage(n, d_max) must report no gaps
SuiteResult verify_coverage(int n, const Int& d_max);

// random integer matrices: Smith decomposition satisfies left*m*right = diag,
// unimodular transforms, nonnegative diagonal with divisibility chain
SuiteResult verify_snf(int dim, int entry_bound, long long count, std::uint64_t seed);

}  // namespace korb
