#pragma once

#include <optional>
#include <string>

#include "hypercolor/code.hpp"

namespace hypercolor {

struct DistanceBudget {
    long max_steps = 400'000'000;  // enumeration steps before giving up
    int weight_cap = 8;            // information-weight cap of the limited search
    int max_exhaustive_dim = 28;   // kernel dimension limit for full enumeration
    int threads = 0;               // 0: HYPERCOLOR_THREADS, else 1
};

struct DistanceResult {
    std::optional<int> value;  // lightest logical found, if any
    bool exact = false;        // provably minimal
    std::string method;        // exhaustive | weight-limited | column-scan
    int lower_bound = 1;       // all lighter vectors are excluded
    long steps = 0;

    std::string status() const { return exact ? "exact" : "upper-bound"; }
};

/// Minimum weight over ker(H) \ rowspace(H). Exhaustive Gray-code kernel
/// enumeration when the kernel is small enough; otherwise increasing
/// information-weight enumeration with a matching lower bound. Budget
/// exhaustion downgrades the result to an upper bound, never silently.
DistanceResult exact_distance(const ColorCode& code, const DistanceBudget& budget = {});

struct EstimateComparison {
    int p = 0, g = 0;
    int estimate = 0;
    double ratio = 0.0;
    DistanceResult exact;
    bool agree = false;  // exact result available and equal to the estimate
};

EstimateComparison estimate_vs_exact(const ColorCode& code, int p, int g,
                                     const DistanceBudget& budget = {});

struct BoundFlags {
    bool singleton_ok = false;
    bool singleton_saturated = false;
    bool hamming_ok = false;
};

/// Quantum Singleton (n-k >= 2d-2) and quantum Hamming
/// (2^k * sum_{j<=t} 3^j C(n,j) <= 2^n, t = (d-1)/2), in exact arithmetic.
BoundFlags bounds_check(int n, int k, int d);

}  // namespace hypercolor
