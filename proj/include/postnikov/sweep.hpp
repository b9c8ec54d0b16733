#pragma once

#include <vector>

#include "postnikov/louise.hpp"

namespace postnikov {

struct SweepRow {
    int k = 0, n = 0;
    long long count = 0, pass = 0, fail = 0;
    int max_depth = 0;
    std::vector<std::vector<int>> failures;  // windows that failed, sorted
};

// certify + verify over every bounded affine permutation of type (k,n).
// With parallel=true the per-permutation work runs under OpenMP; results are
// aggregated in window order either way, so output is identical.
SweepRow sweep_type(int k, int n, bool parallel = false);

}  // namespace postnikov
