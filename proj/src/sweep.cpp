#include "postnikov/sweep.hpp"

#include <algorithm>

namespace postnikov {

SweepRow sweep_type(int k, int n, bool parallel) {
    SweepRow row;
    row.k = k;
    row.n = n;
    const auto perms = enumerate_bounded_affine(k, n);
    row.count = static_cast<long long>(perms.size());
    std::vector<char> ok(perms.size(), 0);
    std::vector<int> depth(perms.size(), 0);

    // No exception may escape the parallel region.
    const auto body = [&](size_t idx) {
        try {
            const LouiseCertificate cert = certify(perms[idx]);
            ok[idx] = verify(cert).ok;
            depth[idx] = cert.depth();
        } catch (const std::exception&) {
            ok[idx] = 0;
        }
    };

#pragma omp parallel for schedule(dynamic) if (parallel)
    for (long long idx = 0; idx < static_cast<long long>(perms.size()); ++idx)
        body(static_cast<size_t>(idx));

    for (size_t idx = 0; idx < perms.size(); ++idx) {
        row.max_depth = std::max(row.max_depth, depth[idx]);
        if (ok[idx])
            ++row.pass;
        else {
            ++row.fail;
            row.failures.push_back(perms[idx].window());
        }
    }
    return row;
}

}  // namespace postnikov
