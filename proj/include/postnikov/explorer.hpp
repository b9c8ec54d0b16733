#pragma once

#include <string>
#include <vector>

#include "postnikov/laurent.hpp"
#include "postnikov/quiver.hpp"

namespace postnikov {

// A seed: an ice quiver with one Laurent polynomial per vertex, indexed by
// the quiver's (sorted) vertex order. Frozen variables are fixed for good;
// mutation replaces exactly one mutable variable by the exchange relation.
struct Seed {
    IceQuiver quiver;
    std::vector<LaurentPoly> vars;

    // Fresh variables x_0..x_{m-1}, one exponent slot per vertex.
    static Seed initial(const IceQuiver& q);
};

// Exchange at a mutable vertex: x_v' = (prod_{u->v} x_u + prod_{v->u} x_u)/x_v
// with arrow multiplicities as exponents. Throws InexactDivision when the
// division fails (which signals a bug or an invalid seed).
Seed mutate_seed(const Seed& s, const std::string& vertex);

struct ExploreCounts {
    long long variables = 0;
    long long seeds = 0;
    long long acyclic_seeds = 0;
};

// BFS over seed mutation with unlabeled-seed deduplication (unordered cluster
// plus quiver up to simultaneous relabeling). Throws LimitExceeded when more
// than seed_limit distinct seeds appear.
ExploreCounts enumerate_seeds(const Seed& start, long long seed_limit);

}  // namespace postnikov
