#pragma once

#include <memory>
#include <set>
#include <string>
#include <vector>

#include "postnikov/quiver.hpp"

namespace postnikov {

// Witness tree for membership in the Louise class of quivers: leaves are
// edgeless, MutateStep records one mutation, CoverStep splits along an arrow
// s -> t not on any bi-infinite directed path into Q[s^-1], Q[t^-1],
// Q[s^-1, t^-1].
struct QuiverLouiseNode {
    enum class Kind { Edgeless, MutateStep, CoverStep };
    Kind kind;
    std::string vertex;  // MutateStep
    std::string s, t;    // CoverStep
    std::vector<std::unique_ptr<QuiverLouiseNode>> children;
};

struct QuiverLouiseCertificate {
    std::unique_ptr<QuiverLouiseNode> root;
};

struct BanffLimits {
    int depth = 64;        // nesting of cover steps
    int class_size = 512;  // quivers explored per mutation-class sweep
};

enum class BanffStatus { Found, NotFound, LimitExceeded };

struct BanffResult {
    BanffStatus status = BanffStatus::NotFound;
    QuiverLouiseCertificate certificate;  // set iff Found
    long long explored = 0;               // quivers dequeued at the top level
};

// Breadth-first search of the mutation class with canonical-form
// deduplication; at each quiver, cover arrows are tried before mutations.
// Deterministic: arrows sorted by (source id, target id), mutations by
// vertex id. NotFound means the class closed with no cover anywhere in it;
// LimitExceeded means a limit stopped the search first.
BanffResult banff_search(const IceQuiver& mutable_quiver, const BanffLimits& limits = {});

// Checks a certificate against the quiver it claims to cover.
bool check_quiver_certificate(const IceQuiver& q, const QuiverLouiseNode& node);

}  // namespace postnikov
