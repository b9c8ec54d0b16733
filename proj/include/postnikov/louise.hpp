#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "postnikov/construct.hpp"
#include "postnikov/quiver.hpp"

namespace postnikov {

// One node of the certifying recursion. The window is the claim; the case
// tag records which reduction applies; the quiver snapshot is kept for
// diagnostics only and is never trusted by the verifier.
struct LouiseNode {
    std::vector<int> window;
    CaseStep::Kind kind;
    int i = 0;
    std::optional<LollipopColor> color;
    std::optional<ArcSide> side;
    int scenario = 0;     // BridgeCover only
    std::string x, y;     // BridgeCover face ids in the quiver of this node
    IceQuiver quiver;     // diagnostic snapshot
    std::vector<std::unique_ptr<LouiseNode>> children;
};

struct LouiseCertificate {
    std::unique_ptr<LouiseNode> root;
    int depth() const;
    int node_count() const;
};

// Runs the certifying recursion: every bounded affine permutation reduces to
// the one-point base cases through lollipop removals, short-arc moves, bridge
// covers, and conjugations. Total on valid input; internal assertion failures
// indicate bugs, not bad inputs.
LouiseCertificate certify(const BoundedAffinePermutation& w);

struct VerifyResult {
    bool ok = true;
    std::string node;       // path like "root.1.0" for the first failure
    std::string predicate;  // failing predicate name
    std::string detail;
    std::string to_string() const;
};

// Checks every node's claims against independently reconstructed quivers
// (via construct_diagram + to_ice_quiver on the node windows alone).
VerifyResult verify(const LouiseCertificate& cert);

}  // namespace postnikov
