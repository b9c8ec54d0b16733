#pragma once

#include <optional>
#include <string>
#include <vector>

#include "postnikov/affine_perm.hpp"
#include "postnikov/plabic.hpp"

namespace postnikov {

enum class ArcSide { Left, Right };  // which short-arc flavor applies

// The case analysis driving the diagram constructor and the certificate
// generator. Cases are tried in a fixed order: any lollipop first, then any
// short arc, then the shortest-throw bridge cases; ties break on the smallest
// index. This ordering guarantees that in the bridge cases every throw lies
// in [2, n-2], which is exactly what the surgery hypotheses need.
struct CaseStep {
    enum class Kind { Base, Lollipop, ShortArc, BridgeCover, Conjugate };
    Kind kind;
    int i = 0;
    std::optional<LollipopColor> color;  // Lollipop
    std::optional<ArcSide> side;         // ShortArc
    // Window the diagram recursion builds first (empty for Base).
    std::vector<int> build_child;
    // Windows the certificate recursion descends into.
    std::vector<std::vector<int>> cert_children;
};

CaseStep classify(const BoundedAffinePermutation& w);

// Extra data produced when the bridge-cover surgery runs: the two designated
// faces of the covering quiver and which of the two scenarios occurred
// (1: y is an interior face, 2: y is a boundary face).
struct CoverFaces {
    std::string x, y;
    int scenario = 0;
};

// Builds a plabic graph whose trip permutation is exactly w, by structural
// recursion on (n, k(n-k) - length). The result is in normal form. When
// cover_out is non-null and the top-level case is BridgeCover, the designated
// faces are reported.
PlabicGraph construct_diagram(const BoundedAffinePermutation& w, CoverFaces* cover_out = nullptr);

// The three bridge extensions of a diagram G for s_i v s_i: one-crossing
// variants with trip permutations s_i v and v s_i, and the two-crossing
// variant for v itself. Requires the cover hypotheses: none of v^-1(i),
// v^-1(i+1), v(i), v(i+1) congruent to i or i+1, with v^-1(i) < v^-1(i+1)
// and v(i) < v(i+1); the corresponding nested strands of G must not cross.
// Throws HypothesisViolated otherwise. Results are normalized; for variant V
// the cover faces can be reported.
enum class BridgeVariant { SiV, VSi, V };
PlabicGraph add_bridge_surgeries(const PlabicGraph& g, int i, BridgeVariant variant,
                                 CoverFaces* cover_out = nullptr);

}  // namespace postnikov
