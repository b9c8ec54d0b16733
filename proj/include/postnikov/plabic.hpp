#pragma once

#include <array>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "postnikov/affine_perm.hpp"
#include "postnikov/quiver.hpp"

namespace postnikov {

// A plabic graph in the disc, the combinatorial stand-in for a Postnikov
// diagram. Boundary vertices b_1..b_n sit on the disc boundary in clockwise
// order, each of degree exactly 1 (its leg). Internal vertices are colored
// black or white and carry a rotation: the clockwise cyclic order of their
// incident darts.
//
// Darts: every edge e owns darts 2e and 2e+1; mate(d) = d^1. A dart belongs
// to the rotation of exactly one vertex and is traversed away from it.
//
// Trips follow the rules of the road: arriving at a white vertex, leave by
// the next dart counterclockwise from the arrival; at a black vertex, by the
// next clockwise. The trip entering the graph at b_i ends at b_{w(i)}, and the
// boundary map lifts to a bounded affine permutation. Faces are computed by
// rotation-system tracing after closing the boundary with arcs b_j -> b_{j+1};
// each traced face lies to the right of its darts.
//
// All operations return new values; a PlabicGraph is never mutated in place.
class PlabicGraph {
public:
    enum class Color { Black, White };

    struct Vertex {
        Color color;
        bool alive = true;            // dead slots keep ids stable across surgery
        std::vector<int> rot;         // darts in clockwise order
    };

    // --- construction -----------------------------------------------------

    // A graph with n boundary vertices and no internal structure is invalid;
    // build with the static helpers or the surgery operations below.
    static PlabicGraph lollipop(Color c);  // n = 1, single colored leaf

    // Raw builder used by tests and JSON import. legs[i] = internal endpoint
    // of the leg at boundary position i+1; rotations list neighbor ids in
    // clockwise order (the leg neighbor of a boundary vertex appears as -(i+1)
    // for boundary position i+1).
    static PlabicGraph from_neighbors(int n, const std::vector<Color>& colors,
                                      const std::vector<std::vector<int>>& rotations);

    int boundary_count() const { return n_; }
    int vertex_count() const;                  // live internal vertices
    int edge_count() const;                    // legs + internal edges
    const std::vector<Vertex>& vertex_slots() const { return verts_; }

    // --- trips and the trip permutation ------------------------------------

    // The trip starting at boundary position i; returns the terminal boundary
    // position and the dart sequence walked.
    struct Trip {
        int end = 0;
        std::vector<int> darts;
        std::optional<Color> lollipop;  // set when the trip is i -> i
    };
    Trip trip(int i) const;

    // Lift of the boundary map to the bounded affine window; lollipop colors
    // decide fixed points (white: w(i)=i, black: w(i)=i+n). Throws
    // InconsistentLift when the lift violates the defining conditions or when
    // expected_k is given and disagrees.
    BoundedAffinePermutation trip_permutation(std::optional<int> expected_k = std::nullopt) const;

    // --- faces and labels ---------------------------------------------------

    struct Face {
        std::string id;              // "B<j>" boundary / "M<label>" internal
        std::vector<int> darts;      // trace, face on the right of each dart
        bool boundary = false;
        std::vector<int> arcs;       // boundary arc indices j (face at b_j..b_{j+1})
        std::set<int> label;         // target-convention strand indices
    };

    // Faces with target-convention labels; deterministic order (boundary faces
    // by arc index, then internal faces by label).
    std::vector<Face> faces() const;

    enum class LabelConvention { Target, Source };
    // Face labels under either convention, in the same face order as faces().
    std::vector<std::set<int>> face_labels(LabelConvention conv) const;

    // --- quiver extraction --------------------------------------------------

    // One vertex per face, frozen iff boundary; one arrow per bicolored
    // internal edge, oriented so arrows circle clockwise around black vertices;
    // opposite pairs cancel and frozen-frozen arrows are dropped.
    IceQuiver to_ice_quiver() const;

    // --- moves and surgeries -------------------------------------------------

    // Urban renewal at an internal quadrilateral face with trivalent vertices
    // of alternating colors: swaps the four colors. The trip permutation is
    // unchanged and the quiver mutates at that face. Throws NotSquareMovable.
    PlabicGraph square_move(const std::string& face_id) const;

    std::vector<std::string> square_movable_faces() const;

    // Normal form: no internal degree-2 vertices, no same-color adjacent
    // pairs. Trip permutation preserved.
    PlabicGraph cleanup_moves() const;

    // Insert a new boundary position i carrying a lollipop of the given color;
    // old positions >= i shift up by one.
    PlabicGraph add_lollipop(int i, Color c) const;

    // Bridge between legs i and i+1 (positions mod n). The white-at-i bridge
    // composes the trip permutation with s_i on the left; the black-at-i
    // bridge on the right. Returned graph is not normalized.
    PlabicGraph add_bridge(int i, bool white_at_i) const;

    // Subdivide an edge with a degree-2 vertex (test helper; trips preserved).
    PlabicGraph subdivide_edge(int edge, Color c) const;
    std::vector<int> edge_ids() const;

    // Canonical serialization up to internal relabeling (boundary fixed).
    std::string canonical_string() const;

    // Structural invariants: pairing, degrees, leaflessness, Euler count.
    void check_valid() const;

    // Of the two faces flanking an edge, the one to the left / right of the
    // dart from the black endpoint to the white endpoint. Used to locate the
    // cover faces after bridge surgery. Throws on same-color edges.
    std::pair<std::string, std::string> faces_beside_bicolored_edge(int edge) const;

private:
    int n_ = 0;                       // boundary vertices 1..n
    std::vector<Vertex> verts_;       // internal vertices, index = id
    std::vector<std::array<int, 2>> edges_;  // endpoint encoding, see below
    std::vector<int> boundary_leg_;   // edge id of the leg at position i+1

    // Endpoint encoding: internal vertex v -> v, boundary position i -> -i.
    friend struct PlabicAccess;

    int dart_endpoint(int dart) const;          // vertex/boundary holding dart
    int mate(int dart) const { return dart ^ 1; }
    int rot_next(int vertex, int dart, int step) const;
    int trip_step(int dart) const;               // next dart of the trip
    void compact();                               // drop dead slots, renumber

    struct FaceTrace;
    std::vector<Face> faces_with_trace(std::vector<std::vector<int>>* strand_paths) const;
};

using LabelConvention = PlabicGraph::LabelConvention;

}  // namespace postnikov
