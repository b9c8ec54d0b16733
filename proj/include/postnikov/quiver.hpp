#pragma once

#include <optional>
#include <string>
#include <vector>

#include "postnikov/errors.hpp"

namespace postnikov {

struct QuiverVertex {
    std::string id;
    bool frozen = false;
    bool operator==(const QuiverVertex&) const = default;
};

struct Arrow {
    std::string from, to;
    int mult = 1;
};

// An ice quiver: vertices with frozen flags and a skew-symmetric exchange
// matrix B, B[u][v] > 0 meaning B[u][v] arrows u -> v. Loops and directed
// 2-cycles are excluded by the sign encoding; arrows between two frozen
// vertices are zeroed at construction and after every mutation.
//
// Vertices are kept sorted by id, so equal quivers have equal representations.
class IceQuiver {
public:
    IceQuiver() = default;

    // Nets opposite arrows, zeroes frozen-frozen entries. Throws BadInput on
    // duplicate ids, loops, or negative multiplicities.
    static IceQuiver make(std::vector<QuiverVertex> vertices, const std::vector<Arrow>& arrows);

    int size() const { return static_cast<int>(verts_.size()); }
    const std::vector<QuiverVertex>& vertices() const { return verts_; }
    const QuiverVertex& vertex(int u) const { return verts_[u]; }
    int b(int u, int v) const { return b_[u][v]; }

    int index_of(const std::string& id) const;       // -1 if absent
    int require(const std::string& id) const;        // throws NoSuchVertex

    std::vector<Arrow> arrows() const;  // positive entries, sorted by (from, to)

    int mutable_count() const;
    int frozen_count() const;

    // Standard matrix mutation at a mutable vertex. Throws FrozenVertex.
    IceQuiver mutate(const std::string& v) const;
    IceQuiver mutate_at(int v) const;

    IceQuiver freeze(const std::string& v) const;         // throws AlreadyFrozen
    IceQuiver delete_vertex(const std::string& v) const;  // removes row/column
    IceQuiver delete_at(int v) const;

    // Induced subquiver on the mutable vertices (all flags become mutable).
    IceQuiver mutable_part() const;

    bool is_edgeless() const;

    // Cycle test on the mutable part.
    bool is_acyclic() const;

    // True iff the arrow u->v extends to a bi-infinite directed path in the
    // mutable part: u is reachable from a directed cycle and v reaches one.
    bool arrow_in_biinfinite_path(const std::string& u, const std::string& v) const;

    // Weakly connected components, each as an induced ice quiver; deterministic
    // order (by smallest vertex id).
    std::vector<IceQuiver> components() const;

    // Key invariant under vertex relabelings preserving frozen flags and the
    // optional per-vertex color strings. Equal keys iff isomorphic.
    std::string canonical_form() const;
    std::string canonical_form(const std::vector<std::string>& colors) const;

    bool operator==(const IceQuiver&) const = default;

    std::string dot() const;

private:
    std::vector<QuiverVertex> verts_;
    std::vector<std::vector<int>> b_;
    void zero_frozen_pairs();
};

bool is_isomorphic(const IceQuiver& a, const IceQuiver& b);

}  // namespace postnikov
