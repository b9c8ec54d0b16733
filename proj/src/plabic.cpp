#include "postnikov/plabic.hpp"

#include <algorithm>
#include <climits>
#include <map>
#include <queue>
#include <sstream>

namespace postnikov {

namespace {
constexpr int kDead = INT_MIN;

std::string join_label(const std::set<int>& label) {
    std::string s;
    for (int v : label) {
        if (!s.empty()) s += "_";
        s += std::to_string(v);
    }
    return s;
}
}  // namespace

// ---------------------------------------------------------------------------
// construction

PlabicGraph PlabicGraph::lollipop(Color c) {
    PlabicGraph g;
    g.n_ = 1;
    g.verts_.push_back({c, true, {1}});    // dart 1 of edge 0
    g.edges_.push_back({-1, 0});           // leg: boundary 1 <-> vertex 0
    g.boundary_leg_ = {0};
    return g;
}

PlabicGraph PlabicGraph::from_neighbors(int n, const std::vector<Color>& colors,
                                        const std::vector<std::vector<int>>& rotations) {
    PlabicGraph g;
    g.n_ = n;
    g.boundary_leg_.assign(n, -1);
    const int m = static_cast<int>(colors.size());
    for (int v = 0; v < m; ++v) g.verts_.push_back({colors[v], true, {}});

    // Edge keyed by unordered endpoint pair with multiplicity position; the
    // builder does not support multi-edges (tests never need them).
    std::map<std::pair<int, int>, int> edge_id;
    auto get_edge = [&](int a, int b) {
        auto key = std::minmax(a, b);
        auto it = edge_id.find(key);
        if (it != edge_id.end()) return it->second;
        const int e = static_cast<int>(g.edges_.size());
        g.edges_.push_back({key.first, key.second});
        edge_id[key] = e;
        return e;
    };
    for (int v = 0; v < m; ++v) {
        for (int nb : rotations[v]) {
            const int e = get_edge(v, nb);
            const int d = 2 * e + (g.edges_[e][0] == v ? 0 : 1);
            g.verts_[v].rot.push_back(d);
            if (nb < 0) g.boundary_leg_[-nb - 1] = e;
        }
    }
    for (int j = 0; j < n; ++j)
        if (g.boundary_leg_[j] < 0) throw BadInput("boundary " + std::to_string(j + 1) + " has no leg");
    g.check_valid();
    return g;
}

int PlabicGraph::vertex_count() const {
    int c = 0;
    for (const auto& v : verts_) c += v.alive;
    return c;
}

int PlabicGraph::edge_count() const {
    int c = 0;
    for (const auto& e : edges_) c += e[0] != kDead;
    return c;
}

std::vector<int> PlabicGraph::edge_ids() const {
    std::vector<int> out;
    for (size_t e = 0; e < edges_.size(); ++e)
        if (edges_[e][0] != kDead) out.push_back(static_cast<int>(e));
    return out;
}

int PlabicGraph::dart_endpoint(int dart) const { return edges_[dart / 2][dart % 2]; }

int PlabicGraph::rot_next(int vertex, int dart, int step) const {
    const auto& rot = verts_[vertex].rot;
    const int deg = static_cast<int>(rot.size());
    for (int p = 0; p < deg; ++p)
        if (rot[p] == dart) return rot[((p + step) % deg + deg) % deg];
    throw InternalError("dart not in rotation");
}

// ---------------------------------------------------------------------------
// trips

int PlabicGraph::trip_step(int dart) const {
    // dart is being traversed away from its owner; land at the mate's owner.
    const int m = mate(dart);
    const int at = dart_endpoint(m);
    if (at < 0) return -1;  // reached the boundary
    // White: next counterclockwise (previous in the clockwise rotation).
    // Black: next clockwise.
    return rot_next(at, m, verts_[at].color == Color::White ? -1 : +1);
}

PlabicGraph::Trip PlabicGraph::trip(int i) const {
    if (i < 1 || i > n_) throw BadInput("boundary index out of range");
    Trip t;
    const int leg = boundary_leg_[i - 1];
    int d = 2 * leg + (edges_[leg][0] == -i ? 0 : 1);
    const int limit = 2 * (edge_count() + 1);
    int steps = 0;
    for (;;) {
        t.darts.push_back(d);
        const int next = trip_step(d);
        if (next < 0) break;
        d = next;
        if (++steps > limit) throw MalformedRotationSystem("trip from " + std::to_string(i) +
                                                           " does not terminate");
    }
    t.end = -dart_endpoint(mate(t.darts.back()));
    if (t.end == i && t.darts.size() == 2) {
        const int v = dart_endpoint(t.darts[1]);
        if (v >= 0 && verts_[v].rot.size() == 1) t.lollipop = verts_[v].color;
    }
    return t;
}

BoundedAffinePermutation PlabicGraph::trip_permutation(std::optional<int> expected_k) const {
    std::vector<int> window(n_);
    for (int i = 1; i <= n_; ++i) {
        Trip t = trip(i);
        if (t.end == i) {
            if (!t.lollipop)
                throw InconsistentLift("trip " + std::to_string(i) +
                                       " returns to its start without a lollipop");
            window[i - 1] = *t.lollipop == Color::White ? i : i + n_;
        } else {
            // Unique representative of the endpoint strictly inside (i, i+n).
            int v = t.end;
            while (v <= i) v += n_;
            while (v >= i + n_) v -= n_;
            window[i - 1] = v;
        }
    }
    BoundedAffinePermutation w = [&] {
        try {
            return BoundedAffinePermutation::validate(window);
        } catch (const Error& e) {
            throw InconsistentLift(std::string("lifted window invalid: ") + e.what());
        }
    }();
    if (expected_k && w.k() != *expected_k)
        throw InconsistentLift("lift has k=" + std::to_string(w.k()) + ", expected " +
                               std::to_string(*expected_k));
    return w;
}

// ---------------------------------------------------------------------------
// faces

struct PlabicGraph::FaceTrace {
    // Augmented darts: real darts as stored, then arc darts. Arc j (1..n)
    // runs from boundary j to boundary j%n+1; dart fwd(j) sits at j.
    const PlabicGraph& g;
    int arc_base;  // first arc dart id

    explicit FaceTrace(const PlabicGraph& graph) : g(graph) {
        arc_base = 2 * static_cast<int>(g.edges_.size());
    }
    int fwd(int j) const { return arc_base + 2 * (j - 1); }
    int bwd(int j) const { return arc_base + 2 * (j - 1) + 1; }
    bool is_arc(int d) const { return d >= arc_base; }
    int arc_index(int d) const { return (d - arc_base) / 2 + 1; }

    int mate(int d) const { return d ^ 1; }

    // Owner of a dart: internal vertex id, or -j for boundary j.
    int owner(int d) const {
        if (!is_arc(d)) return g.dart_endpoint(d);
        const int j = arc_index(d);
        return (d % 2 == 0) ? -j : -(j % g.n_ + 1);
    }

    // Rotation at a boundary vertex, clockwise: [arc out, leg, arc in].
    std::array<int, 3> boundary_rot(int j) const {
        const int leg = g.boundary_leg_[j - 1];
        const int leg_dart = 2 * leg + (g.edges_[leg][0] == -j ? 0 : 1);
        const int jprev = (j + g.n_ - 2) % g.n_ + 1;
        return {fwd(j), leg_dart, bwd(jprev)};
    }

    int ccw_succ(int d) const {
        const int at = owner(d);
        if (at >= 0) return g.rot_next(at, d, -1);
        const auto rot = boundary_rot(-at);
        for (int p = 0; p < 3; ++p)
            if (rot[p] == d) return rot[(p + 2) % 3];
        throw InternalError("dart not in boundary rotation");
    }

    // Next dart of the face lying to the right of d.
    int face_next(int d) const { return ccw_succ(mate(d)); }
};

std::vector<PlabicGraph::Face>
PlabicGraph::faces_with_trace(std::vector<std::vector<int>>* strand_paths) const {
    FaceTrace ft(*this);
    const int total_darts = ft.arc_base + 2 * n_;
    std::vector<int> face_of(total_darts, -1);

    // Dead edge slots own no darts.
    auto dart_alive = [&](int d) {
        if (ft.is_arc(d)) return true;
        return edges_[d / 2][0] != kDead;
    };

    std::vector<std::vector<int>> orbits;
    for (int d0 = 0; d0 < total_darts; ++d0) {
        if (!dart_alive(d0) || face_of[d0] >= 0) continue;
        std::vector<int> orbit;
        int d = d0;
        do {
            face_of[d] = static_cast<int>(orbits.size());
            orbit.push_back(d);
            d = ft.face_next(d);
            if (orbit.size() > static_cast<size_t>(total_darts))
                throw MalformedRotationSystem("face trace does not close");
        } while (d != d0);
        orbits.push_back(std::move(orbit));
    }

    // Drop the outer face: the orbit containing the backward dart of arc 1.
    const int outer = face_of[ft.bwd(1)];

    std::vector<Face> faces;
    std::vector<int> orbit_to_face(orbits.size(), -1);
    for (size_t o = 0; o < orbits.size(); ++o) {
        if (static_cast<int>(o) == outer) continue;
        Face f;
        f.darts = orbits[o];
        for (int d : f.darts)
            if (ft.is_arc(d)) {
                POSTNIKOV_CHECK(d % 2 == 0, "inner face uses a backward arc");
                f.boundary = true;
                f.arcs.push_back(ft.arc_index(d));
            }
        std::sort(f.arcs.begin(), f.arcs.end());
        orbit_to_face[o] = static_cast<int>(faces.size());
        faces.push_back(std::move(f));
    }

    // Trips, and which side of each strand every face is on. Label rule
    // calibrated against the worked (3,6) diagram: a face is labeled by the
    // strands it lies to the left of, black lollipops label every face and
    // white lollipops none.
    std::vector<std::vector<int>> paths(n_);
    std::vector<std::optional<Color>> lolli(n_);
    std::vector<int> end(n_);
    for (int i = 1; i <= n_; ++i) {
        Trip t = trip(i);
        paths[i - 1] = t.darts;
        lolli[i - 1] = t.lollipop;
        end[i - 1] = t.end;
    }

    const int nf = static_cast<int>(faces.size());
    for (int i = 1; i <= n_; ++i) {
        const auto& path = paths[i - 1];
        if (lolli[i - 1]) {
            if (*lolli[i - 1] == Color::Black)
                for (auto& f : faces) f.label.insert(end[i - 1]);
            continue;
        }
        std::vector<char> wall_edge(edges_.size(), 0);
        for (int d : path) wall_edge[d / 2] = 1;
        // side: 0 unknown, 1 left, 2 right
        std::vector<char> side(nf, 0);
        std::queue<int> bfs;
        auto seed = [&](int dart, char s) {
            const int o = face_of[dart];
            if (o == outer) return;
            const int f = orbit_to_face[o];
            if (side[f] == 0) {
                side[f] = s;
                bfs.push(f);
            } else if (side[f] != s) {
                throw InternalError("face on both sides of a strand (unreduced graph?)");
            }
        };
        for (int d : path) {
            seed(d, 2);          // face to the right of the strand
            seed(ft.mate(d), 1); // face to the left
        }
        while (!bfs.empty()) {
            const int f = bfs.front();
            bfs.pop();
            for (int d : faces[f].darts) {
                if (ft.is_arc(d)) continue;
                if (wall_edge[d / 2]) continue;
                const int o = face_of[ft.mate(d)];
                if (o == outer) continue;
                const int gface = orbit_to_face[o];
                if (side[gface] == 0) {
                    side[gface] = side[f];
                    bfs.push(gface);
                } else if (side[gface] != side[f]) {
                    throw InternalError("inconsistent strand side fill");
                }
            }
        }
        for (int f = 0; f < nf; ++f) {
            POSTNIKOV_CHECK(side[f] != 0, "face not reached by strand side fill");
            if (side[f] == 1) faces[f].label.insert(end[i - 1]);
        }
    }

    // Stable ids and deterministic order: boundary faces by smallest arc,
    // then internal faces by label.
    for (auto& f : faces)
        f.id = f.boundary ? "B" + std::to_string(f.arcs.front()) : "M" + join_label(f.label);
    std::sort(faces.begin(), faces.end(), [](const Face& a, const Face& b) {
        if (a.boundary != b.boundary) return a.boundary;
        if (a.boundary) return a.arcs.front() < b.arcs.front();
        return a.label < b.label;
    });
    for (size_t i = 1; i < faces.size(); ++i)
        if (faces[i].id == faces[i - 1].id)
            throw InternalError("duplicate face label " + faces[i].id);

    if (strand_paths) *strand_paths = std::move(paths);
    return faces;
}

std::vector<PlabicGraph::Face> PlabicGraph::faces() const { return faces_with_trace(nullptr); }

std::vector<std::set<int>> PlabicGraph::face_labels(LabelConvention conv) const {
    auto fs = faces();
    if (conv == LabelConvention::Target) {
        std::vector<std::set<int>> out;
        for (auto& f : fs) out.push_back(f.label);
        return out;
    }
    // Source convention: same sides, strands named by their start.
    std::vector<int> source_of(n_ + 1, 0);
    for (int i = 1; i <= n_; ++i) source_of[trip(i).end] = i;
    std::vector<std::set<int>> out;
    for (auto& f : fs) {
        std::set<int> s;
        for (int t : f.label) s.insert(source_of[t]);
        out.push_back(std::move(s));
    }
    return out;
}

// ---------------------------------------------------------------------------
// quiver extraction

std::pair<std::string, std::string> PlabicGraph::faces_beside_bicolored_edge(int edge) const {
    FaceTrace ft(*this);
    auto fs = faces_with_trace(nullptr);
    std::map<int, std::string> dart_face;
    for (auto& f : fs)
        for (int d : f.darts) dart_face[d] = f.id;
    const int a = edges_[edge][0], b = edges_[edge][1];
    POSTNIKOV_CHECK(a >= 0 && b >= 0, "edge touches the boundary");
    POSTNIKOV_CHECK(verts_[a].color != verts_[b].color, "edge endpoints share a color");
    const int black_side = verts_[a].color == Color::Black ? 0 : 1;
    const int d = 2 * edge + black_side;  // dart at the black endpoint
    return {dart_face.at(mate(d)), dart_face.at(d)};  // left, right
}

IceQuiver PlabicGraph::to_ice_quiver() const {
    auto fs = faces_with_trace(nullptr);
    std::map<int, int> dart_face;
    for (size_t i = 0; i < fs.size(); ++i)
        for (int d : fs[i].darts) dart_face[d] = static_cast<int>(i);

    std::vector<QuiverVertex> vertices;
    for (auto& f : fs) vertices.push_back({f.id, f.boundary});

    std::vector<Arrow> arrows;
    for (size_t e = 0; e < edges_.size(); ++e) {
        const int a = edges_[e][0], b = edges_[e][1];
        if (a == kDead || a < 0 || b < 0) continue;  // dead or leg
        POSTNIKOV_CHECK(verts_[a].color != verts_[b].color,
                        "same-color edge in quiver extraction; run cleanup_moves first");
        const int black_side = verts_[a].color == Color::Black ? 0 : 1;
        const int d = 2 * static_cast<int>(e) + black_side;
        // Arrow from the face left of the black->white dart to the face on
        // its right: arrows circle clockwise around black vertices.
        arrows.push_back({fs[dart_face.at(mate(d))].id, fs[dart_face.at(d)].id, 1});
    }
    return IceQuiver::make(std::move(vertices), arrows);
}

// ---------------------------------------------------------------------------
// moves

std::vector<std::string> PlabicGraph::square_movable_faces() const {
    std::vector<std::string> out;
    for (const auto& f : faces()) {
        if (f.boundary || f.darts.size() != 4) continue;
        bool ok = true;
        std::array<int, 4> corner{};
        for (int p = 0; p < 4; ++p) {
            const int v = dart_endpoint(f.darts[p]);
            if (v < 0) {
                ok = false;
                break;
            }
            corner[p] = v;
        }
        if (!ok) continue;
        for (int p = 0; p < 4 && ok; ++p) {
            for (int r = p + 1; r < 4; ++r)
                if (corner[p] == corner[r]) ok = false;
            if (ok && verts_[corner[p]].color == verts_[corner[(p + 1) % 4]].color) ok = false;
        }
        if (ok) out.push_back(f.id);
    }
    std::sort(out.begin(), out.end());
    return out;
}

PlabicGraph PlabicGraph::square_move(const std::string& face_id) const {
    auto movable = square_movable_faces();
    if (!std::binary_search(movable.begin(), movable.end(), face_id))
        throw NotSquareMovable(face_id);
    PlabicGraph g = *this;
    std::vector<int> quad;
    for (const auto& f : faces())
        if (f.id == face_id) quad = f.darts;
    POSTNIKOV_CHECK(quad.size() == 4, "square face lost");

    // Urban renewal. First split every corner of degree > 3 so the face has
    // trivalent corners: the two face darts at a corner sit consecutively in
    // its clockwise rotation and move to a new same-colored vertex hung off
    // the old one. This is the inverse of a cleanup contraction, so trips are
    // unchanged. Then swap the four corner colors and normalize.
    for (int p = 0; p < 4; ++p) {
        const int out_dart = quad[p];                 // leaves the corner
        const int in_dart = mate(quad[(p + 3) % 4]);  // arrives at the corner
        const int v = g.dart_endpoint(out_dart);
        POSTNIKOV_CHECK(g.dart_endpoint(in_dart) == v, "face corner mismatch");
        if (g.verts_[v].rot.size() == 3) continue;
        const int vp = static_cast<int>(g.verts_.size());
        const int ec = static_cast<int>(g.edges_.size());
        g.edges_.push_back({v, vp});
        auto& rot = g.verts_[v].rot;
        std::vector<int> new_rot;
        bool replaced = false;
        for (size_t s = 0; s < rot.size(); ++s) {
            if (rot[s] == out_dart) {
                POSTNIKOV_CHECK(rot[(s + 1) % rot.size()] == in_dart,
                                "face darts not consecutive at a corner");
                new_rot.push_back(2 * ec);
                replaced = true;
            } else if (rot[s] != in_dart) {
                new_rot.push_back(rot[s]);
            }
        }
        POSTNIKOV_CHECK(replaced, "corner split failed");
        rot = std::move(new_rot);
        g.verts_.push_back({g.verts_[v].color, true, {2 * ec + 1, out_dart, in_dart}});
        for (int d : {out_dart, in_dart}) g.edges_[d / 2][d % 2] = vp;
    }
    for (int p = 0; p < 4; ++p) {
        const int v = g.dart_endpoint(quad[p]);
        g.verts_[v].color = g.verts_[v].color == Color::Black ? Color::White : Color::Black;
    }
    return g.cleanup_moves();
}

// ---------------------------------------------------------------------------
// cleanup to normal form

PlabicGraph PlabicGraph::cleanup_moves() const {
    PlabicGraph g = *this;
    bool changed = true;
    while (changed) {
        changed = false;

        // Contract same-color internal edges (merge the larger vertex id
        // into the smaller).
        for (size_t e = 0; e < g.edges_.size(); ++e) {
            int a = g.edges_[e][0], b = g.edges_[e][1];
            if (a == kDead || a < 0 || b < 0) continue;
            if (g.verts_[a].color != g.verts_[b].color) continue;
            POSTNIKOV_CHECK(a != b, "loop edge");
            const int keep = std::min(a, b), drop = std::max(a, b);
            const int dart_keep = 2 * static_cast<int>(e) + (g.edges_[e][0] == keep ? 0 : 1);
            const int dart_drop = mate(dart_keep);
            // Splice drop's rotation (after its dart of e, cyclically) into
            // keep's rotation in place of the contracted dart.
            auto& rk = g.verts_[keep].rot;
            auto& rd = g.verts_[drop].rot;
            std::vector<int> insert;
            {
                const int deg = static_cast<int>(rd.size());
                int pos = -1;
                for (int p = 0; p < deg; ++p)
                    if (rd[p] == dart_drop) pos = p;
                POSTNIKOV_CHECK(pos >= 0, "contract: dart missing");
                for (int s = 1; s < deg; ++s) insert.push_back(rd[(pos + s) % deg]);
            }
            std::vector<int> merged;
            for (int d : rk) {
                if (d == dart_keep)
                    merged.insert(merged.end(), insert.begin(), insert.end());
                else
                    merged.push_back(d);
            }
            g.verts_[keep].rot = std::move(merged);
            for (auto& ed : g.edges_) {
                if (ed[0] == drop) ed[0] = keep;
                if (ed[1] == drop) ed[1] = keep;
            }
            g.verts_[drop].alive = false;
            g.verts_[drop].rot.clear();
            g.edges_[e] = {kDead, kDead};
            changed = true;
        }

        // Splice out internal degree-2 vertices.
        for (size_t v = 0; v < g.verts_.size(); ++v) {
            if (!g.verts_[v].alive || g.verts_[v].rot.size() != 2) continue;
            const int d1 = g.verts_[v].rot[0], d2 = g.verts_[v].rot[1];
            const int e1 = d1 / 2, e2 = d2 / 2;
            POSTNIKOV_CHECK(e1 != e2, "degree-2 vertex with a double edge");
            const int a = g.dart_endpoint(mate(d1));
            const int b = g.dart_endpoint(mate(d2));
            const int enew = static_cast<int>(g.edges_.size());
            g.edges_.push_back({a, b});
            auto replace = [&](int endpoint, int old_dart, int new_dart, int old_edge) {
                if (endpoint >= 0) {
                    for (auto& d : g.verts_[endpoint].rot)
                        if (d == old_dart) d = new_dart;
                } else {
                    const int j = -endpoint;
                    if (g.boundary_leg_[j - 1] == old_edge) g.boundary_leg_[j - 1] = new_dart / 2;
                }
            };
            replace(a, mate(d1), 2 * enew, e1);
            replace(b, mate(d2), 2 * enew + 1, e2);
            g.edges_[e1] = {kDead, kDead};
            g.edges_[e2] = {kDead, kDead};
            g.verts_[v].alive = false;
            g.verts_[v].rot.clear();
            changed = true;
        }
    }
    g.compact();
    return g;
}

void PlabicGraph::compact() {
    std::vector<int> vmap(verts_.size(), -1);
    std::vector<Vertex> nv;
    for (size_t v = 0; v < verts_.size(); ++v)
        if (verts_[v].alive) {
            vmap[v] = static_cast<int>(nv.size());
            nv.push_back(std::move(verts_[v]));
        }
    std::vector<int> emap(edges_.size(), -1);
    std::vector<std::array<int, 2>> ne;
    for (size_t e = 0; e < edges_.size(); ++e)
        if (edges_[e][0] != kDead) {
            emap[e] = static_cast<int>(ne.size());
            auto ed = edges_[e];
            for (int s = 0; s < 2; ++s)
                if (ed[s] >= 0) ed[s] = vmap[ed[s]];
            ne.push_back(ed);
        }
    for (auto& v : nv)
        for (auto& d : v.rot) d = 2 * emap[d / 2] + d % 2;
    for (auto& leg : boundary_leg_) leg = emap[leg];
    verts_ = std::move(nv);
    edges_ = std::move(ne);
}

// ---------------------------------------------------------------------------
// surgeries

PlabicGraph PlabicGraph::add_lollipop(int i, Color c) const {
    if (i < 1 || i > n_ + 1) throw BadInput("lollipop position out of range");
    PlabicGraph g = *this;
    // Shift boundary positions >= i up by one.
    for (auto& ed : g.edges_)
        for (int s = 0; s < 2; ++s)
            if (ed[s] != kDead && ed[s] < 0 && -ed[s] >= i) ed[s] -= 1;
    const int v = static_cast<int>(g.verts_.size());
    const int e = static_cast<int>(g.edges_.size());
    g.verts_.push_back({c, true, {2 * e + 1}});
    g.edges_.push_back({-i, v});
    g.boundary_leg_.insert(g.boundary_leg_.begin() + (i - 1), e);
    g.n_ += 1;
    return g;
}

PlabicGraph PlabicGraph::subdivide_edge(int edge, Color c) const {
    PlabicGraph g = *this;
    POSTNIKOV_CHECK(edge >= 0 && edge < static_cast<int>(g.edges_.size()) &&
                        g.edges_[edge][0] != kDead,
                    "bad edge id");
    const int b = g.edges_[edge][1];
    const int v = static_cast<int>(g.verts_.size());
    const int e2 = static_cast<int>(g.edges_.size());
    // edge keeps endpoint 0; its dart 2*edge+1 moves to the new vertex.
    g.edges_.push_back({v, b});
    if (b >= 0) {
        for (auto& d : g.verts_[b].rot)
            if (d == 2 * edge + 1) d = 2 * e2 + 1;
    } else {
        if (g.boundary_leg_[-b - 1] == edge) g.boundary_leg_[-b - 1] = e2;
    }
    g.edges_[edge][1] = v;
    g.verts_.push_back({c, true, {2 * edge + 1, 2 * e2}});
    return g;
}

PlabicGraph PlabicGraph::add_bridge(int i, bool white_at_i) const {
    if (n_ < 2) throw BadInput("bridge needs at least two boundary points");
    const int j = i % n_ + 1;
    PlabicGraph g = *this;

    // Subdivide leg `pos` at its boundary end with a new vertex, recording
    // its darts as [toward boundary, toward interior].
    auto subdivide_leg = [&](int pos, Color c) {
        const int leg = g.boundary_leg_[pos - 1];
        const int side = g.edges_[leg][0] == -pos ? 0 : 1;  // boundary side of the leg
        const int u = g.edges_[leg][1 - side];
        const int v = static_cast<int>(g.verts_.size());
        const int e2 = static_cast<int>(g.edges_.size());
        g.edges_.push_back({v, u});
        if (u >= 0) {
            for (auto& d : g.verts_[u].rot)
                if (d == 2 * leg + (1 - side)) d = 2 * e2 + 1;
        } else {
            // Shared leg (a boundary-boundary chord): reattach the far end.
            if (g.boundary_leg_[-u - 1] == leg) g.boundary_leg_[-u - 1] = e2;
        }
        g.edges_[leg][1 - side] = v;
        g.verts_.push_back({c, true, {2 * leg + (1 - side), 2 * e2}});
        return v;
    };

    const Color pc = white_at_i ? Color::White : Color::Black;
    const Color qc = white_at_i ? Color::Black : Color::White;
    const int p = subdivide_leg(i, pc);
    const int q = subdivide_leg(j, qc);
    const int eb = static_cast<int>(g.edges_.size());
    g.edges_.push_back({p, q});
    // Clockwise rotations: p sees [boundary i, bridge, interior];
    // q sees [bridge, boundary i+1, interior].
    g.verts_[p].rot = {g.verts_[p].rot[0], 2 * eb, g.verts_[p].rot[1]};
    g.verts_[q].rot = {2 * eb + 1, g.verts_[q].rot[0], g.verts_[q].rot[1]};
    return g;
}

// ---------------------------------------------------------------------------
// canonical serialization and validation

std::string PlabicGraph::canonical_string() const {
    // Relabel internal vertices by BFS from the boundary legs in order; anchor
    // each rotation at the dart of first discovery.
    std::vector<int> label(verts_.size(), -1);
    std::vector<int> anchor(verts_.size(), -1);
    std::vector<int> order;
    std::queue<int> bfs;
    auto visit = [&](int v, int via_dart) {
        if (v < 0 || label[v] >= 0) return;
        label[v] = static_cast<int>(order.size());
        order.push_back(v);
        anchor[v] = via_dart;
        bfs.push(v);
    };
    for (int jdx = 0; jdx < n_; ++jdx) {
        const int leg = boundary_leg_[jdx];
        const int d = 2 * leg + (edges_[leg][0] == -(jdx + 1) ? 0 : 1);
        visit(dart_endpoint(mate(d)), mate(d));
        while (!bfs.empty()) {
            const int v = bfs.front();
            bfs.pop();
            const auto& rot = verts_[v].rot;
            int pos = 0;
            while (rot[pos] != anchor[v]) ++pos;
            for (size_t s = 0; s < rot.size(); ++s) {
                const int d2 = rot[(pos + s) % rot.size()];
                visit(dart_endpoint(mate(d2)), mate(d2));
            }
        }
    }
    std::ostringstream os;
    os << "n=" << n_ << ";";
    for (int jdx = 0; jdx < n_; ++jdx) {
        const int leg = boundary_leg_[jdx];
        int other = edges_[leg][0] == -(jdx + 1) ? edges_[leg][1] : edges_[leg][0];
        os << "L" << (other < 0 ? other : label[other]) << ";";
    }
    for (int v : order) {
        os << (verts_[v].color == Color::Black ? "b" : "w");
        const auto& rot = verts_[v].rot;
        int pos = 0;
        while (rot[pos] != anchor[v]) ++pos;
        for (size_t s = 0; s < rot.size(); ++s) {
            const int d2 = rot[(pos + s) % rot.size()];
            const int o = dart_endpoint(mate(d2));
            os << (o < 0 ? o : label[o]) << ",";
        }
        os << ";";
    }
    return os.str();
}

void PlabicGraph::check_valid() const {
    // Dart pairing and rotation ownership.
    std::vector<int> seen(2 * edges_.size(), 0);
    for (size_t v = 0; v < verts_.size(); ++v) {
        if (!verts_[v].alive) continue;
        if (verts_[v].rot.empty()) throw MalformedRotationSystem("isolated internal vertex");
        for (int d : verts_[v].rot) {
            if (d < 0 || d >= 2 * static_cast<int>(edges_.size()) || edges_[d / 2][0] == kDead)
                throw MalformedRotationSystem("rotation references a dead dart");
            if (dart_endpoint(d) != static_cast<int>(v))
                throw MalformedRotationSystem("rotation owns a foreign dart");
            if (seen[d]++) throw MalformedRotationSystem("dart appears twice");
        }
    }
    for (size_t e = 0; e < edges_.size(); ++e) {
        if (edges_[e][0] == kDead) continue;
        for (int s = 0; s < 2; ++s) {
            const int d = 2 * static_cast<int>(e) + s;
            const int at = dart_endpoint(d);
            if (at >= 0 && !seen[d]) throw MalformedRotationSystem("dart missing from rotation");
            if (at < 0 && (-at < 1 || -at > n_)) throw MalformedRotationSystem("bad boundary index");
        }
    }
    for (int jdx = 0; jdx < n_; ++jdx) {
        const int leg = boundary_leg_[jdx];
        if (leg < 0 || leg >= static_cast<int>(edges_.size()) || edges_[leg][0] == kDead)
            throw MalformedRotationSystem("missing boundary leg");
        if (edges_[leg][0] != -(jdx + 1) && edges_[leg][1] != -(jdx + 1))
            throw MalformedRotationSystem("leg does not touch its boundary vertex");
    }
    // Each boundary vertex has degree exactly one.
    std::vector<int> bdeg(n_, 0);
    for (size_t e = 0; e < edges_.size(); ++e) {
        if (edges_[e][0] == kDead) continue;
        for (int s = 0; s < 2; ++s)
            if (edges_[e][s] < 0) ++bdeg[-edges_[e][s] - 1];
    }
    for (int jdx = 0; jdx < n_; ++jdx)
        if (bdeg[jdx] != 1) throw MalformedRotationSystem("boundary degree != 1");
    // Leafless except lollipops: internal degree-1 vertices must hang on legs.
    for (size_t v = 0; v < verts_.size(); ++v) {
        if (!verts_[v].alive) continue;
        if (verts_[v].rot.size() == 1) {
            const int e = verts_[v].rot[0] / 2;
            const int other = edges_[e][0] == static_cast<int>(v) ? edges_[e][1] : edges_[e][0];
            if (other >= 0) throw MalformedRotationSystem("internal leaf is not a lollipop");
        }
    }
    // Connectivity to the boundary.
    std::vector<char> reach(verts_.size(), 0);
    std::queue<int> bfs;
    for (int jdx = 0; jdx < n_; ++jdx) {
        const int leg = boundary_leg_[jdx];
        for (int s = 0; s < 2; ++s) {
            const int v = edges_[leg][s];
            if (v >= 0 && !reach[v]) {
                reach[v] = 1;
                bfs.push(v);
            }
        }
    }
    while (!bfs.empty()) {
        const int v = bfs.front();
        bfs.pop();
        for (int d : verts_[v].rot) {
            const int u = dart_endpoint(mate(d));
            if (u >= 0 && !reach[u]) {
                reach[u] = 1;
                bfs.push(u);
            }
        }
    }
    for (size_t v = 0; v < verts_.size(); ++v)
        if (verts_[v].alive && !reach[v])
            throw MalformedRotationSystem("internal component detached from the boundary");
    // Euler check through the face tracing (throws if the trace misbehaves).
    const int V = vertex_count() + n_;
    const int E = edge_count() + n_;
    const int F = static_cast<int>(faces_with_trace(nullptr).size()) + 1;
    POSTNIKOV_CHECK(V - E + F == 2, "Euler check failed for the disc embedding");
}

}  // namespace postnikov
