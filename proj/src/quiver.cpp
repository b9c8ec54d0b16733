#include "postnikov/quiver.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>

namespace postnikov {

IceQuiver IceQuiver::make(std::vector<QuiverVertex> vertices, const std::vector<Arrow>& arrows) {
    std::sort(vertices.begin(), vertices.end(),
              [](const QuiverVertex& a, const QuiverVertex& b) { return a.id < b.id; });
    for (size_t i = 1; i < vertices.size(); ++i)
        if (vertices[i].id == vertices[i - 1].id)
            throw BadInput("duplicate vertex id " + vertices[i].id);

    IceQuiver q;
    q.verts_ = std::move(vertices);
    const int n = q.size();
    q.b_.assign(n, std::vector<int>(n, 0));
    for (const Arrow& a : arrows) {
        const int u = q.require(a.from), v = q.require(a.to);
        if (u == v) throw BadInput("loop at " + a.from);
        if (a.mult < 0) throw BadInput("negative multiplicity");
        q.b_[u][v] += a.mult;
        q.b_[v][u] -= a.mult;
    }
    q.zero_frozen_pairs();
    return q;
}

void IceQuiver::zero_frozen_pairs() {
    for (int u = 0; u < size(); ++u)
        for (int v = 0; v < size(); ++v)
            if (verts_[u].frozen && verts_[v].frozen) b_[u][v] = 0;
}

int IceQuiver::index_of(const std::string& id) const {
    auto it = std::lower_bound(verts_.begin(), verts_.end(), id,
                               [](const QuiverVertex& v, const std::string& s) { return v.id < s; });
    if (it == verts_.end() || it->id != id) return -1;
    return static_cast<int>(it - verts_.begin());
}

int IceQuiver::require(const std::string& id) const {
    const int u = index_of(id);
    if (u < 0) throw NoSuchVertex(id);
    return u;
}

std::vector<Arrow> IceQuiver::arrows() const {
    std::vector<Arrow> out;
    for (int u = 0; u < size(); ++u)
        for (int v = 0; v < size(); ++v)
            if (b_[u][v] > 0) out.push_back({verts_[u].id, verts_[v].id, b_[u][v]});
    return out;  // vertex order is sorted, so this is sorted by (from, to)
}

int IceQuiver::mutable_count() const {
    int c = 0;
    for (const auto& v : verts_) c += !v.frozen;
    return c;
}

int IceQuiver::frozen_count() const { return size() - mutable_count(); }

IceQuiver IceQuiver::mutate_at(int v) const {
    if (verts_[v].frozen) throw FrozenVertex(verts_[v].id);
    IceQuiver q = *this;
    const int n = size();
    for (int j = 0; j < n; ++j) {
        for (int l = 0; l < n; ++l) {
            if (j == v || l == v)
                q.b_[j][l] = -b_[j][l];
            else if (b_[j][v] > 0 && b_[v][l] > 0)
                q.b_[j][l] = b_[j][l] + b_[j][v] * b_[v][l];
            else if (b_[j][v] < 0 && b_[v][l] < 0)
                q.b_[j][l] = b_[j][l] - b_[j][v] * b_[v][l];
        }
    }
    q.zero_frozen_pairs();
    return q;
}

IceQuiver IceQuiver::mutate(const std::string& v) const { return mutate_at(require(v)); }

IceQuiver IceQuiver::freeze(const std::string& id) const {
    const int v = require(id);
    if (verts_[v].frozen) throw AlreadyFrozen(id);
    IceQuiver q = *this;
    q.verts_[v].frozen = true;
    q.zero_frozen_pairs();
    return q;
}

IceQuiver IceQuiver::delete_at(int v) const {
    IceQuiver q;
    for (int u = 0; u < size(); ++u)
        if (u != v) q.verts_.push_back(verts_[u]);
    const int m = size() - 1;
    q.b_.assign(m, std::vector<int>(m, 0));
    for (int u = 0, uu = 0; u < size(); ++u) {
        if (u == v) continue;
        for (int w = 0, ww = 0; w < size(); ++w) {
            if (w == v) continue;
            q.b_[uu][ww] = b_[u][w];
            ++ww;
        }
        ++uu;
    }
    return q;
}

IceQuiver IceQuiver::delete_vertex(const std::string& id) const { return delete_at(require(id)); }

IceQuiver IceQuiver::mutable_part() const {
    IceQuiver q = *this;
    for (int v = size() - 1; v >= 0; --v)
        if (q.verts_[v].frozen) q = q.delete_at(v);
    return q;
}

bool IceQuiver::is_edgeless() const {
    for (int u = 0; u < size(); ++u)
        for (int v = 0; v < size(); ++v)
            if (b_[u][v] != 0) return false;
    return true;
}

namespace {

// Indices of mutable vertices and the adjacency (positive arrows) among them.
std::vector<std::vector<int>> mutable_adjacency(const IceQuiver& q, std::vector<int>& verts) {
    verts.clear();
    std::vector<int> pos(q.size(), -1);
    for (int v = 0; v < q.size(); ++v)
        if (!q.vertex(v).frozen) {
            pos[v] = static_cast<int>(verts.size());
            verts.push_back(v);
        }
    std::vector<std::vector<int>> adj(verts.size());
    for (int a : verts)
        for (int b : verts)
            if (q.b(a, b) > 0) adj[pos[a]].push_back(pos[b]);
    return adj;
}

// Tarjan-free SCC via Kosaraju; sizes here are tiny.
std::vector<int> scc_ids(const std::vector<std::vector<int>>& adj) {
    const int n = static_cast<int>(adj.size());
    std::vector<std::vector<int>> radj(n);
    for (int u = 0; u < n; ++u)
        for (int v : adj[u]) radj[v].push_back(u);
    std::vector<int> order;
    std::vector<char> seen(n, 0);
    std::function<void(int)> dfs1 = [&](int u) {
        seen[u] = 1;
        for (int v : adj[u])
            if (!seen[v]) dfs1(v);
        order.push_back(u);
    };
    for (int u = 0; u < n; ++u)
        if (!seen[u]) dfs1(u);
    std::vector<int> comp(n, -1);
    int c = 0;
    std::function<void(int)> dfs2 = [&](int u) {
        comp[u] = c;
        for (int v : radj[u])
            if (comp[v] < 0) dfs2(v);
    };
    for (int i = n - 1; i >= 0; --i)
        if (comp[order[i]] < 0) {
            dfs2(order[i]);
            ++c;
        }
    return comp;
}

}  // namespace

bool IceQuiver::is_acyclic() const {
    std::vector<int> verts;
    auto adj = mutable_adjacency(*this, verts);
    auto comp = scc_ids(adj);
    std::vector<int> sz(adj.size(), 0);
    for (int c : comp) ++sz[c];
    for (size_t u = 0; u < adj.size(); ++u)
        if (sz[comp[u]] > 1) return false;
    return true;
}

bool IceQuiver::arrow_in_biinfinite_path(const std::string& uid, const std::string& vid) const {
    const int ug = require(uid), vg = require(vid);
    if (vertex(ug).frozen || vertex(vg).frozen || b_[ug][vg] <= 0)
        throw NoSuchArrow(uid + "->" + vid);
    std::vector<int> verts;
    auto adj = mutable_adjacency(*this, verts);
    const int n = static_cast<int>(verts.size());
    int u = -1, v = -1;
    for (int i = 0; i < n; ++i) {
        if (verts[i] == ug) u = i;
        if (verts[i] == vg) v = i;
    }
    auto comp = scc_ids(adj);
    std::vector<int> sz(n, 0);
    for (int c : comp) ++sz[c];
    std::vector<char> cyclic(n, 0);
    for (int i = 0; i < n; ++i) cyclic[i] = sz[comp[i]] > 1;

    // u must be reachable from a cyclic vertex; v must reach one.
    std::vector<char> back(n, 0);  // back[x]: x reachable from some cycle
    std::vector<int> stack;
    for (int i = 0; i < n; ++i)
        if (cyclic[i] && !back[i]) {
            back[i] = 1;
            stack.push_back(i);
        }
    while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        for (int y : adj[x])
            if (!back[y]) {
                back[y] = 1;
                stack.push_back(y);
            }
    }
    if (!back[u]) return false;
    std::vector<char> fwd(n, 0);
    stack.push_back(v);
    fwd[v] = 1;
    while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        if (cyclic[x]) return true;
        for (int y : adj[x])
            if (!fwd[y]) {
                fwd[y] = 1;
                stack.push_back(y);
            }
    }
    return false;
}

std::vector<IceQuiver> IceQuiver::components() const {
    const int n = size();
    std::vector<int> comp(n, -1);
    int c = 0;
    for (int s = 0; s < n; ++s) {
        if (comp[s] >= 0) continue;
        std::vector<int> stack{s};
        comp[s] = c;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int v = 0; v < n; ++v)
                if (comp[v] < 0 && b_[u][v] != 0) {
                    comp[v] = c;
                    stack.push_back(v);
                }
        }
        ++c;
    }
    std::vector<IceQuiver> out(c);
    for (int ci = 0; ci < c; ++ci) {
        IceQuiver q;
        std::vector<int> members;
        for (int v = 0; v < n; ++v)
            if (comp[v] == ci) {
                members.push_back(v);
                q.verts_.push_back(verts_[v]);
            }
        const int m = static_cast<int>(members.size());
        q.b_.assign(m, std::vector<int>(m, 0));
        for (int a = 0; a < m; ++a)
            for (int b = 0; b < m; ++b) q.b_[a][b] = b_[members[a]][members[b]];
        out[ci] = std::move(q);
    }
    return out;
}

std::string IceQuiver::dot() const {
    std::ostringstream os;
    os << "digraph quiver {\n";
    for (const auto& v : verts_)
        os << "  \"" << v.id << "\" [shape=" << (v.frozen ? "box" : "circle") << "];\n";
    for (const Arrow& a : arrows()) {
        os << "  \"" << a.from << "\" -> \"" << a.to << "\"";
        if (a.mult > 1) os << " [label=\"" << a.mult << "\"]";
        os << ";\n";
    }
    os << "}\n";
    return os.str();
}

bool is_isomorphic(const IceQuiver& a, const IceQuiver& b) {
    if (a.size() != b.size()) return false;
    return a.canonical_form() == b.canonical_form();
}

}  // namespace postnikov
