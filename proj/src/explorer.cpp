#include "postnikov/explorer.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace postnikov {

Seed Seed::initial(const IceQuiver& q) {
    Seed s;
    s.quiver = q;
    const int m = q.size();
    for (int v = 0; v < m; ++v) s.vars.push_back(LaurentPoly::variable(m, v));
    return s;
}

Seed mutate_seed(const Seed& s, const std::string& vertex) {
    const int v = s.quiver.require(vertex);
    if (s.quiver.vertex(v).frozen) throw FrozenVertex(vertex);
    const int m = s.quiver.size();
    const int arity = s.vars.empty() ? 0 : s.vars[0].arity();
    LaurentPoly in = LaurentPoly::constant(arity, 1), out = LaurentPoly::constant(arity, 1);
    for (int u = 0; u < m; ++u) {
        for (int rep = 0; rep < s.quiver.b(u, v); ++rep) in = in * s.vars[u];
        for (int rep = 0; rep < s.quiver.b(v, u); ++rep) out = out * s.vars[u];
    }
    auto quotient = (in + out).divide_exact(s.vars[v]);
    if (!quotient)
        throw InexactDivision("exchange relation failed to divide at " + vertex);
    Seed next = s;
    next.quiver = s.quiver.mutate_at(v);
    next.vars[v] = *quotient;
    return next;
}

namespace {

// Unlabeled seed key: the sorted mutable cluster, plus the quiver canonically
// labeled with the variables as vertex colors (so the pairing of variables to
// quiver vertices matters, but their names do not).
std::string seed_key(const Seed& s) {
    std::vector<std::string> cluster;
    std::vector<std::string> colors;
    for (int v = 0; v < s.quiver.size(); ++v) {
        colors.push_back(s.vars[v].key());
        if (!s.quiver.vertex(v).frozen) cluster.push_back(s.vars[v].key());
    }
    std::sort(cluster.begin(), cluster.end());
    std::string key;
    for (const auto& c : cluster) key += c + "|";
    key += "#" + s.quiver.canonical_form(colors);
    return key;
}

}  // namespace

ExploreCounts enumerate_seeds(const Seed& start, long long seed_limit) {
    std::set<std::string> seen;
    std::set<std::string> variables;
    long long acyclic = 0;
    std::deque<Seed> queue;

    auto admit = [&](const Seed& s) {
        const std::string key = seed_key(s);
        if (!seen.insert(key).second) return false;
        if (static_cast<long long>(seen.size()) > seed_limit)
            throw LimitExceeded("more than " + std::to_string(seed_limit) + " seeds");
        for (int v = 0; v < s.quiver.size(); ++v)
            if (!s.quiver.vertex(v).frozen) variables.insert(s.vars[v].key());
        if (s.quiver.is_acyclic()) ++acyclic;
        return true;
    };

    admit(start);
    queue.push_back(start);
    while (!queue.empty()) {
        Seed s = std::move(queue.front());
        queue.pop_front();
        for (const auto& v : s.quiver.vertices()) {
            if (v.frozen) continue;
            Seed next = mutate_seed(s, v.id);
            if (admit(next)) queue.push_back(std::move(next));
        }
    }

    ExploreCounts c;
    c.variables = static_cast<long long>(variables.size());
    c.seeds = static_cast<long long>(seen.size());
    c.acyclic_seeds = acyclic;
    return c;
}

}  // namespace postnikov
