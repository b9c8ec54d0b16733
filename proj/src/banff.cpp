#include "postnikov/banff.hpp"

#include <deque>
#include <map>

namespace postnikov {

namespace {

struct Searcher {
    BanffLimits limits;
    std::set<std::string> known_failures;  // canonical forms proven coverless
    long long top_explored = 0;

    struct Attempt {
        bool found = false;
        bool exhausted = true;  // failure is definitive, not limit-driven
        std::unique_ptr<QuiverLouiseNode> node;
    };

    Attempt run(const IceQuiver& q, int depth, bool top_level) {
        Attempt out;
        if (q.is_edgeless()) {
            out.found = true;
            out.node = std::make_unique<QuiverLouiseNode>();
            out.node->kind = QuiverLouiseNode::Kind::Edgeless;
            return out;
        }
        if (depth <= 0) {
            out.exhausted = false;
            return out;
        }

        // BFS over the mutation class, covers before mutations.
        struct Entry {
            IceQuiver q;
            int parent;        // index into entries
            std::string mutated_at;
        };
        std::vector<Entry> entries;
        std::set<std::string> seen;
        std::deque<int> queue;
        entries.push_back({q, -1, ""});
        seen.insert(q.canonical_form());
        queue.push_back(0);
        bool limited = false;
        long long explored = 0;

        while (!queue.empty()) {
            const int at = queue.front();
            queue.pop_front();
            ++explored;
            if (top_level) top_explored = explored;
            const IceQuiver cur = entries[at].q;

            const std::string canon = cur.canonical_form();
            if (!known_failures.count(canon)) {
                bool all_covers_exhausted = true;
                for (const Arrow& a : cur.arrows()) {
                    if (cur.arrow_in_biinfinite_path(a.from, a.to)) continue;
                    Attempt cs = run(cur.delete_vertex(a.from), depth - 1, false);
                    Attempt ct = cs.found ? run(cur.delete_vertex(a.to), depth - 1, false)
                                          : Attempt{};
                    Attempt cst =
                        cs.found && ct.found
                            ? run(cur.delete_vertex(a.from).delete_vertex(a.to), depth - 1, false)
                            : Attempt{};
                    if (cs.found && ct.found && cst.found) {
                        auto cover = std::make_unique<QuiverLouiseNode>();
                        cover->kind = QuiverLouiseNode::Kind::CoverStep;
                        cover->s = a.from;
                        cover->t = a.to;
                        cover->children.push_back(std::move(cs.node));
                        cover->children.push_back(std::move(ct.node));
                        cover->children.push_back(std::move(cst.node));
                        // Wrap in the mutation chain leading from q to cur.
                        std::vector<std::string> chain;
                        for (int p = at; entries[p].parent >= 0; p = entries[p].parent)
                            chain.push_back(entries[p].mutated_at);
                        std::unique_ptr<QuiverLouiseNode> node = std::move(cover);
                        for (const auto& v : chain) {
                            auto m = std::make_unique<QuiverLouiseNode>();
                            m->kind = QuiverLouiseNode::Kind::MutateStep;
                            m->vertex = v;
                            m->children.push_back(std::move(node));
                            node = std::move(m);
                        }
                        out.found = true;
                        out.node = std::move(node);
                        return out;
                    }
                    if (!cs.exhausted || !ct.exhausted || !cst.exhausted)
                        all_covers_exhausted = false;
                }
                if (all_covers_exhausted)
                    known_failures.insert(canon);
                else
                    limited = true;
            }

            for (const auto& v : cur.vertices()) {
                if (v.frozen) continue;
                IceQuiver next = cur.mutate(v.id);
                const std::string nc = next.canonical_form();
                if (seen.count(nc)) continue;
                if (static_cast<long long>(seen.size()) >= limits.class_size) {
                    limited = true;
                    continue;
                }
                seen.insert(nc);
                entries.push_back({std::move(next), at, v.id});
                queue.push_back(static_cast<int>(entries.size()) - 1);
            }
        }
        out.exhausted = !limited;
        return out;
    }
};

}  // namespace

BanffResult banff_search(const IceQuiver& mutable_quiver, const BanffLimits& limits) {
    IceQuiver q = mutable_quiver.mutable_part();
    Searcher s;
    s.limits = limits;
    Searcher::Attempt a = s.run(q, limits.depth, true);
    BanffResult r;
    r.explored = s.top_explored;
    if (a.found) {
        r.status = BanffStatus::Found;
        r.certificate.root = std::move(a.node);
    } else {
        r.status = a.exhausted ? BanffStatus::NotFound : BanffStatus::LimitExceeded;
    }
    return r;
}

bool check_quiver_certificate(const IceQuiver& q, const QuiverLouiseNode& node) {
    switch (node.kind) {
        case QuiverLouiseNode::Kind::Edgeless:
            return q.is_edgeless();
        case QuiverLouiseNode::Kind::MutateStep: {
            if (node.children.size() != 1 || q.index_of(node.vertex) < 0) return false;
            return check_quiver_certificate(q.mutate(node.vertex), *node.children[0]);
        }
        case QuiverLouiseNode::Kind::CoverStep: {
            if (node.children.size() != 3) return false;
            const int s = q.index_of(node.s), t = q.index_of(node.t);
            if (s < 0 || t < 0 || q.b(s, t) <= 0) return false;
            if (q.arrow_in_biinfinite_path(node.s, node.t)) return false;
            return check_quiver_certificate(q.delete_vertex(node.s), *node.children[0]) &&
                   check_quiver_certificate(q.delete_vertex(node.t), *node.children[1]) &&
                   check_quiver_certificate(q.delete_vertex(node.s).delete_vertex(node.t),
                                            *node.children[2]);
        }
    }
    return false;
}

}  // namespace postnikov
