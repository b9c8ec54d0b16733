#include <algorithm>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "postnikov/quiver.hpp"

namespace postnikov {

namespace {

// Individualization-refinement canonical labeling. Vertices carry an initial
// color (frozen flag plus optional user color); classes are refined by the
// multiset of (entry, neighbor class) signatures until stable, then the first
// non-singleton class is branched. The canonical key is the minimum
// serialization over all branches. Adequate for the quiver sizes in scope.
class Canonicalizer {
public:
    Canonicalizer(const IceQuiver& q, const std::vector<std::string>& colors) : q_(q) {
        const int n = q.size();
        init_class_.resize(n);
        std::vector<std::pair<std::string, int>> keyed(n);
        for (int v = 0; v < n; ++v) {
            std::string key = (q.vertex(v).frozen ? "F|" : "M|");
            if (!colors.empty()) key += colors[v];
            keyed[v] = {key, v};
        }
        std::vector<std::string> sorted_keys;
        for (auto& kv : keyed) sorted_keys.push_back(kv.first);
        std::sort(sorted_keys.begin(), sorted_keys.end());
        sorted_keys.erase(std::unique(sorted_keys.begin(), sorted_keys.end()), sorted_keys.end());
        for (int v = 0; v < n; ++v)
            init_class_[v] = static_cast<int>(
                std::lower_bound(sorted_keys.begin(), sorted_keys.end(), keyed[v].first) -
                sorted_keys.begin());
    }

    std::string run() {
        best_.clear();
        search(init_class_);
        return best_;
    }

private:
    const IceQuiver& q_;
    std::vector<int> init_class_;
    std::string best_;

    std::vector<int> refine(std::vector<int> cls) const {
        const int n = q_.size();
        for (;;) {
            std::vector<std::pair<std::vector<long long>, int>> sigs(n);
            for (int v = 0; v < n; ++v) {
                std::vector<long long> s{cls[v]};
                std::vector<long long> nb;
                for (int u = 0; u < n; ++u)
                    if (q_.b(v, u) != 0)
                        nb.push_back(static_cast<long long>(q_.b(v, u)) * 10000 + cls[u]);
                std::sort(nb.begin(), nb.end());
                s.insert(s.end(), nb.begin(), nb.end());
                sigs[v] = {std::move(s), v};
            }
            std::vector<std::vector<long long>> uniq;
            for (auto& s : sigs) uniq.push_back(s.first);
            std::sort(uniq.begin(), uniq.end());
            uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
            std::vector<int> next(n);
            for (int v = 0; v < n; ++v)
                next[v] = static_cast<int>(
                    std::lower_bound(uniq.begin(), uniq.end(), sigs[v].first) - uniq.begin());
            if (next == cls) return cls;
            cls = std::move(next);
        }
    }

    void search(std::vector<int> cls) {
        cls = refine(std::move(cls));
        const int n = q_.size();
        // Find the first non-singleton class, scanning classes in order.
        int target_class = -1;
        {
            std::map<int, std::vector<int>> by_class;
            for (int v = 0; v < n; ++v) by_class[cls[v]].push_back(v);
            for (auto& [c, members] : by_class)
                if (members.size() > 1) {
                    target_class = c;
                    break;
                }
            if (target_class < 0) {
                consider(cls);
                return;
            }
            for (int v : by_class[target_class]) {
                std::vector<int> branched(n);
                // Renumber: v gets a class just below its old class.
                for (int u = 0; u < n; ++u) branched[u] = cls[u] * 2 + 1;
                branched[v] = cls[v] * 2;
                search(std::move(branched));
            }
        }
    }

    void consider(const std::vector<int>& cls) {
        const int n = q_.size();
        std::vector<int> order(n);
        for (int v = 0; v < n; ++v) order[cls[v]] = v;
        std::ostringstream os;
        for (int p = 0; p < n; ++p) {
            const int v = order[p];
            os << (q_.vertex(v).frozen ? 'F' : 'M') << init_class_[v] << ';';
        }
        os << '|';
        for (int p = 0; p < n; ++p)
            for (int qd = 0; qd < n; ++qd) os << q_.b(order[p], order[qd]) << ',';
        std::string key = os.str();
        if (best_.empty() || key < best_) best_ = key;
    }
};

}  // namespace

std::string IceQuiver::canonical_form() const { return canonical_form({}); }

std::string IceQuiver::canonical_form(const std::vector<std::string>& colors) const {
    if (size() == 0) return "empty";
    if (is_edgeless()) {
        // No arrows: the key is the sorted list of vertex attributes.
        std::vector<std::string> keys;
        for (int v = 0; v < size(); ++v) {
            std::string key = (vertex(v).frozen ? "F|" : "M|");
            if (!colors.empty()) key += colors[v];
            keys.push_back(std::move(key));
        }
        std::sort(keys.begin(), keys.end());
        std::string out = "edgeless:";
        for (const auto& k : keys) out += k + ";";
        return out;
    }
    Canonicalizer c(*this, colors);
    return c.run();
}

}  // namespace postnikov
