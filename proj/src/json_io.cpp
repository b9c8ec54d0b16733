#include "postnikov/json_io.hpp"

#include <climits>
#include <map>
#include <sstream>

namespace postnikov {

json to_json(const BoundedAffinePermutation& w) {
    return json{{"n", w.n()}, {"k", w.k()}, {"window", w.window()}};
}

BoundedAffinePermutation permutation_from_json(const json& j) {
    auto w = BoundedAffinePermutation::validate(j.at("window").get<std::vector<int>>());
    if (j.contains("k") && j.at("k").get<int>() != w.k())
        throw BadInput("stated k disagrees with the window");
    if (j.contains("n") && j.at("n").get<int>() != w.n())
        throw BadInput("stated n disagrees with the window");
    return w;
}

json to_json(const IceQuiver& q) {
    json verts = json::array();
    for (const auto& v : q.vertices()) verts.push_back({{"id", v.id}, {"frozen", v.frozen}});
    json arrows = json::array();
    for (const auto& a : q.arrows())
        arrows.push_back({{"from", a.from}, {"to", a.to}, {"mult", a.mult}});
    return json{{"vertices", verts}, {"arrows", arrows}};
}

IceQuiver quiver_from_json(const json& j) {
    std::vector<QuiverVertex> verts;
    for (const auto& v : j.at("vertices"))
        verts.push_back({v.at("id").get<std::string>(), v.value("frozen", false)});
    std::vector<Arrow> arrows;
    for (const auto& a : j.at("arrows"))
        arrows.push_back({a.at("from").get<std::string>(), a.at("to").get<std::string>(),
                          a.value("mult", 1)});
    return IceQuiver::make(std::move(verts), arrows);
}

// ---------------------------------------------------------------------------
// plabic graphs

struct PlabicAccess {
    static json emit(const PlabicGraph& g) {
        json verts = json::array();
        const auto& slots = g.vertex_slots();
        for (size_t v = 0; v < slots.size(); ++v)
            verts.push_back(
                {{"id", "v" + std::to_string(v)},
                 {"color", slots[v].color == PlabicGraph::Color::Black ? "black" : "white"}});
        json legs = json::array();
        json rot = json::object();
        // Half-edge ids are "e<k>a"/"e<k>b"; boundary_legs lists the leg edge
        // ids in boundary order, which pins the unpaired half-edges.
        for (int j = 1; j <= g.boundary_count(); ++j) legs.push_back("e" + std::to_string(leg(g, j)));
        for (size_t v = 0; v < slots.size(); ++v) {
            json r = json::array();
            for (int d : slots[v].rot)
                r.push_back("e" + std::to_string(d / 2) + (d % 2 ? "b" : "a"));
            rot["v" + std::to_string(v)] = r;
        }
        return json{{"n", g.boundary_count()},
                    {"vertices", verts},
                    {"boundary_legs", legs},
                    {"rotation", rot}};
    }

    static int leg(const PlabicGraph& g, int j);
    static PlabicGraph parse(const json& j);
};

int PlabicAccess::leg(const PlabicGraph& g, int j) { return g.boundary_leg_[j - 1]; }

PlabicGraph PlabicAccess::parse(const json& j) {
    PlabicGraph g;
    g.n_ = j.at("n").get<int>();
    const auto& verts = j.at("vertices");
    std::map<std::string, int> vid;
    for (const auto& v : verts) {
        const std::string id = v.at("id").get<std::string>();
        const std::string color = v.at("color").get<std::string>();
        if (color != "black" && color != "white") throw BadInput("bad color");
        vid[id] = static_cast<int>(g.verts_.size());
        g.verts_.push_back({color == "black" ? PlabicGraph::Color::Black
                                             : PlabicGraph::Color::White,
                            true,
                            {}});
    }
    auto parse_dart = [&](const std::string& h) {
        if (h.size() < 2 || h[0] != 'e') throw BadInput("bad half-edge id " + h);
        const char side = h.back();
        if (side != 'a' && side != 'b') throw BadInput("bad half-edge id " + h);
        const int e = std::stoi(h.substr(1, h.size() - 2));
        return 2 * e + (side == 'b');
    };
    int max_edge = -1;
    for (const auto& [vname, r] : j.at("rotation").items())
        for (const auto& h : r) max_edge = std::max(max_edge, parse_dart(h.get<std::string>()) / 2);
    for (const auto& leg : j.at("boundary_legs")) {
        const std::string id = leg.get<std::string>();
        max_edge = std::max(max_edge, std::stoi(id.substr(1)));
    }
    g.edges_.assign(max_edge + 1, {INT_MIN, INT_MIN});
    for (const auto& [vname, r] : j.at("rotation").items()) {
        auto it = vid.find(vname);
        if (it == vid.end()) throw BadInput("rotation for unknown vertex " + vname);
        for (const auto& h : r) {
            const int d = parse_dart(h.get<std::string>());
            g.verts_[it->second].rot.push_back(d);
            g.edges_[d / 2][d % 2] = it->second;
        }
    }
    g.boundary_leg_.clear();
    for (const auto& leg : j.at("boundary_legs")) {
        const int e = std::stoi(leg.get<std::string>().substr(1));
        const int pos = static_cast<int>(g.boundary_leg_.size()) + 1;
        if (g.edges_[e][0] == INT_MIN)
            g.edges_[e][0] = -pos;
        else if (g.edges_[e][1] == INT_MIN)
            g.edges_[e][1] = -pos;
        else
            throw BadInput("leg edge already fully attached");
        g.boundary_leg_.push_back(e);
    }
    if (static_cast<int>(g.boundary_leg_.size()) != g.n_)
        throw BadInput("boundary_legs must list n edges");
    g.check_valid();
    return g;
}

json to_json(const PlabicGraph& g) { return PlabicAccess::emit(g); }
PlabicGraph plabic_from_json(const json& j) { return PlabicAccess::parse(j); }

// ---------------------------------------------------------------------------
// certificates

namespace {

const char* case_name(CaseStep::Kind k) {
    switch (k) {
        case CaseStep::Kind::Base: return "Base";
        case CaseStep::Kind::Lollipop: return "Lollipop";
        case CaseStep::Kind::ShortArc: return "ShortArc";
        case CaseStep::Kind::BridgeCover: return "BridgeCover";
        case CaseStep::Kind::Conjugate: return "Conjugate";
    }
    return "?";
}

CaseStep::Kind case_kind(const std::string& s) {
    if (s == "Base") return CaseStep::Kind::Base;
    if (s == "Lollipop") return CaseStep::Kind::Lollipop;
    if (s == "ShortArc") return CaseStep::Kind::ShortArc;
    if (s == "BridgeCover") return CaseStep::Kind::BridgeCover;
    if (s == "Conjugate") return CaseStep::Kind::Conjugate;
    throw BadInput("unknown case tag " + s);
}

json node_to_json(const LouiseNode& n) {
    json j{{"window", n.window}, {"case", case_name(n.kind)}};
    if (n.kind != CaseStep::Kind::Base) j["i"] = n.i;
    if (n.kind == CaseStep::Kind::BridgeCover) {
        j["scenario"] = n.scenario;
        j["x"] = n.x;
        j["y"] = n.y;
    }
    json children = json::array();
    for (const auto& c : n.children) children.push_back(node_to_json(*c));
    j["children"] = children;
    return j;
}

std::unique_ptr<LouiseNode> node_from_json(const json& j) {
    auto n = std::make_unique<LouiseNode>();
    n->window = j.at("window").get<std::vector<int>>();
    n->kind = case_kind(j.at("case").get<std::string>());
    n->i = j.value("i", 0);
    n->scenario = j.value("scenario", 0);
    n->x = j.value("x", "");
    n->y = j.value("y", "");
    for (const auto& c : j.at("children")) n->children.push_back(node_from_json(c));
    return n;
}

json qnode_to_json(const QuiverLouiseNode& n) {
    switch (n.kind) {
        case QuiverLouiseNode::Kind::Edgeless:
            return json{{"type", "edgeless"}};
        case QuiverLouiseNode::Kind::MutateStep: {
            json j{{"type", "mutate"}, {"vertex", n.vertex}};
            j["child"] = qnode_to_json(*n.children[0]);
            return j;
        }
        case QuiverLouiseNode::Kind::CoverStep: {
            json j{{"type", "cover"}, {"s", n.s}, {"t", n.t}};
            json ch = json::array();
            for (const auto& c : n.children) ch.push_back(qnode_to_json(*c));
            j["children"] = ch;
            return j;
        }
    }
    throw InternalError("unreachable");
}

std::unique_ptr<QuiverLouiseNode> qnode_from_json(const json& j) {
    auto n = std::make_unique<QuiverLouiseNode>();
    const std::string type = j.at("type").get<std::string>();
    if (type == "edgeless") {
        n->kind = QuiverLouiseNode::Kind::Edgeless;
    } else if (type == "mutate") {
        n->kind = QuiverLouiseNode::Kind::MutateStep;
        n->vertex = j.at("vertex").get<std::string>();
        n->children.push_back(qnode_from_json(j.at("child")));
    } else if (type == "cover") {
        n->kind = QuiverLouiseNode::Kind::CoverStep;
        n->s = j.at("s").get<std::string>();
        n->t = j.at("t").get<std::string>();
        for (const auto& c : j.at("children")) n->children.push_back(qnode_from_json(c));
        if (n->children.size() != 3) throw BadInput("cover step needs three children");
    } else {
        throw BadInput("unknown certificate node type " + type);
    }
    return n;
}

}  // namespace

json to_json(const LouiseCertificate& c) { return node_to_json(*c.root); }

LouiseCertificate certificate_from_json(const json& j) {
    LouiseCertificate c;
    c.root = node_from_json(j);
    return c;
}

json to_json(const QuiverLouiseCertificate& c) { return qnode_to_json(*c.root); }

QuiverLouiseCertificate quiver_certificate_from_json(const json& j) {
    QuiverLouiseCertificate c;
    c.root = qnode_from_json(j);
    return c;
}

BoundedAffinePermutation parse_window(const std::string& text) {
    std::vector<int> win;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        try {
            win.push_back(std::stoi(tok));
        } catch (const std::exception&) {
            throw BadInput("window entry '" + tok + "' is not an integer");
        }
    }
    return BoundedAffinePermutation::validate(win);
}

}  // namespace postnikov
