#include "postnikov/construct.hpp"

#include <set>

namespace postnikov {

namespace {

long long measure(const BoundedAffinePermutation& w) {
    // Lexicographic (n, k(n-k) - length) packed into one integer.
    const long long room = static_cast<long long>(w.k()) * (w.n() - w.k()) - w.length();
    return static_cast<long long>(w.n()) * 1000000 + room;
}

bool trips_cross(const PlabicGraph& g, int from_a, int from_b) {
    std::set<int> ea;
    for (int d : g.trip(from_a).darts) ea.insert(d / 2);
    for (int d : g.trip(from_b).darts)
        if (ea.count(d / 2)) return true;
    return false;
}

}  // namespace

PlabicGraph add_bridge_surgeries(const PlabicGraph& g, int i, BridgeVariant variant,
                                 CoverFaces* cover_out) {
    const BoundedAffinePermutation u = g.trip_permutation();  // u = s_i v s_i
    const int n = u.n();
    auto residue = [&](long long a, long long b) { return ((a - b) % n + n) % n == 0; };
    // Recover v's data: with the congruence hypotheses, conjugation by s_i
    // fixes all four values, so they can be read off u directly.
    const long long a = u.inverse(i + 1), b = u.inverse(i);
    const long long c = u.apply(i + 1), d = u.apply(i);
    for (long long x : {a, b, c, d})
        if (residue(x, i) || residue(x, i + 1))
            throw HypothesisViolated("value collides with {i, i+1} mod n");
    if (!(a < b)) throw HypothesisViolated("v^-1(i) < v^-1(i+1) fails");
    if (!(c < d)) throw HypothesisViolated("v(i) < v(i+1) fails");
    // Nested strands of the diagram must not cross.
    const int pos_a = ((static_cast<int>(a) - 1) % n + n) % n + 1;
    const int pos_b = ((static_cast<int>(b) - 1) % n + n) % n + 1;
    if (trips_cross(g, pos_a, pos_b))
        throw HypothesisViolated("strands into i, i+1 cross");
    if (trips_cross(g, ((i - 1) % n + n) % n + 1, (i % n) + 1))
        throw HypothesisViolated("strands out of i, i+1 cross");

    switch (variant) {
        case BridgeVariant::SiV:  // s_i v = u s_i
            return g.add_bridge(i, false).cleanup_moves();
        case BridgeVariant::VSi:  // v s_i = s_i u
            return g.add_bridge(i, true).cleanup_moves();
        case BridgeVariant::V: {  // v = s_i u s_i
            PlabicGraph raw = g.add_bridge(i, false);
            const int first_bridge = raw.edge_ids().back();
            raw = raw.add_bridge(i, true);
            if (cover_out) {
                auto [x, y] = raw.faces_beside_bicolored_edge(first_bridge);
                cover_out->x = x;
                cover_out->y = y;
                cover_out->scenario = 2;
                for (const auto& f : raw.faces())
                    if (f.id == y && !f.boundary) cover_out->scenario = 1;
            }
            return raw.cleanup_moves();
        }
    }
    throw InternalError("unreachable");
}

CaseStep classify(const BoundedAffinePermutation& w) {
    const int n = w.n();
    CaseStep step;
    if (n == 1) {
        step.kind = CaseStep::Kind::Base;
        return step;
    }
    for (int i = 1; i <= n; ++i) {
        if (w.is_white_lollipop(i) || w.is_black_lollipop(i)) {
            step.kind = CaseStep::Kind::Lollipop;
            step.i = i;
            auto [wp, color] = remove_lollipop(w, i);
            step.color = color;
            step.build_child = wp.window();
            step.cert_children = {wp.window()};
            return step;
        }
    }
    for (int i = 1; i <= n; ++i) {
        if (w.apply(i) == i + 1) {
            // Short strand i -> i+1; w = s_i (s_i w) and s_i w has a white
            // lollipop at i.
            step.kind = CaseStep::Kind::ShortArc;
            step.i = i;
            step.side = ArcSide::Left;
            step.build_child = multiply_left(w, {i});
            step.cert_children = {step.build_child};
            return step;
        }
        if (w.apply(i + 1) == i + n) {
            // Throw n-1 at position i+1; w = (w s_i) s_i and w s_i has a
            // black lollipop at i.
            step.kind = CaseStep::Kind::ShortArc;
            step.i = i;
            step.side = ArcSide::Right;
            step.build_child = multiply_right(w, {i});
            step.cert_children = {step.build_child};
            return step;
        }
    }
    // All throws lie in [2, n-2] now (so n >= 4), which delivers the
    // congruence hypotheses of the cover surgery for free.
    const auto [t, i] = w.shortest_throw();
    POSTNIKOV_CHECK(t >= 2 && t <= n - 2, "case ordering left a stray throw");
    step.i = i;
    const int a = w.inverse(i), b = w.inverse(i + 1);
    POSTNIKOV_CHECK(a != b, "inverse collision");
    if (a < b) {
        // Cover case: recurse on s_i w s_i (length + 2); the certificate
        // covers through s_i w (length + 1) and s_i w s_i.
        step.kind = CaseStep::Kind::BridgeCover;
        const auto si_w = BoundedAffinePermutation::validate(multiply_left(w, {i}));
        const auto si_w_si = BoundedAffinePermutation::validate(multiply_right(si_w, {i}));
        step.build_child = si_w_si.window();
        step.cert_children = {si_w.window(), si_w_si.window()};
    } else {
        // Conjugation case: w and s_i w s_i have the same exchange type; the
        // diagram for w is one bridge over the diagram for w s_i (length + 1).
        step.kind = CaseStep::Kind::Conjugate;
        const auto w_si = BoundedAffinePermutation::validate(multiply_right(w, {i}));
        const auto si_w_si = BoundedAffinePermutation::validate(multiply_left(w_si, {i}));
        step.build_child = w_si.window();
        step.cert_children = {si_w_si.window()};
    }
    return step;
}

PlabicGraph construct_diagram(const BoundedAffinePermutation& w, CoverFaces* cover_out) {
    const CaseStep step = classify(w);
    PlabicGraph out = [&]() -> PlabicGraph {
        switch (step.kind) {
            case CaseStep::Kind::Base:
                return PlabicGraph::lollipop(w.k() == 0 ? PlabicGraph::Color::White
                                                        : PlabicGraph::Color::Black);
            case CaseStep::Kind::Lollipop: {
                const auto child = BoundedAffinePermutation::validate(step.build_child);
                POSTNIKOV_CHECK(measure(child) < measure(w), "measure must drop");
                PlabicGraph g = construct_diagram(child);
                return g.add_lollipop(step.i, *step.color == LollipopColor::White
                                                  ? PlabicGraph::Color::White
                                                  : PlabicGraph::Color::Black);
            }
            case CaseStep::Kind::ShortArc: {
                const auto child = BoundedAffinePermutation::validate(step.build_child);
                POSTNIKOV_CHECK(measure(child) < measure(w), "measure must drop");
                PlabicGraph g = construct_diagram(child);
                // Left flavor: w = s_i child, a white-at-i bridge.
                // Right flavor: w = child s_i, a black-at-i bridge.
                return g.add_bridge(step.i, *step.side == ArcSide::Left).cleanup_moves();
            }
            case CaseStep::Kind::Conjugate: {
                const auto child = BoundedAffinePermutation::validate(step.build_child);
                POSTNIKOV_CHECK(measure(child) < measure(w), "measure must drop");
                PlabicGraph g = construct_diagram(child);
                return add_bridge_surgeries(g, step.i, BridgeVariant::SiV);  // w = child s_i
            }
            case CaseStep::Kind::BridgeCover: {
                const auto child = BoundedAffinePermutation::validate(step.build_child);
                POSTNIKOV_CHECK(measure(child) < measure(w), "measure must drop");
                PlabicGraph g = construct_diagram(child);
                // w = s_i child s_i, the two-crossing extension.
                return add_bridge_surgeries(g, step.i, BridgeVariant::V, cover_out);
            }
        }
        throw InternalError("unreachable");
    }();
    // The construction is only trusted because this holds at every level.
    POSTNIKOV_CHECK(out.trip_permutation() == w, "constructed diagram has the wrong trips");
    return out;
}

}  // namespace postnikov
