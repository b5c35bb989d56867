#include "treemate/bijections.hpp"

#include <algorithm>

namespace treemate {

std::vector<Dart> tree_contour_leaves(const CombinatorialMap& m, const std::set<EdgeId>& tree,
                                      Dart start) {
    if (tree.count(m.edge_of(start))) throw Error("tree contour: start dart lies on the tree");
    std::vector<Dart> out{start};
    Dart d = m.sigma(start);
    int guard = 0;
    while (d != start) {
        if (++guard > 4 * m.dart_count()) throw Error("tree contour: walk does not close");
        if (tree.count(m.edge_of(d))) {
            d = m.sigma(m.alpha(d));
        } else {
            out.push_back(d);
            d = m.sigma(d);
        }
    }
    return out;
}

std::vector<Dart> SpanningTreeMap::leaves() const {
    return tree_contour_leaves(map, tree_edges, root_leaf);
}

bool SpanningTreeMap::is_special() const {
    auto ls = leaves();
    return ls.size() >= 2 && map.alpha(root_leaf) == ls[1];
}

DecoratedMap SpanningTreeMap::decorated() const {
    return DecoratedMap{map, tree_edges, root_leaf, {}, {}, std::nullopt};
}

std::string SpanningTreeMap::canonical_string() const {
    return canonical_decorated_string(decorated());
}

namespace {

SpanningTreeMap spanning_tree_forward(const Walk& w, bool require_cubic) {
    if (!is_confined(w)) throw Error("spanning-tree bijection: walk not confined");
    for (const Step& s : w.steps) {
        bool vertical = s.dx == 0 && s.dy >= 0;
        bool oblique = (s.dx == 1 || s.dx == -1) && s.dy == -1;
        if (!vertical && !oblique)
            throw Error("spanning-tree bijection: step outside {(0,k),(-1,-1),(1,-1)}");
        if (require_cubic && !(s == Step{0, 1} || oblique))
            throw Error("rY bijection: step outside the rY alphabet");
    }
    if (w.start != Point{0, 0}) throw Error("spanning-tree bijection: walk must start at the origin");
    Point end = w.end();
    MateOptions opts;
    if (end == Point{0, 0}) {
        opts.boundary = BoundaryKind::Closed;
    } else if (end == Point{2, 0}) {
        opts.boundary = BoundaryKind::Paired;
        opts.pairing = {{0, 1}, {2, 3}}; // bottom side with the lower unmatched
                                         // up, upper one with the top side
    } else {
        throw Error("spanning-tree bijection: walk must end at (0,0) or (2,0)");
    }
    MatedMap mm = mate(w, ContractionRule::identify_uz(), opts);
    CombinatorialMap dual = mm.map.dual();

    SpanningTreeMap out{std::move(dual), {}, mm.map.root()};
    for (Dart e = 1; e <= out.map.dart_count(); ++e) {
        if (out.map.edge_of(e) != e) continue;
        if (e == mm.bottom_side_edge || e == mm.top_side_edge) continue;
        bool has_left = false;
        for (const PicEdge& pe : mm.members(e))
            if (pe.kind == PicKind::LeftEdge) has_left = true;
        if (!has_left) out.tree_edges.insert(e);
    }
    if (!validate_spanning_tree(out.map, out.tree_edges))
        throw Error("spanning-tree bijection: cut edges do not leave a spanning tree");
    if (require_cubic)
        for (int v = 0; v < out.map.vertex_count(); ++v)
            if (out.map.degree_of_vertex(v) != 3)
                throw Error("rY bijection: image is not cubic");
    bool special = out.is_special();
    if ((end == Point{0, 0}) != special)
        throw Error("spanning-tree bijection: specialness does not match the endpoint");
    return out;
}

struct Reconstruction {
    const SpanningTreeMap& m;
    std::vector<int> horizontal;  // dx per oblique step, path order
    std::size_t next_h = 0;
    std::vector<Step> steps;

    void visit(Dart arrival) {
        int deg = m.map.degree_of_vertex(m.map.vertex_of(arrival));
        int k = deg - 2;
        steps.push_back({0, k});
        // slots in reverse rotation order, a down step between consecutive ones
        std::vector<Dart> slots;
        Dart d = arrival;
        for (int i = 0; i + 1 < deg; ++i) {
            d = m.map.sigma(d);
            slots.push_back(d);
        }
        std::reverse(slots.begin(), slots.end());
        for (std::size_t i = 0; i < slots.size(); ++i) {
            if (i) {
                if (next_h >= horizontal.size())
                    throw Error("spanning-tree inverse: leaf pairing out of step with the tree");
                steps.push_back({horizontal[next_h++], -1});
            }
            Dart s = slots[i];
            if (m.tree_edges.count(m.map.edge_of(s))) visit(m.map.alpha(s));
        }
    }
};

Walk spanning_tree_inverse(const SpanningTreeMap& m, const AlphabetRef& alphabet) {
    if (m.tree_edges.count(m.map.edge_of(m.root_leaf)))
        throw Error("spanning-tree inverse: root leaf lies on the tree");
    if (!validate_spanning_tree(m.map, m.tree_edges))
        throw Error("spanning-tree inverse: decoration is not a complete spanning tree");

    auto ls = m.leaves();
    const int L = static_cast<int>(ls.size());
    std::vector<int> pos_of(static_cast<std::size_t>(m.map.dart_count()) + 1, 0);
    for (int i = 0; i < L; ++i) pos_of[static_cast<std::size_t>(ls[static_cast<std::size_t>(i)])] = i + 1;
    auto pair_of = [&](int pos) {
        Dart d = ls[static_cast<std::size_t>(pos - 1)];
        return pos_of[static_cast<std::size_t>(m.map.alpha(d))];
    };

    bool special = pair_of(1) == 2;
    if (!special) {
        int q = pair_of(1), p = pair_of(2);
        if (p <= 2 || q <= 2 || p >= q)
            throw Error("spanning-tree inverse: boundary pairing is not in the expected order");
    }
    // horizontal word in path order: scan leaves last to first, skipping the
    // root and top slots; closing pieces and boundary-paired pieces are ups.
    std::vector<int> horizontal;
    for (int pos = L; pos >= 3; --pos) {
        int q = pair_of(pos);
        if (q <= 2)
            horizontal.push_back(+1); // paired with a rectangle side: unmatched up
        else if (q < pos)
            horizontal.push_back(+1);
        else
            horizontal.push_back(-1);
    }

    Reconstruction rec{m, std::move(horizontal), 0, {}};
    rec.visit(m.root_leaf);
    if (rec.next_h != rec.horizontal.size())
        throw Error("spanning-tree inverse: horizontal word not fully consumed");

    Walk w{alphabet, {0, 0}, std::move(rec.steps)};
    for (const Step& s : w.steps)
        if (!alphabet->index_of(s))
            throw Error("spanning-tree inverse: reconstructed step outside the alphabet");
    if (!is_confined(w)) throw Error("spanning-tree inverse: reconstructed walk not confined");
    Point end = w.end();
    if (end != Point{0, 0} && end != Point{2, 0})
        throw Error("spanning-tree inverse: reconstructed walk has a bad endpoint");
    return w;
}

} // namespace

SpanningTreeMap ry_forward(const Walk& w) { return spanning_tree_forward(w, true); }

Walk ry_inverse(const SpanningTreeMap& m) {
    for (int v = 0; v < m.map.vertex_count(); ++v)
        if (m.map.degree_of_vertex(v) != 3) throw Error("rY inverse: map is not cubic");
    return spanning_tree_inverse(m, StepAlphabet::family("rY"));
}

SpanningTreeMap lukasiewicz_forward(const Walk& w) { return spanning_tree_forward(w, false); }

Walk lukasiewicz_inverse(const SpanningTreeMap& m, const AlphabetRef& alphabet) {
    return spanning_tree_inverse(m, alphabet);
}

} // namespace treemate
