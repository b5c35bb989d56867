#include "treemate/bijections.hpp"

#include <algorithm>

namespace treemate {

DecoratedMap BipolarMap::decorated() const {
    return DecoratedMap{map, std::nullopt, std::nullopt, {}, orientation, std::nullopt};
}

BipolarMap kmsw_to_bipolar(const Walk& w) {
    for (const Step& s : w.steps) {
        bool up_diag = s == Step{1, -1};
        bool nw = s.dx <= 0 && s.dy >= 0 && s.reach() > 0;
        if (!up_diag && !nw)
            throw Error("kmsw: step outside the set {(1,-1)} u {(-i,j), i,j >= 0}");
    }
    if (w.start.x != 0 || w.start.y < 0) throw Error("kmsw: walk must start on the y axis");
    Point end = w.end();
    if (end.y != 0 || end.x < 0) throw Error("kmsw: walk must end on the x axis");
    if (!is_confined(w)) throw Error("kmsw: walk not confined");

    MateOptions opts;
    opts.boundary = BoundaryKind::Open;
    opts.expand = [](const Step& s) { return !(s == Step{1, -1}) && s.reach() >= 2; };
    MatedMap mm = mate(w, ContractionRule::identify_uz(), opts);

    BipolarMap out{mm.map, {}, mm.external_face ? mm.external_face->face_index : -1};
    for (Dart e = 1; e <= out.map.dart_count(); ++e) {
        if (out.map.edge_of(e) != e) continue;
        Dart east = mm.east_dart(e);
        if (!east) throw Error("kmsw: edge without a coherent west-east direction");
        out.orientation[e] = east;
    }
    return out;
}

BipolarCheck validate_bipolar(const BipolarMap& m) {
    BipolarCheck c;
    const CombinatorialMap& g = m.map;
    int V = g.vertex_count();
    std::vector<int> indeg(static_cast<std::size_t>(V), 0), outdeg(static_cast<std::size_t>(V), 0);
    std::vector<std::vector<int>> kids(static_cast<std::size_t>(V));
    for (const auto& [e, tail] : m.orientation) {
        (void)e;
        int a = g.vertex_of(tail), b = g.vertex_of(g.alpha(tail));
        outdeg[static_cast<std::size_t>(a)]++;
        indeg[static_cast<std::size_t>(b)]++;
        kids[static_cast<std::size_t>(a)].push_back(b);
    }
    if (m.orientation.size() != static_cast<std::size_t>(g.edge_count())) return c;
    std::vector<int> deps = indeg, order;
    for (int v = 0; v < V; ++v)
        if (!deps[static_cast<std::size_t>(v)]) order.push_back(v);
    for (std::size_t i = 0; i < order.size(); ++i)
        for (int b : kids[static_cast<std::size_t>(order[i])])
            if (--deps[static_cast<std::size_t>(b)] == 0) order.push_back(b);
    c.acyclic = static_cast<int>(order.size()) == V;
    int sources = 0, sinks = 0, source = -1, sink = -1;
    for (int v = 0; v < V; ++v) {
        if (!indeg[static_cast<std::size_t>(v)]) {
            ++sources;
            source = v;
        }
        if (!outdeg[static_cast<std::size_t>(v)]) {
            ++sinks;
            sink = v;
        }
    }
    c.unique_source = sources == 1;
    c.unique_sink = sinks == 1;
    if (c.unique_source && c.unique_sink && m.external_face >= 0) {
        std::set<int> outer;
        auto faces = g.faces();
        for (Dart d : faces.at(static_cast<std::size_t>(m.external_face))) outer.insert(g.vertex_of(d));
        c.poles_on_outer = outer.count(source) && outer.count(sink);
    }
    return c;
}

std::vector<int> internal_face_degrees(const BipolarMap& m) {
    std::vector<int> out;
    auto faces = m.map.faces();
    for (int f = 0; f < static_cast<int>(faces.size()); ++f)
        if (f != m.external_face) out.push_back(static_cast<int>(faces[static_cast<std::size_t>(f)].size()));
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace treemate
