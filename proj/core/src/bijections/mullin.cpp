#include "treemate/bijections.hpp"

#include <algorithm>

namespace treemate {

DecoratedMap mullin_map(const Walk& w) {
    if (w.steps.empty()) throw Error("mullin: walk must be nonempty");
    for (const Step& s : w.steps)
        if (!(s.is_small() && s.is_straight()))
            throw Error("mullin: walk must use straight unit steps");
    if (w.start != Point{0, 0} || w.end() != Point{0, 0})
        throw Error("mullin: walk must start and end at the origin");
    if (!is_confined(w)) throw Error("mullin: walk not confined");

    MatedMap mm = mate(w, ContractionRule::identify_uz(), {});
    const int n = static_cast<int>(w.steps.size());
    Hamiltonian ham;
    auto faces = mm.map.faces();
    for (int i = 0; i < n; ++i) {
        const FaceInfo& fi = mm.face_info[static_cast<std::size_t>(i)];
        const auto& cyc = faces[static_cast<std::size_t>(fi.face_index)];
        ham.faces.push_back(*std::min_element(cyc.begin(), cyc.end()));
        EdgeId e = (i + 1 < n) ? mm.map.edge_of(mm.dart_of_rung(i + 1)) : mm.bottom_side_edge;
        ham.edges.push_back(e);
    }
    DecoratedMap dm = mm.decorated();
    dm.hamiltonian = std::move(ham);
    return dm;
}

Walk mullin_walk(const DecoratedMap& tri) {
    const CombinatorialMap& m = tri.map;
    if (!tri.hamiltonian) throw Error("mullin inverse: missing the dual Hamiltonian cycle");
    const Hamiltonian& ham = *tri.hamiltonian;
    if (!validate_hamiltonian(m, ham)) throw Error("mullin inverse: invalid Hamiltonian decoration");
    auto faces = m.faces();
    for (const auto& f : faces)
        if (f.size() != 3) throw Error("mullin inverse: map is not a triangulation");

    const std::size_t n = ham.faces.size();
    std::set<EdgeId> crossed(ham.edges.begin(), ham.edges.end());
    if (crossed.size() != n) throw Error("mullin inverse: Hamiltonian cycle repeats an edge");

    // the non-crossed edges must form two disjoint trees covering all vertices
    {
        int v = m.vertex_count();
        std::vector<int> parent(static_cast<std::size_t>(v));
        for (int i = 0; i < v; ++i) parent[static_cast<std::size_t>(i)] = i;
        auto find = [&](int x) {
            while (parent[static_cast<std::size_t>(x)] != x)
                x = parent[static_cast<std::size_t>(x)] =
                    parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            return x;
        };
        int components = v;
        for (Dart e = 1; e <= m.dart_count(); ++e) {
            if (m.edge_of(e) != e || crossed.count(e)) continue;
            int a = find(m.vertex_of(e)), b = find(m.vertex_of(m.alpha(e)));
            if (a == b) throw Error("mullin inverse: non-crossed edges contain a cycle");
            parent[static_cast<std::size_t>(a)] = b;
            --components;
        }
        if (components != 2) throw Error("mullin inverse: non-crossed edges do not form two trees");
    }

    // walk the cycle; each triangle has one side off the cycle, read its
    // tree and visit parity
    std::map<EdgeId, int> visits;
    std::vector<Step> steps;
    for (std::size_t i = 0; i < n; ++i) {
        EdgeId entry = ham.edges[(i + n - 1) % n];
        EdgeId exit = ham.edges[i];
        int fi = m.face_of(ham.faces[i]);
        const auto& cyc = faces[static_cast<std::size_t>(fi)];
        // rotate the face cycle to start at the entry edge's dart
        int start = -1;
        for (int k = 0; k < 3; ++k)
            if (m.edge_of(cyc[static_cast<std::size_t>(k)]) == entry) start = k;
        if (start < 0) throw Error("mullin inverse: entry edge not on the face");
        Dart d1 = cyc[static_cast<std::size_t>((start + 1) % 3)];
        Dart d2 = cyc[static_cast<std::size_t>((start + 2) % 3)];
        EdgeId e1 = m.edge_of(d1), e2 = m.edge_of(d2);
        bool horizontal; // side after the exit in counterclockwise face order = left tree
        EdgeId side;
        if (e1 == exit && e2 != exit) {
            side = e2;
            horizontal = true;
        } else if (e2 == exit && e1 != exit) {
            side = e1;
            horizontal = false;
        } else {
            throw Error("mullin inverse: exit edge not on the face");
        }
        if (crossed.count(side)) throw Error("mullin inverse: third side lies on the cycle");
        int visit = ++visits[side];
        if (visit > 2) throw Error("mullin inverse: tree side visited more than twice");
        int sign = visit == 1 ? 1 : -1;
        steps.push_back(horizontal ? Step{sign, 0} : Step{0, sign});
    }
    Walk out{StepAlphabet::family("straight"), {0, 0}, std::move(steps)};
    if (!is_confined(out) || out.end() != Point{0, 0})
        throw Error("mullin inverse: reconstructed walk is not a closed confined walk");
    return out;
}

} // namespace treemate
