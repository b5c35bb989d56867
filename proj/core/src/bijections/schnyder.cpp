#include "treemate/bijections.hpp"

#include <algorithm>

namespace treemate {

DecoratedMap SchnyderWood::decorated() const {
    return DecoratedMap{map, std::nullopt, std::nullopt, colors, orientation, std::nullopt};
}

int SchnyderWood::external_face() const { return map.face_of(map.root()); }
int SchnyderWood::red_vertex() const { return map.vertex_of(map.root()); }
int SchnyderWood::blue_vertex() const { return map.vertex_of(map.alpha(map.root())); }

int SchnyderWood::green_vertex() const {
    auto faces = map.faces();
    for (Dart d : faces.at(static_cast<std::size_t>(external_face()))) {
        int v = map.vertex_of(d);
        if (v != red_vertex() && v != blue_vertex()) return v;
    }
    throw Error("schnyder: external face has no third corner");
}

SchnyderWood tandem_to_schnyder(const Walk& w) {
    auto sch = StepAlphabet::family("schnyder");
    if (w.steps.empty()) throw Error("schnyder: walk must be nonempty");
    std::string word;
    for (const Step& s : w.steps) {
        auto idx = sch->index_of(s);
        if (!idx) throw Error("schnyder: step outside the alphabet {(1,0),(-1,1),(0,-1)}");
        word.push_back(sch->letter_at(*idx));
    }
    if (word.find("bc") != std::string::npos)
        throw Error("schnyder: the pattern bc is forbidden");
    if (w.start != Point{0, 0} || w.end() != Point{1, 0})
        throw Error("schnyder: walk must run from (0,0) to (1,0)");
    if (!is_confined(w)) throw Error("schnyder: walk not confined");

    // mate in the reflected convention, where the letters read a=(0,1),
    // b=(1,-1), c=(-1,0): the blue right path is then the a/b subword
    Walk refl = reflect_diagonal(w);
    refl.alphabet = StepAlphabet::family("tandem");
    MateOptions opts;
    opts.boundary = BoundaryKind::Open;
    MatedMap mm = mate(refl, ContractionRule::identify_uz(), opts);

    if (!mm.diagram.left_matching.unmatched_ups.empty() ||
        !mm.diagram.left_matching.unmatched_downs.empty() ||
        !mm.diagram.right_matching.unmatched_downs.empty() ||
        mm.diagram.right_matching.unmatched_ups.size() != 1)
        throw Error("schnyder: unexpected boundary structure");
    const int last_a = mm.diagram.right_matching.unmatched_ups.front();

    SchnyderWood out{mm.map.with_root(mm.dart_of_right(last_a, true)), {}, {}};
    // blue: the contracted right path oriented toward its root, plus the
    // unmatched ascent of the last a as the external blue edge
    for (EdgeId e : mm.right_tree_edges) {
        out.colors[e] = Color::Blue;
        int up = 0;
        for (const PicEdge& pe : mm.members(e))
            if (pe.kind == PicKind::RightEdge && mm.diagram.right.step(pe.index) > 0) up = pe.index;
        if (!up) throw Error("schnyder: blue edge without an ascending member");
        out.orientation[e] = mm.dart_of_right(up, true);
    }
    EdgeId blue_ext = mm.map.edge_of(mm.dart_of_right(last_a));
    out.colors[blue_ext] = Color::Blue;
    out.orientation[blue_ext] = mm.dart_of_right(last_a, true);
    // red: the base of each c triangle, oriented west to east into the red
    // vertex side
    for (const FaceInfo& fi : mm.face_info) {
        if (refl.steps[static_cast<std::size_t>(fi.orig_step - 1)] != Step{-1, 0}) continue;
        EdgeId e = mm.map.edge_of(fi.bottom_dart);
        if (out.colors.count(e)) throw Error("schnyder: c-triangle base already colored");
        Dart east = mm.east_dart(e);
        if (!east) throw Error("schnyder: red edge without a west-east direction");
        out.colors[e] = Color::Red;
        out.orientation[e] = east;
    }
    // green: everything else, east to west; the rectangle's horizontal
    // sides stay uncolored
    for (Dart e = 1; e <= mm.map.dart_count(); ++e) {
        if (mm.map.edge_of(e) != e || out.colors.count(e)) continue;
        if (e == mm.bottom_side_edge || e == mm.top_side_edge) continue;
        Dart east = mm.east_dart(e);
        if (!east) throw Error("schnyder: green edge without a west-east direction");
        out.colors[e] = Color::Green;
        out.orientation[e] = mm.map.alpha(east);
    }
    return out;
}

Walk schnyder_to_tandem(const SchnyderWood& wood) {
    const CombinatorialMap& m = wood.map;
    Dart r = m.root();
    auto color_of = [&](Dart d) -> int {
        auto it = wood.colors.find(m.edge_of(d));
        return it == wood.colors.end() ? -1 : static_cast<int>(it->second);
    };
    auto incoming = [&](Dart d) {
        auto it = wood.orientation.find(m.edge_of(d));
        return it != wood.orientation.end() && it->second == m.alpha(d);
    };
    std::string word;
    std::set<EdgeId> ascended;
    const Dart start = m.sigma(m.alpha(r));
    Dart d = start;
    int guard = 0;
    do {
        if (++guard > 8 * m.dart_count()) throw Error("schnyder contour: walk does not close");
        if (color_of(d) == static_cast<int>(Color::Blue)) {
            EdgeId e = m.edge_of(d);
            if (ascended.count(e)) {
                word.push_back('b');
            } else {
                ascended.insert(e);
                word.push_back('a');
            }
            d = m.sigma(m.alpha(d));
        } else {
            if (color_of(d) == static_cast<int>(Color::Red) && incoming(d)) word.push_back('c');
            d = m.sigma(d);
        }
    } while (d != start);
    if (word.empty() || word.back() != 'b')
        throw Error("schnyder contour: missing the final descent");
    word.pop_back();
    Walk w = parse_walk_text(word, StepAlphabet::family("schnyder"));
    if (!is_confined(w) || w.end() != Point{1, 0})
        throw Error("schnyder contour: extracted word is not a tandem walk to (1,0)");
    return w;
}

namespace {

bool subgraph_is_tree(const CombinatorialMap& m, const std::set<EdgeId>& edges,
                      const std::set<int>& expected_vertices) {
    if (edges.empty()) return expected_vertices.size() <= 1;
    std::map<int, int> comp;
    int next = 0;
    auto id = [&](int v) {
        auto [it, fresh] = comp.emplace(v, next);
        if (fresh) ++next;
        return it->second;
    };
    std::vector<int> parent;
    auto find = [&](int x) {
        while (parent[static_cast<std::size_t>(x)] != x)
            x = parent[static_cast<std::size_t>(x)] =
                parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
        return x;
    };
    std::set<int> touched;
    std::vector<std::pair<int, int>> links;
    for (EdgeId e : edges) {
        int a = m.vertex_of(e), b = m.vertex_of(m.alpha(e));
        touched.insert(a);
        touched.insert(b);
        links.emplace_back(a, b);
    }
    if (touched != expected_vertices) return false;
    parent.resize(touched.size());
    for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = static_cast<int>(i);
    for (auto [a, b] : links) {
        int x = find(id(a)), y = find(id(b));
        if (x == y) return false;
        parent[static_cast<std::size_t>(x)] = y;
    }
    return edges.size() + 1 == touched.size();
}

} // namespace

bool validate_schnyder(const SchnyderWood& wood, std::string* why) {
    auto fail = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    const CombinatorialMap& m = wood.map;
    auto faces = m.faces();
    int ext = wood.external_face();
    for (int f = 0; f < static_cast<int>(faces.size()); ++f)
        if (faces[static_cast<std::size_t>(f)].size() != 3)
            return fail("face of degree != 3");
    int red = wood.red_vertex(), blue = wood.blue_vertex(), green = -1;
    for (Dart d : faces.at(static_cast<std::size_t>(ext))) {
        int v = m.vertex_of(d);
        if (v != red && v != blue) green = v;
    }
    if (green < 0 || red == blue || red == green) return fail("external corners not distinct");

    std::set<EdgeId> ext_edges;
    for (Dart d : faces.at(static_cast<std::size_t>(ext))) ext_edges.insert(m.edge_of(d));
    if (ext_edges.size() != 3) return fail("external face is not a triangle");

    std::set<int> internal;
    for (int v = 0; v < m.vertex_count(); ++v)
        if (v != red && v != blue && v != green) internal.insert(v);

    std::array<std::set<EdgeId>, 3> by_color;
    for (Dart e = 1; e <= m.dart_count(); ++e) {
        if (m.edge_of(e) != e) continue;
        auto it = wood.colors.find(e);
        bool external = ext_edges.count(e) != 0;
        if (it == wood.colors.end()) {
            if (!external) return fail("uncolored internal edge");
            continue;
        }
        if (!wood.orientation.count(e)) return fail("colored edge without orientation");
        if (external && (it->second != Color::Blue || e != m.edge_of(m.root())))
            return fail("external edge colored, but not the blue root edge");
        by_color[static_cast<std::size_t>(it->second)].insert(e);
    }
    EdgeId root_edge = m.edge_of(m.root());
    if (!wood.colors.count(root_edge) || wood.colors.at(root_edge) != Color::Blue)
        return fail("root edge is not blue");

    // monochromatic trees oriented toward their roots
    auto tree_ok = [&](int root_vertex, const std::set<EdgeId>& edges) {
        if (edges.empty()) return internal.empty();
        std::set<int> expected = internal;
        expected.insert(root_vertex);
        if (!subgraph_is_tree(m, edges, expected)) return false;
        std::map<int, int> outs;
        for (EdgeId e : edges) outs[m.vertex_of(wood.orientation.at(e))]++;
        if (outs.count(root_vertex)) return false;
        for (int v : internal)
            if (outs[v] != 1) return false;
        return true;
    };
    std::set<EdgeId> blue_internal = by_color[static_cast<std::size_t>(Color::Blue)];
    blue_internal.erase(root_edge);
    if (!tree_ok(blue, blue_internal)) return fail("blue edges do not form a tree into the blue vertex");
    if (!tree_ok(red, by_color[static_cast<std::size_t>(Color::Red)]))
        return fail("red edges do not form a tree into the red vertex");
    if (!tree_ok(green, by_color[static_cast<std::size_t>(Color::Green)]))
        return fail("green edges do not form a tree into the green vertex");

    // the local condition, clockwise around each internal vertex:
    // outgoing blue, incoming reds, outgoing green, incoming blues,
    // outgoing red, incoming greens
    auto verts = m.vertices();
    for (int v : internal) {
        std::vector<std::pair<Color, bool>> cyc; // (color, outgoing)
        Dart d0 = verts[static_cast<std::size_t>(v)].front();
        Dart d = d0;
        do {
            auto it = wood.colors.find(m.edge_of(d));
            if (it == wood.colors.end()) return fail("internal vertex touches an uncolored edge");
            bool outgoing = wood.orientation.at(m.edge_of(d)) == d;
            cyc.emplace_back(it->second, outgoing);
            d = m.sigma(d); // the clockwise role in the woods built here
        } while (d != d0);
        int start = -1;
        for (std::size_t i = 0; i < cyc.size(); ++i)
            if (cyc[i] == std::make_pair(Color::Blue, true)) start = static_cast<int>(i);
        if (start < 0) return fail("internal vertex without an outgoing blue edge");
        std::size_t i = 0, n = cyc.size();
        auto at = [&](std::size_t k) { return cyc[(static_cast<std::size_t>(start) + k) % n]; };
        i = 1;
        while (i < n && at(i) == std::make_pair(Color::Red, false)) ++i;
        if (i >= n || at(i) != std::make_pair(Color::Green, true)) return fail("local condition: green out");
        ++i;
        while (i < n && at(i) == std::make_pair(Color::Blue, false)) ++i;
        if (i >= n || at(i) != std::make_pair(Color::Red, true)) return fail("local condition: red out");
        ++i;
        while (i < n && at(i) == std::make_pair(Color::Green, false)) ++i;
        if (i != n) return fail("local condition: trailing edges out of order");
    }
    return true;
}

} // namespace treemate
