#include "treemate/bijections.hpp"

#include <algorithm>
#include <sstream>

namespace treemate {

DecoratedMap Prograph::decorated() const {
    DecoratedMap dm{map, std::nullopt, std::nullopt, {}, orientation, std::nullopt};
    return dm;
}

std::string Prograph::canonical_string() const {
    auto rank = map.canonical_rank();
    std::ostringstream os;
    os << canonical_decorated_string(decorated());
    os << "types:";
    // vertex types listed by the canonically smallest dart of each vertex
    std::vector<std::pair<int, char>> vs;
    auto verts = map.vertices();
    for (std::size_t v = 0; v < verts.size(); ++v) {
        int best = rank[static_cast<std::size_t>(verts[v][0])];
        for (Dart d : verts[v]) best = std::min(best, rank[static_cast<std::size_t>(d)]);
        vs.emplace_back(best, vertex_type[v]);
    }
    std::sort(vs.begin(), vs.end());
    for (const auto& [r, t] : vs) os << ' ' << r << t;
    os << "\nio: " << std::min(rank[static_cast<std::size_t>(io_edge)],
                               rank[static_cast<std::size_t>(map.alpha(io_edge))]);
    os << '\n';
    return os.str();
}

Prograph tandem_to_prograph(const Walk& w) {
    auto tan = StepAlphabet::family("tandem");
    if (w.steps.empty() || w.steps.size() % 3 != 0)
        throw Error("tandem: walk length must be a positive multiple of 3");
    for (const Step& s : w.steps)
        if (!tan->index_of(s)) throw Error("tandem: step outside the tandem alphabet");
    if (w.start != Point{0, 0} || w.end() != Point{0, 0} || !is_confined(w))
        throw Error("tandem: walk must be a closed confined tandem walk");

    MatedMap mm = mate(w, ContractionRule::identify_uz(), {});
    CombinatorialMap dual = mm.map.dual();
    Prograph out{std::move(dual), {}, {}, mm.bottom_side_edge};
    out.vertex_type.assign(static_cast<std::size_t>(out.map.vertex_count()), '?');
    for (const FaceInfo& fi : mm.face_info) {
        const Step& s = w.steps[static_cast<std::size_t>(fi.orig_step - 1)];
        char t = s == Step{0, 1} ? 'c' : 'p'; // a-faces are coproducts, c-faces products
        out.vertex_type[static_cast<std::size_t>(out.map.vertex_of(fi.bottom_dart))] = t;
    }
    for (Dart e = 1; e <= out.map.dart_count(); ++e) {
        if (out.map.edge_of(e) != e) continue;
        Dart east = mm.east_dart(e);
        if (!east) throw Error("tandem: edge without a coherent west-east direction");
        out.orientation[e] = out.map.alpha(east); // dual flow crosses upward
    }
    std::string why;
    if (!validate_prograph(out, &why)) throw Error("tandem: image is not a valid prograph: " + why);
    return out;
}

bool validate_prograph(const Prograph& p, std::string* why) {
    auto fail = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    const CombinatorialMap& m = p.map;
    if (static_cast<int>(p.vertex_type.size()) != m.vertex_count()) return fail("type table size");
    if (p.orientation.size() != static_cast<std::size_t>(m.edge_count()))
        return fail("orientation incomplete");
    std::vector<int> indeg(static_cast<std::size_t>(m.vertex_count()), 0);
    std::vector<int> outdeg(static_cast<std::size_t>(m.vertex_count()), 0);
    for (const auto& [e, tail] : p.orientation) {
        if (m.edge_of(tail) != e) return fail("orientation tail not on its edge");
        outdeg[static_cast<std::size_t>(m.vertex_of(tail))]++;
        indeg[static_cast<std::size_t>(m.vertex_of(m.alpha(tail)))]++;
    }
    for (int v = 0; v < m.vertex_count(); ++v) {
        if (m.degree_of_vertex(v) != 3) return fail("vertex degree != 3");
        char t = p.vertex_type[static_cast<std::size_t>(v)];
        if (t == 'c') {
            if (indeg[static_cast<std::size_t>(v)] != 1 || outdeg[static_cast<std::size_t>(v)] != 2)
                return fail("coproduct without 1 input and 2 outputs");
        } else if (t == 'p') {
            if (indeg[static_cast<std::size_t>(v)] != 2 || outdeg[static_cast<std::size_t>(v)] != 1)
                return fail("product without 2 inputs and 1 output");
        } else {
            return fail("untyped vertex");
        }
    }
    // acyclic once the io edge is cut
    std::vector<std::vector<int>> kids(static_cast<std::size_t>(m.vertex_count()));
    std::vector<int> deps(static_cast<std::size_t>(m.vertex_count()), 0);
    for (const auto& [e, tail] : p.orientation) {
        if (e == p.io_edge) continue;
        int a = m.vertex_of(tail), b = m.vertex_of(m.alpha(tail));
        kids[static_cast<std::size_t>(a)].push_back(b);
        deps[static_cast<std::size_t>(b)]++;
    }
    std::vector<int> order;
    for (int v = 0; v < m.vertex_count(); ++v)
        if (!deps[static_cast<std::size_t>(v)]) order.push_back(v);
    for (std::size_t i = 0; i < order.size(); ++i)
        for (int b : kids[static_cast<std::size_t>(order[i])])
            if (--deps[static_cast<std::size_t>(b)] == 0) order.push_back(b);
    if (static_cast<int>(order.size()) != m.vertex_count()) return fail("flow has a cycle off the io edge");
    return true;
}

Walk prograph_to_tandem(const Prograph& p) {
    std::string why;
    if (!validate_prograph(p, &why)) throw Error("prograph inverse: invalid prograph: " + why);
    const CombinatorialMap& m = p.map;

    // cut the io edge and the left input of every product: what remains is
    // the complete spanning tree of the equivalent rY picture, where each c
    // step is the pair (0,1),(-1,-1)
    std::set<EdgeId> cut{p.io_edge};
    auto verts = m.vertices();
    for (int v = 0; v < m.vertex_count(); ++v) {
        if (p.vertex_type[static_cast<std::size_t>(v)] != 'p') continue;
        Dart out_dart = 0;
        for (Dart d : verts[static_cast<std::size_t>(v)])
            if (p.orientation.at(m.edge_of(d)) == d) out_dart = d;
        if (!out_dart) throw Error("prograph inverse: product without an output");
        cut.insert(m.edge_of(m.sigma(out_dart))); // left input: next after the output
    }
    std::set<EdgeId> tree;
    for (Dart e = 1; e <= m.dart_count(); ++e)
        if (m.edge_of(e) == e && !cut.count(e)) tree.insert(e);

    Dart start = m.alpha(p.orientation.at(p.io_edge));
    SpanningTreeMap st{m.with_root(start), std::move(tree), start};
    Walk unit = ry_inverse(st);

    // contract each (0,1),(-1,-1) pair back into a c step
    auto tan = StepAlphabet::family("tandem");
    std::vector<Step> steps;
    for (std::size_t i = 0; i < unit.steps.size(); ++i) {
        const Step& s = unit.steps[i];
        if (s == Step{-1, -1}) {
            if (steps.empty() || steps.back() != Step{0, 1})
                throw Error("prograph inverse: stray (-1,-1) in the unit walk");
            steps.back() = {-1, 0};
        } else {
            steps.push_back(s);
        }
    }
    Walk w{tan, {0, 0}, std::move(steps)};
    for (const Step& s : w.steps)
        if (!tan->index_of(s)) throw Error("prograph inverse: reconstructed step outside the alphabet");
    if (!is_confined(w) || w.end() != Point{0, 0})
        throw Error("prograph inverse: reconstructed word is not a closed tandem walk");
    return w;
}

bool YoungTableau3::valid() const {
    std::size_t n = rows[0].size();
    if (rows[1].size() != n || rows[2].size() != n || n == 0) return false;
    std::vector<char> seen(3 * n + 1, 0);
    for (const auto& row : rows)
        for (int v : row) {
            if (v < 1 || v > static_cast<int>(3 * n) || seen[static_cast<std::size_t>(v)]) return false;
            seen[static_cast<std::size_t>(v)] = 1;
        }
    for (const auto& row : rows)
        for (std::size_t i = 0; i + 1 < row.size(); ++i)
            if (row[i] >= row[i + 1]) return false;
    for (std::size_t r = 0; r + 1 < 3; ++r)
        for (std::size_t i = 0; i < n; ++i)
            if (rows[r][i] >= rows[r + 1][i]) return false;
    return true;
}

std::string YoungTableau3::to_string() const {
    std::ostringstream os;
    for (std::size_t r = 0; r < 3; ++r) {
        for (std::size_t i = 0; i < rows[r].size(); ++i) {
            if (i) os << ',';
            os << rows[r][i];
        }
        os << '\n';
    }
    return os.str();
}

YoungTableau3 YoungTableau3::parse(const std::string& text) {
    YoungTableau3 t;
    std::istringstream is(text);
    std::string line;
    std::size_t r = 0;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        if (r >= 3) throw Error("tableau parse error: more than three rows");
        std::replace(line.begin(), line.end(), ',', ' ');
        std::istringstream ls(line);
        int v;
        while (ls >> v) t.rows[r].push_back(v);
        ++r;
    }
    if (r != 3) throw Error("tableau parse error: expected three rows");
    return t;
}

YoungTableau3 tandem_to_syt(const Walk& w) {
    auto tan = StepAlphabet::family("tandem");
    if (w.steps.empty() || w.steps.size() % 3 != 0)
        throw Error("tandem: walk length must be a positive multiple of 3");
    if (w.start != Point{0, 0} || w.end() != Point{0, 0} || !is_confined(w))
        throw Error("tandem: walk must be a closed confined tandem walk");
    YoungTableau3 t;
    for (std::size_t i = 0; i < w.steps.size(); ++i) {
        auto idx = tan->index_of(w.steps[i]);
        if (!idx) throw Error("tandem: step outside the tandem alphabet");
        t.rows[static_cast<std::size_t>(*idx)].push_back(static_cast<int>(i) + 1);
    }
    if (!t.valid()) throw Error("tandem: image is not a standard Young tableau");
    return t;
}

Walk syt_to_tandem(const YoungTableau3& t) {
    if (!t.valid()) throw Error("syt inverse: not a rectangular 3-row standard Young tableau");
    auto tan = StepAlphabet::family("tandem");
    std::size_t n = t.rows[0].size();
    std::string word(3 * n, '?');
    for (std::size_t r = 0; r < 3; ++r)
        for (int v : t.rows[r]) word[static_cast<std::size_t>(v - 1)] = tan->letters()[r];
    Walk w = parse_walk_text(word, tan);
    if (!is_confined(w) || w.end() != Point{0, 0})
        throw Error("syt inverse: tableau does not encode a confined closed walk");
    return w;
}

} // namespace treemate
