#include "treemate/bijections.hpp"

#include <algorithm>
#include <list>

namespace treemate {

bool is_loopless(const CombinatorialMap& m) {
    for (Dart d = 1; d <= m.dart_count(); ++d)
        if (m.edge_of(d) == d && m.vertex_of(d) == m.vertex_of(m.alpha(d))) return false;
    return true;
}

DecoratedMap KrewerasResult::decorated() const {
    return DecoratedMap{mated.map, dual_tree, std::nullopt, {}, {}, std::nullopt};
}

std::string KrewerasResult::cubic_canonical() const {
    DecoratedMap dm{mated.map.dual(), dual_tree, mated.map.root(), {}, {}, std::nullopt};
    return canonical_decorated_string(dm);
}

KrewerasResult kreweras_forward(const Walk& w) {
    auto kre = StepAlphabet::family("kreweras");
    if (w.steps.empty() || w.steps.size() % 3 != 0)
        throw Error("kreweras: walk length must be a positive multiple of 3");
    for (const Step& s : w.steps)
        if (!kre->index_of(s)) throw Error("kreweras: step outside the Kreweras alphabet");
    if (w.start != Point{0, 0} || w.end() != Point{0, 0})
        throw Error("kreweras: walk must start and end at the origin");
    if (!is_confined(w)) throw Error("kreweras: walk not confined");

    MatedMap mm = mate(w, ContractionRule::kreweras(), {});
    if (!is_loopless(mm.map)) throw Error("kreweras: construction produced a loop");

    // orient the dual: the half-edge through each triangle's base (its
    // bottom rung) is incoming, the other two outgoing; keep edges whose
    // two half-edges make a coherent direction, leaving out the root edge.
    std::vector<char> incoming(static_cast<std::size_t>(mm.map.dart_count()) + 1, 0);
    for (const FaceInfo& fi : mm.face_info) incoming[static_cast<std::size_t>(fi.bottom_dart)] = 1;
    KrewerasResult out{std::move(mm), {}};
    const CombinatorialMap& m = out.mated.map;
    for (Dart e = 1; e <= m.dart_count(); ++e) {
        if (m.edge_of(e) != e) continue;
        if (e == out.mated.bottom_side_edge) continue;
        if (incoming[static_cast<std::size_t>(e)] != incoming[static_cast<std::size_t>(m.alpha(e))])
            out.dual_tree.insert(e);
    }
    if (!validate_spanning_tree(m.dual(), out.dual_tree))
        throw Error("kreweras: coherent dual edges do not form a spanning tree");
    return out;
}

namespace {

struct GrowthState {
    // darts are created with even/odd pairing left open; alpha fixed on join
    std::vector<int> alpha;          // -1 = free half-edge
    std::vector<std::array<int, 3>> rotation; // per grown vertex: (down, right, left)
    std::vector<int> vertex_of_dart;
    std::vector<int> parent;          // per vertex, -1 for the root vertex
    std::vector<int> depth;
    std::list<int> free_list;         // free half-edges, clockwise boundary order
    std::list<int>::iterator arrow;   // the arrowed half-edge

    int new_dart(int vertex) {
        alpha.push_back(-1);
        vertex_of_dart.push_back(vertex);
        return static_cast<int>(alpha.size()) - 1;
    }

    std::list<int>::iterator next_cw(std::list<int>::iterator it) {
        ++it;
        return it == free_list.end() ? free_list.begin() : it;
    }
    std::list<int>::iterator prev_ccw(std::list<int>::iterator it) {
        if (it == free_list.begin()) it = free_list.end();
        --it;
        return it;
    }

    bool is_ancestor(int a, int b) const { // a ancestor of (or equal to) b
        while (b != -1 && b != a) b = parent[static_cast<std::size_t>(b)];
        return b == a;
    }
};

} // namespace

std::string BernardiResult::canonical() const {
    return canonical_decorated_string(DecoratedMap{map, tree, map.root(), {}, {}, std::nullopt});
}

BernardiResult bernardi_grow(const Walk& w) {
    auto kre = StepAlphabet::family("kreweras");
    std::string word;
    for (const Step& s : w.steps) {
        auto idx = kre->index_of(s);
        if (!idx) throw Error("bernardi: step outside the Kreweras alphabet");
        word.push_back(kre->letter_at(*idx));
    }
    if (w.start != Point{0, 0} || w.end() != Point{0, 0} || !is_confined(w))
        throw Error("bernardi: walk must be a closed confined Kreweras walk");

    GrowthState st;
    // root vertex 0 carries the initial arrow half-edge
    st.parent.push_back(-1);
    st.depth.push_back(0);
    st.rotation.push_back({-1, -1, -1});
    int d_root = st.new_dart(0);
    st.rotation[0][0] = d_root;
    st.free_list.push_back(d_root);
    st.arrow = st.free_list.begin();

    std::vector<std::pair<int, int>> tree_darts; // (down dart, consumed dart) per grown vertex
    for (char c : word) {
        if (c == 'a' || c == 'b') {
            int h = *st.arrow;
            int u = st.vertex_of_dart[static_cast<std::size_t>(h)];
            int v = static_cast<int>(st.parent.size());
            st.parent.push_back(u);
            st.depth.push_back(st.depth[static_cast<std::size_t>(u)] + 1);
            int d_down = st.new_dart(v);
            int d_right = st.new_dart(v);
            int d_left = st.new_dart(v);
            st.rotation.push_back({d_down, d_right, d_left});
            st.alpha[static_cast<std::size_t>(h)] = d_down;
            st.alpha[static_cast<std::size_t>(d_down)] = h;
            tree_darts.emplace_back(d_down, h);
            // replace the arrow half-edge by (left, right) in clockwise order
            auto pos = st.free_list.erase(st.arrow);
            auto it_l = st.free_list.insert(pos, d_left);
            auto it_r = st.free_list.insert(pos, d_right);
            st.arrow = (c == 'a') ? it_r : it_l;
        } else { // c
            if (st.free_list.size() < 3)
                throw Error("bernardi: letter c with no free half-edge on one side of the arrow");
            auto it_l = st.prev_ccw(st.arrow);
            auto it_r = st.next_cw(st.arrow);
            int hl = *it_l, hr = *it_r;
            int vl = st.vertex_of_dart[static_cast<std::size_t>(hl)];
            int vr = st.vertex_of_dart[static_cast<std::size_t>(hr)];
            int s, t;
            std::list<int>::iterator it_s, it_t;
            if (st.is_ancestor(vl, vr)) {
                s = hl; it_s = it_l; t = hr; it_t = it_r;
            } else if (st.is_ancestor(vr, vl)) {
                s = hr; it_s = it_r; t = hl; it_t = it_l;
            } else {
                throw Error("bernardi: neighbour half-edges are not tree-ordered");
            }
            (void)t;
            int h = *st.arrow;
            st.alpha[static_cast<std::size_t>(h)] = s;
            st.alpha[static_cast<std::size_t>(s)] = h;
            st.free_list.erase(st.arrow);
            st.free_list.erase(it_s);
            st.arrow = it_t;
        }
    }
    if (st.free_list.size() != 1) throw Error("bernardi: growth did not close up");
    // final step: link the remaining arrow to the root vertex
    int h = *st.arrow;
    int d_f = st.new_dart(0);
    st.alpha[static_cast<std::size_t>(h)] = d_f;
    st.alpha[static_cast<std::size_t>(d_f)] = h;

    // smooth out the degree-2 root vertex: its two edges merge into the
    // root edge of the cubic map
    int x = st.alpha[static_cast<std::size_t>(d_root)];
    int y = st.alpha[static_cast<std::size_t>(d_f)];
    st.alpha[static_cast<std::size_t>(x)] = y;
    st.alpha[static_cast<std::size_t>(y)] = x;

    // compact dart ids (drop the root vertex's two darts), build the map
    std::vector<int> id(st.alpha.size(), 0);
    int next = 1;
    for (std::size_t dqi = 0; dqi < st.alpha.size(); ++dqi) {
        if (static_cast<int>(dqi) == d_root || static_cast<int>(dqi) == d_f) continue;
        id[dqi] = next++;
    }
    std::vector<std::pair<Dart, Dart>> opposite;
    for (std::size_t dqi = 0; dqi < st.alpha.size(); ++dqi) {
        if (!id[dqi]) continue;
        int a = st.alpha[dqi];
        if (id[dqi] < id[static_cast<std::size_t>(a)])
            opposite.emplace_back(id[dqi], id[static_cast<std::size_t>(a)]);
    }
    std::vector<std::vector<Dart>> cycles;
    for (std::size_t v = 1; v < st.rotation.size(); ++v) {
        auto [d0, d1, d2] = st.rotation[v];
        cycles.push_back({id[static_cast<std::size_t>(d0)], id[static_cast<std::size_t>(d1)],
                          id[static_cast<std::size_t>(d2)]});
    }
    BernardiResult out{CombinatorialMap::from_cycles(opposite, cycles, id[static_cast<std::size_t>(
                           tree_darts.front().first)]),
                       {}};
    for (std::size_t i = 1; i < tree_darts.size(); ++i) {
        Dart a = id[static_cast<std::size_t>(tree_darts[i].first)];
        Dart b = id[static_cast<std::size_t>(tree_darts[i].second)];
        out.tree.insert(std::min(a, b));
    }
    return out;
}

} // namespace treemate
