#include "treemate/map.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <sstream>

namespace treemate {

CombinatorialMap::CombinatorialMap(std::vector<Dart> opposite, std::vector<Dart> rotation, Dart root)
    : alpha_(std::move(opposite)), sigma_(std::move(rotation)), root_(root) {
    validate();
    sigma_inv_.assign(sigma_.size(), 0);
    for (Dart d = 1; d <= dart_count(); ++d) sigma_inv_[static_cast<std::size_t>(sigma_[static_cast<std::size_t>(d)])] = d;
}

CombinatorialMap CombinatorialMap::from_cycles(
    const std::vector<std::pair<Dart, Dart>>& opposite_pairs,
    const std::vector<std::vector<Dart>>& rotation_cycles, Dart root) {
    int n = static_cast<int>(opposite_pairs.size()) * 2;
    std::vector<Dart> alpha(static_cast<std::size_t>(n) + 1, 0);
    for (const auto& [a, b] : opposite_pairs) {
        if (a < 1 || b < 1 || a > n || b > n) throw Error("build_map: dart out of range in opposite");
        if (a == b) throw Error("build_map: opposite has a fixed point");
        if (alpha[static_cast<std::size_t>(a)] || alpha[static_cast<std::size_t>(b)])
            throw Error("build_map: dart repeated in opposite");
        alpha[static_cast<std::size_t>(a)] = b;
        alpha[static_cast<std::size_t>(b)] = a;
    }
    std::vector<Dart> sigma(static_cast<std::size_t>(n) + 1, 0);
    for (const auto& cyc : rotation_cycles) {
        if (cyc.empty()) throw Error("build_map: empty rotation cycle");
        for (std::size_t i = 0; i < cyc.size(); ++i) {
            Dart d = cyc[i];
            Dart nd = cyc[(i + 1) % cyc.size()];
            if (d < 1 || d > n) throw Error("build_map: dart out of range in rotation");
            if (sigma[static_cast<std::size_t>(d)]) throw Error("build_map: dart repeated in rotation");
            sigma[static_cast<std::size_t>(d)] = nd;
        }
    }
    for (Dart d = 1; d <= n; ++d)
        if (!sigma[static_cast<std::size_t>(d)]) throw Error("build_map: rotation cycles do not partition the darts");
    return CombinatorialMap(std::move(alpha), std::move(sigma), root);
}

void CombinatorialMap::validate() const {
    int n = dart_count();
    if (n <= 0 || n % 2 != 0) throw Error("map: dart count must be positive and even");
    if (alpha_.size() != sigma_.size()) throw Error("map: table size mismatch");
    std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
    for (Dart d = 1; d <= n; ++d) {
        Dart a = alpha_[static_cast<std::size_t>(d)];
        if (a < 1 || a > n) throw Error("map: opposite out of range");
        if (a == d) throw Error("map: opposite has a fixed point");
        if (alpha_[static_cast<std::size_t>(a)] != d) throw Error("map: opposite is not an involution");
        Dart s = sigma_[static_cast<std::size_t>(d)];
        if (s < 1 || s > n) throw Error("map: rotation out of range");
        seen[static_cast<std::size_t>(s)]++;
    }
    for (Dart d = 1; d <= n; ++d)
        if (seen[static_cast<std::size_t>(d)] != 1) throw Error("map: rotation is not a permutation");
    if (root_ < 1 || root_ > n) throw Error("map: root dart out of range");
    // connectivity via alpha and sigma from the root
    std::vector<char> vis(static_cast<std::size_t>(n) + 1, 0);
    std::queue<Dart> q;
    q.push(root_);
    vis[static_cast<std::size_t>(root_)] = 1;
    int count = 0;
    while (!q.empty()) {
        Dart d = q.front();
        q.pop();
        ++count;
        for (Dart e : {sigma_[static_cast<std::size_t>(d)], alpha_[static_cast<std::size_t>(d)]}) {
            if (!vis[static_cast<std::size_t>(e)]) {
                vis[static_cast<std::size_t>(e)] = 1;
                q.push(e);
            }
        }
    }
    if (count != n) throw Error("map: not connected");
}

namespace {

std::vector<std::vector<Dart>> orbits_of(int n, const std::function<Dart(Dart)>& next) {
    std::vector<char> vis(static_cast<std::size_t>(n) + 1, 0);
    std::vector<std::vector<Dart>> out;
    for (Dart d = 1; d <= n; ++d) {
        if (vis[static_cast<std::size_t>(d)]) continue;
        std::vector<Dart> cyc;
        Dart e = d;
        while (!vis[static_cast<std::size_t>(e)]) {
            vis[static_cast<std::size_t>(e)] = 1;
            cyc.push_back(e);
            e = next(e);
        }
        out.push_back(std::move(cyc));
    }
    return out;
}

} // namespace

void CombinatorialMap::index_orbits() const {
    if (!vertices_.empty() || dart_count() == 0) return;
    vertices_ = orbits_of(dart_count(), [this](Dart d) { return sigma(d); });
    faces_ = orbits_of(dart_count(), [this](Dart d) { return face_next(d); });
    vertex_of_.assign(static_cast<std::size_t>(dart_count()) + 1, -1);
    face_of_.assign(static_cast<std::size_t>(dart_count()) + 1, -1);
    for (std::size_t i = 0; i < vertices_.size(); ++i)
        for (Dart d : vertices_[i]) vertex_of_[static_cast<std::size_t>(d)] = static_cast<int>(i);
    for (std::size_t i = 0; i < faces_.size(); ++i)
        for (Dart d : faces_[i]) face_of_[static_cast<std::size_t>(d)] = static_cast<int>(i);
}

std::vector<std::vector<Dart>> CombinatorialMap::vertices() const {
    index_orbits();
    return vertices_;
}

std::vector<std::vector<Dart>> CombinatorialMap::faces() const {
    index_orbits();
    return faces_;
}

int CombinatorialMap::vertex_count() const {
    index_orbits();
    return static_cast<int>(vertices_.size());
}

int CombinatorialMap::face_count() const {
    index_orbits();
    return static_cast<int>(faces_.size());
}

int CombinatorialMap::euler_characteristic() const {
    return vertex_count() - edge_count() + face_count();
}

int CombinatorialMap::vertex_of(Dart d) const {
    index_orbits();
    return vertex_of_.at(static_cast<std::size_t>(d));
}

int CombinatorialMap::face_of(Dart d) const {
    index_orbits();
    return face_of_.at(static_cast<std::size_t>(d));
}

int CombinatorialMap::degree_of_vertex(int vertex_index) const {
    index_orbits();
    return static_cast<int>(vertices_.at(static_cast<std::size_t>(vertex_index)).size());
}

CombinatorialMap CombinatorialMap::dual() const {
    int n = dart_count();
    std::vector<Dart> sigma(static_cast<std::size_t>(n) + 1, 0);
    for (Dart d = 1; d <= n; ++d) sigma[static_cast<std::size_t>(d)] = face_next(d);
    return CombinatorialMap(alpha_, std::move(sigma), root_);
}

CombinatorialMap CombinatorialMap::with_root(Dart new_root) const {
    return CombinatorialMap(alpha_, sigma_, new_root);
}

std::vector<Dart> CombinatorialMap::canonical_order() const {
    int n = dart_count();
    std::vector<int> rank(static_cast<std::size_t>(n) + 1, 0);
    std::vector<Dart> order;
    order.reserve(static_cast<std::size_t>(n));
    std::queue<Dart> q;
    q.push(root_);
    rank[static_cast<std::size_t>(root_)] = 1;
    order.push_back(root_);
    while (!q.empty()) {
        Dart d = q.front();
        q.pop();
        for (Dart e : {sigma(d), alpha(d)}) {
            if (!rank[static_cast<std::size_t>(e)]) {
                rank[static_cast<std::size_t>(e)] = static_cast<int>(order.size()) + 1;
                order.push_back(e);
                q.push(e);
            }
        }
    }
    return order;
}

std::vector<int> CombinatorialMap::canonical_rank() const {
    auto order = canonical_order();
    std::vector<int> rank(static_cast<std::size_t>(dart_count()) + 1, 0);
    for (std::size_t i = 0; i < order.size(); ++i) rank[static_cast<std::size_t>(order[i])] = static_cast<int>(i) + 1;
    return rank;
}

std::vector<int> CombinatorialMap::canonical_code() const {
    auto order = canonical_order();
    auto rank = canonical_rank();
    std::vector<int> code;
    code.reserve(1 + 2 * order.size());
    code.push_back(dart_count());
    for (Dart d : order) {
        code.push_back(rank[static_cast<std::size_t>(sigma(d))]);
        code.push_back(rank[static_cast<std::size_t>(alpha(d))]);
    }
    return code;
}

bool validate_spanning_tree(const CombinatorialMap& m, const std::set<EdgeId>& edges) {
    for (EdgeId e : edges) {
        if (e < 1 || e > m.dart_count()) return false;
        if (m.edge_of(e) != e) return false;
    }
    int v = m.vertex_count();
    if (static_cast<int>(edges.size()) != v - 1) return false;
    // union-find over vertices
    std::vector<int> parent(static_cast<std::size_t>(v));
    for (int i = 0; i < v; ++i) parent[static_cast<std::size_t>(i)] = i;
    auto find = [&](int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    };
    for (EdgeId e : edges) {
        int a = find(m.vertex_of(e));
        int b = find(m.vertex_of(m.alpha(e)));
        if (a == b) return false; // cycle
        parent[static_cast<std::size_t>(a)] = b;
    }
    int root = find(0);
    for (int i = 1; i < v; ++i)
        if (find(i) != root) return false;
    return true;
}

std::string color_name(Color c) {
    switch (c) {
        case Color::Red: return "red";
        case Color::Green: return "green";
        case Color::Blue: return "blue";
    }
    return "?";
}

bool validate_hamiltonian(const CombinatorialMap& m, const Hamiltonian& h) {
    std::size_t n = h.faces.size();
    if (h.edges.size() != n || n == 0) return false;
    auto faces = m.faces();
    if (n != faces.size()) return false;
    std::vector<int> face_index(static_cast<std::size_t>(m.dart_count()) + 1, -1);
    std::set<int> used;
    for (std::size_t i = 0; i < n; ++i) {
        Dart least = h.faces[i];
        if (least < 1 || least > m.dart_count()) return false;
        int fi = m.face_of(least);
        if (*std::min_element(faces[static_cast<std::size_t>(fi)].begin(),
                              faces[static_cast<std::size_t>(fi)].end()) != least)
            return false; // must be the least dart of its face
        if (!used.insert(fi).second) return false;
        face_index[static_cast<std::size_t>(i)] = fi;
    }
    for (std::size_t i = 0; i < n; ++i) {
        EdgeId e = h.edges[i];
        if (e < 1 || e > m.dart_count() || m.edge_of(e) != e) return false;
        int fa = m.face_of(e);
        int fb = m.face_of(m.alpha(e));
        int want_a = face_index[i];
        int want_b = face_index[(i + 1) % n];
        if (!((fa == want_a && fb == want_b) || (fa == want_b && fb == want_a))) return false;
    }
    return true;
}

std::string canonical_decorated_string(const DecoratedMap& dm) {
    const CombinatorialMap& m = dm.map;
    auto rank = m.canonical_rank();
    auto order = m.canonical_order();
    auto relabel_edge = [&](EdgeId e) {
        return std::min(rank[static_cast<std::size_t>(e)], rank[static_cast<std::size_t>(m.alpha(e))]);
    };
    std::ostringstream os;
    os << "code:";
    for (int v : m.canonical_code()) os << ' ' << v;
    os << '\n';
    if (dm.tree_edges) {
        std::vector<int> t;
        for (EdgeId e : *dm.tree_edges) t.push_back(relabel_edge(e));
        std::sort(t.begin(), t.end());
        os << "tree:";
        for (int e : t) os << ' ' << e;
        os << '\n';
    }
    if (dm.marked) os << "marked: " << rank[static_cast<std::size_t>(*dm.marked)] << '\n';
    if (!dm.colors.empty()) {
        std::vector<std::pair<int, Color>> cs;
        for (const auto& [e, c] : dm.colors) cs.emplace_back(relabel_edge(e), c);
        std::sort(cs.begin(), cs.end());
        for (const auto& [e, c] : cs) os << "color: " << e << '=' << color_name(c) << '\n';
    }
    if (!dm.orientation.empty()) {
        std::vector<int> ds;
        for (const auto& [e, tail] : dm.orientation) ds.push_back(rank[static_cast<std::size_t>(tail)]);
        std::sort(ds.begin(), ds.end());
        os << "orient:";
        for (int d : ds) os << ' ' << d;
        os << '\n';
    }
    if (dm.hamiltonian) {
        // rotate the face cycle so it starts at the face containing the
        // canonically smallest dart among the cycle's face representatives
        std::vector<int> f_ranked;
        for (Dart f : dm.hamiltonian->faces) {
            // represent each face by the minimum canonical rank over its cycle
            int fi = m.face_of(f);
            auto fc = m.faces()[static_cast<std::size_t>(fi)];
            int best = rank[static_cast<std::size_t>(fc[0])];
            for (Dart d : fc) best = std::min(best, rank[static_cast<std::size_t>(d)]);
            f_ranked.push_back(best);
        }
        std::vector<int> e_ranked;
        for (EdgeId e : dm.hamiltonian->edges) e_ranked.push_back(relabel_edge(e));
        std::size_t n = f_ranked.size();
        std::size_t start = 0;
        for (std::size_t i = 1; i < n; ++i)
            if (f_ranked[i] < f_ranked[start]) start = i;
        os << "ham:";
        for (std::size_t i = 0; i < n; ++i) os << ' ' << f_ranked[(start + i) % n];
        os << " /";
        for (std::size_t i = 0; i < n; ++i) os << ' ' << e_ranked[(start + i) % n];
        os << '\n';
    }
    return os.str();
}

} // namespace treemate
