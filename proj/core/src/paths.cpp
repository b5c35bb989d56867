#include "treemate/paths.hpp"

#include <algorithm>
#include <sstream>

namespace treemate {

bool LatticePath::is_dyck() const {
    long long h = 0;
    for (int s : steps) {
        if (s != 1 && s != -1) return false;
        h += s;
        if (h < 0) return false;
    }
    return h == 0;
}

bool LatticePath::stays_nonnegative(long long start_height) const {
    long long h = start_height;
    if (h < 0) return false;
    for (int s : steps) {
        h += s;
        if (h < 0) return false;
    }
    return true;
}

long long LatticePath::displacement() const {
    long long h = 0;
    for (int s : steps) h += s;
    return h;
}

std::optional<int> PathMatching::partner(int index) const {
    for (const auto& [u, d] : matched) {
        if (u == index) return d;
        if (d == index) return u;
    }
    return std::nullopt;
}

PathMatching match_path(const LatticePath& path) {
    PathMatching m;
    std::vector<int> open;
    for (int k = 1; k <= static_cast<int>(path.size()); ++k) {
        int s = path.step(k);
        if (s > 0) {
            open.push_back(k);
        } else if (s < 0) {
            if (open.empty()) {
                m.unmatched_downs.push_back(k);
            } else {
                m.matched.emplace_back(open.back(), k);
                open.pop_back();
            }
        }
    }
    m.unmatched_ups = std::move(open);
    std::sort(m.matched.begin(), m.matched.end());
    return m;
}

std::string BinaryTree::to_string() const {
    std::string out;
    auto rec = [&](auto&& self, int node) -> void {
        if (node < 0) return;
        out.push_back('(');
        self(self, nodes[static_cast<std::size_t>(node)].left);
        out.push_back(')');
        out.push_back('(');
        self(self, nodes[static_cast<std::size_t>(node)].right);
        out.push_back(')');
    };
    if (!nodes.empty()) rec(rec, 0);
    return out;
}

BinaryTree dyck_to_tree(const LatticePath& path) {
    if (!path.is_dyck()) throw Error("dyck_to_tree: input is not a Dyck path");
    BinaryTree t;
    if (path.size() == 0) return t;
    PathMatching m = match_path(path);
    // node per up step; match(u) = d; left child is the up at u+1 when the
    // segment (u, d) is nonempty, right child the up at d+1 when one follows.
    std::vector<int> node_of(path.size() + 1, -1);
    std::vector<int> ups;
    for (int k = 1; k <= static_cast<int>(path.size()); ++k)
        if (path.step(k) > 0) {
            node_of[static_cast<std::size_t>(k)] = static_cast<int>(ups.size());
            ups.push_back(k);
        }
    t.nodes.resize(ups.size());
    std::vector<int> match_of(path.size() + 1, 0);
    for (const auto& [u, d] : m.matched) match_of[static_cast<std::size_t>(u)] = d;
    for (std::size_t i = 0; i < ups.size(); ++i) {
        int u = ups[i];
        int d = match_of[static_cast<std::size_t>(u)];
        if (d > u + 1) t.nodes[i].left = node_of[static_cast<std::size_t>(u + 1)];
        if (d + 1 <= static_cast<int>(path.size()) && path.step(d + 1) > 0)
            t.nodes[i].right = node_of[static_cast<std::size_t>(d + 1)];
    }
    return t;
}

LatticePath tree_to_dyck(const BinaryTree& tree) {
    LatticePath p;
    auto rec = [&](auto&& self, int node) -> void {
        if (node < 0) return;
        p.steps.push_back(1);
        self(self, tree.nodes[static_cast<std::size_t>(node)].left);
        p.steps.push_back(-1);
        self(self, tree.nodes[static_cast<std::size_t>(node)].right);
    };
    if (!tree.nodes.empty()) rec(rec, 0);
    return p;
}

std::vector<std::pair<int, int>> dyck_to_pairing(const LatticePath& path) {
    if (!path.is_dyck()) throw Error("dyck_to_pairing: input is not a Dyck path");
    auto m = match_path(path);
    return m.matched;
}

LatticePath pairing_to_dyck(const std::vector<std::pair<int, int>>& pairing) {
    if (!is_noncrossing(pairing)) throw Error("pairing_to_dyck: pairing is not non-crossing");
    LatticePath p;
    p.steps.assign(pairing.size() * 2, 0);
    for (const auto& [a, b] : pairing) {
        p.steps.at(static_cast<std::size_t>(a - 1)) = 1;
        p.steps.at(static_cast<std::size_t>(b - 1)) = -1;
    }
    return p;
}

bool is_noncrossing(const std::vector<std::pair<int, int>>& pairing) {
    std::size_t n2 = pairing.size() * 2;
    std::vector<int> seen(n2 + 1, 0);
    for (const auto& [a, b] : pairing) {
        if (a < 1 || b < 1 || a > static_cast<int>(n2) || b > static_cast<int>(n2) || a >= b)
            return false;
        if (seen[static_cast<std::size_t>(a)]++ || seen[static_cast<std::size_t>(b)]++) return false;
    }
    for (const auto& [a, b] : pairing)
        for (const auto& [c, d] : pairing)
            if (a < c && c < b && b < d) return false;
    return true;
}

} // namespace treemate
