#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "treemate/walks.hpp"

namespace treemate {

/// A one-dimensional lattice path, steps in {-1,0,+1} (Motzkin) unless
/// stated otherwise. Step indices are 1-based throughout, matching the
/// cell numbering of the mating diagram.
struct LatticePath {
    std::vector<int> steps;

    std::size_t size() const { return steps.size(); }
    int step(int k) const { return steps.at(static_cast<std::size_t>(k - 1)); } // 1-based
    bool is_dyck() const; // closed, confined, all steps +-1
    bool stays_nonnegative(long long start_height = 0) const;
    long long displacement() const;
};

/// Non-crossing matching of up and down steps. Down steps before the path
/// minimum and up steps after it stay unmatched.
struct PathMatching {
    std::vector<std::pair<int, int>> matched; // (up index, down index), up < down
    std::vector<int> unmatched_downs;         // ascending
    std::vector<int> unmatched_ups;           // ascending

    std::optional<int> partner(int index) const;
    bool is_matched(int index) const { return partner(index).has_value(); }
};

PathMatching match_path(const LatticePath& path);

/// Rooted planar binary tree; node 0 is the root, child -1 means absent.
struct BinaryTree {
    struct Node {
        int left = -1;
        int right = -1;
    };
    std::vector<Node> nodes;

    std::size_t size() const { return nodes.size(); }
    /// "(L)(R)" parenthesization, empty child printed as "".
    std::string to_string() const;
};

/// The classical bijection from Dyck paths of length 2n to rooted planar
/// binary trees with n vertices: D = u D1 d D2 maps to a root whose left
/// branch encodes D1 and right branch D2.
BinaryTree dyck_to_tree(const LatticePath& path);
LatticePath tree_to_dyck(const BinaryTree& tree);

/// Dyck word of length 2n <-> non-crossing perfect pairing of [1,2n]
/// (up steps open a pair, down steps close the innermost open one).
std::vector<std::pair<int, int>> dyck_to_pairing(const LatticePath& path);
LatticePath pairing_to_dyck(const std::vector<std::pair<int, int>>& pairing);
bool is_noncrossing(const std::vector<std::pair<int, int>>& pairing);

} // namespace treemate
