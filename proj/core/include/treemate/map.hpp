#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "treemate/walks.hpp"

namespace treemate {

using Dart = int;   // 1..2E
using EdgeId = int; // the smaller dart of an edge

/// Dart-based planar map: a fixed-point-free involution (opposite) and a
/// permutation whose cycles are the counterclockwise dart orders around
/// vertices (rotation), plus a root dart. Connectedness is required.
/// The face permutation applies opposite first, then rotation.
class CombinatorialMap {
public:
    CombinatorialMap(std::vector<Dart> opposite, std::vector<Dart> rotation, Dart root);

    static CombinatorialMap from_cycles(const std::vector<std::pair<Dart, Dart>>& opposite_pairs,
                                        const std::vector<std::vector<Dart>>& rotation_cycles,
                                        Dart root);

    int dart_count() const { return static_cast<int>(alpha_.size()) - 1; }
    int edge_count() const { return dart_count() / 2; }

    Dart alpha(Dart d) const { return alpha_.at(static_cast<std::size_t>(d)); }
    Dart sigma(Dart d) const { return sigma_.at(static_cast<std::size_t>(d)); }
    Dart sigma_inv(Dart d) const { return sigma_inv_.at(static_cast<std::size_t>(d)); }
    Dart face_next(Dart d) const { return sigma(alpha(d)); }
    Dart root() const { return root_; }

    EdgeId edge_of(Dart d) const { return std::min(d, alpha(d)); }

    std::vector<std::vector<Dart>> vertices() const; // sigma-orbits, sorted by least dart
    std::vector<std::vector<Dart>> faces() const;    // face-permutation orbits, sorted by least dart
    int vertex_count() const;
    int face_count() const;
    int euler_characteristic() const;

    int vertex_of(Dart d) const; // index into vertices()
    int face_of(Dart d) const;   // index into faces()
    int degree_of_vertex(int vertex_index) const;

    /// Vertices and faces swap; darts and root are unchanged.
    /// dual(dual(m)) == m exactly.
    CombinatorialMap dual() const;

    /// Same map, different root dart.
    CombinatorialMap with_root(Dart new_root) const;

    /// Breadth-first relabeling from the root (rotation first, then
    /// opposite). Equal codes iff the rooted maps are isomorphic.
    std::vector<int> canonical_code() const;
    /// canonical_order()[new_label-1] = old dart; inverse via canonical_rank.
    std::vector<Dart> canonical_order() const;
    std::vector<int> canonical_rank() const; // old dart -> new label

    bool operator==(const CombinatorialMap& o) const {
        return alpha_ == o.alpha_ && sigma_ == o.sigma_ && root_ == o.root_;
    }

private:
    void validate() const;
    void index_orbits() const;

    std::vector<Dart> alpha_;     // 1-based; [0] unused
    std::vector<Dart> sigma_;
    std::vector<Dart> sigma_inv_;
    Dart root_;
    mutable std::vector<std::vector<Dart>> vertices_, faces_;
    mutable std::vector<int> vertex_of_, face_of_;
};

/// True iff the edge subset is acyclic, connected, and touches every vertex.
bool validate_spanning_tree(const CombinatorialMap& m, const std::set<EdgeId>& edges);

enum class Color { Red, Green, Blue };
std::string color_name(Color c);

/// A face-ordering Hamiltonian cycle on the dual: faces[i] and faces[i+1]
/// (cyclically) are adjacent and edges[i] lies on their common boundary.
/// Faces are identified by their least dart.
struct Hamiltonian {
    std::vector<Dart> faces;   // least dart of each face, in cycle order
    std::vector<EdgeId> edges; // edges[i] between faces[i] and faces[i+1 mod n]
    bool operator==(const Hamiltonian&) const = default;
};

struct DecoratedMap {
    CombinatorialMap map;
    std::optional<std::set<EdgeId>> tree_edges;
    std::optional<Dart> marked; // marked leaf / half-edge
    std::map<EdgeId, Color> colors;
    std::map<EdgeId, Dart> orientation; // edge -> tail dart
    std::optional<Hamiltonian> hamiltonian;
};

bool validate_hamiltonian(const CombinatorialMap& m, const Hamiltonian& h);

/// Canonically relabeled textual form of a decorated map; equal strings iff
/// the decorated rooted maps are isomorphic.
std::string canonical_decorated_string(const DecoratedMap& dm);

} // namespace treemate
