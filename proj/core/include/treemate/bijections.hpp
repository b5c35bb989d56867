#pragma once

#include <array>
#include <map>
#include <set>
#include <string>

#include "treemate/map.hpp"
#include "treemate/mating.hpp"
#include "treemate/walks.hpp"

namespace treemate {

// ---------------------------------------------------------------------------
// Maps with a complete spanning tree (rY and Lukasiewicz walk families)

/// A planar map together with a complete spanning tree: the non-tree edges
/// are thought of as cut into pairs of half-edge leaves, one of which is
/// marked as the root leaf. "Special" means the root leaf is paired with
/// its immediate successor in the contour order around the tree.
struct SpanningTreeMap {
    CombinatorialMap map;
    std::set<EdgeId> tree_edges;
    Dart root_leaf = 0;

    bool is_special() const;
    std::vector<Dart> leaves() const; // contour order from the root leaf
    DecoratedMap decorated() const;
    std::string canonical_string() const;
};

/// Mate an rY-walk (steps (0,1), (-1,-1), (1,-1); length 4n; end (0,0) or
/// (2,0)) with the NW-SE contraction and cut the horizontal structure out
/// of the dual: a cubic map with 2n vertices and a complete spanning tree.
/// End (0,0) gives the special maps, end (2,0) the non-special ones.
SpanningTreeMap ry_forward(const Walk& w);
Walk ry_inverse(const SpanningTreeMap& m);

/// Same construction over {(-1,-1), (1,-1), (0,k)}: the vertical projection
/// is a Lukasiewicz path and a (0,k) step becomes a vertex of degree k+2.
SpanningTreeMap lukasiewicz_forward(const Walk& w);
Walk lukasiewicz_inverse(const SpanningTreeMap& m, const AlphabetRef& alphabet);

/// Non-tree darts in contour order around the spanning tree, starting at
/// (and including) start; each non-tree edge contributes both darts.
std::vector<Dart> tree_contour_leaves(const CombinatorialMap& m, const std::set<EdgeId>& tree,
                                      Dart start);

// ---------------------------------------------------------------------------
// Mullin: straight walks <-> triangulations with a dual Hamiltonian cycle

/// Triangulation of a closed confined straight-step walk, decorated with
/// the dual Hamiltonian cycle that visits the cells bottom to top.
DecoratedMap mullin_map(const Walk& w);
Walk mullin_walk(const DecoratedMap& tri);

// ---------------------------------------------------------------------------
// Kreweras walks: Bernardi's bijection via mating

struct KrewerasResult {
    MatedMap mated;
    std::set<EdgeId> dual_tree; // edges whose dual edges form a spanning tree of the dual
    DecoratedMap decorated() const;
    /// canonical string of (dual cubic map, tree, root) for equivalence tests
    std::string cubic_canonical() const;
};
KrewerasResult kreweras_forward(const Walk& w);

/// Step-by-step growth of the dual cubic map and its spanning tree with
/// the three letter moves; equivalent to kreweras_forward.
struct BernardiResult {
    CombinatorialMap map;
    std::set<EdgeId> tree;
    std::string canonical() const;
};
BernardiResult bernardi_grow(const Walk& w);

bool is_loopless(const CombinatorialMap& m);

// ---------------------------------------------------------------------------
// Tandem walks: prographs and standard Young tableaux

/// Oriented cubic planar structure of products (two inputs, one output)
/// and coproducts (one input, two outputs), one global input and output.
/// Stored as the dual of the mated triangulation; the io edge is the one
/// through infinity from the global output back to the global input.
struct Prograph {
    CombinatorialMap map;
    std::vector<char> vertex_type;      // per map vertex: 'c' coproduct, 'p' product
    std::map<EdgeId, Dart> orientation; // tail dart per edge, bottom-to-top flow
    EdgeId io_edge = 0;
    DecoratedMap decorated() const;
    std::string canonical_string() const;
};

Prograph tandem_to_prograph(const Walk& w);
Walk prograph_to_tandem(const Prograph& p);
/// degree-3 vertices, type-consistent in/out degrees, acyclic off io_edge
bool validate_prograph(const Prograph& p, std::string* why = nullptr);

struct YoungTableau3 {
    std::array<std::vector<int>, 3> rows;
    bool valid() const; // rectangular 3 x n, rows and columns increasing
    std::string to_string() const; // three comma-separated rows, one per line
    static YoungTableau3 parse(const std::string& text);
    bool operator==(const YoungTableau3&) const = default;
};

YoungTableau3 tandem_to_syt(const Walk& w);
Walk syt_to_tandem(const YoungTableau3& t);

// ---------------------------------------------------------------------------
// KMSW: walks with step set {(1,-1)} u {(-i,j)} <-> bipolar-oriented maps

struct BipolarMap {
    CombinatorialMap map;
    std::map<EdgeId, Dart> orientation; // tail dart per edge, west to east
    int external_face = -1;             // index into map.faces()
    DecoratedMap decorated() const;
};

/// Mate a confined walk from (0,n) to (m,0) with steps in S, keeping the
/// unmatched boundary open; orient every edge west to east.
BipolarMap kmsw_to_bipolar(const Walk& w);

struct BipolarCheck {
    bool acyclic = false;
    bool unique_source = false;
    bool unique_sink = false;
    bool poles_on_outer = false;
    bool ok() const { return acyclic && unique_source && unique_sink && poles_on_outer; }
};
BipolarCheck validate_bipolar(const BipolarMap& m);
std::vector<int> internal_face_degrees(const BipolarMap& m);

// ---------------------------------------------------------------------------
// Schnyder woods <-> bc-avoiding tandem words ((1,0),(-1,1),(0,-1) letters)

struct SchnyderWood {
    CombinatorialMap map; // rooted at the external blue edge dart, tail at the red vertex
    std::map<EdgeId, Color> colors;     // internal edges plus the blue external edge
    std::map<EdgeId, Dart> orientation; // tail dart per colored edge, toward the tree roots
    DecoratedMap decorated() const;

    int external_face() const;  // face on the left of the root dart
    int red_vertex() const;     // tail of the root dart
    int blue_vertex() const;    // head of the root dart
    int green_vertex() const;   // remaining external corner
};

/// Word -> wood: mate with the NE-SW contraction, keep the boundary open,
/// color the right tree blue, the c-triangle bases red, the rest green.
SchnyderWood tandem_to_schnyder(const Walk& w);
/// Wood -> word: contour of the blue tree, a up, b down, c per incoming
/// red edge, skipping the final descent.
Walk schnyder_to_tandem(const SchnyderWood& wood);

bool validate_schnyder(const SchnyderWood& wood, std::string* why = nullptr);

} // namespace treemate
