#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "treemate/map.hpp"
#include "treemate/paths.hpp"
#include "treemate/walks.hpp"

namespace treemate {

enum class CellKind { Straight, Oblique, Degenerate }; // degenerate = (0,0) step

/// One quadrilateral of the rectangle picture, corners named after the
/// figures: u = NW, v = NE, w = SW, z = SE. Cells are numbered 1..n bottom
/// to top over the unit-step expansion of the walk.
struct QuadCell {
    int index = 0;    // 1-based unit-cell index
    int dx = 0, dy = 0;
    CellKind kind = CellKind::Straight;
    int orig_step = 0;                 // 1-based index into the original walk
    std::optional<int> matched_left;   // partner of the left side in the left matching
    std::optional<int> matched_right;  // partner of the right side in the right matching
};

enum class BoundaryKind { Closed, Open, Paired };

/// The rectangle picture: the two projections drawn vertically plus one
/// cell per unit step.
struct MatingDiagram {
    LatticePath left, right;  // unit projections (horizontal, vertical)
    std::vector<QuadCell> cells;
    std::vector<int> block_of;      // per cell (1-based offset 0): block id
    std::vector<int> block_first, block_last; // per block: first/last cell index
    std::vector<int> block_step;    // per block: original step index (1-based)
    PathMatching left_matching, right_matching;

    int cell_count() const { return static_cast<int>(cells.size()); }
    const QuadCell& cell(int k) const { return cells.at(static_cast<std::size_t>(k - 1)); }
};

enum class Contraction { IdentifyUZ, IdentifyVW };

/// Per-oblique-cell contraction decision: which diagonal pair of corners is
/// identified. Total and deterministic given the diagram.
struct ContractionRule {
    std::function<Contraction(const MatingDiagram&, const QuadCell&)> choose;

    static ContractionRule identify_uz(); // NW-SE, used for rY / tandem / Lukasiewicz matings
    static ContractionRule identify_vw();
    /// i = index of the step matched below the left side (an "a" step),
    /// j = matched below the right side (a "b" step); i<j keeps UZ, i>j VW.
    static ContractionRule kreweras();
    /// One bit per oblique cell, bottom to top: '0' = identify u,z;
    /// '1' = identify v,w.
    static ContractionRule from_bits(const std::string& bits);
};

struct MateOptions {
    BoundaryKind boundary = BoundaryKind::Closed;
    /// For Paired: non-crossing pairing of boundary slot positions
    /// (0-based indices into MatedMap::boundary_slot_count slots, ordered
    /// bottom side, unmatched left edges bottom-up, top side, unmatched
    /// right edges top-down).
    std::vector<std::pair<int, int>> pairing;
    /// Steps satisfying this predicate are expanded into unit steps and
    /// their cells merged into a single face (internal rungs erased).
    /// Default: expand exactly the non-small steps.
    std::function<bool(const Step&)> expand;
};

/// Provenance of a final edge: which picture edges were sewn into it.
enum class PicKind { Rung, LeftEdge, RightEdge };
struct PicEdge {
    PicKind kind;
    int index; // rung level 0..n, or path step 1..n
    auto operator<=>(const PicEdge&) const = default;
};

struct FaceInfo {
    int orig_step = 0;      // 1-based original step index; 0 for the external face
    Dart bottom_dart = 0;   // final dart of the block's bottom rung (0 for external)
    int face_index = -1;    // index into map.faces()
};

/// Result of the mating construction with full provenance.
struct MatedMap {
    CombinatorialMap map;
    MatingDiagram diagram;

    std::vector<std::vector<PicEdge>> edge_members; // indexed by EdgeId via edge_slot
    std::vector<Dart> east_dart_of_edge;            // per edge slot: the west->east dart
    std::set<EdgeId> left_tree_edges;               // classes containing a left path edge
    std::set<EdgeId> right_tree_edges;              // classes containing a right path edge
    std::vector<FaceInfo> face_info;                // surviving blocks, bottom to top
    std::optional<FaceInfo> external_face;          // open boundary only
    EdgeId bottom_side_edge = 0;                    // class of the bottom rung (the distinguished edge)
    EdgeId top_side_edge = 0;                       // class of the top rung

    int edge_slot(EdgeId e) const { return (e - 1) / 2; }
    const std::vector<PicEdge>& members(EdgeId e) const {
        return edge_members.at(static_cast<std::size_t>(edge_slot(e)));
    }
    Dart east_dart(EdgeId e) const { return east_dart_of_edge.at(static_cast<std::size_t>(edge_slot(e))); }
    /// Final dart of a picture dart, 0 when dead. dir=false is the canonical
    /// direction (rungs west to east, path edges level-ascending).
    Dart dart_of_rung(int level, bool reversed = false) const;
    Dart dart_of_left(int k, bool reversed = false) const;
    Dart dart_of_right(int k, bool reversed = false) const;

    /// DecoratedMap view: red = left tree, blue = right tree (left wins on
    /// classes containing both).
    DecoratedMap decorated() const;

    // internal: picture dart -> final dart table
    std::vector<Dart> pic_to_final;
    int rung_base = 0, left_base = 0, right_base = 0; // pic edge id bases
};

/// The coordinate projections of a walk; non-small steps are expanded first.
std::pair<LatticePath, LatticePath> project(const Walk& w);

/// Build the rectangle diagram (one cell per unit step). Fails on
/// non-confined walks.
MatingDiagram build_diagram(const Walk& w, const MateOptions& opts = {});

/// The full mating construction: contract both projections into trees, sew
/// matched path edges, contract oblique cells per rule, apply the boundary
/// policy. Result is a validated genus-0 map with provenance.
MatedMap mate(const Walk& w, const ContractionRule& rule, const MateOptions& opts = {});

} // namespace treemate
