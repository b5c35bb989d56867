#include "treemate/mating.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <numeric>

namespace treemate {

ContractionRule ContractionRule::identify_uz() {
    return {[](const MatingDiagram&, const QuadCell&) { return Contraction::IdentifyUZ; }};
}

ContractionRule ContractionRule::identify_vw() {
    return {[](const MatingDiagram&, const QuadCell&) { return Contraction::IdentifyVW; }};
}

ContractionRule ContractionRule::kreweras() {
    return {[](const MatingDiagram&, const QuadCell& c) {
        if (!c.matched_left || !c.matched_right)
            throw Error("kreweras rule: oblique cell " + std::to_string(c.index) +
                        " lacks matched side indices");
        return *c.matched_left < *c.matched_right ? Contraction::IdentifyUZ : Contraction::IdentifyVW;
    }};
}

ContractionRule ContractionRule::from_bits(const std::string& bits) {
    return {[bits](const MatingDiagram& d, const QuadCell& c) {
        int pos = 0;
        for (int k = 1; k < c.index; ++k)
            if (d.cell(k).kind == CellKind::Oblique) ++pos;
        if (pos >= static_cast<int>(bits.size()))
            throw Error("contraction rule bits too short: need one bit per oblique cell");
        char b = bits[static_cast<std::size_t>(pos)];
        if (b == '0') return Contraction::IdentifyUZ;
        if (b == '1') return Contraction::IdentifyVW;
        throw Error("contraction rule bits must be '0' or '1'");
    }};
}

namespace {

bool default_expand(const Step& s) { return !s.is_small(); }

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] =
                parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
    }
};

} // namespace

std::pair<LatticePath, LatticePath> project(const Walk& w) {
    LatticePath left, right;
    for (const Step& s : w.steps) {
        if (default_expand(s)) {
            for (const Step& u : expand_step(s)) {
                left.steps.push_back(u.dx);
                right.steps.push_back(u.dy);
            }
        } else {
            left.steps.push_back(s.dx);
            right.steps.push_back(s.dy);
        }
    }
    return {left, right};
}

MatingDiagram build_diagram(const Walk& w, const MateOptions& opts) {
    if (!is_confined(w)) throw Error("build_diagram: walk is not confined to the quarter plane");
    auto expand = opts.expand ? opts.expand : default_expand;
    MatingDiagram d;
    int cell = 0, block = -1;
    for (std::size_t t = 0; t < w.steps.size(); ++t) {
        const Step& s = w.steps[t];
        std::vector<Step> units;
        if (expand(s) && s.reach() >= 2)
            units = expand_step(s);
        else
            units = {s};
        ++block;
        d.block_first.push_back(cell + 1);
        d.block_step.push_back(static_cast<int>(t) + 1);
        for (const Step& u : units) {
            if (!u.is_small()) throw Error("build_diagram: non-small unit step after expansion");
            ++cell;
            QuadCell c;
            c.index = cell;
            c.dx = u.dx;
            c.dy = u.dy;
            c.kind = u.is_oblique() ? CellKind::Oblique
                                    : (u.dx == 0 && u.dy == 0 ? CellKind::Degenerate : CellKind::Straight);
            c.orig_step = static_cast<int>(t) + 1;
            d.cells.push_back(c);
            d.block_of.push_back(block);
            d.left.steps.push_back(u.dx);
            d.right.steps.push_back(u.dy);
        }
        d.block_last.push_back(cell);
    }
    d.left_matching = match_path(d.left);
    d.right_matching = match_path(d.right);
    for (QuadCell& c : d.cells) {
        if (c.dx != 0) c.matched_left = d.left_matching.partner(c.index);
        if (c.dy != 0) c.matched_right = d.right_matching.partner(c.index);
    }
    return d;
}

namespace {

// Picture bookkeeping for the quotient construction. Picture edges:
// rungs 0..n, left path edges 1..n, right path edges 1..n. The canonical
// dart direction is west->east for rungs and level-ascending for path
// edges; the reversed dart is pic*2+1.
struct Picture {
    int n; // cell count
    int rung_eid(int level) const { return level; }
    int left_eid(int k) const { return n + k; }          // k in 1..n
    int right_eid(int k) const { return 2 * n + k; }     // k in 1..n
    int edge_total() const { return 3 * n + 1; }

    int dart(int eid, bool rev) const { return eid * 2 + (rev ? 1 : 0); }
    int rung(int level, bool rev = false) const { return dart(rung_eid(level), rev); }
    int left(int k, bool rev = false) const { return dart(left_eid(k), rev); }
    int right(int k, bool rev = false) const { return dart(right_eid(k), rev); }

    // vertices: (L,k) -> k, (R,k) -> n+1+k
    int vL(int k) const { return k; }
    int vR(int k) const { return n + 1 + k; }
    int vertex_total() const { return 2 * (n + 1); }

    int origin_of(int pic_dart, const MatingDiagram& d) const {
        int eid = pic_dart / 2;
        bool rev = pic_dart & 1;
        if (eid <= n) return rev ? vR(eid) : vL(eid);
        if (eid <= 2 * n) {
            int k = eid - n;
            return rev ? vL(k) : vL(k - 1);
        }
        int k = eid - 2 * n;
        (void)d;
        return rev ? vR(k) : vR(k - 1);
    }

    // +1 if the dart's geometric direction has positive east component
    int east_sign(int pic_dart, const MatingDiagram& d) const {
        int eid = pic_dart / 2;
        int s = (pic_dart & 1) ? -1 : +1;
        if (eid <= n) return s;
        if (eid <= 2 * n) return s * d.left.step(eid - n);
        return -s * d.right.step(eid - 2 * n);
    }
};

} // namespace

MatedMap mate(const Walk& w, const ContractionRule& rule, const MateOptions& opts) {
    if (!rule.choose) throw Error("mate: contraction rule has no chooser");
    MatingDiagram d = build_diagram(w, opts);
    const int n = d.cell_count();
    const Picture pic{n};
    const BoundaryKind boundary = opts.boundary;

    if (boundary == BoundaryKind::Closed && w.start != w.end())
        throw Error("mate: closed boundary policy requires a walk that returns to its start");

    // trivial walk: the contracted rectangle boundary alone
    if (n == 0) {
        std::vector<Dart> alpha{0, 2, 1};
        std::vector<Dart> sigma_closed{0, 2, 1}; // loop at one vertex
        std::vector<Dart> sigma_open{0, 1, 2};   // plain edge
        CombinatorialMap m(alpha, boundary == BoundaryKind::Closed ? sigma_closed : sigma_open, 1);
        MatedMap out{std::move(m), std::move(d), {}, {}, {}, {}, {}, std::nullopt, 1, 1, {}, 0, 0, 0};
        out.edge_members = {{PicEdge{PicKind::Rung, 0}}};
        out.east_dart_of_edge = {1};
        out.bottom_side_edge = 1;
        out.top_side_edge = 1;
        out.pic_to_final = {1, 2};
        if (boundary == BoundaryKind::Open) out.external_face = FaceInfo{0, 2, out.map.face_of(2)};
        return out;
    }

    // which blocks survive as faces, which single oblique cells contract
    std::vector<char> contracted(static_cast<std::size_t>(n) + 1, 0);
    std::vector<Contraction> choice(static_cast<std::size_t>(n) + 1, Contraction::IdentifyUZ);
    for (int k = 1; k <= n; ++k) {
        const QuadCell& c = d.cell(k);
        int b = d.block_of[static_cast<std::size_t>(k - 1)];
        bool single = d.block_first[static_cast<std::size_t>(b)] == d.block_last[static_cast<std::size_t>(b)];
        if (single && c.kind == CellKind::Oblique) {
            contracted[static_cast<std::size_t>(k)] = 1;
            choice[static_cast<std::size_t>(k)] = rule.choose(d, c);
        }
    }

    UnionFind darts(pic.edge_total() * 2);
    UnionFind verts(pic.vertex_total());
    std::vector<char> edge_dead(static_cast<std::size_t>(pic.edge_total()), 0);

    auto unite_darts = [&](int x, int y) {
        verts.unite(pic.origin_of(x, d), pic.origin_of(y, d));
        verts.unite(pic.origin_of(x ^ 1, d), pic.origin_of(y ^ 1, d));
        darts.unite(x, y);
        darts.unite(x ^ 1, y ^ 1);
    };

    // path contraction: shrink zero steps, sew matched pairs
    for (int k = 1; k <= n; ++k) {
        if (d.left.step(k) == 0) {
            edge_dead[static_cast<std::size_t>(pic.left_eid(k))] = 1;
            verts.unite(pic.vL(k - 1), pic.vL(k));
        }
        if (d.right.step(k) == 0) {
            edge_dead[static_cast<std::size_t>(pic.right_eid(k))] = 1;
            verts.unite(pic.vR(k - 1), pic.vR(k));
        }
    }
    for (const auto& [i, j] : d.left_matching.matched) unite_darts(pic.left(i), pic.left(j, true));
    for (const auto& [i, j] : d.right_matching.matched) unite_darts(pic.right(i), pic.right(j, true));

    // erase block-internal rungs
    for (std::size_t b = 0; b < d.block_first.size(); ++b)
        for (int lvl = d.block_first[b]; lvl < d.block_last[b]; ++lvl)
            edge_dead[static_cast<std::size_t>(pic.rung_eid(lvl))] = 1;

    // contract oblique cells
    for (int k = 1; k <= n; ++k) {
        if (!contracted[static_cast<std::size_t>(k)]) continue;
        if (choice[static_cast<std::size_t>(k)] == Contraction::IdentifyUZ) {
            unite_darts(pic.left(k), pic.rung(k - 1));
            unite_darts(pic.right(k, true), pic.rung(k, true));
        } else {
            unite_darts(pic.rung(k), pic.left(k, true));
            unite_darts(pic.right(k), pic.rung(k - 1, true));
        }
    }

    // external cycle slots: bottom side, unmatched left edges bottom-up,
    // top side, unmatched right edges top-down
    std::vector<int> slots;
    slots.push_back(pic.rung(0, true));
    {
        std::vector<int> ks = d.left_matching.unmatched_downs;
        ks.insert(ks.end(), d.left_matching.unmatched_ups.begin(), d.left_matching.unmatched_ups.end());
        std::sort(ks.begin(), ks.end());
        for (int k : ks) slots.push_back(pic.left(k));
    }
    slots.push_back(pic.rung(n));
    {
        std::vector<int> ks = d.right_matching.unmatched_downs;
        ks.insert(ks.end(), d.right_matching.unmatched_ups.begin(), d.right_matching.unmatched_ups.end());
        std::sort(ks.begin(), ks.end(), std::greater<int>());
        for (int k : ks) slots.push_back(pic.right(k, true));
    }

    bool emit_external = false;
    if (boundary == BoundaryKind::Closed) {
        if (slots.size() != 2) throw Error("mate: closed boundary policy with unmatched path edges");
        unite_darts(pic.rung(0), pic.rung(n));
    } else if (boundary == BoundaryKind::Paired) {
        if (slots.size() % 2) throw Error("mate: paired boundary policy with an odd slot count");
        std::vector<char> used(slots.size(), 0);
        if (opts.pairing.size() * 2 != slots.size())
            throw Error("mate: paired boundary policy needs a pairing of all " +
                        std::to_string(slots.size()) + " boundary slots");
        for (auto [p, q] : opts.pairing) {
            if (p > q) std::swap(p, q);
            if (p < 0 || q >= static_cast<int>(slots.size()) || p == q)
                throw Error("mate: pairing slot out of range");
            if (used[static_cast<std::size_t>(p)]++ || used[static_cast<std::size_t>(q)]++)
                throw Error("mate: pairing repeats a slot");
        }
        for (const auto& [p, q] : opts.pairing)
            for (const auto& [r, s] : opts.pairing)
                if (p < r && r < q && q < s) throw Error("mate: pairing is not non-crossing");
        for (const auto& [p, q] : opts.pairing)
            unite_darts(slots[static_cast<std::size_t>(p)], slots[static_cast<std::size_t>(q)] ^ 1);
    } else {
        emit_external = true;
    }

    // face cycles over surviving blocks (bottom to top), then the external face
    std::vector<std::vector<int>> cycles; // picture darts
    std::vector<int> cycle_step;          // original step index, 0 = external
    for (std::size_t b = 0; b < d.block_first.size(); ++b) {
        int k1 = d.block_first[b], k2 = d.block_last[b];
        if (k1 == k2 && contracted[static_cast<std::size_t>(k1)]) continue;
        std::vector<int> cyc;
        cyc.push_back(pic.rung(k1 - 1));
        for (int k = k1; k <= k2; ++k)
            if (d.right.step(k) != 0) cyc.push_back(pic.right(k));
        cyc.push_back(pic.rung(k2, true));
        for (int k = k2; k >= k1; --k)
            if (d.left.step(k) != 0) cyc.push_back(pic.left(k, true));
        cycles.push_back(std::move(cyc));
        cycle_step.push_back(d.block_step[b]);
    }
    if (emit_external) {
        std::vector<int> cyc = slots;
        cycles.push_back(std::move(cyc));
        cycle_step.push_back(0);
    }

    if (cycles.empty())
        throw Error("mate: every cell is contracted and the boundary is closed; "
                    "the quotient collapses and is not a map");

    // final darts = classes appearing in the cycles
    std::map<int, Dart> final_of_rep;
    for (const auto& cyc : cycles)
        for (int pd : cyc) {
            int rep = darts.find(pd);
            if (final_of_rep.count(rep))
                continue;
            final_of_rep[rep] = 0;
        }
    // pair reps with their opposites, assign ids so that an edge is (2i-1, 2i)
    std::vector<int> reps;
    for (const auto& [rep, unused] : final_of_rep) {
        (void)unused;
        reps.push_back(rep);
    }
    Dart next_id = 1;
    for (int rep : reps) {
        if (final_of_rep[rep]) continue;
        int orep = darts.find(rep ^ 1);
        if (rep == orep) throw Error("mate: degenerate edge identification");
        if (!final_of_rep.count(orep))
            throw Error("mate: edge class with a single surviving side");
        final_of_rep[rep] = next_id++;
        final_of_rep[orep] = next_id++;
    }
    const int n_darts = next_id - 1;

    // fill tables
    std::vector<Dart> alpha(static_cast<std::size_t>(n_darts) + 1, 0);
    std::vector<Dart> phi(static_cast<std::size_t>(n_darts) + 1, 0);
    std::vector<char> seen_dart(static_cast<std::size_t>(n_darts) + 1, 0);
    for (int rep : reps) {
        Dart a = final_of_rep[rep];
        Dart b = final_of_rep[darts.find(rep ^ 1)];
        alpha[static_cast<std::size_t>(a)] = b;
        alpha[static_cast<std::size_t>(b)] = a;
    }
    for (const auto& cyc : cycles) {
        for (std::size_t i = 0; i < cyc.size(); ++i) {
            Dart a = final_of_rep.at(darts.find(cyc[i]));
            Dart b = final_of_rep.at(darts.find(cyc[(i + 1) % cyc.size()]));
            if (seen_dart[static_cast<std::size_t>(a)])
                throw Error("mate: a dart appears on two face boundaries");
            seen_dart[static_cast<std::size_t>(a)] = 1;
            phi[static_cast<std::size_t>(a)] = b;
        }
    }
    for (Dart x = 1; x <= n_darts; ++x)
        if (!seen_dart[static_cast<std::size_t>(x)]) throw Error("mate: dart missing from face boundaries");
    std::vector<Dart> sigma(static_cast<std::size_t>(n_darts) + 1, 0);
    for (Dart x = 1; x <= n_darts; ++x)
        sigma[static_cast<std::size_t>(x)] = phi[static_cast<std::size_t>(alpha[static_cast<std::size_t>(x)])];

    Dart root = final_of_rep.count(darts.find(pic.rung(0)))
                    ? final_of_rep[darts.find(pic.rung(0))]
                    : 1;
    CombinatorialMap m(std::move(alpha), std::move(sigma), root);

    // provenance
    MatedMap out{std::move(m), std::move(d), {}, {}, {}, {}, {}, std::nullopt, 0, 0, {}, 0, 0, 0};
    const MatingDiagram& dg = out.diagram;
    out.rung_base = 0;
    out.left_base = n;
    out.right_base = 2 * n;
    out.pic_to_final.assign(static_cast<std::size_t>(pic.edge_total() * 2), 0);
    for (int pd = 0; pd < pic.edge_total() * 2; ++pd) {
        if (edge_dead[static_cast<std::size_t>(pd / 2)]) continue;
        int rep = darts.find(pd);
        auto it = final_of_rep.find(rep);
        if (it != final_of_rep.end()) out.pic_to_final[static_cast<std::size_t>(pd)] = it->second;
    }
    out.edge_members.assign(static_cast<std::size_t>(n_darts / 2), {});
    out.east_dart_of_edge.assign(static_cast<std::size_t>(n_darts / 2), 0);
    std::vector<int> east_state(static_cast<std::size_t>(n_darts / 2), 2); // 2 = unset, 0 = inconsistent
    auto note_member = [&](int pd) {
        Dart f = out.pic_to_final[static_cast<std::size_t>(pd)];
        if (!f) return;
        int slot = (f - 1) / 2;
        int eid = pd / 2;
        PicEdge pe;
        if (eid <= n) pe = {PicKind::Rung, eid};
        else if (eid <= 2 * n) pe = {PicKind::LeftEdge, eid - n};
        else pe = {PicKind::RightEdge, eid - 2 * n};
        auto& mem = out.edge_members[static_cast<std::size_t>(slot)];
        if (std::find(mem.begin(), mem.end(), pe) == mem.end()) mem.push_back(pe);
        if (pe.kind == PicKind::LeftEdge) out.left_tree_edges.insert(out.map.edge_of(f));
        if (pe.kind == PicKind::RightEdge) out.right_tree_edges.insert(out.map.edge_of(f));
        // east orientation bookkeeping
        int sign = pic.east_sign(pd, dg);
        Dart east = sign > 0 ? f : out.map.alpha(f);
        auto& st = east_state[static_cast<std::size_t>(slot)];
        if (st == 2) {
            st = 1;
            out.east_dart_of_edge[static_cast<std::size_t>(slot)] = east;
        } else if (st == 1 && out.east_dart_of_edge[static_cast<std::size_t>(slot)] != east) {
            st = 0;
            out.east_dart_of_edge[static_cast<std::size_t>(slot)] = 0;
        }
    };
    for (int pd = 0; pd < pic.edge_total() * 2; ++pd) note_member(pd);
    for (auto& mem : out.edge_members) std::sort(mem.begin(), mem.end());

    // cross-check: sigma orbits match the vertex quotient
    {
        std::vector<int> dart_vertex(static_cast<std::size_t>(n_darts) + 1, -1);
        for (int pd = 0; pd < pic.edge_total() * 2; ++pd) {
            Dart f = out.pic_to_final[static_cast<std::size_t>(pd)];
            if (!f) continue;
            int v = verts.find(pic.origin_of(pd, dg));
            int& slot = dart_vertex[static_cast<std::size_t>(f)];
            if (slot == -1) slot = v;
            else if (slot != v) throw Error("mate: inconsistent vertex quotient");
        }
        for (Dart x = 1; x <= n_darts; ++x) {
            if (dart_vertex[static_cast<std::size_t>(x)] != dart_vertex[static_cast<std::size_t>(out.map.sigma(x))])
                throw Error("mate: rotation orbit leaves its vertex class");
        }
    }

    if (out.map.euler_characteristic() != 2)
        throw Error("mate: construction produced a non-planar map");

    // face provenance, in block order
    for (std::size_t b = 0; b < dg.block_first.size(); ++b) {
        int k1 = dg.block_first[b], k2 = dg.block_last[b];
        if (k1 == k2 && contracted[static_cast<std::size_t>(k1)]) continue;
        Dart bottom = out.pic_to_final[static_cast<std::size_t>(pic.rung(k1 - 1))];
        out.face_info.push_back(FaceInfo{dg.block_step[b], bottom, out.map.face_of(bottom)});
    }
    if (emit_external) {
        Dart dext = out.pic_to_final[static_cast<std::size_t>(pic.rung(0, true))];
        out.external_face = FaceInfo{0, dext, out.map.face_of(dext)};
    }
    out.bottom_side_edge = out.map.edge_of(out.pic_to_final[static_cast<std::size_t>(pic.rung(0))]);
    out.top_side_edge = out.map.edge_of(out.pic_to_final[static_cast<std::size_t>(pic.rung(n))]);
    return out;
}

Dart MatedMap::dart_of_rung(int level, bool reversed) const {
    return pic_to_final.at(static_cast<std::size_t>((rung_base + level) * 2 + (reversed ? 1 : 0)));
}

Dart MatedMap::dart_of_left(int k, bool reversed) const {
    return pic_to_final.at(static_cast<std::size_t>((left_base + k) * 2 + (reversed ? 1 : 0)));
}

Dart MatedMap::dart_of_right(int k, bool reversed) const {
    return pic_to_final.at(static_cast<std::size_t>((right_base + k) * 2 + (reversed ? 1 : 0)));
}

DecoratedMap MatedMap::decorated() const {
    DecoratedMap dm{map, std::nullopt, std::nullopt, {}, {}, std::nullopt};
    for (EdgeId e : left_tree_edges) dm.colors[e] = Color::Red;
    for (EdgeId e : right_tree_edges)
        if (!dm.colors.count(e)) dm.colors[e] = Color::Blue;
    return dm;
}

} // namespace treemate
