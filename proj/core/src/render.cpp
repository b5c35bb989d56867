#include "treemate/render.hpp"

#include <algorithm>
#include <sstream>

namespace treemate {

std::string render_diagram_svg(const MatingDiagram& d) {
    const int n = d.cell_count();
    const int unit = 28, margin = 24;
    long long x = 0, y = 0, maxsum = 1;
    std::vector<long long> xs{0}, ys{0};
    for (int k = 1; k <= n; ++k) {
        x += d.left.step(k);
        y += d.right.step(k);
        xs.push_back(x);
        ys.push_back(y);
        maxsum = std::max(maxsum, x + y + 1);
    }
    const long long rect_w = maxsum + 1;
    const int width = static_cast<int>(rect_w) * unit + 2 * margin;
    const int height = std::max(1, n) * unit + 2 * margin;
    auto px = [&](long long offset) { return margin + static_cast<int>(offset) * unit; };
    auto py = [&](int level) { return height - margin - level * unit; };

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
       << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
    os << "  <rect x=\"" << margin << "\" y=\"" << margin << "\" width=\""
       << static_cast<int>(rect_w) * unit << "\" height=\"" << std::max(1, n) * unit
       << "\" fill=\"none\" stroke=\"black\"/>\n";
    // shaded oblique cells
    for (int k = 1; k <= n; ++k) {
        if (d.cell(k).kind != CellKind::Oblique) continue;
        os << "  <polygon points=\""
           << px(xs[static_cast<std::size_t>(k - 1)]) << ',' << py(k - 1) << ' '
           << px(rect_w - ys[static_cast<std::size_t>(k - 1)]) << ',' << py(k - 1) << ' '
           << px(rect_w - ys[static_cast<std::size_t>(k)]) << ',' << py(k) << ' '
           << px(xs[static_cast<std::size_t>(k)]) << ',' << py(k)
           << "\" fill=\"#dddddd\" stroke=\"none\"/>\n";
    }
    // rungs
    for (int k = 0; k <= n; ++k) {
        os << "  <line x1=\"" << px(xs[static_cast<std::size_t>(k)]) << "\" y1=\"" << py(k)
           << "\" x2=\"" << px(rect_w - ys[static_cast<std::size_t>(k)]) << "\" y2=\"" << py(k)
           << "\" stroke=\"#999999\"/>\n";
    }
    // left path (red), right path (blue)
    for (int k = 1; k <= n; ++k) {
        os << "  <line x1=\"" << px(xs[static_cast<std::size_t>(k - 1)]) << "\" y1=\"" << py(k - 1)
           << "\" x2=\"" << px(xs[static_cast<std::size_t>(k)]) << "\" y2=\"" << py(k)
           << "\" stroke=\"red\" stroke-width=\"2\"/>\n";
        os << "  <line x1=\"" << px(rect_w - ys[static_cast<std::size_t>(k - 1)]) << "\" y1=\""
           << py(k - 1) << "\" x2=\"" << px(rect_w - ys[static_cast<std::size_t>(k)]) << "\" y2=\""
           << py(k) << "\" stroke=\"blue\" stroke-width=\"2\"/>\n";
    }
    // cell numbers
    for (int k = 1; k <= n; ++k) {
        os << "  <text x=\"" << width / 2 << "\" y=\"" << py(k - 1) - unit / 2 + 4
           << "\" font-size=\"11\" text-anchor=\"middle\">" << k << "</text>\n";
    }
    os << "</svg>\n";
    return os.str();
}

std::string render_map_dot(const DecoratedMap& dm, const std::string& name) {
    const CombinatorialMap& m = dm.map;
    bool directed = !dm.orientation.empty();
    std::ostringstream os;
    os << (directed ? "digraph " : "graph ") << name << " {\n";
    os << "  node [shape=circle fontsize=10];\n";
    for (int v = 0; v < m.vertex_count(); ++v) os << "  v" << v << ";\n";
    for (Dart e = 1; e <= m.dart_count(); ++e) {
        if (m.edge_of(e) != e) continue;
        int a = m.vertex_of(e), b = m.vertex_of(m.alpha(e));
        auto it = dm.orientation.find(e);
        if (it != dm.orientation.end()) {
            a = m.vertex_of(it->second);
            b = m.vertex_of(m.alpha(it->second));
        }
        os << "  v" << a << (directed ? " -> v" : " -- v") << b << " [label=\"" << e << '"';
        if (directed && it == dm.orientation.end()) os << " dir=none";
        auto ct = dm.colors.find(e);
        if (ct != dm.colors.end()) os << " color=" << color_name(ct->second);
        if (dm.tree_edges && dm.tree_edges->count(e)) os << " style=bold";
        os << "];\n";
    }
    os << "}\n";
    return os.str();
}

} // namespace treemate
