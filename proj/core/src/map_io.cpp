#include "treemate/map_io.hpp"

#include <algorithm>
#include <sstream>

namespace treemate {

std::string serialize_map(const DecoratedMap& dm) {
    const CombinatorialMap& m = dm.map;
    std::ostringstream os;
    os << "darts " << m.dart_count() << '\n';
    os << "opposite:";
    for (Dart d = 1; d <= m.dart_count(); ++d)
        if (d < m.alpha(d)) os << " (" << d << ' ' << m.alpha(d) << ')';
    os << '\n';
    auto verts = m.vertices();
    std::sort(verts.begin(), verts.end(),
              [](const auto& a, const auto& b) {
                  return *std::min_element(a.begin(), a.end()) < *std::min_element(b.begin(), b.end());
              });
    for (auto cyc : verts) {
        auto least = std::min_element(cyc.begin(), cyc.end());
        std::rotate(cyc.begin(), least, cyc.end());
        os << "vertex:";
        for (Dart d : cyc) os << ' ' << d;
        os << '\n';
    }
    os << "root: " << m.root() << '\n';
    if (dm.tree_edges) {
        os << "tree:";
        for (EdgeId e : *dm.tree_edges) os << ' ' << e;
        os << '\n';
    }
    if (dm.marked) os << "marked: " << *dm.marked << '\n';
    for (const auto& [e, c] : dm.colors) os << "color: " << e << '=' << color_name(c) << '\n';
    if (!dm.orientation.empty()) {
        os << "orient:";
        for (const auto& [e, tail] : dm.orientation) os << ' ' << tail;
        os << '\n';
    }
    if (dm.hamiltonian) {
        os << "ham:";
        for (Dart f : dm.hamiltonian->faces) os << ' ' << f;
        os << " /";
        for (EdgeId e : dm.hamiltonian->edges) os << ' ' << e;
        os << '\n';
    }
    return os.str();
}

namespace {

std::vector<int> parse_ints(const std::string& s) {
    std::istringstream is(s);
    std::vector<int> out;
    int v;
    while (is >> v) out.push_back(v);
    if (!is.eof()) throw Error("map parse error: expected integers in '" + s + "'");
    return out;
}

} // namespace

DecoratedMap parse_map_stream(std::istream& in) {
    std::string line;
    int n_darts = -1;
    std::vector<std::pair<Dart, Dart>> opposite;
    std::vector<std::vector<Dart>> cycles;
    Dart root = 0;
    std::optional<std::set<EdgeId>> tree;
    std::optional<Dart> marked;
    std::map<EdgeId, Color> colors;
    std::map<EdgeId, Dart> orientation;
    std::optional<Hamiltonian> ham;
    std::vector<Dart> orient_tails;

    while (std::getline(in, line)) {
        if (line.empty()) continue;
        auto colon = line.find(' ');
        if (line.rfind("darts ", 0) == 0) {
            n_darts = std::stoi(line.substr(6));
        } else if (line.rfind("opposite:", 0) == 0) {
            std::string rest = line.substr(9);
            std::replace(rest.begin(), rest.end(), '(', ' ');
            std::replace(rest.begin(), rest.end(), ')', ' ');
            auto vals = parse_ints(rest);
            if (vals.size() % 2) throw Error("map parse error: odd opposite list");
            for (std::size_t i = 0; i + 1 < vals.size(); i += 2) opposite.emplace_back(vals[i], vals[i + 1]);
        } else if (line.rfind("vertex:", 0) == 0) {
            cycles.push_back(parse_ints(line.substr(7)));
        } else if (line.rfind("root:", 0) == 0) {
            root = std::stoi(line.substr(5));
        } else if (line.rfind("tree:", 0) == 0) {
            auto vals = parse_ints(line.substr(5));
            tree = std::set<EdgeId>(vals.begin(), vals.end());
        } else if (line.rfind("marked:", 0) == 0) {
            marked = std::stoi(line.substr(7));
        } else if (line.rfind("color:", 0) == 0) {
            std::string rest = line.substr(6);
            auto eq = rest.find('=');
            if (eq == std::string::npos) throw Error("map parse error: color line needs '='");
            EdgeId e = std::stoi(rest.substr(0, eq));
            std::string cname = rest.substr(eq + 1);
            while (!cname.empty() && std::isspace(static_cast<unsigned char>(cname.back()))) cname.pop_back();
            if (cname == "red") colors[e] = Color::Red;
            else if (cname == "green") colors[e] = Color::Green;
            else if (cname == "blue") colors[e] = Color::Blue;
            else throw Error("map parse error: unknown color '" + cname + "'");
        } else if (line.rfind("orient:", 0) == 0) {
            auto vals = parse_ints(line.substr(7));
            orient_tails.insert(orient_tails.end(), vals.begin(), vals.end());
        } else if (line.rfind("ham:", 0) == 0) {
            std::string rest = line.substr(4);
            auto slash = rest.find('/');
            if (slash == std::string::npos) throw Error("map parse error: ham line needs '/'");
            Hamiltonian h;
            h.faces = parse_ints(rest.substr(0, slash));
            h.edges = parse_ints(rest.substr(slash + 1));
            ham = std::move(h);
        } else {
            (void)colon;
            throw Error("map parse error: unknown line '" + line + "'");
        }
    }
    if (n_darts < 0) throw Error("map parse error: missing 'darts' line");
    if (static_cast<int>(opposite.size()) * 2 != n_darts)
        throw Error("map parse error: opposite pair count does not match dart count");
    DecoratedMap dm{CombinatorialMap::from_cycles(opposite, cycles, root),
                    std::move(tree),
                    marked,
                    std::move(colors),
                    {},
                    std::move(ham)};
    for (Dart tail : orient_tails) {
        if (tail < 1 || tail > dm.map.dart_count()) throw Error("map parse error: orient dart out of range");
        dm.orientation[dm.map.edge_of(tail)] = tail;
    }
    return dm;
}

DecoratedMap parse_map(const std::string& text) {
    std::istringstream is(text);
    return parse_map_stream(is);
}

} // namespace treemate
