#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "treemate/bijections.hpp"
#include "treemate/counting.hpp"
#include "treemate/map_io.hpp"
#include "treemate/mating.hpp"
#include "treemate/render.hpp"
#include "treemate/walks.hpp"

namespace {

using namespace treemate;

Point parse_point_flag(const std::string& s) {
    auto comma = s.find(',');
    if (comma == std::string::npos) throw Error("expected \"x,y\", got '" + s + "'");
    return {std::stoll(s.substr(0, comma)), std::stoll(s.substr(comma + 1))};
}

AlphabetRef load_family(const std::string& family, int budget) {
    return StepAlphabet::family(family, budget);
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void spit(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write '" + path + "'");
    out << content;
}

std::string stem_of(const std::string& path) {
    auto dot = path.find_last_of('.');
    auto slash = path.find_last_of('/');
    if (dot == std::string::npos || (slash != std::string::npos && dot < slash)) return path;
    return path.substr(0, dot);
}

void emit(const std::string& out_path, const std::string& content) {
    if (out_path.empty())
        std::cout << content;
    else
        spit(out_path, content);
}

Walk get_walk(const std::string& walk_text, const std::string& in_path, const AlphabetRef& alphabet) {
    if (!walk_text.empty()) return parse_walk_text(walk_text, alphabet);
    if (!in_path.empty()) {
        std::istringstream is(slurp(in_path));
        std::string line;
        while (std::getline(is, line)) {
            if (!line.empty()) return parse_walk_text(line, alphabet);
        }
        throw Error("no walk found in '" + in_path + "'");
    }
    throw Error("a walk is required: pass --walk or --in");
}

SpanningTreeMap spanning_tree_from_file(const DecoratedMap& dm) {
    if (!dm.tree_edges) throw Error("map file has no tree decoration");
    Dart root = dm.marked.value_or(dm.map.root());
    return SpanningTreeMap{dm.map, *dm.tree_edges, root};
}

int run_cli(int argc, char** argv) {
    CLI::App app{"treemate: quarter-plane walks, matings, and map bijections"};
    app.require_subcommand(1);

    std::string family = "small", bijection, walk_text, in_path, out_path, format = "text";
    std::string rule_bits, boundary = "closed", render_kind;
    int length = 0, size_n = 0, budget = 3;
    std::string start_s = "0,0", end_s;

    auto add_common = [&](CLI::App* cmd, bool with_family) {
        if (with_family) cmd->add_option("--family", family, "step family name");
        cmd->add_option("--budget", budget, "reach bound for unbounded families (default 3)");
        cmd->add_option("--out", out_path, "output file (default stdout)");
    };

    auto* c_enum = app.add_subcommand("enumerate", "list confined walks in lexicographic step order");
    add_common(c_enum, true);
    c_enum->add_option("--length", length, "walk length")->required();
    c_enum->add_option("--start", start_s, "start point x,y (default 0,0)");
    c_enum->add_option("--end", end_s, "end point x,y (default = start)");

    auto* c_count = app.add_subcommand("count", "count confined walks exactly");
    add_common(c_count, true);
    c_count->add_option("--length", length, "walk length")->required();
    c_count->add_option("--start", start_s, "start point x,y (default 0,0)");
    c_count->add_option("--end", end_s, "end point x,y (default = start)");

    auto* c_mate = app.add_subcommand("mate", "run the mating construction on one walk");
    add_common(c_mate, true);
    c_mate->add_option("--walk", walk_text, "walk text (letters or (dx,dy);... tokens)");
    c_mate->add_option("--in", in_path, "read the walk from a file");
    c_mate->add_option("--rule", rule_bits,
                       "contraction override: one bit per oblique cell, 0 = NW-SE, 1 = NE-SW");
    c_mate->add_option("--boundary", boundary, "closed|open (default closed)");
    c_mate->add_option("--render", render_kind, "also write svg (diagram) or dot (map + dual)");

    auto* c_fwd = app.add_subcommand("forward", "walk to decorated map through a bijection");
    add_common(c_fwd, false);
    c_fwd->add_option("--bijection", bijection,
                      "ry|lukasiewicz|mullin|kreweras|bernardi|tandem-prograph|tandem-syt|kmsw|schnyder")
        ->required();
    c_fwd->add_option("--walk", walk_text, "walk text");
    c_fwd->add_option("--in", in_path, "read the walk from a file");

    auto* c_inv = app.add_subcommand("inverse", "decorated map back to its walk");
    add_common(c_inv, false);
    c_inv->add_option("--bijection", bijection, "ry|lukasiewicz|mullin|tandem-prograph|tandem-syt|schnyder")
        ->required();
    c_inv->add_option("--in", in_path, "map or tableau file")->required();

    auto* c_verify = app.add_subcommand("verify", "brute force vs formulas vs bijection images");
    add_common(c_verify, true);
    c_verify->add_option("--n", size_n, "family size parameter")->required();

    auto* c_render = app.add_subcommand("render", "rectangle diagram svg or map dot for one walk");
    add_common(c_render, true);
    c_render->add_option("--walk", walk_text, "walk text");
    c_render->add_option("--in", in_path, "read the walk from a file");
    c_render->add_option("--format", format, "svg|dot (default svg)");
    c_render->add_option("--rule", rule_bits, "contraction override bits for dot export");

    CLI11_PARSE(app, argc, argv);

    if (c_enum->parsed()) {
        auto alphabet = load_family(family, budget);
        Point start = parse_point_flag(start_s);
        Point end = end_s.empty() ? start : parse_point_flag(end_s);
        std::ostringstream os;
        for (const Walk& w : enumerate_walks(alphabet, length, start, end))
            os << format_walk_text(w) << '\n';
        emit(out_path, os.str());
        return 0;
    }
    if (c_count->parsed()) {
        auto alphabet = load_family(family, budget);
        Point start = parse_point_flag(start_s);
        Point end = end_s.empty() ? start : parse_point_flag(end_s);
        std::ostringstream os;
        os << count_walks(alphabet, length, start, end) << '\n';
        emit(out_path, os.str());
        return 0;
    }
    if (c_mate->parsed()) {
        auto alphabet = load_family(family, budget);
        Walk w = get_walk(walk_text, in_path, alphabet);
        ContractionRule rule =
            rule_bits.empty() ? (family == "kreweras" ? ContractionRule::kreweras()
                                                      : ContractionRule::identify_uz())
                              : ContractionRule::from_bits(rule_bits);
        MateOptions opts;
        if (boundary == "closed") opts.boundary = BoundaryKind::Closed;
        else if (boundary == "open") opts.boundary = BoundaryKind::Open;
        else throw Error("unknown boundary policy '" + boundary + "'");
        if (family == "kmsw")
            opts.expand = [](const Step& s) { return !(s == Step{1, -1}) && s.reach() >= 2; };
        MatedMap mm = mate(w, rule, opts);
        emit(out_path, serialize_map(mm.decorated()));
        if (!render_kind.empty()) {
            if (out_path.empty()) throw Error("--render needs --out to name the files");
            std::string stem = stem_of(out_path);
            if (render_kind == "svg") {
                spit(stem + ".svg", render_diagram_svg(mm.diagram));
            } else if (render_kind == "dot") {
                spit(stem + ".dot", render_map_dot(mm.decorated(), "mated"));
                DecoratedMap dual{mm.map.dual(), std::nullopt, std::nullopt, {}, {}, std::nullopt};
                spit(stem + ".dual.dot", render_map_dot(dual, "dual"));
            } else {
                throw Error("unknown render kind '" + render_kind + "'");
            }
        }
        return 0;
    }
    if (c_fwd->parsed()) {
        if (bijection == "ry") {
            Walk w = get_walk(walk_text, in_path, StepAlphabet::family("rY"));
            emit(out_path, serialize_map(ry_forward(w).decorated()));
        } else if (bijection == "lukasiewicz") {
            Walk w = get_walk(walk_text, in_path, StepAlphabet::family("lukasiewicz", budget));
            emit(out_path, serialize_map(lukasiewicz_forward(w).decorated()));
        } else if (bijection == "mullin") {
            Walk w = get_walk(walk_text, in_path, StepAlphabet::family("straight"));
            emit(out_path, serialize_map(mullin_map(w)));
        } else if (bijection == "kreweras") {
            Walk w = get_walk(walk_text, in_path, StepAlphabet::family("kreweras"));
            emit(out_path, serialize_map(kreweras_forward(w).decorated()));
        } else if (bijection == "bernardi") {
            Walk w = get_walk(walk_text, in_path, StepAlphabet::family("kreweras"));
            auto b = bernardi_grow(w);
            emit(out_path, serialize_map(DecoratedMap{b.map, b.tree, b.map.root(), {}, {}, std::nullopt}));
        } else if (bijection == "tandem-prograph") {
            Walk w = get_walk(walk_text, in_path, StepAlphabet::family("tandem"));
            emit(out_path, serialize_map(tandem_to_prograph(w).decorated()));
        } else if (bijection == "tandem-syt") {
            Walk w = get_walk(walk_text, in_path, StepAlphabet::family("tandem"));
            emit(out_path, tandem_to_syt(w).to_string());
        } else if (bijection == "kmsw") {
            Walk w = get_walk(walk_text, in_path, StepAlphabet::family("kmsw", budget));
            emit(out_path, serialize_map(kmsw_to_bipolar(w).decorated()));
        } else if (bijection == "schnyder") {
            Walk w = get_walk(walk_text, in_path, StepAlphabet::family("schnyder"));
            auto wood = tandem_to_schnyder(w);
            std::string why;
            if (!validate_schnyder(wood, &why)) throw Error("generated wood is invalid: " + why);
            emit(out_path, serialize_map(wood.decorated()));
        } else {
            throw Error("unknown bijection '" + bijection + "'");
        }
        return 0;
    }
    if (c_inv->parsed()) {
        if (bijection == "tandem-syt") {
            auto t = YoungTableau3::parse(slurp(in_path));
            emit(out_path, format_walk_text(syt_to_tandem(t)) + "\n");
            return 0;
        }
        DecoratedMap dm = parse_map(slurp(in_path));
        if (bijection == "ry") {
            emit(out_path, format_walk_text(ry_inverse(spanning_tree_from_file(dm))) + "\n");
        } else if (bijection == "lukasiewicz") {
            auto alphabet = StepAlphabet::family("lukasiewicz", budget);
            emit(out_path, format_walk_text(lukasiewicz_inverse(spanning_tree_from_file(dm), alphabet)) + "\n");
        } else if (bijection == "mullin") {
            emit(out_path, format_walk_text(mullin_walk(dm)) + "\n");
        } else if (bijection == "tandem-prograph") {
            Prograph p{dm.map, {}, dm.orientation, dm.map.edge_of(dm.map.root())};
            p.vertex_type.assign(static_cast<std::size_t>(dm.map.vertex_count()), '?');
            std::vector<int> indeg(static_cast<std::size_t>(dm.map.vertex_count()), 0);
            for (const auto& [e, tail] : p.orientation) {
                (void)e;
                indeg[static_cast<std::size_t>(dm.map.vertex_of(dm.map.alpha(tail)))]++;
            }
            for (int v = 0; v < dm.map.vertex_count(); ++v)
                p.vertex_type[static_cast<std::size_t>(v)] =
                    indeg[static_cast<std::size_t>(v)] == 1 ? 'c' : 'p';
            emit(out_path, format_walk_text(prograph_to_tandem(p)) + "\n");
        } else if (bijection == "schnyder") {
            SchnyderWood wood{dm.map, dm.colors, dm.orientation};
            std::string why;
            if (!validate_schnyder(wood, &why)) throw Error("map file is not a Schnyder wood: " + why);
            emit(out_path, format_walk_text(schnyder_to_tandem(wood)) + "\n");
        } else {
            throw Error("no inverse for bijection '" + bijection + "'");
        }
        return 0;
    }
    if (c_verify->parsed()) {
        CountReport rep = verify_family(family, size_n);
        std::ostringstream os;
        os << CountReport::csv_header() << '\n' << rep.to_csv() << '\n';
        emit(out_path, os.str());
        return rep.all_agree() ? 0 : 2;
    }
    if (c_render->parsed()) {
        auto alphabet = load_family(family, budget);
        Walk w = get_walk(walk_text, in_path, alphabet);
        MateOptions opts;
        if (family == "kmsw") {
            opts.boundary = BoundaryKind::Open;
            opts.expand = [](const Step& s) { return !(s == Step{1, -1}) && s.reach() >= 2; };
        } else if (w.start != w.end()) {
            opts.boundary = BoundaryKind::Open;
        }
        if (format == "svg") {
            emit(out_path, render_diagram_svg(build_diagram(w, opts)));
        } else if (format == "dot") {
            ContractionRule rule =
                rule_bits.empty() ? (family == "kreweras" ? ContractionRule::kreweras()
                                                          : ContractionRule::identify_uz())
                                  : ContractionRule::from_bits(rule_bits);
            emit(out_path, render_map_dot(mate(w, rule, opts).decorated(), "mated"));
        } else {
            throw Error("unknown render format '" + format + "'");
        }
        return 0;
    }
    return 1;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run_cli(argc, argv);
    } catch (const treemate::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
