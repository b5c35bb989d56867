// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Criterion 10 runs the CLI binary passed via --cli.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "treemate/bijections.hpp"
#include "treemate/counting.hpp"
#include "treemate/map_io.hpp"
#include "treemate/mating.hpp"
#include "treemate/paths.hpp"
#include "treemate/walks.hpp"

using namespace treemate;

namespace {

int failures = 0;

void report(int number, const std::string& label, bool ok, const std::string& detail = "") {
    std::printf("[%s] criterion %2d: %s%s%s\n", ok ? "PASS" : "FAIL", number, label.c_str(),
                detail.empty() ? "" : " -- ", detail.c_str());
    if (!ok) ++failures;
}

// 1. rY bijection: counts 2, 28, 660 at 4n = 4, 8, 12; distinct images;
//    inverse of forward is the identity.
void criterion1() {
    auto ry = StepAlphabet::family("rY");
    const BigInt want[] = {2, 28, 660};
    bool ok = true;
    std::string detail;
    for (int n = 1; n <= 3; ++n) {
        auto walks = enumerate_walks(ry, 4 * n, {0, 0}, {0, 0});
        if (BigInt(walks.size()) != want[n - 1]) {
            ok = false;
            detail = "count at 4n=" + std::to_string(4 * n);
            break;
        }
        std::set<std::string> codes;
        for (const Walk& w : walks) {
            SpanningTreeMap m = ry_forward(w);
            codes.insert(m.canonical_string());
            if (ry_inverse(m).steps != w.steps) {
                ok = false;
                detail = "round trip at 4n=" + std::to_string(4 * n);
            }
        }
        if (codes.size() != walks.size()) {
            ok = false;
            detail = "images not pairwise distinct at 4n=" + std::to_string(4 * n);
        }
    }
    report(1, "rY walks <-> special cubic maps with complete spanning tree", ok, detail);
}

// 2. rY extended endpoint: 4 = C2*C2 walks total at 4n = 4; 2 special.
void criterion2() {
    auto ry = StepAlphabet::family("rY");
    auto closed = enumerate_walks(ry, 4, {0, 0}, {0, 0});
    auto shifted = enumerate_walks(ry, 4, {0, 0}, {2, 0});
    bool ok = closed.size() + shifted.size() == 4;
    int specials = 0;
    std::set<std::string> codes;
    for (const Walk& w : closed) {
        auto m = ry_forward(w);
        if (m.is_special()) ++specials;
        codes.insert(m.canonical_string());
        if (ry_inverse(m).steps != w.steps) ok = false;
    }
    for (const Walk& w : shifted) {
        auto m = ry_forward(w);
        if (m.is_special()) ++specials;
        codes.insert(m.canonical_string());
        if (ry_inverse(m).steps != w.steps) ok = false;
    }
    ok = ok && specials == 2 && codes.size() == 4;
    report(2, "rY endpoint (2,0): 4 = C2*C2 decorated maps, 2 special", ok);
}

// 3. Quartic counts 1, 6 at 3n = 3, 6; (0,k) steps match vertices of
//    degree k+2 for all Lukasiewicz walks of length <= 6, k <= 3.
void criterion3() {
    bool ok = true;
    std::string detail;
    auto quartic = StepAlphabet::family("quartic");
    if (enumerate_walks(quartic, 3, {0, 0}, {0, 0}).size() != 1) ok = false;
    if (enumerate_walks(quartic, 6, {0, 0}, {0, 0}).size() != 6) ok = false;
    if (!ok) detail = "quartic counts";
    auto luk = StepAlphabet::family("lukasiewicz", 3);
    for (int len = 1; len <= 6 && ok; ++len) {
        for (Point end : {Point{0, 0}, Point{2, 0}}) {
            for (const Walk& w : enumerate_walks(luk, len, {0, 0}, end)) {
                SpanningTreeMap m = lukasiewicz_forward(w);
                std::multiset<int> want, got;
                for (const Step& s : w.steps)
                    if (s.dx == 0) want.insert(s.dy + 2);
                for (int v = 0; v < m.map.vertex_count(); ++v) got.insert(m.map.degree_of_vertex(v));
                if (want != got) {
                    ok = false;
                    detail = "degree law at " + format_walk_text(w);
                }
                if (lukasiewicz_inverse(m, luk).steps != w.steps) {
                    ok = false;
                    detail = "round trip at " + format_walk_text(w);
                }
            }
        }
    }
    report(3, "quartic counts 1, 6 and the (0,k) -> degree k+2 law", ok, detail);
}

// 4. Tandem: counts 1, 5, 42; prograph and tableau round trips for all 48;
//    the abacbc tableau matches the displayed one.
void criterion4() {
    auto tan = StepAlphabet::family("tandem");
    const std::size_t want[] = {1, 5, 42};
    bool ok = true;
    std::string detail;
    for (int n = 1; n <= 3; ++n) {
        auto walks = enumerate_walks(tan, 3 * n, {0, 0}, {0, 0});
        if (walks.size() != want[n - 1]) {
            ok = false;
            detail = "count at 3n=" + std::to_string(3 * n);
        }
        for (const Walk& w : walks) {
            if (prograph_to_tandem(tandem_to_prograph(w)).steps != w.steps) {
                ok = false;
                detail = "prograph round trip " + w.letter_word();
            }
            if (syt_to_tandem(tandem_to_syt(w)).steps != w.steps) {
                ok = false;
                detail = "tableau round trip " + w.letter_word();
            }
        }
    }
    YoungTableau3 t = tandem_to_syt(parse_walk_text("abacbc", tan));
    if (t.rows[0] != std::vector<int>{1, 3} || t.rows[1] != std::vector<int>{2, 5} ||
        t.rows[2] != std::vector<int>{4, 6}) {
        ok = false;
        detail = "abacbc tableau";
    }
    report(4, "tandem counts 1, 5, 42 with prograph and tableau round trips", ok, detail);
}

// 5. Kreweras: brute 2 at 3n = 3 (both readings agree); brute decides at
//    3n = 6; bernardi_grow equals kreweras_forward through length 9; all
//    outputs loopless.
void criterion5() {
    auto kre = StepAlphabet::family("kreweras");
    bool ok = true;
    std::string detail;
    {
        auto r = kreweras_formula(1);
        auto walks = enumerate_walks(kre, 3, {0, 0}, {0, 0});
        if (walks.size() != 2 || r.reading_a != 2 || r.reading_b != 2) {
            ok = false;
            detail = "n=1 readings";
        }
    }
    {
        auto r = kreweras_formula(2);
        auto walks = enumerate_walks(kre, 6, {0, 0}, {0, 0});
        BigInt brute(walks.size());
        bool a_match = r.reading_a == brute, b_match = r.reading_b == brute;
        if (a_match || !b_match) {
            ok = false;
            detail = "n=2: brute " + brute.str() + " should match only the standard reading";
        }
    }
    for (int len : {3, 6, 9}) {
        for (const Walk& w : enumerate_walks(kre, len, {0, 0}, {0, 0})) {
            KrewerasResult r = kreweras_forward(w);
            if (!is_loopless(r.mated.map)) {
                ok = false;
                detail = "loop at " + w.letter_word();
            }
            if (r.cubic_canonical() != bernardi_grow(w).canonical()) {
                ok = false;
                detail = "bernardi mismatch at " + w.letter_word();
            }
        }
    }
    report(5, "Kreweras: formula readings, looplessness, Bernardi growth equivalence", ok, detail);
}

// 6. Mullin: round trips for all closed straight walks of length <= 6;
//    image count at length 2 equals 2.
void criterion6() {
    auto straight = StepAlphabet::family("straight");
    bool ok = true;
    std::string detail;
    for (int len = 2; len <= 6; len += 2) {
        std::set<std::string> images;
        for (const Walk& w : enumerate_walks(straight, len, {0, 0}, {0, 0})) {
            DecoratedMap dm = mullin_map(w);
            images.insert(canonical_decorated_string(dm));
            if (mullin_walk(dm).steps != w.steps) {
                ok = false;
                detail = "round trip " + format_walk_text(w);
            }
        }
        if (len == 2 && images.size() != 2) {
            ok = false;
            detail = "image count at length 2";
        }
    }
    report(6, "Mullin walk <-> triangulation with dual Hamiltonian cycle", ok, detail);
}

// 7. KMSW: bounded-S walks of length <= 6 from axis points give bipolar
//    maps with the face-degree law; the long example walk checks out.
void criterion7() {
    auto kmsw = StepAlphabet::family("kmsw", 3);
    bool ok = true;
    std::string detail;
    long long checked = 0;
    for (int len = 1; len <= 6 && ok; ++len) {
        // a step lowers y by at most 1 and raises x by at most 1
        for (int h = 0; h <= len; ++h) {
            for (int mx = 0; mx <= len; ++mx) {
                for (const Walk& w : enumerate_walks(kmsw, len, {0, h}, {mx, 0})) {
                    ++checked;
                    BipolarMap b = kmsw_to_bipolar(w);
                    if (!validate_bipolar(b).ok()) {
                        ok = false;
                        detail = "bipolar axioms at " + format_walk_text(w);
                        break;
                    }
                    std::multiset<int> want, got;
                    for (const Step& s : w.steps)
                        if (!(s == Step{1, -1})) want.insert(-s.dx + s.dy + 2);
                    for (int d : internal_face_degrees(b)) got.insert(d);
                    if (want != got) {
                        ok = false;
                        detail = "face degrees at " + format_walk_text(w);
                        break;
                    }
                }
            }
        }
    }
    Walk fig = parse_walk_text(
        "(1,-1);(0,2);(-1,0);(0,1);(1,-1);(1,-1);(-1,1);(0,1);(1,-1);(1,-1);(1,-1);(1,-1);"
        "(-1,0);(-2,1);(1,-1) @ (0,2)",
        kmsw);
    BipolarMap b = kmsw_to_bipolar(fig);
    if (!validate_bipolar(b).ok()) {
        ok = false;
        detail = "example walk axioms";
    }
    std::multiset<int> want, got;
    for (const Step& s : fig.steps)
        if (!(s == Step{1, -1})) want.insert(-s.dx + s.dy + 2);
    for (int d : internal_face_degrees(b)) got.insert(d);
    if (want != got) {
        ok = false;
        detail = "example walk face degrees";
    }
    report(7, "KMSW bipolar orientation axioms and face-degree law (" + std::to_string(checked) +
                  " walks)",
           ok, detail);
}

// 8. Schnyder: the 28-letter word round-trips; every bc-avoiding word to
//    (1,0) of length <= 10 gives a valid wood whose contour returns it.
void criterion8() {
    auto sch = StepAlphabet::family("schnyder");
    bool ok = true;
    std::string detail;
    const std::string paper = "aabbacabaccabacbbaacbbbacccc";
    {
        Walk w = parse_walk_text(paper, sch);
        SchnyderWood wood = tandem_to_schnyder(w);
        std::string why;
        if (!validate_schnyder(wood, &why)) {
            ok = false;
            detail = "paper word wood: " + why;
        }
        if (schnyder_to_tandem(wood).letter_word() != paper) {
            ok = false;
            detail = "paper word round trip";
        }
    }
    for (int len = 1; len <= 10 && ok; ++len) {
        for (const Walk& w : enumerate_walks(sch, len, {0, 0}, {1, 0})) {
            SchnyderWood wood = tandem_to_schnyder(w);
            std::string why;
            if (!validate_schnyder(wood, &why)) {
                ok = false;
                detail = w.letter_word() + ": " + why;
                break;
            }
            if (schnyder_to_tandem(wood).steps != w.steps) {
                ok = false;
                detail = "round trip " + w.letter_word();
                break;
            }
        }
    }
    report(8, "Schnyder woods: local condition and contour re-extraction", ok, detail);
}

// 9. Structural suite: chi = 2, degree sums, dual involution, and the
//    independent path/tree oracles.
void criterion9() {
    bool ok = true;
    std::string detail;
    // every mated map over the registered families, lengths <= 8 (and all
    // rule assignments over the full small-step alphabet at lengths <= 5)
    auto check_map = [&](const CombinatorialMap& m, const std::string& where) {
        if (m.euler_characteristic() != 2) {
            ok = false;
            detail = "chi != 2 at " + where;
        }
        std::size_t total = 0;
        for (const auto& f : m.faces()) total += f.size();
        if (total != static_cast<std::size_t>(2 * m.edge_count())) {
            ok = false;
            detail = "face degree sum at " + where;
        }
        for (Dart d = 1; d <= m.dart_count(); ++d)
            if (m.alpha(d) == d || m.alpha(m.alpha(d)) != d) {
                ok = false;
                detail = "opposite not an involution at " + where;
            }
        if (m.dual().dual().canonical_code() != m.canonical_code()) {
            ok = false;
            detail = "dual involution at " + where;
        }
    };
    for (const char* fam : {"rY", "kreweras", "tandem", "straight"}) {
        auto a = StepAlphabet::family(fam);
        for (int len = 0; len <= 8; ++len)
            for (const Walk& w : enumerate_walks(a, len, {0, 0}, {0, 0})) {
                ContractionRule rule = std::string(fam) == "kreweras" ? ContractionRule::kreweras()
                                                                      : ContractionRule::identify_uz();
                check_map(mate(w, rule, {}).map, std::string(fam) + " " + format_walk_text(w));
            }
    }
    auto small = StepAlphabet::family("small");
    for (int len = 0; len <= 5; ++len)
        for (const Walk& w : enumerate_walks(small, len, {0, 0}, {0, 0})) {
            int obliques = 0, straights = 0;
            for (const Step& s : w.steps) (s.is_oblique() ? obliques : straights)++;
            if (straights == 0 && len > 0) continue; // all cells contract: no map
            for (int mask = 0; mask < (1 << obliques); ++mask) {
                std::string bits;
                for (int i = 0; i < obliques; ++i) bits.push_back((mask >> i) & 1 ? '1' : '0');
                check_map(mate(w, ContractionRule::from_bits(bits), {}).map,
                          format_walk_text(w) + " bits " + bits);
            }
        }
    // Dyck <-> tree and Dyck <-> pairing against independent recursions
    std::function<std::string(const std::vector<int>&, std::size_t, std::size_t)> oracle =
        [&](const std::vector<int>& steps, std::size_t lo, std::size_t hi) -> std::string {
        if (lo >= hi) return "";
        int h = 0;
        std::size_t k = lo;
        for (; k < hi; ++k) {
            h += steps[k];
            if (h == 0) break;
        }
        return "(" + oracle(steps, lo + 1, k) + ")(" + oracle(steps, k + 1, hi) + ")";
    };
    std::function<void(std::vector<int>&, int, int)> recurse = [&](std::vector<int>& cur, int height,
                                                                   int len) {
        if (static_cast<int>(cur.size()) == len) {
            if (height != 0) return;
            LatticePath p{cur};
            BinaryTree t = dyck_to_tree(p);
            if (t.to_string() != oracle(p.steps, 0, p.steps.size())) {
                ok = false;
                detail = "dyck/tree oracle";
            }
            if (tree_to_dyck(t).steps != p.steps) {
                ok = false;
                detail = "tree/dyck inverse";
            }
            auto pairing = dyck_to_pairing(p);
            if (!is_noncrossing(pairing) || pairing_to_dyck(pairing).steps != p.steps) {
                ok = false;
                detail = "dyck/pairing oracle";
            }
            return;
        }
        cur.push_back(1);
        recurse(cur, height + 1, len);
        cur.pop_back();
        if (height > 0) {
            cur.push_back(-1);
            recurse(cur, height - 1, len);
            cur.pop_back();
        }
    };
    for (int len = 0; len <= 12; len += 2) {
        std::vector<int> cur;
        recurse(cur, 0, len);
    }
    report(9, "structural suite: chi, degree sums, dual involution, path oracles", ok, detail);
}

// 10. Determinism: repeated CLI runs produce byte-identical output.
void criterion10(const std::string& cli) {
    if (cli.empty()) {
        report(10, "CLI determinism (skipped: no --cli path given)", false);
        return;
    }
    bool ok = true;
    std::string detail;
    auto run = [&](const std::string& args, const std::string& outfile) {
        std::string cmd = cli + " " + args + " > " + outfile + " 2>&1";
        return std::system(cmd.c_str());
    };
    auto slurp = [](const std::string& path) {
        std::ifstream in(path, std::ios::binary);
        std::ostringstream os;
        os << in.rdbuf();
        return os.str();
    };
    const std::vector<std::string> commands = {
        "enumerate --family tandem --length 9",
        "count --family kreweras --length 12",
        "mate --family kreweras --walk aabbccbac",
        "forward --bijection schnyder --walk aabbacabaccabacbbaacbbbacccc",
        "verify --family tandem --n 2",
        "render --family kreweras --walk aabbccbac --format svg",
    };
    int idx = 0;
    for (const std::string& cmd : commands) {
        std::string f1 = "acceptance_out_a" + std::to_string(idx);
        std::string f2 = "acceptance_out_b" + std::to_string(idx);
        int r1 = run(cmd, f1);
        int r2 = run(cmd, f2);
        if (r1 != r2 || slurp(f1) != slurp(f2) || slurp(f1).empty()) {
            ok = false;
            detail = "command: " + cmd;
        }
        std::remove(f1.c_str());
        std::remove(f2.c_str());
        ++idx;
    }
    // a CLI-level round trip on the paper's Schnyder word
    {
        std::string map_file = "acceptance_wood.map";
        std::string word_file = "acceptance_word.txt";
        run("forward --bijection schnyder --walk aabbacabaccabacbbaacbbbacccc --out " + map_file, "/dev/null");
        run("inverse --bijection schnyder --in " + map_file, word_file);
        if (slurp(word_file) != "aabbacabaccabacbbaacbbbacccc\n") {
            ok = false;
            detail = "cli schnyder round trip";
        }
        std::remove(map_file.c_str());
        std::remove(word_file.c_str());
    }
    report(10, "CLI determinism and file round trip", ok, detail);
}

} // namespace

int main(int argc, char** argv) {
    std::string cli;
    for (int i = 1; i + 1 < argc; ++i)
        if (std::string(argv[i]) == "--cli") cli = argv[i + 1];

    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    criterion9();
    criterion10(cli);

    if (failures) {
        std::printf("%d criterion(s) failed\n", failures);
        return 1;
    }
    std::printf("all criteria passed\n");
    return 0;
}
