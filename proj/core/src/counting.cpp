#include "treemate/counting.hpp"

#include <set>
#include <sstream>

#include "treemate/bijections.hpp"

namespace treemate {

BigInt factorial(int n) {
    if (n < 0) throw Error("factorial of a negative number");
    BigInt r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

BigInt binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    BigInt r = 1;
    for (int i = 0; i < k; ++i) {
        r *= (n - i);
        r /= (i + 1);
    }
    return r;
}

BigInt catalan(int l) {
    if (l < 0) throw Error("catalan of a negative index");
    return binomial(2 * l, l) / (l + 1);
}

BigInt fuss_catalan_2(int n) {
    if (n < 0) throw Error("fuss_catalan_2 of a negative index");
    return binomial(3 * n, n) / (2 * n + 1);
}

BigInt tandem_count(int n) {
    if (n < 0) throw Error("tandem_count of a negative index");
    return 2 * factorial(3 * n) / (factorial(n) * factorial(n + 1) * factorial(n + 2));
}

BigInt ry_count(int n) { return catalan(2 * n) * catalan(n); }

BigInt mullin_count(int n) { return catalan(n) * catalan(n + 1); }

KrewerasReadings kreweras_formula(int n) {
    if (n < 0) throw Error("kreweras_formula of a negative index");
    BigInt pow2 = BigInt(1) << n;
    BigInt pow4 = BigInt(1) << (2 * n);
    KrewerasReadings r;
    r.reading_a = pow2 * binomial(3 * n, n) / (2 * n + 1);
    r.reading_b = pow4 * binomial(3 * n, n) / ((n + 1) * (2 * n + 1));
    return r;
}

bool CountReport::all_agree() const {
    bool ok = true;
    if (formula_a) ok = ok && formula_a_match;
    if (formula_b) ok = ok && formula_b_match;
    if (bijection_image) ok = ok && image_match;
    return ok;
}

std::string CountReport::csv_header() { return "family,n,brute,formulaA,formulaB,image,agree"; }

std::string CountReport::to_csv() const {
    std::ostringstream os;
    os << family << ',' << n << ',' << brute_force << ',';
    if (formula_a) os << *formula_a;
    os << ',';
    if (formula_b) os << *formula_b;
    os << ',';
    if (bijection_image) os << *bijection_image;
    os << ',';
    std::string flags;
    if (formula_a) flags += std::string("formulaA:") + (formula_a_match ? "match" : "mismatch");
    if (formula_b) flags += std::string(flags.empty() ? "" : ";") + "formulaB:" +
                            (formula_b_match ? "match" : "mismatch");
    if (bijection_image)
        flags += std::string(flags.empty() ? "" : ";") + "image:" + (image_match ? "match" : "mismatch");
    if (flags.empty()) flags = "brute-only";
    os << flags;
    return os.str();
}

CountReport verify_family(const std::string& family, int n) {
    CountReport rep;
    rep.family = family;
    rep.n = n;
    if (n < 0) throw Error("verify_family: negative size");

    auto check_budget = [&](bool ok) {
        if (!ok)
            throw Error("verify_family: size " + std::to_string(n) + " exceeds the desk-scale budget for '" +
                        family + "'");
    };

    if (family == "tandem") {
        check_budget(n <= 4);
        auto alphabet = StepAlphabet::family("tandem");
        auto walks = enumerate_walks(alphabet, 3 * n, {0, 0}, {0, 0});
        rep.brute_force = walks.size();
        rep.formula_a = tandem_count(n);
        std::set<std::string> images;
        for (const Walk& w : walks) images.insert(tandem_to_prograph(w).canonical_string());
        rep.bijection_image = images.size();
    } else if (family == "rY") {
        check_budget(n <= 3);
        auto alphabet = StepAlphabet::family("rY");
        auto walks = enumerate_walks(alphabet, 4 * n, {0, 0}, {0, 0});
        rep.brute_force = walks.size();
        rep.formula_a = ry_count(n);
        std::set<std::string> images;
        for (const Walk& w : walks) images.insert(ry_forward(w).canonical_string());
        rep.bijection_image = images.size();
    } else if (family == "kreweras") {
        check_budget(3 * n <= 12);
        auto alphabet = StepAlphabet::family("kreweras");
        auto walks = enumerate_walks(alphabet, 3 * n, {0, 0}, {0, 0});
        rep.brute_force = walks.size();
        auto readings = kreweras_formula(n);
        rep.formula_a = readings.reading_a;
        rep.formula_b = readings.reading_b;
        std::set<std::string> images;
        for (const Walk& w : walks) images.insert(kreweras_forward(w).cubic_canonical());
        rep.bijection_image = images.size();
    } else if (family == "straight") {
        check_budget(2 * n <= 12);
        auto alphabet = StepAlphabet::family("straight");
        auto walks = enumerate_walks(alphabet, 2 * n, {0, 0}, {0, 0});
        rep.brute_force = walks.size();
        rep.formula_a = mullin_count(n);
        std::set<std::string> images;
        for (const Walk& w : walks) images.insert(canonical_decorated_string(mullin_map(w)));
        rep.bijection_image = images.size();
    } else if (family == "quartic") {
        check_budget(3 * n <= 9);
        auto alphabet = StepAlphabet::family("quartic");
        auto walks = enumerate_walks(alphabet, 3 * n, {0, 0}, {0, 0});
        rep.brute_force = walks.size();
        rep.formula_a = fuss_catalan_2(n) * catalan(n);
        std::set<std::string> images;
        for (const Walk& w : walks) images.insert(lukasiewicz_forward(w).canonical_string());
        rep.bijection_image = images.size();
    } else if (family == "kmsw") {
        check_budget(n <= 6);
        auto alphabet = StepAlphabet::family("kmsw", 3);
        BigInt total = 0;
        std::set<std::string> images;
        for (int h = 0; h <= 3 * n; ++h)
            for (int m = 0; m <= 3 * n; ++m)
                for (const Walk& w : enumerate_walks(alphabet, n, {0, h}, {m, 0})) {
                    ++total;
                    auto b = kmsw_to_bipolar(w);
                    if (!validate_bipolar(b).ok())
                        throw Error("verify_family: kmsw image is not bipolar");
                    images.insert(canonical_decorated_string(b.decorated()));
                }
        rep.brute_force = total;
        rep.bijection_image = images.size();
    } else {
        throw Error("verify_family: unknown family '" + family + "'");
    }

    if (rep.formula_a) rep.formula_a_match = *rep.formula_a == rep.brute_force;
    if (rep.formula_b) rep.formula_b_match = *rep.formula_b == rep.brute_force;
    if (rep.bijection_image) rep.image_match = *rep.bijection_image == rep.brute_force;
    return rep;
}

} // namespace treemate
