#pragma once

#include <optional>
#include <string>

#include "treemate/bigint.hpp"
#include "treemate/walks.hpp"

namespace treemate {

BigInt factorial(int n);
BigInt binomial(int n, int k);

/// C_l = (1/(l+1)) * binomial(2l, l)
BigInt catalan(int l);

/// C^(2)_n = (1/(2n+1)) * binomial(3n, n)
BigInt fuss_catalan_2(int n);

/// 2*(3n)! / (n! (n+1)! (n+2)!)
BigInt tandem_count(int n);

/// C_{2n} * C_n
BigInt ry_count(int n);

/// Number of closed confined straight-step walks of length 2n: C_n * C_{n+1}.
BigInt mullin_count(int n);

struct KrewerasReadings {
    BigInt reading_a; // 2^n/(2n+1) * binomial(3n,n), as printed
    BigInt reading_b; // 4^n/((n+1)(2n+1)) * binomial(3n,n), the standard count
};

/// Two closed-form readings for the Kreweras count; the brute-force
/// enumeration decides which one is right (they agree at n <= 1).
KrewerasReadings kreweras_formula(int n);

struct CountReport {
    std::string family;
    int n = 0;
    BigInt brute_force;
    std::optional<BigInt> formula_a;
    std::optional<BigInt> formula_b;
    std::optional<BigInt> bijection_image;
    bool formula_a_match = false;
    bool formula_b_match = false;
    bool image_match = false;

    bool all_agree() const;
    /// CSV row: family,n,brute,formulaA,formulaB,image,agree
    std::string to_csv() const;
    static std::string csv_header();
};

/// Run brute-force enumeration, the closed formulas, and the bijection
/// image count (canonical-code deduplicated) for one family at size n.
/// Throws when n exceeds the desk-scale budget for the family.
CountReport verify_family(const std::string& family, int n);

} // namespace treemate
