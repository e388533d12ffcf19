#pragma once

#include <compare>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "lensskein/braid/word.hpp"

namespace lensskein::braid {

// A monomial t_{i1}^{k1} ... t_{im}^{km} (or its primed version) with strictly
// increasing indices and nonzero exponents.
struct LoopMonomial {
    bool primed = false;
    std::vector<std::pair<int, int>> exps;  // (index, exponent)
    int n = 1;                              // ambient strand count

    LoopMonomial() = default;
    // Gap-free monomial with exponents k_0, k_1, ... on indices 0, 1, ...
    static LoopMonomial from_exponents(const std::vector<int>& ks, bool primed = false, int n = 0);
    // Arbitrary (possibly gapped) monomial; entries are sorted and validated.
    static LoopMonomial from_pairs(std::vector<std::pair<int, int>> entries, bool primed = false, int n = 0);
    // Accepts words made only of loop letters (t, t_i or t'_i) in increasing index.
    static LoopMonomial from_word(const MixedBraidWord& w);

    bool gap_free() const;
    bool empty() const { return exps.empty(); }
    int level() const;
    int top_index() const { return exps.empty() ? -1 : exps.back().first; }
    // Exponent list k_0..k_m for gap-free monomials.
    std::vector<int> exponents() const;

    MixedBraidWord to_word() const;
    LoopMonomial homologous() const;  // toggles primed/unprimed
    std::string str() const;
    nlohmann::json to_json() const { return to_word().to_json(); }

    bool operator==(const LoopMonomial& o) const { return primed == o.primed && exps == o.exps; }
};

// Loop data used by the ordering; braiding tails are not part of it.
struct LoopProfile {
    std::vector<int> indices;
    std::vector<int> exps;
    int total = 0;
    int ind = 0;

    static LoopProfile of(const std::vector<std::pair<int, int>>& entries);
    static LoopProfile of(const LoopMonomial& m) { return of(m.exps); }
};

std::strong_ordering compare_order(const LoopProfile& a, const LoopProfile& b);

enum class Side { Positive, Negative, Ordered };

struct EnumerationLimits {
    int max_length = 8;    // only for Ordered
    int max_abs_exp = 8;   // only for Ordered
};

// Positive: all compositions of k into nonzero positive parts.
// Negative: the f-images of the positive level |k| set (so level -|k|).
// Ordered: k_0 <= k_1 <= ... with nonzero parts, bounded by the limits.
// Results are sorted by (length, exponents lexicographically).
std::vector<LoopMonomial> enumerate_level(int k, Side side, EnumerationLimits lim = {});

// t^p . (m with every index shifted by one) . sigma_1^{+-1}, on n+1 strands
// where n = max(1, number of loops of m).
MixedBraidWord bbm(const LoopMonomial& m, int sign, int p);

LoopMonomial f_map(const LoopMonomial& m);

}  // namespace lensskein::braid
