#pragma once

#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "lensskein/braid/loops.hpp"
#include "lensskein/braid/word.hpp"
#include "lensskein/hecke/engine.hpp"
#include "lensskein/scalar/rat_func.hpp"

namespace lensskein::hecke {

// Descending run g_head g_{head-1} ... g_{head-len+1}.
struct TailBlock {
    int head = 0;
    int length = 0;
    bool operator==(const TailBlock&) const = default;
};

// Jones normal form of w: blocks with strictly increasing heads.
std::vector<TailBlock> tail_blocks(const Perm& w);
Perm perm_from_blocks(const std::vector<TailBlock>& blocks);

// Basis word t'_0^{b_0} ... t'_{n-1}^{b_{n-1}} . T_w of H_{1,n}(q).
struct CanonicalWord {
    int n = 1;
    BKey key;

    std::vector<std::pair<int, int>> loops() const;  // (index, exponent), nonzero only
    std::vector<TailBlock> tail() const { return tail_blocks(key.w); }
    bool has_tail() const { return !is_identity(key.w); }
    braid::LoopProfile profile() const { return braid::LoopProfile::of(loops()); }

    // Generator word (primed loops expanded, tail as sigma letters).
    braid::MixedBraidWord to_word() const;
    // "t0'^2 t2'^-1 · g3 g2 · g4", or "1".
    std::string str() const;
    nlohmann::json to_json() const;
};

// Printing order: compare_order on the loop profile, then tail length, then
// the raw key (so the order is total).
bool canonical_less(const CanonicalWord& a, const CanonicalWord& b);

using scalar::RatFunc;

class AlgebraElement {
public:
    using Terms = std::unordered_map<BKey, RatFunc, BKeyHash>;

    explicit AlgebraElement(int n = 1);
    static AlgebraElement identity(int n) { return basis(n, BKey{}); }
    static AlgebraElement basis(int n, const BKey& key, RatFunc c = RatFunc(1));
    // Element with Laurent coefficients from the engine.
    static AlgebraElement from_pvec(int n, const PVec& v);

    int n() const { return n_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    RatFunc coeff(const BKey& k) const;

    // Terms in printing order.
    std::vector<std::pair<CanonicalWord, RatFunc>> sorted_terms() const;

    void add_term(const BKey& k, const RatFunc& c);
    AlgebraElement& operator+=(const AlgebraElement& o);
    AlgebraElement& operator-=(const AlgebraElement& o);
    AlgebraElement scaled(const RatFunc& c) const;
    friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
    friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }

    // Exact equality; coefficients compared by cross-multiplication.
    bool operator==(const AlgebraElement& o) const;
    bool operator!=(const AlgebraElement& o) const { return !(*this == o); }

    std::string str() const;
    nlohmann::json to_json() const;

    // Applies RatFunc::reduced to every coefficient.
    void reduce_coefficients();

private:
    int n_;
    Terms terms_;
};

// Right multiplication by one letter (Axis or Sigma, any exponent).
AlgebraElement mul_generator(const AlgebraElement& e, const braid::Letter& g);
// Left multiplication by one letter, used by the alternate trace mode.
AlgebraElement lmul_generator(const braid::Letter& g, const AlgebraElement& e);

AlgebraElement project_braid(const braid::MixedBraidWord& w);
AlgebraElement mul(const AlgebraElement& a, const AlgebraElement& b);
// t_i^k on n strands, written in the primed basis.
AlgebraElement expand_unprimed(int i, int k, int n);
AlgebraElement inject(const AlgebraElement& e, int n_new);
// Right multiplication by every letter of a word.
AlgebraElement mul_word(const AlgebraElement& e, const braid::MixedBraidWord& w);

}  // namespace lensskein::hecke
