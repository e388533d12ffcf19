#pragma once

// Low-level machinery behind AlgebraElement: the algebra H_{1,n}(q) is a
// quotient of the affine Hecke algebra of type A, so elements are handled in
// its Bernstein basis X^a T_w (X_0 = t, X_i = q^-i t_i) and converted to the
// primed basis t'^b T_w on demand. Index data is padded to kMaxStrands so keys
// are independent of the ambient strand count.

#include <array>
#include <cstdint>
#include <unordered_map>
#include <vector>

#include "lensskein/scalar/laurent_poly.hpp"

namespace lensskein::hecke {

inline constexpr int kMaxStrands = 8;

using Perm = std::array<std::uint8_t, kMaxStrands>;  // one-line notation, w[pos] = value
using Exps = std::array<std::int16_t, kMaxStrands>;

Perm identity_perm();
bool is_identity(const Perm& w);
// Largest position moved by w, or -1.
int top_moved(const Perm& w);
// Number of inversions.
int perm_length(const Perm& w);

struct BKey {
    Exps a{};
    Perm w = identity_perm();
    bool operator==(const BKey& o) const { return a == o.a && w == o.w; }
};

struct PermHash {
    std::size_t operator()(const Perm& w) const;
};
struct BKeyHash {
    std::size_t operator()(const BKey& k) const;
};

using LP = scalar::LaurentPoly;
using HVec = std::unordered_map<Perm, LP, PermHash>;  // element of the finite Hecke algebra
using BVec = std::unordered_map<BKey, LP, BKeyHash>;  // Bernstein basis X^a T_w
using PVec = std::unordered_map<BKey, LP, BKeyHash>;  // primed basis t'^b T_w

template <class Map, class Key>
void accumulate(Map& m, const Key& k, const LP& c) {
    if (c.is_zero()) return;
    auto it = m.find(k);
    if (it == m.end()) {
        m.emplace(k, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) m.erase(it);
    }
}

// Right multiplication by T_i (i >= 1) of a single basis element, valid in
// either basis because only the finite Hecke part is touched.
void rmul_g_term(const BKey& k, const LP& c, int i, BVec& out);
BVec rmul_g(const BVec& x, int i);
BVec rmul_g_inv(const BVec& x, int i);

// T_w X^a expressed in the Bernstein basis.
const BVec& tw_mono(const Perm& w, const Exps& a);
// Right multiplication by X_0^k = t^k.
BVec rmul_x0(const BVec& x, int k);
// Left multiplication by T_i.
BVec lmul_g(const BVec& x, int i);

// T_w T_v in the finite Hecke algebra.
const HVec& hecke_product(const Perm& w, const Perm& v);
HVec hmul(const HVec& a, const HVec& b);
// Reduced word (generator indices, left to right) of w.
std::vector<int> reduced_word(const Perm& w);

// t'^b in the Bernstein basis.
const BVec& primed_monomial(const Exps& b);

PVec to_primed(const BVec& x);
BVec from_primed(const PVec& y);

// Sizes of the memo tables, for diagnostics and benchmarks.
struct EngineStats {
    std::size_t tw_mono = 0;
    std::size_t hecke_products = 0;
    std::size_t primed_monomials = 0;
};
EngineStats engine_stats();

}  // namespace lensskein::hecke
