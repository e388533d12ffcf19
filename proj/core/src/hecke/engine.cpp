#include "lensskein/hecke/engine.hpp"

#include <algorithm>
#include <cstring>
#include <stdexcept>

#include "../common/memo.hpp"

namespace lensskein::hecke {

namespace {

std::uint64_t mix(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::uint64_t pack(const Perm& w) {
    std::uint64_t v = 0;
    std::memcpy(&v, w.data(), sizeof(v));
    return v;
}

const LP& q1() {
    static const LP v = LP::q() - LP(1);
    return v;
}
const LP& qinv() {
    static const LP v = LP::q(-1);
    return v;
}
const LP& qinv1() {
    static const LP v = LP::q(-1) - LP(1);
    return v;
}

struct PairHash {
    std::size_t operator()(const std::pair<Perm, Perm>& p) const {
        return mix(pack(p.first) ^ mix(pack(p.second)));
    }
};
struct TwKey {
    Perm w;
    Exps a;
    bool operator==(const TwKey& o) const { return w == o.w && a == o.a; }
};
struct TwKeyHash {
    std::size_t operator()(const TwKey& k) const { return BKeyHash{}(BKey{k.a, k.w}); }
};
struct ExpsHash {
    std::size_t operator()(const Exps& a) const { return BKeyHash{}(BKey{a, identity_perm()}); }
};

detail::Memo<TwKey, BVec, TwKeyHash>& tw_memo() {
    static detail::Memo<TwKey, BVec, TwKeyHash> m;
    return m;
}
detail::Memo<std::pair<Perm, Perm>, HVec, PairHash>& hp_memo() {
    static detail::Memo<std::pair<Perm, Perm>, HVec, PairHash> m;
    return m;
}
detail::Memo<Exps, BVec, ExpsHash>& pm_memo() {
    static detail::Memo<Exps, BVec, ExpsHash> m;
    return m;
}
detail::Memo<Exps, HVec, ExpsHash>& pinv_memo() {
    static detail::Memo<Exps, HVec, ExpsHash> m;
    return m;
}

int first_descent(const Perm& w) {
    for (int i = 0; i + 1 < kMaxStrands; ++i)
        if (w[i] > w[i + 1]) return i + 1;
    return 0;
}

void hmul_g_term(const Perm& w, const LP& c, int i, HVec& out) {
    Perm w2 = w;
    std::swap(w2[i - 1], w2[i]);
    if (w[i - 1] < w[i]) {
        accumulate(out, w2, c);
    } else {
        const LP cq = c.shifted({1, 0});
        accumulate(out, w, cq - c);
        accumulate(out, w2, cq);
    }
}

// T_i . T_v: exchanges the values i-1 and i of v.
void hlmul_g_term(const Perm& v, const LP& c, int i, HVec& out) {
    Perm v2 = v;
    int pa = 0, pb = 0;
    for (int j = 0; j < kMaxStrands; ++j) {
        if (v[j] == i - 1) pa = j;
        if (v[j] == i) pb = j;
    }
    std::swap(v2[pa], v2[pb]);
    if (pa < pb) {
        accumulate(out, v2, c);
    } else {
        const LP cq = c.shifted({1, 0});
        accumulate(out, v, cq - c);
        accumulate(out, v2, cq);
    }
}

// T_w . h, one generator of a reduced word at a time.
HVec hecke_left(const Perm& w, const HVec& h) {
    const std::vector<int> word = reduced_word(w);
    HVec x = h;
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
        HVec out;
        out.reserve(x.size() * 2);
        for (const auto& [v, c] : x) hlmul_g_term(v, c, *it, out);
        x = std::move(out);
    }
    return x;
}

HVec hmul_g(const HVec& x, int i) {
    HVec out;
    for (const auto& [w, c] : x) hmul_g_term(w, c, i, out);
    return out;
}

// Ordering of loop exponent vectors under which t'^b is triangular over X^b.
bool key_less(const Exps& x, const Exps& y) {
    int sx = 0, sy = 0, tx = -1, ty = -1;
    for (int i = 0; i < kMaxStrands; ++i) {
        sx += x[i];
        sy += y[i];
        if (x[i]) tx = i;
        if (y[i]) ty = i;
    }
    if (sx != sy) return sx < sy;
    if (tx != ty) return tx < ty;
    for (int i = kMaxStrands - 1; i >= 0; --i) {
        const int ax = std::abs(x[i]), ay = std::abs(y[i]);
        if (ax != ay) return ax < ay;
        const int nx = x[i] < 0, ny = y[i] < 0;
        if (nx != ny) return nx < ny;
    }
    return false;
}

const HVec& pinv(const Exps& b) {
    return pinv_memo().get(b, [&] {
        HVec x{{identity_perm(), LP(1)}};
        int c = 0;
        for (int i = kMaxStrands - 1; i >= 1; --i) {
            if (b[i] <= 0) continue;
            for (int j = i; j >= 1; --j) x = hmul_g(x, j);
            for (int j = 1; j <= i; ++j) x = hmul_g(x, j);
            c += i;
        }
        for (auto& [w, v] : x) v = v.shifted({-c, 0});
        return x;
    });
}

}  // namespace

Perm identity_perm() {
    Perm w{};
    for (int i = 0; i < kMaxStrands; ++i) w[i] = static_cast<std::uint8_t>(i);
    return w;
}

bool is_identity(const Perm& w) { return w == identity_perm(); }

int top_moved(const Perm& w) {
    for (int i = kMaxStrands - 1; i >= 0; --i)
        if (w[i] != i) return i;
    return -1;
}

int perm_length(const Perm& w) {
    int inv = 0;
    for (int i = 0; i < kMaxStrands; ++i)
        for (int j = i + 1; j < kMaxStrands; ++j)
            if (w[i] > w[j]) ++inv;
    return inv;
}

std::size_t PermHash::operator()(const Perm& w) const { return mix(pack(w)); }

std::size_t BKeyHash::operator()(const BKey& k) const {
    std::uint64_t lo = 0, hi = 0;
    std::memcpy(&lo, k.a.data(), 8);
    std::memcpy(&hi, k.a.data() + 4, 8);
    return mix(lo ^ mix(hi ^ mix(pack(k.w))));
}

void rmul_g_term(const BKey& k, const LP& c, int i, BVec& out) {
    BKey k2 = k;
    std::swap(k2.w[i - 1], k2.w[i]);
    if (k.w[i - 1] < k.w[i]) {
        accumulate(out, k2, c);
    } else {
        const LP cq = c.shifted({1, 0});
        accumulate(out, k, cq - c);
        accumulate(out, k2, cq);
    }
}

BVec rmul_g(const BVec& x, int i) {
    BVec out;
    out.reserve(x.size() * 2);
    for (const auto& [k, c] : x) rmul_g_term(k, c, i, out);
    return out;
}

BVec rmul_g_inv(const BVec& x, int i) {
    // g^-1 = q^-1 g + (q^-1 - 1)
    BVec out;
    out.reserve(x.size() * 2);
    for (const auto& [k, c] : x) {
        rmul_g_term(k, c * qinv(), i, out);
        accumulate(out, k, c * qinv1());
    }
    return out;
}

const BVec& tw_mono(const Perm& w, const Exps& a) {
    const TwKey key{w, a};
    if (const BVec* v = tw_memo().find(key)) return *v;
    BVec res;
    const int s = first_descent(w);
    if (s == 0) {
        res.emplace(BKey{a, w}, LP(1));
        return tw_memo().insert(key, std::move(res));
    }
    Perm w1 = w;
    std::swap(w1[s - 1], w1[s]);
    Exps sa = a;
    std::swap(sa[s - 1], sa[s]);
    for (const auto& [k, c] : tw_mono(w1, sa)) rmul_g_term(k, c, s, res);
    // divided difference (q-1) X_s (X^a - X^{sa}) / (X_s - X_{s-1})
    const int u = a[s - 1], v = a[s], d = u - v;
    auto add_term = [&](int ex, int ey, int sign) {
        Exps b = a;
        b[s - 1] = static_cast<std::int16_t>(ex);
        b[s] = static_cast<std::int16_t>(ey);
        const LP coef = sign > 0 ? q1() : -q1();
        for (const auto& [k, c] : tw_mono(w1, b)) accumulate(res, k, c * coef);
    };
    if (d > 0) {
        for (int j = 0; j < d; ++j) add_term(v + j, v + d - j, -1);
    } else if (d < 0) {
        const int e = -d;
        for (int j = 0; j < e; ++j) add_term(u + e - 1 - j, u + j + 1, 1);
    }
    return tw_memo().insert(key, std::move(res));
}

BVec rmul_x0(const BVec& x, int k) {
    if (k == 0) return x;
    BVec out;
    Exps e{};
    e[0] = static_cast<std::int16_t>(k);
    for (const auto& [key, c] : x) {
        for (const auto& [k2, d] : tw_mono(key.w, e)) {
            BKey r = k2;
            for (int i = 0; i < kMaxStrands; ++i) r.a[i] = static_cast<std::int16_t>(r.a[i] + key.a[i]);
            accumulate(out, r, c * d);
        }
    }
    return out;
}

BVec lmul_g(const BVec& x, int i) {
    Perm s = identity_perm();
    std::swap(s[i - 1], s[i]);
    BVec out;
    for (const auto& [key, c] : x) {
        for (const auto& [k2, d] : tw_mono(s, key.a)) {
            const LP cd = c * d;
            for (const auto& [v, e] : hecke_product(k2.w, key.w)) accumulate(out, BKey{k2.a, v}, cd * e);
        }
    }
    return out;
}

const HVec& hecke_product(const Perm& w, const Perm& v) {
    const auto key = std::make_pair(w, v);
    if (const HVec* r = hp_memo().find(key)) return *r;
    HVec res;
    const int s = first_descent(v);
    if (s == 0) {
        res.emplace(w, LP(1));
    } else {
        Perm v1 = v;
        std::swap(v1[s - 1], v1[s]);
        for (const auto& [u, c] : hecke_product(w, v1)) hmul_g_term(u, c, s, res);
    }
    return hp_memo().insert(key, std::move(res));
}

HVec hmul(const HVec& a, const HVec& b) {
    HVec out;
    for (const auto& [w, c] : a)
        for (const auto& [u, e] : hecke_left(w, b)) accumulate(out, u, c * e);
    return out;
}

std::vector<int> reduced_word(const Perm& w) {
    Perm v = w;
    std::vector<int> word;
    while (int s = first_descent(v)) {
        std::swap(v[s - 1], v[s]);
        word.push_back(s);
    }
    std::reverse(word.begin(), word.end());
    return word;
}

const BVec& primed_monomial(const Exps& b) {
    if (const BVec* r = pm_memo().find(b)) return *r;
    int top = -1;
    for (int i = 0; i < kMaxStrands; ++i)
        if (b[i]) top = i;
    BVec x;
    if (top < 0) {
        x.emplace(BKey{}, LP(1));
    } else {
        Exps prefix = b;
        prefix[top] = 0;
        x = primed_monomial(prefix);
        for (int j = top; j >= 1; --j) x = rmul_g(x, j);
        x = rmul_x0(x, b[top]);
        for (int j = 1; j <= top; ++j) x = rmul_g_inv(x, j);
    }
    return pm_memo().insert(b, std::move(x));
}

namespace {

PVec to_primed_direct(const BVec& input) {
    PVec res;
    BVec x = input;
    while (!x.empty()) {
        Exps b = x.begin()->first.a;
        for (const auto& [k, c] : x)
            if (key_less(b, k.a)) b = k.a;
        HVec block;
        for (const auto& [k, c] : x)
            if (k.a == b) block.emplace(k.w, c);
        const HVec h = hmul(pinv(b), block);
        for (const auto& [w, c] : h) accumulate(res, BKey{b, w}, c);
        for (const auto& [k, d] : primed_monomial(b)) {
            const LP nd = -d;
            for (const auto& [u, e] : hecke_left(k.w, h)) accumulate(x, BKey{k.a, u}, nd * e);
        }
        for (const auto& [k, c] : x)
            if (k.a == b) throw std::logic_error("primed conversion failed to clear a leading block");
    }
    return res;
}

detail::Memo<Exps, std::vector<std::pair<Exps, HVec>>, ExpsHash>& mono_primed_memo() {
    static detail::Memo<Exps, std::vector<std::pair<Exps, HVec>>, ExpsHash> m;
    return m;
}

// X^a in the primed basis, grouped by primed exponent vector.
const std::vector<std::pair<Exps, HVec>>& monomial_to_primed(const Exps& a) {
    return mono_primed_memo().get(a, [&] {
        std::unordered_map<Exps, HVec, ExpsHash> groups;
        for (const auto& [k, c] : to_primed_direct(BVec{{BKey{a, identity_perm()}, LP(1)}}))
            groups[k.a].emplace(k.w, c);
        std::vector<std::pair<Exps, HVec>> out(groups.begin(), groups.end());
        return out;
    });
}

}  // namespace

PVec to_primed(const BVec& input) {
    // X^a T_w = (X^a in the primed basis) . T_w, and right multiplication by
    // T_w only touches the tails.
    std::unordered_map<Exps, HVec, ExpsHash> by_a;
    for (const auto& [k, c] : input) by_a[k.a].emplace(k.w, c);
    // Several monomials usually cancel among their lower terms, which the
    // direct elimination exploits.
    if (by_a.size() > 1) return to_primed_direct(input);
    PVec res;
    for (const auto& [a, tails] : by_a) {
        for (const auto& [b, h] : monomial_to_primed(a)) {
            for (const auto& [w, c] : tails) {
                HVec x = h;
                for (int s : reduced_word(w)) x = hmul_g(x, s);
                for (const auto& [u, e] : x) accumulate(res, BKey{b, u}, c * e);
            }
        }
    }
    return res;
}

BVec from_primed(const PVec& y) {
    BVec out;
    for (const auto& [key, c] : y)
        for (const auto& [k, d] : primed_monomial(key.a)) {
            const LP cd = c * d;
            for (const auto& [v, e] : hecke_product(k.w, key.w)) accumulate(out, BKey{k.a, v}, cd * e);
        }
    return out;
}

EngineStats engine_stats() { return {tw_memo().size(), hp_memo().size(), pm_memo().size()}; }

}  // namespace lensskein::hecke
