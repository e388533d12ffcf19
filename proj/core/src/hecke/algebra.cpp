#include "lensskein/hecke/algebra.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

#include "../common/memo.hpp"

namespace lensskein::hecke {

using braid::Gen;
using braid::Letter;
using braid::MixedBraidWord;

std::vector<TailBlock> tail_blocks(const Perm& w) {
    const int m = top_moved(w);
    if (m < 0) return {};
    int pos = 0;
    while (w[pos] != m) ++pos;
    Perm u = w;
    for (int j = pos; j < m; ++j) u[j] = w[j + 1];
    u[m] = static_cast<std::uint8_t>(m);
    auto blocks = tail_blocks(u);
    blocks.push_back({m, m - pos});
    return blocks;
}

Perm perm_from_blocks(const std::vector<TailBlock>& blocks) {
    Perm w = identity_perm();
    for (const auto& b : blocks)
        for (int i = b.head; i > b.head - b.length; --i) std::swap(w[i - 1], w[i]);
    return w;
}

std::vector<std::pair<int, int>> CanonicalWord::loops() const {
    std::vector<std::pair<int, int>> r;
    for (int i = 0; i < kMaxStrands; ++i)
        if (key.a[i]) r.emplace_back(i, key.a[i]);
    return r;
}

MixedBraidWord CanonicalWord::to_word() const {
    MixedBraidWord w{n, {}};
    for (const auto& [i, k] : loops()) w.letters.push_back({Gen::PrimedLoop, i, k});
    for (int s : reduced_word(key.w)) w.letters.push_back({Gen::Sigma, s, 1});
    return braid::expand_loops(w);
}

std::string CanonicalWord::str() const {
    std::string s;
    for (const auto& [i, k] : loops()) {
        if (!s.empty()) s += ' ';
        s += "t" + std::to_string(i) + "'";
        if (k != 1) s += "^" + std::to_string(k);
    }
    for (const auto& b : tail()) {
        if (!s.empty()) s += " · ";
        for (int i = b.head; i > b.head - b.length; --i) {
            if (i != b.head) s += ' ';
            s += "g" + std::to_string(i);
        }
    }
    return s.empty() ? "1" : s;
}

nlohmann::json CanonicalWord::to_json() const {
    nlohmann::json loops_j = nlohmann::json::array();
    for (const auto& [i, k] : loops()) loops_j.push_back({i, k});
    nlohmann::json tail_j = nlohmann::json::array();
    for (const auto& b : tail()) tail_j.push_back({b.head, b.length});
    return {{"n", n}, {"word", str()}, {"loops", loops_j}, {"tail", tail_j}};
}

bool canonical_less(const CanonicalWord& a, const CanonicalWord& b) {
    if (auto c = braid::compare_order(a.profile(), b.profile()); c != 0) return c < 0;
    const int la = perm_length(a.key.w), lb = perm_length(b.key.w);
    if (la != lb) return la < lb;
    if (a.key.a != b.key.a) return a.key.a < b.key.a;
    return a.key.w < b.key.w;
}

AlgebraElement::AlgebraElement(int n) : n_(n) {
    if (n < 1 || n > kMaxStrands) throw std::out_of_range("strand count out of range: " + std::to_string(n));
}

AlgebraElement AlgebraElement::basis(int n, const BKey& key, RatFunc c) {
    AlgebraElement e(n);
    e.add_term(key, c);
    return e;
}

AlgebraElement AlgebraElement::from_pvec(int n, const PVec& v) {
    AlgebraElement e(n);
    for (const auto& [k, c] : v) e.terms_.emplace(k, RatFunc(c));
    return e;
}

RatFunc AlgebraElement::coeff(const BKey& k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? RatFunc() : it->second;
}

std::vector<std::pair<CanonicalWord, RatFunc>> AlgebraElement::sorted_terms() const {
    std::vector<std::pair<CanonicalWord, RatFunc>> r;
    r.reserve(terms_.size());
    for (const auto& [k, c] : terms_) r.emplace_back(CanonicalWord{n_, k}, c);
    std::sort(r.begin(), r.end(), [](const auto& x, const auto& y) { return canonical_less(x.first, y.first); });
    return r;
}

void AlgebraElement::add_term(const BKey& k, const RatFunc& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(k);
    if (it == terms_.end()) {
        terms_.emplace(k, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& o) {
    n_ = std::max(n_, o.n_);
    for (const auto& [k, c] : o.terms_) add_term(k, c);
    return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& o) {
    n_ = std::max(n_, o.n_);
    for (const auto& [k, c] : o.terms_) add_term(k, -c);
    return *this;
}

AlgebraElement AlgebraElement::scaled(const RatFunc& c) const {
    AlgebraElement r(n_);
    if (c.is_zero()) return r;
    for (const auto& [k, v] : terms_) r.terms_.emplace(k, v * c);
    return r;
}

bool AlgebraElement::operator==(const AlgebraElement& o) const {
    if (terms_.size() != o.terms_.size()) return false;
    for (const auto& [k, c] : terms_) {
        auto it = o.terms_.find(k);
        if (it == o.terms_.end() || it->second != c) return false;
    }
    return true;
}

void AlgebraElement::reduce_coefficients() {
    for (auto& [k, c] : terms_) c = c.reduced();
}

std::string AlgebraElement::str() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [w, c] : sorted_terms()) {
        if (!s.empty()) s += " + ";
        const std::string ws = w.str();
        const std::string cs = c.str();
        const bool plain = cs.find(' ') == std::string::npos;
        if (ws == "1") {
            s += cs;
        } else if (cs == "1") {
            s += ws;
        } else {
            s += (plain ? cs : "(" + cs + ")") + " * " + ws;
        }
    }
    return s;
}

nlohmann::json AlgebraElement::to_json() const {
    nlohmann::json ts = nlohmann::json::array();
    for (const auto& [w, c] : sorted_terms()) {
        nlohmann::json t = w.to_json();
        t["coeff"] = c.to_json();
        ts.push_back(std::move(t));
    }
    return {{"n", n_}, {"terms", ts}};
}

namespace {

struct AxisKey {
    BKey key;
    int k;
    bool operator==(const AxisKey& o) const { return k == o.k && key == o.key; }
};
struct AxisKeyHash {
    std::size_t operator()(const AxisKey& x) const { return BKeyHash{}(x.key) * 31 + static_cast<std::size_t>(x.k + 64); }
};

detail::Memo<AxisKey, PVec, AxisKeyHash>& axis_memo() {
    static detail::Memo<AxisKey, PVec, AxisKeyHash> m;
    return m;
}
detail::Memo<AxisKey, PVec, AxisKeyHash>& left_sigma_memo() {
    static detail::Memo<AxisKey, PVec, AxisKeyHash> m;
    return m;
}

// t'^b T_w . t^k, memoized per basis word.
const PVec& axis_product(const BKey& key, int k) {
    return axis_memo().get({key, k}, [&] {
        PVec one{{key, LP(1)}};
        return to_primed(rmul_x0(from_primed(one), k));
    });
}

// T_i . t'^b T_w
const PVec& left_sigma_product(const BKey& key, int i) {
    return left_sigma_memo().get({key, i}, [&] {
        PVec one{{key, LP(1)}};
        return to_primed(lmul_g(from_primed(one), i));
    });
}

void check_sigma(const AlgebraElement& e, int i) {
    if (i < 1 || i > e.n() - 1)
        throw braid::RangeError("sigma index " + std::to_string(i) + " out of range for n=" + std::to_string(e.n()));
}

AlgebraElement right_sigma(const AlgebraElement& e, int i, bool inverse) {
    AlgebraElement r(e.n());
    const RatFunc qq = RatFunc::q();
    const RatFunc q1 = qq - RatFunc(1);
    const RatFunc qi = RatFunc::q(-1);
    const RatFunc qi1 = qi - RatFunc(1);
    for (const auto& [k, c] : e.terms()) {
        BKey k2 = k;
        std::swap(k2.w[i - 1], k2.w[i]);
        const bool up = k.w[i - 1] < k.w[i];
        if (!inverse) {
            if (up) {
                r.add_term(k2, c);
            } else {
                r.add_term(k, c * q1);
                r.add_term(k2, c * qq);
            }
        } else {
            // g^-1 = q^-1 g + (q^-1 - 1)
            if (up) {
                r.add_term(k2, c * qi);
                r.add_term(k, c * qi1);
            } else {
                r.add_term(k2, c);
            }
        }
    }
    return r;
}

}  // namespace

AlgebraElement mul_generator(const AlgebraElement& e, const Letter& g) {
    if (g.gen == Gen::Loop || g.gen == Gen::PrimedLoop) {
        return mul_word(e, braid::expand_loops(MixedBraidWord{e.n(), {g}}));
    }
    if (g.gen == Gen::Sigma) {
        check_sigma(e, g.index);
        AlgebraElement r = e;
        for (int j = 0; j < std::abs(g.exp); ++j) r = right_sigma(r, g.index, g.exp < 0);
        return r;
    }
    AlgebraElement r(e.n());
    for (const auto& [k, c] : e.terms())
        for (const auto& [k2, d] : axis_product(k, g.exp)) r.add_term(k2, c * RatFunc(d));
    return r;
}

AlgebraElement lmul_generator(const Letter& g, const AlgebraElement& e) {
    if (g.gen == Gen::Axis) {
        // t . t'^b T_w: t'_0 = t, and t'^b starts with t'_0^{b_0}
        AlgebraElement r(e.n());
        for (const auto& [k, c] : e.terms()) {
            BKey k2 = k;
            k2.a[0] = static_cast<std::int16_t>(k2.a[0] + g.exp);
            r.add_term(k2, c);
        }
        return r;
    }
    if (g.gen != Gen::Sigma) throw std::invalid_argument("left multiplication supports t and g_i only");
    check_sigma(e, g.index);
    AlgebraElement r = e;
    for (int j = 0; j < std::abs(g.exp); ++j) {
        AlgebraElement next(e.n());
        for (const auto& [k, c] : r.terms()) {
            for (const auto& [k2, d] : left_sigma_product(k, g.index)) {
                if (g.exp > 0) {
                    next.add_term(k2, c * RatFunc(d));
                } else {
                    next.add_term(k2, c * RatFunc(d * LP::q(-1)));
                }
            }
            if (g.exp < 0) next.add_term(k, c * RatFunc(LP::q(-1) - LP(1)));
        }
        r = std::move(next);
    }
    return r;
}

AlgebraElement mul_word(const AlgebraElement& e, const MixedBraidWord& w) {
    AlgebraElement r = e;
    for (const auto& l : braid::expand_loops(w).letters) r = mul_generator(r, l);
    return r;
}

namespace {

// A primed monomial t'_0^b0 t'_i^bi ... (increasing indices) followed only by
// sigma letters is already a basis word times a finite Hecke tail.
std::optional<AlgebraElement> project_primed_prefix(const MixedBraidWord& w) {
    const MixedBraidWord m = w.merged();
    BKey key;
    int last = -1;
    std::size_t pos = 0;
    for (; pos < m.letters.size(); ++pos) {
        const auto& l = m.letters[pos];
        const bool loop = l.gen == Gen::Axis || l.gen == Gen::PrimedLoop;
        if (!loop || l.index <= last) break;
        key.a[l.index] = static_cast<std::int16_t>(l.exp);
        last = l.index;
    }
    for (std::size_t i = pos; i < m.letters.size(); ++i)
        if (m.letters[i].gen != Gen::Sigma) return std::nullopt;
    AlgebraElement e = AlgebraElement::basis(w.n, key);
    for (std::size_t i = pos; i < m.letters.size(); ++i) e = mul_generator(e, m.letters[i]);
    return e;
}

}  // namespace

AlgebraElement project_braid(const MixedBraidWord& w) {
    w.check_range();
    if (auto e = project_primed_prefix(w)) return *e;
    // Whole word in the Bernstein basis, converted to the primed basis once.
    BVec x{{BKey{}, LP(1)}};
    for (const auto& l : braid::expand_loops(w).letters) {
        if (l.gen == Gen::Axis) {
            x = rmul_x0(x, l.exp);
        } else {
            for (int j = 0; j < std::abs(l.exp); ++j) x = l.exp > 0 ? rmul_g(x, l.index) : rmul_g_inv(x, l.index);
        }
    }
    return AlgebraElement::from_pvec(w.n, to_primed(x));
}

AlgebraElement mul(const AlgebraElement& a, const AlgebraElement& b) {
    if (a.n() != b.n()) throw std::invalid_argument("mul: strand counts differ");
    AlgebraElement r(a.n());
    for (const auto& [k, c] : b.terms()) {
        const MixedBraidWord w = CanonicalWord{b.n(), k}.to_word();
        r += mul_word(a, w).scaled(c);
    }
    return r;
}

AlgebraElement expand_unprimed(int i, int k, int n) {
    if (i < 0 || i > n - 1) throw braid::RangeError("loop index out of range");
    if (k == 0) return AlgebraElement::identity(n);
    return project_braid(MixedBraidWord{n, {{i == 0 ? Gen::Axis : Gen::Loop, i, k}}});
}

AlgebraElement inject(const AlgebraElement& e, int n_new) {
    if (n_new < e.n()) throw std::invalid_argument("inject: target strand count is smaller");
    AlgebraElement r(n_new);
    for (const auto& [k, c] : e.terms()) r.add_term(k, c);
    return r;
}

}  // namespace lensskein::hecke
