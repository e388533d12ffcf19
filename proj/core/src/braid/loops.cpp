#include "lensskein/braid/loops.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace lensskein::braid {

LoopMonomial LoopMonomial::from_exponents(const std::vector<int>& ks, bool primed, int n) {
    std::vector<std::pair<int, int>> e;
    for (std::size_t i = 0; i < ks.size(); ++i) e.emplace_back(static_cast<int>(i), ks[i]);
    return from_pairs(std::move(e), primed, n);
}

LoopMonomial LoopMonomial::from_pairs(std::vector<std::pair<int, int>> entries, bool primed, int n) {
    std::sort(entries.begin(), entries.end());
    for (std::size_t i = 0; i < entries.size(); ++i) {
        if (entries[i].second == 0) throw std::invalid_argument("loop monomial with zero exponent");
        if (entries[i].first < 0) throw std::invalid_argument("negative loop index");
        if (i > 0 && entries[i].first == entries[i - 1].first)
            throw std::invalid_argument("repeated loop index " + std::to_string(entries[i].first));
    }
    LoopMonomial m;
    m.primed = primed;
    m.exps = std::move(entries);
    m.n = std::max({n, 1, m.top_index() + 1});
    return m;
}

LoopMonomial LoopMonomial::from_word(const MixedBraidWord& w) {
    std::vector<std::pair<int, int>> e;
    int primed = -1;  // unknown until a loop letter above index 0 decides it
    int last = -1;
    for (const auto& l : w.letters) {
        if (l.gen == Gen::Sigma) throw std::invalid_argument("word is not a loop monomial: contains " + letter_str(l));
        const int idx = l.gen == Gen::Axis ? 0 : l.index;
        if (idx <= last) throw std::invalid_argument("loop indices must strictly increase");
        last = idx;
        if (idx > 0) {
            const int pr = l.gen == Gen::PrimedLoop ? 1 : 0;
            if (primed >= 0 && primed != pr) throw std::invalid_argument("mixed primed and unprimed loops");
            primed = pr;
        }
        e.emplace_back(idx, l.exp);
    }
    return from_pairs(std::move(e), primed == 1, w.n);
}

bool LoopMonomial::gap_free() const {
    for (std::size_t i = 0; i < exps.size(); ++i)
        if (exps[i].first != static_cast<int>(i)) return false;
    return true;
}

int LoopMonomial::level() const {
    int s = 0;
    for (const auto& [i, k] : exps) s += k;
    return s;
}

std::vector<int> LoopMonomial::exponents() const {
    if (!gap_free()) throw std::logic_error("exponent list requested for gapped monomial");
    std::vector<int> r;
    for (const auto& [i, k] : exps) r.push_back(k);
    return r;
}

MixedBraidWord LoopMonomial::to_word() const {
    MixedBraidWord w{n, {}};
    for (const auto& [i, k] : exps) {
        if (i == 0) w.letters.push_back({Gen::Axis, 0, k});
        else w.letters.push_back({primed ? Gen::PrimedLoop : Gen::Loop, i, k});
    }
    return w;
}

LoopMonomial LoopMonomial::homologous() const {
    LoopMonomial r = *this;
    r.primed = !primed;
    return r;
}

std::string LoopMonomial::str() const { return to_word().str(); }

LoopProfile LoopProfile::of(const std::vector<std::pair<int, int>>& entries) {
    LoopProfile p;
    for (const auto& [i, k] : entries) {
        p.indices.push_back(i);
        p.exps.push_back(k);
        p.total += k;
    }
    // gaps are closed, so the index is the generator count minus one
    p.ind = entries.empty() ? 0 : static_cast<int>(entries.size()) - 1;
    return p;
}

std::strong_ordering compare_order(const LoopProfile& a, const LoopProfile& b) {
    if (a.total != b.total) return a.total <=> b.total;
    if (a.ind != b.ind) return a.ind <=> b.ind;
    if (a.indices.size() != b.indices.size()) return a.indices.size() <=> b.indices.size();
    // a smaller index at the first difference means a larger word
    for (std::size_t s = 0; s < a.indices.size(); ++s)
        if (a.indices[s] != b.indices[s]) return b.indices[s] <=> a.indices[s];
    // same indices: compare exponents from the top index downward
    for (std::size_t r = a.exps.size(); r-- > 0;) {
        const int x = a.exps[r];
        const int y = b.exps[r];
        if (x == y) continue;
        if (std::abs(x) != std::abs(y)) return std::abs(x) <=> std::abs(y);
        // equal magnitude: the positive exponent is the smaller word
        return y <=> x;
    }
    return std::strong_ordering::equal;
}

namespace {

void compositions(int k, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (k == 0) {
        out.push_back(cur);
        return;
    }
    for (int f = 1; f <= k; ++f) {
        cur.push_back(f);
        compositions(k - f, cur, out);
        cur.pop_back();
    }
}

void ordered(int remaining, int len, int lo, const EnumerationLimits& lim, std::vector<int>& cur,
             std::vector<std::vector<int>>& out) {
    if (static_cast<int>(cur.size()) == len) {
        if (remaining == 0) out.push_back(cur);
        return;
    }
    for (int v = lo; v <= lim.max_abs_exp; ++v) {
        if (v == 0) continue;
        cur.push_back(v);
        ordered(remaining - v, len, v, lim, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<LoopMonomial> enumerate_level(int k, Side side, EnumerationLimits lim) {
    std::vector<std::vector<int>> raw;
    std::vector<int> cur;
    switch (side) {
        case Side::Positive:
            if (k < 0) throw std::invalid_argument("positive side needs a nonnegative level");
            compositions(k, cur, raw);
            break;
        case Side::Negative:
            compositions(std::abs(k), cur, raw);
            for (auto& c : raw)
                for (auto& x : c) x = -x;
            break;
        case Side::Ordered:
            if (k == 0) raw.emplace_back();
            for (int len = 1; len <= lim.max_length; ++len) ordered(k, len, -lim.max_abs_exp, lim, cur, raw);
            break;
    }
    std::sort(raw.begin(), raw.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    std::vector<LoopMonomial> out;
    out.reserve(raw.size());
    for (const auto& c : raw) out.push_back(LoopMonomial::from_exponents(c));
    return out;
}

MixedBraidWord bbm(const LoopMonomial& m, int sign, int p) {
    if (m.primed) throw std::invalid_argument("bbm expects an unprimed loop monomial");
    if (!m.gap_free()) throw std::invalid_argument("bbm expects a gap-free loop monomial");
    if (sign != 1 && sign != -1) throw std::invalid_argument("bbm sign must be +1 or -1");
    if (p < 0) throw std::invalid_argument("bbm needs p >= 0");
    const int n = std::max<int>(1, static_cast<int>(m.exps.size()));
    MixedBraidWord w{n + 1, {}};
    if (p != 0) w.letters.push_back({Gen::Axis, 0, p});
    for (const auto& [i, k] : m.exps) w.letters.push_back({Gen::Loop, i + 1, k});
    w.letters.push_back({Gen::Sigma, 1, sign});
    return w;
}

LoopMonomial f_map(const LoopMonomial& m) {
    LoopMonomial r = m;
    for (auto& e : r.exps) e.second = -e.second;
    return r;
}

}  // namespace lensskein::braid
