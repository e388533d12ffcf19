#include "lensskein/trace/markov.hpp"

#include "../common/memo.hpp"

namespace lensskein::trace {

using hecke::BKey;
using hecke::BKeyHash;
using hecke::BVec;
using hecke::PVec;
using LP = scalar::LaurentPoly;

namespace {

// Trace values of basis words have Laurent coefficients in q and z.
using LTrace = SMap<LP>;

void add_scaled(LTrace& out, const LTrace& t, const LP& c, const SMonomial& extra) {
    for (const auto& [m, v] : t) {
        const SMonomial key = extra.empty() ? m : m.times(extra);
        LP add = v * c;
        auto it = out.find(key);
        if (it == out.end()) {
            out.emplace(key, std::move(add));
        } else {
            it->second += add;
            if (it->second.is_zero()) out.erase(it);
        }
    }
}

detail::Memo<BKey, LTrace, BKeyHash>& memo(PeelOrder order) {
    static detail::Memo<BKey, LTrace, BKeyHash> ltr, rtl;
    return order == PeelOrder::LeftToRight ? ltr : rtl;
}

const LTrace& trace_basis(const BKey& key, PeelOrder order);

LTrace trace_pvec(const PVec& x, PeelOrder order) {
    LTrace out;
    for (const auto& [k, c] : x) add_scaled(out, trace_basis(k, order), c, SMonomial());
    return out;
}

// Right multiplication by t'_i^k in the Bernstein basis.
BVec rmul_primed_loop(BVec x, int i, int k) {
    for (int j = i; j >= 1; --j) x = hecke::rmul_g(x, j);
    x = hecke::rmul_x0(x, k);
    for (int j = 1; j <= i; ++j) x = hecke::rmul_g_inv(x, j);
    return x;
}

LTrace compute(const BKey& key, PeelOrder order) {
    int top = hecke::top_moved(key.w);
    for (int i = 0; i < hecke::kMaxStrands; ++i)
        if (key.a[i]) top = std::max(top, i);
    LTrace out;
    if (top <= 0) {
        out.emplace(SMonomial::single(key.a[0]), LP(1));
        return out;
    }
    const int m = top;
    const int k = key.a[m];
    int pos = 0;
    while (key.w[pos] != m) ++pos;
    BKey rest = key;
    rest.a[m] = 0;
    if (pos == m) {
        // the top strand carries only t'_m^k
        add_scaled(out, trace_basis(rest, order), LP(1), SMonomial::single(k));
        return out;
    }
    // w = u . g_m g_{m-1} ... g_{pos+1}; move t'_m^k across g_m to become
    // t'_{m-1}^k, cycle the run R = g_{m-1} ... g_{pos+1}, and close g_m with z.
    for (int j = pos; j < m; ++j) rest.w[j] = key.w[j + 1];
    rest.w[m] = static_cast<std::uint8_t>(m);
    PVec x{{rest, LP(1)}};
    if (order == PeelOrder::LeftToRight) {
        if (k == 0) {
            BVec y(x.begin(), x.end());
            for (int s = m - 1; s > pos; --s) y = hecke::rmul_g(y, s);
            x = PVec(y.begin(), y.end());
        } else {
            BVec y = rmul_primed_loop(hecke::from_primed(x), m - 1, k);
            for (int s = m - 1; s > pos; --s) y = hecke::rmul_g(y, s);
            x = hecke::to_primed(y);
        }
    } else {
        BVec y = hecke::from_primed(x);
        if (k != 0) y = rmul_primed_loop(std::move(y), m - 1, k);
        for (int s = pos + 1; s < m; ++s) y = hecke::lmul_g(y, s);
        x = hecke::to_primed(y);
    }
    add_scaled(out, trace_pvec(x, order), LP::z(), SMonomial());
    return out;
}

const LTrace& trace_basis(const BKey& key, PeelOrder order) {
    auto& mm = memo(order);
    if (const LTrace* t = mm.find(key)) return *t;
    return mm.insert(key, compute(key, order));
}

}  // namespace

TraceValue trace(const hecke::AlgebraElement& e, PeelOrder order) {
    TraceValue out;
    for (const auto& [k, c] : e.terms())
        for (const auto& [m, v] : trace_basis(k, order)) out.add_term(m, c * RatFunc(v));
    return out;
}

TraceValue trace_word(const braid::MixedBraidWord& w, PeelOrder order) {
    return trace(hecke::project_braid(w), order);
}

TraceValue trace_monomial(const braid::LoopMonomial& m) {
    braid::MixedBraidWord w = m.to_word();
    w.n = std::max(1, m.top_index() + 1);
    return trace_word(w);
}

XValue invariant_x(const braid::MixedBraidWord& w) {
    return make_xvalue(trace_word(w), w.n, w.exponent_sum());
}

TraceValue map_I(const TraceValue& v, int p) {
    if (p < 1) throw DomainError("map_I needs p >= 1");
    TraceValue out;
    for (const auto& [m, c] : v.terms()) {
        std::vector<int> idx;
        for (int j : m.idx) {
            if (j > p)
                throw DomainError("map_I: index s[" + std::to_string(j) + "] exceeds p=" + std::to_string(p));
            idx.push_back(j < 0 ? -j : 2 * p - j);
        }
        out.add_term(SMonomial(std::move(idx)), scalar::scalar_I(c));
    }
    return out;
}

RatFunc bbm_coefficient(const braid::LoopMonomial& m, int sign) {
    const int level = m.level();
    return scalar::lambda().pow(sign > 0 ? level : level - 1) / RatFunc::z();
}

Equation bbm_equation(const braid::LoopMonomial& m, int sign, int p) {
    Equation eq;
    eq.source = m;
    eq.sign = sign;
    eq.p = p;
    eq.image = braid::bbm(m, sign, p);
    eq.coefficient = bbm_coefficient(m, sign);
    eq.lhs = trace_monomial(m);
    eq.raw_rhs = trace_word(eq.image);
    eq.rhs = eq.raw_rhs.scaled(eq.coefficient);

    braid::MixedBraidWord src = m.to_word();
    src.n = std::max(1, m.top_index() + 1);
    const auto lhs_factor = scalar::delta().pow(src.n - 1) * HalfTwistScalar::w_pow(src.exponent_sum()) *
                            HalfTwistScalar(eq.coefficient);
    const auto rhs_factor =
        scalar::delta().pow(eq.image.n - 1) * HalfTwistScalar::w_pow(eq.image.exponent_sum());
    if (lhs_factor != rhs_factor)
        throw std::logic_error("bbm coefficient disagrees with the invariant normalization for " + m.str());
    return eq;
}

nlohmann::json Equation::to_json() const {
    return {{"source", source.to_json()},
            {"sign", sign > 0 ? "+" : "-"},
            {"p", p},
            {"image", image.str()},
            {"coefficient", coefficient.to_json()},
            {"lhs", lhs.to_json()},
            {"rhs", rhs.to_json()}};
}

std::size_t trace_cache_size() { return memo(PeelOrder::LeftToRight).size() + memo(PeelOrder::RightToLeft).size(); }

}  // namespace lensskein::trace
