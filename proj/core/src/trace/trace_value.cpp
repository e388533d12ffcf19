#include "lensskein/trace/trace_value.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace lensskein::trace {

SMonomial::SMonomial(std::vector<int> indices) : idx(std::move(indices)) {
    idx.erase(std::remove(idx.begin(), idx.end(), 0), idx.end());
    std::sort(idx.begin(), idx.end());
}

int SMonomial::level() const { return std::accumulate(idx.begin(), idx.end(), 0); }

SMonomial SMonomial::times(const SMonomial& o) const {
    SMonomial r;
    r.idx.reserve(idx.size() + o.idx.size());
    std::merge(idx.begin(), idx.end(), o.idx.begin(), o.idx.end(), std::back_inserter(r.idx));
    return r;
}

std::string SMonomial::str() const {
    if (idx.empty()) return "1";
    std::string s;
    for (int k : idx) s += "s[" + std::to_string(k) + "]";
    return s;
}

bool SMonomialLess::operator()(const SMonomial& a, const SMonomial& b) const {
    const int la = a.level(), lb = b.level();
    if (la != lb) return la < lb;
    return a.idx < b.idx;
}

TraceValue::TraceValue(RatFunc c) {
    if (!c.is_zero()) terms_.emplace(SMonomial(), std::move(c));
}

TraceValue TraceValue::monomial(const SMonomial& m, RatFunc c) {
    TraceValue t;
    t.add_term(m, c);
    return t;
}

RatFunc TraceValue::coeff(const SMonomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? RatFunc() : it->second;
}

void TraceValue::add_term(const SMonomial& m, const RatFunc& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

TraceValue& TraceValue::operator+=(const TraceValue& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

TraceValue& TraceValue::operator-=(const TraceValue& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

TraceValue& TraceValue::operator*=(const TraceValue& o) {
    TraceValue r;
    for (const auto& [m1, c1] : terms_)
        for (const auto& [m2, c2] : o.terms_) r.add_term(m1.times(m2), c1 * c2);
    return *this = std::move(r);
}

TraceValue TraceValue::scaled(const RatFunc& c) const {
    TraceValue r;
    if (c.is_zero()) return r;
    for (const auto& [m, v] : terms_) r.terms_.emplace(m, v * c);
    return r;
}

bool TraceValue::operator==(const TraceValue& o) const {
    if (terms_.size() != o.terms_.size()) return false;
    auto it = o.terms_.begin();
    for (const auto& [m, c] : terms_) {
        if (!(m == it->first) || c != it->second) return false;
        ++it;
    }
    return true;
}

std::vector<int> TraceValue::levels() const {
    std::set<int> s;
    for (const auto& [m, c] : terms_) s.insert(m.level());
    return {s.begin(), s.end()};
}

std::string format_term(const std::string& coeff, const std::string& mono) {
    if (mono == "1") return coeff;
    if (coeff == "1") return mono;
    if (coeff == "-1") return "-" + mono;
    const bool plain = coeff.find(' ') == std::string::npos;
    return (plain ? coeff : "(" + coeff + ")") + " * " + mono;
}

std::string TraceValue::str() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [m, c] : terms_) {
        if (!s.empty()) s += " + ";
        s += format_term(c.str(), m.str());
    }
    return s;
}

nlohmann::json TraceValue::to_json() const {
    nlohmann::json ts = nlohmann::json::array();
    for (const auto& [m, c] : terms_) ts.push_back({{"monomial", m.idx}, {"coeff", c.to_json()}});
    return {{"text", str()}, {"terms", ts}};
}

void TraceValue::reduce_coefficients() {
    for (auto& [m, c] : terms_) c = c.reduced();
}

bool XValue::operator==(const XValue& o) const {
    if (terms.size() != o.terms.size()) return false;
    auto it = o.terms.begin();
    for (const auto& [m, c] : terms) {
        if (!(m == it->first) || c != it->second) return false;
        ++it;
    }
    return true;
}

bool XValue::uniform_parity() const {
    const bool odd = ((e + n - 1) % 2 + 2) % 2 == 1;
    return std::all_of(terms.begin(), terms.end(), [odd](const auto& kv) {
        return odd ? kv.second.even().is_zero() : kv.second.odd().is_zero();
    });
}

std::string XValue::str() const {
    if (terms.empty()) return "0";
    std::string s;
    for (const auto& [m, c] : terms) {
        if (!s.empty()) s += " + ";
        s += format_term(c.str(), m.str());
    }
    return s;
}

nlohmann::json XValue::to_json() const {
    nlohmann::json ts = nlohmann::json::array();
    for (const auto& [m, c] : terms)
        ts.push_back({{"monomial", m.idx}, {"even", c.even().to_json()}, {"odd", c.odd().to_json()}});
    return {{"n", n}, {"e", e}, {"text", str()}, {"terms", ts}};
}

XValue make_xvalue(const TraceValue& t, int n, int e) {
    XValue x;
    x.n = n;
    x.e = e;
    const HalfTwistScalar f = scalar::delta().pow(n - 1) * HalfTwistScalar::w_pow(e);
    for (const auto& [m, c] : t.terms()) {
        HalfTwistScalar v = f * HalfTwistScalar(c);
        if (!v.is_zero()) x.terms.emplace(m, std::move(v));
    }
    return x;
}

}  // namespace lensskein::trace
