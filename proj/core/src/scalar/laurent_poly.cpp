#include "lensskein/scalar/laurent_poly.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace lensskein::scalar {

LaurentPoly::LaurentPoly(long c) {
    if (c != 0) terms_.push_back({{0, 0}, mpz_class(c)});
}

LaurentPoly::LaurentPoly(const mpz_class& c, Mono m) {
    if (c != 0) terms_.push_back({m, c});
}

LaurentPoly LaurentPoly::from_terms(std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.m < b.m; });
    LaurentPoly r;
    for (auto& t : terms) {
        if (!r.terms_.empty() && r.terms_.back().m == t.m) {
            r.terms_.back().c += t.c;
        } else {
            if (!r.terms_.empty() && r.terms_.back().c == 0) r.terms_.pop_back();
            r.terms_.push_back(std::move(t));
        }
    }
    if (!r.terms_.empty() && r.terms_.back().c == 0) r.terms_.pop_back();
    return r;
}

bool LaurentPoly::is_one() const {
    return terms_.size() == 1 && terms_[0].m == Mono{} && terms_[0].c == 1;
}

mpz_class LaurentPoly::coeff(Mono m) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                               [](const Term& t, const Mono& key) { return t.m < key; });
    if (it != terms_.end() && it->m == m) return it->c;
    return 0;
}

Mono LaurentPoly::min_exponents() const {
    if (terms_.empty()) throw std::logic_error("min_exponents of zero polynomial");
    Mono r = terms_[0].m;
    for (const auto& t : terms_) {
        r.q = std::min(r.q, t.m.q);
        r.z = std::min(r.z, t.m.z);
    }
    return r;
}

Mono LaurentPoly::max_exponents() const {
    if (terms_.empty()) throw std::logic_error("max_exponents of zero polynomial");
    Mono r = terms_[0].m;
    for (const auto& t : terms_) {
        r.q = std::max(r.q, t.m.q);
        r.z = std::max(r.z, t.m.z);
    }
    return r;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r = *this;
    for (auto& t : r.terms_) t.c = -t.c;
    return r;
}

namespace {

// Merge two sorted term lists, b scaled by sign.
std::vector<Term> merge(const std::vector<Term>& a, const std::vector<Term>& b, int sign) {
    std::vector<Term> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].m < b[j].m)) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j].m < a[i].m) {
            out.push_back({b[j].m, sign > 0 ? b[j].c : mpz_class(-b[j].c)});
            ++j;
        } else {
            mpz_class c = sign > 0 ? mpz_class(a[i].c + b[j].c) : mpz_class(a[i].c - b[j].c);
            if (c != 0) out.push_back({a[i].m, std::move(c)});
            ++i;
            ++j;
        }
    }
    return out;
}

}  // namespace

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    if (o.terms_.empty()) return *this;
    if (terms_.empty()) return *this = o;
    terms_ = merge(terms_, o.terms_, 1);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    if (o.terms_.empty()) return *this;
    terms_ = merge(terms_, o.terms_, -1);
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (b.terms_.size() == 1) {
        LaurentPoly r;
        r.terms_.reserve(a.terms_.size());
        const auto& bt = b.terms_[0];
        for (const auto& t : a.terms_) r.terms_.push_back({t.m + bt.m, t.c * bt.c});
        return r;
    }
    if (a.terms_.size() == 1) return b * a;
    std::vector<Term> acc;
    acc.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& x : a.terms_)
        for (const auto& y : b.terms_) acc.push_back({x.m + y.m, x.c * y.c});
    return LaurentPoly::from_terms(std::move(acc));
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) { return *this = *this * o; }

void LaurentPoly::add_scaled(const LaurentPoly& b, const LaurentPoly& c) { *this += b * c; }

LaurentPoly LaurentPoly::shifted(Mono by) const {
    LaurentPoly r = *this;
    for (auto& t : r.terms_) t.m = t.m + by;
    return r;
}

LaurentPoly LaurentPoly::scaled(const mpz_class& c) const {
    if (c == 0) return {};
    LaurentPoly r = *this;
    for (auto& t : r.terms_) t.c *= c;
    return r;
}

LaurentPoly LaurentPoly::pow(unsigned e) const {
    LaurentPoly result(1), base = *this;
    while (e) {
        if (e & 1u) result *= base;
        e >>= 1u;
        if (e) base *= base;
    }
    return result;
}

LaurentPoly LaurentPoly::divexact(const mpz_class& c) const {
    LaurentPoly r = *this;
    for (auto& t : r.terms_) mpz_divexact(t.c.get_mpz_t(), t.c.get_mpz_t(), c.get_mpz_t());
    return r;
}

mpz_class LaurentPoly::content() const {
    mpz_class g = 0;
    for (const auto& t : terms_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

LaurentPoly LaurentPoly::invert_q() const {
    std::vector<Term> ts = terms_;
    for (auto& t : ts) t.m.q = -t.m.q;
    return from_terms(std::move(ts));
}

bool LaurentPoly::operator==(const LaurentPoly& o) const {
    if (terms_.size() != o.terms_.size()) return false;
    for (std::size_t i = 0; i < terms_.size(); ++i)
        if (terms_[i].m != o.terms_[i].m || terms_[i].c != o.terms_[i].c) return false;
    return true;
}

std::strong_ordering LaurentPoly::operator<=>(const LaurentPoly& o) const {
    const std::size_t n = std::min(terms_.size(), o.terms_.size());
    for (std::size_t i = 0; i < n; ++i) {
        if (auto c = terms_[i].m <=> o.terms_[i].m; c != 0) return c;
        int cc = cmp(terms_[i].c, o.terms_[i].c);
        if (cc != 0) return cc < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    return terms_.size() <=> o.terms_.size();
}

std::string mono_str(Mono m) {
    std::string s;
    auto factor = [&s](const char* v, int e) {
        if (e == 0) return;
        if (!s.empty()) s += '*';
        s += v;
        if (e != 1) s += '^' + std::to_string(e);
    };
    factor("q", m.q);
    factor("z", m.z);
    return s;
}

std::string LaurentPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& t : terms_) {
        mpz_class a = abs(t.c);
        const bool neg = t.c < 0;
        if (first) {
            if (neg) out << '-';
        } else {
            out << (neg ? " - " : " + ");
        }
        first = false;
        const std::string ms = mono_str(t.m);
        if (ms.empty()) {
            out << a.get_str();
        } else if (a == 1) {
            out << ms;
        } else {
            out << a.get_str() << '*' << ms;
        }
    }
    return out.str();
}

std::size_t LaurentPoly::hash() const {
    std::size_t h = 0x9e3779b97f4a7c15ULL;
    for (const auto& t : terms_) {
        h ^= std::hash<long>()(t.m.q * 1000003L + t.m.z) + 0x9e3779b9 + (h << 6) + (h >> 2);
        h ^= std::hash<long>()(mpz_get_si(t.c.get_mpz_t())) + (h << 6) + (h >> 2);
    }
    return h;
}

}  // namespace lensskein::scalar
