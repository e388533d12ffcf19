// Dense primitive-PRS gcd over Z[q][z]. Inputs in this project are small
// (degrees well under a hundred), so the dense representation is adequate.
#include "poly_gcd.hpp"

#include <stdexcept>
#include <vector>

namespace lensskein::scalar::detail {
namespace {

using UPoly = std::vector<mpz_class>;  // index = degree in q
using BPoly = std::vector<UPoly>;      // index = degree in z

void trim(UPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}
void trim(BPoly& a) {
    while (!a.empty() && a.back().empty()) a.pop_back();
}

int deg(const UPoly& a) { return static_cast<int>(a.size()) - 1; }
int deg(const BPoly& a) { return static_cast<int>(a.size()) - 1; }

UPoly umul(const UPoly& a, const UPoly& b) {
    if (a.empty() || b.empty()) return {};
    UPoly r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    trim(r);
    return r;
}

UPoly usub(const UPoly& a, const UPoly& b) {
    UPoly r(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    trim(r);
    return r;
}

mpz_class ucontent(const UPoly& a) {
    mpz_class g = 0;
    for (const auto& c : a) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

UPoly uscale_div(const UPoly& a, const mpz_class& d) {
    UPoly r = a;
    for (auto& c : r) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), d.get_mpz_t());
    return r;
}

UPoly uprimitive(const UPoly& a) {
    if (a.empty()) return a;
    mpz_class c = ucontent(a);
    if (a.back() < 0) c = -c;
    return uscale_div(a, c);
}

// Pseudo-remainder without the full lc power; sufficient for a primitive PRS.
UPoly uprem(UPoly r, const UPoly& b) {
    const mpz_class& lb = b.back();
    while (!r.empty() && deg(r) >= deg(b)) {
        const int d = deg(r) - deg(b);
        const mpz_class lr = r.back();
        for (auto& c : r) c *= lb;
        for (std::size_t j = 0; j < b.size(); ++j) r[j + d] -= lr * b[j];
        trim(r);
    }
    return r;
}

UPoly ugcd(UPoly a, UPoly b) {
    if (a.empty()) std::swap(a, b);
    if (b.empty()) {
        if (!a.empty() && a.back() < 0)
            for (auto& x : a) x = -x;
        return a;
    }
    mpz_class c;
    mpz_gcd(c.get_mpz_t(), ucontent(a).get_mpz_t(), ucontent(b).get_mpz_t());
    a = uprimitive(a);
    b = uprimitive(b);
    if (deg(a) < deg(b)) std::swap(a, b);
    while (!b.empty()) {
        UPoly r = uprem(a, b);
        a = std::move(b);
        b = uprimitive(r);
    }
    a = uprimitive(a);
    for (auto& x : a) x *= c;
    return a;
}

// Exact quotient a / b in Z[q]; nullopt-like failure signalled by throwing.
UPoly udivexact(UPoly r, const UPoly& b) {
    if (b.empty()) throw std::domain_error("division by zero polynomial");
    if (r.empty()) return {};
    if (deg(r) < deg(b)) throw std::domain_error("inexact polynomial division");
    UPoly quo(deg(r) - deg(b) + 1);
    const mpz_class& lb = b.back();
    while (!r.empty() && deg(r) >= deg(b)) {
        const int d = deg(r) - deg(b);
        if (!mpz_divisible_p(r.back().get_mpz_t(), lb.get_mpz_t()))
            throw std::domain_error("inexact polynomial division");
        mpz_class f;
        mpz_divexact(f.get_mpz_t(), r.back().get_mpz_t(), lb.get_mpz_t());
        quo[d] = f;
        for (std::size_t j = 0; j < b.size(); ++j) r[j + d] -= f * b[j];
        trim(r);
    }
    if (!r.empty()) throw std::domain_error("inexact polynomial division");
    trim(quo);
    return quo;
}

UPoly bcontent(const BPoly& a) {
    UPoly g;
    for (const auto& c : a) {
        if (c.empty()) continue;
        g = ugcd(g, c);
        if (g.size() == 1 && g[0] == 1) break;
    }
    return g;
}

BPoly bdiv_coeff(const BPoly& a, const UPoly& d) {
    BPoly r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i].empty() ? UPoly{} : udivexact(a[i], d);
    return r;
}

BPoly bprimitive(const BPoly& a) {
    if (a.empty()) return a;
    UPoly c = bcontent(a);
    if (a.back().back() < 0)
        for (auto& x : c) x = -x;
    return bdiv_coeff(a, c);
}

BPoly bprem(BPoly r, const BPoly& b) {
    const UPoly& lb = b.back();
    while (!r.empty() && deg(r) >= deg(b)) {
        const int d = deg(r) - deg(b);
        const UPoly lr = r.back();
        for (auto& c : r) c = umul(c, lb);
        for (std::size_t j = 0; j < b.size(); ++j) r[j + d] = usub(r[j + d], umul(lr, b[j]));
        trim(r);
    }
    return r;
}

BPoly bdivexact(BPoly r, const BPoly& b) {
    if (b.empty()) throw std::domain_error("division by zero polynomial");
    if (r.empty()) return {};
    if (deg(r) < deg(b)) throw std::domain_error("inexact polynomial division");
    BPoly quo(deg(r) - deg(b) + 1);
    while (!r.empty() && deg(r) >= deg(b)) {
        const int d = deg(r) - deg(b);
        UPoly f = udivexact(r.back(), b.back());
        for (std::size_t j = 0; j < b.size(); ++j) r[j + d] = usub(r[j + d], umul(f, b[j]));
        quo[d] = std::move(f);
        trim(r);
    }
    if (!r.empty()) throw std::domain_error("inexact polynomial division");
    trim(quo);
    return quo;
}

BPoly to_dense(const LaurentPoly& p, Mono shift) {
    BPoly r;
    for (const auto& t : p.terms()) {
        const int qe = t.m.q - shift.q;
        const int ze = t.m.z - shift.z;
        if (static_cast<int>(r.size()) <= ze) r.resize(ze + 1);
        if (static_cast<int>(r[ze].size()) <= qe) r[ze].resize(qe + 1);
        r[ze][qe] = t.c;
    }
    for (auto& c : r) trim(c);
    trim(r);
    return r;
}

LaurentPoly from_dense(const BPoly& a, Mono shift) {
    std::vector<Term> ts;
    for (std::size_t ze = 0; ze < a.size(); ++ze)
        for (std::size_t qe = 0; qe < a[ze].size(); ++qe)
            if (a[ze][qe] != 0)
                ts.push_back({{static_cast<int>(qe) + shift.q, static_cast<int>(ze) + shift.z}, a[ze][qe]});
    return LaurentPoly::from_terms(std::move(ts));
}

}  // namespace

LaurentPoly poly_gcd(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero() && b.is_zero()) return {};
    if (a.is_zero()) return poly_gcd(b, b);
    if (b.is_zero()) return poly_gcd(a, a);
    if (a.is_monomial() || b.is_monomial()) {
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), a.content().get_mpz_t(), b.content().get_mpz_t());
        return LaurentPoly(g);
    }
    BPoly x = to_dense(a, a.min_exponents());
    BPoly y = to_dense(b, b.min_exponents());
    UPoly c = ugcd(bcontent(x), bcontent(y));
    x = bprimitive(x);
    y = bprimitive(y);
    if (deg(x) < deg(y)) std::swap(x, y);
    while (!y.empty()) {
        BPoly r = bprem(x, y);
        x = std::move(y);
        y = bprimitive(r);
    }
    x = bprimitive(x);
    for (auto& coeff : x) coeff = umul(coeff, c);
    trim(x);
    return from_dense(x, {0, 0});
}

LaurentPoly poly_divexact(const LaurentPoly& a, const LaurentPoly& b) {
    if (b.is_zero()) throw std::domain_error("division by zero polynomial");
    if (a.is_zero()) return {};
    if (b.is_monomial()) {
        const auto& t = b.terms()[0];
        LaurentPoly r = a.shifted(Mono{} - t.m);
        for (const auto& x : r.terms())
            if (!mpz_divisible_p(x.c.get_mpz_t(), t.c.get_mpz_t()))
                throw std::domain_error("inexact polynomial division");
        return r.divexact(t.c);
    }
    const Mono sa = a.min_exponents();
    const Mono sb = b.min_exponents();
    BPoly q = bdivexact(to_dense(a, sa), to_dense(b, sb));
    return from_dense(q, sa - sb);
}

}  // namespace lensskein::scalar::detail
