#include "lensskein/scalar/rat_func.hpp"

#include <stdexcept>

#include "poly_gcd.hpp"

namespace lensskein::scalar {

RatFunc::RatFunc(LaurentPoly num, LaurentPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
    fold_monomial_den();
}

void RatFunc::fold_monomial_den() {
    if (!den_.is_monomial()) return;
    if (den_.is_one()) return;
    const Term t = den_.terms()[0];
    num_ = num_.shifted(Mono{} - t.m);
    mpz_class c = t.c;
    if (c < 0) {
        num_ = -num_;
        c = -c;
    }
    if (!num_.is_zero() && c != 1) {
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), num_.content().get_mpz_t(), c.get_mpz_t());
        if (g != 1) {
            num_ = num_.divexact(g);
            c /= g;
        }
    }
    if (num_.is_zero()) c = 1;
    den_ = LaurentPoly(c);
}

RatFunc& RatFunc::operator+=(const RatFunc& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    if (den_ == o.den_) {
        num_ += o.num_;
        if (num_.is_zero()) den_ = 1;
        return *this;
    }
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
    if (num_.is_zero()) den_ = 1;
    fold_monomial_den();
    return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& o) { return *this += -o; }

RatFunc& RatFunc::operator*=(const RatFunc& o) {
    if (is_zero() || o.is_zero()) return *this = RatFunc();
    num_ *= o.num_;
    if (!o.den_.is_one()) {
        den_ *= o.den_;
        fold_monomial_den();
    }
    return *this;
}

RatFunc& RatFunc::operator/=(const RatFunc& o) { return *this *= o.inverse(); }

RatFunc RatFunc::inverse() const {
    if (is_zero()) throw std::domain_error("division by zero rational function");
    return {den_, num_};
}

RatFunc RatFunc::pow(int e) const {
    if (e < 0) return inverse().pow(-e);
    RatFunc r(1);
    RatFunc b = *this;
    auto u = static_cast<unsigned>(e);
    while (u) {
        if (u & 1u) r *= b;
        u >>= 1u;
        if (u) b *= b;
    }
    return r;
}

RatFunc RatFunc::reduced() const {
    if (is_zero()) return {};
    if (den_.is_monomial()) return *this;
    const LaurentPoly g = detail::poly_gcd(num_, den_);
    LaurentPoly n = detail::poly_divexact(num_, g);
    LaurentPoly d = detail::poly_divexact(den_, g);
    const Mono shift = d.min_exponents();
    n = n.shifted(Mono{} - shift);
    d = d.shifted(Mono{} - shift);
    if (d.terms()[0].c < 0) {
        n = -n;
        d = -d;
    }
    return {std::move(n), std::move(d)};
}

bool RatFunc::operator==(const RatFunc& o) const {
    if (den_ == o.den_) return num_ == o.num_;
    return num_ * o.den_ == o.num_ * den_;
}

std::string RatFunc::str() const {
    const RatFunc r = reduced();
    if (r.den_.is_one()) return r.num_.str();
    auto wrap = [](const LaurentPoly& p) {
        return p.size() == 1 && p.terms()[0].c > 0 ? p.str() : "(" + p.str() + ")";
    };
    return wrap(r.num_) + "/" + wrap(r.den_);
}

nlohmann::json RatFunc::to_json() const {
    const RatFunc r = reduced();
    return {{"num", r.num_.str()}, {"den", r.den_.str()}};
}

const RatFunc& lambda() {
    static const RatFunc l(LaurentPoly::z() + LaurentPoly(1) - LaurentPoly::q(), LaurentPoly::monomial({1, 1}));
    return l;
}

namespace {

// Image of a Laurent polynomial under q -> q^-1, z -> lambda z. Each term
// c q^a z^b becomes c q^{-a-b} (z + 1 - q)^b, so the result is N / (z+1-q)^s.
RatFunc image_I(const LaurentPoly& p) {
    if (p.is_zero()) return {};
    const int bmin = p.min_exponents().z;
    const int hi = std::max(p.max_exponents().z, 0);
    const int lo = std::min(bmin, 0);
    const LaurentPoly ln = LaurentPoly::z() + LaurentPoly(1) - LaurentPoly::q();
    std::vector<LaurentPoly> powers(static_cast<std::size_t>(hi - lo + 1));
    powers[0] = LaurentPoly(1);
    for (std::size_t i = 1; i < powers.size(); ++i) powers[i] = powers[i - 1] * ln;
    LaurentPoly out;
    for (const auto& t : p.terms()) {
        LaurentPoly mono(t.c, {-t.m.q - t.m.z, 0});
        out += mono * powers[static_cast<std::size_t>(t.m.z - lo)];
    }
    return {out, powers[static_cast<std::size_t>(-lo)]};
}

}  // namespace

RatFunc scalar_I(const RatFunc& a) {
    if (a.is_zero()) return {};
    return image_I(a.num()) / image_I(a.den());
}

}  // namespace lensskein::scalar
