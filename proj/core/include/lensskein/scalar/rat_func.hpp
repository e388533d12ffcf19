#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "lensskein/scalar/laurent_poly.hpp"

namespace lensskein::scalar {

// Element of Q(q, z) stored as an (optionally unreduced) quotient of Laurent
// polynomials. Equality is decided by cross-multiplication.
class RatFunc {
public:
    RatFunc() : den_(1) {}
    RatFunc(long c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
    RatFunc(LaurentPoly num) : num_(std::move(num)), den_(1) {}  // NOLINT
    RatFunc(LaurentPoly num, LaurentPoly den);

    static RatFunc q(int e = 1) { return LaurentPoly::q(e); }
    static RatFunc z(int e = 1) { return LaurentPoly::z(e); }

    const LaurentPoly& num() const { return num_; }
    const LaurentPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_ == den_; }
    // True when the denominator is a single monomial, i.e. the value is a Laurent polynomial.
    bool is_laurent() const { return den_.is_monomial(); }

    RatFunc operator-() const { return {-num_, den_}; }
    RatFunc& operator+=(const RatFunc& o);
    RatFunc& operator-=(const RatFunc& o);
    RatFunc& operator*=(const RatFunc& o);
    RatFunc& operator/=(const RatFunc& o);
    friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
    friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
    friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
    friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }

    RatFunc inverse() const;
    RatFunc pow(int e) const;

    // Cancels the polynomial gcd and normalizes units: the denominator's first
    // term is positive and its exponents are zero-minimal.
    RatFunc reduced() const;

    bool operator==(const RatFunc& o) const;
    bool operator!=(const RatFunc& o) const { return !(*this == o); }

    // Canonical text of the reduced form: "num" or "(num)/(den)".
    std::string str() const;
    // {"num": "...", "den": "..."} of the reduced form.
    nlohmann::json to_json() const;

private:
    // Folds a monomial denominator into the numerator when possible.
    void fold_monomial_den();

    LaurentPoly num_;
    LaurentPoly den_;
};

// lambda = (z + 1 - q) / (q z)
const RatFunc& lambda();

// The field endomorphism q -> q^-1, z -> lambda z.
RatFunc scalar_I(const RatFunc& a);

}  // namespace lensskein::scalar
