#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace lensskein::scalar {

// Exponent pair (power of q, power of z).
struct Mono {
    int q = 0;
    int z = 0;
    auto operator<=>(const Mono&) const = default;
    Mono operator+(const Mono& o) const { return {q + o.q, z + o.z}; }
    Mono operator-(const Mono& o) const { return {q - o.q, z - o.z}; }
};

struct Term {
    Mono m;
    mpz_class c;
};

// Laurent polynomial in q and z with arbitrary-precision integer coefficients.
// Terms are kept sorted by (q, z) with no zero coefficients.
class LaurentPoly {
public:
    LaurentPoly() = default;
    LaurentPoly(long c);  // NOLINT(google-explicit-constructor)
    explicit LaurentPoly(const mpz_class& c, Mono m = {});

    static LaurentPoly q(int e = 1) { return LaurentPoly(mpz_class(1), {e, 0}); }
    static LaurentPoly z(int e = 1) { return LaurentPoly(mpz_class(1), {0, e}); }
    static LaurentPoly monomial(Mono m, const mpz_class& c = 1) { return LaurentPoly(c, m); }
    // Builds from arbitrary terms; merges duplicates and drops zeros.
    static LaurentPoly from_terms(std::vector<Term> terms);

    const std::vector<Term>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    bool is_monomial() const { return terms_.size() == 1; }
    // Coefficient of a given monomial, zero when absent.
    mpz_class coeff(Mono m) const;

    Mono min_exponents() const;  // componentwise minimum; requires nonzero
    Mono max_exponents() const;

    LaurentPoly operator-() const;
    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly& operator*=(const LaurentPoly& o);
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);

    // a += c * b, the inner loop of most algebra code.
    void add_scaled(const LaurentPoly& b, const LaurentPoly& c);

    LaurentPoly shifted(Mono by) const;
    LaurentPoly scaled(const mpz_class& c) const;
    LaurentPoly pow(unsigned e) const;
    // Exact division by an integer that divides every coefficient.
    LaurentPoly divexact(const mpz_class& c) const;
    mpz_class content() const;  // gcd of coefficients, nonnegative

    // q -> q^-1 (z untouched).
    LaurentPoly invert_q() const;

    bool operator==(const LaurentPoly& o) const;
    bool operator!=(const LaurentPoly& o) const { return !(*this == o); }
    // Arbitrary but total order, used for map keys and deterministic output.
    std::strong_ordering operator<=>(const LaurentPoly& o) const;

    // Canonical text: terms by increasing (q, z), e.g. "-q^2*z + 3*q*z^-1 + 1".
    std::string str() const;
    std::size_t hash() const;

private:
    std::vector<Term> terms_;
};

std::string mono_str(Mono m);

}  // namespace lensskein::scalar
