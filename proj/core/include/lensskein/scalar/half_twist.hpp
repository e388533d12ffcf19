#pragma once

#include <string>

#include "lensskein/scalar/rat_func.hpp"

namespace lensskein::scalar {

// even + odd * w where w is a formal square root of lambda.
class HalfTwistScalar {
public:
    HalfTwistScalar() = default;
    HalfTwistScalar(RatFunc even) : even_(std::move(even)) {}  // NOLINT(google-explicit-constructor)
    HalfTwistScalar(RatFunc even, RatFunc odd) : even_(std::move(even)), odd_(std::move(odd)) {}

    // w^e for any integer e.
    static HalfTwistScalar w_pow(int e);

    const RatFunc& even() const { return even_; }
    const RatFunc& odd() const { return odd_; }
    bool is_zero() const { return even_.is_zero() && odd_.is_zero(); }

    HalfTwistScalar& operator+=(const HalfTwistScalar& o);
    HalfTwistScalar& operator*=(const HalfTwistScalar& o);
    friend HalfTwistScalar operator+(HalfTwistScalar a, const HalfTwistScalar& b) { return a += b; }
    friend HalfTwistScalar operator*(HalfTwistScalar a, const HalfTwistScalar& b) { return a *= b; }
    HalfTwistScalar pow(int e) const;
    HalfTwistScalar inverse() const;

    bool operator==(const HalfTwistScalar& o) const { return even_ == o.even_ && odd_ == o.odd_; }
    bool operator!=(const HalfTwistScalar& o) const { return !(*this == o); }

    // "even", "(odd)*w" or "even + (odd)*w".
    std::string str() const;

private:
    RatFunc even_;
    RatFunc odd_;
};

// Delta = -(1 - lambda q) / (w (1 - q)), with zero even part.
const HalfTwistScalar& delta();

}  // namespace lensskein::scalar
