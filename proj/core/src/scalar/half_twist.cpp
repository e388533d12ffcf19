#include "lensskein/scalar/half_twist.hpp"

#include <stdexcept>

namespace lensskein::scalar {

HalfTwistScalar HalfTwistScalar::w_pow(int e) {
    // w^(2j) = lambda^j, w^(2j+1) = lambda^j w
    const int j = (e >= 0) ? e / 2 : -((-e + 1) / 2);
    const RatFunc lj = lambda().pow(j);
    if (e - 2 * j == 0) return {lj, RatFunc()};
    return {RatFunc(), lj};
}

HalfTwistScalar& HalfTwistScalar::operator+=(const HalfTwistScalar& o) {
    even_ += o.even_;
    odd_ += o.odd_;
    return *this;
}

HalfTwistScalar& HalfTwistScalar::operator*=(const HalfTwistScalar& o) {
    RatFunc e = even_ * o.even_;
    if (!odd_.is_zero() && !o.odd_.is_zero()) e += odd_ * o.odd_ * lambda();
    RatFunc d = even_ * o.odd_ + odd_ * o.even_;
    even_ = e.reduced();
    odd_ = d.reduced();
    return *this;
}

HalfTwistScalar HalfTwistScalar::pow(int e) const {
    if (e < 0) return inverse().pow(-e);
    HalfTwistScalar r(RatFunc(1));
    for (int i = 0; i < e; ++i) r *= *this;
    return r;
}

HalfTwistScalar HalfTwistScalar::inverse() const {
    // (a + b w)^-1 = (a - b w) / (a^2 - b^2 lambda)
    const RatFunc norm = even_ * even_ - odd_ * odd_ * lambda();
    if (norm.is_zero()) throw std::domain_error("non-invertible half-twist scalar");
    const RatFunc inv = norm.inverse();
    return {(even_ * inv).reduced(), (-odd_ * inv).reduced()};
}

std::string HalfTwistScalar::str() const {
    if (odd_.is_zero()) return even_.str();
    const std::string o = "(" + odd_.str() + ")*w";
    if (even_.is_zero()) return o;
    return even_.str() + " + " + o;
}

const HalfTwistScalar& delta() {
    static const HalfTwistScalar d = [] {
        const RatFunc one(1);
        const RatFunc num = -(one - lambda() * RatFunc::q());
        const RatFunc odd = num * lambda().inverse() / (one - RatFunc::q());
        return HalfTwistScalar(RatFunc(), odd.reduced());
    }();
    return d;
}

}  // namespace lensskein::scalar
