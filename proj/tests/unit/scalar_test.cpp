#include <random>
#include <stdexcept>

#include <gtest/gtest.h>

#include "lensskein/scalar/half_twist.hpp"
#include "lensskein/scalar/laurent_poly.hpp"
#include "lensskein/scalar/rat_func.hpp"

using namespace lensskein::scalar;

namespace {

const RatFunc q = RatFunc::q();
const RatFunc z = RatFunc::z();

RatFunc random_ratfunc(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> e(-2, 2), c(-3, 3), len(1, 3);
    auto poly = [&] {
        LaurentPoly p;
        for (int i = 0, m = len(rng); i < m; ++i) p += LaurentPoly(mpz_class(c(rng)), {e(rng), e(rng)});
        return p;
    };
    LaurentPoly den;
    while (den.is_zero()) den = poly();
    return {poly(), den};
}

}  // namespace

TEST(LaurentPoly, ArithmeticAndCanonicalText) {
    const LaurentPoly a = LaurentPoly::q() + LaurentPoly(1);
    const LaurentPoly b = LaurentPoly::q() - LaurentPoly(1);
    EXPECT_EQ((a * b).str(), "-1 + q^2");
    EXPECT_TRUE((a - a).is_zero());
    EXPECT_EQ(LaurentPoly::z(-1).shifted({2, 1}), LaurentPoly::q(2));
    EXPECT_EQ(a.pow(3).size(), 4u);
    EXPECT_EQ(LaurentPoly(mpz_class(6), {1, 0}).divexact(3), LaurentPoly(mpz_class(2), {1, 0}));
}

TEST(LaurentPoly, InvertQLeavesZAlone) {
    const LaurentPoly p = LaurentPoly(mpz_class(2), {3, 1}) + LaurentPoly::z();
    EXPECT_EQ(p.invert_q(), LaurentPoly(mpz_class(2), {-3, 1}) + LaurentPoly::z());
    EXPECT_EQ(p.invert_q().invert_q(), p);
}

TEST(LaurentPoly, CoefficientsAreArbitraryPrecision) {
    const LaurentPoly big = (LaurentPoly::q() + LaurentPoly(1)).pow(80);
    EXPECT_EQ(big.coeff({40, 0}), mpz_class("107507208733336176461620"));
}

TEST(RatFunc, CancelsCommonFactors) {
    const RatFunc r = (q * q - RatFunc(1)) / (q - RatFunc(1));
    EXPECT_EQ(r, q + RatFunc(1));
    EXPECT_EQ(r.reduced().str(), "1 + q");
}

TEST(RatFunc, LambdaMatchesClosedForm) {
    EXPECT_EQ(lambda(), (z + RatFunc(1) - q) / (q * z));
}

TEST(RatFunc, OneMinusLambdaQ) {
    EXPECT_EQ(RatFunc(1) - lambda() * q, (q - RatFunc(1)) / z);
}

TEST(RatFunc, DivisionByZeroThrows) {
    EXPECT_THROW(q / RatFunc(0), std::domain_error);
    EXPECT_THROW(RatFunc(0).inverse(), std::domain_error);
}

TEST(RatFunc, FieldLawsOnRandomElements) {
    std::mt19937_64 rng(3);
    for (int i = 0; i < 40; ++i) {
        const RatFunc a = random_ratfunc(rng), b = random_ratfunc(rng), c = random_ratfunc(rng);
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_EQ((a + b) - b, a);
        if (!b.is_zero()) EXPECT_EQ((a / b) * b, a);
        EXPECT_EQ(a.reduced(), a);
        EXPECT_EQ(a.reduced().str(), a.reduced().reduced().str());
    }
}

TEST(RatFunc, ReducedFormIsCanonical) {
    const RatFunc a = (q + RatFunc(1)) / (z * q);
    const RatFunc b = ((q + RatFunc(1)) * (z - RatFunc(2))) / ((z * q) * (z - RatFunc(2)));
    EXPECT_EQ(a.str(), b.str());
    EXPECT_EQ(a.to_json(), b.to_json());
}

TEST(ScalarI, SendsZToLambdaZ) { EXPECT_EQ(scalar_I(z), lambda() * z); }

TEST(ScalarI, InvertsLambda) { EXPECT_EQ(scalar_I(lambda()), lambda().inverse()); }

TEST(ScalarI, ShiftsLambdaPowerOverZ) {
    EXPECT_EQ(scalar_I(lambda().pow(2) / z), RatFunc(1) / (lambda().pow(3) * z));
}

TEST(ScalarI, IsARingHomomorphism) {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 30; ++i) {
        const RatFunc a = random_ratfunc(rng), b = random_ratfunc(rng);
        EXPECT_EQ(scalar_I(a + b), scalar_I(a) + scalar_I(b));
        EXPECT_EQ(scalar_I(a * b), scalar_I(a) * scalar_I(b));
    }
    EXPECT_EQ(scalar_I(q), q.inverse());
}

TEST(HalfTwist, DeltaTimesWTimesZIsOne) {
    const HalfTwistScalar v = delta() * HalfTwistScalar::w_pow(1) * HalfTwistScalar(z);
    EXPECT_EQ(v, HalfTwistScalar(RatFunc(1)));
}

TEST(HalfTwist, DeltaHasOnlyAnOddPart) {
    EXPECT_TRUE(delta().even().is_zero());
    EXPECT_EQ(delta().odd(), -(RatFunc(1) - lambda() * q) / (lambda() * (RatFunc(1) - q)));
}

TEST(HalfTwist, DeltaSquaredAndZerothPower) {
    EXPECT_EQ(delta().pow(0), HalfTwistScalar(RatFunc(1)));
    const RatFunc one_minus_lq = RatFunc(1) - lambda() * q;
    const HalfTwistScalar sq = delta() * delta();
    EXPECT_TRUE(sq.odd().is_zero());
    EXPECT_EQ(sq.even(), one_minus_lq.pow(2) / (lambda() * (RatFunc(1) - q).pow(2)));
}

TEST(HalfTwist, WSquaredIsLambda) {
    EXPECT_EQ(HalfTwistScalar::w_pow(2), HalfTwistScalar(lambda()));
    EXPECT_EQ(HalfTwistScalar::w_pow(-1) * HalfTwistScalar::w_pow(1), HalfTwistScalar(RatFunc(1)));
    EXPECT_EQ(delta() * delta().inverse(), HalfTwistScalar(RatFunc(1)));
}
