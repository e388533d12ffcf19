#include <algorithm>

#include <gtest/gtest.h>

#include "lensskein/lens/system.hpp"

using namespace lensskein;
using braid::Side;
using lens::Strategy;
using scalar::RatFunc;
using trace::SMonomial;
using trace::TraceValue;

namespace {

const RatFunc q = RatFunc::q();
const RatFunc z = RatFunc::z();

TraceValue s(std::vector<int> idx, RatFunc c = RatFunc(1)) { return TraceValue::monomial(SMonomial(std::move(idx)), c); }

const lens::Rule& rule(const lens::ReducedSystem& r, std::vector<int> head) {
    const auto* found = r.find_rule(SMonomial(std::move(head)));
    if (!found) throw std::runtime_error("missing rule");
    return *found;
}

}  // namespace

TEST(GenerateSystem, CountsForSmallLevels) {
    EXPECT_EQ(lens::generate_system(2, 1, Side::Positive).equations.size(), 4u);
    EXPECT_EQ(lens::generate_system(2, 2, Side::Positive).equations.size(), 8u);
    EXPECT_EQ(lens::generate_system(2, 3, Side::Negative).equations.size(), 16u);
}

TEST(GenerateSystem, LeftSidesHaveTheSourceLevel) {
    const auto b = lens::generate_system(2, 3, Side::Positive);
    for (const auto& e : b.equations)
        for (int lv : e.lhs.levels()) EXPECT_EQ(lv, e.source.level());
}

TEST(GenerateSystem, IsDeterministic) {
    EXPECT_EQ(lens::generate_system(3, 2, Side::Positive).to_json().dump(),
              lens::generate_system(3, 2, Side::Positive).to_json().dump());
}

TEST(GenerateSystem, RejectsBadParameters) {
    EXPECT_THROW(lens::generate_system(0, 1, Side::Positive), std::invalid_argument);
    EXPECT_THROW(lens::generate_system(2, -1, Side::Positive), std::invalid_argument);
    EXPECT_THROW(lens::generate_system(2, 1, Side::Ordered), std::invalid_argument);
}

TEST(MirrorSystem, LevelOneMatchesForPEqualsTwo) {
    const auto mirrored = lens::mirror_system(lens::generate_system(2, 1, Side::Negative));
    EXPECT_TRUE(lens::compare_bundles(mirrored, lens::generate_system(2, 1, Side::Positive)).empty());
}

TEST(MirrorSystem, MatchesBelowLevelPForPEqualsThree) {
    const auto mirrored = lens::mirror_system(lens::generate_system(3, 2, Side::Negative));
    EXPECT_TRUE(lens::compare_bundles(mirrored, lens::generate_system(3, 2, Side::Positive)).empty());
}

TEST(MirrorSystem, EmptyBundleStaysEmpty) {
    lens::SystemBundle b;
    b.p = 2;
    b.side = Side::Negative;
    const auto m = lens::mirror_system(b);
    EXPECT_TRUE(m.equations.empty());
    EXPECT_TRUE(lens::compare_bundles(m, b).empty());
}

TEST(MirrorSystem, RequiresNegativeSide) {
    EXPECT_THROW(lens::mirror_system(lens::generate_system(2, 1, Side::Positive)), std::invalid_argument);
}

// At level p the index map sends s_0 = 1 and s_{2p} to the same place, and
// the mirrored right side picks up a multiple of (s_{2p} - 1).
TEST(MirrorSystem, LevelPDiscrepancyIsAMultipleOfSTwoPMinusOne) {
    for (int p : {1, 2, 3}) {
        const auto mirrored = lens::mirror_system(lens::generate_system(p, p, Side::Negative));
        const auto diffs = lens::compare_bundles(mirrored, lens::generate_system(p, p, Side::Positive));
        ASSERT_FALSE(diffs.empty()) << "p=" << p;
        for (const auto& d : diffs) {
            EXPECT_TRUE(d.lhs_equal);
            const auto& t = d.rhs_difference.terms();
            ASSERT_EQ(t.size(), 2u) << d.rhs_difference.str();
            const RatFunc c = d.rhs_difference.coeff(SMonomial({2 * p}));
            EXPECT_EQ(d.rhs_difference, s({2 * p}, c) - TraceValue(c));
        }
    }
}

TEST(ReduceSystem, FirstRulesForSmallP) {
    for (int p : {2, 3}) {
        const auto r = lens::reduce_system(lens::generate_system(p, 1, Side::Positive));
        EXPECT_EQ(rule(r, {p}).value, TraceValue(RatFunc(1))) << p;
        EXPECT_EQ(rule(r, {p + 1}).value, s({1})) << p;
        EXPECT_TRUE(r.residual.empty());
    }
}

TEST(ReduceSystem, LevelTwoSolvedShapeForPEqualsThree) {
    const auto r = lens::reduce_system(lens::generate_system(3, 2, Side::Positive));
    const RatFunc d = RatFunc(1) + z - q;
    EXPECT_EQ(rule(r, {5}).value, s({2}, z / d) + s({1, 1}, (RatFunc(1) - q) / d));
}

TEST(ReduceSystem, LevelTwoSolvedShapeForPEqualsTwo) {
    const auto r = lens::reduce_system(lens::generate_system(2, 2, Side::Positive));
    const RatFunc d = RatFunc(1) + z - q;
    EXPECT_EQ(rule(r, {4}).value, TraceValue(z / d) + s({1, 1}, (RatFunc(1) - q) / d));
}

TEST(ReduceSystem, RulesAnnihilateTheirSourceEquations) {
    for (int p : {1, 2, 3}) {
        const auto r = lens::reduce_system(lens::generate_system(p, 3, Side::Positive));
        for (const auto& src : r.sources) EXPECT_TRUE(r.normal_form(src).is_zero()) << src.str();
        for (const auto& rl : r.rules)
            for (const auto& [m, c] : rl.value.terms()) EXPECT_EQ(r.find_rule(m), nullptr) << m.str();
    }
}

TEST(ReduceSystem, RuleTextInJson) {
    const auto j = lens::reduce_system(lens::generate_system(2, 2, Side::Positive)).to_json();
    std::vector<std::string> texts;
    for (const auto& r : j["rules"]) texts.push_back(r["text"]);
    EXPECT_NE(std::find(texts.begin(), texts.end(), "s[2] -> 1"), texts.end());
    EXPECT_NE(std::find(texts.begin(), texts.end(), "s[3] -> s[1]"), texts.end());
}

TEST(ReduceSystem, StrategiesAgree) {
    const auto b = lens::generate_system(3, 3, Side::Positive);
    const auto a = lens::reduce_system(b, Strategy::LevelFirst);
    const auto c = lens::reduce_system(b, Strategy::IndexFirst);
    for (const auto& rl : a.rules) EXPECT_EQ(c.normal_form(rl.value), c.normal_form(TraceValue::monomial(rl.head)));
}

TEST(GeneratingSet, PEqualsTwoReducesToPowersOfS1) {
    const auto r = lens::reduce_system(lens::generate_system(2, 3, Side::Positive));
    const auto rep = lens::check_generating_set(r, 3);
    EXPECT_TRUE(rep.all_decided);
    EXPECT_TRUE(rep.confluent);
    for (const auto& e : rep.entries)
        for (const auto& [m, c] : e.normal_form.terms())
            for (int i : m.idx) EXPECT_EQ(i, 1) << e.monomial.str();
}

TEST(GeneratingSet, PEqualsOneReducesToScalars) {
    const auto r = lens::reduce_system(lens::generate_system(1, 2, Side::Positive));
    const auto rep = lens::check_generating_set(r, 2);
    EXPECT_TRUE(rep.all_decided);
    for (const auto& e : rep.entries)
        for (const auto& [m, c] : e.normal_form.terms()) EXPECT_TRUE(m.empty()) << e.monomial.str();
}

TEST(GeneratingSet, ConfluentForSmallP) {
    for (int p = 1; p <= 3; ++p) {
        const auto r = lens::reduce_system(lens::generate_system(p, 3, Side::Positive));
        EXPECT_TRUE(lens::check_generating_set(r, 3).confluent) << p;
    }
}

TEST(CandidateBasis, PEqualsTwoReproducesS1ToSMinus1) {
    const auto rep = lens::candidate_basis_experiment(2, 2);
    EXPECT_EQ(rep.window_lo, -1);
    EXPECT_EQ(rep.window_hi, 0);
    bool found = false;
    for (const auto& rl : rep.rules)
        if (rl.head == SMonomial({1})) {
            found = true;
            EXPECT_EQ(rl.value, s({-1}));
        }
    EXPECT_TRUE(found);
}

TEST(CandidateBasis, PEqualsTwoExpressesSZeroLevelViaNegativeIndices) {
    const auto rep = lens::candidate_basis_experiment(2, 2);
    const RatFunc d = RatFunc(1) + z - q;
    bool found = false;
    for (const auto& rl : rep.rules)
        if (rl.head == SMonomial({-2})) {
            found = true;
            EXPECT_EQ(rl.value, s({-1, -1}, (RatFunc(1) - q) / d) + TraceValue(z / d));
        }
    EXPECT_TRUE(found);
}

TEST(CandidateBasis, PEqualsThreeWindowClosesAtProbeTwo) {
    const auto rep = lens::candidate_basis_experiment(3, 2);
    EXPECT_EQ(rep.window_lo, -1);
    EXPECT_EQ(rep.window_hi, 1);
    EXPECT_TRUE(rep.all_in_window);
}
