#include <algorithm>
#include <random>
#include <set>

#include <gtest/gtest.h>

#include "lensskein/braid/loops.hpp"
#include "lensskein/braid/word.hpp"

using namespace lensskein::braid;

namespace {

std::set<std::string> strs(const std::vector<LoopMonomial>& v) {
    std::set<std::string> out;
    for (const auto& m : v) out.insert(m.str());
    return out;
}

LoopProfile prof(const char* text) { return LoopProfile::of(LoopMonomial::from_word(parse_word(text))); }

}  // namespace

TEST(ParseWord, MapsTokensToLetters) {
    const auto w = parse_word("t^2 g1 t1'^-1");
    ASSERT_EQ(w.letters.size(), 3u);
    EXPECT_EQ(w.letters[0], (Letter{Gen::Axis, 0, 2}));
    EXPECT_EQ(w.letters[1], (Letter{Gen::Sigma, 1, 1}));
    EXPECT_EQ(w.letters[2], (Letter{Gen::PrimedLoop, 1, -1}));
    EXPECT_EQ(w.n, 2);
}

TEST(ParseWord, RejectsSigmaOutOfRange) { EXPECT_THROW(parse_word("t g2", 2), RangeError); }

TEST(ParseWord, ReportsSyntaxErrorPosition) {
    try {
        parse_word("t g1 x");
        FAIL() << "expected a parse error";
    } catch (const ParseError& e) {
        EXPECT_EQ(e.position(), 5u);
    }
    EXPECT_THROW(parse_word("t^"), ParseError);
    EXPECT_THROW(parse_word("g0"), std::exception);
}

TEST(ParseWord, UnprimedLoopShorthandExpands) {
    const auto w = parse_word("t1");
    ASSERT_EQ(w.letters.size(), 1u);
    EXPECT_EQ(w.letters[0].gen, Gen::Loop);
    EXPECT_EQ(expand_loops(w).str(), "g1 t g1");
}

TEST(ParseWord, EmptyWordIsOne) {
    EXPECT_TRUE(parse_word("1").letters.empty());
    EXPECT_EQ(parse_word("1").str(), "1");
}

TEST(ParseWord, TextAndJsonRoundTrip) {
    std::mt19937_64 rng(1);
    std::uniform_int_distribution<int> kind(0, 3), idx(1, 3), ex(-3, 3);
    for (int s = 0; s < 200; ++s) {
        MixedBraidWord w;
        w.n = 4;
        for (int i = 0; i < 6; ++i) {
            int e = ex(rng);
            if (e == 0) e = 2;
            const int k = kind(rng);
            w.letters.push_back(k == 0 ? Letter{Gen::Axis, 0, e} : Letter{static_cast<Gen>(k), idx(rng), e});
        }
        EXPECT_EQ(parse_word(w.str(), 4), w);
        EXPECT_EQ(MixedBraidWord::from_json(w.to_json()), w);
    }
}

TEST(ExpandLoops, PrimedLoopIsConjugateOfT) { EXPECT_EQ(expand_loops(parse_word("t1'")).str(), "g1 t g1^-1"); }

TEST(ExpandLoops, AxisPowerUnchanged) { EXPECT_EQ(expand_loops(parse_word("t^3")).str(), "t^3"); }

TEST(ExpandLoops, OutputHasOnlyGenerators) {
    const auto w = expand_loops(parse_word("t2^2 t1'^-1 g1 t3", 4));
    for (const auto& l : w.letters) EXPECT_TRUE(l.gen == Gen::Axis || l.gen == Gen::Sigma);
    EXPECT_FALSE(w.has_loops());
}

TEST(Bbm, PositiveMoveOnT) { EXPECT_EQ(bbm(LoopMonomial::from_exponents({1}), 1, 2).str(), "t^2 t1 g1"); }

TEST(Bbm, NegativeMoveOnEmptyMonomial) { EXPECT_EQ(bbm(LoopMonomial(), -1, 3).str(), "t^3 g1^-1"); }

TEST(Bbm, ShiftsEveryLoopIndex) {
    const auto w = bbm(LoopMonomial::from_exponents({1, 1}), 1, 2);
    EXPECT_EQ(w.str(), "t^2 t1 t2 g1");
    EXPECT_EQ(w.n, 3);
}

TEST(Bbm, RejectsPrimedOrGappedInput) {
    EXPECT_THROW(bbm(LoopMonomial::from_exponents({1}, true), 1, 2), std::invalid_argument);
    EXPECT_THROW(bbm(LoopMonomial::from_pairs({{0, 1}, {2, 1}}), 1, 2), std::invalid_argument);
}

TEST(FMap, NegatesLoopExponents) {
    EXPECT_EQ(f_map(LoopMonomial::from_exponents({2, 1})).str(), "t^-2 t1^-1");
    EXPECT_EQ(f_map(parse_word("t^2 g1 t1'")).str(), "t^-2 g1^-1 t1'^-1");
}

TEST(FMap, IsAnInvolution) {
    for (int k = 1; k <= 5; ++k)
        for (const auto& m : enumerate_level(k, Side::Positive)) EXPECT_EQ(f_map(f_map(m)), m);
    const auto w = parse_word("t^2 g1^-1 t2'^3 g2 t1^-1", 3);
    EXPECT_EQ(f_map(f_map(w)), w);
}

TEST(FMap, MapsPositiveLevelOntoNegativeLevel) {
    for (int k = 1; k <= 4; ++k) {
        std::vector<LoopMonomial> img;
        for (const auto& m : enumerate_level(k, Side::Positive)) img.push_back(f_map(m));
        EXPECT_EQ(strs(img), strs(enumerate_level(-k, Side::Negative)));
        EXPECT_EQ(strs(img), strs(enumerate_level(k, Side::Negative)));
    }
}

TEST(EnumerateLevel, CountsArePowersOfTwo) {
    for (int k = 1; k <= 8; ++k) EXPECT_EQ(enumerate_level(k, Side::Positive).size(), std::size_t{1} << (k - 1));
}

TEST(EnumerateLevel, LevelTwoAndNegativeOne) {
    EXPECT_EQ(strs(enumerate_level(2, Side::Positive)), (std::set<std::string>{"t^2", "t t1"}));
    EXPECT_EQ(strs(enumerate_level(1, Side::Negative)), (std::set<std::string>{"t^-1"}));
}

TEST(EnumerateLevel, EveryMemberHasTheRequestedLevel) {
    for (int k = 1; k <= 6; ++k)
        for (const auto& m : enumerate_level(k, Side::Positive)) {
            EXPECT_EQ(m.level(), k);
            EXPECT_TRUE(m.gap_free());
        }
}

TEST(EnumerateLevel, OrderedSideIsNondecreasing) {
    const auto v = enumerate_level(3, Side::Ordered, {3, 4});
    ASSERT_FALSE(v.empty());
    for (const auto& m : v) {
        const auto ks = m.exponents();
        EXPECT_TRUE(std::is_sorted(ks.begin(), ks.end())) << m.str();
        EXPECT_EQ(m.level(), 3);
        EXPECT_TRUE(std::find(ks.begin(), ks.end(), 0) == ks.end());
    }
}

TEST(CompareOrder, EqualTotalsCompareByTopIndex) { EXPECT_EQ(compare_order(prof("t^2"), prof("t t1")), std::strong_ordering::less); }

TEST(CompareOrder, IdenticalProfilesAreEqual) {
    EXPECT_EQ(compare_order(prof("t t1^2"), prof("t t1^2")), std::strong_ordering::equal);
}

TEST(CompareOrder, GapLowersTheOrder) { EXPECT_EQ(compare_order(prof("t t2"), prof("t t1")), std::strong_ordering::less); }

TEST(CompareOrder, LargerTopExponentIsGreater) {
    EXPECT_EQ(compare_order(prof("t^2 t1^2"), prof("t t1^3")), std::strong_ordering::less);
    EXPECT_EQ(compare_order(prof("t t1^3"), prof("t^2 t1^2")), std::strong_ordering::greater);
}

namespace {

void expect_total_order(const std::vector<LoopProfile>& ps) {
    for (const auto& a : ps) {
        EXPECT_EQ(compare_order(a, a), std::strong_ordering::equal);
        for (const auto& b : ps) {
            const auto ab = compare_order(a, b), ba = compare_order(b, a);
            EXPECT_EQ(ab == std::strong_ordering::less, ba == std::strong_ordering::greater);
            if (ab == std::strong_ordering::equal) EXPECT_TRUE(a.indices == b.indices && a.exps == b.exps);
            for (const auto& c : ps)
                if (ab == std::strong_ordering::less && compare_order(b, c) == std::strong_ordering::less)
                    EXPECT_EQ(compare_order(a, c), std::strong_ordering::less);
        }
    }
}

}  // namespace

TEST(CompareOrder, TotalOrderOnEveryPositiveLevel) {
    std::vector<LoopProfile> ps;
    for (int k = 1; k <= 5; ++k)
        for (const auto& m : enumerate_level(k, Side::Positive)) ps.push_back(LoopProfile::of(m));
    expect_total_order(ps);
}

TEST(CompareOrder, TotalOrderOnRandomGappedProfiles) {
    std::mt19937_64 rng(9);
    std::uniform_int_distribution<int> ex(-3, 3), coin(0, 1);
    std::vector<LoopProfile> ps;
    std::set<std::vector<std::pair<int, int>>> seen;
    while (ps.size() < 120) {
        std::vector<std::pair<int, int>> es;
        for (int i = 0; i <= 4; ++i) {
            const int e = ex(rng);
            if (e != 0 && coin(rng)) es.emplace_back(i, e);
        }
        if (seen.insert(es).second) ps.push_back(LoopProfile::of(es));
    }
    expect_total_order(ps);
}

TEST(LoopMonomial, HomologousTogglesPrimes) {
    const auto m = LoopMonomial::from_exponents({1, 2});
    EXPECT_EQ(m.homologous().str(), "t t1'^2");
    EXPECT_EQ(m.homologous().homologous(), m);
}

TEST(LoopMonomial, FromWordRejectsNonLoopLetters) {
    EXPECT_THROW(LoopMonomial::from_word(parse_word("t g1")), std::invalid_argument);
}
