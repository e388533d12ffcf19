#include <random>

#include <gtest/gtest.h>

#include "oracle/dl_oracle.hpp"

using lensskein::braid::Gen;
using lensskein::braid::Letter;
using lensskein::braid::MixedBraidWord;
using lensskein::braid::parse_word;
using lensskein::hecke::project_braid;

namespace {

oracle::Model model(int n) { return {n, mpq_class(3, 2), mpq_class(5, 7)}; }

MixedBraidWord random_word(std::mt19937_64& rng, int n, int len) {
    MixedBraidWord w;
    w.n = n;
    std::uniform_int_distribution<int> exp(-2, 2);
    std::uniform_int_distribution<int> gen(0, n - 1);
    for (int i = 0; i < len; ++i) {
        int e = exp(rng);
        if (e == 0) e = 1;
        const int g = gen(rng);
        w.letters.push_back(g == 0 ? Letter{Gen::Axis, 0, e} : Letter{Gen::Sigma, g, e});
    }
    return w;
}

void expect_same_action(const oracle::Model& m, const MixedBraidWord& a, const MixedBraidWord& b) {
    for (const auto& f : m.probes()) EXPECT_TRUE(m.act(a, f) == m.act(b, f)) << a.str() << " vs " << b.str();
}

}  // namespace

TEST(Oracle, QuadraticRelationHolds) {
    const auto m = model(3);
    for (int i = 1; i < 3; ++i)
        for (const auto& f : m.probes()) {
            oracle::Poly lhs = m.T(m.T(f, i), i);
            oracle::Poly rhs = m.T(f, i).scaled(m.q - 1);
            rhs += f.scaled(m.q);
            EXPECT_TRUE(lhs == rhs);
        }
}

TEST(Oracle, InverseUndoesGenerator) {
    const auto m = model(3);
    for (const auto& f : m.probes()) EXPECT_TRUE(m.T_inv(m.T(f, 2), 2) == f);
}

TEST(Oracle, TypeBAndBraidRelationsHold) {
    const auto m = model(4);
    expect_same_action(m, parse_word("g1 t g1 t", 4), parse_word("t g1 t g1", 4));
    expect_same_action(m, parse_word("g1 g2 g1", 4), parse_word("g2 g1 g2", 4));
    expect_same_action(m, parse_word("g3 g2 g3", 4), parse_word("g2 g3 g2", 4));
    expect_same_action(m, parse_word("t g2", 4), parse_word("g2 t", 4));
    expect_same_action(m, parse_word("g1 g3", 4), parse_word("g3 g1", 4));
}

TEST(Oracle, RepresentationSeparatesDistinctBasisWords) {
    const auto m = model(2);
    const oracle::Poly one = oracle::Poly::monomial({0, 0});
    EXPECT_FALSE(m.act(parse_word("t1'", 2), one) == m.act(parse_word("t", 2), one));
    EXPECT_FALSE(m.act(parse_word("g1", 2), one) == one.scaled(m.q + 1));
}

// The normalizer's output, read back as an operator, must act like the word it came from.
TEST(OracleComparison, ProjectionActsLikeTheWord) {
    std::mt19937_64 rng(11);
    for (int n = 1; n <= 4; ++n) {
        const auto m = model(n);
        for (int s = 0; s < 25; ++s) {
            const auto w = random_word(rng, n, 3 + s % 5);
            const auto e = project_braid(w);
            for (const auto& f : m.probes()) EXPECT_TRUE(m.act(e, f) == m.act(w, f)) << w.str();
        }
    }
}

TEST(OracleComparison, LoopWordsProjectCorrectly) {
    const auto m = model(3);
    for (const char* text : {"t1", "t1^-2", "t2^3 t1", "t1'^2 t2'^-1 g2", "t^2 t1^-1 g1^-1", "t2'^2 t1^-3 t", "t^-2 t1'^3 t2'^-1 g1 g2^-1", "t t2'^-2 g2 g1"}) {
        const auto w = parse_word(text, 3);
        const auto e = project_braid(w);
        for (const auto& f : m.probes()) EXPECT_TRUE(m.act(e, f) == m.act(w, f)) << text;
    }
}
