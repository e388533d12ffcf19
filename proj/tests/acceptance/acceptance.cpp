// Acceptance run: one line per criterion. All algebraic comparisons are exact
// equalities in Q(q, z); the only numeric thresholds are the runtime limits.
//
// Two criteria are known not to hold as stated (the band move image check and
// the mirror comparison, both once the level reaches p). Their failures are
// printed as FAIL; the process exit code is nonzero only when some failure
// falls outside that exact known set.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "lensskein/lens/system.hpp"
#include "lensskein/trace/markov.hpp"
#include "lensskein/verify/suites.hpp"

using namespace lensskein;
using braid::LoopMonomial;
using braid::LoopProfile;
using braid::Side;
using scalar::RatFunc;
using trace::SMonomial;
using trace::TraceValue;

namespace {

constexpr const char* kTolerance = "exact";

enum class Status { Pass, Fail, KnownFail };

struct Outcome {
    Status status = Status::Pass;
    std::string detail;
};

int unexpected = 0;

void run(int id, const char* title, double limit_s, const std::function<Outcome()>& body) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
        o = body();
    } catch (const std::exception& e) {
        o = {Status::Fail, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs > limit_s && o.status == Status::Pass) {
        o.status = Status::Fail;
        o.detail += " (runtime limit exceeded)";
    }
    const char* tag = o.status == Status::Pass ? "PASS" : o.status == Status::Fail ? "FAIL" : "FAIL (known)";
    if (o.status == Status::Fail) ++unexpected;
    std::printf("%-13s %2d  %s [tolerance %s, %.2fs of %.0fs]: %s\n", tag, id, title, kTolerance, secs, limit_s,
                o.detail.c_str());
    std::fflush(stdout);
}

Outcome from_report(const verify::SuiteReport& r) {
    std::string d = std::to_string(r.checked) + " checks";
    for (const auto& n : r.notes) d += "; " + n;
    if (!r.passed) d += "; first failure " + r.counterexample.dump();
    return {r.passed ? Status::Pass : Status::Fail, d};
}

Outcome suite(const std::string& name, verify::SuiteParams p) { return from_report(verify::run_suite(name, p)); }

verify::SuiteParams params(std::optional<int> n, std::optional<int> p, std::optional<int> k, std::optional<int> samples) {
    verify::SuiteParams s;
    s.n = n;
    s.p = p;
    s.k = k;
    s.samples = samples;
    s.seed = 7;
    return s;
}

Outcome combine(const std::vector<std::pair<std::string, Outcome>>& parts) {
    Outcome out;
    for (const auto& [label, o] : parts) {
        if (o.status == Status::Fail) out.status = Status::Fail;
        if (!out.detail.empty()) out.detail += " | ";
        out.detail += label + ": " + (o.status == Status::Pass ? "ok" : "FAIL") + " (" + o.detail + ")";
    }
    return out;
}

// Closed form of the trace on primed monomials: s_{k_n} ... s_{k_0}.
Outcome closed_form() {
    std::set<std::vector<int>> seen;
    std::size_t checked = 0;
    for (int k = -5; k <= 5; ++k)
        for (Side side : {Side::Positive, Side::Negative, Side::Ordered}) {
            if (side != Side::Ordered && k == 0) continue;
            if (side == Side::Positive && k < 0) continue;
            if (side == Side::Negative && k > 0) continue;
            for (const auto& m : braid::enumerate_level(k, side, {5, 5})) {
                if (m.exps.size() > 5 || !seen.insert(m.exponents()).second) continue;
                const auto primed = m.primed ? m : m.homologous();
                std::vector<int> idx;
                for (const auto& [i, e] : primed.exps) idx.push_back(e);
                ++checked;
                if (trace::trace_monomial(primed) != TraceValue::monomial(SMonomial(idx)))
                    return {Status::Fail, "mismatch on " + primed.str()};
            }
        }
    return {Status::Pass, std::to_string(checked) + " primed monomials"};
}

Outcome inverse_generator() {
    const TraceValue want(scalar::lambda() * RatFunc::z());
    for (int n = 2; n <= 4; ++n)
        for (int i = 1; i < n; ++i) {
            braid::MixedBraidWord w{n, {{braid::Gen::Sigma, i, -1}}};
            if (trace::trace_word(w) != want) return {Status::Fail, "tr(" + w.str() + ") = " + trace::trace_word(w).str()};
        }
    return {Status::Pass, "tr(g_i^-1) = lambda*z for 1 <= i < n <= 4"};
}

// Runs the band move image suite level by level so the failing (p, k) set can
// be compared with the known one.
Outcome band_move_images() {
    const std::set<std::pair<int, int>> known{{2, 2}, {2, 3}, {3, 3}};
    std::set<std::pair<int, int>> failing;
    std::string first;
    for (int p : {2, 3})
        for (int k = 1; k <= 3; ++k) {
            const auto r = verify::run_suite("lemma4", params(std::nullopt, p, k, std::nullopt));
            if (!r.passed) {
                failing.insert({p, k});
                if (first.empty()) first = r.counterexample.dump();
            }
        }
    std::string d = "failing (p,k):";
    for (const auto& [p, k] : failing) d += " (" + std::to_string(p) + "," + std::to_string(k) + ")";
    if (failing.empty()) return {Status::Pass, "golden values and images for p in {2,3}, k <= 3"};
    d += "; first failure " + first;
    return {failing == known ? Status::KnownFail : Status::Fail, d};
}

Outcome mirror_exactness() {
    std::string d;
    bool only_known = true, any = false;
    for (int p = 1; p <= 3; ++p) {
        const auto neg = lens::generate_system(p, 3, Side::Negative);
        const auto pos = lens::generate_system(p, 3, Side::Positive);
        const auto diffs = lens::compare_bundles(lens::mirror_system(neg), pos);
        std::set<int> levels;
        for (const auto& m : diffs) {
            const auto mono = braid::LoopMonomial::from_word(braid::parse_word(m.source));
            levels.insert(mono.level());
        }
        for (int lv : levels)
            if (lv < p) only_known = false;
        // Every level from p upward is expected to show differences.
        for (int lv = p; lv <= 3; ++lv)
            if (!levels.count(lv)) only_known = false;
        any = any || !diffs.empty();
        d += "p=" + std::to_string(p) + ": " + std::to_string(diffs.size()) + "/" + std::to_string(pos.equations.size()) +
             " differ";
        if (!diffs.empty()) d += " at levels >= " + std::to_string(*levels.begin());
        d += "; ";
    }
    if (!any) return {Status::Pass, d};
    return {only_known ? Status::KnownFail : Status::Fail, d};
}

Outcome reduction_anchors() {
    std::string d;
    for (int p : {2, 3}) {
        const auto r = lens::reduce_system(lens::generate_system(p, 2, Side::Positive));
        auto value = [&](int idx) -> const TraceValue* {
            const auto* rule = r.find_rule(SMonomial({idx}));
            return rule ? &rule->value : nullptr;
        };
        const auto* sp = value(p);
        const auto* sp1 = value(p + 1);
        const auto* sp2 = value(p + 2);
        if (!sp || *sp != TraceValue(RatFunc(1))) return {Status::Fail, "p=" + std::to_string(p) + ": no rule s_p -> 1"};
        if (!sp1 || *sp1 != TraceValue::monomial(SMonomial({1})))
            return {Status::Fail, "p=" + std::to_string(p) + ": no rule s_(p+1) -> s_1"};
        if (!sp2) return {Status::Fail, "p=" + std::to_string(p) + ": no rule for s_(p+2)"};
        // s_2 is itself the scalar 1 when p = 2.
        const SMonomial a1 = p == 2 ? SMonomial() : SMonomial({2});
        const SMonomial a2({1, 1});
        for (const auto& [m, c] : sp2->terms())
            if (!(m == a1 || m == a2)) return {Status::Fail, "unexpected monomial " + m.str() + " in s_(p+2) rule"};
        if (sp2->coeff(a1).is_zero() || sp2->coeff(a2).is_zero())
            return {Status::Fail, "degenerate s_(p+2) rule " + sp2->str()};
        for (const auto& src : r.sources)
            if (!r.normal_form(src).is_zero()) return {Status::Fail, "back-substitution leaves " + r.normal_form(src).str()};
        if (!r.residual.empty()) return {Status::Fail, "torsion candidate " + r.residual.front().str()};
        d += "p=" + std::to_string(p) + ": s[" + std::to_string(p + 2) + "] -> " + sp2->str() + "; ";
    }
    return {Status::Pass, d + "all sources reduce to 0"};
}

Outcome enumeration_counts() {
    for (int k = 1; k <= 8; ++k) {
        const auto n = braid::enumerate_level(k, Side::Positive).size();
        if (n != (std::size_t{1} << (k - 1))) return {Status::Fail, "level " + std::to_string(k) + ": " + std::to_string(n)};
    }
    return {Status::Pass, "2^(k-1) for k = 1..8"};
}

// Sorting with the comparator and then checking every pair against the
// resulting sequence establishes totality, antisymmetry and transitivity.
Outcome ordering_axioms() {
    std::vector<LoopProfile> ps;
    std::set<std::vector<std::pair<int, int>>> seen;
    for (int k = 1; k <= 5; ++k)
        for (const auto& m : braid::enumerate_level(k, Side::Positive))
            if (seen.insert(m.exps).second) ps.push_back(LoopProfile::of(m));
    const std::size_t exhaustive = ps.size();
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> ex(-3, 3), coin(0, 1);
    while (ps.size() < exhaustive + 500) {
        std::vector<std::pair<int, int>> es;
        for (int i = 0; i <= 4; ++i) {
            const int e = ex(rng);
            if (e != 0 && coin(rng)) es.emplace_back(i, e);
        }
        if (seen.insert(es).second) ps.push_back(LoopProfile::of(es));
    }
    auto less = [](const LoopProfile& a, const LoopProfile& b) { return braid::compare_order(a, b) < 0; };
    std::stable_sort(ps.begin(), ps.end(), less);
    for (std::size_t i = 0; i < ps.size(); ++i) {
        if (braid::compare_order(ps[i], ps[i]) != 0) return {Status::Fail, "not reflexive"};
        for (std::size_t j = i + 1; j < ps.size(); ++j) {
            if (braid::compare_order(ps[i], ps[j]) >= 0 || braid::compare_order(ps[j], ps[i]) <= 0)
                return {Status::Fail, "pair " + std::to_string(i) + "," + std::to_string(j) + " out of order"};
        }
    }
    return {Status::Pass, std::to_string(exhaustive) + " positive profiles and " + std::to_string(ps.size() - exhaustive) +
                              " distinct random gapped profiles form a chain"};
}

}  // namespace

int main() {
    run(1, "defining relations", 60, [] { return suite("relations", params(4, std::nullopt, std::nullopt, 200)); });
    run(2, "Markov property", 60, [] { return suite("markov", params(4, std::nullopt, std::nullopt, 200)); });
    run(3, "invariance of X", 120, [] { return suite("invariance", params(4, std::nullopt, std::nullopt, 100)); });
    run(4, "trace closed form on primed monomials", 30, closed_form);
    run(5, "trace of inverse generator", 1, inverse_generator);
    run(6, "derived rewriting rules", 120, [] {
        return combine({{"eq15", suite("eq15", params(3, std::nullopt, 5, std::nullopt))},
                        {"lemma2", suite("lemma2", params(3, std::nullopt, 5, std::nullopt))},
                        {"lemma3", suite("lemma3", params(3, std::nullopt, 5, std::nullopt))}});
    });
    run(7, "band move golden values and images", 30, band_move_images);
    run(8, "positive traces via f and I", 120, [] {
        return combine({{"p=2", suite("prop2", params(std::nullopt, 2, 3, std::nullopt))},
                        {"p=3", suite("prop2", params(std::nullopt, 3, 3, std::nullopt))}});
    });
    run(9, "mirror of negative system", 300, mirror_exactness);
    run(10, "reduction anchors", 300, reduction_anchors);
    run(11, "enumeration counts", 1, enumeration_counts);
    run(12, "level grading", 60, [] {
        return combine({{"p=2", suite("grading", params(std::nullopt, 2, 4, std::nullopt))},
                        {"p=3", suite("grading", params(std::nullopt, 3, 4, std::nullopt))}});
    });
    run(13, "ordering axioms", 10, ordering_axioms);
    run(14, "triangularity of homologous words", 120, [] { return suite("triangular", params(3, std::nullopt, 4, std::nullopt)); });
    std::printf("%s\n", unexpected == 0 ? "acceptance: every failure is a known one" : "acceptance: unexpected failures");
    return unexpected == 0 ? 0 : 1;
}
