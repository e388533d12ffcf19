#include "lensskein/verify/suites.hpp"

#include <functional>
#include <map>
#include <random>
#include <set>
#include <stdexcept>

#include "lensskein/hecke/algebra.hpp"
#include "lensskein/lens/system.hpp"
#include "lensskein/trace/markov.hpp"

namespace lensskein::verify {

using braid::Gen;
using braid::Letter;
using braid::LoopMonomial;
using braid::MixedBraidWord;
using braid::Side;
using hecke::AlgebraElement;
using nlohmann::json;
using scalar::RatFunc;
using trace::TraceValue;

namespace {

struct Resolved {
    int n = 0;
    std::vector<int> ps;
    int k = 0;
    int samples = 0;
    std::uint64_t seed = 7;
};

class Recorder {
public:
    explicit Recorder(SuiteReport& r) : r_(r) {}

    // Records one instance; the detail is only built for the first failure.
    bool check(bool ok, const std::function<json()>& detail) {
        ++r_.checked;
        if (!ok && r_.passed) {
            r_.passed = false;
            r_.counterexample = detail();
        }
        return ok;
    }

    bool failed() const { return !r_.passed; }

private:
    SuiteReport& r_;
};

Letter axis(int e) { return {Gen::Axis, 0, e}; }
Letter sig(int i, int e = 1) { return {Gen::Sigma, i, e}; }
Letter loop(int i, int e) { return i == 0 ? axis(e) : Letter{Gen::Loop, i, e}; }

MixedBraidWord word(int n, std::vector<Letter> ls) {
    MixedBraidWord w;
    w.n = n;
    for (const auto& l : ls)
        if (l.exp != 0) w.letters.push_back(l);
    return w;
}

AlgebraElement P(int n, std::vector<Letter> ls) { return hecke::project_braid(word(n, std::move(ls))); }

std::string diff_str(const AlgebraElement& a, const AlgebraElement& b) {
    AlgebraElement d = a - b;
    d.reduce_coefficients();
    return d.str();
}

std::string diff_str(const TraceValue& a, const TraceValue& b) {
    TraceValue d = a - b;
    d.reduce_coefficients();
    return d.str();
}

bool check_identity(Recorder& rec, const std::string& label, const AlgebraElement& lhs, const AlgebraElement& rhs) {
    return rec.check(lhs == rhs, [&] {
        return json{{"identity", label}, {"lhs", lhs.str()}, {"rhs", rhs.str()}, {"lhs_minus_rhs", diff_str(lhs, rhs)}};
    });
}

MixedBraidWord random_word(std::mt19937_64& rng, int n, int max_len, bool with_axis) {
    std::uniform_int_distribution<int> len_d(0, max_len);
    std::uniform_int_distribution<int> coin(0, 1);
    std::uniform_int_distribution<int> pick(0, 2);
    MixedBraidWord w;
    w.n = n;
    const int len = len_d(rng);
    for (int i = 0; i < len; ++i) {
        const int e = coin(rng) ? 1 : -1;
        if (n == 1 || (with_axis && pick(rng) == 0)) {
            if (!with_axis) break;
            w.letters.push_back(axis(e));
        } else {
            std::uniform_int_distribution<int> idx(1, n - 1);
            w.letters.push_back(sig(idx(rng), e));
        }
    }
    return w;
}

// Greedy letter deletion while the failure persists.
std::vector<MixedBraidWord> shrink(std::vector<MixedBraidWord> ws,
                                   const std::function<bool(const std::vector<MixedBraidWord>&)>& fails) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (auto& w : ws) {
            for (std::size_t i = 0; i < w.letters.size(); ++i) {
                MixedBraidWord saved = w;
                w.letters.erase(w.letters.begin() + static_cast<std::ptrdiff_t>(i));
                if (fails(ws)) {
                    changed = true;
                    --i;
                } else {
                    w = std::move(saved);
                }
            }
        }
    }
    return ws;
}

json words_json(const std::vector<std::string>& names, const std::vector<MixedBraidWord>& ws) {
    json j;
    for (std::size_t i = 0; i < ws.size(); ++i) j[names[i]] = ws[i].str();
    return j;
}

const RatFunc& Q() {
    static const RatFunc q = RatFunc::q();
    return q;
}
RatFunc qp(int e) { return RatFunc::q(e); }

// ---- relations ----

struct Relation {
    std::string name;
    MixedBraidWord lhs;
    std::vector<std::pair<RatFunc, MixedBraidWord>> rhs;
};

std::vector<Relation> defining_relations(int n) {
    std::vector<Relation> rs;
    auto one = [](MixedBraidWord w) { return std::vector<std::pair<RatFunc, MixedBraidWord>>{{RatFunc(1), std::move(w)}}; };
    if (n >= 2)
        rs.push_back({"g1 t g1 t = t g1 t g1", word(n, {sig(1), axis(1), sig(1), axis(1)}),
                      one(word(n, {axis(1), sig(1), axis(1), sig(1)}))});
    for (int i = 2; i < n; ++i)
        rs.push_back({"t g" + std::to_string(i) + " = g" + std::to_string(i) + " t", word(n, {axis(1), sig(i)}),
                      one(word(n, {sig(i), axis(1)}))});
    for (int i = 1; i + 1 < n; ++i)
        rs.push_back({"braid relation at " + std::to_string(i), word(n, {sig(i), sig(i + 1), sig(i)}),
                      one(word(n, {sig(i + 1), sig(i), sig(i + 1)}))});
    for (int i = 1; i < n; ++i)
        for (int j = i + 2; j < n; ++j)
            rs.push_back({"g" + std::to_string(i) + " g" + std::to_string(j) + " commute", word(n, {sig(i), sig(j)}),
                          one(word(n, {sig(j), sig(i)}))});
    for (int i = 1; i < n; ++i) {
        rs.push_back({"quadratic relation at " + std::to_string(i), word(n, {sig(i), sig(i)}),
                      {{Q() - RatFunc(1), word(n, {sig(i)})}, {Q(), word(n, {})}}});
        rs.push_back({"g" + std::to_string(i) + " g" + std::to_string(i) + "^-1 = 1", word(n, {sig(i), sig(i, -1)}),
                      one(word(n, {}))});
    }
    rs.push_back({"t t^-1 = 1", word(n, {axis(1), axis(-1)}), one(word(n, {}))});
    return rs;
}

void suite_relations(const Resolved& r, SuiteReport& rep) {
    Recorder rec(rep);
    std::mt19937_64 rng(r.seed);
    for (int n = 1; n <= r.n && !rec.failed(); ++n) {
        for (const auto& rel : defining_relations(n)) {
            for (int s = 0; s < r.samples && !rec.failed(); ++s) {
                const MixedBraidWord a = random_word(rng, n, 5, true);
                const MixedBraidWord b = random_word(rng, n, 5, true);
                auto fails = [&](const std::vector<MixedBraidWord>& ab) {
                    const AlgebraElement lhs = hecke::project_braid(ab[0].concat(rel.lhs).concat(ab[1]));
                    AlgebraElement rhs(n);
                    for (const auto& [c, v] : rel.rhs)
                        rhs += hecke::project_braid(ab[0].concat(v).concat(ab[1])).scaled(c);
                    return lhs != rhs;
                };
                rec.check(!fails({a, b}), [&] {
                    auto m = shrink({a, b}, fails);
                    json j = words_json({"left", "right"}, m);
                    j["relation"] = rel.name;
                    j["n"] = n;
                    return j;
                });
            }
        }
    }
    rep.notes.push_back("sandwiches a*u*b vs a*v*b with |a|, |b| <= 5");
}

// ---- markov ----

void suite_markov(const Resolved& r, SuiteReport& rep) {
    Recorder rec(rep);
    std::mt19937_64 rng(r.seed);
    std::uniform_int_distribution<int> nd(1, r.n);
    for (int s = 0; s < r.samples && !rec.failed(); ++s) {
        const int n = nd(rng);
        const MixedBraidWord a = random_word(rng, n, 6, true);
        const MixedBraidWord b = random_word(rng, n, 6, true);
        auto cyclic_fails = [](const std::vector<MixedBraidWord>& ab) {
            const AlgebraElement x = hecke::project_braid(ab[0]), y = hecke::project_braid(ab[1]);
            return trace::trace(hecke::mul(x, y)) != trace::trace(hecke::mul(y, x));
        };
        rec.check(!cyclic_fails({a, b}), [&] {
            json j = words_json({"a", "b"}, shrink({a, b}, cyclic_fails));
            j["property"] = "tr(ab) = tr(ba)";
            return j;
        });
        auto order_fails = [](const std::vector<MixedBraidWord>& w) {
            const AlgebraElement x = hecke::project_braid(w[0]);
            return trace::trace(x, trace::PeelOrder::LeftToRight) != trace::trace(x, trace::PeelOrder::RightToLeft);
        };
        const MixedBraidWord ab = a.concat(b);
        rec.check(!order_fails({ab}), [&] {
            json j = words_json({"word"}, shrink({ab}, order_fails));
            j["property"] = "left-to-right and right-to-left peeling agree";
            return j;
        });
    }
}

// ---- invariance ----

void suite_invariance(const Resolved& r, SuiteReport& rep) {
    Recorder rec(rep);
    std::mt19937_64 rng(r.seed);
    std::uniform_int_distribution<int> nd(1, r.n);
    for (int s = 0; s < r.samples && !rec.failed(); ++s) {
        const int n = nd(rng);
        const MixedBraidWord alpha = random_word(rng, n, 6, true);
        const MixedBraidWord beta = random_word(rng, n, 4, true);
        using Move = std::function<MixedBraidWord(const std::vector<MixedBraidWord>&)>;
        const std::vector<std::pair<std::string, Move>> moves = {
            {"conjugation", [](const auto& w) { return w[1].inverse().concat(w[0]).concat(w[1]); }},
            {"positive stabilization",
             [](const auto& w) {
                 MixedBraidWord x = w[0];
                 x.n += 1;
                 x.letters.push_back(sig(w[0].n, 1));
                 return x;
             }},
            {"negative stabilization",
             [](const auto& w) {
                 MixedBraidWord x = w[0];
                 x.n += 1;
                 x.letters.push_back(sig(w[0].n, -1));
                 return x;
             }},
            {"loop conjugation t a t^-1", [](const auto& w) { return word(w[0].n, {axis(1)}).concat(w[0]).concat(word(w[0].n, {axis(-1)})); }},
            {"loop conjugation t^-1 a t", [](const auto& w) { return word(w[0].n, {axis(-1)}).concat(w[0]).concat(word(w[0].n, {axis(1)})); }},
        };
        for (const auto& [name, move] : moves) {
            auto fails = [&move](const std::vector<MixedBraidWord>& w) {
                return trace::invariant_x(w[0]) != trace::invariant_x(move(w));
            };
            rec.check(!fails({alpha, beta}), [&] {
                auto m = shrink({alpha, beta}, fails);
                json j = words_json({"alpha", "beta"}, m);
                j["move"] = name;
                j["x_before"] = trace::invariant_x(m[0]).str();
                j["x_after"] = trace::invariant_x(move(m)).str();
                return j;
            });
        }
    }
}

// ---- eq15 ----

void suite_eq15(const Resolved& r, SuiteReport& rep) {
    Recorder rec(rep);
    std::string printed_failure;
    std::size_t printed_ok = 0, printed_total = 0;
    for (int n = 1; n <= r.n; ++n) {
        const int strands = n + 1;
        for (int k = 1; k <= r.k; ++k) {
            const std::string at = " (n=" + std::to_string(n) + ", k=" + std::to_string(k) + ")";
            AlgebraElement rhs1(strands);
            for (int j = 0; j < k; ++j)
                rhs1 += P(strands, {loop(n - 1, j), loop(n, k - j)}).scaled((Q() - RatFunc(1)) * qp(j));
            rhs1 += P(strands, {sig(n), loop(n - 1, k)}).scaled(qp(k));
            check_identity(rec, "t_n^k g_n, first line" + at, P(strands, {loop(n, k), sig(n)}), rhs1);

            const AlgebraElement lhs2 = P(strands, {loop(n, -k), sig(n, -1)});
            AlgebraElement sum(strands);
            for (int j = 0; j < k; ++j)
                sum += P(strands, {loop(n - 1, -j), loop(n, -k + j)}).scaled((qp(-1) - RatFunc(1)) * qp(-j));
            const AlgebraElement printed = sum + P(strands, {sig(n), loop(n - 1, -k), sig(n, -1)}).scaled(qp(-k));
            const AlgebraElement corrected = sum + P(strands, {sig(n, -1), loop(n - 1, -k)}).scaled(qp(-k));
            ++printed_total;
            if (lhs2 == printed) ++printed_ok;
            else if (printed_failure.empty()) printed_failure = at.substr(1) + ": lhs - rhs = " + diff_str(lhs2, printed);
            check_identity(rec, "t_n^-k g_n^-1, second line with last term q^-k g_n^-1 t_(n-1)^-k" + at, lhs2,
                           corrected);
        }
    }
    rep.notes.push_back("second line with last term q^-k g_n t_(n-1)^-k g_n^-1 holds in " + std::to_string(printed_ok) +
                        " of " + std::to_string(printed_total) + " cases");
    if (!printed_failure.empty()) rep.notes.push_back("first failure of that form " + printed_failure);
    rep.notes.push_back("second line is checked with last term q^-k g_n^-1 t_(n-1)^-k");
}

// ---- lemma2 / lemma3 ----

void suite_lemma2(const Resolved& r, SuiteReport& rep) {
    Recorder rec(rep);
    for (int n = 1; n <= r.n; ++n) {
        const int strands = n + 1;
        for (int k = 1; k <= r.k; ++k) {
            const std::string at = " (n=" + std::to_string(n) + ", k=" + std::to_string(k) + ")";
            AlgebraElement rhs(strands);
            for (int j = 1; j <= k - 1; ++j)
                rhs += P(strands, {loop(n - 1, j), loop(n, k - j), sig(n)}).scaled(qp(j - 1) * (Q() - RatFunc(1)));
            rhs += P(strands, {sig(n), loop(n - 1, k), sig(n)}).scaled(qp(k - 1));
            check_identity(rec, "(i) t_n^k" + at, P(strands, {loop(n, k)}), rhs);

            AlgebraElement rhs2(strands);
            for (int j = -1; j >= -k + 1; --j)
                rhs2 += P(strands, {loop(n - 1, j), loop(n, -k - j), sig(n, -1)})
                            .scaled(qp(j + 1) * (qp(-1) - RatFunc(1)));
            rhs2 += P(strands, {sig(n, -1), loop(n - 1, -k), sig(n, -1)}).scaled(qp(-k + 1));
            check_identity(rec, "(ii) t_n^-k" + at, P(strands, {loop(n, -k)}), rhs2);
        }
    }
}

void suite_lemma3(const Resolved& r, SuiteReport& rep) {
    Recorder rec(rep);
    for (int n = 0; n + 1 <= r.n; ++n) {
        const int strands = n + 2;
        for (int k = 1; k <= r.k; ++k) {
            const std::string at = " (n=" + std::to_string(n) + ", k=" + std::to_string(k) + ")";
            AlgebraElement rhs = P(strands, {sig(n + 1, -1), loop(n + 1, k)}).scaled(qp(-k + 1));
            for (int j = 1; j <= k - 1; ++j)
                rhs += P(strands, {loop(n, k - j), loop(n + 1, j)}).scaled(qp(-j + 1) * (qp(-1) - RatFunc(1)));
            check_identity(rec, "(i) t_n^k g_(n+1)" + at, P(strands, {loop(n, k), sig(n + 1)}), rhs);

            AlgebraElement rhs2 = P(strands, {sig(n + 1), loop(n + 1, -k)}).scaled(qp(k - 1));
            for (int j = 1; j <= k - 1; ++j)
                rhs2 += P(strands, {loop(n, -k + j), loop(n + 1, -j)}).scaled(qp(j - 1) * (Q() - RatFunc(1)));
            check_identity(rec, "(ii) t_n^-k g_(n+1)^-1" + at, P(strands, {loop(n, -k), sig(n + 1, -1)}), rhs2);
        }
    }
}

// ---- lemma4 ----

TraceValue s_mono(std::vector<int> idx, const RatFunc& c) { return TraceValue::monomial(trace::SMonomial(std::move(idx)), c); }

void suite_lemma4(const Resolved& r, SuiteReport& rep) {
    Recorder rec(rep);
    const RatFunc q = Q(), z = RatFunc::z(), one(1);
    const RatFunc qi = qp(-1);
    for (int p : r.ps) {
        auto tr = [p](int k, int e) { return trace::trace_word(word(2, {axis(p), loop(1, k), sig(1, e)})); };
        const TraceValue pos = s_mono({1, p}, q * (q - one)) + s_mono({p + 1}, (q - one).pow(2) * z + q * z);
        const TraceValue neg =
            s_mono({-1, p}, qi * (qi - one)) +
            s_mono({p - 1}, qi * (qi - one).pow(2) * z + (qi - one).pow(3) + qi * (qi - one) + qi.pow(2) * z);
        const std::string sp = " (p=" + std::to_string(p) + ")";
        const TraceValue a = tr(1, 1), b = tr(-1, -1);
        rec.check(a == pos, [&] {
            return json{{"expansion", "tr(t^p t_1 g_1)" + sp}, {"engine", a.str()}, {"expected", pos.str()}};
        });
        rec.check(b == neg, [&] {
            return json{{"expansion", "tr(t^p t_1^-1 g_1^-1)" + sp}, {"engine", b.str()}, {"expected", neg.str()}};
        });
        for (int k = 1; k <= r.k; ++k) {
            for (int e : {1, -1}) {
                const std::string label = "I(tr(t^p t_1^-" + std::to_string(k) + " g_1^" + std::to_string(-e) +
                                          ")) = tr(t^p t_1^" + std::to_string(k) + " g_1^" + std::to_string(e) + ")" +
                                          " (p=" + std::to_string(p) + ")";
                TraceValue lhs, rhs;
                std::string error;
                try {
                    lhs = trace::map_I(tr(-k, -e), p);
                    rhs = tr(k, e);
                } catch (const trace::DomainError& ex) {
                    error = ex.what();
                }
                rec.check(error.empty() && lhs == rhs, [&] {
                    if (!error.empty()) return json{{"identity", label}, {"error", error}};
                    return json{{"identity", label}, {"lhs", lhs.str()}, {"rhs", rhs.str()}, {"lhs_minus_rhs", diff_str(lhs, rhs)}};
                });
            }
        }
    }
}

// ---- theorem9 / prop2 / grading ----

void suite_theorem9(const Resolved& r, SuiteReport& rep) {
    Recorder rec(rep);
    for (int p : r.ps) {
        const auto direct = lens::generate_system(p, r.k, Side::Positive);
        const auto negative = lens::generate_system(p, r.k, Side::Negative);
        std::vector<lens::MirrorMismatch> mm;
        std::string error;
        try {
            mm = lens::compare_bundles(lens::mirror_system(negative), direct);
        } catch (const trace::DomainError& ex) {
            error = ex.what();
        }
        if (!error.empty()) {
            rec.check(false, [&] { return json{{"p", p}, {"error", error}}; });
            continue;
        }
        rep.checked += direct.equations.size() - mm.size();
        for (const auto& m : mm)
            rec.check(false, [&] {
                return json{{"p", p},
                            {"source", m.source},
                            {"sign", m.sign > 0 ? "+" : "-"},
                            {"lhs_equal", m.lhs_equal},
                            {"rhs_equal", m.rhs_equal},
                            {"mirrored_rhs_minus_direct_rhs", m.rhs_difference.str()}};
            });
        if (!mm.empty())
            rep.notes.push_back("p=" + std::to_string(p) + ": " + std::to_string(mm.size()) + " of " +
                                std::to_string(direct.equations.size()) + " equations differ");
    }
}

void suite_prop2(const Resolved& r, SuiteReport& rep) {
    Recorder rec(rep);
    for (int p : r.ps)
        for (int k = 1; k <= r.k; ++k)
            for (const auto& tau : braid::enumerate_level(k, Side::Positive)) {
                const TraceValue lhs = trace::trace_monomial(tau);
                const TraceValue rhs = trace::map_I(trace::trace_monomial(braid::f_map(tau)), p);
                rec.check(lhs == rhs, [&] {
                    return json{{"p", p}, {"tau", tau.str()}, {"tr", lhs.str()}, {"I_tr_f", rhs.str()}};
                });
            }
}

void suite_grading(const Resolved& r, SuiteReport& rep) {
    Recorder rec(rep);
    for (int p : r.ps)
        for (int k = 0; k <= r.k; ++k)
            for (const auto& tau : braid::enumerate_level(k, Side::Positive))
                for (int sign : {1, -1}) {
                    const auto eq = trace::bbm_equation(tau, sign, p);
                    const auto ll = eq.lhs.levels();
                    const auto rl = eq.raw_rhs.levels();
                    rec.check(ll == std::vector<int>{k}, [&] {
                        return json{{"p", p}, {"tau", tau.str()}, {"side", "lhs"}, {"levels", ll}, {"expected", k}};
                    });
                    rec.check(rl == std::vector<int>{p + k}, [&] {
                        return json{{"p", p}, {"tau", tau.str()}, {"sign", sign > 0 ? "+" : "-"}, {"side", "raw rhs"},
                                    {"levels", rl}, {"expected", p + k}};
                    });
                }
}

// ---- triangular ----

std::vector<LoopMonomial> primed_words(int max_level, int max_loops) {
    std::vector<LoopMonomial> out;
    std::set<std::string> seen;
    auto add = [&](LoopMonomial m) {
        if (static_cast<int>(m.exps.size()) > max_loops) return;
        m.primed = true;
        if (seen.insert(m.str()).second) out.push_back(std::move(m));
    };
    for (int k = 1; k <= max_level; ++k) {
        for (auto& m : braid::enumerate_level(k, Side::Positive)) add(m);
        for (auto& m : braid::enumerate_level(k, Side::Negative)) add(m);
    }
    braid::EnumerationLimits lim;
    lim.max_length = max_loops;
    lim.max_abs_exp = max_level;
    for (int k = -max_level; k <= max_level; ++k)
        for (auto& m : braid::enumerate_level(k, Side::Ordered, lim)) add(m);
    return out;
}

void suite_triangular(const Resolved& r, SuiteReport& rep) {
    Recorder rec(rep);
    int plus = 0, minus = 0;
    for (const auto& wp : primed_words(r.k, r.n)) {
        const int n = std::max(1, wp.top_index() + 1);
        AlgebraElement e = AlgebraElement::identity(n);
        int weight = 0;
        for (const auto& [i, k] : wp.exps) {
            e = hecke::mul(e, hecke::expand_unprimed(i, k, n));
            weight += i * k;
        }
        hecke::BKey key{};
        for (const auto& [i, k] : wp.exps) key.a[static_cast<std::size_t>(i)] = static_cast<std::int16_t>(k);
        const RatFunc diag = e.coeff(key);
        int sign = 0;
        if (diag == qp(weight)) sign = 1;
        else if (diag == qp(-weight)) sign = -1;
        if (weight == 0 && sign != 0) sign = 2;  // both signs agree
        if (sign == 1) ++plus;
        if (sign == -1) ++minus;
        rec.check(sign != 0, [&] {
            return json{{"word", wp.str()}, {"diagonal", diag.str()}, {"expected", "q^(+-" + std::to_string(weight) + ")"}};
        });
        const braid::LoopProfile top = braid::LoopProfile::of(wp);
        for (const auto& [cw, c] : e.sorted_terms()) {
            if (cw.key == key || cw.has_tail()) continue;
            const bool lower = braid::compare_order(cw.profile(), top) == std::strong_ordering::less;
            rec.check(lower, [&] {
                return json{{"word", wp.str()}, {"offending_term", cw.str()}, {"coefficient", c.str()}};
            });
        }
    }
    if (plus && !minus) rep.notes.push_back("observed diagonal coefficient: q^(+sum i*k_i)");
    else if (minus && !plus) rep.notes.push_back("observed diagonal coefficient: q^(-sum i*k_i)");
    else if (plus && minus) rep.notes.push_back("diagonal sign is not uniform");
    if (plus && minus) rec.check(false, [] { return json{{"error", "mixed diagonal signs"}}; });
}

// ---- registry ----

struct SuiteInfo {
    void (*run)(const Resolved&, SuiteReport&);
    int n;
    std::vector<int> ps;
    int k;
    int samples;
};

const std::map<std::string, SuiteInfo>& registry() {
    static const std::map<std::string, SuiteInfo> r = {
        {"markov", {suite_markov, 4, {}, 0, 200}},
        {"relations", {suite_relations, 4, {}, 0, 200}},
        {"invariance", {suite_invariance, 4, {}, 0, 100}},
        {"eq15", {suite_eq15, 3, {}, 5, 0}},
        {"lemma2", {suite_lemma2, 3, {}, 5, 0}},
        {"lemma3", {suite_lemma3, 3, {}, 5, 0}},
        {"lemma4", {suite_lemma4, 0, {2, 3}, 3, 0}},
        {"theorem9", {suite_theorem9, 0, {1, 2, 3}, 3, 0}},
        {"prop2", {suite_prop2, 0, {2, 3}, 3, 0}},
        {"grading", {suite_grading, 0, {2}, 4, 0}},
        {"triangular", {suite_triangular, 3, {}, 4, 0}},
    };
    return r;
}

const SuiteInfo& info(const std::string& name) {
    auto it = registry().find(name);
    if (it == registry().end()) throw std::invalid_argument("unknown suite '" + name + "'");
    return it->second;
}

Resolved resolve(const SuiteInfo& s, const SuiteParams& p) {
    Resolved r;
    r.n = p.n.value_or(s.n);
    r.ps = p.p ? std::vector<int>{*p.p} : s.ps;
    r.k = p.k.value_or(s.k);
    r.samples = p.samples.value_or(s.samples);
    r.seed = p.seed;
    if (s.n && (r.n < 1 || r.n > 6)) throw std::invalid_argument("--n must lie in 1..6");
    for (int x : r.ps)
        if (x < 1 || x > 6) throw std::invalid_argument("--p must lie in 1..6");
    if (s.k && (r.k < 0 || r.k > 8)) throw std::invalid_argument("--k must lie in 0..8");
    if (s.samples && r.samples < 1) throw std::invalid_argument("--samples must be positive");
    return r;
}

json resolved_json(const SuiteInfo& s, const Resolved& r) {
    json j = json::object();
    if (s.n) j["n"] = r.n;
    if (!s.ps.empty()) j["p"] = r.ps;
    if (s.k) j["k"] = r.k;
    if (s.samples) {
        j["samples"] = r.samples;
        j["seed"] = r.seed;
    }
    return j;
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {"markov", "relations", "invariance", "eq15",    "lemma2",    "lemma3",
                                                   "lemma4", "theorem9",  "prop2",      "grading", "triangular"};
    return names;
}

json suite_defaults(const std::string& name) {
    const auto& s = info(name);
    return resolved_json(s, resolve(s, {}));
}

SuiteReport run_suite(const std::string& name, const SuiteParams& params) {
    const auto& s = info(name);
    const Resolved r = resolve(s, params);
    SuiteReport rep;
    rep.suite = name;
    rep.params = resolved_json(s, r);
    s.run(r, rep);
    return rep;
}

json SuiteReport::to_json() const {
    return {{"suite", suite},   {"params", params},
            {"checked", checked}, {"passed", passed},
            {"counterexample", counterexample}, {"notes", notes}};
}

std::string SuiteReport::str() const {
    std::string s = "suite " + suite + ": " + (passed ? "pass" : "FAIL") + " (" + std::to_string(checked) + " checks)\n";
    for (const auto& n : notes) s += "  note: " + n + "\n";
    if (!passed) s += "  first failure: " + counterexample.dump() + "\n";
    return s;
}

}  // namespace lensskein::verify
