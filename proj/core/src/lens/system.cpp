#include "lensskein/lens/system.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace lensskein::lens {

using trace::SMonomialLess;
using RatFunc = scalar::RatFunc;

namespace {

const char* side_str(Side s) { return s == Side::Negative ? "-" : "+"; }

std::vector<int> rank_key_level(const SMonomial& m) {
    std::vector<int> k{m.level(), m.max_index()};
    k.insert(k.end(), m.idx.rbegin(), m.idx.rend());
    return k;
}

std::vector<int> rank_key_index(const SMonomial& m) {
    std::vector<int> k{m.max_index(), m.level()};
    k.insert(k.end(), m.idx.rbegin(), m.idx.rend());
    return k;
}

nlohmann::json rule_json(const Rule& r) {
    return {{"head", r.head.idx}, {"text", r.head.str() + " -> " + r.value.str()}, {"value", r.value.to_json()}};
}

TraceValue normalize_leading(TraceValue v) {
    if (v.is_zero()) return v;
    const RatFunc lead = v.terms().rbegin()->second;
    v = v.scaled(lead.inverse());
    v.reduce_coefficients();
    return v;
}

std::set<SMonomial, SMonomialLess> monomials_of(const std::vector<Equation>& eqs) {
    std::set<SMonomial, SMonomialLess> out;
    for (const auto& e : eqs) {
        for (const auto& [m, c] : e.lhs.terms()) out.insert(m);
        for (const auto& [m, c] : e.rhs.terms()) out.insert(m);
    }
    return out;
}

}  // namespace

nlohmann::json SystemBundle::to_json() const {
    nlohmann::json eqs = nlohmann::json::array();
    for (const auto& e : equations) eqs.push_back(e.to_json());
    return {{"p", p}, {"side", side_str(side)}, {"levels", levels}, {"equations", eqs}};
}

SystemBundle generate_system(int p, int k_max, Side side) {
    if (p < 1) throw std::invalid_argument("generate_system needs p >= 1");
    if (k_max < 0) throw std::invalid_argument("generate_system needs k_max >= 0");
    if (side == Side::Ordered) throw std::invalid_argument("generate_system works on the + or - side");
    SystemBundle b;
    b.p = p;
    b.side = side;
    for (int k = 0; k <= k_max; ++k) {
        const int level = side == Side::Positive ? k : -k;
        b.levels.push_back(level);
        for (const auto& tau : braid::enumerate_level(k, side)) {
            b.equations.push_back(trace::bbm_equation(tau, 1, p));
            b.equations.push_back(trace::bbm_equation(tau, -1, p));
        }
    }
    return b;
}

SystemBundle mirror_system(const SystemBundle& negative) {
    if (negative.side != Side::Negative) throw std::invalid_argument("mirror_system expects a negative-side bundle");
    SystemBundle out;
    out.p = negative.p;
    out.side = Side::Positive;
    for (int l : negative.levels) out.levels.push_back(-l);
    for (const auto& e : negative.equations) {
        Equation m;
        m.source = braid::f_map(e.source);
        m.sign = -e.sign;
        m.p = e.p;
        m.image = braid::bbm(m.source, m.sign, m.p);
        m.coefficient = scalar::scalar_I(e.coefficient);
        m.lhs = trace::map_I(e.lhs, e.p);
        m.raw_rhs = trace::map_I(e.raw_rhs, e.p);
        m.rhs = trace::map_I(e.rhs, e.p);
        out.equations.push_back(std::move(m));
    }
    return out;
}

std::vector<MirrorMismatch> compare_bundles(const SystemBundle& mirrored, const SystemBundle& direct) {
    if (mirrored.equations.size() != direct.equations.size())
        throw std::invalid_argument("bundles have different equation counts");
    std::map<std::pair<std::string, int>, const Equation*> by_source;
    for (const auto& e : direct.equations) by_source[{e.source.str(), e.sign}] = &e;
    std::vector<MirrorMismatch> out;
    for (std::size_t i = 0; i < mirrored.equations.size(); ++i) {
        const auto& a = mirrored.equations[i];
        auto it = by_source.find({a.source.str(), a.sign});
        if (it == by_source.end())
            throw std::invalid_argument("no direct equation for " + a.source.str());
        const auto& b = *it->second;
        MirrorMismatch mm;
        mm.index = i;
        mm.source = a.source.str();
        mm.sign = a.sign;
        mm.lhs_equal = a.lhs == b.lhs;
        mm.rhs_equal = a.rhs == b.rhs;
        if (!mm.lhs_equal || !mm.rhs_equal) {
            mm.rhs_difference = a.rhs - b.rhs;
            mm.rhs_difference.reduce_coefficients();
            out.push_back(std::move(mm));
        }
    }
    return out;
}

const Rule* ReducedSystem::find_rule(const SMonomial& head) const {
    auto it = std::lower_bound(rules.begin(), rules.end(), head,
                               [](const Rule& r, const SMonomial& h) { return SMonomialLess{}(r.head, h); });
    if (it != rules.end() && it->head == head) return &*it;
    return nullptr;
}

TraceValue ReducedSystem::normal_form(const TraceValue& v) const {
    TraceValue out;
    for (const auto& [m, c] : v.terms()) {
        if (const Rule* r = find_rule(m)) out += r->value.scaled(c);
        else out.add_term(m, c);
    }
    out.reduce_coefficients();
    return out;
}

nlohmann::json ReducedSystem::to_json() const {
    nlohmann::json rs = nlohmann::json::array();
    for (const auto& r : rules) rs.push_back(rule_json(r));
    nlohmann::json res = nlohmann::json::array();
    for (const auto& r : residual) res.push_back(r.to_json());
    nlohmann::json basis = nlohmann::json::array();
    for (const auto& m : basis_monomials) basis.push_back(m.idx);
    return {{"p", p},
            {"strategy", strategy == Strategy::LevelFirst ? "level-first" : "index-first"},
            {"equations", processed},
            {"rules", rs},
            {"torsion_candidates", res},
            {"basis_monomials", basis}};
}

ReducedSystem reduce_equations(int p, const std::vector<TraceValue>& relations, const EliminationPredicate& eliminate,
                               const RankLess& rank_less) {
    std::map<SMonomial, TraceValue, SMonomialLess> rules;
    ReducedSystem out;
    out.p = p;
    out.sources = relations;
    std::set<SMonomial, SMonomialLess> basis_seen;
    for (const auto& rel : relations) {
        ++out.processed;
        for (const auto& [m, c] : rel.terms())
            if (!eliminate(m)) basis_seen.insert(m);
        TraceValue r;
        for (const auto& [m, c] : rel.terms()) {
            auto it = rules.find(m);
            if (it != rules.end()) r += it->second.scaled(c);
            else r.add_term(m, c);
        }
        r.reduce_coefficients();
        if (r.is_zero()) continue;
        const SMonomial* pivot = nullptr;
        for (const auto& [m, c] : r.terms())
            if (eliminate(m) && (!pivot || rank_less(*pivot, m))) pivot = &m;
        if (!pivot) {
            out.residual.push_back(normalize_leading(r));
            continue;
        }
        const SMonomial head = *pivot;
        const RatFunc c = r.coeff(head);
        TraceValue value = r;
        value.add_term(head, -c);
        value = value.scaled(-c.inverse());
        value.reduce_coefficients();
        for (auto& [h, v] : rules) {
            const RatFunc d = v.coeff(head);
            if (d.is_zero()) continue;
            v.add_term(head, -d);
            v += value.scaled(d);
            v.reduce_coefficients();
        }
        rules.emplace(head, std::move(value));
    }
    for (auto& [h, v] : rules) out.rules.push_back({h, v});
    out.basis_monomials.assign(basis_seen.begin(), basis_seen.end());
    return out;
}

ReducedSystem reduce_system(const SystemBundle& b, Strategy strategy) {
    if (b.side != Side::Positive) throw std::invalid_argument("reduce_system expects a positive-side bundle");
    const int p = b.p;
    auto eliminate = [p](const SMonomial& m) { return m.max_index() >= p || m.min_index() < 0; };
    std::vector<TraceValue> rels;
    for (const auto& e : b.equations) rels.push_back(e.relation());
    RankLess less;
    if (strategy == Strategy::IndexFirst) {
        std::reverse(rels.begin(), rels.end());
        less = [](const SMonomial& x, const SMonomial& y) { return rank_key_index(x) < rank_key_index(y); };
    } else {
        less = [](const SMonomial& x, const SMonomial& y) { return rank_key_level(x) < rank_key_level(y); };
    }
    ReducedSystem r = reduce_equations(p, rels, eliminate, less);
    r.strategy = strategy;
    if (strategy == Strategy::IndexFirst) std::reverse(r.sources.begin(), r.sources.end());
    return r;
}

nlohmann::json GeneratingSetReport::to_json() const {
    nlohmann::json es = nlohmann::json::array();
    for (const auto& e : entries)
        es.push_back({{"monomial", e.monomial.str()},
                      {"status", e.decided ? "reduced" : "undecided at this truncation"},
                      {"normal_form", e.normal_form.str()}});
    nlohmann::json rel = nlohmann::json::array();
    for (const auto& r : relations) rel.push_back(r.to_json());
    return {{"p", p},           {"probe_level", probe_level}, {"all_decided", all_decided},
            {"confluent", confluent}, {"disagreements", disagreements}, {"torsion_candidates", rel},
            {"entries", es}};
}

GeneratingSetReport check_generating_set(const ReducedSystem& r, int probe_level_max) {
    GeneratingSetReport rep;
    rep.p = r.p;
    rep.probe_level = probe_level_max;
    const int p = r.p;
    auto in_basis = [p](const SMonomial& m) { return m.empty() || (m.min_index() >= 1 && m.max_index() <= p - 1); };

    // the same relations under the other strategy
    const Strategy other = r.strategy == Strategy::LevelFirst ? Strategy::IndexFirst : Strategy::LevelFirst;
    auto eliminate = [p](const SMonomial& m) { return m.max_index() >= p || m.min_index() < 0; };
    std::vector<TraceValue> rels = r.sources;
    RankLess less;
    if (other == Strategy::IndexFirst) {
        std::reverse(rels.begin(), rels.end());
        less = [](const SMonomial& x, const SMonomial& y) { return rank_key_index(x) < rank_key_index(y); };
    } else {
        less = [](const SMonomial& x, const SMonomial& y) { return rank_key_level(x) < rank_key_level(y); };
    }
    const ReducedSystem alt = reduce_equations(p, rels, eliminate, less);

    const SystemBundle probe = generate_system(p, probe_level_max, Side::Positive);
    bool all = true, confluent = true;
    for (const auto& m : monomials_of(probe.equations)) {
        ProbeEntry e;
        e.monomial = m;
        e.normal_form = r.normal_form(TraceValue::monomial(m));
        e.decided = std::all_of(e.normal_form.terms().begin(), e.normal_form.terms().end(),
                                [&](const auto& kv) { return in_basis(kv.first); });
        const TraceValue nf2 = alt.normal_form(TraceValue::monomial(m));
        const bool decided2 = std::all_of(nf2.terms().begin(), nf2.terms().end(),
                                          [&](const auto& kv) { return in_basis(kv.first); });
        if (e.decided != decided2 || (e.decided && nf2 != e.normal_form)) {
            confluent = false;
            rep.disagreements.push_back(m.str() + ": " + e.normal_form.str() + " vs " + nf2.str());
        }
        all = all && e.decided;
        rep.entries.push_back(std::move(e));
    }
    rep.all_decided = all;
    rep.confluent = confluent;
    rep.relations = r.residual;
    for (const auto& x : alt.residual) rep.relations.push_back(x);
    return rep;
}

nlohmann::json CandidateReport::to_json() const {
    nlohmann::json rs = nlohmann::json::array();
    for (const auto& r : rules) rs.push_back(rule_json(r));
    nlohmann::json es = nlohmann::json::array();
    for (const auto& e : entries)
        es.push_back({{"monomial", e.monomial.str()},
                      {"status", e.decided ? "in window" : "undecided at this truncation"},
                      {"normal_form", e.normal_form.str()}});
    nlohmann::json rel = nlohmann::json::array();
    for (const auto& r : relations) rel.push_back(r.to_json());
    return {{"p", p},
            {"probe_level", probe_level},
            {"window", {window_lo, window_hi}},
            {"all_in_window", all_in_window},
            {"window_independent", window_independent},
            {"rules", rs},
            {"window_relations", rel},
            {"entries", es}};
}

CandidateReport candidate_basis_experiment(int p, int probe_level_max) {
    CandidateReport rep;
    rep.p = p;
    rep.probe_level = probe_level_max;
    // -p/2 <= k < p/2
    rep.window_lo = -(p / 2);
    rep.window_hi = (p + 1) / 2 - 1;
    const int lo = rep.window_lo, hi = rep.window_hi;
    auto dist = [lo, hi](const SMonomial& m) {
        int d = 0;
        for (int j : m.idx) d = std::max(d, j < lo ? lo - j : (j > hi ? j - hi : 0));
        return d;
    };
    auto eliminate = [dist](const SMonomial& m) { return dist(m) > 0; };
    auto less = [dist](const SMonomial& x, const SMonomial& y) {
        std::vector<int> kx{dist(x), std::abs(x.level())}, ky{dist(y), std::abs(y.level())};
        kx.insert(kx.end(), x.idx.rbegin(), x.idx.rend());
        ky.insert(ky.end(), y.idx.rbegin(), y.idx.rend());
        return kx < ky;
    };
    const SystemBundle pos = generate_system(p, probe_level_max, Side::Positive);
    const SystemBundle neg = generate_system(p, probe_level_max, Side::Negative);
    std::vector<TraceValue> rels;
    for (const auto& e : pos.equations) rels.push_back(e.relation());
    for (const auto& e : neg.equations) rels.push_back(e.relation());
    const ReducedSystem r = reduce_equations(p, rels, eliminate, less);
    rep.rules = r.rules;
    rep.relations = r.residual;
    rep.window_independent = r.residual.empty();

    auto all_eqs = pos.equations;
    all_eqs.insert(all_eqs.end(), neg.equations.begin(), neg.equations.end());
    bool all = true;
    for (const auto& m : monomials_of(all_eqs)) {
        ProbeEntry e;
        e.monomial = m;
        e.normal_form = r.normal_form(TraceValue::monomial(m));
        e.decided = std::all_of(e.normal_form.terms().begin(), e.normal_form.terms().end(),
                                [&](const auto& kv) { return dist(kv.first) == 0; });
        all = all && e.decided;
        rep.entries.push_back(std::move(e));
    }
    rep.all_in_window = all;
    return rep;
}

}  // namespace lensskein::lens
