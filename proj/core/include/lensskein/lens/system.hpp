#pragma once

#include <functional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "lensskein/braid/loops.hpp"
#include "lensskein/trace/markov.hpp"

namespace lensskein::lens {

using braid::Side;
using trace::Equation;
using trace::SMonomial;
using trace::TraceValue;

struct SystemBundle {
    int p = 0;
    Side side = Side::Positive;
    std::vector<int> levels;
    std::vector<Equation> equations;

    nlohmann::json to_json() const;
};

// Equations bbm(tau, +) and bbm(tau, -) for every tau of level 0..k_max on the
// positive side, or 0..-k_max on the negative side.
SystemBundle generate_system(int p, int k_max, Side side);

// map_I applied to both sides of every negative-side equation. The mirrored
// equation takes the f-image source and the opposite sign so it lines up with
// the direct positive-side equation. Throws trace::DomainError when an index
// exceeds p.
SystemBundle mirror_system(const SystemBundle& negative);

struct MirrorMismatch {
    std::size_t index = 0;
    std::string source;
    int sign = 0;
    bool lhs_equal = true;
    bool rhs_equal = true;
    TraceValue rhs_difference;  // mirrored rhs minus direct rhs
};

// Pairs equations by (source, sign); empty when everything agrees.
std::vector<MirrorMismatch> compare_bundles(const SystemBundle& mirrored, const SystemBundle& direct);

enum class Strategy {
    LevelFirst,  // source order; pivot rank (level, largest index, lex)
    IndexFirst,  // reverse order; pivot rank (largest index, level, lex)
};

struct Rule {
    SMonomial head;
    TraceValue value;
};

struct ReducedSystem {
    int p = 0;
    std::vector<Rule> rules;             // sorted by head
    std::vector<TraceValue> residual;    // torsion candidates among basis monomials
    std::vector<SMonomial> basis_monomials;  // basis monomials seen in the equations
    std::size_t processed = 0;
    Strategy strategy = Strategy::LevelFirst;
    std::vector<TraceValue> sources;     // relations fed to the reduction, in input order

    // Substitutes rules until no rule head remains.
    TraceValue normal_form(const TraceValue& v) const;
    const Rule* find_rule(const SMonomial& head) const;
    nlohmann::json to_json() const;
};

// Monomials that the reduction eliminates; the rest span the answer.
using EliminationPredicate = std::function<bool(const SMonomial&)>;
// Larger rank is eliminated first.
using RankLess = std::function<bool(const SMonomial&, const SMonomial&)>;

ReducedSystem reduce_equations(int p, const std::vector<TraceValue>& relations, const EliminationPredicate& eliminate,
                               const RankLess& rank_less);

// Positive-side reduction toward monomials with indices in [1, p-1].
ReducedSystem reduce_system(const SystemBundle& b, Strategy strategy = Strategy::LevelFirst);

struct ProbeEntry {
    SMonomial monomial;
    bool decided = false;   // normal form lies in the basis span
    TraceValue normal_form;
};

struct GeneratingSetReport {
    int p = 0;
    int probe_level = 0;
    std::vector<ProbeEntry> entries;
    bool all_decided = false;
    bool confluent = false;
    std::vector<std::string> disagreements;
    std::vector<TraceValue> relations;  // torsion candidates from either strategy

    nlohmann::json to_json() const;
};

GeneratingSetReport check_generating_set(const ReducedSystem& r, int probe_level_max);

struct CandidateReport {
    int p = 0;
    int probe_level = 0;
    int window_lo = 0;
    int window_hi = 0;
    std::vector<Rule> rules;
    std::vector<ProbeEntry> entries;
    bool all_in_window = false;
    bool window_independent = false;
    std::vector<TraceValue> relations;

    nlohmann::json to_json() const;
};

// Window -p/2 <= k < p/2 (k != 0), combining both sides' equations.
CandidateReport candidate_basis_experiment(int p, int probe_level_max);

}  // namespace lensskein::lens
