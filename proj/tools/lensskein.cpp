#include <iostream>
#include <iterator>
#include <optional>
#include <string>

#ifdef LENSSKEIN_CLI11_PACKAGE
#include <CLI/CLI.hpp>
#else
#include <CLI11.hpp>
#endif
#include <nlohmann/json.hpp>

#include "lensskein/braid/loops.hpp"
#include "lensskein/hecke/algebra.hpp"
#include "lensskein/lens/system.hpp"
#include "lensskein/trace/markov.hpp"
#include "lensskein/verify/suites.hpp"

using namespace lensskein;
using nlohmann::json;

namespace {

struct Options {
    std::string word;
    std::string word2;
    std::optional<int> n;
    std::optional<int> p;
    std::optional<int> k;
    int k_max = 2;
    int level = 1;
    std::string side = "+";
    std::string format = "text";
    std::string suite;
    std::string strategy = "level";
    std::optional<int> samples;
    std::optional<int> probe;
    std::uint64_t seed = 7;
};

std::string read_input(const std::string& arg) {
    if (arg != "-") return arg;
    std::string s(std::istreambuf_iterator<char>(std::cin), {});
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r' || s.back() == ' ')) s.pop_back();
    return s;
}

braid::Side parse_side(const std::string& s) {
    if (s == "+" || s == "positive") return braid::Side::Positive;
    if (s == "-" || s == "negative") return braid::Side::Negative;
    if (s == "ordered") return braid::Side::Ordered;
    throw std::invalid_argument("--side must be +, - or ordered");
}

braid::MixedBraidWord word_arg(const Options& o, const std::string& text) {
    braid::MixedBraidWord w = braid::parse_word(read_input(text), o.n);
    w.check_range();
    return w;
}

braid::LoopMonomial monomial_arg(const Options& o, const std::string& text) {
    return braid::LoopMonomial::from_word(word_arg(o, text));
}

int require(const std::optional<int>& v, const char* flag) {
    if (!v) throw std::invalid_argument(std::string("missing required flag ") + flag);
    return *v;
}

void emit(const Options& o, const json& j, const std::string& text) {
    if (o.format == "json") std::cout << j.dump(2) << "\n";
    else std::cout << text << (text.empty() || text.back() == '\n' ? "" : "\n");
}

std::string sign_str(int s) { return s > 0 ? "+" : "-"; }

std::string equation_text(const trace::Equation& e) {
    return "[" + sign_str(e.sign) + "] " + e.source.str() + " -> " + e.image.str() + "\n    " + e.lhs.str() +
           "\n  = " + e.rhs.str() + "\n";
}

int run_command(const std::string& cmd, const Options& o) {
    if (cmd == "normalize") {
        const auto e = hecke::project_braid(word_arg(o, o.word));
        emit(o, e.to_json(), e.str());
    } else if (cmd == "trace") {
        const auto v = trace::trace_word(word_arg(o, o.word));
        emit(o, v.to_json(), v.str());
    } else if (cmd == "invariant") {
        const auto x = trace::invariant_x(word_arg(o, o.word));
        emit(o, x.to_json(), x.str());
    } else if (cmd == "bbm") {
        const int p = require(o.p, "--p");
        const auto m = monomial_arg(o, o.word);
        json arr = json::array();
        std::string text;
        for (int s : {1, -1}) {
            const auto eq = trace::bbm_equation(m, s, p);
            arr.push_back(eq.to_json());
            text += equation_text(eq);
        }
        emit(o, arr, text);
    } else if (cmd == "fmap") {
        const auto w = braid::f_map(word_arg(o, o.word));
        emit(o, w.to_json(), w.str());
    } else if (cmd == "imap") {
        const int p = require(o.p, "--p");
        const auto v = trace::map_I(trace::trace_word(word_arg(o, o.word)), p);
        emit(o, v.to_json(), v.str());
    } else if (cmd == "order") {
        const auto a = monomial_arg(o, o.word), b = monomial_arg(o, o.word2);
        const auto c = braid::compare_order(braid::LoopProfile::of(a), braid::LoopProfile::of(b));
        const std::string rel = c == std::strong_ordering::less ? "<" : c == std::strong_ordering::greater ? ">" : "=";
        emit(o, {{"a", a.str()}, {"b", b.str()}, {"order", rel}}, a.str() + " " + rel + " " + b.str());
    } else if (cmd == "enum") {
        const auto ms = braid::enumerate_level(o.level, parse_side(o.side));
        json arr = json::array();
        std::string text;
        for (const auto& m : ms) {
            arr.push_back(m.str());
            text += m.str() + "\n";
        }
        emit(o, {{"level", o.level}, {"side", o.side}, {"count", ms.size()}, {"monomials", arr}}, text);
    } else if (cmd == "gen-system") {
        const auto side = parse_side(o.side);
        const auto b = lens::generate_system(require(o.p, "--p"), o.k_max, side);
        std::string text;
        for (const auto& e : b.equations) text += equation_text(e);
        emit(o, b.to_json(), text);
    } else if (cmd == "reduce") {
        const int p = require(o.p, "--p");
        if (o.strategy != "level" && o.strategy != "index") throw std::invalid_argument("--strategy must be level or index");
        const auto r = lens::reduce_system(lens::generate_system(p, o.k_max, braid::Side::Positive),
                                           o.strategy == "level" ? lens::Strategy::LevelFirst : lens::Strategy::IndexFirst);
        json j = r.to_json();
        std::string text;
        for (const auto& rule : r.rules) text += rule.head.str() + " -> " + rule.value.str() + "\n";
        for (const auto& t : r.residual) text += "torsion candidate: " + t.str() + " = 0\n";
        if (o.probe) {
            const auto g = lens::check_generating_set(r, *o.probe);
            j["generating_set"] = g.to_json();
            text += "probe level " + std::to_string(*o.probe) + ": " + std::to_string(g.entries.size()) + " monomials, " +
                    (g.all_decided ? "all reduce to the basis span" : "some undecided at this truncation") + ", " +
                    (g.confluent ? "strategies agree" : "strategies disagree") + "\n";
            for (const auto& d : g.disagreements) text += "  disagreement: " + d + "\n";
        }
        emit(o, j, text);
    } else if (cmd == "mirror") {
        const int p = require(o.p, "--p");
        const auto direct = lens::generate_system(p, o.k_max, braid::Side::Positive);
        const auto mm = lens::compare_bundles(
            lens::mirror_system(lens::generate_system(p, o.k_max, braid::Side::Negative)), direct);
        json arr = json::array();
        std::string text;
        for (const auto& m : mm) {
            arr.push_back({{"source", m.source}, {"sign", sign_str(m.sign)}, {"lhs_equal", m.lhs_equal},
                           {"rhs_equal", m.rhs_equal}, {"rhs_difference", m.rhs_difference.to_json()}});
            text += "[" + sign_str(m.sign) + "] " + m.source + ": mirrored rhs - direct rhs = " + m.rhs_difference.str() + "\n";
        }
        text += mm.empty() ? "all " + std::to_string(direct.equations.size()) + " equations agree"
                           : std::to_string(mm.size()) + " of " + std::to_string(direct.equations.size()) +
                                 " equations differ";
        emit(o, {{"p", p}, {"k_max", o.k_max}, {"equations", direct.equations.size()}, {"mismatches", arr}}, text);
    } else if (cmd == "experiment") {
        const int p = require(o.p, "--p");
        const auto c = lens::candidate_basis_experiment(p, o.probe.value_or(2));
        std::string text = "window [" + std::to_string(c.window_lo) + ", " + std::to_string(c.window_hi) + "] (index 0 excluded)\n";
        for (const auto& rule : c.rules) text += rule.head.str() + " -> " + rule.value.str() + "\n";
        for (const auto& t : c.relations) text += "window relation: " + t.str() + " = 0\n";
        text += std::string("all probed monomials in window: ") + (c.all_in_window ? "yes" : "no") +
                "\nwindow monomials independent at this scale: " + (c.window_independent ? "yes" : "no");
        emit(o, c.to_json(), text);
    } else if (cmd == "verify") {
        verify::SuiteParams sp;
        sp.n = o.n;
        sp.p = o.p;
        sp.k = o.k;
        sp.samples = o.samples;
        sp.seed = o.seed;
        const auto r = verify::run_suite(o.suite, sp);
        emit(o, r.to_json(), r.str());
        return r.passed ? 0 : 2;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hecke algebra, Markov trace and braid band move equations for links in L(p,1)", "lensskein"};
    app.require_subcommand(1);
    Options o;

    auto add = [&](const std::string& name, const std::string& desc) {
        auto* s = app.add_subcommand(name, desc);
        s->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
        return s;
    };
    auto word_cmd = [&](const std::string& name, const std::string& desc) {
        auto* s = add(name, desc);
        s->add_option("word", o.word, "Mixed braid word, or - to read stdin")->required();
        s->add_option("--n", o.n, "Strand count (default: inferred)");
        return s;
    };

    word_cmd("normalize", "Write a braid word in the canonical basis");
    word_cmd("trace", "Markov trace of a braid word");
    word_cmd("invariant", "Invariant X of a braid word");
    word_cmd("fmap", "Negate every exponent of a word");
    word_cmd("imap", "Apply I to the trace of a word")->add_option("--p", o.p, "Surgery coefficient p");
    word_cmd("bbm", "Both braid band move equations of a loop monomial")->add_option("--p", o.p, "Surgery coefficient p");

    auto* order = add("order", "Compare two loop monomials");
    order->add_option("a", o.word, "First monomial")->required();
    order->add_option("b", o.word2, "Second monomial")->required();

    auto* en = add("enum", "List loop monomials of a level");
    en->add_option("--level", o.level, "Level k")->required();
    en->add_option("--side", o.side, "+, - or ordered");

    auto* gen = add("gen-system", "Generate the bbm equations up to a level");
    gen->add_option("--p", o.p, "Surgery coefficient p");
    gen->add_option("--k-max", o.k_max, "Largest level")->check(CLI::Range(0, 8));
    gen->add_option("--side", o.side, "+ or -");

    auto* red = add("reduce", "Reduce the positive-side system toward low indices");
    red->add_option("--p", o.p, "Surgery coefficient p");
    red->add_option("--k-max", o.k_max, "Largest level")->check(CLI::Range(0, 8));
    red->add_option("--probe", o.probe, "Also check monomials up to this level")->check(CLI::Range(0, 8));
    red->add_option("--strategy", o.strategy, "Pivot order: level or index");

    auto* mir = add("mirror", "Compare I applied to the negative side with the positive side");
    mir->add_option("--p", o.p, "Surgery coefficient p");
    mir->add_option("--k-max", o.k_max, "Largest level")->check(CLI::Range(0, 8));

    auto* exp = add("experiment", "Reduce both sides toward the window -p/2 <= k < p/2");
    exp->add_option("--p", o.p, "Surgery coefficient p");
    exp->add_option("--probe", o.probe, "Largest level probed (default 2)")->check(CLI::Range(0, 8));

    auto* ver = add("verify", "Run a verification suite");
    ver->add_option("--suite", o.suite, "Suite name")->required()->check(CLI::IsMember(verify::suite_names()));
    ver->add_option("--n", o.n, "Strand bound");
    ver->add_option("--p", o.p, "Surgery coefficient p");
    ver->add_option("--k", o.k, "Level or exponent bound");
    ver->add_option("--samples", o.samples, "Random samples");
    ver->add_option("--seed", o.seed, "Random seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    const std::string cmd = app.get_subcommands().front()->get_name();
    try {
        return run_command(cmd, o);
    } catch (const braid::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
    } catch (const trace::DomainError& e) {
        std::cerr << "domain error: " << e.what() << "\n";
    } catch (const braid::RangeError& e) {
        std::cerr << "range error: " << e.what() << "\n";
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
    }
    return 1;
}
