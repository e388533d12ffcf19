#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

namespace lensskein::braid {

enum class Gen {
    Axis,        // t (the looping generator around the fixed strand)
    Sigma,       // g_i
    Loop,        // t_i = g_i ... g_1 t g_1 ... g_i
    PrimedLoop,  // t'_i = g_i ... g_1 t g_1^-1 ... g_i^-1
};

struct Letter {
    Gen gen = Gen::Axis;
    int index = 0;  // 0 for Axis
    int exp = 1;    // never zero
    bool operator==(const Letter&) const = default;
};

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& msg, std::size_t pos)
        : std::runtime_error(msg + " at position " + std::to_string(pos)), pos_(pos) {}
    std::size_t position() const { return pos_; }

private:
    std::size_t pos_;
};

class RangeError : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

// A word in B_{1,n}; Loop and PrimedLoop letters are shorthand that
// expand_loops rewrites into Axis and Sigma letters.
struct MixedBraidWord {
    int n = 1;
    std::vector<Letter> letters;

    bool operator==(const MixedBraidWord&) const = default;

    // Smallest strand count able to hold every letter.
    int min_strands() const;
    // Throws RangeError when some letter does not fit into n strands.
    void check_range() const;
    // Adjacent letters with equal generator are combined; zero exponents vanish.
    MixedBraidWord merged() const;
    // Signed count of Sigma letters after loop expansion.
    int exponent_sum() const;
    bool has_loops() const;

    MixedBraidWord concat(const MixedBraidWord& o) const;
    MixedBraidWord inverse() const;

    std::string str() const;
    nlohmann::json to_json() const;
    static MixedBraidWord from_json(const nlohmann::json& j);
};

// Grammar: whitespace separated terms, term := base ['^' int],
// base := 't' | 'g'nat | 't'nat | 't'nat'''. "1" is the empty word and a
// middle dot separator is ignored. With n unset the strand count is inferred.
MixedBraidWord parse_word(std::string_view text, std::optional<int> n = std::nullopt);

std::string letter_str(const Letter& l);

// Rewrites t_i^k and t'_i^k into their defining words.
MixedBraidWord expand_loops(const MixedBraidWord& w);

// Every exponent negated: sigma_i -> sigma_i^-1 and loop exponents k -> -k.
MixedBraidWord f_map(const MixedBraidWord& w);

}  // namespace lensskein::braid
