#include "lensskein/braid/word.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

namespace lensskein::braid {

int MixedBraidWord::min_strands() const {
    int need = 1;
    for (const auto& l : letters) {
        switch (l.gen) {
            case Gen::Axis: break;
            case Gen::Sigma: need = std::max(need, l.index + 1); break;
            case Gen::Loop:
            case Gen::PrimedLoop: need = std::max(need, l.index + 1); break;
        }
    }
    return need;
}

void MixedBraidWord::check_range() const {
    if (n < 1) throw RangeError("strand count must be at least 1");
    for (const auto& l : letters) {
        if (l.exp == 0) throw RangeError("zero exponent in letter " + letter_str(l));
        if (l.gen == Gen::Sigma && (l.index < 1 || l.index > n - 1))
            throw RangeError("sigma index " + std::to_string(l.index) + " out of range for n=" + std::to_string(n));
        if ((l.gen == Gen::Loop || l.gen == Gen::PrimedLoop) && (l.index < 0 || l.index > n - 1))
            throw RangeError("loop index " + std::to_string(l.index) + " out of range for n=" + std::to_string(n));
    }
}

MixedBraidWord MixedBraidWord::merged() const {
    MixedBraidWord r{n, {}};
    for (const auto& l : letters) {
        if (!r.letters.empty() && r.letters.back().gen == l.gen && r.letters.back().index == l.index) {
            r.letters.back().exp += l.exp;
            if (r.letters.back().exp == 0) r.letters.pop_back();
        } else if (l.exp != 0) {
            r.letters.push_back(l);
        }
    }
    return r;
}

int MixedBraidWord::exponent_sum() const {
    int e = 0;
    for (const auto& l : letters) {
        if (l.gen == Gen::Sigma) e += l.exp;
        if (l.gen == Gen::Loop) e += 2 * l.index * l.exp;
    }
    return e;
}

bool MixedBraidWord::has_loops() const {
    return std::any_of(letters.begin(), letters.end(),
                       [](const Letter& l) { return l.gen == Gen::Loop || l.gen == Gen::PrimedLoop; });
}

MixedBraidWord MixedBraidWord::concat(const MixedBraidWord& o) const {
    MixedBraidWord r{std::max(n, o.n), letters};
    r.letters.insert(r.letters.end(), o.letters.begin(), o.letters.end());
    return r;
}

MixedBraidWord MixedBraidWord::inverse() const {
    MixedBraidWord e = expand_loops(*this);
    std::reverse(e.letters.begin(), e.letters.end());
    for (auto& l : e.letters) l.exp = -l.exp;
    return e;
}

std::string letter_str(const Letter& l) {
    std::string s;
    switch (l.gen) {
        case Gen::Axis: s = "t"; break;
        case Gen::Sigma: s = "g" + std::to_string(l.index); break;
        case Gen::Loop: s = l.index == 0 ? "t" : "t" + std::to_string(l.index); break;
        case Gen::PrimedLoop: s = "t" + std::to_string(l.index) + "'"; break;
    }
    if (l.exp != 1) s += "^" + std::to_string(l.exp);
    return s;
}

std::string MixedBraidWord::str() const {
    if (letters.empty()) return "1";
    std::string s;
    for (const auto& l : letters) {
        if (!s.empty()) s += ' ';
        s += letter_str(l);
    }
    return s;
}

nlohmann::json MixedBraidWord::to_json() const {
    nlohmann::json ls = nlohmann::json::array();
    for (const auto& l : letters) {
        std::string name;
        switch (l.gen) {
            case Gen::Axis: name = "t"; break;
            case Gen::Sigma: name = "g" + std::to_string(l.index); break;
            case Gen::Loop: name = "t" + std::to_string(l.index); break;
            case Gen::PrimedLoop: name = "t" + std::to_string(l.index) + "'"; break;
        }
        ls.push_back(nlohmann::json::array({name, l.exp}));
    }
    return {{"n", n}, {"letters", ls}};
}

MixedBraidWord MixedBraidWord::from_json(const nlohmann::json& j) {
    MixedBraidWord w;
    w.n = j.at("n").get<int>();
    std::string text;
    for (const auto& l : j.at("letters")) {
        const auto name = l.at(0).get<std::string>();
        const int e = l.at(1).get<int>();
        text += name + "^" + std::to_string(e) + " ";
    }
    return parse_word(text.empty() ? "1" : text, w.n);
}

namespace {

class Parser {
public:
    explicit Parser(std::string_view s) : s_(s) {}

    MixedBraidWord run() {
        MixedBraidWord w;
        skip();
        if (pos_ < s_.size() && s_[pos_] == '1') {
            const std::size_t at = pos_;
            ++pos_;
            skip();
            if (pos_ != s_.size()) throw ParseError("unexpected input after empty word '1'", at + 1);
            return w;
        }
        if (pos_ == s_.size()) throw ParseError("empty input", pos_);
        while (pos_ < s_.size()) {
            w.letters.push_back(term());
            skip();
        }
        return w;
    }

private:
    void skip() {
        while (pos_ < s_.size()) {
            const auto c = static_cast<unsigned char>(s_[pos_]);
            if (std::isspace(c) || c == '*' || c == '.') {
                ++pos_;
            } else if (s_.substr(pos_, 2) == "\xC2\xB7") {  // UTF-8 middle dot
                pos_ += 2;
            } else {
                break;
            }
        }
    }

    bool digit() const { return pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])); }

    int number(bool allow_sign) {
        const std::size_t start = pos_;
        if (allow_sign && pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) ++pos_;
        if (!digit()) throw ParseError("expected integer", pos_);
        while (digit()) ++pos_;
        std::string_view tok = s_.substr(start, pos_ - start);
        if (tok.front() == '+') tok.remove_prefix(1);
        int v = 0;
        auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (ec != std::errc()) throw ParseError("integer out of range", start);
        return v;
    }

    Letter term() {
        const std::size_t start = pos_;
        Letter l;
        const char c = s_[pos_];
        if (c == 't') {
            ++pos_;
            if (digit()) {
                l.index = number(false);
                l.gen = Gen::Loop;
                if (pos_ < s_.size() && s_[pos_] == '\'') {
                    ++pos_;
                    l.gen = Gen::PrimedLoop;
                }
                // t_0 = t'_0 = t
                if (l.index == 0) l.gen = Gen::Axis;
            } else {
                l.gen = Gen::Axis;
            }
        } else if (c == 'g' || c == 's') {
            ++pos_;
            if (!digit()) throw ParseError("expected generator index after '" + std::string(1, c) + "'", pos_);
            l.gen = Gen::Sigma;
            l.index = number(false);
            if (l.index < 1) throw ParseError("sigma index must be positive", start);
        } else {
            throw ParseError(std::string("unexpected character '") + c + "'", pos_);
        }
        if (pos_ < s_.size() && s_[pos_] == '^') {
            ++pos_;
            l.exp = number(true);
            if (l.exp == 0) throw ParseError("zero exponent", start);
        }
        if (pos_ < s_.size()) {
            const auto n = static_cast<unsigned char>(s_[pos_]);
            if (!std::isspace(n) && n != '*' && n != '.' && n != 0xC2 && n != 't' && n != 'g')
                throw ParseError(std::string("unexpected character '") + s_[pos_] + "'", pos_);
        }
        return l;
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

}  // namespace

MixedBraidWord parse_word(std::string_view text, std::optional<int> n) {
    MixedBraidWord w = Parser(text).run();
    w.n = n ? *n : w.min_strands();
    w.check_range();
    return w;
}

MixedBraidWord expand_loops(const MixedBraidWord& w) {
    MixedBraidWord r{w.n, {}};
    auto push = [&r](Gen g, int i, int e) { r.letters.push_back({g, g == Gen::Axis ? 0 : i, e}); };
    for (const auto& l : w.letters) {
        const bool loop = l.gen == Gen::Loop || l.gen == Gen::PrimedLoop;
        if (!loop) {
            r.letters.push_back(l);
            continue;
        }
        const int i = l.index;
        if (l.gen == Gen::PrimedLoop || i == 0) {
            for (int j = i; j >= 1; --j) push(Gen::Sigma, j, 1);
            push(Gen::Axis, 0, l.exp);
            for (int j = 1; j <= i; ++j) push(Gen::Sigma, j, -1);
            continue;
        }
        const int s = l.exp > 0 ? 1 : -1;
        for (int rep = 0; rep < std::abs(l.exp); ++rep) {
            for (int j = i; j >= 1; --j) push(Gen::Sigma, j, s);
            push(Gen::Axis, 0, s);
            for (int j = 1; j <= i; ++j) push(Gen::Sigma, j, s);
        }
    }
    return r.merged();
}

MixedBraidWord f_map(const MixedBraidWord& w) {
    MixedBraidWord r = w;
    for (auto& l : r.letters) l.exp = -l.exp;
    return r;
}

}  // namespace lensskein::braid
