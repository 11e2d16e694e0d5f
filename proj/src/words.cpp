#include "e6/words.hpp"

#include <cctype>
#include <stdexcept>

namespace e6 {

std::vector<Token> tokenize(const std::string& word) {
    std::vector<Token> out;
    if (word.empty() || word == "1") return out;
    std::size_t i = 0;
    while (i < word.size()) {
        char c = word[i];
        if (std::isspace(static_cast<unsigned char>(c)) || c == '*' || c == '.') {
            ++i;
            continue;
        }
        if (c != 'h' && c != 'n' && c != 'w') throw std::invalid_argument("bad word '" + word + "'");
        std::size_t j = i + 1;
        if (j < word.size() && word[j] == '_') ++j;
        bool brace = j < word.size() && word[j] == '{';
        if (brace) ++j;
        std::size_t start = j;
        while (j < word.size() && std::isdigit(static_cast<unsigned char>(word[j]))) ++j;
        if (j == start) throw std::invalid_argument("missing root index in '" + word + "'");
        int k = std::stoi(word.substr(start, j - start));
        if (brace) {
            if (j >= word.size() || word[j] != '}') throw std::invalid_argument("unbalanced brace in '" + word + "'");
            ++j;
        }
        if (k < 1 || k > kPositive) throw std::invalid_argument("root index out of range in '" + word + "'");
        out.push_back({c, k});
        i = j;
    }
    return out;
}

Elt parse_weyl_word(const WeylGroup& w, const std::string& word) {
    std::vector<int> idx;
    for (const Token& t : tokenize(word)) {
        if (t.letter == 'h') throw std::invalid_argument("h letters have trivial Weyl image: '" + word + "'");
        idx.push_back(t.index);
    }
    return w.from_root_word(idx);
}

TitsElement parse_tits_word(const TitsGroup& tg, const std::string& word) {
    TitsElement x = tg.identity();
    for (const Token& t : tokenize(word)) {
        if (t.letter == 'w') throw std::invalid_argument("use n letters for Tits words: '" + word + "'");
        x = tg.mul(x, t.letter == 'h' ? tg.h_root(t.index - 1) : tg.n(t.index - 1));
    }
    return x;
}

TitsElement tits_word_of(const TitsGroup& tg, const std::string& weyl_word) {
    TitsElement x = tg.identity();
    for (const Token& t : tokenize(weyl_word)) {
        if (t.letter == 'h') throw std::invalid_argument("unexpected h letter in '" + weyl_word + "'");
        x = tg.mul(x, tg.n(t.index - 1));
    }
    return x;
}

std::string hbits_to_string(HBits bits) {
    if (!bits) return "1";
    std::string s;
    for (int i = 0; i < 6; ++i)
        if (bits >> i & 1) s += "h" + std::to_string(i + 1);
    return s;
}

}  // namespace e6
