#pragma once

#include <string>
#include <vector>

#include "e6/liealg.hpp"
#include "e6/weyl.hpp"

namespace e6 {

// A token is a letter h, n or w followed by a positive root index 1..36,
// e.g. "h2h5n6" or "w1w4w6w36".  "1" or "" is the empty word.
struct Token {
    char letter;
    int index;
};

std::vector<Token> tokenize(const std::string& word);

// w_k and n_k both map to the reflection in r_k; h_k is rejected
Elt parse_weyl_word(const WeylGroup& w, const std::string& word);
// h_k is h_{r_k}(-1); w_k is not accepted
TitsElement parse_tits_word(const TitsGroup& t, const std::string& word);
// the n-word with the same indices as a w-word
TitsElement tits_word_of(const TitsGroup& t, const std::string& weyl_word);

std::string hbits_to_string(HBits bits);

}  // namespace e6
