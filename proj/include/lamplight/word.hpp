#pragma once

// Generator words: parsing, rendering and free inversion.
//
// Grammar: a word is a whitespace-separated list of tokens. Each token is a
// generator name, uppercased for the inverse, with an optional ^k suffix for
// a nonzero integer k; g^k expands to |k| letters of g or its inverse.

#include <string>
#include <string_view>
#include <vector>

namespace lamplight {

// One generator letter. `gen` is the lowercase generator name; sign -1 is the
// inverse and renders in uppercase.
struct Letter {
  std::string gen;
  int sign = 1;

  auto operator<=>(const Letter&) const = default;
};

using Word = std::vector<Letter>;

Word parse_word(std::string_view text, const std::vector<std::string>& alphabet);

// Letters joined by single spaces, one token per letter (no ^k compression),
// so output round-trips through parse_word.
std::string to_string(const Word& word);

// Reversed word with every sign flipped.
Word inverse(const Word& word);

}  // namespace lamplight
