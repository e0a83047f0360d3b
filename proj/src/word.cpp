#include "lamplight/word.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <stdexcept>

namespace lamplight {

namespace {

constexpr std::size_t kMaxExpandedLetters = 1'000'000;

std::string lowercased(std::string_view token) {
  std::string out(token);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

bool all_lower(std::string_view s) {
  return std::all_of(s.begin(), s.end(), [](unsigned char c) { return !std::isupper(c); });
}

bool all_upper(std::string_view s) {
  return std::all_of(s.begin(), s.end(), [](unsigned char c) { return !std::islower(c); });
}

long long parse_exponent(std::string_view text, std::string_view token) {
  long long value = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last) {
    throw std::invalid_argument("malformed exponent in token '" + std::string(token) + "'");
  }
  if (value == 0) {
    throw std::invalid_argument("exponent 0 in token '" + std::string(token) + "'");
  }
  return value;
}

}  // namespace

Word parse_word(std::string_view text, const std::vector<std::string>& alphabet) {
  Word word;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    if (i >= text.size()) break;
    std::size_t start = i;
    while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    std::string_view token = text.substr(start, i - start);

    std::string_view name_part = token;
    long long exponent = 1;
    if (auto caret = token.find('^'); caret != std::string_view::npos) {
      name_part = token.substr(0, caret);
      exponent = parse_exponent(token.substr(caret + 1), token);
    }

    int case_sign;
    if (!name_part.empty() && all_lower(name_part)) {
      case_sign = 1;
    } else if (!name_part.empty() && all_upper(name_part)) {
      case_sign = -1;
    } else {
      throw std::invalid_argument("unknown generator '" + std::string(name_part) + "'");
    }
    std::string name = lowercased(name_part);
    if (std::find(alphabet.begin(), alphabet.end(), name) == alphabet.end()) {
      throw std::invalid_argument("unknown generator '" + std::string(name_part) + "'");
    }

    int sign = exponent < 0 ? -case_sign : case_sign;
    auto count = static_cast<unsigned long long>(exponent < 0 ? -exponent : exponent);
    if (word.size() + count > kMaxExpandedLetters) {
      throw std::invalid_argument("word expands to more than 1000000 letters");
    }
    for (unsigned long long k = 0; k < count; ++k) word.push_back(Letter{name, sign});
  }
  return word;
}

std::string to_string(const Word& word) {
  std::string out;
  for (const Letter& letter : word) {
    if (!out.empty()) out += ' ';
    if (letter.sign > 0) {
      out += letter.gen;
    } else {
      for (char c : letter.gen) out += static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    }
  }
  return out;
}

Word inverse(const Word& word) {
  Word out;
  out.reserve(word.size());
  for (auto it = word.rbegin(); it != word.rend(); ++it) out.push_back(Letter{it->gen, -it->sign});
  return out;
}

}  // namespace lamplight
