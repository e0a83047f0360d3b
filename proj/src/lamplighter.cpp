#include "lamplight/lamplighter.hpp"

#include <algorithm>
#include <stdexcept>

namespace lamplight {

Lamplighter::Lamplighter(int states) : states_(states) {
  if (states < 2) throw std::invalid_argument("lamplighter needs at least 2 lamp states");
}

int SupportMap::at(Position p) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), p,
                             [](const Entry& e, Position pos) { return e.first < pos; });
  return (it != entries_.end() && it->first == p) ? it->second : 0;
}

void SupportMap::set(Position p, int value) {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), p,
                             [](const Entry& e, Position pos) { return e.first < pos; });
  if (it != entries_.end() && it->first == p) {
    if (value == 0) {
      entries_.erase(it);
    } else {
      it->second = value;
    }
  } else if (value != 0) {
    entries_.insert(it, Entry{p, value});
  }
}

LampElement identity(const Lamplighter& group) { return LampElement{group, {}, 0}; }

const std::vector<std::string>& lamplighter_alphabet() {
  static const std::vector<std::string> alphabet{"a", "t"};
  return alphabet;
}

GenLetter to_gen_letter(const Letter& letter) {
  if (letter.gen == "a") return GenLetter{GenBase::Lamp, letter.sign};
  if (letter.gen == "t") return GenLetter{GenBase::Shift, letter.sign};
  throw std::invalid_argument("letter '" + letter.gen + "' is not in the lamplighter alphabet");
}

Letter to_letter(GenLetter g) {
  return Letter{g.base == GenBase::Lamp ? "a" : "t", g.sign};
}

LampElement apply_gen(const LampElement& e, GenLetter g) {
  LampElement out = e;
  if (g.base == GenBase::Shift) {
    out.cursor += g.sign;
    return out;
  }
  int n = e.group.states();
  int state = ((out.lamps.at(out.cursor) + g.sign) % n + n) % n;
  out.lamps.set(out.cursor, state);
  return out;
}

LampElement eval_word(const Lamplighter& group, const Word& word) {
  LampElement e = identity(group);
  for (const Letter& letter : word) e = apply_gen(e, to_gen_letter(letter));
  return e;
}

LampElement inverse(const LampElement& e) {
  LampElement out{e.group, {}, -e.cursor};
  int n = e.group.states();
  for (const auto& [pos, state] : e.lamps.entries()) out.lamps.set(pos - e.cursor, n - state);
  return out;
}

LampElement mirror(const LampElement& e) {
  LampElement out{e.group, {}, -e.cursor};
  for (const auto& [pos, state] : e.lamps.entries()) out.lamps.set(-pos, state);
  return out;
}

namespace detail {

std::string support_body(const SupportMap& map) {
  std::string out;
  bool first = true;
  for (const auto& [pos, value] : map.entries()) {
    if (!first) out += ',';
    first = false;
    out += std::to_string(pos);
    out += ':';
    out += std::to_string(value);
  }
  return out;
}

std::size_t hash_support(const SupportMap& map, Position cursor, std::size_t seed) {
  auto mix = [](std::size_t h, std::uint64_t v) {
    h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  };
  std::size_t h = seed;
  h = mix(h, static_cast<std::uint64_t>(cursor));
  for (const auto& [pos, value] : map.entries()) {
    h = mix(h, static_cast<std::uint64_t>(pos));
    h = mix(h, static_cast<std::uint64_t>(value));
  }
  return h;
}

}  // namespace detail

std::string to_string(const LampElement& e) {
  return "lamps={" + detail::support_body(e.lamps) + "} cursor=" + std::to_string(e.cursor);
}

std::string encode(const LampElement& e) {
  return detail::support_body(e.lamps) + "@" + std::to_string(e.cursor);
}

std::size_t LampElementHash::operator()(const LampElement& e) const {
  return detail::hash_support(e.lamps, e.cursor, static_cast<std::size_t>(e.group.states()));
}

}  // namespace lamplight
