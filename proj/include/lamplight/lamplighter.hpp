#pragma once

// Elements of the lamplighter group L_n: a finitely supported configuration
// of Z_n-valued lamps over the integer line plus a cursor position. The
// generator t shifts the cursor, the generator a turns the lamp under the
// cursor one step; lamp states are kept in [1, n-1] (0 = off is never
// stored), so equality of elements is structural equality.

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "lamplight/word.hpp"

namespace lamplight {

using Position = std::int64_t;

class Lamplighter {
 public:
  explicit Lamplighter(int states);

  int states() const { return states_; }
  // Largest distance of a lamp state from off, floor(n/2).
  int half() const { return states_ / 2; }

  bool operator==(const Lamplighter&) const = default;

 private:
  int states_;
};

// Finitely supported map position -> nonzero int, kept sorted by position.
// Used for lamp configurations (values mod n) and wreath slots (group
// element indices).
class SupportMap {
 public:
  using Entry = std::pair<Position, int>;

  int at(Position p) const;
  // value 0 erases the entry.
  void set(Position p, int value);
  const std::vector<Entry>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }
  std::size_t size() const { return entries_.size(); }
  Position min_position() const { return entries_.front().first; }
  Position max_position() const { return entries_.back().first; }

  bool operator==(const SupportMap&) const = default;

 private:
  std::vector<Entry> entries_;
};

using LampConfig = SupportMap;

struct LampElement {
  Lamplighter group{2};
  LampConfig lamps;
  Position cursor = 0;

  bool operator==(const LampElement&) const = default;
};

LampElement identity(const Lamplighter& group);

enum class GenBase { Lamp, Shift };

struct GenLetter {
  GenBase base = GenBase::Lamp;
  int sign = 1;

  auto operator<=>(const GenLetter&) const = default;
};

inline constexpr GenLetter kLampUp{GenBase::Lamp, 1};
inline constexpr GenLetter kLampDown{GenBase::Lamp, -1};
inline constexpr GenLetter kShiftRight{GenBase::Shift, 1};
inline constexpr GenLetter kShiftLeft{GenBase::Shift, -1};

// The L_n alphabet, {"a", "t"}.
const std::vector<std::string>& lamplighter_alphabet();

GenLetter to_gen_letter(const Letter& letter);
Letter to_letter(GenLetter g);

LampElement apply_gen(const LampElement& e, GenLetter g);
// Left-to-right fold of apply_gen from the identity.
LampElement eval_word(const Lamplighter& group, const Word& word);

LampElement inverse(const LampElement& e);
// The automorphism negating positions (swaps t and t^-1).
LampElement mirror(const LampElement& e);

// `lamps={p1:s1,...} cursor=m`, positions ascending.
std::string to_string(const LampElement& e);
// Compact canonical encoding `p1:s1,p2:s2@m` (`@m` alone for no lamps),
// positions ascending; used in ball dump files.
std::string encode(const LampElement& e);

struct LampElementHash {
  std::size_t operator()(const LampElement& e) const;
};

namespace detail {
std::size_t hash_support(const SupportMap& map, Position cursor, std::size_t seed);
std::string support_body(const SupportMap& map);
}  // namespace detail

}  // namespace lamplight
