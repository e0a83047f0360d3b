#pragma once

// Finite groups given by multiplication tables, with exact word lengths and
// geodesic witnesses computed by breadth-first search over the generating set
// closed under inverses.
//
// Table text format (`wreath-group-table v1`, # starts a comment):
//
//   wreath-group-table v1
//   order N
//   gen <name> <index>        one line per generator, lowercase name
//   table
//   <N rows of N indices>     row i, col j = i*j; identity is index 0

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "lamplight/word.hpp"

namespace lamplight {

struct GroupGenerator {
  std::string name;
  int index;
};

class FiniteGroupTable {
 public:
  // A signed generator letter together with the group element it multiplies
  // by; the letters form the generating set closed under inverses.
  struct GenStep {
    Letter letter;
    int index;
  };

  FiniteGroupTable(int order, std::vector<int> table, std::vector<GroupGenerator> generators,
                   std::string name);

  int order() const { return order_; }
  int mul(int a, int b) const { return table_[static_cast<std::size_t>(a) * order_ + b]; }
  int inverse(int a) const { return inverse_[static_cast<std::size_t>(a)]; }
  const std::string& name() const { return name_; }
  const std::vector<GroupGenerator>& generators() const { return generators_; }
  const std::vector<GenStep>& gen_steps() const { return gen_steps_; }
  const std::vector<std::string>& alphabet() const { return alphabet_; }

  int length(int x) const { return lengths_[static_cast<std::size_t>(x)]; }
  const std::vector<int>& lengths() const { return lengths_; }

  // A word of length length(x) multiplying out to x, from the BFS parents.
  Word geodesic(int x) const;

  // True when no generator or inverse increases the word length of x.
  bool is_dead_end(int x) const;

  // Element index a signed generator letter multiplies by.
  std::optional<int> gen_index(const Letter& letter) const;
  // Fold of mul from the identity; throws on letters outside the alphabet.
  int eval(const Word& word) const;

 private:
  void validate();
  void compute_lengths();

  int order_;
  std::vector<int> table_;  // row-major, order x order
  std::vector<GroupGenerator> generators_;
  std::string name_;
  std::vector<int> inverse_;
  std::vector<GenStep> gen_steps_;
  std::vector<std::string> alphabet_;
  std::vector<int> lengths_;
  std::vector<std::pair<int, int>> parent_;  // (predecessor, gen_steps index)
};

FiniteGroupTable parse_group_table(std::istream& in, std::string name);
FiniteGroupTable load_group_file(const std::string& path);
// Z_k with the single generator "a" = element 1.
FiniteGroupTable cyclic_group(int k);
// `cyclic:<k>` or a table file path.
FiniteGroupTable make_group(const std::string& spec);

}  // namespace lamplight
