#include "lamplight/finite_group.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>

namespace lamplight {

namespace {

constexpr int kFullAssociativityLimit = 256;
constexpr int kAssociativitySamples = 10'000;

bool valid_generator_name(const std::string& name) {
  if (name.empty()) return false;
  return std::all_of(name.begin(), name.end(),
                     [](unsigned char c) { return std::islower(c) != 0; });
}

}  // namespace

FiniteGroupTable::FiniteGroupTable(int order, std::vector<int> table,
                                   std::vector<GroupGenerator> generators, std::string name)
    : order_(order), table_(std::move(table)), generators_(std::move(generators)),
      name_(std::move(name)) {
  if (order_ < 1) throw std::invalid_argument(name_ + ": order must be >= 1");
  if (table_.size() != static_cast<std::size_t>(order_) * order_) {
    throw std::invalid_argument(name_ + ": table size does not match order");
  }
  validate();
  compute_lengths();
}

void FiniteGroupTable::validate() {
  for (int v : table_) {
    if (v < 0 || v >= order_) throw std::invalid_argument(name_ + ": table entry out of range");
  }
  for (int i = 0; i < order_; ++i) {
    if (mul(0, i) != i || mul(i, 0) != i) {
      throw std::invalid_argument(name_ + ": identity axiom violated (index 0 is not the identity)");
    }
  }
  std::vector<char> seen(static_cast<std::size_t>(order_));
  for (int i = 0; i < order_; ++i) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int j = 0; j < order_; ++j) seen[static_cast<std::size_t>(mul(i, j))] = 1;
    if (std::find(seen.begin(), seen.end(), 0) != seen.end()) {
      throw std::invalid_argument(name_ + ": row " + std::to_string(i) + " is not a permutation");
    }
    std::fill(seen.begin(), seen.end(), 0);
    for (int j = 0; j < order_; ++j) seen[static_cast<std::size_t>(mul(j, i))] = 1;
    if (std::find(seen.begin(), seen.end(), 0) != seen.end()) {
      throw std::invalid_argument(name_ + ": column " + std::to_string(i) + " is not a permutation");
    }
  }

  auto check_triple = [this](int a, int b, int c) {
    if (mul(mul(a, b), c) != mul(a, mul(b, c))) {
      throw std::invalid_argument(name_ + ": associativity fails at (" + std::to_string(a) + "," +
                                  std::to_string(b) + "," + std::to_string(c) + ")");
    }
  };
  if (order_ <= kFullAssociativityLimit) {
    for (int a = 0; a < order_; ++a)
      for (int b = 0; b < order_; ++b)
        for (int c = 0; c < order_; ++c) check_triple(a, b, c);
  } else {
    std::mt19937_64 rng(0xC0FFEE);
    std::uniform_int_distribution<int> pick(0, order_ - 1);
    for (int k = 0; k < kAssociativitySamples; ++k) check_triple(pick(rng), pick(rng), pick(rng));
  }

  inverse_.assign(static_cast<std::size_t>(order_), -1);
  for (int a = 0; a < order_; ++a) {
    for (int b = 0; b < order_; ++b) {
      if (mul(a, b) == 0) {
        if (mul(b, a) != 0) {
          throw std::invalid_argument(name_ + ": element " + std::to_string(a) +
                                      " has no two-sided inverse");
        }
        inverse_[static_cast<std::size_t>(a)] = b;
        break;
      }
    }
  }

  if (generators_.empty()) throw std::invalid_argument(name_ + ": no generators given");
  for (const GroupGenerator& g : generators_) {
    if (!valid_generator_name(g.name)) {
      throw std::invalid_argument(name_ + ": generator name '" + g.name +
                                  "' must be lowercase letters");
    }
    if (g.name == "t") {
      throw std::invalid_argument(name_ + ": generator name 't' is reserved for the cursor shift");
    }
    if (g.index < 0 || g.index >= order_) {
      throw std::invalid_argument(name_ + ": generator index out of range");
    }
    if (std::count_if(generators_.begin(), generators_.end(),
                      [&](const GroupGenerator& o) { return o.name == g.name; }) > 1) {
      throw std::invalid_argument(name_ + ": duplicate generator name '" + g.name + "'");
    }
    gen_steps_.push_back(GenStep{Letter{g.name, 1}, g.index});
    if (inverse(g.index) != g.index) {
      gen_steps_.push_back(GenStep{Letter{g.name, -1}, inverse(g.index)});
    }
    alphabet_.push_back(g.name);
  }
}

void FiniteGroupTable::compute_lengths() {
  lengths_.assign(static_cast<std::size_t>(order_), -1);
  parent_.assign(static_cast<std::size_t>(order_), {-1, -1});
  lengths_[0] = 0;
  std::deque<int> queue{0};
  int reached = 1;
  while (!queue.empty()) {
    int x = queue.front();
    queue.pop_front();
    for (std::size_t s = 0; s < gen_steps_.size(); ++s) {
      int y = mul(x, gen_steps_[s].index);
      if (lengths_[static_cast<std::size_t>(y)] != -1) continue;
      lengths_[static_cast<std::size_t>(y)] = lengths_[static_cast<std::size_t>(x)] + 1;
      parent_[static_cast<std::size_t>(y)] = {x, static_cast<int>(s)};
      queue.push_back(y);
      ++reached;
    }
  }
  if (reached != order_) {
    throw std::invalid_argument(name_ + ": generating set does not generate the group (reached " +
                                std::to_string(reached) + " of " + std::to_string(order_) + ")");
  }
}

Word FiniteGroupTable::geodesic(int x) const {
  if (x < 0 || x >= order_) throw std::invalid_argument(name_ + ": element index out of range");
  Word word;
  while (x != 0) {
    auto [prev, step] = parent_[static_cast<std::size_t>(x)];
    word.push_back(gen_steps_[static_cast<std::size_t>(step)].letter);
    x = prev;
  }
  std::reverse(word.begin(), word.end());
  return word;
}

bool FiniteGroupTable::is_dead_end(int x) const {
  if (x < 0 || x >= order_) throw std::invalid_argument(name_ + ": element index out of range");
  for (const GenStep& step : gen_steps_) {
    if (length(mul(x, step.index)) > length(x)) return false;
  }
  return true;
}

std::optional<int> FiniteGroupTable::gen_index(const Letter& letter) const {
  for (const GroupGenerator& g : generators_) {
    if (g.name == letter.gen) return letter.sign > 0 ? g.index : inverse(g.index);
  }
  return std::nullopt;
}

int FiniteGroupTable::eval(const Word& word) const {
  int x = 0;
  for (const Letter& letter : word) {
    auto idx = gen_index(letter);
    if (!idx) throw std::invalid_argument(name_ + ": unknown generator '" + letter.gen + "'");
    x = mul(x, *idx);
  }
  return x;
}

namespace {

// Strips comments, returns whitespace-split tokens of the next nonblank line.
std::optional<std::vector<std::string>> next_line_tokens(std::istream& in) {
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream stream(line);
    std::vector<std::string> tokens;
    std::string tok;
    while (stream >> tok) tokens.push_back(tok);
    if (!tokens.empty()) return tokens;
  }
  return std::nullopt;
}

int parse_index(const std::string& token, const std::string& name, const char* what) {
  try {
    std::size_t used = 0;
    int value = std::stoi(token, &used);
    if (used != token.size()) throw std::invalid_argument(token);
    return value;
  } catch (const std::exception&) {
    throw std::invalid_argument(name + ": malformed " + what + " '" + token + "'");
  }
}

}  // namespace

FiniteGroupTable parse_group_table(std::istream& in, std::string name) {
  auto header = next_line_tokens(in);
  if (!header || header->size() != 2 || (*header)[0] != "wreath-group-table" ||
      (*header)[1] != "v1") {
    throw std::invalid_argument(name + ": expected header 'wreath-group-table v1'");
  }
  auto order_line = next_line_tokens(in);
  if (!order_line || order_line->size() != 2 || (*order_line)[0] != "order") {
    throw std::invalid_argument(name + ": expected 'order N'");
  }
  int order = parse_index((*order_line)[1], name, "order");

  std::vector<GroupGenerator> generators;
  std::optional<std::vector<std::string>> tokens;
  while ((tokens = next_line_tokens(in))) {
    if ((*tokens)[0] == "table") break;
    if ((*tokens)[0] != "gen" || tokens->size() != 3) {
      throw std::invalid_argument(name + ": expected 'gen <name> <index>' or 'table'");
    }
    generators.push_back(GroupGenerator{(*tokens)[1], parse_index((*tokens)[2], name, "generator index")});
  }
  if (!tokens) throw std::invalid_argument(name + ": missing 'table' section");

  std::vector<int> table;
  table.reserve(static_cast<std::size_t>(order) * static_cast<std::size_t>(order));
  for (int row = 0; row < order; ++row) {
    auto row_tokens = next_line_tokens(in);
    if (!row_tokens || row_tokens->size() != static_cast<std::size_t>(order)) {
      throw std::invalid_argument(name + ": table row " + std::to_string(row) + " needs " +
                                  std::to_string(order) + " entries");
    }
    for (const std::string& tok : *row_tokens) table.push_back(parse_index(tok, name, "table entry"));
  }
  if (next_line_tokens(in)) throw std::invalid_argument(name + ": trailing content after table");

  return FiniteGroupTable(order, std::move(table), std::move(generators), std::move(name));
}

FiniteGroupTable load_group_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open group file '" + path + "'");
  return parse_group_table(in, path);
}

FiniteGroupTable cyclic_group(int k) {
  if (k < 2) throw std::invalid_argument("cyclic group needs order >= 2");
  std::vector<int> table(static_cast<std::size_t>(k) * static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) table[static_cast<std::size_t>(i) * k + j] = (i + j) % k;
  return FiniteGroupTable(k, std::move(table), {GroupGenerator{"a", 1}},
                          "cyclic:" + std::to_string(k));
}

FiniteGroupTable make_group(const std::string& spec) {
  if (spec.rfind("cyclic:", 0) == 0) {
    return cyclic_group(parse_index(spec.substr(7), spec, "cyclic order"));
  }
  return load_group_file(spec);
}

}  // namespace lamplight
