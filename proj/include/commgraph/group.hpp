#pragma once
// Finite groups as validated Cayley tables.
//
// A Group is immutable once constructed. Elements are indices 0..n-1 and the
// identity is always index 0 (construction relabels if needed). All other
// modules work in these indices; labels are display-only.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "commgraph/bits.hpp"

namespace commgraph {

struct GroupError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Cayley table has a repeated value in some row or column.
struct NotLatinSquareError : GroupError {
  NotLatinSquareError(bool in_row, int index, int value, std::string msg)
      : GroupError(std::move(msg)), in_row(in_row), index(index), value(value) {}
  bool in_row;  // false: column
  int index;    // offending row/column
  int value;    // repeated entry
};

struct NoIdentityError : GroupError {
  using GroupError::GroupError;
};

// (a*b)*c != a*(b*c) for the stored triple.
struct NotAssociativeError : GroupError {
  NotAssociativeError(int a, int b, int c, std::string msg)
      : GroupError(std::move(msg)), a(a), b(b), c(c) {}
  int a, b, c;
};

struct OrderCapExceededError : GroupError {
  OrderCapExceededError(std::size_t cap, std::string msg)
      : GroupError(std::move(msg)), cap(cap) {}
  std::size_t cap;
};

struct NotAPermutationError : GroupError {
  NotAPermutationError(int generator, std::string msg)
      : GroupError(std::move(msg)), generator(generator) {}
  int generator;  // index of the offending generator
};

struct InvalidActionError : GroupError {
  using GroupError::GroupError;
};

struct NotNormalError : GroupError {
  using GroupError::GroupError;
};

struct HypothesisViolatedError : GroupError {
  using GroupError::GroupError;
};

struct EmptyGraphError : GroupError {
  using GroupError::GroupError;
};

struct MalformedFileError : GroupError {
  MalformedFileError(int line, std::string msg)
      : GroupError(std::move(msg)), line(line) {}
  int line;  // 1-based line number
};

class Group {
 public:
  static constexpr std::size_t default_order_cap = 200000;

  // Validates: Latin square, two-sided identity, associativity. Associativity
  // is checked over all triples up to order 512 and by Light's test (triples
  // through a generating set, which suffices once the set generates) above.
  // If the identity is not element 0 the table is relabeled: identity first,
  // all other elements keeping their relative order.
  static Group from_cayley_table(const std::vector<std::vector<int>>& table,
                                 std::string name = std::string(),
                                 std::vector<std::string> labels = {});

  // Closure of the generators under composition, breadth-first from the
  // identity, so element order is the BFS discovery order. Generators act on
  // 0..degree-1. Elements get cycle-notation labels.
  static Group from_permutation_generators(
      int degree, const std::vector<std::vector<int>>& generators,
      std::string name = std::string(),
      std::size_t max_order = default_order_cap);

  int order() const { return n_; }
  int mul(int a, int b) const { return table_[a * n_ + b]; }
  int inv(int a) const { return inv_[a]; }
  // [a,b] = a^-1 b^-1 a b
  int commutator(int a, int b) const {
    return mul(mul(inv_[a], inv_[b]), mul(a, b));
  }
  // x^g = g^-1 x g
  int conjugate(int x, int g) const { return mul(mul(inv_[g], x), g); }

  int power(int a, long e) const {
    if (e < 0) return power(inv_[a], -e);
    int acc = 0, base = a;
    while (e > 0) {
      if (e & 1) acc = mul(acc, base);
      base = mul(base, base);
      e >>= 1;
    }
    return acc;
  }

  int element_order(int a) const {
    int k = 1, x = a;
    while (x != 0) {
      x = mul(x, a);
      ++k;
    }
    return k;
  }

  bool is_abelian() const {
    for (int a = 1; a < n_; ++a)
      for (int b = a + 1; b < n_; ++b)
        if (mul(a, b) != mul(b, a)) return false;
    return true;
  }

  const std::string& name() const { return name_; }
  bool has_labels() const { return !labels_.empty(); }
  std::string label(int a) const {
    if (a >= 0 && a < static_cast<int>(labels_.size())) return labels_[a];
    return std::to_string(a);
  }

  // Set for groups built from permutations; used by the perm exporter.
  bool has_perm_generators() const { return perm_degree_ > 0; }
  int perm_degree() const { return perm_degree_; }
  const std::vector<std::vector<int>>& perm_generators() const {
    return perm_gens_;
  }

  // Greedy small generating set: repeatedly adjoin the smallest element
  // outside the current closure.
  std::vector<int> generating_set() const;

 private:
  Group() = default;

  static void validate_table(const std::vector<int>& t, int n);
  static int find_identity(const std::vector<int>& t, int n);

  int n_ = 0;
  std::vector<int> table_;  // row-major n*n
  std::vector<int> inv_;
  std::string name_;
  std::vector<std::string> labels_;
  int perm_degree_ = 0;
  std::vector<std::vector<int>> perm_gens_;
};

// Subset of a group's elements as a bitmask. The parent group must outlive
// the set.
class ElementSet {
 public:
  explicit ElementSet(const Group& g) : parent_(&g), bits_(g.order()) {}
  ElementSet(const Group& g, Bitset bits) : parent_(&g), bits_(std::move(bits)) {}

  const Group& group() const { return *parent_; }
  const Bitset& bits() const { return bits_; }
  bool contains(int x) const { return bits_.test(x); }
  void add(int x) { bits_.set(x); }
  int size() const { return bits_.count(); }
  std::vector<int> elements() const { return bits_.to_vector(); }

 protected:
  const Group* parent_;
  Bitset bits_;
};

namespace detail {
// Closure under multiplication of the elements already in `bits` (assumed to
// contain the identity). Inverses come for free in a finite group.
inline void close_under_mul(const Group& g, Bitset& bits) {
  std::vector<int> members = bits.to_vector();
  std::size_t next = 0;
  while (next < members.size()) {
    int x = members[next++];
    for (std::size_t j = 0; j < members.size(); ++j) {
      int p = g.mul(x, members[j]);
      if (!bits.test(p)) {
        bits.set(p);
        members.push_back(p);
      }
      int q = g.mul(members[j], x);
      if (!bits.test(q)) {
        bits.set(q);
        members.push_back(q);
      }
    }
  }
}
}  // namespace detail

// An ElementSet verified to be a subgroup on construction. Normality with
// respect to the parent is computed on demand and cached (tri-state).
class Subgroup : public ElementSet {
 public:
  Subgroup(const Group& g, Bitset bits) : ElementSet(g, std::move(bits)) {
    if (!bits_.test(0))
      throw GroupError("subgroup must contain the identity");
    for (int x = bits_.find_first(); x >= 0; x = bits_.find_next(x))
      for (int y = bits_.find_first(); y >= 0; y = bits_.find_next(y))
        if (!bits_.test(g.mul(x, y)))
          throw GroupError("element set is not closed under multiplication");
    if (g.order() % size() != 0)
      throw GroupError("subgroup order does not divide group order");
  }

  int order() const { return size(); }

  bool is_normal() const {
    if (normal_ < 0) {
      normal_ = 1;
      const Group& g = *parent_;
      for (int h = 1; h < g.order() && normal_ == 1; ++h) {
        if (bits_.test(h)) continue;  // conjugating by members is enough to skip
        for (int x = bits_.find_first(); x >= 0; x = bits_.find_next(x)) {
          if (!bits_.test(g.conjugate(x, h))) {
            normal_ = 0;
            break;
          }
        }
      }
    }
    return normal_ == 1;
  }

 private:
  mutable int normal_ = -1;  // -1 unknown, 0 no, 1 yes
};

inline Subgroup subgroup_closure(const Group& g, const std::vector<int>& seeds) {
  Bitset bits(g.order());
  bits.set(0);
  for (int s : seeds) bits.set(s);
  detail::close_under_mul(g, bits);
  return Subgroup(g, std::move(bits));
}

inline Subgroup trivial_subgroup(const Group& g) {
  Bitset bits(g.order());
  bits.set(0);
  return Subgroup(g, std::move(bits));
}

inline Subgroup full_subgroup(const Group& g) {
  Bitset bits(g.order());
  for (int i = 0; i < g.order(); ++i) bits.set(i);
  return Subgroup(g, std::move(bits));
}

// ---- Group implementation ----

inline void Group::validate_table(const std::vector<int>& t, int n) {
  std::vector<char> seen(n);
  for (int r = 0; r < n; ++r) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int c = 0; c < n; ++c) {
      int v = t[r * n + c];
      if (v < 0 || v >= n)
        throw NotLatinSquareError(true, r, v,
                                  "row " + std::to_string(r) + " has out-of-range entry " +
                                      std::to_string(v));
      if (seen[v]++)
        throw NotLatinSquareError(true, r, v,
                                  "row " + std::to_string(r) + " repeats entry " +
                                      std::to_string(v));
    }
  }
  for (int c = 0; c < n; ++c) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int r = 0; r < n; ++r) {
      int v = t[r * n + c];
      if (seen[v]++)
        throw NotLatinSquareError(false, c, v,
                                  "column " + std::to_string(c) + " repeats entry " +
                                      std::to_string(v));
    }
  }
}

inline int Group::find_identity(const std::vector<int>& t, int n) {
  for (int e = 0; e < n; ++e) {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x)
      ok = t[e * n + x] == x && t[x * n + e] == x;
    if (ok) return e;
  }
  throw NoIdentityError("table has no two-sided identity");
}

inline std::vector<int> Group::generating_set() const {
  std::vector<int> gens;
  Bitset closed(n_);
  closed.set(0);
  for (int x = 1; x < n_; ++x) {
    if (closed.test(x)) continue;
    gens.push_back(x);
    closed.set(x);
    detail::close_under_mul(*this, closed);
    if (closed.count() == n_) break;
  }
  return gens;
}

inline Group Group::from_cayley_table(const std::vector<std::vector<int>>& table,
                                      std::string name,
                                      std::vector<std::string> labels) {
  int n = static_cast<int>(table.size());
  if (n == 0) throw GroupError("empty table");
  std::vector<int> flat;
  flat.reserve(static_cast<std::size_t>(n) * n);
  for (int r = 0; r < n; ++r) {
    if (static_cast<int>(table[r].size()) != n)
      throw NotLatinSquareError(true, r, -1,
                                "row " + std::to_string(r) + " has " +
                                    std::to_string(table[r].size()) + " entries, expected " +
                                    std::to_string(n));
    flat.insert(flat.end(), table[r].begin(), table[r].end());
  }
  validate_table(flat, n);
  int e = find_identity(flat, n);
  if (e != 0) {
    // Relabel: identity first, everything else keeps its relative order.
    std::vector<int> toNew(n);
    for (int x = 0; x < n; ++x) toNew[x] = x < e ? x + 1 : (x == e ? 0 : x);
    std::vector<int> relabeled(static_cast<std::size_t>(n) * n);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        relabeled[toNew[a] * n + toNew[b]] = toNew[flat[a * n + b]];
    flat = std::move(relabeled);
    if (!labels.empty()) {
      std::vector<std::string> l2(n);
      for (int x = 0; x < n; ++x) l2[toNew[x]] = labels[x];
      labels = std::move(l2);
    }
  }

  Group g;
  g.n_ = n;
  g.table_ = std::move(flat);
  g.name_ = std::move(name);
  g.labels_ = std::move(labels);

  if (n <= 512) {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        int ab = g.table_[a * n + b];
        for (int c = 0; c < n; ++c)
          if (g.table_[ab * n + c] != g.table_[a * n + g.table_[b * n + c]])
            throw NotAssociativeError(a, b, c, "(" + std::to_string(a) + "*" +
                                                   std::to_string(b) + ")*" + std::to_string(c) +
                                                   " != " + std::to_string(a) + "*(" +
                                                   std::to_string(b) + "*" + std::to_string(c) + ")");
      }
  } else {
    // Light's test: with S generating the table's closure, associativity of
    // all triples (a, s, b), s in S, implies associativity everywhere.
    std::vector<int> gens = g.generating_set();
    for (int s : gens)
      for (int a = 0; a < n; ++a) {
        int as = g.table_[a * n + s];
        for (int b = 0; b < n; ++b)
          if (g.table_[as * n + b] != g.table_[a * n + g.table_[s * n + b]])
            throw NotAssociativeError(a, s, b, "(" + std::to_string(a) + "*" +
                                                   std::to_string(s) + ")*" + std::to_string(b) +
                                                   " != " + std::to_string(a) + "*(" +
                                                   std::to_string(s) + "*" + std::to_string(b) + ")");
      }
  }

  g.inv_.assign(n, -1);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (g.table_[a * n + b] == 0) {
        g.inv_[a] = b;
        break;
      }
  return g;
}

namespace detail {

inline std::string cycle_label(const std::vector<int>& perm) {
  int k = static_cast<int>(perm.size());
  std::vector<char> used(k, 0);
  std::string out;
  for (int s = 0; s < k; ++s) {
    if (used[s] || perm[s] == s) continue;
    out += '(';
    int x = s;
    bool first = true;
    while (!used[x]) {
      used[x] = 1;
      if (!first) out += ' ';
      out += std::to_string(x);
      first = false;
      x = perm[x];
    }
    out += ')';
  }
  if (out.empty()) out = "()";
  return out;
}

}  // namespace detail

inline Group Group::from_permutation_generators(
    int degree, const std::vector<std::vector<int>>& generators,
    std::string name, std::size_t max_order) {
  if (degree <= 0) throw GroupError("degree must be positive");
  for (std::size_t i = 0; i < generators.size(); ++i) {
    const auto& p = generators[i];
    if (static_cast<int>(p.size()) != degree)
      throw NotAPermutationError(static_cast<int>(i),
                                 "generator " + std::to_string(i) + " has length " +
                                     std::to_string(p.size()) + ", expected " +
                                     std::to_string(degree));
    std::vector<char> seen(degree, 0);
    for (int v : p) {
      if (v < 0 || v >= degree || seen[v]++)
        throw NotAPermutationError(static_cast<int>(i),
                                   "generator " + std::to_string(i) +
                                       " is not a permutation of 0.." +
                                       std::to_string(degree - 1));
    }
  }

  std::vector<int> id(degree);
  std::iota(id.begin(), id.end(), 0);

  std::vector<std::vector<int>> elems;
  std::map<std::vector<int>, int> index;
  elems.push_back(id);
  index.emplace(id, 0);
  // BFS over right multiplication; (p*q)(x) = p(q(x)).
  for (std::size_t head = 0; head < elems.size(); ++head) {
    std::vector<int> cur = elems[head];  // copy: elems may reallocate
    for (const auto& gen : generators) {
      std::vector<int> prod(degree);
      for (int x = 0; x < degree; ++x) prod[x] = cur[gen[x]];
      if (index.emplace(prod, static_cast<int>(elems.size())).second) {
        elems.push_back(prod);
        if (elems.size() > max_order)
          throw OrderCapExceededError(max_order,
                                      "closure exceeds cap " + std::to_string(max_order));
      }
    }
  }

  int n = static_cast<int>(elems.size());
  Group g;
  g.n_ = n;
  g.table_.resize(static_cast<std::size_t>(n) * n);
  std::vector<int> prod(degree);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      for (int x = 0; x < degree; ++x) prod[x] = elems[a][elems[b][x]];
      g.table_[a * n + b] = index.at(prod);
    }
  g.inv_.assign(n, -1);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (g.table_[a * n + b] == 0) {
        g.inv_[a] = b;
        break;
      }
  g.name_ = std::move(name);
  g.labels_.reserve(n);
  for (const auto& p : elems) g.labels_.push_back(detail::cycle_label(p));
  g.perm_degree_ = degree;
  g.perm_gens_ = generators;
  return g;
}

}  // namespace commgraph
