#pragma once
// Structure theory over Cayley tables: centers, commutators, quotients,
// normal subgroups, Sylow subgroups, Frobenius and 2-Frobenius detection.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "commgraph/group.hpp"

namespace commgraph {

inline Subgroup center(const Group& g) {
  Bitset bits(g.order());
  for (int x = 0; x < g.order(); ++x) {
    bool central = true;
    for (int y = 1; y < g.order() && central; ++y)
      central = g.mul(x, y) == g.mul(y, x);
    if (central) bits.set(x);
  }
  return Subgroup(g, std::move(bits));
}

inline Subgroup centralizer(const Group& g, int x) {
  Bitset bits(g.order());
  for (int y = 0; y < g.order(); ++y)
    if (g.mul(x, y) == g.mul(y, x)) bits.set(y);
  return Subgroup(g, std::move(bits));
}

// All commutator values [x,y]. Not closed under multiplication in general;
// closing it gives the derived subgroup.
inline ElementSet commutator_set(const Group& g) {
  ElementSet s(g);
  for (int x = 0; x < g.order(); ++x)
    for (int y = x; y < g.order(); ++y) {
      int c = g.commutator(x, y);
      s.add(c);
      s.add(g.inv(c));  // [y,x] = [x,y]^-1
    }
  return s;
}

inline Subgroup derived_subgroup(const Group& g) {
  Bitset bits = commutator_set(g).bits();
  detail::close_under_mul(g, bits);
  return Subgroup(g, std::move(bits));
}

// D_G(x) = {d : [d,x] in Z(G)}; contains C_G(x), equals it when no
// nontrivial commutator value is central.
inline Subgroup almost_centralizer(const Group& g, int x, const Subgroup& z) {
  Bitset bits(g.order());
  for (int d = 0; d < g.order(); ++d)
    if (z.contains(g.commutator(d, x))) bits.set(d);
  return Subgroup(g, std::move(bits));
}

inline Subgroup almost_centralizer(const Group& g, int x) {
  return almost_centralizer(g, x, center(g));
}

// ---- quotients ----

struct QuotientMap {
  const Group* source = nullptr;
  Group group;                 // the quotient
  std::vector<int> projection; // element -> quotient element
};

inline QuotientMap quotient(const Group& g, const Subgroup& n, std::string name = std::string()) {
  if (!n.is_normal()) throw NotNormalError("quotient by a non-normal subgroup");
  int order = g.order();
  std::vector<int> coset(order, -1);
  std::vector<int> reps;
  for (int x = 0; x < order; ++x) {
    if (coset[x] >= 0) continue;
    int id = static_cast<int>(reps.size());
    reps.push_back(x);  // x is the smallest member of its coset
    for (int y = n.bits().find_first(); y >= 0; y = n.bits().find_next(y))
      coset[g.mul(x, y)] = id;
  }
  int m = static_cast<int>(reps.size());
  std::vector<std::vector<int>> t(m, std::vector<int>(m));
  std::vector<std::string> labels(m);
  for (int i = 0; i < m; ++i) {
    labels[i] = g.label(reps[i]) + "N";
    for (int j = 0; j < m; ++j) t[i][j] = coset[g.mul(reps[i], reps[j])];
  }
  if (name.empty()) name = g.name().empty() ? "quotient" : g.name() + "/N";
  return QuotientMap{&g, Group::from_cayley_table(t, std::move(name), labels),
                     std::move(coset)};
}

// Pullback of Z(G/Z) along the projection.
inline Subgroup second_center(const Group& g) {
  Subgroup z = center(g);
  if (z.size() == g.order()) return z;
  QuotientMap q = quotient(g, z, "Z2aux");
  Subgroup zq = center(q.group);
  Bitset bits(g.order());
  for (int x = 0; x < g.order(); ++x)
    if (zq.contains(q.projection[x])) bits.set(x);
  return Subgroup(g, std::move(bits));
}

// ---- conjugacy classes and normal subgroups ----

inline std::vector<std::vector<int>> conjugacy_classes(const Group& g) {
  std::vector<std::vector<int>> classes;
  std::vector<char> seen(g.order(), 0);
  for (int x = 0; x < g.order(); ++x) {
    if (seen[x]) continue;
    std::vector<int> cls;
    for (int h = 0; h < g.order(); ++h) {
      int y = g.conjugate(x, h);
      if (!seen[y]) {
        seen[y] = 1;
        cls.push_back(y);
      }
    }
    std::sort(cls.begin(), cls.end());
    classes.push_back(std::move(cls));
  }
  return classes;  // class of the identity comes first
}

struct NormalSubgroupList {
  std::vector<Subgroup> subgroups;  // sorted by (order, membership mask)
  bool exhaustive = true;
};

// Normal subgroups are exactly the subgroups that are unions of conjugacy
// classes. Enumerated by depth-first search over class subsets: each node
// holds a multiplicatively closed class union; children adjoin one new class
// and reclose; a branch is pruned (canonicity) when reclosing drags in a
// class below the one just added. Groups with more than `class_budget`
// classes fall back to single-class normal closures and their pairwise
// joins, flagged non-exhaustive.
inline NormalSubgroupList normal_subgroups(const Group& g, int class_budget = 64) {
  auto classes = conjugacy_classes(g);
  int m = static_cast<int>(classes.size());
  int n = g.order();

  std::vector<Bitset> class_bits(m, Bitset(n));
  for (int i = 0; i < m; ++i)
    for (int x : classes[i]) class_bits[i].set(x);
  std::vector<int> class_of(n);
  for (int i = 0; i < m; ++i)
    for (int x : classes[i]) class_of[x] = i;

  // Close a class union under multiplication; returns the closed class mask.
  auto close_classes = [&](std::uint64_t cm) {
    Bitset bits(n);
    for (int i = 0; i < m && i < 64; ++i)
      if (cm >> i & 1) bits |= class_bits[i];
    detail::close_under_mul(g, bits);
    std::uint64_t out = 0;
    bits.for_each([&](int x) { out |= std::uint64_t{1} << class_of[x]; });
    return std::pair<std::uint64_t, Bitset>(out, std::move(bits));
  };

  NormalSubgroupList result;
  std::set<std::uint64_t> found;

  if (m > class_budget) {
    result.exhaustive = false;
    std::vector<Bitset> atoms;  // normal closures of the single classes
    for (int i = 1; i < m; ++i) {
      Bitset bits(n);
      bits.set(0);
      bits |= class_bits[i];
      detail::close_under_mul(g, bits);
      atoms.push_back(std::move(bits));
    }
    std::set<Bitset> dedup;
    Bitset triv(n);
    triv.set(0);
    dedup.insert(triv);
    for (const Bitset& a : atoms) dedup.insert(a);
    for (const Bitset& a : atoms)
      for (const Bitset& b : atoms) {
        Bitset u = a;
        u |= b;
        detail::close_under_mul(g, u);
        dedup.insert(u);
      }
    Bitset all(n);
    for (int x = 0; x < n; ++x) all.set(x);
    dedup.insert(all);
    for (const Bitset& bits : dedup) result.subgroups.emplace_back(g, bits);
  } else {
    std::vector<std::pair<std::uint64_t, Bitset>> stack;
    stack.push_back(close_classes(1));  // identity class alone
    while (!stack.empty()) {
      auto [cm, bits] = stack.back();
      stack.pop_back();
      if (!found.insert(cm).second) continue;
      result.subgroups.emplace_back(g, bits);
      for (int i = 1; i < m; ++i) {
        if (cm >> i & 1) continue;
        auto child = close_classes(cm | (std::uint64_t{1} << i));
        // canonicity: adjoining class i must not pull in a class below i
        std::uint64_t below = (std::uint64_t{1} << i) - 1;
        if ((child.first & below & ~cm) == 0) stack.push_back(std::move(child));
      }
    }
  }

  std::sort(result.subgroups.begin(), result.subgroups.end(),
            [](const Subgroup& a, const Subgroup& b) {
              if (a.size() != b.size()) return a.size() < b.size();
              return a.bits() < b.bits();
            });
  // The DFS can reach the same subgroup once per insertion order; dedupe.
  result.subgroups.erase(
      std::unique(result.subgroups.begin(), result.subgroups.end(),
                  [](const Subgroup& a, const Subgroup& b) { return a.bits() == b.bits(); }),
      result.subgroups.end());
  return result;
}

// ---- series, solvability, nilpotency ----

namespace detail {

inline Bitset bracket_closure(const Group& g, const Bitset& a, const Bitset& b) {
  Bitset bits(g.order());
  bits.set(0);
  a.for_each([&](int x) {
    b.for_each([&](int y) { bits.set(g.commutator(x, y)); });
  });
  close_under_mul(g, bits);
  return bits;
}

}  // namespace detail

inline std::vector<Subgroup> derived_series(const Group& g) {
  std::vector<Subgroup> series{full_subgroup(g)};
  while (true) {
    const Bitset& cur = series.back().bits();
    Bitset next = detail::bracket_closure(g, cur, cur);
    if (next == cur) break;
    series.emplace_back(g, std::move(next));
    if (series.back().size() == 1) break;
  }
  return series;
}

inline std::vector<Subgroup> lower_central_series(const Group& g) {
  Bitset all(g.order());
  for (int x = 0; x < g.order(); ++x) all.set(x);
  std::vector<Subgroup> series{full_subgroup(g)};
  while (true) {
    const Bitset& cur = series.back().bits();
    Bitset next = detail::bracket_closure(g, cur, all);
    if (next == cur) break;
    series.emplace_back(g, std::move(next));
    if (series.back().size() == 1) break;
  }
  return series;
}

inline bool is_solvable(const Group& g) { return derived_series(g).back().size() == 1; }

inline bool is_nilpotent(const Group& g) {
  return lower_central_series(g).back().size() == 1;
}

// ---- Sylow subgroups ----

inline Subgroup normalizer(const Group& g, const Subgroup& s) {
  Bitset bits(g.order());
  for (int h = 0; h < g.order(); ++h) {
    bool ok = true;
    for (int x = s.bits().find_first(); x >= 0 && ok; x = s.bits().find_next(x))
      ok = s.contains(g.conjugate(x, h));
    if (ok) bits.set(h);
  }
  return Subgroup(g, std::move(bits));
}

namespace detail {

inline int prime_part(int n, int p) {
  int pp = 1;
  while (n % p == 0) {
    n /= p;
    pp *= p;
  }
  return pp;
}

// g^(m) where m is the largest divisor of ord(g) coprime to p; the result
// has p-power order.
inline int p_part_of_element(const Group& g, int x, int p) {
  int ord = g.element_order(x);
  int m = ord;
  while (m % p == 0) m /= p;
  return g.power(x, m);
}

}  // namespace detail

// Iterative normalizer growth: grow a p-subgroup P by adjoining a p-element
// of N_G(P) outside P until |P| is the full p-part. Such an element exists
// whenever P is not yet Sylow, because N_G(P)/P then has order divisible
// by p.
inline Subgroup sylow_subgroup(const Group& g, int p) {
  int target = detail::prime_part(g.order(), p);
  if (target == 1) throw std::invalid_argument("sylow_subgroup: p does not divide |G|");

  int seed = 0;
  for (int x = 1; x < g.order(); ++x) {
    int y = detail::p_part_of_element(g, x, p);
    if (y != 0) {
      seed = y;
      break;
    }
  }
  Subgroup sub = subgroup_closure(g, {seed});
  while (sub.size() < target) {
    Subgroup nrm = normalizer(g, sub);
    int adjoin = -1;
    for (int h = nrm.bits().find_first(); h >= 0; h = nrm.bits().find_next(h)) {
      if (sub.contains(h)) continue;
      int y = detail::p_part_of_element(g, h, p);
      if (y != 0 && !sub.contains(y)) {
        adjoin = y;
        break;
      }
    }
    if (adjoin < 0)
      throw GroupError("sylow_subgroup: growth stalled");  // unreachable for a valid table
    std::vector<int> seeds = sub.elements();
    seeds.push_back(adjoin);
    sub = subgroup_closure(g, seeds);
  }
  return sub;
}

inline std::vector<int> prime_divisors(int n) {
  std::vector<int> ps;
  for (int p = 2; p * p <= n; ++p)
    if (n % p == 0) {
      ps.push_back(p);
      while (n % p == 0) n /= p;
    }
  if (n > 1) ps.push_back(n);
  return ps;
}

// Abelian Sylow subgroups for every prime divisor. One Sylow subgroup per
// prime suffices: they are all conjugate, and abelianness is conjugation
// invariant.
inline bool is_A_group(const Group& g) {
  for (int p : prime_divisors(g.order())) {
    Subgroup s = sylow_subgroup(g, p);
    std::vector<int> elems = s.elements();
    for (std::size_t i = 0; i < elems.size(); ++i)
      for (std::size_t j = i + 1; j < elems.size(); ++j)
        if (g.mul(elems[i], elems[j]) != g.mul(elems[j], elems[i])) return false;
  }
  return true;
}

// ---- induced subgroup groups ----

struct InducedGroup {
  Group group;
  std::vector<int> to_parent;    // induced index -> parent element
  std::vector<int> from_parent;  // parent element -> induced index or -1
};

inline InducedGroup induced_group(const Group& g, const Subgroup& s,
                                  std::string name = std::string()) {
  std::vector<int> elems = s.elements();
  int m = static_cast<int>(elems.size());
  std::vector<int> from(g.order(), -1);
  for (int i = 0; i < m; ++i) from[elems[i]] = i;
  std::vector<std::vector<int>> t(m, std::vector<int>(m));
  std::vector<std::string> labels(m);
  for (int i = 0; i < m; ++i) {
    labels[i] = g.label(elems[i]);
    for (int j = 0; j < m; ++j) t[i][j] = from[g.mul(elems[i], elems[j])];
  }
  if (name.empty()) name = (g.name().empty() ? "sub" : g.name() + ".sub") + std::to_string(m);
  InducedGroup out{Group::from_cayley_table(t, std::move(name), labels),
                   std::move(elems), std::move(from)};
  return out;
}

// ---- Frobenius structure ----

struct FrobeniusStructure {
  Subgroup kernel;
  std::optional<Subgroup> complement;
  bool complement_search_failed = false;
};

struct TwoFrobeniusStructure {
  Subgroup k;
  Subgroup l;
};

namespace detail {

// Kernel certificate: N normal, proper and nontrivial, Hall
// (gcd(|N|, |G:N|) = 1), and C_G(x) <= N for every nontrivial x in N.
// This forces G to be Frobenius with kernel N.
inline bool frobenius_kernel_certificate(const Group& g, const Subgroup& n) {
  int sz = n.size();
  if (sz <= 1 || sz == g.order()) return false;
  int index = g.order() / sz;
  if (std::gcd(sz, index) != 1) return false;
  for (int x = n.bits().find_next(0); x >= 0; x = n.bits().find_next(x))
    for (int y = 0; y < g.order(); ++y)
      if (!n.contains(y) && g.mul(x, y) == g.mul(y, x)) return false;
  return true;
}

// Backtracking search for a subgroup of order `target` intersecting N
// trivially. Candidates are elements outside N of order dividing target.
inline std::optional<Subgroup> find_complement(const Group& g, const Subgroup& n,
                                               int target, long budget = 200000) {
  std::vector<int> cand;
  for (int x = 1; x < g.order(); ++x)
    if (!n.contains(x) && target % g.element_order(x) == 0) cand.push_back(x);

  struct Rec {
    const Group& g;
    const Subgroup& n;
    int target;
    const std::vector<int>& cand;
    long budget;
    std::optional<Subgroup> result;

    bool extend(const Subgroup& cur, std::size_t minNext) {
      if (cur.size() == target) {
        result = cur;
        return true;
      }
      for (std::size_t i = minNext; i < cand.size(); ++i) {
        if (cur.contains(cand[i])) continue;
        if (--budget < 0) return false;
        std::vector<int> seeds = cur.elements();
        seeds.push_back(cand[i]);
        Subgroup next = subgroup_closure(g, seeds);
        if (target % next.size() != 0) continue;
        bool trivial = true;
        for (int x = next.bits().find_next(0); x >= 0 && trivial;
             x = next.bits().find_next(x))
          trivial = !n.contains(x);
        if (!trivial) continue;
        if (extend(next, i + 1)) return true;
      }
      return false;
    }
  } rec{g, n, target, cand, budget, std::nullopt};

  rec.extend(trivial_subgroup(g), 0);
  return rec.result;
}

}  // namespace detail

// Textbook Frobenius test for a candidate complement: H proper, nontrivial,
// and H meets each of its distinct conjugates trivially.
inline bool frobenius_by_definition(const Group& g, const Subgroup& h) {
  if (h.size() <= 1 || h.size() == g.order()) return false;
  for (int t = 0; t < g.order(); ++t) {
    if (h.contains(t)) continue;
    for (int x = h.bits().find_next(0); x >= 0; x = h.bits().find_next(x))
      if (h.contains(g.conjugate(x, t))) return false;
  }
  return true;
}

// Scans normal subgroups in ascending size order for the kernel certificate,
// then searches for a complement and confirms it against the definition. A
// valid kernel with an exhausted complement search is still reported, flagged,
// with no complement.
inline std::optional<FrobeniusStructure> detect_frobenius(const Group& g) {
  if (g.order() == 1 || g.is_abelian()) return std::nullopt;
  // Frobenius groups are centerless: a central z would lie in C_G(x) <= N for
  // nontrivial x in N, and then C_G(z) = G would have to fit inside N.
  if (center(g).size() > 1) return std::nullopt;
  NormalSubgroupList nl = normal_subgroups(g);
  for (const Subgroup& n : nl.subgroups) {
    if (!detail::frobenius_kernel_certificate(g, n)) continue;
    FrobeniusStructure fs{n, std::nullopt, false};
    int target = g.order() / n.size();
    std::optional<Subgroup> h = detail::find_complement(g, n, target);
    if (h && frobenius_by_definition(g, *h)) {
      fs.complement = std::move(h);
    } else {
      fs.complement_search_failed = true;
    }
    return fs;
  }
  return std::nullopt;
}

// K <= L normal in G with L Frobenius with kernel K and G/K Frobenius with
// kernel L/K. Candidate pairs are scanned in ascending (|L|, |K|) order and
// the first hit wins. Certificates avoid building induced groups: K normal
// in L is inherited, and the centralizer conditions are checked in G and in
// G/K directly.
inline std::optional<TwoFrobeniusStructure> detect_2frobenius(const Group& g) {
  if (g.order() == 1 || g.is_abelian()) return std::nullopt;
  // 2-Frobenius groups are centerless for the same reason Frobenius ones are.
  if (center(g).size() > 1) return std::nullopt;
  NormalSubgroupList nl = normal_subgroups(g);
  for (const Subgroup& l : nl.subgroups) {
    if (l.size() <= 1 || l.size() >= g.order()) continue;
    for (const Subgroup& k : nl.subgroups) {
      if (k.size() <= 1 || k.size() >= l.size()) continue;
      if (!k.bits().is_subset_of(l.bits())) continue;
      // L Frobenius with kernel K: K is Hall in L and C_L(x) <= K for
      // nontrivial x in K.
      if (std::gcd(k.size(), l.size() / k.size()) != 1) continue;
      bool ok = true;
      for (int x = k.bits().find_next(0); x >= 0 && ok; x = k.bits().find_next(x))
        for (int y = l.bits().find_first(); y >= 0 && ok; y = l.bits().find_next(y))
          if (!k.contains(y) && g.mul(x, y) == g.mul(y, x)) ok = false;
      if (!ok) continue;
      // G/K Frobenius with kernel L/K.
      QuotientMap q = quotient(g, k, "2frob-aux");
      Bitset lq(q.group.order());
      for (int x = l.bits().find_first(); x >= 0; x = l.bits().find_next(x))
        lq.set(q.projection[x]);
      Subgroup lbar(q.group, std::move(lq));
      if (!detail::frobenius_kernel_certificate(q.group, lbar)) continue;
      return TwoFrobeniusStructure{k, l};
    }
  }
  return std::nullopt;
}

}  // namespace commgraph
