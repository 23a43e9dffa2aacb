#pragma once
// Constructions for the built-in group families and the products used to
// combine them. Every builder returns its table through Group::from_cayley_table
// so construction and validation share one path.

#include <array>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "commgraph/group.hpp"

namespace commgraph {

inline Group cyclic(int n) {
  if (n < 1) throw std::invalid_argument("cyclic: order must be >= 1");
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  std::vector<std::string> labels(n);
  for (int a = 0; a < n; ++a) {
    labels[a] = std::to_string(a);
    for (int b = 0; b < n; ++b) t[a][b] = (a + b) % n;
  }
  return Group::from_cayley_table(t, "cyclic:" + std::to_string(n), labels);
}

// Order 2n: indices 0..n-1 are r^i, n..2n-1 are r^i s, with s r s = r^-1.
inline Group dihedral(int n) {
  if (n < 1) throw std::invalid_argument("dihedral: n must be >= 1");
  int m = 2 * n;
  auto idx = [n](int i, int e) { return e * n + i; };
  std::vector<std::vector<int>> t(m, std::vector<int>(m));
  std::vector<std::string> labels(m);
  for (int e1 = 0; e1 < 2; ++e1)
    for (int i1 = 0; i1 < n; ++i1) {
      int a = idx(i1, e1);
      labels[a] = e1 == 0 ? (i1 == 0 ? std::string("e") : "r^" + std::to_string(i1))
                          : (i1 == 0 ? std::string("s") : "r^" + std::to_string(i1) + " s");
      for (int e2 = 0; e2 < 2; ++e2)
        for (int i2 = 0; i2 < n; ++i2) {
          // (r^i1 s^e1)(r^i2 s^e2) = r^(i1 + (-1)^e1 i2) s^(e1+e2)
          int i = ((e1 == 0 ? i1 + i2 : i1 - i2) % n + n) % n;
          t[a][idx(i2, e2)] = idx(i, e1 ^ e2);
        }
    }
  return Group::from_cayley_table(t, "dihedral:" + std::to_string(n), labels);
}

namespace detail {

inline long factorial(int n) {
  long f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

// Rank of a permutation in lexicographic order (Lehmer code).
inline int lex_rank(const std::vector<int>& p) {
  int n = static_cast<int>(p.size());
  long rank = 0;
  for (int i = 0; i < n; ++i) {
    int smaller = 0;
    for (int j = i + 1; j < n; ++j)
      if (p[j] < p[i]) ++smaller;
    rank += smaller * factorial(n - 1 - i);
  }
  return static_cast<int>(rank);
}

}  // namespace detail

// Symmetric group on 0..n-1, elements indexed by lexicographic rank, so the
// identity has rank 0. Capped at n = 7 (order 5040).
inline Group symmetric(int n) {
  if (n < 1 || n > 7) throw std::invalid_argument("symmetric: n must be in 1..7");
  long ord = detail::factorial(n);
  std::vector<std::vector<int>> perms;
  perms.reserve(ord);
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));

  int m = static_cast<int>(ord);
  std::vector<std::vector<int>> t(m, std::vector<int>(m));
  std::vector<std::string> labels(m);
  std::vector<int> prod(n);
  for (int a = 0; a < m; ++a) {
    labels[a] = detail::cycle_label(perms[a]);
    for (int b = 0; b < m; ++b) {
      for (int x = 0; x < n; ++x) prod[x] = perms[a][perms[b][x]];
      t[a][b] = detail::lex_rank(prod);
    }
  }
  return Group::from_cayley_table(t, "sym:" + std::to_string(n), labels);
}

// Quaternion group {1,-1,i,-i,j,-j,k,-k}; index = 2*axis + sign.
inline Group quaternion8() {
  auto enc = [](int sign, int axis) { return 2 * axis + sign; };
  // eps[a][b] for distinct nonzero axes: i*j = k cyclically.
  auto mulq = [&](int x, int y) {
    int sx = x & 1, ax = x >> 1, sy = y & 1, ay = y >> 1;
    if (ax == 0) return enc(sx ^ sy, ay);
    if (ay == 0) return enc(sx ^ sy, ax);
    if (ax == ay) return enc(sx ^ sy ^ 1, 0);  // i*i = -1
    // (1,2)->+3 (2,3)->+1 (3,1)->+2, reversed pairs negative
    int az = 6 - ax - ay;
    int neg = (ay == ax % 3 + 1) ? 0 : 1;
    return enc(sx ^ sy ^ neg, az);
  };
  std::vector<std::vector<int>> t(8, std::vector<int>(8));
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) t[a][b] = mulq(a, b);
  std::vector<std::string> labels = {"1", "-1", "i", "-i", "j", "-j", "k", "-k"};
  return Group::from_cayley_table(t, "q8", labels);
}

inline Group direct_product(const Group& a, const Group& b, std::string name = std::string()) {
  int na = a.order(), nb = b.order(), n = na * nb;
  auto idx = [nb](int x, int y) { return x * nb + y; };
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  std::vector<std::string> labels(n);
  for (int x1 = 0; x1 < na; ++x1)
    for (int y1 = 0; y1 < nb; ++y1) {
      int p = idx(x1, y1);
      labels[p] = "(" + a.label(x1) + "," + b.label(y1) + ")";
      for (int x2 = 0; x2 < na; ++x2)
        for (int y2 = 0; y2 < nb; ++y2)
          t[p][idx(x2, y2)] = idx(a.mul(x1, x2), b.mul(y1, y2));
    }
  if (name.empty()) name = "dp:" + a.name() + ":" + b.name();
  return Group::from_cayley_table(t, std::move(name), labels);
}

// Action of H on N by automorphisms: maps[h] is the permutation of N's
// elements given by h. Validated before use.
struct AutomorphismAction {
  const Group* n = nullptr;
  const Group* h = nullptr;
  std::vector<std::vector<int>> maps;

  void validate() const {
    if (!n || !h) throw InvalidActionError("action missing groups");
    int hn = h->order(), nn = n->order();
    if (static_cast<int>(maps.size()) != hn)
      throw InvalidActionError("action has " + std::to_string(maps.size()) +
                               " maps, expected " + std::to_string(hn));
    for (int t = 0; t < hn; ++t) {
      const auto& m = maps[t];
      if (static_cast<int>(m.size()) != nn)
        throw InvalidActionError("map " + std::to_string(t) + " has wrong size");
      std::vector<char> seen(nn, 0);
      for (int v : m)
        if (v < 0 || v >= nn || seen[v]++)
          throw InvalidActionError("map " + std::to_string(t) + " is not a permutation");
      if (m[0] != 0)
        throw InvalidActionError("map " + std::to_string(t) + " moves the identity");
      for (int x = 0; x < nn; ++x)
        for (int y = 0; y < nn; ++y)
          if (m[n->mul(x, y)] != n->mul(m[x], m[y]))
            throw InvalidActionError("map " + std::to_string(t) +
                                     " is not an automorphism at (" + std::to_string(x) +
                                     "," + std::to_string(y) + ")");
    }
    for (int x = 0; x < nn; ++x)
      if (maps[0][x] != x)
        throw InvalidActionError("identity of H must act trivially");
    for (int t = 0; t < hn; ++t)
      for (int u = 0; u < hn; ++u) {
        int tu = h->mul(t, u);
        for (int x = 0; x < nn; ++x)
          if (maps[tu][x] != maps[t][maps[u][x]])
            throw InvalidActionError("action is not a homomorphism at (" +
                                     std::to_string(t) + "," + std::to_string(u) + ")");
      }
  }
};

// (n1,h1)(n2,h2) = (n1 * maps[h1](n2), h1 h2); index = n*|H| + h.
// With the trivial action this coincides with direct_product(N, H) entry for
// entry (both use lexicographic pair indexing with the left factor major).
inline Group semidirect_product(const Group& n, const Group& h,
                                const AutomorphismAction& action,
                                std::string name = std::string()) {
  if (action.n != &n || action.h != &h)
    throw InvalidActionError("action does not reference the given groups");
  action.validate();
  int nn = n.order(), nh = h.order(), m = nn * nh;
  auto idx = [nh](int x, int t) { return x * nh + t; };
  std::vector<std::vector<int>> t(m, std::vector<int>(m));
  std::vector<std::string> labels(m);
  for (int x1 = 0; x1 < nn; ++x1)
    for (int t1 = 0; t1 < nh; ++t1) {
      int p = idx(x1, t1);
      labels[p] = "(" + n.label(x1) + "," + h.label(t1) + ")";
      for (int x2 = 0; x2 < nn; ++x2)
        for (int t2 = 0; t2 < nh; ++t2)
          t[p][idx(x2, t2)] = idx(n.mul(x1, action.maps[t1][x2]), h.mul(t1, t2));
    }
  if (name.empty()) name = "sdp:" + n.name() + ":" + h.name();
  return Group::from_cayley_table(t, std::move(name), labels);
}

namespace detail {

inline bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

inline int pow_mod(int b, int e, int m) {
  long acc = 1, base = b % m;
  while (e > 0) {
    if (e & 1) acc = acc * base % m;
    base = base * base % m;
    e >>= 1;
  }
  return static_cast<int>(acc);
}

inline int multiplicative_order(int t, int p) {
  int k = 1, x = t % p;
  while (x != 1) {
    x = static_cast<int>(static_cast<long>(x) * t % p);
    ++k;
  }
  return k;
}

// Smallest t in 2..p-1 with multiplicative order exactly d mod p.
inline int smallest_of_order(int d, int p) {
  for (int t = 2; t < p; ++t)
    if (multiplicative_order(t, p) == d) return t;
  throw std::invalid_argument("no element of order " + std::to_string(d) +
                              " mod " + std::to_string(p));
}

}  // namespace detail

// Extraspecial group of order p^3 and exponent p (odd p):
// (a,b,c)(a',b',c') = (a+a', b+b', c+c'+a*b'); index = a*p^2 + b*p + c.
inline Group extraspecial_p3(int p) {
  if (!detail::is_prime(p) || p == 2)
    throw std::invalid_argument("extraspecial_p3: p must be an odd prime");
  int m = p * p * p;
  auto idx = [p](int a, int b, int c) { return (a * p + b) * p + c; };
  std::vector<std::vector<int>> t(m, std::vector<int>(m));
  std::vector<std::string> labels(m);
  for (int a = 0; a < p; ++a)
    for (int b = 0; b < p; ++b)
      for (int c = 0; c < p; ++c) {
        int x = idx(a, b, c);
        labels[x] = "(" + std::to_string(a) + "," + std::to_string(b) + "," +
                    std::to_string(c) + ")";
        for (int a2 = 0; a2 < p; ++a2)
          for (int b2 = 0; b2 < p; ++b2)
            for (int c2 = 0; c2 < p; ++c2)
              t[x][idx(a2, b2, c2)] =
                  idx((a + a2) % p, (b + b2) % p, (c + c2 + a * b2) % p);
      }
  return Group::from_cayley_table(t, "heis:" + std::to_string(p), labels);
}

// extraspecial_p3(p) extended by the order-q automorphism
// sigma(a,b,c) = (t a, t^-1 b, c), where t is the smallest integer of
// multiplicative order q mod p. sigma centralizes the center.
inline Group extraspecial_frobenius_quotient(int p, int q) {
  if (!detail::is_prime(p) || p == 2)
    throw std::invalid_argument("extraspecial_frobenius_quotient: p must be an odd prime");
  if (q < 2 || (p - 1) % q != 0)
    throw std::invalid_argument("extraspecial_frobenius_quotient: q must divide p-1");
  Group pgroup = extraspecial_p3(p);
  Group cq = cyclic(q);
  int t = detail::smallest_of_order(q, p);
  int tinv = detail::pow_mod(t, p - 2, p);

  AutomorphismAction action;
  action.n = &pgroup;
  action.h = &cq;
  action.maps.assign(q, std::vector<int>(pgroup.order()));
  auto idx = [p](int a, int b, int c) { return (a * p + b) * p + c; };
  int tk = 1, tkinv = 1;
  for (int k = 0; k < q; ++k) {
    for (int a = 0; a < p; ++a)
      for (int b = 0; b < p; ++b)
        for (int c = 0; c < p; ++c)
          action.maps[k][idx(a, b, c)] = idx(a * tk % p, b * tkinv % p, c);
    tk = tk * t % p;
    tkinv = tkinv * tinv % p;
  }
  return semidirect_product(pgroup, cq, action,
                            "heisq:" + std::to_string(p) + ":" + std::to_string(q));
}

// GL(2,3) by exhaustive enumeration. A matrix [[a,b],[c,d]] is encoded as
// 27a+9b+3c+d; invertible matrices are indexed in increasing encoded order
// (the identity is moved to index 0 by table normalization).
inline Group gl2_3() {
  struct M {
    int a, b, c, d;
  };
  std::vector<M> mats;
  std::vector<std::string> labels;
  for (int code = 0; code < 81; ++code) {
    int a = code / 27, b = code / 9 % 3, c = code / 3 % 3, d = code % 3;
    if (((a * d - b * c) % 3 + 3) % 3 != 0) {
      mats.push_back({a, b, c, d});
      labels.push_back("[[" + std::to_string(a) + "," + std::to_string(b) + "],[" +
                       std::to_string(c) + "," + std::to_string(d) + "]]");
    }
  }
  int n = static_cast<int>(mats.size());
  auto code_of = [](const M& m) { return ((m.a * 3 + m.b) * 3 + m.c) * 3 + m.d; };
  std::vector<int> index_of_code(81, -1);
  for (int i = 0; i < n; ++i) index_of_code[code_of(mats[i])] = i;
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const M &x = mats[i], &y = mats[j];
      M z{(x.a * y.a + x.b * y.c) % 3, (x.a * y.b + x.b * y.d) % 3,
          (x.c * y.a + x.d * y.c) % 3, (x.c * y.b + x.d * y.d) % 3};
      t[i][j] = index_of_code[code_of(z)];
    }
  return Group::from_cayley_table(t, "gl2_3", labels);
}

// Frobenius group C_p . C_d with d | p-1, the complement acting through the
// smallest t of multiplicative order d mod p.
inline Group frobenius_pd(int p, int d) {
  if (!detail::is_prime(p)) throw std::invalid_argument("frob: p must be prime");
  if (d < 2 || (p - 1) % d != 0)
    throw std::invalid_argument("frob: d must divide p-1 and be >= 2");
  Group cp = cyclic(p);
  Group cd = cyclic(d);
  int t = detail::smallest_of_order(d, p);
  AutomorphismAction action;
  action.n = &cp;
  action.h = &cd;
  action.maps.assign(d, std::vector<int>(p));
  int tk = 1;
  for (int k = 0; k < d; ++k) {
    for (int x = 0; x < p; ++x) action.maps[k][x] = x * tk % p;
    tk = tk * t % p;
  }
  return semidirect_product(cp, cd, action,
                            "frob:" + std::to_string(p) + ":" + std::to_string(d));
}

// ---- builtin registry ----
//
// Grammar (fixed arity per head, so nesting is unambiguous):
//   cyclic:N | dihedral:N | sym:N | q8 | heis:P | heisq:P:Q | gl2_3
//   | dp:A:B | frob:P:D        where A, B are themselves builtin specs

namespace detail {

inline int parse_int_token(const std::vector<std::string>& toks, std::size_t& pos,
                           const std::string& head) {
  if (pos >= toks.size())
    throw GroupError("builtin '" + head + "' expects a numeric argument");
  const std::string& s = toks[pos++];
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
    throw GroupError("builtin '" + head + "': bad numeric argument '" + s + "'");
  return std::atoi(s.c_str());
}

inline Group parse_builtin(const std::vector<std::string>& toks, std::size_t& pos) {
  if (pos >= toks.size()) throw GroupError("empty builtin spec");
  std::string head = toks[pos++];
  if (head == "cyclic") return cyclic(parse_int_token(toks, pos, head));
  if (head == "dihedral") return dihedral(parse_int_token(toks, pos, head));
  if (head == "sym") return symmetric(parse_int_token(toks, pos, head));
  if (head == "q8") return quaternion8();
  if (head == "heis") return extraspecial_p3(parse_int_token(toks, pos, head));
  if (head == "heisq") {
    int p = parse_int_token(toks, pos, head);
    int q = parse_int_token(toks, pos, head);
    return extraspecial_frobenius_quotient(p, q);
  }
  if (head == "gl2_3") return gl2_3();
  if (head == "dp") {
    Group a = parse_builtin(toks, pos);
    Group b = parse_builtin(toks, pos);
    return direct_product(a, b, "dp:" + a.name() + ":" + b.name());
  }
  if (head == "frob") {
    int p = parse_int_token(toks, pos, head);
    int d = parse_int_token(toks, pos, head);
    return frobenius_pd(p, d);
  }
  throw GroupError("unknown builtin '" + head + "'");
}

}  // namespace detail

inline Group build_builtin(const std::string& spec) {
  std::vector<std::string> toks;
  std::size_t start = 0;
  while (start <= spec.size()) {
    std::size_t colon = spec.find(':', start);
    if (colon == std::string::npos) {
      toks.push_back(spec.substr(start));
      break;
    }
    toks.push_back(spec.substr(start, colon - start));
    start = colon + 1;
  }
  std::size_t pos = 0;
  try {
    Group g = detail::parse_builtin(toks, pos);
    if (pos != toks.size())
      throw GroupError("trailing tokens in builtin spec '" + spec + "'");
    return g;
  } catch (const std::invalid_argument& e) {
    throw GroupError("builtin '" + spec + "': " + e.what());
  }
}

inline std::vector<std::string> builtin_patterns() {
  return {"cyclic:N", "dihedral:N (order 2N)", "sym:N (N <= 7)", "q8",
          "heis:P (extraspecial P^3, exponent P)",
          "heisq:P:Q (heis:P extended by an order-Q automorphism, Q | P-1)",
          "gl2_3", "dp:A:B (direct product of two specs)",
          "frob:P:D (C_P . C_D Frobenius, D | P-1)"};
}

// Default verification corpus; spans abelian, nilpotent, Frobenius,
// 2-Frobenius, A-group and nonsolvable territory while staying desk-scale.
inline std::vector<std::string> builtin_corpus() {
  return {
      "cyclic:8",         "cyclic:12",
      "dihedral:4",       "dihedral:5",
      "dihedral:6",       "dihedral:9",
      "dihedral:12",      "dihedral:15",
      "sym:3",            "sym:4",
      "sym:5",            "sym:6",
      "q8",               "gl2_3",
      "heis:3",           "heis:5",
      "heisq:3:2",        "heisq:5:2",
      "heisq:7:2",        "heisq:7:3",
      "dp:sym:3:cyclic:2", "dp:sym:3:sym:3",
      "dp:q8:cyclic:3",   "dp:cyclic:2:cyclic:4",
      "dp:dihedral:4:cyclic:3",
      "frob:5:4",         "frob:7:3",
      "frob:7:6",         "frob:11:5",
      "frob:13:4",
  };
}

}  // namespace commgraph
