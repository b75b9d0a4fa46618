#pragma once

// Slow, independent re-implementations used to cross-check the library.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <queue>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "globalize/exact.hpp"
#include "globalize/fintop.hpp"
#include "globalize/monoid.hpp"
#include "globalize/setact.hpp"

namespace oracle {

using globalize::OpenSet;

/// Topology generated by `gens`: close {∅, X} ∪ gens under pairwise ∪ and ∩ until nothing changes.
inline std::vector<OpenSet> pairwise_closure(std::size_t n, const std::vector<OpenSet>& gens) {
  std::set<OpenSet> s(gens.begin(), gens.end());
  s.insert(0);
  s.insert(globalize::full_set(n));
  bool grew = true;
  while (grew) {
    grew = false;
    const std::vector<OpenSet> cur(s.begin(), s.end());
    for (auto a : cur)
      for (auto b : cur) {
        grew |= s.insert(a | b).second;
        grew |= s.insert(a & b).second;
      }
  }
  return {s.begin(), s.end()};
}

/// All subsets of an n-set that are unions/intersections of opens, checked by brute force.
inline bool is_topology(std::size_t n, const std::vector<OpenSet>& opens) {
  std::set<OpenSet> s(opens.begin(), opens.end());
  if (!s.count(0) || !s.count(globalize::full_set(n))) return false;
  for (auto a : s)
    for (auto b : s)
      if (!s.count(a | b) || !s.count(a & b)) return false;
  return true;
}

/// Partition of X×M under the equivalence generated by (x·m, n) ~ (x, mn), by BFS on the
/// undirected relation graph. Returns the class id of each pair, classes numbered by their
/// smallest pair index.
inline std::vector<std::size_t> relation_classes(const globalize::PartialActionDatum& d) {
  const std::size_t nm = d.monoid().size(), np = d.pair_count();
  std::vector<std::vector<std::size_t>> adj(np);
  for (std::size_t x = 0; x < d.size(); ++x)
    for (std::size_t m = 0; m < nm; ++m) {
      if (!d.defined(x, m)) continue;
      const std::size_t xm = d.act(x, m);
      for (std::size_t n = 0; n < nm; ++n) {
        const std::size_t a = d.pair(xm, n), b = d.pair(x, d.monoid().mul(m, n));
        adj[a].push_back(b);
        adj[b].push_back(a);
      }
    }
  constexpr std::size_t unseen = static_cast<std::size_t>(-1);
  std::vector<std::size_t> cls(np, unseen);
  std::size_t next = 0;
  for (std::size_t s = 0; s < np; ++s) {
    if (cls[s] != unseen) continue;
    std::queue<std::size_t> q;
    q.push(s);
    cls[s] = next;
    while (!q.empty()) {
      const auto u = q.front();
      q.pop();
      for (auto v : adj[u])
        if (cls[v] == unseen) {
          cls[v] = next;
          q.push(v);
        }
    }
    ++next;
  }
  return cls;
}

/// Axioms of a partial action straight from the definition: x·e = x everywhere, and for
/// x in X_m: x·m in X_n iff x in X_mn, with equal results.
inline bool is_partial_action(const globalize::PartialActionDatum& d) {
  const auto& m = d.monoid();
  for (std::size_t x = 0; x < d.size(); ++x) {
    if (!d.defined(x, m.identity()) || d.act(x, m.identity()) != x) return false;
    for (std::size_t a = 0; a < m.size(); ++a) {
      if (!d.defined(x, a)) continue;
      const std::size_t xa = d.act(x, a);
      for (std::size_t b = 0; b < m.size(); ++b) {
        const bool lhs = d.defined(xa, b), rhs = d.defined(x, m.mul(a, b));
        if (lhs != rhs) return false;
        if (lhs && d.act(xa, b) != d.act(x, m.mul(a, b))) return false;
      }
    }
  }
  return true;
}

/// Isomorphism of global actions by trying every bijection (small carriers only).
inline bool isomorphic(const globalize::GlobalAction& a, const globalize::GlobalAction& b) {
  if (a.size() != b.size() || !(a.monoid() == b.monoid())) return false;
  std::vector<std::size_t> perm(a.size());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
  do {
    bool ok = true;
    for (std::size_t y = 0; y < a.size() && ok; ++y)
      for (std::size_t m = 0; m < a.monoid().size() && ok; ++m) ok = perm[a.apply(y, m)] == b.apply(perm[y], m);
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

/// Every vector of F_p^n, for tiny p and n.
inline std::vector<globalize::Vec> all_vectors(globalize::Field f, std::size_t n) {
  const auto p = f.characteristic();
  std::vector<globalize::Vec> out;
  std::vector<long> digits(n, 0);
  while (true) {
    globalize::Vec v;
    for (auto d : digits) v.push_back(globalize::Scalar(f, d));
    out.push_back(v);
    std::size_t i = 0;
    while (i < n && digits[i] == static_cast<long>(p) - 1) digits[i++] = 0;
    if (i == n) break;
    ++digits[i];
  }
  return out;
}

/// A random small-integer matrix.
inline globalize::Matrix random_matrix(std::mt19937_64& rng, globalize::Field f, std::size_t r, std::size_t c, int lo = -2,
                                       int hi = 2) {
  std::uniform_int_distribution<int> d(lo, hi);
  globalize::Matrix m(f, r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = globalize::Scalar(f, d(rng));
  return m;
}

/// A random invertible small-integer matrix (rejection sampling).
inline globalize::Matrix random_invertible(std::mt19937_64& rng, globalize::Field f, std::size_t n) {
  while (true) {
    auto m = random_matrix(rng, f, n, n);
    if (globalize::inverse(m)) return m;
  }
}

/// Random partial-action candidates: each (x,m) is undefined or a random point; x·e = x.
/// Only candidates that pass the axioms are kept; falls back to an induced action.
inline globalize::PartialActionDatum random_partial_action(std::mt19937_64& rng, const globalize::GlobalAction& y,
                                                           std::size_t tries = 64) {
  const auto& m = y.monoid();
  std::uniform_int_distribution<std::size_t> pick_x(0, y.size() - 1);
  std::bernoulli_distribution defined(0.6);
  for (std::size_t t = 0; t < tries; ++t) {
    std::vector<std::size_t> rho(y.size() * m.size(), globalize::PartialActionDatum::undefined);
    for (std::size_t x = 0; x < y.size(); ++x)
      for (std::size_t a = 0; a < m.size(); ++a) {
        if (a == m.identity()) rho[x * m.size() + a] = x;
        else if (defined(rng)) rho[x * m.size() + a] = pick_x(rng);
      }
    globalize::PartialActionDatum d(m, y.carrier(), rho);
    if (is_partial_action(d)) return d;
  }
  std::vector<std::size_t> subset;
  std::bernoulli_distribution keep(0.5);
  for (std::size_t i = 0; i < y.size(); ++i)
    if (keep(rng) || (i + 1 == y.size() && subset.empty())) subset.push_back(i);
  return globalize::induce_from_global(y, subset);
}

}  // namespace oracle
