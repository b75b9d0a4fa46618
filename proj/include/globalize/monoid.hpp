#pragma once

// Finite monoids given by multiplication tables.
//
// Elements are indices into a label list; every downstream structure refers to
// elements by index. Tables are validated exhaustively, so sizes are capped.

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "globalize/error.hpp"

namespace globalize {

struct Limits {
  std::size_t max_monoid = 64;
};

class FiniteMonoid {
 public:
  FiniteMonoid() = default;

  std::size_t size() const noexcept { return labels_.size(); }
  std::size_t identity() const noexcept { return identity_; }
  std::size_t mul(std::size_t a, std::size_t b) const { return table_[a * size() + b]; }
  const std::string& label(std::size_t i) const { return labels_.at(i); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::vector<std::size_t>& table() const noexcept { return table_; }

  std::optional<std::size_t> find(const std::string& label) const {
    auto it = std::find(labels_.begin(), labels_.end(), label);
    if (it == labels_.end()) return std::nullopt;
    return static_cast<std::size_t>(it - labels_.begin());
  }

  std::size_t index_of(const std::string& label) const {
    if (auto i = find(label)) return *i;
    throw Error("UnknownElement", label);
  }

  friend bool operator==(const FiniteMonoid&, const FiniteMonoid&) = default;

  friend FiniteMonoid validate_monoid(std::vector<std::string>, std::vector<std::size_t>, std::size_t,
                                      const Limits&);

 private:
  std::vector<std::string> labels_;
  std::vector<std::size_t> table_;  // row-major, table_[a*n+b] = a·b
  std::size_t identity_ = 0;
};

/// Checks indices, label uniqueness, the identity law and associativity, in
/// that order, and reports the first violation found.
inline FiniteMonoid validate_monoid(std::vector<std::string> labels, std::vector<std::size_t> table,
                                    std::size_t identity, const Limits& limits = {}) {
  const std::size_t n = labels.size();
  if (n == 0) throw Error("EmptyMonoid", "a monoid needs at least its identity");
  if (n > limits.max_monoid) {
    throw Error("CapExceeded", "monoid of size " + std::to_string(n) + " exceeds cap " +
                                   std::to_string(limits.max_monoid),
                ErrorKind::Cap);
  }
  if (std::set<std::string>(labels.begin(), labels.end()).size() != n) {
    throw Error("DuplicateLabel", "element labels must be distinct");
  }
  if (table.size() != n * n) throw Error("BadIndex", "table has " + std::to_string(table.size()) + " entries");
  for (std::size_t i = 0; i < table.size(); ++i) {
    if (table[i] >= n) {
      throw Error("BadIndex", labels[i / n] + "·" + labels[i % n] + " -> index " + std::to_string(table[i]));
    }
  }
  if (identity >= n) throw Error("BadIndex", "identity index " + std::to_string(identity));
  auto mul = [&](std::size_t a, std::size_t b) { return table[a * n + b]; };
  for (std::size_t m = 0; m < n; ++m) {
    if (mul(identity, m) != m || mul(m, identity) != m) throw Error("BadIdentity", labels[m]);
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c) {
        if (mul(mul(a, b), c) != mul(a, mul(b, c))) {
          throw Error("NotAssociative", "(" + labels[a] + "," + labels[b] + "," + labels[c] + ")");
        }
      }
  FiniteMonoid m;
  m.labels_ = std::move(labels);
  m.table_ = std::move(table);
  m.identity_ = identity;
  return m;
}

/// Inverse table when every element has a two-sided inverse.
inline std::optional<std::vector<std::size_t>> group_inverses(const FiniteMonoid& m) {
  std::vector<std::size_t> inv(m.size());
  for (std::size_t a = 0; a < m.size(); ++a) {
    bool found = false;
    for (std::size_t b = 0; b < m.size() && !found; ++b) {
      if (m.mul(a, b) == m.identity() && m.mul(b, a) == m.identity()) {
        inv[a] = b;
        found = true;
      }
    }
    if (!found) return std::nullopt;
  }
  return inv;
}

inline bool is_group(const FiniteMonoid& m) { return group_inverses(m).has_value(); }

// ---------------------------------------------------------------- builders

/// Z/n with labels e, g, g^2, ...
inline FiniteMonoid cyclic(std::size_t n) {
  if (n < 1) throw Error("BadParameter", "cyclic(n) needs n >= 1");
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back(i == 0 ? "e" : i == 1 ? "g" : "g^" + std::to_string(i));
  std::vector<std::size_t> table(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) table[a * n + b] = (a + b) % n;
  return validate_monoid(std::move(labels), std::move(table), 0);
}

/// S_n on one-line notation, sorted lexicographically (identity first);
/// the product is composition (s·t)(i) = s(t(i)).
inline FiniteMonoid symmetric(std::size_t n) {
  if (n < 1) throw Error("BadParameter", "symmetric(n) needs n >= 1");
  if (n > 4) throw Error("CapExceeded", "symmetric(n) is capped at n = 4", ErrorKind::Cap);
  std::vector<std::vector<std::size_t>> perms;
  std::vector<std::size_t> p(n);
  for (std::size_t i = 0; i < n; ++i) p[i] = i;
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  std::map<std::vector<std::size_t>, std::size_t> index;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < perms.size(); ++i) {
    index[perms[i]] = i;
    std::string s;
    for (auto x : perms[i]) s += std::to_string(x + 1);
    labels.push_back(s);
  }
  const std::size_t k = perms.size();
  std::vector<std::size_t> table(k * k);
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b) {
      std::vector<std::size_t> c(n);
      for (std::size_t i = 0; i < n; ++i) c[i] = perms[a][perms[b][i]];
      table[a * k + b] = index.at(c);
    }
  return validate_monoid(std::move(labels), std::move(table), 0);
}

/// The image of the bicyclic monoid <p, q | pq = 1> acting by partial shifts
/// on the chain {0..n-1}: p(i) = i-1, q(i) = i+1, both partial. Labels are the
/// shortest words (BFS order, p before q); the empty map appears as a word too.
inline FiniteMonoid bicyclic_truncated(std::size_t n) {
  if (n < 1) throw Error("BadParameter", "bicyclic_truncated(n) needs n >= 1");
  constexpr std::size_t undefined = static_cast<std::size_t>(-1);
  using PartialMap = std::vector<std::size_t>;
  PartialMap id(n), p(n, undefined), q(n, undefined);
  for (std::size_t i = 0; i < n; ++i) {
    id[i] = i;
    if (i >= 1) p[i] = i - 1;
    if (i + 1 < n) q[i] = i + 1;
  }
  // words act on the right: (x)(w1 w2) = ((x)w1)w2
  auto then = [&](const PartialMap& a, const PartialMap& b) {
    PartialMap c(n, undefined);
    for (std::size_t i = 0; i < n; ++i)
      if (a[i] != undefined) c[i] = b[a[i]];
    return c;
  };
  std::vector<PartialMap> elems{id};
  std::vector<std::string> labels{"e"};
  std::map<PartialMap, std::size_t> index{{id, 0}};
  for (std::size_t head = 0; head < elems.size(); ++head) {
    for (auto [gen, name] : {std::pair{p, "p"}, std::pair{q, "q"}}) {
      PartialMap w = then(elems[head], gen);
      if (index.count(w)) continue;
      index[w] = elems.size();
      elems.push_back(w);
      labels.push_back(head == 0 ? std::string(name) : labels[head] + name);
    }
  }
  const std::size_t k = elems.size();
  std::vector<std::size_t> table(k * k);
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b) table[a * k + b] = index.at(then(elems[a], elems[b]));
  return validate_monoid(std::move(labels), std::move(table), 0);
}

/// Direct product with labels "(a;b)" and index a * |M2| + b.
inline FiniteMonoid product(const FiniteMonoid& m1, const FiniteMonoid& m2) {
  const std::size_t n1 = m1.size(), n2 = m2.size(), n = n1 * n2;
  std::vector<std::string> labels;
  for (std::size_t a = 0; a < n1; ++a)
    for (std::size_t b = 0; b < n2; ++b) labels.push_back("(" + m1.label(a) + ";" + m2.label(b) + ")");
  std::vector<std::size_t> table(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      table[x * n + y] = m1.mul(x / n2, y / n2) * n2 + m2.mul(x % n2, y % n2);
  return validate_monoid(std::move(labels), std::move(table), m1.identity() * n2 + m2.identity());
}

// ------------------------------------------------------------- subgroups

struct SubgroupSpec {
  std::vector<std::size_t> members;  // sorted element indices of the parent
};

/// Closed under product and inverse, contains the identity.
inline SubgroupSpec make_subgroup(const FiniteMonoid& g, std::vector<std::size_t> members) {
  auto inv = group_inverses(g);
  if (!inv) throw Error("NotAGroup", "subgroups need a group parent");
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  std::set<std::size_t> in(members.begin(), members.end());
  for (auto m : members)
    if (m >= g.size()) throw Error("BadIndex", std::to_string(m));
  if (!in.count(g.identity())) throw Error("NotSubgroup", "identity missing");
  for (auto a : members) {
    if (!in.count((*inv)[a])) throw Error("NotSubgroup", "inverse of " + g.label(a) + " missing");
    for (auto b : members)
      if (!in.count(g.mul(a, b))) throw Error("NotSubgroup", g.label(a) + "·" + g.label(b) + " missing");
  }
  return {std::move(members)};
}

struct QuotientGroup {
  FiniteMonoid quotient;
  std::vector<std::size_t> projection;       // g -> index of the coset Ng
  std::vector<std::size_t> representatives;  // smallest index in each right coset
};

/// G/N with right cosets N·g_i; coset i is represented by its smallest element.
inline QuotientGroup quotient_group(const FiniteMonoid& g, const SubgroupSpec& n) {
  auto inv = group_inverses(g);
  if (!inv) throw Error("NotAGroup", "quotient needs a group");
  const std::set<std::size_t> normal(n.members.begin(), n.members.end());
  for (std::size_t x = 0; x < g.size(); ++x) {
    for (auto m : n.members) {
      if (!normal.count(g.mul(g.mul(x, m), (*inv)[x]))) throw Error("NotNormal", g.label(x));
    }
  }
  QuotientGroup q;
  constexpr std::size_t unset = static_cast<std::size_t>(-1);
  q.projection.assign(g.size(), unset);
  for (std::size_t x = 0; x < g.size(); ++x) {
    if (q.projection[x] != unset) continue;
    const std::size_t coset = q.representatives.size();
    q.representatives.push_back(x);
    for (auto m : n.members) q.projection[g.mul(m, x)] = coset;
  }
  const std::size_t r = q.representatives.size();
  std::vector<std::string> labels;
  for (auto rep : q.representatives) labels.push_back("N" + g.label(rep));
  std::vector<std::size_t> table(r * r);
  for (std::size_t a = 0; a < r; ++a)
    for (std::size_t b = 0; b < r; ++b)
      table[a * r + b] = q.projection[g.mul(q.representatives[a], q.representatives[b])];
  q.quotient = validate_monoid(std::move(labels), std::move(table), q.projection[g.identity()]);
  return q;
}

}  // namespace globalize
