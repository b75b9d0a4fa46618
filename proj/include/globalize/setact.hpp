#pragma once

// Partial actions of finite monoids on finite sets and their globalization.
//
// The domain X•M is an honest subset of X×M, addressed by the pair index
// x * |M| + m. The globalization is the quotient of X×M by the equivalence
// relation generated by ((x·m, n), (x, mn)) for (x, m) in the domain, with
// M acting by [x, m]·n = [x, mn].

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "globalize/error.hpp"
#include "globalize/monoid.hpp"

namespace globalize {

namespace detail {

inline std::string pair_label(const std::string& x, const std::string& m) { return "(" + x + "," + m + ")"; }

inline void check_unique(const std::vector<std::string>& labels, const char* what) {
  if (std::set<std::string>(labels.begin(), labels.end()).size() != labels.size()) {
    throw Error("DuplicateLabel", std::string(what) + " labels must be distinct");
  }
}

}  // namespace detail

/// A total right action Y×M -> Y.
class GlobalAction {
 public:
  GlobalAction() = default;

  /// Validates act(y,e) = y and act(act(y,m),n) = act(y,mn).
  GlobalAction(FiniteMonoid m, std::vector<std::string> carrier, std::vector<std::size_t> act)
      : monoid_(std::move(m)), carrier_(std::move(carrier)), act_(std::move(act)) {
    detail::check_unique(carrier_, "carrier");
    const std::size_t ny = carrier_.size(), nm = monoid_.size();
    if (act_.size() != ny * nm) throw Error("BadIndex", "action table has wrong size");
    for (std::size_t i = 0; i < act_.size(); ++i) {
      if (act_[i] >= ny) throw Error("BadIndex", "action value out of range at " + std::to_string(i));
    }
    for (std::size_t y = 0; y < ny; ++y) {
      if (apply(y, monoid_.identity()) != y) throw Error("NotAnAction", "identity moves " + carrier_[y]);
      for (std::size_t a = 0; a < nm; ++a)
        for (std::size_t b = 0; b < nm; ++b)
          if (apply(apply(y, a), b) != apply(y, monoid_.mul(a, b))) {
            throw Error("NotAnAction",
                        "(" + carrier_[y] + "," + monoid_.label(a) + "," + monoid_.label(b) + ")");
          }
    }
  }

  const FiniteMonoid& monoid() const noexcept { return monoid_; }
  const std::vector<std::string>& carrier() const noexcept { return carrier_; }
  std::size_t size() const noexcept { return carrier_.size(); }
  std::size_t apply(std::size_t y, std::size_t m) const { return act_[y * monoid_.size() + m]; }
  const std::vector<std::size_t>& table() const noexcept { return act_; }

 private:
  FiniteMonoid monoid_;
  std::vector<std::string> carrier_;
  std::vector<std::size_t> act_;
};

/// Right regular action of M on itself.
inline GlobalAction regular_action(const FiniteMonoid& m) {
  std::vector<std::size_t> act(m.size() * m.size());
  for (std::size_t a = 0; a < m.size(); ++a)
    for (std::size_t b = 0; b < m.size(); ++b) act[a * m.size() + b] = m.mul(a, b);
  return GlobalAction(m, m.labels(), std::move(act));
}

/// Trivial action on the given points.
inline GlobalAction trivial_action(const FiniteMonoid& m, std::vector<std::string> points) {
  std::vector<std::size_t> act;
  for (std::size_t y = 0; y < points.size(); ++y)
    for (std::size_t k = 0; k < m.size(); ++k) act.push_back(y);
  return GlobalAction(m, std::move(points), std::move(act));
}

/// Partial action datum: carrier X, domain D ⊆ X×M and ρ: D -> X.
class PartialActionDatum {
 public:
  static constexpr std::size_t undefined = static_cast<std::size_t>(-1);

  PartialActionDatum() = default;

  /// `rho` is indexed by pair index and must be `undefined` exactly off the domain.
  PartialActionDatum(FiniteMonoid m, std::vector<std::string> carrier, std::vector<std::size_t> rho)
      : monoid_(std::move(m)), carrier_(std::move(carrier)), rho_(std::move(rho)) {
    detail::check_unique(carrier_, "carrier");
    if (rho_.size() != carrier_.size() * monoid_.size()) throw Error("BadIndex", "rho table has wrong size");
    for (std::size_t i = 0; i < rho_.size(); ++i) {
      if (rho_[i] != undefined && rho_[i] >= carrier_.size()) {
        throw Error("BadIndex", "rho" + pair_label(i) + " lands outside X");
      }
    }
  }

  const FiniteMonoid& monoid() const noexcept { return monoid_; }
  const std::vector<std::string>& carrier() const noexcept { return carrier_; }
  std::size_t size() const noexcept { return carrier_.size(); }

  std::size_t pair(std::size_t x, std::size_t m) const { return x * monoid_.size() + m; }
  std::size_t pair_x(std::size_t p) const { return p / monoid_.size(); }
  std::size_t pair_m(std::size_t p) const { return p % monoid_.size(); }
  std::size_t pair_count() const noexcept { return rho_.size(); }

  bool defined(std::size_t x, std::size_t m) const { return rho_[pair(x, m)] != undefined; }
  /// x·m; only meaningful when defined(x, m).
  std::size_t act(std::size_t x, std::size_t m) const { return rho_[pair(x, m)]; }
  const std::vector<std::size_t>& rho_table() const noexcept { return rho_; }

  /// Domain pairs in increasing pair-index order; position = index into D.
  std::vector<std::size_t> domain() const {
    std::vector<std::size_t> d;
    for (std::size_t p = 0; p < rho_.size(); ++p)
      if (rho_[p] != undefined) d.push_back(p);
    return d;
  }

  /// X_m = {x : (x, m) in D}.
  std::vector<std::size_t> domain_of(std::size_t m) const {
    std::vector<std::size_t> xs;
    for (std::size_t x = 0; x < size(); ++x)
      if (defined(x, m)) xs.push_back(x);
    return xs;
  }

  std::string pair_label(std::size_t p) const {
    return detail::pair_label(carrier_[pair_x(p)], monoid_.label(pair_m(p)));
  }

 private:
  FiniteMonoid monoid_;
  std::vector<std::string> carrier_;
  std::vector<std::size_t> rho_;
};

/// PA1 (unitality) and PA2 (partial associativity), checked for every (m, n, x).
inline Verdict verify_partial_action(const PartialActionDatum& d) {
  const auto& m = d.monoid();
  const std::size_t e = m.identity();
  for (std::size_t x = 0; x < d.size(); ++x) {
    if (!d.defined(x, e) || d.act(x, e) != x) return Verdict::fail("PA1", d.carrier()[x]);
  }
  for (std::size_t a = 0; a < m.size(); ++a)
    for (std::size_t b = 0; b < m.size(); ++b)
      for (std::size_t x = 0; x < d.size(); ++x) {
        if (!d.defined(x, a)) continue;
        const std::size_t xa = d.act(x, a);
        const bool lhs = d.defined(xa, b);
        const bool rhs = d.defined(x, m.mul(a, b));
        if (lhs != rhs || (lhs && d.act(xa, b) != d.act(x, m.mul(a, b)))) {
          return Verdict::fail("PA2", "(" + m.label(a) + "," + m.label(b) + "," + d.carrier()[x] + ")");
        }
      }
  return Verdict::pass();
}

/// The functor I: a global action as a partial one with full domain.
inline PartialActionDatum view_global_as_partial(const GlobalAction& y) {
  return PartialActionDatum(y.monoid(), y.carrier(), y.table());
}

/// Restriction of a global action to a subset X ⊆ Y (the pullback along the
/// inclusion). The carrier keeps the order of `subset`.
inline PartialActionDatum induce_from_global(const GlobalAction& y, const std::vector<std::size_t>& subset) {
  if (subset.empty()) throw Error("EmptySubset", "induced partial action needs a nonempty subset");
  std::vector<std::size_t> position(y.size(), PartialActionDatum::undefined);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < subset.size(); ++i) {
    if (subset[i] >= y.size()) throw Error("BadIndex", "subset element " + std::to_string(subset[i]));
    if (position[subset[i]] != PartialActionDatum::undefined) throw Error("DuplicateLabel", "subset repeats");
    position[subset[i]] = i;
    labels.push_back(y.carrier()[subset[i]]);
  }
  const std::size_t nm = y.monoid().size();
  std::vector<std::size_t> rho(subset.size() * nm, PartialActionDatum::undefined);
  for (std::size_t i = 0; i < subset.size(); ++i)
    for (std::size_t m = 0; m < nm; ++m) rho[i * nm + m] = position[y.apply(subset[i], m)];
  return PartialActionDatum(y.monoid(), std::move(labels), std::move(rho));
}

/// A pair (f, f•M) between partial actions over the same monoid.
struct PartialMorphism {
  const PartialActionDatum* source = nullptr;
  const PartialActionDatum* target = nullptr;
  std::vector<std::size_t> f;      // X -> X'
  std::vector<std::size_t> f_dom;  // pair index of D -> pair index of D'
};

/// (f×M)∘incl = incl'∘f•M and f∘ρ = ρ'∘f•M, elementwise over D.
inline Verdict verify_morphism(const PartialMorphism& mor) {
  const auto& s = *mor.source;
  const auto& t = *mor.target;
  if (!(s.monoid() == t.monoid())) return Verdict::fail("MonoidMismatch", "");
  if (mor.f.size() != s.size()) return Verdict::fail("BadMap", "f has wrong size");
  for (auto y : mor.f)
    if (y >= t.size()) return Verdict::fail("BadMap", "f lands outside X'");
  for (auto p : s.domain()) {
    const std::size_t x = s.pair_x(p), m = s.pair_m(p);
    if (p >= mor.f_dom.size()) return Verdict::fail("BadMap", "f•M undefined at " + s.pair_label(p));
    const std::size_t q = mor.f_dom[p];
    if (q >= t.pair_count() || !t.defined(t.pair_x(q), t.pair_m(q))) {
      return Verdict::fail("BadMap", "f•M leaves D' at " + s.pair_label(p));
    }
    if (q != t.pair(mor.f[x], m)) return Verdict::fail("InclusionSquare", s.pair_label(p));
    if (mor.f[s.act(x, m)] != t.act(t.pair_x(q), t.pair_m(q))) return Verdict::fail("ActionSquare", s.pair_label(p));
  }
  return Verdict::pass();
}

/// f•M(x, m) = (f(x), m), the only choice when the target's inclusion is X'×M.
inline std::vector<std::size_t> canonical_f_dom(const PartialActionDatum& s, const PartialActionDatum& t,
                                                const std::vector<std::size_t>& f) {
  std::vector<std::size_t> fd(s.pair_count(), PartialActionDatum::undefined);
  for (auto p : s.domain()) fd[p] = t.pair(f[s.pair_x(p)], s.pair_m(p));
  return fd;
}

struct GlobalizationResult {
  GlobalAction global;                            // Y with [x,m]·n = [x,mn]
  std::vector<std::size_t> epsilon;               // x -> [x, e]
  std::vector<std::size_t> kappa;                 // pair index -> [x, m]
  std::vector<std::vector<std::size_t>> classes;  // pair indices per class, ascending
};

namespace detail {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::size_t find(std::size_t a) {
    while (parent_[a] != a) {
      parent_[a] = parent_[parent_[a]];
      a = parent_[a];
    }
    return a;
  }

  // the smaller index becomes the root, so roots are class minima
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (b < a) std::swap(a, b);
    parent_[b] = a;
  }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace detail

/// Quotient of X×M by the equivalence generated by ((x·m, n), (x, mn)).
inline GlobalizationResult globalize_set(const PartialActionDatum& d) {
  if (auto v = verify_partial_action(d); !v) throw Error("PAUnverified", v.code + " at " + v.witness);
  const auto& m = d.monoid();
  const std::size_t nm = m.size(), np = d.pair_count();
  detail::UnionFind uf(np);
  for (auto p : d.domain()) {
    const std::size_t x = d.pair_x(p), a = d.pair_m(p), xa = d.act(x, a);
    for (std::size_t b = 0; b < nm; ++b) uf.unite(d.pair(xa, b), d.pair(x, m.mul(a, b)));
  }
  GlobalizationResult res;
  constexpr std::size_t unset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> class_of_root(np, unset);
  res.kappa.resize(np);
  for (std::size_t p = 0; p < np; ++p) {
    const std::size_t r = uf.find(p);
    if (class_of_root[r] == unset) {
      class_of_root[r] = res.classes.size();
      res.classes.emplace_back();
    }
    res.kappa[p] = class_of_root[r];
    res.classes[res.kappa[p]].push_back(p);
  }
  const std::size_t ny = res.classes.size();
  std::vector<std::string> labels;
  std::vector<std::size_t> act(ny * nm, unset);
  for (std::size_t c = 0; c < ny; ++c) {
    labels.push_back("[" + d.carrier()[d.pair_x(res.classes[c].front())] + "," +
                     m.label(d.pair_m(res.classes[c].front())) + "]");
    for (auto p : res.classes[c]) {
      for (std::size_t b = 0; b < nm; ++b) {
        const std::size_t target = res.kappa[d.pair(d.pair_x(p), m.mul(d.pair_m(p), b))];
        std::size_t& slot = act[c * nm + b];
        if (slot == unset) {
          slot = target;
        } else if (slot != target) {
          detail::internal_error("IllDefinedAction", labels.back() + "·" + m.label(b));
        }
      }
    }
  }
  res.global = GlobalAction(m, std::move(labels), std::move(act));
  res.epsilon.resize(d.size());
  for (std::size_t x = 0; x < d.size(); ++x) res.epsilon[x] = res.kappa[d.pair(x, m.identity())];
  if (std::set<std::size_t>(res.epsilon.begin(), res.epsilon.end()).size() != d.size()) {
    detail::internal_error("EpsilonNotInjective", "globalization unit collapses points of X");
  }
  return res;
}

/// GL1 in Set: D = κ⁻¹(ε(X)) and ε(ρ(x, m)) = κ(x, m) on D.
inline Verdict check_GL1_pullback(const PartialActionDatum& d, const GlobalizationResult& res) {
  std::vector<std::size_t> preimage(res.global.size(), PartialActionDatum::undefined);
  for (std::size_t x = 0; x < d.size(); ++x) preimage[res.epsilon[x]] = x;
  for (std::size_t p = 0; p < d.pair_count(); ++p) {
    const std::size_t x = d.pair_x(p), m = d.pair_m(p);
    const bool in_image = preimage[res.kappa[p]] != PartialActionDatum::undefined;
    if (in_image != d.defined(x, m)) return Verdict::fail("GL1", d.pair_label(p));
    if (in_image && preimage[res.kappa[p]] != d.act(x, m)) return Verdict::fail("GL1", d.pair_label(p));
  }
  return Verdict::pass();
}

/// κ(x, m) = ε(x)·m and ε(x) = κ(x, e).
inline Verdict check_kappa_factorization(const PartialActionDatum& d, const GlobalizationResult& res) {
  for (std::size_t p = 0; p < d.pair_count(); ++p) {
    if (res.kappa[p] != res.global.apply(res.epsilon[d.pair_x(p)], d.pair_m(p))) {
      return Verdict::fail("KappaFactorization", d.pair_label(p));
    }
  }
  return Verdict::pass();
}

/// The equivariant map Y_d -> Y_d' induced by a morphism, [x, m] -> [f(x), m].
inline std::vector<std::size_t> induced_global_map(const PartialMorphism& mor, const GlobalizationResult& src,
                                                   const GlobalizationResult& tgt) {
  const auto& s = *mor.source;
  const auto& t = *mor.target;
  constexpr std::size_t unset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> map(src.global.size(), unset);
  for (std::size_t p = 0; p < s.pair_count(); ++p) {
    const std::size_t image = tgt.kappa[t.pair(mor.f[s.pair_x(p)], s.pair_m(p))];
    std::size_t& slot = map[src.kappa[p]];
    if (slot != unset && slot != image) detail::internal_error("IllDefinedInducedMap", s.pair_label(p));
    slot = image;
  }
  return map;
}

/// h(y·m) = h(y)·m for all y, m.
inline bool is_equivariant(const GlobalAction& a, const GlobalAction& b, const std::vector<std::size_t>& h) {
  if (h.size() != a.size()) return false;
  for (std::size_t y = 0; y < a.size(); ++y)
    for (std::size_t m = 0; m < a.monoid().size(); ++m)
      if (h[a.apply(y, m)] != b.apply(h[y], m)) return false;
  return true;
}

inline bool is_bijection(const std::vector<std::size_t>& h, std::size_t target_size) {
  if (h.size() != target_size) return false;
  std::vector<bool> hit(target_size, false);
  for (auto y : h) {
    if (y >= target_size || hit[y]) return false;
    hit[y] = true;
  }
  return true;
}

struct UniversalityReport {
  Verdict verdict;
  std::size_t global_homs = 0;   // |Hom_global(Y, Z)|
  std::size_t partial_homs = 0;  // |Hom_partial(X, I(Z))|
};

namespace detail {

/// Calls `visit` for every map [0,n) -> [0,k) (odometer order).
template <typename Visit>
void for_each_map(std::size_t n, std::size_t k, Visit&& visit) {
  std::vector<std::size_t> h(n, 0);
  if (k == 0) {
    if (n == 0) visit(h);
    return;
  }
  while (true) {
    visit(h);
    std::size_t i = 0;
    while (i < n && ++h[i] == k) h[i++] = 0;
    if (i == n) return;
  }
}

inline bool pow_exceeds(std::size_t base, std::size_t exp, std::uint64_t cap) {
  std::uint64_t v = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    v *= base;
    if (v > cap) return true;
  }
  return false;
}

}  // namespace detail

/// GL2 by enumeration: η -> η∘ε is a bijection Hom_global(Y, Z) -> Hom_partial(X, I(Z)).
inline UniversalityReport check_GL2_universal(const PartialActionDatum& d, const GlobalizationResult& res,
                                              const GlobalAction& z, std::uint64_t cap = 1'000'000) {
  if (!(z.monoid() == d.monoid())) throw Error("MonoidMismatch", "target acts by a different monoid");
  const auto& y = res.global;
  if (detail::pow_exceeds(z.size(), y.size(), cap) || detail::pow_exceeds(z.size(), d.size(), cap)) {
    throw Error("EnumerationTooLarge",
                "|Z|^|Y| = " + std::to_string(z.size()) + "^" + std::to_string(y.size()) + " over cap",
                ErrorKind::Cap);
  }
  UniversalityReport rep;
  std::set<std::vector<std::size_t>> restricted;
  bool restriction_ok = true;
  detail::for_each_map(y.size(), z.size(), [&](const std::vector<std::size_t>& eta) {
    if (!is_equivariant(y, z, eta)) return;
    ++rep.global_homs;
    std::vector<std::size_t> f(d.size());
    for (std::size_t x = 0; x < d.size(); ++x) f[x] = eta[res.epsilon[x]];
    for (auto p : d.domain())
      if (z.apply(f[d.pair_x(p)], d.pair_m(p)) != f[d.act(d.pair_x(p), d.pair_m(p))]) restriction_ok = false;
    restricted.insert(std::move(f));
  });
  std::set<std::vector<std::size_t>> partial;
  detail::for_each_map(d.size(), z.size(), [&](const std::vector<std::size_t>& f) {
    for (auto p : d.domain())
      if (z.apply(f[d.pair_x(p)], d.pair_m(p)) != f[d.act(d.pair_x(p), d.pair_m(p))]) return;
    partial.insert(f);
  });
  rep.partial_homs = partial.size();
  if (!restriction_ok) {
    rep.verdict = Verdict::fail("GL2", "a restricted global morphism is not a partial morphism");
  } else if (restricted.size() != rep.global_homs) {
    rep.verdict = Verdict::fail("GL2", "restriction is not injective");
  } else if (restricted != partial) {
    rep.verdict = Verdict::fail("GL2", "restriction is not surjective");
  } else {
    rep.verdict = Verdict::pass();
  }
  return rep;
}

}  // namespace globalize
