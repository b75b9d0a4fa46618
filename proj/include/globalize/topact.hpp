#pragma once

// Partial actions of finite topological monoids on finite spaces.
//
// A topological partial module is a set-level partial action together with
// topologies on X, on M and on the domain D. Points of D are numbered in
// increasing pair-index order, so D-point k is the pair domain()[k].

#include <algorithm>
#include <bit>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "globalize/error.hpp"
#include "globalize/fintop.hpp"
#include "globalize/monoid.hpp"
#include "globalize/setact.hpp"

namespace globalize {

struct TopMonoid {
  FiniteMonoid monoid;
  FinTopology topology;
};

/// Requires Δ: M×M -> M continuous, and inversion continuous for groups.
inline TopMonoid make_top_monoid(FiniteMonoid m, FinTopology t) {
  if (t.size() != m.size()) throw Error("BadTopology", "monoid topology has the wrong carrier");
  const std::size_t n = m.size();
  std::vector<std::size_t> delta(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) delta[a * n + b] = m.mul(a, b);
  if (auto w = continuity_witness(delta, product_topology(t, t), neighborhoods(t))) {
    throw Error("MultiplicationNotContinuous", "preimage of " + set_to_string(*w));
  }
  if (auto inv = group_inverses(m)) {
    if (auto w = continuity_witness(*inv, t, t)) {
      throw Error("InversionNotContinuous", "preimage of " + set_to_string(*w));
    }
  }
  return {std::move(m), std::move(t)};
}

struct TopPartialModule {
  PartialActionDatum base;
  FinTopology tX;
  TopMonoid M;
  FinTopology tD;

  std::vector<std::size_t> inclusion() const { return base.domain(); }

  std::vector<std::size_t> rho() const {
    std::vector<std::size_t> r;
    for (auto p : base.domain()) r.push_back(base.act(base.pair_x(p), base.pair_m(p)));
    return r;
  }

  FinTopology product() const { return product_topology(tX, M.topology); }

  FinTopology subspace_on_domain() const { return subspace_topology(product(), base.domain()); }
};

/// Assembles a module; tD defaults to the subspace topology from X×M.
inline TopPartialModule make_top_module(PartialActionDatum base, FinTopology tX, TopMonoid M,
                                        std::optional<FinTopology> tD = std::nullopt) {
  if (!(base.monoid() == M.monoid)) throw Error("MonoidMismatch", "datum and topological monoid differ");
  if (tX.size() != base.size()) throw Error("BadTopology", "tX has the wrong carrier");
  TopPartialModule m{std::move(base), std::move(tX), std::move(M), {}};
  const std::size_t nd = m.base.domain().size();
  if (tD) {
    if (tD->size() != nd) throw Error("BadTopology", "tD has the wrong carrier");
    m.tD = std::move(*tD);
  } else {
    m.tD = m.subspace_on_domain();
  }
  return m;
}

namespace detail {

/// The two iterated pullbacks (X•M)•M and X•(M•M) share the triple set
/// {(x,m,n) : (x,m) in D, (x·m,n) in D}; both carry the initial topology of a
/// leg into D×M and a leg into D, differing only in the second leg.
struct IteratedPullbacks {
  std::size_t triples = 0;
  std::vector<std::size_t> to_DxM;
  std::vector<std::size_t> act_then;  // (x,m,n) -> (x·m, n)
  std::vector<std::size_t> mult_then; // (x,m,n) -> (x, mn)
};

inline IteratedPullbacks iterated_pullbacks(const PartialActionDatum& d) {
  const auto& mon = d.monoid();
  const auto dom = d.domain();
  std::vector<std::size_t> dpos(d.pair_count(), PartialActionDatum::undefined);
  for (std::size_t k = 0; k < dom.size(); ++k) dpos[dom[k]] = k;
  IteratedPullbacks ip;
  ip.to_DxM.reserve(dom.size() * mon.size());
  ip.act_then.reserve(dom.size() * mon.size());
  ip.mult_then.reserve(dom.size() * mon.size());
  for (std::size_t k = 0; k < dom.size(); ++k) {
    const std::size_t x = d.pair_x(dom[k]), m = d.pair_m(dom[k]), xm = d.act(x, m);
    for (std::size_t n = 0; n < mon.size(); ++n) {
      if (!d.defined(xm, n)) continue;
      ip.to_DxM.push_back(k * mon.size() + n);
      ip.act_then.push_back(dpos[d.pair(xm, n)]);
      ip.mult_then.push_back(dpos[d.pair(x, mon.mul(m, n))]);
      ++ip.triples;
    }
  }
  return ip;
}

inline std::string describe_pairs(const PartialActionDatum& d, const std::vector<std::size_t>& pairs, OpenSet s) {
  std::string out = "{";
  bool first = true;
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    if (!contains(s, k)) continue;
    out += (first ? "" : ",") + d.pair_label(pairs[k]);
    first = false;
  }
  return out + "}";
}

/// Writes a set of domain pairs as S×T when it is a box, with T = M spelled "M".
inline std::string describe_open(const PartialActionDatum& d, const std::vector<std::size_t>& pairs, OpenSet s) {
  std::vector<bool> xs(d.size(), false), ms(d.monoid().size(), false);
  std::size_t count = 0;
  for (std::size_t k = 0; k < pairs.size(); ++k)
    if (contains(s, k)) {
      xs[d.pair_x(pairs[k])] = true;
      ms[d.pair_m(pairs[k])] = true;
      ++count;
    }
  const auto nx = static_cast<std::size_t>(std::count(xs.begin(), xs.end(), true));
  const auto nm = static_cast<std::size_t>(std::count(ms.begin(), ms.end(), true));
  if (count == 0 || nx * nm != count) return describe_pairs(d, pairs, s);
  std::string out = "{";
  for (std::size_t x = 0; x < d.size(); ++x)
    if (xs[x]) out += (out.size() > 1 ? "," : "") + d.carrier()[x];
  out += "}×";
  if (nm == d.monoid().size()) return out + "M";
  std::string t = "{";
  for (std::size_t m = 0; m < ms.size(); ++m)
    if (ms[m]) t += (t.size() > 1 ? "," : "") + d.monoid().label(m);
  return out + t + "}";
}

}  // namespace detail

/// Set-level axioms, continuity of Δ, π and ρ, and θ a homeomorphism.
inline Verdict verify_top_module(const TopPartialModule& m) {
  if (auto v = verify_partial_action(m.base); !v) return v;
  const auto& mon = m.M.monoid;
  const std::size_t nm = mon.size();
  std::vector<std::size_t> delta(nm * nm);
  for (std::size_t a = 0; a < nm; ++a)
    for (std::size_t b = 0; b < nm; ++b) delta[a * nm + b] = mon.mul(a, b);
  const auto& nbM = neighborhoods(m.M.topology);
  if (auto w = continuity_witness_nb(delta, product_basis(m.M.topology, m.M.topology), nbM)) {
    return Verdict::fail("MultiplicationNotContinuous", "preimage of " + set_to_string(*w));
  }
  const auto dom = m.base.domain();
  if (m.tD.size() != dom.size() || m.tX.size() != m.base.size()) {
    return Verdict::fail("BadTopology", "carrier sizes do not match the datum");
  }
  const auto& nbD = neighborhoods(m.tD);
  if (auto w = continuity_witness_nb(dom, nbD, product_basis(m.tX, m.M.topology))) {
    std::vector<std::size_t> all(m.base.pair_count());
    for (std::size_t p = 0; p < all.size(); ++p) all[p] = p;
    return Verdict::fail("PiNotContinuous", "preimage of " + detail::describe_pairs(m.base, all, *w));
  }
  if (auto w = continuity_witness_nb(m.rho(), nbD, neighborhoods(m.tX))) {
    std::string v = "{";
    for (std::size_t x = 0; x < m.base.size(); ++x)
      if (contains(*w, x)) v += (v.size() > 1 ? "," : "") + m.base.carrier()[x];
    return Verdict::fail("RhoNotContinuous", "preimage of " + v + "}");
  }
  const auto ip = detail::iterated_pullbacks(m.base);
  check_carrier(dom.size() * nm);
  check_carrier(ip.triples);
  // Minimal neighbourhoods of the initial topologies on the triples: N(t) is the
  // set of triples whose images lie in the neighbourhoods of t's images.
  const std::size_t nd = dom.size();
  std::vector<OpenSet> byD(nd, 0), byM(nm, 0);
  for (std::size_t t = 0; t < ip.triples; ++t) {
    byD[ip.to_DxM[t] / nm] |= singleton(t);
    byM[ip.to_DxM[t] % nm] |= singleton(t);
  }
  const auto over = [](const std::vector<OpenSet>& nb, const std::vector<OpenSet>& fibres) {
    std::vector<OpenSet> u(nb.size(), 0);
    for (std::size_t k = 0; k < nb.size(); ++k)
      for (OpenSet rest = nb[k]; rest; rest &= rest - 1) u[k] |= fibres[static_cast<std::size_t>(std::countr_zero(rest))];
    return u;
  };
  const auto overD = over(nbD, byD), overM = over(nbM, byM);
  const auto initial_nb = [&](const std::vector<std::size_t>& leg2) {
    std::vector<OpenSet> by2(nd, 0);
    for (std::size_t t = 0; t < ip.triples; ++t) by2[leg2[t]] |= singleton(t);
    const auto over2 = over(nbD, by2);
    std::vector<OpenSet> nb(ip.triples);
    for (std::size_t t = 0; t < ip.triples; ++t) nb[t] = overD[ip.to_DxM[t] / nm] & overM[ip.to_DxM[t] % nm] & over2[leg2[t]];
    return nb;
  };
  const auto nl = initial_nb(ip.act_then);
  const auto nr = initial_nb(ip.mult_then);
  // the witness is a minimal neighbourhood on one side that is not open on the other
  const auto open_in = [&](const std::vector<OpenSet>& nb, OpenSet u) {
    for (std::size_t t = 0; t < ip.triples; ++t)
      if (contains(u, t) && (nb[t] & ~u)) return false;
    return true;
  };
  for (std::size_t t = 0; t < ip.triples; ++t)
    if (!open_in(nr, nl[t])) return Verdict::fail("ThetaNotHomeomorphism", "(X•M)•M open " + set_to_string(nl[t]));
  for (std::size_t t = 0; t < ip.triples; ++t)
    if (!open_in(nl, nr[t])) return Verdict::fail("ThetaNotHomeomorphism", "X•(M•M) open " + set_to_string(nr[t]));
  return Verdict::pass();
}

struct TopologicalPartialActionReport {
  bool value = false;               // D ↪ X×M is an open embedding
  std::vector<bool> domain_open;    // X_m open in X, per m
  std::vector<bool> alpha_continuous;  // α_m: X_m -> X continuous, per m
};

inline TopologicalPartialActionReport is_topological_partial_action(const TopPartialModule& m) {
  TopologicalPartialActionReport r;
  r.value = is_open_embedding(m.inclusion(), m.tD, m.product());
  for (std::size_t a = 0; a < m.M.monoid.size(); ++a) {
    const auto xs = m.base.domain_of(a);
    OpenSet s = 0;
    std::vector<std::size_t> alpha;
    for (auto x : xs) {
      s |= singleton(x);
      alpha.push_back(m.base.act(x, a));
    }
    r.domain_open.push_back(m.tX.is_open(s));
    r.alpha_continuous.push_back(is_continuous(alpha, subspace_topology(m.tX, xs), m.tX));
  }
  return r;
}

struct TopGlobalizationResult {
  GlobalizationResult set;
  FinTopology tY;        // quotient of X×M along κ
  FinTopology initial;   // coarsest topology on D making π and ρ continuous
  bool globalizable = false;
  std::optional<OpenSet> witness;  // an open of D in exactly one of tD, initial
  bool witness_in_tD = false;
  std::string witness_label;
};

/// Set globalization with the quotient topology; globalizable iff tD is the
/// initial topology of π and ρ, confirmed through the pullback over Y.
inline TopGlobalizationResult globalize_top(const TopPartialModule& m) {
  if (auto v = verify_top_module(m); !v) throw Error("NotAGeometricPartialModule", v.code + ": " + v.witness);
  TopGlobalizationResult r;
  r.set = globalize_set(m.base);
  const FinTopology XxM = m.product();
  const auto& Y = r.set.global;
  r.tY = quotient_topology(XxM, r.set.kappa, Y.size());

  // -×M preserves this quotient for finite spaces; the action must be continuous.
  if (!is_continuous(Y.table(), product_topology(r.tY, m.M.topology), r.tY)) {
    detail::internal_error("CoequalizerNotPreserved", "Y×M -> Y is not continuous for the quotient topology");
  }

  const auto dom = m.base.domain();
  const auto rho = m.rho();
  r.initial = initial_topology(dom.size(), {{&XxM, dom}, {&m.tX, rho}});

  // The pullback of ε and κ, enumerated from Y, then pulled back to D.
  std::vector<std::size_t> leg_x, leg_pair;
  for (std::size_t x = 0; x < m.base.size(); ++x)
    for (std::size_t p = 0; p < m.base.pair_count(); ++p)
      if (r.set.epsilon[x] == r.set.kappa[p]) {
        leg_x.push_back(x);
        leg_pair.push_back(p);
      }
  if (leg_x.size() != dom.size()) detail::internal_error("GL1", "pullback over Y differs in size from D");
  std::vector<std::size_t> to_x(dom.size()), to_pair(dom.size());
  for (std::size_t k = 0; k < dom.size(); ++k) {
    std::size_t hit = leg_x.size();
    for (std::size_t j = 0; j < leg_x.size(); ++j)
      if (leg_x[j] == rho[k] && leg_pair[j] == dom[k]) hit = j;
    if (hit == leg_x.size()) detail::internal_error("GL1", "D does not map into the pullback over Y");
    to_x[k] = leg_x[hit];
    to_pair[k] = leg_pair[hit];
  }
  const FinTopology through_y = initial_topology(dom.size(), {{&m.tX, to_x}, {&XxM, to_pair}});
  if (!(through_y == r.initial)) detail::internal_error("PullbackCrossCheck", "pullback topology over Y differs");

  r.globalizable = (m.tD == r.initial);
  if (!r.globalizable) {
    std::vector<std::pair<OpenSet, bool>> diff;
    for (auto u : m.tD.opens())
      if (!r.initial.is_open(u)) diff.emplace_back(u, true);
    for (auto u : r.initial.opens())
      if (!m.tD.is_open(u)) diff.emplace_back(u, false);
    auto key = [](const std::pair<OpenSet, bool>& a) { return std::pair{std::popcount(a.first), a.first}; };
    std::sort(diff.begin(), diff.end(), [&](const auto& a, const auto& b) { return key(a) < key(b); });
    r.witness = diff.front().first;
    r.witness_in_tD = diff.front().second;
    r.witness_label = detail::describe_open(m.base, dom, *r.witness);
  }
  return r;
}

/// Restriction of a continuous global action to a subset with the subspace topology.
inline TopPartialModule induce_from_global_top(const GlobalAction& y, const FinTopology& tY, const TopMonoid& M,
                                               const std::vector<std::size_t>& subset) {
  if (tY.size() != y.size()) throw Error("BadTopology", "tY has the wrong carrier");
  if (!(y.monoid() == M.monoid)) throw Error("MonoidMismatch", "action and topological monoid differ");
  if (auto w = continuity_witness(y.table(), product_topology(tY, M.topology), tY)) {
    throw Error("ActionNotContinuous", "preimage of " + set_to_string(*w));
  }
  auto base = induce_from_global(y, subset);
  auto tX = subspace_topology(tY, subset);
  auto m = make_top_module(std::move(base), std::move(tX), M);
  OpenSet s = 0;
  for (auto p : subset) s |= singleton(p);
  if (tY.is_open(s) && !is_topological_partial_action(m).value) {
    detail::internal_error("OpenRestrictionNotTPA", "restriction along an open embedding is not a TPA");
  }
  return m;
}

struct EpsilonEmbeddingReport {
  bool open_embedding = false;
  bool identity_holds = true;  // κ⁻¹(ε(V)) = π(ρ⁻¹(V)) for all V in tX
};

inline EpsilonEmbeddingReport check_epsilon_open_embedding(const TopPartialModule& m, const TopGlobalizationResult& r) {
  if (!r.globalizable) throw Error("NotGlobalizable", "ε is only defined for a globalization", ErrorKind::Math);
  EpsilonEmbeddingReport rep;
  rep.open_embedding = is_open_embedding(r.set.epsilon, m.tX, r.tY);
  const auto dom = m.base.domain();
  const auto rho = m.rho();
  for (auto v : m.tX.opens()) {
    const OpenSet lhs = preimage(r.set.kappa, image(r.set.epsilon, v));
    OpenSet rhs = 0;
    for (std::size_t k = 0; k < dom.size(); ++k)
      if (contains(v, rho[k])) rhs |= singleton(dom[k]);
    if (lhs != rhs) rep.identity_holds = false;
  }
  if (is_topological_partial_action(m).value && !rep.open_embedding) {
    detail::internal_error("EpsilonNotOpenEmbedding", "a topological partial action must embed openly");
  }
  return rep;
}

}  // namespace globalize
