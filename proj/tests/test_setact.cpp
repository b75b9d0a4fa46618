#include <gtest/gtest.h>

#include <random>
#include <set>

#include "globalize/setact.hpp"
#include "oracles.hpp"

using namespace globalize;

namespace {

constexpr std::size_t U = PartialActionDatum::undefined;

// Z/2 = {e,g} on {1,2}, X_g = {1}, 1·g = 1 (or 2 for the broken variant).
PartialActionDatum z2part(std::size_t one_g = 0) {
  return PartialActionDatum(cyclic(2), {"1", "2"}, {0, one_g, 1, U});
}

std::size_t pair_of(const PartialActionDatum& d, const std::string& x, const std::string& m) {
  const auto xi = static_cast<std::size_t>(std::find(d.carrier().begin(), d.carrier().end(), x) - d.carrier().begin());
  return d.pair(xi, d.monoid().index_of(m));
}

// Same partition as the BFS oracle, up to renaming.
bool same_partition(const GlobalizationResult& r, const std::vector<std::size_t>& cls) {
  for (std::size_t a = 0; a < cls.size(); ++a)
    for (std::size_t b = 0; b < cls.size(); ++b)
      if ((r.kappa[a] == r.kappa[b]) != (cls[a] == cls[b])) return false;
  return true;
}

}  // namespace

TEST(PartialAction, Z2PartPasses) {
  const auto d = z2part();
  EXPECT_TRUE(verify_partial_action(d));
  EXPECT_TRUE(oracle::is_partial_action(d));
  EXPECT_EQ(d.domain().size(), 3u);
  EXPECT_EQ(d.domain_of(1), (std::vector<std::size_t>{0}));
}

TEST(PartialAction, BrokenZ2PartFailsAtGG1) {
  const auto d = z2part(1);
  const auto v = verify_partial_action(d);
  EXPECT_FALSE(v);
  EXPECT_EQ(v.code, "PA2");
  EXPECT_EQ(v.witness, "(g,g,1)");
  EXPECT_FALSE(oracle::is_partial_action(d));
}

TEST(PartialAction, UnitalityFailure) {
  const PartialActionDatum d(cyclic(2), {"1", "2"}, {1, U, 1, U});
  const auto v = verify_partial_action(d);
  EXPECT_EQ(v.code, "PA1");
}

TEST(PartialAction, GlobalActionsViewedAsPartial) {
  const auto y = regular_action(cyclic(3));
  const auto d = view_global_as_partial(y);
  EXPECT_TRUE(verify_partial_action(d));
  EXPECT_EQ(d.domain().size(), 9u);
  EXPECT_EQ(induce_from_global(y, {0, 1, 2}).rho_table(), d.rho_table());
  const auto t = view_global_as_partial(trivial_action(cyclic(1), {"a", "b"}));
  EXPECT_EQ(t.domain().size(), 2u);
}

TEST(PartialAction, InducedFromTranslations) {
  const auto z2 = induce_from_global(regular_action(cyclic(2)), {0});
  EXPECT_EQ(z2.domain(), (std::vector<std::size_t>{0}));
  const auto z4 = induce_from_global(regular_action(cyclic(4)), {0, 1});
  EXPECT_TRUE(verify_partial_action(z4));
  // X_0 = {0,1}, X_1 = {0}, X_2 = ∅, X_3 = {1}
  EXPECT_EQ(z4.domain_of(0), (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(z4.domain_of(1), (std::vector<std::size_t>{0}));
  EXPECT_TRUE(z4.domain_of(2).empty());
  EXPECT_EQ(z4.domain_of(3), (std::vector<std::size_t>{1}));
}

TEST(Globalize, Z2PartHasThreeClasses) {
  const auto d = z2part();
  const auto r = globalize_set(d);
  ASSERT_EQ(r.global.size(), 3u);
  EXPECT_EQ(r.global.carrier(), (std::vector<std::string>{"[1,e]", "[2,e]", "[2,g]"}));
  EXPECT_EQ(r.kappa[pair_of(d, "1", "e")], r.kappa[pair_of(d, "1", "g")]);
  const std::size_t g = 1;
  EXPECT_EQ(r.global.apply(0, g), 0u);
  EXPECT_EQ(r.global.apply(1, g), 2u);
  EXPECT_EQ(r.global.apply(2, g), 1u);
  EXPECT_TRUE(same_partition(r, oracle::relation_classes(d)));
  EXPECT_TRUE(check_GL1_pullback(d, r));
  EXPECT_TRUE(check_kappa_factorization(d, r));
}

TEST(Globalize, GlobalActionCollapsesToItself) {
  for (std::size_t n = 1; n <= 4; ++n) {
    const auto y = regular_action(cyclic(n));
    const auto r = globalize_set(view_global_as_partial(y));
    EXPECT_EQ(r.global.size(), y.size());
    EXPECT_TRUE(oracle::isomorphic(r.global, y));
  }
}

TEST(Globalize, TrivialPartialDatumGivesFreeAction) {
  const auto m = cyclic(3);
  std::vector<std::size_t> rho(2 * 3, U);
  rho[0] = 0;
  rho[3] = 1;
  const PartialActionDatum d(m, {"a", "b"}, rho);
  const auto r = globalize_set(d);
  EXPECT_EQ(r.global.size(), 6u);
  // [x,m]·n = [x,mn] on X×M
  for (std::size_t p = 0; p < 6; ++p)
    for (std::size_t n = 0; n < 3; ++n)
      EXPECT_EQ(r.global.apply(r.kappa[p], n), r.kappa[d.pair(d.pair_x(p), m.mul(d.pair_m(p), n))]);
}

TEST(Morphism, IdentityAndEpsilon) {
  const auto d = z2part();
  EXPECT_TRUE(verify_morphism({&d, &d, {0, 1}, [&] {
                                 std::vector<std::size_t> id(d.pair_count());
                                 for (std::size_t p = 0; p < id.size(); ++p) id[p] = p;
                                 return id;
                               }()}));
  const auto r = globalize_set(d);
  const auto iy = view_global_as_partial(r.global);
  EXPECT_TRUE(verify_morphism({&d, &iy, r.epsilon, canonical_f_dom(d, iy, r.epsilon)}));
}

TEST(Morphism, CollapseToAPoint) {
  const auto d = z2part();
  const auto pt = view_global_as_partial(trivial_action(cyclic(2), {"*"}));
  EXPECT_TRUE(verify_morphism({&d, &pt, {0, 0}, canonical_f_dom(d, pt, {0, 0})}));
  // a morphism into Z/2 acting regularly must send the fixed point 1 somewhere fixed: impossible
  const auto reg = view_global_as_partial(regular_action(cyclic(2)));
  EXPECT_FALSE(verify_morphism({&d, &reg, {0, 0}, canonical_f_dom(d, reg, {0, 0})}));
}

TEST(Morphism, InducedGlobalMapIsEquivariant) {
  const auto d = z2part();
  const auto pt = view_global_as_partial(trivial_action(cyclic(2), {"*"}));
  const PartialMorphism f{&d, &pt, {0, 0}, canonical_f_dom(d, pt, {0, 0})};
  const auto rd = globalize_set(d), rp = globalize_set(pt);
  const auto h = induced_global_map(f, rd, rp);
  EXPECT_TRUE(is_equivariant(rd.global, rp.global, h));
}

TEST(GL2, Z2PartAgainstSmallTargets) {
  const auto d = z2part();
  const auto r = globalize_set(d);
  const auto pt = check_GL2_universal(d, r, trivial_action(cyclic(2), {"*"}));
  EXPECT_TRUE(pt.verdict);
  EXPECT_EQ(pt.global_homs, 1u);
  EXPECT_EQ(pt.partial_homs, 1u);
  const auto reg = check_GL2_universal(d, r, regular_action(cyclic(2)));
  EXPECT_TRUE(reg.verdict);
  EXPECT_EQ(reg.global_homs, reg.partial_homs);
}

TEST(GL2, GlobalSourceMatchesGlobalHoms) {
  const auto y = regular_action(cyclic(2));
  const auto d = view_global_as_partial(y);
  const auto r = globalize_set(d);
  // Hom(Z/2, Z/2 ⊔ point) by brute force: 2 translations + 1 constant map to the point
  const GlobalAction z(cyclic(2), {"a", "b", "*"}, {0, 1, 1, 0, 2, 2});
  const auto rep = check_GL2_universal(d, r, z);
  EXPECT_TRUE(rep.verdict);
  EXPECT_EQ(rep.global_homs, 3u);
}

TEST(GL2, CapIsEnforced) {
  const auto d = view_global_as_partial(regular_action(cyclic(4)));
  const auto r = globalize_set(d);
  try {
    check_GL2_universal(d, r, regular_action(cyclic(4)), 100);
    FAIL() << "expected EnumerationTooLarge";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), "EnumerationTooLarge");
    EXPECT_EQ(e.kind(), ErrorKind::Cap);
  }
}

TEST(Property, RandomPartialActionsGlobalizeLikeTheOracle) {
  std::mt19937_64 rng(20240601);
  const std::vector<FiniteMonoid> monoids = {cyclic(1), cyclic(2), cyclic(3), bicyclic_truncated(2),
                                             validate_monoid({"e", "z"}, {0, 1, 1, 1}, 0), cyclic(5)};
  for (int t = 0; t < 300; ++t) {
    const auto& m = monoids[static_cast<std::size_t>(t) % monoids.size()];
    const std::size_t nx = 1 + static_cast<std::size_t>(t) % 4;
    std::vector<std::string> pts;
    for (std::size_t i = 0; i < nx; ++i) pts.push_back("x" + std::to_string(i));
    const auto d = oracle::random_partial_action(rng, trivial_action(m, pts));
    ASSERT_TRUE(verify_partial_action(d));
    const auto r = globalize_set(d);
    EXPECT_TRUE(same_partition(r, oracle::relation_classes(d)));
    EXPECT_TRUE(check_GL1_pullback(d, r));
    const auto iy = view_global_as_partial(r.global);
    EXPECT_TRUE(verify_morphism({&d, &iy, r.epsilon, canonical_f_dom(d, iy, r.epsilon)}));
    EXPECT_EQ(std::set<std::size_t>(r.epsilon.begin(), r.epsilon.end()).size(), d.size());
  }
}

TEST(Property, GlobalizationIsIdempotent) {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 50; ++t) {
    const auto d = oracle::random_partial_action(rng, regular_action(cyclic(1 + static_cast<std::size_t>(t) % 3)));
    const auto r = globalize_set(d);
    const auto again = globalize_set(view_global_as_partial(r.global));
    EXPECT_TRUE(oracle::isomorphic(again.global, r.global));
  }
}
