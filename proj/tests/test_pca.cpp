#include <gtest/gtest.h>

#include <random>

#include "globalize/pca.hpp"
#include "oracles.hpp"

using namespace globalize;

namespace {

const Field Q = Field::rationals();

std::string code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return "";
}

SubgroupSpec alt3(const FiniteMonoid& s3) {
  return make_subgroup(s3, {s3.index_of("123"), s3.index_of("231"), s3.index_of("312")});
}

// Every invariant the pipeline promises, rechecked from the outputs.
void expect_pipeline_invariants(const AlgebraicPCA& p) {
  const auto glob = globalize_pca(p);
  const auto& g = glob.geo;
  EXPECT_EQ(p.AH.mul(g.e_prime, g.e_prime), g.e_prime);
  EXPECT_TRUE(glob.Y.contains(g.e_prime));
  EXPECT_TRUE(glob.pushout);
  EXPECT_EQ(glob.kappa * glob.vartheta, p.coaction);
  EXPECT_EQ(glob.epsilonA * glob.vartheta, LinMap::identity(p.field(), p.dA()));
  EXPECT_EQ(g.AbulletH.algebra.dim() + g.ideal.closure.dim(), p.AH.dim());
  // Y is a unital subalgebra, and its coaction is coassociative and counital
  EXPECT_TRUE(glob.Y.contains(p.AH.unit()));
  for (const auto& u : glob.Y.basis()) {
    const Vec du = p.coact(u);
    EXPECT_EQ(apply_on_leg(p.H.counit, du, p.dims3(), 2), u);
    EXPECT_EQ(apply_on_leg(p.H.comult, du, p.dims3(), 1), apply_on_leg(p.H.comult, du, p.dims3(), 2));
  }
  const auto env = enveloping_coaction(p);
  const auto cmp = compare_envelope_globalization(p, glob, env);
  EXPECT_LE(cmp.dimB, cmp.dimY);
  EXPECT_EQ(rank(cmp.varkappa), env.B.dim());
  EXPECT_EQ(glob.epsilonA * cmp.j, env.p);
  EXPECT_EQ(glob.kappa * cmp.j, cmp.varkappa);
  for (const auto& [name, v] : cmp.checks) EXPECT_TRUE(v) << name;
}

}  // namespace

TEST(Verify, GlobalCoactionsPassWithZeroEPrime) {
  for (const auto& h : {sweedler_h4(Q), group_bialgebra(cyclic(2), Q), group_bialgebra(symmetric(3), Q)}) {
    const auto p = global_self_fixture(h);
    const auto g = geometrize(p);
    EXPECT_TRUE(is_zero(g.e_prime));
    EXPECT_EQ(g.AbulletH.algebra.dim(), p.AH.dim());
    EXPECT_EQ(g.piA, LinMap::identity(Q, p.AH.dim()));
  }
  const auto t = global_trivial_fixture(sweedler_h4(Q));
  EXPECT_TRUE(is_zero(geometrize(t).e_prime));
}

TEST(Verify, Failures) {
  const auto kz2 = group_bialgebra(cyclic(2), Q);
  const auto k = ground_algebra(Q);
  // δ(1) = g: counital but g² ≠ g
  EXPECT_EQ(code_of([&] { verify_algebraic_pca(k, kz2, LinMap::from_columns(Q, 2, {kz2.H.basis(1)})); }),
            "NotMultiplicative");
  // scaling a valid coaction breaks counitality first
  const auto ab2 = ab2_fixture(Scalar(Q, 0));
  EXPECT_EQ(code_of([&] { verify_algebraic_pca(ab2.A, ab2.H, Scalar(Q, 2) * ab2.coaction); }), "NotCounital");
  EXPECT_EQ(code_of([&] { verify_algebraic_pca(k, kz2, LinMap(Q, 3, 1)); }), "BadShape");
  EXPECT_EQ(code_of([&] { verify_algebraic_pca(k, group_bialgebra(cyclic(2), Field::prime(3)), LinMap(Q, 2, 1)); }),
            "FieldMismatch");
}

TEST(Verify, WeakCoassociativityFailure) {
  // over F_7, kZ/3 splits into three characters; w = e_1 + e_χ is an idempotent with ε(w) = 1
  // but w·g ≠ w, so δ(1) = w is counital and multiplicative without being weakly coassociative
  const Field f7 = Field::prime(7);
  const auto h = group_bialgebra(cyclic(3), f7);
  const Scalar third = Scalar(f7, 3).inverse();
  const Vec e1{third, third, third};
  const Vec echi{third, third * Scalar(f7, 4), third * Scalar(f7, 2)};  // ζ = 2, ζ⁻¹ = 4, ζ⁻² = 2
  const Vec w = e1 + echi;
  ASSERT_EQ(h.H.mul(w, w), w);
  ASSERT_TRUE(h.epsilon(w).is_one());
  EXPECT_EQ(code_of([&] { verify_algebraic_pca(ground_algebra(f7), h, LinMap::from_columns(f7, 3, {w})); }),
            "NotWeaklyCoassociative");
  EXPECT_NO_THROW(verify_algebraic_pca(ground_algebra(f7), h, LinMap::from_columns(f7, 3, {e1})));
}

TEST(IdempotentCoaction, GeometryAndGlobalization) {
  for (long a : {0, 1}) {
    const Scalar alpha(Q, a);
    const auto p = ab2_fixture(alpha);
    const Vec f = h4_idempotent(Q, alpha);
    const auto glob = globalize_pca(p);
    EXPECT_EQ(glob.geo.e_prime, p.AH.unit() - f);
    EXPECT_EQ(glob.geo.ideal.closure, kernel(p.H.counit));
    EXPECT_EQ(glob.geo.ideal.closure.dim(), 3u);
    EXPECT_EQ(glob.geo.AbulletH.algebra.dim(), 1u);
    EXPECT_EQ(glob.geo.piA, p.H.counit);
    EXPECT_EQ(glob.Y.dim(), 4u);
    // ϑ(1) = f, and ε_A is ε read through Y's coordinates
    EXPECT_EQ(glob.kappa * glob.vartheta.column(0), f);
    EXPECT_EQ(glob.epsilonA, p.H.counit * glob.kappa);
    const auto env = enveloping_coaction(p);
    EXPECT_EQ(env.B, Subspace::span(Q, 4, {p.AH.unit(), f}));
    EXPECT_EQ(env.e, f);
    const auto cmp = compare_envelope_globalization(p, glob, env);
    EXPECT_TRUE(cmp.strict);
    EXPECT_EQ(cmp.dimB, 2u);
    EXPECT_EQ(cmp.varkappa, env.B.basis_matrix());
  }
}

TEST(IntegralCoaction, Z2ByZ2) {
  const auto z2 = cyclic(2);
  const auto d = ab1_fixture(z2, make_subgroup(z2, {0, 1}), Q);
  const Scalar half = Scalar(Q, 1) / Scalar(Q, 2);
  EXPECT_EQ(d.pca.dA(), 1u);
  EXPECT_EQ(d.t, (Vec{half, half}));
  const auto glob = globalize_pca(d.pca);
  // e′ = t ⊗ (e − g)/2 with t the only basis vector of A
  EXPECT_EQ(glob.geo.e_prime, (Vec{half, -half}));
  EXPECT_EQ(glob.geo.AbulletH.algebra.dim(), 1u);
  EXPECT_EQ(glob.Y.dim(), 2u);
  const auto env = enveloping_coaction(d.pca);
  EXPECT_EQ(env.B.dim(), 2u);
  const auto cmp = compare_envelope_globalization(d.pca, glob, env);
  EXPECT_FALSE(cmp.strict);
}

TEST(IntegralCoaction, S3ByA3) {
  const auto s3 = symmetric(3);
  const auto d = ab1_fixture(s3, alt3(s3), Q);
  EXPECT_EQ(d.pca.dA(), 2u);
  // A ≅ Q[Z/2]: the non-unit basis vector squares to the unit
  const std::size_t u = d.pca.A.unit()[0].is_one() ? 1 : 0;
  EXPECT_EQ(d.pca.A.mul(d.pca.A.basis(u), d.pca.A.basis(u)), d.pca.A.unit());
  const auto glob = globalize_pca(d.pca);
  EXPECT_EQ(glob.Y.dim(), 6u);
  // Y = span{tg ⊗ g}
  std::vector<Vec> tgg;
  const auto kg = group_algebra(s3, Q);
  for (std::size_t g = 0; g < 6; ++g) {
    const Vec tg = kg.mul(d.t, kg.basis(g));
    const std::size_t coset = d.cosets.projection[g];
    Vec in_a = d.pca.A.zero();
    // tg = t·g_i for the representative of g's coset
    in_a[coset] = Scalar::one(Q);
    ASSERT_EQ(d.embedding * in_a, tg);
    tgg.push_back(kron(in_a, kg.basis(g)));
  }
  EXPECT_EQ(glob.Y, Subspace::span(Q, 12, tgg));
  // ϑ(tg_i) = tg_i ⊗ tg_i
  for (std::size_t i = 0; i < 2; ++i)
    EXPECT_EQ(glob.kappa * glob.vartheta.column(i), kron(d.pca.A.basis(i), d.embedding.column(i)));
  const auto cmp = compare_envelope_globalization(d.pca, glob, enveloping_coaction(d.pca));
  EXPECT_EQ(cmp.dimB, 6u);
  EXPECT_FALSE(cmp.strict);
}

TEST(IntegralCoaction, CharacteristicRestrictions) {
  const auto s3 = symmetric(3);
  EXPECT_EQ(code_of([&] { ab1_fixture(s3, alt3(s3), Field::prime(3)); }), "CharDividesN");
  EXPECT_NO_THROW(ab1_fixture(s3, alt3(s3), Field::prime(5)));
  EXPECT_EQ(code_of([&] { ab1_fixture(s3, make_subgroup(s3, {0, s3.index_of("213")}), Q); }), "NotNormal");
  EXPECT_EQ(code_of([] { ab2_fixture(Scalar(Field::prime(2), 1)); }), "CharTwo");
}

TEST(Global, CollapsesToA) {
  for (const auto& h : {sweedler_h4(Q), group_bialgebra(symmetric(3), Q)}) {
    const auto p = global_self_fixture(h);
    const auto glob = globalize_pca(p);
    EXPECT_EQ(glob.Y.dim(), p.dA());
    EXPECT_EQ(glob.Y, image(p.coaction));
    const auto env = enveloping_coaction(p);
    EXPECT_EQ(env.B, image(p.coaction));
    const auto cmp = compare_envelope_globalization(p, glob, env);
    EXPECT_FALSE(cmp.strict);
    EXPECT_EQ(rank(cmp.j), p.dA());
  }
}

TEST(Property, FixturesSatisfyTheInvariants) {
  const auto s3 = symmetric(3);
  const auto z2 = cyclic(2);
  std::vector<AlgebraicPCA> all = {ab2_fixture(Scalar(Q, 0)), ab2_fixture(Scalar(Q, 1)), ab2_fixture(Scalar(Q, -2) / Scalar(Q, 3)),
                                   ab1_fixture(z2, make_subgroup(z2, {0, 1}), Q).pca,
                                   ab1_fixture(s3, alt3(s3), Q).pca,
                                   ab1_fixture(s3, make_subgroup(s3, {0}), Q).pca,
                                   ab1_fixture(s3, alt3(s3), Field::prime(5)).pca,
                                   ab2_fixture(Scalar(Field::prime(7), 3)),
                                   global_self_fixture(sweedler_h4(Q)),
                                   global_trivial_fixture(sweedler_h4(Q))};
  for (const auto& p : all) expect_pipeline_invariants(p);
}

TEST(Property, ChangeOfBasisPreservesDimensions) {
  std::mt19937_64 rng(41);
  const auto s3 = symmetric(3);
  const std::vector<AlgebraicPCA> base = {ab1_fixture(s3, alt3(s3), Q).pca, global_self_fixture(group_bialgebra(cyclic(2), Q)),
                                          global_self_fixture(sweedler_h4(Q))};
  for (int t = 0; t < 12; ++t) {
    const auto& p = base[static_cast<std::size_t>(t) % base.size()];
    const auto moved = transport_pca(p, oracle::random_invertible(rng, Q, p.dA()));
    const auto g0 = globalize_pca(p), g1 = globalize_pca(moved);
    EXPECT_EQ(g0.geo.ideal.closure.dim(), g1.geo.ideal.closure.dim());
    EXPECT_EQ(g0.Y.dim(), g1.Y.dim());
    EXPECT_EQ(enveloping_coaction(p).B.dim(), enveloping_coaction(moved).B.dim());
    expect_pipeline_invariants(moved);
  }
}
