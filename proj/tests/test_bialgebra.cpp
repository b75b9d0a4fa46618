#include <gtest/gtest.h>

#include <random>

#include "globalize/bialgebra.hpp"
#include "oracles.hpp"

using namespace globalize;

namespace {

const Field Q = Field::rationals();

std::string code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code() + ":" + e.witness();
  }
  return "";
}

// kZ/2 with Δ(e) = e⊗e and the given Δ(g), ε = (1, 1).
Bialgebra kz2_with(const Vec& delta_g) {
  const auto a = group_algebra(cyclic(2), Q);
  const Vec de{Scalar(Q, 1), Scalar(Q, 0), Scalar(Q, 0), Scalar(Q, 0)};
  return validate_bialgebra(a, LinMap::from_columns(Q, 4, {de, delta_g}),
                            LinMap::from_rows(Q, 2, {{Scalar(Q, 1), Scalar(Q, 1)}}));
}

Vec q_vec(std::initializer_list<long> xs) {
  Vec v;
  for (auto x : xs) v.push_back(Scalar(Q, x));
  return v;
}

Vec h4_f(Field f, const Scalar& alpha) {
  const Scalar half = Scalar(f, 2).inverse();
  return {half, half, Scalar::zero(f), half * alpha};
}

}  // namespace

TEST(Bialgebra, GroupBialgebrasAreGroupLike) {
  for (const auto& g : {cyclic(1), cyclic(2), symmetric(3)}) {
    const auto b = group_bialgebra(g, Q);
    EXPECT_EQ(b.dim(), g.size());
    for (std::size_t i = 0; i < b.dim(); ++i) {
      const Vec e = b.H.basis(i);
      EXPECT_EQ(b.delta(e), kron(e, e));
      EXPECT_TRUE(b.epsilon(e).is_one());
    }
  }
  EXPECT_EQ(group_bialgebra(cyclic(1), Q).H.dim(), ground_algebra(Q).dim());
}

TEST(Bialgebra, ValidationFailures) {
  // index a*2 + b for a⊗b, basis (e, g)
  EXPECT_EQ(code_of([] { kz2_with(q_vec({0, 0, 0, 1})); }), "");
  EXPECT_EQ(code_of([] { kz2_with(q_vec({0, 0, 1, 0})); }), "BadCounit:g");            // g⊗e
  EXPECT_EQ(code_of([] { kz2_with(q_vec({1, 0, 0, 1})); }), "NotCoassociative:g");     // g⊗g + e⊗e
  EXPECT_EQ(code_of([] { kz2_with(q_vec({-1, 1, 1, 0})); }), "DeltaNotMultiplicative:(g,g)");  // e⊗g + g⊗e − e⊗e
  EXPECT_EQ(code_of([] {
              const auto a = group_algebra(cyclic(2), Q);
              validate_bialgebra(a, LinMap(Q, 3, 2), LinMap(Q, 1, 2));
            }).substr(0, 8),
            "BadShape");
}

TEST(H4, RelationsAndCoproduct) {
  const auto h = sweedler_h4(Q);
  const auto& a = h.H;
  const Vec one = a.basis(0), g = a.basis(1), x = a.basis(2), gx = a.basis(3);
  EXPECT_EQ(a.mul(g, g), one);
  EXPECT_EQ(a.mul(x, x), a.zero());
  EXPECT_EQ(a.mul(x, g), Scalar(Q, -1) * a.mul(g, x));
  EXPECT_EQ(a.mul(g, x), gx);
  // Δ(gx) = Δ(g)Δ(x) = gx⊗g + 1⊗gx
  const auto hh = tensor_algebra(a, a);
  EXPECT_EQ(h.delta(gx), hh.mul(h.delta(g), h.delta(x)));
  EXPECT_EQ(h.delta(gx), kron(gx, g) + kron(one, gx));
  EXPECT_EQ(h.delta(x), kron(x, one) + kron(g, x));
  EXPECT_TRUE(h.epsilon(x).is_zero());
  EXPECT_TRUE(h.epsilon(gx).is_zero());
  EXPECT_TRUE(h.epsilon(g).is_one());
  EXPECT_EQ(code_of([] { sweedler_h4(Field::prime(2)); }).substr(0, 7), "CharTwo");
  EXPECT_NO_THROW(sweedler_h4(Field::prime(5)));
}

TEST(H4, MinusSignIsNotCoassociative) {
  const auto h = sweedler_h4(Q);
  LinMap comult = h.comult;
  comult(1 * 4 + 2, 2) = Scalar(Q, -1);  // Δ(x) = x⊗1 − g⊗x
  comult(0 * 4 + 3, 3) = Scalar(Q, -1);  // Δ(gx) = gx⊗g − 1⊗gx
  EXPECT_EQ(code_of([&] { validate_bialgebra(h.H, comult, h.counit); }), "NotCoassociative:x");
}

TEST(H4, IdempotentF) {
  const auto h = sweedler_h4(Q);
  for (const Scalar& alpha : {Scalar(Q, 0), Scalar(Q, 1), Scalar(Q, -3), Scalar(Q, 5) / Scalar(Q, 7)}) {
    const Vec f = h4_f(Q, alpha);
    EXPECT_EQ(h.H.mul(f, f), f);
    EXPECT_TRUE(h.epsilon(f).is_one());
  }
  const Field f5 = Field::prime(5);
  const auto h5 = sweedler_h4(f5);
  for (long alpha = 0; alpha < 5; ++alpha) {
    const Vec f = h4_f(f5, Scalar(f5, alpha));
    EXPECT_EQ(h5.H.mul(f, f), f);
  }
}

TEST(Slice, Examples) {
  const auto h = sweedler_h4(Q);
  const std::vector<std::size_t> dims = {4, 4, 4};
  // e_i⊗e_j⊗e_k sliced on the last leg by e_k* gives e_i⊗e_j
  const Vec v = kron(kron(h.H.basis(1), h.H.basis(2)), h.H.basis(3));
  EXPECT_EQ(slice(v, dims, 2, 3), kron(h.H.basis(1), h.H.basis(2)));
  EXPECT_TRUE(is_zero(slice(v, dims, 2, 0)));
  EXPECT_EQ(slice(v, dims, 0, 1), kron(h.H.basis(2), h.H.basis(3)));
  // contracting with ε is applying the counit to that leg
  const Vec d = h.delta(h.H.basis(2));
  EXPECT_EQ(contract_leg(d, {4, 4}, 1, h.counit.row(0)), apply_on_leg(h.counit, d, {4, 4}, 1));
  EXPECT_EQ(contract_leg(d, {4, 4}, 1, h.counit.row(0)), h.H.basis(2));
  // slices of Δ(f), α = 0, span {1, g} = span {1, f}
  const Vec f = h4_f(Q, Scalar(Q, 0));
  std::vector<Vec> slices;
  for (std::size_t k = 0; k < 4; ++k) slices.push_back(slice(h.delta(f), {4, 4}, 1, k));
  EXPECT_EQ(Subspace::span(Q, 4, slices), Subspace::span(Q, 4, {h.H.basis(0), f}));
  EXPECT_EQ(code_of([&] { slice(v, dims, 3, 0); }).substr(0, 8), "BadShape");
}

TEST(Property, SlicesReassemble) {
  std::mt19937_64 rng(31);
  for (int t = 0; t < 30; ++t) {
    const std::vector<std::size_t> dims = {2, 3, static_cast<std::size_t>(1 + t % 4)};
    const Vec v = oracle::random_matrix(rng, Q, 6 * dims[2], 1).column(0);
    for (std::size_t leg = 0; leg < 3; ++leg) {
      Vec back = zero_vec(Q, v.size());
      for (std::size_t k = 0; k < dims[leg]; ++k) {
        const Vec s = slice(v, dims, leg, k);
        // reinsert e_k at position `leg`
        LinMap ins(Q, dims[leg], 1);
        ins(k, 0) = Scalar::one(Q);
        std::vector<std::size_t> sd = dims;
        sd[leg] = 1;
        back = back + apply_on_leg(ins, s, sd, leg);
      }
      EXPECT_EQ(back, v);
    }
  }
}

TEST(Property, ApplyOnLegIsKron) {
  std::mt19937_64 rng(37);
  for (int t = 0; t < 20; ++t) {
    const std::vector<std::size_t> dims = {2, 3, 2};
    const Vec v = oracle::random_matrix(rng, Q, 12, 1).column(0);
    const LinMap m = oracle::random_matrix(rng, Q, 4, 3);
    const LinMap full = kron(kron(LinMap::identity(Q, 2), m), LinMap::identity(Q, 2));
    EXPECT_EQ(apply_on_leg(m, v, dims, 1), full * v);
  }
}

TEST(Property, BuiltinsPassTheAxiomsOverPrimeFields) {
  for (std::uint64_t p : {3u, 5u, 7u}) {
    const Field f = Field::prime(p);
    const auto h = sweedler_h4(f);
    EXPECT_NO_THROW(validate_bialgebra(h.H, h.comult, h.counit));
    const auto g = group_bialgebra(symmetric(3), f);
    EXPECT_NO_THROW(validate_bialgebra(g.H, g.comult, g.counit));
  }
}
