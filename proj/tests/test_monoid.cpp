#include <gtest/gtest.h>

#include <set>

#include "globalize/monoid.hpp"

using namespace globalize;

namespace {

// Exhaustive associativity and identity, independent of validate_monoid.
bool laws_hold(const FiniteMonoid& m) {
  const std::size_t n = m.size();
  for (std::size_t a = 0; a < n; ++a) {
    if (m.mul(m.identity(), a) != a || m.mul(a, m.identity()) != a) return false;
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (m.mul(m.mul(a, b), c) != m.mul(a, m.mul(b, c))) return false;
  }
  return true;
}

std::string code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return "";
}

}  // namespace

TEST(Monoid, TrivialAndCyclic) {
  const auto t = cyclic(1);
  EXPECT_EQ(t.size(), 1u);
  EXPECT_TRUE(is_group(t));
  const auto z2 = cyclic(2);
  EXPECT_EQ(z2.labels(), (std::vector<std::string>{"e", "g"}));
  EXPECT_EQ(z2.mul(1, 1), 0u);
  for (std::size_t n = 1; n <= 6; ++n) {
    EXPECT_TRUE(is_group(cyclic(n)));
    EXPECT_TRUE(laws_hold(cyclic(n)));
  }
}

TEST(Monoid, ValidationReportsFirstFailure) {
  EXPECT_EQ(code_of([] { validate_monoid({"e", "g"}, {1, 1, 0, 1}, 0); }), "BadIdentity");
  // e·g = g, g·g = g, g·e = e: identity law fails on the right
  EXPECT_EQ(code_of([] { validate_monoid({"e", "g"}, {0, 1, 0, 1}, 0); }), "BadIdentity");
  EXPECT_EQ(code_of([] { validate_monoid({"e", "g"}, {0, 1, 1, 7}, 0); }), "BadIndex");
  EXPECT_EQ(code_of([] { validate_monoid({"e", "a", "b"}, {0, 1, 2, 1, 2, 0, 2, 1, 1}, 0); }), "NotAssociative");
  try {
    validate_monoid({"e", "a", "b"}, {0, 1, 2, 1, 2, 0, 2, 1, 1}, 0);
  } catch (const Error& e) {
    EXPECT_EQ(e.witness(), "(a,a,a)");
  }
  EXPECT_EQ(code_of([] { validate_monoid({"e", "e"}, {0, 1, 1, 0}, 0); }), "DuplicateLabel");
}

TEST(Monoid, SymmetricGroup) {
  const auto s3 = symmetric(3);
  EXPECT_EQ(s3.size(), 6u);
  EXPECT_EQ(s3.label(0), "123");
  const auto inv = group_inverses(s3);
  ASSERT_TRUE(inv);
  for (std::size_t a = 0; a < 6; ++a) {
    EXPECT_EQ(s3.mul(a, (*inv)[a]), s3.identity());
    EXPECT_EQ(s3.mul((*inv)[a], a), s3.identity());
  }
  // noncommutative
  bool commutes = true;
  for (std::size_t a = 0; a < 6; ++a)
    for (std::size_t b = 0; b < 6; ++b) commutes &= s3.mul(a, b) == s3.mul(b, a);
  EXPECT_FALSE(commutes);
  EXPECT_EQ(symmetric(4).size(), 24u);
  EXPECT_TRUE(laws_hold(symmetric(4)));
  EXPECT_EQ(code_of([] { symmetric(0); }), "BadParameter");
}

TEST(Monoid, IdempotentIsNotAGroup) {
  const auto m = validate_monoid({"e", "z"}, {0, 1, 1, 1}, 0);
  EXPECT_FALSE(is_group(m));
  EXPECT_FALSE(group_inverses(m));
}

TEST(Monoid, BicyclicTruncation) {
  for (std::size_t n = 1; n <= 4; ++n) {
    const auto b = bicyclic_truncated(n);
    EXPECT_TRUE(laws_hold(b));
    if (n > 1) {
      EXPECT_FALSE(is_group(b));
    }
  }
  // pq is the identity restricted to {1, ..., n-1}: idempotent, not e
  const auto b3 = bicyclic_truncated(3);
  const auto pq = b3.mul(b3.index_of("p"), b3.index_of("q"));
  EXPECT_EQ(b3.mul(pq, pq), pq);
  EXPECT_NE(pq, b3.identity());
}

TEST(Monoid, ProductOfMonoids) {
  const auto m = product(cyclic(2), cyclic(3));
  EXPECT_EQ(m.size(), 6u);
  EXPECT_TRUE(laws_hold(m));
  EXPECT_TRUE(is_group(m));
  EXPECT_EQ(m.label(m.identity()), "(e;e)");
}

TEST(Quotient, WholeGroupGivesTrivialQuotient) {
  const auto z2 = cyclic(2);
  const auto q = quotient_group(z2, make_subgroup(z2, {0, 1}));
  EXPECT_EQ(q.quotient.size(), 1u);
  EXPECT_EQ(q.representatives, (std::vector<std::size_t>{0}));
}

TEST(Quotient, S3ByA3IsZ2WithMorphism) {
  const auto s3 = symmetric(3);
  const auto a3 = make_subgroup(s3, {s3.index_of("123"), s3.index_of("231"), s3.index_of("312")});
  const auto q = quotient_group(s3, a3);
  EXPECT_EQ(q.quotient.size(), 2u);
  EXPECT_TRUE(is_group(q.quotient));
  for (std::size_t a = 0; a < 6; ++a)
    for (std::size_t b = 0; b < 6; ++b)
      EXPECT_EQ(q.projection[s3.mul(a, b)], q.quotient.mul(q.projection[a], q.projection[b]));
  // every g factors uniquely as n·g_i
  for (std::size_t g = 0; g < 6; ++g) {
    std::size_t factorizations = 0;
    for (auto n : a3.members)
      for (auto r : q.representatives) factorizations += s3.mul(n, r) == g;
    EXPECT_EQ(factorizations, 1u);
  }
}

TEST(Quotient, NonNormalSubgroupRejected) {
  const auto s3 = symmetric(3);
  EXPECT_EQ(code_of([&] { quotient_group(s3, make_subgroup(s3, {0, s3.index_of("213")})); }), "NotNormal");
  EXPECT_EQ(code_of([&] { make_subgroup(s3, {0, s3.index_of("231")}); }), "NotSubgroup");
}
