#include <gtest/gtest.h>

#include "katzp/pdcalc.hpp"

using namespace katzp;

namespace {

TruncPdSequence seq(const TruncatedRing& ring, std::vector<TruncElem> entries) {
  return TruncPdSequence(ring, std::move(entries));
}

}  // namespace

TEST(PdAdd, ZeroSequenceIsIdentity) {
  const TruncatedRing ring(3, 9);
  const auto a = pd_canonical(ring, ring.x_power(3), 8);
  EXPECT_EQ(pd_add(a, TruncPdSequence::zero(ring, 8)), a);
}

TEST(PdAdd, SecondEntryMatchesGroupLawDisplay) {
  Rng rng(1);
  const TruncatedRing ring(5, 16);
  for (int i = 0; i < 50; ++i) {
    const auto a = random_pd_sequence(rng, ring, 16), b = random_pd_sequence(rng, ring, 16);
    EXPECT_EQ(pd_add(a, b)[2], a[2] + a[1] * b[1] + b[2]);
  }
}

TEST(PdAdd, CanonicalOfOppositeElementsCancels) {
  // x^3 is 3-nilpotent in F_3[x]/(x^9); canonical(x^3) = (1, x^3, 2x^6, 0, ...).
  const TruncatedRing ring(3, 9);
  const auto a = pd_canonical(ring, ring.x_power(3), 8);
  const auto b = pd_canonical(ring, ring.x_power(3, -1), 8);
  // brute-force convolution, written out independently of pd_add
  std::vector<TruncElem> expected(9, ring.zero());
  for (std::size_t n = 0; n <= 8; ++n) {
    TruncElem acc = ring.zero();
    for (std::size_t i = 0; i <= n; ++i) acc += a[i] * b[n - i];
    expected[n] = acc;
  }
  EXPECT_EQ(seq(ring, expected), TruncPdSequence::zero(ring, 8));
  EXPECT_EQ(pd_add(a, b), TruncPdSequence::zero(ring, 8));
}

TEST(PdAdd, MismatchedRingsThrow) {
  const auto a = TruncPdSequence::zero(TruncatedRing(3, 9), 4);
  const auto b = TruncPdSequence::zero(TruncatedRing(3, 8), 4);
  const auto c = TruncPdSequence::zero(TruncatedRing(3, 9), 5);
  try {
    pd_add(a, b);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::RingMismatch);
  }
  EXPECT_THROW(pd_add(a, c), Error);
}

TEST(PdCanonical, Examples) {
  const TruncatedRing r3(3, 3);
  EXPECT_EQ(pd_canonical(r3, r3.zero(), 5), TruncPdSequence::zero(r3, 5));

  const auto a = pd_canonical(r3, r3.x_power(1), 5);
  EXPECT_EQ(a, seq(r3, {r3.one(), r3.x_power(1), r3.x_power(2, 2), r3.zero(), r3.zero(), r3.zero()}));
  EXPECT_TRUE(a.is_valid());

  const TruncatedRing r5(5, 4);
  const auto b = pd_canonical(r5, r5.x_power(2), 6);
  EXPECT_EQ(b[1], r5.x_power(2));
  for (std::size_t n = 2; n <= 6; ++n) EXPECT_TRUE(b[n].is_zero());
  EXPECT_TRUE(b.is_valid());

  try {
    pd_canonical(TruncatedRing(3, 4), TruncatedRing(3, 4).x_power(1), 4);
    FAIL() << "x^3 != 0 in F_3[x]/(x^4)";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotPNilpotent);
  }
}

TEST(PdSequence, ValidationPinpointsFirstViolation) {
  const TruncatedRing ring(3, 9);
  // (1, x, x^2, 0): 2 a_2 = 2x^2 but a_1^2 = x^2
  const auto bad = seq(ring, {ring.one(), ring.x_power(1), ring.x_power(2), ring.zero()});
  const auto rep = bad.validate();
  EXPECT_FALSE(rep.valid);
  ASSERT_TRUE(rep.violated.has_value());
  EXPECT_EQ(*rep.violated, std::make_pair(std::size_t{1}, std::size_t{1}));

  const auto no_tail = seq(ring, {ring.one(), ring.x_power(3)});
  EXPECT_FALSE(no_tail.validate().nilpotence_witness.has_value());
  EXPECT_FALSE(no_tail.is_valid());
}

TEST(PdVerschiebung, Examples) {
  const TruncatedRing r2(2, 4);
  EXPECT_EQ(pd_verschiebung(TruncPdSequence::zero(r2, 3), 6), TruncPdSequence::zero(r2, 6));
  // x is not 2-nilpotent mod x^4, so the canonical sequence is taken on x^2
  const auto a = pd_canonical(r2, r2.x_power(2), 3);
  EXPECT_EQ(a, seq(r2, {r2.one(), r2.x_power(2), r2.zero(), r2.zero()}));
  const auto b = pd_verschiebung(a, 6);
  EXPECT_EQ(b, seq(r2, {r2.one(), r2.zero(), r2.x_power(2), r2.zero(), r2.zero(), r2.zero(), r2.zero()}));
  EXPECT_TRUE(b.is_valid());

  const TruncatedRing r2small(2, 2);
  const auto c = pd_verschiebung(pd_canonical(r2small, r2small.x_power(1), 2), 5);
  EXPECT_EQ(c[2], r2small.x_power(1));
  EXPECT_TRUE(c[1].is_zero());
  EXPECT_TRUE(pd_forget(b).is_zero());

  try {
    pd_verschiebung(a, 8);
    FAIL() << "b_8 needs a_4 beyond the window";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::TruncationTooSmall);
  }
}

TEST(PdVerschiebung, InjectiveOnRandomPairs) {
  Rng rng(50);
  const TruncatedRing ring(3, 16);
  int distinct = 0;
  while (distinct < 50) {
    const auto a = random_pd_sequence(rng, ring, 5), b = random_pd_sequence(rng, ring, 5);
    if (a == b) continue;
    ++distinct;
    EXPECT_NE(pd_verschiebung(a, 15), pd_verschiebung(b, 15));
  }
}

TEST(PdForget, Examples) {
  const TruncatedRing ring(3, 3);
  EXPECT_TRUE(pd_forget(TruncPdSequence::zero(ring, 4)).is_zero());
  EXPECT_EQ(pd_forget(pd_canonical(ring, ring.x_power(1), 4)), ring.x_power(1));
}

TEST(FrobeniusKernel, Examples) {
  const auto a = frobenius_kernel_check(TruncatedRing(3, 3));
  EXPECT_EQ(a.predicted_generator_degree, 1u);
  EXPECT_EQ(a.kernel_dimension, 2u);
  EXPECT_TRUE(a.enumerated);
  EXPECT_TRUE(a.ok());

  const auto b = frobenius_kernel_check(TruncatedRing(2, 4));
  EXPECT_EQ(b.predicted_generator_degree, 2u);
  EXPECT_EQ(b.kernel_dimension, 2u);
  EXPECT_TRUE(b.ok());

  const auto c = frobenius_kernel_check(TruncatedRing(5, 2));
  EXPECT_EQ(c.predicted_generator_degree, 1u);
  EXPECT_TRUE(c.ok());

  const auto big = frobenius_kernel_check(TruncatedRing(7, 16));
  EXPECT_FALSE(big.enumerated);
  EXPECT_EQ(big.kernel_dimension, 16u - 3u);
  EXPECT_TRUE(big.ok());
}

TEST(RandomPdSequence, AlwaysValid) {
  Rng rng(77);
  for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
    const TruncatedRing ring(p, 16);
    for (int i = 0; i < 100; ++i) {
      const auto a = random_pd_sequence(rng, ring, 16, i % 2 == 0);
      EXPECT_TRUE(a.is_valid());
      if (i % 2 == 0) {
        EXPECT_TRUE(pd_forget(a).is_zero());
      }
    }
  }
}

class PdSuite : public ::testing::TestWithParam<std::uint32_t> {};

TEST_P(PdSuite, GroupLawAndExactnessHold) {
  const auto rep = run_pd_suite(GetParam(), 16, 16, 200, 42);
  EXPECT_TRUE(rep.group_law);
  EXPECT_TRUE(rep.exactness);
  EXPECT_TRUE(rep.frobenius_kernel);
  for (const auto& v : rep.violations) ADD_FAILURE() << v;
}

INSTANTIATE_TEST_SUITE_P(Primes, PdSuite, ::testing::Values(2u, 3u, 5u, 7u));
