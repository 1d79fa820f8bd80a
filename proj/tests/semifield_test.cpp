#include "idemrep/semifield.hpp"

#include <gtest/gtest.h>

#include "generators.hpp"

namespace idemrep {
namespace {

using testing::kTags;
using testing::random_value;

const Value T0 = Value::neg_inf();
Value t(std::int64_t n, std::int64_t d = 1) { return Value::tropical(n, d); }
const Value b0 = Value::boolean(false);
const Value b1 = Value::boolean(true);

TEST(SemifieldAdd, Examples) {
  EXPECT_EQ(add(b1, b1), b1);
  EXPECT_EQ(add(t(3), T0), t(3));
  EXPECT_EQ(add(t(1, 2), t(2, 3)), t(2, 3));
}

TEST(SemifieldMul, Examples) {
  EXPECT_EQ(mul(t(3), t(4)), t(7));
  EXPECT_EQ(mul(t(3), T0), T0);
  EXPECT_EQ(mul(b1, b1), b1);
  EXPECT_EQ(mul(b1, b0), b0);
}

TEST(SemifieldInv, Examples) {
  EXPECT_EQ(inv(t(5)), t(-5));
  EXPECT_EQ(inv(b1), b1);
  EXPECT_EQ(inv(t(-2, 3)), t(2, 3));
}

TEST(SemifieldInv, ZeroIsNotInvertible) {
  EXPECT_THROW(inv(T0), ValidationError);
  EXPECT_THROW(inv(b0), ValidationError);
}

TEST(SemifieldOrder, Examples) {
  EXPECT_TRUE(natural_leq(T0, t(7)));
  EXPECT_FALSE(natural_leq(t(3), t(2)));
  EXPECT_TRUE(natural_leq(b0, b1));
  EXPECT_FALSE(natural_leq(b1, b0));
}

TEST(SemifieldTorsion, Examples) {
  EXPECT_TRUE(check_torsion_free(t(1, 3), 12));
  EXPECT_TRUE(check_torsion_free(b1, 5));
  EXPECT_TRUE(check_torsion_free(t(0), 3));
}

TEST(SemifieldTorsion, Errors) {
  EXPECT_THROW(check_torsion_free(T0, 3), ValidationError);
  EXPECT_THROW(check_torsion_free(t(1), 0), ValidationError);
}

TEST(SemifieldTags, MixedOperandsRejected) {
  EXPECT_THROW(add(b1, t(0)), TagMismatch);
  EXPECT_THROW(mul(t(2), b0), TagMismatch);
  EXPECT_THROW(natural_leq(b0, T0), TagMismatch);
}

TEST(SemifieldTags, Parse) {
  EXPECT_EQ(parse_semifield_tag("B"), SemifieldTag::Boolean);
  EXPECT_EQ(parse_semifield_tag("tropical"), SemifieldTag::TropicalRational);
  EXPECT_EQ(to_string(SemifieldTag::TropicalRational), "T");
  EXPECT_THROW(parse_semifield_tag("R"), ParseError);
}

TEST(SemifieldValue, Rendering) {
  EXPECT_EQ(T0.to_string(), "-inf");
  EXPECT_EQ(t(2, 4).to_string(), "1/2");
  EXPECT_EQ(t(-3).to_string(), "-3");
  EXPECT_EQ(b1.to_string(), "1");
  EXPECT_THROW(Value::tropical(1, 0), ValidationError);
  EXPECT_THROW(b1.exponent(), TagMismatch);
  EXPECT_THROW(t(1).bit(), TagMismatch);
}

TEST(SemifieldValue, ZeroAndOne) {
  for (auto tag : kTags) {
    EXPECT_TRUE(Value::zero(tag).is_zero());
    EXPECT_TRUE(Value::one(tag).is_one());
    EXPECT_FALSE(Value::one(tag).is_zero());
  }
  EXPECT_TRUE(t(0, 7).is_one());
}

TEST(SemifieldProperties, SemiringLawsOnRandomTriples) {
  auto rng = testing::engine(101);
  for (auto tag : kTags) {
    const Value zero = Value::zero(tag), one = Value::one(tag);
    for (int i = 0; i < 1000; ++i) {
      const Value a = random_value(rng, tag), b = random_value(rng, tag), c = random_value(rng, tag);
      ASSERT_EQ(add(a, b), add(b, a));
      ASSERT_EQ(mul(a, b), mul(b, a));
      ASSERT_EQ(add(add(a, b), c), add(a, add(b, c)));
      ASSERT_EQ(mul(mul(a, b), c), mul(a, mul(b, c)));
      ASSERT_EQ(mul(a, add(b, c)), add(mul(a, b), mul(a, c)));
      ASSERT_EQ(add(a, a), a);
      ASSERT_EQ(add(a, zero), a);
      ASSERT_EQ(mul(a, zero), zero);
      ASSERT_EQ(mul(a, one), a);
    }
  }
}

TEST(SemifieldProperties, NaturalOrderIsTotalAndAddIsMax) {
  auto rng = testing::engine(102);
  for (auto tag : kTags) {
    for (int i = 0; i < 1000; ++i) {
      const Value a = random_value(rng, tag), b = random_value(rng, tag), c = random_value(rng, tag);
      ASSERT_TRUE(natural_leq(a, b) || natural_leq(b, a));
      if (natural_leq(a, b) && natural_leq(b, a)) {
        ASSERT_EQ(a, b);
      }
      if (natural_leq(a, b) && natural_leq(b, c)) {
        ASSERT_TRUE(natural_leq(a, c));
      }
      ASSERT_EQ(add(a, b), natural_leq(a, b) ? b : a);
    }
  }
}

TEST(SemifieldProperties, ZeroSumFree) {
  auto rng = testing::engine(103);
  for (auto tag : kTags) {
    for (int i = 0; i < 1000; ++i) {
      const Value a = random_value(rng, tag), b = random_value(rng, tag);
      if (add(a, b).is_zero()) {
        ASSERT_TRUE(a.is_zero() && b.is_zero());
      }
    }
  }
}

TEST(SemifieldProperties, UnitsHaveExactInverses) {
  auto rng = testing::engine(104);
  for (auto tag : kTags) {
    for (int i = 0; i < 500; ++i) {
      const Value a = testing::random_unit(rng, tag);
      ASSERT_TRUE(mul(a, inv(a)).is_one());
      ASSERT_EQ(inv(inv(a)), a);
    }
  }
}

TEST(SemifieldProperties, NoTorsionUpToTwelve) {
  auto rng = testing::engine(105);
  for (int i = 0; i < 1000; ++i) {
    const Value a = testing::random_unit(rng, SemifieldTag::TropicalRational);
    ASSERT_TRUE(check_torsion_free(a, 12));
    for (std::uint32_t n = 2; n <= 12; ++n) {
      if (!a.is_one()) {
        ASSERT_FALSE(pow(a, n).is_one());
      }
    }
  }
}

TEST(SemifieldPow, MatchesRepeatedProduct) {
  EXPECT_EQ(pow(t(1, 3), 0), t(0));
  EXPECT_EQ(pow(t(1, 3), 6), t(2));
  EXPECT_EQ(pow(T0, 3), T0);
  EXPECT_EQ(pow(b0, 0), b1);
}

}  // namespace
}  // namespace idemrep
