#include <gtest/gtest.h>

#include "whf/errors.hpp"
#include "whf/ring.hpp"

using namespace whf;

TEST(RationalRing, ExactArithmetic) {
  const Ring q = Ring::rational();
  EXPECT_EQ(q.mul(q.parse("2/3"), q.parse("3/4")), q.parse("1/2"));
  EXPECT_EQ(q.add(q.parse("1/3"), q.parse("1/6")), q.parse("1/2"));
  EXPECT_EQ(q.seminorm(q.parse("-5/2")), 2.5);
  EXPECT_TRUE(q.is_exact());
  EXPECT_EQ(q.tolerance(), 0.0);
  EXPECT_EQ(q.inverse(q.parse("-3/7")), q.parse("-7/3"));
  EXPECT_THROW(q.inverse(q.zero()), NotInvertible);
}

TEST(ComplexRing, ToleranceContract) {
  const Ring c = Ring::complex();
  const Element i = c.from_complex({0, 1});
  EXPECT_TRUE(c.equals(c.mul(i, i), c.from_integer(-1)));
  EXPECT_TRUE(c.equals(c.one(), c.from_complex({1 + 1e-12, 0})));
  EXPECT_FALSE(c.equals(c.one(), c.from_complex({1 + 1e-6, 0})));
  EXPECT_DOUBLE_EQ(c.seminorm(c.from_complex({3, 4})), 5.0);
  EXPECT_TRUE(c.with_tolerance(1e-5).equals(c.one(), c.from_complex({1 + 1e-6, 0})));
}

TEST(ProductRing, OrthogonalIdempotents) {
  const Ring q2 = Ring::product(Ring::rational(), 2);
  const Element e1 = q2.indicator(0), e2 = q2.indicator(1);
  EXPECT_TRUE(q2.is_zero(q2.mul(e1, e2)));
  EXPECT_TRUE(q2.is_one(q2.add(e1, e2)));
  EXPECT_EQ(q2.mul(e1, e1), e1);
  EXPECT_FALSE(q2.is_unit(e1));
  EXPECT_TRUE(q2.is_unit(q2.parse("(2|-1/3)")));
  EXPECT_EQ(q2.inverse(q2.parse("(2|-1/3)")), q2.parse("(1/2|-3)"));
  EXPECT_THROW(q2.inverse(e1), NotInvertible);
  EXPECT_EQ(q2.name(), "Q^2");
}

TEST(Ring, FormatParseRoundTrip) {
  const Ring q = Ring::rational();
  const Ring c = Ring::complex();
  const Ring q3 = Ring::product(q, 3);
  const Ring c2 = Ring::product(c, 2);
  for (const char* s : {"0", "1", "-7/3", "123456789012345678901234567891/7"}) EXPECT_EQ(q.format(q.parse(s)), s);
  for (const Element& x : {c.from_complex({0.1, -1.0 / 3}), c.from_complex({1e-300, 6.02e23})}) {
    EXPECT_EQ(c.parse(c.format(x)), x);
  }
  EXPECT_EQ(q3.format(q3.parse("(1|0|-1/2)")), "(1|0|-1/2)");
  const Element z = c2.assemble({c.from_complex({0.25, 1}), c.from_complex({-2, 0.1})});
  EXPECT_EQ(c2.parse(c2.format(z)), z);
}

TEST(Ring, RejectsMalformedAndMismatchedInput) {
  const Ring q = Ring::rational();
  const Ring q2 = Ring::product(q, 2);
  EXPECT_THROW(q.parse("1/0"), ValidationError);
  EXPECT_THROW(q.parse("abc"), ValidationError);
  EXPECT_THROW(q2.parse("(1|2|3)"), ValidationError);
  EXPECT_THROW(q.add(q.one(), q2.one()), RingMismatch);
  EXPECT_THROW(q.add(q.one(), Ring::complex().one()), RingMismatch);
}
