#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "whf/errors.hpp"
#include "whf/laurent.hpp"

using namespace whf;

namespace {

const Ring Q = Ring::rational();
const Ring Q2 = Ring::product(Ring::rational(), 2);
const Ring C = Ring::complex();

LaurentSeries S(const Ring& r, std::initializer_list<std::pair<int, const char*>> terms,
                Interval window = Interval::all()) {
  LaurentSeries::Coefficients c;
  for (const auto& [n, v] : terms) c.emplace(n, r.parse(v));
  return LaurentSeries(r, c, window);
}

oracle::Dense dense(const LaurentSeries& x) {
  oracle::Dense out;
  for (const auto& [n, c] : x.coefficients()) out[n] = c.rational_parts()[0];
  return out;
}

}  // namespace

TEST(Series, Addition) {
  EXPECT_TRUE((S(Q, {{0, "1"}, {1, "1"}}) + S(Q, {{1, "-1"}})).equals(LaurentSeries::one(Q)));
  const LaurentSeries x = S(Q, {{-2, "3"}, {4, "1/5"}});
  EXPECT_TRUE((x + LaurentSeries(Q)).equals(x));
  EXPECT_TRUE((S(Q, {{-1, "1"}}) + S(Q, {{1, "1"}})).equals(S(Q, {{-1, "1"}, {1, "1"}})));
  EXPECT_TRUE((S(Q, {{0, "1"}, {1, "1"}}) + S(Q, {{1, "-1"}})).coefficients().size() == 1);
}

TEST(Series, ProductExamples) {
  const LaurentSeries x = S(Q, {{-1, "-1/2"}, {0, "1"}});
  const LaurentSeries y = S(Q, {{1, "1"}, {2, "-1/3"}});
  EXPECT_TRUE((x * y).equals(S(Q, {{0, "-1/2"}, {1, "7/6"}, {2, "-1/3"}})));
  EXPECT_TRUE((x * LaurentSeries::one(Q)).equals(x));
  const LaurentSeries e1z = LaurentSeries::monomial(Q2, Q2.indicator(0), 1);
  const LaurentSeries e2z = LaurentSeries::monomial(Q2, Q2.indicator(1), 1);
  EXPECT_TRUE((e1z * e2z).is_zero());
}

TEST(Series, ProductAgreesWithSchoolbookOracle) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> coef(-9, 9), deg(-4, 4), len(1, 6);
  for (int trial = 0; trial < 50; ++trial) {
    LaurentSeries::Coefficients cx, cy;
    for (int k = len(rng); k > 0; --k) cx[deg(rng)] = Q.from_rational(Rational(coef(rng), 1 + std::abs(coef(rng))));
    for (int k = len(rng); k > 0; --k) cy[deg(rng)] = Q.from_rational(Rational(coef(rng), 1 + std::abs(coef(rng))));
    const LaurentSeries x(Q, cx), y(Q, cy);
    EXPECT_EQ(dense(x * y), oracle::mul(dense(x), dense(y)));
  }
}

TEST(Series, ProductWindowOfTruncatedFactors) {
  // A power series known up to z^6 times a polynomial reaching z^2 is known up to z^6.
  const LaurentSeries b = S(Q, {{0, "1"}, {1, "1/3"}}, Interval{Interval::kNegInf, 6});
  const LaurentSeries a = S(Q, {{0, "1"}, {2, "5"}});
  EXPECT_EQ(product_window(a, b), (Interval{Interval::kNegInf, 6}));
  EXPECT_THROW((a * b).coefficient(7), WindowError);
  EXPECT_EQ((a * b).coefficient(3), Q.parse("5/3"));
}

TEST(Series, Evaluate) {
  const LaurentSeries a = S(Q, {{-1, "1/2"}, {0, "-7/6"}, {1, "1/3"}}) * S(Q, {{0, "-1"}});
  EXPECT_EQ(evaluate(S(Q, {{0, "-1/2"}, {1, "7/6"}, {2, "-1/3"}}), Q.one()), Q.parse("1/3"));
  EXPECT_EQ(evaluate(LaurentSeries::one(Q), Q.parse("17")), Q.one());
  EXPECT_EQ(evaluate(LaurentSeries::monomial(Q, Q.one(), 1), Q.parse("-1")), Q.parse("-1"));
  EXPECT_EQ(evaluate(a, Q.parse("2")), Q.parse("-1/4") + Q.parse("7/6") - Q.parse("2/3"));
}

TEST(Series, DivisionByUnit) {
  const LaurentSeries u = S(Q, {{0, "1"}, {1, "-1/3"}});
  EXPECT_TRUE(series_div_unit(S(Q, {{0, "1"}, {2, "-1/9"}}), u, Interval::symmetric(10)).equals(S(Q, {{0, "1"}, {1, "1/3"}})));
  EXPECT_TRUE(series_div_unit(u, u, Interval::symmetric(10)).equals(LaurentSeries::one(Q)));
  EXPECT_TRUE(series_div_unit(u.shifted(1), u, Interval::symmetric(10)).equals(LaurentSeries::monomial(Q, Q.one(), 1)));
  const LaurentSeries v = S(Q, {{-1, "-1/4"}, {0, "1"}});
  EXPECT_TRUE(series_div_unit(v * S(Q, {{-3, "2"}, {5, "1"}}), v, Interval::symmetric(10)).equals(S(Q, {{-3, "2"}, {5, "1"}})));
}

TEST(Inverse, FromFactors) {
  {
    const InvertiblePair p = invert_from_factors(Q, {Holomorphic{Q.parse("1/3")}}, 8);
    for (int k = 0; k <= 8; ++k) EXPECT_EQ(p.b.coefficient(k), Q.from_rational(oracle::power(Rational(1, 3), k)));
    EXPECT_EQ(p.residual, 0.0);
  }
  {
    const InvertiblePair p = invert_from_factors(Q, {Monomial{1, Q.one()}}, 8);
    EXPECT_TRUE(p.a.equals(LaurentSeries::monomial(Q, Q.one(), 1)));
    EXPECT_TRUE(p.b.equals(LaurentSeries::monomial(Q, Q.one(), -1)));
    EXPECT_EQ(p.residual, 0.0);
  }
  {
    const ElementaryFactorList f{Antiholomorphic{Q.parse("1/2")}, Monomial{1, Q.one()}, Holomorphic{Q.parse("1/3")}};
    const InvertiblePair p = invert_from_factors(Q, f, 16);
    EXPECT_TRUE(p.a.equals(S(Q, {{0, "-1/2"}, {1, "7/6"}, {2, "-1/3"}})));
    EXPECT_EQ(p.residual, 0.0);
    // b = z^-1 (sum 2^-i z^-i)(sum 3^-j z^j): summing the geometric series,
    // b_{m-1} = (6/5) 3^-m for m >= 0 and (6/5) 2^m for m < 0.
    ASSERT_TRUE(p.b.window().bounded());
    for (int n = p.b.window().lo; n <= p.b.window().hi; ++n) {
      const int m = n + 1;
      const Rational want = Rational(6, 5) * (m >= 0 ? oracle::power(Rational(1, 3), m) : oracle::power(Rational(2), m));
      EXPECT_EQ(p.b.coefficient(n).rational_parts()[0], want) << n;
    }
  }
}

TEST(Inverse, ProductRingComponentsIndependently) {
  const ElementaryFactorList f{Holomorphic{Q2.parse("(1/2|0)")}, Antiholomorphic{Q2.parse("(0|-1/3)")}};
  const InvertiblePair p = invert_from_factors(Q2, f, 12);
  EXPECT_EQ(p.residual, 0.0);
}

TEST(Inverse, Numeric) {
  {
    const InvertiblePair p = invert_numeric(LaurentSeries::monomial(C, C.one(), 1), 64);
    for (int n = -20; n <= 20; ++n) {
      EXPECT_NEAR(std::abs(p.b.coefficient(n).complex_parts()[0] - Complex(n == -1 ? 1 : 0)), 0.0, 1e-12);
    }
  }
  {
    const InvertiblePair p = invert_numeric(S(C, {{0, "1,0"}, {1, "-0.25,0"}}), 256);
    for (int k = 0; k <= 10; ++k) EXPECT_NEAR(p.b.coefficient(k).complex_parts()[0].real(), std::pow(0.25, k), 1e-12);
  }
  {
    const InvertiblePair p = invert_numeric(S(C, {{-1, "-1,0"}, {0, "3,0"}, {1, "-1,0"}}), 256);
    EXPECT_NEAR(p.b.coefficient(0).complex_parts()[0].real(), 1 / std::sqrt(5.0), 1e-12);
  }
  EXPECT_THROW(invert_numeric(S(C, {{0, "1,0"}, {1, "-1,0"}}), 256), NotInvertible);
  EXPECT_THROW(invert_numeric(S(Q, {{0, "1"}}), 256), ValidationError);
}

TEST(Inverse, Direct) {
  const InvertiblePair p = invert_direct(S(Q, {{0, "1"}, {1, "-1/3"}}), 10);
  EXPECT_EQ(p.residual, 0.0);
  const LaurentSeries orth = S(Q2, {{1, "(1|0)"}, {-1, "(0|1)"}});
  EXPECT_TRUE(invert_direct(orth, 4).b.equals(S(Q2, {{-1, "(1|0)"}, {1, "(0|1)"}})));
  EXPECT_THROW(invert_direct(S(Q, {{-1, "1"}, {0, "3"}, {1, "1"}}), 4), ValidationError);
}

TEST(Classes, Membership) {
  EXPECT_EQ(classify(S(Q, {{0, "1"}, {1, "-1/3"}})), std::set{SeriesClass::strictly_holomorphic});
  EXPECT_EQ(classify(S(Q, {{0, "1"}, {-1, "-1/4"}})), std::set{SeriesClass::strictly_antiholomorphic});
  EXPECT_EQ(classify(LaurentSeries::monomial(Q, Q.one(), 1)), std::set{SeriesClass::orthogonal});
  EXPECT_EQ(classify(S(Q2, {{1, "(1|0)"}, {-1, "(0|1)"}})), std::set{SeriesClass::orthogonal});
  EXPECT_TRUE(classify(S(Q, {{-1, "1"}, {0, "3"}, {1, "1"}})).empty());
  EXPECT_FALSE(is_strictly_holomorphic(S(Q, {{0, "2"}, {1, "1"}})));
}

TEST(Json, RoundTrip) {
  const LaurentSeries x = S(Q, {{-1, "-1/2"}, {0, "1"}});
  const nlohmann::json j = series_to_json(x);
  EXPECT_EQ(j, nlohmann::json::parse(R"([{"n":-1,"c":"-1/2"},{"n":0,"c":"1"}])"));
  EXPECT_TRUE(series_from_json(Q, j).equals(x));
  const ElementaryFactorList f = factors_from_json(
      Q, nlohmann::json::parse(R"([{"kind":"antiholo","alpha":"1/2"},{"kind":"mono","p":1,"u":"1"},{"kind":"holo","beta":"1/3"}])"));
  ASSERT_EQ(f.size(), 3u);
  EXPECT_EQ(factors_to_json(Q, f), factors_to_json(Q, factors_from_json(Q, factors_to_json(Q, f))));
  EXPECT_THROW(series_from_json(Q, nlohmann::json::parse(R"([{"n":0}])")), ValidationError);
}
