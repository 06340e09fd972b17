#include <gtest/gtest.h>

#include <cmath>

#include "whf/corpus.hpp"
#include "whf/errors.hpp"
#include "whf/factorization.hpp"

using namespace whf;

namespace {

const Ring Q = Ring::rational();
const Ring Q2 = Ring::product(Ring::rational(), 2);
const Ring C = Ring::complex();

LaurentSeries S(const Ring& r, std::initializer_list<std::pair<int, const char*>> terms) {
  LaurentSeries::Coefficients c;
  for (const auto& [n, v] : terms) c.emplace(n, r.parse(v));
  return LaurentSeries(r, c);
}

const ElementaryFactorList kExample{Antiholomorphic{Q.parse("1/2")}, Monomial{1, Q.one()}, Holomorphic{Q.parse("1/3")}};

InvertiblePair example_pair(int window = 16) { return invert_from_factors(Q, kExample, window); }

// e1 z + e2 / z over Q x Q, its own inverse up to z -> 1/z.
InvertiblePair swap_pair() {
  return make_pair(S(Q2, {{1, "(1|0)"}, {-1, "(0|1)"}}), S(Q2, {{-1, "(1|0)"}, {1, "(0|1)"}}));
}

LaurentSeries one(const Ring& r) { return LaurentSeries::one(r); }

}  // namespace

TEST(PiPlus, Examples) {
  EXPECT_TRUE(pi_plus(invert_from_factors(Q, {Holomorphic{Q.parse("1/3")}}, 16)).equals(S(Q, {{0, "1"}, {1, "-1/3"}})));
  EXPECT_TRUE(pi_plus(invert_from_factors(Q, {Monomial{1, Q.one()}}, 16)).equals(one(Q)));
  EXPECT_TRUE(pi_plus(example_pair()).equals(S(Q, {{0, "1"}, {1, "-1/3"}})));
}

TEST(PiMinus, Examples) {
  EXPECT_TRUE(pi_minus(example_pair()).equals(S(Q, {{-1, "-1/2"}, {0, "1"}})));
  EXPECT_TRUE(pi_minus(invert_from_factors(Q, {Holomorphic{Q.parse("1/3")}}, 16)).equals(one(Q)));
  EXPECT_TRUE(pi_minus(invert_from_factors(Q, {Antiholomorphic{Q.parse("1/4")}}, 16)).equals(S(Q, {{-1, "-1/4"}, {0, "1"}})));
}

// The pi^+ matrix is F^{R+} plus a finite-column perturbation.
TEST(PiMatrices, PerturbationHasFiniteColumnSupport) {
  const PiMatrices m = pi_matrices(example_pair(), FVariant::plus);
  const std::set<int> cols = perturbation_columns(m.m, m.f);
  ASSERT_FALSE(cols.empty());
  EXPECT_GE(*cols.begin(), -4);
  EXPECT_LE(*cols.rbegin(), 4);
  EXPECT_EQ(LaurentSeries::from_poly(Q, det_tilde_column_reduced(FVariant::plus, m.perturbation).value).to_string(),
            S(Q, {{0, "1"}, {1, "-1/3"}}).to_string());
  EXPECT_THROW(pi_matrices(example_pair(), FVariant::R), ValidationError);
}

TEST(PiTilde, Derived) {
  const InvertiblePair p = example_pair();
  EXPECT_TRUE(pi_tilde_derived(p, pi_minus(p), pi_plus(p)).equals(LaurentSeries::monomial(Q, Q.one(), 1)));
  const InvertiblePair unit = invert_from_factors(Q, {}, 8);
  EXPECT_TRUE(pi_tilde_derived(unit, one(Q), one(Q)).equals(one(Q)));
  const InvertiblePair s = swap_pair();
  EXPECT_TRUE(pi_tilde_derived(s, pi_minus(s), pi_plus(s)).equals(s.a));
  EXPECT_THROW(pi_tilde_derived(p, one(Q), S(Q, {{0, "1"}, {1, "-1/5"}})), NumericalError);
}

TEST(PiTilde, DirectRoute) {
  {
    const TruncatedSeries t = pi_tilde_direct(invert_from_factors(C, {Monomial{1, C.one()}}, 96));
    EXPECT_LT(t.value.distance(LaurentSeries::monomial(C, C.one(), 1)), 1e-9);
  }
  {
    const TruncatedSeries t = pi_tilde_direct(invert_from_factors(Q, {}, 96));
    EXPECT_TRUE(t.value.equals(one(Q)));
    EXPECT_EQ(t.tail, 0.0);
  }
  Corpus corpus(21);
  for (int k = 0; k < 3; ++k) {
    ElementaryFactorList f = corpus.complex_factors(C);
    f.pop_back();
    const InvertiblePair p = invert_from_factors(C, f, 96);
    const TruncatedSeries direct = pi_tilde_direct(p);
    const LaurentSeries derived = pi_tilde_derived(p, pi_minus(p), pi_plus(p));
    EXPECT_LE(direct.value.distance(derived), direct.tail + C.tolerance());
  }
}

TEST(PiTilde, HalfLatticeMatrixOfAMonomial) {
  // det of the pi~ matrix for a = z is w.
  const InvertiblePair p = invert_from_factors(C, {Monomial{1, C.one()}}, 96);
  const DetValue d = det_truncated([&](int h) { return pi_tilde_matrix(p, h); }, {24, 32}, 1e-9);
  EXPECT_LT(LaurentSeries::from_poly(C, d.value).distance(LaurentSeries::monomial(C, C.one(), 1)), 1e-9);
}

TEST(Factorize, Examples) {
  const FactorizationResult r = factorize(example_pair());
  EXPECT_TRUE(r.pi_minus.equals(S(Q, {{-1, "-1/2"}, {0, "1"}})));
  EXPECT_TRUE(r.pi_tilde.equals(LaurentSeries::monomial(Q, Q.one(), 1)));
  EXPECT_TRUE(r.pi_plus.equals(S(Q, {{0, "1"}, {1, "-1/3"}})));
  EXPECT_EQ(r.residual, 0.0);
  EXPECT_EQ(r.winding, 1);

  const FactorizationResult trivial = factorize(invert_from_factors(Q, {}, 8));
  EXPECT_TRUE(trivial.pi_minus.equals(one(Q)) && trivial.pi_tilde.equals(one(Q)) && trivial.pi_plus.equals(one(Q)));
  EXPECT_EQ(trivial.winding, 0);

  const FactorizationResult s = factorize(swap_pair());
  EXPECT_TRUE(s.pi_minus.equals(one(Q2)) && s.pi_plus.equals(one(Q2)));
  EXPECT_TRUE(s.pi_tilde.equals(S(Q2, {{1, "(1|0)"}, {-1, "(0|1)"}})));
  EXPECT_FALSE(s.winding.has_value());
}

TEST(Factorize, ComplexExamples) {
  {
    const FactorizationResult r = factorize(invert_from_factors(C, {Monomial{1, C.one()}}, 32));
    EXPECT_LT(r.pi_tilde.distance(LaurentSeries::monomial(C, C.one(), 1)), 1e-9);
    EXPECT_EQ(r.winding, 1);
  }
  {
    const ElementaryFactorList f{Antiholomorphic{C.parse("0.5,0")}, Monomial{1, C.one()}, Holomorphic{C.parse("0.3333333333333333,0")}};
    const FactorizationResult r = factorize(invert_from_factors(C, f, 48));
    EXPECT_LT(r.pi_minus.distance(S(C, {{-1, "-0.5,0"}, {0, "1,0"}})), 1e-9);
    EXPECT_LT(r.pi_plus.distance(S(C, {{0, "1,0"}, {1, "-0.3333333333333333,0"}})), 1e-9);
  }
  {
    // 3 - z - 1/z = (1 - r/z)(1 - r z)/r with r = (3 - sqrt 5)/2.
    const LaurentSeries a = S(C, {{-1, "-1,0"}, {0, "3,0"}, {1, "-1,0"}});
    const FactorizationResult r = factorize(invert_numeric(a, 1024));
    const double root = (3 - std::sqrt(5.0)) / 2;
    EXPECT_EQ(r.winding, 0);
    EXPECT_LE(r.residual, 1e-9);
    const Complex lead = r.pi_tilde.coefficient(0).complex_parts()[0];
    EXPECT_NEAR(std::abs(lead - 1 / root), 0.0, 1e-9);
    EXPECT_NEAR(std::abs(r.pi_plus.coefficient(1).complex_parts()[0] + root), 0.0, 1e-9);
  }
}

TEST(Factorize, MembershipOfTheFactors) {
  Corpus corpus(22);
  for (int k = 0; k < 10; ++k) {
    const FactorizationResult r = factorize(invert_from_factors(Q, corpus.rational_factors(Q), 16));
    EXPECT_TRUE(is_strictly_holomorphic(r.pi_plus));
    EXPECT_TRUE(is_strictly_antiholomorphic(r.pi_minus));
    EXPECT_TRUE(is_orthogonal(r.pi_tilde));
  }
}

TEST(Factorize, Errors) {
  EXPECT_THROW(pi_plus(make_pair(S(Q, {{0, "1"}, {1, "-1/3"}}).restricted({-4, 4}), one(Q))), WindowError);
  EXPECT_THROW(factorize(make_pair(S(Q, {{0, "1"}, {1, "-1/3"}}), one(Q))), ValidationError);
  EXPECT_THROW(pi_plus(make_pair(LaurentSeries(Q), one(Q))), NotInvertible);
}

// pi^+ pi^- from the two block determinants equals det(U^R(a,1,w) U(a)^{-1}).
TEST(LemmaX, IdempotentFactorizationOnAFloatingCorpus) {
  Corpus corpus(23);
  for (int k = 0; k < 5; ++k) {
    const InvertiblePair p = invert_from_factors(C, corpus.complex_factors(C), 48);
    const LaurentSeries both = LaurentSeries::from_poly(C, pi_conjugated(p, FVariant::R, C.one()));
    EXPECT_LT(both.distance(pi_plus(p) * pi_minus(p)), 1e-9);
  }
}

TEST(LemmaX, ConjugatedDeterminantsWithSymbolicT) {
  const InvertiblePair p = example_pair(60);
  const Poly t = Poly::t(Q);
  const Poly plus = Poly(Q.one()) - t * Poly::monomial(Q.parse("1/3"), 1);
  const Poly minus = Poly(Q.one()) - t * Poly::monomial(Q.parse("1/2"), -1);
  EXPECT_EQ(pi_conjugated(p, FVariant::plus, std::nullopt), plus);
  EXPECT_EQ(pi_conjugated(p, FVariant::minus, std::nullopt), minus);
  EXPECT_EQ(pi_conjugated(p, FVariant::R, std::nullopt), plus * minus);
}

TEST(Winding, Examples) {
  EXPECT_EQ(winding_index(LaurentSeries::monomial(Q, Q.one(), 1)), 1);
  EXPECT_EQ(winding_index(one(Q)), 0);
  EXPECT_EQ(winding_index(LaurentSeries::monomial(Q, Q.parse("-2"), -3)), -3);
  EXPECT_FALSE(winding_index(S(Q2, {{1, "(1|0)"}, {-1, "(0|1)"}})).has_value());
  EXPECT_FALSE(winding_index(LaurentSeries::monomial(Q2, Q2.indicator(0), 2)).has_value());
}

TEST(Orthogonal, Decompose) {
  const OrthogonalDecomposition d = orthogonal_decompose(swap_pair());
  ASSERT_EQ(d.idempotents.size(), 2u);
  EXPECT_EQ(d.idempotents.at(1), Q2.indicator(0));
  EXPECT_EQ(d.idempotents.at(-1), Q2.indicator(1));
  EXPECT_EQ(orthogonal_decompose(invert_from_factors(Q, {Monomial{1, Q.one()}}, 4)).idempotents,
            (std::map<int, Element>{{1, Q.one()}}));
  EXPECT_EQ(orthogonal_decompose(invert_from_factors(Q, {Monomial{0, Q.parse("7")}}, 4)).idempotents,
            (std::map<int, Element>{{0, Q.one()}}));
  EXPECT_THROW(orthogonal_decompose(example_pair()), ValidationError);
}

TEST(Orthogonal, Split) {
  {
    const auto [u, pi] = orthonormal_split(orthogonal_decompose(invert_from_factors(Q, {Monomial{1, Q.parse("5")}}, 4)));
    EXPECT_EQ(u, Q.parse("5"));
    EXPECT_TRUE(pi.equals(LaurentSeries::monomial(Q, Q.one(), 1)));
  }
  {
    const auto [u, pi] = orthonormal_split(orthogonal_decompose(swap_pair()));
    EXPECT_TRUE(Q2.is_one(u));
    EXPECT_TRUE(pi.equals(swap_pair().a));
  }
  {
    const LaurentSeries a = S(Q2, {{1, "(2|0)"}, {0, "(0|3)"}});
    const auto [u, pi] = orthonormal_split(orthogonal_decompose(invert_direct(a, 4)));
    EXPECT_EQ(u, Q2.parse("(2|3)"));
    EXPECT_TRUE(pi.equals(S(Q2, {{1, "(1|0)"}, {0, "(0|1)"}})));
  }
}

TEST(Orthogonal, Products) {
  const auto dec = [](const Ring& r, std::map<int, Element> pi) { return OrthogonalDecomposition{r, std::move(pi), r.one()}; };
  EXPECT_EQ(product_of_orthogonals(dec(Q, {{1, Q.one()}}), dec(Q, {{2, Q.one()}})).idempotents,
            (std::map<int, Element>{{3, Q.one()}}));
  const OrthogonalDecomposition d1 = dec(Q2, {{1, Q2.indicator(0)}, {0, Q2.indicator(1)}});
  const OrthogonalDecomposition d2 = dec(Q2, {{0, Q2.indicator(0)}, {1, Q2.indicator(1)}});
  EXPECT_EQ(product_of_orthogonals(d1, d2).idempotents, (std::map<int, Element>{{1, Q2.one()}}));
  EXPECT_EQ(product_of_orthogonals(d1, dec(Q2, {{0, Q2.one()}})).idempotents, d1.idempotents);
  EXPECT_THROW(validate_idempotents(Q2, {{0, Q2.indicator(0)}}), ValidationError);
  EXPECT_THROW(validate_idempotents(Q2, {{0, Q2.one()}, {1, Q2.indicator(0)}}), ValidationError);
  EXPECT_THROW(product_of_orthogonals(d1, dec(Q, {{0, Q.one()}})), RingMismatch);
}

TEST(NP, Examples) {
  const Interval window{-10, 9};
  {
    DetValue diag;
    EXPECT_TRUE(n_p_series(project(Q, SignSet::negative, Lattice::half_integer, window), &diag).equals(one(Q)));
    EXPECT_TRUE(diag.exact);
  }
  {
    const LaurentSeries pi = swap_pair().a;
    DetValue diag;
    EXPECT_TRUE(n_p_series(projection_from_orthonormal(pi, window), &diag).equals(pi));
    EXPECT_TRUE(diag.exact);
  }
  {
    const LaurentSeries z = LaurentSeries::monomial(C, C.one(), 1);
    EXPECT_LT(n_p_series(projection_from_orthonormal(z, window)).distance(z), 1e-9);
  }
  {
    const LaurentSeries pi = S(Q2, {{2, "(1|0)"}, {-1, "(0|1)"}});
    DetValue diag;
    const LaurentSeries got = n_p_series(projection_from_orthonormal(pi, window), &diag, true);
    EXPECT_FALSE(diag.exact);
    EXPECT_LT(got.distance(pi), 1e-8);
  }
  EXPECT_THROW(n_p_series(project(Q, SignSet::negative, Lattice::integer, window)), ValidationError);
}
