#ifndef WHF_CORPUS_HPP
#define WHF_CORPUS_HPP

#include <cstdint>
#include <random>

#include "whf/laurent.hpp"

namespace whf {

// Reproducible random symbols for property runs; everything is driven by a
// std::mt19937_64 seeded by the caller.
class Corpus {
 public:
  explicit Corpus(std::uint64_t seed) : rng_(seed) {}

  // Rationals p/q with |p| <= 3, 1 <= q <= 5 and 0 < |p/q| < 1, one per
  // component of the ring (zero allowed in a component when allow_zero).
  Element small_parameter(const Ring& ring, bool allow_zero = false);
  // Nonzero rationals with |p| <= 3, 1 <= q <= 5, one per component.
  Element unit(const Ring& ring);

  // 1 to 3 factors, at most one monomial with power in [-2, 2].
  ElementaryFactorList rational_factors(const Ring& ring);
  // Factor lists of a single kind: the subgroups G^+ and G^-.
  ElementaryFactorList holomorphic_factors(const Ring& ring);
  ElementaryFactorList antiholomorphic_factors(const Ring& ring);

  // Exactly 3 factors over C with parameter moduli in [0.1, 0.6].
  ElementaryFactorList complex_factors(const Ring& ring);

  // sum_c u_c e_c z^{p_c} with p_c in [-2, 2], together with its inverse.
  InvertiblePair orthogonal_pair(const Ring& ring);

  std::mt19937_64& engine() { return rng_; }

 private:
  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  Rational small_rational(bool allow_zero);

  std::mt19937_64 rng_;
};

}  // namespace whf

#endif  // WHF_CORPUS_HPP
