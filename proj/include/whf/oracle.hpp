#ifndef WHF_ORACLE_HPP
#define WHF_ORACLE_HPP

#include "whf/factorization.hpp"

namespace whf {

// Classical factorizations over C, independent of the determinant engine.

// log(a z^-p) sampled on the circle, its Fourier coefficients split by sign
// and exponentiated. Coefficients below 1e-14 relative are dropped and the
// factors are declared complete.
FactorizationResult cepstral_factorize(const LaurentSeries& a, int samples = 1024);

// Roots of z^-lo a(z): those inside the circle go to pi^-, the rest to pi^+.
FactorizationResult root_split_factorize(const LaurentSeries& a);

struct ComparisonReport {
  double pi_minus = 0.0;
  double pi_tilde = 0.0;
  double pi_plus = 0.0;
  bool winding_equal = true;

  double max_difference() const;
};

ComparisonReport compare(const FactorizationResult& lhs, const FactorizationResult& rhs);

}  // namespace whf

#endif  // WHF_ORACLE_HPP
