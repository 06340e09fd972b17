#ifndef WHF_DETERMINANT_HPP
#define WHF_DETERMINANT_HPP

#include <functional>
#include <vector>

#include "whf/poly.hpp"
#include "whf/ring.hpp"
#include "whf/toeplitz.hpp"

namespace whf {

inline constexpr int kDetSizeBound = 256;

// A determinant as a Laurent polynomial in w (possibly also in t).
struct DetValue {
  Poly value;
  bool exact = true;
  // Truncated results only: seminorm of the difference between the last two
  // nested-window values, and the size of the last window.
  double tail = 0.0;
  int size = 0;
};

// Division-free (Berkowitz) determinants of row-major n x n matrices; valid
// over any commutative ring, zero divisors included.
Element det_finite(const Ring& ring, const std::vector<Element>& m, int n, int size_bound = kDetSizeBound);
Poly det_finite(const Ring& ring, const std::vector<Poly>& m, int n, int size_bound = kDetSizeBound);

// Same value as det_finite; large t-free matrices go through evaluation at
// sample points of w and interpolation, one base-field component at a time.
Poly det_poly(const Ring& ring, const std::vector<Poly>& m, int n);

// Row-major block m[rows, cols].
std::vector<Poly> block(const WindowedMatrix& m, const std::vector<int>& rows, const std::vector<int>& cols);

// det(1 + A) for a perturbation A with finite row or column support
// strictly inside the reliable window; exact.
DetValue det_identity_plus(const WindowedMatrix& a, double threshold = 0.0);

// widetilde-det(F + A) = det(1 + A F^{-1}) for F = F^{R+}(1,w) or
// F^{R-}(1,w) and A with finite column support, reduced to a finite block.
DetValue det_tilde_column_reduced(FVariant variant, const WindowedMatrix& a, double threshold = 0.0);

// Determinants of the sections of build(h) on nested windows ([-h, h] on the
// integer lattice, slots [-h, h-1] on the half lattice). Throws
// NumericalError when, over three or more windows, the successive
// differences stop decreasing while above `tolerance`.
DetValue det_truncated(const std::function<WindowedMatrix(int)>& build, const std::vector<int>& half_widths,
                       double tolerance);

}  // namespace whf

#endif  // WHF_DETERMINANT_HPP
