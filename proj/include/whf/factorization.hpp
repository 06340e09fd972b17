#ifndef WHF_FACTORIZATION_HPP
#define WHF_FACTORIZATION_HPP

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "whf/determinant.hpp"
#include "whf/laurent.hpp"
#include "whf/toeplitz.hpp"

namespace whf {

// a(w) = pi_minus(w) * pi_tilde(w) * pi_plus(w).
struct FactorizationResult {
  LaurentSeries pi_minus;
  LaurentSeries pi_tilde;
  LaurentSeries pi_plus;
  // Largest coefficient seminorm of pi_minus * pi_tilde * pi_plus - a.
  double residual = 0.0;
  // Exponent of pi_tilde when it is a monomial with unit coefficient.
  std::optional<int> winding;
};

// The matrices behind pi^+ (variant plus) and pi^- (variant minus):
// m = U(b) F U(a) written as 1 - w^{+-1} U(b) 1_{Z^-+} U(a) U(z^{-+1}),
// the reference f = F^{R+-}(1,w), and the perturbation m - f.
struct PiMatrices {
  WindowedMatrix m;
  WindowedMatrix f;
  WindowedMatrix perturbation;
};
PiMatrices pi_matrices(const InvertiblePair& pair, FVariant variant);

// pi^+(a,1,w): widetilde-det of the matrix above, reduced to a finite block.
// Constant term 1 and only nonnegative powers of w.
LaurentSeries pi_plus(const InvertiblePair& pair);
// pi^-(a,1,w): the mirror image, constant term 1, nonpositive powers.
LaurentSeries pi_minus(const InvertiblePair& pair);

// det(U^X(a,t,w) U(a)^{-1}) for X = R (pi^+-), plus or minus, with symbolic
// t when t is empty.
Poly pi_conjugated(const InvertiblePair& pair, FVariant variant, const std::optional<Element>& t);

// a(w) / (pi^- pi^+) by exact long division.
LaurentSeries pi_tilde_derived(const InvertiblePair& pair, const LaurentSeries& pi_m, const LaurentSeries& pi_p);

struct TruncatedSeries {
  LaurentSeries value;
  double tail = 0.0;
};

// pi~(a,1) times the half-lattice determinant
// det(U(a) (w 1^- + 1^+) U(b) (w 1^- + 1^+)^{-1}) on nested windows, with
// pi~(a,1) = a(1) / (pi^+(1) pi^-(1)).
TruncatedSeries pi_tilde_direct(const InvertiblePair& pair, const std::vector<int>& half_widths = {24, 32});

// Matrix whose determinant is pi~(a,w)/pi~(a,1), on half-lattice slots
// [-h - margin, h - 1 + margin].
WindowedMatrix pi_tilde_matrix(const InvertiblePair& pair, int h);

enum class TildeRoute { derived, direct };

// Full factorization with reconstruction check. Throws NumericalError when
// the residual exceeds the ring tolerance (nonzero over exact rings).
FactorizationResult factorize(const InvertiblePair& pair, TildeRoute route = TildeRoute::derived);

std::optional<int> winding_index(const LaurentSeries& pi_tilde);

// ------------------------------------------------------------------------
// Orthogonal series.

struct OrthogonalDecomposition {
  Ring ring;
  std::map<int, Element> idempotents;
  Element unit;
};

// Pi_n = a_n b_{-n} for the stored exponents of an orthogonal a.
OrthogonalDecomposition orthogonal_decompose(const InvertiblePair& pair);
// Throws ValidationError unless the family is idempotent, pairwise
// orthogonal and sums to 1.
void validate_idempotents(const Ring& ring, const std::map<int, Element>& idempotents);
// (a(1), sum Pi_n z^n).
std::pair<Element, LaurentSeries> orthonormal_split(const OrthogonalDecomposition& d);
OrthogonalDecomposition product_of_orthogonals(const OrthogonalDecomposition& d1, const OrthogonalDecomposition& d2);

// P = sum Pi_n 1_{S^- + n} on half-lattice slots `window`, for orthonormal Pi.
WindowedMatrix projection_from_orthonormal(const LaurentSeries& pi, const Interval& window);

// N_P(z) = det((1 - P + zP)(1_{S^+} + z 1_{S^-})^{-1}), the variable z
// carried as w. Exact when the argument differs from 1 in a finite block
// inside the window, truncated otherwise (or always, with force_truncated);
// details land in diagnostics.
LaurentSeries n_p_series(const WindowedMatrix& p, DetValue* diagnostics = nullptr, bool force_truncated = false);

}  // namespace whf

#endif  // WHF_FACTORIZATION_HPP
