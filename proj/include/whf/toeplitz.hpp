#ifndef WHF_TOEPLITZ_HPP
#define WHF_TOEPLITZ_HPP

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "whf/interval.hpp"
#include "whf/laurent.hpp"
#include "whf/poly.hpp"
#include "whf/ring.hpp"

namespace whf {

// Index lattice of an infinite matrix. Half-integer indices s = k + 1/2 are
// stored under the integer slot k, so S^- is k < 0 and S^+ is k >= 0.
enum class Lattice { integer, half_integer };

// Diagonal projections 1_S.
enum class SignSet {
  negative,     // Z^- or S^-
  positive,     // Z^+ or S^+ (0 excluded on the integer lattice)
  nonnegative,  // integer lattice only: Z^+ and 0
  nonpositive,  // integer lattice only: Z^- and 0
  zero,         // integer lattice only
  all,
};

// Known diagonal band of the infinite matrix: every nonzero entry (i, j),
// inside or outside the window, has i - j <= lower and j - i <= upper.
struct Band {
  std::optional<int> lower;
  std::optional<int> upper;

  static Band diagonal() { return {0, 0}; }
  static Band unbounded() { return {}; }
  bool bounded() const { return lower && upper; }
};

// Finite square window of an infinite matrix with Laurent-polynomial entries
// in w (and possibly t).
//
// Stored entries are exact on the reliable part: (i, j) is reliable when both
// indices lie in reliable() and i - j lies in diagonals(). Outside the window
// the matrix is described only by its band.
class WindowedMatrix {
 public:
  WindowedMatrix(Ring ring, Lattice lattice, Interval window);

  const Ring& ring() const { return ring_; }
  Lattice lattice() const { return lattice_; }
  const Interval& window() const { return window_; }
  int size() const { return window_.size(); }

  const Poly& at(int i, int j) const;
  void set(int i, int j, Poly value);

  const Interval& reliable() const { return reliable_; }
  const Interval& diagonals() const { return diagonals_; }
  const Band& band() const { return band_; }
  void set_reliability(Interval square, Interval diagonals);
  void set_band(Band band) { band_ = band; }
  bool is_reliable(int i, int j) const {
    return reliable_.contains(i) && reliable_.contains(j) && diagonals_.contains(i - j);
  }

  bool depends_on_t() const;
  WindowedMatrix substitute_t(const Element& value) const;
  // Same matrix cut down to a smaller window.
  WindowedMatrix section(const Interval& window) const;

  // Row-major text dump with rules around index 0 (a single rule between
  // -1/2 and 1/2 on the half lattice); unreliable entries print as "?".
  std::string dump() const;

 private:
  std::size_t offset(int i, int j) const;

  Ring ring_;
  Lattice lattice_;
  Interval window_;
  Interval reliable_;
  Interval diagonals_;
  Band band_;
  std::vector<Poly> entries_;
};

WindowedMatrix identity(const Ring& ring, Lattice lattice, const Interval& window);
WindowedMatrix project(const Ring& ring, SignSet set, Lattice lattice, const Interval& window, int shift = 0);
// Diagonal matrix with value(i) on the diagonal.
WindowedMatrix diagonal(const Ring& ring, Lattice lattice, const Interval& window,
                        const std::vector<Poly>& values);

// U(a) = sum a_{n-m} e_{n,m}; entries outside a's window are unreliable.
WindowedMatrix build_U(const LaurentSeries& a, Lattice lattice, const Interval& window);

enum class FVariant { R, plus, minus };

// F^R, F^{R+}, F^{R-} at a ring value of t, or with symbolic t.
WindowedMatrix build_F(const Ring& ring, FVariant variant, const std::optional<Element>& t, const Interval& window);

// Column action of F^{R+}(1,w)^{-1} (resp. F^{R-}(1,w)^{-1}): the entry
// (n, m), a monomial in w or zero.
Poly F_inverse_entry(const Ring& ring, FVariant variant, int n, int m);

// U~(a, w): U(a) with row and column 0 removed, the off-diagonal blocks
// scaled by -w (upper right) and -1/w (lower left), and 1 at the center.
// w is symbolic when empty, otherwise a unit of the ring.
WindowedMatrix build_Utilde(const LaurentSeries& a, const std::optional<Element>& w, const Interval& window);

// U^R, U^+ or U^- of a complete symbol from the closed forms of the
// conjugated monomials, with symbolic t when t is empty.
WindowedMatrix conjugate_U(const LaurentSeries& a, FVariant variant, const std::optional<Element>& t,
                           const Interval& window);

// Entry (i, j) of U^X(z^n, t, w) with symbolic t.
Poly conjugated_monomial_entry(const Ring& ring, FVariant variant, int n, int i, int j);

WindowedMatrix mat_add(const WindowedMatrix& x, const WindowedMatrix& y);
WindowedMatrix mat_sub(const WindowedMatrix& x, const WindowedMatrix& y);
WindowedMatrix mat_mul(const WindowedMatrix& x, const WindowedMatrix& y);
WindowedMatrix mat_scale(const WindowedMatrix& x, const Poly& c);
// [x, y] = xy - yx.
WindowedMatrix commutator(const WindowedMatrix& x, const WindowedMatrix& y);

// Columns where m differs from reference (entries of seminorm at most
// threshold count as zero). Throws WindowError when a differing column
// reaches the edge of the reliable square.
std::set<int> perturbation_columns(const WindowedMatrix& m, const WindowedMatrix& reference, double threshold = 0.0);
std::set<int> perturbation_rows(const WindowedMatrix& m, const WindowedMatrix& reference, double threshold = 0.0);

// Exact equality of reliable entries shared by both windows.
bool reliable_equal(const WindowedMatrix& x, const WindowedMatrix& y);

}  // namespace whf

#endif  // WHF_TOEPLITZ_HPP
