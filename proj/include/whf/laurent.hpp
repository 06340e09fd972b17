#ifndef WHF_LAURENT_HPP
#define WHF_LAURENT_HPP

#include <map>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "whf/interval.hpp"
#include "whf/poly.hpp"
#include "whf/ring.hpp"

namespace whf {

// Finitely supported Laurent series sum_n c_n z^n over a ring.
//
// window() is the exponent range on which the stored data is the true
// series: inside it an absent exponent means a zero coefficient, outside
// it nothing is known. A polynomial symbol is complete (window = all);
// a truncated inverse is only known on a bounded or half-bounded window.
class LaurentSeries {
 public:
  using Coefficients = std::map<int, Element>;

  explicit LaurentSeries(Ring ring, Interval window = Interval::all());
  LaurentSeries(Ring ring, const Coefficients& coeffs, Interval window = Interval::all());

  static LaurentSeries constant(const Ring& ring, const Element& c);
  static LaurentSeries monomial(const Ring& ring, const Element& c, int n);
  static LaurentSeries one(const Ring& ring) { return constant(ring, ring.one()); }

  const Ring& ring() const { return ring_; }
  const Interval& window() const { return window_; }
  const Coefficients& coefficients() const { return coeffs_; }
  bool is_complete() const { return window_ == Interval::all(); }
  bool is_zero() const { return coeffs_.empty(); }

  // Coefficient of z^n; throws WindowError outside the window.
  Element coefficient(int n) const;

  std::optional<int> min_degree() const;
  std::optional<int> max_degree() const;

  // Re-declares the window (clipping stored data to it).
  LaurentSeries restricted(const Interval& window) const;
  // Multiplies by z^k.
  LaurentSeries shifted(int k) const;
  // Same coefficients with z -> 1/z.
  LaurentSeries reflected() const;
  LaurentSeries scaled(const Element& c) const;
  // Drops coefficients with seminorm at most threshold.
  LaurentSeries chopped(double threshold) const;

  // Conversions to and from t-free polynomial entries in w.
  Poly to_poly() const;
  static LaurentSeries from_poly(const Ring& ring, const Poly& p, Interval window = Interval::all());

  // Coefficient-wise equality on the common window under the ring contract.
  bool equals(const LaurentSeries& other) const;
  // Largest coefficient seminorm of (this - other) on the common window.
  double distance(const LaurentSeries& other) const;

  std::string to_string() const;

 private:
  void normalize();

  Ring ring_;
  Interval window_;
  Coefficients coeffs_;
};

// Window of a product x*y on which every contributing coefficient is known.
Interval product_window(const LaurentSeries& x, const LaurentSeries& y);

LaurentSeries series_add(const LaurentSeries& x, const LaurentSeries& y);
LaurentSeries series_sub(const LaurentSeries& x, const LaurentSeries& y);
// Cauchy product, declared on product_window(x, y) intersected with working.
LaurentSeries series_mul(const LaurentSeries& x, const LaurentSeries& y,
                         const Interval& working = Interval::all());

inline LaurentSeries operator+(const LaurentSeries& x, const LaurentSeries& y) { return series_add(x, y); }
inline LaurentSeries operator-(const LaurentSeries& x, const LaurentSeries& y) { return series_sub(x, y); }
inline LaurentSeries operator*(const LaurentSeries& x, const LaurentSeries& y) { return series_mul(x, y); }

// sum_n c_n point^n; point must be a unit when negative exponents are stored.
Element evaluate(const LaurentSeries& x, const Element& point);

// Quotient q with q*u = x on `window`. u is either a power series in z with
// unit constant term (forward recursion from the lowest exponent of x) or a
// series in 1/z with unit z^0 term (backward recursion from the highest).
// When u allows both, the recursion pivots on its larger extreme coefficient.
LaurentSeries series_div_unit(const LaurentSeries& x, const LaurentSeries& u, const Interval& window);

// ------------------------------------------------------------------------
// Elementary factors: a = prod(1 - alpha_i/z) * u z^p * prod(1 - beta_j z).

struct Antiholomorphic {
  Element alpha;
};
struct Monomial {
  int power = 0;
  Element unit;
};
struct Holomorphic {
  Element beta;
};
using ElementaryFactor = std::variant<Antiholomorphic, Monomial, Holomorphic>;
using ElementaryFactorList = std::vector<ElementaryFactor>;

// The complete Laurent polynomial described by a factor list.
LaurentSeries symbol_from_factors(const Ring& ring, const ElementaryFactorList& factors);

// A symbol a together with its inverse b, the input of every factorization.
struct InvertiblePair {
  LaurentSeries a;
  LaurentSeries b;
  // Largest coefficient seminorm of a*b - 1 on the window where a*b is known.
  double residual = 0.0;

  const Ring& ring() const { return a.ring(); }
};

// Largest coefficient seminorm of a*b - 1 on product_window(a, b).
double inverse_residual(const LaurentSeries& a, const LaurentSeries& b);

// Pairs a with a caller-supplied inverse and records the residual.
InvertiblePair make_pair(const LaurentSeries& a, const LaurentSeries& b);

// Exact inverse coefficients on [-half_width, half_width] (one-sided
// factor lists get the matching half-unbounded window).
InvertiblePair invert_from_factors(const Ring& ring, const ElementaryFactorList& factors, int half_width);

// Complex symbols only: inverse via reciprocal samples on the unit circle
// and an inverse DFT. samples must be a power of two.
InvertiblePair invert_numeric(const LaurentSeries& a, int samples);

// Inverse of a one-sided or orthogonal symbol computed directly; throws
// ValidationError for genuinely two-sided symbols over exact rings.
InvertiblePair invert_direct(const LaurentSeries& a, int half_width);

// ------------------------------------------------------------------------
// Subgroup membership.

enum class SeriesClass { strictly_holomorphic, strictly_antiholomorphic, orthogonal };

bool is_strictly_holomorphic(const LaurentSeries& x);
bool is_strictly_antiholomorphic(const LaurentSeries& x);
// a_n a_m = 0 for all stored n != m; floating rings use a scale-aware test.
bool is_orthogonal(const LaurentSeries& x);
std::set<SeriesClass> classify(const LaurentSeries& x);
inline std::set<SeriesClass> classify(const InvertiblePair& p) { return classify(p.a); }
std::string to_string(SeriesClass c);

// ------------------------------------------------------------------------
// JSON: [{"n": int, "c": "<ring element>"}, ...] sorted by n.

nlohmann::json series_to_json(const LaurentSeries& x);
LaurentSeries series_from_json(const Ring& ring, const nlohmann::json& j, Interval window = Interval::all());
ElementaryFactorList factors_from_json(const Ring& ring, const nlohmann::json& j);
nlohmann::json factors_to_json(const Ring& ring, const ElementaryFactorList& factors);

}  // namespace whf

#endif  // WHF_LAURENT_HPP
