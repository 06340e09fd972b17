#ifndef WHF_RING_HPP
#define WHF_RING_HPP

// Coefficient rings.
//
// Every ring handled by the library is a finite product F^k of a base field
// F in {Q, C}; the plain rings Q and C are the arity-one case. Elements are
// plain values carrying their components, and a Ring is the descriptor that
// knows the distinguished elements, the seminorm and the equality contract
// (exact for Q, absolute tolerance for C).

#include <complex>
#include <cstddef>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <boost/container/small_vector.hpp>
#include <gmpxx.h>

namespace whf {

using Rational = mpq_class;
using Complex = std::complex<double>;

inline constexpr double kDefaultTolerance = 1e-9;

enum class BaseField { rational, complex };

class Element {
 public:
  using RationalParts = boost::container::small_vector<Rational, 2>;
  using ComplexParts = boost::container::small_vector<Complex, 2>;

  Element() : parts_(RationalParts{Rational(0)}) {}
  explicit Element(RationalParts parts);
  explicit Element(ComplexParts parts);

  static Element rational(const Rational& q) { return Element(RationalParts{q}); }
  static Element complex(Complex c) { return Element(ComplexParts{c}); }

  bool is_rational() const { return parts_.index() == 0; }
  std::size_t arity() const;

  const RationalParts& rational_parts() const;
  const ComplexParts& complex_parts() const;

  // The i-th component as an arity-one element.
  Element component(std::size_t i) const;

  bool is_exact_zero() const;

  Element& operator+=(const Element& rhs);
  Element& operator-=(const Element& rhs);
  Element& operator*=(const Element& rhs);
  Element operator-() const;

  friend Element operator+(Element lhs, const Element& rhs) { return lhs += rhs; }
  friend Element operator-(Element lhs, const Element& rhs) { return lhs -= rhs; }
  friend Element operator*(Element lhs, const Element& rhs) { return lhs *= rhs; }

  // Exact component-wise comparison; use Ring::equals for the ring's contract.
  friend bool operator==(const Element& lhs, const Element& rhs) { return lhs.parts_ == rhs.parts_; }

 private:
  void check_shape(const Element& rhs) const;

  std::variant<RationalParts, ComplexParts> parts_;
};

class Ring {
 public:
  static Ring rational();
  static Ring complex(double tolerance = kDefaultTolerance);
  static Ring product(const Ring& base, int arity);

  BaseField base() const { return base_; }
  int arity() const { return arity_; }
  bool is_product() const { return product_; }
  bool is_exact() const { return base_ == BaseField::rational; }
  double tolerance() const { return tolerance_; }
  Ring with_tolerance(double tolerance) const;

  // Same element shape and formatting; tolerance is not part of identity.
  bool compatible(const Ring& other) const {
    return base_ == other.base_ && arity_ == other.arity_ && product_ == other.product_;
  }

  // Short human-readable name such as "Q", "C" or "Q^3".
  std::string name() const;

  Element zero() const { return from_integer(0); }
  Element one() const { return from_integer(1); }
  Element from_integer(long value) const;
  Element from_rational(const Rational& value) const;
  Element from_complex(Complex value) const;
  // Indicator idempotent of component i, e.g. (0,1,0) in Q^3.
  Element indicator(int component) const;
  // Builds a product element from per-component arity-one elements.
  Element assemble(const std::vector<Element>& components) const;

  bool contains(const Element& x) const;
  void require(const Element& x) const;

  Element add(const Element& x, const Element& y) const;
  Element sub(const Element& x, const Element& y) const;
  Element mul(const Element& x, const Element& y) const;
  Element neg(const Element& x) const;

  double seminorm(const Element& x) const;
  bool equals(const Element& x, const Element& y) const;
  bool is_zero(const Element& x) const;
  bool is_one(const Element& x) const { return equals(x, one()); }
  bool is_unit(const Element& x) const;
  Element inverse(const Element& x) const;

  // "p/q" (or "p") for rationals, "re,im" for complex, "(c1|c2|...)" for
  // products. format/parse round-trip bit-exactly.
  std::string format(const Element& x) const;
  Element parse(std::string_view text) const;

 private:
  Ring(BaseField base, int arity, bool product, double tolerance)
      : base_(base), arity_(arity), product_(product), tolerance_(tolerance) {}

  BaseField base_;
  int arity_;
  bool product_;
  double tolerance_;
};

// Scalar helpers shared by the numeric parts of the library.
std::string format_double(double value);

}  // namespace whf

#endif  // WHF_RING_HPP
