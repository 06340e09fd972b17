#ifndef WHF_POLY_HPP
#define WHF_POLY_HPP

#include <compare>
#include <cstddef>
#include <map>
#include <string>

#include "whf/ring.hpp"

namespace whf {

// Exponent of a monomial w^w * t^t.
struct Exponent {
  int w = 0;
  int t = 0;
  friend constexpr auto operator<=>(const Exponent&, const Exponent&) = default;
};

// Sparse Laurent polynomial in the auxiliary variables w and t over a
// coefficient ring. These are the entries of every windowed matrix; the
// ring itself is implied by the coefficients, so a zero polynomial has no
// ring at all. Terms with an exactly-zero coefficient are never stored.
class Poly {
 public:
  using Terms = std::map<Exponent, Element>;

  Poly() = default;
  explicit Poly(const Element& constant);

  static Poly monomial(const Element& c, int w_power, int t_power = 0);
  static Poly w(const Ring& ring, int power = 1) { return monomial(ring.one(), power); }
  static Poly t(const Ring& ring, int power = 1) { return monomial(ring.one(), 0, power); }

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const Terms& terms() const { return terms_; }

  const Element* find(int w_power, int t_power = 0) const;
  Element coefficient(const Ring& ring, int w_power, int t_power = 0) const;

  bool depends_on_t() const;
  // Extreme w exponents; the polynomial must be nonzero.
  int min_w() const;
  int max_w() const;

  Poly& operator+=(const Poly& rhs);
  Poly& operator-=(const Poly& rhs);
  Poly& operator*=(const Poly& rhs);
  Poly& operator*=(const Element& c);
  Poly operator-() const;

  friend Poly operator+(Poly lhs, const Poly& rhs) { return lhs += rhs; }
  friend Poly operator-(Poly lhs, const Poly& rhs) { return lhs -= rhs; }
  friend Poly operator*(const Poly& lhs, const Poly& rhs);
  friend Poly operator*(Poly lhs, const Element& c) { return lhs *= c; }

  // Exact structural equality.
  friend bool operator==(const Poly&, const Poly&) = default;

  Poly substitute_t(const Ring& ring, const Element& value) const;
  Poly substitute_w(const Ring& ring, const Element& value) const;
  // w -> 1/w.
  Poly reflect_w() const;
  // Multiplies by w^k.
  Poly shift_w(int k) const;

  // Value at w for a t-free polynomial; w must be a unit if negative
  // powers occur.
  Element evaluate(const Ring& ring, const Element& w_value) const;

  // Coefficient-wise equality under the ring's contract.
  bool equals(const Ring& ring, const Poly& other) const;
  // Largest coefficient seminorm.
  double seminorm(const Ring& ring) const;
  // Drops coefficients whose seminorm is at most threshold.
  Poly chopped(const Ring& ring, double threshold) const;

  std::string to_string(const Ring& ring) const;

 private:
  void add_term(const Exponent& e, const Element& c);

  Terms terms_;
};

// x^n in the ring; negative n requires a unit.
Element power(const Ring& ring, const Element& x, int n);

}  // namespace whf

#endif  // WHF_POLY_HPP
