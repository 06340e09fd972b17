#include "whf/poly.hpp"

#include <algorithm>

#include "whf/errors.hpp"

namespace whf {

Element power(const Ring& ring, const Element& x, int n) {
  Element base = n < 0 ? ring.inverse(x) : x;
  unsigned k = static_cast<unsigned>(n < 0 ? -static_cast<long>(n) : n);
  Element result = ring.one();
  while (k) {
    if (k & 1u) result *= base;
    k >>= 1u;
    if (k) base *= base;
  }
  return result;
}

Poly::Poly(const Element& constant) {
  if (!constant.is_exact_zero()) terms_.emplace(Exponent{}, constant);
}

Poly Poly::monomial(const Element& c, int w_power, int t_power) {
  Poly p;
  if (!c.is_exact_zero()) p.terms_.emplace(Exponent{w_power, t_power}, c);
  return p;
}

const Element* Poly::find(int w_power, int t_power) const {
  const auto it = terms_.find(Exponent{w_power, t_power});
  return it == terms_.end() ? nullptr : &it->second;
}

Element Poly::coefficient(const Ring& ring, int w_power, int t_power) const {
  const Element* c = find(w_power, t_power);
  return c ? *c : ring.zero();
}

bool Poly::depends_on_t() const {
  return std::any_of(terms_.begin(), terms_.end(), [](const auto& kv) { return kv.first.t != 0; });
}

int Poly::min_w() const {
  if (terms_.empty()) throw ValidationError("min_w of the zero polynomial");
  return terms_.begin()->first.w;
}

int Poly::max_w() const {
  if (terms_.empty()) throw ValidationError("max_w of the zero polynomial");
  return terms_.rbegin()->first.w;
}

void Poly::add_term(const Exponent& e, const Element& c) {
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_exact_zero()) terms_.erase(it);
  } else if (c.is_exact_zero()) {
    terms_.erase(it);
  }
}

Poly& Poly::operator+=(const Poly& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
  return *this;
}

Poly operator*(const Poly& lhs, const Poly& rhs) {
  Poly out;
  for (const auto& [ea, ca] : lhs.terms_) {
    for (const auto& [eb, cb] : rhs.terms_) {
      out.add_term(Exponent{ea.w + eb.w, ea.t + eb.t}, ca * cb);
    }
  }
  return out;
}

Poly& Poly::operator*=(const Poly& rhs) { return *this = *this * rhs; }

Poly& Poly::operator*=(const Element& c) {
  for (auto it = terms_.begin(); it != terms_.end();) {
    it->second *= c;
    if (it->second.is_exact_zero()) {
      it = terms_.erase(it);
    } else {
      ++it;
    }
  }
  return *this;
}

Poly Poly::operator-() const {
  Poly out = *this;
  for (auto& kv : out.terms_) kv.second = -kv.second;
  return out;
}

Poly Poly::substitute_t(const Ring& ring, const Element& value) const {
  Poly out;
  for (const auto& [e, c] : terms_) out.add_term(Exponent{e.w, 0}, c * power(ring, value, e.t));
  return out;
}

Poly Poly::substitute_w(const Ring& ring, const Element& value) const {
  Poly out;
  for (const auto& [e, c] : terms_) out.add_term(Exponent{0, e.t}, c * power(ring, value, e.w));
  return out;
}

Poly Poly::reflect_w() const {
  Poly out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(Exponent{-e.w, e.t}, c);
  return out;
}

Poly Poly::shift_w(int k) const {
  Poly out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(Exponent{e.w + k, e.t}, c);
  return out;
}

Element Poly::evaluate(const Ring& ring, const Element& w_value) const {
  if (depends_on_t()) throw ValidationError("cannot evaluate a polynomial that still depends on t");
  Element sum = ring.zero();
  for (const auto& [e, c] : terms_) sum += c * power(ring, w_value, e.w);
  return sum;
}

bool Poly::equals(const Ring& ring, const Poly& other) const {
  if (ring.is_exact()) return *this == other;
  return (*this - other).seminorm(ring) <= ring.tolerance();
}

double Poly::seminorm(const Ring& ring) const {
  double m = 0.0;
  for (const auto& kv : terms_) m = std::max(m, ring.seminorm(kv.second));
  return m;
}

Poly Poly::chopped(const Ring& ring, double threshold) const {
  Poly out;
  for (const auto& [e, c] : terms_) {
    if (ring.seminorm(c) > threshold) out.terms_.emplace(e, c);
  }
  return out;
}

std::string Poly::to_string(const Ring& ring) const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    std::string coeff = ring.format(c);
    bool negative = false;
    if (ring.is_exact() && !ring.is_product() && !coeff.empty() && coeff.front() == '-') {
      negative = true;
      coeff.erase(0, 1);
    } else if (!ring.is_exact() && !ring.is_product()) {
      coeff = "(" + coeff + ")";
    }
    std::string mono;
    if (e.t != 0) mono += e.t == 1 ? "t" : "t^" + std::to_string(e.t);
    if (e.w != 0) {
      if (!mono.empty()) mono += "*";
      mono += e.w == 1 ? "w" : "w^" + std::to_string(e.w);
    }
    std::string term;
    if (mono.empty()) {
      term = coeff;
    } else if (coeff == "1") {
      term = mono;
    } else {
      term = coeff + "*" + mono;
    }
    if (first) {
      out = negative ? "-" + term : term;
    } else {
      out += negative ? " - " : " + ";
      out += term;
    }
    first = false;
  }
  return out;
}

}  // namespace whf
