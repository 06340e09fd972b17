#include "whf/ring.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <vector>

#include "whf/errors.hpp"

namespace whf {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

Rational parse_rational(std::string_view text) {
  text = trim(text);
  if (text.empty()) throw ValidationError("empty rational literal");
  const auto valid = [](std::string_view part) {
    if (part.empty()) return false;
    std::size_t i = (part.front() == '-' || part.front() == '+') ? 1 : 0;
    if (i == part.size()) return false;
    return std::all_of(part.begin() + static_cast<std::ptrdiff_t>(i), part.end(),
                       [](char c) { return c >= '0' && c <= '9'; });
  };
  const auto slash = text.find('/');
  std::string num(text.substr(0, slash));
  std::string den = slash == std::string_view::npos ? "1" : std::string(text.substr(slash + 1));
  if (!num.empty() && num.front() == '+') num.erase(0, 1);
  if (!valid(num) || !valid(den) || den.front() == '-' || den.front() == '+') {
    throw ValidationError("malformed rational literal '" + std::string(text) + "'");
  }
  Rational q;
  q.get_num() = mpz_class(num, 10);
  q.get_den() = mpz_class(den, 10);
  if (q.get_den() == 0) throw ValidationError("zero denominator in '" + std::string(text) + "'");
  q.canonicalize();
  return q;
}

double parse_double(std::string_view text) {
  text = trim(text);
  std::string buf(text);
  char* end = nullptr;
  const double v = std::strtod(buf.c_str(), &end);
  if (buf.empty() || end != buf.c_str() + buf.size()) {
    throw ValidationError("malformed real literal '" + buf + "'");
  }
  return v;
}

std::string format_rational(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

}  // namespace

std::string format_double(double value) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

// ---------------------------------------------------------------- Element

Element::Element(RationalParts parts) : parts_(std::move(parts)) {
  auto& q = std::get<0>(parts_);
  if (q.empty()) throw ValidationError("element needs at least one component");
  for (Rational& x : q) {
    if (x.get_den() == 0) throw ValidationError("zero denominator");
    x.canonicalize();
  }
}

Element::Element(ComplexParts parts) : parts_(std::move(parts)) {
  if (std::get<1>(parts_).empty()) throw ValidationError("element needs at least one component");
}

std::size_t Element::arity() const {
  return std::visit([](const auto& p) { return p.size(); }, parts_);
}

const Element::RationalParts& Element::rational_parts() const {
  if (!is_rational()) throw RingMismatch("element is not rational");
  return std::get<0>(parts_);
}

const Element::ComplexParts& Element::complex_parts() const {
  if (is_rational()) throw RingMismatch("element is not complex");
  return std::get<1>(parts_);
}

Element Element::component(std::size_t i) const {
  if (i >= arity()) throw ValidationError("component index out of range");
  if (is_rational()) return Element::rational(std::get<0>(parts_)[i]);
  return Element::complex(std::get<1>(parts_)[i]);
}

bool Element::is_exact_zero() const {
  if (is_rational()) {
    const auto& p = std::get<0>(parts_);
    return std::all_of(p.begin(), p.end(), [](const Rational& q) { return sgn(q) == 0; });
  }
  const auto& p = std::get<1>(parts_);
  return std::all_of(p.begin(), p.end(), [](const Complex& c) { return c == Complex(0.0, 0.0); });
}

void Element::check_shape(const Element& rhs) const {
  if (parts_.index() != rhs.parts_.index() || arity() != rhs.arity()) {
    throw RingMismatch("ring elements have different shapes");
  }
}

Element& Element::operator+=(const Element& rhs) {
  check_shape(rhs);
  if (is_rational()) {
    auto& p = std::get<0>(parts_);
    const auto& q = std::get<0>(rhs.parts_);
    for (std::size_t i = 0; i < p.size(); ++i) p[i] += q[i];
  } else {
    auto& p = std::get<1>(parts_);
    const auto& q = std::get<1>(rhs.parts_);
    for (std::size_t i = 0; i < p.size(); ++i) p[i] += q[i];
  }
  return *this;
}

Element& Element::operator-=(const Element& rhs) {
  check_shape(rhs);
  if (is_rational()) {
    auto& p = std::get<0>(parts_);
    const auto& q = std::get<0>(rhs.parts_);
    for (std::size_t i = 0; i < p.size(); ++i) p[i] -= q[i];
  } else {
    auto& p = std::get<1>(parts_);
    const auto& q = std::get<1>(rhs.parts_);
    for (std::size_t i = 0; i < p.size(); ++i) p[i] -= q[i];
  }
  return *this;
}

Element& Element::operator*=(const Element& rhs) {
  check_shape(rhs);
  if (is_rational()) {
    auto& p = std::get<0>(parts_);
    const auto& q = std::get<0>(rhs.parts_);
    for (std::size_t i = 0; i < p.size(); ++i) p[i] *= q[i];
  } else {
    auto& p = std::get<1>(parts_);
    const auto& q = std::get<1>(rhs.parts_);
    for (std::size_t i = 0; i < p.size(); ++i) p[i] *= q[i];
  }
  return *this;
}

Element Element::operator-() const {
  Element r = *this;
  std::visit([](auto& p) {
    for (auto& c : p) c = -c;
  }, r.parts_);
  return r;
}

// ------------------------------------------------------------------- Ring

Ring Ring::rational() { return Ring(BaseField::rational, 1, false, 0.0); }

Ring Ring::complex(double tolerance) {
  if (!(tolerance > 0.0)) throw ValidationError("complex ring tolerance must be positive");
  return Ring(BaseField::complex, 1, false, tolerance);
}

Ring Ring::product(const Ring& base, int arity) {
  if (arity < 1) throw ValidationError("product ring arity must be at least 1");
  if (base.is_product()) throw ValidationError("nested product rings are not supported");
  return Ring(base.base_, arity, true, base.tolerance_);
}

Ring Ring::with_tolerance(double tolerance) const {
  if (is_exact()) return *this;
  if (!(tolerance > 0.0)) throw ValidationError("tolerance must be positive");
  Ring r = *this;
  r.tolerance_ = tolerance;
  return r;
}

std::string Ring::name() const {
  std::string n = is_exact() ? "Q" : "C";
  if (product_) n += "^" + std::to_string(arity_);
  return n;
}

Element Ring::from_integer(long value) const {
  if (is_exact()) return Element(Element::RationalParts(static_cast<std::size_t>(arity_), Rational(value)));
  return Element(Element::ComplexParts(static_cast<std::size_t>(arity_), Complex(static_cast<double>(value), 0.0)));
}

Element Ring::from_rational(const Rational& value) const {
  if (is_exact()) return Element(Element::RationalParts(static_cast<std::size_t>(arity_), value));
  return Element(Element::ComplexParts(static_cast<std::size_t>(arity_), Complex(value.get_d(), 0.0)));
}

Element Ring::from_complex(Complex value) const {
  if (is_exact()) throw RingMismatch("complex value in an exact ring");
  return Element(Element::ComplexParts(static_cast<std::size_t>(arity_), value));
}

Element Ring::indicator(int component) const {
  if (component < 0 || component >= arity_) throw ValidationError("indicator index out of range");
  std::vector<Element> parts;
  for (int i = 0; i < arity_; ++i) {
    parts.push_back(i == component ? Ring(base_, 1, false, tolerance_).one()
                                   : Ring(base_, 1, false, tolerance_).zero());
  }
  return assemble(parts);
}

Element Ring::assemble(const std::vector<Element>& components) const {
  if (components.size() != static_cast<std::size_t>(arity_)) {
    throw RingMismatch("wrong number of components for " + name());
  }
  if (is_exact()) {
    Element::RationalParts p;
    for (const auto& c : components) p.push_back(c.rational_parts().at(0));
    return Element(std::move(p));
  }
  Element::ComplexParts p;
  for (const auto& c : components) p.push_back(c.complex_parts().at(0));
  return Element(std::move(p));
}

bool Ring::contains(const Element& x) const {
  return x.is_rational() == is_exact() && x.arity() == static_cast<std::size_t>(arity_);
}

void Ring::require(const Element& x) const {
  if (!contains(x)) throw RingMismatch("element does not belong to ring " + name());
}

Element Ring::add(const Element& x, const Element& y) const {
  require(x);
  require(y);
  return x + y;
}

Element Ring::sub(const Element& x, const Element& y) const {
  require(x);
  require(y);
  return x - y;
}

Element Ring::mul(const Element& x, const Element& y) const {
  require(x);
  require(y);
  return x * y;
}

Element Ring::neg(const Element& x) const {
  require(x);
  return -x;
}

double Ring::seminorm(const Element& x) const {
  require(x);
  double m = 0.0;
  if (is_exact()) {
    for (const auto& q : x.rational_parts()) m = std::max(m, std::fabs(q.get_d()));
  } else {
    for (const auto& c : x.complex_parts()) m = std::max(m, std::abs(c));
  }
  return m;
}

bool Ring::equals(const Element& x, const Element& y) const {
  require(x);
  require(y);
  if (is_exact()) return x == y;
  return seminorm(x - y) <= tolerance_;
}

bool Ring::is_zero(const Element& x) const {
  require(x);
  if (is_exact()) return x.is_exact_zero();
  return seminorm(x) <= tolerance_;
}

bool Ring::is_unit(const Element& x) const {
  require(x);
  if (is_exact()) {
    const auto& p = x.rational_parts();
    return std::none_of(p.begin(), p.end(), [](const Rational& q) { return sgn(q) == 0; });
  }
  const auto& p = x.complex_parts();
  return std::none_of(p.begin(), p.end(), [&](const Complex& c) { return std::abs(c) <= tolerance_; });
}

Element Ring::inverse(const Element& x) const {
  if (!is_unit(x)) throw NotInvertible("element " + format(x) + " is not a unit of " + name());
  if (is_exact()) {
    Element::RationalParts p;
    for (const auto& q : x.rational_parts()) p.push_back(Rational(1) / q);
    return Element(std::move(p));
  }
  Element::ComplexParts p;
  for (const auto& c : x.complex_parts()) p.push_back(1.0 / c);
  return Element(std::move(p));
}

std::string Ring::format(const Element& x) const {
  require(x);
  std::vector<std::string> parts;
  if (is_exact()) {
    for (const auto& q : x.rational_parts()) parts.push_back(format_rational(q));
  } else {
    for (const auto& c : x.complex_parts()) parts.push_back(format_double(c.real()) + "," + format_double(c.imag()));
  }
  if (!product_) return parts.front();
  std::string s = "(";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) s += "|";
    s += parts[i];
  }
  return s + ")";
}

Element Ring::parse(std::string_view text) const {
  text = trim(text);
  std::vector<std::string_view> pieces;
  if (product_) {
    if (text.size() < 2 || text.front() != '(' || text.back() != ')') {
      throw ValidationError("product ring element must look like (c1|c2|...): '" + std::string(text) + "'");
    }
    std::string_view inner = text.substr(1, text.size() - 2);
    std::size_t start = 0;
    for (;;) {
      const auto bar = inner.find('|', start);
      pieces.push_back(inner.substr(start, bar == std::string_view::npos ? std::string_view::npos : bar - start));
      if (bar == std::string_view::npos) break;
      start = bar + 1;
    }
    if (pieces.size() != static_cast<std::size_t>(arity_)) {
      throw ValidationError("expected " + std::to_string(arity_) + " components in '" + std::string(text) + "'");
    }
  } else {
    pieces.push_back(text);
  }
  if (is_exact()) {
    Element::RationalParts p;
    for (auto piece : pieces) p.push_back(parse_rational(piece));
    return Element(std::move(p));
  }
  Element::ComplexParts p;
  for (auto piece : pieces) {
    const auto comma = piece.find(',');
    if (comma == std::string_view::npos) {
      p.emplace_back(parse_double(piece), 0.0);
    } else {
      p.emplace_back(parse_double(piece.substr(0, comma)), parse_double(piece.substr(comma + 1)));
    }
  }
  return Element(std::move(p));
}

}  // namespace whf
