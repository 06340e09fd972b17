#include "whf/corpus.hpp"

#include <cmath>
#include <numbers>

#include "whf/errors.hpp"

namespace whf {

Rational Corpus::small_rational(bool allow_zero) {
  for (;;) {
    Rational q(uniform(-3, 3), uniform(1, 5));
    q.canonicalize();
    if (abs(q) < 1 && (allow_zero || q != 0)) return q;
  }
}

Element Corpus::small_parameter(const Ring& ring, bool allow_zero) {
  if (!ring.is_exact()) throw ValidationError("small_parameter is for rational rings");
  std::vector<Element> parts;
  for (int c = 0; c < ring.arity(); ++c) parts.push_back(Element::rational(small_rational(allow_zero)));
  return ring.is_product() ? ring.assemble(parts) : parts[0];
}

Element Corpus::unit(const Ring& ring) {
  std::vector<Element> parts;
  for (int c = 0; c < ring.arity(); ++c) {
    Rational q;
    do {
      q = Rational(uniform(-3, 3), uniform(1, 5));
      q.canonicalize();
    } while (q == 0);
    parts.push_back(Element::rational(q));
  }
  return ring.is_product() ? ring.assemble(parts) : parts[0];
}

ElementaryFactorList Corpus::rational_factors(const Ring& ring) {
  ElementaryFactorList out;
  const int count = uniform(1, 3);
  bool has_monomial = false;
  for (int i = 0; i < count; ++i) {
    const int kind = uniform(0, has_monomial ? 1 : 2);
    if (kind == 0) {
      out.push_back(Antiholomorphic{small_parameter(ring, ring.is_product())});
    } else if (kind == 1) {
      out.push_back(Holomorphic{small_parameter(ring, ring.is_product())});
    } else {
      out.push_back(Monomial{uniform(-2, 2), unit(ring)});
      has_monomial = true;
    }
  }
  return out;
}

ElementaryFactorList Corpus::holomorphic_factors(const Ring& ring) {
  ElementaryFactorList out;
  for (int i = uniform(1, 3); i > 0; --i) out.push_back(Holomorphic{small_parameter(ring, ring.is_product())});
  return out;
}

ElementaryFactorList Corpus::antiholomorphic_factors(const Ring& ring) {
  ElementaryFactorList out;
  for (int i = uniform(1, 3); i > 0; --i) out.push_back(Antiholomorphic{small_parameter(ring, ring.is_product())});
  return out;
}

ElementaryFactorList Corpus::complex_factors(const Ring& ring) {
  if (ring.is_exact() || ring.arity() != 1) throw ValidationError("complex_factors needs the ring C");
  std::uniform_real_distribution<double> modulus(0.1, 0.6), phase(-std::numbers::pi, std::numbers::pi);
  const auto draw = [&] { return Element::complex(std::polar(modulus(rng_), phase(rng_))); };
  ElementaryFactorList out;
  bool has_monomial = false;
  for (int i = 0; i < 3; ++i) {
    const int kind = uniform(0, has_monomial ? 1 : 2);
    if (kind == 0) {
      out.push_back(Antiholomorphic{draw()});
    } else if (kind == 1) {
      out.push_back(Holomorphic{draw()});
    } else {
      out.push_back(Monomial{uniform(-2, 2), draw()});
      has_monomial = true;
    }
  }
  return out;
}

InvertiblePair Corpus::orthogonal_pair(const Ring& ring) {
  LaurentSeries a(ring), b(ring);
  for (int c = 0; c < ring.arity(); ++c) {
    const int p = uniform(-2, 2);
    const Element u = unit(Ring::rational());
    const Element e = ring.is_product() ? ring.indicator(c) : ring.one();
    const Element ue = ring.is_product() ? e * ring.from_rational(u.rational_parts()[0]) : u;
    const Element ve = ring.is_product() ? e * ring.from_rational(1 / u.rational_parts()[0]) : ring.inverse(u);
    a = a + LaurentSeries::monomial(ring, ue, p);
    b = b + LaurentSeries::monomial(ring, ve, -p);
  }
  return make_pair(a, b);
}

}  // namespace whf
