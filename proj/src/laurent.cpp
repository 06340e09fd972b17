#include "whf/laurent.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>

#include "fft.hpp"
#include "whf/errors.hpp"

namespace whf {

namespace {

void require_compatible(const LaurentSeries& x, const LaurentSeries& y) {
  if (!x.ring().compatible(y.ring())) {
    throw RingMismatch("series over " + x.ring().name() + " and " + y.ring().name());
  }
}

bool value_is_zero(const Rational& x) { return sgn(x) == 0; }
bool value_is_zero(const Complex& x) { return x == Complex(0.0, 0.0); }

// Dense univariate polynomials, ascending coefficients, no trailing zeros.
template <class F>
using Dense = std::vector<F>;

template <class F>
void trim(Dense<F>& p) {
  while (!p.empty() && value_is_zero(p.back())) p.pop_back();
}

template <class F>
Dense<F> dense_mul(const Dense<F>& x, const Dense<F>& y) {
  if (x.empty() || y.empty()) return {};
  Dense<F> out(x.size() + y.size() - 1, F(0));
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = 0; j < y.size(); ++j) out[i + j] += x[i] * y[j];
  }
  trim(out);
  return out;
}

template <class F>
Dense<F> dense_sub(Dense<F> x, const Dense<F>& y) {
  if (x.size() < y.size()) x.resize(y.size(), F(0));
  for (std::size_t i = 0; i < y.size(); ++i) x[i] -= y[i];
  trim(x);
  return x;
}

template <class F>
void dense_divmod(const Dense<F>& num, const Dense<F>& den, Dense<F>& quot, Dense<F>& rem) {
  rem = num;
  quot.clear();
  if (rem.size() < den.size()) return;
  quot.assign(rem.size() - den.size() + 1, F(0));
  const F lead = den.back();
  while (!rem.empty() && rem.size() >= den.size()) {
    const std::size_t shift = rem.size() - den.size();
    const F c = rem.back() / lead;
    quot[shift] = c;
    for (std::size_t i = 0; i < den.size(); ++i) rem[shift + i] -= c * den[i];
    rem.pop_back();
    trim(rem);
  }
  trim(quot);
}

// s*a + t*b = g with g = gcd(a, b).
template <class F>
void ext_gcd(const Dense<F>& a, const Dense<F>& b, Dense<F>& g, Dense<F>& s, Dense<F>& t) {
  Dense<F> r0 = a, r1 = b;
  Dense<F> s0{F(1)}, s1{};
  Dense<F> t0{}, t1{F(1)};
  while (!r1.empty()) {
    Dense<F> q, r;
    dense_divmod(r0, r1, q, r);
    Dense<F> s2 = dense_sub(s0, dense_mul(q, s1));
    Dense<F> t2 = dense_sub(t0, dense_mul(q, t1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  g = r0;
  s = s0;
  t = t0;
}

// prod (1 - r x) over the nonzero roots r.
template <class F>
Dense<F> product_of_linear(const std::vector<F>& roots) {
  Dense<F> p{F(1)};
  for (const F& r : roots) {
    if (value_is_zero(r)) continue;
    p = dense_mul(p, Dense<F>{F(1), -r});
  }
  return p;
}

// First `count` coefficients of num / den as a power series; den[0] = 1.
template <class F>
std::vector<F> power_series_quotient(const Dense<F>& num, const Dense<F>& den, int count) {
  std::vector<F> out(static_cast<std::size_t>(std::max(count, 0)), F(0));
  for (int k = 0; k < count; ++k) {
    F v = k < static_cast<int>(num.size()) ? num[static_cast<std::size_t>(k)] : F(0);
    const int top = std::min<int>(k, static_cast<int>(den.size()) - 1);
    for (int j = 1; j <= top; ++j) v -= den[static_cast<std::size_t>(j)] * out[static_cast<std::size_t>(k - j)];
    out[static_cast<std::size_t>(k)] = v;
  }
  return out;
}

// Coefficients n in [lo, hi] of 1 / (prod(1 - alpha_i/z) prod(1 - beta_j z)),
// exactly, via the Bezout identity U*Qm + V*Ap = 1 where Qm(z) is the reversed
// antiholomorphic polynomial. The two partial fractions have disjoint support.
std::map<int, Rational> exact_factor_inverse(const std::vector<Rational>& alphas,
                                             const std::vector<Rational>& betas, int lo, int hi) {
  const Dense<Rational> am = product_of_linear(alphas);
  const Dense<Rational> ap = product_of_linear(betas);
  const int dm = static_cast<int>(am.size()) - 1;
  Dense<Rational> u, v;
  if (dm == 0) {
    u = {Rational(1)};
  } else {
    const Dense<Rational> qm(am.rbegin(), am.rend());
    Dense<Rational> g;
    ext_gcd(qm, ap, g, u, v);
    if (g.size() != 1) throw NotInvertible("antiholomorphic and holomorphic factors share a root");
    const Rational inv = Rational(1) / g[0];
    for (auto& c : u) c *= inv;
    for (auto& c : v) c *= inv;
  }
  std::map<int, Rational> out;
  if (hi >= dm) {
    const std::vector<Rational> s = power_series_quotient(u, ap, hi - dm + 1);
    for (int n = std::max(lo, dm); n <= hi; ++n) {
      const Rational& c = s[static_cast<std::size_t>(n - dm)];
      if (sgn(c) != 0) out.emplace(n, c);
    }
  }
  if (lo <= dm - 1 && !v.empty()) {
    const std::vector<Rational> r = power_series_quotient(Dense<Rational>{Rational(1)}, am, dm - lo);
    for (int n = lo; n <= std::min(hi, dm - 1); ++n) {
      Rational c = 0;
      for (int k = std::max(0, n); k < static_cast<int>(v.size()); ++k) {
        c += v[static_cast<std::size_t>(k)] * r[static_cast<std::size_t>(k - n)];
      }
      if (sgn(c) != 0) out.emplace(n, c);
    }
  }
  return out;
}

// Floating version: the geometric expansions are summed until their tails
// fall below double precision.
std::map<int, Complex> complex_factor_inverse(const std::vector<Complex>& alphas, const std::vector<Complex>& betas,
                                              int lo, int hi) {
  double rho = 0.0;
  for (const auto& a : alphas) rho = std::max(rho, std::abs(a));
  for (const auto& b : betas) rho = std::max(rho, std::abs(b));
  int terms = static_cast<int>(alphas.size() + betas.size()) + 1;
  if (rho > 0.0) terms += static_cast<int>(std::ceil(45.0 / -std::log(rho))) + 16;
  terms = std::min(terms, 200000);
  const Dense<Complex> am = product_of_linear(alphas);
  const Dense<Complex> ap = product_of_linear(betas);
  const std::vector<Complex> r = power_series_quotient(Dense<Complex>{Complex(1.0)}, am, terms + std::max(0, -lo) + 1);
  const std::vector<Complex> e = power_series_quotient(Dense<Complex>{Complex(1.0)}, ap, terms + std::max(0, hi) + 1);
  std::map<int, Complex> out;
  for (int n = lo; n <= hi; ++n) {
    Complex c(0.0, 0.0);
    const int k0 = std::max(0, -n);
    const int k1 = std::min<int>(static_cast<int>(r.size()) - 1, static_cast<int>(e.size()) - 1 - n);
    for (int k = k0; k <= k1; ++k) c += r[static_cast<std::size_t>(k)] * e[static_cast<std::size_t>(n + k)];
    if (!value_is_zero(c)) out.emplace(n, c);
  }
  return out;
}

// Lowest stored exponent when x is known from below; the exponent just above
// the window when nothing is stored there.
int low_support(const LaurentSeries& x) {
  if (auto d = x.min_degree()) return *d;
  return bound_add(x.window().hi, 1);
}

int high_support(const LaurentSeries& x) {
  if (auto d = x.max_degree()) return *d;
  return bound_add(x.window().lo, -1);
}

}  // namespace

// ---------------------------------------------------------------------------
// LaurentSeries

LaurentSeries::LaurentSeries(Ring ring, Interval window) : ring_(std::move(ring)), window_(window) {}

LaurentSeries::LaurentSeries(Ring ring, const Coefficients& coeffs, Interval window)
    : ring_(std::move(ring)), window_(window), coeffs_(coeffs) {
  for (const auto& kv : coeffs_) ring_.require(kv.second);
  normalize();
}

LaurentSeries LaurentSeries::constant(const Ring& ring, const Element& c) { return monomial(ring, c, 0); }

LaurentSeries LaurentSeries::monomial(const Ring& ring, const Element& c, int n) {
  return LaurentSeries(ring, Coefficients{{n, c}});
}

void LaurentSeries::normalize() {
  for (auto it = coeffs_.begin(); it != coeffs_.end();) {
    if (!window_.contains(it->first) || it->second.is_exact_zero()) {
      it = coeffs_.erase(it);
    } else {
      ++it;
    }
  }
}

Element LaurentSeries::coefficient(int n) const {
  if (!window_.contains(n)) {
    throw WindowError("coefficient " + std::to_string(n) + " outside window " + window_.to_string());
  }
  const auto it = coeffs_.find(n);
  return it == coeffs_.end() ? ring_.zero() : it->second;
}

std::optional<int> LaurentSeries::min_degree() const {
  if (coeffs_.empty()) return std::nullopt;
  return coeffs_.begin()->first;
}

std::optional<int> LaurentSeries::max_degree() const {
  if (coeffs_.empty()) return std::nullopt;
  return coeffs_.rbegin()->first;
}

LaurentSeries LaurentSeries::restricted(const Interval& window) const {
  return LaurentSeries(ring_, coeffs_, intersect(window_, window));
}

LaurentSeries LaurentSeries::shifted(int k) const {
  Coefficients out;
  for (const auto& [n, c] : coeffs_) out.emplace(n + k, c);
  return LaurentSeries(ring_, out, whf::shifted(window_, k));
}

LaurentSeries LaurentSeries::reflected() const {
  Coefficients out;
  for (const auto& [n, c] : coeffs_) out.emplace(-n, c);
  const Interval w = window_.is_empty() ? window_ : Interval{-window_.hi, -window_.lo};
  return LaurentSeries(ring_, out, w);
}

LaurentSeries LaurentSeries::scaled(const Element& c) const {
  ring_.require(c);
  Coefficients out;
  for (const auto& [n, x] : coeffs_) out.emplace(n, x * c);
  return LaurentSeries(ring_, out, window_);
}

LaurentSeries LaurentSeries::chopped(double threshold) const {
  Coefficients out;
  for (const auto& [n, c] : coeffs_) {
    if (ring_.seminorm(c) > threshold) out.emplace(n, c);
  }
  return LaurentSeries(ring_, out, window_);
}

Poly LaurentSeries::to_poly() const {
  Poly p;
  for (const auto& [n, c] : coeffs_) p += Poly::monomial(c, n);
  return p;
}

LaurentSeries LaurentSeries::from_poly(const Ring& ring, const Poly& p, Interval window) {
  if (p.depends_on_t()) throw ValidationError("polynomial still depends on t");
  Coefficients out;
  for (const auto& [e, c] : p.terms()) out.emplace(e.w, c);
  return LaurentSeries(ring, out, window);
}

bool LaurentSeries::equals(const LaurentSeries& other) const {
  require_compatible(*this, other);
  if (ring_.is_exact()) {
    const Interval w = intersect(window_, other.window_);
    for (const auto& [n, c] : coeffs_) {
      if (w.contains(n) && other.coefficient(n) != c) return false;
    }
    for (const auto& [n, c] : other.coeffs_) {
      if (w.contains(n) && !coeffs_.contains(n)) return false;
    }
    return true;
  }
  return distance(other) <= ring_.tolerance();
}

double LaurentSeries::distance(const LaurentSeries& other) const {
  require_compatible(*this, other);
  const Interval w = intersect(window_, other.window_);
  double d = 0.0;
  for (const auto& [n, c] : coeffs_) {
    if (w.contains(n)) d = std::max(d, ring_.seminorm(c - other.coefficient(n)));
  }
  for (const auto& [n, c] : other.coeffs_) {
    if (w.contains(n) && !coeffs_.contains(n)) d = std::max(d, ring_.seminorm(c));
  }
  return d;
}

std::string LaurentSeries::to_string() const {
  std::string s = to_poly().to_string(ring_);
  std::replace(s.begin(), s.end(), 'w', 'z');
  if (!is_complete()) s += "  on " + window_.to_string();
  return s;
}

// ---------------------------------------------------------------------------
// Arithmetic

Interval product_window(const LaurentSeries& x, const LaurentSeries& y) {
  require_compatible(x, y);
  if ((x.is_complete() && x.is_zero()) || (y.is_complete() && y.is_zero())) return Interval::all();
  const Interval& wx = x.window();
  const Interval& wy = y.window();
  if (wx.is_empty() || wy.is_empty()) return Interval::empty();
  Interval out = Interval::all();
  // Unknown coefficients above wx.hi meet y's coefficients below n - wx.hi,
  // which are known to vanish only if y is known from below; and so on.
  if (wx.upper_bounded()) {
    if (wy.lower_bounded()) return Interval::empty();
    out.hi = std::min(out.hi, bound_add(wx.hi, low_support(y)));
  }
  if (wy.upper_bounded()) {
    if (wx.lower_bounded()) return Interval::empty();
    out.hi = std::min(out.hi, bound_add(wy.hi, low_support(x)));
  }
  if (wx.lower_bounded()) {
    out.lo = std::max(out.lo, bound_add(wx.lo, high_support(y)));
  }
  if (wy.lower_bounded()) {
    out.lo = std::max(out.lo, bound_add(wy.lo, high_support(x)));
  }
  if (out.is_empty()) return Interval::empty();
  return out;
}

LaurentSeries series_add(const LaurentSeries& x, const LaurentSeries& y) {
  require_compatible(x, y);
  LaurentSeries::Coefficients out = x.coefficients();
  for (const auto& [n, c] : y.coefficients()) {
    auto [it, inserted] = out.try_emplace(n, c);
    if (!inserted) it->second += c;
  }
  return LaurentSeries(x.ring(), out, intersect(x.window(), y.window()));
}

LaurentSeries series_sub(const LaurentSeries& x, const LaurentSeries& y) {
  require_compatible(x, y);
  LaurentSeries::Coefficients out = x.coefficients();
  for (const auto& [n, c] : y.coefficients()) {
    auto [it, inserted] = out.try_emplace(n, -c);
    if (!inserted) it->second -= c;
  }
  return LaurentSeries(x.ring(), out, intersect(x.window(), y.window()));
}

LaurentSeries series_mul(const LaurentSeries& x, const LaurentSeries& y, const Interval& working) {
  const Interval window = intersect(product_window(x, y), working);
  LaurentSeries::Coefficients out;
  if (!window.is_empty()) {
    for (const auto& [n, a] : x.coefficients()) {
      for (const auto& [m, b] : y.coefficients()) {
        if (!window.contains(n + m)) continue;
        auto [it, inserted] = out.try_emplace(n + m, a * b);
        if (!inserted) it->second += a * b;
      }
    }
  }
  return LaurentSeries(x.ring(), out, window);
}

Element evaluate(const LaurentSeries& x, const Element& point) {
  const Ring& ring = x.ring();
  ring.require(point);
  if (!x.is_complete()) throw WindowError("cannot evaluate a truncated series");
  const auto lo = x.min_degree();
  if (lo && *lo < 0 && !ring.is_unit(point)) {
    throw NotInvertible("evaluation point " + ring.format(point) + " is not a unit");
  }
  Element sum = ring.zero();
  for (const auto& [n, c] : x.coefficients()) sum += c * power(ring, point, n);
  return sum;
}

LaurentSeries series_div_unit(const LaurentSeries& x, const LaurentSeries& u, const Interval& window) {
  require_compatible(x, u);
  const Ring& ring = x.ring();
  const auto umin = u.min_degree();
  const auto umax = u.max_degree();
  if (!umin) throw NotInvertible("division by the zero series");

  const bool can_forward = !u.window().lower_bounded() && ring.is_unit(u.coefficient(*umin));
  const bool can_backward = !u.window().upper_bounded() && ring.is_unit(u.coefficient(*umax));
  if (!can_forward && !can_backward) throw NotInvertible("divisor has no invertible extreme coefficient");
  // A complete divisor allows both; pivot on the larger extreme coefficient.
  const bool forward = can_forward && (!can_backward || ring.seminorm(u.coefficient(*umin)) >= ring.seminorm(u.coefficient(*umax)));

  if (forward) {
    if (x.window().lower_bounded()) throw WindowError("forward division needs a dividend known from below");
    const int d = *umin;
    const Element inv = ring.inverse(u.coefficient(d));
    const int xmin = low_support(x);
    int hi = std::min(window.hi, bound_add(x.window().hi, -d));
    hi = std::min(hi, bound_add(u.window().hi, xmin - 2 * d));
    const Interval out_window = intersect(window, Interval{Interval::kNegInf, hi});
    if (!x.min_degree()) return LaurentSeries(ring, out_window);
    if (!Interval{xmin - d, hi}.is_empty() && !Interval{xmin - d, hi}.upper_bounded()) {
      throw WindowError("forward division needs a window bounded above");
    }
    LaurentSeries::Coefficients q;
    for (int n = xmin - d; n <= hi; ++n) {
      Element acc = x.coefficient(n + d);
      for (auto it = u.coefficients().upper_bound(d); it != u.coefficients().end(); ++it) {
        const auto qt = q.find(n + d - it->first);
        if (qt != q.end()) acc -= it->second * qt->second;
      }
      acc *= inv;
      if (!acc.is_exact_zero()) q.emplace(n, std::move(acc));
    }
    return LaurentSeries(ring, q, out_window);
  }

  if (x.window().upper_bounded()) throw WindowError("backward division needs a dividend known from above");
  const int e = *umax;
  const Element inv = ring.inverse(u.coefficient(e));
  const int xmax = high_support(x);
  int lo = std::max(window.lo, bound_add(x.window().lo, -e));
  lo = std::max(lo, bound_add(u.window().lo, xmax - 2 * e));
  const Interval out_window = intersect(window, Interval{lo, Interval::kPosInf});
  if (!x.max_degree()) return LaurentSeries(ring, out_window);
  if (!Interval{lo, xmax - e}.is_empty() && !Interval{lo, xmax - e}.lower_bounded()) {
    throw WindowError("backward division needs a window bounded below");
  }
  LaurentSeries::Coefficients q;
  for (int n = xmax - e; n >= lo; --n) {
    Element acc = x.coefficient(n + e);
    for (auto it = u.coefficients().begin(); it != u.coefficients().end() && it->first < e; ++it) {
      const auto qt = q.find(n + e - it->first);
      if (qt != q.end()) acc -= it->second * qt->second;
    }
    acc *= inv;
    if (!acc.is_exact_zero()) q.emplace(n, std::move(acc));
  }
  return LaurentSeries(ring, q, out_window);
}

// ---------------------------------------------------------------------------
// Factors and inverses

namespace {

struct FactorData {
  Element unit;
  int power = 0;
  std::vector<Element> alphas;
  std::vector<Element> betas;
};

FactorData validate_factors(const Ring& ring, const ElementaryFactorList& factors) {
  FactorData d{ring.one(), 0, {}, {}};
  for (const auto& f : factors) {
    if (const auto* a = std::get_if<Antiholomorphic>(&f)) {
      ring.require(a->alpha);
      if (ring.seminorm(a->alpha) >= 1.0) {
        throw ValidationError("antiholomorphic parameter " + ring.format(a->alpha) + " must have seminorm < 1");
      }
      d.alphas.push_back(a->alpha);
    } else if (const auto* m = std::get_if<Monomial>(&f)) {
      ring.require(m->unit);
      if (!ring.is_unit(m->unit)) throw NotInvertible("monomial factor " + ring.format(m->unit) + " is not a unit");
      d.unit *= m->unit;
      d.power += m->power;
    } else {
      const auto& h = std::get<Holomorphic>(f);
      ring.require(h.beta);
      if (ring.seminorm(h.beta) >= 1.0) {
        throw ValidationError("holomorphic parameter " + ring.format(h.beta) + " must have seminorm < 1");
      }
      d.betas.push_back(h.beta);
    }
  }
  return d;
}

template <class F>
std::vector<F> component_values(const std::vector<Element>& xs, std::size_t c) {
  std::vector<F> out;
  for (const auto& x : xs) {
    if constexpr (std::is_same_v<F, Rational>) {
      out.push_back(x.rational_parts()[c]);
    } else {
      out.push_back(x.complex_parts()[c]);
    }
  }
  return out;
}

}  // namespace

LaurentSeries symbol_from_factors(const Ring& ring, const ElementaryFactorList& factors) {
  const FactorData d = validate_factors(ring, factors);
  LaurentSeries a = LaurentSeries::monomial(ring, d.unit, d.power);
  for (const auto& alpha : d.alphas) {
    a = a * LaurentSeries(ring, {{0, ring.one()}, {-1, -alpha}});
  }
  for (const auto& beta : d.betas) {
    a = a * LaurentSeries(ring, {{0, ring.one()}, {1, -beta}});
  }
  return a;
}

double inverse_residual(const LaurentSeries& a, const LaurentSeries& b) {
  const LaurentSeries prod = series_mul(a, b);
  const Ring& ring = a.ring();
  double r = 0.0;
  for (const auto& [n, c] : prod.coefficients()) {
    r = std::max(r, ring.seminorm(n == 0 ? c - ring.one() : c));
  }
  if (prod.window().contains(0) && !prod.coefficients().contains(0)) r = std::max(r, 1.0);
  return r;
}

InvertiblePair make_pair(const LaurentSeries& a, const LaurentSeries& b) {
  require_compatible(a, b);
  return InvertiblePair{a, b, inverse_residual(a, b)};
}

InvertiblePair invert_from_factors(const Ring& ring, const ElementaryFactorList& factors, int half_width) {
  if (half_width < 0) throw ValidationError("window half-width must be nonnegative");
  const FactorData d = validate_factors(ring, factors);
  const LaurentSeries a = symbol_from_factors(ring, factors);

  const auto nonzero = [&](const Element& x) { return !x.is_exact_zero(); };
  const bool anti = std::any_of(d.alphas.begin(), d.alphas.end(), nonzero);
  const bool holo = std::any_of(d.betas.begin(), d.betas.end(), nonzero);
  Interval window = Interval::all();
  if (anti) window.lo = -half_width;
  if (holo) window.hi = half_width;

  // b_n = u^{-1} b'_{n+p} where b' inverts the two geometric parts; b' is
  // supported on n >= 0 without antiholomorphic factors and on n <= 0
  // without holomorphic ones.
  const int p = d.power;
  const int lo = anti ? window.lo + p : 0;
  const int hi = holo ? window.hi + p : 0;

  const std::size_t arity = static_cast<std::size_t>(ring.arity());
  std::map<int, std::vector<Element>> parts;
  for (std::size_t c = 0; c < arity; ++c) {
    if (ring.is_exact()) {
      const auto inv = exact_factor_inverse(component_values<Rational>(d.alphas, c),
                                            component_values<Rational>(d.betas, c), lo, hi);
      for (const auto& [n, v] : inv) {
        auto& slot = parts[n];
        if (slot.empty()) slot.assign(arity, Element::rational(0));
        slot[c] = Element::rational(v);
      }
    } else {
      const auto inv = complex_factor_inverse(component_values<Complex>(d.alphas, c),
                                              component_values<Complex>(d.betas, c), lo, hi);
      for (const auto& [n, v] : inv) {
        auto& slot = parts[n];
        if (slot.empty()) slot.assign(arity, Element::complex(0.0));
        slot[c] = Element::complex(v);
      }
    }
  }
  const Element uinv = ring.inverse(d.unit);
  LaurentSeries::Coefficients coeffs;
  for (const auto& [n, comps] : parts) coeffs.emplace(n - p, ring.assemble(comps) * uinv);
  LaurentSeries b(ring, coeffs, window);
  return make_pair(a, b);
}

InvertiblePair invert_numeric(const LaurentSeries& a, int samples) {
  const Ring& ring = a.ring();
  if (ring.is_exact()) throw ValidationError("numeric inversion needs a complex ring");
  if (samples < 2 || !std::has_single_bit(static_cast<unsigned>(samples))) {
    throw ValidationError("sample count must be a power of two, got " + std::to_string(samples));
  }
  if (!a.is_complete()) throw WindowError("numeric inversion needs a complete symbol");
  const std::size_t arity = static_cast<std::size_t>(ring.arity());
  std::map<int, std::vector<Element>> parts;
  for (std::size_t c = 0; c < arity; ++c) {
    std::vector<std::pair<int, Complex>> coeffs;
    for (const auto& [n, v] : a.coefficients()) coeffs.emplace_back(n, v.complex_parts()[c]);
    std::vector<Complex> values = detail::sample_on_circle(coeffs, samples);
    for (const auto& v : values) {
      if (std::abs(v) <= ring.tolerance()) {
        throw NotInvertible("symbol vanishes (numerically) on the unit circle");
      }
    }
    for (auto& v : values) v = 1.0 / v;
    for (const auto& [n, v] : detail::coefficients_from_samples(std::move(values))) {
      auto& slot = parts[n];
      if (slot.empty()) slot.assign(arity, Element::complex(0.0));
      slot[c] = Element::complex(v);
    }
  }
  LaurentSeries::Coefficients coeffs;
  for (const auto& [n, comps] : parts) coeffs.emplace(n, ring.assemble(comps));
  return make_pair(a, LaurentSeries(ring, coeffs, Interval{-samples / 2, samples / 2 - 1}));
}

InvertiblePair invert_direct(const LaurentSeries& a, int half_width) {
  const Ring& ring = a.ring();
  if (!a.is_complete()) throw WindowError("direct inversion needs a complete symbol");
  if (a.is_zero()) throw NotInvertible("the zero series is not invertible");
  const std::size_t arity = static_cast<std::size_t>(ring.arity());

  // Orthogonal symbols whose components are monomials invert coefficient-wise.
  if (ring.is_exact()) {
    std::vector<int> degree(arity, 0);
    std::vector<int> count(arity, 0);
    for (const auto& [n, c] : a.coefficients()) {
      for (std::size_t k = 0; k < arity; ++k) {
        if (sgn(c.rational_parts()[k]) != 0) {
          ++count[k];
          degree[k] = n;
        }
      }
    }
    if (std::all_of(count.begin(), count.end(), [](int k) { return k == 1; })) {
      std::map<int, Element::RationalParts> parts;
      for (std::size_t k = 0; k < arity; ++k) {
        auto& slot = parts[-degree[k]];
        if (slot.empty()) slot.assign(arity, Rational(0));
        slot[k] = Rational(1) / a.coefficient(degree[k]).rational_parts()[k];
      }
      LaurentSeries::Coefficients coeffs;
      for (auto& [n, p] : parts) coeffs.emplace(n, Element(std::move(p)));
      return make_pair(a, LaurentSeries(ring, coeffs));
    }
  }

  // One-sided expansion when an extreme coefficient dominates the rest in
  // every component (then all roots lie on the right side of the circle).
  const auto dominates = [&](int pivot) {
    for (std::size_t k = 0; k < arity; ++k) {
      double lead = 0.0, rest = 0.0;
      for (const auto& [n, c] : a.coefficients()) {
        const double m = ring.is_exact() ? std::fabs(c.rational_parts()[k].get_d()) : std::abs(c.complex_parts()[k]);
        (n == pivot ? lead : rest) += m;
      }
      if (!(lead > rest)) return false;
    }
    return true;
  };
  const int lo = *a.min_degree();
  const int hi = *a.max_degree();
  const LaurentSeries one = LaurentSeries::one(ring);
  if (dominates(lo)) {
    const LaurentSeries v = a.shifted(-lo);
    const LaurentSeries q = series_div_unit(one, v, Interval{Interval::kNegInf, half_width + lo});
    return make_pair(a, q.shifted(-lo));
  }
  if (dominates(hi)) {
    const LaurentSeries v = a.shifted(-hi);
    const LaurentSeries q = series_div_unit(one, v, Interval{-half_width + hi, Interval::kPosInf});
    return make_pair(a, q.shifted(-hi));
  }
  throw ValidationError("two-sided symbol: supply an explicit inverse or an elementary factor list");
}

// ---------------------------------------------------------------------------
// Classification

bool is_strictly_holomorphic(const LaurentSeries& x) {
  const Ring& ring = x.ring();
  const auto it = x.coefficients().find(0);
  if (it == x.coefficients().end() || !ring.is_one(it->second)) return false;
  for (const auto& [n, c] : x.coefficients()) {
    if (n < 0 && !ring.is_zero(c)) return false;
  }
  return true;
}

bool is_strictly_antiholomorphic(const LaurentSeries& x) { return is_strictly_holomorphic(x.reflected()); }

bool is_orthogonal(const LaurentSeries& x) {
  const Ring& ring = x.ring();
  const auto& cs = x.coefficients();
  for (auto i = cs.begin(); i != cs.end(); ++i) {
    for (auto j = std::next(i); j != cs.end(); ++j) {
      const Element prod = i->second * j->second;
      if (ring.is_exact()) {
        if (!prod.is_exact_zero()) return false;
      } else {
        const double scale =
            std::max(1.0, ring.seminorm(i->second)) * std::max(1.0, ring.seminorm(j->second));
        if (ring.seminorm(prod) > ring.tolerance() * scale) return false;
      }
    }
  }
  return true;
}

std::set<SeriesClass> classify(const LaurentSeries& x) {
  std::set<SeriesClass> out;
  if (is_strictly_holomorphic(x)) out.insert(SeriesClass::strictly_holomorphic);
  if (is_strictly_antiholomorphic(x)) out.insert(SeriesClass::strictly_antiholomorphic);
  if (is_orthogonal(x)) out.insert(SeriesClass::orthogonal);
  return out;
}

std::string to_string(SeriesClass c) {
  switch (c) {
    case SeriesClass::strictly_holomorphic:
      return "StrictlyHolomorphic";
    case SeriesClass::strictly_antiholomorphic:
      return "StrictlyAntiholomorphic";
    case SeriesClass::orthogonal:
      return "Orthogonal";
  }
  return "General";
}

// ---------------------------------------------------------------------------
// JSON

namespace {

Element element_from_json(const Ring& ring, const nlohmann::json& j) {
  if (j.is_string()) return ring.parse(j.get<std::string>());
  if (j.is_number_integer()) return ring.from_integer(j.get<long>());
  if (j.is_number() && !ring.is_exact()) return ring.from_complex(Complex(j.get<double>(), 0.0));
  throw ValidationError("ring element must be a string, got " + j.dump());
}

}  // namespace

nlohmann::json series_to_json(const LaurentSeries& x) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [n, c] : x.coefficients()) out.push_back({{"n", n}, {"c", x.ring().format(c)}});
  return out;
}

LaurentSeries series_from_json(const Ring& ring, const nlohmann::json& j, Interval window) {
  if (!j.is_array()) throw ValidationError("series must be a JSON array of {\"n\", \"c\"} objects");
  LaurentSeries::Coefficients coeffs;
  for (const auto& term : j) {
    if (!term.is_object() || !term.contains("n") || !term.contains("c") || !term["n"].is_number_integer()) {
      throw ValidationError("malformed series term " + term.dump());
    }
    const int n = term["n"].get<int>();
    Element c = element_from_json(ring, term["c"]);
    auto [it, inserted] = coeffs.try_emplace(n, c);
    if (!inserted) throw ValidationError("exponent " + std::to_string(n) + " given twice");
  }
  return LaurentSeries(ring, coeffs, window);
}

ElementaryFactorList factors_from_json(const Ring& ring, const nlohmann::json& j) {
  if (!j.is_array()) throw ValidationError("factors must be a JSON array");
  ElementaryFactorList out;
  for (const auto& f : j) {
    if (!f.is_object() || !f.contains("kind") || !f["kind"].is_string()) {
      throw ValidationError("malformed factor " + f.dump());
    }
    const std::string kind = f["kind"].get<std::string>();
    if (kind == "antiholo" || kind == "antiholomorphic") {
      if (!f.contains("alpha")) throw ValidationError("antiholo factor needs \"alpha\"");
      out.emplace_back(Antiholomorphic{element_from_json(ring, f["alpha"])});
    } else if (kind == "holo" || kind == "holomorphic") {
      if (!f.contains("beta")) throw ValidationError("holo factor needs \"beta\"");
      out.emplace_back(Holomorphic{element_from_json(ring, f["beta"])});
    } else if (kind == "mono" || kind == "monomial") {
      if (f.contains("p") && !f["p"].is_number_integer()) throw ValidationError("mono factor \"p\" must be an integer");
      const int p = f.value("p", 0);
      const Element u = f.contains("u") ? element_from_json(ring, f["u"]) : ring.one();
      out.emplace_back(Monomial{p, u});
    } else {
      throw ValidationError("unknown factor kind \"" + kind + "\"");
    }
  }
  return out;
}

nlohmann::json factors_to_json(const Ring& ring, const ElementaryFactorList& factors) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& f : factors) {
    if (const auto* a = std::get_if<Antiholomorphic>(&f)) {
      out.push_back({{"kind", "antiholo"}, {"alpha", ring.format(a->alpha)}});
    } else if (const auto* m = std::get_if<Monomial>(&f)) {
      out.push_back({{"kind", "mono"}, {"p", m->power}, {"u", ring.format(m->unit)}});
    } else {
      out.push_back({{"kind", "holo"}, {"beta", ring.format(std::get<Holomorphic>(f).beta)}});
    }
  }
  return out;
}

}  // namespace whf
