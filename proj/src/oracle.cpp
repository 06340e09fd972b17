#include "whf/oracle.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <numbers>

#include "fft.hpp"
#include "whf/errors.hpp"

namespace whf {

namespace {

void require_scalar_complex(const LaurentSeries& a) {
  const Ring& ring = a.ring();
  if (ring.is_exact() || ring.arity() != 1) throw ValidationError("classical oracles work over C only, not " + ring.name());
  if (!a.is_complete() || a.is_zero()) throw ValidationError("classical oracles need a nonzero Laurent polynomial");
}

// exp(f) for f with f_0 = 0, as a power series in x up to degree n.
std::vector<Complex> series_exp(const std::vector<Complex>& f, int n) {
  std::vector<Complex> e(static_cast<std::size_t>(n) + 1, Complex(0.0));
  e[0] = 1.0;
  for (int k = 1; k <= n; ++k) {
    Complex s = 0.0;
    for (int j = 1; j <= k && j < static_cast<int>(f.size()); ++j) s += static_cast<double>(j) * f[j] * e[k - j];
    e[k] = s / static_cast<double>(k);
  }
  return e;
}

LaurentSeries from_dense(const Ring& ring, const std::vector<Complex>& c, int sign) {
  double scale = 0.0;
  for (const Complex& v : c) scale = std::max(scale, std::abs(v));
  LaurentSeries::Coefficients out;
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (std::abs(c[k]) > 1e-14 * scale) out.emplace(sign * static_cast<int>(k), Element::complex(c[k]));
  }
  return LaurentSeries(ring, out);
}

double reconstruction(const FactorizationResult& r, const LaurentSeries& a) {
  return (r.pi_minus * r.pi_tilde * r.pi_plus).distance(a);
}

Complex horner(const std::vector<Complex>& p, Complex z) {
  Complex v = 0.0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) v = v * z + *it;
  return v;
}

}  // namespace

FactorizationResult cepstral_factorize(const LaurentSeries& a, int samples) {
  require_scalar_complex(a);
  if (samples < 8 || (samples & (samples - 1)) != 0) throw ValidationError("sample count must be a power of two >= 8");
  const Ring& ring = a.ring();
  std::vector<std::pair<int, Complex>> coeffs;
  for (const auto& [n, c] : a.coefficients()) coeffs.emplace_back(n, c.complex_parts()[0]);
  std::vector<Complex> s = detail::sample_on_circle(coeffs, samples);

  double floor_abs = ring.tolerance();
  for (const Complex& v : s) {
    if (std::abs(v) <= floor_abs) throw NotInvertible("symbol vanishes on the unit circle");
  }
  // Unwrapped argument along the circle.
  std::vector<double> arg(s.size());
  arg[0] = std::arg(s[0]);
  for (std::size_t k = 1; k < s.size(); ++k) arg[k] = arg[k - 1] + std::arg(s[k] / s[k - 1]);
  const double total = arg.back() + std::arg(s[0] / s.back()) - arg[0];
  const double turns = total / (2.0 * std::numbers::pi);
  const int p = static_cast<int>(std::lround(turns));
  if (std::abs(turns - p) > 1e-6) throw NumericalError("winding estimate " + format_double(turns) + " is not an integer");

  std::vector<Complex> logs(s.size());
  for (std::size_t k = 0; k < s.size(); ++k) {
    const double theta = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(samples);
    logs[k] = Complex(std::log(std::abs(s[k])), arg[k] - p * theta);
  }
  const auto cep = detail::coefficients_from_samples(std::move(logs));
  const int half = samples / 2 - 1;
  std::vector<Complex> plus(static_cast<std::size_t>(half) + 1, 0.0), minus(plus.size(), 0.0);
  Complex c0 = 0.0;
  for (const auto& [n, c] : cep) {
    if (n == 0) c0 = c;
    if (n > 0 && n <= half) plus[n] = c;
    if (n < 0 && -n <= half) minus[-n] = c;
  }
  FactorizationResult r{from_dense(ring, series_exp(minus, half), -1),
                        LaurentSeries::monomial(ring, Element::complex(std::exp(c0)), p),
                        from_dense(ring, series_exp(plus, half), 1), 0.0, p};
  r.residual = reconstruction(r, a);
  return r;
}

FactorizationResult root_split_factorize(const LaurentSeries& a) {
  require_scalar_complex(a);
  const Ring& ring = a.ring();
  const int lo = *a.min_degree();
  const int degree = *a.max_degree() - lo;
  std::vector<Complex> q(static_cast<std::size_t>(degree) + 1, 0.0);
  for (const auto& [n, c] : a.coefficients()) q[n - lo] = c.complex_parts()[0];
  const Complex lead = q.back();

  std::vector<Complex> roots;
  if (degree > 0) {
    Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(degree, degree);
    for (int i = 1; i < degree; ++i) companion(i, i - 1) = 1.0;
    for (int i = 0; i < degree; ++i) companion(i, degree - 1) = -q[i] / lead;
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(companion, false);
    if (solver.info() != Eigen::Success) throw NumericalError("companion eigenvalues did not converge");
    std::vector<Complex> dq(static_cast<std::size_t>(degree));
    for (int i = 1; i <= degree; ++i) dq[i - 1] = static_cast<double>(i) * q[i];
    for (int i = 0; i < degree; ++i) {
      Complex r = solver.eigenvalues()(i);
      for (int it = 0; it < 4; ++it) {
        const Complex d = horner(dq, r);
        if (std::abs(d) == 0.0) break;
        r -= horner(q, r) / d;
      }
      roots.push_back(r);
    }
  }

  LaurentSeries pm = LaurentSeries::one(ring), pp = LaurentSeries::one(ring);
  Complex unit = lead;
  int inside = 0;
  for (const Complex& r : roots) {
    if (std::abs(std::abs(r) - 1.0) <= 1e-6) throw NotInvertible("root " + format_double(std::abs(r)) + " on the unit circle");
    if (std::abs(r) < 1.0) {
      pm = pm * LaurentSeries(ring, {{0, ring.one()}, {-1, Element::complex(-r)}});
      ++inside;
    } else {
      pp = pp * LaurentSeries(ring, {{0, ring.one()}, {1, Element::complex(-1.0 / r)}});
      unit *= -r;
    }
  }
  FactorizationResult out{pm, LaurentSeries::monomial(ring, Element::complex(unit), lo + inside), pp, 0.0, lo + inside};
  out.residual = reconstruction(out, a);
  return out;
}

double ComparisonReport::max_difference() const { return std::max({pi_minus, pi_tilde, pi_plus}); }

ComparisonReport compare(const FactorizationResult& lhs, const FactorizationResult& rhs) {
  return ComparisonReport{lhs.pi_minus.distance(rhs.pi_minus), lhs.pi_tilde.distance(rhs.pi_tilde),
                          lhs.pi_plus.distance(rhs.pi_plus), lhs.winding == rhs.winding};
}

}  // namespace whf
