#include "whf/factorization.hpp"

#include <algorithm>
#include <cmath>

#include "whf/errors.hpp"

namespace whf {

namespace {

int symbol_reach(const LaurentSeries& a) {
  if (!a.is_complete()) throw WindowError("the symbol must be a complete Laurent polynomial");
  if (a.is_zero()) throw NotInvertible("the zero series is not invertible");
  return std::max({*a.max_degree(), -*a.min_degree(), 1});
}

int pair_reach(const InvertiblePair& pair) {
  const int d = symbol_reach(pair.a);
  const Ring& ring = pair.ring();
  if (ring.is_exact() ? pair.residual != 0.0 : !(pair.residual <= ring.tolerance())) {
    throw ValidationError("the supplied inverse does not invert the symbol (residual " + format_double(pair.residual) + ")");
  }
  return d;
}

// Entries below this seminorm are treated as round-off over floating rings.
double noise_threshold(const Ring& ring) { return ring.is_exact() ? 0.0 : ring.tolerance() * 1e-3; }

LaurentSeries clean(const LaurentSeries& x) {
  const double thr = noise_threshold(x.ring());
  return thr > 0.0 ? x.chopped(thr) : x;
}

// x / u for a divisor known to divide x, checked through the remainder.
LaurentSeries exact_quotient(const LaurentSeries& x, const LaurentSeries& u, const char* what) {
  const Ring& ring = x.ring();
  if (x.is_zero()) return LaurentSeries(ring);
  const Interval range{*x.min_degree() - *u.max_degree(), *x.max_degree() - *u.min_degree()};
  LaurentSeries q = series_div_unit(x, u, range);
  q = clean(LaurentSeries(ring, q.coefficients()));
  const double rem = (q * u).distance(x);
  const bool ok = ring.is_exact() ? rem == 0.0 : rem <= ring.tolerance();
  if (!ok) throw NumericalError(std::string(what) + ": division leaves a remainder of " + format_double(rem));
  return q;
}

void require_orthonormal(const LaurentSeries& x, double slack, const char* what) {
  const Ring& ring = x.ring();
  const double d = ring.seminorm(evaluate(x, ring.one()) - ring.one());
  bool ok = false;
  if (ring.is_exact() && slack == 0.0) {
    ok = d == 0.0 && is_orthogonal(x);
  } else {
    // Approximate data: products of distinct coefficients only need to be small.
    const double bound = std::max(ring.tolerance(), slack);
    ok = d <= bound;
    const auto& c = x.coefficients();
    for (auto i = c.begin(); ok && i != c.end(); ++i) {
      for (auto j = std::next(i); ok && j != c.end(); ++j) ok = ring.seminorm(i->second * j->second) <= bound;
    }
  }
  if (!ok) throw NumericalError(std::string(what) + " is not orthonormal: " + x.to_string());
}

}  // namespace

PiMatrices pi_matrices(const InvertiblePair& pair, FVariant variant) {
  if (variant == FVariant::R) throw ValidationError("pi matrices exist for the plus and minus variants only");
  const Ring& ring = pair.ring();
  const int d = pair_reach(pair);
  const int half = 3 * d + 8;
  const Interval window = Interval::symmetric(half);
  const bool plus = variant == FVariant::plus;
  const WindowedMatrix ua = build_U(pair.a, Lattice::integer, window);
  const WindowedMatrix ub = build_U(pair.b, Lattice::integer, window);
  const WindowedMatrix shift = build_U(LaurentSeries::monomial(ring, ring.one(), plus ? -1 : 1), Lattice::integer, window);
  const WindowedMatrix side = project(ring, plus ? SignSet::negative : SignSet::positive, Lattice::integer, window);
  const WindowedMatrix inner = mat_mul(side, mat_mul(ua, shift));
  const WindowedMatrix m =
      mat_sub(identity(ring, Lattice::integer, window), mat_scale(mat_mul(ub, inner), Poly::w(ring, plus ? 1 : -1)));
  WindowedMatrix f = build_F(ring, variant, ring.one(), window);
  WindowedMatrix a = mat_sub(m, f);
  return PiMatrices{m, std::move(f), std::move(a)};
}

namespace {

LaurentSeries pi_side(const InvertiblePair& pair, FVariant variant) {
  const Ring& ring = pair.ring();
  const PiMatrices mats = pi_matrices(pair, variant);
  const DetValue det = det_tilde_column_reduced(variant, mats.perturbation, noise_threshold(ring));
  LaurentSeries out = clean(LaurentSeries::from_poly(ring, det.value));
  const bool plus = variant == FVariant::plus;
  const bool one_sided = out.is_zero() || (plus ? *out.min_degree() >= 0 : *out.max_degree() <= 0);
  if (!one_sided || out.is_zero() || !ring.is_one(out.coefficient(0))) {
    throw NumericalError(std::string(plus ? "pi^+" : "pi^-") + " came out as " + out.to_string() +
                         "; the pair (a, b) is inconsistent");
  }
  return out;
}

}  // namespace

LaurentSeries pi_plus(const InvertiblePair& pair) { return pi_side(pair, FVariant::plus); }

LaurentSeries pi_minus(const InvertiblePair& pair) { return pi_side(pair, FVariant::minus); }

Poly pi_conjugated(const InvertiblePair& pair, FVariant variant, const std::optional<Element>& t) {
  const Ring& ring = pair.ring();
  const int d = pair_reach(pair);
  const Interval window = Interval::symmetric(4 * d + 8);
  const WindowedMatrix conj = conjugate_U(pair.a, variant, t, window);
  const WindowedMatrix ub = build_U(pair.b, Lattice::integer, window);
  const WindowedMatrix pert = mat_sub(mat_mul(conj, ub), identity(ring, Lattice::integer, window));
  Poly value = det_identity_plus(pert, noise_threshold(ring)).value;
  if (!ring.is_exact()) value = value.chopped(ring, noise_threshold(ring));
  return value;
}

LaurentSeries pi_tilde_derived(const InvertiblePair& pair, const LaurentSeries& pi_m, const LaurentSeries& pi_p) {
  const LaurentSeries q = exact_quotient(pair.a, pi_p, "a / pi^+");
  return exact_quotient(q, pi_m, "a / (pi^+ pi^-)");
}

WindowedMatrix pi_tilde_matrix(const InvertiblePair& pair, int h) {
  const Ring& ring = pair.ring();
  const int margin = pair_reach(pair) + 2;
  const Interval window{-h - margin, h - 1 + margin};
  std::vector<Poly> scale, unscale;
  for (int k = window.lo; k <= window.hi; ++k) {
    scale.push_back(k < 0 ? Poly::w(ring, 1) : Poly(ring.one()));
    unscale.push_back(k < 0 ? Poly::w(ring, -1) : Poly(ring.one()));
  }
  const WindowedMatrix ua = build_U(pair.a, Lattice::half_integer, window);
  const WindowedMatrix ub = build_U(pair.b, Lattice::half_integer, window);
  const WindowedMatrix dw = diagonal(ring, Lattice::half_integer, window, scale);
  const WindowedMatrix dw_inv = diagonal(ring, Lattice::half_integer, window, unscale);
  return mat_mul(ua, mat_mul(mat_mul(dw, ub), dw_inv));
}

TruncatedSeries pi_tilde_direct(const InvertiblePair& pair, const std::vector<int>& half_widths) {
  const Ring& ring = pair.ring();
  const Element one = ring.one();
  const LaurentSeries pp = pi_plus(pair);
  const LaurentSeries pm = pi_minus(pair);
  const Element at_one = evaluate(pp, one) * evaluate(pm, one);
  if (!ring.is_unit(at_one)) throw NotInvertible("pi^+(1) pi^-(1) is not a unit");
  const Element normalization = evaluate(pair.a, one) * ring.inverse(at_one);
  const DetValue det =
      det_truncated([&](int h) { return pi_tilde_matrix(pair, h); }, half_widths, ring.tolerance());
  LaurentSeries value = clean(LaurentSeries::from_poly(ring, det.value).scaled(normalization));
  return TruncatedSeries{value, det.tail * std::max(1.0, ring.seminorm(normalization))};
}

std::optional<int> winding_index(const LaurentSeries& pi_tilde) {
  const Ring& ring = pi_tilde.ring();
  std::optional<int> found;
  for (const auto& [n, c] : pi_tilde.coefficients()) {
    if (ring.is_zero(c)) continue;
    if (found || !ring.is_unit(c)) return std::nullopt;
    found = n;
  }
  return found;
}

FactorizationResult factorize(const InvertiblePair& pair, TildeRoute route) {
  const Ring& ring = pair.ring();
  pair_reach(pair);
  LaurentSeries pp = pi_plus(pair);
  LaurentSeries pm = pi_minus(pair);
  LaurentSeries pt = route == TildeRoute::derived ? pi_tilde_derived(pair, pm, pp) : pi_tilde_direct(pair).value;
  const double residual = (pm * pt * pp).distance(pair.a);
  const bool ok = ring.is_exact() ? residual == 0.0 : residual <= ring.tolerance();
  if (!ok) throw NumericalError("reconstruction residual " + format_double(residual) + " exceeds the tolerance");
  if (!is_strictly_holomorphic(pp) || !is_strictly_antiholomorphic(pm) || !is_orthogonal(pt)) {
    throw NumericalError("factors fall outside their subgroups");
  }
  std::optional<int> winding = winding_index(pt);
  return FactorizationResult{std::move(pm), std::move(pt), std::move(pp), residual, winding};
}

// ---------------------------------------------------------------------------
// Orthogonal series

void validate_idempotents(const Ring& ring, const std::map<int, Element>& idempotents) {
  Element sum = ring.zero();
  for (auto i = idempotents.begin(); i != idempotents.end(); ++i) {
    if (!ring.equals(i->second * i->second, i->second)) {
      throw ValidationError("Pi_" + std::to_string(i->first) + " = " + ring.format(i->second) + " is not idempotent");
    }
    for (auto j = std::next(i); j != idempotents.end(); ++j) {
      if (!ring.is_zero(i->second * j->second)) {
        throw ValidationError("Pi_" + std::to_string(i->first) + " and Pi_" + std::to_string(j->first) +
                              " are not orthogonal");
      }
    }
    sum += i->second;
  }
  if (!ring.is_one(sum)) throw ValidationError("the idempotents sum to " + ring.format(sum) + ", not 1");
}

OrthogonalDecomposition orthogonal_decompose(const InvertiblePair& pair) {
  const Ring& ring = pair.ring();
  const LaurentSeries& a = pair.a;
  if (!a.is_complete()) throw WindowError("orthogonal decomposition needs a complete symbol");
  if (!is_orthogonal(a)) throw ValidationError("symbol is not orthogonal: " + a.to_string());
  OrthogonalDecomposition d{ring, {}, evaluate(a, ring.one())};
  for (const auto& [n, c] : a.coefficients()) d.idempotents.emplace(n, c * pair.b.coefficient(-n));
  validate_idempotents(ring, d.idempotents);
  for (const auto& [n, c] : a.coefficients()) {
    for (const auto& [m, p] : d.idempotents) {
      if (!ring.equals(c * p, n == m ? c : ring.zero())) {
        throw ValidationError("subordination a_n Pi_m = delta_nm a_n fails at n = " + std::to_string(n) +
                              ", m = " + std::to_string(m));
      }
    }
  }
  for (const auto& [m, c] : pair.b.coefficients()) {
    for (const auto& [n, p] : d.idempotents) {
      if (!ring.equals(p * c, n == -m ? c : ring.zero())) {
        throw ValidationError("subordination Pi_{-m} b_m = b_m fails at m = " + std::to_string(m));
      }
    }
  }
  return d;
}

std::pair<Element, LaurentSeries> orthonormal_split(const OrthogonalDecomposition& d) {
  LaurentSeries::Coefficients coeffs(d.idempotents.begin(), d.idempotents.end());
  return {d.unit, LaurentSeries(d.ring, coeffs)};
}

OrthogonalDecomposition product_of_orthogonals(const OrthogonalDecomposition& d1, const OrthogonalDecomposition& d2) {
  if (!d1.ring.compatible(d2.ring)) throw RingMismatch("decompositions over different rings");
  const Ring& ring = d1.ring;
  OrthogonalDecomposition out{ring, {}, d1.unit * d2.unit};
  for (const auto& [m, p] : d1.idempotents) {
    for (const auto& [k, q] : d2.idempotents) {
      auto [it, inserted] = out.idempotents.try_emplace(m + k, p * q);
      if (!inserted) it->second += p * q;
    }
  }
  for (auto it = out.idempotents.begin(); it != out.idempotents.end();) {
    it = ring.is_zero(it->second) ? out.idempotents.erase(it) : std::next(it);
  }
  validate_idempotents(ring, out.idempotents);
  return out;
}

WindowedMatrix projection_from_orthonormal(const LaurentSeries& pi, const Interval& window) {
  const Ring& ring = pi.ring();
  if (!pi.is_complete()) throw WindowError("orthonormal series must be complete");
  std::vector<Poly> diag;
  for (int k = window.lo; k <= window.hi; ++k) {
    // Slot k is k + 1/2, which lies in S^- + n exactly when n > k.
    Element p = ring.zero();
    for (const auto& [n, c] : pi.coefficients()) {
      if (n > k) p += c;
    }
    diag.push_back(Poly(p));
  }
  return diagonal(ring, Lattice::half_integer, window, diag);
}

LaurentSeries n_p_series(const WindowedMatrix& p, DetValue* diagnostics, bool force_truncated) {
  if (p.lattice() != Lattice::half_integer) throw ValidationError("N_P is defined on the half-integer lattice");
  const Ring& ring = p.ring();
  const Interval& r = p.reliable();
  if (r.is_empty()) throw WindowError("projection has no reliable entries");

  // P^2 = P on the part of the window where the square is exact.
  {
    WindowedMatrix sq(ring, Lattice::half_integer, p.window());
    bool checked = false;
    if (p.band().bounded()) {
      sq = mat_mul(p, p);
      checked = reliable_equal(sq, p);
    } else {
      const int q = r.size() / 4;
      const Interval inner = shrink(r, q, q);
      checked = true;
      for (int i = inner.lo; i <= inner.hi && checked; ++i) {
        for (int j = inner.lo; j <= inner.hi && checked; ++j) {
          Poly s;
          for (int k = r.lo; k <= r.hi; ++k) s += p.at(i, k) * p.at(k, j);
          checked = s.equals(ring, p.at(i, j));
        }
      }
    }
    if (!checked) throw ValidationError("P is not idempotent on its window");
  }

  const Interval& w = p.window();
  WindowedMatrix m(ring, Lattice::half_integer, w);
  for (int i = w.lo; i <= w.hi; ++i) {
    for (int j = w.lo; j <= w.hi; ++j) {
      Poly e = p.at(i, j) * (Poly::w(ring, 1) - Poly(ring.one()));
      if (i == j) e += Poly(ring.one());
      if (j < 0) e = e.shift_w(-1);
      m.set(i, j, std::move(e));
    }
  }
  m.set_reliability(p.reliable(), p.diagonals());
  m.set_band(p.band());
  const WindowedMatrix pert = mat_sub(m, identity(ring, Lattice::half_integer, w));

  DetValue det;
  bool finite = !force_truncated;
  if (finite) {
    try {
      det = det_identity_plus(pert, noise_threshold(ring));
    } catch (const WindowError&) {
      finite = false;
    }
  }
  if (!finite) {
    const int h2 = std::min(-r.lo, r.hi + 1);
    const int h1 = std::max(1, (3 * h2) / 4);
    if (h2 < 2) throw WindowError("window too small for a truncated N_P");
    det = det_truncated([&](int) { return m; }, {h1, h2}, ring.tolerance());
  }
  LaurentSeries out = clean(LaurentSeries::from_poly(ring, det.value));
  if (!det.exact) out = out.chopped(std::max(det.tail, ring.tolerance()));
  require_orthonormal(out, det.exact ? 0.0 : std::max(det.tail, 1e-12), "N_P");
  if (diagnostics) *diagnostics = det;
  return out;
}

}  // namespace whf
