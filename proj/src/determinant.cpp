#include "whf/determinant.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "fft.hpp"
#include "whf/errors.hpp"

namespace whf {

namespace {

template <class T>
T berkowitz(const std::vector<T>& a, int n, const T& one) {
  if (n == 0) return one;
  const auto at = [&](int i, int j) -> const T& { return a[static_cast<std::size_t>(i) * n + j]; };
  std::vector<T> vect{one, -at(0, 0)};
  for (int r = 1; r < n; ++r) {
    // First column of the lower-triangular Toeplitz factor: 1, -a_rr, -R S,
    // -R M S, ..., -R M^{r-1} S for the leading block M, row R, column S.
    std::vector<T> c;
    c.reserve(static_cast<std::size_t>(r) + 2);
    c.push_back(one);
    c.push_back(-at(r, r));
    std::vector<T> v(static_cast<std::size_t>(r));
    for (int i = 0; i < r; ++i) v[i] = at(i, r);
    for (int k = 0; k < r; ++k) {
      T rv = one - one;
      for (int i = 0; i < r; ++i) rv += at(r, i) * v[i];
      c.push_back(-rv);
      if (k + 1 < r) {
        std::vector<T> next(static_cast<std::size_t>(r), one - one);
        for (int i = 0; i < r; ++i) {
          for (int j = 0; j < r; ++j) next[i] += at(i, j) * v[j];
        }
        v = std::move(next);
      }
    }
    std::vector<T> updated(static_cast<std::size_t>(r) + 2, one - one);
    for (int i = 0; i < r + 2; ++i) {
      for (int j = 0; j <= std::min(i, r); ++j) updated[i] += c[i - j] * vect[j];
    }
    vect = std::move(updated);
  }
  return n % 2 == 0 ? vect[n] : -vect[n];
}

Rational rational_det(std::vector<Rational> a, int n) {
  Rational det = 1;
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r) {
      if (sgn(a[r * n + col]) != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) return 0;
    if (pivot != col) {
      for (int j = 0; j < n; ++j) std::swap(a[col * n + j], a[pivot * n + j]);
      det = -det;
    }
    const Rational p = a[col * n + col];
    det *= p;
    for (int r = col + 1; r < n; ++r) {
      if (sgn(a[r * n + col]) == 0) continue;
      const Rational f = a[r * n + col] / p;
      for (int j = col + 1; j < n; ++j) a[r * n + j] -= f * a[col * n + j];
    }
  }
  return det;
}

Complex complex_det(std::vector<Complex> a, int n) {
  Complex det = 1.0;
  for (int col = 0; col < n; ++col) {
    int pivot = col;
    for (int r = col + 1; r < n; ++r) {
      if (std::abs(a[r * n + col]) > std::abs(a[pivot * n + col])) pivot = r;
    }
    if (a[pivot * n + col] == Complex(0.0)) return 0.0;
    if (pivot != col) {
      for (int j = 0; j < n; ++j) std::swap(a[col * n + j], a[pivot * n + j]);
      det = -det;
    }
    const Complex p = a[col * n + col];
    det *= p;
    for (int r = col + 1; r < n; ++r) {
      const Complex f = a[r * n + col] / p;
      if (f == Complex(0.0)) continue;
      for (int j = col + 1; j < n; ++j) a[r * n + j] -= f * a[col * n + j];
    }
  }
  return det;
}

bool is_triangular(const std::vector<Poly>& m, int n) {
  bool lower_zero = true, upper_zero = true;
  for (int i = 0; i < n && (lower_zero || upper_zero); ++i) {
    for (int j = 0; j < n; ++j) {
      if (m[static_cast<std::size_t>(i) * n + j].is_zero()) continue;
      if (i > j) lower_zero = false;
      if (i < j) upper_zero = false;
    }
  }
  return lower_zero || upper_zero;
}

// Coefficients (ascending) of the polynomial through (k+1, y_k), k = 0..D.
std::vector<Rational> newton_interpolate(std::vector<Rational> y) {
  const int count = static_cast<int>(y.size());
  for (int level = 1; level < count; ++level) {
    for (int k = count - 1; k >= level; --k) y[k] = (y[k] - y[k - 1]) / Rational(level);
  }
  std::vector<Rational> poly{y[count - 1]};
  for (int k = count - 2; k >= 0; --k) {
    // poly * (x - (k + 1)) + y[k]
    std::vector<Rational> next(poly.size() + 1, Rational(0));
    for (std::size_t i = 0; i < poly.size(); ++i) {
      next[i + 1] += poly[i];
      next[i] -= poly[i] * Rational(k + 1);
    }
    next[0] += y[k];
    poly = std::move(next);
  }
  return poly;
}

Poly det_by_interpolation(const Ring& ring, const std::vector<Poly>& m, int n) {
  std::vector<int> row_lo(n, 0), row_hi(n, 0), col_lo(n, 0), col_hi(n, 0);
  std::vector<bool> row_seen(n, false), col_seen(n, false);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const Poly& p = m[static_cast<std::size_t>(i) * n + j];
      if (p.is_zero()) continue;
      const int lo = p.min_w(), hi = p.max_w();
      row_lo[i] = row_seen[i] ? std::min(row_lo[i], lo) : lo;
      row_hi[i] = row_seen[i] ? std::max(row_hi[i], hi) : hi;
      col_lo[j] = col_seen[j] ? std::min(col_lo[j], lo) : lo;
      col_hi[j] = col_seen[j] ? std::max(col_hi[j], hi) : hi;
      row_seen[i] = col_seen[j] = true;
    }
  }
  for (int i = 0; i < n; ++i) {
    if (!row_seen[i] || !col_seen[i]) return Poly();
  }
  long lo_r = 0, hi_r = 0, lo_c = 0, hi_c = 0;
  for (int i = 0; i < n; ++i) {
    lo_r += row_lo[i];
    hi_r += row_hi[i];
    lo_c += col_lo[i];
    hi_c += col_hi[i];
  }
  const int lo = static_cast<int>(std::max(lo_r, lo_c));
  const int hi = static_cast<int>(std::min(hi_r, hi_c));
  if (lo > hi) return Poly();
  const int degree = hi - lo;
  const std::size_t arity = static_cast<std::size_t>(ring.arity());
  std::vector<std::vector<Element>> coeffs(static_cast<std::size_t>(degree) + 1);

  if (ring.is_exact()) {
    for (std::size_t c = 0; c < arity; ++c) {
      std::vector<Rational> values;
      for (int k = 0; k <= degree; ++k) {
        const Rational x(k + 1);
        std::vector<Rational> a(static_cast<std::size_t>(n) * n, Rational(0));
        for (std::size_t idx = 0; idx < a.size(); ++idx) {
          for (const auto& [e, v] : m[idx].terms()) {
            mpz_class num;
            mpz_pow_ui(num.get_mpz_t(), x.get_num_mpz_t(), static_cast<unsigned long>(std::abs(e.w)));
            const Rational p = e.w < 0 ? Rational(1) / Rational(num) : Rational(num);
            a[idx] += v.rational_parts()[c] * p;
          }
        }
        Rational d = rational_det(std::move(a), n);
        mpz_class s;
        mpz_pow_ui(s.get_mpz_t(), x.get_num_mpz_t(), static_cast<unsigned long>(std::abs(lo)));
        if (lo >= 0) {
          d /= Rational(s);
        } else {
          d *= Rational(s);
        }
        values.push_back(d);
      }
      const std::vector<Rational> poly = newton_interpolate(std::move(values));
      for (int k = 0; k <= degree; ++k) {
        auto& slot = coeffs[k];
        if (slot.empty()) slot.assign(arity, Element::rational(0));
        slot[c] = Element::rational(k < static_cast<int>(poly.size()) ? poly[k] : Rational(0));
      }
    }
  } else {
    std::size_t samples = 1;
    while (samples < static_cast<std::size_t>(degree) + 1) samples <<= 1;
    for (std::size_t c = 0; c < arity; ++c) {
      std::vector<Complex> values(samples);
      for (std::size_t k = 0; k < samples; ++k) {
        const Complex x = std::polar(1.0, 2.0 * M_PI * static_cast<double>(k) / static_cast<double>(samples));
        std::vector<Complex> a(static_cast<std::size_t>(n) * n, Complex(0.0));
        for (std::size_t idx = 0; idx < a.size(); ++idx) {
          for (const auto& [e, v] : m[idx].terms()) a[idx] += v.complex_parts()[c] * std::pow(x, e.w);
        }
        values[k] = complex_det(std::move(a), n) * std::pow(x, -lo);
      }
      detail::dft(values, false);
      double scale = 0.0;
      for (const auto& v : values) scale = std::max(scale, std::abs(v));
      for (int k = 0; k <= degree; ++k) {
        Complex v = values[static_cast<std::size_t>(k)] / static_cast<double>(samples);
        // Drop pure round-off relative to the largest coefficient.
        if (std::abs(v) * static_cast<double>(samples) <= 1e-14 * scale) v = 0.0;
        auto& slot = coeffs[k];
        if (slot.empty()) slot.assign(arity, Element::complex(0.0));
        slot[c] = Element::complex(v);
      }
    }
  }
  Poly out;
  for (int k = 0; k <= degree; ++k) out += Poly::monomial(ring.assemble(coeffs[k]), lo + k);
  return out;
}

struct Support {
  std::set<int> rows;
  std::set<int> cols;
};

Support nonzero_support(const WindowedMatrix& a, double threshold) {
  Support s;
  const Interval& r = a.reliable();
  for (int i = r.lo; i <= r.hi; ++i) {
    for (int j = r.lo; j <= r.hi; ++j) {
      if (!a.diagonals().contains(i - j)) continue;
      const Poly& p = a.at(i, j);
      if (p.is_zero() || (threshold > 0.0 && p.seminorm(a.ring()) <= threshold)) continue;
      s.rows.insert(i);
      s.cols.insert(j);
    }
  }
  return s;
}

bool strictly_inside(const std::set<int>& s, const Interval& r) {
  return s.empty() || (*s.begin() > r.lo && *s.rbegin() < r.hi);
}

void require_reliable_block(const WindowedMatrix& a, const std::vector<int>& rows, const std::vector<int>& cols,
                            const char* what) {
  for (int i : rows) {
    for (int j : cols) {
      if (!a.is_reliable(i, j)) {
        throw WindowError(std::string(what) + ": entry (" + std::to_string(i) + ", " + std::to_string(j) +
                          ") is outside the reliable window; enlarge the window of the inverse");
      }
    }
  }
}

Poly identity_plus_block_det(const Ring& ring, std::vector<Poly> m, int n) {
  for (int i = 0; i < n; ++i) m[static_cast<std::size_t>(i) * n + i] += Poly(ring.one());
  return det_poly(ring, m, n);
}

}  // namespace

Element det_finite(const Ring& ring, const std::vector<Element>& m, int n, int size_bound) {
  if (n > size_bound) throw ValidationError("matrix of size " + std::to_string(n) + " exceeds the determinant bound");
  if (static_cast<int>(m.size()) != n * n) throw ValidationError("matrix is not square");
  for (const auto& x : m) ring.require(x);
  return berkowitz(m, n, ring.one());
}

Poly det_finite(const Ring& ring, const std::vector<Poly>& m, int n, int size_bound) {
  if (n > size_bound) throw ValidationError("matrix of size " + std::to_string(n) + " exceeds the determinant bound");
  if (static_cast<int>(m.size()) != n * n) throw ValidationError("matrix is not square");
  return berkowitz(m, n, Poly(ring.one()));
}

Poly det_poly(const Ring& ring, const std::vector<Poly>& m, int n) {
  if (static_cast<int>(m.size()) != n * n) throw ValidationError("matrix is not square");
  if (n == 0) return Poly(ring.one());
  if (is_triangular(m, n)) {
    Poly d(ring.one());
    for (int i = 0; i < n; ++i) d *= m[static_cast<std::size_t>(i) * n + i];
    return d;
  }
  const bool symbolic_t = std::any_of(m.begin(), m.end(), [](const Poly& p) { return p.depends_on_t(); });
  if (symbolic_t || n <= 10) return det_finite(ring, m, n);
  return det_by_interpolation(ring, m, n);
}

std::vector<Poly> block(const WindowedMatrix& m, const std::vector<int>& rows, const std::vector<int>& cols) {
  std::vector<Poly> out;
  out.reserve(rows.size() * cols.size());
  for (int i : rows) {
    for (int j : cols) out.push_back(m.at(i, j));
  }
  return out;
}

DetValue det_identity_plus(const WindowedMatrix& a, double threshold) {
  const Support s = nonzero_support(a, threshold);
  const Interval& r = a.reliable();
  if (s.rows.empty()) return DetValue{Poly(a.ring().one())};
  const bool rows_ok = strictly_inside(s.rows, r);
  const bool cols_ok = strictly_inside(s.cols, r);
  if (!rows_ok && !cols_ok) throw WindowError("perturbation support touches the edge of the reliable window " + r.to_string());
  // With support in the rows (columns) K, 1 + A is block triangular and
  // only the K x K block contributes.
  const std::set<int>& k = (rows_ok && (!cols_ok || s.rows.size() <= s.cols.size())) ? s.rows : s.cols;
  const std::vector<int> idx(k.begin(), k.end());
  require_reliable_block(a, idx, idx, "det(1 + A)");
  const int n = static_cast<int>(idx.size());
  return DetValue{identity_plus_block_det(a.ring(), block(a, idx, idx), n)};
}

DetValue det_tilde_column_reduced(FVariant variant, const WindowedMatrix& a, double threshold) {
  if (variant == FVariant::R) throw ValidationError("column reduction needs F^{R+} or F^{R-}");
  const Ring& ring = a.ring();
  const Support s = nonzero_support(a, threshold);
  if (s.cols.empty()) return DetValue{Poly(ring.one())};
  const Interval& r = a.reliable();
  if (!strictly_inside(s.cols, r)) {
    throw WindowError("perturbation columns touch the edge of the reliable window " + r.to_string());
  }
  const std::vector<int> jp(s.cols.begin(), s.cols.end());

  // Columns of C = A F^{-1}: F^{-1} is the identity on one side of 0 and a
  // unitriangular run of w-powers on the other, so C is supported on J''.
  std::set<int> jpp;
  if (variant == FVariant::plus) {
    for (int m : jp) {
      if (m > 0) jpp.insert(m);
    }
    for (int m = jp.front(); m <= 0; ++m) jpp.insert(m);
  } else {
    for (int m : jp) {
      if (m < 0) jpp.insert(m);
    }
    for (int m = 0; m <= jp.back(); ++m) jpp.insert(m);
  }
  const std::vector<int> idx(jpp.begin(), jpp.end());
  const int n = static_cast<int>(idx.size());
  std::vector<Poly> c(static_cast<std::size_t>(n) * n);
  for (int row = 0; row < n; ++row) {
    for (int col = 0; col < n; ++col) {
      Poly sum;
      for (int k : jp) {
        const Poly f = F_inverse_entry(ring, variant, k, idx[col]);
        if (f.is_zero()) continue;
        if (!a.is_reliable(idx[row], k)) {
          throw WindowError("column reduction: entry (" + std::to_string(idx[row]) + ", " + std::to_string(k) +
                            ") is outside the reliable window; enlarge the window of the inverse");
        }
        const Poly& x = a.at(idx[row], k);
        if (!x.is_zero()) sum += x * f;
      }
      c[static_cast<std::size_t>(row) * n + col] = std::move(sum);
    }
  }
  return DetValue{identity_plus_block_det(ring, std::move(c), n)};
}

DetValue det_truncated(const std::function<WindowedMatrix(int)>& build, const std::vector<int>& half_widths,
                       double tolerance) {
  if (half_widths.empty()) throw ValidationError("det_truncated needs at least one window");
  std::vector<Poly> values;
  std::vector<double> tails;
  Ring ring = Ring::rational();
  int last_size = 0;
  for (int h : half_widths) {
    const WindowedMatrix m = build(h);
    ring = m.ring();
    const Interval section = m.lattice() == Lattice::integer ? Interval{-h, h} : Interval{-h, h - 1};
    std::vector<int> idx;
    for (int k = section.lo; k <= section.hi; ++k) idx.push_back(k);
    require_reliable_block(m, idx, idx, "truncated determinant");
    const int n = static_cast<int>(idx.size());
    values.push_back(det_poly(ring, block(m, idx, idx), n));
    last_size = n;
    if (values.size() >= 2) tails.push_back((values.back() - values[values.size() - 2]).seminorm(ring));
  }
  for (std::size_t k = 1; k < tails.size(); ++k) {
    if (tails[k] > tolerance && tails[k] >= tails[k - 1]) {
      throw NumericalError("truncated determinant is not converging: tail " + format_double(tails[k]) + " after " +
                           format_double(tails[k - 1]));
    }
  }
  DetValue out{values.back(), false, tails.empty() ? 0.0 : tails.back(), last_size};
  return out;
}

}  // namespace whf
