// Reference computations for tests. Deliberately naive and independent of
// the library internals: dense fraction-field elimination, Lagrange
// interpolation, schoolbook Laurent products.
#ifndef WHF_TESTS_ORACLES_HPP
#define WHF_TESTS_ORACLES_HPP

#include <gmpxx.h>

#include <complex>
#include <functional>
#include <map>
#include <utility>
#include <vector>

#include "whf/poly.hpp"

namespace oracle {

using Q = mpq_class;
using Dense = std::map<int, Q>;

inline Q det(std::vector<Q> m, int n) {
  Q result = 1;
  for (int c = 0; c < n; ++c) {
    int pivot = -1;
    for (int r = c; r < n; ++r) {
      if (m[r * n + c] != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) return 0;
    if (pivot != c) {
      for (int k = 0; k < n; ++k) std::swap(m[c * n + k], m[pivot * n + k]);
      result = -result;
    }
    result *= m[c * n + c];
    for (int r = c + 1; r < n; ++r) {
      const Q f = m[r * n + c] / m[c * n + c];
      if (f == 0) continue;
      for (int k = c; k < n; ++k) m[r * n + k] -= f * m[c * n + k];
    }
  }
  return result;
}

inline Q power(const Q& x, int e) {
  Q r = 1;
  for (int k = 0; k < std::abs(e); ++k) r *= x;
  return e < 0 ? Q(1 / r) : r;
}

// Coefficients c_lo..c_hi of the Laurent polynomial f, from values at the
// points 1, 2, ..., hi - lo + 1.
inline Dense interpolate(const std::function<Q(const Q&)>& f, int lo, int hi) {
  const int n = hi - lo + 1;
  std::vector<Q> xs, ys;
  for (int k = 0; k < n; ++k) {
    xs.emplace_back(k + 1);
    ys.push_back(f(xs.back()) * power(xs.back(), -lo));
  }
  std::vector<Q> coeffs(n, Q(0));
  for (int i = 0; i < n; ++i) {
    // Basis polynomial prod_{j != i} (x - x_j) / (x_i - x_j).
    std::vector<Q> basis{Q(1)};
    Q denom = 1;
    for (int j = 0; j < n; ++j) {
      if (j == i) continue;
      std::vector<Q> next(basis.size() + 1, Q(0));
      for (std::size_t k = 0; k < basis.size(); ++k) {
        next[k + 1] += basis[k];
        next[k] -= basis[k] * xs[j];
      }
      basis = std::move(next);
      denom *= xs[i] - xs[j];
    }
    for (int k = 0; k < n; ++k) coeffs[k] += ys[i] * basis[k] / denom;
  }
  Dense out;
  for (int k = 0; k < n; ++k) {
    if (coeffs[k] != 0) out[k + lo] = coeffs[k];
  }
  return out;
}

inline Dense mul(const Dense& x, const Dense& y) {
  Dense out;
  for (const auto& [i, a] : x) {
    for (const auto& [j, b] : y) out[i + j] += a * b;
  }
  for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

// Evaluation of a t-free Poly over Q at a rational w.
inline Q eval(const whf::Poly& p, const Q& w) {
  Q s = 0;
  for (const auto& [e, c] : p.terms()) s += c.rational_parts()[0] * power(w, e.w);
  return s;
}

// w-coefficients of a t-free Poly over Q.
inline Dense coefficients(const whf::Poly& p) {
  Dense out;
  for (const auto& [e, c] : p.terms()) out[e.w] += c.rational_parts()[0];
  for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

}  // namespace oracle

#endif  // WHF_TESTS_ORACLES_HPP
