#include "whf/toeplitz.hpp"

#include <algorithm>
#include <sstream>

#include "whf/errors.hpp"

namespace whf {

namespace {

void require_same_shape(const WindowedMatrix& x, const WindowedMatrix& y) {
  if (!x.ring().compatible(y.ring())) throw RingMismatch("matrices over " + x.ring().name() + " and " + y.ring().name());
  if (x.lattice() != y.lattice()) throw ValidationError("matrices live on different lattices");
}

std::optional<int> opt_add(const std::optional<int>& a, const std::optional<int>& b) {
  if (a && b) return *a + *b;
  return std::nullopt;
}

std::optional<int> opt_max(const std::optional<int>& a, const std::optional<int>& b) {
  if (a && b) return std::max(*a, *b);
  return std::nullopt;
}

// Number of indices covered, saturated for unbounded intervals.
long long extent(const Interval& x) {
  if (x.is_empty()) return 0;
  return static_cast<long long>(x.hi) - x.lo + 1;
}

bool on_lattice_side(Lattice lattice, SignSet set, int k) {
  switch (set) {
    case SignSet::negative:
      return k < 0;
    case SignSet::positive:
      return lattice == Lattice::integer ? k > 0 : k >= 0;
    case SignSet::nonnegative:
      return k >= 0;
    case SignSet::nonpositive:
      return k <= 0;
    case SignSet::zero:
      return k == 0;
    case SignSet::all:
      return true;
  }
  return false;
}

Poly tw(const Ring& ring, int t_power, int w_power) { return Poly::monomial(ring.one(), w_power, t_power); }

Poly one_minus_t2(const Ring& ring) { return Poly(ring.one()) - tw(ring, 2, 0); }

// U^R(z^n, t, w) for n > 0: rows 0..n against columns -n..0, the plain shift
// elsewhere.
Poly ur_positive(const Ring& ring, int n, int i, int j) {
  if (i < 0 || i > n) return j == i - n ? Poly(ring.one()) : Poly();
  if (j < -n || j > 0) return Poly();
  const int col = j + n;
  if (i == 0) return tw(ring, col, col);
  if (col == i - 1) return -tw(ring, 1, -1);
  if (col == i) return one_minus_t2(ring);
  if (col > i) return tw(ring, col - i, col - i) * one_minus_t2(ring);
  return Poly();
}

// U^+(z^n, t, w).
Poly uplus(const Ring& ring, int n, int i, int j) {
  if (n >= 0) {
    if (i < 0 || i > n) return j == i - n ? Poly(ring.one()) : Poly();
    const int k = j - i + n;
    if (k < 0 || k > n - i) return Poly();
    return tw(ring, k, k);
  }
  const int m = -n;
  if (j == i + m) return Poly(ring.one());
  if (i >= -m && i <= -1 && j == i + m + 1) return -tw(ring, 1, 1);
  return Poly();
}

}  // namespace

// ---------------------------------------------------------------------------
// WindowedMatrix

WindowedMatrix::WindowedMatrix(Ring ring, Lattice lattice, Interval window)
    : ring_(std::move(ring)),
      lattice_(lattice),
      window_(window),
      reliable_(window),
      diagonals_(Interval::all()),
      band_(Band::diagonal()) {
  if (!window_.bounded()) throw ValidationError("matrix window must be finite, got " + window_.to_string());
  if (window_.is_empty()) throw ValidationError("matrix window is empty");
  entries_.resize(static_cast<std::size_t>(size()) * static_cast<std::size_t>(size()));
}

std::size_t WindowedMatrix::offset(int i, int j) const {
  if (!window_.contains(i) || !window_.contains(j)) {
    throw WindowError("entry (" + std::to_string(i) + ", " + std::to_string(j) + ") outside window " +
                      window_.to_string());
  }
  return static_cast<std::size_t>(i - window_.lo) * static_cast<std::size_t>(size()) +
         static_cast<std::size_t>(j - window_.lo);
}

const Poly& WindowedMatrix::at(int i, int j) const { return entries_[offset(i, j)]; }

void WindowedMatrix::set(int i, int j, Poly value) { entries_[offset(i, j)] = std::move(value); }

void WindowedMatrix::set_reliability(Interval square, Interval diagonals) {
  reliable_ = intersect(square, window_);
  if (reliable_.is_empty()) reliable_ = Interval::empty();
  diagonals_ = diagonals.is_empty() ? Interval::empty() : diagonals;
}

bool WindowedMatrix::depends_on_t() const {
  return std::any_of(entries_.begin(), entries_.end(), [](const Poly& p) { return p.depends_on_t(); });
}

WindowedMatrix WindowedMatrix::substitute_t(const Element& value) const {
  WindowedMatrix out = *this;
  for (auto& p : out.entries_) p = p.substitute_t(ring_, value);
  return out;
}

WindowedMatrix WindowedMatrix::section(const Interval& window) const {
  if (!window_.contains(window)) {
    throw WindowError("section " + window.to_string() + " exceeds window " + window_.to_string());
  }
  WindowedMatrix out(ring_, lattice_, window);
  for (int i = window.lo; i <= window.hi; ++i) {
    for (int j = window.lo; j <= window.hi; ++j) out.set(i, j, at(i, j));
  }
  out.set_reliability(reliable_, diagonals_);
  out.band_ = band_;
  return out;
}

std::string WindowedMatrix::dump() const {
  const int n = size();
  std::vector<std::string> cells(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  std::vector<std::size_t> width(static_cast<std::size_t>(n), 1);
  for (int i = window_.lo; i <= window_.hi; ++i) {
    for (int j = window_.lo; j <= window_.hi; ++j) {
      std::string s = is_reliable(i, j) ? at(i, j).to_string(ring_) : "?";
      if (s == "0") s = ".";
      const auto c = static_cast<std::size_t>(j - window_.lo);
      width[c] = std::max(width[c], s.size());
      cells[static_cast<std::size_t>(i - window_.lo) * static_cast<std::size_t>(n) + c] = std::move(s);
    }
  }
  // Rules sit before index 0 and, on the integer lattice, after it as well.
  const auto rule_before = [&](int k) { return k == 0 || (lattice_ == Lattice::integer && k == 1); };
  std::ostringstream row_rule;
  for (int j = window_.lo; j <= window_.hi; ++j) {
    if (j > window_.lo && rule_before(j)) row_rule << "-+";
    row_rule << std::string(width[static_cast<std::size_t>(j - window_.lo)] + (j > window_.lo ? 1 : 0), '-');
  }
  std::ostringstream out;
  out << "# " << (lattice_ == Lattice::integer ? "Z" : "Z+1/2") << " indices " << window_.to_string();
  if (lattice_ == Lattice::half_integer) out << " (slot k is k+1/2)";
  out << "\n";
  for (int i = window_.lo; i <= window_.hi; ++i) {
    if (i > window_.lo && rule_before(i)) out << row_rule.str() << "\n";
    for (int j = window_.lo; j <= window_.hi; ++j) {
      if (j > window_.lo) out << (rule_before(j) ? " | " : " ");
      const std::string& s = cells[static_cast<std::size_t>(i - window_.lo) * static_cast<std::size_t>(n) +
                                   static_cast<std::size_t>(j - window_.lo)];
      out << std::string(width[static_cast<std::size_t>(j - window_.lo)] - s.size(), ' ') << s;
    }
    out << "\n";
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// Builders

WindowedMatrix identity(const Ring& ring, Lattice lattice, const Interval& window) {
  return project(ring, SignSet::all, lattice, window);
}

WindowedMatrix project(const Ring& ring, SignSet set, Lattice lattice, const Interval& window, int shift) {
  if (lattice == Lattice::half_integer &&
      (set == SignSet::zero || set == SignSet::nonnegative || set == SignSet::nonpositive)) {
    throw ValidationError("the half-integer lattice has no zero index");
  }
  WindowedMatrix m(ring, lattice, window);
  for (int k = window.lo; k <= window.hi; ++k) {
    if (on_lattice_side(lattice, set, k - shift)) m.set(k, k, Poly(ring.one()));
  }
  return m;
}

WindowedMatrix diagonal(const Ring& ring, Lattice lattice, const Interval& window, const std::vector<Poly>& values) {
  WindowedMatrix m(ring, lattice, window);
  if (static_cast<int>(values.size()) != m.size()) throw ValidationError("diagonal length does not match the window");
  for (int k = window.lo; k <= window.hi; ++k) m.set(k, k, values[static_cast<std::size_t>(k - window.lo)]);
  return m;
}

WindowedMatrix build_U(const LaurentSeries& a, Lattice lattice, const Interval& window) {
  const Ring& ring = a.ring();
  WindowedMatrix m(ring, lattice, window);
  for (const auto& [n, c] : a.coefficients()) {
    for (int i = std::max(window.lo, window.lo + n); i <= std::min(window.hi, window.hi + n); ++i) {
      m.set(i, i - n, Poly(c));
    }
  }
  m.set_reliability(window, a.window());
  Band band;
  if (!a.window().upper_bounded()) {
    band.lower = a.max_degree() ? *a.max_degree() : (a.is_complete() ? 0 : a.window().lo - 1);
  }
  if (!a.window().lower_bounded()) {
    band.upper = a.min_degree() ? -*a.min_degree() : (a.is_complete() ? 0 : -(a.window().hi + 1));
  }
  m.set_band(band);
  return m;
}

WindowedMatrix build_F(const Ring& ring, FVariant variant, const std::optional<Element>& t, const Interval& window) {
  WindowedMatrix m(ring, Lattice::integer, window);
  const Poly tt = t ? Poly(*t) : Poly::t(ring);
  const bool plus = variant != FVariant::minus;
  const bool minus = variant != FVariant::plus;
  for (int i = window.lo; i <= window.hi; ++i) {
    m.set(i, i, Poly(ring.one()));
    if (plus && i < 0 && i + 1 <= window.hi) m.set(i, i + 1, -(tt * Poly::w(ring, 1)));
    if (minus && i > 0 && i - 1 >= window.lo) m.set(i, i - 1, -(tt * Poly::w(ring, -1)));
  }
  m.set_band(Band{minus ? 1 : 0, plus ? 1 : 0});
  return m;
}

Poly F_inverse_entry(const Ring& ring, FVariant variant, int n, int m) {
  if (variant == FVariant::plus) {
    if (n == m || (n <= m && m <= 0)) return Poly::w(ring, m - n);
    return Poly();
  }
  if (variant == FVariant::minus) {
    if (n == m || (0 <= m && m <= n)) return Poly::w(ring, -(n - m));
    return Poly();
  }
  throw ValidationError("only F^{R+} and F^{R-} have a column-finite inverse at t = 1");
}

WindowedMatrix build_Utilde(const LaurentSeries& a, const std::optional<Element>& w, const Interval& window) {
  const Ring& ring = a.ring();
  if (!a.is_complete()) throw WindowError("U~ needs a complete symbol");
  Poly up, down;
  if (w) {
    up = Poly(-*w);
    down = Poly(-ring.inverse(*w));
  } else {
    up = -Poly::w(ring, 1);
    down = -Poly::w(ring, -1);
  }
  WindowedMatrix m(ring, Lattice::integer, window);
  for (int i = window.lo; i <= window.hi; ++i) {
    for (int j = window.lo; j <= window.hi; ++j) {
      if (i == 0 || j == 0) {
        if (i == j) m.set(i, j, Poly(ring.one()));
        continue;
      }
      if ((i < 0) == (j < 0)) {
        m.set(i, j, Poly(a.coefficient(i - j)));
      } else if (i < 0) {
        m.set(i, j, up * a.coefficient(i - j + 1));
      } else {
        m.set(i, j, down * a.coefficient(i - j - 1));
      }
    }
  }
  const int hi = a.max_degree().value_or(0);
  const int lo = a.min_degree().value_or(0);
  m.set_band(Band{std::max(0, hi + 1), std::max(0, -lo + 1)});
  return m;
}

Poly conjugated_monomial_entry(const Ring& ring, FVariant variant, int n, int i, int j) {
  if (n == 0) return i == j ? Poly(ring.one()) : Poly();
  switch (variant) {
    case FVariant::R:
      if (n > 0) return ur_positive(ring, n, i, j);
      // U^R(z^-n) is U^R(z^n) flipped through the center with w -> 1/w.
      return ur_positive(ring, -n, -i, -j).reflect_w();
    case FVariant::plus:
      return uplus(ring, n, i, j);
    case FVariant::minus:
      return uplus(ring, -n, -i, -j).reflect_w();
  }
  return Poly();
}

WindowedMatrix conjugate_U(const LaurentSeries& a, FVariant variant, const std::optional<Element>& t,
                           const Interval& window) {
  const Ring& ring = a.ring();
  if (!a.is_complete()) throw WindowError("conjugated matrices need a complete symbol");
  WindowedMatrix m(ring, Lattice::integer, window);
  for (int i = window.lo; i <= window.hi; ++i) {
    for (int j = window.lo; j <= window.hi; ++j) {
      Poly entry;
      for (const auto& [n, c] : a.coefficients()) {
        const Poly e = conjugated_monomial_entry(ring, variant, n, i, j);
        if (!e.is_zero()) entry += e * c;
      }
      if (t) entry = entry.substitute_t(ring, *t);
      m.set(i, j, std::move(entry));
    }
  }
  const int hi = a.max_degree().value_or(0);
  const int lo = a.min_degree().value_or(0);
  m.set_band(Band{2 * std::max(0, hi), 2 * std::max(0, -lo)});
  return m;
}

// ---------------------------------------------------------------------------
// Algebra

WindowedMatrix mat_add(const WindowedMatrix& x, const WindowedMatrix& y) {
  require_same_shape(x, y);
  const Interval window = intersect(x.window(), y.window());
  WindowedMatrix out(x.ring(), x.lattice(), window);
  for (int i = window.lo; i <= window.hi; ++i) {
    for (int j = window.lo; j <= window.hi; ++j) out.set(i, j, x.at(i, j) + y.at(i, j));
  }
  out.set_reliability(intersect(x.reliable(), y.reliable()), intersect(x.diagonals(), y.diagonals()));
  out.set_band(Band{opt_max(x.band().lower, y.band().lower), opt_max(x.band().upper, y.band().upper)});
  return out;
}

WindowedMatrix mat_sub(const WindowedMatrix& x, const WindowedMatrix& y) { return mat_add(x, mat_scale(y, Poly(-x.ring().one()))); }

WindowedMatrix mat_scale(const WindowedMatrix& x, const Poly& c) {
  WindowedMatrix out = x;
  const Interval& w = x.window();
  for (int i = w.lo; i <= w.hi; ++i) {
    for (int j = w.lo; j <= w.hi; ++j) {
      if (!x.at(i, j).is_zero()) out.set(i, j, x.at(i, j) * c);
    }
  }
  return out;
}

WindowedMatrix mat_mul(const WindowedMatrix& x, const WindowedMatrix& y) {
  require_same_shape(x, y);
  const Interval window = intersect(x.window(), y.window());
  if (window.is_empty()) throw WindowError("matrix windows do not overlap");
  WindowedMatrix out(x.ring(), x.lattice(), window);

  std::vector<std::vector<int>> y_rows(static_cast<std::size_t>(window.size()));
  for (int k = window.lo; k <= window.hi; ++k) {
    for (int j = window.lo; j <= window.hi; ++j) {
      if (!y.at(k, j).is_zero()) y_rows[static_cast<std::size_t>(k - window.lo)].push_back(j);
    }
  }
  for (int i = window.lo; i <= window.hi; ++i) {
    std::vector<Poly> row(static_cast<std::size_t>(window.size()));
    for (int k = window.lo; k <= window.hi; ++k) {
      const Poly& xik = x.at(i, k);
      if (xik.is_zero()) continue;
      for (int j : y_rows[static_cast<std::size_t>(k - window.lo)]) row[static_cast<std::size_t>(j - window.lo)] += xik * y.at(k, j);
    }
    for (int j = window.lo; j <= window.hi; ++j) out.set(i, j, std::move(row[static_cast<std::size_t>(j - window.lo)]));
  }

  // The sum over k is complete when every k that can contribute lies in the
  // common reliable square, which one banded factor guarantees.
  const Interval r = intersect(intersect(x.reliable(), y.reliable()), window);
  struct Option {
    Interval square;
    Interval diagonals;
  };
  std::vector<Option> options;
  const Band& bx = x.band();
  const Band& by = y.band();
  if (bx.bounded() && x.diagonals().contains(Interval{-*bx.upper, *bx.lower})) {
    options.push_back({shrink(r, std::max(0, *bx.lower), std::max(0, *bx.upper)),
                       Interval{bound_add(y.diagonals().lo, *bx.lower), bound_add(y.diagonals().hi, -*bx.upper)}});
  }
  if (by.bounded() && y.diagonals().contains(Interval{-*by.upper, *by.lower})) {
    options.push_back({shrink(r, std::max(0, *by.upper), std::max(0, *by.lower)),
                       Interval{bound_add(x.diagonals().lo, *by.lower), bound_add(x.diagonals().hi, -*by.upper)}});
  }
  if (options.empty()) throw WindowError("product of two matrices without a usable band");
  const auto better = [](const Option& a, const Option& b) {
    if (extent(a.square) != extent(b.square)) return extent(a.square) > extent(b.square);
    return extent(a.diagonals) > extent(b.diagonals);
  };
  std::sort(options.begin(), options.end(), better);
  out.set_reliability(options.front().square, options.front().diagonals);
  out.set_band(Band{opt_add(bx.lower, by.lower), opt_add(bx.upper, by.upper)});
  return out;
}

WindowedMatrix commutator(const WindowedMatrix& x, const WindowedMatrix& y) { return mat_sub(mat_mul(x, y), mat_mul(y, x)); }

namespace {

std::set<int> perturbation_support(const WindowedMatrix& m, const WindowedMatrix& reference, double threshold,
                                   bool columns) {
  require_same_shape(m, reference);
  const Ring& ring = m.ring();
  const Interval r = intersect(m.reliable(), reference.reliable());
  const Interval d = intersect(m.diagonals(), reference.diagonals());
  if (r.is_empty()) throw WindowError("no reliable entries to compare");
  std::set<int> out;
  for (int i = r.lo; i <= r.hi; ++i) {
    for (int j = r.lo; j <= r.hi; ++j) {
      if (!d.contains(i - j)) continue;
      const Poly diff = m.at(i, j) - reference.at(i, j);
      if (diff.is_zero() || (threshold > 0.0 && diff.seminorm(ring) <= threshold)) continue;
      out.insert(columns ? j : i);
    }
  }
  if (!out.empty() && (*out.begin() <= r.lo || *out.rbegin() >= r.hi)) {
    throw WindowError(std::string("perturbation ") + (columns ? "columns" : "rows") + " reach the edge of the reliable window " +
                      r.to_string());
  }
  return out;
}

}  // namespace

std::set<int> perturbation_columns(const WindowedMatrix& m, const WindowedMatrix& reference, double threshold) {
  return perturbation_support(m, reference, threshold, true);
}

std::set<int> perturbation_rows(const WindowedMatrix& m, const WindowedMatrix& reference, double threshold) {
  return perturbation_support(m, reference, threshold, false);
}

bool reliable_equal(const WindowedMatrix& x, const WindowedMatrix& y) {
  require_same_shape(x, y);
  const Interval r = intersect(x.reliable(), y.reliable());
  const Interval d = intersect(x.diagonals(), y.diagonals());
  for (int i = r.lo; i <= r.hi; ++i) {
    for (int j = r.lo; j <= r.hi; ++j) {
      if (d.contains(i - j) && !x.at(i, j).equals(x.ring(), y.at(i, j))) return false;
    }
  }
  return true;
}

}  // namespace whf
