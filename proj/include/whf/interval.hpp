#ifndef WHF_INTERVAL_HPP
#define WHF_INTERVAL_HPP

#include <algorithm>
#include <climits>
#include <string>

namespace whf {

// Closed integer interval [lo, hi] whose ends may be unbounded. Unbounded
// ends are sentinels far from any index the library touches, and all
// arithmetic on them saturates.
struct Interval {
  static constexpr int kNegInf = INT_MIN / 4;
  static constexpr int kPosInf = INT_MAX / 4;

  int lo = 0;
  int hi = -1;

  static constexpr Interval all() { return {kNegInf, kPosInf}; }
  static constexpr Interval empty() { return {0, -1}; }
  static constexpr Interval symmetric(int half_width) { return {-half_width, half_width}; }

  constexpr bool is_empty() const { return lo > hi; }
  constexpr bool lower_bounded() const { return lo > kNegInf; }
  constexpr bool upper_bounded() const { return hi < kPosInf; }
  constexpr bool bounded() const { return lower_bounded() && upper_bounded(); }
  constexpr bool contains(int n) const { return lo <= n && n <= hi; }
  constexpr bool contains(const Interval& other) const {
    return other.is_empty() || (lo <= other.lo && other.hi <= hi);
  }
  constexpr int size() const { return is_empty() ? 0 : hi - lo + 1; }

  friend constexpr bool operator==(const Interval&, const Interval&) = default;

  std::string to_string() const {
    if (is_empty()) return "[]";
    const auto end = [](int v) {
      if (v <= kNegInf) return std::string("-inf");
      if (v >= kPosInf) return std::string("+inf");
      return std::to_string(v);
    };
    return "[" + end(lo) + ", " + end(hi) + "]";
  }
};

// Saturating bound arithmetic: infinities absorb finite offsets.
constexpr int bound_add(int bound, int offset) {
  if (bound <= Interval::kNegInf) return Interval::kNegInf;
  if (bound >= Interval::kPosInf) return Interval::kPosInf;
  return std::clamp(bound + offset, Interval::kNegInf, Interval::kPosInf);
}

constexpr Interval intersect(const Interval& a, const Interval& b) {
  return {std::max(a.lo, b.lo), std::min(a.hi, b.hi)};
}

constexpr Interval hull(const Interval& a, const Interval& b) {
  if (a.is_empty()) return b;
  if (b.is_empty()) return a;
  return {std::min(a.lo, b.lo), std::max(a.hi, b.hi)};
}

// [lo + grow_lo, hi - grow_hi]; positive arguments shrink the interval.
constexpr Interval shrink(const Interval& a, int by_lo, int by_hi) {
  if (a.is_empty()) return a;
  return {bound_add(a.lo, by_lo), bound_add(a.hi, -by_hi)};
}

constexpr Interval shifted(const Interval& a, int offset) {
  if (a.is_empty()) return a;
  return {bound_add(a.lo, offset), bound_add(a.hi, offset)};
}

}  // namespace whf

#endif  // WHF_INTERVAL_HPP
