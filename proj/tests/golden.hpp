// Conjugated monomial matrices U^R(z^+-n, t, w) and U^+(z^+-n, t, w), n = 1..3,
// written out entry by entry by hand. Shared by the unit tests and
// the acceptance run.
#ifndef WHF_TESTS_GOLDEN_HPP
#define WHF_TESTS_GOLDEN_HPP

#include <string>
#include <tuple>
#include <vector>

#include "whf/toeplitz.hpp"

namespace golden {

using whf::FVariant;
using whf::Poly;

inline const whf::Ring& ring() {
  static const whf::Ring q = whf::Ring::rational();
  return q;
}

// Sum of c * w^wp * t^tp.
inline Poly P(std::initializer_list<std::tuple<const char*, int, int>> terms) {
  Poly p;
  for (const auto& [c, wp, tp] : terms) p += Poly::monomial(ring().parse(c), wp, tp);
  return p;
}

inline Poly zero() { return {}; }
inline Poly one() { return P({{"1", 0, 0}}); }
inline Poly omt2() { return P({{"1", 0, 0}, {"-1", 0, 2}}); }
inline Poly tw(int k) { return P({{"1", k, k}}); }
inline Poly twinv(int k) { return P({{"1", -k, k}}); }
inline Poly omt(int k, int wp) { return P({{"1", wp, k}, {"-1", wp, k + 2}}); }  // t^k (1 - t^2) w^wp

// Block rows x cols with top-left corner (row0, col0); the plain shift
// elsewhere.
struct Table {
  FVariant variant;
  int n;
  int row0, col0;
  std::vector<std::vector<Poly>> block;
};

inline std::vector<Table> tables() {
  const Poly O = zero(), I = one(), D = omt2();
  return {
      {FVariant::R, 1, 0, -1, {{I, tw(1)}, {-twinv(1), D}}},
      {FVariant::R, 2, 0, -2, {{I, tw(1), tw(2)}, {-twinv(1), D, omt(1, 1)}, {O, -twinv(1), D}}},
      {FVariant::R, 3, 0, -3,
       {{I, tw(1), tw(2), tw(3)},
        {-twinv(1), D, omt(1, 1), omt(2, 2)},
        {O, -twinv(1), D, omt(1, 1)},
        {O, O, -twinv(1), D}}},
      {FVariant::R, -1, -1, 0, {{D, -tw(1)}, {twinv(1), I}}},
      {FVariant::R, -2, -2, 0, {{D, -tw(1), O}, {omt(1, -1), D, -tw(1)}, {twinv(2), twinv(1), I}}},
      {FVariant::R, -3, -3, 0,
       {{D, -tw(1), O, O},
        {omt(1, -1), D, -tw(1), O},
        {omt(2, -2), omt(1, -1), D, -tw(1)},
        {twinv(3), twinv(2), twinv(1), I}}},
      {FVariant::plus, 1, 0, -1, {{I, tw(1)}, {O, I}}},
      {FVariant::plus, 2, 0, -2, {{I, tw(1), tw(2)}, {O, I, tw(1)}, {O, O, I}}},
      {FVariant::plus, 3, 0, -3, {{I, tw(1), tw(2), tw(3)}, {O, I, tw(1), tw(2)}, {O, O, I, tw(1)}, {O, O, O, I}}},
      // Rows -n..-1 carry 1 at column i+n and -tw at column i+n+1.
      {FVariant::plus, -1, -1, 0, {{I, -tw(1)}}},
      {FVariant::plus, -2, -2, 0, {{I, -tw(1), O}, {O, I, -tw(1)}}},
      {FVariant::plus, -3, -3, 0, {{I, -tw(1), O, O}, {O, I, -tw(1), O}, {O, O, I, -tw(1)}}},
  };
}

inline std::string name(const Table& g) {
  return std::string(g.variant == FVariant::R ? "U^R" : g.variant == FVariant::plus ? "U^+" : "U^-") + "(z^" +
         std::to_string(g.n) + ")";
}

// Mismatching entries on the window [-h, h], empty when the table matches.
inline std::vector<std::string> mismatches(const Table& g, int h = 6) {
  const whf::Ring& q = ring();
  const auto mono = whf::LaurentSeries::monomial(q, q.one(), g.n);
  const whf::WindowedMatrix m = whf::conjugate_U(mono, g.variant, std::nullopt, whf::Interval::symmetric(h));
  const int rows = static_cast<int>(g.block.size());
  const int cols = static_cast<int>(g.block[0].size());
  std::vector<std::string> out;
  for (int i = -h; i <= h; ++i) {
    for (int j = -h; j <= h; ++j) {
      const bool in_block = i >= g.row0 && i < g.row0 + rows && j >= g.col0 && j < g.col0 + cols;
      const Poly expected = in_block ? g.block[i - g.row0][j - g.col0] : (i - j == g.n ? one() : zero());
      if (!m.at(i, j).equals(q, expected)) {
        out.push_back(name(g) + " (" + std::to_string(i) + "," + std::to_string(j) + "): got " +
                      m.at(i, j).to_string(q) + ", want " + expected.to_string(q));
      }
    }
  }
  return out;
}

}  // namespace golden

#endif  // WHF_TESTS_GOLDEN_HPP
