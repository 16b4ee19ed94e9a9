#pragma once

// Shared helpers for the test suites: deterministic random generators and
// independent oracles kept separate from the library implementation paths.

#include <random>
#include <vector>

#include "tricap/diagram.hpp"
#include "tricap/moves.hpp"
#include "tricap/surface.hpp"

namespace tricap::testutil {

using Rng = std::mt19937;

inline Int rand_int(Rng& rng, Int lo, Int hi) {
  std::uniform_int_distribution<Int> dist(lo, hi);
  return dist(rng);
}

inline IntMatrix random_matrix(Rng& rng, Int rows, Int cols, Int lo, Int hi) {
  IntMatrix m(rows, cols);
  for (Int i = 0; i < rows; ++i)
    for (Int j = 0; j < cols; ++j) m(i, j) = rand_int(rng, lo, hi);
  return m;
}

inline H1Class random_class(Rng& rng, const SurfaceModel& s, Int bound = 4) {
  IntVector v(s.coordinate_dim());
  for (Int i = 0; i < v.size(); ++i) v[i] = rand_int(rng, -bound, bound);
  return H1Class(std::move(v));
}

inline H1Class random_primitive_class(Rng& rng, const SurfaceModel& s,
                                      Int bound = 3) {
  for (;;) {
    H1Class c = random_class(rng, s, bound);
    if (c.is_primitive()) return c;
  }
}

// Independent pairing oracle: classifies each coordinate index by name
// (a_i / b_i / d_j) and walks the convention table entry by entry, never
// touching the Gram-matrix path used by the library.
inline Int oracle_pairing(const H1Class& x, const H1Class& y,
                          const SurfaceModel& s) {
  Int total = 0;
  const Int dim = s.coordinate_dim();
  for (Int i = 0; i < dim; ++i)
    for (Int j = 0; j < dim; ++j) {
      const bool i_is_a = i < 2 * s.genus && i % 2 == 0;
      const bool j_is_b = j < 2 * s.genus && j % 2 == 1;
      const bool i_is_b = i < 2 * s.genus && i % 2 == 1;
      const bool j_is_a = j < 2 * s.genus && j % 2 == 0;
      Int w = 0;
      if (i_is_a && j_is_b && j == i + 1) w = 1;        // omega(a_h, b_h) = +1
      else if (i_is_b && j_is_a && i == j + 1) w = -1;  // omega(b_h, a_h) = -1
      if (w != 0) total += x.coords[i] * y.coords[j] * w;
    }
  return total;
}

// A random handleslide on one of the families of d (requires >= 2 curves).
template <typename Diagram>
Move random_slide(Rng& rng, const Diagram& d) {
  const Family f = kFamilies[rand_int(rng, 0, 2)];
  const Int n = static_cast<Int>(d.family(f).size());
  Int curve = rand_int(rng, 0, n - 1);
  Int over = rand_int(rng, 0, n - 2);
  if (over >= curve) ++over;
  return Move::handleslide(f, curve, over, rand_int(rng, 0, 1) ? 1 : -1);
}

// A random transvection; with handle_block_only the twisting class has no
// boundary-parallel part, so it survives capping.
inline Move random_twist(Rng& rng, const SurfaceModel& s,
                         bool handle_block_only) {
  for (;;) {
    IntVector v = IntVector::Zero(s.coordinate_dim());
    const Int limit = handle_block_only ? 2 * s.genus : s.coordinate_dim();
    for (Int i = 0; i < limit; ++i) v[i] = rand_int(rng, -2, 2);
    H1Class c{std::move(v)};
    if (c.is_primitive()) return Move::transvection(c, rand_int(rng, -3, 3));
  }
}

template <typename Diagram>
Diagram apply_moves(const Diagram& d, const std::vector<Move>& moves) {
  Diagram out = d;
  for (const Move& m : moves) out = apply_move(out, m);
  return out;
}

}  // namespace tricap::testutil
