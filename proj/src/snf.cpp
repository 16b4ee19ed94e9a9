#include "tricap/snf.hpp"

#include <cstdlib>
#include <limits>
#include <numeric>
#include <vector>

namespace tricap {

Int SmithNormalForm::rank() const {
  Int r = 0;
  const Int nmin = std::min(D.rows(), D.cols());
  for (Int i = 0; i < nmin; ++i)
    if (D(i, i) != 0) ++r;
  return r;
}

std::vector<Int> SmithNormalForm::divisors() const {
  std::vector<Int> out;
  const Int nmin = std::min(D.rows(), D.cols());
  for (Int i = 0; i < nmin; ++i)
    if (D(i, i) != 0) out.push_back(D(i, i));
  return out;
}

BigMatrix BigMatrix::identity(Int n) {
  BigMatrix out(n, n);
  for (Int i = 0; i < n; ++i) out(i, i) = 1;
  return out;
}

BigMatrix multiply(const BigMatrix& a, const BigMatrix& b) {
  if (a.cols != b.rows) throw std::invalid_argument("shape mismatch");
  BigMatrix out(a.rows, b.cols);
  for (Int i = 0; i < a.rows; ++i)
    for (Int k = 0; k < a.cols; ++k) {
      const BigInt& v = a(i, k);
      if (v == 0) continue;
      for (Int j = 0; j < b.cols; ++j) out(i, j) += v * b(k, j);
    }
  return out;
}

BigMatrix to_big(const IntMatrix& m) {
  BigMatrix out(m.rows(), m.cols());
  for (Int i = 0; i < m.rows(); ++i)
    for (Int j = 0; j < m.cols(); ++j) out(i, j) = m(i, j);
  return out;
}

namespace {

using BigRows = std::vector<std::vector<BigInt>>;

BigRows big_identity(Int n) {
  BigRows m(n, std::vector<BigInt>(n));
  for (Int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

Int narrow(const BigInt& v, const char* what) {
  if (v > std::numeric_limits<Int>::max() || v < std::numeric_limits<Int>::min())
    throw std::overflow_error(std::string(what) +
                              " exceeds 64-bit range for this input");
  return static_cast<Int>(v);
}

// Nearest-integer quotient: remainder in [-|d|/2, |d|/2].
BigInt nearest_quotient(const BigInt& a, const BigInt& d) {
  BigInt q = a / d;
  const BigInt r = a - q * d;
  if (2 * abs(r) > abs(d)) q += ((r > 0) == (d > 0)) ? 1 : -1;
  return q;
}

// Pairwise Lagrange reduction of lattice basis columns: repeatedly shorten
// one column by an integer multiple of another. Norms strictly decrease,
// so this terminates; the pass cap is belt and braces.
void reduce_columns(BigRows& b) {
  if (b.empty()) return;
  const Int rows = static_cast<Int>(b.size());
  const Int cols = static_cast<Int>(b[0].size());
  auto dot = [&](Int i, Int j) {
    BigInt acc = 0;
    for (Int r = 0; r < rows; ++r) acc += b[r][i] * b[r][j];
    return acc;
  };
  for (int pass = 0; pass < 16; ++pass) {
    bool changed = false;
    for (Int i = 0; i < cols; ++i)
      for (Int j = 0; j < cols; ++j) {
        if (i == j) continue;
        const BigInt jj = dot(j, j);
        if (jj == 0) continue;
        const BigInt c = -nearest_quotient(dot(i, j), jj);
        if (c == 0) continue;
        const BigInt before = dot(i, i);
        for (Int r = 0; r < rows; ++r) b[r][i] += c * b[r][j];
        if (dot(i, i) < before) changed = true;
      }
    if (!changed) break;
  }
}

// Elimination workspace over arbitrary-precision integers. Row ops keep
// D <- E D, U <- E U, Uinv <- Uinv E^-1; column ops keep D <- D F,
// V <- V F, Vinv <- F^-1 Vinv.
struct Workspace {
  Int rows, cols;
  BigRows D, U, V, Uinv, Vinv;

  explicit Workspace(const IntMatrix& m)
      : rows(m.rows()),
        cols(m.cols()),
        D(m.rows(), std::vector<BigInt>(m.cols())),
        U(big_identity(m.rows())),
        V(big_identity(m.cols())),
        Uinv(big_identity(m.rows())),
        Vinv(big_identity(m.cols())) {
    for (Int i = 0; i < rows; ++i)
      for (Int j = 0; j < cols; ++j) D[i][j] = m(i, j);
  }

  void row_swap(Int i, Int j) {
    if (i == j) return;
    std::swap(D[i], D[j]);
    std::swap(U[i], U[j]);
    for (Int r = 0; r < rows; ++r) std::swap(Uinv[r][i], Uinv[r][j]);
  }

  void col_swap(Int i, Int j) {
    if (i == j) return;
    for (Int r = 0; r < rows; ++r) std::swap(D[r][i], D[r][j]);
    for (Int r = 0; r < cols; ++r) std::swap(V[r][i], V[r][j]);
    std::swap(Vinv[i], Vinv[j]);
  }

  // row i += f * row j
  void row_add(Int i, Int j, const BigInt& f) {
    for (Int c = 0; c < cols; ++c) D[i][c] += f * D[j][c];
    for (Int c = 0; c < rows; ++c) U[i][c] += f * U[j][c];
    for (Int r = 0; r < rows; ++r) Uinv[r][j] -= f * Uinv[r][i];
  }

  // col i += f * col j
  void col_add(Int i, Int j, const BigInt& f) {
    for (Int r = 0; r < rows; ++r) D[r][i] += f * D[r][j];
    for (Int r = 0; r < cols; ++r) V[r][i] += f * V[r][j];
    for (Int c = 0; c < cols; ++c) Vinv[j][c] -= f * Vinv[i][c];
  }

  void row_negate(Int i) {
    for (Int c = 0; c < cols; ++c) D[i][c] = -D[i][c];
    for (Int c = 0; c < rows; ++c) U[i][c] = -U[i][c];
    for (Int r = 0; r < rows; ++r) Uinv[r][i] = -Uinv[r][i];
  }

  bool find_pivot(Int t, Int& pi, Int& pj) const {
    BigInt best = 0;
    bool found = false;
    for (Int i = t; i < rows; ++i)
      for (Int j = t; j < cols; ++j) {
        if (D[i][j] == 0) continue;
        const BigInt a = abs(D[i][j]);
        if (!found || a < best) {
          best = a;
          pi = i;
          pj = j;
          found = true;
        }
      }
    return found;
  }

  bool pivot_is_lone(Int t) const {
    for (Int i = t + 1; i < rows; ++i)
      if (D[i][t] != 0) return false;
    for (Int j = t + 1; j < cols; ++j)
      if (D[t][j] != 0) return false;
    return true;
  }

  // Phase 1: full elimination to a diagonal with non-negative entries.
  void diagonalize() {
    const Int nmin = std::min(rows, cols);
    for (Int t = 0; t < nmin; ++t) {
      for (;;) {
        Int pi = t, pj = t;
        if (!find_pivot(t, pi, pj)) break;  // trailing block is zero
        row_swap(t, pi);
        col_swap(t, pj);
        for (Int i = t + 1; i < rows; ++i)
          if (D[i][t] != 0) row_add(i, t, -nearest_quotient(D[i][t], D[t][t]));
        for (Int j = t + 1; j < cols; ++j)
          if (D[t][j] != 0) col_add(j, t, -nearest_quotient(D[t][j], D[t][t]));
        if (pivot_is_lone(t)) break;
      }
      if (D[t][t] < 0) row_negate(t);
    }
  }

  // Apply a 2x2 unimodular block P (det +-1) to rows (i, j); Uinv picks up
  // the inverse on columns (i, j).
  void row_block(Int i, Int j, const BigInt& p00, const BigInt& p01,
                 const BigInt& p10, const BigInt& p11) {
    const BigInt det = p00 * p11 - p01 * p10;  // +1 or -1
    for (Int c = 0; c < cols; ++c) {
      const BigInt di = D[i][c], dj = D[j][c];
      D[i][c] = p00 * di + p01 * dj;
      D[j][c] = p10 * di + p11 * dj;
    }
    for (Int c = 0; c < rows; ++c) {
      const BigInt ui = U[i][c], uj = U[j][c];
      U[i][c] = p00 * ui + p01 * uj;
      U[j][c] = p10 * ui + p11 * uj;
    }
    for (Int r = 0; r < rows; ++r) {
      const BigInt vi = Uinv[r][i], vj = Uinv[r][j];
      Uinv[r][i] = det * (p11 * vi - p10 * vj);
      Uinv[r][j] = det * (-p01 * vi + p00 * vj);
    }
  }

  // Apply a 2x2 unimodular block Q to columns (i, j); Vinv picks up the
  // inverse on rows (i, j).
  void col_block(Int i, Int j, const BigInt& q00, const BigInt& q01,
                 const BigInt& q10, const BigInt& q11) {
    const BigInt det = q00 * q11 - q01 * q10;
    for (Int r = 0; r < rows; ++r) {
      const BigInt di = D[r][i], dj = D[r][j];
      D[r][i] = q00 * di + q10 * dj;
      D[r][j] = q01 * di + q11 * dj;
    }
    for (Int r = 0; r < cols; ++r) {
      const BigInt vi = V[r][i], vj = V[r][j];
      V[r][i] = q00 * vi + q10 * vj;
      V[r][j] = q01 * vi + q11 * vj;
    }
    for (Int c = 0; c < cols; ++c) {
      const BigInt wi = Vinv[i][c], wj = Vinv[j][c];
      Vinv[i][c] = det * (q11 * wi - q01 * wj);
      Vinv[j][c] = det * (-q10 * wi + q00 * wj);
    }
  }

  static BigInt xgcd(BigInt a, BigInt b, BigInt& x, BigInt& y) {
    if (b == 0) {
      x = 1;
      y = 0;
      return a;
    }
    BigInt x1, y1;
    const BigInt g = xgcd(b, a % b, x1, y1);
    x = y1;
    y = x1 - (a / b) * y1;
    return g;
  }

  // Replace the diagonal pair (d_i, d_j), i < j, by (gcd, lcm) via the
  // extended-gcd block identity
  //   [x y; -b/g a/g] * diag(a, b) * [1 -yb/g; 1 xa/g] = diag(g, ab/g).
  void fix_pair(Int i, Int j) {
    const BigInt a = D[i][i], b = D[j][j];
    BigInt x, y;
    const BigInt g = xgcd(a, b, x, y);
    row_block(i, j, x, y, -b / g, a / g);
    col_block(i, j, 1, -(y * b) / g, 1, (x * a) / g);
  }

  // Phase 2: enforce the divisibility chain d_1 | d_2 | ...
  void enforce_chain() {
    const Int nmin = std::min(rows, cols);
    for (Int i = 0; i < nmin; ++i)
      for (Int j = i + 1; j < nmin; ++j) {
        if (D[i][i] == 0 && D[j][j] != 0) {
          row_swap(i, j);
          col_swap(i, j);
        }
        if (D[i][i] != 0 && D[j][j] % D[i][i] != 0) fix_pair(i, j);
      }
  }
};

BigMatrix from_rows(const BigRows& m, Int rows, Int cols) {
  BigMatrix out(rows, cols);
  for (Int i = 0; i < rows; ++i)
    for (Int j = 0; j < cols; ++j) out(i, j) = m[i][j];
  return out;
}

IntMatrix narrow_matrix(const BigRows& m, Int rows, Int cols,
                        const char* what) {
  IntMatrix out(rows, cols);
  for (Int i = 0; i < rows; ++i)
    for (Int j = 0; j < cols; ++j) out(i, j) = narrow(m[i][j], what);
  return out;
}

}  // namespace

SmithNormalForm smith_normal_form(const IntMatrix& m) {
  Workspace w(m);
  w.diagonalize();
  w.enforce_chain();
  SmithNormalForm out;
  out.U = from_rows(w.U, w.rows, w.rows);
  out.V = from_rows(w.V, w.cols, w.cols);
  out.Uinv = from_rows(w.Uinv, w.rows, w.rows);
  out.Vinv = from_rows(w.Vinv, w.cols, w.cols);
  out.D = narrow_matrix(w.D, w.rows, w.cols, "Smith divisor");
  return out;
}

Int matrix_rank(const IntMatrix& m) { return smith_normal_form(m).rank(); }

IntMatrix kernel_basis(const IntMatrix& m) {
  const SmithNormalForm snf = smith_normal_form(m);
  const Int r = snf.rank();
  const Int dim = m.cols() - r;
  BigRows ker(m.cols(), std::vector<BigInt>(dim));
  for (Int i = 0; i < m.cols(); ++i)
    for (Int j = 0; j < dim; ++j) ker[i][j] = snf.V(i, r + j);
  reduce_columns(ker);
  return narrow_matrix(ker, m.cols(), dim, "kernel basis entry");
}

std::optional<IntVector> solve_integer(const IntMatrix& m, const IntVector& y) {
  if (y.size() != m.rows())
    throw std::invalid_argument("right-hand side has wrong dimension");
  const SmithNormalForm snf = smith_normal_form(m);
  const Int r = snf.rank();

  std::vector<BigInt> w(m.rows());
  for (Int i = 0; i < m.rows(); ++i)
    for (Int j = 0; j < m.rows(); ++j) w[i] += snf.U(i, j) * BigInt(y[j]);

  std::vector<BigInt> z(m.cols());
  for (Int i = 0; i < m.rows(); ++i) {
    if (i < r) {
      if (w[i] % snf.D(i, i) != 0) return std::nullopt;
      z[i] = w[i] / snf.D(i, i);
    } else if (w[i] != 0) {
      return std::nullopt;
    }
  }

  // particular solution, then shrink it modulo the kernel lattice
  BigRows xk(m.cols(), std::vector<BigInt>(1 + m.cols() - r));
  for (Int i = 0; i < m.cols(); ++i)
    for (Int j = 0; j < m.cols(); ++j) xk[i][0] += snf.V(i, j) * z[j];
  for (Int i = 0; i < m.cols(); ++i)
    for (Int j = r; j < m.cols(); ++j) xk[i][1 + j - r] = snf.V(i, j);

  auto dot = [&](Int a, Int b) {
    BigInt acc = 0;
    for (Int i = 0; i < m.cols(); ++i) acc += xk[i][a] * xk[i][b];
    return acc;
  };
  for (int pass = 0; pass < 16; ++pass) {
    bool changed = false;
    for (Int j = 1; j < 1 + m.cols() - r; ++j) {
      const BigInt jj = dot(j, j);
      if (jj == 0) continue;
      const BigInt c = -nearest_quotient(dot(0, j), jj);
      if (c == 0) continue;
      for (Int i = 0; i < m.cols(); ++i) xk[i][0] += c * xk[i][j];
      changed = true;
    }
    if (!changed) break;
  }

  IntVector x(m.cols());
  for (Int i = 0; i < m.cols(); ++i) x[i] = narrow(xk[i][0], "solution entry");
  return x;
}

namespace {

// Column Hermite form: canonical basis of the column lattice. Pivots are
// positive; entries of earlier columns in a pivot row are reduced to
// [0, pivot).
BigRows column_hermite(const IntMatrix& m) {
  const Int rows = m.rows(), cols = m.cols();
  BigRows h(rows, std::vector<BigInt>(cols));
  for (Int i = 0; i < rows; ++i)
    for (Int j = 0; j < cols; ++j) h[i][j] = m(i, j);

  auto col_add = [&](Int i, Int j, const BigInt& f) {
    for (Int r = 0; r < rows; ++r) h[r][i] += f * h[r][j];
  };
  auto col_swap = [&](Int i, Int j) {
    if (i != j)
      for (Int r = 0; r < rows; ++r) std::swap(h[r][i], h[r][j]);
  };

  Int p = 0;  // next pivot column
  for (Int row = 0; row < rows && p < cols; ++row) {
    // euclid across columns p.. on this row
    for (;;) {
      Int best = -1;
      for (Int j = p; j < cols; ++j)
        if (h[row][j] != 0 &&
            (best < 0 || abs(h[row][j]) < abs(h[row][best])))
          best = j;
      if (best < 0) break;
      col_swap(p, best);
      bool clean = true;
      for (Int j = p + 1; j < cols; ++j)
        if (h[row][j] != 0) {
          col_add(j, p, -nearest_quotient(h[row][j], h[row][p]));
          if (h[row][j] != 0) clean = false;
        }
      if (clean) break;
    }
    if (h[row][p] == 0) continue;
    if (h[row][p] < 0)
      for (Int r = 0; r < rows; ++r) h[r][p] = -h[r][p];
    // reduce the pivot row entries of the earlier columns into [0, pivot)
    for (Int j = 0; j < p; ++j) {
      BigInt q = h[row][j] / h[row][p];
      if (h[row][j] - q * h[row][p] < 0) q -= 1;
      if (q != 0) col_add(j, p, -q);
    }
    ++p;
  }

  // nonzero columns are the first p
  for (auto& r : h) r.resize(p);
  return h;
}

}  // namespace

ColumnLattice column_lattice(const IntMatrix& m) {
  const BigRows h = column_hermite(m);
  const Int rank = h.empty() ? 0 : static_cast<Int>(h[0].size());
  ColumnLattice out;
  out.basis = narrow_matrix(h, m.rows(), rank, "lattice basis entry");
  out.divisors = smith_normal_form(m).divisors();
  return out;
}

namespace {

BigInt determinant_exact(const BigMatrix& m) {
  const Int n = m.rows;
  if (n == 0) return 1;
  BigRows a(n, std::vector<BigInt>(n));
  for (Int i = 0; i < n; ++i)
    for (Int j = 0; j < n; ++j) a[i][j] = m(i, j);

  // Bareiss fraction-free elimination; every division is exact.
  BigInt prev = 1;
  int sign = 1;
  for (Int k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      Int swap_row = -1;
      for (Int i = k + 1; i < n; ++i)
        if (a[i][k] != 0) {
          swap_row = i;
          break;
        }
      if (swap_row < 0) return 0;
      std::swap(a[k], a[swap_row]);
      sign = -sign;
    }
    for (Int i = k + 1; i < n; ++i)
      for (Int j = k + 1; j < n; ++j)
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

}  // namespace

bool is_unimodular(const BigMatrix& m) {
  if (m.rows != m.cols) return false;
  const BigInt d = determinant_exact(m);
  return d == 1 || d == -1;
}

bool is_unimodular(const IntMatrix& m) { return is_unimodular(to_big(m)); }

Int symmetric_signature(const IntMatrix& q) {
  const Int n = q.rows();
  if (q.cols() != n) throw std::invalid_argument("matrix not square");
  if (q != q.transpose()) throw std::invalid_argument("matrix not symmetric");

  BigRows s(n, std::vector<BigInt>(n));
  for (Int i = 0; i < n; ++i)
    for (Int j = 0; j < n; ++j) s[i][j] = q(i, j);

  Int positive = 0, negative = 0;
  for (Int t = 0; t < n; ++t) {
    Int pivot = -1;
    for (Int i = t; i < n; ++i)
      if (s[i][i] != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0) {
      // no nonzero diagonal left; manufacture one from an off-diagonal entry
      Int oi = -1, oj = -1;
      for (Int i = t; i < n && oi < 0; ++i)
        for (Int j = i + 1; j < n; ++j)
          if (s[i][j] != 0) {
            oi = i;
            oj = j;
            break;
          }
      if (oi < 0) break;  // trailing block zero: degenerate directions
      for (Int r = 0; r < n; ++r) s[oi][r] += s[oj][r];
      for (Int r = 0; r < n; ++r) s[r][oi] += s[r][oj];
      pivot = oi;
    }
    if (pivot != t) {
      std::swap(s[pivot], s[t]);
      for (Int r = 0; r < n; ++r) std::swap(s[r][pivot], s[r][t]);
    }

    const BigInt d = s[t][t];
    (d > 0 ? positive : negative)++;

    // split off the pivot: congruence e_j -> d e_j - s[t][j] e_t
    std::vector<BigInt> c(n);
    for (Int j = t + 1; j < n; ++j) c[j] = s[t][j];
    for (Int j = t + 1; j < n; ++j)
      for (Int k = t + 1; k < n; ++k) s[j][k] = d * d * s[j][k] - d * c[j] * c[k];
    for (Int j = t + 1; j < n; ++j) s[t][j] = s[j][t] = 0;

    // positive rescaling keeps entry growth down
    BigInt g = 0;
    for (Int j = t + 1; j < n; ++j)
      for (Int k = t + 1; k < n; ++k) g = boost::multiprecision::gcd(g, s[j][k]);
    if (g > 1)
      for (Int j = t + 1; j < n; ++j)
        for (Int k = t + 1; k < n; ++k) s[j][k] /= g;
  }
  return positive - negative;
}

}  // namespace tricap
