#pragma once

#include <gmpxx.h>

#include <functional>
#include <vector>

#include "loopstate/brauer.hpp"
#include "loopstate/operators.hpp"
#include "loopstate/random_points.hpp"
#include "loopstate/report.hpp"
#include "loopstate/tl.hpp"

namespace loopstate {

template <class T>
using Matrix = std::vector<std::vector<T>>;

namespace detail {
template <class T>
void check_square(const Matrix<T>& a) {
  for (const auto& row : a)
    if (row.size() != a.size()) throw std::invalid_argument("matrix is not square");
}

template <class T>
bool is_zero_value(const T& x) {
  if constexpr (requires { x.is_zero(); })
    return x.is_zero();
  else
    return x == 0;
}

template <class T>
void check_skew(const Matrix<T>& a) {
  check_square(a);
  if (a.size() % 2) throw std::invalid_argument("Pfaffian of an odd-dimensional matrix");
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i; j < a.size(); ++j)
      if (!(a[i][j] == -a[j][i])) throw std::invalid_argument("matrix is not skew-symmetric");
}
}  // namespace detail

/// Determinant over a field by Gaussian elimination with pivoting.
template <class T>
T determinant(Matrix<T> a) {
  detail::check_square(a);
  const std::size_t n = a.size();
  T det(1);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && detail::is_zero_value(a[p][k])) ++p;
    if (p == n) return T(0);
    if (p != k) {
      std::swap(a[p], a[k]);
      det = -det;
    }
    det *= a[k][k];
    const T inv = T(1) / a[k][k];
    for (std::size_t i = k + 1; i < n; ++i) {
      if (detail::is_zero_value(a[i][k])) continue;
      const T f = a[i][k] * inv;
      for (std::size_t j = k; j < n; ++j) a[i][j] -= f * a[k][j];
    }
  }
  return det;
}

/// Fraction-free (Bareiss) determinant over polynomial rings; every division is exact.
template <class C>
Polynomial<C> determinant_bareiss(Matrix<Polynomial<C>> a, std::size_t n_vars) {
  detail::check_square(a);
  const std::size_t n = a.size();
  if (n == 0) return Polynomial<C>(n_vars, C(1));
  Polynomial<C> prev(n_vars, C(1));
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t p = k;
    while (p < n && a[p][k].is_zero()) ++p;
    if (p == n) return Polynomial<C>(n_vars);
    if (p != k) {
      std::swap(a[p], a[k]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) a[i][j] = exact_div(a[k][k] * a[i][j] - a[i][k] * a[k][j], prev);
    prev = a[k][k];
  }
  return negate ? -a[n - 1][n - 1] : a[n - 1][n - 1];
}

/// Pfaffian over a field by skew-symmetric elimination.
template <class T>
T pfaffian(Matrix<T> a) {
  detail::check_skew(a);
  const std::size_t n = a.size();
  T pf(1);
  for (std::size_t k = 0; k < n; k += 2) {
    std::size_t p = k + 1;
    while (p < n && detail::is_zero_value(a[k][p])) ++p;
    if (p == n) return T(0);
    if (p != k + 1) {
      std::swap(a[p], a[k + 1]);
      for (auto& row : a) std::swap(row[p], row[k + 1]);
      pf = -pf;
    }
    const T piv = a[k][k + 1];
    pf *= piv;
    for (std::size_t i = k + 2; i < n; ++i) {
      // clear a[k][i] with column/row k+1, then a[k+1][i] with column/row k
      const T f = a[k][i] / piv;
      if (!detail::is_zero_value(f)) {
        for (std::size_t r = 0; r < n; ++r) a[r][i] -= f * a[r][k + 1];
        for (std::size_t c = 0; c < n; ++c) a[i][c] -= f * a[k + 1][c];
      }
      const T g = a[k + 1][i] / a[k + 1][k];
      if (!detail::is_zero_value(g)) {
        for (std::size_t r = 0; r < n; ++r) a[r][i] -= g * a[r][k];
        for (std::size_t c = 0; c < n; ++c) a[i][c] -= g * a[k][c];
      }
    }
  }
  return pf;
}

/// Pfaffian by expansion along the first row; works over any commutative ring.
template <class T>
T pfaffian_expansion(const Matrix<T>& a, const T& one) {
  detail::check_skew(a);
  std::function<T(std::vector<std::size_t>)> rec = [&](std::vector<std::size_t> idx) -> T {
    if (idx.empty()) return one;
    T sum = one - one;
    const std::size_t i = idx[0];
    for (std::size_t k = 1; k < idx.size(); ++k) {
      std::vector<std::size_t> rest;
      for (std::size_t m = 1; m < idx.size(); ++m)
        if (m != k) rest.push_back(idx[m]);
      T term = a[i][idx[k]] * rec(rest);
      if (k % 2 == 1)
        sum += term;
      else
        sum -= term;
    }
    return sum;
  };
  std::vector<std::size_t> all(a.size());
  for (std::size_t k = 0; k < all.size(); ++k) all[k] = k;
  return rec(all);
}

/// (prod_{i<j} den_ij) Pf(num_ij / den_ij), expanded over perfect matchings.
template <class C>
Polynomial<C> pfaffian_cleared(std::size_t dim, std::size_t n_vars,
                               const std::function<Polynomial<C>(std::size_t, std::size_t)>& num,
                               const std::function<Polynomial<C>(std::size_t, std::size_t)>& den) {
  if (dim % 2) throw std::invalid_argument("Pfaffian of an odd-dimensional matrix");
  std::vector<std::vector<bool>> in_matching(dim, std::vector<bool>(dim, false));
  Polynomial<C> total(n_vars);
  std::vector<bool> used(dim, false);
  std::function<void(int)> rec = [&](int sign) {
    std::size_t i = 0;
    while (i < dim && used[i]) ++i;
    if (i == dim) {
      Polynomial<C> term(n_vars, C(sign));
      for (std::size_t a = 0; a < dim; ++a)
        for (std::size_t b = a + 1; b < dim; ++b) term *= in_matching[a][b] ? num(a, b) : den(a, b);
      total += term;
      return;
    }
    used[i] = true;
    int parity = 0;  // free points strictly between i and j
    for (std::size_t j = i + 1; j < dim; ++j) {
      if (used[j]) continue;
      used[j] = true;
      in_matching[i][j] = true;
      rec(parity % 2 ? -sign : sign);
      in_matching[i][j] = false;
      used[j] = false;
      ++parity;
    }
    used[i] = false;
  };
  rec(1);
  return total;
}

/// (prod_{i,j} den_ij) det(1 / den_ij), expanded over permutations.
template <class C>
Polynomial<C> determinant_cleared(std::size_t dim, std::size_t n_vars,
                                  const std::function<Polynomial<C>(std::size_t, std::size_t)>& den) {
  std::vector<std::size_t> perm(dim);
  for (std::size_t k = 0; k < dim; ++k) perm[k] = k;
  Polynomial<C> total(n_vars);
  do {
    int inversions = 0;
    for (std::size_t a = 0; a < dim; ++a)
      for (std::size_t b = a + 1; b < dim; ++b) inversions += perm[a] > perm[b];
    Polynomial<C> term(n_vars, C(inversions % 2 ? -1 : 1));
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = 0; j < dim; ++j)
        if (perm[i] != j) term *= den(i, j);
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

namespace detail {
inline QPoly sq(std::size_t n, std::size_t i) { return QPoly::variable(n, i) * QPoly::variable(n, i); }
/// z_i^2 - z_j^2
inline QPoly vdm_sq(std::size_t n, std::size_t i, std::size_t j) { return sq(n, i) - sq(n, j); }
/// (1 - (z_i - z_j)^2)(1 - (z_i + z_j)^2)
inline QPoly brauer_den(std::size_t n, std::size_t i, std::size_t j) {
  QPoly one(n, Rational(1)), d = QPoly::variable(n, i) - QPoly::variable(n, j),
                             s = QPoly::variable(n, i) + QPoly::variable(n, j);
  return (one - d * d) * (one - s * s);
}
/// z^2 + z w + w^2 and 1 + z w + z^2 w^2
inline QPoly tl_p(std::size_t n, std::size_t i, std::size_t j) {
  QPoly zi = QPoly::variable(n, i), zj = QPoly::variable(n, j);
  return zi * zi + zi * zj + zj * zj;
}
inline QPoly tl_q(std::size_t n, std::size_t i, std::size_t j) {
  QPoly p = QPoly::variable(n, i) * QPoly::variable(n, j);
  return QPoly(n, Rational(1)) + p + p * p;
}
inline void check_point_size(std::size_t got, std::size_t N) {
  if (got != N) throw std::invalid_argument("point has the wrong number of coordinates");
}
}  // namespace detail

/// Brauer component sum as prod_{i<j} (1-(z_i-z_j)^2)(1-(z_i+z_j)^2)/(z_i^2-z_j^2) * Pf((z_i^2-z_j^2)/(...)), symbolic.
inline QPoly brauer_Z_formula(std::size_t N) {
  detail::half(N);
  std::function<QPoly(std::size_t, std::size_t)> num = [N](std::size_t a, std::size_t b) {
    return detail::vdm_sq(N, a + 1, b + 1);
  };
  std::function<QPoly(std::size_t, std::size_t)> den = [N](std::size_t a, std::size_t b) {
    return detail::brauer_den(N, a + 1, b + 1);
  };
  QPoly z = pfaffian_cleared<Rational>(N, N, num, den);
  for (std::size_t i = 1; i <= N; ++i)
    for (std::size_t j = i + 1; j <= N; ++j) z = exact_div(z, detail::vdm_sq(N, i, j));
  return z;
}

/// Same formula at a rational point; PoleError where z_i = +-z_j or a denominator vanishes.
inline Rational brauer_Z_formula(std::span<const Rational> z) {
  const std::size_t N = z.size();
  detail::half(N);
  Matrix<Rational> a(N, std::vector<Rational>(N, Rational(0)));
  Rational pre = 1;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = i + 1; j < N; ++j) {
      Rational v = z[i] * z[i] - z[j] * z[j];
      Rational d = (1 - (z[i] - z[j]) * (z[i] - z[j])) * (1 - (z[i] + z[j]) * (z[i] + z[j]));
      if (v == 0 || d == 0) throw PoleError("sum-rule formula is singular at this point");
      a[i][j] = v / d;
      a[j][i] = -a[i][j];
      pre *= d / v;
    }
  return pre * pfaffian(std::move(a));
}

/// 1/2 (C(2i+2j+1, 2j) - C(2i+2j+1, 2i)), asserted integral.
inline Rational brauer_homog_entry(unsigned i, unsigned j) {
  Integer b1, b2;
  mpz_bin_uiui(b1.get_mpz_t(), 2 * i + 2 * j + 1, 2 * j);
  mpz_bin_uiui(b2.get_mpz_t(), 2 * i + 2 * j + 1, 2 * i);
  Rational e = Rational(b1 - b2) / 2;
  if (e.get_den() != 1) throw InvariantViolation("binomial Pfaffian entry is not an integer");
  return e;
}

/// Z^{(N)}(0,...,0): indices 0..2n-1 for N = 2n, 1..2n-2 for N = 2n-1.
inline Integer brauer_Z_homog(std::size_t N) {
  if (N < 2) throw std::invalid_argument("brauer_Z_homog needs N >= 2");
  const unsigned lo = N % 2 ? 1 : 0;
  const unsigned hi = static_cast<unsigned>(N - 1);  // inclusive
  const std::size_t dim = hi - lo + 1;
  Matrix<Rational> a(dim, std::vector<Rational>(dim, Rational(0)));
  for (unsigned i = lo; i <= hi; ++i)
    for (unsigned j = i + 1; j <= hi; ++j) {
      a[i - lo][j - lo] = brauer_homog_entry(i, j);
      a[j - lo][i - lo] = -a[i - lo][j - lo];
    }
  Rational pf = pfaffian(std::move(a));
  if (pf.get_den() != 1) throw InvariantViolation("homogeneous Pfaffian is not an integer");
  return pf.get_num();
}

/// Permutation-sector sum: prod_{i<j<=n} a_ij b_ij (1+c_ij)(1+a_ji) prod_{n<i<j<=2n} a_ij c_ij (1+b_ij)(1+a_ji).
/// Odd N = 2n-1 takes the coefficient of z_{2n}^{4(n-1)} of the size 2n product.
inline QPoly brauer_W_formula(std::size_t N) {
  if (N < 1) throw std::invalid_argument("brauer_W_formula needs N >= 1");
  if (N % 2) {
    const std::size_t M = N + 1;
    const int d = 4 * static_cast<int>(M / 2 - 1);
    return drop_variable(leading_coefficient_in(brauer_W_formula(M), M, d), M);
  }
  const std::size_t n = N / 2;
  QPoly one(N, Rational(1)), w = one;
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = i + 1; j <= n; ++j)
      w *= a_factor(N, i, j) * b_factor(N, i, j) * (one + c_factor(N, i, j)) * (one + a_factor(N, j, i));
  for (std::size_t i = n + 1; i <= N; ++i)
    for (std::size_t j = i + 1; j <= N; ++j)
      w *= a_factor(N, i, j) * c_factor(N, i, j) * (one + b_factor(N, i, j)) * (one + a_factor(N, j, i));
  return w;
}

/// W^{(N)}(0,...,0). Odd N = 2n-1: the other variables are set to 0 before taking the top coefficient in z_{2n},
/// which keeps the product univariate.
inline Integer brauer_W_homog(std::size_t N) {
  if (N < 1) throw std::invalid_argument("brauer_W_homog needs N >= 1");
  const std::size_t M = N + N % 2, n = M / 2;
  QPoly zM = QPoly::variable(1, 1), one(1, Rational(1));
  auto lin = [&](std::size_t i, std::size_t j, int si, int sj) {
    QPoly f = one;
    if (i == M && N % 2) f += QPoly(1, Rational(si)) * zM;
    if (j == M && N % 2) f += QPoly(1, Rational(sj)) * zM;
    return f;
  };
  QPoly w = one;
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = i + 1; j <= n; ++j)
      w *= lin(i, j, 1, -1) * lin(i, j, -1, -1) * (one + lin(i, j, 1, 1)) * (one + lin(j, i, 1, -1));
  for (std::size_t i = n + 1; i <= M; ++i)
    for (std::size_t j = i + 1; j <= M; ++j)
      w *= lin(i, j, 1, -1) * lin(i, j, 1, 1) * (one + lin(i, j, -1, -1)) * (one + lin(j, i, 1, -1));
  Rational v = N % 2 ? leading_coefficient_in(w, 1, 4 * static_cast<int>(n - 1)).constant_term() : w.constant_term();
  if (v.get_den() != 1) throw InvariantViolation("non-integer homogeneous sector value");
  return v.get_num();
}

/// Delta(z_1^2..z_N^2) Pf(1/(z_i^2 - z_j^2)), the predicted top-degree part of the Brauer sum.
inline QPoly brauer_Z_leading(std::size_t N) {
  detail::half(N);
  std::function<QPoly(std::size_t, std::size_t)> one = [N](std::size_t, std::size_t) { return QPoly(N, Rational(1)); };
  std::function<QPoly(std::size_t, std::size_t)> den = [N](std::size_t a, std::size_t b) {
    return detail::vdm_sq(N, a + 1, b + 1);
  };
  return pfaffian_cleared<Rational>(N, N, one, den);
}

/// Delta(z_1^2..z_n^2)^2 Delta(z_{n+1}^2..z_{2n}^2)^2, the predicted top-degree part of the sector sum.
inline QPoly brauer_W_leading(std::size_t N) {
  const std::size_t n = detail::half(N);
  QPoly out(N, Rational(1));
  for (std::size_t i = 1; i <= N; ++i)
    for (std::size_t j = i + 1; j <= N; ++j)
      if ((i <= n) == (j <= n)) out *= pow(detail::vdm_sq(N, i, j), 2);
  return out;
}

/// Component sum; the permutation sector keeps patterns whose arches all join {1..n} to {n+1..2n}.
enum class Sector { all, permutation };

template <class C>
Polynomial<C> component_sum(const GroundStateVector<C>& v, Sector sector = Sector::all) {
  if (sector == Sector::all) return v.sum();
  if (v.model != Model::brauer) throw std::invalid_argument("the permutation sector is defined for the Brauer model only");
  Polynomial<C> s(v.N);
  for (std::size_t k = 0; k < v.size(); ++k)
    if (permutation_sector(v.patterns[k])) s += v.components[k];
  return s;
}

/// TL sum: prod_{i,j} P Q / prod_{i<j} (z_i-z_j)(1-z_i z_j)(w_i-w_j)(1-w_i w_j) * det(1/(P Q)), w_j = z_{n+j}; symbolic.
inline QPoly tl_Z_det(std::size_t N) {
  if (N == 0 || N % 2) throw std::invalid_argument("tl_Z_det needs even N");
  const std::size_t n = N / 2;
  std::function<QPoly(std::size_t, std::size_t)> den = [N, n](std::size_t a, std::size_t b) {
    return detail::tl_p(N, a + 1, n + b + 1) * detail::tl_q(N, a + 1, n + b + 1);
  };
  QPoly z = determinant_cleared<Rational>(n, N, den);
  QPoly one(N, Rational(1));
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = i + 1; j <= n; ++j)
      for (std::size_t s : {std::size_t(0), n}) {
        QPoly zi = QPoly::variable(N, i + s), zj = QPoly::variable(N, j + s);
        z = exact_div(z, zi - zj);
        z = exact_div(z, one - zi * zj);
      }
  return z;
}

inline Rational tl_Z_det(std::span<const Rational> z) {
  const std::size_t N = z.size();
  if (N == 0 || N % 2) throw std::invalid_argument("tl_Z_det needs even N");
  const std::size_t n = N / 2;
  Matrix<Rational> m(n, std::vector<Rational>(n));
  Rational pre = 1;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Rational &x = z[i], &w = z[n + j];
      Rational pq = (x * x + x * w + w * w) * (1 + x * w + x * x * w * w);
      if (pq == 0) throw PoleError("determinant formula is singular at this point");
      m[i][j] = 1 / pq;
      pre *= pq;
    }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t s : {std::size_t(0), n}) {
        Rational d = (z[i + s] - z[j + s]) * (1 - z[i + s] * z[j + s]);
        if (d == 0) throw PoleError("determinant formula is singular at this point");
        pre /= d;
      }
  return pre * determinant(std::move(m));
}

/// Z^2 = prod_{i<j} P/(z_i-z_j) Q/(1-z_i z_j) * Pf((z_i-z_j)(1-z_i z_j)/(P Q)) at a point.
inline Rational tl_Z_pf_squared(std::span<const Rational> z) {
  const std::size_t N = z.size();
  if (N == 0 || N % 2) throw std::invalid_argument("tl_Z_pf_squared needs even N");
  Matrix<Rational> a(N, std::vector<Rational>(N, Rational(0)));
  Rational pre = 1;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = i + 1; j < N; ++j) {
      const Rational &x = z[i], &w = z[j];
      Rational pq = (x * x + x * w + w * w) * (1 + x * w + x * x * w * w);
      Rational num = (x - w) * (1 - x * w);
      if (pq == 0 || num == 0) throw PoleError("Pfaffian formula is singular at this point");
      a[i][j] = num / pq;
      a[j][i] = -a[i][j];
      pre *= pq / num;
    }
  return pre * pfaffian(std::move(a));
}

namespace detail {
/// Enumerates m x m alternating sign matrices row by row, optionally keeping only left-right symmetric ones.
inline Integer count_asm(std::size_t m, bool symmetric_only) {
  Integer count = 0;
  std::vector<int> colsum(m, 0);
  std::vector<std::vector<int>> rows(m, std::vector<int>(m, 0));
  std::function<void(std::size_t)> place_row;
  // next is the sign the next nonzero entry of row r must have
  std::function<void(std::size_t, std::size_t, int)> fill = [&](std::size_t r, std::size_t c, int next) {
    auto& row = rows[r];
    if (c == m) {
      if (next != -1) return;  // the last nonzero entry must be +1
      for (std::size_t k = 0; k < m; ++k) colsum[k] += row[k];
      place_row(r + 1);
      for (std::size_t k = 0; k < m; ++k) colsum[k] -= row[k];
      return;
    }
    row[c] = 0;
    fill(r, c + 1, next);
    if (next == 1 && colsum[c] == 0) {
      row[c] = 1;
      fill(r, c + 1, -1);
    }
    if (next == -1 && colsum[c] == 1) {
      row[c] = -1;
      fill(r, c + 1, 1);
    }
    row[c] = 0;
  };
  place_row = [&](std::size_t r) {
    if (r == m) {
      for (int s : colsum)
        if (s != 1) return;
      if (symmetric_only)
        for (const auto& rw : rows)
          for (std::size_t k = 0; k < m; ++k)
            if (rw[k] != rw[m - 1 - k]) return;
      ++count;
      return;
    }
    fill(r, 0, 1);
  };
  place_row(0);
  return count;
}

}  // namespace detail

inline Integer count_asm(std::size_t m) { return detail::count_asm(m, false); }

/// Vertically symmetric ASMs of size m (m odd for a nonzero count).
inline Integer count_vsasm(std::size_t m) { return detail::count_asm(m, true); }

struct TlHomog {
  Integer value;     ///< Z(1,...,1)
  Integer quotient;  ///< value / 3^{n(n-1)}
};

/// All-ones value of the component sum and its quotient by 3^{n(n-1)}, which must be a positive integer.
inline TlHomog tl_homog(const GroundStateVector<Cyclotomic>& psi) {
  if (psi.model != Model::tl || psi.N == 0 || psi.N % 2) throw std::invalid_argument("tl_homog needs an even-size TL vector");
  const std::size_t n = psi.N / 2;
  const Cyclotomic at1 = evaluate_rational(psi.sum(), std::vector<Rational>(psi.N, Rational(1)));
  if (!at1.is_rational() || at1.re().get_den() != 1) throw InvariantViolation("Z(1,...,1) is not an integer");
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 3, n * (n - 1));
  const Integer v = at1.re().get_num();
  if (v <= 0 || v % scale != 0) throw InvariantViolation("Z(1,...,1) is not a positive multiple of 3^{n(n-1)}");
  return {v, v / scale};
}

struct SumruleOptions {
  std::uint64_t seed = 1;
  std::size_t trials = 20;
  std::size_t symbolic_max_n = 6;  ///< largest N for the symbolic closed forms
};

namespace detail {
/// Random point on which f does not throw PoleError; gives up after many draws.
template <class F>
std::vector<Rational> regular_point(RandomRationals& rr, std::size_t n, F&& f) {
  for (int attempt = 0; attempt < 1000; ++attempt) {
    auto pt = rr.point(n);
    try {
      f(pt);
      return pt;
    } catch (const PoleError&) {
    }
  }
  throw PoleError("no regular point found");
}

inline Integer pow_int(unsigned long base, unsigned long e) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), base, e);
  return r;
}
}  // namespace detail

/// Sum rules for an even-size Brauer vector; smaller is the size N-2 vector (built if absent).
inline Report verify_sumrules_brauer(const GroundStateVector<Rational>& psi, const SumruleOptions& opt = {},
                                     const GroundStateVector<Rational>* smaller = nullptr) {
  const std::size_t N = psi.N;
  const std::size_t n = detail::half(N);
  Report rep{"brauer-sumrules", "brauer", N, opt.seed, {}, {}};
  RandomRationals rr(opt.seed);
  const QPoly z = component_sum(psi);
  const QPoly w = component_sum(psi, Sector::permutation);

  {
    auto& c = rep.add("Z-formula-points");
    for (std::size_t t = 0; t < opt.trials; ++t) {
      auto pt = detail::regular_point(rr, N, [](const std::vector<Rational>& p) { brauer_Z_formula(p); });
      c.record(evaluate_rational(z, pt) == brauer_Z_formula(pt), [&] { return detail::point_str(pt); });
    }
  }
  if (N <= opt.symbolic_max_n) rep.add("Z-formula-symbolic").record(z == brauer_Z_formula(N));
  rep.add("Z-homogeneous").record(z.constant_term() == Rational(brauer_Z_homog(N)),
                                  [&] { return z.constant_term().get_str() + " vs " + brauer_Z_homog(N).get_str(); });
  {
    auto& sym = rep.add("Z-symmetric");
    for (std::size_t i = 1; i < N; ++i) sym.record(swap_adjacent(z, i) == z, [&] { return "tau_" + std::to_string(i); });
    if (N == 2) sym.record(true);
    auto& ev = rep.add("Z-even");
    for (std::size_t i = 1; i <= N; ++i) ev.record(flip_sign(z, i) == z, [&] { return "z_" + std::to_string(i); });
  }
  if (N > 2) {
    std::optional<GroundStateVector<Rational>> own;
    if (!smaller) {
      own = build_vector(N - 2);
      smaller = &*own;
    }
    const QPoly zs = component_sum(*smaller);
    auto& c = rep.add("Z-recursion");
    for (std::size_t t = 0; t < opt.trials; ++t) {
      auto pt = rr.point(N);
      pt[0] = pt[1] - 1;
      const Rational& z2 = pt[1];
      Rational prod = 1;
      for (std::size_t k = 2; k < N; ++k) {
        const Rational& zk = pt[k];
        prod *= (1 + z2 + zk) * (1 + z2 - zk) * (2 + zk - z2) * (2 - zk - z2);
      }
      std::vector<Rational> rest(pt.begin() + 2, pt.end());
      c.record(evaluate_rational(z, pt) == evaluate_rational(zs, rest) * prod, [&] { return detail::point_str(pt); });
    }
  }
  rep.add("W-formula").record(w == brauer_W_formula(N));
  rep.add("W-homogeneous").record(w.constant_term() == Rational(detail::pow_int(2, 2 * n * (n - 1))),
                                  [&] { return w.constant_term().get_str(); });
  rep.add("leading-all").record(top_homogeneous_part(z) == brauer_Z_leading(N));
  rep.add("leading-sector").record(top_homogeneous_part(w) == brauer_W_leading(N));
  if (N >= 4) {
    auto odd = reduce_to_odd(psi);
    rep.add("Z-odd-homogeneous").record(odd.sum().constant_term() == Rational(brauer_Z_homog(N - 1)), [&] {
      return odd.sum().constant_term().get_str() + " vs " + brauer_Z_homog(N - 1).get_str();
    });
  }
  return rep;
}

/// Sum rules for an even-size TL vector.
inline Report verify_sumrules_tl(const GroundStateVector<Cyclotomic>& psi, const SumruleOptions& opt = {}) {
  const std::size_t N = psi.N;
  if (N == 0 || N % 2) throw std::invalid_argument("verify_sumrules_tl needs even N");
  const std::size_t n = N / 2;
  Report rep{"tl-sumrules", "tl", N, opt.seed, {}, {}};
  RandomRationals rr(opt.seed);
  const WPoly zw = component_sum(psi);
  auto [zq, zi] = split_cyclotomic(zw);
  {
    auto& c = rep.add("Z-rational-coefficients");
    c.record(zi.is_zero());
  }
  {
    auto& det = rep.add("Z-det-points");
    auto& pf = rep.add("Z-pf-squared-points");
    auto& sym = rep.add("Z-det-symmetric-points");
    auto& rec = rep.add("Z-det-reciprocal-points");
    const int d = 2 * static_cast<int>(n - 1);
    auto regular = [&](const std::vector<Rational>& p) {
      tl_Z_det(p);
      tl_Z_pf_squared(p);
    };
    for (std::size_t t = 0; t < opt.trials; ++t) {
      auto pt = detail::regular_point(rr, N, regular);
      Rational v = tl_Z_det(pt);
      det.record(evaluate_rational(zq, pt) == v, [&] { return detail::point_str(pt); });
      pf.record(tl_Z_pf_squared(pt) == v * v, [&] { return detail::point_str(pt); });
      auto sw = pt;
      const std::size_t i = t % (N - 1);
      std::swap(sw[i], sw[i + 1]);
      try {
        sym.record(tl_Z_det(sw) == v, [&] { return detail::point_str(sw); });
      } catch (const PoleError&) {
      }
      auto rp = pt;
      const std::size_t k = t % N;
      if (rp[k] != 0) {
        Rational x = rp[k];
        rp[k] = 1 / x;
        Rational scale = 1;
        for (int e = 0; e < d; ++e) scale *= x;
        try {
          rec.record(scale * tl_Z_det(rp) == v, [&] { return detail::point_str(rp); });
        } catch (const PoleError&) {
        }
      }
    }
  }
  if (N <= opt.symbolic_max_n) rep.add("Z-det-symbolic").record(zq == tl_Z_det(N));
  {
    auto& c = rep.add("homogeneous-VSASM");
    const Rational at1 = evaluate_rational(zq, std::vector<Rational>(N, Rational(1)));
    const Integer scale = detail::pow_int(3, n * (n - 1));
    const Rational quotient = at1 / Rational(scale);
    const Integer vs = count_vsasm(2 * n + 1);
    c.record(quotient == Rational(vs), [&] { return quotient.get_str() + " vs " + vs.get_str(); });
    rep.notes.push_back("Z(1,...,1) = " + at1.get_str() + " = 3^" + std::to_string(n * (n - 1)) + " * " + quotient.get_str());
  }
  return rep;
}

}  // namespace loopstate
