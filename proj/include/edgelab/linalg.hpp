#pragma once

// Dense symmetric eigensolvers and exact integer rank.
//
// eigen_sym uses cyclic Jacobi rotations up to kJacobiMaxN; above that it
// switches to Householder tridiagonalization followed by implicit-shift QL
// (same contract, needed because Jacobi sweeps are O(n^3) each and the
// transfer experiments diagonalize n ~ 2000 matrices).

#include <cmath>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace edgelab {

struct Matrix {
  int rows = 0, cols = 0;
  std::vector<double> a;

  Matrix() = default;
  Matrix(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c, 0.0) {}

  double& operator()(int i, int j) { return a[static_cast<std::size_t>(i) * cols + j]; }
  double operator()(int i, int j) const { return a[static_cast<std::size_t>(i) * cols + j]; }

  static Matrix identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
  }

  double frob2() const {
    double s = 0;
    for (double x : a) s += x * x;
    return s;
  }

  double trace() const {
    double s = 0;
    for (int i = 0; i < std::min(rows, cols); ++i) s += (*this)(i, i);
    return s;
  }

  bool is_symmetric(double tol) const {
    if (rows != cols) return false;
    double scale = std::sqrt(frob2());
    double bound = tol * std::max(scale, 1.0);
    for (int i = 0; i < rows; ++i)
      for (int j = i + 1; j < cols; ++j)
        if (std::abs((*this)(i, j) - (*this)(j, i)) > bound) return false;
    return true;
  }
};

inline std::vector<double> mat_vec(const Matrix& m, const std::vector<double>& v) {
  std::vector<double> out(m.rows, 0.0);
  for (int i = 0; i < m.rows; ++i) {
    double s = 0;
    for (int j = 0; j < m.cols; ++j) s += m(i, j) * v[j];
    out[i] = s;
  }
  return out;
}

struct EigenSym {
  std::vector<double> values;  // sorted by magnitude, descending
  Matrix vectors;              // column k is the eigenvector of values[k]
};

inline constexpr int kJacobiMaxN = 512;

namespace detail {

inline void jacobi_eigen(Matrix a, std::vector<double>& vals, Matrix& vecs, double tol) {
  int n = a.rows;
  vecs = Matrix::identity(n);
  double norm = std::sqrt(a.frob2());
  if (norm == 0.0) {
    vals.assign(n, 0.0);
    return;
  }
  auto offdiag2 = [&] {
    double s = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) s += 2 * a(i, j) * a(i, j);
    return s;
  };
  const int max_sweeps = 64;
  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    if (std::sqrt(offdiag2()) < tol * norm) break;
    for (int p = 0; p < n - 1; ++p)
      for (int q = p + 1; q < n; ++q) {
        double apq = a(p, q);
        if (apq == 0.0) continue;
        double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        double c = 1.0 / std::sqrt(t * t + 1.0), s = t * c;
        for (int k = 0; k < n; ++k) {
          double akp = a(k, p), akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (int k = 0; k < n; ++k) {
          double apk = a(p, k), aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
        for (int k = 0; k < n; ++k) {
          double vkp = vecs(k, p), vkq = vecs(k, q);
          vecs(k, p) = c * vkp - s * vkq;
          vecs(k, q) = s * vkp + c * vkq;
        }
      }
  }
  vals.resize(n);
  for (int i = 0; i < n; ++i) vals[i] = a(i, i);
}

// Householder reduction to tridiagonal form with transform accumulation,
// then implicit-shift QL. Classic tred2/tqli scheme.
inline void tridiag_ql_eigen(Matrix a, std::vector<double>& vals, Matrix& vecs) {
  int n = a.rows;
  std::vector<double> d(n, 0.0), e(n, 0.0);
  // tred2
  for (int i = n - 1; i >= 1; --i) {
    int l = i - 1;
    double h = 0, scale = 0;
    if (l > 0) {
      for (int k = 0; k <= l; ++k) scale += std::abs(a(i, k));
      if (scale == 0.0) {
        e[i] = a(i, l);
      } else {
        for (int k = 0; k <= l; ++k) {
          a(i, k) /= scale;
          h += a(i, k) * a(i, k);
        }
        double f = a(i, l);
        double g = (f >= 0 ? -std::sqrt(h) : std::sqrt(h));
        e[i] = scale * g;
        h -= f * g;
        a(i, l) = f - g;
        f = 0;
        for (int j = 0; j <= l; ++j) {
          a(j, i) = a(i, j) / h;
          g = 0;
          for (int k = 0; k <= j; ++k) g += a(j, k) * a(i, k);
          for (int k = j + 1; k <= l; ++k) g += a(k, j) * a(i, k);
          e[j] = g / h;
          f += e[j] * a(i, j);
        }
        double hh = f / (h + h);
        for (int j = 0; j <= l; ++j) {
          f = a(i, j);
          e[j] = g = e[j] - hh * f;
          for (int k = 0; k <= j; ++k) a(j, k) -= f * e[k] + g * a(i, k);
        }
      }
    } else {
      e[i] = a(i, l);
    }
    d[i] = h;
  }
  d[0] = 0;
  e[0] = 0;
  for (int i = 0; i < n; ++i) {
    int l = i - 1;
    if (d[i] != 0.0) {
      for (int j = 0; j <= l; ++j) {
        double g = 0;
        for (int k = 0; k <= l; ++k) g += a(i, k) * a(k, j);
        for (int k = 0; k <= l; ++k) a(k, j) -= g * a(k, i);
      }
    }
    d[i] = a(i, i);
    a(i, i) = 1.0;
    for (int j = 0; j <= l; ++j) a(j, i) = a(i, j) = 0.0;
  }
  // tqli
  for (int i = 1; i < n; ++i) e[i - 1] = e[i];
  e[n - 1] = 0;
  for (int l = 0; l < n; ++l) {
    int iter = 0;
    int m;
    do {
      for (m = l; m < n - 1; ++m) {
        double dd = std::abs(d[m]) + std::abs(d[m + 1]);
        if (std::abs(e[m]) <= 1e-300 + 1e-16 * dd) break;
      }
      if (m != l) {
        if (iter++ == 60) throw std::runtime_error("tridiag_ql_eigen: too many iterations");
        double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
        double r = std::hypot(g, 1.0);
        g = d[m] - d[l] + e[l] / (g + (g >= 0 ? std::abs(r) : -std::abs(r)));
        double s = 1.0, c = 1.0, p = 0.0;
        for (int i = m - 1; i >= l; --i) {
          double f = s * e[i], b = c * e[i];
          r = std::hypot(f, g);
          e[i + 1] = r;
          if (r == 0.0) {
            d[i + 1] -= p;
            e[m] = 0.0;
            break;
          }
          s = f / r;
          c = g / r;
          g = d[i + 1] - p;
          r = (d[i] - g) * s + 2.0 * c * b;
          p = s * r;
          d[i + 1] = g + p;
          g = c * r - b;
          for (int k = 0; k < n; ++k) {
            f = a(k, i + 1);
            a(k, i + 1) = s * a(k, i) + c * f;
            a(k, i) = c * a(k, i) - s * f;
          }
        }
        if (r == 0.0 && m - 1 >= l) continue;
        d[l] -= p;
        e[l] = g;
        e[m] = 0.0;
      }
    } while (m != l);
  }
  vals = d;
  vecs = std::move(a);
}

}  // namespace detail

// Symmetric eigendecomposition; eigenvalues sorted by magnitude descending.
inline EigenSym eigen_sym(const Matrix& f, double tol = 1e-10) {
  if (f.rows != f.cols) throw std::invalid_argument("eigen_sym: not square");
  if (!f.is_symmetric(1e-12)) throw std::invalid_argument("eigen_sym: not symmetric");
  std::vector<double> vals;
  Matrix vecs;
  if (f.rows <= kJacobiMaxN)
    detail::jacobi_eigen(f, vals, vecs, tol);
  else
    detail::tridiag_ql_eigen(f, vals, vecs);
  int n = f.rows;
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int i, int j) { return std::abs(vals[i]) > std::abs(vals[j]); });
  EigenSym out;
  out.values.resize(n);
  out.vectors = Matrix(n, n);
  for (int k = 0; k < n; ++k) {
    out.values[k] = vals[order[k]];
    for (int i = 0; i < n; ++i) out.vectors(i, k) = vecs(i, order[k]);
  }
  return out;
}

// Squared singular values of a (possibly rectangular) matrix, via the Gram
// matrix of the smaller side.
inline std::vector<double> singular_values_squared(const Matrix& b) {
  int r = b.rows, c = b.cols;
  bool use_cols = c <= r;
  int m = use_cols ? c : r;
  Matrix gram(m, m);
  for (int i = 0; i < m; ++i)
    for (int j = i; j < m; ++j) {
      double s = 0;
      if (use_cols)
        for (int k = 0; k < r; ++k) s += b(k, i) * b(k, j);
      else
        for (int k = 0; k < c; ++k) s += b(i, k) * b(j, k);
      gram(i, j) = gram(j, i) = s;
    }
  EigenSym e = eigen_sym(gram);
  for (double& v : e.values) v = std::max(0.0, v);
  return e.values;  // descending by magnitude = descending, all >= 0
}

// ---- exact integer rank (fraction-free Bareiss elimination) ----
//
// Entries must stay small (our matrices have entries in {-1,0,1} and rank
// at most ~20, so all intermediate values are minors of small matrices).
// Overflow is checked and reported rather than silently wrapped.

class IntMatrix {
 public:
  IntMatrix(int r, int c) : rows_(r), cols_(c), a_(static_cast<std::size_t>(r) * c, 0) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  long long& at(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
  long long at(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }

 private:
  int rows_, cols_;
  std::vector<long long> a_;
};

// Exact rank over Q. If cap >= 0, stops early once rank > cap is certain and
// returns cap+1.
inline int exact_rank(IntMatrix m, int cap = -1) {
  const long long kLimit = (1LL << 62);
  int r = m.rows(), c = m.cols();
  int rank = 0;
  long long prev = 1;
  for (int col = 0; col < c && rank < r; ++col) {
    int piv = -1;
    for (int i = rank; i < r; ++i)
      if (m.at(i, col) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != rank)
      for (int j = 0; j < c; ++j) std::swap(m.at(piv, j), m.at(rank, j));
    long long p = m.at(rank, col);
    for (int i = rank + 1; i < r; ++i) {
      long long mi = m.at(i, col);
      for (int j = col; j < c; ++j) {
        __int128 num = static_cast<__int128>(p) * m.at(i, j) -
                       static_cast<__int128>(mi) * m.at(rank, j);
        __int128 q = num / prev;  // exact by Bareiss
        if (q > kLimit || q < -kLimit) throw std::overflow_error("exact_rank: entry overflow");
        m.at(i, j) = static_cast<long long>(q);
      }
    }
    prev = p;
    ++rank;
    if (cap >= 0 && rank > cap) return rank;
  }
  return rank;
}

// det of a small integer matrix (for nonsingularity checks), exact.
inline long long exact_det(const IntMatrix& m) {
  int n = m.rows();
  if (n != m.cols()) throw std::invalid_argument("exact_det: not square");
  IntMatrix a = m;
  long long prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (a.at(k, k) == 0) {
      int piv = -1;
      for (int i = k + 1; i < n; ++i)
        if (a.at(i, k) != 0) {
          piv = i;
          break;
        }
      if (piv < 0) return 0;
      for (int j = 0; j < n; ++j) std::swap(a.at(piv, j), a.at(k, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) {
        __int128 num = static_cast<__int128>(a.at(k, k)) * a.at(i, j) -
                       static_cast<__int128>(a.at(i, k)) * a.at(k, j);
        a.at(i, j) = static_cast<long long>(num / prev);
      }
    prev = a.at(k, k);
  }
  return sign * a.at(n - 1, n - 1);
}

}  // namespace edgelab
