#pragma once

#include "base.hpp"

namespace charvar {

using IMat = std::vector<std::vector<Int>>;

inline IMat identity_mat(int n) {
  IMat m(n, std::vector<Int>(n, Int(0)));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

inline IMat imat_mul(const IMat& a, const IMat& b) {
  int n = (int)a.size(), k = (int)b.size(), m = k ? (int)b[0].size() : 0;
  IMat r(n, std::vector<Int>(m, Int(0)));
  for (int i = 0; i < n; ++i)
    for (int l = 0; l < k; ++l) {
      if (a[i][l] == 0) continue;
      for (int j = 0; j < m; ++j) r[i][j] += a[i][l] * b[l][j];
    }
  return r;
}

inline std::vector<Int> vec_mat(const std::vector<Int>& v, const IMat& m) {
  int rows = (int)m.size(), cols = rows ? (int)m[0].size() : 0;
  std::vector<Int> r(cols, Int(0));
  for (int i = 0; i < rows; ++i) {
    if (v[i] == 0) continue;
    for (int j = 0; j < cols; ++j) r[j] += v[i] * m[i][j];
  }
  return r;
}

inline std::vector<Int> mat_vec(const IMat& m, const std::vector<Int>& v) {
  int rows = (int)m.size(), cols = rows ? (int)m[0].size() : 0;
  std::vector<Int> r(rows, Int(0));
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j)
      if (m[i][j] != 0 && v[j] != 0) r[i] += m[i][j] * v[j];
  return r;
}

// fraction-free determinant (Bareiss)
inline Int idet(IMat a) {
  int n = (int)a.size();
  if (n == 0) return 1;
  Int sign = 1, prev = 1;
  for (int t = 0; t < n - 1; ++t) {
    if (a[t][t] == 0) {
      int piv = -1;
      for (int i = t + 1; i < n; ++i)
        if (a[i][t] != 0) {
          piv = i;
          break;
        }
      if (piv < 0) return 0;
      std::swap(a[t], a[piv]);
      sign = -sign;
    }
    for (int i = t + 1; i < n; ++i)
      for (int j = t + 1; j < n; ++j)
        a[i][j] = (a[i][j] * a[t][t] - a[i][t] * a[t][j]) / prev;
    prev = a[t][t];
  }
  return sign * a[n - 1][n - 1];
}

struct SnfInt {
  IMat U, V;             // unimodular: U * A * V = diag
  std::vector<Int> diag; // invariant factors (non-negative, divisibility chain)
  int rows = 0, cols = 0;

  IMat diag_matrix() const {
    IMat d(rows, std::vector<Int>(cols, Int(0)));
    for (int i = 0; i < (int)diag.size(); ++i) d[i][i] = diag[i];
    return d;
  }
};

inline SnfInt smith_normal_form(IMat a) {
  int m = (int)a.size(), n = m ? (int)a[0].size() : 0;
  SnfInt res;
  res.rows = m;
  res.cols = n;
  res.U = identity_mat(m);
  res.V = identity_mat(n);
  if (m == 0 || n == 0) return res;

  auto row_swap = [&](int i, int j) {
    std::swap(a[i], a[j]);
    std::swap(res.U[i], res.U[j]);
  };
  auto col_swap = [&](int i, int j) {
    for (int r = 0; r < m; ++r) std::swap(a[r][i], a[r][j]);
    for (int r = 0; r < n; ++r) std::swap(res.V[r][i], res.V[r][j]);
  };
  auto row_addmul = [&](int dst, int src, const Int& q) {  // row dst += q*src
    for (int j = 0; j < n; ++j) a[dst][j] += q * a[src][j];
    for (int j = 0; j < m; ++j) res.U[dst][j] += q * res.U[src][j];
  };
  auto col_addmul = [&](int dst, int src, const Int& q) {  // col dst += q*src
    for (int i = 0; i < m; ++i) a[i][dst] += q * a[i][src];
    for (int i = 0; i < n; ++i) res.V[i][dst] += q * res.V[i][src];
  };
  auto row_neg = [&](int i) {
    for (int j = 0; j < n; ++j) a[i][j] = -a[i][j];
    for (int j = 0; j < m; ++j) res.U[i][j] = -res.U[i][j];
  };

  int t = 0;
  while (t < m && t < n) {
    // pivot: smallest non-zero absolute value in the trailing submatrix
    int pi = -1, pj = -1;
    Int best = 0;
    for (int i = t; i < m; ++i)
      for (int j = t; j < n; ++j) {
        if (a[i][j] == 0) continue;
        Int v = a[i][j] < 0 ? Int(-a[i][j]) : a[i][j];
        if (pi < 0 || v < best) {
          best = v;
          pi = i;
          pj = j;
        }
      }
    if (pi < 0) break;
    if (pi != t) row_swap(t, pi);
    if (pj != t) col_swap(t, pj);
    if (a[t][t] < 0) row_neg(t);

    bool clean = true;
    for (int i = t + 1; i < m; ++i) {
      if (a[i][t] == 0) continue;
      Int q = a[i][t] / a[t][t];
      if (q != 0) row_addmul(i, t, -q);
      if (a[i][t] != 0) clean = false;
    }
    for (int j = t + 1; j < n; ++j) {
      if (a[t][j] == 0) continue;
      Int q = a[t][j] / a[t][t];
      if (q != 0) col_addmul(j, t, -q);
      if (a[t][j] != 0) clean = false;
    }
    if (!clean) continue;  // smaller remainders exist; re-pick pivot

    // pivot must divide the whole trailing block
    bool divides = true;
    for (int i = t + 1; i < m && divides; ++i)
      for (int j = t + 1; j < n && divides; ++j)
        if (a[i][j] % a[t][t] != 0) {
          row_addmul(t, i, Int(1));
          divides = false;
        }
    if (!divides) continue;
    ++t;
  }

  res.diag.assign(std::min(m, n), Int(0));
  for (int i = 0; i < (int)res.diag.size(); ++i) res.diag[i] = a[i][i];
  return res;
}

// does the integer row span of `rows` contain `target`?
inline bool lattice_contains(const IMat& rows, const std::vector<Int>& target) {
  int m = (int)rows.size();
  int n = (int)target.size();
  if (m == 0) {
    for (auto& x : target)
      if (x != 0) return false;
    return true;
  }
  SnfInt s = smith_normal_form(rows);
  // x * R = target  <=>  y * D = target * V with y = x * U^-1 free over Z
  std::vector<Int> tv = vec_mat(target, s.V);
  for (int j = 0; j < n; ++j) {
    Int d = j < (int)s.diag.size() ? s.diag[j] : Int(0);
    if (d == 0) {
      if (tv[j] != 0) return false;
    } else if (tv[j] % d != 0) {
      return false;
    }
  }
  return true;
}

// abelianization data of Z^n modulo the span of relator exponent rows
struct AbelianStructure {
  long rank = 0;
  std::vector<Int> torsion;  // entries >= 2, divisibility chain
  IMat proj;                 // n x n unimodular; H1 coords = proj * x
  std::vector<Int> diag;     // full invariant factor list (size n)
};

// rows = relator exponent vectors (m x n)
inline AbelianStructure abelian_structure(const IMat& rows, int n) {
  // work with columns B = rows^T (n x m); H1 = Z^n / im(B); U*B*V = D gives
  // H1 = Z^n/im(D) in coordinates U*x
  IMat B(n, std::vector<Int>(rows.size(), Int(0)));
  for (int i = 0; i < (int)rows.size(); ++i)
    for (int j = 0; j < n; ++j) B[j][i] = rows[i][j];
  SnfInt s = smith_normal_form(B);
  AbelianStructure ab;
  ab.proj = s.U;
  ab.diag.assign(n, Int(0));
  for (int i = 0; i < (int)s.diag.size(); ++i) ab.diag[i] = s.diag[i];
  for (int i = 0; i < n; ++i) {
    if (ab.diag[i] == 0)
      ++ab.rank;
    else if (ab.diag[i] >= 2)
      ab.torsion.push_back(ab.diag[i]);
  }
  return ab;
}

}  // namespace charvar
