#pragma once

#include "laurent.hpp"
#include "ulaurent.hpp"

namespace charvar {

// matrix over the multivariate Laurent ring, with row/column labels for display
struct PolyMatrix {
  int rows = 0, cols = 0, nv = 0;
  std::vector<std::vector<LaurentPoly>> entries;
  std::vector<std::string> row_labels, col_labels, var_names;

  const LaurentPoly& at(int i, int j) const { return entries[i][j]; }
};

using EvalMatrix = std::vector<std::vector<Field::Elem>>;

inline EvalMatrix eval_matrix(const PolyMatrix& M, const Field& F,
                              const std::vector<Field::Elem>& coords) {
  EvalMatrix E(M.rows, std::vector<Field::Elem>(M.cols, F.zero()));
  for (int i = 0; i < M.rows; ++i)
    for (int j = 0; j < M.cols; ++j) E[i][j] = M.entries[i][j].eval(F, coords);
  return E;
}

inline int matrix_rank(const Field& F, EvalMatrix a) {
  int m = (int)a.size();
  int n = m ? (int)a[0].size() : 0;
  int rank = 0;
  for (int col = 0; col < n && rank < m; ++col) {
    int piv = -1;
    for (int i = rank; i < m; ++i)
      if (!F.is_zero(a[i][col])) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(a[rank], a[piv]);
    Field::Elem inv = F.inv(a[rank][col]);
    for (int j = col; j < n; ++j) a[rank][j] = F.mul(a[rank][j], inv);
    for (int i = 0; i < m; ++i) {
      if (i == rank || F.is_zero(a[i][col])) continue;
      Field::Elem f = a[i][col];
      for (int j = col; j < n; ++j) a[i][j] = F.sub(a[i][j], F.mul(f, a[rank][j]));
    }
    ++rank;
  }
  return rank;
}

// determinant of a square submatrix given by row/column index sets, by cofactor
// expansion with memoisation on the column set (rows are processed in order)
namespace detail {
inline LaurentPoly minor_det(const PolyMatrix& M, const std::vector<int>& rows,
                             const std::vector<int>& cols,
                             std::map<std::vector<int>, LaurentPoly>& memo) {
  if (cols.empty()) return LaurentPoly::constant(M.nv, 1);
  auto it = memo.find(cols);
  if (it != memo.end()) return it->second;
  int r = rows[rows.size() - cols.size()];
  LaurentPoly det(M.nv);
  for (size_t k = 0; k < cols.size(); ++k) {
    const LaurentPoly& e = M.entries[r][cols[k]];
    if (e.is_zero()) continue;
    std::vector<int> rest;
    rest.reserve(cols.size() - 1);
    for (size_t l = 0; l < cols.size(); ++l)
      if (l != k) rest.push_back(cols[l]);
    LaurentPoly sub = minor_det(M, rows, rest, memo);
    LaurentPoly term = e * sub;
    if (k % 2 == 1) term = -term;
    det = det + term;
  }
  memo[cols] = det;
  return det;
}

inline void subsets_of_size(int n, int k, const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> idx(k);
  std::function<void(int, int)> rec = [&](int start, int depth) {
    if (depth == k) {
      fn(idx);
      return;
    }
    for (int i = start; i <= n - (k - depth); ++i) {
      idx[depth] = i;
      rec(i + 1, depth + 1);
    }
  };
  rec(0, 0);
}
}  // namespace detail

inline LaurentPoly poly_minor(const PolyMatrix& M, const std::vector<int>& rows,
                              const std::vector<int>& cols) {
  std::map<std::vector<int>, LaurentPoly> memo;
  return detail::minor_det(M, rows, cols, memo);
}

// all minors of the given order (1 ≤ order ≤ min(rows, cols))
inline std::vector<LaurentPoly> minors_of_order(const PolyMatrix& M, int order) {
  if (order < 1 || order > std::min(M.rows, M.cols))
    throw input_error("minor order " + std::to_string(order) + " out of range for " +
                      std::to_string(M.rows) + "x" + std::to_string(M.cols) + " matrix");
  std::vector<LaurentPoly> out;
  detail::subsets_of_size(M.rows, order, [&](const std::vector<int>& rs) {
    std::map<std::vector<int>, LaurentPoly> memo;
    detail::subsets_of_size(M.cols, order, [&](const std::vector<int>& cs) {
      out.push_back(detail::minor_det(M, rs, cs, memo));
    });
  });
  return out;
}

enum class FittingKind { Zero, Unit, Minors };

struct FittingIdeal {
  FittingKind kind = FittingKind::Minors;
  int minor_order = 0;  // meaningful when kind == Minors
  std::vector<LaurentPoly> gens;
};

// k-th Fitting ideal of the module presented by the matrix (rows = module
// generators, columns = relations): zero ideal if k ≤ max(0, n−m), unit ideal if
// k > n, otherwise generated by the minors of order n−k+1
inline FittingIdeal fitting_generators(const PolyMatrix& M, int k) {
  int n = M.rows;
  int m = M.cols;
  FittingIdeal F;
  if (k > n) {
    F.kind = FittingKind::Unit;
    return F;
  }
  if (k <= std::max(0, n - m)) {
    F.kind = FittingKind::Zero;
    return F;
  }
  F.kind = FittingKind::Minors;
  F.minor_order = n - k + 1;
  F.gens = minors_of_order(M, F.minor_order);
  return F;
}

// does the point lie in the vanishing locus of the k-th Fitting ideal?
inline bool fitting_vanishes(const PolyMatrix& M, int k, const Field& F,
                             const std::vector<Field::Elem>& coords) {
  FittingIdeal I = fitting_generators(M, k);
  if (I.kind == FittingKind::Zero) return true;
  if (I.kind == FittingKind::Unit) return false;
  for (auto& g : I.gens)
    if (!F.is_zero(g.eval(F, coords))) return false;
  return true;
}

// specialise one Laurent variable to 1, producing a univariate matrix in the
// remaining variable (requires nv == 2)
inline UMat specialise_to_univariate(const PolyMatrix& M, int kill_var, const LaurentRing& R) {
  if (M.nv != 2) throw input_error("univariate specialisation needs exactly two variables");
  UMat out(M.rows, std::vector<ULaurent>(M.cols));
  for (int i = 0; i < M.rows; ++i)
    for (int j = 0; j < M.cols; ++j) {
      LaurentPoly p = M.entries[i][j].substitute_one(kill_var);
      ULaurent u;
      bool any = false;
      for (auto& [e, c] : p.terms) {
        ULaurent mono{e[0], {R.F.from_rational(c)}};
        u = any ? R.add(u, mono) : mono;
        any = true;
      }
      out[i][j] = u;
    }
  return out;
}

}  // namespace charvar
