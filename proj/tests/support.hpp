#pragma once

// shared fixtures: the closed-form presentation matrices of the two
// conic+quartic groups and an equivalence checker for matrices that agree up to
// row/column permutations and ±monomial unit factors (the moves that preserve
// Fitting ideals of the presented module).

#include "charvar/polymat.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <random>

namespace support {

using namespace charvar;

inline LaurentPoly tv(int i, int e = 1) { return LaurentPoly::variable(2, i, e); }
inline LaurentPoly one2() { return LaurentPoly::constant(2, 1); }

// rows scaled as (t_i - 1) times the common row (t1+1, t1 t2+1)
inline PolyMatrix reference_variant2() {
  PolyMatrix M;
  M.rows = M.cols = M.nv = 2;
  M.var_names = {"t1", "t2"};
  M.row_labels = {"g1", "g2"};
  M.col_labels = {"r1", "r2"};
  LaurentPoly f1 = tv(0) + one2(), f2 = tv(0) * tv(1) + one2();
  M.entries = {{(tv(0) - one2()) * f1, (tv(0) - one2()) * f2},
               {(tv(1) - one2()) * f1, (tv(1) - one2()) * f2}};
  return M;
}

// common row (t1+1, t1 t2+1, t2+1)
inline PolyMatrix reference_variant1() {
  PolyMatrix M;
  M.rows = 2;
  M.cols = 3;
  M.nv = 2;
  M.var_names = {"t1", "t2"};
  M.row_labels = {"g1", "g2"};
  M.col_labels = {"r1", "r2", "r3"};
  LaurentPoly f1 = tv(0) + one2(), f2 = tv(0) * tv(1) + one2(), f3 = tv(1) + one2();
  M.entries = {{(tv(0) - one2()) * f1, (tv(0) - one2()) * f2, (tv(0) - one2()) * f3},
               {(tv(1) - one2()) * f1, (tv(1) - one2()) * f2, (tv(1) - one2()) * f3}};
  return M;
}

// deleting the second component from the 2x2 reference: substitute t2 = 1 and
// append a unit column in the deleted component's row
inline PolyMatrix reference_variant2_deletion() {
  PolyMatrix M;
  M.rows = 2;
  M.cols = 3;
  M.nv = 1;
  M.var_names = {"t1"};
  M.row_labels = {"g1", "g2"};
  M.col_labels = {"r1", "r2", "u"};
  LaurentPoly t1 = LaurentPoly::variable(1, 0), c1 = LaurentPoly::constant(1, 1);
  LaurentPoly z(1);
  M.entries = {{t1 * t1 - c1, t1 * t1 - c1, z}, {z, z, c1}};
  return M;
}

struct Unit {
  int sign = 1;               // +1 or -1
  std::vector<int> exp;       // monomial exponent vector

  static Unit identity(int nv) { return Unit{1, std::vector<int>(nv, 0)}; }
  Unit mul(const Unit& o) const {
    Unit r{sign * o.sign, exp};
    for (size_t i = 0; i < exp.size(); ++i) r.exp[i] += o.exp[i];
    return r;
  }
  Unit inv() const {
    Unit r{sign, exp};
    for (auto& e : r.exp) e = -e;
    return r;
  }
  bool operator==(const Unit& o) const { return sign == o.sign && exp == o.exp; }
};

// the unit u with b = u * a, if one exists (a, b nonzero)
inline std::optional<Unit> unit_quotient(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return std::nullopt;
  if (a.terms.size() != b.terms.size()) return std::nullopt;
  auto [ea, ca] = *a.terms.begin();
  auto [eb, cb] = *b.terms.begin();
  if (ca != cb && ca != -cb) return std::nullopt;
  Unit u;
  u.sign = (ca == cb) ? 1 : -1;
  u.exp.resize(ea.size());
  for (size_t i = 0; i < ea.size(); ++i) u.exp[i] = eb[i] - ea[i];
  LaurentPoly m = LaurentPoly::monomial(a.nv, u.exp, u.sign);
  if (!(m * a == b)) return std::nullopt;
  return u;
}

// b == r * a * c for fixed per-row units r and per-col units c? the unit grid
// q[i][j] with b = q a must split as r_i * c_j; propagate over the bipartite
// incidence graph (cells where both entries vanish are unconstrained)
inline bool unit_rescaling_exists(const PolyMatrix& A, const PolyMatrix& B,
                                  const std::vector<int>& rp, const std::vector<int>& cp) {
  int n = A.rows, m = A.cols;
  std::vector<std::vector<std::optional<Unit>>> q(n, std::vector<std::optional<Unit>>(m));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < m; ++j) {
      const LaurentPoly &a = A.entries[rp[i]][cp[j]], &b = B.entries[i][j];
      if (a.is_zero() != b.is_zero()) return false;
      if (a.is_zero()) continue;
      q[i][j] = unit_quotient(a, b);
      if (!q[i][j]) return false;
    }
  std::vector<std::optional<Unit>> row(n), col(m);
  for (int s = 0; s < n; ++s) {
    if (row[s]) continue;
    bool touches = false;
    for (int j = 0; j < m && !touches; ++j) touches = q[s][j].has_value();
    if (!touches) continue;
    row[s] = Unit::identity(A.nv);
    std::vector<std::pair<bool, int>> stack = {{true, s}};
    while (!stack.empty()) {
      auto [is_row, v] = stack.back();
      stack.pop_back();
      if (is_row) {
        for (int j = 0; j < m; ++j) {
          if (!q[v][j]) continue;
          Unit c = row[v]->inv().mul(*q[v][j]);
          if (!col[j]) {
            col[j] = c;
            stack.push_back({false, j});
          } else if (!(*col[j] == c)) {
            return false;
          }
        }
      } else {
        for (int i = 0; i < n; ++i) {
          if (!q[i][v]) continue;
          Unit r = q[i][v]->mul(col[v]->inv());
          if (!row[i]) {
            row[i] = r;
            stack.push_back({true, i});
          } else if (!(*row[i] == r)) {
            return false;
          }
        }
      }
    }
  }
  return true;
}

// equality up to row/column permutations and ±monomial unit rescalings
inline bool unit_equivalent(const PolyMatrix& A, const PolyMatrix& B) {
  if (A.rows != B.rows || A.cols != B.cols || A.nv != B.nv) return false;
  std::vector<int> rp(A.rows), cp(A.cols);
  std::iota(rp.begin(), rp.end(), 0);
  do {
    std::iota(cp.begin(), cp.end(), 0);
    do {
      if (unit_rescaling_exists(A, B, rp, cp)) return true;
    } while (std::next_permutation(cp.begin(), cp.end()));
  } while (std::next_permutation(rp.begin(), rp.end()));
  return false;
}

inline FreeWord random_word(std::mt19937& rng, int ngens, int len) {
  std::uniform_int_distribution<int> g(0, ngens - 1), s(0, 1);
  FreeWord w;
  for (int i = 0; i < len; ++i) w = wmul(w, {{g(rng), s(rng) ? 1 : -1}});
  return w;
}

}  // namespace support
