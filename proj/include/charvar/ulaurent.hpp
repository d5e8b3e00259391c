#pragma once

#include "field.hpp"

namespace charvar {

// univariate Laurent polynomial over a coefficient field:
// value = sum_i c[i] * t^(off+i); invariant: c empty, or c.front() and c.back() non-zero
struct ULaurent {
  int off = 0;
  std::vector<Field::Elem> c;
};

// ring operations for ULaurent over a fixed field
struct LaurentRing {
  Field F;

  explicit LaurentRing(Field f) : F(std::move(f)) {}

  ULaurent zero() const { return {}; }
  ULaurent one() const { return {0, {F.one()}}; }
  ULaurent t_power(int k) const { return {k, {F.one()}}; }
  ULaurent constant(const Field::Elem& a) const {
    if (F.is_zero(a)) return {};
    return {0, {a}};
  }

  ULaurent normalize(int off, std::vector<Field::Elem> v) const {
    size_t lo = 0, hi = v.size();
    while (lo < hi && F.is_zero(v[lo])) ++lo;
    while (hi > lo && F.is_zero(v[hi - 1])) --hi;
    if (lo == hi) return {};
    return {off + (int)lo, std::vector<Field::Elem>(v.begin() + lo, v.begin() + hi)};
  }

  bool is_zero(const ULaurent& f) const { return f.c.empty(); }
  // units of the Laurent ring: a * t^k with a != 0
  bool is_unit(const ULaurent& f) const { return f.c.size() == 1; }
  // Euclidean size: degree of the polynomial part after factoring out t^off
  int delta(const ULaurent& f) const { return f.c.empty() ? -1 : (int)f.c.size() - 1; }

  bool eq(const ULaurent& a, const ULaurent& b) const {
    if (a.c.size() != b.c.size()) return false;
    if (a.c.empty()) return true;
    if (a.off != b.off) return false;
    for (size_t i = 0; i < a.c.size(); ++i)
      if (!F.eq(a.c[i], b.c[i])) return false;
    return true;
  }

  ULaurent add(const ULaurent& a, const ULaurent& b) const {
    if (a.c.empty()) return b;
    if (b.c.empty()) return a;
    int lo = std::min(a.off, b.off);
    int hi = std::max(a.off + (int)a.c.size(), b.off + (int)b.c.size());
    std::vector<Field::Elem> v(hi - lo, F.zero());
    for (size_t i = 0; i < a.c.size(); ++i) v[a.off - lo + i] = F.add(v[a.off - lo + i], a.c[i]);
    for (size_t i = 0; i < b.c.size(); ++i) v[b.off - lo + i] = F.add(v[b.off - lo + i], b.c[i]);
    return normalize(lo, std::move(v));
  }
  ULaurent neg(const ULaurent& a) const {
    ULaurent r = a;
    for (auto& x : r.c) x = F.neg(x);
    return r;
  }
  ULaurent sub(const ULaurent& a, const ULaurent& b) const { return add(a, neg(b)); }
  ULaurent mul(const ULaurent& a, const ULaurent& b) const {
    if (a.c.empty() || b.c.empty()) return {};
    std::vector<Field::Elem> v(a.c.size() + b.c.size() - 1, F.zero());
    for (size_t i = 0; i < a.c.size(); ++i)
      for (size_t j = 0; j < b.c.size(); ++j)
        v[i + j] = F.add(v[i + j], F.mul(a.c[i], b.c[j]));
    return normalize(a.off + b.off, std::move(v));
  }
  ULaurent scale(const ULaurent& a, const Field::Elem& s) const {
    if (F.is_zero(s)) return {};
    ULaurent r = a;
    for (auto& x : r.c) x = F.mul(x, s);
    return r;
  }

  // division with remainder in the Laurent ring: a = q*b + r with delta(r) < delta(b)
  std::pair<ULaurent, ULaurent> divmod(const ULaurent& a, const ULaurent& b) const {
    if (b.c.empty()) throw input_error("division by zero");
    if (a.c.empty()) return {{}, {}};
    // divide the polynomial parts, then restore the t-power shift
    std::vector<Field::Elem> rem = a.c;
    std::vector<Field::Elem> quo(rem.size() > b.c.size() ? rem.size() - b.c.size() + 1 : 1,
                                 F.zero());
    Field::Elem lead_inv = F.inv(b.c.back());
    for (int i = (int)rem.size() - 1; i >= (int)b.c.size() - 1; --i) {
      if (F.is_zero(rem[i])) continue;
      Field::Elem q = F.mul(rem[i], lead_inv);
      int shift = i - ((int)b.c.size() - 1);
      quo[shift] = q;
      for (size_t j = 0; j < b.c.size(); ++j)
        rem[shift + j] = F.sub(rem[shift + j], F.mul(q, b.c[j]));
    }
    return {normalize(a.off - b.off, std::move(quo)), normalize(a.off, std::move(rem))};
  }

  bool divides(const ULaurent& a, const ULaurent& b) const {
    if (b.c.empty()) return true;
    if (a.c.empty()) return false;
    return is_zero(divmod(b, a).second);
  }

  // associate normal form: monic polynomial with zero t-offset; also returns the unit
  // u with u * f = result
  ULaurent monic_associate(const ULaurent& f, ULaurent* unit_out = nullptr) const {
    if (f.c.empty()) {
      if (unit_out) *unit_out = one();
      return {};
    }
    ULaurent u{-f.off, {F.inv(f.c.back())}};
    if (unit_out) *unit_out = u;
    return mul(u, f);
  }

  std::string to_string(const ULaurent& f, const std::string& var = "t") const {
    if (f.c.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = (int)f.c.size() - 1; i >= 0; --i) {
      if (F.is_zero(f.c[i])) continue;
      int e = f.off + i;
      std::string coef = F.to_string(f.c[i]);
      bool neg_coef = false;
      if (!coef.empty() && coef[0] == '-' && coef.find_first_of("+-", 1) == std::string::npos) {
        neg_coef = true;
        coef = coef.substr(1);
      }
      if (!first)
        os << (neg_coef ? "-" : "+");
      else if (neg_coef)
        os << "-";
      bool wrap = coef.find_first_of("+-") != std::string::npos;
      std::string mono;
      if (e != 0) {
        mono = var;
        if (e != 1) mono += "^" + std::to_string(e);
      }
      if (mono.empty()) {
        os << (wrap ? "(" + coef + ")" : coef);
      } else if (coef == "1") {
        os << mono;
      } else {
        os << (wrap ? "(" + coef + ")" : coef) << "*" << mono;
      }
      first = false;
    }
    return os.str();
  }
};

using UMat = std::vector<std::vector<ULaurent>>;

struct SnfLaurent {
  UMat U, V;           // unimodular over the Laurent ring: U * A * V = diag
  std::vector<ULaurent> diag;  // monic, zero offset, each dividing the next
  int rows = 0, cols = 0;
};

inline UMat ulaurent_identity(const LaurentRing& R, int n) {
  UMat I(n, std::vector<ULaurent>(n));
  for (int i = 0; i < n; ++i) I[i][i] = R.one();
  return I;
}

inline UMat ulaurent_mat_mul(const LaurentRing& R, const UMat& A, const UMat& B) {
  int m = (int)A.size(), k = A.empty() ? 0 : (int)A[0].size(), n = B.empty() ? 0 : (int)B[0].size();
  UMat C(m, std::vector<ULaurent>(n));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) {
      ULaurent s;
      for (int l = 0; l < k; ++l) s = R.add(s, R.mul(A[i][l], B[l][j]));
      C[i][j] = s;
    }
  return C;
}

// Smith normal form over the univariate Laurent ring (a Euclidean domain):
// returns U, V with U*A*V diagonal, invariant factors monic with zero offset
inline SnfLaurent smith_normal_form(const LaurentRing& R, UMat a) {
  SnfLaurent s;
  s.rows = (int)a.size();
  s.cols = s.rows ? (int)a[0].size() : 0;
  int m = s.rows, n = s.cols;
  s.U = ulaurent_identity(R, m);
  s.V = ulaurent_identity(R, n);

  auto row_sub = [&](UMat& M, int dst, int src, const ULaurent& q) {
    for (auto j = 0u; j < M[dst].size(); ++j) M[dst][j] = R.sub(M[dst][j], R.mul(q, M[src][j]));
  };
  auto col_sub = [&](UMat& M, int dst, int src, const ULaurent& q) {
    for (auto i = 0u; i < M.size(); ++i) M[i][dst] = R.sub(M[i][dst], R.mul(q, M[i][src]));
  };
  auto row_swap = [&](UMat& M, int i, int j) { std::swap(M[i], M[j]); };
  auto col_swap = [&](UMat& M, int i, int j) {
    for (auto r = 0u; r < M.size(); ++r) std::swap(M[r][i], M[r][j]);
  };

  int t = 0;
  while (t < m && t < n) {
    // choose a non-zero entry of minimal Euclidean size as pivot
    int pi = -1, pj = -1, best = -1;
    for (int i = t; i < m; ++i)
      for (int j = t; j < n; ++j)
        if (!R.is_zero(a[i][j]) && (best < 0 || R.delta(a[i][j]) < best)) {
          best = R.delta(a[i][j]);
          pi = i;
          pj = j;
        }
    if (pi < 0) break;
    if (pi != t) {
      row_swap(a, t, pi);
      row_swap(s.U, t, pi);
    }
    if (pj != t) {
      col_swap(a, t, pj);
      col_swap(s.V, t, pj);
    }

    bool clean = true;
    for (int i = t + 1; i < m; ++i) {
      if (R.is_zero(a[i][t])) continue;
      auto [q, r] = R.divmod(a[i][t], a[t][t]);
      row_sub(a, i, t, q);
      row_sub(s.U, i, t, q);
      if (!R.is_zero(r)) clean = false;
    }
    for (int j = t + 1; j < n; ++j) {
      if (R.is_zero(a[t][j])) continue;
      auto [q, r] = R.divmod(a[t][j], a[t][t]);
      col_sub(a, j, t, q);
      col_sub(s.V, j, t, q);
      if (!R.is_zero(r)) clean = false;
    }
    if (!clean) continue;

    bool divides_rest = true;
    for (int i = t + 1; i < m && divides_rest; ++i)
      for (int j = t + 1; j < n && divides_rest; ++j)
        if (!R.divides(a[t][t], a[i][j])) {
          // fold the offending row into the pivot row to shrink the pivot
          for (int jj = t; jj < n; ++jj) a[t][jj] = R.add(a[t][jj], a[i][jj]);
          for (int jj = 0; jj < m; ++jj) s.U[t][jj] = R.add(s.U[t][jj], s.U[i][jj]);
          divides_rest = false;
        }
    if (!divides_rest) continue;

    // normalise the pivot to its monic zero-offset associate
    ULaurent unit;
    a[t][t] = R.monic_associate(a[t][t], &unit);
    for (int jj = 0; jj < m; ++jj) s.U[t][jj] = R.mul(unit, s.U[t][jj]);
    ++t;
  }

  s.diag.resize(std::min(m, n));
  for (int i = 0; i < std::min(m, n); ++i) s.diag[i] = a[i][i];
  return s;
}

// non-unit invariant factors (monic, zero offset), in divisibility order
inline std::vector<ULaurent> laurent_invariant_factors(const LaurentRing& R, const UMat& a) {
  SnfLaurent s = smith_normal_form(R, a);
  std::vector<ULaurent> out;
  for (auto& d : s.diag)
    if (!R.is_zero(d) && !R.is_unit(d)) out.push_back(d);
  return out;
}

}  // namespace charvar
