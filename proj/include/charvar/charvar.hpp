#pragma once

#include <cstdlib>

#include "fox.hpp"

namespace charvar {

using CharPoint = std::vector<Field::Elem>;

inline Int enumeration_budget(Int override_budget = -1) {
  if (override_budget >= 0) return override_budget;
  if (const char* env = std::getenv("CHARVAR_BUDGET")) {
    try {
      Int b(env);
      if (b <= 0) throw std::runtime_error("");
      return b;
    } catch (const std::exception&) {
      throw input_error(std::string("invalid CHARVAR_BUDGET value: ") + env);
    }
  }
  return Int(10'000'000);
}

inline bool is_trivial_point(const Field& F, const CharPoint& xs) {
  for (auto& x : xs)
    if (!F.is_one(x)) return false;
  return true;
}

// a character must have one non-zero coordinate per active variable and kill
// every torsion constraint of the presentation's H1
inline void check_character(const AlexMatrix& A, const Field& F, const CharPoint& xs) {
  if ((int)xs.size() != A.nvars())
    throw input_error("character has " + std::to_string(xs.size()) + " coordinates, expected " +
                      std::to_string(A.nvars()));
  for (auto& x : xs)
    if (F.is_zero(x)) throw input_error("character coordinates must be non-zero");
  for (auto& v : A.constraints) {
    Field::Elem acc = F.one();
    for (size_t i = 0; i < v.size(); ++i)
      if (v[i] != 0) acc = F.mul(acc, F.pow(xs[i], v[i]));
    if (!F.is_one(acc))
      throw input_error("character violates an H1 torsion constraint");
  }
}

inline bool satisfies_constraints(const AlexMatrix& A, const Field& F, const CharPoint& xs) {
  for (auto& v : A.constraints) {
    Field::Elem acc = F.one();
    for (size_t i = 0; i < v.size(); ++i)
      if (v[i] != 0) acc = F.mul(acc, F.pow(xs[i], v[i]));
    if (!F.is_one(acc)) return false;
  }
  return true;
}

// depth(ξ) := n_gens − 1 − rank(matrix at ξ), clamped at 0; undefined at 1̄
inline int depth(const AlexMatrix& A, const Field& F, const CharPoint& xs) {
  check_character(A, F, xs);
  if (is_trivial_point(F, xs))
    throw input_error("depth undefined at the trivial character");
  int rank = matrix_rank(F, eval_matrix(A.M, F, xs));
  int d = A.pres.ngens() - 1 - rank;
  return d < 0 ? 0 : d;
}

inline CharPoint restrict_point(const CharPoint& xs, int drop) {
  CharPoint out;
  out.reserve(xs.size() - 1);
  for (int i = 0; i < (int)xs.size(); ++i)
    if (i != drop) out.push_back(xs[i]);
  return out;
}

struct CharSlice {
  Field F;
  int k = 1;
  std::vector<CharPoint> points;  // canonical (lexicographic) order, origin excluded
  std::string provenance;
};

// all characters of the active torus over a finite field, in lexicographic order
// by the field's canonical unit ordering; constraint-filtered
template <typename Fn>
inline void for_each_character(const AlexMatrix& A, const Field& F, Int budget, Fn&& fn) {
  if (F.kind == FieldKind::Rationals || F.kind == FieldKind::Cyclotomic)
    throw input_error(
        "character enumeration requires a finite field; use a torsion scan over Q(zeta_N)");
  int r = A.nvars();
  std::vector<Field::Elem> units = F.units();
  Int total = ipow(Int((long)units.size()), (unsigned long)r);
  if (total > budget)
    throw budget_error("enumeration size (q-1)^r = " + total.str() + " exceeds budget " +
                       budget.str());
  std::vector<size_t> idx(r, 0);
  CharPoint xs(r, F.one());
  while (true) {
    if (satisfies_constraints(A, F, xs)) fn(xs);
    int p = r - 1;
    while (p >= 0) {
      if (++idx[p] < units.size()) {
        xs[p] = units[idx[p]];
        break;
      }
      idx[p] = 0;
      xs[p] = units[0];
      --p;
    }
    if (p < 0) break;
  }
}

inline CharSlice enumerate_char(const AlexMatrix& A, const Field& F, int k,
                                Int budget_override = -1) {
  CharSlice out;
  out.F = F;
  out.k = k;
  Int budget = enumeration_budget(budget_override);
  for_each_character(A, F, budget, [&](const CharPoint& xs) {
    if (is_trivial_point(F, xs)) return;
    if (depth(A, F, xs) >= k) out.points.push_back(xs);
  });
  return out;
}

// torsion points of order dividing N over Q(zeta_N), scanned as exponent tuples
inline CharSlice torsion_scan(const AlexMatrix& A, int N, int k, Int budget_override = -1) {
  if (N < 1) throw input_error("torsion order must be >= 1");
  Field F = cyclotomic_field(N);
  CharSlice out;
  out.F = F;
  out.k = k;
  Int budget = enumeration_budget(budget_override);
  int r = A.nvars();
  Int total = ipow(Int(N), (unsigned long)r);
  if (total > budget)
    throw budget_error("torsion scan size N^r = " + total.str() + " exceeds budget " +
                       budget.str());
  Field::Elem zeta = F.root_of_unity(N);
  std::vector<Field::Elem> powers(N);
  powers[0] = F.one();
  for (int i = 1; i < N; ++i) powers[i] = F.mul(powers[i - 1], zeta);
  std::vector<int> a(r, 0);
  CharPoint xs(r, F.one());
  while (true) {
    bool origin = std::all_of(a.begin(), a.end(), [](int x) { return x == 0; });
    if (!origin && satisfies_constraints(A, F, xs) && depth(A, F, xs) >= k)
      out.points.push_back(xs);
    int p = r - 1;
    while (p >= 0) {
      if (++a[p] < N) {
        xs[p] = powers[a[p]];
        break;
      }
      a[p] = 0;
      xs[p] = powers[0];
      --p;
    }
    if (p < 0) break;
  }
  return out;
}

struct ClassifiedPoint {
  CharPoint point;
  bool is_coordinate = false;
  std::vector<int> vanishing;  // active variables whose coordinate equals 1
  bool is_essential = false;
  std::vector<int> witnesses;  // vanishing variables whose deletion variety contains the point
};

// map active variable index back to the presentation's component index
inline int component_of_var(const AlexMatrix& A, int var) {
  for (int c = 0; c < (int)A.var_of_component.size(); ++c)
    if (A.var_of_component[c] == var) return c;
  throw input_error("no component for variable index " + std::to_string(var));
}

inline ClassifiedPoint classify_point(const AlexMatrix& A, const Field& F, const CharPoint& xs,
                                      int k) {
  ClassifiedPoint cp;
  cp.point = xs;
  for (int i = 0; i < (int)xs.size(); ++i)
    if (F.is_one(xs[i])) cp.vanishing.push_back(i);
  cp.is_coordinate = !cp.vanishing.empty();
  if (!cp.is_coordinate) {
    cp.is_essential = true;  // non-coordinate points cannot come from a deletion embedding
    return cp;
  }
  for (int var : cp.vanishing) {
    AlexMatrix B = deletion_matrix(A, component_of_var(A, var));
    if (depth(B, F, restrict_point(xs, var)) >= k) cp.witnesses.push_back(var);
  }
  cp.is_essential = cp.witnesses.empty();
  return cp;
}

inline std::vector<ClassifiedPoint> classify(const AlexMatrix& A, const Field& F,
                                             const std::vector<CharPoint>& points, int k) {
  std::vector<ClassifiedPoint> out;
  out.reserve(points.size());
  for (auto& xs : points) out.push_back(classify_point(A, F, xs, k));
  return out;
}

struct EssentialReport {
  bool present = false;
  std::vector<CharPoint> witnesses;
};

// is some point of Char*_k with trivial coordinate at the component NOT explained
// by the deletion embedding of that component?
inline EssentialReport has_essential_coordinate(const AlexMatrix& A, int comp, const Field& F,
                                                int k, Int budget_override = -1) {
  int var = A.var_of_component[comp];
  if (var < 0) throw input_error("component '" + A.pres.components[comp] + "' already deleted");
  EssentialReport rep;
  CharSlice slice = enumerate_char(A, F, k, budget_override);
  AlexMatrix B = deletion_matrix(A, comp);
  for (auto& xs : slice.points) {
    if (!F.is_one(xs[var])) continue;
    if (depth(B, F, restrict_point(xs, var)) < k) {
      rep.present = true;
      rep.witnesses.push_back(xs);
    }
  }
  return rep;
}

// membership via the Fitting ideal one level up: all generators of F_{k+1} vanish
inline bool fitting_membership(const AlexMatrix& A, const Field& F, const CharPoint& xs, int k) {
  check_character(A, F, xs);
  return fitting_vanishes(A.M, k + 1, F, xs);
}

}  // namespace charvar
