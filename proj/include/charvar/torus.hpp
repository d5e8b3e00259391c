#pragma once

#include "charvar.hpp"
#include "dsl.hpp"
#include "intmat.hpp"

namespace charvar {

// one monomial equation on the torus: t^v = 1, t^v = zeta_N^c, or t^v = t^w
struct MonomialEquation {
  enum class Rhs { One, Root, Vec };
  std::vector<Int> v;
  Rhs rhs = Rhs::One;
  int N = 1, c = 0;    // when rhs == Root
  std::vector<Int> w;  // when rhs == Vec
};

// finite union of pieces (conjunctions of monomial equations), intersected with
// a global conjunction; describes a torsion-translated subtorus set
struct TorsionSubtorusSet {
  int r = 0;
  std::vector<std::string> coord_names;
  std::vector<std::vector<MonomialEquation>> pieces;
  std::vector<MonomialEquation> global;
};

// integer matrix with |det| = 1 acting on the exponent lattice; columns are the
// images of the source basis vectors in target coordinates
struct LatticeAuto {
  IMat A;
  std::vector<std::string> source, target;
};

namespace detail {
inline Field::Elem eval_monomial(const Field& F, const CharPoint& xs, const std::vector<Int>& v) {
  Field::Elem acc = F.one();
  for (size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) acc = F.mul(acc, F.pow(xs[i], v[i]));
  return acc;
}

// satisfied, or unsatisfiable in this field (missing root of unity)
inline bool equation_holds(const Field& F, const CharPoint& xs, const MonomialEquation& eq) {
  Field::Elem lhs = eval_monomial(F, xs, eq.v);
  switch (eq.rhs) {
    case MonomialEquation::Rhs::One:
      return F.is_one(lhs);
    case MonomialEquation::Rhs::Root: {
      if (!F.has_root_of_unity(eq.N)) return false;  // piece is empty in this field
      Field::Elem rhs = F.pow(F.root_of_unity(eq.N), eq.c);
      return F.eq(lhs, rhs);
    }
    case MonomialEquation::Rhs::Vec:
      return F.eq(lhs, eval_monomial(F, xs, eq.w));
  }
  return false;
}
}  // namespace detail

inline bool member(const TorsionSubtorusSet& S, const Field& F, const CharPoint& xs) {
  if ((int)xs.size() != S.r)
    throw input_error("point has " + std::to_string(xs.size()) + " coordinates, expected " +
                      std::to_string(S.r));
  for (auto& eq : S.global)
    if (!detail::equation_holds(F, xs, eq)) return false;
  for (auto& piece : S.pieces) {
    bool ok = true;
    for (auto& eq : piece)
      if (!detail::equation_holds(F, xs, eq)) {
        ok = false;
        break;
      }
    if (ok) return true;
  }
  return false;
}

inline std::vector<CharPoint> enumerate_set(const TorsionSubtorusSet& S, const Field& F,
                                            Int budget_override = -1) {
  if (F.kind != FieldKind::Finite)
    throw input_error("set enumeration requires a finite field");
  Int budget = enumeration_budget(budget_override);
  std::vector<Field::Elem> units = F.units();
  Int total = ipow(Int((long)units.size()), (unsigned long)S.r);
  if (total > budget)
    throw budget_error("enumeration size (q-1)^r = " + total.str() + " exceeds budget " +
                       budget.str());
  std::vector<CharPoint> out;
  std::vector<size_t> idx(S.r, 0);
  CharPoint xs(S.r, F.one());
  while (true) {
    if (member(S, F, xs)) out.push_back(xs);
    int p = S.r - 1;
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
  return out;
}

// transform the set through a lattice automorphism: points map contravariantly
// (ξ ↦ ξ∘A⁻¹), so equations transform by v ↦ A·v
inline TorsionSubtorusSet image(const TorsionSubtorusSet& S, const LatticeAuto& phi) {
  int r = S.r;
  if ((int)phi.A.size() != r)
    throw input_error("matrix size does not match the set's coordinate count");
  if (!phi.source.empty() && phi.source != S.coord_names)
    throw input_error("map source coordinates do not match the set's coordinates");
  Int d = idet(phi.A);
  if (d != 1 && d != -1)
    throw input_error("matrix is not unimodular (det = " + d.str() + ")");
  auto push = [&](const std::vector<Int>& v) { return mat_vec(phi.A, v); };
  TorsionSubtorusSet out;
  out.r = r;
  out.coord_names = phi.target.empty() ? S.coord_names : phi.target;
  auto transform = [&](const MonomialEquation& eq) {
    MonomialEquation e2 = eq;
    e2.v = push(eq.v);
    if (eq.rhs == MonomialEquation::Rhs::Vec) e2.w = push(eq.w);
    return e2;
  };
  for (auto& eq : S.global) out.global.push_back(transform(eq));
  for (auto& piece : S.pieces) {
    std::vector<MonomialEquation> p2;
    for (auto& eq : piece) p2.push_back(transform(eq));
    out.pieces.push_back(std::move(p2));
  }
  return out;
}

struct PieceReport {
  bool coordinate = false;
  std::vector<int> forced;  // coordinates forced to 1 by the piece (+ global) equations
};

// lattice of exponent vectors forced to 1: v for t^v=1, v−w for t^v=t^w, N·v for
// t^v=ζ_N^c; a piece is coordinate iff some basis vector e_i lies in that lattice.
// only the piece's own equations count: the global conjunction is ambient, so the
// report stays aligned with the per-piece description of the set
inline std::vector<PieceReport> coordinate_pieces(const TorsionSubtorusSet& S) {
  auto forced_rows = [&](const std::vector<MonomialEquation>& eqs, std::vector<std::vector<Int>>& L) {
    for (auto& eq : eqs) {
      switch (eq.rhs) {
        case MonomialEquation::Rhs::One:
          L.push_back(eq.v);
          break;
        case MonomialEquation::Rhs::Vec: {
          std::vector<Int> d(S.r);
          for (int i = 0; i < S.r; ++i) d[i] = eq.v[i] - eq.w[i];
          L.push_back(std::move(d));
          break;
        }
        case MonomialEquation::Rhs::Root: {
          std::vector<Int> d(S.r);
          for (int i = 0; i < S.r; ++i) d[i] = eq.v[i] * eq.N;
          L.push_back(std::move(d));
          break;
        }
      }
    }
  };
  std::vector<PieceReport> out;
  for (auto& piece : S.pieces) {
    std::vector<std::vector<Int>> L;
    forced_rows(piece, L);
    PieceReport rep;
    for (int i = 0; i < S.r; ++i) {
      std::vector<Int> e(S.r, Int(0));
      e[i] = 1;
      if (lattice_contains(L, e)) rep.forced.push_back(i);
    }
    rep.coordinate = !rep.forced.empty();
    out.push_back(std::move(rep));
  }
  return out;
}

// ---- DSL ----
// coords: r1 r2 r3 l1 l2 l3 q
// global: t[q]=1
// piece: t[l1]*t[l2]*t[l3]=1, t[r1]=1, ...        (rhs: 1, zeta(N,c), or a monomial)
namespace detail {
inline std::vector<Int> parse_monomial(LineLexer& lx, const std::map<std::string, int>& coord,
                                       int r) {
  std::vector<Int> v(r, Int(0));
  while (true) {
    size_t at = lx.pos;
    std::string t = lx.name();
    if (t != "t") lx.fail("expected 't[<coord>]'", at);
    lx.expect('[');
    size_t nat = lx.pos;
    std::string nm = lx.name();
    auto it = coord.find(nm);
    if (it == coord.end()) lx.fail("unknown coordinate '" + nm + "'", nat);
    lx.expect(']');
    long e = 1;
    if (lx.accept('^')) e = lx.integer();
    v[it->second] += e;
    if (!lx.accept('*')) break;
  }
  return v;
}

inline MonomialEquation parse_equation(LineLexer& lx, const std::map<std::string, int>& coord,
                                       int r) {
  MonomialEquation eq;
  eq.v = parse_monomial(lx, coord, r);
  lx.expect('=');
  if (lx.int_ahead()) {
    size_t at = lx.pos;
    if (lx.integer() != 1) lx.fail("right-hand side must be 1, zeta(N,c), or a monomial", at);
    eq.rhs = MonomialEquation::Rhs::One;
  } else {
    size_t at = lx.pos;
    if (lx.peek() == 't') {
      eq.rhs = MonomialEquation::Rhs::Vec;
      eq.w = parse_monomial(lx, coord, r);
    } else {
      std::string nm = lx.name();
      if (nm != "zeta") lx.fail("right-hand side must be 1, zeta(N,c), or a monomial", at);
      lx.expect('(');
      eq.N = (int)lx.integer();
      lx.expect(',');
      eq.c = (int)lx.integer();
      lx.expect(')');
      if (eq.N < 1) lx.fail("zeta order must be >= 1", at);
      eq.rhs = MonomialEquation::Rhs::Root;
    }
  }
  return eq;
}
}  // namespace detail

inline TorsionSubtorusSet parse_torus_set(const std::string& text) {
  TorsionSubtorusSet S;
  std::map<std::string, int> coord;
  bool have_coords = false;
  for (LineLexer& lx : dsl_statements(text)) {
    size_t at = lx.pos;
    std::string key = lx.name();
    lx.expect(':');
    if (key == "coords") {
      if (have_coords) lx.fail("duplicate coords declaration", at);
      while (!lx.at_end()) {
        size_t nat = lx.pos;
        std::string nm = lx.name();
        if (coord.count(nm)) lx.fail("duplicate coordinate '" + nm + "'", nat);
        coord[nm] = (int)S.coord_names.size();
        S.coord_names.push_back(nm);
      }
      S.r = (int)S.coord_names.size();
      have_coords = true;
    } else if (key == "global" || key == "piece") {
      if (!have_coords) lx.fail("coords must be declared before equations", at);
      std::vector<MonomialEquation> eqs;
      if (!lx.at_end()) {
        eqs.push_back(detail::parse_equation(lx, coord, S.r));
        while (lx.accept(',')) eqs.push_back(detail::parse_equation(lx, coord, S.r));
        if (!lx.at_end()) lx.fail("unexpected trailing input");
      }
      if (key == "global")
        S.global.insert(S.global.end(), eqs.begin(), eqs.end());
      else
        S.pieces.push_back(std::move(eqs));
    } else {
      lx.fail("unknown statement '" + key + "'", at);
    }
  }
  if (!have_coords) throw input_error("torus set declares no coordinates");
  if (S.pieces.empty()) S.pieces.push_back({});  // global-only file: one full-torus piece
  return S;
}

// source: r1 r2 r3 ... ; target: e1 e2 e3 ... ; row: <r integers> (target rows,
// source columns; column j = image of source basis vector j)
inline LatticeAuto parse_lattice_auto(const std::string& text) {
  LatticeAuto phi;
  for (LineLexer& lx : dsl_statements(text)) {
    size_t at = lx.pos;
    std::string key = lx.name();
    lx.expect(':');
    if (key == "source" || key == "target") {
      auto& names = key == "source" ? phi.source : phi.target;
      while (!lx.at_end()) names.push_back(lx.name());
    } else if (key == "row") {
      std::vector<Int> row;
      while (!lx.at_end()) row.push_back(Int(lx.integer()));
      phi.A.push_back(std::move(row));
    } else {
      lx.fail("unknown statement '" + key + "'", at);
    }
  }
  if (phi.A.empty()) throw input_error("lattice map has no rows");
  size_t r = phi.A.size();
  for (auto& row : phi.A)
    if (row.size() != r) throw input_error("lattice map must be square");
  if (!phi.source.empty() && phi.source.size() != r)
    throw input_error("source coordinate count does not match matrix size");
  if (!phi.target.empty() && phi.target.size() != r)
    throw input_error("target coordinate count does not match matrix size");
  return phi;
}

inline TorsionSubtorusSet load_torus_set(const std::string& path) {
  return parse_torus_set(read_text_file(path));
}
inline LatticeAuto load_lattice_auto(const std::string& path) {
  return parse_lattice_auto(read_text_file(path));
}

}  // namespace charvar
