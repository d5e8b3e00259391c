#pragma once

#include "charvar.hpp"
#include "dsl.hpp"
#include "intmat.hpp"

namespace charvar {

// finite abelian cover: target group as factor list (Z/n1 x Z/n2 x ...), map
// given per component name; unnamed components map to 0
struct CoverSpec {
  std::vector<Int> factors;
  std::vector<std::pair<std::string, std::vector<Int>>> map_entries;
};

// cover spec resolved against a presentation's components
struct BoundCover {
  std::vector<Int> factors;  // s invariant factors
  IMat M;                    // s x r: component j's image in the target group
  Int index = 1;             // |target|
  Int exponent = 1;          // lcm of the factors
};

inline BoundCover bind_cover(const CoverSpec& c, const GroupPresentation& p) {
  BoundCover b;
  b.factors = c.factors;
  int s = (int)c.factors.size();
  int r = p.ncomponents();
  for (auto& n : c.factors) {
    if (n < 1) throw input_error("cover factors must be >= 1");
    b.index *= n;
    b.exponent = b.exponent / igcd(b.exponent, n) * n;
  }
  b.M.assign(s, std::vector<Int>(r, Int(0)));
  for (auto& [name, col] : c.map_entries) {
    int j = p.component_index(name);
    if ((int)col.size() != s)
      throw input_error("cover map entry for '" + name + "' has " + std::to_string(col.size()) +
                        " values, expected " + std::to_string(s));
    for (int i = 0; i < s; ++i) b.M[i][j] = imod(col[i], c.factors[i]);
  }
  // surjectivity: [M | diag(n_i)] must have all invariant factors 1
  if (s > 0) {
    IMat ext = b.M;
    for (int i = 0; i < s; ++i) {
      std::vector<Int> diag(s, Int(0));
      diag[i] = c.factors[i];
      for (int j = 0; j < s; ++j) ext[i].push_back(diag[j]);
    }
    SnfInt snf = smith_normal_form(ext);
    for (int i = 0; i < s; ++i)
      if (snf.diag[i] != 1)
        throw input_error("cover map is not surjective onto the target group");
  }
  // torsion compatibility: the map must kill every relator's component image
  for (auto& v : p.label_relations()) {
    for (int i = 0; i < s; ++i) {
      Int acc = 0;
      for (int j = 0; j < r; ++j) acc += b.M[i][j] * v[j];
      if (imod(acc, b.factors[i]) != 0)
        throw input_error("cover map is incompatible with the H1 torsion constraints");
    }
  }
  return b;
}

struct CoverCharacter {
  std::vector<Int> tuple;  // element of the target group
  CharPoint values;        // induced torus character, one value per component
  bool trivial = false;
};

// all |target| characters of the cover, in lexicographic tuple order
inline std::vector<CoverCharacter> cover_characters(const BoundCover& b, const Field& F) {
  int s = (int)b.factors.size();
  int exp = (int)checked_long(b.exponent);
  if (!F.has_root_of_unity(exp))
    throw input_error("field " + F.name() + " lacks roots of unity of order " +
                      std::to_string(exp));
  Field::Elem zeta = F.root_of_unity(exp);
  int r = s ? (int)b.M[0].size() : 0;
  std::vector<CoverCharacter> out;
  std::vector<Int> tuple(s, Int(0));
  while (true) {
    CoverCharacter cc;
    cc.tuple = tuple;
    cc.trivial = std::all_of(tuple.begin(), tuple.end(), [](const Int& x) { return x == 0; });
    cc.values.assign(r, F.one());
    for (int j = 0; j < r; ++j) {
      Int e = 0;  // exponent of zeta_exp
      for (int i = 0; i < s; ++i)
        e += tuple[i] * b.M[i][j] * (b.exponent / b.factors[i]);
      cc.values[j] = F.pow(zeta, imod(e, b.exponent));
    }
    out.push_back(std::move(cc));
    int p = s - 1;
    while (p >= 0) {
      if (++tuple[p] < b.factors[p]) break;
      tuple[p] = 0;
      --p;
    }
    if (p < 0) break;
  }
  return out;
}

struct SakumaResult {
  Int b1 = 0;
  // (character rendered as comma-joined coordinate strings, depth contribution)
  std::vector<std::pair<std::string, int>> per_character;
};

inline std::string character_key(const Field& F, const CharPoint& xs) {
  std::vector<std::string> parts;
  for (auto& x : xs) parts.push_back(F.to_string(x));
  return join(parts, ",");
}

// unbranched cover: b1 = r + sum of depths over the non-trivial cover characters
inline SakumaResult b1_unbranched(const GroupPresentation& p, const BoundCover& b) {
  if (!p.meridian_presentation())
    throw input_error("the unbranched Betti formula requires free H1 (meridian presentation)");
  Field F = cyclotomic_field((int)checked_long(b.exponent));
  AlexMatrix A = alexander_matrix(p);
  SakumaResult res;
  res.b1 = p.ncomponents();
  for (auto& cc : cover_characters(b, F)) {
    if (cc.trivial) continue;
    int d = depth(A, F, cc.values);
    res.per_character.push_back({character_key(F, cc.values), d});
    res.b1 += d;
  }
  return res;
}

// branched cover: per character, delete every component with trivial coordinate,
// then take the depth of the restricted character on the iterated-deletion matrix
inline SakumaResult b1_branched(const GroupPresentation& p, const BoundCover& b) {
  Field F = cyclotomic_field((int)checked_long(b.exponent));
  AlexMatrix A0 = alexander_matrix(p);
  SakumaResult res;
  res.b1 = 0;
  for (auto& cc : cover_characters(b, F)) {
    if (cc.trivial) continue;
    AlexMatrix A = A0;
    CharPoint xs = cc.values;
    // delete in decreasing variable order so indices stay aligned
    for (int c = p.ncomponents() - 1; c >= 0; --c) {
      int var = A.var_of_component[c];
      if (var < 0 || !F.is_one(xs[var])) continue;
      A = deletion_matrix(A, c);
      xs.erase(xs.begin() + var);
    }
    int d = depth(A, F, xs);
    res.per_character.push_back({character_key(F, cc.values), d});
    res.b1 += d;
  }
  return res;
}

// ---- Reidemeister–Schreier ----

enum class TransversalKind { Bfs, ShortLex };

struct SubgroupPresentation {
  GroupPresentation pres;
  std::vector<FreeWord> transversal;  // coset representatives in the ambient generators
  Int index = 1;
};

inline SubgroupPresentation rs_subgroup(const GroupPresentation& p, const BoundCover& b,
                                        TransversalKind kind = TransversalKind::Bfs,
                                        Int max_index = 64) {
  if (b.index > max_index)
    throw input_error("index bound exceeded: cover index " + b.index.str() + " > " +
                      max_index.str());
  int s = (int)b.factors.size();
  int n = p.ngens();

  // image of each generator in the target group
  std::vector<std::vector<Int>> gen_img(n, std::vector<Int>(s, Int(0)));
  for (int g = 0; g < n; ++g)
    for (int i = 0; i < s; ++i) gen_img[g][i] = b.M[i][p.gens[g].label];

  auto add_mod = [&](const std::vector<Int>& u, const std::vector<Int>& d, int sign) {
    std::vector<Int> v(s);
    for (int i = 0; i < s; ++i) v[i] = imod(u[i] + sign * d[i], b.factors[i]);
    return v;
  };

  std::map<std::vector<Int>, int> coset_id;
  std::vector<std::vector<Int>> cosets;
  std::vector<FreeWord> repr;
  std::vector<Int> zero(s, Int(0));
  coset_id[zero] = 0;
  cosets.push_back(zero);
  repr.push_back({});

  // breadth-first search; ShortLex explores inverse letters too, in the order
  // g1 < g1^-1 < g2 < g2^-1 < ... (shortlex-minimal representatives)
  for (size_t head = 0; head < cosets.size(); ++head) {
    for (int g = 0; g < n; ++g) {
      for (int dir : {+1, -1}) {
        if (dir < 0 && kind == TransversalKind::Bfs) continue;
        std::vector<Int> v = add_mod(cosets[head], gen_img[g], dir);
        if (!coset_id.count(v)) {
          coset_id[v] = (int)cosets.size();
          cosets.push_back(v);
          repr.push_back(wmul(repr[head], {{g, dir}}));
        }
      }
    }
  }
  Int found((long)cosets.size());
  if (found != b.index)
    throw input_error("cover map reaches only " + found.str() + " of " + b.index.str() +
                      " cosets");

  int index = (int)cosets.size();
  auto target_of = [&](int u, int g, int dir) {
    return coset_id.at(add_mod(cosets[u], gen_img[g], dir));
  };

  // Schreier generators: one per (coset, generator) pair whose edge word does not
  // freely reduce into the transversal
  SubgroupPresentation sp;
  sp.index = b.index;
  sp.transversal = repr;
  std::vector<std::vector<int>> sgen(index, std::vector<int>(n, -1));
  for (int u = 0; u < index; ++u) {
    for (int g = 0; g < n; ++g) {
      int v = target_of(u, g, +1);
      FreeWord w = wmul(wmul(repr[u], {{g, 1}}), winv(repr[v]));
      if (w.empty()) continue;  // tree edge: trivial Schreier generator
      sgen[u][g] = (int)sp.pres.gens.size();
      sp.pres.gens.push_back({p.gens[g].name + "_" + std::to_string(u), p.gens[g].label});
    }
  }
  sp.pres.components = p.components;

  // rewrite each relator conjugate t_u r t_u^-1 through the coset walk
  for (auto& r : p.rels) {
    for (int u = 0; u < index; ++u) {
      FreeWord out;
      int cur = u;
      for (auto [g, e] : r) {
        if (e > 0) {
          for (int i = 0; i < e; ++i) {
            if (sgen[cur][g] >= 0) out.push_back({sgen[cur][g], 1});
            cur = target_of(cur, g, +1);
          }
        } else {
          for (int i = 0; i < -e; ++i) {
            cur = target_of(cur, g, -1);
            if (sgen[cur][g] >= 0) out.push_back({sgen[cur][g], -1});
          }
        }
      }
      FreeWord red = reduce(out);
      if (!red.empty()) sp.pres.rels.push_back(std::move(red));
    }
  }
  return sp;
}

inline AbelianStructure abelianization_invariants(const GroupPresentation& p) {
  std::vector<std::vector<Int>> rows;
  for (auto& r : p.rels) rows.push_back(exponent_vector(r, p.ngens()));
  return abelian_structure(rows, p.ngens());
}

// ---- DSL ----
// cover: Z/2 x Z/4
// map: conic -> (1,0), quartic -> (0,1)     (single-factor: conic -> 1)
inline CoverSpec parse_cover_spec(const std::string& text) {
  CoverSpec c;
  bool have_cover = false;
  for (LineLexer& lx : dsl_statements(text)) {
    size_t at = lx.pos;
    std::string key = lx.name();
    lx.expect(':');
    if (key == "cover") {
      if (have_cover) lx.fail("duplicate cover declaration", at);
      have_cover = true;
      while (true) {
        size_t zat = lx.pos;
        if (lx.name() != "Z") lx.fail("expected 'Z/<n>'", zat);
        lx.expect('/');
        long v = lx.integer();
        if (v < 1) lx.fail("cover factor must be >= 1", zat);
        c.factors.push_back(Int(v));
        if (lx.at_end()) break;
        size_t xat = lx.pos;
        if (lx.name() != "x") lx.fail("expected 'x' between factors", xat);
      }
    } else if (key == "map") {
      while (!lx.at_end()) {
        std::string comp = lx.name();
        lx.expect('-');
        lx.expect('>');
        std::vector<Int> col;
        if (lx.accept('(')) {
          col.push_back(Int(lx.integer()));
          while (lx.accept(',')) col.push_back(Int(lx.integer()));
          lx.expect(')');
        } else {
          col.push_back(Int(lx.integer()));
        }
        c.map_entries.push_back({comp, std::move(col)});
        if (!lx.accept(',')) break;
      }
      if (!lx.at_end()) lx.fail("unexpected trailing input");
    } else {
      lx.fail("unknown statement '" + key + "'", at);
    }
  }
  if (!have_cover) throw input_error("cover spec has no 'cover:' line");
  return c;
}

// inline shorthand "<component>:Z/<n>": cyclic cover sending that component's
// meridian to 1 and every other component to 0
inline CoverSpec parse_cover_arg(const std::string& arg) {
  size_t colon = arg.find(':');
  if (colon != std::string::npos) {
    std::string comp = arg.substr(0, colon);
    std::string grp = arg.substr(colon + 1);
    if (grp.rfind("Z/", 0) == 0 && comp.find('/') == std::string::npos &&
        comp.find(' ') == std::string::npos) {
      CoverSpec c;
      try {
        long v = std::stol(grp.substr(2));
        if (v < 1) throw std::invalid_argument("");
        c.factors.push_back(Int(v));
      } catch (const std::exception&) {
        throw input_error("bad cover shorthand: " + arg);
      }
      c.map_entries.push_back({comp, {Int(1)}});
      return c;
    }
  }
  // otherwise treat the argument as a cover-spec file path
  return parse_cover_spec(read_text_file(arg));
}

}  // namespace charvar
