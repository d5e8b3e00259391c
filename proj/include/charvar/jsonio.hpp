// canonical JSON emitters for the CLI; ordered_json keeps key order stable so
// output is byte-identical across runs
#pragma once

#include "charvar/charvar.hpp"
#include "charvar/covers.hpp"
#include "charvar/torus.hpp"

#include "json.hpp"

namespace charvar {

using Json = nlohmann::ordered_json;

inline Json point_json(const Field& F, const CharPoint& xs) {
  Json a = Json::array();
  for (auto& x : xs) a.push_back(F.to_string(x));
  return a;
}

inline Json alexander_json(const AlexMatrix& A) {
  Json j;
  j["rows"] = A.M.rows;
  j["cols"] = A.M.cols;
  j["variables"] = A.var_names();
  j["row_labels"] = A.M.row_labels;
  j["col_labels"] = A.M.col_labels;
  Json rows = Json::array();
  auto vars = A.var_names();
  for (int i = 0; i < A.M.rows; ++i) {
    Json row = Json::array();
    for (int jj = 0; jj < A.M.cols; ++jj) {
      // one entry = list of (exponent vector, coefficient) terms, lex order
      Json terms = Json::array();
      for (auto& [e, c] : A.M.entries[i][jj].terms) {
        Json exps = Json::array();
        for (int x : e) exps.push_back(x);
        terms.push_back(Json::array({exps, c.str()}));
      }
      row.push_back(terms);
    }
    rows.push_back(row);
  }
  j["entries"] = rows;
  Json disp = Json::array();
  for (int i = 0; i < A.M.rows; ++i) {
    Json row = Json::array();
    for (int jj = 0; jj < A.M.cols; ++jj) row.push_back(A.M.entries[i][jj].to_string(vars));
    disp.push_back(row);
  }
  j["display"] = disp;
  if (!A.constraints.empty()) {
    Json cs = Json::array();
    for (auto& c : A.constraints) {
      Json v = Json::array();
      for (auto& e : c) v.push_back(e.str());
      cs.push_back(v);
    }
    j["constraints"] = cs;
  }
  return j;
}

inline Json charvar_json(const CharSlice& s) {
  Json j;
  j["field"] = s.F.name();
  j["k"] = s.k;
  Json pts = Json::array();
  for (auto& p : s.points) pts.push_back(point_json(s.F, p));
  j["points"] = pts;
  return j;
}

inline Json classification_json(const AlexMatrix& A, const Field& F,
                                const std::vector<ClassifiedPoint>& cls) {
  auto vars = A.var_names();
  Json arr = Json::array();
  for (auto& c : cls) {
    Json e;
    e["point"] = point_json(F, c.point);
    e["coordinate"] = c.is_coordinate;
    Json v = Json::array();
    for (int i : c.vanishing) v.push_back(vars[i]);
    e["vanishing"] = v;
    e["essential"] = c.is_essential;
    Json w = Json::array();
    for (int i : c.witnesses) w.push_back(vars[i]);
    e["deletion_witnesses"] = w;
    arr.push_back(e);
  }
  return arr;
}

inline Json per_character_json(const SakumaResult& r) {
  Json o = Json::object();
  for (auto& [key, d] : r.per_character) o[key] = d;
  return o;
}

inline Json sakuma_json(const SakumaResult& formula, const SubgroupPresentation& sub) {
  AbelianStructure ab = abelianization_invariants(sub.pres);
  Json j;
  j["b1_formula"] = checked_long(formula.b1);
  j["b1_rs"] = ab.rank;
  Json tor = Json::array();
  for (auto& t : ab.torsion) tor.push_back(t.str());
  j["torsion_rs"] = tor;
  j["per_character_depths"] = per_character_json(formula);
  return j;
}

inline Json rs_json(const GroupPresentation& ambient, const SubgroupPresentation& sub) {
  AbelianStructure ab = abelianization_invariants(sub.pres);
  Json j;
  j["index"] = checked_long(sub.index);
  Json trans = Json::array();
  for (auto& t : sub.transversal) trans.push_back(word_to_string(t, ambient.gen_names()));
  j["transversal"] = trans;
  j["generators"] = sub.pres.gen_names();
  Json rels = Json::array();
  for (auto& r : sub.pres.rels) rels.push_back(word_to_string(r, sub.pres.gen_names()));
  j["relators"] = rels;
  j["b1"] = ab.rank;
  Json tor = Json::array();
  for (auto& t : ab.torsion) tor.push_back(t.str());
  j["torsion"] = tor;
  return j;
}

inline Json presentation_json(const GroupPresentation& p) {
  Json j;
  Json gens = Json::array();
  for (auto& g : p.gens) {
    Json e;
    e["name"] = g.name;
    e["component"] = p.components[g.label];
    gens.push_back(e);
  }
  j["generators"] = gens;
  Json rels = Json::array();
  for (auto& r : p.rels) rels.push_back(word_to_string(r, p.gen_names()));
  j["relators"] = rels;
  AbelianStructure ab = abelianization_invariants(p);
  j["h1_rank"] = ab.rank;
  Json tor = Json::array();
  for (auto& t : ab.torsion) tor.push_back(t.str());
  j["h1_torsion"] = tor;
  return j;
}

inline Json torus_pieces_json(const TorsionSubtorusSet& S) {
  auto reports = coordinate_pieces(S);
  Json arr = Json::array();
  for (size_t i = 0; i < reports.size(); ++i) {
    Json e;
    e["piece"] = (int)i;
    e["coordinate"] = reports[i].coordinate;
    Json f = Json::array();
    for (int c : reports[i].forced) f.push_back(S.coord_names[c]);
    e["forced"] = f;
    arr.push_back(e);
  }
  return arr;
}

inline Json torus_enumeration_json(const TorsionSubtorusSet& S, const Field& F,
                                   const std::vector<CharPoint>& pts) {
  Json j;
  j["field"] = F.name();
  j["coordinates"] = S.coord_names;
  Json arr = Json::array();
  for (auto& p : pts) arr.push_back(point_json(F, p));
  j["points"] = arr;
  return j;
}

inline std::string tsv_points(const Field& F, const std::vector<CharPoint>& pts) {
  std::string out;
  for (auto& p : pts) {
    std::vector<std::string> parts;
    for (auto& x : p) parts.push_back(F.to_string(x));
    out += join(parts, "\t");
    out += "\n";
  }
  return out;
}

}  // namespace charvar
