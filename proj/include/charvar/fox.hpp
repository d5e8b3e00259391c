#pragma once

#include "polymat.hpp"
#include "word.hpp"

namespace charvar {

// Alexander matrix of a presentation: rows = generators, columns = relators,
// entries = abelianized Fox derivatives in one Laurent variable per component.
// Deletion specialises a component's variable to 1 and appends a unit column.
struct AlexMatrix {
  GroupPresentation pres;
  PolyMatrix M;
  std::vector<int> var_of_component;       // component index -> active variable, -1 if deleted
  std::vector<std::string> deleted;        // deleted component names, in order
  std::vector<std::vector<Int>> constraints;  // active-var exponent vectors killed by valid characters

  int nvars() const { return M.nv; }
  const std::vector<std::string>& var_names() const { return M.var_names; }
};

// abelianized Fox derivative d(w)/d(gen i): the prefix rule with each generator g
// contributing the variable of its component label
inline LaurentPoly fox_derivative(const FreeWord& w, int i, const std::vector<int>& labels,
                                  int nvars) {
  LaurentPoly d(nvars);
  std::vector<int> prefix(nvars, 0);
  for (auto [g, e] : w) {
    if (g < 0 || g >= (int)labels.size()) throw input_error("undeclared generator in word");
    int c = labels[g];
    if (g == i) {
      if (e > 0) {
        for (int j = 0; j < e; ++j) {
          std::vector<int> exp = prefix;
          exp[c] += j;
          d.add_term(exp, 1);
        }
      } else {
        for (int j = 1; j <= -e; ++j) {
          std::vector<int> exp = prefix;
          exp[c] -= j;
          d.add_term(exp, -1);
        }
      }
    }
    prefix[c] += e;
  }
  return d;
}

// same recursion evaluated directly in a field (valid for torsion H1, where the
// symbolic Laurent image would not see the constraints)
inline Field::Elem fox_eval(const FreeWord& w, int i, const std::vector<int>& labels,
                            const Field& F, const std::vector<Field::Elem>& xs) {
  Field::Elem d = F.zero();
  Field::Elem prefix = F.one();
  for (auto [g, e] : w) {
    if (g < 0 || g >= (int)labels.size()) throw input_error("undeclared generator in word");
    const Field::Elem& t = xs[labels[g]];
    if (g == i) {
      if (e > 0) {
        Field::Elem acc = prefix;
        for (int j = 0; j < e; ++j) {
          d = F.add(d, acc);
          acc = F.mul(acc, t);
        }
      } else {
        Field::Elem tinv = F.inv(t);
        Field::Elem acc = prefix;
        for (int j = 1; j <= -e; ++j) {
          acc = F.mul(acc, tinv);
          d = F.sub(d, acc);
        }
      }
    }
    prefix = F.mul(prefix, F.pow(t, e));
  }
  return d;
}

inline AlexMatrix alexander_matrix(const GroupPresentation& p) {
  AlexMatrix A;
  A.pres = p;
  std::vector<int> labels = p.labels();
  A.M.rows = p.ngens();
  A.M.cols = p.nrels();
  A.M.nv = p.ncomponents();
  A.M.var_names = p.components;
  A.M.row_labels = p.gen_names();
  for (int j = 0; j < p.nrels(); ++j) A.M.col_labels.push_back("r" + std::to_string(j + 1));
  A.M.entries.assign(A.M.rows, std::vector<LaurentPoly>(A.M.cols, LaurentPoly(A.M.nv)));
  for (int i = 0; i < A.M.rows; ++i)
    for (int j = 0; j < A.M.cols; ++j)
      A.M.entries[i][j] = fox_derivative(p.rels[j], i, labels, A.M.nv);
  A.var_of_component.resize(p.ncomponents());
  for (int c = 0; c < p.ncomponents(); ++c) A.var_of_component[c] = c;
  for (auto& v : p.label_relations()) {
    bool zero = std::all_of(v.begin(), v.end(), [](const Int& x) { return x == 0; });
    if (!zero) A.constraints.push_back(v);
  }
  return A;
}

// first generator that is a meridian of the component, or -1
inline int meridian_generator(const GroupPresentation& p, int comp) {
  for (int g = 0; g < p.ngens(); ++g)
    if (p.gens[g].label == comp) return g;
  return -1;
}

// deletion: specialise the component's variable to 1 and append a unit column in
// the row of one of its meridian generators
inline AlexMatrix deletion_matrix(const AlexMatrix& A, int comp, int gen = -1) {
  if (comp < 0 || comp >= (int)A.var_of_component.size())
    throw input_error("component index out of range");
  const std::string& cname = A.pres.components[comp];
  int var = A.var_of_component[comp];
  if (var < 0) throw input_error("component '" + cname + "' already deleted");
  if (gen < 0) {
    gen = meridian_generator(A.pres, comp);
    if (gen < 0)
      throw input_error("component '" + cname + "' has no meridian generator");
  } else if (A.pres.gens[gen].label != comp) {
    throw input_error("generator '" + A.pres.gens[gen].name +
                      "' is not a meridian of component '" + cname + "'");
  }

  AlexMatrix B;
  B.pres = A.pres;
  B.deleted = A.deleted;
  B.deleted.push_back(cname);
  B.M.rows = A.M.rows;
  B.M.cols = A.M.cols + 1;
  B.M.nv = A.M.nv - 1;
  B.M.row_labels = A.M.row_labels;
  B.M.col_labels = A.M.col_labels;
  B.M.col_labels.push_back("del:" + cname);
  for (int i = 0; i < A.M.nv; ++i)
    if (i != var) B.M.var_names.push_back(A.M.var_names[i]);
  B.M.entries.assign(B.M.rows, std::vector<LaurentPoly>(B.M.cols, LaurentPoly(B.M.nv)));
  for (int i = 0; i < A.M.rows; ++i)
    for (int j = 0; j < A.M.cols; ++j)
      B.M.entries[i][j] = A.M.entries[i][j].substitute_one(var);
  B.M.entries[gen][A.M.cols] = LaurentPoly::constant(B.M.nv, 1);

  B.var_of_component = A.var_of_component;
  B.var_of_component[comp] = -1;
  for (auto& v : B.var_of_component)
    if (v > var) --v;
  for (auto& c : A.constraints) {
    std::vector<Int> v;
    v.reserve(c.size() - 1);
    for (int i = 0; i < (int)c.size(); ++i)
      if (i != var) v.push_back(c[i]);
    bool zero = std::all_of(v.begin(), v.end(), [](const Int& x) { return x == 0; });
    if (!zero) B.constraints.push_back(std::move(v));
  }
  return B;
}

inline AlexMatrix deletion_matrix(const AlexMatrix& A, const std::string& component_name,
                                  int gen = -1) {
  return deletion_matrix(A, A.pres.component_index(component_name), gen);
}

}  // namespace charvar
