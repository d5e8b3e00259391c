#pragma once

#include "field.hpp"

namespace charvar {

// multivariate Laurent polynomial: exponent vector -> non-zero coefficient
struct LaurentPoly {
  int nv = 0;
  std::map<std::vector<int>, Rat> terms;

  LaurentPoly() = default;
  explicit LaurentPoly(int nvars) : nv(nvars) {}

  static LaurentPoly constant(int nvars, const Rat& c) {
    LaurentPoly p(nvars);
    if (c != 0) p.terms[std::vector<int>(nvars, 0)] = c;
    return p;
  }
  static LaurentPoly monomial(int nvars, const std::vector<int>& e, const Rat& c) {
    LaurentPoly p(nvars);
    if (c != 0) p.terms[e] = c;
    return p;
  }
  static LaurentPoly variable(int nvars, int i, int exp = 1) {
    std::vector<int> e(nvars, 0);
    e[i] = exp;
    return monomial(nvars, e, 1);
  }

  bool is_zero() const { return terms.empty(); }
  bool operator==(const LaurentPoly& o) const { return nv == o.nv && terms == o.terms; }

  void add_term(const std::vector<int>& e, const Rat& c) {
    if (c == 0) return;
    auto it = terms.find(e);
    if (it == terms.end()) {
      terms[e] = c;
    } else {
      it->second += c;
      if (it->second == 0) terms.erase(it);
    }
  }

  LaurentPoly operator+(const LaurentPoly& o) const {
    LaurentPoly r = *this;
    for (auto& [e, c] : o.terms) r.add_term(e, c);
    return r;
  }
  LaurentPoly operator-() const {
    LaurentPoly r = *this;
    for (auto& [e, c] : r.terms) c = -c;
    return r;
  }
  LaurentPoly operator-(const LaurentPoly& o) const { return *this + (-o); }
  LaurentPoly operator*(const LaurentPoly& o) const {
    LaurentPoly r(nv);
    for (auto& [e1, c1] : terms)
      for (auto& [e2, c2] : o.terms) {
        std::vector<int> e(nv);
        for (int i = 0; i < nv; ++i) e[i] = e1[i] + e2[i];
        r.add_term(e, c1 * c2);
      }
    return r;
  }

  // substitute t_i = 1 and drop the variable (one fewer variable)
  LaurentPoly substitute_one(int i) const {
    LaurentPoly r(nv - 1);
    for (auto& [e, c] : terms) {
      std::vector<int> f;
      f.reserve(nv - 1);
      for (int j = 0; j < nv; ++j)
        if (j != i) f.push_back(e[j]);
      r.add_term(f, c);
    }
    return r;
  }

  Field::Elem eval(const Field& F, const std::vector<Field::Elem>& coords) const {
    if ((int)coords.size() != nv) throw input_error("variable-count mismatch in evaluation");
    Field::Elem acc = F.zero();
    for (auto& [e, c] : terms) {
      Field::Elem t = F.from_rational(c);
      for (int i = 0; i < nv; ++i)
        if (e[i] != 0) t = F.mul(t, F.pow(coords[i], e[i]));
      acc = F.add(acc, t);
    }
    return acc;
  }

  // sum of coefficients (evaluation at the all-ones point)
  Rat augmentation() const {
    Rat s = 0;
    for (auto& [e, c] : terms) s += c;
    return s;
  }

  std::string to_string(const std::vector<std::string>& vars) const {
    if (terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [e, c] : terms) {
      std::string mono;
      for (int i = 0; i < nv; ++i) {
        if (e[i] == 0) continue;
        if (!mono.empty()) mono += "*";
        mono += vars[i];
        if (e[i] != 1) mono += "^" + std::to_string(e[i]);
      }
      Rat ac = c < 0 ? Rat(-c) : c;
      std::string sign = (c < 0) ? "-" : (first ? "" : "+");
      std::ostringstream term;
      if (mono.empty()) {
        term << ac;
      } else if (ac == 1) {
        term << mono;
      } else {
        term << ac << "*" << mono;
      }
      os << sign << term.str();
      first = false;
    }
    return os.str();
  }
};

}  // namespace charvar
