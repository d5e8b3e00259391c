#pragma once

#include "base.hpp"

namespace charvar {

// freely reduced word: (generator index, non-zero exponent), adjacent entries
// have distinct generators
using FreeWord = std::vector<std::pair<int, int>>;

inline FreeWord reduce(const FreeWord& w) {
  FreeWord out;
  for (auto [g, e] : w) {
    if (e == 0) continue;
    if (!out.empty() && out.back().first == g) {
      out.back().second += e;
      if (out.back().second == 0) out.pop_back();
    } else {
      out.push_back({g, e});
    }
  }
  return out;
}

inline FreeWord wmul(const FreeWord& a, const FreeWord& b) {
  FreeWord r = a;
  r.insert(r.end(), b.begin(), b.end());
  return reduce(r);
}

inline FreeWord winv(const FreeWord& a) {
  FreeWord r;
  for (auto it = a.rbegin(); it != a.rend(); ++it) r.push_back({it->first, -it->second});
  return r;
}

inline FreeWord wpow(const FreeWord& a, int e) {
  FreeWord base = e < 0 ? winv(a) : a;
  int n = e < 0 ? -e : e;
  FreeWord r;
  for (int i = 0; i < n; ++i) r = wmul(r, base);
  return r;
}

// x^y := y x y^-1
inline FreeWord wconj(const FreeWord& x, const FreeWord& y) {
  return wmul(wmul(y, x), winv(y));
}

// [x,y] := x y x^-1 y^-1
inline FreeWord wcomm(const FreeWord& x, const FreeWord& y) {
  return wmul(wmul(x, y), wmul(winv(x), winv(y)));
}

inline size_t wlen(const FreeWord& w) {
  size_t n = 0;
  for (auto [g, e] : w) n += (size_t)(e < 0 ? -e : e);
  return n;
}

inline std::vector<Int> exponent_vector(const FreeWord& w, int ngens) {
  std::vector<Int> v(ngens, Int(0));
  for (auto [g, e] : w) v[g] += e;
  return v;
}

inline std::string word_to_string(const FreeWord& w, const std::vector<std::string>& names) {
  if (w.empty()) return "1";
  std::ostringstream os;
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) os << " ";
    os << names[w[i].first];
    if (w[i].second != 1) os << "^" << w[i].second;
  }
  return os.str();
}

struct Generator {
  std::string name;
  int label = 0;  // component index (several generators may share one)
};

struct GroupPresentation {
  std::vector<Generator> gens;
  std::vector<FreeWord> rels;
  std::vector<std::string> components;  // component names by label index

  int ngens() const { return (int)gens.size(); }
  int nrels() const { return (int)rels.size(); }
  int ncomponents() const { return (int)components.size(); }

  std::vector<std::string> gen_names() const {
    std::vector<std::string> out;
    for (auto& g : gens) out.push_back(g.name);
    return out;
  }
  std::vector<int> labels() const {
    std::vector<int> out;
    for (auto& g : gens) out.push_back(g.label);
    return out;
  }
  int component_index(const std::string& name) const {
    for (int i = 0; i < (int)components.size(); ++i)
      if (components[i] == name) return i;
    throw input_error("unknown component: " + name);
  }

  // abelianized relator exponents in component (label) coordinates
  std::vector<std::vector<Int>> label_relations() const {
    std::vector<std::vector<Int>> out;
    for (auto& r : rels) {
      std::vector<Int> v(ncomponents(), Int(0));
      for (auto [g, e] : r) v[gens[g].label] += e;
      out.push_back(std::move(v));
    }
    return out;
  }

  // every relator dies in component coordinates (free H1 of rank ncomponents)
  bool meridian_presentation() const {
    for (auto& v : label_relations())
      for (auto& x : v)
        if (x != 0) return false;
    return true;
  }
};

}  // namespace charvar
