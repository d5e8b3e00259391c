#pragma once

#include "dsl.hpp"

namespace charvar {

// braid word on n strands: letters (i, e) with 1 <= i <= n-1; exponents flattened
// to +-1 on application
struct BraidWord {
  int strands = 0;
  std::vector<std::pair<int, int>> letters;
};

inline BraidWord braid_mul(const BraidWord& a, const BraidWord& b) {
  BraidWord r = a;
  r.strands = std::max(a.strands, b.strands);
  r.letters.insert(r.letters.end(), b.letters.begin(), b.letters.end());
  return r;
}

inline BraidWord braid_inv(const BraidWord& a) {
  BraidWord r;
  r.strands = a.strands;
  for (auto it = a.letters.rbegin(); it != a.letters.rend(); ++it)
    r.letters.push_back({it->first, -it->second});
  return r;
}

inline BraidWord braid_pow(const BraidWord& a, int e) {
  BraidWord base = e < 0 ? braid_inv(a) : a;
  int n = e < 0 ? -e : e;
  BraidWord r;
  r.strands = a.strands;
  for (int i = 0; i < n; ++i) r = braid_mul(r, base);
  return r;
}

// conjugation combinator sigma*tau := sigma tau sigma^-1
inline BraidWord braid_conj(const BraidWord& s, const BraidWord& t) {
  return braid_mul(braid_mul(s, t), braid_inv(s));
}

// the two Artin-action conventions; Product is the one with
// sigma_i: a_i -> a_i a_{i+1} a_i^-1, a_{i+1} -> a_i (preserves a_1 a_2 ... a_n)
enum class BraidConvention { Product, Mirror };

namespace detail {
// image of generator g (0-based) under sigma_i^sign (i is 1-based)
inline FreeWord braid_letter_image(int g, int i, int sign, BraidConvention conv) {
  int lo = i - 1, hi = i;
  bool positive = (sign > 0) == (conv == BraidConvention::Product);
  if (positive) {
    if (g == lo) return {{lo, 1}, {hi, 1}, {lo, -1}};
    if (g == hi) return {{lo, 1}};
  } else {
    if (g == lo) return {{hi, 1}};
    if (g == hi) return {{hi, -1}, {lo, 1}, {hi, 1}};
  }
  return {{g, 1}};
}
}  // namespace detail

// apply the braid as an automorphism of the free group, folding the braid word
// left to right (each successive letter acts on the previous image)
inline FreeWord braid_act(const BraidWord& beta, const FreeWord& w,
                          BraidConvention conv = BraidConvention::Product) {
  FreeWord cur = w;
  for (auto [i, e] : beta.letters) {
    if (i < 1 || i >= beta.strands)
      throw input_error("braid letter s" + std::to_string(i) + " out of range for " +
                        std::to_string(beta.strands) + " strands");
    int sign = e < 0 ? -1 : 1;
    int reps = e < 0 ? -e : e;
    for (int k = 0; k < reps; ++k) {
      FreeWord next;
      for (auto [g, ge] : cur) {
        FreeWord img = detail::braid_letter_image(g, i, sign, conv);
        if (ge < 0) img = winv(img);
        int n = ge < 0 ? -ge : ge;
        for (int t = 0; t < n; ++t) next.insert(next.end(), img.begin(), img.end());
      }
      cur = reduce(next);
    }
  }
  return cur;
}

// braid monodromy input: one braid per discriminant point, optional asymptote
// conjugators b_i, optional extra relators (infinity meridian)
struct MonodromyData {
  int strands = 0;
  std::vector<std::string> gen_names;   // a1..an
  std::vector<int> gen_labels;          // component label per strand
  std::vector<std::string> components;  // component names by label
  std::vector<BraidWord> braids;
  std::map<int, FreeWord> conjugators;  // 1-based braid index -> b_i
  std::vector<FreeWord> extra_relators;
  bool infinity_auto = false;           // append the infinity meridian relator
  std::optional<FreeWord> infinity_word;
  BraidConvention convention = BraidConvention::Product;
};

// (b_j a2 a1 a3 a2 a1)^-1 — the meridian of the line at infinity for the
// three-strand fibration; other strand counts require an explicit word
inline FreeWord infinity_meridian(const MonodromyData& m, int asym_index) {
  if (m.infinity_word) return *m.infinity_word;
  if (m.strands != 3)
    throw input_error("infinity meridian formula needs 3 strands; supply 'infinity: <word>'");
  FreeWord b;
  auto it = m.conjugators.find(asym_index);
  if (it != m.conjugators.end()) b = it->second;
  FreeWord tail = {{1, 1}, {0, 1}, {2, 1}, {1, 1}, {0, 1}};  // a2 a1 a3 a2 a1
  return winv(reduce(wmul(b, tail)));
}

inline GroupPresentation zvk_presentation(const MonodromyData& m) {
  GroupPresentation p;
  p.components = m.components;
  for (int g = 0; g < m.strands; ++g) p.gens.push_back({m.gen_names[g], m.gen_labels[g]});
  for (size_t bi = 0; bi < m.braids.size(); ++bi) {
    int idx = (int)bi + 1;
    auto conj_it = m.conjugators.find(idx);
    for (int g = 0; g < m.strands; ++g) {
      FreeWord aj = {{g, 1}};
      FreeWord lhs = conj_it != m.conjugators.end() ? wconj(aj, conj_it->second) : aj;
      FreeWord rel = reduce(wmul(winv(lhs), braid_act(m.braids[bi], aj, m.convention)));
      if (!rel.empty()) p.rels.push_back(std::move(rel));
    }
  }
  if (m.infinity_auto || m.infinity_word) {
    int asym = m.conjugators.empty() ? 0 : m.conjugators.rbegin()->first;
    FreeWord rel = reduce(infinity_meridian(m, asym));
    if (!rel.empty()) p.rels.push_back(std::move(rel));
  }
  for (auto& r : m.extra_relators) {
    FreeWord red = reduce(r);
    if (!red.empty()) p.rels.push_back(std::move(red));
  }
  return p;
}

// ---- DSL ----
// strands: 3
// labels: a1=quartic a2=quartic a3=conic
// braid: s2^6 * s1                  ('*' = conjugation combinator, lowest precedence)
// asymptote 4: conj = a3^(a2 a3 a2 a1)
// infinity: auto                    (or an explicit word, or 'none')
// convention: product               (or 'mirror')
namespace detail {
inline BraidWord parse_braid_word(LineLexer& lx, int strands);

inline BraidWord parse_braid_atom(LineLexer& lx, int strands) {
  if (lx.accept('(')) {
    BraidWord w = parse_braid_word(lx, strands);
    lx.expect(')');
    return w;
  }
  size_t at = lx.pos;
  std::string nm = lx.name();
  if (nm.size() < 2 || nm[0] != 's') lx.fail("expected braid generator 's<i>'", at);
  int i;
  try {
    i = std::stoi(nm.substr(1));
  } catch (const std::exception&) {
    lx.fail("expected braid generator 's<i>'", at);
  }
  if (i < 1 || i >= strands)
    lx.fail("braid generator s" + std::to_string(i) + " out of range", at);
  BraidWord w;
  w.strands = strands;
  w.letters.push_back({i, 1});
  return w;
}

inline BraidWord parse_braid_factor(LineLexer& lx, int strands) {
  BraidWord w = parse_braid_atom(lx, strands);
  while (lx.peek() == '^') {
    lx.expect('^');
    w = braid_pow(w, (int)lx.integer());
  }
  return w;
}

inline BraidWord parse_braid_product(LineLexer& lx, int strands) {
  BraidWord w = parse_braid_factor(lx, strands);
  while (lx.peek() == '(' || lx.name_ahead())
    w = braid_mul(w, parse_braid_factor(lx, strands));
  return w;
}

inline BraidWord parse_braid_word(LineLexer& lx, int strands) {
  BraidWord w = parse_braid_product(lx, strands);
  while (lx.accept('*')) w = braid_conj(w, parse_braid_product(lx, strands));
  return w;
}
}  // namespace detail

inline MonodromyData parse_monodromy(const std::string& text) {
  MonodromyData m;
  std::map<std::string, int> gen_index;
  std::map<std::string, int> comp_index;
  struct PendingAsym {
    int index;
    LineLexer lx;
  };
  std::vector<PendingAsym> pending_asym;
  std::optional<LineLexer> pending_infinity;

  for (LineLexer& lx : dsl_statements(text)) {
    size_t at = lx.pos;
    std::string key = lx.name();
    if (key == "strands") {
      lx.expect(':');
      long n = lx.integer();
      if (n < 2) lx.fail("strands must be >= 2", at);
      m.strands = (int)n;
    } else if (key == "labels") {
      lx.expect(':');
      while (!lx.at_end()) {
        size_t gat = lx.pos;
        std::string nm = lx.name();
        lx.expect('=');
        std::string comp = lx.name();
        if (gen_index.count(nm)) lx.fail("duplicate strand generator '" + nm + "'", gat);
        auto [it, fresh] = comp_index.try_emplace(comp, (int)m.components.size());
        if (fresh) m.components.push_back(comp);
        gen_index[nm] = (int)m.gen_names.size();
        m.gen_names.push_back(nm);
        m.gen_labels.push_back(it->second);
      }
    } else if (key == "braid") {
      lx.expect(':');
      if (m.strands == 0) lx.fail("strands must be declared before braids", at);
      BraidWord w = detail::parse_braid_word(lx, m.strands);
      if (!lx.at_end()) lx.fail("unexpected trailing input");
      m.braids.push_back(std::move(w));
    } else if (key == "asymptote") {
      long idx = lx.integer();
      lx.expect(':');
      size_t cat = lx.pos;
      if (lx.name() != "conj") lx.fail("expected 'conj = <word>'", cat);
      lx.expect('=');
      pending_asym.push_back({(int)idx, lx});
    } else if (key == "infinity") {
      lx.expect(':');
      pending_infinity = lx;
    } else if (key == "convention") {
      lx.expect(':');
      size_t vat = lx.pos;
      std::string v = lx.name();
      if (v == "product")
        m.convention = BraidConvention::Product;
      else if (v == "mirror")
        m.convention = BraidConvention::Mirror;
      else
        lx.fail("convention must be 'product' or 'mirror'", vat);
    } else {
      lx.fail("unknown statement '" + key + "'", at);
    }
  }
  if (m.strands == 0) throw input_error("monodromy file declares no strands");
  if ((int)m.gen_names.size() != m.strands)
    throw input_error("labels must name all " + std::to_string(m.strands) + " strands");

  for (auto& pa : pending_asym) {
    if (pa.index < 1 || pa.index > (int)m.braids.size())
      throw input_error("asymptote index " + std::to_string(pa.index) +
                        " does not match any braid");
    LineLexer lx = pa.lx;
    FreeWord w = detail::parse_word(lx, gen_index);
    if (!lx.at_end()) lx.fail("unexpected trailing input");
    m.conjugators[pa.index] = reduce(w);
  }
  if (pending_infinity) {
    LineLexer lx = *pending_infinity;
    if (lx.name_ahead()) {
      size_t save = lx.pos;
      std::string v = lx.name();
      if (v == "auto" && lx.at_end()) {
        m.infinity_auto = true;
      } else if (v == "none" && lx.at_end()) {
        m.infinity_auto = false;
      } else {
        lx.pos = save;
        FreeWord w = detail::parse_word(lx, gen_index);
        if (!lx.at_end()) lx.fail("unexpected trailing input");
        m.infinity_word = reduce(w);
      }
    } else {
      lx.fail("expected 'auto', 'none', or a word");
    }
  }
  return m;
}

inline MonodromyData load_monodromy(const std::string& path) {
  return parse_monodromy(read_text_file(path));
}

}  // namespace charvar
