#pragma once

#include "word.hpp"

namespace charvar {

// line-oriented tokenizer shared by the input DSLs; reports line/column on errors
struct LineLexer {
  std::string text;
  int line = 0;
  size_t pos = 0;

  LineLexer(std::string t, int line_no) : text(std::move(t)), line(line_no) {}

  [[noreturn]] void fail(const std::string& msg, size_t at) const {
    throw parse_error(line, (int)at + 1, msg);
  }
  [[noreturn]] void fail(const std::string& msg) const { fail(msg, pos); }

  void skip_ws() {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
  }
  bool at_end() {
    skip_ws();
    return pos >= text.size();
  }
  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }
  bool accept(char c) {
    skip_ws();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  void expect(char c) {
    skip_ws();
    if (pos >= text.size() || text[pos] != c)
      fail(std::string("expected '") + c + "'");
    ++pos;
  }
  // identifiers: letter followed by letters/digits/underscores
  bool name_ahead() {
    skip_ws();
    return pos < text.size() && (std::isalpha((unsigned char)text[pos]) || text[pos] == '_');
  }
  std::string name() {
    skip_ws();
    if (!name_ahead()) fail("expected a name");
    size_t start = pos;
    while (pos < text.size() &&
           (std::isalnum((unsigned char)text[pos]) || text[pos] == '_'))
      ++pos;
    return text.substr(start, pos - start);
  }
  bool int_ahead() {
    skip_ws();
    if (pos >= text.size()) return false;
    if (std::isdigit((unsigned char)text[pos])) return true;
    return text[pos] == '-' && pos + 1 < text.size() &&
           std::isdigit((unsigned char)text[pos + 1]);
  }
  long integer() {
    skip_ws();
    if (!int_ahead()) fail("expected an integer");
    size_t start = pos;
    if (text[pos] == '-') ++pos;
    while (pos < text.size() && std::isdigit((unsigned char)text[pos])) ++pos;
    try {
      return std::stol(text.substr(start, pos - start));
    } catch (const std::exception&) {
      fail("integer out of range", start);
    }
  }
};

// split input into logical statements: strip '#' comments, treat ';' like a
// line break, keep 1-based line numbers
inline std::vector<LineLexer> dsl_statements(const std::string& text) {
  std::vector<LineLexer> out;
  std::istringstream in(text);
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    size_t hash = raw.find('#');
    if (hash != std::string::npos) raw = raw.substr(0, hash);
    size_t start = 0;
    while (start <= raw.size()) {
      size_t semi = raw.find(';', start);
      std::string piece =
          raw.substr(start, semi == std::string::npos ? std::string::npos : semi - start);
      if (piece.find_first_not_of(" \t\r") != std::string::npos) {
        while (!piece.empty() && (piece.back() == '\r' || piece.back() == ' ')) piece.pop_back();
        out.emplace_back(piece, line_no);
      }
      if (semi == std::string::npos) break;
      start = semi + 1;
    }
  }
  return out;
}

// word grammar: juxtaposition = product; '^' integer = power, '^' word-atom =
// conjugation x^y := y x y^-1; '(...)' grouping; '[u,v]' commutator u v u^-1 v^-1
namespace detail {

inline FreeWord parse_word(LineLexer& lx, const std::map<std::string, int>& gen_index);

inline FreeWord parse_word_atom(LineLexer& lx, const std::map<std::string, int>& gen_index) {
  if (lx.accept('(')) {
    FreeWord w = parse_word(lx, gen_index);
    lx.expect(')');
    return w;
  }
  if (lx.accept('[')) {
    FreeWord u = parse_word(lx, gen_index);
    lx.expect(',');
    FreeWord v = parse_word(lx, gen_index);
    lx.expect(']');
    return wcomm(u, v);
  }
  size_t at = lx.pos;
  std::string nm = lx.name();
  auto it = gen_index.find(nm);
  if (it == gen_index.end()) lx.fail("undeclared generator '" + nm + "'", at);
  return {{it->second, 1}};
}

inline FreeWord parse_word_term(LineLexer& lx, const std::map<std::string, int>& gen_index) {
  FreeWord w = parse_word_atom(lx, gen_index);
  while (lx.peek() == '^') {
    lx.expect('^');
    if (lx.int_ahead()) {
      long e = lx.integer();
      w = wpow(w, e);
    } else {
      FreeWord y = parse_word_atom(lx, gen_index);
      w = wconj(w, y);
    }
  }
  return w;
}

inline bool word_starts(LineLexer& lx) {
  char c = lx.peek();
  return c == '(' || c == '[' || lx.name_ahead();
}

inline FreeWord parse_word(LineLexer& lx, const std::map<std::string, int>& gen_index) {
  FreeWord w;
  bool any = false;
  while (word_starts(lx)) {
    w = wmul(w, parse_word_term(lx, gen_index));
    any = true;
  }
  if (!any) lx.fail("expected a word");
  return w;
}

}  // namespace detail

// parse a whole statement as a word; '=' sugar: "u = v" denotes the relator u v^-1
inline FreeWord parse_relator(LineLexer& lx, const std::map<std::string, int>& gen_index) {
  FreeWord w = detail::parse_word(lx, gen_index);
  if (lx.accept('=')) {
    if (lx.accept('1')) {
      // "w = 1" form: relator is w itself
    } else {
      FreeWord v = detail::parse_word(lx, gen_index);
      w = wmul(w, winv(v));
    }
  }
  if (!lx.at_end()) lx.fail("unexpected trailing input");
  return reduce(w);
}

// presentation DSL:
//   gens: <name>[@<component>] ...
//   rel: <word>
inline GroupPresentation parse_presentation(const std::string& text) {
  GroupPresentation p;
  std::map<std::string, int> gen_index;
  std::map<std::string, int> comp_index;
  std::vector<LineLexer> pending_rels;

  for (LineLexer& lx : dsl_statements(text)) {
    size_t at = lx.pos;
    std::string key = lx.name();
    if (key == "gens") {
      lx.expect(':');
      while (!lx.at_end()) {
        size_t gat = lx.pos;
        std::string nm = lx.name();
        if (gen_index.count(nm)) lx.fail("duplicate generator '" + nm + "'", gat);
        std::string comp = nm;
        if (lx.accept('@')) comp = lx.name();
        auto [it, fresh] = comp_index.try_emplace(comp, (int)p.components.size());
        if (fresh) p.components.push_back(comp);
        gen_index[nm] = (int)p.gens.size();
        p.gens.push_back({nm, it->second});
      }
    } else if (key == "rel" || key == "rels") {
      lx.expect(':');
      // tolerate an explicit "(none)" marker for empty relator lists
      size_t save = lx.pos;
      if (lx.accept('(')) {
        if (lx.name_ahead()) {
          size_t nat = lx.pos;
          if (lx.name() == "none" && lx.accept(')') && lx.at_end()) continue;
          (void)nat;
        }
        lx.pos = save;
      }
      pending_rels.push_back(lx);
    } else {
      lx.fail("unknown statement '" + key + "'", at);
    }
  }
  for (LineLexer& lx : pending_rels) {
    FreeWord r = parse_relator(lx, gen_index);
    if (!r.empty()) p.rels.push_back(std::move(r));
  }
  if (p.gens.empty()) throw input_error("presentation declares no generators");
  return p;
}

inline std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw input_error("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline GroupPresentation load_presentation(const std::string& path) {
  return parse_presentation(read_text_file(path));
}

}  // namespace charvar
