#pragma once

#include <algorithm>
#include <cctype>
#include <fstream>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace charvar {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// invalid input (bad DSL, undeclared generator, inconsistent character, ...)
struct input_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// enumeration would exceed the configured budget
struct budget_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct parse_error : input_error {
  int line, col;
  parse_error(int line_, int col_, const std::string& msg)
      : input_error("line " + std::to_string(line_) + " col " +
                    std::to_string(col_) + ": " + msg),
        line(line_), col(col_) {}
};

inline Int imod(const Int& a, const Int& m) {
  Int r = a % m;
  if (r < 0) r += m;
  return r;
}

inline Int igcd(Int a, Int b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    Int t = a % b;
    a = b;
    b = t;
  }
  return a;
}

inline Int ipow(Int base, unsigned long e) {
  Int r = 1;
  while (e) {
    if (e & 1) r *= base;
    base *= base;
    e >>= 1;
  }
  return r;
}

inline long checked_long(const Int& v, const char* what = "value") {
  if (v > std::numeric_limits<long>::max() || v < std::numeric_limits<long>::min())
    throw input_error(std::string(what) + " out of range");
  return static_cast<long>(v);
}

template <class T>
std::string join(const std::vector<T>& xs, const std::string& sep) {
  std::ostringstream os;
  for (size_t i = 0; i < xs.size(); ++i) {
    if (i) os << sep;
    os << xs[i];
  }
  return os.str();
}

}  // namespace charvar
