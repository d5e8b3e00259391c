#pragma once

#include "base.hpp"

namespace charvar {

// Exact coefficient fields: F_p, F_{p^k} (deterministic modulus), Q, and
// Q(zeta_N) = Q[x]/Phi_N(x).  Elements are fixed-length coefficient vectors
// over Rat; finite fields keep integer entries in [0,p).
enum class FieldKind { Finite, Rationals, Cyclotomic };

namespace detail {

// dense poly helpers over Rat with an optional prime modulus (0 = none)
inline Rat cnorm(const Rat& a, long p) {
  if (!p) return a;
  Int n = boost::multiprecision::numerator(a);
  return Rat(imod(n, p));
}

inline int pdeg(const std::vector<Rat>& f) {
  for (int i = (int)f.size() - 1; i >= 0; --i)
    if (f[i] != 0) return i;
  return -1;
}

inline void ptrim(std::vector<Rat>& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

inline Rat cinv_scalar(const Rat& a, long p) {
  if (!p) return Rat(1) / a;
  Int x = imod(boost::multiprecision::numerator(a), p);
  // extended euclid mod p
  Int t = 0, newt = 1, r = p, newr = x;
  while (newr != 0) {
    Int q = r / newr;
    Int tmp = t - q * newt;
    t = newt; newt = tmp;
    tmp = r - q * newr;
    r = newr; newr = tmp;
  }
  if (r != 1) throw input_error("non-invertible element");
  return Rat(imod(t, p));
}

inline std::vector<Rat> pmul(const std::vector<Rat>& a, const std::vector<Rat>& b, long p) {
  if (a.empty() || b.empty()) return {};
  std::vector<Rat> out(a.size() + b.size() - 1, Rat(0));
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) {
      if (b[j] == 0) continue;
      out[i + j] = cnorm(out[i + j] + a[i] * b[j], p);
    }
  }
  ptrim(out);
  return out;
}

// f mod g (g non-zero), also quotient
inline std::pair<std::vector<Rat>, std::vector<Rat>> pdivmod(
    std::vector<Rat> f, const std::vector<Rat>& g, long p) {
  int dg = pdeg(g);
  if (dg < 0) throw input_error("polynomial division by zero");
  Rat lg = cinv_scalar(g[dg], p);
  std::vector<Rat> q;
  int df = pdeg(f);
  if (df >= dg) q.assign(df - dg + 1, Rat(0));
  while ((df = pdeg(f)) >= dg) {
    Rat c = cnorm(f[df] * lg, p);
    q[df - dg] = c;
    for (int i = 0; i <= dg; ++i)
      f[df - dg + i] = cnorm(f[df - dg + i] - c * g[i], p);
  }
  ptrim(f);
  ptrim(q);
  return {q, f};
}

// extended euclid: returns (g, s, t) with s*a + t*b = g (g monic)
inline std::tuple<std::vector<Rat>, std::vector<Rat>, std::vector<Rat>> pgcdext(
    std::vector<Rat> a, std::vector<Rat> b, long p) {
  std::vector<Rat> s0{Rat(1)}, s1, t0, t1{Rat(1)};
  while (pdeg(b) >= 0) {
    auto [q, r] = pdivmod(a, b, p);
    a = std::move(b);
    b = std::move(r);
    auto upd = [&](std::vector<Rat>& x0, std::vector<Rat>& x1) {
      std::vector<Rat> nx = x0;
      std::vector<Rat> qx1 = pmul(q, x1, p);
      if (nx.size() < qx1.size()) nx.resize(qx1.size(), Rat(0));
      for (size_t i = 0; i < qx1.size(); ++i) nx[i] = cnorm(nx[i] - qx1[i], p);
      ptrim(nx);
      x0 = std::move(x1);
      x1 = std::move(nx);
    };
    upd(s0, s1);
    upd(t0, t1);
  }
  int da = pdeg(a);
  if (da >= 0 && a[da] != 1) {
    Rat il = cinv_scalar(a[da], p);
    for (auto& c : a) c = cnorm(c * il, p);
    for (auto& c : s0) c = cnorm(c * il, p);
    for (auto& c : t0) c = cnorm(c * il, p);
  }
  return {a, s0, t0};
}

// cyclotomic polynomials Phi_1..Phi_N over Z, computed by exact division of
// x^n - 1 by the proper-divisor factors
inline std::vector<Rat> cyclotomic_poly(long N) {
  std::vector<std::vector<Rat>> phi(N + 1);
  for (long n = 1; n <= N; ++n) {
    std::vector<Rat> f(n + 1, Rat(0));
    f[0] = -1;
    f[n] = 1;
    for (long d = 1; d < n; ++d)
      if (n % d == 0) f = pdivmod(f, phi[d], 0).first;
    phi[n] = f;
  }
  return phi[N];
}

}  // namespace detail

struct Field {
  using Elem = std::vector<Rat>;

  FieldKind kind = FieldKind::Rationals;
  long p = 0;                 // finite characteristic
  int ext = 1;                // finite extension degree
  std::vector<Rat> modulus;   // finite ext > 1: monic modulus, size ext+1
  long N = 0;                 // cyclotomic conductor
  std::vector<Rat> phi;       // Phi_N, size deg+1

  int deg() const {
    if (kind == FieldKind::Finite) return ext;
    if (kind == FieldKind::Cyclotomic) return (int)phi.size() - 1;
    return 1;
  }
  long characteristic() const { return kind == FieldKind::Finite ? p : 0; }
  Int order() const { return kind == FieldKind::Finite ? ipow(p, ext) : Int(0); }

  bool operator==(const Field& o) const {
    return kind == o.kind && p == o.p && ext == o.ext && N == o.N;
  }

  Elem zero() const { return Elem(deg(), Rat(0)); }
  Elem one() const {
    Elem e = zero();
    e[0] = 1;
    return e;
  }
  // class of x (extension generator / zeta_N); for prime fields and Q: 1
  Elem gen() const {
    if (deg() == 1) {
      // linear modulus: x is congruent to the negated constant term
      if (kind == FieldKind::Cyclotomic) return Elem{-phi[0]};
      return one();
    }
    Elem e = zero();
    e[1] = 1;
    return e;
  }

  bool is_zero(const Elem& a) const {
    for (auto& c : a)
      if (c != 0) return false;
    return true;
  }
  bool is_one(const Elem& a) const { return eq(a, one()); }
  bool eq(const Elem& a, const Elem& b) const { return a == b; }

  Elem from_int(const Int& n) const {
    Elem e = zero();
    e[0] = detail::cnorm(Rat(n), p);
    return e;
  }
  Elem from_rational(const Rat& r) const {
    if (kind != FieldKind::Finite) {
      Elem e = zero();
      e[0] = r;
      return e;
    }
    Rat num(boost::multiprecision::numerator(r));
    Rat den(boost::multiprecision::denominator(r));
    Elem e = zero();
    e[0] = detail::cnorm(num * detail::cinv_scalar(detail::cnorm(den, p), p), p);
    return e;
  }

  Elem add(const Elem& a, const Elem& b) const {
    Elem r(deg());
    for (int i = 0; i < deg(); ++i) r[i] = detail::cnorm(a[i] + b[i], p);
    return r;
  }
  Elem sub(const Elem& a, const Elem& b) const {
    Elem r(deg());
    for (int i = 0; i < deg(); ++i) r[i] = detail::cnorm(a[i] - b[i], p);
    return r;
  }
  Elem neg(const Elem& a) const {
    Elem r(deg());
    for (int i = 0; i < deg(); ++i) r[i] = detail::cnorm(-a[i], p);
    return r;
  }

  Elem mul(const Elem& a, const Elem& b) const {
    if (deg() == 1) {
      Elem r = zero();
      r[0] = detail::cnorm(a[0] * b[0], p);
      return r;
    }
    std::vector<Rat> prod = detail::pmul(a, b, p);
    const std::vector<Rat>& m = (kind == FieldKind::Finite) ? modulus : phi;
    prod = detail::pdivmod(prod, m, p).second;
    prod.resize(deg(), Rat(0));
    return prod;
  }

  Elem inv(const Elem& a) const {
    if (is_zero(a)) throw input_error("division by zero field element");
    if (deg() == 1) {
      Elem r = zero();
      r[0] = detail::cinv_scalar(a[0], p);
      return r;
    }
    std::vector<Rat> aa = a;
    detail::ptrim(aa);
    const std::vector<Rat>& m = (kind == FieldKind::Finite) ? modulus : phi;
    auto [g, s, t] = detail::pgcdext(aa, m, p);
    if (detail::pdeg(g) != 0) throw input_error("non-invertible element");
    std::vector<Rat> r = detail::pdivmod(s, m, p).second;
    r.resize(deg(), Rat(0));
    return r;
  }

  Elem pow(Elem a, Int e) const {
    if (e < 0) {
      a = inv(a);
      e = -e;
    }
    Elem r = one();
    while (e > 0) {
      if ((e & 1) != 0) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }

  // multiplicative order if it divides `limit`, else 0
  long elem_order(const Elem& a, long limit) const {
    if (is_zero(a)) return 0;
    Elem x = a;
    for (long n = 1; n <= limit; ++n) {
      if (is_one(x)) return n;
      x = mul(x, a);
    }
    return 0;
  }

  // finite fields: all q-1 units, ordered by the integer encoding
  // sum_i c_i p^i of their coefficient vectors
  std::vector<Elem> units() const {
    if (kind != FieldKind::Finite)
      throw input_error("units(): field is not finite");
    long q = checked_long(order(), "field order");
    std::vector<Elem> out;
    out.reserve(q - 1);
    for (long m = 1; m < q; ++m) {
      Elem e = zero();
      long v = m;
      for (int i = 0; i < ext; ++i) {
        e[i] = Rat(v % p);
        v /= p;
      }
      out.push_back(std::move(e));
    }
    return out;
  }

  // first unit of full multiplicative order, in units() order
  Elem multiplicative_generator() const {
    long q1 = checked_long(order() - 1, "unit group order");
    for (const Elem& u : units())
      if (elem_order(u, q1) == q1) return u;
    throw input_error("no multiplicative generator found");
  }

  bool has_root_of_unity(long n) const {
    if (n <= 0) return false;
    switch (kind) {
      case FieldKind::Finite: return (order() - 1) % n == 0;
      case FieldKind::Rationals: return n <= 2;
      case FieldKind::Cyclotomic:
        return N % n == 0 || (N % 2 == 1 && (2 * N) % n == 0);
    }
    return false;
  }

  // deterministic primitive n-th root of unity
  Elem root_of_unity(long n) const {
    if (!has_root_of_unity(n))
      throw input_error("field lacks roots of unity of order " + std::to_string(n));
    if (n == 1) return one();
    switch (kind) {
      case FieldKind::Finite: {
        Int q1 = order() - 1;
        return pow(multiplicative_generator(), q1 / n);
      }
      case FieldKind::Rationals:
        return neg(one());
      case FieldKind::Cyclotomic: {
        if (N % n == 0) return pow(gen(), N / n);
        // N odd: -zeta^((N+1)/2) has order 2N
        Elem z2N = neg(pow(gen(), (N + 1) / 2));
        return pow(z2N, (2 * N) / n);
      }
    }
    throw input_error("unreachable");
  }

  std::string var_letter() const {
    return kind == FieldKind::Cyclotomic ? "z" : "g";
  }

  std::string to_string(const Elem& a) const {
    if (deg() == 1) {
      std::ostringstream os;
      os << a[0];
      return os.str();
    }
    std::ostringstream os;
    bool first = true;
    for (int i = deg() - 1; i >= 0; --i) {
      if (a[i] == 0) continue;
      Rat c = a[i];
      std::string sign;
      if (!first)
        sign = (c > 0) ? "+" : "-";
      else if (c < 0)
        sign = "-";
      Rat ac = c < 0 ? Rat(-c) : c;
      std::ostringstream term;
      if (i == 0) {
        term << ac;
      } else {
        if (ac != 1) term << ac << "*";
        term << var_letter();
        if (i > 1) term << "^" << i;
      }
      os << sign << term.str();
      first = false;
    }
    if (first) return "0";
    return os.str();
  }

  std::string name() const {
    switch (kind) {
      case FieldKind::Finite: {
        std::ostringstream os;
        os << "F" << order();
        return os.str();
      }
      case FieldKind::Rationals: return "Q";
      case FieldKind::Cyclotomic: return "Q(z" + std::to_string(N) + ")";
    }
    return "?";
  }
};

namespace detail {

inline bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// monic f irreducible over F_p iff no monic divisor of degree 1..deg/2
inline bool fp_irreducible(const std::vector<Rat>& f, long p) {
  int k = pdeg(f);
  for (int d = 1; 2 * d <= k; ++d) {
    long count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (long m = 0; m < count; ++m) {
      std::vector<Rat> g(d + 1, Rat(0));
      long v = m;
      for (int i = 0; i < d; ++i) {
        g[i] = Rat(v % p);
        v /= p;
      }
      g[d] = 1;
      if (pdeg(pdivmod(f, g, p).second) < 0) return false;
    }
  }
  return true;
}

}  // namespace detail

inline Field prime_field(long p) {
  if (!detail::is_prime(p)) throw input_error("field characteristic must be prime");
  Field f;
  f.kind = FieldKind::Finite;
  f.p = p;
  f.ext = 1;
  return f;
}

// q = p^k; modulus = first irreducible monic in the integer-encoding order
inline Field finite_field(long q) {
  long p = 0;
  int k = 0;
  for (long d = 2; d <= q; ++d) {
    if (q % d == 0) {
      p = d;
      long v = q;
      while (v % d == 0) {
        v /= d;
        ++k;
      }
      if (v != 1) throw input_error("field order must be a prime power");
      break;
    }
  }
  if (!detail::is_prime(p)) throw input_error("field order must be a prime power");
  if (k == 1) return prime_field(p);
  Field f;
  f.kind = FieldKind::Finite;
  f.p = p;
  f.ext = k;
  long count = 1;
  for (int i = 0; i < k; ++i) count *= p;
  for (long m = 0; m < count; ++m) {
    std::vector<Rat> cand(k + 1, Rat(0));
    long v = m;
    for (int i = 0; i < k; ++i) {
      cand[i] = Rat(v % p);
      v /= p;
    }
    cand[k] = 1;
    if (detail::fp_irreducible(cand, p)) {
      f.modulus = cand;
      return f;
    }
  }
  throw input_error("no irreducible modulus found");
}

inline Field rationals() { return Field{}; }

inline Field cyclotomic_field(long N) {
  if (N < 1) throw input_error("cyclotomic order must be >= 1");
  Field f;
  f.kind = FieldKind::Cyclotomic;
  f.N = N;
  f.phi = detail::cyclotomic_poly(N);
  return f;
}

// "F3", "F4", "Q", "Q(z6)" / "Qz6" / "Q(zeta6)"
inline Field parse_field(const std::string& s) {
  if (s == "Q") return rationals();
  if (s.size() >= 2 && s[0] == 'F') {
    long q = 0;
    for (size_t i = 1; i < s.size(); ++i) {
      if (!isdigit((unsigned char)s[i])) throw input_error("bad field spec: " + s);
      q = q * 10 + (s[i] - '0');
    }
    return finite_field(q);
  }
  std::string t = s;
  for (const char* prefix : {"Q(zeta", "Q(z", "Qz"}) {
    std::string pre(prefix);
    if (t.rfind(pre, 0) == 0) {
      std::string rest = t.substr(pre.size());
      if (!rest.empty() && rest.back() == ')') rest.pop_back();
      if (rest.empty()) throw input_error("bad field spec: " + s);
      long n = 0;
      for (char ch : rest) {
        if (!isdigit((unsigned char)ch)) throw input_error("bad field spec: " + s);
        n = n * 10 + (ch - '0');
      }
      return cyclotomic_field(n);
    }
  }
  throw input_error("bad field spec: " + s);
}

}  // namespace charvar
