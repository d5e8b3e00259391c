#include "charvar/intmat.hpp"
#include "charvar/laurent.hpp"
#include "charvar/ulaurent.hpp"

#include "doctest.h"

#include <random>

using namespace charvar;

namespace {

LaurentPoly t(int i, int e = 1) { return LaurentPoly::variable(2, i, e); }
LaurentPoly c2(const Rat& v) { return LaurentPoly::constant(2, v); }

LaurentPoly random_poly(std::mt19937& rng, int nv) {
  std::uniform_int_distribution<int> nterms(0, 4), expo(-2, 2), coef(-3, 3);
  LaurentPoly p = LaurentPoly::constant(nv, 0);
  int n = nterms(rng);
  for (int i = 0; i < n; ++i) {
    std::vector<int> e(nv);
    for (auto& x : e) x = expo(rng);
    p = p + LaurentPoly::monomial(nv, e, coef(rng));
  }
  return p;
}

std::vector<Field::Elem> random_char(std::mt19937& rng, const Field& F, int nv) {
  auto us = F.units();
  std::uniform_int_distribution<size_t> pick(0, us.size() - 1);
  std::vector<Field::Elem> xs;
  for (int i = 0; i < nv; ++i) xs.push_back(us[pick(rng)]);
  return xs;
}

}  // namespace

TEST_CASE("laurent arithmetic basics") {
  LaurentPoly p = (t(0) - c2(1)) * (t(0) + c2(1));
  CHECK(p == t(0, 2) - c2(1));
  CHECK((p - p).is_zero());
  CHECK(p.to_string({"t1", "t2"}) == "-1+t1^2");
  LaurentPoly q = t(0, -1) * t(0);
  CHECK(q == c2(1));
  CHECK((t(0) * t(1)) == (t(1) * t(0)));
}

TEST_CASE("evaluation is a ring homomorphism") {
  std::mt19937 rng(42);
  for (const Field& F : {prime_field(3), prime_field(5), cyclotomic_field(6)}) {
    for (int trial = 0; trial < 60; ++trial) {
      LaurentPoly p = random_poly(rng, 2), q = random_poly(rng, 2);
      std::vector<Field::Elem> xs;
      if (F.kind == FieldKind::Finite) {
        xs = random_char(rng, F, 2);
      } else {
        xs = {F.root_of_unity(6), F.neg(F.root_of_unity(3))};
      }
      auto lhs = (p * q).eval(F, xs);
      auto rhs = F.mul(p.eval(F, xs), q.eval(F, xs));
      CHECK(F.eq(lhs, rhs));
      CHECK(F.eq((p + q).eval(F, xs), F.add(p.eval(F, xs), q.eval(F, xs))));
    }
  }
}

TEST_CASE("displayed matrix entries vanish at the variant-2 character") {
  // (t1-1)(t1+1) and (t1-1)(t1*t2+1) both vanish at (-1,1)
  LaurentPoly a = (t(0) - c2(1)) * (t(0) + c2(1));
  LaurentPoly b = (t(0) - c2(1)) * (t(0) * t(1) + c2(1));
  Field Q = rationals();
  std::vector<Field::Elem> xs = {Q.neg(Q.one()), Q.one()};
  CHECK(Q.is_zero(a.eval(Q, xs)));
  CHECK(Q.is_zero(b.eval(Q, xs)));
  Field F3 = prime_field(3);
  std::vector<Field::Elem> ys = {F3.from_int(2), F3.one()};
  CHECK(F3.is_zero(b.eval(F3, ys)));
}

TEST_CASE("augmentation sums coefficients") {
  LaurentPoly p = (t(0) - c2(1)) * (t(1) + c2(3));
  CHECK(p.augmentation() == 0);
  CHECK((t(0, 5) + c2(2)).augmentation() == 3);
}

TEST_CASE("substitute_one drops a variable") {
  LaurentPoly p = (t(0) - c2(1)) * (t(0) * t(1) + c2(1));
  LaurentPoly q = p.substitute_one(1);  // t2 := 1
  CHECK(q.nv == 1);
  LaurentPoly e = LaurentPoly::variable(1, 0, 2) - LaurentPoly::constant(1, 1);
  CHECK(q == e);  // (t1-1)(t1+1)
}

TEST_CASE("univariate laurent division and units") {
  LaurentRing R{rationals()};
  ULaurent f = {-1, {R.F.from_int(1), R.F.from_int(0), R.F.from_int(1)}};  // t^-1 + t
  ULaurent g = R.t_power(-1);
  auto [q, r] = R.divmod(f, g);
  CHECK(R.is_zero(r));
  CHECK(R.eq(R.mul(q, g), f));
  CHECK(R.is_unit(g));
  CHECK_FALSE(R.is_unit(f));
  CHECK(R.divides(g, f));
  ULaurent unit;
  ULaurent m = R.monic_associate({2, {R.F.from_int(3), R.F.from_int(3)}}, &unit);
  CHECK(R.to_string(m) == "t+1");
  CHECK(R.eq(R.mul(unit, ULaurent{2, {R.F.from_int(3), R.F.from_int(3)}}), m));
}

TEST_CASE("integer and laurent SNF reconstruct on random matrices") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> dim(1, 4), entry(-6, 6);

  for (int trial = 0; trial < 200; ++trial) {
    int m = dim(rng), n = dim(rng);
    IMat A(m, std::vector<Int>(n));
    for (auto& row : A)
      for (auto& x : row) x = entry(rng);
    SnfInt s = smith_normal_form(A);
    IMat lhs = imat_mul(imat_mul(s.U, A), s.V);
    CHECK(lhs == s.diag_matrix());
    for (size_t i = 0; i + 1 < s.diag.size(); ++i)
      if (s.diag[i] != 0) CHECK(s.diag[i + 1] % s.diag[i] == 0);
    Int du = idet(s.U), dv = idet(s.V);
    CHECK((du == 1 || du == -1));
    CHECK((dv == 1 || dv == -1));
  }

  LaurentRing R{prime_field(5)};
  std::uniform_int_distribution<int> off(-2, 2), len(0, 3), cf(0, 4);
  auto rand_ul = [&]() {
    int o = off(rng), l = len(rng);
    std::vector<Field::Elem> cs;
    for (int i = 0; i < l; ++i) cs.push_back(R.F.from_int(cf(rng)));
    return R.normalize(o, cs);
  };
  for (int trial = 0; trial < 200; ++trial) {
    int m = dim(rng), n = dim(rng);
    UMat A(m, std::vector<ULaurent>(n));
    for (auto& row : A)
      for (auto& x : row) x = rand_ul();
    SnfLaurent s = smith_normal_form(R, A);
    UMat lhs = ulaurent_mat_mul(R, ulaurent_mat_mul(R, s.U, A), s.V);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < n; ++j) {
        if (i == j && i < (int)s.diag.size())
          CHECK(R.eq(lhs[i][j], s.diag[i]));
        else
          CHECK(R.is_zero(lhs[i][j]));
      }
    for (size_t i = 0; i + 1 < s.diag.size(); ++i)
      if (!R.is_zero(s.diag[i])) CHECK(R.divides(s.diag[i], s.diag[i + 1]));
  }
}
