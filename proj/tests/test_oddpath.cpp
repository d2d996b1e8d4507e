#include "doctest.h"

#include "courantx/prev.hpp"
#include "courantx/sampler.hpp"
#include "courantx/superfunc.hpp"

using namespace courantx;

TEST_CASE("evaluation pullback of a coordinate") {
  Poly x = Poly::variable(2, 0);
  SuperFunc p = ev_pullback(x);
  CHECK(p.even == Form::from_poly(x));
  CHECK(p.odd == Form::basis(2, {0}));
  CHECK(super_diff(p).is_zero());
}

TEST_CASE("odd differential on a concrete odd term") {
  Poly x = Poly::variable(2, 0);
  Form xdy = x * Form::basis(2, {1});
  // d((x dy) eps) = -x dy + (dx^dy) eps
  SuperFunc d = super_diff(SuperFunc(Form(2), xdy));
  CHECK(d.even == Rational(-1) * xdy);
  CHECK(d.odd == Form::basis(2, {0, 1}));
}

TEST_CASE("eps squares to zero in the graded product") {
  Sampler s(55);
  for (int t = 0; t < 30; ++t) {
    Form a = s.mixed_form(2, 0, 2, 2);
    SuperFunc odd_only(Form(2), a);
    CHECK(super_mul(odd_only, odd_only).even.is_zero());
    SuperFunc sq = super_mul(odd_only, odd_only);
    CHECK(sq.is_zero());
  }
}

TEST_CASE("graded product against an even function is plain multiplication") {
  Sampler s(56);
  for (int t = 0; t < 30; ++t) {
    Poly f = s.poly(2, 2);
    Form a = s.mixed_form(2, 0, 2, 2), b = s.mixed_form(2, 0, 2, 2);
    SuperFunc prod = super_mul(SuperFunc(Form::from_poly(f), Form(2)),
                               SuperFunc(a, b));
    CHECK(prod.even == f * a);
    CHECK(prod.odd == f * b);
  }
}

TEST_CASE("fibre integration against a concrete form") {
  Poly x = Poly::variable(2, 0), y = Poly::variable(2, 1);
  Form w = y * Form::basis(2, {0});
  // integrate(ev(x), w) = d(x y dx) = y dy^dx + 0
  Form lhs = integrate(ev_pullback(x), w);
  CHECK(lhs == de_rham((x * y) * Form::basis(2, {0})));
  CHECK(lhs == Rational(-1) * (x * Form::basis(2, {0, 1})));
}

TEST_CASE("module normal form merges balanced tensors") {
  const int n = 2, r = 2;
  Poly f = Poly::variable(n, 0);
  Form w = Form::basis(n, {1});
  std::vector<Poly> e0(r, Poly(n));
  e0[0] = Poly::constant(n, 1);
  std::vector<Poly> fe0(r, Poly(n));
  fe0[0] = f;

  std::vector<PrevRawTerm> raw(1);
  raw[0].coeff = SuperFunc(w, Form(n));
  raw[0].section = fe0;
  PrEvElement lhs = prev_normalize(n, r, raw);

  std::vector<PrevRawTerm> split(2);
  split[0].coeff = SuperFunc(f * w, Form(n));
  split[0].section = e0;
  split[1].coeff = SuperFunc(Form(n), wedge(w, de_rham(Form::from_poly(f))));
  split[1].section = e0;
  PrEvElement rhs = prev_normalize(n, r, split);
  CHECK(lhs == rhs);
  CHECK_FALSE(lhs.is_zero());
}

TEST_CASE("module differential is a square-zero derivation over forms") {
  Sampler s(900);
  for (int t = 0; t < 40; ++t) {
    PrEvElement m = s.prev_elem(2, 2, 2);
    CHECK(prev_diff(prev_diff(m)).is_zero());
    Form w = s.mixed_form(2, 0, 2, 2);
    Form sgn(2);
    for (int d : w.degrees()) {
      Form part = w.graded_part(d);
      sgn += (d % 2 == 0) ? part : Rational(-1) * part;
    }
    PrEvElement lhs = prev_diff(prev_scalar(w, m));
    PrEvElement rhs = prev_scalar(de_rham(w), m) + prev_scalar(sgn, prev_diff(m));
    CHECK_MESSAGE(lhs == rhs, "w = ", w.str(), ", m = ", m.str());
  }
}

TEST_CASE("graded parts of a module element reassemble") {
  Sampler s(901);
  for (int t = 0; t < 30; ++t) {
    PrEvElement m = s.prev_elem(3, 2, 2);
    PrEvElement back(3, 2);
    for (int d : m.element_degrees()) back += m.graded_part(d);
    CHECK(back == m);
  }
}
