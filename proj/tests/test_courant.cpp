#include "doctest.h"

#include "courantx/courant.hpp"
#include "courantx/sampler.hpp"

using namespace courantx;

TEST_CASE("standard family concrete bracket, pairing and anchors") {
  CourantStructure Q = standard_family(2, 1);
  CHECK(Q.rank() == 2);
  CHECK(Q.is_exact());
  Q.validate();

  Poly x = Poly::variable(2, 0);
  Form dx = Form::basis(2, {0}), dy = Form::basis(2, {1});
  CourantElement q1 = Q.make(Form(2), {Poly::constant(2, 1), Poly(2)});
  CourantElement q2 = Q.make(x * dy, {Poly(2), Poly::constant(2, 1)});

  CHECK(Q.anchor(q1) == VectorField::coordinate(2, 0));
  CHECK(Q.dorfman(q1, q2) == Q.make(dy, {Poly(2), Poly(2)}));
  // <q1, q2> = i_{v1} a2 + i_{v2} a1 = x <dy, d/dx> = 0, then swap a2 to x dx
  CHECK(Q.pairing(q1, q2).is_zero());
  CourantElement q3 = Q.make(x * dx, {Poly(2), Poly::constant(2, 1)});
  CHECK(Q.pairing(q1, q3) == Form::from_poly(x));

  Form alpha = x * dy;
  CHECK(Q.coanchor(alpha) == Q.make(alpha, {Poly(2), Poly(2)}));
  CHECK(Q.anchor(Q.coanchor(alpha)).is_zero());
}

TEST_CASE("twist contributes the double contraction term") {
  const int n = 3;
  Form B = Poly::variable(n, 2) * Form::basis(n, {0, 1});
  Form H = de_rham(B);
  CourantStructure Q = twisted_family(n, 1, H);
  CHECK(Q.twist_is_closed());

  CourantStructure Q0 = standard_family(n, 1);
  Sampler s(31);
  for (int t = 0; t < 30; ++t) {
    CourantElement a = s.courant_elem(Q, 2), b = s.courant_elem(Q, 2);
    CourantElement lhs = Q.dorfman(a, b);
    CourantElement untwisted = Q0.dorfman(a, b);
    Form extra = interior(VectorField(n, b.vec),
                          interior(VectorField(n, a.vec), H));
    CHECK_MESSAGE(lhs == untwisted + Q.make(extra, std::vector<Poly>(n, Poly(n))),
                  "a = ", a.str(), ", b = ", b.str());
  }
}

TEST_CASE("all defining identities hold on sampled structures") {
  struct Entry {
    const char* label;
    CourantStructure q;
  };
  const std::vector<Entry> entries = {
      {"standard 2/1", standard_family(2, 1)},
      {"standard 3/2", standard_family(3, 2)},
      {"quadratic so3", quadratic_so3()},
      {"commutative 2/1", commutative_family(2, 1)},
  };
  for (const auto& e : entries) {
    CAPTURE(e.label);
    e.q.validate();
    Sampler s(32);
    auto draw_q = [&]() { return s.courant_elem(e.q, 2); };
    auto draw_f = [&]() { return s.poly(e.q.n, 2); };
    auto draw_form = [&](int d) { return s.form(e.q.n, d, 2); };
    for (const AxiomCheck& c : verify_axioms(e.q, 20, draw_q, draw_f, draw_form))
      CHECK_MESSAGE(c.pass(), e.label, " violated ", c.id, ": ",
                    c.counterexample);
  }
}

TEST_CASE("quadratic family bracket and pairing use the structure tables") {
  CourantStructure Q = quadratic_so3();
  CHECK_FALSE(Q.is_exact());
  const int r = Q.rank();
  auto unit = [&](int i) {
    std::vector<Poly> e(r, Poly(0));
    e[i] = Poly::constant(0, 1);
    return e;
  };
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      CourantElement br = Q.dorfman(Q.make(Form(0), unit(i)),
                                    Q.make(Form(0), unit(j)));
      for (int m = 0; m < r; ++m) {
        Poly expected(0);
        expected += Q.lie_c[i][j][m] * Poly::constant(0, 1);
        CHECK(br.vec[m] == expected);
      }
      Form p = Q.pairing(Q.make(Form(0), unit(i)), Q.make(Form(0), unit(j)));
      CHECK(p == Form::constant(0, Q.gram[i][j]));
    }
}

TEST_CASE("an open twist breaks exactly the Jacobi identity") {
  const int n = 4;
  Form H = Poly::variable(n, 3) * Form::basis(n, {0, 1, 2});
  CourantStructure Q = twisted_family(n, 1, H, true);
  CHECK_FALSE(Q.twist_is_closed());

  auto unit = [&](int i) {
    std::vector<Poly> e(n, Poly(n));
    e[i] = Poly::constant(n, 1);
    return Q.make(Form(n), e);
  };
  CourantElement q = unit(0), q1 = unit(1), q2 = unit(2);
  CourantElement defect = Q.dorfman(q, Q.dorfman(q1, q2)) -
                          Q.dorfman(Q.dorfman(q, q1), q2) -
                          Q.dorfman(q1, Q.dorfman(q, q2));
  CHECK(defect.form_part ==
        Rational(-1) * de_rham(Form::from_poly(Poly::variable(n, 3))));
  for (const Poly& p : defect.vec) CHECK(p.is_zero());
}

TEST_CASE("twist degree and closedness are enforced") {
  CHECK_THROWS_AS(twisted_family(3, 1, Form::basis(3, {0})),
                  std::invalid_argument);
  Form open_twist = Poly::variable(4, 3) * Form::basis(4, {0, 1, 2});
  CHECK_THROWS_AS(twisted_family(4, 1, open_twist), std::invalid_argument);
  CHECK_NOTHROW(twisted_family(4, 1, open_twist, true));
}
