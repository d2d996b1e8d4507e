#include "doctest.h"

#include "courantx/connection.hpp"
#include "courantx/sampler.hpp"

using namespace courantx;

TEST_CASE("base splitting of an untwisted structure is flat") {
  CourantStructure Q = standard_family(3, 1);
  CHECK(curvature(Q, base_connection(Q)).is_zero());
  // frame images are bare coordinate fields
  for (int i = 0; i < 3; ++i) {
    CourantElement img =
        connection_apply(Q, base_connection(Q), VectorField::coordinate(3, i));
    CHECK(img.form_part.is_zero());
    CHECK(img.vec[i] == Poly::constant(3, 1));
  }
}

TEST_CASE("base splitting curvature recovers the twist") {
  const int n = 3;
  Form B = Poly::variable(n, 2) * Form::basis(n, {0, 1});
  CourantStructure Q = twisted_family(n, 1, de_rham(B));
  CHECK(curvature(Q, base_connection(Q)) == Q.twist);
  // d(z dx^dy) = dz^dx^dy = dx^dy^dz
  CHECK(Q.twist == Form::basis(n, {0, 1, 2}));
}

TEST_CASE("offset shifts curvature by an exact form") {
  const int n = 3, k = 1;
  CourantStructure Q = standard_family(n, k);
  Sampler s(41);
  for (int t = 0; t < 30; ++t) {
    Connection c{s.form(n, k + 1, 2)};
    Form w = s.form(n, k + 1, 2);
    CHECK(curvature(Q, torsor_act(c, w)) == curvature(Q, c) + de_rham(w));
    CHECK(de_rham(curvature(Q, c)).is_zero());
  }
}

TEST_CASE("splitting correction produces isotropic images and is projective") {
  const int n = 2, k = 1;
  CourantStructure Q = standard_family(n, k);
  Sampler s(42);
  for (int t = 0; t < 30; ++t) {
    Splitting sp;
    for (int i = 0; i < n; ++i) {
      std::vector<Poly> e(n, Poly(n));
      e[i] = Poly::constant(n, 1);
      sp.frame_images.push_back(Q.make(s.form(n, k, 2), e));
    }
    Connection c = isotropic_from_splitting(Q, sp);
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) {
        Form p = Q.pairing(connection_apply(Q, c, VectorField::coordinate(n, i)),
                           connection_apply(Q, c, VectorField::coordinate(n, j)));
        CHECK_MESSAGE(p.is_zero(), "offending pair ", i, ",", j);
      }
    // correcting an already-isotropic splitting is the identity
    Splitting corrected;
    for (int i = 0; i < n; ++i)
      corrected.frame_images.push_back(
          connection_apply(Q, c, VectorField::coordinate(n, i)));
    CHECK(isotropic_from_splitting(Q, corrected).offset == c.offset);
  }
}

TEST_CASE("difference of connections is form-valued and torsorial") {
  const int n = 3, k = 2;
  CourantStructure Q = standard_family(n, k);
  Sampler s(43);
  for (int t = 0; t < 30; ++t) {
    Form w1 = s.form(n, k + 1, 2), w2 = s.form(n, k + 1, 2);
    CHECK(connection_difference(Q, Connection{w1}, Connection{w2}) == w1 - w2);
    Connection moved = torsor_act(Connection{w1}, w2);
    CHECK(connection_difference(Q, moved, Connection{w1}) == w2);
  }
}
