#include "doctest.h"

#include "courantx/ctl.hpp"
#include "courantx/sampler.hpp"

using namespace courantx;

TEST_CASE("morphism squares hold for the canonical map on every family") {
  const std::vector<CourantStructure> structures = {
      standard_family(2, 1), standard_family(3, 2), quadratic_so3(),
      commutative_family(2, 1)};
  for (const auto& Q : structures) {
    TauAlgebroid T(Q);
    auto phi = [&T](const CourantElement& q) { return initial_ctl(T, q); };
    Sampler s(71);
    for (int t = 0; t < 20; ++t) {
      CourantElement q1 = s.courant_elem(Q, 2), q2 = s.courant_elem(Q, 2);
      Form alpha = s.form(Q.n, Q.k, 2);
      std::string fail = ctl_square_failure(Q, T, phi, q1, q2, alpha);
      CHECK_MESSAGE(fail.empty(), fail, " on a rank-", Q.rank(), " structure");
    }
  }
}

TEST_CASE("re-splitting carries the twist to an equivalent structure") {
  const int n = 3, k = 1;
  Sampler s(72);
  for (int t = 0; t < 15; ++t) {
    Form b0 = s.form(n, k + 1, 2);
    CourantStructure Q = twisted_family(n, k, de_rham(b0));
    Form shift = s.form(n, k + 1, 2);
    CourantStructure Qt = resplit_target(Q, shift);
    CHECK(Qt.twist == Q.twist - de_rham(shift));
    Qt.validate();

    // the re-split map composed with the canonical morphism still satisfies
    // the squares against the source structure
    TauAlgebroid T(Qt);
    auto phi = [&](const CourantElement& q) {
      return initial_ctl(T, resplit_apply(Q, shift, q));
    };
    CourantElement q1 = s.courant_elem(Q, 2), q2 = s.courant_elem(Q, 2);
    Form alpha = s.form(n, k, 2);
    std::string fail = ctl_square_failure(Q, T, phi, q1, q2, alpha);
    CHECK_MESSAGE(fail.empty(), fail, " after re-splitting by ", shift.str());
  }
}

TEST_CASE("re-splitting rejects ineligible inputs") {
  CHECK_THROWS(resplit_target(standard_family(2, 1), Form::basis(2, {0, 1})));
  CourantStructure Q =
      twisted_family(3, 1, de_rham(Poly::variable(3, 2) * Form::basis(3, {0, 1})));
  CHECK_THROWS(resplit_target(Q, Form::basis(3, {0})));  // wrong degree
}

TEST_CASE("reconstruction returns the original structure maps") {
  const std::vector<CourantStructure> structures = {
      standard_family(2, 1), quadratic_so3(), commutative_family(2, 1)};
  for (const auto& Q : structures) {
    TauAlgebroid T(Q);
    ReconstructedCourant R = cour_of(T);
    Sampler s(73);
    for (int t = 0; t < 20; ++t) {
      CourantElement a = s.courant_elem(Q, 2), b = s.courant_elem(Q, 2);
      CHECK(R.to_q(R.from_q(a)) == a);
      CHECK(R.anchor(a) == Q.anchor(a));
      CHECK(R.pairing(a, b) == Q.pairing(a, b));
      CHECK(R.dorfman(a, b) == Q.dorfman(a, b));
      if (Q.is_exact()) {
        Form alpha = s.form(Q.n, Q.k, 2);
        CHECK(R.coanchor(alpha) == Q.coanchor(alpha));
      }
    }
  }
}

TEST_CASE("hypothesis screening accepts the marking and rejects corruptions") {
  CourantStructure Q = standard_family(2, 1);
  TauAlgebroid T(Q);
  Sampler s(74);
  std::vector<TauElement> probes;
  for (int t = 0; t < 5; ++t)
    probes.push_back(initial_ctl(T, s.courant_elem(Q, 2)));

  CHECK(cour_of_hypothesis_failure(T, T.marking(), probes).empty());

  std::vector<Poly> e0 = {Poly::constant(2, 1), Poly(2)};
  TauElement off_line = T.marking() + initial_ctl(T, Q.make(Form(2), e0));
  CHECK_FALSE(cour_of_hypothesis_failure(T, off_line, probes).empty());

  TauElement wrong_degree = T.scalar(Form::basis(2, {0}), T.marking());
  CHECK_FALSE(cour_of_hypothesis_failure(T, wrong_degree, probes).empty());
}

TEST_CASE("universal extension to the finite model is structure preserving") {
  CourantStructure Q = quadratic_so3();
  TauAlgebroid T(Q);
  QuadraticModel M(Q);
  const int r = Q.rank();

  std::vector<QuadraticModel::Elem> frame;
  std::vector<TauElement> tau_frame;
  for (int i = 0; i < r; ++i) {
    frame.push_back(M.frame(i));
    std::vector<Poly> ei(r, Poly(0));
    ei[i] = Poly::constant(0, 1);
    tau_frame.push_back(initial_ctl(T, Q.make(Form(0), ei)));
  }
  auto extend = [&](const TauElement& a) {
    return universal_extend(T, M, frame, a);
  };

  CHECK(extend(T.marking()) == M.marking());
  for (int i = 0; i < r; ++i) {
    CHECK(extend(tau_frame[i]) == M.frame(i));
    CHECK(extend(T.diff(tau_frame[i])) == M.diff(M.frame(i)));
    for (int j = 0; j < r; ++j) {
      // frame brackets produce the symmetric form in the central slot
      QuadraticModel::Elem expected =
          M.make(Q.gram[i][j], std::vector<Rational>(r, 0),
                 std::vector<Rational>(r, 0));
      CHECK(extend(T.bracket(tau_frame[i], tau_frame[j])) == expected);
    }
  }
}
