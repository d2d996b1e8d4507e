#include "doctest.h"

#include "courantx/liealgebroid.hpp"
#include "courantx/sampler.hpp"

using namespace courantx;

TEST_CASE("sample algebroids satisfy their own structure checks") {
  tangent_algebroid(2).self_check();
  tangent_algebroid(3).self_check();
  so3_action_algebroid().self_check();
  solvable_rank2_algebroid().self_check();
}

TEST_CASE("tangent algebroid bracket is the field bracket") {
  LieAlgebroidStructure tg = tangent_algebroid(2);
  CHECK(tg.rank == 2);
  Sampler s(11);
  for (int t = 0; t < 30; ++t) {
    std::vector<Poly> u = s.section(2, 2, 2), v = s.section(2, 2, 2);
    VectorField lhs(2, tg.bracket_sections(u, v));
    VectorField rhs = vf_bracket(VectorField(2, u), VectorField(2, v));
    CHECK_MESSAGE(lhs == rhs, "u, v gave ", lhs.str(), " vs ", rhs.str());
    CHECK(tg.anchor_of(u) == VectorField(2, u));
  }
}

TEST_CASE("section bracket satisfies the anchored Leibniz rule") {
  const std::vector<LieAlgebroidStructure> samples = {
      tangent_algebroid(2), so3_action_algebroid(), solvable_rank2_algebroid()};
  Sampler s(12);
  for (int t = 0; t < 40; ++t) {
    const auto& a = samples[t % samples.size()];
    std::vector<Poly> u = s.section(a.n, a.rank, 2);
    std::vector<Poly> v = s.section(a.n, a.rank, 2);
    Poly f = s.poly(a.n, 2);

    std::vector<Poly> fv(v);
    for (Poly& p : fv) p = f * p;
    std::vector<Poly> lhs = a.bracket_sections(u, fv);
    Poly rho_f = a.anchor_of(u).apply(f);
    std::vector<Poly> rhs = a.bracket_sections(u, v);
    for (int i = 0; i < a.rank; ++i) rhs[i] = f * rhs[i] + rho_f * v[i];
    for (int i = 0; i < a.rank; ++i)
      CHECK_MESSAGE(lhs[i] == rhs[i], "slot ", i, " over ", a.n,
                    "-dim chart rank ", a.rank);
  }
}

TEST_CASE("anchor intertwines brackets") {
  const std::vector<LieAlgebroidStructure> samples = {
      so3_action_algebroid(), solvable_rank2_algebroid()};
  Sampler s(13);
  for (int t = 0; t < 40; ++t) {
    const auto& a = samples[t % samples.size()];
    std::vector<Poly> u = s.section(a.n, a.rank, 2);
    std::vector<Poly> v = s.section(a.n, a.rank, 2);
    VectorField lhs = a.anchor_of(a.bracket_sections(u, v));
    VectorField rhs = vf_bracket(a.anchor_of(u), a.anchor_of(v));
    CHECK_MESSAGE(lhs == rhs, "anchors ", lhs.str(), " vs ", rhs.str());
  }
}

TEST_CASE("rotation action algebroid has the cyclic structure constants") {
  LieAlgebroidStructure a = so3_action_algebroid();
  CHECK(a.rank == 3);
  CHECK(a.n == 3);
  auto unit = [&](int i) {
    std::vector<Poly> e(a.rank, Poly(a.n));
    e[i] = Poly::constant(a.n, 1);
    return e;
  };
  // brackets of frame sections follow the stored constants
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      std::vector<Poly> br = a.bracket_sections(unit(i), unit(j));
      for (int m = 0; m < 3; ++m) CHECK(br[m] == a.c[i][j][m]);
    }
  // and the constants are antisymmetric with the cyclic normalization
  CHECK(a.c[0][1][2] == -a.c[1][0][2]);
  CHECK_FALSE(a.c[0][1][2].is_zero());
}
