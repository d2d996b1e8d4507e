#include "doctest.h"

#include "courantx/atiyah.hpp"
#include "courantx/sampler.hpp"

using namespace courantx;

namespace {

AtiyahOperator random_operator(Sampler& s, int n, int r, int md) {
  std::vector<std::vector<Poly>> m(r, std::vector<Poly>(r, Poly(n)));
  for (auto& row : m)
    for (auto& e : row)
      if (s.below(2) == 0) e = s.poly(n, md);
  return AtiyahOperator(s.vector_field(n, md), std::move(m));
}

}  // namespace

TEST_CASE("operator application is first order with symbol") {
  Sampler s(21);
  const int n = 2, r = 2;
  for (int t = 0; t < 40; ++t) {
    AtiyahOperator d = random_operator(s, n, r, 2);
    Poly f = s.poly(n, 2);
    std::vector<Poly> v = s.section(n, r, 2);
    std::vector<Poly> fv(v);
    for (Poly& p : fv) p = f * p;
    std::vector<Poly> lhs = d.apply(fv);
    Poly sym_f = d.symbol.apply(f);
    std::vector<Poly> rhs = d.apply(v);
    for (int i = 0; i < r; ++i) rhs[i] = f * rhs[i] + sym_f * v[i];
    for (int i = 0; i < r; ++i) CHECK(lhs[i] == rhs[i]);
  }
}

TEST_CASE("operator bracket has the bracketed symbol") {
  Sampler s(22);
  const int n = 2, r = 2;
  for (int t = 0; t < 30; ++t) {
    AtiyahOperator d1 = random_operator(s, n, r, 2);
    AtiyahOperator d2 = random_operator(s, n, r, 2);
    AtiyahOperator br = atiyah_bracket(d1, d2);
    CHECK(br.symbol == vf_bracket(d1.symbol, d2.symbol));
    std::vector<Poly> v = s.section(n, r, 2);
    std::vector<Poly> lhs = br.apply(v);
    std::vector<Poly> c1 = d1.apply(d2.apply(v));
    std::vector<Poly> c2 = d2.apply(d1.apply(v));
    for (int i = 0; i < r; ++i) CHECK(lhs[i] == c1[i] - c2[i]);
  }
}

TEST_CASE("operator frame algebroid closes with the expected rank") {
  LieAlgebroidStructure a = atiyah_algebroid(2, 2);
  CHECK(a.n == 2);
  CHECK(a.rank == 2 + 2 * 2);
  a.self_check();
}

TEST_CASE("frame sections of the operator algebroid act as their operators") {
  Sampler s(23);
  const int n = 2, r = 2;
  LieAlgebroidStructure a = atiyah_algebroid(n, r);
  for (int t = 0; t < 25; ++t) {
    std::vector<Poly> s1 = s.section(n, a.rank, 2);
    std::vector<Poly> s2 = s.section(n, a.rank, 2);
    AtiyahOperator lhs =
        atiyah_section_operator(n, r, a.bracket_sections(s1, s2));
    AtiyahOperator rhs = atiyah_bracket(atiyah_section_operator(n, r, s1),
                                        atiyah_section_operator(n, r, s2));
    CHECK(lhs == rhs);
  }
}

TEST_CASE("lowered and raised operators anticommute and commute correctly") {
  Sampler s(24);
  const int n = 2, r = 2;
  for (int t = 0; t < 25; ++t) {
    AtiyahOperator d1 = random_operator(s, n, r, 2);
    AtiyahOperator d2 = random_operator(s, n, r, 2);
    PrEvElement m = s.prev_elem(n, r, 2);

    PrEvElement anti =
        iota_tilde(d1, iota_tilde(d2, m)) + iota_tilde(d2, iota_tilde(d1, m));
    CHECK_MESSAGE(anti.is_zero(), "m = ", m.str());

    PrEvElement lhs =
        d_tilde(d1, d_tilde(d2, m)) - d_tilde(d2, d_tilde(d1, m));
    CHECK(lhs == d_tilde(atiyah_bracket(d1, d2), m));

    PrEvElement mixed =
        d_tilde(d1, iota_tilde(d2, m)) - iota_tilde(d2, d_tilde(d1, m));
    CHECK(mixed == iota_tilde(atiyah_bracket(d1, d2), m));
  }
}

TEST_CASE("raised operator collapses to a first-order formula on summands") {
  Sampler s(25);
  const int n = 2, r = 2;
  for (int t = 0; t < 25; ++t) {
    AtiyahOperator d = random_operator(s, n, r, 2);
    const int i = s.below(r);
    Form w = s.form(n, s.below(n + 1), 2);
    std::vector<Poly> ei(r, Poly(n));
    ei[i] = Poly::constant(n, 1);

    std::vector<PrevRawTerm> raw(1);
    raw[0].coeff = SuperFunc(w, Form(n));
    raw[0].section = ei;
    PrEvElement lhs = d_tilde(d, prev_normalize(n, r, raw));

    std::vector<PrevRawTerm> expected(2);
    expected[0].coeff = SuperFunc(lie_derivative(d.symbol, w), Form(n));
    expected[0].section = ei;
    expected[1].coeff = SuperFunc(w, Form(n));
    expected[1].section = d.apply(ei);
    CHECK_MESSAGE(lhs == prev_normalize(n, r, expected), "w = ", w.str());

    raw[0].coeff = SuperFunc(Form(n), w);
    PrEvElement lhs_eps = d_tilde(d, prev_normalize(n, r, raw));
    expected[0].coeff = SuperFunc(Form(n), lie_derivative(d.symbol, w));
    expected[1].coeff = SuperFunc(Form(n), w);
    CHECK_MESSAGE(lhs_eps == prev_normalize(n, r, expected), "w = ", w.str());
  }
}
