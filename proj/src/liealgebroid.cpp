#include "courantx/liealgebroid.hpp"

#include <stdexcept>

namespace courantx {

VectorField LieAlgebroidStructure::anchor_of(const std::vector<Poly>& sec) const {
  if (static_cast<int>(sec.size()) != rank)
    throw std::invalid_argument("section length vs rank");
  VectorField v(n);
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < n; ++j) v.comp(j) += sec[i] * anchor_frame[i].comp(j);
  return v;
}

std::vector<Poly> LieAlgebroidStructure::bracket_sections(
    const std::vector<Poly>& u, const std::vector<Poly>& v) const {
  std::vector<Poly> r(rank, Poly(n));
  VectorField su = anchor_of(u), sv = anchor_of(v);
  for (int m = 0; m < rank; ++m) {
    for (int i = 0; i < rank; ++i)
      for (int j = 0; j < rank; ++j) r[m] += u[i] * v[j] * c[i][j][m];
    r[m] += su.apply(v[m]) - sv.apply(u[m]);
  }
  return r;
}

void LieAlgebroidStructure::self_check() const {
  auto frame = [&](int i) {
    std::vector<Poly> e(rank, Poly(n));
    e[i] = Poly::constant(n, 1);
    return e;
  };
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j) {
      for (int m = 0; m < rank; ++m)
        if (!(c[i][j][m] + c[j][i][m]).is_zero())
          throw std::logic_error("structure functions not antisymmetric");
      VectorField lhs = anchor_of(c[i][j]);
      VectorField rhs = vf_bracket(anchor_frame[i], anchor_frame[j]);
      if (!(lhs == rhs)) throw std::logic_error("anchor is not a morphism");
    }
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j)
      for (int k = 0; k < rank; ++k) {
        auto lhs = bracket_sections(frame(i), bracket_sections(frame(j), frame(k)));
        auto a = bracket_sections(bracket_sections(frame(i), frame(j)), frame(k));
        auto b = bracket_sections(frame(j), bracket_sections(frame(i), frame(k)));
        for (int m = 0; m < rank; ++m)
          if (!(lhs[m] - a[m] - b[m]).is_zero())
            throw std::logic_error("frame brackets fail Jacobi");
      }
}

LieAlgebroidStructure tangent_algebroid(int n) {
  LieAlgebroidStructure A;
  A.n = n;
  A.rank = n;
  for (int i = 0; i < n; ++i) A.anchor_frame.push_back(VectorField::coordinate(n, i));
  A.c.assign(n, std::vector<std::vector<Poly>>(n, std::vector<Poly>(n, Poly(n))));
  return A;
}

LieAlgebroidStructure so3_action_algebroid() {
  const int n = 3;
  LieAlgebroidStructure A;
  A.n = n;
  A.rank = 3;
  Poly x = Poly::variable(n, 0), y = Poly::variable(n, 1), z = Poly::variable(n, 2);
  // Rotation fields R1 = y dz - z dy, R2 = z dx - x dz, R3 = x dy - y dx;
  // the anchor uses -R_i so that [a_i, a_j] = sum_k eps_{ijk} a_k matches
  // [-R_i, -R_j] = -R_k.
  VectorField R1(n), R2(n), R3(n);
  R1.comp(2) = y;
  R1.comp(1) = -z;
  R2.comp(0) = z;
  R2.comp(2) = -x;
  R3.comp(1) = x;
  R3.comp(0) = -y;
  A.anchor_frame = {-R1, -R2, -R3};
  A.c.assign(3, std::vector<std::vector<Poly>>(3, std::vector<Poly>(3, Poly(n))));
  auto set = [&](int i, int j, int k, int s) {
    A.c[i][j][k] = Poly::constant(n, s);
  };
  set(0, 1, 2, 1);
  set(1, 0, 2, -1);
  set(1, 2, 0, 1);
  set(2, 1, 0, -1);
  set(2, 0, 1, 1);
  set(0, 2, 1, -1);
  A.self_check();
  return A;
}

LieAlgebroidStructure solvable_rank2_algebroid() {
  const int n = 2;
  LieAlgebroidStructure A;
  A.n = n;
  A.rank = 2;
  A.anchor_frame = {VectorField::coordinate(n, 0), VectorField(n)};
  A.c.assign(2, std::vector<std::vector<Poly>>(2, std::vector<Poly>(2, Poly(n))));
  A.c[0][1][1] = Poly::variable(n, 0);
  A.c[1][0][1] = -Poly::variable(n, 0);
  A.self_check();
  return A;
}

Form sharp_act(const LieAlgebroidStructure& A, const PrEvElement& m,
               const Form& test) {
  Form r(A.n);
  for (int i = 0; i < A.rank; ++i) {
    if (!m.one[i].is_zero())
      r += wedge(m.one[i], lie_derivative(A.anchor_frame[i], test));
    if (!m.eps[i].is_zero())
      r += wedge(m.eps[i], interior(A.anchor_frame[i], test));
  }
  return r;
}

PrEvElement sharp_anchor(const LieAlgebroidStructure& A, const PrEvElement& m) {
  std::vector<PrevRawTerm> raw;
  for (int i = 0; i < A.rank; ++i) {
    PrevRawTerm t;
    t.coeff = SuperFunc(m.one[i], m.eps[i]);
    t.section = A.anchor_frame[i].comps();
    raw.push_back(std::move(t));
  }
  return prev_normalize(A.n, A.n, raw);
}

namespace {

void emit(std::vector<PrevRawTerm>& raw, const Form& coeff, bool is_eps,
          const std::vector<Poly>& section) {
  if (coeff.is_zero()) return;
  PrevRawTerm t;
  t.coeff = is_eps ? SuperFunc(Form(coeff.chart_dim()), coeff)
                   : SuperFunc(coeff, Form(coeff.chart_dim()));
  t.section = section;
  raw.push_back(std::move(t));
}

// Symbol of a bare summand applied to a form: Lie derivative along the
// anchored section for plain summands, contraction for eps summands.
Form section_symbol(const LieAlgebroidStructure& A, bool is_eps,
                    const std::vector<Poly>& section, const Form& w) {
  VectorField v = A.anchor_of(section);
  return is_eps ? interior(v, w) : lie_derivative(v, w);
}

}  // namespace

PrEvElement sharp_bracket_atoms(const LieAlgebroidStructure& A,
                                const SharpRawAtom& x, const SharpRawAtom& y) {
  std::vector<PrevRawTerm> raw;
  std::vector<Poly> core = A.bracket_sections(x.section, y.section);
  for (int dx : x.coeff.degrees())
    for (int dy : y.coeff.degrees()) {
      Form w = x.coeff.graded_part(dx);
      Form g = y.coeff.graded_part(dy);
      // [w A, g B] = (w ^ sym_A(g)) B
      //            + s2 (g ^ w) [A, B]
      //            - s2 (-1)^{|wA||B|} (g ^ sym_B(w)) A,
      // with s2 = (-1)^{|wA||g|}; all degrees mod 2.
      const int da = (dx + (x.is_eps ? 1 : 0)) & 1;
      const int db = y.is_eps ? 1 : 0;
      const int dg = dy & 1;
      const int s2 = (da & dg) ? -1 : 1;
      const int s3 = -s2 * ((da & db) ? -1 : 1);

      emit(raw, wedge(w, section_symbol(A, x.is_eps, x.section, g)), y.is_eps,
           y.section);

      if (!(x.is_eps && y.is_eps)) {
        Form gw = wedge(g, w);
        emit(raw, s2 == 1 ? gw : -gw, x.is_eps || y.is_eps, core);
      }

      Form tail = wedge(g, section_symbol(A, y.is_eps, y.section, w));
      emit(raw, s3 == 1 ? tail : -tail, x.is_eps, x.section);
    }
  return prev_normalize(A.n, A.rank, raw);
}

PrEvElement sharp_bracket(const LieAlgebroidStructure& A, const PrEvElement& x,
                          const PrEvElement& y) {
  PrEvElement out(A.n, A.rank);
  auto unit = [&](int i) {
    std::vector<Poly> e(A.rank, Poly(A.n));
    e[i] = Poly::constant(A.n, 1);
    return e;
  };
  for (int i = 0; i < A.rank; ++i)
    for (int j = 0; j < A.rank; ++j) {
      const SharpRawAtom xs[2] = {{x.one[i], false, unit(i)},
                                  {x.eps[i], true, unit(i)}};
      const SharpRawAtom ys[2] = {{y.one[j], false, unit(j)},
                                  {y.eps[j], true, unit(j)}};
      for (const auto& xa : xs)
        for (const auto& ya : ys) {
          if (xa.coeff.is_zero() || ya.coeff.is_zero()) continue;
          out += sharp_bracket_atoms(A, xa, ya);
        }
    }
  return out;
}

}  // namespace courantx
