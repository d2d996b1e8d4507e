#include "courantx/atiyah.hpp"

#include <stdexcept>

namespace courantx {

AtiyahOperator::AtiyahOperator(VectorField s, std::vector<std::vector<Poly>> m)
    : symbol(std::move(s)), matrix(std::move(m)) {
  for (const auto& row : matrix)
    if (row.size() != matrix.size())
      throw std::invalid_argument("matrix must be square");
}

std::vector<Poly> AtiyahOperator::apply(const std::vector<Poly>& v) const {
  const int r = rank();
  if (static_cast<int>(v.size()) != r)
    throw std::invalid_argument("section length vs rank");
  std::vector<Poly> out(r, Poly(chart_dim()));
  for (int j = 0; j < r; ++j) {
    out[j] = symbol.apply(v[j]);
    for (int i = 0; i < r; ++i) out[j] += matrix[j][i] * v[i];
  }
  return out;
}

AtiyahOperator& AtiyahOperator::operator+=(const AtiyahOperator& o) {
  symbol += o.symbol;
  for (int j = 0; j < rank(); ++j)
    for (int i = 0; i < rank(); ++i) matrix[j][i] += o.matrix[j][i];
  return *this;
}

AtiyahOperator operator*(const Poly& f, const AtiyahOperator& d) {
  AtiyahOperator r = d;
  r.symbol = f * r.symbol;
  for (auto& row : r.matrix)
    for (auto& e : row) e = f * e;
  return r;
}

AtiyahOperator atiyah_bracket(const AtiyahOperator& d1, const AtiyahOperator& d2) {
  const int r = d1.rank(), n = d1.chart_dim();
  if (r != d2.rank() || n != d2.chart_dim())
    throw std::invalid_argument("operator shape mismatch");
  AtiyahOperator out(vf_bracket(d1.symbol, d2.symbol),
                     std::vector<std::vector<Poly>>(r, std::vector<Poly>(r, Poly(n))));
  for (int j = 0; j < r; ++j)
    for (int i = 0; i < r; ++i) {
      out.matrix[j][i] =
          d1.symbol.apply(d2.matrix[j][i]) - d2.symbol.apply(d1.matrix[j][i]);
      for (int m = 0; m < r; ++m)
        out.matrix[j][i] +=
            d1.matrix[j][m] * d2.matrix[m][i] - d2.matrix[j][m] * d1.matrix[m][i];
    }
  return out;
}

PrEvElement iota_tilde(const AtiyahOperator& d, const PrEvElement& m) {
  const int r = m.rank();
  if (r != d.rank()) throw std::invalid_argument("rank mismatch");
  PrEvElement out(m.n, r);
  for (int i = 0; i < r; ++i) {
    out.one[i] += interior(d.symbol, m.one[i]);
    out.eps[i] += interior(d.symbol, m.eps[i]);
    // The matrix part moves the plain factor across eps with a Koszul sign
    // and lands on D(e_i) = sum_j matrix[j][i] e_j.
    for (int deg : m.one[i].degrees()) {
      Form part = m.one[i].graded_part(deg);
      if (deg % 2 == 1) part = -part;
      for (int j = 0; j < r; ++j) out.eps[j] += d.matrix[j][i] * part;
    }
  }
  return out;
}

PrEvElement d_tilde(const AtiyahOperator& d, const PrEvElement& m) {
  return prev_diff(iota_tilde(d, m)) + iota_tilde(d, prev_diff(m));
}

LieAlgebroidStructure atiyah_algebroid(int n, int r) {
  LieAlgebroidStructure A;
  A.n = n;
  A.rank = n + r * r;
  // Frame: n coordinate-field slots, then the r^2 elementary matrices E_{ab}
  // at slot n + a*r + b (E_{ab} e_b = e_a).
  for (int i = 0; i < n; ++i) A.anchor_frame.push_back(VectorField::coordinate(n, i));
  for (int s = n; s < A.rank; ++s) A.anchor_frame.push_back(VectorField(n));
  A.c.assign(A.rank, std::vector<std::vector<Poly>>(A.rank,
                                                    std::vector<Poly>(A.rank, Poly(n))));
  auto mat_slot = [&](int a, int b) { return n + a * r + b; };
  for (int a = 0; a < r; ++a)
    for (int b = 0; b < r; ++b)
      for (int cc = 0; cc < r; ++cc)
        for (int dd = 0; dd < r; ++dd) {
          // [E_{ab}, E_{cd}] = delta_{bc} E_{ad} - delta_{da} E_{cb}
          if (b == cc)
            A.c[mat_slot(a, b)][mat_slot(cc, dd)][mat_slot(a, dd)] +=
                Poly::constant(n, 1);
          if (dd == a)
            A.c[mat_slot(a, b)][mat_slot(cc, dd)][mat_slot(cc, b)] -=
                Poly::constant(n, 1);
        }
  return A;
}

AtiyahOperator atiyah_section_operator(int n, int r, const std::vector<Poly>& sec) {
  if (static_cast<int>(sec.size()) != n + r * r)
    throw std::invalid_argument("section length vs Atiyah rank");
  VectorField sym(n);
  for (int i = 0; i < n; ++i) sym.comp(i) = sec[i];
  std::vector<std::vector<Poly>> mat(r, std::vector<Poly>(r, Poly(n)));
  for (int a = 0; a < r; ++a)
    for (int b = 0; b < r; ++b) mat[a][b] = sec[n + a * r + b];
  return {std::move(sym), std::move(mat)};
}

PrEvElement atiyah_action(int n, int r, const PrEvElement& op_elem,
                          const PrEvElement& m) {
  PrEvElement out(n, r);
  for (int s = 0; s < op_elem.rank(); ++s) {
    std::vector<Poly> unit(op_elem.rank(), Poly(n));
    unit[s] = Poly::constant(n, 1);
    AtiyahOperator ds = atiyah_section_operator(n, r, unit);
    if (!op_elem.one[s].is_zero())
      out += prev_scalar(op_elem.one[s], d_tilde(ds, m));
    if (!op_elem.eps[s].is_zero())
      out += prev_scalar(op_elem.eps[s], iota_tilde(ds, m));
  }
  return out;
}

}  // namespace courantx
