#pragma once

#include "courantx/liealgebroid.hpp"

namespace courantx {

// First-order operator on sections of a trivialized rank-r module: a vector
// field acting coefficientwise plus a polynomial endomorphism matrix,
//   D(v)_j = symbol(v_j) + sum_i matrix[j][i] v_i.
struct AtiyahOperator {
  VectorField symbol;
  std::vector<std::vector<Poly>> matrix;  // matrix[j][i], r x r

  AtiyahOperator() = default;
  AtiyahOperator(VectorField s, std::vector<std::vector<Poly>> m);

  int chart_dim() const { return symbol.chart_dim(); }
  int rank() const { return static_cast<int>(matrix.size()); }

  std::vector<Poly> apply(const std::vector<Poly>& v) const;

  AtiyahOperator& operator+=(const AtiyahOperator& o);
  friend AtiyahOperator operator+(AtiyahOperator a, const AtiyahOperator& b) {
    return a += b;
  }
  friend AtiyahOperator operator*(const Poly& f, const AtiyahOperator& d);

  bool operator==(const AtiyahOperator&) const = default;
};

// Commutator of operators: symbol part is the field bracket, matrix part is
// xi1(M2) - xi2(M1) + [M1, M2].
AtiyahOperator atiyah_bracket(const AtiyahOperator& d1, const AtiyahOperator& d2);

// Degree -1 extension of D to normal-form elements over the module frame:
//   b ⊗ e     ->  (i_{symbol} b) ⊗ e + (-1)^{deg b} b eps ⊗ D(e),
//   a eps ⊗ e ->  (i_{symbol} a) eps ⊗ e.
PrEvElement iota_tilde(const AtiyahOperator& d, const PrEvElement& m);

// Degree 0 extension: the anticommutator of the differential with iota_tilde.
PrEvElement d_tilde(const AtiyahOperator& d, const PrEvElement& m);

// The Atiyah algebroid of the trivialized module, presented on the frame
// (coordinate fields, elementary matrices): rank n + r^2.
LieAlgebroidStructure atiyah_algebroid(int n, int r);

// Operator corresponding to a section of atiyah_algebroid(n, r).
AtiyahOperator atiyah_section_operator(int n, int r, const std::vector<Poly>& sec);

// Action of an extended element over the Atiyah algebroid on module elements:
// plain atoms act through d_tilde of their operator, eps atoms through
// iota_tilde, coefficients multiply from the left.
PrEvElement atiyah_action(int n, int r, const PrEvElement& op_elem,
                          const PrEvElement& m);

}  // namespace courantx
