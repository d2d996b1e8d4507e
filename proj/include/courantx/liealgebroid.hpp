#pragma once

#include <vector>

#include "courantx/prev.hpp"

namespace courantx {

// Lie algebroid on a polynomial chart, presented by a free frame a_1..a_r
// with polynomial structure functions: [a_i, a_j] = sum_m c[i][j][m] a_m and
// anchor(a_i) = a polynomial vector field. Sections are coefficient vectors
// in this frame.
struct LieAlgebroidStructure {
  int n = 0;     // chart dimension
  int rank = 0;  // frame size
  std::vector<VectorField> anchor_frame;
  std::vector<std::vector<std::vector<Poly>>> c;  // c[i][j] = coefficients of [a_i,a_j]

  VectorField anchor_of(const std::vector<Poly>& sec) const;
  // Leibniz extension of the frame brackets to O-coefficient sections.
  std::vector<Poly> bracket_sections(const std::vector<Poly>& u,
                                     const std::vector<Poly>& v) const;

  // Throws if the structure functions are not antisymmetric, fail Jacobi on
  // frame triples, or the anchor is not a morphism on frame pairs.
  void self_check() const;
};

LieAlgebroidStructure tangent_algebroid(int n);
// Action algebroid of the rotation Lie algebra acting on 3-space; the frame
// brackets are the cyclic e_i x e_j = e_k ones, the anchor sends e_i to minus
// the corresponding rotation field.
LieAlgebroidStructure so3_action_algebroid();
// Rank-2 solvable example on the plane: [a1,a2] = x a2, anchor a1 = d/dx,
// anchor a2 = 0.
LieAlgebroidStructure solvable_rank2_algebroid();

// --- calculus on extended elements -----------------------------------------
//
// PrEvElement over the algebroid frame carries two kinds of atoms:
//   b ⊗ a   (degree deg b, acting on forms as b ^ L_{anchor a})
//   a eps ⊗ a (degree deg a - 1, acting as a ^ i_{anchor a}).

// Action of an element on a test form through its anchor symbols.
Form sharp_act(const LieAlgebroidStructure& A, const PrEvElement& m,
               const Form& test);

// Pushforward along the anchor: same element shape, but over the coordinate
// frame of the tangent algebroid.
PrEvElement sharp_anchor(const LieAlgebroidStructure& A, const PrEvElement& m);

// Unbalanced summand coeff ⊗ section (plain) or coeff eps ⊗ section. The
// bracket accepts these directly, which lets the tests confirm that the two
// balancing relations are respected rather than presupposed.
struct SharpRawAtom {
  Form coeff;
  bool is_eps = false;
  std::vector<Poly> section;
};

// Graded bracket of two unbalanced summands, extending the frame brackets
// through the anchored Leibniz rules; the result is in normal form.
PrEvElement sharp_bracket_atoms(const LieAlgebroidStructure& A,
                                const SharpRawAtom& x, const SharpRawAtom& y);

// Graded bracket on normal forms; closes on normal forms.
PrEvElement sharp_bracket(const LieAlgebroidStructure& A, const PrEvElement& x,
                          const PrEvElement& y);

}  // namespace courantx
