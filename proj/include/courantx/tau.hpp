#pragma once

#include "courantx/courant.hpp"

namespace courantx {

// Unreduced summand of a transgressed element: a form coefficient against a
// module element, through the plain or the eps tensor factor.
struct TauTerm {
  Form coeff;
  bool is_eps = false;
  CourantElement q;
};

// Unreduced transgressed element: a theta part (a form riding the central
// generator) plus summands. Used to exercise relation-independence; reduce()
// maps it onto the normal form.
struct TauRaw {
  Form theta;
  std::vector<TauTerm> terms;
};

// Normal form of a transgressed element over the complement frame b_1..b_r:
//   theta * c + sum_i one[i] ⊗ b_i + sum_i eps[i] eps ⊗ b_i,
// where c is the central generator. Degrees: a theta piece of form degree d
// sits in degree d - shift, a one[i] piece in degree d, an eps[i] piece in
// degree d - 1.
struct TauElement {
  Form theta;
  std::vector<Form> one;
  std::vector<Form> eps;

  bool is_zero() const;
  bool is_theta_only() const;

  TauElement operator-() const;
  TauElement& operator+=(const TauElement& o);
  TauElement& operator-=(const TauElement& o);
  friend TauElement operator+(TauElement a, const TauElement& b) { return a += b; }
  friend TauElement operator-(TauElement a, const TauElement& b) { return a -= b; }

  bool operator==(const TauElement&) const = default;

  std::vector<int> element_degrees(int shift) const;
  TauElement graded_part(int shift, int d) const;

  std::string str() const;
};

// The graded Lie algebroid transgressed from a Courant structure. Elements
// live over the de Rham algebra of the chart; the central generator c sits in
// degree -shift with shift = k + 1.
class TauAlgebroid {
 public:
  explicit TauAlgebroid(CourantStructure q);

  const CourantStructure& courant() const { return Q_; }
  int chart_dim() const { return Q_.n; }
  int rank() const { return Q_.rank(); }
  int shift() const { return Q_.k + 1; }

  TauElement zero_elem() const;
  TauElement marking() const;  // 1 * c, degree -shift

  // The class of coeff ⊗ q or coeff eps ⊗ q.
  TauElement of_term(const Form& coeff, bool is_eps, const CourantElement& q) const;
  // Canonical representative of a normal form.
  TauRaw raw_of(const TauElement& a) const;

  // Pushes every summand through the defining relations: the coanchor part of
  // the module slot becomes a theta contribution, the complement part spreads
  // over the frame with the balancing corrections.
  TauElement reduce(const TauRaw& r) const;

  TauElement scalar(const Form& w, const TauElement& a) const;

  // The bracket on unreduced representatives (reduced on return), extending
  //   [1⊗q1, 1⊗q2] = 1⊗{q1,q2}
  //   [1⊗q1, eps⊗q2] = eps⊗{q1,q2}
  //   [eps⊗q1, 1⊗q2] = -d<q1,q2> * c + eps⊗{q1,q2}
  //   [eps⊗q1, eps⊗q2] = <q1,q2> * c
  // through the anchored Leibniz rules, with c central.
  TauElement bracket_raw(const TauRaw& x, const TauRaw& y) const;
  TauElement bracket(const TauElement& x, const TauElement& y) const;

  // Degree +1 differential: de Rham on theta and plain coefficients, and on
  // eps coefficients the two-term rule d(a eps ⊗ b) = da eps ⊗ b
  // + (-1)^{deg a} a ⊗ b.
  TauElement diff(const TauElement& a) const;

  // Anchor to the extended tangent frame: theta dies, coefficients push
  // forward along the module anchor.
  PrEvElement anchor(const TauElement& a) const;

  // -- adapters used by the generic marked-structure checks ---------------
  using Elem = TauElement;
  TauElement bracket_elems(const TauElement& x, const TauElement& y) const {
    return bracket(x, y);
  }
  bool anchor_is_zero(const TauElement& a) const { return anchor(a).is_zero(); }
  bool is_central_line(const TauElement& a) const { return a.is_theta_only(); }
  bool is_zero_elem(const TauElement& a) const { return a.is_zero(); }

 private:
  CourantStructure Q_;
};

}  // namespace courantx
