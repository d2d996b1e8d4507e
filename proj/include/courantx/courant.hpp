#pragma once

#include <functional>
#include <string>
#include <vector>

#include "courantx/liealgebroid.hpp"

namespace courantx {

enum class CourantFamily { standard_exact, twisted, quadratic, commutative };

std::string family_name(CourantFamily f);

// Element of a k-dimensional Courant module in the fixed splitting: a degree-k
// form plus a coefficient vector over the complement frame (the coordinate
// fields for the exact families, the Lie algebra frame for the quadratic one,
// nothing for the commutative one).
struct CourantElement {
  Form form_part;
  std::vector<Poly> vec;

  bool is_zero() const;
  CourantElement operator-() const;
  CourantElement& operator+=(const CourantElement& o);
  CourantElement& operator-=(const CourantElement& o);
  friend CourantElement operator+(CourantElement a, const CourantElement& b) {
    return a += b;
  }
  friend CourantElement operator-(CourantElement a, const CourantElement& b) {
    return a -= b;
  }
  friend CourantElement operator*(const Poly& f, const CourantElement& q);

  bool operator==(const CourantElement&) const = default;

  std::string str() const;
};

// A k-dimensional Courant algebroid on a polynomial chart, from one of four
// families. Anchor lands in vector fields, the pairing in (k-1)-forms, the
// coanchor eats k-forms; the Leibniz bracket is family-specific. The chosen
// module splitting is part of the value and is reported by splitting_name().
struct CourantStructure {
  CourantFamily family = CourantFamily::standard_exact;
  int n = 0;  // chart dimension
  int k = 1;  // dimension of the Courant structure
  Form twist;  // closed (k+2)-form; zero unless family == twisted
  // Quadratic family data: constant structure coefficients and an invariant
  // symmetric form on the Lie algebra frame.
  std::vector<std::vector<std::vector<Rational>>> lie_c;
  std::vector<std::vector<Rational>> gram;

  int rank() const;  // complement frame size
  bool is_exact() const {
    return family == CourantFamily::standard_exact || family == CourantFamily::twisted;
  }
  std::string splitting_name() const;

  CourantElement zero() const;
  CourantElement make(Form form_part, std::vector<Poly> vec) const;
  // q = coanchor(gamma) + sum_i vec[i] * (complement frame)_i.
  Form coanchor_part(const CourantElement& q) const { return q.form_part; }
  const std::vector<Poly>& complement_part(const CourantElement& q) const {
    return q.vec;
  }

  VectorField anchor(const CourantElement& q) const;
  CourantElement coanchor(const Form& alpha) const;
  Form pairing(const CourantElement& a, const CourantElement& b) const;
  CourantElement dorfman(const CourantElement& a, const CourantElement& b) const;

  // Anchor of the i-th complement frame element.
  VectorField complement_anchor(int i) const;

  // Structural sanity: shapes, twist closedness (unless the structure was
  // built with allow_open_twist), gram symmetry and invariance.
  void validate() const;
  bool twist_is_closed() const { return de_rham(twist).is_zero(); }

  // The Lie algebroid obtained by collapsing the coanchor image.
  LieAlgebroidStructure associated_lie() const;
};

CourantStructure standard_family(int n, int k);
// twist must be a closed (k+2)-form unless allow_open_twist is set (the open
// case exists to demonstrate which axiom detects it).
CourantStructure twisted_family(int n, int k, Form twist,
                                bool allow_open_twist = false);
CourantStructure quadratic_family(std::vector<std::vector<std::vector<Rational>>> lie_c,
                                  std::vector<std::vector<Rational>> gram);
// Rotation Lie algebra with the invariant form -2 * identity.
CourantStructure quadratic_so3();
CourantStructure commutative_family(int n, int k);

// One verified identity of the structure: id, sample/failure counts and the
// first counterexample rendered as text.
struct AxiomCheck {
  std::string id;
  int samples = 0;
  int failures = 0;
  std::string counterexample;
  bool pass() const { return failures == 0; }
};

// Checks the two Leibniz-algebra conditions (bracket Jacobi identity, anchor
// bracket morphism) followed by the seven structure identities, on drawn
// samples. draw_form(d) must return a degree-d form (zero if d < 0 or
// d > chart dimension).
std::vector<AxiomCheck> verify_axioms(
    const CourantStructure& Q, int samples,
    const std::function<CourantElement()>& draw_q,
    const std::function<Poly()>& draw_f,
    const std::function<Form(int)>& draw_form);

}  // namespace courantx
