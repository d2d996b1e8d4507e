#pragma once

#include <string>
#include <vector>

#include "courantx/superfunc.hpp"

namespace courantx {

// Element of (forms ⊕ forms*eps) ⊗ E for a free module E of the given rank,
// kept in normal form over the chosen basis e_1..e_r:
//   sum_i one[i] ⊗ e_i  +  sum_i eps[i] eps ⊗ e_i.
// The balancing relations across the tensor product,
//   b eps ⊗ f e = (f b) eps ⊗ e   and   b ⊗ f e = (f b) ⊗ e + (b ^ df) eps ⊗ e,
// are applied eagerly by prev_normalize, which makes equality structural.
// Grading: a graded piece b ⊗ e sits in degree deg b, and a eps ⊗ e in
// degree (deg a) - 1.
struct PrEvElement {
  int n = 0;  // chart dimension
  std::vector<Form> one;
  std::vector<Form> eps;

  PrEvElement() = default;
  PrEvElement(int chart_dim, int rank)
      : n(chart_dim), one(rank, Form(chart_dim)), eps(rank, Form(chart_dim)) {}

  int rank() const { return static_cast<int>(one.size()); }
  bool is_zero() const;

  PrEvElement operator-() const;
  PrEvElement& operator+=(const PrEvElement& o);
  PrEvElement& operator-=(const PrEvElement& o);
  friend PrEvElement operator+(PrEvElement a, const PrEvElement& b) { return a += b; }
  friend PrEvElement operator-(PrEvElement a, const PrEvElement& b) { return a -= b; }

  bool operator==(const PrEvElement&) const = default;

  // Degrees with a nonzero graded piece, ascending.
  std::vector<int> element_degrees() const;
  PrEvElement graded_part(int d) const;

  std::string str() const;
};

// One unreduced summand: a superfunction coefficient against a section of E
// written in the basis, coeff ⊗ (sum_j section[j] e_j).
struct PrevRawTerm {
  SuperFunc coeff;
  std::vector<Poly> section;
};

// Pushes all module coefficients through the balancing relations into normal
// form over the basis.
PrEvElement prev_normalize(int chart_dim, int rank,
                           const std::vector<PrevRawTerm>& terms);

// Left multiplication by a form (acting on the coefficient slot).
PrEvElement prev_scalar(const Form& w, const PrEvElement& m);

// The odd differential acting through the coefficient slot:
//   d(b ⊗ e) = db ⊗ e,
//   d(a eps ⊗ e) = (da) eps ⊗ e + (-1)^{deg a} a ⊗ e.
PrEvElement prev_diff(const PrEvElement& m);

}  // namespace courantx
