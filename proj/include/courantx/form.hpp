#pragma once

#include <map>
#include <string>
#include <vector>

#include "courantx/poly.hpp"

namespace courantx {

// Strictly increasing list of 0-based coordinate indices naming a wedge
// monomial dx_{I1} ^ ... ^ dx_{Ip}; the empty list names the 0-form slot.
using IndexSet = std::vector<int>;

// Merges two strictly increasing index lists into `out`, returning the sign
// (-1)^inversions of the shuffle, or 0 if the lists intersect. Every
// permutation sign in the calculus funnels through this one routine.
int merge_index_sets(const IndexSet& a, const IndexSet& b, IndexSet& out);

// Polynomial vector field sum_i comp[i] * d/dx_i.
class Form;

class VectorField {
 public:
  VectorField() : n_(0) {}
  explicit VectorField(int chart_dim)
      : n_(chart_dim), comps_(chart_dim, Poly(chart_dim)) {}
  VectorField(int chart_dim, std::vector<Poly> comps);

  static VectorField coordinate(int chart_dim, int i);

  int chart_dim() const { return n_; }
  const Poly& comp(int i) const { return comps_.at(i); }
  Poly& comp(int i) { return comps_.at(i); }
  const std::vector<Poly>& comps() const { return comps_; }
  bool is_zero() const;

  // Action on functions: sum_i comp[i] * df/dx_i.
  Poly apply(const Poly& f) const;

  VectorField operator-() const;
  VectorField& operator+=(const VectorField& o);
  VectorField& operator-=(const VectorField& o);
  friend VectorField operator+(VectorField a, const VectorField& b) { return a += b; }
  friend VectorField operator-(VectorField a, const VectorField& b) { return a -= b; }
  friend VectorField operator*(const Poly& f, VectorField v);

  bool operator==(const VectorField&) const = default;

  std::string str() const;

 private:
  int n_;
  std::vector<Poly> comps_;
};

// Polynomial differential form, possibly of mixed degree. Components are
// keyed by strictly increasing index sets with zero components pruned, so
// operator== is canonical-form equality.
class Form {
 public:
  Form() : n_(0) {}
  explicit Form(int chart_dim) : n_(chart_dim) {}

  static Form from_poly(const Poly& p);
  static Form constant(int chart_dim, const Rational& c);
  // dx_I with coefficient 1.
  static Form basis(int chart_dim, const IndexSet& I);

  int chart_dim() const { return n_; }
  bool is_zero() const { return comps_.empty(); }

  const std::map<IndexSet, Poly>& comps() const { return comps_; }
  const Poly& comp(const IndexSet& I) const;

  // Accumulates p dx_I; I need not be sorted, the shuffle sign is applied.
  Form& add_term(const IndexSet& I, const Poly& p);

  // Degrees with a nonzero component, ascending.
  std::vector<int> degrees() const;
  // True if all components have the same wedge degree (zero counts for any).
  bool is_homogeneous() const;
  // The wedge degree of a nonzero homogeneous form.
  int degree() const;
  Form graded_part(int d) const;

  Form operator-() const;
  Form& operator+=(const Form& o);
  Form& operator-=(const Form& o);
  friend Form operator+(Form a, const Form& b) { return a += b; }
  friend Form operator-(Form a, const Form& b) { return a -= b; }
  friend Form operator*(const Poly& f, const Form& w);
  friend Form operator*(const Rational& c, const Form& w);

  bool operator==(const Form&) const = default;

  std::string str() const;

 private:
  int n_;
  std::map<IndexSet, Poly> comps_;
};

Form wedge(const Form& a, const Form& b);
Form de_rham(const Form& w);
Form interior(const VectorField& v, const Form& w);
// Cartan homotopy formula d(i_v w) + i_v(d w).
Form lie_derivative(const VectorField& v, const Form& w);
VectorField vf_bracket(const VectorField& a, const VectorField& b);

}  // namespace courantx
