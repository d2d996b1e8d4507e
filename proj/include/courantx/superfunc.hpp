#pragma once

#include <string>

#include "courantx/form.hpp"

namespace courantx {

// Function on the odd line over a chart, written even + odd*eps where eps is
// the degree -1 odd coordinate and the coefficients are differential forms.
// eps anticommutes with odd-degree forms: eps * w = (-1)^{deg w} w * eps.
struct SuperFunc {
  Form even;
  Form odd;

  SuperFunc() = default;
  explicit SuperFunc(int chart_dim) : even(chart_dim), odd(chart_dim) {}
  SuperFunc(Form e, Form o);

  int chart_dim() const { return even.chart_dim(); }
  bool is_zero() const { return even.is_zero() && odd.is_zero(); }

  SuperFunc operator-() const { return {-even, -odd}; }
  SuperFunc& operator+=(const SuperFunc& o);
  SuperFunc& operator-=(const SuperFunc& o);
  friend SuperFunc operator+(SuperFunc a, const SuperFunc& b) { return a += b; }
  friend SuperFunc operator-(SuperFunc a, const SuperFunc& b) { return a -= b; }

  bool operator==(const SuperFunc&) const = default;

  std::string str() const;
};

// Pullback of a chart function along the evaluation map: f -> f + df*eps.
SuperFunc ev_pullback(const Poly& f);

// Graded product; the only sign comes from moving eps past the even part of
// the right factor.
SuperFunc super_mul(const SuperFunc& a, const SuperFunc& b);

// Odd differential d + d/d(eps): on even + odd*eps it returns
//   d(even) + sigma(odd) + d(odd)*eps,
// where sigma flips the sign of odd-degree graded parts (the Koszul cost of
// the eps-derivative acting from the left).
SuperFunc super_diff(const SuperFunc& a);

// Fibre integration against a form factor: pairs the odd coefficient with w
// and the even coefficient with dw, landing back in forms. This is the chain
// map that sends ev_pullback(f) * w to d(f w).
Form integrate(const SuperFunc& a, const Form& w);

}  // namespace courantx
