#include "courantx/superfunc.hpp"

#include <stdexcept>

namespace courantx {

namespace {

// Multiplies each graded part of w by (-1)^degree.
Form degree_sign(const Form& w) {
  Form r(w.chart_dim());
  for (int d : w.degrees()) {
    Form part = w.graded_part(d);
    if (d % 2 == 0)
      r += part;
    else
      r -= part;
  }
  return r;
}

}  // namespace

SuperFunc::SuperFunc(Form e, Form o) : even(std::move(e)), odd(std::move(o)) {
  if (even.chart_dim() != odd.chart_dim())
    throw std::invalid_argument("chart dimension mismatch");
}

SuperFunc& SuperFunc::operator+=(const SuperFunc& o) {
  even += o.even;
  odd += o.odd;
  return *this;
}

SuperFunc& SuperFunc::operator-=(const SuperFunc& o) {
  even -= o.even;
  odd -= o.odd;
  return *this;
}

std::string SuperFunc::str() const {
  if (is_zero()) return "0";
  std::string s;
  if (!even.is_zero()) s += even.str();
  if (!odd.is_zero()) {
    if (!s.empty()) s += " + ";
    s += "(" + odd.str() + ") eps";
  }
  return s;
}

SuperFunc ev_pullback(const Poly& f) {
  return {Form::from_poly(f), de_rham(Form::from_poly(f))};
}

SuperFunc super_mul(const SuperFunc& a, const SuperFunc& b) {
  // (a0 + a1 eps)(b0 + b1 eps) = a0^b0 + (a0^b1 + (-1)^{|b0|} a1^b0) eps;
  // the eps^2 term vanishes.
  Form odd = wedge(a.even, b.odd) + wedge(a.odd, degree_sign(b.even));
  return {wedge(a.even, b.even), std::move(odd)};
}

SuperFunc super_diff(const SuperFunc& a) {
  return {de_rham(a.even) + degree_sign(a.odd), de_rham(a.odd)};
}

Form integrate(const SuperFunc& a, const Form& w) {
  return wedge(a.even, de_rham(w)) + wedge(a.odd, w);
}

}  // namespace courantx
