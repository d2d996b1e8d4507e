#include "courantx/ctl.hpp"

#include <stdexcept>

namespace courantx {

TauElement initial_ctl(const TauAlgebroid& T, const CourantElement& q) {
  return T.of_term(Form::constant(T.chart_dim(), 1), true, q);
}

std::string ctl_square_failure(
    const CourantStructure& src, const TauAlgebroid& T,
    const std::function<TauElement(const CourantElement&)>& phi,
    const CourantElement& q1, const CourantElement& q2, const Form& alpha) {
  const int n = src.n;
  // (a) anchors match: the target anchor of phi(q) equals eps ⊗ anchor(q).
  {
    PrEvElement lhs = T.anchor(phi(q1));
    std::vector<PrevRawTerm> raw(1);
    raw[0].coeff = SuperFunc(Form(n), Form::constant(n, 1));
    raw[0].section = src.anchor(q1).comps();
    PrEvElement rhs = prev_normalize(n, n, raw);
    if (!(lhs == rhs)) return "anchor square";
  }
  // (b) coanchor lands on the scalar line: phi(coanchor(alpha)) = alpha * c.
  {
    TauElement lhs = phi(src.coanchor(alpha));
    TauElement rhs = T.scalar(alpha, T.marking());
    if (!(lhs == rhs)) return "coanchor square";
  }
  // (c) pairings transgress: [phi q1, phi q2] = <q1,q2> * c.
  {
    TauElement lhs = T.bracket(phi(q1), phi(q2));
    TauElement rhs = T.scalar(src.pairing(q1, q2), T.marking());
    if (!(lhs == rhs)) return "pairing square";
  }
  // (d) brackets transgress: [d phi q1, phi q2] = phi({q1,q2}).
  {
    TauElement lhs = T.bracket(T.diff(phi(q1)), phi(q2));
    TauElement rhs = phi(src.dorfman(q1, q2));
    if (!(lhs == rhs)) return "bracket square";
  }
  return "";
}

CourantStructure resplit_target(const CourantStructure& twisted, const Form& B) {
  if (twisted.family != CourantFamily::twisted)
    throw std::invalid_argument("re-splitting applies to the twisted family");
  if (!B.is_zero() && B.degree() != twisted.k + 1)
    throw std::invalid_argument("re-splitting form degree");
  return twisted_family(twisted.n, twisted.k, twisted.twist - de_rham(B));
}

CourantElement resplit_apply(const CourantStructure& twisted, const Form& B,
                             const CourantElement& q) {
  CourantElement out = q;
  out.form_part += interior(twisted.anchor(q), B);
  return out;
}

CourantElement ReconstructedCourant::to_q(const TauElement& a) const {
  const CourantStructure& Q = T->courant();
  CourantElement q = Q.zero();
  q.form_part = a.theta.graded_part(Q.k);
  for (int i = 0; i < Q.rank(); ++i) {
    const Form& e = a.eps[i];
    q.vec[i] = e.comp({});
  }
  return q;
}

TauElement ReconstructedCourant::from_q(const CourantElement& q) const {
  return initial_ctl(*T, q);
}

VectorField ReconstructedCourant::anchor(const CourantElement& q) const {
  // The anchor of the class of eps ⊗ q is eps ⊗ pi(q) over the coordinate
  // frame; read the field off its eps coefficients.
  PrEvElement a = T->anchor(from_q(q));
  const int n = T->chart_dim();
  VectorField v(n);
  for (int j = 0; j < n; ++j) v.comp(j) = a.eps[j].comp({});
  return v;
}

CourantElement ReconstructedCourant::coanchor(const Form& alpha) const {
  return to_q(T->scalar(alpha, T->marking()));
}

Form ReconstructedCourant::pairing(const CourantElement& a,
                                   const CourantElement& b) const {
  TauElement br = T->bracket(from_q(a), from_q(b));
  return br.theta.graded_part(T->courant().k - 1);
}

CourantElement ReconstructedCourant::dorfman(const CourantElement& a,
                                             const CourantElement& b) const {
  TauElement br = T->bracket(T->diff(from_q(a)), from_q(b));
  return to_q(br);
}

std::string cour_of_hypothesis_failure(const TauAlgebroid& T,
                                       const TauElement& marking_candidate,
                                       const std::vector<TauElement>& probes) {
  const int S = T.shift();
  if (!marking_candidate.is_theta_only())
    return "marking candidate is not on the central line";
  auto ds = marking_candidate.element_degrees(S);
  if (ds.size() != 1 || ds[0] != -S)
    return "marking candidate is not concentrated in the marking degree";
  for (const auto& p : probes) {
    for (int d : p.element_degrees(S)) {
      if (d > -2) continue;
      if (!p.graded_part(S, d).is_theta_only())
        return "a probe has a non-central piece below degree -1";
    }
  }
  return "";
}

ReconstructedCourant cour_of(const TauAlgebroid& T) { return {&T}; }

QuadraticModel::QuadraticModel(CourantStructure quadratic)
    : Q_(std::move(quadratic)), r_(Q_.rank()) {
  if (Q_.family != CourantFamily::quadratic)
    throw std::invalid_argument("model requires the quadratic family");
}

QuadraticModel::Elem& QuadraticModel::Elem::operator+=(const Elem& o) {
  z += o.z;
  for (size_t i = 0; i < u.size(); ++i) u[i] += o.u[i];
  for (size_t i = 0; i < v.size(); ++i) v[i] += o.v[i];
  return *this;
}

QuadraticModel::Elem QuadraticModel::zero() const {
  return {0, std::vector<Rational>(r_, 0), std::vector<Rational>(r_, 0)};
}

QuadraticModel::Elem QuadraticModel::marking() const {
  Elem e = zero();
  e.z = 1;
  return e;
}

QuadraticModel::Elem QuadraticModel::frame(int i) const {
  Elem e = zero();
  e.u.at(i) = 1;
  return e;
}

QuadraticModel::Elem QuadraticModel::make(Rational z, std::vector<Rational> u,
                                          std::vector<Rational> v) const {
  if (static_cast<int>(u.size()) != r_ || static_cast<int>(v.size()) != r_)
    throw std::invalid_argument("element shape");
  return {std::move(z), std::move(u), std::move(v)};
}

QuadraticModel::Elem QuadraticModel::bracket(const Elem& a, const Elem& b) const {
  Elem out = zero();
  for (int i = 0; i < r_; ++i)
    for (int j = 0; j < r_; ++j) {
      out.z += Q_.gram[i][j] * a.u[i] * b.u[j];
      for (int m = 0; m < r_; ++m) {
        out.u[m] += Q_.lie_c[i][j][m] * (a.v[i] * b.u[j] + a.u[i] * b.v[j]);
        out.v[m] += Q_.lie_c[i][j][m] * a.v[i] * b.v[j];
      }
    }
  return out;
}

QuadraticModel::Elem QuadraticModel::diff(const Elem& a) const {
  Elem out = zero();
  out.v = a.u;
  return out;
}

QuadraticModel::Elem QuadraticModel::scalar(const Form& w, const Elem& a) const {
  if (w.is_zero()) return zero();
  if (!w.is_homogeneous() || w.degree() != 0)
    throw std::invalid_argument("only constants act on the point chart");
  Rational c = w.comp({}).constant_term();
  Elem out = a;
  out.z *= c;
  for (auto& t : out.u) t *= c;
  for (auto& t : out.v) t *= c;
  return out;
}

}  // namespace courantx
