#pragma once

#include <functional>

#include "courantx/tau.hpp"

namespace courantx {

// The canonical module map underlying the initial morphism: the class of
// eps ⊗ q.
TauElement initial_ctl(const TauAlgebroid& T, const CourantElement& q);

// The four conditions making phi a Courant-to-Lie morphism into T, checked on
// one sample. phi defaults to initial_ctl; pass a different map (e.g. one
// precomposed with a re-splitting) to check it against the source structure
// `src`. Returns an empty string or the name of the first failing condition.
std::string ctl_square_failure(
    const CourantStructure& src, const TauAlgebroid& T,
    const std::function<TauElement(const CourantElement&)>& phi,
    const CourantElement& q1, const CourantElement& q2, const Form& alpha);

// Re-splitting isomorphism of twisted structures:
//   (alpha, xi) -> (alpha + i_xi B, xi)
// carries the twist H to H - dB. Returns the target structure and the map.
CourantStructure resplit_target(const CourantStructure& twisted, const Form& B);
CourantElement resplit_apply(const CourantStructure& twisted, const Form& B,
                             const CourantElement& q);

// Extension of a Courant-to-Lie morphism along the universal property: the
// image of a normal form under the unique marked O-linear chain extension of
// phi, given phi's values on the complement frame.
//
// Target requirements: Elem, marking(), scalar(Form, Elem), diff(Elem) and
// Elem addition via +=.
template <typename Target>
typename Target::Elem universal_extend(
    const TauAlgebroid& src, const Target& tgt,
    const std::vector<typename Target::Elem>& phi_frame, const TauElement& a) {
  typename Target::Elem out = tgt.scalar(a.theta, tgt.marking());
  for (int i = 0; i < src.rank(); ++i) {
    out += tgt.scalar(a.one[i], tgt.diff(phi_frame[i]));
    out += tgt.scalar(a.eps[i], phi_frame[i]);
  }
  return out;
}

// Courant structure reconstructed from a transgressed algebroid and its
// marking: module = degree -1 part, coanchor = multiplication by the marking,
// pairing = central component of brackets, bracket via the differential.
struct ReconstructedCourant {
  const TauAlgebroid* T;

  CourantElement to_q(const TauElement& a) const;
  TauElement from_q(const CourantElement& q) const;

  VectorField anchor(const CourantElement& q) const;
  CourantElement coanchor(const Form& alpha) const;
  Form pairing(const CourantElement& a, const CourantElement& b) const;
  CourantElement dorfman(const CourantElement& a, const CourantElement& b) const;
};

// Validates the structural hypotheses before reconstruction: the marking
// candidate is concentrated in degree -shift on the central line, and every
// probe's graded parts in degrees <= -2 ride the central line. Returns an
// empty string or a description of the violated hypothesis.
std::string cour_of_hypothesis_failure(const TauAlgebroid& T,
                                       const TauElement& marking_candidate,
                                       const std::vector<TauElement>& probes);

ReconstructedCourant cour_of(const TauAlgebroid& T);

// Independent model of the transgression of a quadratic structure: the space
// C[2] + g[1] + g with
//   [(z1,u1,v1),(z2,u2,v2)] = (<u1,u2>, [v1,u2] + [u1,v2], [v1,v2]),
//   d(z,u,v) = (0,0,u), marking (1,0,0).
class QuadraticModel {
 public:
  explicit QuadraticModel(CourantStructure quadratic);

  struct Elem {
    Rational z;
    std::vector<Rational> u;
    std::vector<Rational> v;

    Elem& operator+=(const Elem& o);
    bool operator==(const Elem&) const = default;
  };

  Elem zero() const;
  Elem marking() const;
  Elem frame(int i) const;  // (0, e_i, 0)
  Elem make(Rational z, std::vector<Rational> u, std::vector<Rational> v) const;

  Elem bracket(const Elem& a, const Elem& b) const;
  Elem diff(const Elem& a) const;
  // Only constant 0-form scalars act on the point chart.
  Elem scalar(const Form& w, const Elem& a) const;

 private:
  CourantStructure Q_;
  int r_;
};

}  // namespace courantx
