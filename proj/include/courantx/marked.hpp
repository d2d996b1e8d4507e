#pragma once

#include <string>
#include <vector>

#include "courantx/form.hpp"

namespace courantx {

struct MarkedCheck {
  bool centrality = true;
  bool anchor = true;
  bool quotient = true;
  std::string detail;

  bool pass() const { return centrality && anchor && quotient; }
};

// Verifies that a candidate section behaves as a central marking of a graded
// Lie algebroid carrier: brackets with the probes vanish on both sides, the
// anchor kills it, and brackets of its scalar multiples against the probes
// stay on the scalar line through it (so the quotient bracket is defined).
//
// Carrier requirements: Elem, bracket_elems, anchor_is_zero, scalar,
// is_central_line, is_zero_elem.
template <typename Carrier>
MarkedCheck check_marked(const Carrier& car, const typename Carrier::Elem& cand,
                         const std::vector<typename Carrier::Elem>& probes,
                         const std::vector<Form>& scalars) {
  MarkedCheck out;
  for (const auto& p : probes) {
    if (!car.is_zero_elem(car.bracket_elems(cand, p)) ||
        !car.is_zero_elem(car.bracket_elems(p, cand))) {
      out.centrality = false;
      if (out.detail.empty()) out.detail = "bracket with a probe is nonzero";
    }
    for (const auto& w : scalars) {
      if (!car.is_central_line(car.bracket_elems(car.scalar(w, cand), p)) ||
          !car.is_central_line(car.bracket_elems(p, car.scalar(w, cand)))) {
        out.quotient = false;
        if (out.detail.empty())
          out.detail = "bracket with a scalar multiple leaves the scalar line";
      }
    }
  }
  if (!car.anchor_is_zero(cand)) {
    out.anchor = false;
    if (out.detail.empty()) out.detail = "anchor of the candidate is nonzero";
  }
  return out;
}

}  // namespace courantx
