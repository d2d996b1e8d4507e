#pragma once

#include <cstdint>
#include <random>

#include "courantx/courant.hpp"
#include "courantx/tau.hpp"

namespace courantx {

// splitmix64 step; used to derive independent per-property streams from the
// suite seed so that adding samples to one property never shifts another.
std::uint64_t splitmix64(std::uint64_t x);

// Deterministic source of small exact values. All draws go through the raw
// 64-bit engine output, never through distribution adapters, so the stream is
// identical across standard library implementations.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : eng_(seed) {}

  static Sampler for_property(std::uint64_t seed, std::uint64_t suite_tag,
                              std::uint64_t property_index);

  std::uint64_t u64() { return eng_(); }
  int below(int m);                  // uniform in [0, m)
  int int_in(int lo, int hi);        // uniform in [lo, hi]
  Rational coefficient();            // small nonzero rational, denominator 1 or 2

  Poly poly(int chart_dim, int max_degree, int max_terms = 2);
  VectorField vector_field(int chart_dim, int max_degree);
  Form form(int chart_dim, int degree, int max_degree, int max_terms = 2);
  // Inhomogeneous form with pieces in the given degree window.
  Form mixed_form(int chart_dim, int min_degree, int max_degree, int coeff_degree);

  CourantElement courant_elem(const CourantStructure& Q, int max_degree);
  // Homogeneous of the given element degree.
  TauElement tau_elem(const TauAlgebroid& T, int elem_degree, int max_degree);
  // Unreduced: a theta part plus raw summands with module slots that are not
  // frame elements.
  TauRaw tau_raw(const TauAlgebroid& T, int max_degree, int terms);

  std::vector<Poly> section(int chart_dim, int rank, int max_degree);
  PrEvElement prev_elem(int chart_dim, int rank, int max_degree);

 private:
  std::mt19937_64 eng_;
};

}  // namespace courantx
