#include "courantx/sampler.hpp"

#include <algorithm>

namespace courantx {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

Sampler Sampler::for_property(std::uint64_t seed, std::uint64_t suite_tag,
                              std::uint64_t property_index) {
  std::uint64_t s = splitmix64(seed ^ splitmix64(suite_tag));
  s = splitmix64(s ^ (property_index + 1));
  return Sampler(s);
}

int Sampler::below(int m) {
  if (m <= 0) return 0;
  // Rejection-free modulo draw; bias is irrelevant for test-vector purposes
  // and the stream stays portable.
  return static_cast<int>(u64() % static_cast<std::uint64_t>(m));
}

int Sampler::int_in(int lo, int hi) { return lo + below(hi - lo + 1); }

Rational Sampler::coefficient() {
  int num = int_in(-3, 3);
  if (num == 0) num = 1;
  int den = below(4) == 0 ? 2 : 1;
  return Rational(num, den);
}

Poly Sampler::poly(int chart_dim, int max_degree, int max_terms) {
  Poly p(chart_dim);
  int terms = int_in(1, max_terms);
  for (int t = 0; t < terms; ++t) {
    Expo e(chart_dim, 0);
    int deg = below(max_degree + 1);
    for (int d = 0; d < deg && chart_dim > 0; ++d) e[below(chart_dim)] += 1;
    p.add_term(e, coefficient());
  }
  return p;
}

VectorField Sampler::vector_field(int chart_dim, int max_degree) {
  VectorField v(chart_dim);
  // Keep one or two slots nonzero so contractions stay small.
  int nonzero = chart_dim == 0 ? 0 : int_in(1, std::min(2, chart_dim));
  for (int t = 0; t < nonzero; ++t)
    v.comp(below(chart_dim)) += poly(chart_dim, max_degree, 1);
  return v;
}

Form Sampler::form(int chart_dim, int degree, int max_degree, int max_terms) {
  Form w(chart_dim);
  if (degree < 0 || degree > chart_dim) return w;
  if (degree == 0) return Form::from_poly(poly(chart_dim, max_degree, max_terms));
  int terms = int_in(1, max_terms);
  for (int t = 0; t < terms; ++t) {
    // Draw a strictly increasing index set of the requested size.
    IndexSet I;
    int next = 0;
    int remaining = degree;
    while (remaining > 0) {
      int slack = chart_dim - remaining - next;
      int step = slack > 0 ? below(slack + 1) : 0;
      next += step;
      I.push_back(next);
      ++next;
      --remaining;
    }
    w.add_term(I, poly(chart_dim, max_degree, 1));
  }
  return w;
}

Form Sampler::mixed_form(int chart_dim, int min_degree, int max_degree,
                         int coeff_degree) {
  Form w(chart_dim);
  for (int d = min_degree; d <= max_degree; ++d) {
    if (d < 0 || d > chart_dim) continue;
    if (below(2) == 0) w += form(chart_dim, d, coeff_degree, 1);
  }
  if (w.is_zero() && min_degree <= 0 && 0 <= max_degree)
    w = Form::from_poly(poly(chart_dim, coeff_degree, 1));
  return w;
}

CourantElement Sampler::courant_elem(const CourantStructure& Q, int max_degree) {
  CourantElement q = Q.zero();
  q.form_part = form(Q.n, Q.k, max_degree, 2);
  for (int i = 0; i < Q.rank(); ++i)
    if (below(3) != 0) q.vec[i] = poly(Q.n, Q.family == CourantFamily::quadratic ? 0 : max_degree, 1);
  return q;
}

TauElement Sampler::tau_elem(const TauAlgebroid& T, int elem_degree,
                             int max_degree) {
  TauElement a = T.zero_elem();
  const int n = T.chart_dim();
  a.theta = form(n, elem_degree + T.shift(), max_degree, 1);
  for (int i = 0; i < T.rank(); ++i) {
    if (below(2) == 0) a.one[i] = form(n, elem_degree, max_degree, 1);
    if (below(2) == 0) a.eps[i] = form(n, elem_degree + 1, max_degree, 1);
  }
  return a;
}

TauRaw Sampler::tau_raw(const TauAlgebroid& T, int max_degree, int terms) {
  TauRaw r;
  const int n = T.chart_dim();
  r.theta = mixed_form(n, 0, n, max_degree);
  for (int t = 0; t < terms; ++t) {
    TauTerm term;
    term.coeff = mixed_form(n, 0, std::min(2, n), max_degree);
    term.is_eps = below(2) == 0;
    term.q = courant_elem(T.courant(), max_degree);
    r.terms.push_back(std::move(term));
  }
  return r;
}

std::vector<Poly> Sampler::section(int chart_dim, int rank, int max_degree) {
  std::vector<Poly> s(rank, Poly(chart_dim));
  for (int i = 0; i < rank; ++i)
    if (below(3) != 0) s[i] = poly(chart_dim, max_degree, 1);
  return s;
}

PrEvElement Sampler::prev_elem(int chart_dim, int rank, int max_degree) {
  PrEvElement m(chart_dim, rank);
  for (int i = 0; i < rank; ++i) {
    if (below(2) == 0)
      m.one[i] = form(chart_dim, below(std::min(chart_dim, 2) + 1), max_degree, 1);
    if (below(2) == 0)
      m.eps[i] = form(chart_dim, below(std::min(chart_dim, 2) + 1), max_degree, 1);
  }
  return m;
}

}  // namespace courantx
