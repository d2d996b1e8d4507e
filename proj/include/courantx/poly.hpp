#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "courantx/rational.hpp"

namespace courantx {

// Exponent vector of a monomial; length equals the chart dimension.
using Expo = std::vector<unsigned>;

// Human-readable coordinate name: x, y, z, w for small charts, x1, x2, ... past
// four coordinates. chart_dim 0 (a point) is legal everywhere.
std::string coord_name(int chart_dim, int i);

// Polynomial with rational coefficients on an affine chart of dimension n >= 0.
// Terms are kept in a sorted map keyed by exponent vector with all zero
// coefficients pruned, so operator== is canonical-form equality.
class Poly {
 public:
  Poly() : n_(0) {}
  explicit Poly(int chart_dim) : n_(chart_dim) {
    if (chart_dim < 0) throw std::invalid_argument("negative chart dimension");
  }

  static Poly constant(int chart_dim, const Rational& c);
  static Poly variable(int chart_dim, int i);

  int chart_dim() const { return n_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  // Value at the origin of the chart; for a constant polynomial this is the
  // whole story.
  Rational constant_term() const;

  const std::map<Expo, Rational>& terms() const { return terms_; }

  Poly& add_term(const Expo& e, const Rational& c);

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(const Rational& c, Poly p);

  Poly derivative(int i) const;
  int total_degree() const;  // -1 for the zero polynomial

  bool operator==(const Poly&) const = default;

  std::string str() const;

 private:
  int n_;
  std::map<Expo, Rational> terms_;
};

}  // namespace courantx
