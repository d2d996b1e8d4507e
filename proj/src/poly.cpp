#include "courantx/poly.hpp"

#include <sstream>

namespace courantx {

std::string coord_name(int chart_dim, int i) {
  static const char* small_names[] = {"x", "y", "z", "w"};
  if (i < 0 || i >= chart_dim) throw std::out_of_range("coordinate index");
  if (chart_dim <= 4) return small_names[i];
  return "x" + std::to_string(i + 1);
}

Poly Poly::constant(int chart_dim, const Rational& c) {
  Poly p(chart_dim);
  p.add_term(Expo(chart_dim, 0), c);
  return p;
}

Poly Poly::variable(int chart_dim, int i) {
  if (i < 0 || i >= chart_dim) throw std::out_of_range("variable index");
  Poly p(chart_dim);
  Expo e(chart_dim, 0);
  e[i] = 1;
  p.add_term(e, 1);
  return p;
}

bool Poly::is_constant() const {
  if (terms_.empty()) return true;
  return terms_.size() == 1 && terms_.begin()->first == Expo(n_, 0);
}

Rational Poly::constant_term() const {
  auto it = terms_.find(Expo(n_, 0));
  return it == terms_.end() ? Rational(0) : it->second;
}

Poly& Poly::add_term(const Expo& e, const Rational& c) {
  if (static_cast<int>(e.size()) != n_)
    throw std::invalid_argument("exponent length vs chart dimension");
  if (c == 0) return *this;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
  return *this;
}

Poly Poly::operator-() const {
  Poly r(n_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  if (n_ != o.n_) throw std::invalid_argument("chart dimension mismatch");
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (n_ != o.n_) throw std::invalid_argument("chart dimension mismatch");
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.n_ != b.n_) throw std::invalid_argument("chart dimension mismatch");
  Poly r(a.n_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      Expo e(ea);
      for (int i = 0; i < a.n_; ++i) e[i] += eb[i];
      r.add_term(e, ca * cb);
    }
  return r;
}

Poly operator*(const Rational& c, Poly p) {
  if (c == 0) return Poly(p.n_);
  for (auto& [e, coeff] : p.terms_) coeff *= c;
  return p;
}

Poly Poly::derivative(int i) const {
  if (i < 0 || i >= n_) throw std::out_of_range("derivative index");
  Poly r(n_);
  for (const auto& [e, c] : terms_) {
    if (e[i] == 0) continue;
    Expo d(e);
    d[i] -= 1;
    r.add_term(d, c * Rational(e[i]));
  }
  return r;
}

int Poly::total_degree() const {
  int deg = -1;
  for (const auto& [e, c] : terms_) {
    int d = 0;
    for (unsigned k : e) d += static_cast<int>(k);
    if (d > deg) deg = d;
  }
  return deg;
}

std::string Poly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Rational a = c;
    if (first) {
      if (a < 0) {
        os << "-";
        a = -a;
      }
    } else {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    first = false;
    bool has_vars = false;
    std::ostringstream mono;
    bool first_var = true;
    for (int i = 0; i < n_; ++i) {
      if (e[i] == 0) continue;
      if (!first_var) mono << "*";
      mono << coord_name(n_, i);
      if (e[i] > 1) mono << "^" << e[i];
      has_vars = true;
      first_var = false;
    }
    if (!has_vars) {
      os << rational_str(a);
    } else {
      if (a != 1) os << rational_str(a) << "*";
      os << mono.str();
    }
  }
  return os.str();
}

}  // namespace courantx
