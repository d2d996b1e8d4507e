#include "courantx/prev.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace courantx {

bool PrEvElement::is_zero() const {
  for (const auto& w : one)
    if (!w.is_zero()) return false;
  for (const auto& w : eps)
    if (!w.is_zero()) return false;
  return true;
}

PrEvElement PrEvElement::operator-() const {
  PrEvElement r(n, rank());
  for (int i = 0; i < rank(); ++i) {
    r.one[i] = -one[i];
    r.eps[i] = -eps[i];
  }
  return r;
}

PrEvElement& PrEvElement::operator+=(const PrEvElement& o) {
  if (n != o.n || rank() != o.rank())
    throw std::invalid_argument("element shape mismatch");
  for (int i = 0; i < rank(); ++i) {
    one[i] += o.one[i];
    eps[i] += o.eps[i];
  }
  return *this;
}

PrEvElement& PrEvElement::operator-=(const PrEvElement& o) {
  if (n != o.n || rank() != o.rank())
    throw std::invalid_argument("element shape mismatch");
  for (int i = 0; i < rank(); ++i) {
    one[i] -= o.one[i];
    eps[i] -= o.eps[i];
  }
  return *this;
}

std::vector<int> PrEvElement::element_degrees() const {
  std::vector<int> ds;
  auto push = [&ds](int d) {
    for (int x : ds)
      if (x == d) return;
    ds.push_back(d);
  };
  for (const auto& w : one)
    for (int d : w.degrees()) push(d);
  for (const auto& w : eps)
    for (int d : w.degrees()) push(d - 1);
  std::sort(ds.begin(), ds.end());
  return ds;
}

PrEvElement PrEvElement::graded_part(int d) const {
  PrEvElement r(n, rank());
  for (int i = 0; i < rank(); ++i) {
    r.one[i] = one[i].graded_part(d);
    r.eps[i] = eps[i].graded_part(d + 1);
  }
  return r;
}

std::string PrEvElement::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < rank(); ++i) {
    if (!one[i].is_zero()) {
      if (!first) os << " + ";
      os << "(" << one[i].str() << ") (x) e" << (i + 1);
      first = false;
    }
    if (!eps[i].is_zero()) {
      if (!first) os << " + ";
      os << "(" << eps[i].str() << ") eps (x) e" << (i + 1);
      first = false;
    }
  }
  return os.str();
}

PrEvElement prev_normalize(int chart_dim, int rank,
                           const std::vector<PrevRawTerm>& terms) {
  PrEvElement r(chart_dim, rank);
  for (const auto& t : terms) {
    if (static_cast<int>(t.section.size()) != rank)
      throw std::invalid_argument("section length vs rank");
    for (int j = 0; j < rank; ++j) {
      const Poly& f = t.section[j];
      if (f.is_zero()) continue;
      // b ⊗ f e_j = (f b) ⊗ e_j + (b ^ df) eps ⊗ e_j
      if (!t.coeff.even.is_zero()) {
        r.one[j] += f * t.coeff.even;
        r.eps[j] += wedge(t.coeff.even, de_rham(Form::from_poly(f)));
      }
      // a eps ⊗ f e_j = (f a) eps ⊗ e_j
      if (!t.coeff.odd.is_zero()) r.eps[j] += f * t.coeff.odd;
    }
  }
  return r;
}

PrEvElement prev_scalar(const Form& w, const PrEvElement& m) {
  PrEvElement r(m.n, m.rank());
  for (int i = 0; i < m.rank(); ++i) {
    r.one[i] = wedge(w, m.one[i]);
    r.eps[i] = wedge(w, m.eps[i]);
  }
  return r;
}

PrEvElement prev_diff(const PrEvElement& m) {
  PrEvElement r(m.n, m.rank());
  for (int i = 0; i < m.rank(); ++i) {
    r.one[i] = de_rham(m.one[i]);
    r.eps[i] = de_rham(m.eps[i]);
    for (int d : m.eps[i].degrees()) {
      Form part = m.eps[i].graded_part(d);
      if (d % 2 == 0)
        r.one[i] += part;
      else
        r.one[i] -= part;
    }
  }
  return r;
}

}  // namespace courantx
