#include "courantx/tau.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace courantx {

bool TauElement::is_zero() const {
  if (!theta.is_zero()) return false;
  return is_theta_only();
}

bool TauElement::is_theta_only() const {
  for (const auto& w : one)
    if (!w.is_zero()) return false;
  for (const auto& w : eps)
    if (!w.is_zero()) return false;
  return true;
}

TauElement TauElement::operator-() const {
  TauElement r;
  r.theta = -theta;
  for (const auto& w : one) r.one.push_back(-w);
  for (const auto& w : eps) r.eps.push_back(-w);
  return r;
}

TauElement& TauElement::operator+=(const TauElement& o) {
  if (one.size() != o.one.size() || eps.size() != o.eps.size())
    throw std::invalid_argument("element shape mismatch");
  theta += o.theta;
  for (size_t i = 0; i < one.size(); ++i) one[i] += o.one[i];
  for (size_t i = 0; i < eps.size(); ++i) eps[i] += o.eps[i];
  return *this;
}

TauElement& TauElement::operator-=(const TauElement& o) {
  if (one.size() != o.one.size() || eps.size() != o.eps.size())
    throw std::invalid_argument("element shape mismatch");
  theta -= o.theta;
  for (size_t i = 0; i < one.size(); ++i) one[i] -= o.one[i];
  for (size_t i = 0; i < eps.size(); ++i) eps[i] -= o.eps[i];
  return *this;
}

std::vector<int> TauElement::element_degrees(int shift) const {
  std::vector<int> ds;
  auto push = [&ds](int d) {
    if (std::find(ds.begin(), ds.end(), d) == ds.end()) ds.push_back(d);
  };
  for (int d : theta.degrees()) push(d - shift);
  for (const auto& w : one)
    for (int d : w.degrees()) push(d);
  for (const auto& w : eps)
    for (int d : w.degrees()) push(d - 1);
  std::sort(ds.begin(), ds.end());
  return ds;
}

TauElement TauElement::graded_part(int shift, int d) const {
  TauElement r;
  r.theta = theta.graded_part(d + shift);
  for (const auto& w : one) r.one.push_back(w.graded_part(d));
  for (const auto& w : eps) r.eps.push_back(w.graded_part(d + 1));
  return r;
}

std::string TauElement::str() const {
  std::ostringstream os;
  os << "theta: " << theta.str();
  for (size_t i = 0; i < one.size(); ++i)
    if (!one[i].is_zero()) os << " | one[" << (i + 1) << "]: " << one[i].str();
  for (size_t i = 0; i < eps.size(); ++i)
    if (!eps[i].is_zero()) os << " | eps[" << (i + 1) << "]: " << eps[i].str();
  return os.str();
}

TauAlgebroid::TauAlgebroid(CourantStructure q) : Q_(std::move(q)) {
  Q_.validate();
}

TauElement TauAlgebroid::zero_elem() const {
  TauElement a;
  a.theta = Form(Q_.n);
  a.one.assign(rank(), Form(Q_.n));
  a.eps.assign(rank(), Form(Q_.n));
  return a;
}

TauElement TauAlgebroid::marking() const {
  TauElement a = zero_elem();
  a.theta = Form::constant(Q_.n, 1);
  return a;
}

TauElement TauAlgebroid::of_term(const Form& coeff, bool is_eps,
                                 const CourantElement& q) const {
  TauRaw r;
  r.theta = Form(Q_.n);
  r.terms.push_back({coeff, is_eps, q});
  return reduce(r);
}

TauRaw TauAlgebroid::raw_of(const TauElement& a) const {
  TauRaw r;
  r.theta = a.theta;
  for (int i = 0; i < rank(); ++i) {
    CourantElement b = Q_.zero();
    b.vec[i] = Poly::constant(Q_.n, 1);
    if (!a.one[i].is_zero()) r.terms.push_back({a.one[i], false, b});
    if (!a.eps[i].is_zero()) r.terms.push_back({a.eps[i], true, b});
  }
  return r;
}

TauElement TauAlgebroid::reduce(const TauRaw& r) const {
  TauElement out = zero_elem();
  out.theta = r.theta;
  for (const auto& t : r.terms) {
    const Form gamma = Q_.coanchor_part(t.q);
    const std::vector<Poly>& v = Q_.complement_part(t.q);
    if (t.is_eps) {
      // a eps ⊗ coanchor(gamma) = (a ^ gamma) * c; a eps ⊗ f b = (f a) eps ⊗ b
      out.theta += wedge(t.coeff, gamma);
      for (int i = 0; i < rank(); ++i) out.eps[i] += v[i] * t.coeff;
    } else {
      // b ⊗ coanchor(gamma) = (b ^ d gamma) * c;
      // b ⊗ f b_i = (f b) ⊗ b_i + (b ^ df) eps ⊗ b_i
      out.theta += wedge(t.coeff, de_rham(gamma));
      for (int i = 0; i < rank(); ++i) {
        out.one[i] += v[i] * t.coeff;
        out.eps[i] += wedge(t.coeff, de_rham(Form::from_poly(v[i])));
      }
    }
  }
  return out;
}

TauElement TauAlgebroid::scalar(const Form& w, const TauElement& a) const {
  TauElement r = zero_elem();
  r.theta = wedge(w, a.theta);
  for (int i = 0; i < rank(); ++i) {
    r.one[i] = wedge(w, a.one[i]);
    r.eps[i] = wedge(w, a.eps[i]);
  }
  return r;
}

namespace {

// Homogeneous module atom: coeff is a single-degree form.
struct QAtom {
  Form coeff;
  bool is_eps;
  const CourantElement* q;
  int deg() const { return coeff.degree() - (is_eps ? 1 : 0); }
};

}  // namespace

TauElement TauAlgebroid::bracket_raw(const TauRaw& x, const TauRaw& y) const {
  const int n = Q_.n;
  TauRaw acc;
  acc.theta = Form(n);

  std::vector<QAtom> xa, ya;
  for (const auto& t : x.terms)
    for (int d : t.coeff.degrees()) xa.push_back({t.coeff.graded_part(d), t.is_eps, &t.q});
  for (const auto& t : y.terms)
    for (int d : t.coeff.degrees()) ya.push_back({t.coeff.graded_part(d), t.is_eps, &t.q});

  auto symbol = [&](const QAtom& a, const Form& w) {
    VectorField v = Q_.anchor(*a.q);
    return a.is_eps ? interior(v, w) : lie_derivative(v, w);
  };

  // Atom against atom.
  for (const QAtom& a : xa)
    for (const QAtom& b : ya) {
      const int da = a.deg() & 1;
      const int db = b.is_eps ? 1 : 0;
      const int dg = b.coeff.degree() & 1;
      const int s2 = (da & dg) ? -1 : 1;
      const int s3 = -s2 * ((da & db) ? -1 : 1);

      // (w ^ sym_A(g)) B
      Form lead = wedge(a.coeff, symbol(a, b.coeff));
      if (!lead.is_zero()) acc.terms.push_back({lead, b.is_eps, *b.q});

      // s2 (g ^ w) [A, B]
      Form gw = wedge(b.coeff, a.coeff);
      if (!gw.is_zero()) {
        if (s2 == -1) gw = -gw;
        if (!a.is_eps && !b.is_eps) {
          acc.terms.push_back({gw, false, Q_.dorfman(*a.q, *b.q)});
        } else if (!a.is_eps && b.is_eps) {
          acc.terms.push_back({gw, true, Q_.dorfman(*a.q, *b.q)});
        } else if (a.is_eps && !b.is_eps) {
          acc.theta -= wedge(gw, de_rham(Q_.pairing(*a.q, *b.q)));
          acc.terms.push_back({gw, true, Q_.dorfman(*a.q, *b.q)});
        } else {
          acc.theta += wedge(gw, Q_.pairing(*a.q, *b.q));
        }
      }

      // -s2 (-1)^{|wA||B|} (g ^ sym_B(w)) A
      Form tail = wedge(b.coeff, symbol(b, a.coeff));
      if (!tail.is_zero()) {
        if (s3 == -1) tail = -tail;
        acc.terms.push_back({tail, a.is_eps, *a.q});
      }
    }

  // Atom against the central part: [w A, theta * c] = (w ^ sym_A(theta)) * c,
  // and the mirrored order by exact graded antisymmetry.
  for (const QAtom& a : xa) {
    Form act = wedge(a.coeff, symbol(a, y.theta));
    acc.theta += act;
  }
  for (const QAtom& b : ya)
    for (int dth : x.theta.degrees()) {
      Form th = x.theta.graded_part(dth);
      Form act = wedge(b.coeff, symbol(b, th));
      const int dt = (dth - shift()) & 1;
      const int dbfull = b.deg() & 1;
      if (((dt & dbfull) ? -1 : 1) == 1)
        acc.theta -= act;
      else
        acc.theta += act;
    }
  // [theta * c, theta' * c] = 0.

  return reduce(acc);
}

TauElement TauAlgebroid::bracket(const TauElement& x, const TauElement& y) const {
  return bracket_raw(raw_of(x), raw_of(y));
}

TauElement TauAlgebroid::diff(const TauElement& a) const {
  TauElement r = zero_elem();
  r.theta = de_rham(a.theta);
  for (int i = 0; i < rank(); ++i) {
    r.one[i] = de_rham(a.one[i]);
    r.eps[i] = de_rham(a.eps[i]);
    for (int d : a.eps[i].degrees()) {
      Form part = a.eps[i].graded_part(d);
      if (d % 2 == 0)
        r.one[i] += part;
      else
        r.one[i] -= part;
    }
  }
  return r;
}

PrEvElement TauAlgebroid::anchor(const TauElement& a) const {
  std::vector<PrevRawTerm> raw;
  for (int i = 0; i < rank(); ++i) {
    PrevRawTerm t;
    t.coeff = SuperFunc(a.one[i], a.eps[i]);
    t.section = Q_.complement_anchor(i).comps();
    raw.push_back(std::move(t));
  }
  return prev_normalize(Q_.n, Q_.n, raw);
}

}  // namespace courantx
