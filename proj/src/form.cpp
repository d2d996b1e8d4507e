#include "courantx/form.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace courantx {

int merge_index_sets(const IndexSet& a, const IndexSet& b, IndexSet& out) {
  out.clear();
  out.reserve(a.size() + b.size());
  size_t i = 0, j = 0;
  int sign = 1;
  while (i < a.size() && j < b.size()) {
    if (a[i] == b[j]) return 0;
    if (a[i] < b[j]) {
      out.push_back(a[i++]);
    } else {
      // b[j] jumps over the remaining entries of a.
      if ((a.size() - i) % 2 == 1) sign = -sign;
      out.push_back(b[j++]);
    }
  }
  while (i < a.size()) out.push_back(a[i++]);
  while (j < b.size()) out.push_back(b[j++]);
  return sign;
}

VectorField::VectorField(int chart_dim, std::vector<Poly> comps)
    : n_(chart_dim), comps_(std::move(comps)) {
  if (static_cast<int>(comps_.size()) != n_)
    throw std::invalid_argument("component count vs chart dimension");
  for (const auto& p : comps_)
    if (p.chart_dim() != n_) throw std::invalid_argument("component chart dimension");
}

VectorField VectorField::coordinate(int chart_dim, int i) {
  VectorField v(chart_dim);
  v.comp(i) = Poly::constant(chart_dim, 1);
  return v;
}

bool VectorField::is_zero() const {
  for (const auto& p : comps_)
    if (!p.is_zero()) return false;
  return true;
}

Poly VectorField::apply(const Poly& f) const {
  Poly r(n_);
  for (int i = 0; i < n_; ++i) r += comps_[i] * f.derivative(i);
  return r;
}

VectorField VectorField::operator-() const {
  VectorField r(n_);
  for (int i = 0; i < n_; ++i) r.comps_[i] = -comps_[i];
  return r;
}

VectorField& VectorField::operator+=(const VectorField& o) {
  if (n_ != o.n_) throw std::invalid_argument("chart dimension mismatch");
  for (int i = 0; i < n_; ++i) comps_[i] += o.comps_[i];
  return *this;
}

VectorField& VectorField::operator-=(const VectorField& o) {
  if (n_ != o.n_) throw std::invalid_argument("chart dimension mismatch");
  for (int i = 0; i < n_; ++i) comps_[i] -= o.comps_[i];
  return *this;
}

VectorField operator*(const Poly& f, VectorField v) {
  for (int i = 0; i < v.n_; ++i) v.comps_[i] = f * v.comps_[i];
  return v;
}

std::string VectorField::str() const {
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < n_; ++i) {
    if (comps_[i].is_zero()) continue;
    if (!first) os << " + ";
    os << "(" << comps_[i].str() << ") d/d" << coord_name(n_, i);
    first = false;
  }
  if (first) return "0";
  return os.str();
}

Form Form::from_poly(const Poly& p) {
  Form w(p.chart_dim());
  w.add_term({}, p);
  return w;
}

Form Form::constant(int chart_dim, const Rational& c) {
  return from_poly(Poly::constant(chart_dim, c));
}

Form Form::basis(int chart_dim, const IndexSet& I) {
  Form w(chart_dim);
  w.add_term(I, Poly::constant(chart_dim, 1));
  return w;
}

const Poly& Form::comp(const IndexSet& I) const {
  auto it = comps_.find(I);
  if (it != comps_.end()) return it->second;
  // Absent component: hand back a zero polynomial of the right chart dimension.
  thread_local std::map<int, Poly> zeros;
  return zeros.try_emplace(n_, Poly(n_)).first->second;
}

Form& Form::add_term(const IndexSet& I, const Poly& p) {
  if (p.chart_dim() != n_) throw std::invalid_argument("coefficient chart dimension");
  if (p.is_zero()) return *this;
  // Sort I, tracking the permutation sign; repeated indices kill the term.
  IndexSet sorted;
  int sign = 1;
  for (int idx : I) {
    if (idx < 0 || idx >= n_) throw std::out_of_range("form index");
    IndexSet merged;
    int s = merge_index_sets(sorted, {idx}, merged);
    if (s == 0) return *this;
    sign *= s;
    sorted = std::move(merged);
  }
  Poly q = sign == 1 ? p : -p;
  auto [it, inserted] = comps_.emplace(std::move(sorted), q);
  if (!inserted) {
    it->second += q;
    if (it->second.is_zero()) comps_.erase(it);
  }
  return *this;
}

std::vector<int> Form::degrees() const {
  std::vector<int> ds;
  for (const auto& [I, p] : comps_) {
    int d = static_cast<int>(I.size());
    if (ds.empty() || ds.back() != d) ds.push_back(d);
  }
  std::sort(ds.begin(), ds.end());
  ds.erase(std::unique(ds.begin(), ds.end()), ds.end());
  return ds;
}

bool Form::is_homogeneous() const { return degrees().size() <= 1; }

int Form::degree() const {
  auto ds = degrees();
  if (ds.size() != 1) throw std::logic_error("degree of a non-homogeneous form");
  return ds[0];
}

Form Form::graded_part(int d) const {
  Form r(n_);
  for (const auto& [I, p] : comps_)
    if (static_cast<int>(I.size()) == d) r.comps_.emplace(I, p);
  return r;
}

Form Form::operator-() const {
  Form r(n_);
  for (const auto& [I, p] : comps_) r.comps_.emplace(I, -p);
  return r;
}

Form& Form::operator+=(const Form& o) {
  if (n_ != o.n_) throw std::invalid_argument("chart dimension mismatch");
  for (const auto& [I, p] : o.comps_) {
    auto [it, inserted] = comps_.emplace(I, p);
    if (!inserted) {
      it->second += p;
      if (it->second.is_zero()) comps_.erase(it);
    }
  }
  return *this;
}

Form& Form::operator-=(const Form& o) {
  if (n_ != o.n_) throw std::invalid_argument("chart dimension mismatch");
  for (const auto& [I, p] : o.comps_) {
    auto [it, inserted] = comps_.emplace(I, -p);
    if (!inserted) {
      it->second -= p;
      if (it->second.is_zero()) comps_.erase(it);
    }
  }
  return *this;
}

Form operator*(const Poly& f, const Form& w) {
  Form r(w.n_);
  for (const auto& [I, p] : w.comps_) r.add_term(I, f * p);
  return r;
}

Form operator*(const Rational& c, const Form& w) {
  if (c == 0) return Form(w.n_);
  Form r(w.n_);
  for (const auto& [I, p] : w.comps_) r.comps_.emplace(I, c * p);
  return r;
}

std::string Form::str() const {
  if (comps_.empty()) return "0";
  // Order by degree, then lexicographically on the index set.
  std::vector<const std::pair<const IndexSet, Poly>*> items;
  for (const auto& kv : comps_) items.push_back(&kv);
  std::stable_sort(items.begin(), items.end(), [](auto* a, auto* b) {
    if (a->first.size() != b->first.size()) return a->first.size() < b->first.size();
    return a->first < b->first;
  });
  std::ostringstream os;
  bool first = true;
  for (auto* kv : items) {
    const auto& [I, p] = *kv;
    if (!first) os << " + ";
    first = false;
    std::string coeff = p.str();
    bool needs_parens = coeff.find(" + ") != std::string::npos ||
                        coeff.find(" - ") != std::string::npos;
    if (I.empty()) {
      os << (needs_parens ? "(" + coeff + ")" : coeff);
      continue;
    }
    std::ostringstream basis;
    for (size_t t = 0; t < I.size(); ++t) {
      if (t) basis << "^";
      basis << "d" << coord_name(n_, I[t]);
    }
    if (coeff == "1") {
      os << basis.str();
    } else if (coeff == "-1") {
      os << "-" << basis.str();
    } else if (needs_parens) {
      os << "(" << coeff << ") " << basis.str();
    } else {
      os << coeff << " " << basis.str();
    }
  }
  return os.str();
}

Form wedge(const Form& a, const Form& b) {
  if (a.chart_dim() != b.chart_dim())
    throw std::invalid_argument("chart dimension mismatch");
  Form r(a.chart_dim());
  IndexSet merged;
  for (const auto& [I, p] : a.comps())
    for (const auto& [J, q] : b.comps()) {
      int sign = merge_index_sets(I, J, merged);
      if (sign == 0) continue;
      Poly c = p * q;
      r.add_term(merged, sign == 1 ? c : -c);
    }
  return r;
}

Form de_rham(const Form& w) {
  const int n = w.chart_dim();
  Form r(n);
  for (const auto& [I, p] : w.comps())
    for (int i = 0; i < n; ++i) {
      Poly dp = p.derivative(i);
      if (dp.is_zero()) continue;
      IndexSet J;
      int sign = merge_index_sets({i}, I, J);
      if (sign == 0) continue;
      r.add_term(J, sign == 1 ? dp : -dp);
    }
  return r;
}

Form interior(const VectorField& v, const Form& w) {
  if (v.chart_dim() != w.chart_dim())
    throw std::invalid_argument("chart dimension mismatch");
  Form r(w.chart_dim());
  for (const auto& [I, p] : w.comps())
    for (size_t t = 0; t < I.size(); ++t) {
      const Poly& vc = v.comp(I[t]);
      if (vc.is_zero()) continue;
      IndexSet J;
      J.reserve(I.size() - 1);
      for (size_t s = 0; s < I.size(); ++s)
        if (s != t) J.push_back(I[s]);
      Poly c = vc * p;
      r.add_term(J, t % 2 == 0 ? c : -c);
    }
  return r;
}

Form lie_derivative(const VectorField& v, const Form& w) {
  return de_rham(interior(v, w)) + interior(v, de_rham(w));
}

VectorField vf_bracket(const VectorField& a, const VectorField& b) {
  if (a.chart_dim() != b.chart_dim())
    throw std::invalid_argument("chart dimension mismatch");
  const int n = a.chart_dim();
  VectorField r(n);
  for (int i = 0; i < n; ++i) r.comp(i) = a.apply(b.comp(i)) - b.apply(a.comp(i));
  return r;
}

}  // namespace courantx
