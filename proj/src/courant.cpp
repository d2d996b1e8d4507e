#include "courantx/courant.hpp"

#include <sstream>
#include <stdexcept>

namespace courantx {

std::string family_name(CourantFamily f) {
  switch (f) {
    case CourantFamily::standard_exact: return "standard";
    case CourantFamily::twisted: return "twisted";
    case CourantFamily::quadratic: return "quadratic";
    case CourantFamily::commutative: return "commutative";
  }
  return "?";
}

bool CourantElement::is_zero() const {
  if (!form_part.is_zero()) return false;
  for (const auto& p : vec)
    if (!p.is_zero()) return false;
  return true;
}

CourantElement CourantElement::operator-() const {
  CourantElement r{-form_part, {}};
  r.vec.reserve(vec.size());
  for (const auto& p : vec) r.vec.push_back(-p);
  return r;
}

CourantElement& CourantElement::operator+=(const CourantElement& o) {
  if (vec.size() != o.vec.size()) throw std::invalid_argument("element shape mismatch");
  form_part += o.form_part;
  for (size_t i = 0; i < vec.size(); ++i) vec[i] += o.vec[i];
  return *this;
}

CourantElement& CourantElement::operator-=(const CourantElement& o) {
  if (vec.size() != o.vec.size()) throw std::invalid_argument("element shape mismatch");
  form_part -= o.form_part;
  for (size_t i = 0; i < vec.size(); ++i) vec[i] -= o.vec[i];
  return *this;
}

CourantElement operator*(const Poly& f, const CourantElement& q) {
  CourantElement r{f * q.form_part, {}};
  r.vec.reserve(q.vec.size());
  for (const auto& p : q.vec) r.vec.push_back(f * p);
  return r;
}

std::string CourantElement::str() const {
  std::ostringstream os;
  os << "(" << form_part.str();
  for (const auto& p : vec) os << " | " << p.str();
  os << ")";
  return os.str();
}

int CourantStructure::rank() const {
  switch (family) {
    case CourantFamily::standard_exact:
    case CourantFamily::twisted: return n;
    case CourantFamily::quadratic: return static_cast<int>(lie_c.size());
    case CourantFamily::commutative: return 0;
  }
  return 0;
}

std::string CourantStructure::splitting_name() const {
  switch (family) {
    case CourantFamily::standard_exact:
    case CourantFamily::twisted: return "form-summand + coordinate-frame";
    case CourantFamily::quadratic: return "lie-frame";
    case CourantFamily::commutative: return "form-summand";
  }
  return "?";
}

CourantElement CourantStructure::zero() const {
  return {Form(n), std::vector<Poly>(rank(), Poly(n))};
}

CourantElement CourantStructure::make(Form form_part, std::vector<Poly> vec) const {
  if (form_part.chart_dim() != n || static_cast<int>(vec.size()) != rank())
    throw std::invalid_argument("element shape vs structure");
  if (!form_part.is_zero() && form_part.degree() != k)
    throw std::invalid_argument("form part must have the structure dimension as degree");
  return {std::move(form_part), std::move(vec)};
}

VectorField CourantStructure::anchor(const CourantElement& q) const {
  if (is_exact()) return VectorField(n, q.vec);
  return VectorField(n);  // quadratic and commutative anchors vanish
}

CourantElement CourantStructure::coanchor(const Form& alpha) const {
  if (!alpha.is_zero() && alpha.degree() != k)
    throw std::invalid_argument("coanchor input degree");
  if (family == CourantFamily::quadratic) return zero();  // forms die on a point
  CourantElement r = zero();
  r.form_part = alpha;
  return r;
}

Form CourantStructure::pairing(const CourantElement& a, const CourantElement& b) const {
  switch (family) {
    case CourantFamily::standard_exact:
    case CourantFamily::twisted: {
      return interior(VectorField(n, a.vec), b.form_part) +
             interior(VectorField(n, b.vec), a.form_part);
    }
    case CourantFamily::quadratic: {
      Poly s(n);
      const int r = rank();
      for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) s += gram[i][j] * (a.vec[i] * b.vec[j]);
      return Form::from_poly(s);
    }
    case CourantFamily::commutative: return Form(n);
  }
  return Form(n);
}

CourantElement CourantStructure::dorfman(const CourantElement& a,
                                         const CourantElement& b) const {
  switch (family) {
    case CourantFamily::standard_exact:
    case CourantFamily::twisted: {
      VectorField xi(n, a.vec), eta(n, b.vec);
      Form f = lie_derivative(xi, b.form_part) - interior(eta, de_rham(a.form_part));
      if (family == CourantFamily::twisted) f += interior(eta, interior(xi, twist));
      return {std::move(f), vf_bracket(xi, eta).comps()};
    }
    case CourantFamily::quadratic: {
      const int r = rank();
      CourantElement out = zero();
      for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) {
          if (a.vec[i].is_zero() || b.vec[j].is_zero()) continue;
          Poly p = a.vec[i] * b.vec[j];
          for (int m = 0; m < r; ++m) out.vec[m] += lie_c[i][j][m] * p;
        }
      return out;
    }
    case CourantFamily::commutative: return zero();
  }
  return zero();
}

VectorField CourantStructure::complement_anchor(int i) const {
  if (is_exact()) return VectorField::coordinate(n, i);
  return VectorField(n);
}

void CourantStructure::validate() const {
  if (n < 0 || k < 1) throw std::invalid_argument("chart dimension or structure dimension");
  if (family == CourantFamily::twisted) {
    if (!twist.is_zero() && twist.degree() != k + 2)
      throw std::invalid_argument("twist degree must be k+2");
  } else if (!twist.is_zero()) {
    throw std::invalid_argument("twist outside the twisted family");
  }
  if (family == CourantFamily::quadratic) {
    if (n != 0) throw std::invalid_argument("quadratic family lives on the point chart");
    if (k != 1) throw std::invalid_argument("quadratic family has dimension 1");
    const int r = rank();
    for (const auto& plane : lie_c) {
      if (static_cast<int>(plane.size()) != r) throw std::invalid_argument("lie_c shape");
      for (const auto& row : plane)
        if (static_cast<int>(row.size()) != r) throw std::invalid_argument("lie_c shape");
    }
    if (static_cast<int>(gram.size()) != r) throw std::invalid_argument("gram shape");
    for (const auto& row : gram)
      if (static_cast<int>(row.size()) != r) throw std::invalid_argument("gram shape");
    // Antisymmetry, Jacobi, gram symmetry, gram invariance
    // <[u,v],w> + <v,[u,w]> = 0 on frame triples.
    auto brk = [&](int i, int j, int m) { return lie_c[i][j][m]; };
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j) {
        for (int m = 0; m < r; ++m)
          if (brk(i, j, m) + brk(j, i, m) != 0)
            throw std::invalid_argument("lie_c not antisymmetric");
        if (gram[i][j] != gram[j][i]) throw std::invalid_argument("gram not symmetric");
      }
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j)
        for (int m = 0; m < r; ++m)
          for (int target = 0; target < r; ++target) {
            Rational jac = 0;
            for (int t = 0; t < r; ++t) {
              jac += brk(j, m, t) * brk(i, t, target);
              jac -= brk(i, j, t) * brk(t, m, target);
              jac -= brk(j, t, target) * brk(i, m, t);
            }
            if (jac != 0) throw std::invalid_argument("lie_c fails Jacobi");
          }
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j)
        for (int m = 0; m < r; ++m) {
          Rational inv = 0;
          for (int t = 0; t < r; ++t)
            inv += brk(i, j, t) * gram[t][m] + brk(i, m, t) * gram[j][t];
          if (inv != 0) throw std::invalid_argument("gram not invariant");
        }
  }
}

LieAlgebroidStructure CourantStructure::associated_lie() const {
  switch (family) {
    case CourantFamily::standard_exact:
    case CourantFamily::twisted:
      // The coanchor image absorbs the form part and the twist contribution,
      // leaving the tangent algebroid.
      return tangent_algebroid(n);
    case CourantFamily::quadratic: {
      LieAlgebroidStructure A;
      A.n = 0;
      A.rank = rank();
      A.anchor_frame.assign(A.rank, VectorField(0));
      A.c.assign(A.rank, std::vector<std::vector<Poly>>(
                             A.rank, std::vector<Poly>(A.rank, Poly(0))));
      for (int i = 0; i < A.rank; ++i)
        for (int j = 0; j < A.rank; ++j)
          for (int m = 0; m < A.rank; ++m)
            A.c[i][j][m] = Poly::constant(0, lie_c[i][j][m]);
      A.self_check();
      return A;
    }
    case CourantFamily::commutative: {
      LieAlgebroidStructure A;
      A.n = n;
      A.rank = 0;
      return A;
    }
  }
  throw std::logic_error("unreachable");
}

CourantStructure standard_family(int n, int k) {
  CourantStructure Q;
  Q.family = CourantFamily::standard_exact;
  Q.n = n;
  Q.k = k;
  Q.twist = Form(n);
  Q.validate();
  return Q;
}

CourantStructure twisted_family(int n, int k, Form twist, bool allow_open_twist) {
  CourantStructure Q;
  Q.family = CourantFamily::twisted;
  Q.n = n;
  Q.k = k;
  Q.twist = std::move(twist);
  Q.validate();
  if (!allow_open_twist && !Q.twist_is_closed())
    throw std::invalid_argument("twist form is not closed");
  return Q;
}

CourantStructure quadratic_family(
    std::vector<std::vector<std::vector<Rational>>> lie_c,
    std::vector<std::vector<Rational>> gram) {
  CourantStructure Q;
  Q.family = CourantFamily::quadratic;
  Q.n = 0;
  Q.k = 1;
  Q.twist = Form(0);
  Q.lie_c = std::move(lie_c);
  Q.gram = std::move(gram);
  Q.validate();
  return Q;
}

CourantStructure quadratic_so3() {
  std::vector<std::vector<std::vector<Rational>>> c(
      3, std::vector<std::vector<Rational>>(3, std::vector<Rational>(3, 0)));
  // [e_i, e_j] = e_k cyclically.
  c[0][1][2] = 1;
  c[1][0][2] = -1;
  c[1][2][0] = 1;
  c[2][1][0] = -1;
  c[2][0][1] = 1;
  c[0][2][1] = -1;
  std::vector<std::vector<Rational>> g(3, std::vector<Rational>(3, 0));
  for (int i = 0; i < 3; ++i) g[i][i] = -2;
  return quadratic_family(std::move(c), std::move(g));
}

CourantStructure commutative_family(int n, int k) {
  CourantStructure Q;
  Q.family = CourantFamily::commutative;
  Q.n = n;
  Q.k = k;
  Q.twist = Form(n);
  Q.validate();
  return Q;
}

namespace {

std::string triple_str(const CourantElement& a, const CourantElement& b,
                       const CourantElement& c) {
  return "q=" + a.str() + " q1=" + b.str() + " q2=" + c.str();
}

}  // namespace

std::vector<AxiomCheck> verify_axioms(
    const CourantStructure& Q, int samples,
    const std::function<CourantElement()>& draw_q,
    const std::function<Poly()>& draw_f,
    const std::function<Form(int)>& draw_form) {
  std::vector<AxiomCheck> out;
  auto run = [&](const std::string& id,
                 const std::function<std::string()>& one_sample) {
    AxiomCheck chk;
    chk.id = id;
    chk.samples = samples;
    for (int s = 0; s < samples; ++s) {
      std::string ce = one_sample();
      if (!ce.empty()) {
        ++chk.failures;
        if (chk.counterexample.empty()) chk.counterexample = ce;
      }
    }
    out.push_back(std::move(chk));
  };

  run("courant.bracket_jacobi", [&]() -> std::string {
    CourantElement q = draw_q(), q1 = draw_q(), q2 = draw_q();
    CourantElement lhs = Q.dorfman(q, Q.dorfman(q1, q2));
    CourantElement rhs = Q.dorfman(Q.dorfman(q, q1), q2) + Q.dorfman(q1, Q.dorfman(q, q2));
    if (lhs == rhs) return "";
    return triple_str(q, q1, q2) + " lhs=" + lhs.str() + " rhs=" + rhs.str();
  });

  run("courant.anchor_morphism", [&]() -> std::string {
    CourantElement q1 = draw_q(), q2 = draw_q();
    VectorField lhs = Q.anchor(Q.dorfman(q1, q2));
    VectorField rhs = vf_bracket(Q.anchor(q1), Q.anchor(q2));
    if (lhs == rhs) return "";
    return "q1=" + q1.str() + " q2=" + q2.str() + " lhs=" + lhs.str() +
           " rhs=" + rhs.str();
  });

  run("courant.coanchor_complex", [&]() -> std::string {
    Form alpha = draw_form(Q.k);
    VectorField v = Q.anchor(Q.coanchor(alpha));
    if (v.is_zero()) return "";
    return "alpha=" + alpha.str() + " anchor=" + v.str();
  });

  run("courant.bracket_function_leibniz", [&]() -> std::string {
    CourantElement q1 = draw_q(), q2 = draw_q();
    Poly f = draw_f();
    CourantElement lhs = Q.dorfman(q1, f * q2);
    CourantElement rhs = f * Q.dorfman(q1, q2) + Q.anchor(q1).apply(f) * q2;
    if (lhs == rhs) return "";
    return "q1=" + q1.str() + " q2=" + q2.str() + " f=" + f.str() +
           " lhs=" + lhs.str() + " rhs=" + rhs.str();
  });

  run("courant.pairing_invariance", [&]() -> std::string {
    CourantElement q = draw_q(), q1 = draw_q(), q2 = draw_q();
    Form lhs = Q.pairing(Q.dorfman(q, q1), q2) + Q.pairing(q1, Q.dorfman(q, q2));
    Form rhs = lie_derivative(Q.anchor(q), Q.pairing(q1, q2));
    if (lhs == rhs) return "";
    return triple_str(q, q1, q2) + " lhs=" + lhs.str() + " rhs=" + rhs.str();
  });

  run("courant.pairing_cyclic", [&]() -> std::string {
    CourantElement q = draw_q(), q1 = draw_q(), q2 = draw_q();
    Form lhs = interior(Q.anchor(q), Q.pairing(q1, q2));
    Form rhs = -interior(Q.anchor(q1), Q.pairing(q, q2)) -
               interior(Q.anchor(q2), Q.pairing(q, q1));
    if (lhs == rhs) return "";
    return triple_str(q, q1, q2) + " lhs=" + lhs.str() + " rhs=" + rhs.str();
  });

  run("courant.forms_left_ideal", [&]() -> std::string {
    CourantElement q = draw_q();
    Form alpha = draw_form(Q.k);
    CourantElement lhs = Q.dorfman(q, Q.coanchor(alpha));
    CourantElement rhs = Q.coanchor(lie_derivative(Q.anchor(q), alpha));
    if (lhs == rhs) return "";
    return "q=" + q.str() + " alpha=" + alpha.str() + " lhs=" + lhs.str() +
           " rhs=" + rhs.str();
  });

  run("courant.pairing_coanchor_adjunction", [&]() -> std::string {
    CourantElement q = draw_q();
    Form alpha = draw_form(Q.k);
    Form lhs = Q.pairing(q, Q.coanchor(alpha));
    Form rhs = interior(Q.anchor(q), alpha);
    if (lhs == rhs) return "";
    return "q=" + q.str() + " alpha=" + alpha.str() + " lhs=" + lhs.str() +
           " rhs=" + rhs.str();
  });

  run("courant.symmetrizer", [&]() -> std::string {
    CourantElement q1 = draw_q(), q2 = draw_q();
    CourantElement lhs = Q.dorfman(q1, q2) + Q.dorfman(q2, q1);
    CourantElement rhs = Q.coanchor(de_rham(Q.pairing(q1, q2)));
    if (lhs == rhs) return "";
    return "q1=" + q1.str() + " q2=" + q2.str() + " lhs=" + lhs.str() +
           " rhs=" + rhs.str();
  });

  return out;
}

}  // namespace courantx
