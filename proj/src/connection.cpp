#include "courantx/connection.hpp"

#include <stdexcept>

namespace courantx {

namespace {

void require_exact(const CourantStructure& Q) {
  if (!Q.is_exact())
    throw std::invalid_argument("splittings need an exact structure");
}

}  // namespace

Connection base_connection(const CourantStructure& Q) {
  require_exact(Q);
  return {Form(Q.n)};
}

CourantElement connection_apply(const CourantStructure& Q, const Connection& c,
                                const VectorField& xi) {
  require_exact(Q);
  return {interior(xi, c.offset), xi.comps()};
}

Connection isotropic_from_splitting(const CourantStructure& Q, const Splitting& s) {
  require_exact(Q);
  const int n = Q.n, k = Q.k;
  if (static_cast<int>(s.frame_images.size()) != n)
    throw std::invalid_argument("splitting must cover the coordinate frame");
  for (int i = 0; i < n; ++i) {
    VectorField a = Q.anchor(s.frame_images[i]);
    if (!(a == VectorField::coordinate(n, i)))
      throw std::invalid_argument("not a splitting of the anchor");
  }
  const Rational inv(1, k + 1);
  std::vector<Form> u(n, Form(n));
  for (int i = 0; i < n; ++i) {
    Form phi(n);
    for (int j = 0; j < n; ++j) {
      Form p = Q.pairing(s.frame_images[i], s.frame_images[j]);
      phi += wedge(Form::basis(n, {j}), p);
    }
    u[i] = s.frame_images[i].form_part - inv * phi;
  }
  // Isotropy of the corrected images: i_{d_i} u_j + i_{d_j} u_i = 0.
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Form defect = interior(VectorField::coordinate(n, i), u[j]) +
                    interior(VectorField::coordinate(n, j), u[i]);
      if (!defect.is_zero())
        throw std::logic_error("corrected splitting is not isotropic");
    }
  Form offset(n);
  for (int j = 0; j < n; ++j) offset += wedge(Form::basis(n, {j}), u[j]);
  offset = inv * offset;
  // The offset must reproduce the corrected images exactly.
  for (int i = 0; i < n; ++i)
    if (!(interior(VectorField::coordinate(n, i), offset) == u[i]))
      throw std::logic_error("offset fails to reproduce the splitting");
  return {offset};
}

Form connection_difference(const CourantStructure& Q, const Connection& a,
                           const Connection& b) {
  require_exact(Q);
  const int n = Q.n, k = Q.k;
  Form diff(n);
  for (int j = 0; j < n; ++j) {
    VectorField dj = VectorField::coordinate(n, j);
    Form phi = connection_apply(Q, a, dj).form_part -
               connection_apply(Q, b, dj).form_part;
    diff += wedge(Form::basis(n, {j}), phi);
  }
  return Rational(1, k + 1) * diff;
}

Connection torsor_act(const Connection& c, const Form& w) {
  return {c.offset + w};
}

Form curvature_component(const CourantStructure& Q, const Connection& c, int i,
                         int j) {
  require_exact(Q);
  CourantElement si = connection_apply(Q, c, VectorField::coordinate(Q.n, i));
  CourantElement sj = connection_apply(Q, c, VectorField::coordinate(Q.n, j));
  // Coordinate fields commute, so the bracket is pure form part.
  return Q.dorfman(si, sj).form_part;
}

Form curvature(const CourantStructure& Q, const Connection& c) {
  require_exact(Q);
  const int n = Q.n, k = Q.k;
  std::vector<std::vector<Form>> comp(n, std::vector<Form>(n, Form(n)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) comp[i][j] = curvature_component(Q, c, i, j);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (!(comp[i][j] + comp[j][i]).is_zero())
        throw std::logic_error("curvature components not antisymmetric");
  Form F(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      F += wedge(Form::basis(n, {i, j}), comp[i][j]);
  F = Rational(2, (k + 2) * (k + 1)) * F;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Form rec = interior(VectorField::coordinate(n, j),
                          interior(VectorField::coordinate(n, i), F));
      if (!(rec == comp[i][j]))
        throw std::logic_error("curvature components do not assemble to a form");
    }
  if (!de_rham(F).is_zero()) throw std::logic_error("curvature form is not closed");
  return F;
}

}  // namespace courantx
