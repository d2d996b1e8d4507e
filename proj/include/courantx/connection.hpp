#pragma once

#include "courantx/courant.hpp"

namespace courantx {

// Isotropic splitting of an exact structure, stored as its offset potential:
// the splitting sends a field xi to (i_xi offset, xi). For a (k+1)-form W
// with i_xi W isotropic this parametrization is faithful.
struct Connection {
  Form offset;

  bool operator==(const Connection&) const = default;
};

// The trivial splitting xi -> (0, xi).
Connection base_connection(const CourantStructure& Q);

// Value of the splitting on a vector field.
CourantElement connection_apply(const CourantStructure& Q, const Connection& c,
                                const VectorField& xi);

// An O-linear right inverse of the anchor, recorded by its values on the
// coordinate frame.
struct Splitting {
  std::vector<CourantElement> frame_images;
};

// Corrects an arbitrary splitting to an isotropic one and returns it as a
// Connection. The correction subtracts the coanchor of
//   (1/(k+1)) sum_j dx_j ^ <s(d_i), s(d_j)>
// from s(d_i); the cyclic pairing identity makes the corrected images exactly
// isotropic, which is verified before returning.
Connection isotropic_from_splitting(const CourantStructure& Q, const Splitting& s);

// Difference of two splittings, recovered from their values on the coordinate
// frame (not read off the stored offsets).
Form connection_difference(const CourantStructure& Q, const Connection& a,
                           const Connection& b);

// Shifts the splitting by a (k+1)-form.
Connection torsor_act(const Connection& c, const Form& w);

// The basic curvature components c(i,j) = form part of {s(d_i), s(d_j)}.
Form curvature_component(const CourantStructure& Q, const Connection& c, int i, int j);

// Assembles the curvature (k+2)-form
//   F = 2/((k+2)(k+1)) sum_{i<j} dx_i ^ dx_j ^ c(i,j)
// and verifies that the components are antisymmetric, that every c(i,j) is
// recovered as i_{d_j} i_{d_i} F, and that F is closed.
Form curvature(const CourantStructure& Q, const Connection& c);

}  // namespace courantx
