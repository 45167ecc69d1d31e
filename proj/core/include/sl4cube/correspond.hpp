#pragma once

#include <string>

#include "sl4cube/cube.hpp"
#include "sl4cube/poly.hpp"
#include "sl4cube/tensor.hpp"

namespace sl4cube {

// The maps are realized in rational rescalings. scale_squared is the square
// of the factor dropped from the exact map, so <m f, m g> = scale_squared
// <f, g> for the rescaled map m.
struct ScaledMap {
  std::string name;
  Rational scale_squared;
};

ScaledMap ddag_map(int N);   // N! 2^N
ScaledMap eps_map(int N);    // 2^-N
ScaledMap theta_map(int N);  // N!

// x^p -> p! B(p) = N! 2^N B~(p), coordinates on B~.
FixVec ddag_scaled(const PolyVec& v, int N);
// x*^p -> p! B*(p) = N! 2^N B~*(p), coordinates on B~*.
FixVec ddag_scaled_starred(const PolyVec& v, int N);

// x (x) y (x) z -> e_{y,z} when x = kappa, else 0.
QMatrix eps_scaled(const Hypercube& cube, Vertex kappa, const TripleTensor& t);
// The same map on Fix(G) by the basis formulas
// B(p) -> E*_j A_h E*_i and B*(p) -> E_i A*_h E_j, in T coordinates.
QVector eps_scaled(const TAlgebra& T, const FixVec& v);

// x^p -> p! E*_j A_h E*_i and x*^p -> p! E_i A*_h E_j, (h,i,j) = triple(p).
QVector theta_scaled(const TAlgebra& T, const PolyVec& v, int N);

// Column P: B~*(P) in B~ coordinates, from pairings <B*(P), B(p)> computed
// in T through the eps isometry.
QMatrix fix_change_of_basis(const TAlgebra& T);
FixVec to_basis(const TAlgebra& T, const FixVec& v, FixBasis target);

Rational fix_inner(const TAlgebra& T, const FixVec& a, const FixVec& b);

}  // namespace sl4cube
