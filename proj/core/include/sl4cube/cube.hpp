#pragma once

#include <cstdint>
#include <vector>

#include "sl4cube/linalg.hpp"
#include "sl4cube/profile.hpp"
#include "sl4cube/report.hpp"

namespace sl4cube {

// Bit k set means coordinate k is -1; vertex 0 is all +1.
using Vertex = std::uint32_t;

// The hypercube H(N,2) and its standard module V = Q^(2^N).
class Hypercube {
 public:
  explicit Hypercube(int N);

  int N() const { return N_; }
  std::size_t order() const { return std::size_t{1} << N_; }
  static int distance(Vertex x, Vertex y) { return __builtin_popcount(x ^ y); }

  QVector adjacency_apply(const QVector& v) const;
  QMatrix adjacency() const;
  // A X and X A using the sparsity of A.
  QMatrix adjacency_left(const QMatrix& X) const;
  QMatrix adjacency_right(const QMatrix& X) const;

  // Sum over vertices at distance i.
  QMatrix distance_op(int i) const;

  // Lagrange product over A with theta_k = N - 2k.
  const QMatrix& idempotent(int i) const { return E_.at(static_cast<std::size_t>(i)); }
  // 2^N E_i, which is integral.
  const std::vector<std::int64_t>& idempotent_scaled(int i) const { return E2n_.at(static_cast<std::size_t>(i)); }

  QMatrix dual_adjacency(Vertex kappa) const;
  QMatrix dual_idempotent(Vertex kappa, int i) const;
  // Diagonal with entry 2^N <E_h kappa, x> at x.
  QMatrix dual_distance_op(Vertex kappa, int h) const;

 private:
  int N_;
  std::vector<QMatrix> E_;
  std::vector<std::vector<std::int64_t>> E2n_;
};

Rational theta(int N, int i);

// The algebra T(kappa). Elements are stored by their coordinates on the
// 0/1 basis E*_i A_h E*_j: every (x,y) lies in exactly one class
// (h,i,j) = (d(x,y), d(x,kappa), d(y,kappa)), and T is the span of the
// class indicators (certified by generated_algebra()).
class TAlgebra {
 public:
  TAlgebra(const Hypercube& cube, Vertex kappa);

  int N() const { return cube_.N(); }
  Vertex basepoint() const { return kappa_; }
  const Hypercube& cube() const { return cube_; }
  std::size_t dim() const { return triples_.size(); }
  const std::vector<TripleIndex>& triples() const { return triples_; }
  std::size_t position(const TripleIndex& t) const;
  std::size_t class_of(Vertex x, Vertex y) const { return cls_[x * cube_.order() + y]; }
  const std::vector<Integer>& class_sizes() const { return sizes_; }

  // Coordinates of a matrix constant on classes; nullopt otherwise.
  std::optional<QVector> coords_of(const QMatrix& m) const;
  QMatrix matrix_of(const QVector& c) const;

  // Entrywise form sum_{x,y} B_xy C_xy.
  Rational inner(const QVector& a, const QVector& b) const;
  // Product in T, evaluated at one representative entry per class.
  QVector product(const QVector& a, const QVector& b) const;
  // Matrix of B -> X B on coordinates.
  QMatrix left_mult_matrix(const QVector& X) const;

  QVector unit(const TripleIndex& t) const;  // E*_i A_h E*_j
  QVector identity() const;
  QVector A() const;
  QVector Astar() const;
  QVector transpose(const QVector& c) const;

  // E_i A*_h E_j for (h,i,j) in the triple set, in coordinates.
  const std::vector<QVector>& dual_basis() const { return dual_basis_; }
  // Coefficients of B on the dual basis, by orthogonal projection.
  QVector dual_coeffs(const QVector& b) const;
  QVector from_dual_coeffs(const QVector& c) const;

  // calA^(k) (diagonal on E_i A*_h E_j) and calA*^(k) (diagonal on E*_i A_h E*_j).
  QVector calA(int k, const QVector& b) const;
  QVector calAstar(int k, const QVector& b) const;

  // E_i A*_h E_j <-> E*_j A_h E*_i, extended linearly from the dual basis.
  QVector S(const QVector& b) const;

  QVector phi() const;

 private:
  const Hypercube& cube_;
  Vertex kappa_;
  std::vector<TripleIndex> triples_;
  std::vector<int> pos_;  // (h,i,j) -> position or -1
  std::vector<std::uint32_t> cls_;
  std::vector<Integer> sizes_;
  std::vector<std::pair<Vertex, Vertex>> reps_;
  std::vector<QVector> dual_basis_;
  std::vector<Rational> dual_norms_;
};

struct WedderburnPart {
  int ell = 0;
  Rational eigenvalue;
  QVector idempotent;             // phi_ell
  std::vector<QVector> ideal;     // basis of phi_ell T
};

// Primitive idempotents of phi by the Lagrange formula, with ideal bases.
std::vector<WedderburnPart> wedderburn(const TAlgebra& T);

// Dimension of the algebra generated by A and A*, by closing span{I} under
// left multiplication; every word is checked to be constant on classes.
struct GeneratedAlgebra {
  std::size_t dimension = 0;
  bool words_in_class_span = true;
};
GeneratedAlgebra generated_algebra(const TAlgebra& T);

// Full-matrix check of E_i A*_h E_j for every 0 <= h,i,j <= N: constant on
// classes, and nonzero iff (h,i,j) is in the triple set.
VerificationReport check_dual_basis_matrices(const TAlgebra& T);

}  // namespace sl4cube
