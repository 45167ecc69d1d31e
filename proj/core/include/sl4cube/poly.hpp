#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>

#include "sl4cube/linalg.hpp"
#include "sl4cube/profile.hpp"
#include "sl4cube/sl4.hpp"

namespace sl4cube {

// Which basis of P = Q[x,y,z,w] the coefficients refer to: monomials in
// x,y,z,w or monomials in the starred variables x*,y*,z*,w*.
enum class Basis { monomial, starred };

Basis other(Basis b);

// Sparse polynomial; zero coefficients are never stored.
class PolyVec {
 public:
  explicit PolyVec(Basis b = Basis::monomial) : basis_(b) {}

  static PolyVec term(const Profile& p, Basis b, const Rational& c = 1);
  static PolyVec from_dense(int N, const QVector& v, Basis b);

  Basis basis() const { return basis_; }
  const std::map<Profile, Rational>& terms() const { return terms_; }

  void add(const Profile& p, const Rational& c);
  Rational coeff(const Profile& p) const;
  bool is_zero() const { return terms_.empty(); }

  // Common degree of all terms; nullopt for zero or mixed degree.
  std::optional<int> degree() const;
  bool homogeneous_of(int N) const;

  // Coordinates in enumerate_profiles(N) order; terms of other degrees are
  // rejected.
  QVector dense(int N) const;

  PolyVec& operator+=(const PolyVec& o);
  PolyVec& operator-=(const PolyVec& o);
  PolyVec& operator*=(const Rational& c);
  friend PolyVec operator+(PolyVec a, const PolyVec& b) { return a += b; }
  friend PolyVec operator-(PolyVec a, const PolyVec& b) { return a -= b; }
  friend PolyVec operator*(const Rational& c, PolyVec a) { return a *= c; }
  friend bool operator==(const PolyVec& a, const PolyVec& b) {
    return a.basis_ == b.basis_ && a.terms_ == b.terms_;
  }

  std::string str() const;

 private:
  Basis basis_;
  std::map<Profile, Rational> terms_;
};

enum class Var { x, y, z, w, xs, ys, zs, ws };

// Generator action, using the rule native to the vector's basis: in the
// monomial basis A_i shifts exponents and A*_i is diagonal; in the starred
// basis the roles swap.
PolyVec act_generator(GeneratorId id, const PolyVec& v);

// Derivation action of an arbitrary 4x4 matrix (monomial result).
PolyVec act_matrix(const Matrix4& m, const PolyVec& v);

PolyVec convert_basis(const PolyVec& v, Basis target);

// x^r y^s z^t w^u <-> x*^r y*^s z*^t w*^u, same coefficients.
PolyVec sigma(const PolyVec& v);

PolyVec apply_D(Var var, const PolyVec& v);
PolyVec apply_M(Var var, const PolyVec& v);
PolyVec apply_L(int i, const PolyVec& v);
PolyVec apply_R(int i, const PolyVec& v);
PolyVec apply_Omega(const PolyVec& v);

// (Omega + 2)^2 / 2 - L_i R_i - R_i L_i.
PolyVec apply_C(int i, const PolyVec& v);

// The two bracket expressions (4X^2 + 4Y^2 - [X,Y]^2)/8 for C_i:
// variant 0 uses (A_j, A*_k), variant 1 uses (A*_j, A_k), where (i,j,k)
// is a cyclic shift of (1,2,3).
PolyVec apply_C_bracket(int i, int variant, const PolyVec& v);

// Bilinear form with <x^p, x^q> = delta_pq p!; inputs in any basis.
Rational hermitian(const PolyVec& a, const PolyVec& b);

using PolyOp = std::function<PolyVec(const PolyVec&)>;

// Matrix of op from degree n_in to degree n_out, coordinates in `basis`.
QMatrix operator_matrix(int n_in, int n_out, Basis basis, const PolyOp& op);

// Column p: monomial coordinates of x*^p (equivalently starred
// coordinates of x^p).
const QMatrix& conversion_matrix(int N);

// Degree-N weight triples, one per profile; also checks the inverse map.
std::map<WeightTriple, Profile> weight_decomposition(int N);

// Eigenvalue -> multiplicity for A_i or A*_i on P_N, by exact kernels.
std::map<int, int> eigenspace_dims(GeneratorId id, int N);

}  // namespace sl4cube
