#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "sl4cube/cube.hpp"
#include "sl4cube/sl4.hpp"

namespace sl4cube {

// Element of V (x) V (x) V, keyed by x | y << N | z << 2N.
class TripleTensor {
 public:
  using Key = std::uint64_t;

  explicit TripleTensor(int N) : N_(N) {}

  int N() const { return N_; }
  Key key(Vertex x, Vertex y, Vertex z) const;
  std::array<Vertex, 3> unpack(Key k) const;

  void add(Vertex x, Vertex y, Vertex z, const Rational& c);
  Rational coeff(Vertex x, Vertex y, Vertex z) const;
  const std::map<Key, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  TripleTensor& operator+=(const TripleTensor& o);
  TripleTensor& operator*=(const Rational& c);
  friend TripleTensor operator+(TripleTensor a, const TripleTensor& b) { return a += b; }
  friend TripleTensor operator-(TripleTensor a, const TripleTensor& b);
  friend TripleTensor operator*(const Rational& c, TripleTensor a) { return a *= c; }
  friend bool operator==(const TripleTensor& a, const TripleTensor& b) = default;

 private:
  void add_key(Key k, const Rational& c);

  int N_;
  std::map<Key, Rational> terms_;
};

Rational inner(const TripleTensor& a, const TripleTensor& b);

// Counts of coordinates where all agree (r), x differs (s), y differs (t),
// z differs (u).
Profile profile_of(int N, Vertex x, Vertex y, Vertex z);

// Sum of all x (x) y (x) z with the given profile.
TripleTensor b_vector(int N, const Profile& p);
// 2^N sum_x E_h x (x) E_i x (x) E_j x, for any 0 <= h,i,j <= N.
TripleTensor q_vector(const Hypercube& cube, const TripleIndex& t);
// Q at the triple of p.
TripleTensor bstar_vector(const Hypercube& cube, const Profile& p);

// A^(k) adjacency in slot k; A*^(1), A*^(2), A*^(3) scale by
// theta*_{d(y,z)}, theta*_{d(z,x)}, theta*_{d(x,y)}.
TripleTensor act_concrete(GeneratorId g, const TripleTensor& t);

// Element of G = S_N x| Z_2^N acting by x -> perm(x) XOR mask, with
// perm sending coordinate k to coordinate perm[k].
struct GroupElement {
  std::vector<int> perm;
  Vertex mask = 0;

  Vertex apply(Vertex x) const;
};

TripleTensor act_group(const GroupElement& g, const TripleTensor& t);
std::vector<GroupElement> group_generators(int N);  // N-1 transpositions and one flip
std::vector<GroupElement> group_elements(int N);    // all N! 2^N

bool fix_membership(const TripleTensor& t);

// Orbit id of every triple (packed key order). `enumerate` uses all of G,
// otherwise union-find over the generators.
std::vector<std::size_t> triple_orbits(int N, bool enumerate);

enum class FixBasis { Btilde, BstarTilde };

// Coordinates on B~(p) = p!/(N! 2^N) B(p), or on B~*(p) likewise with B*(p),
// in enumerate_profiles(N) order.
struct FixVec {
  FixBasis basis = FixBasis::Btilde;
  int N = 0;
  QVector coords;

  static FixVec zero(FixBasis b, int N);
  static FixVec unit(FixBasis b, const Profile& p);
  friend bool operator==(const FixVec&, const FixVec&) = default;
};

// The profile-shift and diagonal tables on FixVec coordinates.
FixVec act_abstract(GeneratorId g, const FixVec& v);

TripleTensor lift(const Hypercube& cube, const FixVec& v);
// Coordinates of t if t is in Fix(G), by pairing with the dual basis.
std::optional<FixVec> restrict_to_fix(const Hypercube& cube, const TripleTensor& t, FixBasis b);

// Squared norm of a basis vector: p!/(N! 2^N) for either tilde basis.
Rational tilde_norm2(const Profile& p);

}  // namespace sl4cube
