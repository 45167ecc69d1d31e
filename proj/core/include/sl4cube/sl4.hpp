#pragma once

#include <array>
#include <string>
#include <vector>

#include "sl4cube/linalg.hpp"
#include "sl4cube/report.hpp"

namespace sl4cube {

// Dense 4x4 matrices share the general matrix type.
using Matrix4 = QMatrix;

enum class Kind { A, Astar };

struct GeneratorId {
  Kind kind;
  int index;  // 1, 2 or 3

  friend bool operator==(const GeneratorId&, const GeneratorId&) = default;
};

std::string name(GeneratorId g);

// All six generators in the order A1, A2, A3, A*1, A*2, A*3.
std::array<GeneratorId, 6> all_generators();

struct GeneratorSet {
  std::array<Matrix4, 3> a;
  std::array<Matrix4, 3> astar;

  const Matrix4& operator[](GeneratorId g) const;
  Matrix4& operator[](GeneratorId g);
};

// A_i are permutation matrices, A*_i are diagonal sign matrices.
Matrix4 generator(GeneratorId id);
GeneratorSet standard_generators();

Matrix4 bracket(const Matrix4& x, const Matrix4& y);

// Relations (i) through (iv), enumerated over all index orderings.
VerificationReport check_presentation(const GeneratorSet& g);

// The fifteen bracket words forming a basis of sl4.
std::vector<Matrix4> basis15(const GeneratorSet& g);
std::vector<std::string> basis15_names();

// Elementary matrix E_{i,j} (1-based, i != j) rebuilt from bracket words.
// For i == j in {1,2,3} the result is E_{i,i} - E_{i+1,i+1}.
Matrix4 elementary_from_generators(int i, int j, const GeneratorSet& g);
Matrix4 elementary(int i, int j);

// Every inverse formula: twelve off-diagonal, three diagonal differences.
VerificationReport check_inverse_formulas(const GeneratorSet& g);

// Rank of basis15 with tracelessness, and bracket recomputation.
VerificationReport check_basis15(const GeneratorSet& g);

Matrix4 upsilon();
Matrix4 tau(const Matrix4& m);

// Upsilon^2 = I, A_i Upsilon = Upsilon A*_i, tau a Lie map on basis15, and
// the sl2+sl2 independence statement.
VerificationReport check_upsilon(const GeneratorSet& g);

}  // namespace sl4cube
