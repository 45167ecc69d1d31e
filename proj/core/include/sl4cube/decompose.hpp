#pragma once

#include <vector>

#include "sl4cube/poly.hpp"
#include "sl4cube/special.hpp"

namespace sl4cube {

// The two generators whose Krawtchouk operators span Ker L_i:
// L1 -> (A2, A3), L2 -> (A3, A1), L3 -> (A1, A2).
std::pair<GeneratorId, GeneratorId> kernel_generators(int i);

// v_{j,k} = f_j(X) f_k(Y) x^N, ordered by (j, k).
std::vector<PolyVec> kernel_L_basis(int i, int N, const KrawtchoukFamily& fam);
std::vector<PolyVec> kernel_L_basis(int i, int N);

struct GradedSummand {
  int ell = 0;
  std::vector<PolyVec> basis;  // R_i^ell applied to kernel_L_basis(i, N - 2 ell)
};

std::vector<GradedSummand> graded_decomposition(int i, int N, bool corrupt_krawtchouk = false);

// A1^s A2^t A3^u x^N in profile order of (s,t,u); with `starred`, the A*
// words applied to x*^N instead.
std::vector<PolyVec> generator_word_family(int N, bool starred);

}  // namespace sl4cube
