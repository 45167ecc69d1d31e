#include "sl4cube/decompose.hpp"

#include <stdexcept>

namespace sl4cube {

std::pair<GeneratorId, GeneratorId> kernel_generators(int i) {
  switch (i) {
    case 1: return {{Kind::A, 2}, {Kind::A, 3}};
    case 2: return {{Kind::A, 3}, {Kind::A, 1}};
    case 3: return {{Kind::A, 1}, {Kind::A, 2}};
    default: throw std::out_of_range("kernel_generators: index");
  }
}

std::vector<PolyVec> kernel_L_basis(int i, int N, const KrawtchoukFamily& fam) {
  if (fam.N != N) throw std::invalid_argument("kernel_L_basis: family degree mismatch");
  const auto [X, Y] = kernel_generators(i);
  const PolyVec top = PolyVec::term({N, 0, 0, 0}, Basis::monomial);
  std::vector<PolyVec> out;
  out.reserve(static_cast<std::size_t>((N + 1) * (N + 1)));
  for (int j = 0; j <= N; ++j) {
    for (int k = 0; k <= N; ++k) {
      const PolyVec inner = apply_poly1(fam.f(k), Y, top);
      out.push_back(apply_poly1(fam.f(j), X, inner));
    }
  }
  return out;
}

std::vector<PolyVec> kernel_L_basis(int i, int N) { return kernel_L_basis(i, N, krawtchouk(N)); }

std::vector<GradedSummand> graded_decomposition(int i, int N, bool corrupt_krawtchouk) {
  std::vector<GradedSummand> out;
  for (int ell = 0; 2 * ell <= N; ++ell) {
    GradedSummand part;
    part.ell = ell;
    for (PolyVec v : kernel_L_basis(i, N - 2 * ell, krawtchouk(N - 2 * ell, corrupt_krawtchouk))) {
      for (int k = 0; k < ell; ++k) v = apply_R(i, v);
      part.basis.push_back(std::move(v));
    }
    out.push_back(std::move(part));
  }
  return out;
}

std::vector<PolyVec> generator_word_family(int N, bool starred) {
  const Kind kind = starred ? Kind::Astar : Kind::A;
  const Basis basis = starred ? Basis::starred : Basis::monomial;
  std::vector<PolyVec> out;
  for (const Profile& p : enumerate_profiles(N)) {
    PolyVec v = PolyVec::term({N, 0, 0, 0}, basis);
    for (int k = 0; k < p.u; ++k) v = act_generator({kind, 3}, v);
    for (int k = 0; k < p.t; ++k) v = act_generator({kind, 2}, v);
    for (int k = 0; k < p.s; ++k) v = act_generator({kind, 1}, v);
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace sl4cube
