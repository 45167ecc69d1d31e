#include "sl4cube/tensor.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace sl4cube {

TripleTensor::Key TripleTensor::key(Vertex x, Vertex y, Vertex z) const {
  return Key{x} | (Key{y} << N_) | (Key{z} << (2 * N_));
}

std::array<Vertex, 3> TripleTensor::unpack(Key k) const {
  const Key m = (Key{1} << N_) - 1;
  return {static_cast<Vertex>(k & m), static_cast<Vertex>((k >> N_) & m),
          static_cast<Vertex>((k >> (2 * N_)) & m)};
}

void TripleTensor::add_key(Key k, const Rational& c) {
  if (sl4cube::is_zero(c)) return;
  auto [it, inserted] = terms_.try_emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (sl4cube::is_zero(it->second)) terms_.erase(it);
  }
}

void TripleTensor::add(Vertex x, Vertex y, Vertex z, const Rational& c) { add_key(key(x, y, z), c); }

Rational TripleTensor::coeff(Vertex x, Vertex y, Vertex z) const {
  const auto it = terms_.find(key(x, y, z));
  return it == terms_.end() ? Rational(0) : it->second;
}

TripleTensor& TripleTensor::operator+=(const TripleTensor& o) {
  if (o.N_ != N_) throw std::invalid_argument("TripleTensor: degree mismatch");
  for (const auto& [k, c] : o.terms_) add_key(k, c);
  return *this;
}

TripleTensor& TripleTensor::operator*=(const Rational& c) {
  if (sl4cube::is_zero(c)) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, v] : terms_) v *= c;
  return *this;
}

TripleTensor operator-(TripleTensor a, const TripleTensor& b) { return a += Rational(-1) * b; }

Rational inner(const TripleTensor& a, const TripleTensor& b) {
  const auto& small = a.terms().size() <= b.terms().size() ? a.terms() : b.terms();
  const auto& large = &small == &a.terms() ? b.terms() : a.terms();
  Rational s = 0;
  for (const auto& [k, c] : small) {
    const auto it = large.find(k);
    if (it != large.end()) s += c * it->second;
  }
  return s;
}

Profile profile_of(int N, Vertex x, Vertex y, Vertex z) {
  Profile p;
  for (int k = 0; k < N; ++k) {
    const Vertex bx = (x >> k) & 1, by = (y >> k) & 1, bz = (z >> k) & 1;
    if (bx == by && by == bz) ++p.r;
    else if (by == bz) ++p.s;
    else if (bz == bx) ++p.t;
    else ++p.u;
  }
  return p;
}

TripleTensor b_vector(int N, const Profile& p) {
  if (p.degree() != N || !p.valid()) throw std::invalid_argument("b_vector: profile");
  TripleTensor out(N);
  // Each coordinate picks a pattern class and a value for x; y and z follow.
  std::vector<int> pattern;
  for (int k = 0; k < 4; ++k) pattern.insert(pattern.end(), static_cast<std::size_t>(p[k]), k);
  do {
    for (Vertex x = 0; x < (Vertex{1} << N); ++x) {
      Vertex y = x, z = x;
      for (int k = 0; k < N; ++k) {
        const Vertex bit = Vertex{1} << k;
        switch (pattern[static_cast<std::size_t>(k)]) {
          case 1: y ^= bit; z ^= bit; break;  // x differs
          case 2: y ^= bit; break;            // y differs
          case 3: z ^= bit; break;            // z differs
          default: break;
        }
      }
      out.add(x, y, z, 1);
    }
  } while (std::next_permutation(pattern.begin(), pattern.end()));
  return out;
}

TripleTensor q_vector(const Hypercube& cube, const TripleIndex& t) {
  const int N = cube.N();
  const std::size_t n = cube.order();
  const auto& Eh = cube.idempotent_scaled(t.h);
  const auto& Ei = cube.idempotent_scaled(t.i);
  const auto& Ej = cube.idempotent_scaled(t.j);
  const Rational inv4n(1, Integer(1) << (2 * N));
  TripleTensor out(N);
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = 0; b < n; ++b)
      for (Vertex c = 0; c < n; ++c) {
        std::int64_t acc = 0;
        for (Vertex x = 0; x < n; ++x) acc += Eh[a * n + x] * Ei[b * n + x] * Ej[c * n + x];
        if (acc != 0) out.add(a, b, c, Rational(acc) * inv4n);
      }
  return out;
}

TripleTensor bstar_vector(const Hypercube& cube, const Profile& p) { return q_vector(cube, triple_of(p)); }

TripleTensor act_concrete(GeneratorId g, const TripleTensor& t) {
  const int N = t.N();
  TripleTensor out(N);
  for (const auto& [k, c] : t.terms()) {
    auto v = t.unpack(k);
    if (g.kind == Kind::A) {
      const int slot = g.index - 1;
      for (int b = 0; b < N; ++b) {
        auto w = v;
        w[static_cast<std::size_t>(slot)] ^= Vertex{1} << b;
        out.add(w[0], w[1], w[2], c);
      }
    } else {
      const auto [x, y, z] = v;
      const int d = g.index == 1 ? Hypercube::distance(y, z)
                  : g.index == 2 ? Hypercube::distance(z, x)
                                 : Hypercube::distance(x, y);
      out.add(x, y, z, c * theta(N, d));
    }
  }
  return out;
}

Vertex GroupElement::apply(Vertex x) const {
  Vertex y = 0;
  for (std::size_t k = 0; k < perm.size(); ++k)
    if ((x >> k) & 1) y |= Vertex{1} << perm[k];
  return y ^ mask;
}

TripleTensor act_group(const GroupElement& g, const TripleTensor& t) {
  TripleTensor out(t.N());
  for (const auto& [k, c] : t.terms()) {
    const auto [x, y, z] = t.unpack(k);
    out.add(g.apply(x), g.apply(y), g.apply(z), c);
  }
  return out;
}

std::vector<GroupElement> group_generators(int N) {
  std::vector<int> id(static_cast<std::size_t>(N));
  std::iota(id.begin(), id.end(), 0);
  std::vector<GroupElement> out;
  for (int k = 0; k + 1 < N; ++k) {
    GroupElement g{id, 0};
    std::swap(g.perm[static_cast<std::size_t>(k)], g.perm[static_cast<std::size_t>(k + 1)]);
    out.push_back(std::move(g));
  }
  if (N > 0) out.push_back({id, 1});
  return out;
}

std::vector<GroupElement> group_elements(int N) {
  std::vector<int> perm(static_cast<std::size_t>(N));
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<GroupElement> out;
  do {
    for (Vertex m = 0; m < (Vertex{1} << N); ++m) out.push_back({perm, m});
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

bool fix_membership(const TripleTensor& t) {
  for (const auto& g : group_generators(t.N()))
    if (!(act_group(g, t) == t)) return false;
  return true;
}

std::vector<std::size_t> triple_orbits(int N, bool enumerate) {
  const TripleTensor shape(N);
  const std::size_t total = std::size_t{1} << (3 * N);
  std::vector<std::size_t> parent(total);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  const auto elems = enumerate ? group_elements(N) : group_generators(N);
  for (std::size_t k = 0; k < total; ++k) {
    const auto [x, y, z] = shape.unpack(k);
    for (const auto& g : elems) {
      const std::size_t a = find(k), b = find(shape.key(g.apply(x), g.apply(y), g.apply(z)));
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }
  for (std::size_t k = 0; k < total; ++k) parent[k] = find(k);
  return parent;
}

FixVec FixVec::zero(FixBasis b, int N) { return {b, N, QVector(profile_count(N))}; }

FixVec FixVec::unit(FixBasis b, const Profile& p) {
  FixVec v = zero(b, p.degree());
  v.coords[profile_index(p)] = 1;
  return v;
}

namespace {

// Profile shifts of the A^(k) table on B~ (and of A*^(k) on B~*); the
// coefficient is the source exponent in the slot being decremented.
struct Shift {
  int from;
  std::array<int, 4> delta;
};

const std::array<std::array<Shift, 4>, 3> kShiftTable = {{
    {{{0, {-1, 1, 0, 0}}, {1, {1, -1, 0, 0}}, {2, {0, 0, -1, 1}}, {3, {0, 0, 1, -1}}}},
    {{{0, {-1, 0, 1, 0}}, {1, {0, -1, 0, 1}}, {2, {1, 0, -1, 0}}, {3, {0, 1, 0, -1}}}},
    {{{0, {-1, 0, 0, 1}}, {1, {0, -1, 1, 0}}, {2, {0, 1, -1, 0}}, {3, {1, 0, 0, -1}}}},
}};

int diagonal_eigenvalue(int k, const Profile& p) {
  switch (k) {
    case 1: return p.r + p.s - p.t - p.u;
    case 2: return p.r - p.s + p.t - p.u;
    default: return p.r - p.s - p.t + p.u;
  }
}

}  // namespace

FixVec act_abstract(GeneratorId g, const FixVec& v) {
  if (g.index < 1 || g.index > 3) throw std::out_of_range("act_abstract: index");
  const auto profiles = enumerate_profiles(v.N);
  FixVec out = FixVec::zero(v.basis, v.N);
  const bool shifts = (g.kind == Kind::A) == (v.basis == FixBasis::Btilde);
  for (std::size_t m = 0; m < profiles.size(); ++m) {
    const Rational& c = v.coords[m];
    if (is_zero(c)) continue;
    const Profile& p = profiles[m];
    if (!shifts) {
      out.coords[m] += c * diagonal_eigenvalue(g.index, p);
      continue;
    }
    for (const Shift& s : kShiftTable[static_cast<std::size_t>(g.index - 1)]) {
      if (p[s.from] == 0) continue;
      Profile q = p;
      for (int a = 0; a < 4; ++a) q[a] += s.delta[static_cast<std::size_t>(a)];
      out.coords[profile_index(q)] += c * p[s.from];
    }
  }
  return out;
}

Rational tilde_norm2(const Profile& p) {
  return profile_factorial(p) / (factorial(p.degree()) * Rational(Integer(1) << p.degree()));
}

TripleTensor lift(const Hypercube& cube, const FixVec& v) {
  if (cube.N() != v.N) throw std::invalid_argument("lift: degree mismatch");
  const auto profiles = enumerate_profiles(v.N);
  TripleTensor out(v.N);
  for (std::size_t m = 0; m < profiles.size(); ++m) {
    if (is_zero(v.coords[m])) continue;
    const TripleTensor b =
        v.basis == FixBasis::Btilde ? b_vector(v.N, profiles[m]) : bstar_vector(cube, profiles[m]);
    out += (v.coords[m] * tilde_norm2(profiles[m])) * b;
  }
  return out;
}

std::optional<FixVec> restrict_to_fix(const Hypercube& cube, const TripleTensor& t, FixBasis b) {
  const int N = t.N();
  const auto profiles = enumerate_profiles(N);
  FixVec v = FixVec::zero(b, N);
  for (std::size_t m = 0; m < profiles.size(); ++m) {
    const TripleTensor dual = b == FixBasis::Btilde ? b_vector(N, profiles[m]) : bstar_vector(cube, profiles[m]);
    v.coords[m] = inner(t, dual);
  }
  if (!(lift(cube, v) == t)) return std::nullopt;
  return v;
}

}  // namespace sl4cube
