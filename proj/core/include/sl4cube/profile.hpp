#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "sl4cube/rational.hpp"

namespace sl4cube {

// Exponent vector (r,s,t,u) of x^r y^s z^t w^u; also the agreement pattern
// of a vertex triple.
struct Profile {
  int r = 0, s = 0, t = 0, u = 0;

  int degree() const { return r + s + t + u; }
  int operator[](int k) const { return k == 0 ? r : k == 1 ? s : k == 2 ? t : u; }
  int& operator[](int k) { return k == 0 ? r : k == 1 ? s : k == 2 ? t : u; }
  bool valid() const { return r >= 0 && s >= 0 && t >= 0 && u >= 0; }

  friend auto operator<=>(const Profile&, const Profile&) = default;
};

std::string to_string(const Profile& p);

// r! s! t! u!
Rational profile_factorial(const Profile& p);

// Lexicographic order in (r,s,t,u); length C(N+3,3).
std::vector<Profile> enumerate_profiles(int N);

std::size_t profile_count(int N);

// Position of p inside enumerate_profiles(p.degree()).
std::size_t profile_index(const Profile& p);

struct WeightTriple {
  int lambda = 0, mu = 0, nu = 0;
  friend auto operator<=>(const WeightTriple&, const WeightTriple&) = default;
};

WeightTriple weight_of(const Profile& p);
bool in_weight_set(int N, const WeightTriple& w);
std::optional<Profile> profile_of_weight(int N, const WeightTriple& w);

struct TripleIndex {
  int h = 0, i = 0, j = 0;
  friend auto operator<=>(const TripleIndex&, const TripleIndex&) = default;
};

std::string to_string(const TripleIndex& t);

// 0 <= h,i,j <= N, h+i+j even and <= 2N, triangle inequalities.
bool in_triple_set(int N, const TripleIndex& t);
std::vector<TripleIndex> enumerate_triples(int N);

// (r,s,t,u) -> (t+u, u+s, s+t) and back.
TripleIndex triple_of(const Profile& p);
std::optional<Profile> profile_of_triple(int N, const TripleIndex& t);

}  // namespace sl4cube
