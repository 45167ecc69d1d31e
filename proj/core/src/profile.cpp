#include "sl4cube/profile.hpp"

#include <stdexcept>

namespace sl4cube {

std::string to_string(const Profile& p) {
  return "(" + std::to_string(p.r) + "," + std::to_string(p.s) + "," + std::to_string(p.t) + "," +
         std::to_string(p.u) + ")";
}

std::string to_string(const TripleIndex& t) {
  return "(" + std::to_string(t.h) + "," + std::to_string(t.i) + "," + std::to_string(t.j) + ")";
}

Rational profile_factorial(const Profile& p) {
  return factorial(p.r) * factorial(p.s) * factorial(p.t) * factorial(p.u);
}

std::vector<Profile> enumerate_profiles(int N) {
  std::vector<Profile> out;
  if (N < 0) return out;
  for (int r = 0; r <= N; ++r)
    for (int s = 0; s <= N - r; ++s)
      for (int t = 0; t <= N - r - s; ++t) out.push_back({r, s, t, N - r - s - t});
  return out;
}

std::size_t profile_count(int N) {
  if (N < 0) return 0;
  const std::size_t n = static_cast<std::size_t>(N);
  return (n + 1) * (n + 2) * (n + 3) / 6;
}

std::size_t profile_index(const Profile& p) {
  if (!p.valid()) throw std::invalid_argument("profile_index: negative component");
  const int N = p.degree();
  // Profiles with first component < r, then second < s at fixed r, and so on.
  std::size_t idx = 0;
  for (int r = 0; r < p.r; ++r) {
    const std::size_t m = static_cast<std::size_t>(N - r);
    idx += (m + 1) * (m + 2) / 2;
  }
  for (int s = 0; s < p.s; ++s) idx += static_cast<std::size_t>(N - p.r - s + 1);
  idx += static_cast<std::size_t>(p.t);
  return idx;
}

WeightTriple weight_of(const Profile& p) {
  return {p.r + p.s - p.t - p.u, p.r - p.s + p.t - p.u, p.r - p.s - p.t + p.u};
}

bool in_weight_set(int N, const WeightTriple& w) {
  if (N < 0) return false;
  for (int v : {w.lambda, w.mu, w.nu})
    if (v < -N || v > N || (N - v) % 2 != 0) return false;
  if ((N + w.lambda + w.mu + w.nu) % 4 != 0) return false;
  return N + w.lambda + w.mu + w.nu >= 0 && N + w.lambda - w.mu - w.nu >= 0 &&
         N - w.lambda + w.mu - w.nu >= 0 && N - w.lambda - w.mu + w.nu >= 0;
}

std::optional<Profile> profile_of_weight(int N, const WeightTriple& w) {
  if (!in_weight_set(N, w)) return std::nullopt;
  return Profile{(N + w.lambda + w.mu + w.nu) / 4, (N + w.lambda - w.mu - w.nu) / 4,
                 (N - w.lambda + w.mu - w.nu) / 4, (N - w.lambda - w.mu + w.nu) / 4};
}

bool in_triple_set(int N, const TripleIndex& t) {
  const int h = t.h, i = t.i, j = t.j;
  if (h < 0 || i < 0 || j < 0 || h > N || i > N || j > N) return false;
  if ((h + i + j) % 2 != 0 || h + i + j > 2 * N) return false;
  return h <= i + j && i <= j + h && j <= h + i;
}

std::vector<TripleIndex> enumerate_triples(int N) {
  std::vector<TripleIndex> out;
  for (int h = 0; h <= N; ++h)
    for (int i = 0; i <= N; ++i)
      for (int j = 0; j <= N; ++j)
        if (in_triple_set(N, {h, i, j})) out.push_back({h, i, j});
  return out;
}

TripleIndex triple_of(const Profile& p) { return {p.t + p.u, p.u + p.s, p.s + p.t}; }

std::optional<Profile> profile_of_triple(int N, const TripleIndex& t) {
  if (!in_triple_set(N, t)) return std::nullopt;
  return Profile{(2 * N - t.h - t.i - t.j) / 2, (t.i + t.j - t.h) / 2, (t.j + t.h - t.i) / 2,
                 (t.h + t.i - t.j) / 2};
}

}  // namespace sl4cube
