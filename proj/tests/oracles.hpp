#pragma once

// Reference computations used only by the tests. None of them calls the
// library's LR rule, SSYT enumeration or kernel code.

#include "glinf/partition.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <vector>

namespace oracle {

/// Weyl dimension formula for the gl_N irreducible with highest weight lambda.
inline std::int64_t weyl_dimension(const std::vector<int>& lambda, int N) {
  std::vector<int> l(lambda);
  l.resize(static_cast<std::size_t>(N), 0);
  std::int64_t inum = 1, iden = 1;
  for (int i = 0; i < N; ++i)
    for (int j = i + 1; j < N; ++j) {
      inum *= l[static_cast<std::size_t>(i)] - l[static_cast<std::size_t>(j)] + j - i;
      iden *= j - i;
      const std::int64_t g = std::gcd(inum, iden);
      inum /= g;
      iden /= g;
    }
  return inum / iden;
}

inline std::int64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::int64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

/// Number of (l_1..l_n) >= 0 with sum k * l_k = d, by direct recursion on k.
inline std::int64_t weighted_compositions(int n, int d) {
  if (n == 0) return d == 0 ? 1 : 0;
  std::int64_t total = 0;
  for (int l = 0; n * l <= d; ++l) total += weighted_compositions(n - 1, d - n * l);
  return total;
}

/// Weights (with multiplicity) of the gl_N irreducible with dominant highest
/// weight mu, from semistandard tableaux of mu shifted to a partition.
inline std::map<std::vector<int>, std::int64_t> weight_multiset(const std::vector<int>& mu, int N) {
  const int shift = std::max(0, -*std::min_element(mu.begin(), mu.end()));
  std::vector<int> shape;
  for (int v : mu) shape.push_back(v + shift);
  while (!shape.empty() && shape.back() == 0) shape.pop_back();

  std::map<std::vector<int>, std::int64_t> out;
  std::vector<std::vector<int>> tab;
  for (int r : shape) tab.emplace_back(static_cast<std::size_t>(r), 0);
  std::vector<std::pair<std::size_t, std::size_t>> cells;
  for (std::size_t r = 0; r < shape.size(); ++r)
    for (std::size_t c = 0; c < tab[r].size(); ++c) cells.emplace_back(r, c);
  auto rec = [&](auto&& self, std::size_t idx) -> void {
    if (idx == cells.size()) {
      std::vector<int> w(static_cast<std::size_t>(N), -shift);
      for (const auto& row : tab)
        for (int v : row) ++w[static_cast<std::size_t>(v - 1)];
      ++out[w];
      return;
    }
    auto [r, c] = cells[idx];
    int lo = 1;
    if (c > 0) lo = std::max(lo, tab[r][c - 1]);
    if (r > 0) lo = std::max(lo, tab[r - 1][c] + 1);
    for (int v = lo; v <= N; ++v) {
      tab[r][c] = v;
      self(self, idx + 1);
    }
  };
  if (static_cast<int>(shape.size()) <= N) rec(rec, 0);
  return out;
}

/// Brauer-Klimyk (Racah-Speiser) evaluation of the multiplicity of nu in
/// lambda (x) mu for dominant gl_N weights: reflect lambda + kappa + rho into
/// the dominant chamber for every weight kappa of the mu-module.
inline std::int64_t brauer_klimyk(const std::vector<int>& lambda, const std::vector<int>& mu,
                                  const std::vector<int>& nu, int N) {
  std::int64_t total = 0;
  for (const auto& [kappa, mult] : weight_multiset(mu, N)) {
    std::vector<int> v(static_cast<std::size_t>(N));
    for (int i = 0; i < N; ++i)
      v[static_cast<std::size_t>(i)] = lambda[static_cast<std::size_t>(i)] + kappa[static_cast<std::size_t>(i)] + (N - 1 - i);
    // Sort descending by adjacent swaps, tracking the sign.
    int sign = 1;
    bool degenerate = false;
    for (int i = 0; i < N && !degenerate; ++i)
      for (int j = 0; j + 1 < N - i; ++j) {
        if (v[static_cast<std::size_t>(j)] == v[static_cast<std::size_t>(j) + 1]) degenerate = true;
        if (v[static_cast<std::size_t>(j)] < v[static_cast<std::size_t>(j) + 1]) {
          std::swap(v[static_cast<std::size_t>(j)], v[static_cast<std::size_t>(j) + 1]);
          sign = -sign;
        }
      }
    for (int j = 0; j + 1 < N; ++j)
      if (v[static_cast<std::size_t>(j)] == v[static_cast<std::size_t>(j) + 1]) degenerate = true;
    if (degenerate) continue;
    bool match = true;
    for (int i = 0; i < N; ++i)
      if (v[static_cast<std::size_t>(i)] - (N - 1 - i) != nu[static_cast<std::size_t>(i)]) match = false;
    if (match) total += sign * mult;
  }
  return total;
}

inline std::vector<int> padded(const glinf::Partition& p, int N) {
  std::vector<int> out(p.rows());
  out.resize(static_cast<std::size_t>(N), 0);
  return out;
}

/// LR coefficient of partitions through Brauer-Klimyk in N = |lambda| + |mu| variables.
inline std::int64_t lr_by_weights(const glinf::Partition& lambda, const glinf::Partition& mu, const glinf::Partition& nu) {
  if (nu.size() != lambda.size() + mu.size()) return 0;
  const int N = std::max({1, lambda.length() + mu.length(), nu.length()});
  return brauer_klimyk(padded(lambda, N), padded(mu, N), padded(nu, N), N);
}

}  // namespace oracle
