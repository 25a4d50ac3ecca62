#pragma once

// Multiplicities in the induced module (a finite sum over Young diagrams D of
// products of stable Clebsch-Gordan coefficients), the mixed gl_N coefficient
// it is compared with, and the branching table of the irreducible module with
// highest weight Lambda(nu) and central charge -N.

#include "glinf/lr.hpp"
#include "glinf/partition.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace glinf {

class precondition_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// One diagram D and its product of coefficients.
struct DTerm {
  Partition diagram;
  std::int64_t contribution = 0;
};

struct DiagramSum {
  std::int64_t value = 0;
  std::vector<DTerm> terms;   // nonzero contributions only
};

namespace detail {

// sum over |D| = target_first - source_first of c^{target_first}_{source_first, D} c^{target_second}_{source_second, D}
inline DiagramSum diagram_sum(const Partition& source_first, const Partition& source_second,
                              const Partition& target_first, const Partition& target_second) {
  DiagramSum out;
  const int size = target_first.size() - source_first.size();
  if (size < 0 || size != target_second.size() - source_second.size()) return out;
  const int max_len = std::min(target_first.length(), target_second.length());
  for (const auto& d : partitions_of(size, max_len)) {
    std::int64_t a = lr_coefficient(source_first, d, target_first);
    if (!a) continue;
    std::int64_t b = lr_coefficient(source_second, d, target_second);
    if (!b) continue;
    out.value += a * b;
    out.terms.push_back({d, a * b});
  }
  return out;
}

}  // namespace detail

/// Multiplicity of L_nu1 (x) L_nu2 in Ind_chi: sum over D of C^{nu1}_{chi1, D_-} C^{nu2}_{chi2, D_+}.
inline std::int64_t induced_multiplicity(const SemidominantWeight& chi, const HalfInfiniteWeight& nu1,
                                         const HalfInfiniteWeight& nu2) {
  if (nu1.kind() != WeightKind::negative || nu2.kind() != WeightKind::positive)
    throw std::invalid_argument("induced_multiplicity: nu1 must be negative-type and nu2 positive-type");
  return detail::diagram_sum(weight_to_partition(chi.chi1), weight_to_partition(chi.chi2), weight_to_partition(nu1),
                             weight_to_partition(nu2))
      .value;
}

/// Left side of the reciprocity formula with its per-diagram contributions.
inline DiagramSum reciprocity_lhs(const FiniteWeight& nu, const HalfInfiniteWeight& lambda_minus,
                                  const HalfInfiniteWeight& mu_plus) {
  if (lambda_minus.kind() != WeightKind::negative || mu_plus.kind() != WeightKind::positive)
    throw std::invalid_argument("reciprocity_lhs: lambda must be negative-type and mu positive-type");
  auto [tail, head] = split_weight(nu);
  return detail::diagram_sum(weight_to_partition(tail), weight_to_partition(head), weight_to_partition(lambda_minus),
                             weight_to_partition(mu_plus));
}

/// Smallest rank at which every weight of the triple embeds without overlap.
inline int stable_rank(const FiniteWeight& nu, const HalfInfiniteWeight& lambda_minus,
                       const HalfInfiniteWeight& mu_plus) {
  return nu.nonzero_count() + lambda_minus.body().length() + mu_plus.body().length();
}

/// nu with its interior zeros adjusted so that it has rank N.
inline FiniteWeight pad_weight(const FiniteWeight& nu, int N) {
  auto [tail, head] = split_weight(nu);
  return mixed_weight(head.body(), tail.body(), N);
}

/// Right side: the gl_N coefficient C^nu_{lambda_-, mu_+} at rank N.
inline std::int64_t reciprocity_rhs(const FiniteWeight& nu, const HalfInfiniteWeight& lambda_minus,
                                    const HalfInfiniteWeight& mu_plus, int N) {
  return rational_tensor_coefficient(embed(lambda_minus, N), embed(mu_plus, N), pad_weight(nu, N), N);
}

struct ReciprocityReport {
  FiniteWeight nu;
  HalfInfiniteWeight lambda_minus;
  HalfInfiniteWeight mu_plus;
  std::int64_t lhs = 0;
  std::map<int, std::int64_t> rhs_by_N;
  bool stabilized = false;
  std::vector<DTerm> d_terms;

  bool holds() const {
    return stabilized && std::all_of(rhs_by_N.begin(), rhs_by_N.end(), [&](const auto& kv) { return kv.second == lhs; });
  }
};

inline ReciprocityReport reciprocity_check(const FiniteWeight& nu, const HalfInfiniteWeight& lambda_minus,
                                           const HalfInfiniteWeight& mu_plus, const std::vector<int>& N_list) {
  if (N_list.empty()) throw precondition_error("reciprocity_check: empty list of ranks");
  const int need = stable_rank(nu, lambda_minus, mu_plus);
  for (int N : N_list)
    if (N < need)
      throw precondition_error("reciprocity_check: rank " + std::to_string(N) + " below the stable bound " +
                               std::to_string(need));
  ReciprocityReport rep{nu, lambda_minus, mu_plus, 0, {}, false, {}};
  auto lhs = reciprocity_lhs(nu, lambda_minus, mu_plus);
  rep.lhs = lhs.value;
  rep.d_terms = std::move(lhs.terms);
  for (int N : N_list) rep.rhs_by_N[N] = reciprocity_rhs(nu, lambda_minus, mu_plus, N);
  rep.stabilized = std::all_of(rep.rhs_by_N.begin(), rep.rhs_by_N.end(),
                               [&](const auto& kv) { return kv.second == rep.rhs_by_N.begin()->second; });
  return rep;
}

/// Input of one reciprocity check.
struct Triple {
  FiniteWeight nu;
  HalfInfiniteWeight lambda_minus;
  HalfInfiniteWeight mu_plus;
};

/// Every triple whose four partitions (the two halves of nu, lambda_-, mu_+)
/// have size <= max_size and satisfy |mu_+| - |lambda_-| = sum(nu).
inline std::vector<Triple> reciprocity_grid(int max_size) {
  std::vector<Triple> out;
  const auto parts = partitions_up_to(max_size);
  for (const auto& head : parts)
    for (const auto& tail : parts) {
      FiniteWeight nu = mixed_weight(head, tail, head.length() + tail.length());
      for (const auto& a : parts)
        for (const auto& b : parts)
          if (b.size() - a.size() == head.size() - tail.size())
            out.push_back({nu, HalfInfiniteWeight::negative(a), HalfInfiniteWeight::positive(b)});
    }
  return out;
}

/// Seeded sample of triples with partition sizes <= max_size. Even-indexed
/// triples are built from a common diagram D, so their left side is nonzero;
/// odd-indexed ones are drawn uniformly subject to the size balance.
inline std::vector<Triple> random_triples(int count, std::uint64_t seed, int max_size) {
  if (count < 0 || max_size < 0) throw std::invalid_argument("random_triples: negative argument");
  std::mt19937_64 rng(seed);
  auto pick = [&](std::size_t n) { return static_cast<std::size_t>(rng() % n); };
  const auto parts = partitions_up_to(max_size);
  std::vector<Triple> out;
  while (static_cast<int>(out.size()) < count) {
    const Partition& head = parts[pick(parts.size())];
    const Partition& tail = parts[pick(parts.size())];
    FiniteWeight nu = mixed_weight(head, tail, head.length() + tail.length());
    if (out.size() % 2 == 0) {
      const int room = max_size - std::max(head.size(), tail.size());
      if (room < 0) continue;
      const auto ds = partitions_up_to(room);
      const Partition& d = ds[pick(ds.size())];
      auto first = tensor_decompose(tail, d);
      auto second = tensor_decompose(head, d);
      std::vector<Partition> as, bs;
      for (const auto& [p, m] : first) as.push_back(p);
      for (const auto& [p, m] : second) bs.push_back(p);
      out.push_back({nu, HalfInfiniteWeight::negative(as[pick(as.size())]),
                     HalfInfiniteWeight::positive(bs[pick(bs.size())])});
    } else {
      const Partition& a = parts[pick(parts.size())];
      const int b_size = a.size() + head.size() - tail.size();
      if (b_size < 0 || b_size > max_size) continue;
      const auto bs = partitions_of(b_size);
      out.push_back({nu, HalfInfiniteWeight::negative(a), HalfInfiniteWeight::positive(bs[pick(bs.size())])});
    }
  }
  return out;
}

/// Three consecutive ranks starting at the stable bound.
inline std::vector<int> default_ranks(const Triple& t, int how_many = 3) {
  std::vector<int> out;
  const int base = std::max(1, stable_rank(t.nu, t.lambda_minus, t.mu_plus));
  for (int i = 0; i < how_many; ++i) out.push_back(base + i);
  return out;
}

/// Pair of gl_N weights (lambda in H_N^-, mu in H_N^+).
using WeightPair = std::pair<FiniteWeight, FiniteWeight>;

/// Branching of L(Lambda(nu), -N) into L_-(lambda) (x) L_+(mu): all pairs with
/// partition sizes <= size_bound and nonzero C^nu_{lambda, mu}.
inline DecompositionTable<WeightPair> kac_radul_table(const FiniteWeight& nu, int N, int size_bound) {
  if (nu.rank() != N) throw std::invalid_argument("kac_radul_table: nu must have rank N");
  if (!nu.is_dominant()) throw std::invalid_argument("kac_radul_table: nu must be dominant");
  if (size_bound < 0) throw std::invalid_argument("kac_radul_table: negative size bound");
  DecompositionTable<WeightPair> table;
  const auto candidates = partitions_up_to(size_bound, N);
  for (const auto& a : candidates) {
    FiniteWeight lambda = embed(HalfInfiniteWeight::negative(a), N);
    for (const auto& b : candidates) {
      if (b.size() - a.size() != nu.sum()) continue;
      FiniteWeight mu = embed(HalfInfiniteWeight::positive(b), N);
      table.add({lambda, mu}, rational_tensor_coefficient(lambda, mu, nu, N));
    }
  }
  return table;
}

using HalfWeightPair = std::pair<HalfInfiniteWeight, HalfInfiniteWeight>;

/// Decomposition of Ind_chi into L_nu1 (x) L_nu2, aggregated diagram by diagram
/// from the two tensor products (L_chi1 (x) L_D) and (L_chi2 (x) L_D); only
/// diagrams with |D| <= diagram_bound.
inline DecompositionTable<HalfWeightPair> induced_decomposition(const SemidominantWeight& chi, int diagram_bound) {
  DecompositionTable<HalfWeightPair> table;
  for (const auto& d : partitions_up_to(diagram_bound)) {
    auto first = tensor_decompose(weight_to_partition(chi.chi1), d);
    auto second = tensor_decompose(weight_to_partition(chi.chi2), d);
    for (const auto& [a, ma] : first)
      for (const auto& [b, mb] : second)
        table.add({HalfInfiniteWeight::negative(a), HalfInfiniteWeight::positive(b)}, ma * mb);
  }
  return table;
}

}  // namespace glinf
