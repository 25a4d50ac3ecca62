#pragma once

// Clebsch-Gordan (Littlewood-Richardson) multiplicities by the tableau rule,
// Schur polynomials with a Schur-basis decomposition used as an independent
// check, and the gl_N coefficient for mixed (rational) weights.

#include "glinf/partition.hpp"
#include "glinf/sparse_poly.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <optional>
#include <shared_mutex>
#include <stdexcept>
#include <tuple>
#include <utility>
#include <vector>

namespace glinf {

/// Finite multiset of keys with nonzero integer multiplicities.
template <class Key>
class DecompositionTable {
 public:
  using Map = std::map<Key, std::int64_t>;

  void add(const Key& key, std::int64_t mult) {
    if (mult == 0) return;
    auto [it, inserted] = entries_.try_emplace(key, mult);
    if (!inserted) {
      it->second += mult;
      if (it->second == 0) entries_.erase(it);
    }
  }

  std::int64_t at(const Key& key) const {
    auto it = entries_.find(key);
    return it == entries_.end() ? 0 : it->second;
  }

  const Map& entries() const noexcept { return entries_; }
  std::size_t size() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty(); }
  std::int64_t total() const noexcept {
    std::int64_t s = 0;
    for (const auto& [k, m] : entries_) s += m;
    return s;
  }

  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }

  friend bool operator==(const DecompositionTable&, const DecompositionTable&) = default;

 private:
  Map entries_;
};

/// Filling of the skew shape outer/inner; filling[r] covers columns inner[r]..outer[r]-1.
struct SkewTableau {
  Partition outer;
  Partition inner;
  std::vector<std::vector<int>> filling;

  int at(int row, int col) const {
    return filling.at(static_cast<std::size_t>(row)).at(static_cast<std::size_t>(col - inner[static_cast<std::size_t>(row)]));
  }

  bool is_semistandard() const {
    for (int r = 0; r < outer.length(); ++r) {
      for (int c = inner[r]; c < outer[r]; ++c) {
        if (c + 1 < outer[r] && at(r, c) > at(r, c + 1)) return false;
        if (r > 0 && c >= inner[r - 1] && at(r - 1, c) >= at(r, c)) return false;
      }
    }
    return true;
  }

  /// Reading word right-to-left, top-to-bottom.
  std::vector<int> reading_word() const {
    std::vector<int> word;
    for (const auto& row : filling)
      for (auto it = row.rbegin(); it != row.rend(); ++it) word.push_back(*it);
    return word;
  }

  bool is_lattice() const {
    std::vector<int> count;
    for (int v : reading_word()) {
      if (v < 1) return false;
      if (static_cast<int>(count.size()) < v + 1) count.resize(static_cast<std::size_t>(v) + 1, 0);
      ++count[static_cast<std::size_t>(v)];
      if (v > 1 && count[static_cast<std::size_t>(v)] > count[static_cast<std::size_t>(v - 1)]) return false;
    }
    return true;
  }

  std::vector<int> content() const {
    std::vector<int> count;
    for (const auto& row : filling)
      for (int v : row) {
        if (static_cast<int>(count.size()) < v) count.resize(static_cast<std::size_t>(v), 0);
        ++count[static_cast<std::size_t>(v - 1)];
      }
    return count;
  }
};

namespace detail {

// Backtracking over LR fillings of nu/lambda with content mu, cells visited in
// reading order. `emit` is called on every complete filling.
class LrFiller {
 public:
  LrFiller(const Partition& lambda, const Partition& mu, const Partition& nu)
      : lambda_(lambda), mu_(mu), nu_(nu), count_(static_cast<std::size_t>(mu.length()) + 1, 0) {
    for (int r = 0; r < nu.length(); ++r) {
      rows_.emplace_back(static_cast<std::size_t>(nu[r] - lambda[r]), 0);
      for (int c = nu[r] - 1; c >= lambda[r]; --c) cells_.emplace_back(r, c);
    }
  }

  template <class Emit>
  void run(Emit&& emit) {
    step(0, emit);
  }

  std::vector<std::vector<int>> filling() const { return rows_; }

 private:
  int& cell(int r, int c) { return rows_[static_cast<std::size_t>(r)][static_cast<std::size_t>(c - lambda_[r])]; }

  template <class Emit>
  void step(std::size_t idx, Emit& emit) {
    if (idx == cells_.size()) {
      emit(*this);
      return;
    }
    auto [r, c] = cells_[idx];
    int hi = mu_.length();
    if (c + 1 < nu_[r]) hi = std::min(hi, cell(r, c + 1));
    hi = std::min(hi, r + 1);
    int lo = 1;
    if (r > 0 && c >= lambda_[r - 1]) lo = cell(r - 1, c) + 1;
    for (int v = lo; v <= hi; ++v) {
      auto vi = static_cast<std::size_t>(v);
      if (count_[vi] + 1 > mu_[vi - 1]) continue;
      if (v > 1 && count_[vi] + 1 > count_[vi - 1]) continue;
      ++count_[vi];
      cell(r, c) = v;
      step(idx + 1, emit);
      --count_[vi];
    }
  }

  const Partition& lambda_;
  const Partition& mu_;
  const Partition& nu_;
  std::vector<int> count_;
  std::vector<std::vector<int>> rows_;
  std::vector<std::pair<int, int>> cells_;
};

inline bool lr_shape_admissible(const Partition& lambda, const Partition& mu, const Partition& nu) {
  return nu.size() == lambda.size() + mu.size() && nu.contains(lambda) && nu.contains(mu);
}

inline std::int64_t lr_count_uncached(const Partition& lambda, const Partition& mu, const Partition& nu) {
  if (!lr_shape_admissible(lambda, mu, nu)) return 0;
  std::int64_t n = 0;
  LrFiller filler(lambda, mu, nu);
  filler.run([&](const LrFiller&) { ++n; });
  return n;
}

class LrCache {
 public:
  using Key = std::tuple<Partition, Partition, Partition>;

  std::optional<std::int64_t> find(const Key& key) const {
    std::shared_lock lock(mutex_);
    auto it = values_.find(key);
    if (it == values_.end()) return std::nullopt;
    return it->second;
  }

  void store(Key key, std::int64_t value) {
    std::unique_lock lock(mutex_);
    values_.emplace(std::move(key), value);
  }

  std::size_t size() const {
    std::shared_lock lock(mutex_);
    return values_.size();
  }

  void clear() {
    std::unique_lock lock(mutex_);
    values_.clear();
  }

 private:
  mutable std::shared_mutex mutex_;
  std::map<Key, std::int64_t> values_;
};

inline LrCache& lr_cache() {
  static LrCache cache;
  return cache;
}

}  // namespace detail

/// All LR tableaux of shape nu/lambda with content mu.
inline std::vector<SkewTableau> lr_tableaux(const Partition& lambda, const Partition& mu, const Partition& nu) {
  std::vector<SkewTableau> out;
  if (!detail::lr_shape_admissible(lambda, mu, nu)) return out;
  detail::LrFiller filler(lambda, mu, nu);
  filler.run([&](const detail::LrFiller& f) { out.push_back({nu, lambda, f.filling()}); });
  return out;
}

/// c^nu_{lambda mu}: the number of LR tableaux of shape nu/lambda and content mu.
/// Memoized in a process-wide cache that is safe for concurrent use.
inline std::int64_t lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu) {
  if (!detail::lr_shape_admissible(lambda, mu, nu)) return 0;
  if (lambda.empty()) return mu == nu ? 1 : 0;
  if (mu.empty()) return lambda == nu ? 1 : 0;
  detail::LrCache::Key key{lambda, mu, nu};
  auto& cache = detail::lr_cache();
  if (auto hit = cache.find(key)) return *hit;
  std::int64_t value = detail::lr_count_uncached(lambda, mu, nu);
  cache.store(std::move(key), value);
  return value;
}

/// Decomposition of V_lambda (x) V_mu; with `row_bound`, only constituents
/// with at most that many rows (the gl_N truncation).
inline DecompositionTable<Partition> tensor_decompose(const Partition& lambda, const Partition& mu,
                                                      std::optional<int> row_bound = std::nullopt) {
  DecompositionTable<Partition> table;
  int max_len = lambda.length() + mu.length();
  if (row_bound) {
    if (*row_bound < 1) throw std::invalid_argument("tensor_decompose: row bound must be positive");
    max_len = std::min(max_len, *row_bound);
  }
  for (const auto& nu : partitions_of(lambda.size() + mu.size(), max_len))
    table.add(nu, lr_coefficient(lambda, mu, nu));
  return table;
}

/// Visits every semistandard tableau of shape lambda with entries in 1..N,
/// passing the row-indexed filling.
template <class Visit>
void for_each_ssyt(const Partition& lambda, int N, Visit&& visit) {
  if (lambda.length() > N) return;
  std::vector<std::vector<int>> rows;
  for (int r : lambda.rows()) rows.emplace_back(static_cast<std::size_t>(r), 0);
  const Partition cols = lambda.conjugate();
  std::vector<std::pair<int, int>> cells;
  for (int r = 0; r < lambda.length(); ++r)
    for (int c = 0; c < lambda[r]; ++c) cells.emplace_back(r, c);
  auto rec = [&](auto&& self, std::size_t idx) -> void {
    if (idx == cells.size()) {
      visit(static_cast<const std::vector<std::vector<int>>&>(rows));
      return;
    }
    auto [r, c] = cells[idx];
    int lo = 1;
    if (c > 0) lo = rows[r][c - 1];
    if (r > 0) lo = std::max(lo, rows[r - 1][c] + 1);
    // Column strictness leaves room for the rows still below.
    int hi = N - (cols[static_cast<std::size_t>(c)] - 1 - r);
    for (int v = lo; v <= hi; ++v) {
      rows[r][c] = v;
      self(self, idx + 1);
    }
  };
  rec(rec, 0);
}

/// Number of semistandard tableaux of shape lambda with entries <= N (= dim of the gl_N irreducible).
inline std::int64_t count_ssyt(const Partition& lambda, int N) {
  std::int64_t n = 0;
  for_each_ssyt(lambda, N, [&](const auto&) { ++n; });
  return n;
}

/// Schur polynomial s_lambda(x_1..x_N) as a sum over semistandard tableaux.
inline SparsePoly schur_poly(const Partition& lambda, int N) {
  if (N < 1) throw std::invalid_argument("schur_poly: N must be positive");
  SparsePoly p;
  Exponent e;
  for_each_ssyt(lambda, N, [&](const std::vector<std::vector<int>>& rows) {
    e.assign(static_cast<std::size_t>(N), 0);
    for (const auto& row : rows)
      for (int v : row) ++e[static_cast<std::size_t>(v - 1)];
    p.add_term(e, 1);
  });
  return p;
}

/// True when the exponent (padded to N variables) is weakly decreasing.
inline bool is_dominant_exponent(const Exponent& e) {
  return std::is_sorted(e.begin(), e.end(), std::greater<>{});
}

namespace detail {

inline std::int64_t orbit_size(Exponent e, std::size_t N) {
  e = padded(std::move(e), N);
  std::sort(e.begin(), e.end());
  // multinomial N! / prod(mult!)
  std::int64_t result = 1;
  std::size_t run = 0, placed = 0;
  for (std::size_t i = 0; i < e.size(); ++i) {
    run = (i > 0 && e[i] == e[i - 1]) ? run + 1 : 1;
    ++placed;
    result = checked_mul(result, static_cast<std::int64_t>(placed));
    result /= static_cast<std::int64_t>(run);
  }
  return result;
}

}  // namespace detail

/// Orbit-sum symmetry check in N variables: every term's sorted exponent
/// carries the same coefficient and every orbit is complete.
inline bool is_symmetric(const SparsePoly& p, int N) {
  if (static_cast<int>(p.variable_count()) > N) return false;
  std::int64_t expected_terms = 0;
  for (const auto& [e, c] : p.terms()) {
    Exponent sorted = padded(e, static_cast<std::size_t>(N));
    std::sort(sorted.begin(), sorted.end(), std::greater<>{});
    if (p.coefficient(sorted) != c) return false;
    if (is_dominant_exponent(padded(e, static_cast<std::size_t>(N))))
      expected_terms += detail::orbit_size(e, static_cast<std::size_t>(N));
  }
  return expected_terms == static_cast<std::int64_t>(p.term_count());
}

/// Number of semistandard tableaux of shape nu and content kappa, by
/// stripping the horizontal strip of the largest letter.
class KostkaTable {
 public:
  std::int64_t operator()(const Partition& nu, std::vector<int> kappa) {
    while (!kappa.empty() && kappa.back() == 0) kappa.pop_back();
    int total = 0;
    for (int k : kappa) total += k;
    if (total != nu.size()) return 0;
    if (kappa.empty()) return 1;
    if (nu.length() > static_cast<int>(kappa.size())) return 0;
    auto key = std::make_pair(nu, kappa);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    const int strip = kappa.back();
    kappa.pop_back();
    std::int64_t sum = 0;
    std::vector<int> rho(nu.rows());
    auto rec = [&](auto&& self, std::size_t row, int remaining) -> void {
      if (row == rho.size()) {
        if (remaining == 0) sum += (*this)(Partition(rho), kappa);
        return;
      }
      const int hi = nu[static_cast<int>(row)];
      const int lo = row + 1 < rho.size() ? nu[static_cast<int>(row) + 1] : 0;
      for (int r = hi; r >= lo && hi - r <= remaining; --r) {
        rho[row] = r;
        self(self, row + 1, remaining - (hi - r));
      }
      rho[row] = hi;
    };
    rec(rec, 0, strip);
    memo_.emplace(std::move(key), sum);
    return sum;
  }

 private:
  std::map<std::pair<Partition, std::vector<int>>, std::int64_t> memo_;
};

/// Expansion of a symmetric polynomial in N variables in the Schur basis, by
/// repeatedly cancelling the lexicographically leading term (always dominant).
/// Only dominant monomials are tracked; the coefficient of a dominant kappa in
/// s_nu is the Kostka number K_{nu, kappa}.
inline DecompositionTable<Partition> decompose_symmetric(const SparsePoly& p, int N) {
  if (!is_symmetric(p, N)) throw std::invalid_argument("decompose_symmetric: polynomial is not symmetric");
  std::map<Partition, std::int64_t> dominant;
  for (const auto& [e, c] : p.terms()) {
    const Exponent full = padded(e, static_cast<std::size_t>(N));
    if (is_dominant_exponent(full)) dominant.emplace(Partition(std::vector<int>(full.begin(), full.end())), c);
  }
  KostkaTable kostka;
  DecompositionTable<Partition> table;
  while (!dominant.empty()) {
    const auto [nu, c] = *dominant.rbegin();
    table.add(nu, c);
    for (const auto& kappa : partitions_of(nu.size(), N)) {
      const std::int64_t k = kostka(nu, kappa.rows());
      if (!k) continue;
      auto& slot = dominant[kappa];
      slot = detail::checked_add(slot, -detail::checked_mul(c, k));
      if (slot == 0) dominant.erase(kappa);
    }
  }
  return table;
}

/// Multiplicity of the gl_N irreducible nu in lambda (x) mu for dominant
/// integral weights with possibly negative entries. Each weight is shifted by
/// a multiple of (1,..,1) into a partition and the LR rule is applied; the
/// determinant twist makes the shift immaterial.
inline std::int64_t rational_tensor_coefficient(const FiniteWeight& lambda, const FiniteWeight& mu,
                                                const FiniteWeight& nu, int N) {
  if (N < 1) throw std::invalid_argument("rational_tensor_coefficient: N must be positive");
  if (lambda.rank() != N || mu.rank() != N || nu.rank() != N)
    throw std::invalid_argument("rational_tensor_coefficient: weights must have rank N");
  if (!lambda.is_dominant() || !mu.is_dominant() || !nu.is_dominant())
    throw std::invalid_argument("rational_tensor_coefficient: weights must be dominant");
  if (nu.sum() != lambda.sum() + mu.sum()) return 0;
  auto min_of = [](const FiniteWeight& w) { return w.entries().back(); };
  const int k = std::max(0, -min_of(lambda));
  const int m = std::max(0, -min_of(mu));
  FiniteWeight nu_shift = nu.shifted(k + m);
  if (min_of(nu_shift) < 0) return 0;
  return lr_coefficient(Partition(lambda.shifted(k).entries()), Partition(mu.shifted(m).entries()),
                        Partition(nu_shift.entries()));
}

}  // namespace glinf
