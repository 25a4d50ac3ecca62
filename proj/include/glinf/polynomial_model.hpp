#pragma once

// The symmetric algebra S*(a_-) of the lower-left block of gl_{2n} as a
// polynomial ring in y_ij = E_{n+i, n-j+1} (i, j = 1..n), with the adjoint
// action of gl_n^(1) + gl_n^(2) by derivations. Every derivation formula is
// obtained from the matrix-unit bracket in gl_{2n}.

#include "glinf/linalg.hpp"
#include "glinf/lr.hpp"
#include "glinf/partition.hpp"
#include "glinf/sparse_poly.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace glinf::poly {

/// Matrix unit E_{row,col} of gl_{2n}, 1-based.
struct MatrixUnit {
  int row = 0;
  int col = 0;
  friend auto operator<=>(const MatrixUnit&, const MatrixUnit&) = default;
};

/// Coordinates of a_- for rank n. Variable (i, j) has index (i-1)*n + (j-1).
class VariableGrid {
 public:
  explicit VariableGrid(int n) : n_(n) {
    if (n < 1) throw std::invalid_argument("VariableGrid: rank must be positive");
  }

  int rank() const noexcept { return n_; }
  std::size_t variable_count() const noexcept { return static_cast<std::size_t>(n_ * n_); }

  std::size_t index(int i, int j) const {
    if (i < 1 || i > n_ || j < 1 || j > n_) throw std::out_of_range("y index out of range");
    return static_cast<std::size_t>((i - 1) * n_ + (j - 1));
  }
  std::pair<int, int> coords(std::size_t idx) const {
    return {static_cast<int>(idx) / n_ + 1, static_cast<int>(idx) % n_ + 1};
  }

  MatrixUnit unit(int i, int j) const { return {n_ + i, n_ - j + 1}; }
  std::optional<std::size_t> index_of(MatrixUnit u) const {
    if (u.row <= n_ || u.row > 2 * n_ || u.col < 1 || u.col > n_) return std::nullopt;
    return index(u.row - n_, n_ - u.col + 1);
  }

  SparsePoly y(int i, int j) const { return SparsePoly::variable(index(i, j)); }

  std::string name(std::size_t idx) const {
    auto [i, j] = coords(idx);
    return "y" + std::to_string(i) + std::to_string(j);
  }

  /// Polynomial-degree and Cartan weight (E_11..E_{2n,2n}) of a monomial.
  std::vector<int> weight(const Exponent& e) const {
    std::vector<int> w(static_cast<std::size_t>(2 * n_), 0);
    for (std::size_t idx = 0; idx < e.size(); ++idx) {
      if (!e[idx]) continue;
      auto [i, j] = coords(idx);
      MatrixUnit u = unit(i, j);
      w[static_cast<std::size_t>(u.row - 1)] += e[idx];
      w[static_cast<std::size_t>(u.col - 1)] -= e[idx];
    }
    return w;
  }

 private:
  int n_;
};

/// [E_ab, E_cd] = delta_bc E_ad - delta_da E_cb, as (unit, coefficient) pairs.
inline std::vector<std::pair<MatrixUnit, int>> matrix_bracket(MatrixUnit x, MatrixUnit y) {
  std::vector<std::pair<MatrixUnit, int>> out;
  if (x.col == y.row) out.push_back({{x.row, y.col}, 1});
  if (y.col == x.row) out.push_back({{y.row, x.col}, -1});
  if (out.size() == 2 && out[0].first == out[1].first) out.clear();
  return out;
}

/// True when E_ab lies in gl_n^(1) + gl_n^(2).
inline bool in_block_diagonal(MatrixUnit g, int n) {
  return (g.row <= n && g.col <= n) || (g.row > n && g.col > n);
}

/// Adjoint action of a block-diagonal matrix unit on S*(a_-), as a derivation.
inline SparsePoly adjoint_action(MatrixUnit g, const SparsePoly& p, const VariableGrid& grid) {
  const int n = grid.rank();
  if (g.row < 1 || g.col < 1 || g.row > 2 * n || g.col > 2 * n || !in_block_diagonal(g, n))
    throw std::invalid_argument("adjoint_action: generator must lie in gl_n^(1) + gl_n^(2)");
  SparsePoly out;
  for (const auto& [e, c] : p.terms()) {
    for (std::size_t idx = 0; idx < e.size(); ++idx) {
      if (!e[idx]) continue;
      auto [i, j] = grid.coords(idx);
      for (auto [u, s] : matrix_bracket(g, grid.unit(i, j))) {
        auto target = grid.index_of(u);
        if (!target) throw std::logic_error("adjoint_action: bracket left a_-");
        Exponent f = padded(e, std::max(e.size(), *target + 1));
        --f[idx];
        ++f[*target];
        out.add_term(std::move(f), detail::checked_mul(detail::checked_mul(c, e[idx]), s));
      }
    }
  }
  return out;
}

/// Simple raising generators E_{a,a+1} of gl_n^(1) (a = 1..n-1) followed by those of gl_n^(2).
inline std::vector<MatrixUnit> simple_raising_generators(int n) {
  std::vector<MatrixUnit> out;
  for (int a = 1; a < n; ++a) out.push_back({a, a + 1});
  for (int a = 1; a < n; ++a) out.push_back({n + a, n + a + 1});
  return out;
}

inline std::vector<MatrixUnit> simple_lowering_generators(int n) {
  std::vector<MatrixUnit> out;
  for (auto g : simple_raising_generators(n)) out.push_back({g.col, g.row});
  return out;
}

inline SparsePoly raising_action(MatrixUnit g, const SparsePoly& p, const VariableGrid& grid) {
  if (g.col != g.row + 1 || !in_block_diagonal(g, grid.rank()))
    throw std::invalid_argument("raising_action: not a simple raising generator");
  return adjoint_action(g, p, grid);
}

/// Det_k: the k x k determinant of E_{n+r, n-k+s} (r, s = 1..k), i.e. of
/// y_{r, k+1-s}; columns run away from the corner as in the block picture.
inline SparsePoly det_k(int k, const VariableGrid& grid) {
  if (k < 1 || k > grid.rank()) throw std::invalid_argument("det_k: need 1 <= k <= n");
  std::vector<int> perm(static_cast<std::size_t>(k));
  std::iota(perm.begin(), perm.end(), 0);
  SparsePoly out;
  do {
    int inversions = 0;
    for (int a = 0; a < k; ++a)
      for (int b = a + 1; b < k; ++b)
        if (perm[static_cast<std::size_t>(a)] > perm[static_cast<std::size_t>(b)]) ++inversions;
    Exponent e(grid.variable_count(), 0);
    for (int r = 0; r < k; ++r) ++e[grid.index(r + 1, k - perm[static_cast<std::size_t>(r)])];
    out.add_term(std::move(e), inversions % 2 ? -1 : 1);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

/// Det_1^{l_1} ... Det_n^{l_n}.
inline SparsePoly det_monomial(const ColumnLengths& l, const VariableGrid& grid) {
  if (l.rank() > grid.rank()) throw std::invalid_argument("det_monomial: exponent rank exceeds grid rank");
  SparsePoly out = SparsePoly::constant(1);
  for (int k = 1; k <= l.rank(); ++k)
    if (l.at(k) > 0) out = out * det_k(k, grid).pow(static_cast<unsigned>(l.at(k)));
  return out;
}

/// All monomials of total degree d in `vars` variables.
inline std::vector<Exponent> monomials_of_degree(std::size_t vars, int d) {
  std::vector<Exponent> out;
  Exponent e(vars, 0);
  auto rec = [&](auto&& self, std::size_t idx, int remaining) -> void {
    if (idx + 1 == vars) {
      e[idx] = static_cast<std::uint16_t>(remaining);
      Exponent t = e;
      detail::trim(t);
      out.push_back(std::move(t));
      e[idx] = 0;
      return;
    }
    for (int v = remaining; v >= 0; --v) {
      e[idx] = static_cast<std::uint16_t>(v);
      self(self, idx + 1, remaining - v);
    }
    e[idx] = 0;
  };
  if (vars == 0) {
    if (d == 0) out.push_back({});
    return out;
  }
  rec(rec, 0, d);
  return out;
}

/// One weight space of S^d(a_-) with the joint kernel of the simple raising generators.
struct WeightGradedComponent {
  int degree = 0;
  std::vector<int> weight;          // eigenvalues of E_11..E_{2n,2n}
  std::vector<Exponent> basis;      // monomials spanning the weight space
  std::vector<SparsePoly> kernel;   // primitive integer basis of the singular vectors
};

/// Singular vectors of S^d(a_-) by exact kernel computation in every weight block.
inline std::vector<WeightGradedComponent> singular_space(int n, int d) {
  VariableGrid grid(n);
  std::map<std::vector<int>, std::vector<Exponent>> blocks;
  for (auto& m : monomials_of_degree(grid.variable_count(), d)) blocks[grid.weight(m)].push_back(std::move(m));
  const auto raising = simple_raising_generators(n);

  std::vector<WeightGradedComponent> out;
  for (auto& [weight, basis] : blocks) {
    // Rows: (generator, target monomial); columns: block basis.
    std::map<std::pair<std::size_t, Exponent>, std::size_t> row_of;
    std::vector<std::vector<std::pair<std::size_t, std::int64_t>>> columns(basis.size());
    for (std::size_t col = 0; col < basis.size(); ++col) {
      SparsePoly m = SparsePoly::monomial(basis[col], 1);
      for (std::size_t g = 0; g < raising.size(); ++g) {
        const SparsePoly image = adjoint_action(raising[g], m, grid);
        for (const auto& [e, c] : image.terms()) {
          auto [it, inserted] = row_of.try_emplace({g, e}, row_of.size());
          columns[col].push_back({it->second, c});
        }
      }
    }
    RationalMatrix mat(row_of.size(), basis.size());
    for (std::size_t col = 0; col < basis.size(); ++col)
      for (auto [r, c] : columns[col]) mat(r, col) += c;

    WeightGradedComponent comp{d, weight, basis, {}};
    for (const auto& v : kernel_basis(std::move(mat))) {
      auto ints = primitive_integer_vector(v);
      SparsePoly p;
      for (std::size_t i = 0; i < ints.size(); ++i) p.add_term(basis[i], ints[i]);
      comp.kernel.push_back(std::move(p));
    }
    out.push_back(std::move(comp));
  }
  return out;
}

inline std::size_t kernel_dimension(const std::vector<WeightGradedComponent>& comps) {
  std::size_t dim = 0;
  for (const auto& c : comps) dim += c.kernel.size();
  return dim;
}

/// Result of checking that the Det monomials of degree d are exactly the singular vectors.
struct SingularSpanReport {
  int n = 0;
  int degree = 0;
  std::size_t kernel_dim = 0;
  std::size_t expected_kernel_dim = 0;   // #{l : sum k l_k = d}
  std::size_t det_monomial_rank = 0;     // rank of the Det monomials
  std::size_t combined_rank = 0;         // rank of kernel + Det monomials
  bool det_monomials_singular = true;
  bool passed() const {
    return kernel_dim == expected_kernel_dim && det_monomial_rank == expected_kernel_dim &&
           combined_rank == kernel_dim && det_monomials_singular;
  }
};

inline SingularSpanReport singular_span_check(int n, int d) {
  VariableGrid grid(n);
  SingularSpanReport rep;
  rep.n = n;
  rep.degree = d;
  auto comps = singular_space(n, d);
  rep.kernel_dim = kernel_dimension(comps);
  auto exps = column_lengths_of_degree(n, d);
  rep.expected_kernel_dim = exps.size();

  std::vector<SparsePoly> dets;
  for (const auto& l : exps) {
    dets.push_back(det_monomial(l, grid));
    for (auto g : simple_raising_generators(n))
      if (!raising_action(g, dets.back(), grid).is_zero()) rep.det_monomials_singular = false;
  }

  auto monos = monomials_of_degree(grid.variable_count(), d);
  std::map<Exponent, std::size_t> col_of;
  for (std::size_t i = 0; i < monos.size(); ++i) col_of[monos[i]] = i;
  auto as_row = [&](const SparsePoly& p) {
    RationalVector row(monos.size());
    for (const auto& [e, c] : p.terms()) row[col_of.at(e)] = c;
    return row;
  };
  std::vector<RationalVector> det_rows, all_rows;
  for (const auto& p : dets) det_rows.push_back(as_row(p));
  all_rows = det_rows;
  for (const auto& comp : comps)
    for (const auto& k : comp.kernel) all_rows.push_back(as_row(k));
  rep.det_monomial_rank = rank_of(det_rows);
  rep.combined_rank = rank_of(all_rows);
  return rep;
}

inline std::int64_t binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || k > n) return 0;
  std::int64_t r = 1;
  for (std::int64_t i = 1; i <= k; ++i) r = detail::checked_mul(r, n - k + i) / i;
  return r;
}

/// Both sides of the finite-rank character identity behind the Cauchy decomposition.
struct CauchyRow {
  int degree = 0;
  std::int64_t lhs_dim = 0;                                  // dim S^d(a_-)
  std::int64_t rhs_dim = 0;                                  // sum of (#SSYT(lambda, n))^2
  std::vector<std::pair<Partition, std::int64_t>> terms;     // (lambda, #SSYT(lambda, n))
  bool passed() const { return lhs_dim == rhs_dim; }
};

struct CauchyReport {
  int n = 0;
  std::vector<CauchyRow> rows;
  bool passed() const {
    return std::all_of(rows.begin(), rows.end(), [](const CauchyRow& r) { return r.passed(); });
  }
};

inline CauchyReport cauchy_character_check(int n, int d_max) {
  if (n < 1 || d_max < 0) throw std::invalid_argument("cauchy_character_check: need n >= 1, d_max >= 0");
  VariableGrid grid(n);
  CauchyReport rep{n, {}};
  for (int d = 0; d <= d_max; ++d) {
    CauchyRow row;
    row.degree = d;
    row.lhs_dim = static_cast<std::int64_t>(monomials_of_degree(grid.variable_count(), d).size());
    for (const auto& lambda : partitions_of(d, n)) {
      std::int64_t dim = count_ssyt(lambda, n);
      row.terms.push_back({lambda, dim});
      row.rhs_dim += dim * dim;
    }
    rep.rows.push_back(std::move(row));
  }
  return rep;
}

/// Isotypic components L_w (x) L_w of S^d(a_-) labelled by their Young diagrams.
struct DecompositionDegree {
  int degree = 0;
  DecompositionTable<Partition> table;
  bool weights_consistent = true;   // Cartan weights of the Det monomials match theta
};

inline std::vector<DecompositionDegree> decomposition_report(int n, int d_max) {
  VariableGrid grid(n);
  std::vector<DecompositionDegree> out;
  for (int d = 0; d <= d_max; ++d) {
    DecompositionDegree deg;
    deg.degree = d;
    for (const auto& l : column_lengths_of_degree(n, d)) {
      deg.table.add(fig2_partition(l), 1);
      SparsePoly p = det_monomial(l, grid);
      auto [dm, dp] = theta_weight_pair(l);
      for (int i = 1; i <= 2 * n; ++i) {
        // gl^(1) slot i sits at gl_infinity slot i - n, gl^(2) slot n + j at slot j.
        const int expected = i <= n ? dm.value_at(i - n) : dp.value_at(i - n);
        SparsePoly image = adjoint_action({i, i}, p, grid);
        if (image != p * expected) deg.weights_consistent = false;
      }
    }
    out.push_back(std::move(deg));
  }
  return out;
}

}  // namespace glinf::poly
