#include "glinf/lr.hpp"
#include "glinf/polynomial_model.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>
#include <stdexcept>

using namespace glinf;
using namespace glinf::poly;

namespace {

std::int64_t abs_coefficient_sum(const SparsePoly& p) {
  std::int64_t s = 0;
  for (const auto& [e, c] : p.terms()) s += c < 0 ? -c : c;
  return s;
}

}  // namespace

TEST(VariableGrid, LayoutAndWeights) {
  VariableGrid g(2);
  EXPECT_EQ(g.variable_count(), 4u);
  EXPECT_EQ(g.unit(1, 1).row, 3);
  EXPECT_EQ(g.unit(1, 1).col, 2);
  EXPECT_EQ(g.unit(2, 2).row, 4);
  EXPECT_EQ(g.unit(2, 2).col, 1);
  for (int i = 1; i <= 2; ++i)
    for (int j = 1; j <= 2; ++j) {
      auto idx = g.index(i, j);
      EXPECT_EQ(g.coords(idx), std::make_pair(i, j));
      EXPECT_EQ(g.index_of(g.unit(i, j)), idx);
    }
  EXPECT_FALSE(g.index_of({1, 3}).has_value());
  // y_11 = E_{3,2} has weight e_3 - e_2.
  Exponent e(g.variable_count(), 0);
  e[g.index(1, 1)] = 1;
  EXPECT_EQ(g.weight(e), (std::vector<int>{0, -1, 1, 0}));
}

TEST(DetK, KnownValues) {
  VariableGrid g(3);
  EXPECT_EQ(det_k(1, g), g.y(1, 1));
  // Displayed orientation: rows 1..k, columns k..1.
  EXPECT_EQ(det_k(2, g), g.y(1, 2) * g.y(2, 1) - g.y(1, 1) * g.y(2, 2));
  for (int k = 1; k <= 3; ++k) {
    const SparsePoly d = det_k(k, g);
    const std::int64_t factorial[] = {1, 1, 2, 6};
    EXPECT_EQ(static_cast<std::int64_t>(d.term_count()), factorial[k]);
    EXPECT_EQ(abs_coefficient_sum(d), factorial[k]);
    EXPECT_TRUE(d.is_homogeneous());
    EXPECT_EQ(d.degree(), k);
  }
  EXPECT_THROW(det_k(4, g), std::invalid_argument);
}

TEST(RaisingAction, KillsConstantsAndDeterminants) {
  for (int n = 1; n <= 4; ++n) {
    VariableGrid g(n);
    for (auto gen : simple_raising_generators(n)) {
      EXPECT_TRUE(raising_action(gen, SparsePoly::constant(1), g).is_zero());
      for (int k = 1; k <= n; ++k) EXPECT_TRUE(raising_action(gen, det_k(k, g), g).is_zero()) << n << " " << k;
    }
  }
}

TEST(RaisingAction, ShiftsOneColumn) {
  VariableGrid g(2);
  bool found = false;
  for (auto gen : simple_raising_generators(2)) {
    const SparsePoly image = raising_action(gen, g.y(1, 2), g);
    if (image == g.y(1, 1) || image == g.y(1, 1) * -1) found = true;
  }
  EXPECT_TRUE(found);
}

TEST(RaisingAction, RejectsOffBlockGenerators) {
  VariableGrid g(2);
  EXPECT_THROW(raising_action({1, 3}, g.y(1, 1), g), std::invalid_argument);
}

TEST(AdjointAction, RespectsCommutationRelations) {
  // [E_ab, E_cd] acts as the commutator of the two derivations on random polynomials of degree <= 4.
  const int n = 2;
  VariableGrid g(n);
  std::vector<MatrixUnit> units;
  for (int a = 1; a <= 2 * n; ++a)
    for (int b = 1; b <= 2 * n; ++b)
      if (in_block_diagonal({a, b}, n)) units.push_back({a, b});
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 60; ++trial) {
    SparsePoly p;
    for (int t = 0; t < 4; ++t) {
      Exponent e(g.variable_count(), 0);
      const int deg = 1 + static_cast<int>(rng() % 4);
      for (int k = 0; k < deg; ++k) ++e[rng() % g.variable_count()];
      p.add_term(e, static_cast<std::int64_t>(rng() % 5) - 2);
    }
    const MatrixUnit x = units[rng() % units.size()], y = units[rng() % units.size()];
    SparsePoly lhs = adjoint_action(x, adjoint_action(y, p, g), g) - adjoint_action(y, adjoint_action(x, p, g), g);
    SparsePoly rhs;
    for (auto [u, c] : matrix_bracket(x, y)) rhs += adjoint_action(u, p, g) * c;
    EXPECT_EQ(lhs, rhs);
  }
}

TEST(SingularSpace, KnownValues) {
  VariableGrid g2(2);
  auto d1 = singular_space(2, 1);
  EXPECT_EQ(kernel_dimension(d1), 1u);
  for (const auto& comp : d1)
    for (const auto& k : comp.kernel) EXPECT_EQ(k, g2.y(1, 1));

  auto d2 = singular_space(2, 2);
  EXPECT_EQ(kernel_dimension(d2), 2u);
  std::size_t dim = 0;
  for (const auto& comp : d2) dim += comp.basis.size();
  EXPECT_EQ(dim, 10u);

  VariableGrid g1(1);
  for (int d = 0; d <= 6; ++d) {
    auto comps = singular_space(1, d);
    ASSERT_EQ(kernel_dimension(comps), 1u);
    EXPECT_EQ(comps.front().kernel.front(), g1.y(1, 1).pow(static_cast<unsigned>(d)));
  }
}

TEST(SingularSpace, ComponentsAreWeightHomogeneous) {
  VariableGrid g(2);
  for (const auto& comp : singular_space(2, 3))
    for (const auto& m : comp.basis) {
      EXPECT_EQ(g.weight(m), comp.weight);
      EXPECT_EQ(SparsePoly::monomial(m, 1).degree(), 3);
    }
}

TEST(SingularSpan, DetMonomialsSpanTheKernel) {
  for (int n = 1; n <= 3; ++n)
    for (int d = 0; d <= (n == 3 ? 5 : 6); ++d) {
      auto rep = singular_span_check(n, d);
      EXPECT_EQ(static_cast<std::int64_t>(rep.expected_kernel_dim), oracle::weighted_compositions(n, d));
      EXPECT_TRUE(rep.passed()) << "n=" << n << " d=" << d << " kernel=" << rep.kernel_dim
                                << " expected=" << rep.expected_kernel_dim;
    }
}

TEST(Cauchy, KnownValues) {
  auto r1 = cauchy_character_check(1, 10);
  EXPECT_TRUE(r1.passed());
  for (const auto& row : r1.rows) EXPECT_EQ(row.lhs_dim, 1);

  auto r2 = cauchy_character_check(2, 3);
  EXPECT_EQ(r2.rows[2].lhs_dim, 10);
  EXPECT_EQ(r2.rows[2].rhs_dim, 10);
  EXPECT_EQ(r2.rows[3].lhs_dim, 20);
  EXPECT_EQ(r2.rows[3].rhs_dim, 20);
  EXPECT_THROW(cauchy_character_check(0, 2), std::invalid_argument);
}

TEST(Cauchy, BothSidesMatchClosedForms) {
  for (int n = 1; n <= 3; ++n) {
    auto rep = cauchy_character_check(n, 6);
    for (const auto& row : rep.rows) {
      EXPECT_EQ(row.lhs_dim, oracle::binomial(n * n + row.degree - 1, row.degree));
      std::int64_t rhs = 0;
      for (const auto& p : partitions_of(row.degree, n)) rhs += oracle::weyl_dimension(p.rows(), n) * oracle::weyl_dimension(p.rows(), n);
      EXPECT_EQ(row.rhs_dim, rhs);
    }
  }
}

TEST(DecompositionReport, KnownValues) {
  auto rep = decomposition_report(2, 4);
  ASSERT_EQ(rep.size(), 5u);
  const std::size_t sizes[] = {1, 1, 2, 2, 3};
  for (std::size_t d = 0; d < 5; ++d) {
    EXPECT_EQ(rep[d].table.size(), sizes[d]);
    EXPECT_TRUE(rep[d].weights_consistent);
  }
  EXPECT_EQ(rep[0].table.at(Partition()), 1);
  EXPECT_EQ(rep[2].table.at(Partition({2})), 1);
  EXPECT_EQ(rep[2].table.at(Partition({1, 1})), 1);
}

TEST(DecompositionReport, ThetaWeightsForSmallExponents) {
  for (int n = 1; n <= 3; ++n) {
    VariableGrid g(n);
    std::vector<int> l(static_cast<std::size_t>(n), 0);
    auto visit = [&](auto&& self, std::size_t k, int budget) -> void {
      if (k == l.size()) {
        const ColumnLengths lengths(l, n);
        const SparsePoly det = det_monomial(lengths, g);
        auto [dm, dp] = theta_weight_pair(lengths);
        for (int i = 1; i <= 2 * n; ++i) {
          const int expected = i <= n ? dm.value_at(i - n) : dp.value_at(i - n);
          EXPECT_EQ(adjoint_action({i, i}, det, g), det * expected);
        }
        return;
      }
      for (int v = 0; v <= budget; ++v) {
        l[k] = v;
        self(self, k + 1, budget - v);
      }
      l[k] = 0;
    };
    visit(visit, 0, 4);
  }
}
