// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include "glinf/ghat.hpp"
#include "glinf/lr.hpp"
#include "glinf/polynomial_model.hpp"
#include "glinf/reciprocity.hpp"

#include "oracles.hpp"

#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <random>
#include <sstream>
#include <string>

using namespace glinf;

namespace {

struct Outcome {
  bool ok = true;
  std::ostringstream note;
  void fail(const std::string& why) {
    if (ok) note << why;
    ok = false;
  }
};

int failures = 0;

void criterion(int id, const char* title, double limit_seconds, const std::function<void(Outcome&)>& body) {
  Outcome out;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(out);
  } catch (const std::exception& e) {
    out.fail(std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (limit_seconds > 0 && secs > limit_seconds) {
    std::ostringstream why;
    why << "runtime " << secs << "s exceeds " << limit_seconds << "s";
    out.fail(why.str());
  }
  if (!out.ok) ++failures;
  std::printf("%s criterion %d: %s (%.2fs)%s%s\n", out.ok ? "PASS" : "FAIL", id, title, secs,
              out.note.str().empty() ? "" : " - ", out.note.str().c_str());
  std::fflush(stdout);
}

HalfInfiniteWeight neg(Partition p) { return HalfInfiniteWeight::negative(std::move(p)); }
HalfInfiniteWeight pos(Partition p) { return HalfInfiniteWeight::positive(std::move(p)); }

void cauchy(Outcome& out) {
  for (int n = 1; n <= 3; ++n) {
    auto rep = poly::cauchy_character_check(n, 8);
    for (const auto& row : rep.rows) {
      std::int64_t ssyt_squares = 0;
      for (const auto& p : partitions_of(row.degree, n)) {
        const std::int64_t dim = oracle::weyl_dimension(p.rows(), n);
        ssyt_squares += dim * dim;
      }
      const std::int64_t sym = oracle::binomial(n * n + row.degree - 1, row.degree);
      if (row.lhs_dim != sym || row.rhs_dim != ssyt_squares || row.lhs_dim != row.rhs_dim)
        out.fail("n=" + std::to_string(n) + " d=" + std::to_string(row.degree));
    }
  }
}

void singular_span(Outcome& out) {
  for (int n = 1; n <= 3; ++n)
    for (int d = 0; d <= 6; ++d) {
      auto rep = poly::singular_span_check(n, d);
      const auto expected = static_cast<std::size_t>(oracle::weighted_compositions(n, d));
      if (rep.kernel_dim != expected || !rep.passed())
        out.fail("n=" + std::to_string(n) + " d=" + std::to_string(d) + " kernel=" + std::to_string(rep.kernel_dim));
    }
}

void theta_weights(Outcome& out) {
  int checked = 0;
  for (int n = 1; n <= 3; ++n) {
    poly::VariableGrid g(n);
    std::vector<int> l(static_cast<std::size_t>(n), 0);
    auto visit = [&](auto&& self, std::size_t k, int budget) -> void {
      if (k == l.size()) {
        const ColumnLengths lengths(l, n);
        const SparsePoly det = poly::det_monomial(lengths, g);
        auto [dm, dp] = theta_weight_pair(lengths);
        for (int i = 1; i <= 2 * n; ++i) {
          const int expected = i <= n ? dm.value_at(i - n) : dp.value_at(i - n);
          if (poly::adjoint_action({i, i}, det, g) != det * expected) out.fail("n=" + std::to_string(n) + " i=" + std::to_string(i));
        }
        ++checked;
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
  out.note << checked << " exponent vectors";
}

void lr_oracle(Outcome& out) {
  int pairs = 0;
  for (const auto& lambda : partitions_up_to(5))
    for (const auto& mu : partitions_up_to(5)) {
      const int N = std::max(1, lambda.size() + mu.size());
      auto table = decompose_symmetric(schur_poly(lambda, N) * schur_poly(mu, N), N);
      for (const auto& nu : partitions_of(lambda.size() + mu.size(), N))
        if (lr_coefficient(lambda, mu, nu) != table.at(nu))
          out.fail(to_string(lambda) + "*" + to_string(mu) + "->" + to_string(nu));
      ++pairs;
    }
  out.note << pairs << " pairs";
}

void fixed_vectors(Outcome& out) {
  auto vv = tensor_decompose(Partition({1}), Partition({1}));
  if (vv.size() != 2 || vv.at(Partition({2})) != 1 || vv.at(Partition({1, 1})) != 1) out.fail("V(x)V");
  for (int N = 3; N <= 5; ++N) {
    const FiniteWeight v = embed(pos({1}), N), dual = embed(neg({1}), N);
    const FiniteWeight adjoint = mixed_weight(Partition({1}), Partition({1}), N), zero = mixed_weight({}, {}, N);
    for (const auto& head : partitions_up_to(2))
      for (const auto& tail : partitions_up_to(2)) {
        if (head.length() + tail.length() > N) continue;
        const FiniteWeight nu = mixed_weight(head, tail, N);
        const std::int64_t expected = (nu == adjoint || nu == zero) ? 1 : 0;
        if (rational_tensor_coefficient(v, dual, nu, N) != expected)
          out.fail("V(x)V* N=" + std::to_string(N) + " nu=" + to_string(nu));
      }
    auto table = kac_radul_table(adjoint, N, 2);
    if (table.at({dual, v}) != 1) out.fail("adjoint branching N=" + std::to_string(N));
  }
}

void commutator(Outcome& out) {
  const Rational charges[] = {Rational(0), Rational(1), Rational(-1), Rational(3), Rational(2, 5)};
  for (const Rational& c : charges) {
    for (int k = 1; k <= 2; ++k)
      for (int l = 1; l <= 3; ++l)
        if (!ghat::commutator_formula_check(k, l, SemidominantWeight::zero(), c).equal())
          out.fail("k=" + std::to_string(k) + " l=" + std::to_string(l) + " c=" + to_string(c));
    ghat::InducedModule mod(SemidominantWeight::zero(), c, ghat::Band{4});
    const ghat::YPoly det1 = ghat::det_k(1);
    for (int l = 1; l <= 5; ++l) {
      auto lhs = mod.act(ghat::corner_e0, ghat::multiply(ghat::ypoly_pow(det1, l), mod.highest_vector()));
      auto rhs = ghat::multiply(ghat::ypoly_pow(det1, l - 1), mod.highest_vector());
      rhs *= Rational(l) * (c + 1 - l);
      if (lhs != rhs) out.fail("closed form l=" + std::to_string(l) + " c=" + to_string(c));
    }
  }
}

void singular_vectors(Outcome& out) {
  for (int N = 0; N <= 1; ++N) {
    auto res = ghat::singular_search(SemidominantWeight::zero(), N, N + 1);
    const std::string want = N == 0 ? "Det_1" : "Det_1^" + std::to_string(N + 1);
    if (res.blocks.size() != 1 || res.blocks[0].level != N + 1 || res.blocks[0].det_labels != std::vector<std::string>{want})
      out.fail("c=" + std::to_string(N));
  }
  auto neg1 = ghat::singular_search(SemidominantWeight::zero(), -1, 9);
  if (neg1.blocks.size() != 1 || neg1.blocks[0].level != 4 || neg1.blocks[0].det_labels != std::vector<std::string>{"Det_2"})
    out.fail("c=-1: " + std::to_string(neg1.blocks.size()) + " blocks");
  auto half = ghat::singular_search(SemidominantWeight::zero(), Rational(1, 2), 6);
  if (!half.blocks.empty()) out.fail("c=1/2 has singular vectors");
}

void reciprocity(Outcome& out) {
  auto triples = reciprocity_grid(3);
  const std::size_t grid = triples.size();
  auto extra = random_triples(200, 20240611, 4);
  triples.insert(triples.end(), extra.begin(), extra.end());
  std::size_t nonzero = 0;
  for (const auto& t : triples) {
    auto rep = reciprocity_check(t.nu, t.lambda_minus, t.mu_plus, default_ranks(t, 3));
    if (!rep.holds()) out.fail("nu=" + to_string(t.nu));
    if (rep.lhs) ++nonzero;
  }
  out.note << grid << " grid + " << extra.size() << " random triples, " << nonzero << " nonzero";
}

void consistency_square(Outcome& out) {
  for (const auto& t : reciprocity_grid(3)) {
    auto [tail, head] = split_weight(t.nu);
    const SemidominantWeight chi(tail, head);
    if (induced_multiplicity(chi, t.lambda_minus, t.mu_plus) != reciprocity_lhs(t.nu, t.lambda_minus, t.mu_plus).value)
      out.fail("nu=" + to_string(t.nu));
  }
}

void representation(Outcome& out) {
  using namespace ghat;
  std::mt19937_64 rng(99);
  auto draw = [&](int lo, int hi) { return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1)); };
  std::vector<Unit> minus;
  for (int t = 1; t <= 4; ++t)
    for (int i = 1; i <= t; ++i) minus.push_back(y_unit(i, t + 1 - i));
  const SemidominantWeight weights[] = {SemidominantWeight::zero(), SemidominantWeight(neg({1}), pos({1}))};
  int pairs = 0;
  for (int trial = 0; trial < 200; ++trial) {
    InducedModule mod(weights[trial % 2], Rational(draw(-3, 3), draw(1, 3)), Band{12});
    Monomial m;
    int budget = draw(0, 4);
    while (budget > 0) {
      const Unit y = minus[rng() % minus.size()];
      if (level_of(Monomial{y}) > budget) continue;
      m.push_back(y);
      budget -= level_of(Monomial{y});
    }
    std::sort(m.begin(), m.end());
    const ModuleVector v = tensor(YPoly{{m, Rational(1)}}, mod.factor().highest());
    const Unit x{draw(-3, 4), draw(-3, 4)}, y{draw(-3, 4), draw(-3, 4)};
    const ModuleVector lhs = mod.act(x, mod.act(y, v)) - mod.act(y, mod.act(x, v));
    if (lhs != mod.act(bracket(x, y, mod.band()), v)) out.fail("trial " + std::to_string(trial));
    ++pairs;
  }
  out.note << pairs << " pairs";
}

}  // namespace

int main() {
  criterion(1, "Cauchy identity dimensions, n<=3, degree<=8", 10, cauchy);
  criterion(2, "raising kernel spanned by Det monomials, n<=3, d<=6", 60, singular_span);
  criterion(3, "Cartan weights of Det monomials, n<=3, sum l<=4", 0, theta_weights);
  criterion(4, "LR rule equals Schur expansion, |lambda|,|mu|<=5", 120, lr_oracle);
  criterion(5, "V(x)V and V(x)V* decompositions, N=3,4,5", 0, fixed_vectors);
  criterion(6, "e_0 commutator formula and Det_1 closed form", 0, commutator);
  criterion(7, "singular vectors for c in {0,1,-1,1/2}", 300, singular_vectors);
  criterion(8, "reciprocity on grid and random triples", 300, reciprocity);
  criterion(9, "induced multiplicity equals reciprocity left side", 0, consistency_square);
  criterion(10, "act is compatible with the bracket", 0, representation);
  std::printf("%s: %d of 10 criteria failed\n", failures ? "FAIL" : "PASS", failures);
  return failures ? 1 : 0;
}
