#pragma once

// Band-truncated model of the central extension of gl_infinity and of the
// induced module Ind_{chi,c} = U(a_-) (x) (L_chi1 (x) L_chi2).
//
// Conventions:
//   * matrix units E_{a,b} carry integer slots; the first block is a, b <= 0,
//     the second block a, b >= 1;
//   * a_- = span{E_{a,b} : a >= 1, b <= 0}, with y_ij = E_{i, 1-j};
//     a_+ = span{E_{a,b} : a <= 0, b >= 1}, with corner element e_0 = E_{0,1};
//   * cocycle alpha(E_ij, E_ji) = 1 for i <= 0 < j, antisymmetric, zero
//     otherwise; K is central and acts by the scalar c;
//   * level of a vector = sum over slots s of s * (weight_s - chi_s), so
//     level(y_ij) = i + j - 1 and every simple raising operator lowers level.

#include "glinf/linalg.hpp"
#include "glinf/partition.hpp"
#include "glinf/rational.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace glinf::ghat {

/// Matrix unit E_{row,col} of gl_infinity.
struct Unit {
  int row = 0;
  int col = 0;
  friend auto operator<=>(const Unit&, const Unit&) = default;
};

inline bool in_a_minus(Unit u) noexcept { return u.row >= 1 && u.col <= 0; }
inline bool in_a_plus(Unit u) noexcept { return u.row <= 0 && u.col >= 1; }
inline bool in_first_block(Unit u) noexcept { return u.row <= 0 && u.col <= 0; }
inline bool in_second_block(Unit u) noexcept { return u.row >= 1 && u.col >= 1; }

/// y_ij = E_{i, 1-j}, i, j >= 1.
inline Unit y_unit(int i, int j) {
  if (i < 1 || j < 1) throw std::invalid_argument("y_unit: indices start at 1");
  return {i, 1 - j};
}

inline const Unit corner_e0{0, 1};

inline std::string to_string(Unit u) {
  if (in_a_minus(u)) return "y" + std::to_string(u.row) + "," + std::to_string(1 - u.col);
  return "E[" + std::to_string(u.row) + "," + std::to_string(u.col) + "]";
}

class band_escape : public std::runtime_error {
 public:
  band_escape(Unit u, int L)
      : std::runtime_error("band escape: " + to_string(u) + " outside band [" + std::to_string(1 - L) + ", " +
                           std::to_string(L) + "]; increase the truncation to at least " +
                           std::to_string(std::max({u.row, u.col, 1 - u.row, 1 - u.col}))),
        unit(u) {}
  Unit unit;
};

/// Slots -L+1 .. L.
struct Band {
  int L = 1;
  bool contains(int slot) const noexcept { return slot >= 1 - L && slot <= L; }
  void require(Unit u) const {
    if (!contains(u.row) || !contains(u.col)) throw band_escape(u, L);
  }
};

inline Rational cocycle(Unit x, Unit y) {
  if (x.row != y.col || x.col != y.row) return 0;
  if (x.row <= 0 && x.col >= 1) return 1;
  if (x.row >= 1 && x.col <= 0) return -1;
  return 0;
}

/// Finite combination of matrix units plus a multiple of the central element K.
class AlgebraElement {
 public:
  AlgebraElement() = default;

  static AlgebraElement unit(Unit u, Rational coef = 1) {
    AlgebraElement x;
    x.add(u, std::move(coef));
    return x;
  }
  static AlgebraElement central(Rational coef) {
    AlgebraElement x;
    x.central_ = std::move(coef);
    return x;
  }

  void add(Unit u, const Rational& coef) {
    if (coef == 0) return;
    auto [it, inserted] = units_.try_emplace(u, coef);
    if (!inserted) {
      it->second += coef;
      if (it->second == 0) units_.erase(it);
    }
  }
  void add_central(const Rational& coef) { central_ += coef; }

  const std::map<Unit, Rational>& units() const noexcept { return units_; }
  const Rational& central_part() const noexcept { return central_; }
  bool is_zero() const noexcept { return units_.empty() && central_ == 0; }

  AlgebraElement& operator+=(const AlgebraElement& o) {
    for (const auto& [u, c] : o.units_) add(u, c);
    central_ += o.central_;
    return *this;
  }
  AlgebraElement& operator*=(const Rational& s) {
    if (s == 0) return *this = AlgebraElement{};
    for (auto& [u, c] : units_) c *= s;
    central_ *= s;
    return *this;
  }
  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) {
    AlgebraElement nb = b;
    nb *= Rational(-1);
    return a += nb;
  }
  friend AlgebraElement operator*(const Rational& s, AlgebraElement a) { return a *= s; }
  friend bool operator==(const AlgebraElement&, const AlgebraElement&) = default;

 private:
  std::map<Unit, Rational> units_;
  Rational central_ = 0;
};

/// Bracket of two units inside the band, cocycle included.
inline AlgebraElement bracket(Unit x, Unit y, const Band& band) {
  band.require(x);
  band.require(y);
  AlgebraElement out;
  if (x.col == y.row) out.add({x.row, y.col}, 1);
  if (y.col == x.row) out.add({y.row, x.col}, -1);
  out.add_central(cocycle(x, y));
  return out;
}

inline AlgebraElement bracket(const AlgebraElement& x, const AlgebraElement& y, const Band& band) {
  AlgebraElement out;
  for (const auto& [u, a] : x.units())
    for (const auto& [v, b] : y.units()) {
      AlgebraElement t = bracket(u, v, band);
      t *= a * b;
      out += t;
    }
  return out;
}

/// Sparse weight: slot -> nonzero value.
using Weight = std::map<int, int>;

inline void add_to_weight(Weight& w, int slot, int delta) {
  if (!delta) return;
  int& v = w[slot];
  v += delta;
  if (!v) w.erase(slot);
}

inline Weight weight_of(const SemidominantWeight& chi) {
  Weight w;
  for (int r = 0; r < chi.chi1.body().length(); ++r) add_to_weight(w, -r, chi.chi1.value_at(-r));
  for (int r = 0; r < chi.chi2.body().length(); ++r) add_to_weight(w, r + 1, chi.chi2.value_at(r + 1));
  return w;
}

/// Principal-grading level of weight w above chi.
inline int level_of(const Weight& w, const Weight& chi) {
  int lvl = 0;
  for (const auto& [s, v] : w) lvl += s * v;
  for (const auto& [s, v] : chi) lvl -= s * v;
  return lvl;
}

/// Index tuple of a pure tensor in (V_1^*)^{(x)p} (x) V_2^{(x)q}: the first p
/// entries are slots <= 0, the last q entries slots >= 1.
using Tuple = std::vector<int>;
using TensorVector = std::map<Tuple, Rational>;

inline void add_to(TensorVector& v, const Tuple& t, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = v.try_emplace(t, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) v.erase(it);
  }
}

/// The finite-dimensional factor L_chi1 (x) L_chi2, realized as the submodule
/// of a tensor space generated by a column-antisymmetrized highest vector.
class FiniteFactor {
 public:
  struct BasisVector {
    TensorVector vec;
    Weight weight;
    int depth = 0;
  };

  explicit FiniteFactor(const SemidominantWeight& chi) : chi_(chi), chi_weight_(weight_of(chi)) {
    p_ = chi.chi1.body().size();
    q_ = chi.chi2.body().size();
    TensorVector first = column_antisymmetrized(chi.chi1.body(), [](int r) { return -r; });
    TensorVector second = column_antisymmetrized(chi.chi2.body(), [](int r) { return r + 1; });
    for (const auto& [a, ca] : first)
      for (const auto& [b, cb] : second) {
        Tuple t = a;
        t.insert(t.end(), b.begin(), b.end());
        add_to(highest_, t, ca * cb);
      }
    levels_.push_back({BasisVector{highest_, chi_weight_, 0}});
  }

  const SemidominantWeight& chi() const noexcept { return chi_; }
  const Weight& chi_weight() const noexcept { return chi_weight_; }
  int first_copies() const noexcept { return p_; }
  int second_copies() const noexcept { return q_; }
  bool trivial() const noexcept { return p_ == 0 && q_ == 0; }
  const TensorVector& highest() const noexcept { return highest_; }

  /// Action of a block-diagonal unit on a pure tensor.
  template <class Emit>
  void act_on_tuple(Unit u, const Tuple& t, Emit&& emit) const {
    if (in_first_block(u)) {
      // E_ab e*_j = -delta_{j a} e*_b
      for (int s = 0; s < p_; ++s)
        if (t[static_cast<std::size_t>(s)] == u.row) {
          Tuple n = t;
          n[static_cast<std::size_t>(s)] = u.col;
          emit(n, Rational(-1));
        }
    } else if (in_second_block(u)) {
      // E_ab e_j = delta_{b j} e_a
      for (int s = p_; s < p_ + q_; ++s)
        if (t[static_cast<std::size_t>(s)] == u.col) {
          Tuple n = t;
          n[static_cast<std::size_t>(s)] = u.row;
          emit(n, Rational(1));
        }
    } else {
      throw std::logic_error("FiniteFactor: unit is not block-diagonal");
    }
  }

  TensorVector act(Unit u, const TensorVector& v) const {
    TensorVector out;
    for (const auto& [t, c] : v) act_on_tuple(u, t, [&](const Tuple& n, const Rational& s) { add_to(out, n, c * s); });
    return out;
  }

  void add_tuple_weight(Weight& w, const Tuple& t) const {
    for (int s = 0; s < p_ + q_; ++s) add_to_weight(w, t[static_cast<std::size_t>(s)], s < p_ ? -1 : 1);
  }

  /// Weight-space bases of the factor at the given depth below the highest vector.
  const std::vector<BasisVector>& basis_at_depth(int depth) {
    while (static_cast<int>(levels_.size()) <= depth) grow();
    return levels_[static_cast<std::size_t>(depth)];
  }

  /// Largest |slot| used by basis vectors up to the given depth.
  int slot_extent(int depth) {
    int extent = std::max(p_, q_);
    for (int d = 0; d <= depth; ++d)
      for (const auto& b : basis_at_depth(d))
        for (const auto& [t, c] : b.vec)
          for (int s : t) extent = std::max(extent, s >= 1 ? s : 1 - s);
    return extent;
  }

 private:
  template <class SlotOfRow>
  static TensorVector column_antisymmetrized(const Partition& shape, SlotOfRow slot_of_row) {
    // Cells in row-reading order; column c holds rows 0..h_c-1.
    std::vector<std::pair<int, int>> cells;
    for (int r = 0; r < shape.length(); ++r)
      for (int c = 0; c < shape[r]; ++c) cells.emplace_back(r, c);
    TensorVector out;
    if (cells.empty()) {
      out[{}] = 1;
      return out;
    }
    const Partition cols = shape.conjugate();
    std::vector<std::vector<int>> perms(static_cast<std::size_t>(cols.length()));
    for (int c = 0; c < cols.length(); ++c) {
      perms[static_cast<std::size_t>(c)].resize(static_cast<std::size_t>(cols[c]));
      std::iota(perms[static_cast<std::size_t>(c)].begin(), perms[static_cast<std::size_t>(c)].end(), 0);
    }
    auto sign_of = [](const std::vector<int>& p) {
      int inv = 0;
      for (std::size_t a = 0; a < p.size(); ++a)
        for (std::size_t b = a + 1; b < p.size(); ++b)
          if (p[a] > p[b]) ++inv;
      return inv % 2 ? -1 : 1;
    };
    auto rec = [&](auto&& self, std::size_t c) -> void {
      if (c == perms.size()) {
        int sign = 1;
        for (const auto& p : perms) sign *= sign_of(p);
        Tuple t;
        for (auto [r, col] : cells) t.push_back(slot_of_row(perms[static_cast<std::size_t>(col)][static_cast<std::size_t>(r)]));
        add_to(out, t, Rational(sign));
        return;
      }
      auto& p = perms[c];
      std::sort(p.begin(), p.end());
      do {
        self(self, c + 1);
      } while (std::next_permutation(p.begin(), p.end()));
    };
    rec(rec, 0);
    return out;
  }

  void grow() {
    const auto& prev = levels_.back();
    const int depth = static_cast<int>(levels_.size());
    std::map<Weight, std::vector<TensorVector>> candidates;
    for (const auto& b : prev) {
      std::set<Unit> lowering;
      for (const auto& [t, c] : b.vec)
        for (int s = 0; s < p_ + q_; ++s) {
          int slot = t[static_cast<std::size_t>(s)];
          lowering.insert(s < p_ ? Unit{slot, slot - 1} : Unit{slot + 1, slot});
        }
      for (Unit u : lowering) {
        TensorVector img = act(u, b.vec);
        if (img.empty()) continue;
        Weight w;
        add_tuple_weight(w, img.begin()->first);
        candidates[w].push_back(std::move(img));
      }
    }
    std::vector<BasisVector> level;
    for (auto& [w, vecs] : candidates) {
      std::map<Tuple, std::size_t> col_of;
      for (const auto& v : vecs)
        for (const auto& [t, c] : v) col_of.try_emplace(t, col_of.size());
      std::vector<RationalVector> kept_rows;
      for (auto& v : vecs) {
        RationalVector row(col_of.size());
        for (const auto& [t, c] : v) row[col_of[t]] = c;
        kept_rows.push_back(row);
        if (rank_of(kept_rows) < kept_rows.size()) {
          kept_rows.pop_back();
          continue;
        }
        level.push_back({std::move(v), w, depth});
      }
    }
    levels_.push_back(std::move(level));
  }

  SemidominantWeight chi_;
  Weight chi_weight_;
  int p_ = 0, q_ = 0;
  TensorVector highest_;
  std::vector<std::vector<BasisVector>> levels_;
};

/// Sorted multiset of a_- units (a PBW monomial; a_- is abelian).
using Monomial = std::vector<Unit>;

inline int level_of(const Monomial& m) {
  int lvl = 0;
  for (Unit u : m) lvl += u.row - u.col;
  return lvl;
}

inline Monomial merged(Monomial a, const Monomial& b) {
  a.insert(a.end(), b.begin(), b.end());
  std::sort(a.begin(), a.end());
  return a;
}

/// Polynomial in a_- with rational coefficients.
using YPoly = std::map<Monomial, Rational>;

inline void add_to(YPoly& p, const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = p.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) p.erase(it);
  }
}

inline YPoly operator*(const YPoly& a, const YPoly& b) {
  YPoly out;
  for (const auto& [ma, ca] : a)
    for (const auto& [mb, cb] : b) add_to(out, merged(ma, mb), ca * cb);
  return out;
}

inline YPoly ypoly_constant(Rational c) {
  YPoly p;
  add_to(p, {}, c);
  return p;
}

inline YPoly ypoly_pow(const YPoly& p, int k) {
  YPoly r = ypoly_constant(1);
  for (int i = 0; i < k; ++i) r = r * p;
  return r;
}

/// Determinant of the matrix whose (r, s) entry is y_{rows[r], cols[s]}.
inline YPoly y_determinant(const std::vector<int>& rows, const std::vector<int>& cols) {
  if (rows.size() != cols.size()) throw std::invalid_argument("y_determinant: matrix must be square");
  if (rows.empty()) return ypoly_constant(1);
  std::vector<std::size_t> perm(rows.size());
  std::iota(perm.begin(), perm.end(), 0);
  YPoly out;
  do {
    int inv = 0;
    for (std::size_t a = 0; a < perm.size(); ++a)
      for (std::size_t b = a + 1; b < perm.size(); ++b)
        if (perm[a] > perm[b]) ++inv;
    Monomial m;
    for (std::size_t r = 0; r < rows.size(); ++r) m.push_back(y_unit(rows[r], cols[perm[r]]));
    std::sort(m.begin(), m.end());
    add_to(out, m, Rational(inv % 2 ? -1 : 1));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

/// Det_k: rows y-rows 1..k, columns y-columns k..1 (the block-picture orientation).
inline YPoly det_k(int k) {
  std::vector<int> rows, cols;
  for (int i = 1; i <= k; ++i) rows.push_back(i);
  for (int j = k; j >= 1; --j) cols.push_back(j);
  return y_determinant(rows, cols);
}

/// Det of A~_k = (y_ij)_{i,j=2..k}, same orientation.
inline YPoly det_tilde(int k) {
  std::vector<int> rows, cols;
  for (int i = 2; i <= k; ++i) rows.push_back(i);
  for (int j = k; j >= 2; --j) cols.push_back(j);
  return y_determinant(rows, cols);
}

/// Det of A~_k without y-row j and y-column i, same orientation.
inline YPoly det_tilde_minor(int k, int i, int j) {
  std::vector<int> rows, cols;
  for (int r = 2; r <= k; ++r)
    if (r != j) rows.push_back(r);
  for (int s = k; s >= 2; --s)
    if (s != i) cols.push_back(s);
  return y_determinant(rows, cols);
}

/// Det_1^{l_1} ... Det_n^{l_n}.
inline YPoly det_monomial(const ColumnLengths& l) {
  YPoly out = ypoly_constant(1);
  for (int k = 1; k <= l.rank(); ++k) out = out * ypoly_pow(det_k(k), l.at(k));
  return out;
}

/// Symbolic name such as "Det_1^2*Det_3"; "1" for the empty product.
inline std::string det_monomial_label(const ColumnLengths& l) {
  std::string out;
  for (int k = 1; k <= l.rank(); ++k) {
    if (!l.at(k)) continue;
    if (!out.empty()) out += '*';
    out += "Det_" + std::to_string(k);
    if (l.at(k) > 1) out += '^' + std::to_string(l.at(k));
  }
  return out.empty() ? "1" : out;
}

struct Term {
  Monomial mono;
  Tuple tuple;
  friend auto operator<=>(const Term&, const Term&) = default;
};

/// Element of Ind_{chi,c}: rational combination of PBW monomial (x) pure tensor.
class ModuleVector {
 public:
  using Terms = std::map<Term, Rational>;

  void add(const Term& t, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(t, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  ModuleVector& operator+=(const ModuleVector& o) {
    for (const auto& [t, c] : o.terms_) add(t, c);
    return *this;
  }
  ModuleVector& operator-=(const ModuleVector& o) {
    for (const auto& [t, c] : o.terms_) add(t, -c);
    return *this;
  }
  ModuleVector& operator*=(const Rational& s) {
    if (s == 0) terms_.clear();
    for (auto& [t, c] : terms_) c *= s;
    return *this;
  }
  friend ModuleVector operator+(ModuleVector a, const ModuleVector& b) { return a += b; }
  friend ModuleVector operator-(ModuleVector a, const ModuleVector& b) { return a -= b; }
  friend ModuleVector operator*(const Rational& s, ModuleVector a) { return a *= s; }
  friend bool operator==(const ModuleVector&, const ModuleVector&) = default;

  /// Scalar r with *this == r * other, if any.
  std::optional<Rational> ratio_to(const ModuleVector& other) const {
    if (other.is_zero()) return is_zero() ? std::optional<Rational>(0) : std::nullopt;
    if (terms_.size() != other.terms_.size()) return std::nullopt;
    const auto& [t0, c0] = *other.terms_.begin();
    auto it = terms_.find(t0);
    if (it == terms_.end()) return std::nullopt;
    Rational r = it->second / c0;
    for (const auto& [t, c] : other.terms_) {
      auto jt = terms_.find(t);
      if (jt == terms_.end() || jt->second != r * c) return std::nullopt;
    }
    return r;
  }

 private:
  Terms terms_;
};

/// p (x) w for p in U(a_-) and w in the finite factor.
inline ModuleVector tensor(const YPoly& p, const TensorVector& w) {
  ModuleVector out;
  for (const auto& [m, a] : p)
    for (const auto& [t, b] : w) out.add({m, t}, a * b);
  return out;
}

/// Left multiplication by an element of U(a_-).
inline ModuleVector multiply(const YPoly& p, const ModuleVector& v) {
  ModuleVector out;
  for (const auto& [m, a] : p)
    for (const auto& [t, b] : v.terms()) out.add({merged(m, t.mono), t.tuple}, a * b);
  return out;
}

inline std::string to_string(const ModuleVector& v) {
  if (v.is_zero()) return "0";
  std::string out;
  for (const auto& [t, c] : v.terms()) {
    if (!out.empty()) out += " + ";
    out += "(" + glinf::to_string(c) + ")";
    for (Unit u : t.mono) out += "*" + to_string(u);
    if (!t.tuple.empty()) {
      out += "*e[";
      for (std::size_t i = 0; i < t.tuple.size(); ++i) out += (i ? "," : "") + std::to_string(t.tuple[i]);
      out += "]";
    }
  }
  return out;
}

/// Ind_{chi,c} with the gl_infinity action restricted to a band.
class InducedModule {
 public:
  InducedModule(SemidominantWeight chi, Rational c, Band band)
      : factor_(chi), central_charge_(std::move(c)), band_(band) {}

  const SemidominantWeight& chi() const noexcept { return factor_.chi(); }
  const Rational& central_charge() const noexcept { return central_charge_; }
  const Band& band() const noexcept { return band_; }
  FiniteFactor& factor() noexcept { return factor_; }
  const FiniteFactor& factor() const noexcept { return factor_; }

  ModuleVector highest_vector() const { return tensor(ypoly_constant(1), factor_.highest()); }

  Weight weight(const Term& t) const {
    Weight w;
    for (Unit u : t.mono) {
      add_to_weight(w, u.row, 1);
      add_to_weight(w, u.col, -1);
    }
    factor_.add_tuple_weight(w, t.tuple);
    return w;
  }

  int level(const Term& t) const { return level_of(weight(t), factor_.chi_weight()); }

  ModuleVector act(Unit u, const ModuleVector& v) const {
    band_.require(u);
    ModuleVector out;
    for (const auto& [t, c] : v.terms()) {
      for (Unit y : t.mono) band_.require(y);
      Monomial left;
      apply(u, c, left, t.mono, 0, t.tuple, out);
    }
    return out;
  }

  ModuleVector act(const AlgebraElement& x, const ModuleVector& v) const {
    ModuleVector out;
    for (const auto& [u, a] : x.units()) {
      ModuleVector part = act(u, v);
      part *= a;
      out += part;
    }
    if (x.central_part() != 0) {
      ModuleVector part = v;
      part *= x.central_part() * central_charge_;
      out += part;
    }
    return out;
  }

 private:
  // u . (rest[idx..] (x) tuple), left-multiplied by `left`; accumulates into out.
  void apply(Unit u, const Rational& coef, Monomial& left, const Monomial& rest, std::size_t idx, const Tuple& tuple,
             ModuleVector& out) const {
    band_.require(u);
    auto remaining = [&] {
      Monomial m = left;
      m.insert(m.end(), rest.begin() + static_cast<std::ptrdiff_t>(idx), rest.end());
      std::sort(m.begin(), m.end());
      return m;
    };
    if (in_a_minus(u)) {
      Monomial m = remaining();
      m.push_back(u);
      std::sort(m.begin(), m.end());
      out.add({std::move(m), tuple}, coef);
      return;
    }
    if (u.row == u.col) {
      // Cartan: eigenvalue on rest (x) tuple.
      int eigen = 0;
      for (std::size_t i = idx; i < rest.size(); ++i) eigen += (rest[i].row == u.row) - (rest[i].col == u.row);
      for (int s = 0; s < static_cast<int>(tuple.size()); ++s)
        if (tuple[static_cast<std::size_t>(s)] == u.row) eigen += s < factor_.first_copies() ? -1 : 1;
      if (eigen) out.add({remaining(), tuple}, coef * eigen);
      return;
    }
    if (idx == rest.size()) {
      if (in_a_plus(u)) return;
      Monomial m = remaining();
      factor_.act_on_tuple(u, tuple, [&](const Tuple& n, const Rational& s) { out.add({m, n}, coef * s); });
      return;
    }
    const Unit y = rest[idx];
    left.push_back(y);
    apply(u, coef, left, rest, idx + 1, tuple, out);
    left.pop_back();
    AlgebraElement b = bracket(u, y, band_);
    for (const auto& [w, s] : b.units()) apply(w, coef * s, left, rest, idx + 1, tuple, out);
    if (b.central_part() != 0) {
      Monomial m = left;
      m.insert(m.end(), rest.begin() + static_cast<std::ptrdiff_t>(idx) + 1, rest.end());
      std::sort(m.begin(), m.end());
      out.add({std::move(m), tuple}, coef * b.central_part() * central_charge_);
    }
  }

  FiniteFactor factor_;
  Rational central_charge_;
  Band band_;
};

/// Both sides of the commutator formula for [e_0, Det_k^l] applied to the highest vector.
struct CommutatorReport {
  int k = 0;
  int l = 0;
  Rational c = 0;
  ModuleVector lhs;
  ModuleVector rhs;
  bool equal() const { return lhs == rhs; }
  ModuleVector discrepancy() const { return lhs - rhs; }
};

inline int commutator_band(int k, const SemidominantWeight& chi) {
  return k + std::max(chi.chi1.body().length(), chi.chi2.body().length()) + 2;
}

/// Computes e_0 . Det_k^l v by PBW push-through and, independently, the closed
/// form
///   (-1)^{1+k} l Det A~_k Det_k^{l-1} (alpha_0 + c + k - l) v
///   + sum_{i,j=2..k} (-1)^{i+j} l Det A~_ij Det_k^{l-1} (y_j1 z_i^+ - y_1i z_j^-) v
/// with alpha_0 = E_00 - E_11, z_i^+ = E_{0,1-i}, z_j^- = E_{j,1}.
inline CommutatorReport commutator_formula_check(int k, int l, const SemidominantWeight& chi, const Rational& c) {
  if (k < 1 || l < 1) throw std::invalid_argument("commutator_formula_check: need k, l >= 1");
  InducedModule mod(chi, c, Band{commutator_band(k, chi)});
  CommutatorReport rep{k, l, c, {}, {}};
  const ModuleVector v = mod.highest_vector();
  const YPoly det = det_k(k);
  rep.lhs = mod.act(corner_e0, multiply(ypoly_pow(det, l), v));

  const YPoly det_rest = ypoly_pow(det, l - 1);
  const Rational scalar = Rational(chi.chi_centr()) + c + k - l;
  const Rational sign = (k % 2) ? 1 : -1;  // (-1)^{1+k}
  rep.rhs = multiply(det_tilde(k) * det_rest, v);
  rep.rhs *= sign * l * scalar;
  for (int i = 2; i <= k; ++i) {
    for (int j = 2; j <= k; ++j) {
      YPoly coef = det_tilde_minor(k, i, j) * det_rest;
      ModuleVector plus = multiply(coef * YPoly{{{y_unit(j, 1)}, Rational(1)}}, mod.act(Unit{0, 1 - i}, v));
      ModuleVector minus = multiply(coef * YPoly{{{y_unit(1, i)}, Rational(1)}}, mod.act(Unit{j, 1}, v));
      ModuleVector term = plus - minus;
      term *= Rational((i + j) % 2 ? -l : l);
      rep.rhs += term;
    }
  }
  return rep;
}

/// Singular vectors found in one (level, weight) block.
struct SingularBlock {
  int level = 0;
  Weight weight;
  std::vector<ModuleVector> basis;
  std::vector<std::string> det_labels;   // per basis vector; empty when not a Det monomial
  bool has_highest_component = true;     // every basis vector has a term on the highest factor vector
  std::size_t dim() const noexcept { return basis.size(); }
};

struct SingularSearchResult {
  SemidominantWeight chi;
  Rational c = 0;
  int level_max = 0;
  int band = 0;
  std::vector<SingularBlock> blocks;
  std::vector<std::size_t> block_counts;   // weight blocks examined per level (index = level)

  std::optional<int> lowest_level() const {
    if (blocks.empty()) return std::nullopt;
    return blocks.front().level;
  }
};

/// All multisets of a_- units with total level exactly `level`.
inline std::vector<Monomial> monomials_of_level(int level) {
  std::vector<Unit> units;
  for (int t = 1; t <= level; ++t)
    for (int i = 1; i <= t; ++i) units.push_back(y_unit(i, t + 1 - i));
  std::vector<Monomial> out;
  Monomial cur;
  auto rec = [&](auto&& self, std::size_t start, int remaining) -> void {
    if (remaining == 0) {
      Monomial m = cur;
      std::sort(m.begin(), m.end());
      out.push_back(std::move(m));
      return;
    }
    for (std::size_t u = start; u < units.size(); ++u) {
      int lv = units[u].row - units[u].col;
      if (lv > remaining) continue;
      cur.push_back(units[u]);
      self(self, u, remaining - lv);
      cur.pop_back();
    }
  };
  rec(rec, 0, level);
  return out;
}

namespace detail {

inline std::optional<std::string> recognize_det_monomial(const InducedModule& mod, const ModuleVector& v,
                                                         const Weight& weight) {
  Weight diff = weight;
  for (const auto& [s, x] : mod.factor().chi_weight()) add_to_weight(diff, s, -x);
  std::vector<int> head, tail;
  for (const auto& [s, x] : diff) {
    if (s >= 1) {
      if (s != static_cast<int>(head.size()) + 1 || x <= 0) return std::nullopt;
      head.push_back(x);
    }
  }
  for (auto it = diff.rbegin(); it != diff.rend(); ++it) {
    if (it->first > 0) continue;
    if (it->first != -static_cast<int>(tail.size()) || it->second >= 0) return std::nullopt;
    tail.push_back(-it->second);
  }
  if (head != tail || !std::is_sorted(head.begin(), head.end(), std::greater<>{})) return std::nullopt;
  Partition p(head);
  ColumnLengths l = column_lengths_of(p, p.length());
  ModuleVector candidate = multiply(det_monomial(l), mod.highest_vector());
  if (!v.ratio_to(candidate)) return std::nullopt;
  return det_monomial_label(l);
}

}  // namespace detail

/// Joint kernel of all simple raising operators E_{a,a+1} (e_0 included) on
/// every weight block of levels 1..level_max of Ind_{chi,c}.
inline SingularSearchResult singular_search(const SemidominantWeight& chi, const Rational& c, int level_max) {
  if (level_max < 0) throw std::invalid_argument("singular_search: level_max must be nonnegative");
  FiniteFactor probe(chi);
  const int extent = probe.slot_extent(level_max);
  Band band{level_max + extent + 2};
  InducedModule mod(chi, c, band);
  mod.factor().basis_at_depth(level_max);

  SingularSearchResult result{chi, c, level_max, band.L, {}, std::vector<std::size_t>(static_cast<std::size_t>(level_max) + 1, 0)};
  std::vector<std::vector<Monomial>> monos_by_level;
  for (int t = 0; t <= level_max; ++t) monos_by_level.push_back(monomials_of_level(t));

  for (int level = 1; level <= level_max; ++level) {
    struct Domain {
      Monomial mono;
      const FiniteFactor::BasisVector* fvec;
    };
    std::map<Weight, std::vector<Domain>> blocks;
    for (int ml = 0; ml <= level; ++ml) {
      const auto& fbasis = mod.factor().basis_at_depth(level - ml);
      for (const auto& m : monos_by_level[static_cast<std::size_t>(ml)])
        for (const auto& fb : fbasis) {
          Weight w = fb.weight;
          for (Unit u : m) {
            add_to_weight(w, u.row, 1);
            add_to_weight(w, u.col, -1);
          }
          blocks[w].push_back({m, &fb});
        }
    }
    result.block_counts[static_cast<std::size_t>(level)] = blocks.size();

    for (const auto& [weight, domain] : blocks) {
      std::vector<ModuleVector> vecs;
      int lo = 0, hi = 1;
      for (const auto& d : domain) {
        ModuleVector v = tensor(YPoly{{d.mono, Rational(1)}}, d.fvec->vec);
        for (const auto& [t, coef] : v.terms()) {
          for (Unit u : t.mono) {
            lo = std::min({lo, u.row, u.col});
            hi = std::max({hi, u.row, u.col});
          }
          for (int s : t.tuple) {
            lo = std::min(lo, s);
            hi = std::max(hi, s);
          }
        }
        vecs.push_back(std::move(v));
      }
      std::map<std::pair<int, Term>, std::size_t> row_of;
      std::vector<std::vector<std::pair<std::size_t, Rational>>> columns(vecs.size());
      for (std::size_t col = 0; col < vecs.size(); ++col) {
        for (int a = lo - 1; a <= hi; ++a) {
          const ModuleVector image = mod.act(Unit{a, a + 1}, vecs[col]);
          for (const auto& [t, coef] : image.terms()) {
            auto [it, ins] = row_of.try_emplace({a, t}, row_of.size());
            columns[col].push_back({it->second, coef});
          }
        }
      }
      RationalMatrix mat(row_of.size(), vecs.size());
      for (std::size_t col = 0; col < vecs.size(); ++col)
        for (const auto& [r, coef] : columns[col]) mat(r, col) += coef;
      auto kernel = kernel_basis(std::move(mat));
      if (kernel.empty()) continue;

      SingularBlock blk;
      blk.level = level;
      blk.weight = weight;
      for (const auto& kv : kernel) {
        auto ints = primitive_integer_vector(kv);
        ModuleVector sv;
        bool highest = false;
        for (std::size_t i = 0; i < ints.size(); ++i) {
          if (!ints[i]) continue;
          ModuleVector part = vecs[i];
          part *= Rational(ints[i]);
          sv += part;
          if (domain[i].fvec->depth == 0) highest = true;
        }
        blk.has_highest_component = blk.has_highest_component && highest;
        blk.det_labels.push_back(detail::recognize_det_monomial(mod, sv, weight).value_or(""));
        blk.basis.push_back(std::move(sv));
      }
      result.blocks.push_back(std::move(blk));
    }
  }
  return result;
}

}  // namespace glinf::ghat
