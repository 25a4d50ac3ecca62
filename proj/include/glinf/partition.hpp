#pragma once

// Partitions, finite gl_N weights and finitely supported half-infinite
// weights of gl_infinity, together with the conversions between them.
//
// Slot convention for gl_infinity weights: the first block occupies the
// integer slots <= 0, the second block the slots >= 1. A positive-type
// half-weight lives on slots 1, 2, ...; a negative-type one on 0, -1, ...

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstddef>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace glinf {

/// Weakly decreasing sequence of positive integers. Trailing zeros are
/// trimmed on construction so that equality is equality of diagrams.
class Partition {
 public:
  Partition() = default;

  explicit Partition(std::vector<int> rows) : rows_(std::move(rows)) {
    while (!rows_.empty() && rows_.back() == 0) rows_.pop_back();
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (rows_[i] < 0) throw std::invalid_argument("partition with negative row");
      if (i + 1 < rows_.size() && rows_[i] < rows_[i + 1])
        throw std::invalid_argument("partition rows must be weakly decreasing");
    }
  }

  Partition(std::initializer_list<int> rows) : Partition(std::vector<int>(rows)) {}

  const std::vector<int>& rows() const noexcept { return rows_; }
  int length() const noexcept { return static_cast<int>(rows_.size()); }
  int size() const noexcept { return std::accumulate(rows_.begin(), rows_.end(), 0); }
  bool empty() const noexcept { return rows_.empty(); }

  /// Row length, zero past the last row.
  int operator[](std::size_t i) const noexcept { return i < rows_.size() ? rows_[i] : 0; }

  bool contains(const Partition& inner) const noexcept {
    if (inner.length() > length()) return false;
    for (std::size_t i = 0; i < inner.rows_.size(); ++i)
      if (inner.rows_[i] > rows_[i]) return false;
    return true;
  }

  Partition conjugate() const {
    std::vector<int> cols(rows_.empty() ? 0 : rows_.front(), 0);
    for (int r : rows_)
      for (int c = 0; c < r; ++c) ++cols[c];
    return Partition(std::move(cols));
  }

  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> rows_;
};

inline std::string to_string(const Partition& p) {
  std::string out = "[";
  for (int i = 0; i < p.length(); ++i) {
    if (i) out += ',';
    out += std::to_string(p[i]);
  }
  return out + ']';
}

namespace detail {

inline std::vector<int> parse_int_list(std::string_view text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s.size() < 2 || s.front() != '[' || s.back() != ']')
    throw std::invalid_argument("expected bracketed list, got '" + std::string(text) + "'");
  std::vector<int> out;
  std::string body = s.substr(1, s.size() - 2);
  if (body.empty()) return out;
  std::size_t pos = 0;
  while (pos <= body.size()) {
    std::size_t comma = body.find(',', pos);
    std::string item = body.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    if (item.empty()) throw std::invalid_argument("empty list item in '" + std::string(text) + "'");
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad integer '" + item + "'");
    }
    if (used != item.size()) throw std::invalid_argument("bad integer '" + item + "'");
    out.push_back(value);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

}  // namespace detail

/// Parses the bracketed text form, e.g. "[3,1,1]"; "[]" is the empty partition.
inline Partition parse_partition(std::string_view text) {
  return Partition(detail::parse_int_list(text));
}

/// All partitions of `n` with at most `max_length` rows (negative: unbounded),
/// in reverse lexicographic order.
inline std::vector<Partition> partitions_of(int n, int max_length = -1) {
  std::vector<Partition> out;
  if (n < 0) return out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int remaining, int cap) -> void {
    if (remaining == 0) {
      out.emplace_back(cur);
      return;
    }
    if (max_length >= 0 && static_cast<int>(cur.size()) >= max_length) return;
    for (int part = std::min(remaining, cap); part >= 1; --part) {
      cur.push_back(part);
      self(self, remaining - part, part);
      cur.pop_back();
    }
  };
  rec(rec, n, n);
  return out;
}

/// Partitions of every size 0..max_size.
inline std::vector<Partition> partitions_up_to(int max_size, int max_length = -1) {
  std::vector<Partition> out;
  for (int n = 0; n <= max_size; ++n) {
    auto part = partitions_of(n, max_length);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

/// Exponents (l_1, ..., l_n) of a product Det_1^{l_1} ... Det_n^{l_n}.
class ColumnLengths {
 public:
  ColumnLengths(std::vector<int> l, int n) : l_(std::move(l)), n_(n) {
    if (n_ < static_cast<int>(l_.size())) throw std::invalid_argument("ColumnLengths: rank smaller than length");
    if (std::any_of(l_.begin(), l_.end(), [](int v) { return v < 0; }))
      throw std::invalid_argument("ColumnLengths: negative exponent");
    l_.resize(static_cast<std::size_t>(n_), 0);
  }
  explicit ColumnLengths(std::vector<int> l) : ColumnLengths(l, static_cast<int>(l.size())) {}

  int rank() const noexcept { return n_; }
  const std::vector<int>& exponents() const noexcept { return l_; }
  /// l_k for 1-based k.
  int at(int k) const { return l_.at(static_cast<std::size_t>(k - 1)); }
  /// Polynomial degree of the Det monomial: sum of k * l_k.
  int weighted_degree() const noexcept {
    int d = 0;
    for (std::size_t k = 0; k < l_.size(); ++k) d += static_cast<int>(k + 1) * l_[k];
    return d;
  }

  friend auto operator<=>(const ColumnLengths&, const ColumnLengths&) = default;

 private:
  std::vector<int> l_;
  int n_ = 0;
};

/// Rows (l_1+...+l_n, l_2+...+l_n, ..., l_n): l_k columns of height k.
inline Partition fig2_partition(const ColumnLengths& l) {
  const auto& e = l.exponents();
  std::vector<int> rows(e.size(), 0);
  int acc = 0;
  for (std::size_t k = e.size(); k-- > 0;) {
    acc += e[k];
    rows[k] = acc;
  }
  return Partition(std::move(rows));
}

/// Inverse of fig2_partition: row differences. Requires length(p) <= n.
inline ColumnLengths column_lengths_of(const Partition& p, int n) {
  if (p.length() > n) throw std::invalid_argument("partition longer than rank");
  std::vector<int> l(static_cast<std::size_t>(n), 0);
  for (int k = 0; k < n; ++k) l[static_cast<std::size_t>(k)] = p[static_cast<std::size_t>(k)] - p[static_cast<std::size_t>(k) + 1];
  return ColumnLengths(std::move(l), n);
}

/// All exponent vectors of rank n with sum of k * l_k equal to d.
inline std::vector<ColumnLengths> column_lengths_of_degree(int n, int d) {
  std::vector<ColumnLengths> out;
  for (const auto& p : partitions_of(d, n)) out.push_back(column_lengths_of(p, n));
  return out;
}

/// Integral gl_N weight with explicit rank N = entries.size().
class FiniteWeight {
 public:
  FiniteWeight() = default;
  explicit FiniteWeight(std::vector<int> entries) : entries_(std::move(entries)) {}
  FiniteWeight(std::initializer_list<int> entries) : entries_(entries) {}

  int rank() const noexcept { return static_cast<int>(entries_.size()); }
  const std::vector<int>& entries() const noexcept { return entries_; }
  int operator[](std::size_t i) const { return entries_.at(i); }
  int sum() const noexcept { return std::accumulate(entries_.begin(), entries_.end(), 0); }
  int nonzero_count() const noexcept {
    return static_cast<int>(std::count_if(entries_.begin(), entries_.end(), [](int v) { return v != 0; }));
  }
  bool is_dominant() const noexcept {
    return std::is_sorted(entries_.begin(), entries_.end(), std::greater<>{});
  }
  FiniteWeight shifted(int by) const {
    auto e = entries_;
    for (int& v : e) v += by;
    return FiniteWeight(std::move(e));
  }

  friend auto operator<=>(const FiniteWeight&, const FiniteWeight&) = default;

 private:
  std::vector<int> entries_;
};

inline std::string to_string(const FiniteWeight& w) {
  std::string out = "[";
  for (int i = 0; i < w.rank(); ++i) {
    if (i) out += ',';
    out += std::to_string(w[static_cast<std::size_t>(i)]);
  }
  return out + ']';
}

inline FiniteWeight parse_finite_weight(std::string_view text) {
  return FiniteWeight(detail::parse_int_list(text));
}

enum class WeightKind { positive, negative };

/// Finitely supported half of a gl_infinity weight, stored canonically as a
/// partition plus a sign. Positive-type body (a_1..a_k) is (a_1,..,a_k,0,0,..)
/// on slots 1,2,..; negative-type body (a_1..a_k) is (..,0,0,-a_k,..,-a_1)
/// ending at slot 0.
class HalfInfiniteWeight {
 public:
  HalfInfiniteWeight() = default;
  HalfInfiniteWeight(WeightKind kind, Partition body) : kind_(kind), body_(std::move(body)) {}

  static HalfInfiniteWeight positive(Partition body) { return {WeightKind::positive, std::move(body)}; }
  static HalfInfiniteWeight negative(Partition body) { return {WeightKind::negative, std::move(body)}; }

  WeightKind kind() const noexcept { return kind_; }
  const Partition& body() const noexcept { return body_; }
  bool is_zero() const noexcept { return body_.empty(); }

  /// Value on a gl_infinity slot; zero on the other block.
  int value_at(int slot) const noexcept {
    if (kind_ == WeightKind::positive)
      return slot >= 1 ? body_[static_cast<std::size_t>(slot - 1)] : 0;
    return slot <= 0 ? -body_[static_cast<std::size_t>(-slot)] : 0;
  }

  /// Entries in slot order over the support (positive: a_1..a_k; negative: -a_k..-a_1).
  std::vector<int> entries() const {
    std::vector<int> out(body_.rows());
    if (kind_ == WeightKind::negative) {
      std::reverse(out.begin(), out.end());
      for (int& v : out) v = -v;
    }
    return out;
  }

  friend bool operator==(const HalfInfiniteWeight& a, const HalfInfiniteWeight& b) {
    return a.kind_ == b.kind_ && a.body_ == b.body_;
  }
  friend auto operator<=>(const HalfInfiniteWeight& a, const HalfInfiniteWeight& b) {
    if (auto c = a.kind_ <=> b.kind_; c != 0) return c;
    return a.body_ <=> b.body_;
  }

 private:
  WeightKind kind_ = WeightKind::positive;
  Partition body_;
};

inline std::string to_string(const HalfInfiniteWeight& w) {
  std::string out = "(";
  if (w.kind() == WeightKind::negative) out += "...,0";
  for (int v : w.entries()) out += (out.size() > 1 ? "," : "") + std::to_string(v);
  if (w.kind() == WeightKind::positive) out += std::string(out.size() > 1 ? "," : "") + "0,...";
  return out + ')';
}

inline Partition weight_to_partition(const HalfInfiniteWeight& w) { return w.body(); }

/// Highest weight (D_-, D_+) of Det_1^{l_1}...Det_n^{l_n} on the two Cartan blocks.
inline std::pair<HalfInfiniteWeight, HalfInfiniteWeight> theta_weight_pair(const ColumnLengths& l) {
  Partition d = fig2_partition(l);
  return {HalfInfiniteWeight::negative(d), HalfInfiniteWeight::positive(d)};
}

/// (Lambda_-(nu), Lambda_+(nu)): the non-positive tail and the positive head of a dominant nu.
inline std::pair<HalfInfiniteWeight, HalfInfiniteWeight> split_weight(const FiniteWeight& nu) {
  if (!nu.is_dominant()) throw std::invalid_argument("split_weight: weight " + to_string(nu) + " is not dominant");
  std::vector<int> head, tail;
  for (int v : nu.entries()) {
    if (v > 0) head.push_back(v);
    if (v < 0) tail.push_back(-v);
  }
  std::reverse(tail.begin(), tail.end());
  return {HalfInfiniteWeight::negative(Partition(std::move(tail))),
          HalfInfiniteWeight::positive(Partition(std::move(head)))};
}

/// Places a half-weight into rank N: positive body in the first slots,
/// negative body in the last slots.
inline FiniteWeight embed(const HalfInfiniteWeight& w, int N) {
  if (w.body().length() > N) throw std::invalid_argument("embed: rank " + std::to_string(N) + " too small for " + to_string(w));
  std::vector<int> out(static_cast<std::size_t>(N), 0);
  auto e = w.entries();
  if (w.kind() == WeightKind::positive)
    std::copy(e.begin(), e.end(), out.begin());
  else
    std::copy(e.begin(), e.end(), out.end() - static_cast<std::ptrdiff_t>(e.size()));
  return FiniteWeight(std::move(out));
}

/// Rank-N weight with head alpha (positive) and tail beta (negative-type body).
inline FiniteWeight mixed_weight(const Partition& head, const Partition& tail, int N) {
  if (head.length() + tail.length() > N) throw std::invalid_argument("mixed_weight: rank too small");
  auto w = embed(HalfInfiniteWeight::positive(head), N).entries();
  auto t = embed(HalfInfiniteWeight::negative(tail), N).entries();
  for (std::size_t i = 0; i < w.size(); ++i) w[i] += t[i];
  return FiniteWeight(std::move(w));
}

/// Highest weight of the block subalgebra gl^(1) + gl^(2): chi1 negative-type, chi2 positive-type.
struct SemidominantWeight {
  HalfInfiniteWeight chi1 = HalfInfiniteWeight::negative({});
  HalfInfiniteWeight chi2 = HalfInfiniteWeight::positive({});

  SemidominantWeight() = default;
  SemidominantWeight(HalfInfiniteWeight first, HalfInfiniteWeight second)
      : chi1(std::move(first)), chi2(std::move(second)) {
    if (chi1.kind() != WeightKind::negative || chi2.kind() != WeightKind::positive)
      throw std::invalid_argument("semidominant weight needs a negative-type first block and positive-type second block");
  }

  static SemidominantWeight zero() { return {}; }
  bool is_zero() const noexcept { return chi1.is_zero() && chi2.is_zero(); }
  int value_at(int slot) const noexcept { return slot <= 0 ? chi1.value_at(slot) : chi2.value_at(slot); }
  /// Value on the corner coroot E_00 - E_11 (the central charge enters separately).
  int chi_centr() const noexcept { return value_at(0) - value_at(1); }
};

}  // namespace glinf
