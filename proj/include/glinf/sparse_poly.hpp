#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace glinf {

/// Exponent vector over variables 0, 1, 2, ...; trailing zeros are trimmed so
/// that lexicographic order and equality do not depend on the variable count.
using Exponent = std::vector<std::uint16_t>;

namespace detail {

inline void trim(Exponent& e) {
  while (!e.empty() && e.back() == 0) e.pop_back();
}

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("SparsePoly: coefficient overflow");
  return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("SparsePoly: coefficient overflow");
  return r;
}

struct ExponentHash {
  std::size_t operator()(const Exponent& e) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (auto v : e) h = (h ^ v) * 0x100000001b3ULL;
    return h;
  }
};

}  // namespace detail

/// Multivariate polynomial with exact 64-bit integer coefficients; overflow
/// throws instead of wrapping. Zero coefficients are never stored.
class SparsePoly {
 public:
  using Terms = std::map<Exponent, std::int64_t>;

  SparsePoly() = default;

  static SparsePoly constant(std::int64_t c) { return monomial({}, c); }

  static SparsePoly variable(std::size_t index) {
    Exponent e(index + 1, 0);
    e[index] = 1;
    return monomial(std::move(e), 1);
  }

  static SparsePoly monomial(Exponent e, std::int64_t c) {
    SparsePoly p;
    p.add_term(std::move(e), c);
    return p;
  }

  void add_term(Exponent e, std::int64_t c) {
    if (c == 0) return;
    detail::trim(e);
    auto [it, inserted] = terms_.try_emplace(std::move(e), c);
    if (!inserted) {
      it->second = detail::checked_add(it->second, c);
      if (it->second == 0) terms_.erase(it);
    }
  }

  std::int64_t coefficient(Exponent e) const {
    detail::trim(e);
    auto it = terms_.find(e);
    return it == terms_.end() ? 0 : it->second;
  }

  const Terms& terms() const noexcept { return terms_; }
  std::size_t term_count() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }

  /// One past the highest variable index that occurs.
  std::size_t variable_count() const noexcept {
    std::size_t n = 0;
    for (const auto& [e, c] : terms_) n = std::max(n, e.size());
    return n;
  }

  /// Total degree; -1 for the zero polynomial.
  int degree() const noexcept {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, total_degree(e));
    return d;
  }

  bool is_homogeneous() const noexcept {
    if (terms_.empty()) return true;
    int d = total_degree(terms_.begin()->first);
    return std::all_of(terms_.begin(), terms_.end(), [d](const auto& t) { return total_degree(t.first) == d; });
  }

  /// Lexicographically greatest term. Precondition: nonzero.
  const Terms::value_type& leading_term() const {
    if (terms_.empty()) throw std::logic_error("leading_term of zero polynomial");
    return *terms_.rbegin();
  }

  /// Sum of all coefficients (evaluation at the all-ones point).
  std::int64_t evaluate_at_ones() const {
    std::int64_t s = 0;
    for (const auto& [e, c] : terms_) s = detail::checked_add(s, c);
    return s;
  }

  SparsePoly& operator+=(const SparsePoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  SparsePoly& operator-=(const SparsePoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, detail::checked_mul(c, -1));
    return *this;
  }
  SparsePoly& operator*=(std::int64_t s) {
    if (s == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [e, c] : terms_) c = detail::checked_mul(c, s);
    return *this;
  }

  friend SparsePoly operator+(SparsePoly a, const SparsePoly& b) { return a += b; }
  friend SparsePoly operator-(SparsePoly a, const SparsePoly& b) { return a -= b; }
  friend SparsePoly operator*(SparsePoly a, std::int64_t s) { return a *= s; }
  friend SparsePoly operator*(std::int64_t s, SparsePoly a) { return a *= s; }

  friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
    return multiply_filtered(a, b, nullptr);
  }

  /// Product keeping only the terms whose (trimmed) exponent satisfies `keep`
  /// (all terms when `keep` is empty).
  static SparsePoly multiply_filtered(const SparsePoly& a, const SparsePoly& b,
                                      const std::function<bool(const Exponent&)>& keep) {
    const std::size_t vars = std::max(a.variable_count(), b.variable_count());
    const int max_degree = a.degree() + b.degree();
    int bits = 1;
    while ((1 << bits) <= max_degree) ++bits;
    if (vars * static_cast<std::size_t>(bits) <= 64) return multiply_packed(a, b, keep, vars, bits);

    std::unordered_map<Exponent, std::int64_t, detail::ExponentHash> acc;
    Exponent e;
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) {
        e.assign(std::max(ea.size(), eb.size()), 0);
        for (std::size_t i = 0; i < ea.size(); ++i) e[i] = ea[i];
        for (std::size_t i = 0; i < eb.size(); ++i) e[i] = static_cast<std::uint16_t>(e[i] + eb[i]);
        detail::trim(e);
        if (keep && !keep(e)) continue;
        auto& slot = acc[e];
        slot = detail::checked_add(slot, detail::checked_mul(ca, cb));
      }
    }
    SparsePoly out;
    for (auto& [ex, c] : acc)
      if (c != 0) out.terms_.emplace(ex, c);
    return out;
  }

  SparsePoly pow(unsigned k) const {
    SparsePoly r = constant(1);
    for (unsigned i = 0; i < k; ++i) r = r * *this;
    return r;
  }

  friend bool operator==(const SparsePoly&, const SparsePoly&) = default;

  static int total_degree(const Exponent& e) noexcept {
    int d = 0;
    for (auto v : e) d += v;
    return d;
  }

 private:
  // Exponents packed into one 64-bit word, `bits` per variable; sums cannot
  // carry because every total degree fits in `bits`.
  static SparsePoly multiply_packed(const SparsePoly& a, const SparsePoly& b,
                                    const std::function<bool(const Exponent&)>& keep, std::size_t vars, int bits) {
    auto pack = [&](const Exponent& e) {
      std::uint64_t w = 0;
      for (std::size_t i = 0; i < e.size(); ++i) w |= static_cast<std::uint64_t>(e[i]) << (i * static_cast<std::size_t>(bits));
      return w;
    };
    const std::uint64_t mask = bits >= 64 ? ~0ULL : ((1ULL << bits) - 1);
    auto unpack = [&](std::uint64_t w) {
      Exponent e(vars, 0);
      for (std::size_t i = 0; i < vars; ++i) e[i] = static_cast<std::uint16_t>((w >> (i * static_cast<std::size_t>(bits))) & mask);
      detail::trim(e);
      return e;
    };
    std::vector<std::pair<std::uint64_t, std::int64_t>> pa, pb;
    for (const auto& [e, c] : a.terms_) pa.emplace_back(pack(e), c);
    for (const auto& [e, c] : b.terms_) pb.emplace_back(pack(e), c);
    std::unordered_map<std::uint64_t, std::int64_t> acc;
    acc.reserve(std::min<std::size_t>(pa.size() * pb.size(), 1u << 20));
    for (const auto& [wa, ca] : pa)
      for (const auto& [wb, cb] : pb) {
        auto& slot = acc[wa + wb];
        slot = detail::checked_add(slot, detail::checked_mul(ca, cb));
      }
    SparsePoly out;
    for (const auto& [w, c] : acc) {
      if (c == 0) continue;
      Exponent e = unpack(w);
      if (keep && !keep(e)) continue;
      out.terms_.emplace(std::move(e), c);
    }
    return out;
  }

  Terms terms_;
};

/// Pads an exponent to `n` variables.
inline Exponent padded(Exponent e, std::size_t n) {
  if (e.size() < n) e.resize(n, 0);
  return e;
}

inline std::string to_string(const SparsePoly& p, const std::function<std::string(std::size_t)>& var_name = {}) {
  if (p.is_zero()) return "0";
  std::string out;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [e, c] = *it;
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (!e[i]) continue;
      if (!mono.empty()) mono += '*';
      mono += var_name ? var_name(i) : "x" + std::to_string(i + 1);
      if (e[i] > 1) mono += '^' + std::to_string(e[i]);
    }
    if (!out.empty()) out += c < 0 ? " - " : " + ";
    else if (c < 0) out += '-';
    std::int64_t a = c < 0 ? -c : c;
    if (mono.empty()) out += std::to_string(a);
    else out += (a != 1 ? std::to_string(a) + '*' : std::string()) + mono;
  }
  return out;
}

}  // namespace glinf
