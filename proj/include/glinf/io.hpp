#pragma once

// JSON and text forms of the engine's values and reports.

#include "glinf/ghat.hpp"
#include "glinf/lr.hpp"
#include "glinf/partition.hpp"
#include "glinf/polynomial_model.hpp"
#include "glinf/reciprocity.hpp"

#include "json.hpp"

#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace glinf::io {

using json = nlohmann::ordered_json;

inline json to_json(const Partition& p) { return p.rows(); }
inline json to_json(const FiniteWeight& w) { return w.entries(); }

inline json to_json(const HalfInfiniteWeight& w) {
  return {{"kind", w.kind() == WeightKind::positive ? "+" : "-"}, {"body", w.body().rows()}};
}

inline json to_json(const SemidominantWeight& chi) {
  return {{"chi1", to_json(chi.chi1)}, {"chi2", to_json(chi.chi2)}, {"chi_centr", chi.chi_centr()}};
}

inline Partition partition_from_json(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("expected a JSON array for a partition");
  return Partition(j.get<std::vector<int>>());
}

/// {"kind":"+"|"-","body":[...]}; a bare array is read as a body of kind `fallback`.
inline HalfInfiniteWeight half_weight_from_json(const json& j, std::optional<WeightKind> fallback = std::nullopt) {
  if (j.is_array()) {
    if (!fallback) throw std::invalid_argument("half-infinite weight needs an explicit kind");
    return {*fallback, partition_from_json(j)};
  }
  if (!j.is_object() || !j.contains("kind") || !j.contains("body"))
    throw std::invalid_argument("half-infinite weight must be {\"kind\":..., \"body\":[...]}");
  const auto kind = j.at("kind").get<std::string>();
  if (kind != "+" && kind != "-") throw std::invalid_argument("half-infinite weight kind must be \"+\" or \"-\"");
  HalfInfiniteWeight w(kind == "+" ? WeightKind::positive : WeightKind::negative, partition_from_json(j.at("body")));
  if (fallback && w.kind() != *fallback)
    throw std::invalid_argument(std::string("expected a ") + (*fallback == WeightKind::positive ? "positive" : "negative") +
                                "-type weight");
  return w;
}

/// Accepts either JSON or the bracketed partition text for a body.
inline HalfInfiniteWeight parse_half_weight(std::string_view text, WeightKind kind) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error&) {
    throw std::invalid_argument("cannot parse weight '" + std::string(text) + "'");
  }
  return half_weight_from_json(j, kind);
}

inline FiniteWeight finite_weight_from_json(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("finite weight must be a JSON integer list");
  return FiniteWeight(j.get<std::vector<int>>());
}

template <class Key, class KeyText>
json table_to_json(const DecompositionTable<Key>& t, KeyText key_text) {
  json out = json::object();
  for (const auto& [k, m] : t) out[key_text(k)] = m;
  return out;
}

inline json to_json(const DecompositionTable<Partition>& t) {
  return table_to_json(t, [](const Partition& p) { return to_string(p); });
}

template <class Key, class KeyText>
std::string table_to_tsv(const DecompositionTable<Key>& t, KeyText key_text) {
  std::ostringstream os;
  for (const auto& [k, m] : t) os << key_text(k) << '\t' << m << '\n';
  return os.str();
}

inline json to_json(const ghat::Weight& w) {
  json out = json::object();
  for (const auto& [s, v] : w) out[std::to_string(s)] = v;
  return out;
}

inline json to_json(const ReciprocityReport& r) {
  json rhs = json::object();
  for (const auto& [N, v] : r.rhs_by_N) rhs[std::to_string(N)] = v;
  json terms = json::array();
  for (const auto& t : r.d_terms) terms.push_back({{"D", to_string(t.diagram)}, {"contribution", t.contribution}});
  return {{"nu", to_json(r.nu)},
          {"lambda_minus", to_json(r.lambda_minus)},
          {"mu_plus", to_json(r.mu_plus)},
          {"lhs", r.lhs},
          {"rhs_by_N", rhs},
          {"stabilized", r.stabilized},
          {"holds", r.holds()},
          {"D_terms", terms}};
}

inline json to_json(const ghat::SingularSearchResult& r, bool with_vectors = false) {
  json blocks = json::array();
  for (const auto& b : r.blocks) {
    json entry{{"level", b.level}, {"weight", to_json(b.weight)}, {"dim", b.dim()}};
    json labels = json::array();
    bool any = false;
    for (const auto& l : b.det_labels) {
      labels.push_back(l.empty() ? json(nullptr) : json(l));
      any = any || !l.empty();
    }
    if (any) entry["generators_as_det_monomials"] = labels;
    if (with_vectors) {
      json vecs = json::array();
      for (const auto& v : b.basis) vecs.push_back(ghat::to_string(v));
      entry["vectors"] = vecs;
    }
    blocks.push_back(entry);
  }
  return blocks;
}

inline json to_json(const ghat::CommutatorReport& r) {
  return {{"k", r.k},
          {"l", r.l},
          {"c", to_string(r.c)},
          {"lhs", ghat::to_string(r.lhs)},
          {"rhs", ghat::to_string(r.rhs)},
          {"equal", r.equal()},
          {"discrepancy", ghat::to_string(r.discrepancy())}};
}

}  // namespace glinf::io
