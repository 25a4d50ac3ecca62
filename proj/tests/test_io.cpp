#include "glinf/io.hpp"

#include <gtest/gtest.h>

using namespace glinf;
using glinf::io::json;

TEST(Json, PartitionsAndWeightsRoundTrip) {
  for (const auto& p : partitions_up_to(6)) {
    EXPECT_EQ(io::partition_from_json(io::to_json(p)), p);
    for (WeightKind k : {WeightKind::positive, WeightKind::negative}) {
      const HalfInfiniteWeight w(k, p);
      EXPECT_EQ(io::half_weight_from_json(io::to_json(w)), w);
      EXPECT_EQ(io::half_weight_from_json(io::to_json(w), k), w);
    }
  }
  const FiniteWeight nu({2, 0, -1});
  EXPECT_EQ(io::finite_weight_from_json(io::to_json(nu)), nu);
  EXPECT_EQ(io::to_json(HalfInfiniteWeight::negative(Partition({2, 1}))).dump(), R"({"kind":"-","body":[2,1]})");
}

TEST(Json, BareArraysNeedAKind) {
  const json bare = json::parse("[2,1]");
  EXPECT_THROW(io::half_weight_from_json(bare), std::invalid_argument);
  EXPECT_EQ(io::half_weight_from_json(bare, WeightKind::positive), HalfInfiniteWeight::positive(Partition({2, 1})));
  EXPECT_THROW(io::half_weight_from_json(json::parse(R"({"kind":"+","body":[1]})"), WeightKind::negative),
               std::invalid_argument);
  EXPECT_THROW(io::half_weight_from_json(json::parse(R"({"kind":"x","body":[1]})")), std::invalid_argument);
  EXPECT_THROW(io::half_weight_from_json(json::parse(R"({"body":[1]})")), std::invalid_argument);
}

TEST(Json, ParseErrorsAreInvalidArgument) {
  EXPECT_THROW(io::parse_half_weight("[2,", WeightKind::positive), std::invalid_argument);
  EXPECT_THROW(io::parse_half_weight("[1,2]", WeightKind::positive), std::invalid_argument);
  EXPECT_EQ(io::parse_half_weight("[3]", WeightKind::negative), HalfInfiniteWeight::negative(Partition({3})));
  EXPECT_THROW(io::partition_from_json(json(3)), std::invalid_argument);
  EXPECT_THROW(io::finite_weight_from_json(json::object()), std::invalid_argument);
}

TEST(Json, TablesKeepInsertionOrderOfSortedKeys) {
  auto t = tensor_decompose(Partition({1}), Partition({1}));
  EXPECT_EQ(io::to_json(t).dump(), R"({"[1,1]":1,"[2]":1})");
  EXPECT_EQ(io::table_to_tsv(t, [](const Partition& p) { return to_string(p); }), "[1,1]\t1\n[2]\t1\n");
}

TEST(Json, Reports) {
  auto rep = reciprocity_check(FiniteWeight({1, 0, -1}), HalfInfiniteWeight::negative(Partition({1})),
                               HalfInfiniteWeight::positive(Partition({1})), {4, 5});
  const json j = io::to_json(rep);
  EXPECT_EQ(j.at("lhs"), 1);
  EXPECT_EQ(j.at("rhs_by_N").at("4"), 1);
  EXPECT_TRUE(j.at("holds").get<bool>());
  EXPECT_EQ(j.at("D_terms").size(), 1u);

  auto res = ghat::singular_search(SemidominantWeight::zero(), -1, 4);
  const json s = io::to_json(res, true);
  ASSERT_EQ(s.size(), 1u);
  EXPECT_EQ(s[0].at("level"), 4);
  EXPECT_EQ(s[0].at("generators_as_det_monomials")[0], "Det_2");
  EXPECT_EQ(s[0].at("vectors").size(), 1u);

  const json chi = io::to_json(SemidominantWeight(HalfInfiniteWeight::negative(Partition({1})),
                                                  HalfInfiniteWeight::positive(Partition({1, 1}))));
  EXPECT_EQ(chi.at("chi_centr"), -2);

  auto comm = ghat::commutator_formula_check(1, 2, SemidominantWeight::zero(), Rational(1, 2));
  EXPECT_TRUE(io::to_json(comm).at("equal").get<bool>());
  EXPECT_EQ(io::to_json(comm).at("c"), "1/2");
}
