// Copyright 2026 The LocusGP Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <array>
#include <cmath>
#include <map>
#include <vector>

#include <gtest/gtest.h>

#include "locusgp/genome.h"
#include "locusgp/parser.h"
#include "locusgp/rng.h"
#include "support/random_program.h"

namespace locusgp {
namespace {

constexpr int kDraws = 100000;
constexpr double kFrequencyTolerance = 0.01;

LocusMap MaskWith(const std::map<std::uint32_t, double>& weights) {
  LocusMap mask;
  for (auto [id, w] : weights) mask.Set(NodeId{id}, LocusMap::Entry{w, {1, 1, 1}});
  return mask;
}

std::vector<NodeId> Ids(std::initializer_list<std::uint32_t> values) {
  std::vector<NodeId> ids;
  for (std::uint32_t v : values) ids.push_back(NodeId{v});
  return ids;
}

TEST(DefaultMask, CoversEveryNode) {
  Ast ast = Parse("fn f(x: int) { return x; }");
  LocusMap mask = DefaultMask(ast, 1.0);
  EXPECT_EQ(mask.size(), 5u);
  for (const auto& [id, entry] : mask.entries()) {
    EXPECT_EQ(entry.weight, 1.0);
    EXPECT_EQ(entry.granularity, (GranularityVector{1.0, 1.0, 1.0}));
  }
  EXPECT_TRUE(MaskMatchesTree(mask, ast));
}

TEST(DefaultMask, EmptyBody) {
  Ast ast = Parse("fn f(x: int) { }");
  LocusMap mask = DefaultMask(ast, 2.5);
  EXPECT_EQ(mask.size(), 3u);
  EXPECT_EQ(mask.weight(NodeId{2}), 2.5);
}

TEST(DefaultMask, RejectsWeightOutsideBounds) {
  Ast ast = Parse("fn f() { }");
  EXPECT_THROW(DefaultMask(ast, 0.0), std::invalid_argument);
  EXPECT_THROW(DefaultMask(ast, 101.0), std::invalid_argument);
}

TEST(LocusMap, UnknownLocusThrows) {
  LocusMap mask = MaskWith({{0, 1.0}});
  try {
    mask.weight(NodeId{9});
    FAIL();
  } catch (const MaskError& e) {
    EXPECT_EQ(e.code(), MaskError::Code::kUnknownLocus);
  }
}

TEST(SampleLocus, ProportionalToWeight) {
  LocusMap mask = MaskWith({{0, 1.0}, {1, 3.0}});
  std::vector<NodeId> eligible = Ids({0, 1});
  Rng rng(5);
  int hits = 0;
  for (int i = 0; i < kDraws; ++i) hits += SampleLocus(mask, eligible, rng) == NodeId{1};
  EXPECT_NEAR(hits / static_cast<double>(kDraws), 0.75, kFrequencyTolerance);
}

TEST(SampleLocus, Singleton) {
  LocusMap mask = MaskWith({{0, 1.0}, {7, 0.01}});
  std::vector<NodeId> eligible = Ids({7});
  Rng rng(1);
  for (int i = 0; i < 100; ++i) EXPECT_EQ(SampleLocus(mask, eligible, rng), NodeId{7});
}

TEST(SampleLocus, FrequenciesMatchWeights) {
  LocusMap mask = MaskWith({{0, 1.0}, {1, 1.0}, {2, 2.0}});
  std::vector<NodeId> eligible = Ids({0, 1, 2});
  Rng rng(2);
  std::array<int, 3> counts{};
  for (int i = 0; i < kDraws; ++i) ++counts[SampleLocus(mask, eligible, rng).value];
  EXPECT_NEAR(counts[0] / static_cast<double>(kDraws), 0.25, kFrequencyTolerance);
  EXPECT_NEAR(counts[1] / static_cast<double>(kDraws), 0.25, kFrequencyTolerance);
  EXPECT_NEAR(counts[2] / static_cast<double>(kDraws), 0.50, kFrequencyTolerance);
}

TEST(SampleLocus, ConsumesOneDraw) {
  LocusMap mask = MaskWith({{0, 1.0}, {1, 5.0}, {2, 2.0}});
  std::vector<NodeId> eligible = Ids({0, 1, 2});
  Rng a(3);
  Rng b(3);
  SampleLocus(mask, eligible, a);
  b();
  EXPECT_EQ(a(), b());
  SampleUniform(eligible, a);
  b();
  EXPECT_EQ(a(), b());
}

TEST(SampleLocus, EmptyEligibleSet) {
  LocusMap mask = MaskWith({{0, 1.0}});
  Rng rng(1);
  try {
    SampleLocus(mask, {}, rng);
    FAIL();
  } catch (const MaskError& e) {
    EXPECT_EQ(e.code(), MaskError::Code::kEmptyEligibleSet);
  }
  EXPECT_THROW(SampleUniform({}, rng), MaskError);
}

TEST(SampleLocus, NeverLeavesEligibleSet) {
  Rng rng(4);
  for (int round = 0; round < 500; ++round) {
    LocusMap mask;
    std::size_t n = 1 + rng.Below(20);
    for (std::uint32_t i = 0; i < n; ++i) {
      mask.Set(NodeId{i}, LocusMap::Entry{0.01 + 99.99 * rng.Uniform(), {1, 1, 1}});
    }
    std::vector<NodeId> eligible;
    for (std::uint32_t i = 0; i < n; ++i) {
      if (rng.Bernoulli(0.5)) eligible.push_back(NodeId{i});
    }
    if (eligible.empty()) eligible.push_back(NodeId{0});
    for (int d = 0; d < 50; ++d) {
      NodeId pick = SampleLocus(mask, eligible, rng);
      ASSERT_NE(std::find(eligible.begin(), eligible.end(), pick), eligible.end());
    }
  }
}

TEST(SampleLocus, ScaleInvariant) {
  Rng setup(6);
  LocusMap mask;
  for (std::uint32_t i = 0; i < 8; ++i) {
    mask.Set(NodeId{i}, LocusMap::Entry{0.5 + 4 * setup.Uniform(), {1, 1, 1}});
  }
  std::vector<NodeId> eligible = mask.Keys();
  // A power-of-two factor is exact in floating point: identical picks.
  LocusMap doubled = mask;
  doubled.Scale(4.0);
  Rng a(7);
  Rng b(7);
  for (int i = 0; i < 10000; ++i) {
    ASSERT_EQ(SampleLocus(mask, eligible, a), SampleLocus(doubled, eligible, b));
  }
  // Any other factor: same distribution.
  LocusMap scaled = mask;
  scaled.Scale(3.7);
  std::array<int, 8> base{};
  std::array<int, 8> other{};
  Rng c(8);
  Rng d(9);
  for (int i = 0; i < kDraws; ++i) {
    ++base[SampleLocus(mask, eligible, c).value];
    ++other[SampleLocus(scaled, eligible, d).value];
  }
  for (int i = 0; i < 8; ++i) {
    EXPECT_NEAR(base[i] / static_cast<double>(kDraws), other[i] / static_cast<double>(kDraws),
                kFrequencyTolerance);
  }
}

TEST(SampleUniform, IsFlat) {
  std::vector<NodeId> eligible = Ids({3, 4, 5, 6, 7});
  Rng rng(10);
  std::map<std::uint32_t, int> counts;
  for (int i = 0; i < kDraws; ++i) ++counts[SampleUniform(eligible, rng).value];
  for (auto [id, count] : counts) {
    EXPECT_NEAR(count / static_cast<double>(kDraws), 0.2, kFrequencyTolerance) << id;
  }
}

TEST(InheritMask, IdentityEdit) {
  Ast ast = Parse("fn f(x: int) { let y = x; return y + 1; }");
  LocusMap parent = DefaultMask(ast, 1.0);
  parent.at(NodeId{4}).weight = 7.0;
  EXPECT_EQ(InheritMask(parent, nullptr, ast, EditRecord{}, 1.0), parent);
}

TEST(InheritMask, DeletionDropsEntries) {
  Ast ast = Parse("fn f(x: int) { let y = x * 2; return x; }");
  LocusMap parent = DefaultMask(ast, 1.0);
  parent.at(NodeId{8}).weight = 3.0;
  Node root = ast.root();
  Node& body = root.children.back();
  body.children.erase(body.children.begin());
  Ast child = Ast::FromRootKeepingIds(root, ast.next_id());
  EditRecord edit;
  edit.op = Operator::kStmtDelete;
  edit.granularity = Granularity::kStatement;
  edit.target_loci = {body.id};
  edit.removed_loci = Ids({3, 4, 5, 6});
  LocusMap mask = InheritMask(parent, nullptr, child, edit, 1.0);
  EXPECT_EQ(mask.size(), parent.size() - 4);
  EXPECT_TRUE(MaskMatchesTree(mask, child));
  EXPECT_EQ(mask.weight(NodeId{8}), 3.0);
  EXPECT_FALSE(mask.Contains(NodeId{4}));
}

TEST(InheritMask, FreshNodesStartAtW0) {
  Ast ast = Parse("fn f(x: int) { return x; }");
  LocusMap parent = DefaultMask(ast, 2.0);
  Ast child = ast;
  Node fresh = MakeBinary(BinaryOp::kAdd, MakeVar("x"), MakeIntLit(1));
  child.AssignFreshIds(fresh);
  Node& ret = child.mutable_root().children.back().children[0];
  ret.children[0] = fresh;
  EditRecord edit;
  edit.target_loci = {fresh.id};
  edit.removed_loci = Ids({4});
  LocusMap mask = InheritMask(parent, nullptr, child, edit, 1.0);
  EXPECT_EQ(mask.size(), 7u);
  EXPECT_TRUE(MaskMatchesTree(mask, child));
  for (NodeId id : CollectIds(fresh)) EXPECT_EQ(mask.weight(id), 1.0);
  EXPECT_EQ(mask.weight(NodeId{3}), 2.0);
}

TEST(InheritMask, CopiesCarryDonorEntries) {
  Ast ast = Parse("fn f(x: int) { return x; }");
  LocusMap parent = DefaultMask(ast, 1.0);
  LocusMap donor = DefaultMask(ast, 1.0);
  donor.at(NodeId{4}).weight = 42.0;
  Ast child = ast;
  Node copy = MakeVar("x");
  child.AssignFreshIds(copy);
  child.mutable_root().children.back().children[0].children[0] = copy;
  EditRecord edit;
  edit.provenance[copy.id] = Provenance{1, NodeId{4}};
  LocusMap mask = InheritMask(parent, &donor, child, edit, 1.0);
  EXPECT_EQ(mask.weight(copy.id), 42.0);
  EXPECT_THROW(InheritMask(parent, nullptr, child, edit, 1.0), MaskError);
}

TEST(DumpMask, LineFormat) {
  Ast ast = Parse("fn f(x: int) { return x + 1; }");
  LocusMap mask = DefaultMask(ast, 1.0);
  mask.at(NodeId{4}) = LocusMap::Entry{1.5, {1, 1.5, 0.5}};
  std::string dump = DumpMask(mask, ast);
  EXPECT_NE(dump.find("4\t1.5\t1,1.5,0.5\tx + 1\n"), std::string::npos) << dump;
  EXPECT_EQ(std::count(dump.begin(), dump.end(), '\n'), 7);
}

TEST(WeightBounds, Clamp) {
  WeightBounds bounds;
  EXPECT_EQ(bounds.Clamp(1000), 100.0);
  EXPECT_EQ(bounds.Clamp(0.0001), 0.01);
  EXPECT_EQ(bounds.Clamp(3), 3.0);
}

}  // namespace
}  // namespace locusgp
