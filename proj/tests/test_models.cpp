#include <gtest/gtest.h>

#include <map>

#include "qlogic/errors.hpp"
#include "qlogic/models.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace qlogic;

namespace {

std::vector<std::uint64_t> oracle_facts(const QStructure& q) { return oracle::facts(oracle::RawModel::of(q)); }

void expect_ray_invariants(const QStructure& q) {
  const Element h = q.unit();
  const Element zero = static_cast<Element>(q.size() - 1);
  for (const Fact& f : all_facts(q)) {
    if (f.contains(h)) {
      EXPECT_EQ(f.members(), q.carrier());
    } else {
      EXPECT_TRUE(f.contains(zero));
    }
  }
}

}  // namespace

TEST(Classical, OneVariableIsC1) {
  const QStructure q = classical_model({"p"});
  EXPECT_EQ(q.size(), 4u);
  EXPECT_EQ(q, fixtures::c1());
  EXPECT_EQ(all_facts(q).size(), 4u);
  EXPECT_EQ(q.labels(), (std::vector<std::string>{"1", "{}", "{p}", "0"}));
}

TEST(Classical, Degenerate) {
  const QStructure q = classical_model({});
  EXPECT_EQ(q.size(), 3u);
  EXPECT_TRUE(validate(q).ok());
}

TEST(Classical, TwoVariables) {
  const QStructure q = classical_model({"p", "q"});
  EXPECT_EQ(q.size(), 6u);
  const auto facts = oracle_facts(q);
  EXPECT_EQ(facts.size(), 16u);
  const std::uint64_t zero = std::uint64_t{1} << 5;
  for (std::uint64_t f : facts) {
    if (f != ElementSet::full(6).bits()) {
      EXPECT_TRUE(f & zero);
      EXPECT_FALSE(f & 1u);
      EXPECT_NE(f, ElementSet::full(6).bits() - 1);
    }
  }
}

TEST(Classical, Properties) {
  for (const auto& vars : std::vector<std::vector<std::string>>{{}, {"p"}, {"p", "q"}, {"p", "q", "r"}}) {
    const QStructure q = classical_model(vars);
    EXPECT_TRUE(oracle::violated(oracle::RawModel::of(q)).empty());
    EXPECT_TRUE(is_projective(q));
    const Element zero = static_cast<Element>(q.size() - 1);
    for (const Fact& f : all_facts(q)) {
      if (f.contains(q.unit())) EXPECT_EQ(f.members(), q.carrier());
      if (f.members() != q.carrier()) EXPECT_TRUE(f.contains(zero));
    }
  }
}

TEST(Classical, Errors) {
  EXPECT_THROW(classical_model({"a", "b", "c", "d", "e"}), ResourceError);
  EXPECT_THROW(classical_model({"p", "p"}), UsageError);
}

TEST(Ray, B1) {
  const QStructure q = ray_model({parse_vector("1,0"), parse_vector("0,1"), parse_vector("1,1"), parse_vector("1,-1")}, 2);
  EXPECT_EQ(q.size(), 6u);
  EXPECT_EQ(q, fixtures::b1());
  EXPECT_EQ(all_facts(q).size(), 6u);
  EXPECT_TRUE(is_projective(q));
  expect_ray_invariants(q);
}

TEST(Ray, SmallRaySets) {
  const QStructure one = ray_model({parse_vector("1,0")}, 2);
  EXPECT_EQ(one.size(), 3u);
  EXPECT_EQ(oracle_facts(one), (std::vector<std::uint64_t>{0b100, 0b111}));
  EXPECT_EQ(all_facts(one).size(), 2u);

  const QStructure two = ray_model({parse_vector("1,0"), parse_vector("0,1")}, 2);
  EXPECT_EQ(oracle_facts(two), (std::vector<std::uint64_t>{0b1000, 0b1010, 0b1100, 0b1111}));
  EXPECT_EQ(all_facts(two).size(), 4u);
}

TEST(Ray, RandomRaySetsAreValidAndProjective) {
  Rng rng(21);
  for (int t = 0; t < 30; ++t) {
    std::vector<RationalVector> rays;
    while (rays.size() < 4) {
      RationalVector v{{Rational(rng.between(-2, 2)), Rational(rng.between(-2, 2)), Rational(rng.between(-2, 2))}};
      if (v.is_zero()) continue;
      bool collinear = false;
      for (const auto& r : rays) collinear = collinear || span(3, {r, v}).rank() == 1;
      if (!collinear) rays.push_back(v);
    }
    const QStructure q = ray_model(rays, 3);
    ASSERT_TRUE(oracle::violated(oracle::RawModel::of(q)).empty());
    ASSERT_TRUE(is_projective(q));
    expect_ray_invariants(q);
  }
}

TEST(Ray, Errors) {
  EXPECT_THROW(ray_model({parse_vector("0,0")}, 2), UsageError);
  EXPECT_THROW(ray_model({parse_vector("1,1"), parse_vector("2,2")}, 2), UsageError);
  EXPECT_THROW(ray_model({parse_vector("1,1,1")}, 2), UsageError);
}

TEST(Ray, Warnings) {
  const std::vector<RationalVector> b1{parse_vector("1,0"), parse_vector("0,1"), parse_vector("1,1"), parse_vector("1,-1")};
  EXPECT_TRUE(ray_set_warnings(b1, 2).empty());
  const std::vector<RationalVector> partial(b1.begin(), b1.begin() + 3);
  EXPECT_EQ(ray_set_warnings(partial, 2).size(), 1u);
}

TEST(Enumerate, Counts) {
  EXPECT_EQ(count_qstructures(1), 2u);
  EXPECT_EQ(count_qstructures(2), 8u);
  EXPECT_EQ(count_qstructures(1), oracle::count_structures(1));
  EXPECT_EQ(count_qstructures(2), oracle::count_structures(2));
  EXPECT_EQ(count_qstructures(3), oracle::count_structures(3));
  EXPECT_EQ(count_qstructures(3), 272u);
}

TEST(Enumerate, SizeOneHasBothGarbageChoices) {
  QStructureEnumerator e(1);
  std::set<std::uint64_t> garbage;
  while (auto q = e.next()) garbage.insert(q->garbage().bits());
  EXPECT_EQ(garbage, (std::set<std::uint64_t>{0, 1}));
}

TEST(Enumerate, DistinctValidAndIndexed) {
  QStructureEnumerator e(3);
  std::vector<QStructure> all;
  while (auto q = e.next()) {
    ASSERT_TRUE(oracle::violated(oracle::RawModel::of(*q)).empty());
    for (const auto& seen : all) ASSERT_FALSE(seen == *q);
    all.push_back(*q);
  }
  EXPECT_EQ(e.yielded(), all.size());
  EXPECT_EQ(e.candidates_examined(), 648u);
  for (std::uint64_t i : {0u, 17u, 114u, 271u}) EXPECT_EQ(enumerated_qstructure(3, i), all[i]);
  EXPECT_THROW(enumerated_qstructure(3, 272), UsageError);
}

TEST(Enumerate, Limits) {
  EXPECT_THROW(QStructureEnumerator(5), ResourceError);
  EXPECT_THROW(QStructureEnumerator(0), UsageError);
}

TEST(RandomModel, Deterministic) {
  const auto a = random_qstructure(3, 1);
  const auto b = random_qstructure(3, 1);
  EXPECT_EQ(a.structure, b.structure);
  EXPECT_EQ(a.attempts, b.attempts);
  EXPECT_GE(a.attempts, 1u);
}

TEST(RandomModel, SamplesAreValid) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const QStructure q = random_qstructure(4, seed).structure;
    ASSERT_TRUE(oracle::violated(oracle::RawModel::of(q)).empty());
    ASSERT_FALSE(q.in_garbage(q.unit()));
    ASSERT_FALSE(q.garbage().empty());
  }
}

TEST(RandomModel, ProjectiveSamples) {
  RandomModelOptions opts;
  opts.projective = true;
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const QStructure q = random_qstructure(3 + seed % 3, seed, opts).structure;
    ASSERT_TRUE(oracle::projective(oracle::RawModel::of(q)));
    ASSERT_EQ(one_fact(q), top_fact(q));
  }
}

TEST(RandomModel, Flags) {
  RandomModelOptions opts;
  opts.allow_unit_in_garbage = true;
  opts.allow_empty_garbage = true;
  bool saw_empty = false;
  for (std::uint64_t seed = 0; seed < 50 && !saw_empty; ++seed) {
    saw_empty = random_qstructure(3, seed, opts).structure.garbage().empty();
  }
  EXPECT_TRUE(saw_empty);
}

TEST(RandomModel, BudgetExhaustion) {
  RandomModelOptions opts;
  opts.max_attempts = 1;
  bool threw = false;
  for (std::uint64_t seed = 0; seed < 20 && !threw; ++seed) {
    try {
      random_qstructure(5, seed, opts);
    } catch (const SamplingError&) {
      threw = true;
    }
  }
  EXPECT_TRUE(threw);
}

TEST(RandomFact, MembershipAndDeterminism) {
  const QStructure c1 = fixtures::c1();
  const auto facts = all_facts(c1);
  for (std::uint64_t s = 0; s < 50; ++s) {
    const Fact f = random_fact(c1, s);
    EXPECT_NE(std::find(facts.begin(), facts.end(), f), facts.end());
    EXPECT_EQ(f, random_fact(c1, s));
  }
}

TEST(RandomFact, RoughlyUniformOnC1) {
  const QStructure c1 = fixtures::c1();
  const auto facts = all_facts(c1);
  Rng rng(2024);
  std::map<std::uint64_t, int> counts;
  for (int i = 0; i < 10000; ++i) ++counts[random_fact(facts, rng).members().bits()];
  ASSERT_EQ(counts.size(), 4u);
  for (const auto& [bits, n] : counts) {
    EXPECT_GE(n, 2250);
    EXPECT_LE(n, 2750);
  }
}

// With Z = {1} the carrier is the only fact; with Z empty, both {} and P are.
TEST(RandomFact, SingleElementStructure) {
  const QStructure q = QStructure::from_table(0, {{0}}, ElementSet::from_members({0}));
  const auto facts = all_facts(q);
  ASSERT_EQ(facts.size(), 1u);
  EXPECT_EQ(random_fact(q, 3), facts.front());
  EXPECT_EQ(all_facts(QStructure::from_table(0, {{0}}, ElementSet{})).size(), 2u);
}

TEST(Recipe, Kinds) {
  ModelRecipe r;
  r.kind = ModelRecipe::Kind::Enumerated;
  r.size = 3;
  r.index = 114;
  EXPECT_EQ(build_model(r), enumerated_qstructure(3, 114));
  r.kind = ModelRecipe::Kind::Random;
  r.size = 4;
  r.seed = 9;
  EXPECT_EQ(build_model(r), random_qstructure(4, 9).structure);
  r.kind = ModelRecipe::Kind::Classical;
  r.variables = {"p"};
  EXPECT_EQ(build_model(r), fixtures::c1());
}
