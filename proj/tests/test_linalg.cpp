#include <gtest/gtest.h>

#include "qlogic/errors.hpp"
#include "qlogic/rational_linalg.hpp"
#include "support/oracles.hpp"

using namespace qlogic;

namespace {

Subspace S(const char* text, std::size_t d = 0) { return parse_subspace(text, d); }
RationalVector V(const char* text) { return parse_vector(text); }

}  // namespace

TEST(Vector, ParseAndPrint) {
  const RationalVector v = V("1/2,-3,0,4/8");
  EXPECT_EQ(to_string(v), "(1/2,-3,0,1/2)");
  EXPECT_EQ(v.dim(), 4u);
  EXPECT_THROW(V("1,,2"), ParseError);
  EXPECT_THROW(V("1/0"), ParseError);
  EXPECT_THROW(V("a"), ParseError);
}

TEST(Span, Examples) {
  const Subspace line = span(2, {V("1,1"), V("2,2")});
  EXPECT_EQ(line.rank(), 1u);
  EXPECT_EQ(line.basis(), std::vector<RationalVector>{V("1,1")});
  EXPECT_TRUE(is_zero(span(3, {})));
  EXPECT_EQ(span(2, {V("1,0"), V("0,1")}), Subspace::full(2));
  EXPECT_THROW(span(2, {V("1,0,0")}), UsageError);
}

TEST(Span, CanonicalForm) {
  EXPECT_EQ(span(3, {V("1,2,3"), V("0,1,1")}), span(3, {V("2,5,7"), V("1,1,2")}));
  EXPECT_EQ(S("0,0"), Subspace(2));
}

TEST(Project, VectorExamples) {
  EXPECT_EQ(project_vector(V("1,1"), S("1,0")), V("1,0"));
  EXPECT_EQ(project_vector(V("3,-1/2"), Subspace::full(2)), V("3,-1/2"));
  EXPECT_EQ(project_vector(V("1,0"), S("0,1")), V("0,0"));
  EXPECT_EQ(project_vector(V("1,2"), Subspace(2)), V("0,0"));
}

TEST(Project, SubspaceExamples) {
  EXPECT_EQ(project_subspace(S("1,1"), S("1,0")), S("1,0"));
  const Subspace a = S("1,2,0;0,1,1");
  EXPECT_EQ(project_subspace(a, Subspace::full(3)), a);
  EXPECT_EQ(project_subspace(Subspace::full(3), a), a);
}

TEST(Project, NonAssociativityWitness) {
  const Subspace a = S("1,0"), b = S("1,1"), c = S("0,1");
  EXPECT_EQ(project_subspace(project_subspace(a, b), c), S("0,1"));
  EXPECT_TRUE(is_zero(project_subspace(a, project_subspace(b, c))));
}

TEST(Complement, Examples) {
  EXPECT_EQ(ortho_complement(S("1,0")), S("0,1"));
  EXPECT_EQ(ortho_complement(Subspace(2)), Subspace::full(2));
  EXPECT_EQ(ortho_complement(ortho_complement(S("1,2,3"))), S("1,2,3"));
}

TEST(Lattice, Examples) {
  EXPECT_TRUE(is_zero(subspace_meet(S("1,0"), S("0,1"))));
  EXPECT_EQ(subspace_meet(S("1,0,0;0,1,0"), S("0,1,0;0,0,1")), S("0,1,0"));
  EXPECT_TRUE(contains(S("1,1,0;0,0,1"), V("2,2,5")));
  EXPECT_FALSE(contains(S("1,1,0"), V("1,0,0")));
  EXPECT_TRUE(contains(Subspace::full(3), S("1,2,3")));
}

TEST(Properties, ProjectionResidualIsOrthogonal) {
  Rng rng(3);
  for (int t = 0; t < 100; ++t) {
    const Subspace b = random_subspace(4, rng);
    const Subspace a = random_subspace(4, rng);
    for (const auto& u : a.basis()) {
      const RationalVector p = project_vector(u, b);
      ASSERT_TRUE(contains(b, p));
      RationalVector r = u;
      for (std::size_t i = 0; i < r.dim(); ++i) r.coords[i] -= p.coords[i];
      for (const auto& w : b.basis()) ASSERT_EQ(inner(r, w), 0);
    }
  }
}

TEST(Properties, OrthogonalIffZeroProjection) {
  Rng rng(5);
  std::size_t orthogonal_pairs = 0;
  for (int t = 0; t < 200; ++t) {
    const Subspace a = random_subspace(4, rng), b = random_subspace(4, rng);
    ASSERT_EQ(is_orthogonal(a, b), oracle::orthogonal(a, b));
    ASSERT_EQ(is_orthogonal(a, b), is_zero(project_subspace(a, b)));
    orthogonal_pairs += is_orthogonal(a, b);
  }
  EXPECT_GT(orthogonal_pairs, 0u);
}

TEST(Properties, BabyLemma) {
  Rng rng(7);
  for (int t = 0; t < 200; ++t) {
    const Subspace a = random_subspace(4, rng), b = random_subspace(4, rng), c = random_subspace(4, rng);
    ASSERT_EQ(is_zero(project_subspace(a, b)), is_zero(project_subspace(b, a)));
    ASSERT_EQ(is_zero(project_subspace(project_subspace(a, b), c)), is_zero(project_subspace(a, project_subspace(c, b))));
  }
}

TEST(Properties, IdempotenceZeroAndComplements) {
  Rng rng(9);
  for (int t = 0; t < 100; ++t) {
    const Subspace a = random_subspace(3, rng), b = random_subspace(3, rng);
    const Subspace ab = project_subspace(a, b);
    ASSERT_TRUE(contains(b, ab));
    ASSERT_EQ(project_subspace(ab, b), ab);
    ASSERT_TRUE(is_zero(project_subspace(a, Subspace(3))));
    ASSERT_TRUE(is_zero(project_subspace(Subspace(3), a)));
    ASSERT_EQ(a.rank() + ortho_complement(a).rank(), 3u);
    ASSERT_EQ(ortho_complement(ortho_complement(a)), a);
    ASSERT_EQ(subspace_sum(a, ortho_complement(a)), Subspace::full(3));
    ASSERT_EQ(span(3, a.basis()), a);
  }
}

TEST(Random, RankCoversRange) {
  Rng rng(1);
  std::set<std::size_t> ranks;
  for (int t = 0; t < 200; ++t) ranks.insert(random_subspace(3, rng).rank());
  EXPECT_EQ(ranks, (std::set<std::size_t>{0, 1, 2, 3}));
}

TEST(Parse, Subspaces) {
  EXPECT_EQ(to_string(S("2,0;0,3")), "span[(1,0), (0,1)] in Q^2");
  EXPECT_EQ(S("", 3), Subspace(3));
  EXPECT_THROW(S("1,0;1,0,0"), UsageError);
}
